#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mckay/lattice.hpp"

namespace mckay {

/// Positions of 1_G in the box [0, 2m]^2 of the lattice rooted at 1_G. Each
/// position is one invariant (a path from 1 to itself), and addition of
/// positions is multiplication of invariants.
class OccurrenceMonoid {
 public:
  explicit OccurrenceMonoid(const CoactionPair& p);

  std::size_t period() const noexcept { return period_; }
  /// Sorted row-major.
  const std::vector<Position>& box_elements() const noexcept { return elements_; }
  /// Membership for any position, via 2m-periodicity.
  bool contains(Position pos) const noexcept;

 private:
  std::size_t period_;
  std::vector<bool> torus_;  // period x period
  std::vector<Position> elements_;
};

struct BasisElement {
  Position pos;
  std::size_t degree = 0;
  std::string monomial;  // decorations along the east-then-south staircase
};

/// Minimal generators: nonzero box elements that are not a sum of two nonzero
/// monoid elements. Ordered by degree, then position.
std::vector<BasisElement> hilbert_basis(const CoactionPair& p);

struct RegularityEvidence {
  bool is_regular = false;
  bool order_method = false;  // |G| == 4 m^2
  bool basis_method = false;  // exactly two minimal generators
};

/// Throws InternalError if the two methods disagree.
RegularityEvidence regularity_check(const CoactionPair& p);

/// Coefficients of the Hilbert series of A^G for degrees 0..max_degree.
std::vector<std::size_t> hilbert_series(const CoactionPair& p, std::size_t max_degree);

/// sum lhs[k] h_k = sum rhs[k] h_k over the basis h, with disjoint supports.
struct MonoidRelation {
  std::vector<std::size_t> lhs;
  std::vector<std::size_t> rhs;
  Position value;
};

std::string to_string(const MonoidRelation& rel);

/// Minimal coincidences among basis combinations whose coefficients are all
/// <= bound, lowest degree first. Throws ResourceLimitError if (bound+1)^|basis|
/// exceeds a few million combinations.
std::vector<MonoidRelation> relation_search(const std::vector<BasisElement>& basis,
                                            std::size_t bound);
std::vector<MonoidRelation> relation_search(const CoactionPair& p, std::size_t bound);

/// max(4, max degree / min degree).
std::size_t default_relation_bound(const std::vector<BasisElement>& basis);

/// Throws ValidationError(kNotIdentityPosition) if `pos` is not labelled 1_G.
std::string canonical_monomial(const CoactionPair& p, Position pos);

/// Least k >= 1 with u^k invariant, found on the lattice staircase
/// (floor(k/2), ceil(k/2)).
std::size_t smallest_invariant_u_power(const CoactionPair& p);

/// Free-text name when the data matches a known pattern, else empty.
std::string singularity_annotation(const std::vector<BasisElement>& basis,
                                   const std::vector<MonoidRelation>& relations);

struct InvariantReport {
  std::vector<BasisElement> basis;
  std::vector<std::size_t> degrees;
  RegularityEvidence regularity;
  std::vector<std::size_t> series;
  std::size_t relation_bound = 0;
  std::vector<MonoidRelation> relations;
  std::size_t smallest_u_power = 0;
  std::string annotation;
};

InvariantReport invariant_report(const CoactionPair& p, std::size_t max_degree,
                                 std::optional<std::size_t> relation_bound = std::nullopt);

}  // namespace mckay
