#pragma once

#include <cstddef>
#include <string>

#include "mckay/lattice.hpp"

namespace mckay {

/// Which border of the rooted lattice misses the target vertex.
enum class Border : std::uint8_t { kNone, kRow0, kColumn0, kBoth };

const char* to_string(Border b) noexcept;

struct DimensionResult {
  bool infinite = false;
  std::size_t value = 0;  // meaningful only when finite
  Border witness = Border::kNone;

  static DimensionResult finite(std::size_t n) { return {false, n, Border::kNone}; }
  static DimensionResult unbounded(Border w) { return {true, 0, w}; }
  friend bool operator==(const DimensionResult&, const DimensionResult&) = default;
};

std::string to_string(const DimensionResult& d);

/// dim (e_i L e_j)_len: occurrences of j on the anti-diagonal r + c = len of
/// the lattice rooted at i.
std::size_t graded_dimension(const CoactionPair& p, Element i, Element j, std::size_t len);

/// dim e_i L / e_i L e_j L. A position survives iff no occurrence of j lies in
/// the closed rectangle between the root and it. Lattices are rooted at i with
/// its natural parity, so a row-0 witness refers to the same row a window cut
/// from the toroidal presentation would show.
DimensionResult quotient_dimension(const CoactionPair& p, Element i, Element j);

/// dim L / <e_1>, summed over all starting vertices.
DimensionResult lambda_mod_e1(const CoactionPair& p);

struct AuslanderEvidence {
  bool is_isomorphism = false;
  bool order_method = false;     // |ab| == |G| / 2
  bool coverage_method = false;  // every torus row and column contains 1
};

/// Throws InternalError if the two methods disagree.
AuslanderEvidence auslander_check(const CoactionPair& p);

}  // namespace mckay
