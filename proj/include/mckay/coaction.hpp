#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "mckay/group.hpp"

namespace mckay {

/// A grading of k<u,v>/(u^2 - v^2) by a finite non-abelian group G with
/// deg u = a, deg v = b, where a^2 = b^2 and {a, b} generates G.
/// `m` is the order of ab (equal to that of ba); lattice labels repeat with
/// period 2m in both directions.
class CoactionPair {
 public:
  const Group& group() const noexcept { return *group_; }
  std::shared_ptr<const Group> shared_group() const noexcept { return group_; }
  Element a() const noexcept { return a_; }
  Element b() const noexcept { return b_; }
  Element a_inv() const noexcept { return group_->inv(a_); }
  Element b_inv() const noexcept { return group_->inv(b_); }
  std::size_t m() const noexcept { return m_; }
  std::size_t period() const noexcept { return 2 * m_; }

 private:
  friend CoactionPair validate_pair(std::shared_ptr<const Group> g, Element a, Element b);
  CoactionPair(std::shared_ptr<const Group> g, Element a, Element b, std::size_t m)
      : group_(std::move(g)), a_(a), b_(b), m_(m) {}

  std::shared_ptr<const Group> group_;
  Element a_;
  Element b_;
  std::size_t m_;
};

/// Throws ValidationError (TrivialGroup, AbelianGroup, MissingSquareRelation,
/// NotInnerFaithful, ElementOutOfRange).
CoactionPair validate_pair(std::shared_ptr<const Group> g, Element a, Element b);
CoactionPair validate_pair(const Group& g, Element a, Element b);
/// Uses the group's own generators.
CoactionPair validate_pair(const Group& g);

struct AlternatingList {
  std::vector<Element> elements;  // 1, x, xy, xyx, ..., (xy)^{k-1}, (xy)^{k-1}x
  bool all_distinct = false;
};

AlternatingList alternating_list(const Group& g, Element x, Element y, std::size_t k);

}  // namespace mckay
