#include <algorithm>
#include <string>

#include "mckay/coaction.hpp"
#include "mckay/errors.hpp"

namespace mckay {

const char* to_string(ValidationFailure kind) noexcept {
  switch (kind) {
    case ValidationFailure::kTrivialGroup: return "TrivialGroup";
    case ValidationFailure::kAbelianGroup: return "AbelianGroup";
    case ValidationFailure::kMissingSquareRelation: return "MissingSquareRelation";
    case ValidationFailure::kNotInnerFaithful: return "NotInnerFaithful";
    case ValidationFailure::kElementOutOfRange: return "ElementOutOfRange";
    case ValidationFailure::kNotIdentityPosition: return "NotIdentityPosition";
  }
  return "Unknown";
}

CoactionPair validate_pair(std::shared_ptr<const Group> gp, Element a, Element b) {
  const Group& g = *gp;
  if (a >= g.order() || b >= g.order())
    throw ValidationError(ValidationFailure::kElementOutOfRange, "generator index out of range");
  if (g.order() == 1)
    throw ValidationError(ValidationFailure::kTrivialGroup, "the group is trivial");
  if (g.mul(a, a) != g.mul(b, b))
    throw ValidationError(ValidationFailure::kMissingSquareRelation, "a^2 != b^2 in the group");
  const Element gens[] = {a, b};
  if (generated_subgroup(g, gens).size() != g.order())
    throw ValidationError(ValidationFailure::kNotInnerFaithful,
                          "a and b generate a proper subgroup (grading is not inner-faithful)");
  if (g.is_abelian())
    throw ValidationError(ValidationFailure::kAbelianGroup,
                          "the group is abelian; only non-abelian groups are supported");
  std::size_t m = element_order(g, g.mul(a, b));
  if (m != element_order(g, g.mul(b, a)) || m < 2)
    throw InternalError("validate_pair: |ab| and |ba| disagree or are below 2");
  // The 2m-long alternating list tiles G by cosets of <ab>-type walks.
  auto list = alternating_list(g, g.inv(a), g.inv(b), m);
  std::vector<Element> distinct = list.elements;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (g.order() % distinct.size() != 0)
    throw InternalError("validate_pair: alternating list size does not divide |G|");
  return CoactionPair(std::move(gp), a, b, m);
}

CoactionPair validate_pair(const Group& g, Element a, Element b) {
  return validate_pair(std::make_shared<const Group>(g), a, b);
}

CoactionPair validate_pair(const Group& g) { return validate_pair(g, g.a(), g.b()); }

AlternatingList alternating_list(const Group& g, Element x, Element y, std::size_t k) {
  AlternatingList out;
  out.elements.reserve(2 * k);
  Element cur = g.identity();
  for (std::size_t i = 0; i < k; ++i) {
    out.elements.push_back(cur);
    cur = g.mul(cur, x);
    out.elements.push_back(cur);
    cur = g.mul(cur, y);
  }
  std::vector<Element> sorted = out.elements;
  std::sort(sorted.begin(), sorted.end());
  out.all_distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  return out;
}

}  // namespace mckay
