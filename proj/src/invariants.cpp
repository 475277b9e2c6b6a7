#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "mckay/errors.hpp"
#include "mckay/invariants.hpp"

namespace mckay {
namespace {

constexpr std::size_t kMaxCombinations = 4'000'000;

bool dominated(const std::vector<std::size_t>& small, const std::vector<std::size_t>& big) {
  for (std::size_t k = 0; k < small.size(); ++k)
    if (small[k] > big[k]) return false;
  return true;
}

std::size_t total(const std::vector<std::size_t>& v) {
  return std::accumulate(v.begin(), v.end(), std::size_t{0});
}

}  // namespace

OccurrenceMonoid::OccurrenceMonoid(const CoactionPair& p) : period_(p.period()) {
  const Element one = p.group().identity();
  auto labels = label_window(p, one, period_, period_);
  torus_.resize(labels.size());
  for (std::size_t k = 0; k < labels.size(); ++k) torus_[k] = labels[k] == one;
  for (std::size_t r = 0; r <= period_; ++r)
    for (std::size_t c = 0; c <= period_; ++c)
      if (contains({r, c})) elements_.push_back({r, c});
}

bool OccurrenceMonoid::contains(Position pos) const noexcept {
  return torus_[(pos.row % period_) * period_ + pos.col % period_];
}

std::vector<BasisElement> hilbert_basis(const CoactionPair& p) {
  OccurrenceMonoid monoid(p);
  std::vector<BasisElement> basis;
  for (const Position& e : monoid.box_elements()) {
    if (e == Position{0, 0}) continue;
    bool reducible = false;
    for (const Position& f : monoid.box_elements()) {
      if (f == Position{0, 0} || f == e) continue;
      if (f.row > e.row || f.col > e.col) continue;
      if (monoid.contains({e.row - f.row, e.col - f.col})) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back({e, e.degree(), canonical_monomial(p, e)});
  }
  std::stable_sort(basis.begin(), basis.end(), [](const BasisElement& x, const BasisElement& y) {
    return x.degree != y.degree ? x.degree < y.degree : x.pos < y.pos;
  });
  return basis;
}

RegularityEvidence regularity_check(const CoactionPair& p) {
  RegularityEvidence ev;
  ev.order_method = p.group().order() == 4 * p.m() * p.m();
  ev.basis_method = hilbert_basis(p).size() == 2;
  if (ev.order_method != ev.basis_method)
    throw InternalError("regularity_check: order and basis methods disagree");
  ev.is_regular = ev.order_method;
  return ev;
}

std::vector<std::size_t> hilbert_series(const CoactionPair& p, std::size_t max_degree) {
  OccurrenceMonoid monoid(p);
  std::vector<std::size_t> series(max_degree + 1, 0);
  for (std::size_t len = 0; len <= max_degree; ++len)
    for (std::size_t r = 0; r <= len; ++r) series[len] += monoid.contains({r, len - r});
  return series;
}

std::string to_string(const MonoidRelation& rel) {
  auto side = [](const std::vector<std::size_t>& v) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k] == 0) continue;
      if (!first) out << " + ";
      first = false;
      if (v[k] > 1) out << v[k] << '*';
      out << 'h' << k;
    }
    if (first) out << '0';
    return out.str();
  };
  std::ostringstream out;
  out << side(rel.lhs) << " = " << side(rel.rhs) << "  (" << rel.value.row << ','
      << rel.value.col << ')';
  return out.str();
}

std::vector<MonoidRelation> relation_search(const std::vector<BasisElement>& basis,
                                            std::size_t bound) {
  const std::size_t k = basis.size();
  std::size_t combos = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (combos > kMaxCombinations / (bound + 1))
      throw ResourceLimitError("relation_search: too many coefficient combinations");
    combos *= bound + 1;
  }

  std::map<Position, std::vector<std::vector<std::size_t>>> by_value;
  std::vector<std::size_t> coeffs(k, 0);
  for (std::size_t n = 0; n < combos; ++n) {
    Position sum{0, 0};
    for (std::size_t i = 0; i < k; ++i) {
      sum.row += coeffs[i] * basis[i].pos.row;
      sum.col += coeffs[i] * basis[i].pos.col;
    }
    by_value[sum].push_back(coeffs);
    for (std::size_t i = 0; i < k && ++coeffs[i] > bound; ++i) coeffs[i] = 0;
  }

  std::vector<MonoidRelation> found;
  for (const auto& [value, vecs] : by_value)
    for (std::size_t x = 0; x < vecs.size(); ++x)
      for (std::size_t y = x + 1; y < vecs.size(); ++y) {
        bool disjoint = true;
        for (std::size_t i = 0; i < k && disjoint; ++i) disjoint = vecs[x][i] == 0 || vecs[y][i] == 0;
        if (!disjoint) continue;
        // Fewer factors on the left; ties broken lexicographically (larger first).
        const auto* lhs = &vecs[x];
        const auto* rhs = &vecs[y];
        if (total(*lhs) > total(*rhs) || (total(*lhs) == total(*rhs) && *lhs < *rhs))
          std::swap(lhs, rhs);
        found.push_back({*lhs, *rhs, value});
      }

  // Keep relations that are not obtained by adding a smaller one to something.
  std::vector<MonoidRelation> minimal;
  for (std::size_t x = 0; x < found.size(); ++x) {
    bool is_min = true;
    for (std::size_t y = 0; y < found.size() && is_min; ++y) {
      if (x == y) continue;
      const auto& a = found[x];
      const auto& b = found[y];
      if ((dominated(b.lhs, a.lhs) && dominated(b.rhs, a.rhs)) ||
          (dominated(b.lhs, a.rhs) && dominated(b.rhs, a.lhs)))
        is_min = false;
    }
    if (is_min) minimal.push_back(found[x]);
  }
  std::sort(minimal.begin(), minimal.end(), [](const MonoidRelation& a, const MonoidRelation& b) {
    if (a.value.degree() != b.value.degree()) return a.value.degree() < b.value.degree();
    if (a.value != b.value) return a.value < b.value;
    return a.lhs > b.lhs;
  });
  return minimal;
}

std::vector<MonoidRelation> relation_search(const CoactionPair& p, std::size_t bound) {
  return relation_search(hilbert_basis(p), bound);
}

std::size_t default_relation_bound(const std::vector<BasisElement>& basis) {
  if (basis.empty()) return 4;
  std::size_t lo = basis.front().degree, hi = basis.front().degree;
  for (const auto& e : basis) {
    lo = std::min(lo, e.degree);
    hi = std::max(hi, e.degree);
  }
  return std::max<std::size_t>(4, hi / lo);
}

std::string canonical_monomial(const CoactionPair& p, Position pos) {
  if (lattice_label(p, p.group().identity(), pos) != p.group().identity())
    throw ValidationError(ValidationFailure::kNotIdentityPosition,
                          "position (" + std::to_string(pos.row) + "," + std::to_string(pos.col) +
                              ") is not labelled by the identity");
  std::string word;
  word.reserve(pos.degree());
  for (std::size_t c = 0; c < pos.col; ++c) word.push_back(to_char(east_decoration({0, c})));
  for (std::size_t r = 0; r < pos.row; ++r)
    word.push_back(to_char(flip(east_decoration({r, pos.col}))));
  return word;
}

std::size_t smallest_invariant_u_power(const CoactionPair& p) {
  OccurrenceMonoid monoid(p);
  // a has order at most 4m, so the staircase must return to 1 by then.
  for (std::size_t k = 1; k <= 4 * p.m(); ++k)
    if (monoid.contains({k / 2, (k + 1) / 2})) return k;
  throw InternalError("smallest_invariant_u_power: no invariant power of u within 4m");
}

std::string singularity_annotation(const std::vector<BasisElement>& basis,
                                   const std::vector<MonoidRelation>& relations) {
  if (basis.size() == 2) return "polynomial ring in two variables (AS regular)";
  if (basis.size() == 3 && relations.size() == 1) {
    const auto& rel = relations.front();
    // x + y = n z with z the single generator on the right.
    std::size_t rhs_support = 0, n = 0;
    for (std::size_t v : rel.rhs)
      if (v) ++rhs_support, n = v;
    bool lhs_simple = std::count(rel.lhs.begin(), rel.lhs.end(), 1) == 2 &&
                      std::count(rel.lhs.begin(), rel.lhs.end(), 0) == 1;
    if (lhs_simple && rhs_support == 1 && n >= 2)
      return "type A_" + std::to_string(n - 1) + " singularity: k[x,y,z]/(xy - z^" +
             std::to_string(n) + ")";
  }
  return "";
}

InvariantReport invariant_report(const CoactionPair& p, std::size_t max_degree,
                                 std::optional<std::size_t> relation_bound) {
  InvariantReport rep;
  rep.basis = hilbert_basis(p);
  for (const auto& e : rep.basis) rep.degrees.push_back(e.degree);
  rep.regularity = regularity_check(p);
  rep.series = hilbert_series(p, max_degree);
  rep.relation_bound = relation_bound.value_or(default_relation_bound(rep.basis));
  rep.relations = relation_search(rep.basis, rep.relation_bound);
  rep.smallest_u_power = smallest_invariant_u_power(p);
  rep.annotation = singularity_annotation(rep.basis, rep.relations);
  return rep;
}

}  // namespace mckay
