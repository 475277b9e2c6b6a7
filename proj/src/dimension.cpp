#include <vector>

#include "mckay/dimension.hpp"
#include "mckay/errors.hpp"

namespace mckay {
namespace {

/// One period of the lattice rooted at `start`, indexed modulo the period.
class RootedTorus {
 public:
  RootedTorus(const CoactionPair& p, Element start)
      : n_(p.period()), labels_(label_window(p, start, n_, n_, natural_parity(p, start))) {}

  Element at(std::size_t r, std::size_t c) const { return labels_[(r % n_) * n_ + c % n_]; }
  std::size_t period() const { return n_; }

 private:
  std::size_t n_;
  std::vector<Element> labels_;
};

}  // namespace

const char* to_string(Border b) noexcept {
  switch (b) {
    case Border::kNone: return "none";
    case Border::kRow0: return "row0";
    case Border::kColumn0: return "column0";
    case Border::kBoth: return "both";
  }
  return "none";
}

std::string to_string(const DimensionResult& d) {
  if (d.infinite) return std::string("infinite (") + to_string(d.witness) + " avoids target)";
  return std::to_string(d.value);
}

std::size_t graded_dimension(const CoactionPair& p, Element i, Element j, std::size_t len) {
  RootedTorus t(p, i);
  std::size_t count = 0;
  for (std::size_t r = 0; r <= len; ++r) count += t.at(r, len - r) == j;
  return count;
}

DimensionResult quotient_dimension(const CoactionPair& p, Element i, Element j) {
  RootedTorus t(p, i);
  const std::size_t n = t.period();
  std::size_t first_col = n, first_row = n;
  for (std::size_t c = 0; c < n && first_col == n; ++c)
    if (t.at(0, c) == j) first_col = c;
  for (std::size_t r = 0; r < n && first_row == n; ++r)
    if (t.at(r, 0) == j) first_row = r;
  if (first_col == n || first_row == n) {
    Border w = first_col == n && first_row == n ? Border::kBoth
               : first_col == n                 ? Border::kRow0
                                                : Border::kColumn0;
    return DimensionResult::unbounded(w);
  }
  // blocked(r, c): some j lies in [0, r] x [0, c].
  std::vector<bool> blocked(first_row * first_col, false);
  std::size_t survivors = 0;
  for (std::size_t r = 0; r < first_row; ++r)
    for (std::size_t c = 0; c < first_col; ++c) {
      bool hit = t.at(r, c) == j || (r > 0 && blocked[(r - 1) * first_col + c]) ||
                 (c > 0 && blocked[r * first_col + c - 1]);
      blocked[r * first_col + c] = hit;
      survivors += !hit;
    }
  return DimensionResult::finite(survivors);
}

DimensionResult lambda_mod_e1(const CoactionPair& p) {
  const Group& g = p.group();
  std::size_t total = 0;
  for (Element j = 0; j < g.order(); ++j) {
    DimensionResult d = quotient_dimension(p, j, g.identity());
    if (d.infinite) return d;
    total += d.value;
  }
  return DimensionResult::finite(total);
}

AuslanderEvidence auslander_check(const CoactionPair& p) {
  const Group& g = p.group();
  AuslanderEvidence ev;
  ev.order_method = 2 * p.m() == g.order();

  ToroidalLattice t = toroidal_grid(p);
  const std::size_t n = t.period;
  bool covered = true;
  for (std::size_t k = 0; k < n && covered; ++k) {
    bool in_row = false, in_col = false;
    for (std::size_t s = 0; s < n; ++s) {
      in_row |= t.at(k, s) == g.identity();
      in_col |= t.at(s, k) == g.identity();
    }
    covered = in_row && in_col;
  }
  ev.coverage_method = covered;
  if (ev.order_method != ev.coverage_method)
    throw InternalError("auslander_check: order and coverage methods disagree");
  ev.is_isomorphism = ev.order_method;
  return ev;
}

}  // namespace mckay
