// HLT coset enumeration over the trivial subgroup, with a scan-only
// lookahead pass when the live-coset budget is reached and periodic
// compaction of dead rows.

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "mckay/errors.hpp"
#include "mckay/group.hpp"

namespace mckay {
namespace {

using Coset = std::uint32_t;
constexpr Coset kNone = std::numeric_limits<Coset>::max();

class CosetTable {
 public:
  CosetTable(const std::vector<Word>& relators, std::size_t max_cosets)
      : relators_(relators), max_live_(max_cosets) {
    add_row();
  }

  void run() {
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      std::size_t r = 0;
      while (r <= relators_.size() && alive(static_cast<Coset>(c))) {
        if (rows_.size() > 2 * max_live_ + 16) c = compact(c);
        bool ok = r < relators_.size() ? scan_and_fill(static_cast<Coset>(c), relators_[r])
                                       : fill_row(static_cast<Coset>(c));
        if (ok) {
          ++r;
          continue;
        }
        lookahead();
        if (live_ >= max_live_)
          throw ResourceLimitError("coset enumeration exceeded " + std::to_string(max_live_) +
                                   " cosets; the group may be infinite or too large");
      }
    }
  }

  /// Live cosets renumbered 0..n-1 in creation order, as a flat n x 4 table.
  std::vector<Coset> finished_table(std::size_t& order) const {
    std::vector<Coset> renumber(rows_.size(), kNone);
    Coset next = 0;
    for (std::size_t c = 0; c < rows_.size(); ++c)
      if (alive(static_cast<Coset>(c))) renumber[c] = next++;
    order = next;
    std::vector<Coset> out;
    out.reserve(order * kLetterCount);
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      if (!alive(static_cast<Coset>(c))) continue;
      for (Coset t : rows_[c]) {
        if (t == kNone || !alive(t)) throw InternalError("coset table incomplete after enumeration");
        out.push_back(renumber[t]);
      }
    }
    return out;
  }

 private:
  using Row = std::array<Coset, kLetterCount>;

  bool alive(Coset c) const { return parent_[c] == c; }
  Coset& entry(Coset c, Letter x) { return rows_[c][index_of(x)]; }

  bool add_row() {
    if (live_ >= max_live_) return false;
    Row row;
    row.fill(kNone);
    rows_.push_back(row);
    parent_.push_back(static_cast<Coset>(rows_.size() - 1));
    ++live_;
    return true;
  }

  bool define(Coset c, Letter x) {
    if (!add_row()) return false;
    Coset d = static_cast<Coset>(rows_.size() - 1);
    entry(c, x) = d;
    entry(d, inverse(x)) = c;
    return true;
  }

  bool fill_row(Coset c) {
    for (Letter x : kLetters)
      if (entry(c, x) == kNone && !define(c, x)) return false;
    return true;
  }

  /// Returns false when a new coset was needed but the budget is exhausted.
  bool scan_and_fill(Coset c, const Word& w) {
    if (w.empty()) return true;
    for (;;) {
      if (scan(c, w, /*fill=*/true)) return true;
      if (!define(pending_coset_, pending_letter_)) return false;
    }
  }

  /// Scans `w` from c forwards and backwards. Returns true when the scan
  /// closed (by completion, deduction, or coincidence). Otherwise records the
  /// gap in pending_coset_/pending_letter_ for the caller to fill.
  bool scan(Coset c, const Word& w, bool fill) {
    Coset f = c;
    std::size_t i = 0;
    const std::size_t n = w.size();
    while (i < n && entry(f, w[i]) != kNone) f = entry(f, w[i++]);
    if (i == n) {
      if (f != c) coincidence(f, c);
      return true;
    }
    Coset back = c;
    std::size_t j = n;  // letters [j, n) consumed backwards
    while (j > i && entry(back, inverse(w[j - 1])) != kNone) back = entry(back, inverse(w[--j]));
    if (j == i) {
      coincidence(f, back);
      return true;
    }
    if (j == i + 1) {
      entry(f, w[i]) = back;
      entry(back, inverse(w[i])) = f;
      return true;
    }
    pending_coset_ = f;
    pending_letter_ = w[i];
    return !fill;
  }

  void lookahead() {
    bool changed = true;
    while (changed) {
      std::size_t before_live = live_;
      std::size_t before_defs = count_defined();
      for (std::size_t c = 0; c < rows_.size(); ++c)
        for (const Word& w : relators_) {
          if (!alive(static_cast<Coset>(c))) break;
          if (!w.empty()) scan(static_cast<Coset>(c), w, /*fill=*/false);
        }
      changed = live_ != before_live || count_defined() != before_defs;
    }
  }

  std::size_t count_defined() const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < rows_.size(); ++c)
      if (parent_[c] == c)
        for (Coset t : rows_[c]) n += t != kNone;
    return n;
  }

  Coset rep(Coset c) {
    Coset r = c;
    while (parent_[r] != r) r = parent_[r];
    while (parent_[c] != r) {
      Coset next = parent_[c];
      parent_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(Coset x, Coset y, std::deque<Coset>& queue) {
    Coset rx = rep(x), ry = rep(y);
    if (rx == ry) return;
    Coset lo = std::min(rx, ry), hi = std::max(rx, ry);
    parent_[hi] = lo;
    --live_;
    queue.push_back(hi);
  }

  void coincidence(Coset x, Coset y) {
    std::deque<Coset> queue;
    merge(x, y, queue);
    while (!queue.empty()) {
      Coset dead = queue.front();
      queue.pop_front();
      for (Letter g : kLetters) {
        Coset d = entry(dead, g);
        if (d == kNone) continue;
        Letter gi = inverse(g);
        if (entry(d, gi) == dead) entry(d, gi) = kNone;
        Coset mu = rep(dead), nu = rep(d);
        if (entry(mu, g) != kNone) {
          merge(nu, entry(mu, g), queue);
        } else if (entry(nu, gi) != kNone) {
          merge(mu, entry(nu, gi), queue);
        } else {
          entry(mu, g) = nu;
          entry(nu, gi) = mu;
        }
      }
    }
  }

  /// Drops dead rows; returns the new index of coset `current`.
  std::size_t compact(std::size_t current) {
    std::vector<Coset> renumber(rows_.size(), kNone);
    Coset next = 0;
    for (std::size_t c = 0; c < rows_.size(); ++c)
      if (alive(static_cast<Coset>(c))) renumber[c] = next++;
    std::vector<Row> rows;
    rows.reserve(next);
    for (std::size_t c = 0; c < rows_.size(); ++c) {
      if (!alive(static_cast<Coset>(c))) continue;
      Row row = rows_[c];
      for (Coset& t : row)
        if (t != kNone) t = renumber[rep(t)];
      rows.push_back(row);
    }
    rows_ = std::move(rows);
    parent_.resize(next);
    for (Coset c = 0; c < next; ++c) parent_[c] = c;
    return renumber[current];
  }

  const std::vector<Word>& relators_;
  std::size_t max_live_;
  std::vector<Row> rows_;
  std::vector<Coset> parent_;
  std::size_t live_ = 0;
  Coset pending_coset_ = kNone;
  Letter pending_letter_ = Letter::a;
};

}  // namespace

Group enumerate_group(const Presentation& p, std::size_t max_cosets) {
  if (max_cosets == 0) throw std::invalid_argument("max_cosets must be positive");
  CosetTable table(p.relators, max_cosets);
  table.run();
  std::size_t order = 0;
  std::vector<Coset> action = table.finished_table(order);

  // Coset i is the element represented by any word w with 1.w = i, so the
  // coset table is the right regular action. Relabel in shortlex BFS order.
  std::vector<Element> relabel(order, std::numeric_limits<Element>::max());
  std::vector<Coset> bfs{0};
  relabel[0] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head)
    for (Letter x : kLetters) {
      Coset t = action[bfs[head] * kLetterCount + index_of(x)];
      if (relabel[t] == std::numeric_limits<Element>::max()) {
        relabel[t] = static_cast<Element>(bfs.size());
        bfs.push_back(t);
      }
    }
  if (bfs.size() != order) throw InternalError("coset table is not connected");

  std::vector<Element> right(order * kLetterCount);
  for (std::size_t k = 0; k < order; ++k)
    for (std::size_t x = 0; x < kLetterCount; ++x)
      right[k * kLetterCount + x] = relabel[action[bfs[k] * kLetterCount + x]];
  Element a = right[index_of(Letter::a)];
  Element b = right[index_of(Letter::b)];
  return Group(order, std::move(right), a, b);
}

}  // namespace mckay
