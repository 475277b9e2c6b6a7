#include <algorithm>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "mckay/errors.hpp"
#include "mckay/group.hpp"

namespace mckay {
namespace {

constexpr Element kUnset = std::numeric_limits<Element>::max();

std::string collapse_runs(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    out.push_back(to_char(w[i]));
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace

Group::Group(std::size_t order, std::vector<Element> right_action, Element a, Element b)
    : order_(order), a_(a), b_(b), right_(std::move(right_action)) {
  if (order_ == 0 || right_.size() != order_ * kLetterCount)
    throw std::invalid_argument("Group: action table has the wrong shape");
  for (Element t : right_)
    if (t >= order_) throw std::invalid_argument("Group: action table entry out of range");

  // Shortlex spanning tree over a < b < A < B.
  std::vector<Element> parent(order_, kUnset);
  std::vector<Letter> via(order_, Letter::a);
  std::vector<Element> bfs{0};
  normal_forms_.assign(order_, Word{});
  parent[0] = 0;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    Element x = bfs[head];
    for (Letter g : kLetters) {
      Element y = act(x, g);
      if (parent[y] != kUnset) continue;
      parent[y] = x;
      via[y] = g;
      normal_forms_[y] = normal_forms_[x];
      normal_forms_[y].push_back(g);
      bfs.push_back(y);
    }
  }
  if (bfs.size() != order_) throw std::invalid_argument("Group: generators do not reach every element");

  mul_.assign(order_ * order_, 0);
  for (Element x = 0; x < order_; ++x) {
    Element* row = mul_.data() + static_cast<std::size_t>(x) * order_;
    row[0] = x;
    for (std::size_t k = 1; k < bfs.size(); ++k) {
      Element y = bfs[k];
      row[y] = act(row[parent[y]], via[y]);
    }
  }
  inv_.assign(order_, kUnset);
  for (Element x = 0; x < order_; ++x)
    for (Element y = 0; y < order_; ++y)
      if (mul(x, y) == 0) {
        inv_[x] = y;
        break;
      }
  if (std::find(inv_.begin(), inv_.end(), kUnset) != inv_.end())
    throw InternalError("Group: some element has no inverse");

  // Display names use positive words only; every element of a finite group has one.
  names_.assign(order_, std::string{});
  std::vector<Word> positive(order_);
  std::vector<bool> seen(order_, false);
  std::vector<Element> queue{0};
  seen[0] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (Letter g : {Letter::a, Letter::b}) {
      Element y = act(x, g);
      if (seen[y]) continue;
      seen[y] = true;
      positive[y] = positive[x];
      positive[y].push_back(g);
      queue.push_back(y);
    }
  }
  for (Element x = 0; x < order_; ++x)
    names_[x] = x == 0 ? "1" : seen[x] ? collapse_runs(positive[x]) : collapse_runs(normal_forms_[x]);
}

Element Group::evaluate(const Word& w) const noexcept {
  Element x = identity();
  for (Letter g : w) x = act(x, g);
  return x;
}

Element Group::pow(Element x, std::size_t n) const noexcept {
  Element r = identity();
  for (std::size_t i = 0; i < n; ++i) r = mul(r, x);
  return r;
}

bool Group::is_abelian() const noexcept {
  for (Element x = 0; x < order_; ++x)
    for (Element y = x + 1; y < order_; ++y)
      if (mul(x, y) != mul(y, x)) return false;
  return true;
}

bool Group::check_axioms() const noexcept {
  for (Element x = 0; x < order_; ++x) {
    if (mul(0, x) != x || mul(x, 0) != x) return false;
    if (mul(x, inv(x)) != 0 || mul(inv(x), x) != 0) return false;
  }
  for (Element x = 0; x < order_; ++x)
    for (Element y = 0; y < order_; ++y) {
      Element xy = mul(x, y);
      for (Element z = 0; z < order_; ++z)
        if (mul(xy, z) != mul(x, mul(y, z))) return false;
    }
  return true;
}

std::size_t element_order(const Group& g, Element x) {
  if (x >= g.order()) throw std::out_of_range("element_order: element out of range");
  std::size_t n = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++n;
  return n;
}

std::vector<Element> generated_subgroup(const Group& g, std::span<const Element> gens) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{g.identity()};
  in[g.identity()] = true;
  for (std::size_t head = 0; head < members.size(); ++head) {
    Element x = members[head];
    for (Element s : gens) {
      if (s >= g.order()) throw std::out_of_range("generated_subgroup: element out of range");
      Element y = g.mul(x, s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
      }
    }
  }
  // In a finite group, closure under multiplication already contains inverses.
  std::sort(members.begin(), members.end());
  return members;
}

std::string group_to_json(const Group& g) {
  nlohmann::ordered_json j;
  j["order"] = g.order();
  j["a"] = g.a();
  j["b"] = g.b();
  auto mul = nlohmann::json::array();
  for (Element x = 0; x < g.order(); ++x) {
    auto row = g.mul_row(x);
    mul.push_back(std::vector<Element>(row.begin(), row.end()));
  }
  j["mul"] = std::move(mul);
  std::vector<Element> inv(g.order());
  std::vector<std::string> names(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    inv[x] = g.inv(x);
    names[x] = spell(g.normal_form(x));
  }
  j["inv"] = inv;
  j["names"] = names;
  return j.dump();
}

}  // namespace mckay
