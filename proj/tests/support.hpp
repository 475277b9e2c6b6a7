#pragma once

// Shared fixtures and independent oracles. Nothing here calls the lattice,
// dimension or invariants code: oracles walk the quiver arrows directly from
// the multiplication table.

#include <algorithm>
#include <cstddef>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mckay/coaction.hpp"
#include "mckay/errors.hpp"
#include "mckay/group.hpp"

#include <json.hpp>

namespace fixtures {

inline constexpr const char* kRunning = "a^2 = b^2; a^4 = 1; b^4 = 1; (a b)^3 = 1";
inline constexpr const char* kSecond = "a^2 = b^2; a^4 = b^4 = (a^3 b)^3 = 1";
inline constexpr const char* kOrder48 = "a^2 = b^2; a^16 = 1; (a^7 b)^3 = 1";

inline std::shared_ptr<const mckay::Group> group(const std::string& text) {
  return std::make_shared<const mckay::Group>(
      mckay::enumerate_group(mckay::parse_presentation(text)));
}

inline mckay::CoactionPair pair(const std::string& text) {
  auto g = group(text);
  return mckay::validate_pair(g, g->a(), g->b());
}

inline mckay::Element el(const mckay::Group& g, const std::string& word) {
  return g.evaluate(mckay::parse_word(word));
}

inline std::string data_file(const std::string& name) {
  std::ifstream in(std::string(MCKAY_TEST_DATA_DIR) + "/" + name);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline std::optional<mckay::Group> try_enumerate(const std::string& text,
                                                 std::size_t max_cosets = 20000) {
  try {
    return mckay::enumerate_group(mckay::parse_presentation(text), max_cosets);
  } catch (const mckay::ResourceLimitError&) {
    return std::nullopt;
  }
}

/// Presentations whose groups feed the property suites.
inline std::vector<std::string> family() {
  std::vector<std::string> out;
  for (int m = 2; m <= 5; ++m) out.push_back(mckay::gamma_m_presentation(m).source_text);
  for (int n = 3; n <= 12; ++n) out.push_back("a^2 = b^2; a^4 = 1; (a b)^" + std::to_string(n) + " = 1");
  for (int n = 3; n <= 12; ++n) out.push_back("a^2 = b^2 = 1; (a b)^" + std::to_string(n) + " = 1");
  for (int k = 2; k <= 8; ++k)
    for (int n = 2; n <= 8; ++n)
      out.push_back("a^2 = b^2; a^" + std::to_string(2 * k) + " = 1; (a b)^" + std::to_string(n) +
                    " = 1; (b a)^" + std::to_string(n) + " = 1");
  for (int k = 4; k <= 16; k += 2)
    for (int s = 1; s < k; ++s)
      out.push_back("a^2 = b^2; a^" + std::to_string(k) + " = 1; (a^" + std::to_string(s) +
                    " b)^3 = 1");
  out.push_back(kSecond);
  out.push_back(kOrder48);
  return out;
}

struct Case {
  std::string source;
  mckay::CoactionPair pair;
};

/// Valid pairs from family(), deduplicated by (order, presentation), with
/// order at most `max_order`. Besides the presented generators, every other
/// generating pair (x, y) with x^2 = y^2 in the group is included, up to
/// `extra_per_group` of them.
inline std::vector<Case> valid_cases(std::size_t max_order, std::size_t extra_per_group) {
  std::vector<Case> out;
  for (const auto& text : family()) {
    auto maybe = try_enumerate(text);
    if (!maybe || maybe->order() > max_order) continue;
    auto g = std::make_shared<const mckay::Group>(std::move(*maybe));
    std::size_t extra = 0;
    for (mckay::Element x = 0; x < g->order(); ++x)
      for (mckay::Element y = 0; y < g->order(); ++y) {
        bool presented = x == g->a() && y == g->b();
        if (!presented && extra >= extra_per_group) continue;
        try {
          auto p = mckay::validate_pair(g, x, y);
          out.push_back({text + " [" + std::to_string(x) + "," + std::to_string(y) + "]", p});
          if (!presented) ++extra;
        } catch (const mckay::ValidationError&) {
        }
      }
  }
  return out;
}

}  // namespace fixtures

namespace oracle {

using mckay::Element;

/// Target of the arrow with decoration u (true) or v (false) out of x.
inline Element arrow(const mckay::CoactionPair& p, Element x, bool is_u) {
  const auto& g = p.group();
  return g.mul(g.inv(is_u ? p.a() : p.b()), x);
}

/// dim (e_i L e_j)_len for every j, by listing all 2^len decorated walks out of
/// i and merging those related by uu <-> vv substitutions.
inline std::vector<std::size_t> walk_dimensions(const mckay::CoactionPair& p, Element i,
                                                std::size_t len) {
  const std::size_t words = std::size_t{1} << len;
  std::vector<std::size_t> parent(words);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // bit k set = letter k is u
  for (std::size_t w = 0; w < words; ++w)
    for (std::size_t k = 0; k + 1 < len; ++k) {
      std::size_t mask = std::size_t{3} << k;
      std::size_t pairbits = (w & mask) >> k;
      if (pairbits == 3 || pairbits == 0) {
        std::size_t other = w ^ mask;
        parent[find(w)] = find(other);
      }
    }
  std::vector<std::size_t> dims(p.group().order(), 0);
  std::set<std::size_t> seen;
  for (std::size_t w = 0; w < words; ++w) {
    if (!seen.insert(find(w)).second) continue;
    Element x = i;
    for (std::size_t k = 0; k < len; ++k) x = arrow(p, x, (w >> k) & 1);
    ++dims[x];
  }
  return dims;
}

/// Label at (r, c) of a lattice whose root is `start`; the east arrow out of
/// (r, c) is u when r + c + root_parity is even, the south arrow the other one.
inline Element walk_label(const mckay::CoactionPair& p, Element start, std::size_t r,
                          std::size_t c, int root_parity) {
  Element x = start;
  for (std::size_t k = 0; k < c; ++k) x = arrow(p, x, (k + root_parity) % 2 == 0);
  for (std::size_t k = 0; k < r; ++k) x = arrow(p, x, (c + k + root_parity) % 2 == 1);
  return x;
}

struct Quotient {
  bool infinite;
  std::size_t value;
};

/// Counts survivors in [0, 2m]^2 by testing every rectangle explicitly. A
/// survivor on the far row or column means the count is unbounded.
inline Quotient brute_quotient(const mckay::CoactionPair& p, Element i, Element j,
                               int root_parity) {
  const std::size_t n = p.period();
  std::vector<Element> lab((n + 1) * (n + 1));
  for (std::size_t r = 0; r <= n; ++r)
    for (std::size_t c = 0; c <= n; ++c) lab[r * (n + 1) + c] = walk_label(p, i, r, c, root_parity);
  std::size_t survivors = 0;
  bool edge = false;
  for (std::size_t r = 0; r <= n; ++r)
    for (std::size_t c = 0; c <= n; ++c) {
      bool hit = false;
      for (std::size_t rr = 0; rr <= r && !hit; ++rr)
        for (std::size_t cc = 0; cc <= c && !hit; ++cc) hit = lab[rr * (n + 1) + cc] == j;
      if (!hit) {
        ++survivors;
        edge |= r == n || c == n;
      }
    }
  return {edge, survivors};
}

/// Number of monomials of total degree `len` in k[x,y,z]/(xy - z^e) with
/// generator degrees (dx, dy, dz): standard monomials are those not divisible by xy.
inline std::size_t quotient_ring_count(std::size_t len, std::size_t dx, std::size_t dy,
                                       std::size_t dz) {
  std::size_t count = 0;
  for (std::size_t i = 0; i * dx <= len; ++i)
    for (std::size_t j = 0; i * dx + j * dy <= len; ++j) {
      if (i > 0 && j > 0) continue;
      std::size_t rest = len - i * dx - j * dy;
      if (rest % dz == 0) ++count;
    }
  return count;
}

/// Monomials of degree `len` in a polynomial ring with generators of degree d each (two of them).
inline std::size_t polynomial_count(std::size_t len, std::size_t d) {
  return len % d == 0 ? len / d + 1 : 0;
}

}  // namespace oracle
