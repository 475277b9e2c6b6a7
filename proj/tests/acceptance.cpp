// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>

#include "mckay/dimension.hpp"
#include "mckay/invariants.hpp"
#include "mckay/lattice.hpp"
#include "support.hpp"

using namespace mckay;

namespace {

// Every comparison below is on integers or booleans.
constexpr std::size_t kExactTolerance = 0;
constexpr double kTimeBudgetSeconds = 10.0;
constexpr std::size_t kMinPropertyCases = 100;
constexpr std::size_t kPropertyMaxOrder = 100;
constexpr std::size_t kWalkOracleMaxOrder = 48;
constexpr std::size_t kWalkOracleMaxLength = 8;
constexpr std::size_t kInfiniteCosetLimit = 10000;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

std::vector<std::size_t> degrees_of(const std::vector<BasisElement>& basis) {
  std::vector<std::size_t> out;
  for (const auto& b : basis) out.push_back(b.degree);
  return out;
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return "{" + s + "}";
}

bool within(std::size_t got, std::size_t want) {
  return (got > want ? got - want : want - got) <= kExactTolerance;
}

Outcome criterion1() {
  Outcome o;
  auto p = fixtures::pair(fixtures::kRunning);
  const Group& g = p.group();
  o.require(g.order() == 12, "order " + std::to_string(g.order()));
  o.require(p.m() == 3, "m " + std::to_string(p.m()));
  const std::size_t table[4][11] = {
      {0, 1, 0, 0, 0, 1, 0, 2, 0, 1, 0},
      {1, 0, 0, 0, 1, 0, 2, 0, 1, 0, 2},
      {0, 0, 0, 1, 0, 1, 0, 1, 0, 2, 0},
      {0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 1},
  };
  const char* names[4] = {"1", "a", "a^2", "a^3"};
  std::size_t matched = 0;
  std::string mismatches;
  for (int row = 0; row < 4; ++row)
    for (std::size_t len = 0; len <= 10; ++len) {
      std::size_t got = graded_dimension(p, g.a(), fixtures::el(g, names[row]), len);
      if (within(got, table[row][len])) {
        ++matched;
      } else {
        mismatches += std::string(" [j=") + names[row] + " l=" + std::to_string(len) +
                      ": got " + std::to_string(got) + ", table " +
                      std::to_string(table[row][len]) + "]";
      }
    }
  o.require(matched == 44, std::to_string(matched) + "/44 entries match;" + mismatches);
  if (o.pass) o.detail = "order 12, m 3, 44/44 entries";
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto p = fixtures::pair(fixtures::kRunning);
  const Group& g = p.group();
  auto eight = quotient_dimension(p, g.a(), fixtures::el(g, "a^2 b"));
  auto inf = quotient_dimension(p, g.a(), fixtures::el(g, "b a"));
  o.require(eight == DimensionResult::finite(8), "dim(a, a^2 b) = " + to_string(eight));
  o.require(inf.infinite && inf.witness == Border::kRow0, "dim(a, ba) = " + to_string(inf));
  if (o.pass) o.detail = "8 and infinite (row 0)";
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto p = fixtures::pair(fixtures::kRunning);
  auto basis = hilbert_basis(p);
  auto degrees = degrees_of(basis);
  o.require(degrees == std::vector<std::size_t>{4, 6, 6}, "degrees " + join(degrees));
  auto rels = relation_search(basis, 3);
  bool found = false;
  for (const auto& r : rels) {
    bool one_one = r.lhs.size() == 3 && r.lhs[0] == 0 && r.lhs[1] == 1 && r.lhs[2] == 1;
    bool three = r.rhs.size() == 3 && r.rhs[0] == 3 && r.rhs[1] == 0 && r.rhs[2] == 0;
    found |= one_one && three && basis[1].pos == Position{0, 6} && basis[2].pos == Position{6, 0} &&
             basis[0].pos == Position{2, 2};
  }
  o.require(found, "relation (0,6)+(6,0) = 3*(2,2) not found");
  auto series = hilbert_series(p, 12);
  for (std::size_t len = 0; len <= 12; ++len)
    o.require(within(series[len], oracle::quotient_ring_count(len, 6, 6, 4)),
              "series mismatch at degree " + std::to_string(len));
  if (o.pass) o.detail = "degrees {4,6,6}, xy = z^3, series 0..12 exact";
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto p = fixtures::pair(fixtures::kSecond);
  o.require(p.group().order() == 12, "order " + std::to_string(p.group().order()));
  try {
    auto ev = auslander_check(p);
    o.require(ev.is_isomorphism && ev.order_method && ev.coverage_method, "auslander not true");
  } catch (const InternalError& e) {
    o.require(false, std::string("methods disagree: ") + e.what());
  }
  auto degrees = degrees_of(hilbert_basis(p));
  o.require(degrees == std::vector<std::size_t>{4, 8, 8, 12, 12}, "degrees " + join(degrees));
  auto names = read_label_map(p.group(), fixtures::data_file("second_example_labels.txt"));
  auto grid = export_grid(toroidal_grid(p), names);
  auto expected = fixtures::data_file("second_example_torus.txt");
  std::size_t cells = 0, same = 0;
  {
    std::istringstream a(grid), b(expected);
    std::string x, y;
    while (b >> y) {
      ++cells;
      if (a >> x && x == y) ++same;
    }
  }
  o.require(cells == 144 && same == 144 && grid == expected,
            std::to_string(same) + "/" + std::to_string(cells) + " grid cells match");
  if (o.pass) o.detail = "order 12, auslander true (both), degrees {4,8,8,12,12}, 144/144 cells";
  return o;
}

Outcome criterion5() {
  Outcome o;
  for (std::size_t m = 2; m <= 5; ++m) {
    auto p = fixtures::pair(gamma_m_presentation(m).source_text);
    const Group& g = p.group();
    std::string tag = "Gamma_" + std::to_string(m) + ": ";
    o.require(g.order() == 4 * m * m, tag + "order " + std::to_string(g.order()));
    o.require(element_order(g, g.a()) == 4 * m, tag + "|a| wrong");
    auto reg = regularity_check(p);
    o.require(reg.is_regular, tag + "not regular");
    auto basis = hilbert_basis(p);
    o.require(basis.size() == 2 && basis[0].pos == Position{0, 2 * m} &&
                  basis[1].pos == Position{2 * m, 0},
              tag + "basis is not {(2m,0),(0,2m)}");
    o.require(relation_search(basis, default_relation_bound(basis)).empty(), tag + "relations found");
    o.require(!auslander_check(p).is_isomorphism, tag + "auslander true");
  }
  if (o.pass) o.detail = "m = 2..5";
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto p = fixtures::pair(fixtures::kOrder48);
  const Group& g = p.group();
  o.require(g.order() == 48, "order " + std::to_string(g.order()));
  auto basis = hilbert_basis(p);
  auto degrees = degrees_of(basis);
  o.require(degrees == std::vector<std::size_t>{8, 8, 48, 48}, "degrees " + join(degrees));
  if (basis.size() >= 2) {
    Position sum{basis[0].pos.row + basis[1].pos.row, basis[0].pos.col + basis[1].pos.col};
    o.require(sum == Position{8, 8}, "degree-8 positions do not sum to (8,8)");
    std::string u16(16, 'u');
    bool staircase_is_u16 = true;
    for (std::size_t k = 1; k <= 16; ++k)
      staircase_is_u16 &= oracle::walk_label(p, 0, k / 2, (k + 1) / 2, 0) ==
                          g.pow(g.inv(g.a()), k);
    o.require(staircase_is_u16, "(8,8) is not the u^16 position");
  }
  auto u = smallest_invariant_u_power(p);
  o.require(u == 16 && element_order(g, g.a()) == 16, "smallest u-power " + std::to_string(u));
  if (o.pass) o.detail = "order 48, degrees {8,8,48,48}, (1,7)+(7,1) = (8,8), u^16";
  return o;
}

std::size_t brute_order(const Group& g, Element x) {
  std::size_t n = 1;
  for (Element y = x; y != g.identity(); y = g.mul(y, x)) ++n;
  return n;
}

Outcome criterion7() {
  Outcome o;
  auto cases = fixtures::valid_cases(kPropertyMaxOrder, 4);
  std::size_t n1 = 0, n2 = 0, n3 = 0, n4 = 0, n5 = 0, n6 = 0, n7 = 0;
  for (const auto& c : cases) {
    const auto& p = c.pair;
    const Group& g = p.group();
    const std::size_t per = p.period();

    // (i)
    Element x = p.a_inv(), y = p.b_inv();
    std::size_t xy = brute_order(g, g.mul(x, y));
    for (std::size_t k = 2; k <= g.order(); ++k)
      o.require(alternating_list(g, x, y, k).all_distinct == (xy >= k), "(i) " + c.source);
    ++n1;

    // (ii)
    try {
      auto ev = auslander_check(p);
      o.require(ev.order_method == ev.coverage_method &&
                    ev.is_isomorphism == !lambda_mod_e1(p).infinite,
                "(ii) " + c.source);
    } catch (const InternalError&) {
      o.require(false, "(ii) disagreement " + c.source);
    }
    ++n2;

    // (iii)
    try {
      auto reg = regularity_check(p);
      o.require(reg.order_method == reg.basis_method, "(iii) " + c.source);
    } catch (const InternalError&) {
      o.require(false, "(iii) disagreement " + c.source);
    }
    ++n3;

    // (iv)
    for (std::size_t len = 0; len <= 2 * per; ++len) {
      std::size_t total = 0;
      for (Element j = 0; j < g.order(); ++j) total += graded_dimension(p, p.a(), j, len);
      o.require(total == len + 1, "(iv) " + c.source);
    }
    ++n4;

    // (v)
    for (std::size_t r = 0; r < per; ++r)
      for (std::size_t col = 0; col < per; ++col) {
        Element here = lattice_label(p, 0, {r, col});
        bool u_east = east_decoration({r, col}) == Decoration::u;
        Element east = oracle::arrow(p, here, u_east);
        Element south = oracle::arrow(p, here, !u_east);
        o.require(lattice_label(p, 0, {r, col + 1}) == east &&
                      lattice_label(p, 0, {r + 1, col}) == south &&
                      oracle::arrow(p, east, u_east) == oracle::arrow(p, south, !u_east) &&
                      oracle::arrow(p, east, u_east) == lattice_label(p, 0, {r + 1, col + 1}),
                  "(v) square " + c.source);
        o.require(oracle::walk_label(p, 0, r + per, col, 0) == here &&
                      oracle::walk_label(p, 0, r, col + per, 0) == here,
                  "(v) period " + c.source);
      }
    ++n5;

    // (vi)
    {
      const std::size_t side = per + 1;
      std::vector<bool> member(side * side), reach(side * side, false);
      for (std::size_t r = 0; r <= per; ++r)
        for (std::size_t col = 0; col <= per; ++col)
          member[r * side + col] = oracle::walk_label(p, 0, r, col, 0) == 0;
      auto basis = hilbert_basis(p);
      reach[0] = true;
      for (std::size_t r = 0; r <= per; ++r)
        for (std::size_t col = 0; col <= per; ++col)
          for (const auto& b : basis)
            if (b.pos.row <= r && b.pos.col <= col &&
                reach[(r - b.pos.row) * side + col - b.pos.col])
              reach[r * side + col] = true;
      o.require(member == reach, "(vi) completeness " + c.source);
      for (const auto& b : basis)
        for (std::size_t r = 0; r <= b.pos.row; ++r)
          for (std::size_t col = 0; col <= b.pos.col; ++col) {
            bool proper = (r || col) && (r != b.pos.row || col != b.pos.col);
            o.require(!(proper && member[r * side + col] &&
                        member[(b.pos.row - r) * side + b.pos.col - col]),
                      "(vi) minimality " + c.source);
          }
      ++n6;
    }

    // (vii)
    if (g.order() <= kWalkOracleMaxOrder) {
      for (std::size_t len = 0; len <= kWalkOracleMaxLength; ++len) {
        auto dims = oracle::walk_dimensions(p, p.a(), len);
        for (Element j = 0; j < g.order(); ++j)
          o.require(graded_dimension(p, p.a(), j, len) == dims[j], "(vii) " + c.source);
      }
      ++n7;
    }
  }
  for (std::size_t n : {n1, n2, n3, n4, n5, n6, n7})
    o.require(n >= kMinPropertyCases, "too few cases: " + std::to_string(n));
  if (o.pass)
    o.detail = "cases (i)-(vii): " + std::to_string(n1) + "," + std::to_string(n2) + "," +
               std::to_string(n3) + "," + std::to_string(n4) + "," + std::to_string(n5) + "," +
               std::to_string(n6) + "," + std::to_string(n7);
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int n = 3; n <= 6; ++n) {
    auto g = enumerate_group(parse_presentation("a^2 = b^2 = (a b)^" + std::to_string(n) + " = 1"));
    o.require(g.order() == static_cast<std::size_t>(2 * n), "dihedral n=" + std::to_string(n));
  }
  o.require(enumerate_group(parse_presentation("a = 1; b = 1")).order() == 1, "trivial group");
  bool limited = false;
  auto start = std::chrono::steady_clock::now();
  try {
    enumerate_group(parse_presentation("a^2 = b^2"), kInfiniteCosetLimit);
  } catch (const ResourceLimitError&) {
    limited = true;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.require(limited, "no limit error for <a,b | a^2 = b^2>");
  if (o.pass) o.detail = "D_3..D_6, trivial, limit fired after " + std::to_string(secs) + " s";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
      {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
  };
  auto start = std::chrono::steady_clock::now();
  int failed = 0;
  for (const auto& [id, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s criterion %d: %s\n", o.pass ? "PASS" : "FAIL", id, o.detail.c_str());
    failed += !o.pass;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  bool fast = secs < kTimeBudgetSeconds;
  std::printf("%s time budget: %.2f s (limit %.0f s)\n", fast ? "PASS" : "FAIL", secs,
              kTimeBudgetSeconds);
  failed += !fast;
  std::printf("%d failing\n", failed);
  return failed == 0 ? 0 : 1;
}
