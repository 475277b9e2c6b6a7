#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "mckay/errors.hpp"
#include "mckay/lattice.hpp"

namespace mckay {
namespace {

// d^-1 x, where d is the degree of the arrow's decoration.
Element step(const CoactionPair& p, Element x, Decoration d) {
  return p.group().mul(d == Decoration::u ? p.a_inv() : p.b_inv(), x);
}

Element east(const CoactionPair& p, Element x, Position pos, RootParity parity) {
  return step(p, x, east_decoration(pos, parity));
}

Element south(const CoactionPair& p, Element x, Position pos, RootParity parity) {
  return step(p, x, flip(east_decoration(pos, parity)));
}

}  // namespace

McKayQuiver build_mckay_quiver(const CoactionPair& p) {
  const Group& g = p.group();
  McKayQuiver q;
  q.vertex_count = g.order();
  q.arrows.reserve(2 * g.order());
  q.relations.reserve(g.order());
  for (Element x = 0; x < g.order(); ++x) {
    Element ux = step(p, x, Decoration::u);
    Element vx = step(p, x, Decoration::v);
    q.arrows.push_back({x, ux, Decoration::u});
    q.arrows.push_back({x, vx, Decoration::v});
    Element uu = step(p, ux, Decoration::u);
    Element vv = step(p, vx, Decoration::v);
    if (uu != vv) throw InternalError("u^2 and v^2 paths end at different vertices");
    q.relations.push_back({x, ux, vx, uu});
  }
  return q;
}

Decoration east_decoration(Position pos, RootParity parity) noexcept {
  std::size_t q = pos.row + pos.col + static_cast<std::size_t>(parity);
  return q % 2 == 0 ? Decoration::u : Decoration::v;
}

Element lattice_label(const CoactionPair& p, Element start, Position pos, RootParity parity) {
  if (start >= p.group().order()) throw std::out_of_range("lattice_label: start out of range");
  const std::size_t n = p.period();
  Position target{pos.row % n, pos.col % n};
  Element x = start;
  Position cur{0, 0};
  for (; cur.col < target.col; ++cur.col) x = east(p, x, cur, parity);
  for (; cur.row < target.row; ++cur.row) x = south(p, x, cur, parity);
  return x;
}

std::vector<Element> label_window(const CoactionPair& p, Element start, std::size_t rows,
                                  std::size_t cols, RootParity parity) {
  if (start >= p.group().order()) throw std::out_of_range("label_window: start out of range");
  std::vector<Element> w(rows * cols);
  if (rows == 0 || cols == 0) return w;
  w[0] = start;
  for (std::size_t c = 1; c < cols; ++c) w[c] = east(p, w[c - 1], {0, c - 1}, parity);
  for (std::size_t r = 1; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      w[r * cols + c] = south(p, w[(r - 1) * cols + c], {r - 1, c}, parity);
  return w;
}

RootParity natural_parity(const CoactionPair& p, Element x) {
  const std::size_t n = p.period();
  auto grid = label_window(p, p.group().identity(), n, n);
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (grid[i] == x) return (i / n + i % n) % 2 == 0 ? RootParity::kUFirst : RootParity::kVFirst;
  throw InternalError("natural_parity: element missing from the toroidal presentation");
}

ToroidalLattice toroidal_grid(const CoactionPair& p) {
  const std::size_t n = p.period();
  return {n, label_window(p, p.group().identity(), n, n)};
}

ExportFormat parse_export_format(std::string_view name) {
  if (name == "dot") return ExportFormat::kDot;
  if (name == "grid") return ExportFormat::kGrid;
  if (name == "json") return ExportFormat::kJson;
  throw std::invalid_argument("unknown export format '" + std::string(name) + "'");
}

std::vector<std::string> default_names(const Group& g) {
  std::vector<std::string> names(g.order());
  for (Element x = 0; x < g.order(); ++x) names[x] = g.name(x);
  return names;
}

std::vector<std::string> read_label_map(const Group& g, std::string_view text) {
  auto names = default_names(g);
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto last = line.find_last_not_of(" \t\r");
    if (last == std::string::npos) continue;
    line.erase(last + 1);
    auto split = line.find_last_of(" \t");
    if (split == std::string::npos)
      throw std::invalid_argument("label map line " + std::to_string(lineno) +
                                  ": expected 'WORD LABEL'");
    std::string label = line.substr(split + 1);
    Word w = parse_word(std::string_view(line).substr(0, split));
    names[g.evaluate(w)] = label;
  }
  return names;
}

std::string export_grid(const ToroidalLattice& t, const std::vector<std::string>& names,
                        bool closed) {
  const std::size_t n = t.period + (closed ? 1 : 0);
  std::string out;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out.push_back(' ');
      out += names.at(t.at(r, c));
    }
    out.push_back('\n');
  }
  return out;
}

std::string export_lattice_json(const ToroidalLattice& t, const std::vector<std::string>& names,
                                bool closed) {
  const std::size_t n = t.period + (closed ? 1 : 0);
  nlohmann::ordered_json j;
  j["period"] = t.period;
  auto rows = nlohmann::json::array();
  for (std::size_t r = 0; r < n; ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < n; ++c) row.push_back(names.at(t.at(r, c)));
    rows.push_back(std::move(row));
  }
  j["labels"] = std::move(rows);
  return j.dump() + "\n";
}

std::string export_dot(const McKayQuiver& q, const std::vector<std::string>& names) {
  std::ostringstream out;
  out << "digraph mckay {\n";
  for (std::size_t x = 0; x < q.vertex_count; ++x)
    out << "  n" << x << " [label=\"" << names.at(x) << "\"];\n";
  for (const Arrow& e : q.arrows)
    out << "  n" << e.source << " -> n" << e.target << " [decoration=\"" << to_char(e.decoration)
        << "\", label=\"" << to_char(e.decoration) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace mckay
