#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mckay/coaction.hpp"

namespace mckay {

enum class Decoration : std::uint8_t { u, v };

constexpr char to_char(Decoration d) noexcept { return d == Decoration::u ? 'u' : 'v'; }
constexpr Decoration flip(Decoration d) noexcept {
  return d == Decoration::u ? Decoration::v : Decoration::u;
}

struct Position {
  std::size_t row = 0;
  std::size_t col = 0;

  std::size_t degree() const noexcept { return row + col; }
  friend auto operator<=>(const Position&, const Position&) = default;
};

/// Which decoration the east arrow out of the root carries. Along any row or
/// column decorations alternate, and the south arrow out of a cell always
/// carries the opposite decoration to its east arrow.
enum class RootParity : std::uint8_t { kUFirst = 0, kVFirst = 1 };

struct Arrow {
  Element source;
  Element target;
  Decoration decoration;
};

struct SquareRelation {
  Element source;
  Element u_mid;  // source -> a^-1 source
  Element v_mid;  // source -> b^-1 source
  Element target;  // a^-2 source = b^-2 source
};

struct McKayQuiver {
  std::size_t vertex_count = 0;
  std::vector<Arrow> arrows;  // by source, u before v
  std::vector<SquareRelation> relations;  // one per vertex
};

McKayQuiver build_mckay_quiver(const CoactionPair& p);

/// Decoration of the east arrow leaving `pos` in a lattice rooted with `parity`.
Decoration east_decoration(Position pos, RootParity parity = RootParity::kUFirst) noexcept;

/// Group element at `pos` of the lattice presentation rooted at `start`.
/// Coordinates are reduced modulo the period 2m.
Element lattice_label(const CoactionPair& p, Element start, Position pos,
                      RootParity parity = RootParity::kUFirst);

/// Labels of the window [0, rows) x [0, cols), row-major.
std::vector<Element> label_window(const CoactionPair& p, Element start, std::size_t rows,
                                  std::size_t cols, RootParity parity = RootParity::kUFirst);

/// Parity at which `x` first occurs (row-major) in the toroidal presentation.
/// A window rooted there is a literal sub-window of the global lattice.
RootParity natural_parity(const CoactionPair& p, Element x);

struct ToroidalLattice {
  std::size_t period = 0;
  std::vector<Element> labels;  // period x period, row-major, labels[0] = identity

  Element at(std::size_t r, std::size_t c) const { return labels[(r % period) * period + c % period]; }
};

ToroidalLattice toroidal_grid(const CoactionPair& p);

enum class ExportFormat { kDot, kGrid, kJson };

/// "dot", "grid" or "json"; throws std::invalid_argument otherwise.
ExportFormat parse_export_format(std::string_view name);

/// Display names, one per element. Defaults to Group::name.
std::vector<std::string> default_names(const Group& g);

/// Reads "WORD LABEL" lines ('#' comments allowed) and overrides the names of
/// the elements those words evaluate to.
std::vector<std::string> read_label_map(const Group& g, std::string_view text);

/// Grid: one line per row, names separated by single spaces. `closed` repeats
/// the first row and column at the end (a (2m+1) x (2m+1) picture).
std::string export_grid(const ToroidalLattice& t, const std::vector<std::string>& names,
                        bool closed = false);
std::string export_lattice_json(const ToroidalLattice& t, const std::vector<std::string>& names,
                                bool closed = false);
std::string export_dot(const McKayQuiver& q, const std::vector<std::string>& names);

}  // namespace mckay
