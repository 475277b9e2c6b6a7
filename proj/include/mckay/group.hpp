#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mckay {

/// Generator tokens. Order matters: it is the shortlex order a < b < A < B,
/// where A = a^-1 and B = b^-1.
enum class Letter : std::uint8_t { a = 0, b = 1, A = 2, B = 3 };

inline constexpr std::size_t kLetterCount = 4;
inline constexpr std::array<Letter, kLetterCount> kLetters{Letter::a, Letter::b, Letter::A,
                                                           Letter::B};

constexpr Letter inverse(Letter x) noexcept {
  return static_cast<Letter>((static_cast<std::uint8_t>(x) + 2) % 4);
}
constexpr std::size_t index_of(Letter x) noexcept { return static_cast<std::size_t>(x); }
char to_char(Letter x) noexcept;

/// A word in a, b and their inverses. Equality is literal; nothing is reduced.
using Word = std::vector<Letter>;

Word inverse(const Word& w);
Word power(const Word& w, std::size_t n);
/// Plain letter spelling, e.g. "aaBab". The empty word prints as "".
std::string spell(const Word& w);

struct Presentation {
  std::vector<Word> relators;  // each relator r stands for r = 1
  std::string source_text;
};

/// Parses `stmt (';' stmt)*` where a statement is a chain of equal words
/// (`w1 = w2`, `w = 1`, or `w1 = w2 = ... = 1`). Throws ParseError.
Presentation parse_presentation(std::string_view text);

/// Parses a single word in the presentation grammar; "1" denotes the empty word.
Word parse_word(std::string_view text);

/// The group <a,b | a^2=b^2, a^{4m}=b^{4m}=(ab)^m=(ba)^m=1>, m >= 2.
Presentation gamma_m_presentation(int m);

using Element = std::uint32_t;

/// A finite group on two generators, given by full multiplication tables.
/// Elements are numbered in shortlex order of their normal forms over
/// a < b < A < B, so element 0 is the identity. Immutable once built.
class Group {
 public:
  Group(std::size_t order, std::vector<Element> right_action, Element a, Element b);

  std::size_t order() const noexcept { return order_; }
  Element identity() const noexcept { return 0; }
  Element a() const noexcept { return a_; }
  Element b() const noexcept { return b_; }

  Element mul(Element x, Element y) const noexcept { return mul_[x * order_ + y]; }
  Element inv(Element x) const noexcept { return inv_[x]; }
  /// x * g for a generator token g.
  Element act(Element x, Letter g) const noexcept { return right_[x * kLetterCount + index_of(g)]; }
  Element evaluate(const Word& w) const noexcept;
  Element pow(Element x, std::size_t n) const noexcept;

  const Word& normal_form(Element x) const { return normal_forms_[x]; }
  /// Shortlex-least positive word with runs collapsed, e.g. "a2ba"; identity is "1".
  const std::string& name(Element x) const { return names_[x]; }
  std::span<const Element> mul_row(Element x) const {
    return {mul_.data() + x * order_, order_};
  }

  bool is_abelian() const noexcept;
  /// Exhaustive group-axiom check; O(n^3).
  bool check_axioms() const noexcept;

 private:
  std::size_t order_;
  Element a_;
  Element b_;
  std::vector<Element> right_;
  std::vector<Element> mul_;
  std::vector<Element> inv_;
  std::vector<Word> normal_forms_;
  std::vector<std::string> names_;
};

inline constexpr std::size_t kDefaultMaxCosets = 100000;

/// Todd-Coxeter enumeration of the cosets of the trivial subgroup.
/// Throws ResourceLimitError when more than `max_cosets` live cosets are needed.
Group enumerate_group(const Presentation& p, std::size_t max_cosets = kDefaultMaxCosets);

std::size_t element_order(const Group& g, Element x);

/// Closure of `gens` and the identity under multiplication, sorted ascending.
std::vector<Element> generated_subgroup(const Group& g, std::span<const Element> gens);

/// {"order", "a", "b", "mul", "inv", "names"} as JSON text; names are normal forms.
std::string group_to_json(const Group& g);

}  // namespace mckay
