#include <cctype>
#include <string>

#include "mckay/errors.hpp"
#include "mckay/group.hpp"

namespace mckay {

char to_char(Letter x) noexcept {
  switch (x) {
    case Letter::a: return 'a';
    case Letter::b: return 'b';
    case Letter::A: return 'A';
    case Letter::B: return 'B';
  }
  return '?';
}

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word power(const Word& w, std::size_t n) {
  Word out;
  out.reserve(w.size() * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

std::string spell(const Word& w) {
  std::string s;
  s.reserve(w.size());
  for (Letter x : w) s.push_back(to_char(x));
  return s;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation presentation() {
    Presentation p;
    p.source_text = std::string(text_);
    skip_space();
    while (!at_end()) {
      if (peek() == ';') {
        ++pos_;
        skip_space();
        continue;
      }
      statement(p.relators);
      skip_space();
      if (!at_end()) expect(';');
      skip_space();
    }
    if (p.relators.empty()) throw ParseError(pos_, "empty presentation");
    return p;
  }

  Word single_word() {
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty word");
    Word w = word();
    skip_space();
    if (!at_end()) throw unexpected();
    return w;
  }

 private:
  // w0 = w1 = ... = wk contributes the relators w_i w_{i+1}^-1.
  void statement(std::vector<Word>& out) {
    Word lhs = word();
    skip_space();
    if (at_end() || peek() != '=') throw ParseError(pos_, "expected '='");
    while (!at_end() && peek() == '=') {
      ++pos_;
      skip_space();
      Word rhs = word();
      Word rel = lhs;
      Word rhs_inv = inverse(rhs);
      rel.insert(rel.end(), rhs_inv.begin(), rhs_inv.end());
      out.push_back(std::move(rel));
      lhs = std::move(rhs);
      skip_space();
    }
  }

  Word word() {
    Word w;
    bool any = false;
    for (;;) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c == ';' || c == '=' || c == ')') break;
      Word f = factor();
      w.insert(w.end(), f.begin(), f.end());
      any = true;
    }
    if (!any) throw ParseError(pos_, at_end() ? "unexpected end of input, expected a word"
                                              : "expected a word");
    return w;
  }

  Word factor() {
    Word base = atom();
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      if (!at_end() && (peek() == '-' || peek() == '+'))
        throw ParseError(pos_, "exponent must be a positive integer");
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(pos_, "expected exponent");
      unsigned long long n = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
        n = n * 10 + static_cast<unsigned>(peek() - '0');
        if (n > 1000000) throw ParseError(start, "exponent too large");
        ++pos_;
      }
      if (n == 0) throw ParseError(start, "exponent must be a positive integer");
      return power(base, static_cast<std::size_t>(n));
    }
    return base;
  }

  Word atom() {
    std::size_t start = pos_;
    char c = peek();
    ++pos_;
    switch (c) {
      case 'a': return {Letter::a};
      case 'b': return {Letter::b};
      case 'A': return {Letter::A};
      case 'B': return {Letter::B};
      case '1': return {};
      case '(': {
        Word inner = word();
        skip_space();
        expect(')');
        return inner;
      }
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)))
      throw ParseError(start, std::string("unknown generator '") + c + "'");
    pos_ = start;
    throw unexpected();
  }

  ParseError unexpected() const {
    return ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
  }

  void expect(char c) {
    if (at_end()) throw ParseError(pos_, std::string("expected '") + c + "' at end of input");
    if (peek() != c) throw ParseError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).presentation(); }

Word parse_word(std::string_view text) { return Parser(text).single_word(); }

Presentation gamma_m_presentation(int m) {
  if (m < 2) throw std::invalid_argument("gamma_m_presentation: m must be at least 2");
  const std::string k = std::to_string(4 * m);
  const std::string ms = std::to_string(m);
  return parse_presentation("a^2 = b^2; a^" + k + " = 1; b^" + k + " = 1; (a b)^" + ms +
                            " = 1; (b a)^" + ms + " = 1");
}

}  // namespace mckay
