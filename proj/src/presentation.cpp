#include "fusionlab/presentation.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fusionlab/errors.hpp"

namespace fusionlab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation run() {
    Presentation out;
    skip_space();
    expect_keyword("gens");
    while (true) {
      skip_space();
      if (at_end()) fail("missing 'rels:' section");
      if (looking_at_keyword("rels")) break;
      if (!is_ident_start(peek())) fail(std::string("unexpected character '") + peek() + "'");
      auto name = identifier();
      for (const auto& g : out.generators) {
        if (g == name) fail("generator '" + name + "' declared twice");
      }
      out.generators.push_back(std::move(name));
    }
    gens_ = &out.generators;
    expect_keyword("rels");
    skip_space();
    if (at_end()) return out;
    while (true) {
      out.relators.push_back(relation());
      skip_space();
      if (at_end()) break;
      if (peek() != ',') fail(std::string("expected ',' but found '") + peek() + "'");
      advance();
    }
    return out;
  }

 private:
  Word relation() {
    skip_space();
    auto line = line_;
    auto col = col_;
    Word lhs = word();
    skip_space();
    if (!at_end() && peek() == '=') {
      advance();
      Word rhs = word();
      for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) lhs.push_back(inverse_letter(*it));
    }
    if (lhs.empty()) throw ParseError("empty relator", line, col);
    return lhs;
  }

  Word word() {
    Word out;
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c == '*') {
        advance();
        continue;
      }
      Word factor;
      if (c == '(') {
        advance();
        factor = word();
        skip_space();
        if (at_end() || peek() != ')') fail("expected ')'");
        advance();
      } else if (is_ident_start(c)) {
        auto line = line_;
        auto col = col_;
        auto name = identifier();
        Letter letter = 0;
        bool found = false;
        for (std::size_t i = 0; i < gens_->size(); ++i) {
          if ((*gens_)[i] == name) {
            letter = static_cast<Letter>(2 * i);
            found = true;
          }
        }
        if (!found) throw ParseError("unknown generator '" + name + "'", line, col);
        factor.push_back(letter);
      } else {
        break;
      }
      long e = exponent();
      Word base = std::move(factor);
      if (e < 0) {
        Word inv;
        for (auto it = base.rbegin(); it != base.rend(); ++it) inv.push_back(inverse_letter(*it));
        base = std::move(inv);
        e = -e;
      }
      for (long i = 0; i < e; ++i) out.insert(out.end(), base.begin(), base.end());
    }
    return out;
  }

  long exponent() {
    if (at_end() || peek() != '^') return 1;
    advance();
    auto line = line_;
    auto col = col_;
    bool negative = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      advance();
    }
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("malformed exponent", line, col);
    }
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) throw ParseError("exponent too large", line, col);
      advance();
    }
    if (value == 0) throw ParseError("malformed exponent: zero", line, col);
    return negative ? -value : value;
  }

  std::string identifier() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += peek();
      advance();
    }
    return out;
  }

  static bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }

  bool looking_at_keyword(std::string_view kw) const {
    if (text_.substr(pos_, kw.size()) != kw) return false;
    auto rest = pos_ + kw.size();
    while (rest < text_.size() && (text_[rest] == ' ' || text_[rest] == '\t')) ++rest;
    return rest < text_.size() && text_[rest] == ':';
  }

  void expect_keyword(std::string_view kw) {
    if (!looking_at_keyword(kw)) fail("expected '" + std::string(kw) + ":'");
    for (std::size_t i = 0; i < kw.size(); ++i) advance();
    skip_space();
    advance();  // ':'
  }

  void skip_space() {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, col_); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  const std::vector<std::string>* gens_ = nullptr;
};

}  // namespace

std::string Presentation::to_string() const {
  std::string out = "gens:";
  for (const auto& g : generators) out += " " + g;
  out += "\nrels:";
  for (std::size_t r = 0; r < relators.size(); ++r) {
    out += r == 0 ? " " : ", ";
    const auto& w = relators[r];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i > 0) out += ' ';
      out += generators[w[i] / 2];
      if (w[i] & 1u) out += "^-1";
    }
  }
  out += '\n';
  return out;
}

Presentation parse_presentation(std::string_view text) { return Parser(text).run(); }

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read presentation file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_presentation(buffer.str());
}

Presentation gm_presentation(unsigned m) {
  if (m < 1 || m > 20) throw InvalidArgument("G_m needs 1 <= m <= 20");
  return parse_presentation("gens: a b\nrels: a^3, b^" + std::to_string(1u << m) + ", b^-1 a b a\n");
}

}  // namespace fusionlab
