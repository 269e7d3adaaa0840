#pragma once

// Finitely presented groups. Text format:
//
//   # comment
//   gens: a b
//   rels: a^3, b^8, b^-1 a b = a^-1,
//         (a b)^2
//
// A word is a sequence of factors, each a generator name or a parenthesized
// word, optionally raised to a nonzero integer power. "u = v" is stored as
// the relator u v^-1.

#include <string>
#include <string_view>
#include <vector>

namespace fusionlab {

// Letter 2i is generator i, letter 2i+1 its inverse.
using Letter = unsigned;
using Word = std::vector<Letter>;

inline Letter inverse_letter(Letter x) { return x ^ 1u; }

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  // Relators written back out with the same grammar.
  std::string to_string() const;
};

// Throws ParseError (1-based line and column) on unknown generators,
// malformed or zero exponents, empty relators and stray characters.
Presentation parse_presentation(std::string_view text);
Presentation load_presentation(const std::string& path);

// <a, b | a^3, b^(2^m), b^-1 a b a>, of order 3 * 2^m.
Presentation gm_presentation(unsigned m);

}  // namespace fusionlab
