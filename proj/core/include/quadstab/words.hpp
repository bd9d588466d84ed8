#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "quadstab/errors.hpp"

namespace quadstab {

// One run of a word: generator name with a nonzero exponent.
struct Syllable {
  std::string gen;
  long long exp = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A freely reduced word. The empty word is the identity. Construction from raw
// syllables always reduces, so the invariant holds by representation.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Syllable> raw);

  static Word generator(const std::string& name, long long exp = 1);

  const std::vector<Syllable>& syllables() const { return syls_; }
  bool is_identity() const { return syls_.empty(); }
  // Number of letters, counting multiplicity: sum of |exp|.
  long long length() const;

  Word inverse() const;
  Word pow(long long n) const;

  friend Word operator*(const Word& a, const Word& b);

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Syllable> syls_;
};

Word free_reduce(std::vector<Syllable> raw);

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  bool has_generator(const std::string& name) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

// Word grammar: word := term {"*" term}; term := atom ["^" int];
// atom := name | "(" word ")" | "1". Whitespace insignificant.
Word parse_word(const std::string& text);

// Presentation file: `gens <name> ... ; rels <word> , <word> ... ;`
// (the rels list may be empty). Throws ParseError with 1-based line/column,
// or UnknownGenerator if a relator uses an undeclared name.
Presentation parse_presentation(const std::string& text);

std::string serialize_word(const Word& w);  // identity prints as "1"
std::string serialize_presentation(const Presentation& p);

// Applies a homomorphism given on generators; the result is freely reduced.
// Throws UnknownGenerator if some generator of `w` has no image.
Word substitute(const Word& w, const std::map<std::string, Word>& images);

}  // namespace quadstab
