#include "quadstab/words.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>

namespace quadstab {

Word free_reduce(std::vector<Syllable> raw) { return Word(std::move(raw)); }

Word::Word(std::vector<Syllable> raw) {
  for (auto& s : raw) {
    if (s.exp == 0) continue;
    if (!syls_.empty() && syls_.back().gen == s.gen) {
      syls_.back().exp += s.exp;
      if (syls_.back().exp == 0) syls_.pop_back();
    } else {
      syls_.push_back(std::move(s));
    }
  }
}

Word Word::generator(const std::string& name, long long exp) {
  return Word({{name, exp}});
}

long long Word::length() const {
  long long n = 0;
  for (const auto& s : syls_) n += std::llabs(s.exp);
  return n;
}

Word Word::inverse() const {
  std::vector<Syllable> rev;
  rev.reserve(syls_.size());
  for (auto it = syls_.rbegin(); it != syls_.rend(); ++it)
    rev.push_back({it->gen, -it->exp});
  Word w;
  w.syls_ = std::move(rev);  // still reduced
  return w;
}

Word Word::pow(long long n) const {
  if (n == 0) return Word();
  Word base = n > 0 ? *this : inverse();
  long long k = n > 0 ? n : -n;
  Word acc;
  for (long long i = 0; i < k; ++i) acc = acc * base;
  return acc;
}

Word operator*(const Word& a, const Word& b) {
  std::vector<Syllable> cat = a.syls_;
  cat.insert(cat.end(), b.syls_.begin(), b.syls_.end());
  return Word(std::move(cat));
}

bool Presentation::has_generator(const std::string& name) const {
  return std::find(generators.begin(), generators.end(), name) !=
         generators.end();
}

namespace {

// Minimal tokenizer with 1-based line/column tracking.
struct Lexer {
  const std::string& text;
  size_t pos = 0;
  int line = 1, col = 1;

  explicit Lexer(const std::string& t) : text(t) {}

  void advance() {
    if (pos < text.size()) {
      if (text[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++pos;
    }
  }

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      advance();
  }

  bool eof() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw ParseError(msg, line, col);
  }

  bool try_consume(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!try_consume(c)) fail(std::string("expected '") + c + "'");
  }

  bool name_ahead() {
    return std::isalpha(static_cast<unsigned char>(peek()));
  }

  std::string name() {
    if (!name_ahead()) fail("expected a generator name");
    std::string out;
    while (pos < text.size() &&
           std::isalnum(static_cast<unsigned char>(text[pos]))) {
      out += text[pos];
      advance();
    }
    return out;
  }

  long long integer() {
    skip_ws();
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      advance();
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected an integer");
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      advance();
    }
    return neg ? -v : v;
  }

  std::string keyword() {  // lowercase word such as gens/rels
    return name();
  }
};

Word parse_word_expr(Lexer& lx);

Word parse_term(Lexer& lx) {
  Word base;
  char c = lx.peek();
  if (c == '(') {
    lx.advance();
    base = parse_word_expr(lx);
    lx.expect(')');
  } else if (c == '1') {
    lx.advance();
    base = Word();
  } else if (std::isalpha(static_cast<unsigned char>(c))) {
    base = Word::generator(lx.name());
  } else {
    lx.fail("expected a generator, '(' or '1'");
  }
  if (lx.try_consume('^')) {
    long long e = lx.integer();
    base = base.pow(e);
  }
  return base;
}

Word parse_word_expr(Lexer& lx) {
  Word w = parse_term(lx);
  while (lx.try_consume('*')) w = w * parse_term(lx);
  return w;
}

}  // namespace

Word parse_word(const std::string& text) {
  Lexer lx(text);
  Word w = parse_word_expr(lx);
  if (!lx.eof()) lx.fail("trailing input after word");
  return w;
}

Presentation parse_presentation(const std::string& text) {
  Lexer lx(text);
  if (lx.keyword() != "gens") lx.fail("expected 'gens'");
  Presentation p;
  std::set<std::string> seen;
  while (lx.name_ahead()) {
    std::string g = lx.name();
    if (g == "rels") lx.fail("expected ';' before 'rels'");
    if (!seen.insert(g).second) lx.fail("duplicate generator '" + g + "'");
    p.generators.push_back(g);
  }
  lx.expect(';');
  if (lx.keyword() != "rels") lx.fail("expected 'rels'");
  if (!lx.try_consume(';')) {
    do {
      p.relators.push_back(parse_word_expr(lx));
    } while (lx.try_consume(','));
    lx.expect(';');
  }
  if (!lx.eof()) lx.fail("trailing input after presentation");
  for (const auto& r : p.relators)
    for (const auto& s : r.syllables())
      if (!seen.count(s.gen))
        throw UnknownGenerator("relator uses undeclared generator '" + s.gen +
                               "'");
  return p;
}

std::string serialize_word(const Word& w) {
  if (w.is_identity()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& s : w.syllables()) {
    if (!first) os << '*';
    first = false;
    os << s.gen;
    if (s.exp != 1) os << '^' << s.exp;
  }
  return os.str();
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gens";
  for (const auto& g : p.generators) os << ' ' << g;
  os << ";\nrels";
  bool first = true;
  for (const auto& r : p.relators) {
    os << (first ? " " : ",\n     ") << serialize_word(r);
    first = false;
  }
  os << ";\n";
  return os.str();
}

Word substitute(const Word& w, const std::map<std::string, Word>& images) {
  Word out;
  for (const auto& s : w.syllables()) {
    auto it = images.find(s.gen);
    if (it == images.end())
      throw UnknownGenerator("no image for generator '" + s.gen + "'");
    out = out * it->second.pow(s.exp);
  }
  return out;
}

}  // namespace quadstab
