#include "quadstab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "quadstab/errors.hpp"

namespace quadstab {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
      throw InvalidArgument("permutation images are not a bijection");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree())
    throw InvalidArgument("composing permutations of different degrees");
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[i] = next.img_[img_[i]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(degree());
  for (int i = 0; i < degree(); ++i) img[img_[i]] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::power(long long e) const {
  Permutation base = e >= 0 ? *this : inverse();
  long long k = e >= 0 ? e : -e;
  Permutation acc = identity(degree());
  while (k > 0) {
    if (k & 1) acc = acc.then(base);
    base = base.then(base);
    k >>= 1;
  }
  return acc;
}

Permutation parse_cycles(const std::string& text, int degree) {
  std::vector<int> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = i;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw ParseError("expected '(' in cycle notation", 1,
                       static_cast<int>(pos) + 1);
    ++pos;
    std::vector<int> cyc;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected a point in cycle notation", 1,
                         static_cast<int>(pos) + 1);
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      // 1-based in text
      if (v < 1 || v > degree)
        throw InvalidArgument("cycle point out of range");
      cyc.push_back(v - 1);
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        skip_ws();
      }
    }
    if (pos >= text.size())
      throw ParseError("unterminated cycle", 1, static_cast<int>(pos) + 1);
    ++pos;  // ')'
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i], to = cyc[(i + 1) % cyc.size()];
      if (!cyc.empty() && cyc.size() > 1) img[from] = to;
    }
    skip_ws();
  }
  return Permutation(std::move(img));
}

std::string print_cycles(const Permutation& p) {
  std::ostringstream os;
  std::vector<char> done(p.degree(), 0);
  bool any = false;
  for (int s = 0; s < p.degree(); ++s) {
    if (done[s] || p.apply(s) == s) continue;
    any = true;
    os << '(';
    int c = s;
    bool first = true;
    do {
      if (!first) os << ',';
      first = false;
      os << c + 1;
      done[c] = 1;
      c = p.apply(c);
    } while (c != s);
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

PermAction::PermAction(Presentation pres, std::map<std::string, Permutation> images)
    : pres_(std::move(pres)), images_(std::move(images)), degree_(0) {
  if (pres_.generators.empty())
    throw InvalidArgument("action needs at least one generator");
  for (const auto& g : pres_.generators) {
    auto it = images_.find(g);
    if (it == images_.end())
      throw UnknownGenerator("no image for generator '" + g + "'");
    if (degree_ == 0)
      degree_ = it->second.degree();
    else if (it->second.degree() != degree_)
      throw InvalidArgument("generator images have mixed degrees");
  }
  for (const auto& r : pres_.relators)
    if (!evaluate_word(*this, r).is_identity())
      throw InvalidArgument("relator '" + serialize_word(r) +
                            "' does not act as the identity");
}

const Permutation& PermAction::image(const std::string& gen) const {
  auto it = images_.find(gen);
  if (it == images_.end())
    throw UnknownGenerator("unknown generator '" + gen + "'");
  return it->second;
}

Permutation evaluate_word(const PermAction& action, const Word& w) {
  Permutation acc = Permutation::identity(action.degree());
  for (const auto& s : w.syllables())
    acc = acc.then(action.image(s.gen).power(s.exp));
  return acc;
}

namespace {

// Letters are 0..k-1 for generators, k..2k-1 for their inverses.
Permutation letter_image(const PermAction& a, int letter) {
  int k = static_cast<int>(a.presentation().generators.size());
  const std::string& g = a.presentation().generators[letter % k];
  const Permutation& p = a.image(g);
  return letter < k ? p : p.inverse();
}

Word letter_word(const PermAction& a, int letter) {
  int k = static_cast<int>(a.presentation().generators.size());
  const std::string& g = a.presentation().generators[letter % k];
  return Word::generator(g, letter < k ? 1 : -1);
}

}  // namespace

Orbit orbit(const PermAction& action, int basepoint, Traversal traversal) {
  if (basepoint < 0 || basepoint >= action.degree())
    throw InvalidArgument("basepoint out of range");
  int k = static_cast<int>(action.presentation().generators.size());
  std::vector<Permutation> letters;
  letters.reserve(2 * k);
  for (int l = 0; l < 2 * k; ++l) letters.push_back(letter_image(action, l));

  Orbit o;
  o.basepoint = basepoint;
  o.position_of.assign(action.degree(), -1);
  o.position_of[basepoint] = 0;
  o.points.push_back(basepoint);
  o.transversal.push_back(Word());

  if (traversal == Traversal::BFS) {
    for (size_t head = 0; head < o.points.size(); ++head) {
      int p = o.points[head];
      for (int l = 0; l < 2 * k; ++l) {
        int q = letters[l].apply(p);
        if (o.position_of[q] == -1) {
          o.position_of[q] = static_cast<int>(o.points.size());
          o.points.push_back(q);
          o.transversal.push_back(o.transversal[head] * letter_word(action, l));
        }
      }
    }
  } else {
    // Depth-first: explore each newly discovered point immediately.
    std::vector<std::pair<int, int>> stack;  // (position, next letter)
    stack.push_back({0, 0});
    while (!stack.empty()) {
      auto& [pos, l] = stack.back();
      if (l == 2 * k) {
        stack.pop_back();
        continue;
      }
      int letter = l++;
      int q = letters[letter].apply(o.points[pos]);
      if (o.position_of[q] == -1) {
        o.position_of[q] = static_cast<int>(o.points.size());
        o.points.push_back(q);
        o.transversal.push_back(o.transversal[pos] * letter_word(action, letter));
        stack.push_back({static_cast<int>(o.points.size()) - 1, 0});
      }
    }
  }
  return o;
}

std::vector<Word> schreier_stabilizer_generators(const PermAction& action,
                                                 int basepoint,
                                                 Traversal traversal) {
  Orbit o = orbit(action, basepoint, traversal);
  std::vector<Word> out;
  for (size_t i = 0; i < o.points.size(); ++i) {
    for (const auto& g : action.presentation().generators) {
      int q = action.image(g).apply(o.points[i]);
      Word w = o.transversal[i] * Word::generator(g) *
               o.transversal[o.position_of[q]].inverse();
      if (!w.is_identity()) out.push_back(std::move(w));
    }
  }
  return out;
}

}  // namespace quadstab
