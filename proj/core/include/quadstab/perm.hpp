#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadstab/words.hpp"

namespace quadstab {

// A permutation of {0,...,n-1}. Points act on the right: p^(uv) = (p^u)^v.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int apply(int p) const { return img_.at(p); }
  bool is_identity() const;

  // this, then next (right-action order): result[p] = next[this[p]].
  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  Permutation power(long long e) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> img_;
};

// Cycle notation, 1-based in text ("(1,7)(2,9)(4,8)"); identity is "()".
Permutation parse_cycles(const std::string& text, int degree);
std::string print_cycles(const Permutation& p);

// A homomorphism from a presented group into Sym(degree), given by generator
// images. Construction verifies equal degrees, an image for every generator,
// and that every relator evaluates to the identity.
class PermAction {
 public:
  PermAction(Presentation pres, std::map<std::string, Permutation> images);

  const Presentation& presentation() const { return pres_; }
  const Permutation& image(const std::string& gen) const;
  int degree() const { return degree_; }

 private:
  Presentation pres_;
  std::map<std::string, Permutation> images_;
  int degree_;
};

Permutation evaluate_word(const PermAction& action, const Word& w);

enum class Traversal { BFS, DFS };

// Orbit of a basepoint with its Schreier tree. `points` is discovery order
// (points[0] == basepoint); `transversal[i]` is the tree word taking the
// basepoint to points[i]. BFS letter order is generators then inverses, so
// BFS transversal words are the shortest, lexicographically least ones.
struct Orbit {
  int basepoint = 0;
  std::vector<int> points;
  std::vector<Word> transversal;
  // position_of[p] = index into points, or -1 if p is outside the orbit
  std::vector<int> position_of;
};

Orbit orbit(const PermAction& action, int basepoint,
            Traversal traversal = Traversal::BFS);

// Schreier's lemma over the BFS transversal: words t_p * g * t_{p^g}^-1 for
// every orbit point p (discovery order) and generator g, with identity words
// dropped. Every output fixes the basepoint; together they generate the full
// preimage of the point stabilizer.
std::vector<Word> schreier_stabilizer_generators(const PermAction& action,
                                                 int basepoint,
                                                 Traversal traversal = Traversal::BFS);

}  // namespace quadstab
