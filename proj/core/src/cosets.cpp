#include "quadstab/cosets.hpp"

#include <deque>
#include <map>
#include <sstream>
#include <stdexcept>

namespace quadstab {

namespace {

// Letters: 0..k-1 are the generators, k..2k-1 their inverses.
std::vector<int> word_letters(const Word& w,
                              const std::map<std::string, int>& index, int k) {
  std::vector<int> out;
  for (const auto& s : w.syllables()) {
    auto it = index.find(s.gen);
    if (it == index.end()) throw UnknownGenerator(s.gen);
    int letter = s.exp > 0 ? it->second : it->second + k;
    long long reps = s.exp > 0 ? s.exp : -s.exp;
    for (long long r = 0; r < reps; ++r) out.push_back(letter);
  }
  return out;
}

std::map<std::string, int> generator_index(const std::vector<std::string>& gens) {
  std::map<std::string, int> index;
  for (size_t i = 0; i < gens.size(); ++i) index[gens[i]] = static_cast<int>(i);
  return index;
}

Word letter_syllable(const std::vector<std::string>& gens, int letter) {
  int k = static_cast<int>(gens.size());
  return letter < k ? Word::generator(gens[letter])
                    : Word::generator(gens[letter - k], -1);
}

// Tree transversal over a complete table, exploring letters in order
// (generators then inverses). BFS gives shortest-lex words; DFS is the
// alternative used to test transversal independence.
std::vector<Word> table_transversal(const std::vector<std::vector<int>>& trans,
                                    const std::vector<std::string>& gens,
                                    Traversal kind) {
  int n = static_cast<int>(trans.size());
  int width = n == 0 ? 0 : static_cast<int>(trans[0].size());
  std::vector<Word> words(n);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  if (kind == Traversal::BFS) {
    std::vector<int> queue{0};
    for (size_t h = 0; h < queue.size(); ++h) {
      int c = queue[h];
      for (int l = 0; l < width; ++l) {
        int t = trans[c][l];
        if (!seen[t]) {
          seen[t] = 1;
          words[t] = words[c] * letter_syllable(gens, l);
          queue.push_back(t);
        }
      }
    }
  } else {
    std::vector<std::pair<int, int>> stack{{0, 0}};
    while (!stack.empty()) {
      auto& [c, l] = stack.back();
      if (l == width) {
        stack.pop_back();
        continue;
      }
      int t = trans[c][l];
      ++l;
      if (!seen[t]) {
        seen[t] = 1;
        words[t] = words[c] * letter_syllable(gens, l - 1);
        stack.emplace_back(t, 0);
      }
    }
  }
  for (int c = 0; c < n; ++c)
    if (!seen[c]) throw std::logic_error("coset table is not transitive");
  return words;
}

int trace(const CosetTable& table, const std::vector<int>& letters, int start) {
  int c = start;
  for (int l : letters) c = table.transitions[c][l];
  return c;
}

// HLT enumerator state. Rows are never reused; dead cosets keep their ids and
// the union-find maps every class to its minimum id (so coset 0 never dies).
struct Enumerator {
  int k;
  long long max_cosets;
  std::vector<std::vector<int>> tab;
  std::vector<int> parent;
  long long defined = 0;

  explicit Enumerator(int k_, long long budget) : k(k_), max_cosets(budget) {}

  int inv(int l) const { return l < k ? l + k : l - k; }

  int find(int c) {
    while (parent[c] != c) {
      parent[c] = parent[parent[c]];
      c = parent[c];
    }
    return c;
  }

  int define_coset() {
    if (defined >= max_cosets) throw CosetLimitExceeded(max_cosets);
    ++defined;
    tab.emplace_back(2 * k, -1);
    parent.push_back(static_cast<int>(parent.size()));
    return static_cast<int>(tab.size()) - 1;
  }

  // Rep-resolved read with lazy path update.
  int get(int c, int l) {
    int v = tab[c][l];
    if (v < 0) return -1;
    v = find(v);
    tab[c][l] = v;
    return v;
  }

  void set(int c, int l, int d) {
    tab[c][l] = d;
    tab[d][inv(l)] = c;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    queue.push_back(b);
  }

  // Transfers each dead coset's row to its representative, queueing the
  // secondary coincidences that conflicting entries produce.
  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int g = queue.front();
      queue.pop_front();
      for (int x = 0; x < 2 * k; ++x) {
        int d = tab[g][x];
        if (d < 0) continue;
        tab[g][x] = -1;
        tab[d][inv(x)] = -1;  // the mirror entry, possibly in a dead row
        int mu = find(g), nu = find(d);
        int mx = get(mu, x);
        if (mx >= 0) {
          merge(nu, mx, queue);
        } else {
          int nx = get(nu, inv(x));
          if (nx >= 0)
            merge(mu, nx, queue);
          else
            set(mu, x, nu);
        }
      }
    }
  }

  // Two-pointer relator scan from alpha, defining new cosets to bridge gaps
  // wider than one letter and closing single-letter gaps as deductions.
  void scan_and_fill(int alpha, const std::vector<int>& w) {
    if (w.empty()) return;
    int i = 0, j = static_cast<int>(w.size());
    int f = alpha, b = alpha;
    for (;;) {
      while (i < j) {
        int t = get(f, w[i]);
        if (t < 0) break;
        f = t;
        ++i;
      }
      if (i == j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j > i) {
        int t = get(b, inv(w[j - 1]));
        if (t < 0) break;
        b = t;
        --j;
      }
      if (j == i) {
        if (f != b) coincidence(f, b);
        return;
      }
      if (j == i + 1) {
        set(f, w[i], b);
        return;
      }
      int d = define_coset();
      set(f, w[i], d);
      f = d;
      ++i;
    }
  }
};

CosetTable assemble_table(std::vector<std::string> generators,
                          std::vector<std::vector<int>> transitions,
                          std::vector<Word> subgroup_gens, Traversal kind) {
  CosetTable table;
  table.generators = std::move(generators);
  table.n_cosets = static_cast<int>(transitions.size());
  table.transversal = table_transversal(transitions, table.generators, kind);
  table.transitions = std::move(transitions);
  table.subgroup_generators = std::move(subgroup_gens);
  return table;
}

}  // namespace

CosetTable coset_table_from_action(const PermAction& action, int basepoint,
                                   Traversal transversal_tree) {
  if (basepoint < 0 || basepoint >= action.degree())
    throw InvalidArgument("basepoint outside the permutation domain");
  const auto& gens = action.presentation().generators;
  int k = static_cast<int>(gens.size());
  Orbit orb = orbit(action, basepoint);
  int n = static_cast<int>(orb.points.size());
  std::vector<std::vector<int>> trans(n, std::vector<int>(2 * k, -1));
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < k; ++g) {
      const Permutation& p = action.image(gens[g]);
      trans[i][g] = orb.position_of[p.apply(orb.points[i])];
      trans[i][k + g] = orb.position_of[p.inverse().apply(orb.points[i])];
    }
  }
  return assemble_table(gens, std::move(trans),
                        schreier_stabilizer_generators(action, basepoint),
                        transversal_tree);
}

CosetTable todd_coxeter(const Presentation& pres,
                        const std::vector<Word>& subgroup_gens,
                        long long max_cosets, Traversal transversal_tree) {
  if (max_cosets < 1) throw InvalidArgument("max_cosets must be at least 1");
  int k = static_cast<int>(pres.generators.size());
  auto index = generator_index(pres.generators);
  std::vector<std::vector<int>> relators, subgroups;
  for (const Word& r : pres.relators) relators.push_back(word_letters(r, index, k));
  for (const Word& s : subgroup_gens) subgroups.push_back(word_letters(s, index, k));

  Enumerator en(k, max_cosets);
  en.define_coset();
  for (const auto& s : subgroups) en.scan_and_fill(0, s);
  for (int c = 0; c < static_cast<int>(en.tab.size()); ++c) {
    if (en.find(c) != c) continue;
    for (const auto& r : relators) {
      en.scan_and_fill(c, r);
      if (en.find(c) != c) break;
    }
    if (en.find(c) != c) continue;
    for (int l = 0; l < 2 * k; ++l) {
      if (en.get(c, l) < 0) {
        int d = en.define_coset();
        en.set(c, l, d);
      }
    }
  }

  // BFS renumbering from coset 0 over live representatives.
  std::vector<int> newid(en.tab.size(), -1);
  std::vector<int> order{0};
  newid[0] = 0;
  for (size_t h = 0; h < order.size(); ++h) {
    for (int l = 0; l < 2 * k; ++l) {
      int t = en.get(order[h], l);
      if (t < 0) throw std::logic_error("incomplete table after enumeration");
      if (newid[t] < 0) {
        newid[t] = static_cast<int>(order.size());
        order.push_back(t);
      }
    }
  }
  for (int c = 0; c < static_cast<int>(en.tab.size()); ++c)
    if (en.find(c) == c && newid[c] < 0)
      throw std::logic_error("coset table is not transitive");

  int n = static_cast<int>(order.size());
  std::vector<std::vector<int>> trans(n, std::vector<int>(2 * k));
  for (int i = 0; i < n; ++i)
    for (int l = 0; l < 2 * k; ++l) trans[i][l] = newid[en.get(order[i], l)];

  CosetTable table = assemble_table(pres.generators, std::move(trans),
                                    subgroup_gens, transversal_tree);

  // Closure sweep: every relator at every coset, every subgroup word at 0.
  for (int c = 0; c < table.n_cosets; ++c)
    for (const auto& r : relators)
      if (trace(table, r, c) != c)
        throw std::logic_error("relator fails to close after enumeration");
  for (const auto& s : subgroups)
    if (trace(table, s, 0) != 0)
      throw std::logic_error("subgroup generator fails to close at coset 0");
  return table;
}

namespace {

struct SchreierData {
  // def[c][g] = t_c * g * t_{c.g}^-1, trivial[c][g] = that word is empty
  std::vector<std::vector<Word>> def;
  std::vector<std::vector<char>> trivial;
};

SchreierData schreier_data(const CosetTable& table) {
  int k = table.n_generators();
  SchreierData d;
  d.def.resize(table.n_cosets);
  d.trivial.resize(table.n_cosets);
  for (int c = 0; c < table.n_cosets; ++c) {
    d.def[c].resize(k);
    d.trivial[c].resize(k);
    for (int g = 0; g < k; ++g) {
      Word w = table.transversal[c] * Word::generator(table.generators[g]) *
               table.transversal[table.transitions[c][g]].inverse();
      d.trivial[c][g] = w.is_identity();
      d.def[c][g] = std::move(w);
    }
  }
  return d;
}

std::string schreier_name(const CosetTable& table, int coset, int gen) {
  return "x" + std::to_string(coset) + table.generators[gen];
}

// Reidemeister rewriting: trace w from `start`, emitting the nontrivial
// Schreier generator of each step. Valid because the transversal comes from a
// tree, so it is prefix-closed.
Word rewrite_from(const CosetTable& table, const SchreierData& data,
                  const Word& w, int start, int* endpoint) {
  int k = table.n_generators();
  auto index = generator_index(table.generators);
  std::vector<Syllable> out;
  int c = start;
  for (int l : word_letters(w, index, k)) {
    if (l < k) {
      if (!data.trivial[c][l]) out.push_back({schreier_name(table, c, l), 1});
      c = table.transitions[c][l];
    } else {
      int g = l - k;
      int back = table.transitions[c][l];
      if (!data.trivial[back][g])
        out.push_back({schreier_name(table, back, g), -1});
      c = back;
    }
  }
  *endpoint = c;
  return Word(std::move(out));
}

}  // namespace

std::vector<std::pair<std::string, Word>> schreier_generator_definitions(
    const CosetTable& table) {
  SchreierData data = schreier_data(table);
  std::vector<std::pair<std::string, Word>> out;
  for (int c = 0; c < table.n_cosets; ++c)
    for (int g = 0; g < table.n_generators(); ++g)
      if (!data.trivial[c][g])
        out.emplace_back(schreier_name(table, c, g), data.def[c][g]);
  return out;
}

Presentation reidemeister_schreier(const Presentation& pres,
                                   const CosetTable& table) {
  if (pres.generators != table.generators)
    throw InvalidArgument("presentation and table disagree on generators");
  SchreierData data = schreier_data(table);
  Presentation sub;
  for (const auto& [name, def] : schreier_generator_definitions(table))
    sub.generators.push_back(name);
  for (const Word& r : pres.relators) {
    for (int c = 0; c < table.n_cosets; ++c) {
      int end = -1;
      Word rewritten = rewrite_from(table, data, r, c, &end);
      if (end != c) throw InvalidArgument("relator does not close: table is not complete for this presentation");
      sub.relators.push_back(std::move(rewritten));
    }
  }
  return sub;
}

Word rewrite_subgroup_word(const CosetTable& table, const Word& w) {
  SchreierData data = schreier_data(table);
  int end = -1;
  Word out = rewrite_from(table, data, w, 0, &end);
  if (end != 0)
    throw NotInSubgroup("word does not lie in the subgroup: " + serialize_word(w));
  return out;
}

std::string serialize_table(const CosetTable& table) {
  std::ostringstream os;
  for (int c = 0; c < table.n_cosets; ++c) {
    for (size_t l = 0; l < table.transitions[c].size(); ++l) {
      if (l) os << ' ';
      os << table.transitions[c][l];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace quadstab
