#include "twistkit/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace twistkit {

SubgroupSpec SubgroupSpec::generated_by(std::vector<Word> generators) {
  SubgroupSpec s;
  s.generators_ = std::move(generators);
  return s;
}

SubgroupSpec SubgroupSpec::parity_kernel(std::vector<std::string> odd_generators) {
  SubgroupSpec s;
  s.parity_ = true;
  s.odd_ = std::move(odd_generators);
  return s;
}

int CosetTable::act(int coset, int32_t letter) const {
  const int slot = 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
  return rows_.at(coset - 1).at(slot) + 1;
}

int CosetTable::act_word(int coset, const Word& w) const {
  int c = coset;
  for (int32_t x : w.letters()) c = act(c, x);
  return c;
}

void CosetTable::set_transversal(int coset, const Word& w) {
  if (act_word(1, w) != coset)
    throw Error("transversal word does not reach coset " + std::to_string(coset));
  transversal_.at(coset - 1) = w;
}

bool CosetTable::consistent_with(const Presentation& p) const {
  if (!complete()) return false;
  for (const auto& r : p.relators())
    for (int c = 1; c <= index(); ++c)
      if (act_word(c, r.word) != c) return false;
  return true;
}

namespace {

constexpr int32_t kUndef = -1;

struct Enumerator {
  const Presentation& pres;
  int nslots;
  int64_t cap;
  std::vector<std::vector<int32_t>> table;
  std::vector<int32_t> rep_;
  std::deque<int32_t> merge_queue;
  int64_t live = 0;
  int64_t total = 0;
  bool overflowed = false;

  explicit Enumerator(const Presentation& p, int64_t max_cosets)
      : pres(p), nslots(2 * p.alphabet()->size()), cap(max_cosets) {}

  static int inv(int slot) { return slot ^ 1; }
  static int slot_of(int32_t letter) {
    return 2 * (std::abs(letter) - 1) + (letter < 0 ? 1 : 0);
  }

  int32_t rep(int32_t c) {
    while (rep_[c] != c) {
      rep_[c] = rep_[rep_[c]];
      c = rep_[c];
    }
    return c;
  }

  bool dead(int32_t c) { return rep_[c] != c; }

  int32_t define() {
    table.emplace_back(nslots, kUndef);
    rep_.push_back(static_cast<int32_t>(rep_.size()));
    ++live;
    ++total;
    if (total > cap) overflowed = true;
    return static_cast<int32_t>(table.size()) - 1;
  }

  void merge(int32_t a, int32_t b) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    rep_[b] = a;
    --live;
    merge_queue.push_back(b);
  }

  void process_coincidences() {
    while (!merge_queue.empty()) {
      int32_t dead_c = merge_queue.front();
      merge_queue.pop_front();
      for (int s = 0; s < nslots; ++s) {
        int32_t d = table[dead_c][s];
        if (d == kUndef) continue;
        table[dead_c][s] = kUndef;
        if (table[d][inv(s)] == dead_c) table[d][inv(s)] = kUndef;
        int32_t mu = rep(dead_c);
        int32_t nu = rep(d);
        if (table[mu][s] != kUndef) {
          merge(table[mu][s], nu);
        } else if (table[nu][inv(s)] != kUndef) {
          merge(table[nu][inv(s)], mu);
        } else {
          table[mu][s] = nu;
          table[nu][inv(s)] = mu;
        }
      }
    }
  }

  void set_edge(int32_t a, int s, int32_t b) {
    if (table[a][s] != kUndef && table[a][s] != b) {
      merge(table[a][s], b);
    } else {
      table[a][s] = b;
    }
    if (table[b][inv(s)] != kUndef && table[b][inv(s)] != a) {
      merge(table[b][inv(s)], a);
    } else {
      table[b][inv(s)] = a;
    }
    process_coincidences();
  }

  // Scans w from alpha and fills gaps so that alpha * w = alpha.
  void scan_and_fill(int32_t alpha, const std::vector<int32_t>& w) {
    if (w.empty()) return;
    for (;;) {
      alpha = rep(alpha);
      int32_t f = alpha;
      size_t i = 0;
      while (i < w.size()) {
        int32_t next = table[f][slot_of(w[i])];
        if (next == kUndef) break;
        f = rep(next);
        ++i;
      }
      if (i == w.size()) {
        if (f != alpha) {
          merge(f, alpha);
          process_coincidences();
        }
        return;
      }
      int32_t b = alpha;
      size_t j = w.size();
      while (j > i) {
        int32_t next = table[b][slot_of(-w[j - 1])];
        if (next == kUndef) break;
        b = rep(next);
        --j;
      }
      if (j == i) {
        merge(f, b);
        process_coincidences();
        return;
      }
      if (j == i + 1) {
        set_edge(f, slot_of(w[i]), b);
        return;
      }
      int32_t fresh = define();
      if (overflowed) return;
      set_edge(f, slot_of(w[i]), fresh);
      // rescan from the (possibly merged) start coset
    }
  }
};

std::vector<Word> parity_subgroup_words(const Presentation& p,
                                        const std::vector<std::string>& odd) {
  const AlphabetPtr& alpha = p.alphabet();
  std::set<int> odd_idx;
  for (const auto& name : odd) {
    int idx = alpha->index_of(name);
    if (idx < 0)
      throw InvalidSubgroupSpecError("parity map names unknown generator '" + name + "'");
    odd_idx.insert(idx);
  }
  if (odd_idx.empty())
    throw InvalidSubgroupSpecError("parity map must send at least one generator to 1");
  const int y = *odd_idx.begin();
  auto letters = [&](std::vector<int32_t> v) { return Word::from_letters(alpha, std::move(v)); };
  std::vector<Word> words;
  for (int i = 0; i < alpha->size(); ++i) {
    int32_t xi = i + 1, yi = y + 1;
    if (!odd_idx.count(i)) {
      words.push_back(letters({xi}));
      words.push_back(letters({yi, xi, -yi}));
    } else if (i != y) {
      words.push_back(letters({xi, -yi}));
      words.push_back(letters({yi, xi}));
    }
  }
  words.push_back(letters({static_cast<int32_t>(y + 1), static_cast<int32_t>(y + 1)}));
  return words;
}

}  // namespace

CosetTable todd_coxeter(const Presentation& p, const SubgroupSpec& subgroup,
                        int64_t max_cosets) {
  if (!p.alphabet() || p.alphabet()->size() == 0)
    throw Error("todd_coxeter: presentation has no generators");
  std::vector<Word> subgens;
  int forced_odd = -1;
  if (subgroup.is_parity()) {
    subgens = parity_subgroup_words(p, subgroup.odd_generators());
    forced_odd = p.alphabet()->index_of(subgroup.odd_generators().front());
  } else {
    subgens = subgroup.generators();
    for (const auto& w : subgens)
      if (w.alphabet() && *w.alphabet() != *p.alphabet())
        throw InvalidSubgroupSpecError("subgroup generator not over the presentation alphabet");
  }

  Enumerator en(p, max_cosets);
  en.define();  // coset of the subgroup itself
  if (forced_odd >= 0) {
    // Forced transversal {1, y}: the first definition is 1 * y.
    int32_t c = en.define();
    en.set_edge(0, Enumerator::slot_of(forced_odd + 1), c);
  }
  for (const auto& w : subgens) {
    en.scan_and_fill(en.rep(0), w.letters());
    if (en.overflowed) break;
  }
  std::vector<std::vector<int32_t>> relator_letters;
  for (const auto& r : p.relators())
    if (!r.word.empty()) relator_letters.push_back(r.word.letters());

  for (int32_t alpha = 0; alpha < static_cast<int32_t>(en.table.size()) && !en.overflowed;
       ++alpha) {
    if (en.dead(alpha)) continue;
    for (const auto& rel : relator_letters) {
      en.scan_and_fill(alpha, rel);
      if (en.overflowed || en.dead(alpha)) break;
    }
    if (en.overflowed) break;
    if (en.dead(alpha)) continue;
    for (int s = 0; s < en.nslots && !en.overflowed; ++s) {
      if (en.table[alpha][s] != kUndef) continue;
      int32_t fresh = en.define();
      if (en.overflowed) break;
      en.set_edge(alpha, s, fresh);
      if (en.dead(alpha)) break;
    }
  }

  CosetTable out;
  out.alphabet_ = p.alphabet();
  out.total_defined_ = en.total;
  if (en.overflowed) {
    out.status_ = CosetTable::Status::Inconclusive;
    return out;
  }

  // Compact live cosets in increasing order.
  std::map<int32_t, int32_t> compact;
  for (int32_t c = 0; c < static_cast<int32_t>(en.table.size()); ++c)
    if (!en.dead(c)) compact.emplace(c, static_cast<int32_t>(compact.size()));
  out.rows_.assign(compact.size(), std::vector<int32_t>(en.nslots, kUndef));
  for (const auto& [old_c, new_c] : compact)
    for (int s = 0; s < en.nslots; ++s) {
      int32_t d = en.table[old_c][s];
      if (d == kUndef) {
        out.status_ = CosetTable::Status::Inconclusive;  // should not happen post-fill
        return out;
      }
      out.rows_[new_c][s] = compact.at(en.rep(d));
    }
  out.status_ = CosetTable::Status::Complete;

  // Schreier transversal by breadth-first search in slot order.
  const int n = static_cast<int>(out.rows_.size());
  std::vector<int32_t> parent(n, -1), via(n, 0);
  std::vector<bool> seen(n, false);
  std::deque<int> bfs{0};
  seen[0] = true;
  while (!bfs.empty()) {
    int c = bfs.front();
    bfs.pop_front();
    for (int s = 0; s < en.nslots; ++s) {
      int d = out.rows_[c][s];
      if (seen[d]) continue;
      seen[d] = true;
      parent[d] = c;
      via[d] = (s % 2 == 0) ? (s / 2 + 1) : -(s / 2 + 1);
      bfs.push_back(d);
    }
  }
  out.transversal_.resize(n, Word(p.alphabet()));
  for (int c = 0; c < n; ++c) {
    std::vector<int32_t> letters;
    for (int at = c; at != 0; at = parent[at]) letters.push_back(via[at]);
    std::reverse(letters.begin(), letters.end());
    out.transversal_[c] = Word::from_letters(p.alphabet(), std::move(letters));
  }
  return out;
}

RSNaming mechanical_naming() {
  return [](int coset, const std::string& gen) {
    if (coset == 1) return gen;
    return gen + "_c" + std::to_string(coset);
  };
}

RSNaming parity_naming(const std::string& odd_generator) {
  return [odd_generator](int coset, const std::string& gen) {
    if (coset == 1) return gen;
    if (gen == odd_generator) return gen + "2";
    return gen + "_" + odd_generator;
  };
}

RSResult reidemeister_schreier(const Presentation& p, const CosetTable& table,
                               const RSNaming& naming) {
  if (!table.complete()) throw IncompleteTableError("coset table is not complete");
  const int index = table.index();
  const int ngens = p.alphabet()->size();

  RSResult out;
  out.index = index;
  out.raw_generator_pairs = index * ngens;
  out.tree_edges = index - 1;
  out.raw_relator_count = index * static_cast<int>(p.relators().size());

  // Schreier generator per (coset, generator); freely trivial ones are
  // pruned and rewrite to nothing.
  std::vector<std::vector<int>> sub_index(index + 1, std::vector<int>(ngens, -1));
  std::vector<std::string> names;
  std::set<std::string> taken;
  for (int c = 1; c <= index; ++c) {
    for (int g = 0; g < ngens; ++g) {
      Word value = multiply(multiply(table.transversal(c),
                                     Word::from_letters(p.alphabet(), {g + 1})),
                            invert(table.transversal(table.act(c, g + 1))));
      if (value.empty()) continue;
      std::string name = naming(c, p.alphabet()->name(g));
      if (!Alphabet::valid_name(name)) name = p.alphabet()->name(g) + "_c" + std::to_string(c);
      for (int salt = 2; taken.count(name); ++salt)
        name = p.alphabet()->name(g) + "_c" + std::to_string(c) + "_" + std::to_string(salt);
      taken.insert(name);
      sub_index[c][g] = static_cast<int>(names.size());
      names.push_back(name);
      out.generators.push_back({c, p.alphabet()->name(g), name, value});
    }
  }

  AlphabetPtr sub_alpha = make_alphabet(names);
  Presentation sub(sub_alpha);
  for (int c = 1; c <= index; ++c) {
    for (const auto& r : p.relators()) {
      std::vector<int32_t> letters;
      int at = c;
      for (int32_t x : r.word.letters()) {
        if (x > 0) {
          int s = sub_index[at][x - 1];
          if (s >= 0) letters.push_back(s + 1);
          at = table.act(at, x);
        } else {
          at = table.act(at, x);
          int s = sub_index[at][-x - 1];
          if (s >= 0) letters.push_back(-(s + 1));
        }
      }
      sub.add_relator(Word::from_letters(sub_alpha, std::move(letters)),
                      r.label + "@" + std::to_string(c));
    }
  }
  out.presentation = std::move(sub);
  return out;
}

}  // namespace twistkit
