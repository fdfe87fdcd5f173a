#include "twistkit/presentation.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace twistkit {

namespace {

// Positive letter sorts before its inverse, generators by index.
int letter_key(int32_t x) { return (std::abs(x) - 1) * 2 + (x < 0 ? 1 : 0); }

bool rotation_less(const std::vector<int32_t>& w, size_t i, const std::vector<int32_t>& v,
                   size_t j) {
  const size_t n = w.size();
  for (size_t k = 0; k < n; ++k) {
    int a = letter_key(w[(i + k) % n]);
    int b = letter_key(v[(j + k) % n]);
    if (a != b) return a < b;
  }
  return false;
}

std::vector<int32_t> least_rotation_of(const std::vector<int32_t>& w,
                                       const std::vector<int32_t>& v) {
  const size_t n = w.size();
  const std::vector<int32_t>* best_word = &w;
  size_t best = 0;
  for (size_t i = 1; i < n; ++i)
    if (rotation_less(w, i, *best_word, best)) {
      best = i;
      best_word = &w;
    }
  for (size_t i = 0; i < n; ++i)
    if (rotation_less(v, i, *best_word, best)) {
      best = i;
      best_word = &v;
    }
  std::vector<int32_t> out(n);
  for (size_t k = 0; k < n; ++k) out[k] = (*best_word)[(best + k) % n];
  return out;
}

}  // namespace

Word canonical_relator(const Word& w) {
  std::vector<int32_t> core = cyclic_reduce(w).core.letters();
  if (core.empty()) return Word(w.alphabet());
  std::vector<int32_t> inv(core.rbegin(), core.rend());
  for (auto& x : inv) x = -x;
  return Word::from_letters(w.alphabet(), least_rotation_of(core, inv));
}

std::string AbelianInvariants::to_string() const {
  std::ostringstream os;
  os << "free=" << free_rank << " torsion=[";
  for (size_t i = 0; i < torsion.size(); ++i) os << (i ? "," : "") << torsion[i];
  os << "]";
  return os.str();
}

void Presentation::add_relator(const Word& w, const std::string& label,
                               const std::string& guard) {
  if (!alphabet_) throw Error("presentation has no alphabet");
  if (w.alphabet() && *w.alphabet() != *alphabet_)
    throw AlphabetMismatchError("relator '" + label + "' uses a different alphabet");
  Word canon = canonical_relator(Word::from_letters(alphabet_, w.letters()));
  relators_.push_back(Relator{canon, label, guard});
}

Word Presentation::parse_relator(std::string_view text, const WordLimits& limits) const {
  return parse_word(text, alphabet_, limits);
}

bool Presentation::same_group_presentation(const Presentation& other) const {
  if (!alphabet_ || !other.alphabet_) return false;
  std::vector<std::string> a = alphabet_->names();
  std::vector<std::string> b = other.alphabet_->names();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  auto key = [](const Presentation& p) {
    std::multiset<std::string> out;
    for (const auto& r : p.relators())
      if (!r.word.empty()) out.insert(format_word(r.word));
    return out;
  };
  return key(*this) == key(other);
}

std::vector<Diagnostic> validate(const Presentation& p) {
  std::vector<Diagnostic> out;
  std::set<std::string> labels;
  for (const auto& r : p.relators()) {
    if (r.word.alphabet() && p.alphabet() && *r.word.alphabet() != *p.alphabet()) {
      out.push_back({Diagnostic::Kind::UnknownGenerator,
                     "relator '" + r.label + "' is not over the declared alphabet"});
    }
    if (free_reduce(r.word.letters()) != r.word.letters()) {
      out.push_back({Diagnostic::Kind::UnreducedRelator,
                     "relator '" + r.label + "' is not freely reduced"});
    }
    if (!labels.insert(r.label).second) {
      out.push_back({Diagnostic::Kind::DuplicateLabel, "duplicate label '" + r.label + "'"});
    }
  }
  return out;
}

namespace {

// Rebuilds every relator over a new alphabet, applying a per-generator image
// map given as letter sequences over the new alphabet.
Presentation map_presentation(const Presentation& p, AlphabetPtr target,
                              const std::map<int, std::vector<int32_t>>& images,
                              const std::map<int, int>& renumber,
                              const std::vector<size_t>& dropped) {
  Presentation out(target);
  for (size_t i = 0; i < p.relators().size(); ++i) {
    if (std::find(dropped.begin(), dropped.end(), i) != dropped.end()) continue;
    const Relator& r = p.relators()[i];
    std::vector<int32_t> letters;
    for (int32_t x : r.word.letters()) {
      int idx = std::abs(x) - 1;
      auto img = images.find(idx);
      if (img != images.end()) {
        if (x > 0) {
          letters.insert(letters.end(), img->second.begin(), img->second.end());
        } else {
          for (auto it = img->second.rbegin(); it != img->second.rend(); ++it)
            letters.push_back(-*it);
        }
      } else {
        int ni = renumber.at(idx);
        letters.push_back(x > 0 ? ni + 1 : -(ni + 1));
      }
    }
    out.add_relator(Word::from_letters(target, std::move(letters)), r.label, r.guard);
  }
  return out;
}

}  // namespace

Presentation tietze_add_generator(const Presentation& p, const std::string& name,
                                  const Word& defining) {
  if (p.alphabet()->index_of(name) >= 0)
    throw NameCollisionError("generator '" + name + "' already present");
  if (defining.alphabet() && *defining.alphabet() != *p.alphabet())
    throw AlphabetMismatchError("defining word is not over the presentation alphabet");
  std::vector<std::string> names = p.alphabet()->names();
  names.push_back(name);
  AlphabetPtr target = make_alphabet(names);
  Presentation out(target);
  for (const auto& r : p.relators())
    out.add_relator(Word::from_letters(target, r.word.letters()), r.label, r.guard);
  std::vector<int32_t> rel;
  rel.push_back(p.alphabet()->size() + 1);
  for (auto it = defining.letters().rbegin(); it != defining.letters().rend(); ++it)
    rel.push_back(-*it);
  out.add_relator(Word::from_letters(target, std::move(rel)), "def_" + name);
  return out;
}

namespace {

// A relator containing generator `idx` exactly once defines it; canonical
// (cyclically reduced) storage lets any single-occurrence relator rotate to
// the g * w^-1 shape.
struct Elimination {
  size_t relator;
  std::vector<int32_t> defining;  // letters over the old alphabet, free of idx
};

int single_occurrence_at(const std::vector<int32_t>& letters, int idx) {
  int count = 0, at = -1;
  for (size_t k = 0; k < letters.size(); ++k)
    if (std::abs(letters[k]) - 1 == idx) {
      ++count;
      at = static_cast<int>(k);
    }
  return count == 1 ? at : -1;
}

Elimination elimination_from(const Presentation& p, size_t rel_index, int idx) {
  const auto& letters = p.relators()[rel_index].word.letters();
  const size_t n = letters.size();
  int at = single_occurrence_at(letters, idx);
  if (at < 0) throw Error("internal: generator does not occur exactly once");
  // Rotate so the occurrence leads: R = g^s B, hence g^s = B^-1.
  std::vector<int32_t> rest;
  for (size_t k = 1; k < n; ++k) rest.push_back(letters[(at + k) % n]);
  std::vector<int32_t> defining;
  if (letters[at] > 0) {
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) defining.push_back(-*it);
  } else {
    defining = rest;
  }
  return Elimination{rel_index, std::move(defining)};
}

std::optional<Elimination> find_elimination(const Presentation& p, int idx) {
  for (size_t i = 0; i < p.relators().size(); ++i)
    if (single_occurrence_at(p.relators()[i].word.letters(), idx) >= 0)
      return elimination_from(p, i, idx);
  return std::nullopt;
}

Presentation eliminate_generator(const Presentation& p, int idx, const Elimination& e) {
  std::vector<std::string> names;
  std::map<int, int> renumber;
  for (int i = 0; i < p.alphabet()->size(); ++i) {
    if (i == idx) continue;
    renumber[i] = static_cast<int>(names.size());
    names.push_back(p.alphabet()->name(i));
  }
  AlphabetPtr target = make_alphabet(names);
  std::vector<int32_t> image;
  for (int32_t x : e.defining) {
    int ni = renumber.at(std::abs(x) - 1);
    image.push_back(x > 0 ? ni + 1 : -(ni + 1));
  }
  return map_presentation(p, target, {{idx, image}}, renumber, {e.relator});
}

}  // namespace

Presentation tietze_remove_generator(const Presentation& p, const std::string& name) {
  int idx = p.alphabet()->index_of(name);
  if (idx < 0) throw Error("no generator named '" + name + "'");
  auto e = find_elimination(p, idx);
  if (!e)
    throw NoDefiningRelatorError("no defining relator for generator '" + name + "'");
  return eliminate_generator(p, idx, *e);
}

Presentation tietze_remove_relator(const Presentation& p, const std::string& label) {
  Presentation out(p.alphabet());
  bool removed = false;
  for (size_t i = 0; i < p.relators().size(); ++i) {
    const Relator& r = p.relators()[i];
    if (!removed && r.label == label) {
      bool duplicate = false;
      for (size_t j = 0; j < p.relators().size(); ++j)
        if (j != i && p.relators()[j].word == r.word) duplicate = true;
      if (!r.word.empty() && !duplicate)
        throw Error("relator '" + label +
                    "' is neither freely trivial nor a duplicate; removal needs a certificate");
      removed = true;
      continue;
    }
    out.add_relator(r.word, r.label, r.guard);
  }
  if (!removed) throw Error("no relator labelled '" + label + "'");
  return out;
}

Presentation simplify(const Presentation& input) {
  Presentation p = input;
  bool changed = true;
  while (changed) {
    changed = false;

    // Drop empty relators and duplicates (canonical form already folds
    // rotation and inversion).
    {
      Presentation next(p.alphabet());
      std::set<std::vector<int32_t>> seen;
      for (const auto& r : p.relators()) {
        if (r.word.empty()) {
          changed = true;
          continue;
        }
        if (!seen.insert(r.word.letters()).second) {
          changed = true;
          continue;
        }
        next.add_relator(r.word, r.label, r.guard);
      }
      p = next;
    }

    // Single-letter relators first: the generator is trivial.
    bool eliminated = false;
    for (size_t i = 0; i < p.relators().size() && !eliminated; ++i) {
      if (p.relators()[i].word.size() != 1) continue;
      int idx = std::abs(p.relators()[i].word.letters()[0]) - 1;
      p = eliminate_generator(p, idx, elimination_from(p, i, idx));
      changed = eliminated = true;
    }
    if (eliminated) continue;

    // Then the first relator with a generator occurring exactly once; among
    // its candidates prefer the latest generator so mechanically named ones
    // go before the base alphabet.
    for (size_t i = 0; i < p.relators().size() && !eliminated; ++i) {
      const auto& letters = p.relators()[i].word.letters();
      std::map<int, int> counts;
      for (int32_t x : letters) counts[std::abs(x) - 1]++;
      int pick = -1;
      for (const auto& [idx, c] : counts)
        if (c == 1 && idx > pick) pick = idx;
      if (pick < 0) continue;
      p = eliminate_generator(p, pick, elimination_from(p, i, pick));
      changed = eliminated = true;
    }
  }
  return p;
}

namespace {

using Matrix = std::vector<std::vector<mpz_class>>;

bool is_lone(const Matrix& m, size_t t) {
  for (size_t i = t + 1; i < m.size(); ++i)
    if (m[i][t] != 0) return false;
  for (size_t j = t + 1; j < m[t].size(); ++j)
    if (m[t][j] != 0) return false;
  return true;
}

std::vector<mpz_class> smith_diagonal_mpz(Matrix m) {
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  const size_t steps = std::min(rows, cols);
  for (size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Pivot: smallest nonzero absolute value in the trailing block.
      size_t pr = t, pc = t;
      mpz_class best = 0;
      for (size_t i = t; i < rows; ++i)
        for (size_t j = t; j < cols; ++j) {
          if (m[i][j] == 0) continue;
          mpz_class a = abs(m[i][j]);
          if (best == 0 || a < best) {
            best = a;
            pr = i;
            pc = j;
          }
        }
      if (best == 0) break;
      std::swap(m[t], m[pr]);
      for (size_t i = t; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

      bool clean = true;
      for (size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        mpz_class q = m[i][t] / m[t][t];
        if (q != 0)
          for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        mpz_class q = m[t][j] / m[t][t];
        if (q != 0)
          for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      if (!is_lone(m, t)) continue;

      // Pivot must divide the trailing block; otherwise mix a row in and redo.
      bool divides = true;
      for (size_t i = t + 1; i < rows && divides; ++i)
        for (size_t j = t + 1; j < cols && divides; ++j)
          if (m[i][j] % m[t][t] != 0) {
            for (size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            divides = false;
          }
      if (divides) break;
    }
  }
  std::vector<mpz_class> diag;
  for (size_t t = 0; t < steps; ++t) diag.push_back(abs(m[t][t]));
  // Normalize the divisibility chain.
  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[i] == 0 && diag[j] != 0) std::swap(diag[i], diag[j]);
      if (diag[j] == 0 || diag[i] == 0) continue;
      mpz_class g = gcd(diag[i], diag[j]);
      diag[j] = diag[i] / g * diag[j];
      diag[i] = g;
    }
  return diag;
}

}  // namespace

std::vector<std::string> smith_diagonal(const std::vector<std::vector<int64_t>>& matrix) {
  Matrix m;
  for (const auto& row : matrix) {
    std::vector<mpz_class> r;
    for (int64_t v : row) r.emplace_back(static_cast<long>(v));
    m.push_back(std::move(r));
  }
  std::vector<std::string> out;
  for (const auto& d : smith_diagonal_mpz(std::move(m))) out.push_back(d.get_str());
  return out;
}

AbelianInvariants abelianization(const Presentation& p) {
  const int ngens = p.alphabet() ? p.alphabet()->size() : 0;
  Matrix m;
  for (const auto& r : p.relators()) {
    std::vector<mpz_class> row(ngens, 0);
    for (int g = 0; g < ngens; ++g) row[g] = static_cast<long>(exponent_sum(r.word, g));
    m.push_back(std::move(row));
  }
  AbelianInvariants inv;
  if (m.empty()) {
    inv.free_rank = ngens;
    return inv;
  }
  std::vector<mpz_class> diag = smith_diagonal_mpz(std::move(m));
  int64_t rank = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) inv.torsion.push_back(d.get_str());
  }
  inv.free_rank = ngens - rank;
  return inv;
}

std::vector<Diagnostic> validate_presentation_text(const std::string& text) {
  std::vector<Diagnostic> out;
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> rel_lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (body.rfind("gen:", 0) == 0) {
      std::istringstream gs(body.substr(4));
      std::string n;
      while (gs >> n) names.push_back(n);
    } else if (body.rfind("rel[", 0) == 0) {
      auto close = body.find(']');
      if (close == std::string::npos || close + 1 >= body.size() || body[close + 1] != ':') {
        out.push_back({Diagnostic::Kind::UnreducedRelator, "malformed rel line: " + body});
        continue;
      }
      rel_lines.emplace_back(body.substr(4, close - 4), body.substr(close + 2));
    } else {
      out.push_back({Diagnostic::Kind::UnreducedRelator, "unrecognized line: " + body});
    }
  }
  AlphabetPtr alpha;
  try {
    alpha = make_alphabet(names);
  } catch (const Error& e) {
    out.push_back({Diagnostic::Kind::DuplicateLabel, e.what()});
    return out;
  }
  std::set<std::string> labels;
  for (const auto& [label, word_text] : rel_lines) {
    if (!labels.insert(label).second)
      out.push_back({Diagnostic::Kind::DuplicateLabel, "duplicate label '" + label + "'"});
    try {
      parse_word(word_text, alpha);
    } catch (const UnknownGeneratorError& e) {
      out.push_back({Diagnostic::Kind::UnknownGenerator,
                     "relator '" + label + "': " + e.what()});
    } catch (const Error& e) {
      out.push_back({Diagnostic::Kind::UnreducedRelator,
                     "relator '" + label + "': " + e.what()});
    }
  }
  return out;
}

Presentation parse_presentation(const std::string& text, const WordLimits& limits) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> rel_lines;
  std::istringstream is(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string body = line.substr(first, last - first + 1);
    if (body.rfind("gen:", 0) == 0) {
      std::istringstream gs(body.substr(4));
      std::string n;
      while (gs >> n) names.push_back(n);
    } else if (body.rfind("rel[", 0) == 0) {
      auto close = body.find(']');
      if (close == std::string::npos || close + 1 >= body.size() || body[close + 1] != ':')
        throw SyntaxError("malformed rel line " + std::to_string(lineno), 0);
      rel_lines.emplace_back(body.substr(4, close - 4), body.substr(close + 2));
    } else {
      throw SyntaxError("unrecognized presentation line " + std::to_string(lineno), 0);
    }
  }
  Presentation p(make_alphabet(names));
  for (const auto& [label, word_text] : rel_lines)
    p.add_relator(parse_word(word_text, p.alphabet(), limits), label);
  return p;
}

std::string format_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "gen:";
  for (const auto& n : p.alphabet()->names()) os << ' ' << n;
  os << '\n';
  for (const auto& r : p.relators()) {
    if (!r.guard.empty()) os << "# guard " << r.guard << '\n';
    os << "rel[" << r.label << "]: " << format_word(r.word) << '\n';
  }
  return os.str();
}

}  // namespace twistkit
