#include "twistkit/homology.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace twistkit {

SurfaceModel::SurfaceModel(int genus, int boundary) : genus_(genus), boundary_(boundary) {
  if (genus < 1) throw Error("surface genus must be at least 1");
  if (boundary < 0) throw Error("boundary count must be non-negative");
  if (rank() > 30) throw Error("surface rank too large for this model");
}

std::string SurfaceModel::basis_name(int index) const {
  if (index < genus_) return "μ" + std::to_string(index + 1);
  return "∂" + std::to_string(index - genus_ + 1);
}

int pairing(const SurfaceModel& m, const Mod2Class& a, const Mod2Class& b) {
  return std::popcount(a.bits() & b.bits() & m.mu_mask()) & 1;
}

Mod2Class parse_class(std::string_view text, const SurfaceModel& m) {
  uint32_t bits = 0;
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos < text.size() && text[pos] == '0' &&
      (pos + 1 == text.size() || text.find_first_not_of(" \t", pos + 1) == std::string::npos))
    return Mod2Class::zero(m.rank());
  bool expect_term = true;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (!expect_term) {
      if (text[pos] != '+') throw Error("class syntax: expected '+'");
      ++pos;
      skip_ws();
    }
    bool is_mu;
    if (text.compare(pos, 2, "μ") == 0) {
      is_mu = true;
      pos += 2;
    } else if (text.compare(pos, 2, "mu") == 0) {
      is_mu = true;
      pos += 2;
    } else if (text[pos] == 'm' || text[pos] == 'u') {
      is_mu = true;
      pos += 1;
    } else if (text.compare(pos, 3, "∂") == 0) {
      is_mu = false;
      pos += 3;
    } else if (text[pos] == 'd') {
      is_mu = false;
      pos += 1;
    } else {
      throw Error("class syntax: unexpected token in '" + std::string(text) + "'");
    }
    int k = 0;
    bool any = false;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      k = k * 10 + (text[pos] - '0');
      ++pos;
      any = true;
    }
    if (!any || k < 1) throw Error("class syntax: missing basis index");
    int index = is_mu ? k - 1 : m.genus() + k - 1;
    if ((is_mu && k > m.genus()) || (!is_mu && k > m.boundary() - 1))
      throw Error("class term out of range for N_{" + std::to_string(m.genus()) + "," +
                  std::to_string(m.boundary()) + "}");
    bits ^= 1u << index;
    expect_term = false;
  }
  return Mod2Class(bits, m.rank());
}

std::string format_class(const Mod2Class& c, const SurfaceModel& m) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m.rank(); ++i) {
    if (!c.bit(i)) continue;
    if (!first) os << '+';
    first = false;
    os << m.basis_name(i);
  }
  return os.str();
}

Mod2Matrix Mod2Matrix::identity(int rank) {
  Mod2Matrix m;
  m.rows_.resize(rank);
  for (int i = 0; i < rank; ++i) m.rows_[i] = 1u << i;
  return m;
}

Mod2Matrix Mod2Matrix::from_rows(std::vector<uint32_t> rows) {
  Mod2Matrix m;
  m.rows_ = std::move(rows);
  return m;
}

bool Mod2Matrix::is_identity() const {
  for (int i = 0; i < rank(); ++i)
    if (rows_[i] != (1u << i)) return false;
  return true;
}

Mod2Class Mod2Matrix::apply(const Mod2Class& x) const {
  uint32_t out = 0;
  for (int i = 0; i < rank(); ++i)
    if (std::popcount(rows_[i] & x.bits()) & 1) out |= 1u << i;
  return Mod2Class(out, x.rank());
}

Mod2Matrix Mod2Matrix::operator*(const Mod2Matrix& o) const {
  Mod2Matrix out;
  out.rows_.resize(rank());
  for (int i = 0; i < rank(); ++i) {
    uint32_t acc = 0;
    uint32_t bits = rows_[i];
    while (bits) {
      int k = std::countr_zero(bits);
      bits &= bits - 1;
      acc ^= o.rows_[k];
    }
    out.rows_[i] = acc;
  }
  return out;
}

Mod2Matrix Mod2Matrix::inverse() const {
  const int n = rank();
  std::vector<uint32_t> a = rows_;
  std::vector<uint32_t> inv = identity(n).rows_;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if ((a[r] >> col) & 1u) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw Error("matrix is singular");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      if ((a[r] >> col) & 1u) {
        a[r] ^= a[col];
        inv[r] ^= inv[col];
      }
    }
  }
  return from_rows(std::move(inv));
}

Mod2Matrix transvection(const SurfaceModel& m, const Mod2Class& c) {
  if (pairing(m, c, c) != 0)
    throw OneSidedClassError("class " + format_class(c, m) + " is one sided");
  // y_i = x_i + c_i * <x, c>, with <x, c> read off the mu block.
  std::vector<uint32_t> rows(m.rank());
  const uint32_t form_row = c.bits() & m.mu_mask();
  for (int i = 0; i < m.rank(); ++i)
    rows[i] = (1u << i) ^ (((c.bits() >> i) & 1u) ? form_row : 0u);
  return Mod2Matrix::from_rows(std::move(rows));
}

Mod2Matrix evaluate(const Word& w, const MatrixAssignment& assign) {
  if (!w.alphabet()) throw Error("evaluate: word has no alphabet");
  int rank = -1;
  std::map<int, Mod2Matrix> direct;
  std::map<int, Mod2Matrix> inv;
  Mod2Matrix acc;
  bool started = false;
  for (int32_t x : w.letters()) {
    int idx = std::abs(x) - 1;
    auto it = direct.find(idx);
    if (it == direct.end()) {
      const std::string& name = w.alphabet()->name(idx);
      auto found = assign.find(name);
      if (found == assign.end())
        throw MissingAssignmentError("no matrix assigned to generator '" + name + "'");
      it = direct.emplace(idx, found->second).first;
    }
    const Mod2Matrix* m = &it->second;
    if (x < 0) {
      auto iv = inv.find(idx);
      if (iv == inv.end()) iv = inv.emplace(idx, it->second.inverse()).first;
      m = &iv->second;
    }
    if (!started) {
      acc = *m;
      started = true;
      rank = m->rank();
    } else {
      if (m->rank() != rank) throw Error("evaluate: mixed matrix ranks");
      acc = acc * (*m);
    }
  }
  if (!started) {
    // Empty word: identity of whatever rank the assignment uses.
    if (!assign.empty()) return Mod2Matrix::identity(assign.begin()->second.rank());
    return Mod2Matrix::identity(0);
  }
  return acc;
}

std::vector<RelatorVerdict> verify_relators(const Presentation& p, const SurfaceModel& m,
                                            const MatrixAssignment& assign) {
  std::vector<RelatorVerdict> out;
  for (const auto& r : p.relators()) {
    Mod2Matrix img = evaluate(r.word, assign);
    bool pass = r.word.empty() ? true : img == Mod2Matrix::identity(m.rank());
    out.push_back({r.label, pass});
  }
  return out;
}

namespace {

bool constraint_ok(const SurfaceModel& m, const std::map<std::string, Mod2Class>& values,
                   const PairingConstraint& c, bool* determined) {
  auto a = values.find(c.a);
  auto b = values.find(c.b);
  if (a == values.end() || b == values.end()) {
    *determined = false;
    return true;
  }
  *determined = true;
  return pairing(m, a->second, b->second) == c.parity;
}

bool solve_rec(const SurfaceModel& m, std::map<std::string, Mod2Class>& values,
               const std::vector<std::string>& unknowns, size_t at,
               const std::vector<PairingConstraint>& constraints) {
  if (at == unknowns.size()) return true;
  const uint32_t limit = 1u << m.rank();
  for (uint32_t bits = 0; bits < limit; ++bits) {
    values[unknowns[at]] = Mod2Class(bits, m.rank());
    bool ok = true;
    for (const auto& c : constraints) {
      bool det = false;
      if (!constraint_ok(m, values, c, &det) && det) {
        ok = false;
        break;
      }
    }
    if (ok && solve_rec(m, values, unknowns, at + 1, constraints)) return true;
    values.erase(unknowns[at]);
  }
  return false;
}

}  // namespace

SolveResult class_solver(const SurfaceModel& m, const std::map<std::string, Mod2Class>& seeds,
                         const std::vector<std::string>& unknowns,
                         const std::vector<PairingConstraint>& constraints) {
  SolveResult out;
  std::map<std::string, Mod2Class> values = seeds;
  if (solve_rec(m, values, unknowns, 0, constraints)) {
    out.satisfiable = true;
    out.assignment = values;
    for (const auto& u : unknowns) {
      int count = 0;
      Mod2Class saved = values.at(u);
      for (uint32_t bits = 0; bits < (1u << m.rank()); ++bits) {
        values[u] = Mod2Class(bits, m.rank());
        bool ok = true;
        for (const auto& c : constraints) {
          bool det = false;
          if (!constraint_ok(m, values, c, &det) && det) {
            ok = false;
            break;
          }
        }
        if (ok) ++count;
      }
      values[u] = saved;
      out.solution_counts[u] = count;
    }
    return out;
  }

  // Minimal unsatisfiable core by greedy removal.
  std::vector<PairingConstraint> core = constraints;
  for (size_t i = 0; i < core.size();) {
    std::vector<PairingConstraint> trial = core;
    trial.erase(trial.begin() + i);
    std::map<std::string, Mod2Class> v2 = seeds;
    if (!solve_rec(m, v2, unknowns, 0, trial)) {
      core = std::move(trial);
    } else {
      ++i;
    }
  }
  out.satisfiable = false;
  out.violated = core;
  return out;
}

std::vector<PairingConstraint> extract_pairing_constraints(const Presentation& p) {
  std::vector<PairingConstraint> out;
  for (const auto& r : p.relators()) {
    const auto& w = r.word.letters();
    auto gen_name = [&](int32_t x) { return p.alphabet()->name(std::abs(x) - 1); };
    if (w.size() == 4) {
      // Canonical commutator: x y x' y'.
      if (w[2] == -w[0] && w[3] == -w[1] && std::abs(w[0]) != std::abs(w[1]))
        out.push_back({gen_name(w[0]), gen_name(w[1]), 0, r.label});
    } else if (w.size() == 6) {
      std::map<int, int> counts;
      for (int32_t x : w) counts[std::abs(x)]++;
      if (counts.size() != 2) continue;
      auto it = counts.begin();
      int32_t u = it->first;
      int32_t v = std::next(it)->first;
      if (it->second != 3 || std::next(it)->second != 3) continue;
      // Braid between t_u^{s} and t_v^{t} for some signs.
      Word canon = r.word;
      bool braid = false;
      for (int32_t su : {u, -u}) {
        for (int32_t sv : {v, -v}) {
          std::vector<int32_t> probe{su, sv, su, -sv, -su, -sv};
          Word cw = canonical_relator(Word::from_letters(p.alphabet(), probe));
          if (cw.letters() == canon.letters()) braid = true;
        }
      }
      if (braid) out.push_back({p.alphabet()->name(u - 1), p.alphabet()->name(v - 1), 1, r.label});
    }
  }
  return out;
}

}  // namespace twistkit
