// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "twistkit/catalog.hpp"
#include "twistkit/certificate.hpp"
#include "twistkit/enumeration.hpp"
#include "twistkit/homology.hpp"
#include "twistkit/presentation.hpp"
#include "twistkit/schema.hpp"

using namespace twistkit;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Presentation rs_simplified(const std::string& entry, int g, int n) {
  Presentation p = instantiate(entry, g, n);
  CosetTable t = todd_coxeter(p, SubgroupSpec::parity_kernel({"y"}), 100000);
  if (!t.complete()) throw Error("enumeration did not close");
  return simplify(reidemeister_schreier(p, t, parity_naming("y")).presentation);
}

std::multiset<std::string> relator_strings(const Presentation& p) {
  std::multiset<std::string> out;
  for (const auto& r : p.relators()) out.insert(format_word(r.word));
  return out;
}

bool matches(const Presentation& got, const std::vector<std::string>& gens,
             const std::vector<std::string>& relator_texts) {
  if (got.alphabet()->names() != gens) return false;
  Presentation expect(make_alphabet(gens));
  for (size_t i = 0; i < relator_texts.size(); ++i)
    expect.add_relator(expect.parse_relator(relator_texts[i]), "e" + std::to_string(i));
  return relator_strings(got) == relator_strings(expect);
}

// ---- criterion 6: single letter mutations of the shipped certificate ----

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
}

// Mutation universe: symbol tokens, primes and digits inside the word fields
// of start/target/step lines. Context class and surface lines are data, not
// letters of the derivation.
std::vector<std::string> single_letter_mutants(const std::string& text,
                                               const std::vector<std::string>& symbols) {
  std::vector<std::string> mutants;
  std::istringstream is(text);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(is, line)) lines.push_back(line);

  auto rebuild = [&](size_t line_idx, const std::string& replacement) {
    std::string out;
    for (size_t i = 0; i < lines.size(); ++i)
      out += (i == line_idx ? replacement : lines[i]) + "\n";
    return out;
  };

  std::set<std::string> names(symbols.begin(), symbols.end());
  for (size_t li = 0; li < lines.size(); ++li) {
    const std::string& l = lines[li];
    const bool word_line = l.rfind("start:", 0) == 0 || l.rfind("target:", 0) == 0 ||
                           l.rfind("step ", 0) == 0;
    if (!word_line) continue;
    for (size_t i = 0; i < l.size(); ++i) {
      if (l[i] >= 'a' && l[i] <= 'z') {
        if (i > 0 && (is_ident_char(l[i - 1]) || l[i - 1] == '@')) {
        } else {
          size_t end = i;
          while (end < l.size() && is_ident_char(l[end])) ++end;
          std::string tok = l.substr(i, end - i);
          if (end < l.size() && l[end] == '=') continue;  // key= prefixes
          if (!names.count(tok)) continue;
          for (const auto& other : symbols) {
            if (other == tok) continue;
            std::string repl = l.substr(0, i) + other + l.substr(end);
            mutants.push_back(rebuild(li, repl));
          }
          // toggle the orientation mark
          if (end < l.size() && l[end] == '\'') {
            mutants.push_back(rebuild(li, l.substr(0, end) + l.substr(end + 1)));
          } else {
            mutants.push_back(rebuild(li, l.substr(0, end) + "'" + l.substr(end)));
          }
        }
      } else if (l[i] >= '0' && l[i] <= '9') {
        bool in_name = i > 0 && is_ident_char(l[i - 1]) &&
                       !(l[i - 1] >= '0' && l[i - 1] <= '9') ;
        // digits directly after letters belong to symbol names handled above
        if (i > 0 && is_ident_char(l[i - 1])) in_name = true;
        if (in_name) continue;
        std::string repl = l;
        repl[i] = static_cast<char>('0' + ((l[i] - '0' + 1) % 10));
        mutants.push_back(rebuild(li, repl));
      }
    }
  }
  return mutants;
}

}  // namespace

int main() {
  const std::string data_dir = TWISTKIT_DATA_DIR;

  // 1. Reidemeister-Schreier regression on the three small groups.
  try {
    auto t0 = Clock::now();
    bool ok = true;
    ok &= matches(rs_simplified("m_n2_0", 2, 0), {"a1"}, {"a1 a1"});
    ok &= matches(rs_simplified("m_n2_1", 2, 1), {"a1", "y2"}, {"a1 y2 a1' y2'"});
    ok &= matches(rs_simplified("m_n3_0", 3, 0), {"a1", "a2"},
                  {"a1 a2 a1 a2' a1' a2'", "(a1 a2)^6"});
    double dt = seconds_since(t0);
    report(1, "rs --parity y --simplify reproduces the three twist subgroup presentations",
           ok && dt < 1.0, "elapsed " + std::to_string(dt) + "s");
  } catch (const Error& e) {
    report(1, std::string("rs regression threw: ") + e.what(), false);
  }

  // 2. Indices and orders by coset enumeration.
  try {
    auto t0 = Clock::now();
    bool ok = true;
    CosetTable a = todd_coxeter(instantiate("m_n2_0", 2, 0),
                                SubgroupSpec::parity_kernel({"y"}), 1000);
    ok &= a.complete() && a.index() == 2;
    CosetTable b = todd_coxeter(instantiate("m_n3_0", 3, 0),
                                SubgroupSpec::parity_kernel({"y"}), 10000);
    ok &= b.complete() && b.index() == 2;
    CosetTable c =
        todd_coxeter(instantiate("m_n2_0", 2, 0), SubgroupSpec::generated_by({}), 1000);
    ok &= c.complete() && c.index() == 4;
    CosetTable d =
        todd_coxeter(instantiate("t_small", 2, 0), SubgroupSpec::generated_by({}), 1000);
    ok &= d.complete() && d.index() == 2;
    double dt = seconds_since(t0);
    report(2, "parity kernels have index 2; |M(N_{2,0})| = 4 and |T(N_{2,0})| = 2",
           ok && dt < 1.0, "elapsed " + std::to_string(dt) + "s");
  } catch (const Error& e) {
    report(2, std::string("enumeration threw: ") + e.what(), false);
  }

  // 3. Abelian invariants of the small twist subgroups.
  try {
    AbelianInvariants i20 = abelianization(instantiate("t_small", 2, 0));
    AbelianInvariants i21 = abelianization(instantiate("t_small", 2, 1));
    AbelianInvariants i30 = abelianization(instantiate("t_small", 3, 0));
    bool ok = i20.free_rank == 0 && i20.torsion == std::vector<std::string>{"2"} &&
              i21.free_rank == 2 && i21.torsion.empty() && i30.free_rank == 0 &&
              i30.torsion == std::vector<std::string>{"12"};
    report(3, "abelianizations are Z/2, Z^2 and Z/12", ok,
           i20.to_string() + "; " + i21.to_string() + "; " + i30.to_string());
  } catch (const Error& e) {
    report(3, std::string("abelianization threw: ") + e.what(), false);
  }

  // 4. Catalog instantiation counts, locked by hand recount.
  try {
    const std::map<int, std::pair<int, int>> bordered{
        {3, {5, 7}}, {4, {8, 19}}, {5, {9, 30}}, {6, {16, 44}}, {7, {11, 43}}, {8, {19, 60}}};
    bool ok = true;
    for (const auto& [g, want] : bordered) {
      Presentation p = instantiate(g % 2 ? "t_ng1_odd" : "t_ng1_even", g, 1);
      ok &= p.alphabet()->size() == want.first;
      ok &= static_cast<int>(p.relators().size()) == want.second;
    }
    report(4, "bordered catalog counts match the locked table (g = 3..8)", ok);
  } catch (const Error& e) {
    report(4, std::string("instantiation threw: ") + e.what(), false);
  }

  // 5. Homology verification of every instantiated relator.
  try {
    auto t0 = Clock::now();
    int total = 0, passed = 0;
    for (int g = 3; g <= 8; ++g) {
      Presentation p = instantiate(g % 2 ? "t_ng1_odd" : "t_ng1_even", g, 1);
      auto assign = catalog_assignment(p, g, 1);
      for (const auto& v : verify_relators(p, SurfaceModel(g, 1), assign)) {
        ++total;
        passed += v.pass;
      }
    }
    InstantiationOptions subst;
    subst.subst_rho = true;
    for (int g = 4; g <= 8; ++g) {
      Presentation p = instantiate(g % 2 ? "t_ng0_odd" : "t_ng0_even", g, 0, subst);
      auto assign = catalog_assignment(p, g, 0);
      for (const auto& v : verify_relators(p, SurfaceModel(g, 0), assign)) {
        ++total;
        passed += v.pass;
      }
    }
    double dt = seconds_since(t0);
    report(5, "all catalog relators act trivially on mod-2 homology",
           total > 0 && passed == total && dt < 10.0,
           std::to_string(passed) + "/" + std::to_string(total) + " in " +
               std::to_string(dt) + "s");
  } catch (const Error& e) {
    report(5, std::string("verification threw: ") + e.what(), false);
  }

  // 6. Negative controls.
  try {
    SurfaceModel m(3, 0);
    auto a = make_alphabet({"a1", "a2"});
    MatrixAssignment assign{
        {"a1", transvection(m, curve_class("alpha1", 3, 0))},
        {"a2", transvection(m, curve_class("alpha2", 3, 0))}};
    bool fifth_fails = !evaluate(parse_word("(a1 a2)^5", a), assign).is_identity();

    std::string text = slurp(data_dir + "/certs/b2bar2.cert");
    Certificate base = parse_certificate(text);
    if (!check_certificate(base).valid) throw Error("baseline certificate invalid");
    auto mutants = single_letter_mutants(text, base.ctx.alphabet->names());
    int rejected = 0;
    for (const auto& mutant : mutants) {
      try {
        if (!check_certificate(parse_certificate(mutant)).valid) ++rejected;
      } catch (const Error&) {
        ++rejected;
      }
    }
    bool ok = fifth_fails && !mutants.empty() &&
              rejected == static_cast<int>(mutants.size());
    report(6, "negative controls: (a1 a2)^5 fails; every certificate mutant is rejected", ok,
           std::to_string(rejected) + "/" + std::to_string(mutants.size()) +
               " mutants rejected");
  } catch (const Error& e) {
    report(6, std::string("negative controls threw: ") + e.what(), false);
  }

  // 7. Schema suite: chains, lanterns and transvection invariants.
  try {
    auto t0 = Clock::now();
    bool ok = true;
    for (int k = 1; k <= 6; ++k) {
      SurfaceModel m(k + 1, 0);
      std::vector<std::string> names;
      for (int i = 1; i <= k; ++i) names.push_back("t" + std::to_string(i));
      names.push_back("c0");
      names.push_back("c0p");
      auto alphabet = make_alphabet(names);
      std::vector<TwistSymbol> curves;
      MatrixAssignment assign;
      Mod2Class boundary = Mod2Class::zero(m.rank());
      for (int i = 1; i <= k; ++i) {
        Mod2Class cls = curve_class("alpha" + std::to_string(i), k + 1, 0);
        curves.push_back({"t" + std::to_string(i), false, cls});
        assign["t" + std::to_string(i)] = transvection(m, cls);
        if (k % 2 == 1 && i % 2 == 1) boundary = boundary + cls;
      }
      TwistSymbol c0{"c0", false, boundary};
      TwistSymbol c0p = k % 2 == 1 ? TwistSymbol{"c0p", false, boundary}
                                   : TwistSymbol{"1", false, Mod2Class::zero(m.rank())};
      assign["c0"] = transvection(m, boundary);
      assign["c0p"] = transvection(m, boundary);
      ok &= evaluate(gen_chain(alphabet, m, curves, c0, c0p), assign).is_identity();
    }

    {
      SurfaceModel m(6, 1);
      auto alphabet = make_alphabet({"d1", "d2", "d3", "d4", "d5", "d6", "d7"});
      auto C = [&](const char* t) { return parse_class(t, m); };
      std::vector<TwistSymbol> lantern{
          {"d1", false, C("m1+m2+m3+m4")}, {"d2", false, C("m1+m2+m5+m6")},
          {"d3", false, C("m3+m4+m5+m6")}, {"d4", false, C("m1+m2")},
          {"d5", false, C("m3+m4")},       {"d6", false, C("m5+m6")},
          {"d7", false, C("m1+m2+m3+m4+m5+m6")}};
      MatrixAssignment assign;
      for (const auto& d : lantern) assign[d.name] = transvection(m, d.cls);
      ok &= evaluate(gen_lantern(alphabet, m, lantern), assign).is_identity();

      SurfaceModel m4(4, 1);
      auto C4 = [&](const char* t) { return parse_class(t, m4); };
      std::vector<TwistSymbol> extended{
          {"d1", false, C4("m1+m2+m3+m4")}, {"d2", false, C4("m3+m4")},
          {"d3", false, C4("m1+m2")},       {"d4", false, C4("m1+m2")},
          {"d5", false, C4("m3+m4")},       {"d6", false, C4("m1+m2+m3+m4")},
          {"1", false, Mod2Class::zero(m4.rank())}};
      MatrixAssignment assign4;
      for (const auto& d : extended)
        if (!d.trivial()) assign4[d.name] = transvection(m4, d.cls);
      ok &= evaluate(gen_lantern(alphabet, m4, extended), assign4).is_identity();
    }

    std::mt19937 rng(20260808);
    int checked = 0;
    while (checked < 10000) {
      SurfaceModel m(3 + static_cast<int>(rng() % 6), static_cast<int>(rng() % 2));
      Mod2Class c(rng() & ((1u << m.rank()) - 1), m.rank());
      if (pairing(m, c, c) != 0) continue;
      Mod2Matrix t = transvection(m, c);
      ok &= (t * t).is_identity();
      Mod2Class x(rng() & ((1u << m.rank()) - 1), m.rank());
      Mod2Class y(rng() & ((1u << m.rank()) - 1), m.rank());
      ok &= pairing(m, t.apply(x), t.apply(y)) == pairing(m, x, y);
      ++checked;
    }
    double dt = seconds_since(t0);
    report(7, "chain and lantern schemata verify; transvection invariants on 10^4 classes",
           ok && dt < 5.0, "elapsed " + std::to_string(dt) + "s");
  } catch (const Error& e) {
    report(7, std::string("schema suite threw: ") + e.what(), false);
  }

  // 8. Shipped certificates replay deterministically.
  try {
    bool ok = true;
    for (const char* name : {"b2bar1.cert", "b2bar2.cert", "push_telescope.cert"}) {
      std::string text = slurp(data_dir + "/certs/" + std::string(name));
      CertReport first = check_certificate(parse_certificate(text));
      CertReport second = check_certificate(parse_certificate(text));
      ok &= first.valid && second.valid;
      ok &= first.trace.size() == second.trace.size();
      for (size_t i = 0; ok && i < first.trace.size(); ++i)
        ok &= format_word(first.trace[i]) == format_word(second.trace[i]);
      if (!first.valid)
        std::cout << "  " << name << " invalid at step " << first.failed_step << ": "
                  << first.reason << "\n";
    }
    report(8, "shipped derivation certificates replay to Valid, deterministically", ok);
  } catch (const Error& e) {
    report(8, std::string("certificate replay threw: ") + e.what(), false);
  }

  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: " + std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
