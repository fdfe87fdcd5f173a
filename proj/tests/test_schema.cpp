#include "doctest.h"

#include <random>

#include "twistkit/catalog.hpp"
#include "twistkit/schema.hpp"

using namespace twistkit;

namespace {

// Seed chain alpha_1..alpha_k inside N_{k+1,0} with its boundary classes.
struct ChainSetup {
  AlphabetPtr alphabet;
  SurfaceModel m;
  std::vector<TwistSymbol> curves;
  TwistSymbol c0, c0p;
  MatrixAssignment assign;
};

ChainSetup seed_chain(int k) {
  ChainSetup s{nullptr, SurfaceModel(k + 1, 0), {}, {}, {}, {}};
  std::vector<std::string> names;
  for (int i = 1; i <= k; ++i) names.push_back("a" + std::to_string(i));
  names.push_back("c0");
  names.push_back("c0p");
  s.alphabet = make_alphabet(names);
  Mod2Class boundary = Mod2Class::zero(s.m.rank());
  for (int i = 1; i <= k; ++i) {
    Mod2Class cls = curve_class("alpha" + std::to_string(i), k + 1, 0);
    s.curves.push_back({"a" + std::to_string(i), false, cls});
    s.assign["a" + std::to_string(i)] = transvection(s.m, cls);
    if (i % 2 == 1 && k % 2 == 1) boundary = boundary + cls;
  }
  s.c0 = {"c0", false, boundary};
  s.c0p = k % 2 == 1 ? TwistSymbol{"c0p", false, boundary}
                     : TwistSymbol{"1", false, Mod2Class::zero(s.m.rank())};
  s.assign["c0"] = transvection(s.m, boundary);
  s.assign["c0p"] = transvection(s.m, boundary);
  return s;
}

Mod2Class rand_class(const SurfaceModel& m, std::mt19937& rng) {
  return Mod2Class(rng() & ((1u << m.rank()) - 1), m.rank());
}

}  // namespace

TEST_CASE("gen_chain: two chain in the genus three surface") {
  SurfaceModel m(3, 0);
  auto a = make_alphabet({"a1", "a2"});
  std::vector<TwistSymbol> curves{{"a1", false, curve_class("alpha1", 3, 0)},
                                  {"a2", false, curve_class("alpha2", 3, 0)}};
  TwistSymbol trivial{"1", false, Mod2Class::zero(3)};
  Word rel = gen_chain(a, m, curves, trivial, trivial);
  CHECK(rel == parse_word("(a1 a2)^6", a));
}

TEST_CASE("gen_chain: one chain gives the square against its boundaries") {
  ChainSetup s = seed_chain(1);
  Word rel = gen_chain(s.alphabet, s.m, s.curves, s.c0, s.c0p);
  CHECK(rel == parse_word("a1 a1 c0p' c0'", s.alphabet));
}

TEST_CASE("gen_chain: configuration checks") {
  SurfaceModel m(4, 0);
  auto a = make_alphabet({"a1", "a2", "a3", "x"});
  auto alpha = [&](int i) {
    return TwistSymbol{"a" + std::to_string(i), false,
                       curve_class("alpha" + std::to_string(i), 4, 0)};
  };
  TwistSymbol trivial{"1", false, Mod2Class::zero(m.rank())};

  // first and third curves meet once, so this is no chain
  std::vector<TwistSymbol> bad{alpha(1), alpha(2), {"x", false, parse_class("m1+m4", m)}};
  CHECK_THROWS_AS(gen_chain(a, m, bad, trivial, trivial), BadChainConfigurationError);

  // wrong boundary class for an odd chain
  std::vector<TwistSymbol> chain3{alpha(1), alpha(2), alpha(3)};
  CHECK_THROWS_AS(gen_chain(a, m, chain3, trivial, trivial), BadChainConfigurationError);
  TwistSymbol c0{"x", false, parse_class("m1+m2+m3+m4", m)};
  CHECK_NOTHROW(gen_chain(a, m, chain3, c0, c0));

  // even chains have one boundary curve
  std::vector<TwistSymbol> chain2{alpha(1), alpha(2)};
  CHECK_THROWS_AS(gen_chain(a, m, chain2, trivial, c0), BadChainConfigurationError);

  // a one sided curve cannot be twisted
  std::vector<TwistSymbol> onesided{{"x", false, parse_class("m1", m)}};
  CHECK_THROWS_AS(gen_chain(a, m, onesided, trivial, trivial), BadChainConfigurationError);
}

TEST_CASE("chain relators act trivially on homology for k = 1..6") {
  for (int k = 1; k <= 6; ++k) {
    ChainSetup s = seed_chain(k);
    Word rel = gen_chain(s.alphabet, s.m, s.curves, s.c0, s.c0p);
    INFO("k=", k);
    CHECK(evaluate(rel, s.assign).is_identity());
  }
}

TEST_CASE("chain image equals the boundary twist image, exponent is sharp") {
  // (t1...tk)^(k+1) matches t_c0 t_c0' as matrices; one power less fails on
  // the seed chains with even k.
  for (int k = 1; k <= 6; ++k) {
    ChainSetup s = seed_chain(k);
    std::vector<int32_t> unit;
    for (const auto& c : s.curves)
      unit.push_back(s.alphabet->index_of(c.name) + 1);
    Word base = Word::from_letters(s.alphabet, unit);
    const int reps = k % 2 == 1 ? k + 1 : 2 * k + 2;
    Mod2Matrix lhs = evaluate(power(base, reps), s.assign);
    Mod2Matrix rhs = Mod2Matrix::identity(s.m.rank());
    if (k % 2 == 1)
      rhs = evaluate(parse_word("c0 c0p", s.alphabet), s.assign);
    CHECK(lhs == rhs);
    if (k == 2)
      CHECK(!evaluate(power(base, 5), s.assign).is_identity());
  }
}

TEST_CASE("gen_lantern: degenerate, frozen, and bad configurations") {
  SurfaceModel m6(6, 1);
  auto a = make_alphabet({"d1", "d2", "d3", "d4", "d5", "d6", "d7"});
  TwistSymbol trivial{"1", false, Mod2Class::zero(m6.rank())};

  // all seven trivial: the relator collapses
  CHECK(gen_lantern(a, m6, std::vector<TwistSymbol>(7, trivial)).empty());

  // frozen configuration: three disjoint handles inside N_6
  auto C = [&](const char* t) { return parse_class(t, m6); };
  std::vector<TwistSymbol> frozen{
      {"d1", false, C("m1+m2+m3+m4")}, {"d2", false, C("m1+m2+m5+m6")},
      {"d3", false, C("m3+m4+m5+m6")}, {"d4", false, C("m1+m2")},
      {"d5", false, C("m3+m4")},       {"d6", false, C("m5+m6")},
      {"d7", false, C("m1+m2+m3+m4+m5+m6")}};
  Word rel = gen_lantern(a, m6, frozen);
  CHECK(rel.size() == 7);
  MatrixAssignment assign;
  for (const auto& d : frozen) assign[d.name] = transvection(m6, d.cls);
  CHECK(evaluate(rel, assign).is_identity());

  // extended variant: the seventh curve bounds a disk about a marked point
  SurfaceModel m4(4, 1);
  auto C4 = [&](const char* t) { return parse_class(t, m4); };
  std::vector<TwistSymbol> extended{
      {"d1", false, C4("m1+m2+m3+m4")}, {"d2", false, C4("m3+m4")},
      {"d3", false, C4("m1+m2")},       {"d4", false, C4("m1+m2")},
      {"d5", false, C4("m3+m4")},       {"d6", false, C4("m1+m2+m3+m4")},
      {"1", false, Mod2Class::zero(m4.rank())}};
  Word ext = gen_lantern(a, m4, extended);
  CHECK(ext.size() == 6);
  MatrixAssignment assign4;
  for (const auto& d : extended)
    if (!d.trivial()) assign4[d.name] = transvection(m4, d.cls);
  CHECK(evaluate(ext, assign4).is_identity());

  // broken configurations
  auto bad = frozen;
  bad[6].cls = C("m1+m2");  // boundary sum no longer vanishes
  CHECK_THROWS_AS(gen_lantern(a, m6, bad), BadLanternConfigurationError);
  auto crossing = frozen;
  crossing[0].cls = C("m2+m3");  // meets d4 once
  CHECK_THROWS_AS(gen_lantern(a, m6, crossing), BadLanternConfigurationError);
  CHECK_THROWS_AS(gen_lantern(a, m6, std::vector<TwistSymbol>(6, trivial)),
                  BadLanternConfigurationError);
}

TEST_CASE("random admissible lanterns act trivially on homology") {
  std::mt19937 rng(31337);
  auto a = make_alphabet({"d1", "d2", "d3", "d4", "d5", "d6", "d7"});
  int built = 0;
  while (built < 200) {
    SurfaceModel m(4 + static_cast<int>(rng() % 5), 1);
    Mod2Class d4 = rand_class(m, rng), d5 = rand_class(m, rng), d6 = rand_class(m, rng);
    if (pairing(m, d4, d4) || pairing(m, d5, d5) || pairing(m, d6, d6)) continue;
    if (pairing(m, d4, d5) || pairing(m, d4, d6) || pairing(m, d5, d6)) continue;
    Mod2Class d7 = d4 + d5 + d6;
    std::vector<TwistSymbol> d{{"d1", false, d4 + d5}, {"d2", false, d4 + d6},
                               {"d3", false, d4 + d7}, {"d4", false, d4},
                               {"d5", false, d5},      {"d6", false, d6},
                               {"d7", false, d7}};
    Word rel = gen_lantern(a, m, d);
    MatrixAssignment assign;
    for (const auto& s : d) assign[s.name] = transvection(m, s.cls);
    CHECK(evaluate(rel, assign).is_identity());
    ++built;
  }
}

TEST_CASE("random admissible chains act trivially on homology") {
  std::mt19937 rng(4242);
  auto gen_names = [] {
    std::vector<std::string> names;
    for (int i = 1; i <= 6; ++i) names.push_back("t" + std::to_string(i));
    names.push_back("c0");
    names.push_back("c0p");
    return names;
  };
  auto a = make_alphabet(gen_names());
  int built = 0;
  while (built < 150) {
    const int k = 1 + static_cast<int>(rng() % 4);
    SurfaceModel m(7, 1);
    std::vector<Mod2Class> cls;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      bool found = false;
      for (int tries = 0; tries < 200 && !found; ++tries) {
        Mod2Class c = rand_class(m, rng);
        if (pairing(m, c, c) != 0) continue;
        bool fits = true;
        for (int j = 0; j < i; ++j) {
          int want = (j == i - 1) ? 1 : 0;
          if (pairing(m, cls[j], c) != want) fits = false;
        }
        if (fits) {
          cls.push_back(c);
          found = true;
        }
      }
      ok = found;
    }
    if (!ok) continue;
    std::vector<TwistSymbol> curves;
    MatrixAssignment assign;
    for (int i = 0; i < k; ++i) {
      curves.push_back({"t" + std::to_string(i + 1), false, cls[i]});
      assign["t" + std::to_string(i + 1)] = transvection(m, cls[i]);
    }
    Mod2Class boundary = Mod2Class::zero(m.rank());
    if (k % 2 == 1)
      for (int i = 0; i < k; i += 2) boundary = boundary + cls[i];
    TwistSymbol c0{"c0", false, boundary}, c0p{"c0p", false, boundary};
    if (k % 2 == 0) c0p = TwistSymbol{"1", false, Mod2Class::zero(m.rank())};
    assign["c0"] = transvection(m, boundary);
    assign["c0p"] = transvection(m, boundary);
    Word rel = gen_chain(a, m, curves, c0, c0p);
    CHECK(evaluate(rel, assign).is_identity());
    ++built;
  }
}
