#include "doctest.h"

#include <numeric>
#include <random>

#include "twistkit/presentation.hpp"

using namespace twistkit;

namespace {

Presentation make_pres(const std::vector<std::string>& gens,
                       const std::vector<std::pair<std::string, std::string>>& rels) {
  Presentation p(make_alphabet(gens));
  for (const auto& [label, text] : rels) p.add_relator(p.parse_relator(text), label);
  return p;
}

// Determinant divisor oracle: d_k = gcd of all k x k minors, elementary
// divisors are the quotients d_k / d_{k-1}. Independent of the elimination
// route used by the library.
int64_t det_rec(const std::vector<std::vector<int64_t>>& m, std::vector<int> rows,
                std::vector<int> cols) {
  const size_t n = rows.size();
  if (n == 0) return 1;
  if (n == 1) return m[rows[0]][cols[0]];
  int64_t det = 0;
  for (size_t j = 0; j < n; ++j) {
    std::vector<int> sub_cols;
    for (size_t k = 0; k < n; ++k)
      if (k != j) sub_cols.push_back(cols[k]);
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    int64_t minor = det_rec(m, sub_rows, sub_cols);
    int64_t term = m[rows[0]][cols[j]] * minor;
    det += (j % 2 == 0) ? term : -term;
  }
  return det;
}

void combos(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    combos(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

AbelianInvariants minor_gcd_oracle(const std::vector<std::vector<int64_t>>& m, int ngens) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<int64_t> d{1};  // d_0
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rsel, csel;
    std::vector<int> cur;
    combos(rows, k, 0, cur, rsel);
    combos(cols, k, 0, cur, csel);
    int64_t g = 0;
    for (const auto& r : rsel)
      for (const auto& c : csel) g = std::gcd(g, det_rec(m, r, c));
    d.push_back(std::abs(g));
    if (g == 0) break;
  }
  AbelianInvariants inv;
  int rank = 0;
  for (size_t k = 1; k < d.size() && d[k] != 0; ++k) {
    ++rank;
    int64_t e = d[k] / d[k - 1];
    if (e > 1) inv.torsion.push_back(std::to_string(e));
  }
  inv.free_rank = ngens - rank;
  return inv;
}

std::vector<std::vector<int64_t>> exponent_matrix(const Presentation& p) {
  std::vector<std::vector<int64_t>> m;
  for (const auto& r : p.relators()) {
    std::vector<int64_t> row;
    for (int g = 0; g < p.alphabet()->size(); ++g) row.push_back(exponent_sum(r.word, g));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

TEST_CASE("canonical relator: least rotation over the core and its inverse") {
  auto a = make_alphabet({"a1", "y2"});
  Word w = parse_word("y2 a1 y2' a1'", a);
  CHECK(format_word(canonical_relator(w)) == "a1 y2 a1' y2'");
  CHECK(format_word(canonical_relator(parse_word("a1' y2 a1 y2", a))) == "a1 y2 a1' y2");
  // conjugated relator folds back to the core
  CHECK(canonical_relator(parse_word("y2 a1 a1 y2'", a)) == parse_word("a1 a1", a));
}

TEST_CASE("validate: clean and dirty presentations") {
  Presentation p = make_pres({"a1"}, {{"main", "a1 a1"}});
  CHECK(validate(p).empty());

  Presentation dup = make_pres({"a1"}, {{"A2", "a1 a1"}, {"A2", "a1"}});
  auto diags = validate(dup);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].kind == Diagnostic::Kind::DuplicateLabel);

  // relator built over a foreign alphabet is rejected at insertion
  Presentation q(make_alphabet({"a1"}));
  auto other = make_alphabet({"b"});
  CHECK_THROWS_AS(q.add_relator(parse_word("b", other), "bad"), AlphabetMismatchError);
}

TEST_CASE("tietze_add_generator") {
  Presentation p = make_pres({"a1"}, {{"main", "a1 a1"}});
  Presentation q = tietze_add_generator(p, "g", p.parse_relator("a1 a1"));
  CHECK(q.alphabet()->size() == 2);
  CHECK(q.relators().size() == 2);
  CHECK(abelianization(p) == abelianization(q));
  CHECK_THROWS_AS(tietze_add_generator(p, "a1", Word(p.alphabet())), NameCollisionError);

  // defining the new generator as the empty word adds the relator g
  Presentation r = tietze_add_generator(p, "g", Word(p.alphabet()));
  bool has_single = false;
  for (const auto& rel : r.relators()) has_single |= format_word(rel.word) == "g";
  CHECK(has_single);
}

TEST_CASE("tietze_remove_generator: crosscap square elimination") {
  Presentation p = make_pres({"a1", "y2"},
                             {{"r1", "y2"}, {"r2", "a1' y2 a1"}, {"r3", "a1 a1"}});
  Presentation q = simplify(tietze_remove_generator(p, "y2"));
  Presentation expect = make_pres({"a1"}, {{"main", "a1 a1"}});
  CHECK(q.same_group_presentation(expect));

  Presentation two = make_pres({"a", "b"}, {{"r", "b a'"}});
  Presentation one = tietze_remove_generator(two, "b");
  CHECK(one.alphabet()->names() == std::vector<std::string>{"a"});
  for (const auto& r : one.relators()) CHECK(r.word.empty());

  Presentation stuck = make_pres({"a", "b"}, {{"r", "b a b a'"}});
  CHECK_THROWS_AS(tietze_remove_generator(stuck, "b"), NoDefiningRelatorError);
}

TEST_CASE("tietze_remove_relator is restricted") {
  Presentation p = make_pres({"a"}, {{"r1", "a a"}, {"r2", "a a"}, {"r3", "a a a"}});
  Presentation q = tietze_remove_relator(p, "r2");
  CHECK(q.relators().size() == 2);
  CHECK_THROWS_AS(tietze_remove_relator(q, "r3"), Error);
}

TEST_CASE("simplify: examples") {
  Presentation p = make_pres({"a1", "y2"}, {{"r1", "y2"}, {"r2", "y2'"}, {"r3", "a1 a1"}});
  Presentation s = simplify(p);
  CHECK(s.same_group_presentation(make_pres({"a1"}, {{"m", "a1 a1"}})));

  Presentation braid2 = make_pres(
      {"a1", "a2"},
      {{"b1", "a1 a2 a1 a2' a1' a2'"}, {"b2", "a2 a1 a2 a1' a2' a1'"}, {"c", "(a1 a2)^6"}});
  Presentation s2 = simplify(braid2);
  CHECK(s2.relators().size() == 2);  // the rotated duplicate folds away

  Presentation tidy = make_pres({"a1", "a2"},
                                {{"b", "a1 a2 a1 a2' a1' a2'"}, {"c", "(a1 a2)^6"}});
  CHECK(simplify(tidy).same_group_presentation(tidy));
  CHECK(simplify(simplify(p)).same_group_presentation(simplify(p)));
}

TEST_CASE("abelianization: worked groups") {
  Presentation t20 = make_pres({"a1"}, {{"m", "a1 a1"}});
  AbelianInvariants i20 = abelianization(t20);
  CHECK(i20.free_rank == 0);
  CHECK(i20.torsion == std::vector<std::string>{"2"});
  CHECK(minor_gcd_oracle(exponent_matrix(t20), 1) == i20);

  Presentation t21 = make_pres({"a1", "y2"}, {{"m", "a1 y2 a1' y2'"}});
  AbelianInvariants i21 = abelianization(t21);
  CHECK(i21.free_rank == 2);
  CHECK(i21.torsion.empty());
  CHECK(minor_gcd_oracle(exponent_matrix(t21), 2) == i21);

  Presentation t30 = make_pres(
      {"a1", "a2"}, {{"braid", "a1 a2 a1 a2' a1' a2'"}, {"chain", "(a1 a2)^6"}});
  AbelianInvariants i30 = abelianization(t30);
  CHECK(i30.free_rank == 0);
  CHECK(i30.torsion == std::vector<std::string>{"12"});
  CHECK(minor_gcd_oracle(exponent_matrix(t30), 2) == i30);
}

TEST_CASE("smith_diagonal agrees with the minor gcd oracle on random matrices") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> dim(1, 4), entry(-6, 6);
  for (int trial = 0; trial < 400; ++trial) {
    int r = dim(rng), c = dim(rng);
    std::vector<std::vector<int64_t>> m(r, std::vector<int64_t>(c));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    auto diag = smith_diagonal(m);
    // compare nonzero divisor chain with the oracle
    std::vector<int64_t> d{1};
    for (size_t k = 1; k <= diag.size(); ++k) {
      std::vector<std::vector<int>> rsel, csel;
      std::vector<int> cur;
      combos(r, static_cast<int>(k), 0, cur, rsel);
      combos(c, static_cast<int>(k), 0, cur, csel);
      int64_t g = 0;
      for (const auto& rs : rsel)
        for (const auto& cs : csel) g = std::gcd(g, det_rec(m, rs, cs));
      d.push_back(std::abs(g));
    }
    for (size_t k = 1; k <= diag.size(); ++k) {
      int64_t expect = d[k] == 0 ? 0 : d[k] / d[k - 1];
      CHECK(std::to_string(expect) == diag[k - 1]);
      if (d[k] == 0) break;
    }
  }
}

TEST_CASE("properties: tietze moves and simplify preserve abelian invariants") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> ngens(2, 4), nrels(1, 4), len(1, 8), sign(0, 1);
  for (int trial = 0; trial < 200; ++trial) {
    int k = ngens(rng);
    std::vector<std::string> names;
    for (int i = 0; i < k; ++i) names.push_back("g" + std::to_string(i + 1));
    Presentation p(make_alphabet(names));
    int m = nrels(rng);
    for (int r = 0; r < m; ++r) {
      std::vector<int32_t> letters;
      int L = len(rng);
      std::uniform_int_distribution<int> pick(1, k);
      for (int i = 0; i < L; ++i) {
        int32_t x = pick(rng);
        letters.push_back(sign(rng) ? x : -x);
      }
      p.add_relator(Word::from_letters(p.alphabet(), letters), "r" + std::to_string(r));
    }
    AbelianInvariants before = abelianization(p);
    CHECK(abelianization(simplify(p)) == before);

    std::vector<int32_t> defining;
    std::uniform_int_distribution<int> pick(1, k);
    for (int i = 0; i < 3; ++i) {
      int32_t x = pick(rng);
      defining.push_back(sign(rng) ? x : -x);
    }
    Presentation q =
        tietze_add_generator(p, "h", Word::from_letters(p.alphabet(), defining));
    CHECK(abelianization(q) == before);
    CHECK(abelianization(tietze_remove_generator(q, "h")) == before);
  }
}

TEST_CASE("abelianization: divisor chain divides") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::vector<int64_t>> m(3, std::vector<int64_t>(3));
    for (auto& row : m)
      for (auto& x : row) x = entry(rng);
    auto diag = smith_diagonal(m);
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
      int64_t a = std::stoll(diag[i]);
      int64_t b = std::stoll(diag[i + 1]);
      if (a != 0) CHECK((b % a) == 0);
      if (a == 0) CHECK(b == 0);
    }
  }
}

TEST_CASE("presentation file round trip") {
  const std::string text =
      "# twist subgroup of the Klein bottle\n"
      "gen: a1 y2\n"
      "rel[comm]: a1 y2 a1' y2'\n";
  Presentation p = parse_presentation(text);
  CHECK(p.alphabet()->names() == std::vector<std::string>{"a1", "y2"});
  REQUIRE(p.relators().size() == 1);
  CHECK(format_word(p.relators()[0].word) == "a1 y2 a1' y2'");
  Presentation q = parse_presentation(format_presentation(p));
  CHECK(p.same_group_presentation(q));
  CHECK_THROWS_AS(parse_presentation("gen: a1\nrel[x]: b\n"), UnknownGeneratorError);
  CHECK_THROWS_AS(parse_presentation("nonsense line\n"), SyntaxError);
}

TEST_CASE("text validation collects diagnostics instead of throwing") {
  auto diags = validate_presentation_text(
      "gen: a1\nrel[x]: b\nrel[A2]: a1 a1\nrel[A2]: a1\n");
  REQUIRE(diags.size() == 2);
  CHECK(diags[0].kind == Diagnostic::Kind::UnknownGenerator);
  CHECK(diags[1].kind == Diagnostic::Kind::DuplicateLabel);
  CHECK(validate_presentation_text("gen: a1 y2\nrel[c]: a1 y2 a1' y2'\n").empty());
}
