#include "doctest.h"

#include <random>

#include "twistkit/word.hpp"

using namespace twistkit;

namespace {

AlphabetPtr abc() { return make_alphabet({"a1", "a2", "e", "f", "y2"}); }

// Independent reducer: repeatedly delete the first adjacent inverse pair.
std::vector<int32_t> naive_reduce(std::vector<int32_t> v) {
  bool again = true;
  while (again) {
    again = false;
    for (size_t i = 0; i + 1 < v.size(); ++i) {
      if (v[i] == -v[i + 1]) {
        v.erase(v.begin() + i, v.begin() + i + 2);
        again = true;
        break;
      }
    }
  }
  return v;
}

Word rand_word(const AlphabetPtr& a, std::mt19937& rng, int max_len = 12) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, a->size());
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int32_t> letters;
  const int n = len(rng);
  for (int i = 0; i < n; ++i) {
    int32_t x = gen(rng);
    letters.push_back(sign(rng) ? x : -x);
  }
  return Word::from_letters(a, std::move(letters));
}

}  // namespace

TEST_CASE("parse: inverse cancellation and exponent expansion") {
  auto a = abc();
  CHECK(parse_word("a1 a1'", a).empty());
  Word w = parse_word("(a1 a2)^6", a);
  REQUIRE(w.size() == 12);
  for (size_t i = 0; i < 12; ++i) CHECK(w.letter(i) == (i % 2 == 0 ? 1 : 2));
  CHECK(parse_word("(a1 a2)^-1", a) == parse_word("a2' a1'", a));
  CHECK(parse_word("(a1 a2)^0", a).empty());
  CHECK(parse_word("((a1 a2)^2 e)^2", a) == parse_word("a1 a2 a1 a2 e a1 a2 a1 a2 e", a));
}

TEST_CASE("parse: six letter braid relator") {
  auto a = abc();
  Word w = parse_word("a1 a2 a1 a2' a1' a2'", a);
  CHECK(w.letters() == std::vector<int32_t>{1, 2, 1, -2, -1, -2});
  CHECK(format_word(w) == "a1 a2 a1 a2' a1' a2'");
}

TEST_CASE("parse: rejections") {
  auto a = abc();
  CHECK_THROWS_AS(parse_word("a1 b3", a), UnknownGeneratorError);
  CHECK_THROWS_AS(parse_word("(a1 a2)", a), SyntaxError);
  CHECK_THROWS_AS(parse_word("a1 ^2", a), SyntaxError);
  CHECK_THROWS_AS(parse_word("(a1", a), SyntaxError);
  CHECK_THROWS_AS(parse_word("a1)", a), SyntaxError);
  CHECK_THROWS_AS(parse_word("(a1)^9999999999999", a), ExponentOverflowError);
  WordLimits tight;
  tight.max_length = 8;
  CHECK_THROWS_AS(parse_word("(a1 a2)^6", a, tight), WordTooLongError);
  try {
    parse_word("a1 zz", a);
    CHECK(false);
  } catch (const UnknownGeneratorError& e) {
    CHECK(e.token == "zz");
  }
}

TEST_CASE("multiply: cancellation and plain concatenation") {
  auto a = abc();
  CHECK(multiply(parse_word("a1 a2", a), parse_word("a2' a1'", a)).empty());
  CHECK(multiply(parse_word("a1", a), parse_word("a1", a)) == parse_word("a1 a1", a));

  // (a2 e a1)(a2 e a1): frozen from the naive concatenation oracle.
  Word u = parse_word("a2 e a1", a);
  std::vector<int32_t> cat = u.letters();
  cat.insert(cat.end(), u.letters().begin(), u.letters().end());
  CHECK(multiply(u, u).letters() == naive_reduce(cat));
  CHECK(format_word(multiply(u, u)) == "a2 e a1 a2 e a1");
}

TEST_CASE("multiply: alphabet mismatch") {
  auto a = abc();
  auto b = make_alphabet({"x1"});
  CHECK_THROWS_AS(multiply(parse_word("a1", a), parse_word("x1", b)), AlphabetMismatchError);
}

TEST_CASE("invert: examples") {
  auto a = abc();
  CHECK(invert(Word(a)).empty());
  CHECK(invert(parse_word("a1 a2", a)) == parse_word("a2' a1'", a));
  CHECK(invert(parse_word("(a1 a2)^6", a)) == parse_word("(a2' a1')^6", a));
}

TEST_CASE("conjugate: examples") {
  auto a = abc();
  Word w = parse_word("a2 e", a);
  CHECK(conjugate(Word(a), w) == w);
  CHECK(conjugate(parse_word("a1", a), parse_word("a1", a)) == parse_word("a1", a));
  Word c = conjugate(parse_word("y2", a), parse_word("a1", a));
  CHECK(c == parse_word("y2 a1 y2'", a));
  CHECK(c.size() == 3);
}

TEST_CASE("cyclic_reduce: examples") {
  auto a = abc();
  auto r1 = cyclic_reduce(parse_word("a2' a1 a2", a));
  CHECK(r1.core == parse_word("a1", a));
  CHECK(r1.conjugator == parse_word("a2'", a));
  auto r2 = cyclic_reduce(parse_word("a1 a2 a1'", a));
  CHECK(r2.core == parse_word("a2", a));
  CHECK(r2.conjugator == parse_word("a1", a));
  Word braid = parse_word("a1 a2 a1 a2' a1' a2'", a);
  auto r3 = cyclic_reduce(braid);
  CHECK(r3.core == braid);
  CHECK(r3.conjugator.empty());
}

TEST_CASE("exponent_sum: examples") {
  auto a = make_alphabet({"a1", "y"});
  CHECK(exponent_sum(parse_word("y a1 y' a1", a), "y") == 0);
  CHECK(exponent_sum(parse_word("(a1 y)^2", a), "y") == 2);
  CHECK(exponent_sum(Word(a), "y") == 0);
  CHECK(exponent_sum(parse_word("a1 a1 a1'", a), "a1") == 1);
}

TEST_CASE("substitute: defining substitution") {
  auto full = make_alphabet({"a1", "a2", "a3", "a4", "rho"});
  auto bare = make_alphabet({"a1", "a2", "a3", "a4"});
  Word def = parse_word("(a1 a2 a3 a4)^5", bare);
  std::map<std::string, Word> images{{"rho", def}};
  CHECK(substitute(parse_word("rho", full), images, bare) == def);
  CHECK(substitute(parse_word("a1 rho a1'", full), images, bare) ==
        parse_word("a1 (a1 a2 a3 a4)^5 a1'", bare));
  // identity map
  Word w = parse_word("a1 a2' a3", bare);
  CHECK(substitute(w, {}, bare) == w);
  CHECK(substitute(parse_word("a1 a1'", bare), {}, bare).empty());
}

TEST_CASE("properties: involution, identity, associativity, homomorphisms") {
  auto a = abc();
  std::mt19937 rng(0xC0FFEE);
  for (int trial = 0; trial < 10000; ++trial) {
    Word w = rand_word(a, rng);
    CHECK(invert(invert(w)) == w);
    CHECK(multiply(w, invert(w)).empty());
  }
  for (int trial = 0; trial < 3000; ++trial) {
    Word u = rand_word(a, rng), v = rand_word(a, rng), w = rand_word(a, rng);
    CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
    CHECK(multiply(u, Word(a)) == u);
    CHECK(multiply(Word(a), u) == u);
    for (int g = 0; g < a->size(); ++g)
      CHECK(exponent_sum(multiply(u, v), g) == exponent_sum(u, g) + exponent_sum(v, g));
  }
}

TEST_CASE("properties: parse round trip and cyclic reassembly") {
  auto a = abc();
  std::mt19937 rng(42);
  for (int trial = 0; trial < 3000; ++trial) {
    Word w = rand_word(a, rng);
    CHECK(parse_word(format_word(w), a) == w);
    auto cf = cyclic_reduce(w);
    CHECK(multiply(multiply(cf.conjugator, cf.core), invert(cf.conjugator)) == w);
    CHECK((cf.core.empty() || cf.core.size() < 2 ||
           cf.core.letter(0) != -cf.core.letter(cf.core.size() - 1)));
  }
}

TEST_CASE("properties: substitution is multiplicative") {
  auto a = abc();
  auto target = make_alphabet({"a1", "a2", "e", "f", "y2"});
  std::mt19937 rng(7);
  std::map<std::string, Word> images{
      {"a1", parse_word("a2 e", target)},
      {"a2", parse_word("f'", target)},
      {"y2", Word(target)},
  };
  for (int trial = 0; trial < 3000; ++trial) {
    Word u = rand_word(a, rng), v = rand_word(a, rng);
    CHECK(substitute(multiply(u, v), images, target) ==
          multiply(substitute(u, images, target), substitute(v, images, target)));
  }
}
