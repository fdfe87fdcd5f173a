#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace twistkit {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct SyntaxError : Error {
  size_t position;
  SyntaxError(const std::string& msg, size_t pos)
      : Error(msg + " (at offset " + std::to_string(pos) + ")"), position(pos) {}
};

struct UnknownGeneratorError : Error {
  std::string token;
  UnknownGeneratorError(const std::string& tok, size_t pos)
      : Error("unknown generator '" + tok + "' (at offset " + std::to_string(pos) + ")"),
        token(tok) {}
};

struct ExponentOverflowError : Error {
  explicit ExponentOverflowError(const std::string& msg) : Error(msg) {}
};

struct WordTooLongError : Error {
  explicit WordTooLongError(const std::string& msg) : Error(msg) {}
};

struct AlphabetMismatchError : Error {
  explicit AlphabetMismatchError(const std::string& msg) : Error(msg) {}
};

struct NameCollisionError : Error {
  explicit NameCollisionError(const std::string& msg) : Error(msg) {}
};

// Ordered set of named generators. Names follow [a-z][a-z0-9_]*.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(const std::vector<std::string>& names);

  int add(const std::string& name);
  int index_of(std::string_view name) const;  // -1 when absent
  const std::string& name(int index) const { return names_.at(index); }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }

  bool operator==(const Alphabet& other) const { return names_ == other.names_; }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

  static bool valid_name(std::string_view name);

 private:
  std::vector<std::string> names_;
  std::map<std::string, int, std::less<>> index_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(const std::vector<std::string>& names);

struct WordLimits {
  size_t max_length = 1'000'000;
  int64_t max_exponent = 2147483647;
};

// Freely reduced word. Letters are encoded as +(index+1) for a generator and
// -(index+1) for its inverse; the empty sequence is the identity.
class Word {
 public:
  Word() = default;
  explicit Word(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  static Word from_letters(AlphabetPtr alphabet, std::vector<int32_t> letters,
                           const WordLimits& limits = {});

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<int32_t>& letters() const { return letters_; }
  size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int32_t letter(size_t i) const { return letters_.at(i); }

  bool operator==(const Word& other) const;
  bool operator!=(const Word& other) const { return !(*this == other); }

 private:
  AlphabetPtr alphabet_;
  std::vector<int32_t> letters_;  // always freely reduced
};

// Grammar: WORD := TERM*; TERM := GEN ['] | '(' WORD ')' '^' SIGNED_INT.
// Whitespace separates terms; subwords may nest.
Word parse_word(std::string_view text, const AlphabetPtr& alphabet,
                const WordLimits& limits = {});

std::string format_word(const Word& w);

Word multiply(const Word& a, const Word& b, const WordLimits& limits = {});
Word invert(const Word& w);
Word conjugate(const Word& f, const Word& w, const WordLimits& limits = {});
Word power(const Word& w, int64_t k, const WordLimits& limits = {});

// Decomposes w as conjugator * core * conjugator^-1 with core cyclically reduced.
struct CyclicForm {
  Word core;
  Word conjugator;
};
CyclicForm cyclic_reduce(const Word& w);

int64_t exponent_sum(const Word& w, int generator_index);
int64_t exponent_sum(const Word& w, std::string_view generator_name);

// Homomorphic image; generators absent from the map are sent to the
// same-named generator of the target alphabet.
Word substitute(const Word& w, const std::map<std::string, Word>& images,
                const AlphabetPtr& target, const WordLimits& limits = {});

// Reduced letter sequences, shared by the factories above.
std::vector<int32_t> free_reduce(std::vector<int32_t> letters);

bool same_alphabet(const Word& a, const Word& b);

}  // namespace twistkit
