#include "twistkit/word.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace twistkit {

Alphabet::Alphabet(const std::vector<std::string>& names) {
  for (const auto& n : names) add(n);
}

bool Alphabet::valid_name(std::string_view name) {
  if (name.empty()) return false;
  if (name[0] < 'a' || name[0] > 'z') return false;
  for (char ch : name.substr(1)) {
    const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
    if (!ok) return false;
  }
  return true;
}

int Alphabet::add(const std::string& name) {
  if (!valid_name(name)) throw Error("invalid generator name '" + name + "'");
  if (index_.count(name)) throw NameCollisionError("generator '" + name + "' already declared");
  const int idx = static_cast<int>(names_.size());
  names_.push_back(name);
  index_.emplace(name, idx);
  return idx;
}

int Alphabet::index_of(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

AlphabetPtr make_alphabet(const std::vector<std::string>& names) {
  return std::make_shared<const Alphabet>(names);
}

std::vector<int32_t> free_reduce(std::vector<int32_t> letters) {
  std::vector<int32_t> out;
  out.reserve(letters.size());
  for (int32_t x : letters) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return out;
}

Word Word::from_letters(AlphabetPtr alphabet, std::vector<int32_t> letters,
                        const WordLimits& limits) {
  Word w(std::move(alphabet));
  const int n = w.alphabet_ ? w.alphabet_->size() : 0;
  for (int32_t x : letters) {
    if (x == 0 || x > n || x < -n) throw Error("letter out of range for alphabet");
  }
  w.letters_ = free_reduce(std::move(letters));
  if (w.letters_.size() > limits.max_length) {
    throw WordTooLongError("word length " + std::to_string(w.letters_.size()) +
                           " exceeds cap " + std::to_string(limits.max_length));
  }
  return w;
}

bool Word::operator==(const Word& other) const {
  if (letters_ != other.letters_) return false;
  if (alphabet_ == other.alphabet_) return true;
  if (!alphabet_ || !other.alphabet_) return alphabet_ == other.alphabet_;
  return *alphabet_ == *other.alphabet_;
}

bool same_alphabet(const Word& a, const Word& b) {
  if (a.alphabet() == b.alphabet()) return true;
  if (!a.alphabet() || !b.alphabet()) return false;
  return *a.alphabet() == *b.alphabet();
}

namespace {

struct Parser {
  std::string_view text;
  size_t pos = 0;
  const Alphabet& alphabet;
  const WordLimits& limits;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() { return text[pos]; }

  // Sequence of terms until end of input or a closing paren.
  std::vector<int32_t> sequence(int depth) {
    std::vector<int32_t> out;
    while (!at_end()) {
      char c = peek();
      if (c == ')') {
        if (depth == 0) throw SyntaxError("unmatched ')'", pos);
        return out;
      }
      if (c == '(') {
        ++pos;
        std::vector<int32_t> inner = sequence(depth + 1);
        skip_ws();
        if (pos >= text.size() || text[pos] != ')') throw SyntaxError("expected ')'", pos);
        ++pos;
        skip_ws();
        if (pos >= text.size() || text[pos] != '^')
          throw SyntaxError("parenthesized subword requires '^' exponent", pos);
        ++pos;
        int64_t k = exponent();
        append_power(out, inner, k);
        continue;
      }
      if (c == '^') throw SyntaxError("'^' without preceding parenthesized subword", pos);
      term(out);
    }
    if (depth != 0) throw SyntaxError("missing ')'", pos);
    return out;
  }

  int64_t exponent() {
    skip_ws();
    const size_t start = pos;
    bool neg = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
      neg = text[pos] == '-';
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw SyntaxError("expected integer exponent", pos);
    int64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > limits.max_exponent)
        throw ExponentOverflowError("exponent at offset " + std::to_string(start) +
                                    " exceeds bound " + std::to_string(limits.max_exponent));
      ++pos;
    }
    return neg ? -value : value;
  }

  void term(std::vector<int32_t>& out) {
    const size_t start = pos;
    char c = peek();
    if (c < 'a' || c > 'z') throw SyntaxError("expected generator name", pos);
    size_t end = pos + 1;
    while (end < text.size()) {
      char ch = text[end];
      const bool ok = (ch >= 'a' && ch <= 'z') || (ch >= '0' && ch <= '9') || ch == '_';
      if (!ok) break;
      ++end;
    }
    std::string name(text.substr(pos, end - pos));
    pos = end;
    bool inverse = false;
    if (pos < text.size() && text[pos] == '\'') {
      inverse = true;
      ++pos;
    }
    int idx = alphabet.index_of(name);
    if (idx < 0) throw UnknownGeneratorError(name, start);
    push(out, inverse ? -(idx + 1) : (idx + 1));
  }

  void push(std::vector<int32_t>& out, int32_t x) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
      if (out.size() > limits.max_length)
        throw WordTooLongError("parsed word exceeds length cap " +
                               std::to_string(limits.max_length));
    }
  }

  void append_power(std::vector<int32_t>& out, const std::vector<int32_t>& base, int64_t k) {
    std::vector<int32_t> unit = base;
    if (k < 0) {
      std::reverse(unit.begin(), unit.end());
      for (auto& x : unit) x = -x;
      k = -k;
    }
    for (int64_t rep = 0; rep < k; ++rep)
      for (int32_t x : unit) push(out, x);
  }
};

}  // namespace

Word parse_word(std::string_view text, const AlphabetPtr& alphabet, const WordLimits& limits) {
  if (!alphabet) throw Error("parse_word: null alphabet");
  Parser p{text, 0, *alphabet, limits};
  std::vector<int32_t> letters = p.sequence(0);
  return Word::from_letters(alphabet, std::move(letters), limits);
}

std::string format_word(const Word& w) {
  std::ostringstream os;
  bool first = true;
  for (int32_t x : w.letters()) {
    if (!first) os << ' ';
    first = false;
    os << w.alphabet()->name(std::abs(x) - 1);
    if (x < 0) os << '\'';
  }
  return os.str();
}

Word multiply(const Word& a, const Word& b, const WordLimits& limits) {
  if (!same_alphabet(a, b))
    throw AlphabetMismatchError("multiply: operands use different alphabets");
  std::vector<int32_t> letters = a.letters();
  letters.insert(letters.end(), b.letters().begin(), b.letters().end());
  return Word::from_letters(a.alphabet(), std::move(letters), limits);
}

Word invert(const Word& w) {
  std::vector<int32_t> letters(w.letters().rbegin(), w.letters().rend());
  for (auto& x : letters) x = -x;
  return Word::from_letters(w.alphabet(), std::move(letters));
}

Word conjugate(const Word& f, const Word& w, const WordLimits& limits) {
  if (!same_alphabet(f, w))
    throw AlphabetMismatchError("conjugate: operands use different alphabets");
  std::vector<int32_t> letters = f.letters();
  letters.insert(letters.end(), w.letters().begin(), w.letters().end());
  for (auto it = f.letters().rbegin(); it != f.letters().rend(); ++it) letters.push_back(-*it);
  return Word::from_letters(f.alphabet(), std::move(letters), limits);
}

Word power(const Word& w, int64_t k, const WordLimits& limits) {
  if (std::abs(k) > limits.max_exponent)
    throw ExponentOverflowError("power exponent exceeds bound");
  Word unit = k < 0 ? invert(w) : w;
  std::vector<int32_t> letters;
  for (int64_t rep = 0, n = std::abs(k); rep < n; ++rep) {
    letters.insert(letters.end(), unit.letters().begin(), unit.letters().end());
    if (letters.size() > 2 * limits.max_length)
      throw WordTooLongError("power exceeds length cap");
  }
  return Word::from_letters(w.alphabet(), std::move(letters), limits);
}

CyclicForm cyclic_reduce(const Word& w) {
  std::vector<int32_t> core = w.letters();
  std::vector<int32_t> conj;
  while (core.size() >= 2 && core.front() == -core.back()) {
    conj.push_back(core.front());
    core.erase(core.begin());
    core.pop_back();
  }
  CyclicForm out;
  out.core = Word::from_letters(w.alphabet(), std::move(core));
  out.conjugator = Word::from_letters(w.alphabet(), std::move(conj));
  return out;
}

int64_t exponent_sum(const Word& w, int generator_index) {
  int64_t sum = 0;
  for (int32_t x : w.letters()) {
    if (std::abs(x) - 1 == generator_index) sum += x > 0 ? 1 : -1;
  }
  return sum;
}

int64_t exponent_sum(const Word& w, std::string_view generator_name) {
  if (!w.alphabet()) return 0;
  int idx = w.alphabet()->index_of(generator_name);
  return idx < 0 ? 0 : exponent_sum(w, idx);
}

Word substitute(const Word& w, const std::map<std::string, Word>& images,
                const AlphabetPtr& target, const WordLimits& limits) {
  if (!target) throw Error("substitute: null target alphabet");
  for (const auto& [name, img] : images) {
    if (img.alphabet() && *img.alphabet() != *target)
      throw AlphabetMismatchError("substitute: image of '" + name +
                                  "' lies in a different alphabet");
  }
  std::vector<int32_t> letters;
  for (int32_t x : w.letters()) {
    const std::string& name = w.alphabet()->name(std::abs(x) - 1);
    auto it = images.find(name);
    if (it == images.end()) {
      int idx = target->index_of(name);
      if (idx < 0)
        throw AlphabetMismatchError("substitute: generator '" + name +
                                    "' has no image and is absent from the target alphabet");
      letters.push_back(x > 0 ? (idx + 1) : -(idx + 1));
    } else {
      const Word& img = x > 0 ? it->second : invert(it->second);
      letters.insert(letters.end(), img.letters().begin(), img.letters().end());
      if (letters.size() > 4 * limits.max_length)
        throw WordTooLongError("substitution exceeds length cap");
    }
  }
  return Word::from_letters(target, std::move(letters), limits);
}

}  // namespace twistkit
