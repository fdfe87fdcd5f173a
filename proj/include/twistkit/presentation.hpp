#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twistkit/word.hpp"

namespace twistkit {

struct NoDefiningRelatorError : Error {
  explicit NoDefiningRelatorError(const std::string& msg) : Error(msg) {}
};

struct Relator {
  Word word;
  std::string label;
  std::string guard;  // informational once instantiated
};

struct Diagnostic {
  enum class Kind { UnknownGenerator, UnreducedRelator, DuplicateLabel };
  Kind kind;
  std::string message;
};

// Elementary divisors d1 | d2 | ... (each >= 2) plus the free rank.
struct AbelianInvariants {
  int64_t free_rank = 0;
  std::vector<std::string> torsion;  // decimal strings, ascending divisor chain

  bool operator==(const AbelianInvariants& o) const {
    return free_rank == o.free_rank && torsion == o.torsion;
  }
  std::string to_string() const;
};

// Canonical relator form: cyclically reduce, then take the lexicographically
// least rotation over the core and its inverse. Letter order is by generator
// index with the positive letter before the inverse.
Word canonical_relator(const Word& w);

class Presentation {
 public:
  Presentation() = default;
  explicit Presentation(AlphabetPtr alphabet) : alphabet_(std::move(alphabet)) {}

  const AlphabetPtr& alphabet() const { return alphabet_; }
  const std::vector<Relator>& relators() const { return relators_; }

  // Stores the canonical form of w.
  void add_relator(const Word& w, const std::string& label, const std::string& guard = "");
  Word parse_relator(std::string_view text, const WordLimits& limits = {}) const;

  bool same_group_presentation(const Presentation& other) const;

 private:
  AlphabetPtr alphabet_;
  std::vector<Relator> relators_;
};

std::vector<Diagnostic> validate(const Presentation& p);

// File-level validation: collects diagnostics (unknown generators, duplicate
// labels, syntax problems) instead of throwing on the first bad line.
std::vector<Diagnostic> validate_presentation_text(const std::string& text);

Presentation tietze_add_generator(const Presentation& p, const std::string& name,
                                  const Word& defining);
Presentation tietze_remove_generator(const Presentation& p, const std::string& name);

// Deletes a relator. Restricted to freely trivial or duplicate relators; other
// removals must go through the certificate-backed path in the cert module.
Presentation tietze_remove_relator(const Presentation& p, const std::string& label);

// Drops empty and duplicate relators, eliminates generators that are defined
// by a relator containing them exactly once. Deterministic given input order.
Presentation simplify(const Presentation& p);

AbelianInvariants abelianization(const Presentation& p);

// Smith normal form diagonal of an integer matrix, entries as decimal strings.
std::vector<std::string> smith_diagonal(const std::vector<std::vector<int64_t>>& matrix);

// Line-oriented presentation files: `gen: a1 a2`, `rel[label]: word`, `# comment`.
Presentation parse_presentation(const std::string& text, const WordLimits& limits = {});
std::string format_presentation(const Presentation& p);

}  // namespace twistkit
