#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "twistkit/homology.hpp"
#include "twistkit/presentation.hpp"
#include "twistkit/schema.hpp"
#include "twistkit/word.hpp"

namespace twistkit {

// Shared context of a certificate: the symbol alphabet (generators plus
// opaque macro symbols), macro expansions, curve classes, declared trivial
// symbols and labelled relators usable by apply/rewrite steps.
struct CertContext {
  SurfaceModel surface{1, 0};
  AlphabetPtr alphabet;
  std::map<std::string, Word> macros;
  std::map<std::string, std::pair<TwistSymbol, TwistSymbol>> pushes;
  std::map<std::string, Mod2Class> classes;
  std::set<std::string> trivial;
  std::vector<std::pair<std::string, Word>> relators;

  const Word* find_relator(const std::string& label) const;
  bool has_class(const std::string& name) const { return classes.count(name) != 0; }
  Mod2Class class_of(const std::string& name) const;
  // Transvection for classed symbols, expansion image for macros.
  Mod2Matrix matrix_of_symbol(const std::string& name) const;
  Mod2Matrix matrix_of_word(const Word& w) const;
};

enum class PushKind { Point, Crosscap, CrosscapSquare };

struct PushSideData {
  std::optional<TwistSymbol> gamma1;  // right side boundary curve
  std::optional<TwistSymbol> gamma2;  // left side boundary curve
  std::optional<TwistSymbol> boundary;  // for the squared one sided push
};

// Registers the push map of a loop as a macro t_gamma1 * t_gamma2^-1 (or
// t_delta for the squared one sided case) and returns the twist pair.
std::pair<TwistSymbol, TwistSymbol> expand_push(CertContext& ctx, PushKind kind,
                                                const std::string& macro_name,
                                                const PushSideData& side);

struct StepApply {
  std::string label;
  int pos = 0;
  bool insert = true;
  int rot = 0;
  bool inv = false;
};

struct StepRewrite {
  int pos = 0;
  Word u, v;
  std::string label;
};

// Relation f t f^-1 = t' in its four orientations. unfold replaces [to] by
// f [from] f^-1, fold is the inverse move, slideL turns f [from] into [to] f,
// slideR turns [from] f into f [to].
struct StepConj {
  std::string dir;  // unfold | fold | slideL | slideR
  int pos = 0;
  Word f;
  std::string from, to;  // symbol tokens, optionally primed
};

struct StepMacro {
  int pos = 0;
  std::string name;
  bool expand = true;
};

struct StepSchema {
  std::string kind;  // chain | lantern | compose | boundary
  int pos = 0;
  bool insert = true;
  int rot = 0;
  bool inv = false;
  std::vector<std::string> curves;  // chain curves or the 7 lantern symbols
  std::string c0 = "1", c0p = "1";
  std::string p, q, r;  // compose operands (push macros)
  std::string sym;      // boundary symbol
};

struct StepReduce {};

using CertStep = std::variant<StepApply, StepRewrite, StepConj, StepMacro, StepSchema, StepReduce>;

struct Certificate {
  CertContext ctx;
  Word start;
  Word target;
  std::vector<CertStep> steps;
  std::vector<std::string> step_texts;  // original lines, for reporting
};

Certificate parse_certificate(const std::string& text, const WordLimits& limits = {});

struct CertReport {
  bool valid = false;
  int failed_step = 0;  // 1-based; 0 when the context itself is rejected
  std::string reason;
  std::vector<Word> trace;  // word after each step
};

CertReport check_certificate(const Certificate& cert);

// Tietze removal of a non-obvious relator: the certificate must reduce the
// relator word to the empty word using only relators that remain in p.
Presentation remove_relator_with_certificate(const Presentation& p, const std::string& label,
                                             const Certificate& cert);

}  // namespace twistkit
