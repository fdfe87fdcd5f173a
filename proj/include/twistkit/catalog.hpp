#pragma once

#include <string>
#include <vector>

#include "twistkit/homology.hpp"
#include "twistkit/presentation.hpp"

namespace twistkit {

struct InadmissibleParametersError : Error {
  explicit InadmissibleParametersError(const std::string& msg) : Error(msg) {}
};

struct UnknownCurveError : Error {
  explicit UnknownCurveError(const std::string& msg) : Error(msg) {}
};

struct InstantiationOptions {
  bool subst_rho = false;          // replace rho / rhob by their defining words
  std::string assume_a7 = "a1";    // reading of the underspecified b0 identity
  bool include_superfluous = true; // families redundant in the closed case
  bool include_a7c = false;        // family with the out-of-range index
  std::string a7c_reading;         // caller-supplied word for the conjugator
};

struct Instantiation {
  Presentation presentation;
  std::vector<std::string> notes;  // provenance of assumptions and substitutions
};

std::vector<std::string> catalog_entries();
bool admissible(const std::string& entry, int g, int n);

Instantiation instantiate_full(const std::string& entry, int g, int n,
                               const InstantiationOptions& opts = {});
Presentation instantiate(const std::string& entry, int g, int n,
                         const InstantiationOptions& opts = {});
int relator_count(const std::string& entry, int g, int n,
                  const InstantiationOptions& opts = {});

// Frozen mod-2 classes of the named curves in N_{g,n} (n <= 1).
// Names: alpha1.., beta, beta0.., betabar0.., gamma, eps, zeta, delta.
Mod2Class curve_class(const std::string& name, int g, int n);

// Greek aliases (alpha_1 written with unicode letters or subscripts) fold to
// the canonical ASCII names above.
std::string normalize_curve_name(const std::string& name);

// Transvection matrices for every generator of a catalog presentation.
MatrixAssignment catalog_assignment(const Presentation& p, int g, int n);

// One `family <label> guard "..." template "..."` line per relator family.
std::string guard_manifest(const std::string& entry);

// Labels of families that are redundant once the surface is closed.
std::vector<std::string> superfluous_in_closed(const std::string& entry);

// Reconstructs the frozen curve classes from pairing constraints extracted
// from a reference instantiation, reporting per-curve ambiguity. Used by the
// self-check that validates the frozen table.
SolveResult reconstruct_classes(int g, int n);

}  // namespace twistkit
