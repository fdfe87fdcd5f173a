#pragma once

#include <string>
#include <vector>

#include "twistkit/homology.hpp"
#include "twistkit/word.hpp"

namespace twistkit {

struct BadChainConfigurationError : Error {
  explicit BadChainConfigurationError(const std::string& msg) : Error(msg) {}
};

struct BadLanternConfigurationError : Error {
  explicit BadLanternConfigurationError(const std::string& msg) : Error(msg) {}
};

struct MissingSideDataError : Error {
  explicit MissingSideDataError(const std::string& msg) : Error(msg) {}
};

// A twist about a named curve, possibly with reversed orientation. The name
// "1" marks a curve bounding a disk or Moebius band; its twist is dropped
// from generated relators and its class must vanish.
struct TwistSymbol {
  std::string name;
  bool inverse = false;
  Mod2Class cls;

  bool trivial() const { return name == "1"; }
  TwistSymbol inverted() const { return {name, !inverse, cls}; }
};

// "tc", "tc'" or "1".
TwistSymbol parse_symbol(const std::string& text, const Mod2Class& cls);

// Chain relator: (t1...tk)^(k+1) = t_c0 t_c0' for odd k and
// (t1...tk)^(2k+2) = t_c0 for even k. Consecutive chain curves must pair to 1
// and non-consecutive ones to 0; the boundary classes are determined by the
// chain (sum of the odd-position classes when k is odd, zero when k is even).
Word gen_chain(const AlphabetPtr& alphabet, const SurfaceModel& m,
               const std::vector<TwistSymbol>& curves, const TwistSymbol& c0,
               const TwistSymbol& c0p);

// Lantern relator: t_d1 t_d2 t_d3 = t_d4 t_d5 t_d6 t_d7 on a four holed
// sphere. All seven classes pair to 0, the boundary classes d4..d7 sum to
// zero, and {d1,d2,d3} matches {d4+d5, d4+d6, d4+d7} as multisets. A trivial
// symbol among the seven gives the extended (marked point) variant.
Word gen_lantern(const AlphabetPtr& alphabet, const SurfaceModel& m,
                 const std::vector<TwistSymbol>& d);

}  // namespace twistkit
