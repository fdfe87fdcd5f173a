#include "twistkit/schema.hpp"

#include <algorithm>

namespace twistkit {

TwistSymbol parse_symbol(const std::string& text, const Mod2Class& cls) {
  if (text == "1") return {"1", false, cls};
  if (!text.empty() && text.back() == '\'')
    return {text.substr(0, text.size() - 1), true, cls};
  return {text, false, cls};
}

namespace {

void push_symbol(std::vector<int32_t>& letters, const AlphabetPtr& alphabet,
                 const TwistSymbol& s, bool invert_it = false) {
  if (s.trivial()) return;
  int idx = alphabet->index_of(s.name);
  if (idx < 0) throw Error("symbol '" + s.name + "' is not in the alphabet");
  const bool inv = s.inverse != invert_it;
  letters.push_back(inv ? -(idx + 1) : (idx + 1));
}

}  // namespace

Word gen_chain(const AlphabetPtr& alphabet, const SurfaceModel& m,
               const std::vector<TwistSymbol>& curves, const TwistSymbol& c0,
               const TwistSymbol& c0p) {
  const int k = static_cast<int>(curves.size());
  if (k < 1) throw BadChainConfigurationError("chain needs at least one curve");
  for (int i = 0; i < k; ++i) {
    if (curves[i].trivial())
      throw BadChainConfigurationError("chain curve " + std::to_string(i + 1) + " is trivial");
    if (pairing(m, curves[i].cls, curves[i].cls) != 0)
      throw BadChainConfigurationError("chain curve " + std::to_string(i + 1) +
                                       " is one sided");
    for (int j = i + 1; j < k; ++j) {
      const int want = (j == i + 1) ? 1 : 0;
      if (pairing(m, curves[i].cls, curves[j].cls) != want)
        throw BadChainConfigurationError(
            "chain curves " + std::to_string(i + 1) + "," + std::to_string(j + 1) +
            " pair to " + std::to_string(1 - want) + ", expected " + std::to_string(want));
    }
  }

  Mod2Class boundary = Mod2Class::zero(m.rank());
  if (k % 2 == 1)
    for (int i = 0; i < k; i += 2) boundary = boundary + curves[i].cls;

  auto check_boundary = [&](const TwistSymbol& s, const char* role) {
    if (s.cls != boundary)
      throw BadChainConfigurationError(std::string(role) + " class " + format_class(s.cls, m) +
                                       " does not match the chain boundary class " +
                                       format_class(boundary, m));
    if (s.trivial() && !s.cls.is_zero())
      throw BadChainConfigurationError(std::string(role) +
                                       " is trivial but has a nonzero class");
  };

  std::vector<int32_t> letters;
  std::vector<int32_t> unit;
  for (const auto& c : curves) push_symbol(unit, alphabet, c);
  const int reps = (k % 2 == 1) ? k + 1 : 2 * k + 2;
  for (int r = 0; r < reps; ++r) letters.insert(letters.end(), unit.begin(), unit.end());

  if (k % 2 == 1) {
    check_boundary(c0, "c0");
    check_boundary(c0p, "c0'");
    // times (t_c0 t_c0')^-1
    push_symbol(letters, alphabet, c0p, true);
    push_symbol(letters, alphabet, c0, true);
  } else {
    check_boundary(c0, "c0");
    if (!c0p.trivial())
      throw BadChainConfigurationError("even chains have a single boundary curve");
    push_symbol(letters, alphabet, c0, true);
  }
  return Word::from_letters(alphabet, std::move(letters));
}

Word gen_lantern(const AlphabetPtr& alphabet, const SurfaceModel& m,
                 const std::vector<TwistSymbol>& d) {
  if (d.size() != 7) throw BadLanternConfigurationError("lantern needs exactly 7 curves");
  for (size_t i = 0; i < 7; ++i) {
    if (d[i].trivial() && !d[i].cls.is_zero())
      throw BadLanternConfigurationError("trivial curve d" + std::to_string(i + 1) +
                                         " must have class 0");
    for (size_t j = i; j < 7; ++j)
      if (pairing(m, d[i].cls, d[j].cls) != 0)
        throw BadLanternConfigurationError("curves d" + std::to_string(i + 1) + ",d" +
                                           std::to_string(j + 1) + " do not pair to 0");
  }
  Mod2Class outer = d[3].cls + d[4].cls + d[5].cls + d[6].cls;
  if (!outer.is_zero())
    throw BadLanternConfigurationError("boundary classes d4..d7 do not sum to 0");
  std::vector<Mod2Class> interior{d[0].cls, d[1].cls, d[2].cls};
  std::vector<Mod2Class> pairs{d[3].cls + d[4].cls, d[3].cls + d[5].cls, d[3].cls + d[6].cls};
  std::sort(interior.begin(), interior.end());
  std::sort(pairs.begin(), pairs.end());
  if (interior != pairs)
    throw BadLanternConfigurationError(
        "interior classes do not match the boundary pair sums of a four holed sphere");

  std::vector<int32_t> letters;
  for (int i = 0; i < 3; ++i) push_symbol(letters, alphabet, d[i]);
  for (int i = 6; i >= 3; --i) push_symbol(letters, alphabet, d[i], true);
  return Word::from_letters(alphabet, std::move(letters));
}

}  // namespace twistkit
