#include "twistkit/catalog.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace twistkit {

namespace {

// Paper tags use combining macrons and subscript digits.
const std::string kAb = "Ā";
const std::string kBb = "B̄";
const std::string kCb = "C̄";
const std::string kS1 = "₁";
const std::string kS2 = "₂";
const std::string kS3 = "₃";

std::string A(int i) { return "a" + std::to_string(i); }

// "a<from> a<from+1> ... a<to>"
std::string arun(int from, int to) {
  std::string out;
  for (int i = from; i <= to; ++i) {
    if (!out.empty()) out += ' ';
    out += A(i);
  }
  return out;
}

std::string num(int k) { return std::to_string(k); }

struct Inst {
  std::string label;
  std::string word;
};

struct Family {
  std::string label;
  std::string guard;
  std::string tmpl;
  bool superfluous_odd_closed = false;
  bool superfluous_even_closed = false;
  std::function<void(int g, const InstantiationOptions&, std::vector<Inst>&)> emit;
};

std::vector<Family> base_families() {
  std::vector<Family> fams;

  fams.push_back({"A1", "g>=4, |i-j|>1", "a{i} a{j} (a{j} a{i})^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    for (int i = 1; i + 2 <= g - 1; ++i)
                      for (int j = i + 2; j <= g - 1; ++j)
                        out.push_back({"A1(i=" + num(i) + ",j=" + num(j) + ")",
                                       A(i) + " " + A(j) + " " + A(i) + "' " + A(j) + "'"});
                  }});

  fams.push_back({"A2", "i=1,...,g-2", "a{i} a{i+1} a{i} (a{i+1} a{i} a{i+1})^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    for (int i = 1; i <= g - 2; ++i)
                      out.push_back({"A2(i=" + num(i) + ")",
                                     A(i) + " " + A(i + 1) + " " + A(i) + " (" + A(i + 1) +
                                         " " + A(i) + " " + A(i + 1) + ")^-1"});
                  }});

  fams.push_back({"A3", "g>=4, i!=4", "a{i} b (b a{i})^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g < 4) return;
                    for (int i = 1; i <= g - 1; ++i) {
                      if (i == 4) continue;
                      out.push_back({"A3(i=" + num(i) + ")",
                                     A(i) + " b (b " + A(i) + ")^-1"});
                    }
                  }});

  fams.push_back({"A4", "g>=5", "b a4 b (a4 b a4)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g >= 5) out.push_back({"A4", "b a4 b (a4 b a4)^-1"});
                  }});

  fams.push_back({"A5", "g>=5", "(a2 a3 a4 b)^10 ((a1 a2 a3 a4 b)^6)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g >= 5)
                      out.push_back({"A5", "(a2 a3 a4 b)^10 ((a1 a2 a3 a4 b)^6)^-1"});
                  }});

  fams.push_back({"A6", "g>=7", "(a2 a3 a4 a5 a6 b)^12 ((a1 a2 a3 a4 a5 a6 b)^9)^-1", false,
                  false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g >= 7)
                      out.push_back(
                          {"A6", "(a2 a3 a4 a5 a6 b)^12 ((a1 a2 a3 a4 a5 a6 b)^9)^-1"});
                  }});

  fams.push_back({kAb + "1" + kS1, "g>=5, j>=4", "e a{j} (a{j} e)^-1", false, true,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g < 5) return;
                    for (int j = 4; j <= g - 1; ++j)
                      out.push_back({kAb + "1" + kS1 + "(j=" + num(j) + ")",
                                     "e " + A(j) + " (" + A(j) + " e)^-1"});
                  }});

  fams.push_back({kAb + "1" + kS2, "g>=5, j>=4", "f a{j} (a{j} f)^-1", true, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g < 5) return;
                    for (int j = 4; j <= g - 1; ++j)
                      out.push_back({kAb + "1" + kS2 + "(j=" + num(j) + ")",
                                     "f " + A(j) + " (" + A(j) + " f)^-1"});
                  }});

  fams.push_back({kAb + "2" + kS1, "", "a1 e a1 (e a1 e)^-1", false, true,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kAb + "2" + kS1, "a1 e a1 (e a1 e)^-1"});
                  }});

  fams.push_back({kAb + "2" + kS2, "g>=4", "a3' e a3' (e a3' e)^-1", false, true,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g >= 4) out.push_back({kAb + "2" + kS2, "a3' e a3' (e a3' e)^-1"});
                  }});

  fams.push_back({kAb + "2" + kS3, "", "a1 f a1 (f a1 f)^-1", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kAb + "2" + kS3, "a1 f a1 (f a1 f)^-1"});
                  }});

  fams.push_back({kAb + "3" + kS1, "g=4,5", "a1 c (c a1)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g == 4 || g == 5) out.push_back({kAb + "3" + kS1, "a1 c (c a1)^-1"});
                  }});

  fams.push_back({kAb + "3" + kS2, "g=4,5", "e c (c e)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g == 4 || g == 5) out.push_back({kAb + "3" + kS2, "e c (c e)^-1"});
                  }});

  fams.push_back({kAb + "4", "g=5,6", "c a4 c (a4 c a4)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g == 5 || g == 6) out.push_back({kAb + "4", "c a4 c (a4 c a4)^-1"});
                  }});

  fams.push_back({kAb + "5", "g=5,6", "(e' a3 a4 c)^10 ((a1' e' a3 a4 c)^6)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g == 5 || g == 6)
                      out.push_back({kAb + "5", "(e' a3 a4 c)^10 ((a1' e' a3 a4 c)^6)^-1"});
                  }});

  fams.push_back({kAb + "6", "g=7,8",
                  "(e' a3 a4 a5 a6 c)^12 ((a1' e' a3 a4 a5 a6 c)^9)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g == 7 || g == 8)
                      out.push_back({kAb + "6",
                                     "(e' a3 a4 a5 a6 c)^12 ((a1' e' a3 a4 a5 a6 c)^9)^-1"});
                  }});

  fams.push_back({kBb + "1", "g>=4",
                  "(a2 a3 a1 a2 e a1 a3' e)(a2 a3 a1 a2 f a1 a3' f)", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g >= 4)
                      out.push_back({kBb + "1",
                                     "a2 a3 a1 a2 e a1 a3' e a2 a3 a1 a2 f a1 a3' f"});
                  }});

  fams.push_back({kBb + "2" + kS1, "", "y2 (a2 a1 e a1 a2 a1 a2 a1 a2 f a1 a2)^-1", false,
                  false, [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kBb + "2" + kS1,
                                   "y2 (a2 a1 e a1 a2 a1 a2 a1 a2 f a1 a2)^-1"});
                  }});

  fams.push_back(
      {kBb + "2" + kS2, "",
       "(a2 a1 e a1 a2 a1 a2 a1 a2 f a1 a2)(a2 a1 f a1 a2 a1 a2 a1 a2 e a1 a2)", true, false,
       [](int, const InstantiationOptions&, std::vector<Inst>& out) {
         out.push_back({kBb + "2" + kS2,
                        "a2 a1 e a1 a2 a1 a2 a1 a2 f a1 a2 a2 a1 f a1 a2 a1 a2 a1 a2 e a1 a2"});
       }});

  fams.push_back({kBb + "3", "g>=4", "y2 a3 (a3 y2)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g >= 4) out.push_back({kBb + "3", "y2 a3 (a3 y2)^-1"});
                  }});

  fams.push_back({kBb + "4" + kS1, "", "e a2 (a2 e)^-1", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kBb + "4" + kS1, "e a2 (a2 e)^-1"});
                  }});

  fams.push_back({kBb + "4" + kS2, "", "f a2 (a2 f)^-1", true, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kBb + "4" + kS2, "f a2 (a2 f)^-1"});
                  }});

  fams.push_back({kBb + "6" + kS1, "g>=4",
                  "b c ((a1 a2 a3 f' a3' a2' a1')(a2' a3' e' a3 a2))^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g >= 4)
                      out.push_back({kBb + "6" + kS1,
                                     "b c (a1 a2 a3 f' a3' a2' a1' a2' a3' e' a3 a2)^-1"});
                  }});

  fams.push_back(
      {kBb + "6" + kS2, "g=4,5",
       "c y2 b y2' ((a1' e' a3 a2 a3' e a1)(e a3' y2 a2 y2' a3 e'))^-1", false, false,
       [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
         if (g == 4 || g == 5)
           out.push_back({kBb + "6" + kS2,
                          "c y2 b y2' (a1' e' a3 a2 a3' e a1 e a3' y2 a2 y2' a3 e')^-1"});
       }});

  fams.push_back(
      {kBb + "7" + kS1, "g>=6", "(W c)(b W)^-1, W=a4 a5 a3 a4 a2 a3 a1 a2 e a1 a3' e a4' a3' a5' a4'",
       false, false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
         if (g < 6) return;
         const std::string w = "a4 a5 a3 a4 a2 a3 a1 a2 e a1 a3' e a4' a3' a5' a4'";
         out.push_back({kBb + "7" + kS1, w + " c (b " + w + ")^-1"});
       }});

  fams.push_back(
      {kBb + "7" + kS2, "g>=6",
       "(U b V y2)(y2 U b V)^-1, U=a2' a1' a3' a2' a4' a3' a5' a4', V=a4 a5 a3 a4 a2 a3 a1 a2",
       false, false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
         if (g < 6) return;
         const std::string u = "a2' a1' a3' a2' a4' a3' a5' a4'";
         const std::string v = "a4 a5 a3 a4 a2 a3 a1 a2";
         out.push_back({kBb + "7" + kS2,
                        u + " b " + v + " y2 (y2 " + u + " b " + v + ")^-1"});
       }});

  fams.push_back(
      {kBb + "8" + kS1, "g>=5",
       "(a1 e a3' a4' c a4 a3 e' a1')(a1' a2' a3' a4' b' a4 a3 a2 a1) = a4' (a3' a2' e' a3 a4 a3' e a2 a3) a2' e'",
       false, false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
         if (g < 5) return;
         out.push_back({kBb + "8" + kS1,
                        "a1 e a3' a4' c a4 a3 e' a1' a1' a2' a3' a4' b' a4 a3 a2 a1 "
                        "(a4' a3' a2' e' a3 a4 a3' e a2 a3 a2' e')^-1"});
       }});

  fams.push_back(
      {kBb + "8" + kS2, "g=5,6",
       "(a1' a2' a3' a4' b a4 a3 a2 a1)(a1 f a3' a4' y2' c' y2 a4 a3 f' a1') = a4' (a3' f a2 a3 a4 a3' a2' f' a3) f a2",
       false, false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
         if (g != 5 && g != 6) return;
         out.push_back({kBb + "8" + kS2,
                        "a1' a2' a3' a4' b a4 a3 a2 a1 a1 f a3' a4' y2' c' y2 a4 a3 f' a1' "
                        "(a4' a3' f a2 a3 a4 a3' a2' f' a3 f a2)^-1"});
       }});

  return fams;
}

std::vector<Family> even_families() {
  std::vector<Family> fams;

  fams.push_back({"A7", "g>=6 even; b0=a read as b0=<assume-a7>, b1=b", "b0 a', b1 b'", false,
                  false, [](int, const InstantiationOptions& o, std::vector<Inst>& out) {
                    out.push_back({"A7(b0)", "b0 " + o.assume_a7 + "'"});
                    out.push_back({"A7(b1)", "b1 b'"});
                  }});

  fams.push_back(
      {"A8", "1<=i<=(g-4)/2",
       "b{i+1} ((b{i-1} a{2i} a{2i+1} a{2i+2} a{2i+3} b{i})^5 (b{i-1} a{2i} a{2i+1} a{2i+2} a{2i+3})^-6)^-1",
       false, false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
         for (int i = 1; i <= (g - 4) / 2; ++i) {
           std::string chain = "b" + num(i - 1) + " " + arun(2 * i, 2 * i + 3);
           out.push_back({"A8(i=" + num(i) + ")",
                          "b" + num(i + 1) + " ((" + chain + " b" + num(i) + ")^5 (" + chain +
                              ")^-6)^-1"});
         }
       }});

  fams.push_back({"A9a", "g=6", "b2 b (b b2)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g == 6) out.push_back({"A9a", "b2 b (b b2)^-1"});
                  }});

  fams.push_back({"A9b", "g>=8", "b{(g-2)/2} a{g-5} (a{g-5} b{(g-2)/2})^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g < 8) return;
                    std::string bk = "b" + num((g - 2) / 2);
                    out.push_back({"A9b", bk + " " + A(g - 5) + " (" + A(g - 5) + " " + bk +
                                              ")^-1"});
                  }});

  fams.push_back({kAb + "7a", "g=6", "bb0 a1, bb1 c'", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g != 6) return;
                    out.push_back({kAb + "7a(b̄0)", "bb0 a1"});
                    out.push_back({kAb + "7a(b̄1)", "bb1 c'"});
                  }});

  fams.push_back({kAb + "7b", "g=8", "bb1 c'", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g == 8) out.push_back({kAb + "7b", "bb1 c'"});
                  }});

  fams.push_back(
      {kAb + "7c", "i=(g-6)/2,(g-4)/2, i>=2; excluded by default (a_g out of range)",
       "bb{i} (z{g-1} b{i} z{g-1}^-1)^-1", false, false,
       [](int g, const InstantiationOptions& o, std::vector<Inst>& out) {
         if (!o.include_a7c) return;
         if (o.a7c_reading.empty())
           throw InadmissibleParametersError(
               "family " + kAb + "7c needs a reading for the conjugator: the stated word uses "
               "a" + num(g) + " which is outside the generator range");
         for (int i : {(g - 6) / 2, (g - 4) / 2}) {
           if (i < 2) continue;
           out.push_back({kAb + "7c(i=" + num(i) + ")",
                          "bb" + num(i) + " ((" + o.a7c_reading + ")^1 b" + num(i) + " (" +
                              o.a7c_reading + ")^-1)^-1"});
         }
       }});

  fams.push_back(
      {kAb + "8a", "g=6", "bb2 ((bb0 e' a3 a4 a5 bb1)^5 (bb0 e' a3 a4 a5)^-6)^-1", false, false,
       [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
         if (g == 6)
           out.push_back({kAb + "8a", "bb2 ((bb0 e' a3 a4 a5 bb1)^5 (bb0 e' a3 a4 a5)^-6)^-1"});
       }});

  fams.push_back(
      {kAb + "8b", "g>=8",
       "bb{(g-2)/2} ((bb{(g-6)/2} a{g-4} a{g-3} a{g-2} a{g-1} bb{(g-4)/2})^5 (bb{(g-6)/2} a{g-4} a{g-3} a{g-2} a{g-1})^-6)^-1",
       false, false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
         if (g < 8) return;
         std::string head = "bb" + num((g - 6) / 2) + " " + arun(g - 4, g - 1);
         out.push_back({kAb + "8b", "bb" + num((g - 2) / 2) + " ((" + head + " bb" +
                                        num((g - 4) / 2) + ")^5 (" + head + ")^-6)^-1"});
       }});

  fams.push_back({kAb + "9a", "g=6", "bb2 c (c bb2)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g == 6) out.push_back({kAb + "9a", "bb2 c (c bb2)^-1"});
                  }});

  fams.push_back({kAb + "9b", "g>=8", "bb{(g-2)/2} a{g-5} (a{g-5} bb{(g-2)/2})^-1", false,
                  false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    if (g < 8) return;
                    std::string bk = "bb" + num((g - 2) / 2);
                    out.push_back({kAb + "9b", bk + " " + A(g - 5) + " (" + A(g - 5) + " " +
                                                   bk + ")^-1"});
                  }});

  return fams;
}

std::vector<Family> c_odd_families() {
  std::vector<Family> fams;

  fams.push_back({"C1a", "g>=5 odd; defines rho", "(a1 ... a{g-1})^g rho'", false, false,
                  [](int g, const InstantiationOptions& o, std::vector<Inst>& out) {
                    if (o.subst_rho) return;  // the substitution consumes the definition
                    out.push_back({"C1a", "(" + arun(1, g - 1) + ")^" + num(g) + " rho'"});
                  }});

  fams.push_back({kCb + "1a", "g>=5 odd", "(a1' e' a3 ... a{g-1})^g (y2 rho)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "1a", "(a1' e' " + arun(3, g - 1) + ")^" + num(g) +
                                                   " (y2 rho)^-1"});
                  }});

  fams.push_back({"C2", "1<=i<=g-1", "a{i} rho (rho a{i})^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    for (int i = 1; i <= g - 1; ++i)
                      out.push_back({"C2(i=" + num(i) + ")",
                                     A(i) + " rho (rho " + A(i) + ")^-1"});
                  }});

  fams.push_back({kCb + "2", "", "rho e (f rho)^-1", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "2", "rho e (f rho)^-1"});
                  }});

  fams.push_back({kCb + "5" + kS1, "", "rho y2 (y2' rho)^-1", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "5" + kS1, "rho y2 (y2' rho)^-1"});
                  }});

  fams.push_back({"C3", "", "rho rho", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({"C3", "rho rho"});
                  }});

  fams.push_back({kCb + "4a", "g>=5 odd", "(a2 a3 ... a{g-1} e' a3 ... a{g-1})^((g-1)/2)",
                  false, false, [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "4a", "(" + arun(2, g - 1) + " e' " + arun(3, g - 1) +
                                                   ")^" + num((g - 1) / 2)});
                  }});

  return fams;
}

std::vector<Family> c_even_families() {
  std::vector<Family> fams;

  fams.push_back({"C1b", "g>=4 even", "(a1 ... a{g-1})^g", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({"C1b", "(" + arun(1, g - 1) + ")^" + num(g)});
                  }});

  fams.push_back({kCb + "2" + kS1, "", "rhob a1 (a1' rhob)^-1", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "2" + kS1, "rhob a1 (a1' rhob)^-1"});
                  }});

  fams.push_back({kCb + "2" + kS2, "3<=i<=g-1", "rhob a{i} (a{i} rhob)^-1", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    for (int i = 3; i <= g - 1; ++i)
                      out.push_back({kCb + "2" + kS2 + "(i=" + num(i) + ")",
                                     "rhob " + A(i) + " (" + A(i) + " rhob)^-1"});
                  }});

  fams.push_back({kCb + "2" + kS3, "", "rhob a2 (e' rhob)^-1", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "2" + kS3, "rhob a2 (e' rhob)^-1"});
                  }});

  fams.push_back({kCb + "5" + kS2, "", "rhob y2 (y2' rhob)^-1", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "5" + kS2, "rhob y2 (y2' rhob)^-1"});
                  }});

  fams.push_back({kCb + "3", "", "rhob rhob", false, false,
                  [](int, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "3", "rhob rhob"});
                  }});

  fams.push_back({kCb + "4", "g>=4 even", "(rhob a2 a3 ... a{g-1})^(g-1)", false, false,
                  [](int g, const InstantiationOptions&, std::vector<Inst>& out) {
                    out.push_back({kCb + "4",
                                   "(rhob " + arun(2, g - 1) + ")^" + num(g - 1)});
                  }});

  return fams;
}

std::vector<std::string> twist_generators(int g) {
  std::vector<std::string> names;
  for (int i = 1; i <= g - 1; ++i) names.push_back(A(i));
  names.push_back("e");
  names.push_back("f");
  names.push_back("y2");
  if (g >= 4) {
    names.push_back("b");
    names.push_back("c");
  }
  if (g >= 6 && g % 2 == 0) {
    for (int i = 0; i <= (g - 2) / 2; ++i) names.push_back("b" + num(i));
    for (int i = (g - 6) / 2; i <= (g - 2) / 2; ++i) names.push_back("bb" + num(i));
  }
  return names;
}

// The closed-surface words that eliminate rho / rhob under substitution.
std::string rho_word(int g) { return "(" + arun(1, g - 1) + ")^" + num(g); }
std::string rhob_word(int g) {
  return "(" + arun(2, g - 1) + " e' " + arun(3, g - 1) + ")^" + num((g - 2) / 2) + " " +
         arun(2, g - 1);
}

struct FixedEntry {
  std::vector<std::string> gens;
  std::vector<std::pair<std::string, std::string>> rels;
};

bool fixed_entry(const std::string& entry, int g, int n, FixedEntry* out) {
  if (entry == "m_n2_0" && g == 2 && n == 0) {
    *out = {{"a1", "y"}, {{"a1_sq", "a1 a1"}, {"y_sq", "y y"}, {"a1y_sq", "(a1 y)^2"}}};
    return true;
  }
  if (entry == "m_n2_1" && g == 2 && n == 1) {
    *out = {{"a1", "y"}, {{"comm", "y a1 y' a1"}}};
    return true;
  }
  if (entry == "m_n3_0" && g == 3 && n == 0) {
    *out = {{"a1", "a2", "y"},
            {{"braid", "a1 a2 a1 a2' a1' a2'"},
             {"chain6", "(a1 a2)^6"},
             {"y_sq", "y y"},
             {"a1y_sq", "(a1 y)^2"},
             {"a2y_sq", "(a2 y)^2"}}};
    return true;
  }
  if (entry == "t_small") {
    if (g == 1 && (n == 0 || n == 1)) {
      *out = {{}, {}};
      return true;
    }
    if (g == 2 && n == 0) {
      *out = {{"a1"}, {{"a1_sq", "a1 a1"}}};
      return true;
    }
    if (g == 2 && n == 1) {
      *out = {{"a1", "y2"}, {{"comm", "a1 y2 a1' y2'"}}};
      return true;
    }
    if (g == 3 && n == 0) {
      *out = {{"a1", "a2"}, {{"braid", "a1 a2 a1 a2' a1' a2'"}, {"chain6", "(a1 a2)^6"}}};
      return true;
    }
  }
  return false;
}

std::vector<Family> families_for(const std::string& entry, int g) {
  std::vector<Family> fams;
  auto append = [&](std::vector<Family> more) {
    for (auto& f : more) fams.push_back(std::move(f));
  };
  if (entry == "t_ng1_odd" || entry == "t_ng0_odd") {
    append(base_families());
  } else if (entry == "t_ng1_even" || entry == "t_ng0_even") {
    append(base_families());
    if (g >= 6) append(even_families());
  }
  if (entry == "t_ng0_odd") append(c_odd_families());
  if (entry == "t_ng0_even") append(c_even_families());
  return fams;
}

bool skip_superfluous(const std::string& entry, const Family& f,
                      const InstantiationOptions& opts) {
  if (opts.include_superfluous) return false;
  if (entry == "t_ng0_odd") return f.superfluous_odd_closed;
  if (entry == "t_ng0_even") return f.superfluous_even_closed;
  return false;
}

}  // namespace

std::vector<std::string> catalog_entries() {
  return {"m_n2_0", "m_n2_1", "m_n3_0",    "t_small",
          "t_ng1_odd", "t_ng1_even", "t_ng0_odd", "t_ng0_even"};
}

bool admissible(const std::string& entry, int g, int n) {
  FixedEntry fe;
  if (entry == "m_n2_0" || entry == "m_n2_1" || entry == "m_n3_0" || entry == "t_small")
    return fixed_entry(entry, g, n, &fe);
  if (entry == "t_ng1_odd") return n == 1 && g >= 3 && g % 2 == 1;
  if (entry == "t_ng1_even") return n == 1 && g >= 4 && g % 2 == 0;
  if (entry == "t_ng0_odd") return n == 0 && g >= 5 && g % 2 == 1;
  if (entry == "t_ng0_even") return n == 0 && g >= 4 && g % 2 == 0;
  return false;
}

Instantiation instantiate_full(const std::string& entry, int g, int n,
                               const InstantiationOptions& opts) {
  if (!admissible(entry, g, n))
    throw InadmissibleParametersError("entry '" + entry + "' is not defined at (g=" +
                                      std::to_string(g) + ", n=" + std::to_string(n) + ")");
  Instantiation out;

  FixedEntry fe;
  if (fixed_entry(entry, g, n, &fe)) {
    Presentation p(make_alphabet(fe.gens));
    for (const auto& [label, text] : fe.rels)
      p.add_relator(parse_word(text, p.alphabet()), label);
    out.presentation = std::move(p);
    return out;
  }

  const bool closed = entry == "t_ng0_odd" || entry == "t_ng0_even";
  const bool odd = entry == "t_ng1_odd" || entry == "t_ng0_odd";

  std::vector<std::string> names = twist_generators(g);
  if (closed) names.push_back(odd ? "rho" : "rhob");
  AlphabetPtr alpha = make_alphabet(names);

  Presentation p(alpha);
  for (const auto& fam : families_for(entry, g)) {
    if (skip_superfluous(entry, fam, opts)) {
      out.notes.push_back("omitted family " + fam.label + " (superfluous in the closed case)");
      continue;
    }
    std::vector<Inst> insts;
    fam.emit(g, opts, insts);
    for (const auto& inst : insts)
      p.add_relator(parse_word(inst.word, alpha), inst.label, fam.guard);
  }
  if (g >= 6 && g % 2 == 0)
    out.notes.push_back("A7: undefined symbol 'a' read as '" + opts.assume_a7 + "'");

  if (closed && opts.subst_rho) {
    std::vector<std::string> reduced_names = twist_generators(g);
    AlphabetPtr target = make_alphabet(reduced_names);
    const std::string sym = odd ? "rho" : "rhob";
    const std::string word_text = odd ? rho_word(g) : rhob_word(g);
    std::map<std::string, Word> images;
    images[sym] = parse_word(word_text, target);
    Presentation q(target);
    for (const auto& r : p.relators())
      q.add_relator(substitute(r.word, images, target), r.label, r.guard);
    out.notes.push_back("substituted " + sym + " = " + word_text);
    if (odd) out.notes.push_back("omitted family C1a (definition consumed by substitution)");
    out.presentation = std::move(q);
    return out;
  }

  out.presentation = std::move(p);
  return out;
}

Presentation instantiate(const std::string& entry, int g, int n,
                         const InstantiationOptions& opts) {
  return instantiate_full(entry, g, n, opts).presentation;
}

int relator_count(const std::string& entry, int g, int n, const InstantiationOptions& opts) {
  return static_cast<int>(instantiate(entry, g, n, opts).relators().size());
}

std::string normalize_curve_name(const std::string& name) {
  std::string out;
  size_t i = 0;
  auto starts = [&](const char* pat) {
    return name.compare(i, std::string(pat).size(), pat) == 0;
  };
  while (i < name.size()) {
    if (starts("α")) { out += "alpha"; i += 2; continue; }
    if (starts("β̄")) { out += "betabar"; i += 4; continue; }
    if (starts("β")) { out += "beta"; i += 2; continue; }
    if (starts("γ")) { out += "gamma"; i += 2; continue; }
    if (starts("δ")) { out += "delta"; i += 2; continue; }
    if (starts("ε")) { out += "eps"; i += 2; continue; }
    if (starts("ζ")) { out += "zeta"; i += 2; continue; }
    if (starts("̄")) { i += 2; continue; }  // stray macron
    // subscript digits
    if (i + 2 < name.size() && static_cast<unsigned char>(name[i]) == 0xe2 &&
        static_cast<unsigned char>(name[i + 1]) == 0x82) {
      unsigned char b = static_cast<unsigned char>(name[i + 2]);
      if (b >= 0x80 && b <= 0x89) {
        out += static_cast<char>('0' + (b - 0x80));
        i += 3;
        continue;
      }
    }
    out += name[i++];
  }
  return out;
}

Mod2Class curve_class(const std::string& raw_name, int g, int n) {
  if (n > 1)
    throw UnknownCurveError("curve classes are frozen for n <= 1 only");
  SurfaceModel m(g, n);
  const std::string name = normalize_curve_name(raw_name);
  auto mu_range = [&](int from, int to) {
    uint32_t bits = 0;
    for (int i = from; i <= to; ++i) bits |= 1u << (i - 1);
    return Mod2Class(bits, m.rank());
  };
  auto tail_int = [&](size_t prefix) -> int {
    if (name.size() <= prefix) return -1;
    int value = 0;
    for (char ch : name.substr(prefix)) {
      if (ch < '0' || ch > '9') return -1;
      value = value * 10 + (ch - '0');
    }
    return value;
  };
  if (name == "delta") {
    if (g < 2) throw UnknownCurveError("delta needs g >= 2");
    return Mod2Class::zero(m.rank());
  }
  if (name == "eps" || name == "zeta") {
    if (g < 3) throw UnknownCurveError(name + " needs g >= 3");
    return mu_range(2, 3);
  }
  if (name == "beta" || name == "gamma") {
    if (g < 4) throw UnknownCurveError(name + " needs g >= 4");
    return mu_range(1, 4);
  }
  if (name.rfind("alpha", 0) == 0) {
    int i = tail_int(5);
    if (i >= 1 && i <= g - 1) return mu_range(i, i + 1);
    throw UnknownCurveError("alpha index out of range for g=" + std::to_string(g));
  }
  if (name.rfind("betabar", 0) == 0) {
    int i = tail_int(7);
    if (i >= 0 && 2 * i + 2 <= g) return mu_range(1, 2 * i + 2);
    throw UnknownCurveError("betabar index out of range for g=" + std::to_string(g));
  }
  if (name.rfind("beta", 0) == 0) {
    int i = tail_int(4);
    if (i >= 0 && 2 * i + 2 <= g) return mu_range(1, 2 * i + 2);
    throw UnknownCurveError("beta index out of range for g=" + std::to_string(g));
  }
  throw UnknownCurveError("no frozen class for curve '" + raw_name + "'");
}

MatrixAssignment catalog_assignment(const Presentation& p, int g, int n) {
  SurfaceModel m(g, n);
  MatrixAssignment assign;
  for (const auto& gen : p.alphabet()->names()) {
    std::string curve;
    if (gen == "e") curve = "eps";
    else if (gen == "f") curve = "zeta";
    else if (gen == "b") curve = "beta";
    else if (gen == "c") curve = "gamma";
    else if (gen == "y2") curve = "delta";
    else if (gen.rfind("bb", 0) == 0) curve = "betabar" + gen.substr(2);
    else if (gen[0] == 'a' && gen.size() > 1) curve = "alpha" + gen.substr(1);
    else if (gen[0] == 'b' && gen.size() > 1) curve = "beta" + gen.substr(1);
    else if (gen == "rho" || gen == "rhob")
      throw MissingAssignmentError("generator '" + gen +
                                   "' is not a twist about a curve; instantiate with "
                                   "substitution before verification");
    else
      throw MissingAssignmentError("no curve is mapped to generator '" + gen + "'");
    assign[gen] = transvection(m, curve_class(curve, g, n));
  }
  return assign;
}

std::string guard_manifest(const std::string& entry) {
  std::ostringstream os;
  FixedEntry fe;
  for (int g = 1; g <= 3; ++g)
    for (int n = 0; n <= 1; ++n)
      if ((entry == "m_n2_0" || entry == "m_n2_1" || entry == "m_n3_0" || entry == "t_small") &&
          fixed_entry(entry, g, n, &fe)) {
        for (const auto& [label, word] : fe.rels)
          os << "family " << label << " guard \"g=" << g << ",n=" << n << "\" template \""
             << word << "\"\n";
      }
  if (entry == "t_ng1_odd" || entry == "t_ng1_even" || entry == "t_ng0_odd" ||
      entry == "t_ng0_even") {
    // Family list is genus independent apart from the even extension block;
    // show the full shape at a representative genus.
    const int g = entry == "t_ng1_odd" || entry == "t_ng0_odd" ? 7 : 8;
    for (const auto& fam : families_for(entry, g))
      os << "family " << fam.label << " guard \"" << fam.guard << "\" template \"" << fam.tmpl
         << "\"\n";
  }
  return os.str();
}

std::vector<std::string> superfluous_in_closed(const std::string& entry) {
  std::vector<std::string> out;
  for (const auto& fam : families_for(entry, entry == "t_ng0_even" ? 8 : 7)) {
    if (entry == "t_ng0_odd" && fam.superfluous_odd_closed) out.push_back(fam.label);
    if (entry == "t_ng0_even" && fam.superfluous_even_closed) out.push_back(fam.label);
  }
  return out;
}

SolveResult reconstruct_classes(int g, int n) {
  if (n != 1 && n != 0) throw Error("reconstruction runs on the n <= 1 models");
  SurfaceModel m(g, n);
  const std::string entry = g % 2 == 1 ? "t_ng1_odd" : "t_ng1_even";
  Presentation ref = instantiate(entry, g, 1);

  std::map<std::string, Mod2Class> seeds;
  for (int i = 1; i <= g - 1; ++i) seeds["alpha" + std::to_string(i)] = curve_class("alpha" + std::to_string(i), g, n);
  if (g >= 4) seeds["beta"] = curve_class("beta", g, n);
  for (int i = 0; 2 * i + 2 <= g; ++i) {
    seeds["beta" + std::to_string(i)] = curve_class("beta" + std::to_string(i), g, n);
    seeds["betabar" + std::to_string(i)] = curve_class("beta" + std::to_string(i), g, n);
  }

  std::vector<std::string> unknowns{"eps", "zeta"};
  if (g >= 4) unknowns.push_back("gamma");
  unknowns.push_back("delta");

  auto curve_of_gen = [&](const std::string& gen) -> std::string {
    if (gen == "e") return "eps";
    if (gen == "f") return "zeta";
    if (gen == "b") return "beta";
    if (gen == "c") return "gamma";
    if (gen == "y2") return "delta";
    if (gen.rfind("bb", 0) == 0) return "betabar" + gen.substr(2);
    if (gen[0] == 'a' && gen.size() > 1) return "alpha" + gen.substr(1);
    if (gen[0] == 'b' && gen.size() > 1) return "beta" + gen.substr(1);
    return gen;
  };

  std::vector<PairingConstraint> constraints;
  for (const auto& c : extract_pairing_constraints(ref))
    constraints.push_back({curve_of_gen(c.a), curve_of_gen(c.b), c.parity, c.origin});
  for (const auto& u : unknowns) constraints.push_back({u, u, 0, "two-sided"});

  SolveResult pairing_only = class_solver(m, seeds, unknowns, constraints);
  if (!pairing_only.satisfiable) return pairing_only;

  // Enumerate pairing solutions and keep the first whose transvections verify
  // every relator of the reference presentation.
  std::vector<std::vector<Mod2Class>> candidates;
  for (const auto& u : unknowns) {
    std::vector<Mod2Class> cands;
    for (uint32_t bits = 0; bits < (1u << m.rank()); ++bits) {
      Mod2Class c(bits, m.rank());
      bool ok = true;
      for (const auto& pc : constraints) {
        const bool a_is_u = pc.a == u, b_is_u = pc.b == u;
        if (!a_is_u && !b_is_u) continue;
        const std::string other = a_is_u ? pc.b : pc.a;
        if (other == u) {
          if (pairing(m, c, c) != pc.parity) ok = false;
        } else if (seeds.count(other)) {
          if (pairing(m, c, seeds.at(other)) != pc.parity) ok = false;
        }
        if (!ok) break;
      }
      if (ok) cands.push_back(c);
    }
    candidates.push_back(std::move(cands));
  }

  std::map<std::string, Mod2Class> values = seeds;
  std::function<bool(size_t)> search = [&](size_t at) -> bool {
    if (at == unknowns.size()) {
      for (const auto& pc : constraints) {
        if (!values.count(pc.a) || !values.count(pc.b)) continue;
        if (pairing(m, values.at(pc.a), values.at(pc.b)) != pc.parity) return false;
      }
      MatrixAssignment assign;
      for (const auto& gen : ref.alphabet()->names())
        assign[gen] = transvection(m, values.at(curve_of_gen(gen)));
      for (const auto& verdict : verify_relators(ref, m, assign))
        if (!verdict.pass) return false;
      return true;
    }
    for (const auto& c : candidates[at]) {
      values[unknowns[at]] = c;
      if (search(at + 1)) return true;
      values.erase(unknowns[at]);
    }
    return false;
  };

  SolveResult out;
  out.solution_counts = pairing_only.solution_counts;
  if (!search(0)) {
    out.satisfiable = false;
    out.violated = constraints;
    return out;
  }
  out.satisfiable = true;
  out.assignment = values;
  return out;
}

}  // namespace twistkit
