#include "twistkit/certificate.hpp"

#include <algorithm>
#include <sstream>

namespace twistkit {

const Word* CertContext::find_relator(const std::string& label) const {
  for (const auto& [l, w] : relators)
    if (l == label) return &w;
  return nullptr;
}

Mod2Class CertContext::class_of(const std::string& name) const {
  if (name == "1") return Mod2Class::zero(surface.rank());
  auto it = classes.find(name);
  if (it == classes.end())
    throw MissingAssignmentError("no class declared for symbol '" + name + "'");
  return it->second;
}

Mod2Matrix CertContext::matrix_of_symbol(const std::string& name) const {
  auto cls = classes.find(name);
  if (cls != classes.end()) return transvection(surface, cls->second);
  auto mac = macros.find(name);
  if (mac != macros.end()) return matrix_of_word(mac->second);
  throw MissingAssignmentError("symbol '" + name + "' has neither a class nor an expansion");
}

Mod2Matrix CertContext::matrix_of_word(const Word& w) const {
  Mod2Matrix acc = Mod2Matrix::identity(surface.rank());
  for (int32_t x : w.letters()) {
    Mod2Matrix m = matrix_of_symbol(w.alphabet()->name(std::abs(x) - 1));
    if (x < 0) m = m.inverse();
    acc = acc * m;
  }
  return acc;
}

std::pair<TwistSymbol, TwistSymbol> expand_push(CertContext& ctx, PushKind kind,
                                                const std::string& macro_name,
                                                const PushSideData& side) {
  std::vector<int32_t> letters;
  auto letter_of = [&](const TwistSymbol& s, bool extra_inv) -> void {
    if (s.trivial()) return;
    int idx = ctx.alphabet->index_of(s.name);
    if (idx < 0) throw MissingSideDataError("push side curve '" + s.name + "' is unknown");
    const bool inv = s.inverse != extra_inv;
    letters.push_back(inv ? -(idx + 1) : idx + 1);
  };
  TwistSymbol first, second;
  if (kind == PushKind::CrosscapSquare) {
    if (!side.boundary)
      throw MissingSideDataError("squared crosscap push needs its boundary curve");
    first = *side.boundary;
    second = TwistSymbol{"1", false, Mod2Class::zero(ctx.surface.rank())};
    letter_of(first, false);
  } else {
    if (!side.gamma1 || !side.gamma2)
      throw MissingSideDataError("push map needs both side boundary curves");
    first = *side.gamma1;
    second = side.gamma2->inverted();
    letter_of(*side.gamma1, false);
    letter_of(*side.gamma2, true);
  }
  ctx.macros[macro_name] = Word::from_letters(ctx.alphabet, std::move(letters));
  ctx.pushes[macro_name] = {first, second};
  return {first, second};
}

namespace {

// Splits on whitespace; double quotes group spaces into one token and are
// stripped, so f="(a2 e a1)^2" becomes the token f=(a2 e a1)^2.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  bool any = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      any = true;
      continue;
    }
    if (!quoted && (ch == ' ' || ch == '\t')) {
      if (!cur.empty() || any) out.push_back(cur);
      cur.clear();
      any = false;
      continue;
    }
    cur += ch;
  }
  if (!cur.empty() || any) out.push_back(cur);
  return out;
}

int parse_int(const std::string& text, const char* what) {
  try {
    size_t used = 0;
    int value = std::stoi(text, &used);
    if (used != text.size()) throw Error("");
    return value;
  } catch (...) {
    throw SyntaxError(std::string(what) + ": bad integer '" + text + "'", 0);
  }
}

int parse_pos(const std::string& tok) {
  if (tok.size() < 2 || tok[0] != '@') throw Error("expected @<position>, got '" + tok + "'");
  return parse_int(tok.substr(1), "position");
}

bool key_value(const std::string& tok, const std::string& key, std::string* value) {
  if (tok.rfind(key + "=", 0) != 0) return false;
  *value = tok.substr(key.size() + 1);
  return true;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : text) {
    if (ch == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (ch != ' ') {
      cur += ch;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct PendingLine {
  std::string kind;
  std::string head;
  std::string body;
  std::string raw;
};

}  // namespace

Certificate parse_certificate(const std::string& text, const WordLimits& limits) {
  std::vector<PendingLine> lines;
  {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      auto last = line.find_last_not_of(" \t\r");
      std::string body = line.substr(first, last - first + 1);
      PendingLine pl;
      pl.raw = body;
      if (body.rfind("ctx ", 0) == 0) {
        std::string rest = body.substr(4);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw SyntaxError("ctx line needs ':'", 0);
        pl.kind = "ctx";
        pl.head = rest.substr(0, colon);
        pl.body = rest.substr(colon + 1);
      } else if (body.rfind("start:", 0) == 0) {
        pl.kind = "start";
        pl.body = body.substr(6);
      } else if (body.rfind("target:", 0) == 0) {
        pl.kind = "target";
        pl.body = body.substr(7);
      } else if (body.rfind("step ", 0) == 0 || body == "step") {
        pl.kind = "step";
        pl.body = body.size() > 5 ? body.substr(5) : "";
      } else {
        throw SyntaxError("unrecognized certificate line: " + body, 0);
      }
      lines.push_back(std::move(pl));
    }
  }

  // First pass: symbol names in declaration order.
  std::vector<std::string> names;
  std::map<std::string, size_t> declared_at;
  auto declare = [&](const std::string& n) {
    if (!declared_at.count(n)) {
      declared_at[n] = names.size();
      names.push_back(n);
    }
  };
  for (const auto& pl : lines) {
    if (pl.kind != "ctx") continue;
    if (pl.head == "gen") {
      std::istringstream gs(pl.body);
      std::string n;
      while (gs >> n) declare(n);
    } else if (pl.head.rfind("macro ", 0) == 0) {
      declare(pl.head.substr(6));
    } else if (pl.head.rfind("push ", 0) == 0) {
      declare(pl.head.substr(5));
    } else if (pl.head == "trivial") {
      std::istringstream gs(pl.body);
      std::string n;
      while (gs >> n) declare(n);
    }
  }

  Certificate cert;
  cert.ctx.alphabet = make_alphabet(names);

  // Context lines are order independent: the surface and the class table are
  // fixed before macros, pushes and relators are read.
  bool surface_seen = false;
  for (const auto& pl : lines) {
    if (pl.kind != "ctx" || pl.head != "surface") continue;
    int g = 0, n = -1;
    for (const auto& tok : tokenize(pl.body)) {
      std::string v;
      if (key_value(tok, "g", &v)) g = parse_int(v, "surface genus");
      if (key_value(tok, "n", &v)) n = parse_int(v, "surface boundary");
    }
    if (g < 1 || n < 0) throw SyntaxError("ctx surface needs g=<int> n=<int>", 0);
    cert.ctx.surface = SurfaceModel(g, n);
    surface_seen = true;
  }
  if (!surface_seen) throw SyntaxError("certificate needs a ctx surface line", 0);
  for (const auto& pl : lines) {
    if (pl.kind != "ctx") continue;
    if (pl.head.rfind("class ", 0) == 0) {
      cert.ctx.classes[pl.head.substr(6)] = parse_class(pl.body, cert.ctx.surface);
    } else if (pl.head == "trivial") {
      std::istringstream gs(pl.body);
      std::string n;
      while (gs >> n) {
        cert.ctx.trivial.insert(n);
        if (!cert.ctx.classes.count(n))
          cert.ctx.classes.emplace(n, Mod2Class::zero(cert.ctx.surface.rank()));
      }
    }
  }

  auto sym_class = [&](const std::string& tok) {
    std::string base = tok;
    if (!base.empty() && base.back() == '\'') base.pop_back();
    return cert.ctx.class_of(base);
  };

  for (const auto& pl : lines) {
    if (pl.kind == "ctx") {
      if (pl.head == "surface" || pl.head == "gen" || pl.head == "trivial" ||
          pl.head.rfind("class ", 0) == 0) {
        // handled above
      } else if (pl.head.rfind("macro ", 0) == 0) {
        std::string name = pl.head.substr(6);
        Word w = parse_word(pl.body, cert.ctx.alphabet, limits);
        for (int32_t x : w.letters())
          if (declared_at.at(cert.ctx.alphabet->name(std::abs(x) - 1)) >= declared_at.at(name))
            throw SyntaxError("macro '" + name + "' may only use earlier symbols", 0);
        cert.ctx.macros[name] = std::move(w);
      } else if (pl.head.rfind("push ", 0) == 0) {
        std::string name = pl.head.substr(5);
        auto toks = tokenize(pl.body);
        if (toks.empty()) throw SyntaxError("push needs a kind", 0);
        PushSideData side;
        PushKind kind;
        if (toks[0] == "square") {
          kind = PushKind::CrosscapSquare;
          if (toks.size() != 2) throw SyntaxError("push square needs one boundary symbol", 0);
          side.boundary = parse_symbol(toks[1], sym_class(toks[1]));
        } else if (toks[0] == "point" || toks[0] == "crosscap") {
          kind = toks[0] == "point" ? PushKind::Point : PushKind::Crosscap;
          if (toks.size() != 3) throw SyntaxError("push needs two side curves", 0);
          side.gamma1 = parse_symbol(toks[1], sym_class(toks[1]));
          side.gamma2 = parse_symbol(toks[2], sym_class(toks[2]));
        } else {
          throw SyntaxError("unknown push kind '" + toks[0] + "'", 0);
        }
        // declaration order guard, as for macros
        auto check_earlier = [&](const std::optional<TwistSymbol>& s) {
          if (s && !s->trivial() && declared_at.at(s->name) >= declared_at.at(name))
            throw SyntaxError("push '" + name + "' may only use earlier symbols", 0);
        };
        check_earlier(side.gamma1);
        check_earlier(side.gamma2);
        check_earlier(side.boundary);
        expand_push(cert.ctx, kind, name, side);
      } else if (pl.head.rfind("rel[", 0) == 0) {
        auto close = pl.head.find(']');
        if (close == std::string::npos) throw SyntaxError("malformed ctx rel line", 0);
        std::string label = pl.head.substr(4, close - 4);
        cert.ctx.relators.emplace_back(label, parse_word(pl.body, cert.ctx.alphabet, limits));
      } else {
        throw SyntaxError("unknown ctx line: " + pl.raw, 0);
      }
    } else if (pl.kind == "start") {
      cert.start = parse_word(pl.body, cert.ctx.alphabet, limits);
    } else if (pl.kind == "target") {
      cert.target = parse_word(pl.body, cert.ctx.alphabet, limits);
    } else if (pl.kind == "step") {
      auto toks = tokenize(pl.body);
      if (toks.empty()) throw SyntaxError("empty step", 0);
      const std::string& op = toks[0];
      std::string v;
      if (op == "reduce") {
        cert.steps.emplace_back(StepReduce{});
      } else if (op == "expand" || op == "fold") {
        if (toks.size() != 3) throw SyntaxError("step " + op + " @P <name>", 0);
        StepMacro s;
        s.pos = parse_pos(toks[1]);
        s.name = toks[2];
        s.expand = op == "expand";
        cert.steps.emplace_back(s);
      } else if (op == "apply") {
        if (toks.size() < 4) throw SyntaxError("step apply <label> @P insert|delete", 0);
        StepApply s;
        s.label = toks[1];
        s.pos = parse_pos(toks[2]);
        s.insert = toks[3] == "insert";
        if (!s.insert && toks[3] != "delete") throw SyntaxError("apply needs insert|delete", 0);
        for (size_t i = 4; i < toks.size(); ++i) {
          if (key_value(toks[i], "rot", &v)) s.rot = parse_int(v, "rotation");
          else if (toks[i] == "inv") s.inv = true;
          else throw SyntaxError("unknown apply argument '" + toks[i] + "'", 0);
        }
        cert.steps.emplace_back(s);
      } else if (op == "rewrite") {
        if (toks.size() != 7 || toks[3] != "->" || toks[5] != "by")
          throw SyntaxError("step rewrite @P \"u\" -> \"v\" by <label>", 0);
        StepRewrite s;
        s.pos = parse_pos(toks[1]);
        s.u = parse_word(toks[2], cert.ctx.alphabet, limits);
        s.v = parse_word(toks[4], cert.ctx.alphabet, limits);
        s.label = toks[6];
        cert.steps.emplace_back(s);
      } else if (op == "conj") {
        if (toks.size() != 6) throw SyntaxError("step conj <dir> @P f=.. from=.. to=..", 0);
        StepConj s;
        s.dir = toks[1];
        if (s.dir != "unfold" && s.dir != "fold" && s.dir != "slideL" && s.dir != "slideR")
          throw SyntaxError("conj direction must be unfold|fold|slideL|slideR", 0);
        s.pos = parse_pos(toks[2]);
        if (!key_value(toks[3], "f", &v)) throw SyntaxError("conj needs f=\"...\"", 0);
        s.f = parse_word(v, cert.ctx.alphabet, limits);
        if (!key_value(toks[4], "from", &s.from)) throw SyntaxError("conj needs from=", 0);
        if (!key_value(toks[5], "to", &s.to)) throw SyntaxError("conj needs to=", 0);
        cert.steps.emplace_back(s);
      } else if (op == "schema") {
        if (toks.size() < 4) throw SyntaxError("step schema <kind> @P insert|delete ...", 0);
        StepSchema s;
        s.kind = toks[1];
        s.pos = parse_pos(toks[2]);
        s.insert = toks[3] == "insert";
        if (!s.insert && toks[3] != "delete")
          throw SyntaxError("schema needs insert|delete", 0);
        for (size_t i = 4; i < toks.size(); ++i) {
          if (key_value(toks[i], "rot", &v)) s.rot = parse_int(v, "rotation");
          else if (toks[i] == "inv") s.inv = true;
          else if (key_value(toks[i], "curves", &v)) s.curves = split_commas(v);
          else if (key_value(toks[i], "d", &v)) s.curves = split_commas(v);
          else if (key_value(toks[i], "c0", &s.c0)) {}
          else if (key_value(toks[i], "c0p", &s.c0p)) {}
          else if (key_value(toks[i], "p", &s.p)) {}
          else if (key_value(toks[i], "q", &s.q)) {}
          else if (key_value(toks[i], "r", &s.r)) {}
          else if (s.kind == "boundary" && s.sym.empty()) s.sym = toks[i];
          else throw SyntaxError("unknown schema argument '" + toks[i] + "'", 0);
        }
        cert.steps.emplace_back(s);
      } else {
        throw SyntaxError("unknown step '" + op + "'", 0);
      }
      cert.step_texts.push_back(pl.raw);
    }
  }
  return cert;
}

namespace {

struct Replay {
  const CertContext& ctx;
  std::vector<int32_t> w;

  int32_t letter_of(const std::string& tok) const {
    std::string base = tok;
    bool inv = false;
    if (!base.empty() && base.back() == '\'') {
      inv = true;
      base.pop_back();
    }
    int idx = ctx.alphabet->index_of(base);
    if (idx < 0) throw Error("unknown symbol '" + tok + "'");
    return inv ? -(idx + 1) : idx + 1;
  }

  static std::vector<int32_t> inv_letters(const std::vector<int32_t>& v) {
    std::vector<int32_t> out(v.rbegin(), v.rend());
    for (auto& x : out) x = -x;
    return out;
  }

  static std::vector<int32_t> rotate(std::vector<int32_t> v, int k) {
    if (v.empty()) return v;
    k = ((k % static_cast<int>(v.size())) + static_cast<int>(v.size())) %
        static_cast<int>(v.size());
    std::rotate(v.begin(), v.begin() + k, v.end());
    return v;
  }

  void splice(int pos, size_t remove_len, const std::vector<int32_t>& insert_letters) {
    if (pos < 0 || static_cast<size_t>(pos) + remove_len > w.size())
      throw Error("position " + std::to_string(pos) + " out of range");
    std::vector<int32_t> next(w.begin(), w.begin() + pos);
    next.insert(next.end(), insert_letters.begin(), insert_letters.end());
    next.insert(next.end(), w.begin() + pos + remove_len, w.end());
    w = free_reduce(std::move(next));
  }

  void expect_slice(int pos, const std::vector<int32_t>& pat, const std::string& what) {
    if (pos < 0 || static_cast<size_t>(pos) + pat.size() > w.size())
      throw Error(what + ": slice at " + std::to_string(pos) + " out of range");
    for (size_t i = 0; i < pat.size(); ++i)
      if (w[pos + i] != pat[i])
        throw Error(what + ": word does not match at position " + std::to_string(pos));
  }

  void apply_relator(const std::vector<int32_t>& relator, int pos, bool insert, int rot,
                     bool inv) {
    std::vector<int32_t> r = inv ? inv_letters(relator) : relator;
    r = rotate(std::move(r), rot);
    if (insert) {
      splice(pos, 0, r);
    } else {
      expect_slice(pos, r, "delete");
      splice(pos, r.size(), {});
    }
  }

  void run(const StepApply& s) {
    const Word* rel = ctx.find_relator(s.label);
    if (!rel) throw Error("no context relator labelled '" + s.label + "'");
    apply_relator(rel->letters(), s.pos, s.insert, s.rot, s.inv);
  }

  void run(const StepRewrite& s) {
    const Word* rel = ctx.find_relator(s.label);
    if (!rel) throw Error("no context relator labelled '" + s.label + "'");
    expect_slice(s.pos, s.u.letters(), "rewrite");
    Word shift = multiply(s.u, invert(s.v));
    if (!shift.empty()) {
      Word canon = canonical_relator(shift);
      if (canon != canonical_relator(*rel))
        throw Error("rewrite: u v^-1 is not a cyclic form of relator " + s.label);
    }
    splice(s.pos, s.u.size(), s.v.letters());
  }

  void run(const StepConj& s) {
    int32_t from = letter_of(s.from);
    int32_t to = letter_of(s.to);
    if ((from > 0) != (to > 0))
      throw Error("conj: from/to orientations disagree");
    const std::string from_name = ctx.alphabet->name(std::abs(from) - 1);
    const std::string to_name = ctx.alphabet->name(std::abs(to) - 1);
    Mod2Matrix m = ctx.matrix_of_word(s.f);
    Mod2Class from_cls = ctx.class_of(from_name);
    Mod2Class to_cls = ctx.class_of(to_name);
    const bool left_action = s.dir != "slideR";
    Mod2Class image = left_action ? m.apply(from_cls) : m.inverse().apply(from_cls);
    if (image != to_cls)
      throw Error("conj: class of '" + to_name + "' is " + format_class(to_cls, ctx.surface) +
                  " but the conjugated class is " + format_class(image, ctx.surface));

    const auto& f = s.f.letters();
    if (s.dir == "unfold") {
      expect_slice(s.pos, {to}, "conj unfold");
      std::vector<int32_t> repl = f;
      repl.push_back(from);
      for (auto it = f.rbegin(); it != f.rend(); ++it) repl.push_back(-*it);
      splice(s.pos, 1, repl);
    } else if (s.dir == "fold") {
      std::vector<int32_t> pat = f;
      pat.push_back(from);
      for (auto it = f.rbegin(); it != f.rend(); ++it) pat.push_back(-*it);
      pat = free_reduce(std::move(pat));
      expect_slice(s.pos, pat, "conj fold");
      splice(s.pos, pat.size(), {to});
    } else if (s.dir == "slideL") {
      std::vector<int32_t> pat = f;
      pat.push_back(from);
      pat = free_reduce(std::move(pat));
      expect_slice(s.pos, pat, "conj slideL");
      std::vector<int32_t> repl{to};
      repl.insert(repl.end(), f.begin(), f.end());
      splice(s.pos, pat.size(), repl);
    } else {  // slideR
      std::vector<int32_t> pat{from};
      pat.insert(pat.end(), f.begin(), f.end());
      pat = free_reduce(std::move(pat));
      expect_slice(s.pos, pat, "conj slideR");
      std::vector<int32_t> repl = f;
      repl.push_back(to);
      splice(s.pos, pat.size(), repl);
    }
  }

  void run(const StepMacro& s) {
    auto it = ctx.macros.find(s.name);
    if (it == ctx.macros.end()) throw Error("no macro named '" + s.name + "'");
    const auto& exp = it->second.letters();
    int idx = ctx.alphabet->index_of(s.name);
    if (s.expand) {
      if (s.pos < 0 || static_cast<size_t>(s.pos) >= w.size())
        throw Error("expand: position out of range");
      int32_t at = w[s.pos];
      if (std::abs(at) - 1 != idx)
        throw Error("expand: letter at " + std::to_string(s.pos) + " is not '" + s.name + "'");
      splice(s.pos, 1, at > 0 ? exp : inv_letters(exp));
    } else {
      // fold: positive expansion first, inverse otherwise
      bool matched = true;
      if (static_cast<size_t>(s.pos) + exp.size() <= w.size()) {
        for (size_t i = 0; i < exp.size(); ++i)
          if (w[s.pos + i] != exp[i]) matched = false;
      } else {
        matched = false;
      }
      if (matched) {
        splice(s.pos, exp.size(), {static_cast<int32_t>(idx + 1)});
        return;
      }
      std::vector<int32_t> iexp = inv_letters(exp);
      expect_slice(s.pos, iexp, "fold");
      splice(s.pos, iexp.size(), {static_cast<int32_t>(-(idx + 1))});
    }
  }

  TwistSymbol symbol_of(const std::string& tok) const {
    std::string base = tok;
    if (!base.empty() && base.back() == '\'') base.pop_back();
    return parse_symbol(tok, ctx.class_of(base));
  }

  void run(const StepSchema& s) {
    if (s.kind == "chain") {
      std::vector<TwistSymbol> curves;
      for (const auto& t : s.curves) curves.push_back(symbol_of(t));
      Word rel = gen_chain(ctx.alphabet, ctx.surface, curves, symbol_of(s.c0),
                           symbol_of(s.c0p));
      apply_relator(rel.letters(), s.pos, s.insert, s.rot, s.inv);
    } else if (s.kind == "lantern") {
      std::vector<TwistSymbol> d;
      for (const auto& t : s.curves) d.push_back(symbol_of(t));
      Word rel = gen_lantern(ctx.alphabet, ctx.surface, d);
      apply_relator(rel.letters(), s.pos, s.insert, s.rot, s.inv);
    } else if (s.kind == "compose") {
      for (const auto& name : {s.p, s.q, s.r})
        if (!ctx.pushes.count(name))
          throw Error("compose operand '" + name + "' is not a registered push");
      std::vector<TwistSymbol> six;
      Mod2Class sum = Mod2Class::zero(ctx.surface.rank());
      for (const auto& name : {s.p, s.q, s.r}) {
        const auto& pr = ctx.pushes.at(name);
        for (const TwistSymbol& t : {pr.first, pr.second}) {
          if (t.trivial()) continue;
          six.push_back(t);
          sum = sum + ctx.class_of(t.name);
        }
      }
      if (!sum.is_zero())
        throw Error("compose: boundary classes of the three pushes do not cancel");
      for (size_t i = 0; i < six.size(); ++i)
        for (size_t j = i + 1; j < six.size(); ++j)
          if (pairing(ctx.surface, ctx.class_of(six[i].name), ctx.class_of(six[j].name)) != 0)
            throw Error("compose: side curves are not disjoint in the pairing");
      std::vector<int32_t> rel{letter_of(s.p), letter_of(s.q), -letter_of(s.r)};
      Word rel_word = Word::from_letters(ctx.alphabet, rel);
      if (!ctx.matrix_of_word(rel_word).is_identity())
        throw Error("compose: relator is not homologically trivial");
      apply_relator(rel_word.letters(), s.pos, s.insert, s.rot, s.inv);
    } else if (s.kind == "boundary") {
      if (!ctx.trivial.count(s.sym))
        throw Error("boundary step needs a symbol declared trivial");
      if (!ctx.class_of(s.sym).is_zero())
        throw Error("trivial symbol '" + s.sym + "' has a nonzero class");
      std::vector<int32_t> one{letter_of(s.sym)};
      if (s.inv) one[0] = -one[0];
      if (s.insert) {
        splice(s.pos, 0, one);
      } else {
        expect_slice(s.pos, one, "boundary delete");
        splice(s.pos, 1, {});
      }
    } else {
      throw Error("unknown schema kind '" + s.kind + "'");
    }
  }

  void run(const StepReduce&) {}
};

}  // namespace

CertReport check_certificate(const Certificate& cert) {
  CertReport report;

  // Context soundness: macro classes must match their expansions.
  try {
    for (const auto& [name, cls] : cert.ctx.classes) {
      auto mac = cert.ctx.macros.find(name);
      if (mac == cert.ctx.macros.end()) continue;
      if (cert.ctx.matrix_of_word(mac->second) != transvection(cert.ctx.surface, cls)) {
        report.failed_step = 0;
        report.reason = "macro '" + name + "' expansion does not act as a twist about " +
                        format_class(cls, cert.ctx.surface);
        return report;
      }
    }
    for (const auto& t : cert.ctx.trivial)
      if (!cert.ctx.class_of(t).is_zero()) {
        report.failed_step = 0;
        report.reason = "trivial symbol '" + t + "' has a nonzero class";
        return report;
      }
  } catch (const Error& err) {
    report.failed_step = 0;
    report.reason = err.what();
    return report;
  }

  Replay rp{cert.ctx, cert.start.letters()};
  for (size_t i = 0; i < cert.steps.size(); ++i) {
    try {
      std::visit([&rp](const auto& s) { rp.run(s); }, cert.steps[i]);
    } catch (const Error& err) {
      report.failed_step = static_cast<int>(i) + 1;
      report.reason = err.what();
      return report;
    }
    report.trace.push_back(Word::from_letters(cert.ctx.alphabet, rp.w));
  }
  if (rp.w != cert.target.letters()) {
    report.failed_step = static_cast<int>(cert.steps.size()) + 1;
    report.reason = "final word '" +
                    format_word(Word::from_letters(cert.ctx.alphabet, rp.w)) +
                    "' does not equal the target";
    return report;
  }
  report.valid = true;
  return report;
}

Presentation remove_relator_with_certificate(const Presentation& p, const std::string& label,
                                             const Certificate& cert) {
  const Relator* victim = nullptr;
  for (const auto& r : p.relators())
    if (r.label == label) victim = &r;
  if (!victim) throw Error("no relator labelled '" + label + "'");
  if (!cert.target.empty())
    throw Error("removal certificate must end at the empty word");
  if (format_word(canonical_relator(cert.start)) != format_word(victim->word))
    throw Error("certificate start word is not the relator '" + label + "'");
  for (const auto& [ctx_label, ctx_word] : cert.ctx.relators) {
    bool found = false;
    for (const auto& r : p.relators())
      if (r.label != label &&
          format_word(canonical_relator(ctx_word)) == format_word(r.word))
        found = true;
    if (!found)
      throw Error("certificate context relator '" + ctx_label +
                  "' is not among the remaining relators");
  }
  CertReport rep = check_certificate(cert);
  if (!rep.valid)
    throw Error("certificate invalid at step " + std::to_string(rep.failed_step) + ": " +
                rep.reason);
  Presentation out(p.alphabet());
  for (const auto& r : p.relators())
    if (r.label != label) out.add_relator(r.word, r.label, r.guard);
  return out;
}

}  // namespace twistkit
