#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "twistkit/catalog.hpp"
#include "twistkit/certificate.hpp"
#include "twistkit/enumeration.hpp"
#include "twistkit/homology.hpp"
#include "twistkit/presentation.hpp"
#include "twistkit/schema.hpp"

namespace tw = twistkit;

namespace {

constexpr const char* kVersion = "twistkit 0.1.0";

struct InputFileError : tw::Error {
  explicit InputFileError(const std::string& msg) : tw::Error(msg) {}
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in.good()) throw InputFileError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    if (!out.good()) throw tw::Error("cannot write '" + out_path + "'");
    out << payload;
  }
}

std::string provenance(const std::string& config, uint64_t seed) {
  std::ostringstream os;
  os << "# " << kVersion << "\n# config: " << config << "\n# seed: " << seed << "\n";
  return os.str();
}

int64_t max_cosets_default() {
  if (const char* env = std::getenv("TWISTKIT_MAX_COSETS")) return std::atoll(env);
  return 1'000'000;
}

// "3..8" or "5"
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int g = std::stoi(text);
    return {g, g};
  }
  return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
}

tw::SubgroupSpec subgroup_from_flags(const tw::Presentation& p, const std::string& parity,
                                     const std::string& subgens) {
  if (!parity.empty()) return tw::SubgroupSpec::parity_kernel({parity});
  std::vector<tw::Word> words;
  std::stringstream ss(subgens);
  std::string item;
  while (std::getline(ss, item, ';'))
    if (!item.empty()) words.push_back(tw::parse_word(item, p.alphabet()));
  return tw::SubgroupSpec::generated_by(std::move(words));
}

struct VerifyRow {
  int genus;
  std::string label;
  bool pass;
};

void verify_into(const tw::Presentation& p, int g, int n, std::vector<VerifyRow>& rows) {
  tw::SurfaceModel m(g, n);
  auto assign = tw::catalog_assignment(p, g, n);
  for (const auto& v : tw::verify_relators(p, m, assign)) rows.push_back({g, v.label, v.pass});
}

tw::TwistSymbol symbol_from_spec(const std::string& item, const tw::SurfaceModel& m) {
  auto colon = item.find(':');
  if (colon == std::string::npos) {
    if (item == "1") return tw::TwistSymbol{"1", false, tw::Mod2Class::zero(m.rank())};
    throw tw::Error("curve spec '" + item + "' needs name:class");
  }
  return tw::parse_symbol(item.substr(0, colon), tw::parse_class(item.substr(colon + 1), m));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Toolkit for twist subgroup presentations of non-orientable "
               "mapping class groups"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::ostringstream config;
  for (int i = 1; i < argc; ++i) config << (i > 1 ? " " : "") << argv[i];
  uint64_t seed = 0;
  app.add_option("--seed", seed, "recorded in report headers")->capture_default_str();

  // catalog -------------------------------------------------------------
  auto* cat = app.add_subcommand("catalog", "list entries or show guard manifests");
  auto* cat_list = cat->add_subcommand("list", "entry ids");
  std::string cat_entry;
  auto* cat_show = cat->add_subcommand("show", "guard manifest of an entry");
  cat_show->add_option("--entry", cat_entry, "catalog entry")->required();

  // instantiate ----------------------------------------------------------
  std::string inst_entry, inst_out, assume_a7 = "a1", a7c_reading;
  int inst_g = 0, inst_n = 0;
  bool subst_rho = false, exclude_superfluous = false;
  auto* inst = app.add_subcommand("instantiate", "emit a presentation file");
  inst->add_option("--entry", inst_entry)->required();
  inst->add_option("--genus", inst_g)->required();
  inst->add_option("--boundary", inst_n)->required();
  inst->add_flag("--subst-rho", subst_rho, "replace the closing generator by its word");
  inst->add_option("--assume-a7", assume_a7, "reading of the undefined chain seed");
  inst->add_flag("--exclude-superfluous", exclude_superfluous);
  inst->add_option("--include-a7c", a7c_reading,
                   "instantiate the excluded conjugated family under this reading");
  inst->add_option("-o,--output", inst_out);

  // also reachable as `catalog instantiate`
  auto* cat_inst = cat->add_subcommand("instantiate", "emit a presentation file");
  cat_inst->add_option("--entry", inst_entry)->required();
  cat_inst->add_option("--genus", inst_g)->required();
  cat_inst->add_option("--boundary", inst_n)->required();
  cat_inst->add_flag("--subst-rho", subst_rho);
  cat_inst->add_option("--assume-a7", assume_a7);
  cat_inst->add_option("-o,--output", inst_out);

  // verify ----------------------------------------------------------------
  std::string ver_entry, ver_genus = "3..8", ver_pres, ver_report;
  int ver_boundary = 1;
  bool ver_all = false, ver_subst = true;
  auto* ver = app.add_subcommand("verify", "homology verification of catalog relators");
  ver->add_option("--entry", ver_entry);
  ver->add_option("--genus", ver_genus, "single value or A..B range");
  ver->add_option("--boundary", ver_boundary);
  ver->add_option("--pres", ver_pres, "verify a presentation file instead");
  ver->add_option("--report", ver_report, "write the TSV here");
  ver->add_flag("--all", ver_all, "every catalog entry at desk scale");
  ver->add_option("--assume-a7", assume_a7);

  // tc ----------------------------------------------------------------------
  std::string tc_pres, tc_parity, tc_subgens;
  int64_t tc_max = max_cosets_default();
  auto* tc = app.add_subcommand("tc", "Todd-Coxeter coset enumeration");
  tc->add_option("--pres", tc_pres)->required();
  tc->add_option("--parity", tc_parity, "odd generator of a parity kernel");
  tc->add_option("--subgens", tc_subgens, "semicolon separated subgroup generator words");
  tc->add_option("--max-cosets", tc_max);

  // rs ----------------------------------------------------------------------
  std::string rs_pres, rs_parity = "y", rs_out;
  bool rs_simplify = false;
  int64_t rs_max = max_cosets_default();
  auto* rs = app.add_subcommand("rs", "Reidemeister-Schreier subgroup presentation");
  rs->add_option("--pres", rs_pres)->required();
  rs->add_option("--parity", rs_parity)->required();
  rs->add_flag("--simplify", rs_simplify);
  rs->add_option("--max-cosets", rs_max);
  rs->add_option("-o,--output", rs_out);

  // abelianize -----------------------------------------------------------
  std::string ab_pres, ab_entry;
  int ab_g = 0, ab_n = 0;
  auto* ab = app.add_subcommand("abelianize", "free rank and elementary divisors");
  ab->add_option("--pres", ab_pres);
  ab->add_option("--entry", ab_entry);
  ab->add_option("--genus", ab_g);
  ab->add_option("--boundary", ab_n);

  // schema ---------------------------------------------------------------
  std::string sch_surface = "5,1", sch_curves, sch_c0 = "1", sch_c0p = "1", sch_d;
  auto* sch = app.add_subcommand("schema", "generate chain and lantern relators");
  auto* sch_chain = sch->add_subcommand("chain", "k-chain relator");
  sch_chain->add_option("--surface", sch_surface, "g,n");
  sch_chain->add_option("--curves", sch_curves, "name:class,... in chain order")->required();
  sch_chain->add_option("--c0", sch_c0, "boundary curve name:class or 1");
  sch_chain->add_option("--c0p", sch_c0p);
  auto* sch_lan = sch->add_subcommand("lantern", "lantern relator");
  sch_lan->add_option("--surface", sch_surface, "g,n");
  sch_lan->add_option("--d", sch_d, "seven name:class entries")->required();

  // cert --------------------------------------------------------------------
  std::string cert_file;
  auto* cert = app.add_subcommand("cert", "certificate tools");
  auto* cert_check = cert->add_subcommand("check", "replay a certificate");
  cert_check->add_option("file", cert_file)->required();

  // selftest ---------------------------------------------------------------
  auto* self = app.add_subcommand("selftest", "quick built-in regressions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cat_list->parsed()) {
      for (const auto& e : tw::catalog_entries()) std::cout << e << "\n";
      return 0;
    }
    if (cat_show->parsed()) {
      std::cout << tw::guard_manifest(cat_entry);
      return 0;
    }
    if (inst->parsed() || cat_inst->parsed()) {
      tw::InstantiationOptions opts;
      opts.subst_rho = subst_rho;
      opts.assume_a7 = assume_a7;
      opts.include_superfluous = !exclude_superfluous;
      if (!a7c_reading.empty()) {
        opts.include_a7c = true;
        opts.a7c_reading = a7c_reading;
      }
      tw::Instantiation result = tw::instantiate_full(inst_entry, inst_g, inst_n, opts);
      std::ostringstream os;
      os << "# " << kVersion << ": " << inst_entry << " g=" << inst_g << " n=" << inst_n
         << "\n";
      for (const auto& note : result.notes) os << "# " << note << "\n";
      os << tw::format_presentation(result.presentation);
      emit(inst_out, os.str());
      return 0;
    }
    if (ver->parsed()) {
      std::vector<VerifyRow> rows;
      if (!ver_pres.empty()) {
        tw::Presentation p = tw::parse_presentation(slurp(ver_pres));
        auto [glo, ghi] = parse_range(ver_genus);
        verify_into(p, glo, ver_boundary, rows);
        (void)ghi;
      } else if (ver_all) {
        for (int g = 3; g <= 8; ++g)
          verify_into(tw::instantiate(g % 2 ? "t_ng1_odd" : "t_ng1_even", g, 1), g, 1, rows);
        tw::InstantiationOptions opts;
        opts.subst_rho = true;
        opts.assume_a7 = assume_a7;
        for (int g = 4; g <= 8; ++g)
          verify_into(tw::instantiate(g % 2 ? "t_ng0_odd" : "t_ng0_even", g, 0, opts), g, 0,
                      rows);
        for (auto [g, n] : {std::pair{2, 0}, {2, 1}, {3, 0}})
          verify_into(tw::instantiate("t_small", g, n), g, n, rows);
      } else if (!ver_entry.empty()) {
        auto [glo, ghi] = parse_range(ver_genus);
        tw::InstantiationOptions opts;
        opts.subst_rho = ver_subst && ver_boundary == 0;
        opts.assume_a7 = assume_a7;
        for (int g = glo; g <= ghi; ++g) {
          if (!tw::admissible(ver_entry, g, ver_boundary)) continue;
          verify_into(tw::instantiate(ver_entry, g, ver_boundary, opts), g, ver_boundary,
                      rows);
        }
      } else {
        std::cerr << "verify needs --entry, --pres or --all\n";
        return 2;
      }
      std::stable_sort(rows.begin(), rows.end(), [](const VerifyRow& a, const VerifyRow& b) {
        return std::tie(a.genus, a.label) < std::tie(b.genus, b.label);
      });
      std::ostringstream os;
      os << provenance(config.str(), seed);
      os << "label\tgenus\tstatus\n";
      bool all_pass = true;
      for (const auto& r : rows) {
        os << r.label << '\t' << r.genus << '\t' << (r.pass ? "pass" : "FAIL") << '\n';
        all_pass &= r.pass;
      }
      emit(ver_report, os.str());
      if (ver_report.size()) std::cout << (all_pass ? "all pass\n" : "failures present\n");
      return all_pass ? 0 : 1;
    }
    if (tc->parsed()) {
      tw::Presentation p = tw::parse_presentation(slurp(tc_pres));
      if (tc_parity.empty() && tc_subgens.empty()) {
        // trivial subgroup: enumerate the whole group
      }
      tw::CosetTable t =
          tw::todd_coxeter(p, subgroup_from_flags(p, tc_parity, tc_subgens), tc_max);
      if (t.complete()) {
        std::cout << "status: complete\nindex: " << t.index() << "\n";
        for (int c = 1; c <= t.index(); ++c) {
          std::string w = tw::format_word(t.transversal(c));
          std::cout << "transversal " << c << ": " << (w.empty() ? "1" : w) << "\n";
        }
      } else {
        std::cout << "status: inconclusive after " << t.total_defined() << " cosets\n";
      }
      return 0;
    }
    if (rs->parsed()) {
      tw::Presentation p = tw::parse_presentation(slurp(rs_pres));
      tw::CosetTable t =
          tw::todd_coxeter(p, tw::SubgroupSpec::parity_kernel({rs_parity}), rs_max);
      if (!t.complete()) {
        std::cerr << "enumeration inconclusive; raise --max-cosets\n";
        return 1;
      }
      tw::RSResult r = tw::reidemeister_schreier(p, t, tw::parity_naming(rs_parity));
      tw::Presentation out = rs_simplify ? tw::simplify(r.presentation) : r.presentation;
      std::ostringstream os;
      os << "# " << kVersion << ": index " << r.index << ", raw generators "
         << r.raw_generator_pairs << ", raw relators " << r.raw_relator_count << "\n";
      os << tw::format_presentation(out);
      emit(rs_out, os.str());
      return 0;
    }
    if (ab->parsed()) {
      tw::Presentation p = !ab_pres.empty()
                               ? tw::parse_presentation(slurp(ab_pres))
                               : tw::instantiate(ab_entry, ab_g, ab_n);
      std::cout << tw::abelianization(p).to_string() << "\n";
      return 0;
    }
    if (sch_chain->parsed() || sch_lan->parsed()) {
      auto comma = sch_surface.find(',');
      tw::SurfaceModel m(std::stoi(sch_surface.substr(0, comma)),
                         std::stoi(sch_surface.substr(comma + 1)));
      std::vector<tw::TwistSymbol> symbols;
      std::vector<std::string> names;
      auto collect = [&](const std::string& csv) {
        std::stringstream ss(csv);
        std::string item;
        while (std::getline(ss, item, ',')) {
          tw::TwistSymbol s = symbol_from_spec(item, m);
          symbols.push_back(s);
          if (!s.trivial()) names.push_back(s.name);
        }
      };
      if (sch_chain->parsed()) {
        collect(sch_curves);
        tw::TwistSymbol c0 = symbol_from_spec(sch_c0, m);
        tw::TwistSymbol c0p = symbol_from_spec(sch_c0p, m);
        if (!c0.trivial()) names.push_back(c0.name);
        if (!c0p.trivial()) names.push_back(c0p.name);
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        auto alphabet = tw::make_alphabet(names);
        std::cout << tw::format_word(tw::gen_chain(alphabet, m, symbols, c0, c0p)) << "\n";
      } else {
        collect(sch_d);
        std::sort(names.begin(), names.end());
        names.erase(std::unique(names.begin(), names.end()), names.end());
        auto alphabet = tw::make_alphabet(names);
        std::cout << tw::format_word(tw::gen_lantern(alphabet, m, symbols)) << "\n";
      }
      return 0;
    }
    if (cert_check->parsed()) {
      tw::Certificate c = tw::parse_certificate(slurp(cert_file));
      tw::CertReport rep = tw::check_certificate(c);
      if (rep.valid) {
        std::cout << "Valid (" << c.steps.size() << " steps)\n";
        return 0;
      }
      std::cout << "Invalid at step " << rep.failed_step << ": " << rep.reason << "\n";
      return 1;
    }
    if (self->parsed()) {
      int failures = 0;
      auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
      };
      {
        tw::Presentation p = tw::instantiate("m_n2_0", 2, 0);
        tw::CosetTable t =
            tw::todd_coxeter(p, tw::SubgroupSpec::parity_kernel({"y"}), 1000);
        check("index 2 in the genus two group", t.complete() && t.index() == 2);
        tw::Presentation s =
            tw::simplify(tw::reidemeister_schreier(p, t, tw::parity_naming("y")).presentation);
        check("twist subgroup of the Klein bottle quotient",
              s.same_group_presentation(tw::instantiate("t_small", 2, 0)));
      }
      {
        tw::Presentation p = tw::instantiate("t_ng1_odd", 3, 1);
        auto assign = tw::catalog_assignment(p, 3, 1);
        bool all = true;
        for (const auto& v : tw::verify_relators(p, tw::SurfaceModel(3, 1), assign))
          all &= v.pass;
        check("genus three bordered relators verify", all);
      }
      return failures == 0 ? 0 : 1;
    }
  } catch (const tw::SyntaxError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const tw::UnknownGeneratorError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const tw::InadmissibleParametersError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InputFileError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const tw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
