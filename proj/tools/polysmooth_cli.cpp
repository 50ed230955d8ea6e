#include <CLI11.hpp>
#include <cxxabi.h>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "polysmooth/certjson.hpp"
#include "polysmooth/constructions.hpp"
#include "polysmooth/errors.hpp"
#include "polysmooth/factorz.hpp"
#include "polysmooth/obstruction.hpp"
#include "polysmooth/parse.hpp"
#include "polysmooth/smoothness.hpp"

using namespace polysmooth;

namespace {

struct Global {
  bool json = false;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
  std::string budget = "desk";
  int threads = 0;
};

struct BudgetPreset {
  unsigned scan_height = 30;
  std::uint64_t quad_X = 5;
  Int max_k = 1000000;
  std::uint64_t search_budget = 50000000;
  std::uint64_t witness_max_m = 100000;
};

BudgetPreset preset_for(const std::string& name) {
  if (name == "ci") return {10, 5, Int(105), 5000000, 20000};
  if (name == "long") return {1000, 8, Int(9699690), 500000000, 10000000};
  return {};  // desk
}

std::string error_type_name(const std::exception& e) {
  int status = 0;
  char* demangled = abi::__cxa_demangle(typeid(e).name(), nullptr, nullptr, &status);
  std::string name = status == 0 && demangled ? demangled : typeid(e).name();
  std::free(demangled);
  auto pos = name.rfind("::");
  return pos == std::string::npos ? name : name.substr(pos + 2);
}

void emit_error_json(const std::string& type, const std::string& message) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["error"] = {{"type", type}, {"message", message}};
  std::cerr << doc.dump(2) << "\n";
}

IntPoly parse_int_poly(const std::string& text) {
  RatPoly p = parse_poly(text);
  if (!p.is_integral()) throw BadParameters("expected integer coefficients: " + text);
  return p.num();
}

VerifyReport verify_auto(const Certificate& c, std::uint64_t seed, VerifyMode* mode_out) {
  VerifyOptions vo;
  vo.seed = seed;
  VerifyMode mode =
      c.total_degree() <= vo.symbolic_degree_cap && c.total_degree() <= 256
          ? VerifyMode::Symbolic
          : VerifyMode::Probabilistic;
  if (mode_out) *mode_out = mode;
  return verify_certificate(c, mode, vo);
}

std::string factor_desc(const FactorExpr& fe) {
  switch (fe.kind) {
    case FactorExpr::Kind::CycloOfMonomial:
      return "Phi_" + std::to_string(fe.e) + "(" + rat_to_string(fe.coeff) + "*t^" +
             std::to_string(fe.power) + ")";
    case FactorExpr::Kind::Shifted:
      return "(" + fe.base.str("s") + ") at s = " + fe.shift_a.get_str() + "*t+" +
             fe.shift_z.get_str();
    default:
      return fe.poly.str();
  }
}

int emit_certificate(const Certificate& c, const Global& g) {
  VerifyReport rep = verify_auto(c, g.seed, nullptr);
  if (g.json) {
    std::cout << certificate_to_string(c, rep);
  } else {
    std::cout << "f = " << c.f.str() << "\n";
    std::cout << "g = " << c.g.str() << "\n";
    std::cout << "scalar = " << rat_to_string(c.scalar) << "\n";
    std::cout << "method = " << c.method << "\n";
    std::cout << "factors (" << c.factors.size() << "):\n";
    for (const auto& fe : c.factors)
      std::cout << "  deg " << fe.expanded_degree() << ": " << factor_desc(fe) << "\n";
    std::cout << "polysmoothness = " << rat_to_string(c.polysmoothness) << "\n";
    if (!c.notes.empty()) std::cout << "notes: " << c.notes << "\n";
    std::cout << "verified (" << (rep.mode == VerifyMode::Symbolic ? "symbolic" : "probabilistic")
              << "): " << (rep.pass ? "pass" : "FAIL") << " — " << rep.detail << "\n";
  }
  return rep.pass ? 0 : 1;
}

std::vector<BinomialTerm> parse_terms(const std::vector<std::string>& specs) {
  std::vector<BinomialTerm> out;
  for (const auto& s : specs) {
    auto p1 = s.find(',');
    auto p2 = s.find(',', p1 == std::string::npos ? p1 : p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
      throw BadParameters("term must be a,k,b (for a*t^k - b): " + s);
    BinomialTerm t;
    t.a = Int(s.substr(0, p1));
    t.k = std::stoul(s.substr(p1 + 1, p2 - p1 - 1));
    t.b = Int(s.substr(p2 + 1));
    out.push_back(t);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"polysmooth: verified low-degree factorizations of f(g(t))"};
  app.set_help_flag("--help", "print help");
  app.require_subcommand(1);

  Global g;
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_option("--seed", g.seed, "seed for probabilistic checks");
  app.add_option("--budget", g.budget, "preset: ci, desk, long")
      ->check(CLI::IsMember({"ci", "desk", "long"}));
  app.add_option("--threads", g.threads, "worker threads (0 = default)");

  // theta <d>
  auto* theta_cmd = app.add_subcommand("theta", "Schinzel theta(d) limiting exponent");
  unsigned theta_d = 2;
  theta_cmd->add_option("d", theta_d, "degree")->required();

  // construct
  auto* cons = app.add_subcommand("construct", "build and verify a certificate");
  std::string method, f_text, g_text, h_text, variant = "ii";
  unsigned steps = 1, count = 10;
  std::uint64_t y = 0, Xopt = 0;
  std::vector<std::string> term_specs;
  std::string a_text = "1", b_text = "1";
  unsigned long kparam = 2;
  cons->add_option("--method", method, "construction")
      ->required()
      ->check(CLI::IsMember({"trivial", "schinzel", "binomial", "quadratic", "decomposition",
                             "trinomial", "cubic-family"}));
  cons->add_option("-f", f_text, "polynomial f");
  cons->add_option("-g", g_text, "inner/outer polynomial g");
  cons->add_option("-h", h_text, "decomposition inner polynomial h");
  cons->add_option("--steps", steps, "schinzel iteration count");
  cons->add_option("--term", term_specs, "binomial factor a,k,b meaning a*t^k-b");
  cons->add_option("-y", y, "binomial smoothness bound y");
  cons->add_option("-X,--prime-bound", Xopt, "quadratic prime bound X");
  cons->add_option("--variant", variant, "trinomial variant: i or ii")
      ->check(CLI::IsMember({"i", "ii"}));
  cons->add_option("-a", a_text, "trinomial parameter a");
  cons->add_option("-b", b_text, "trinomial parameter b");
  cons->add_option("-k", kparam, "trinomial exponent k");
  cons->add_option("--count", count, "cubic family size");

  // verify <file>
  auto* ver = app.add_subcommand("verify", "re-verify a certificate document");
  std::string cert_path;
  std::string ver_mode = "auto";
  ver->add_option("certificate", cert_path, "certificate JSON file")->required();
  ver->add_option("--mode", ver_mode, "symbolic, probabilistic, or auto")
      ->check(CLI::IsMember({"symbolic", "probabilistic", "auto"}));

  // scan <kind>
  auto* scan = app.add_subcommand("scan", "bounded-height obstruction searches");
  std::string scan_kind, scan_f;
  unsigned height = 0, resume_shell = 1;
  bool serial = false;
  scan->add_option("kind", scan_kind, "quadratic-subst or rational-points")
      ->required()
      ->check(CLI::IsMember({"quadratic-subst", "rational-points"}));
  scan->add_option("-f", scan_f, "polynomial")->required();
  scan->add_option("--height", height, "height bound (default from budget)");
  scan->add_option("--resume-from-shell", resume_shell, "skip shells below this");
  scan->add_flag("--serial", serial, "use the single-threaded reference scan");

  // smooth
  auto* smooth = app.add_subcommand("smooth", "smooth-value witnesses and sampling");
  std::string smooth_f, smooth_cert, eps_text = "9/10";
  unsigned wit_count = 3;
  std::string from_text = "1", to_text = "10";
  bool csv = false, do_sample = false;
  smooth->add_option("-f", smooth_f, "quadratic polynomial for witnesses");
  smooth->add_option("--eps", eps_text, "smoothness exponent (rational p/q)");
  smooth->add_option("--count", wit_count, "number of witnesses");
  smooth->add_option("--cert", smooth_cert, "certificate JSON to sample");
  smooth->add_flag("--sample", do_sample, "sample f(g(m)) over a range");
  smooth->add_option("--from", from_text, "first m");
  smooth->add_option("--to", to_text, "last m");
  smooth->add_flag("--csv", csv, "CSV sample output");

  // factor-poly / factor-int
  auto* fpoly = app.add_subcommand("factor-poly", "factor a polynomial over Z");
  std::string fpoly_text;
  fpoly->add_option("expr", fpoly_text, "polynomial expression")->required();
  auto* fint = app.add_subcommand("factor-int", "factor an integer");
  std::string fint_text;
  fint->add_option("n", fint_text, "integer")->required();

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  BudgetPreset preset = preset_for(g.budget);

  try {
    if (*theta_cmd) {
      auto r = theta_schinzel(theta_d);
      if (g.json) {
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        doc["d"] = theta_d;
        doc["theta"] = rat_to_string(r.value);
        doc["decimal"] = r.decimal;
        doc["terms"] = r.terms;
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "theta(" << theta_d << ") = " << r.decimal << " (" << r.terms
                  << " product terms)\n";
      }
      return 0;
    }

    if (*cons) {
      Certificate c;
      if (method == "trivial") {
        c = trivial_step(parse_int_poly(f_text));
      } else if (method == "schinzel") {
        c = iterate_schinzel(parse_int_poly(f_text), steps);
      } else if (method == "binomial") {
        if (term_specs.empty()) throw BadParameters("binomial needs at least one --term");
        c = binomial_product_construct(parse_terms(term_specs), y ? y : 3);
      } else if (method == "quadratic") {
        QuadraticConstructOptions qo;
        qo.max_k = preset.max_k;
        qo.search_budget = preset.search_budget;
        c = polysmooth_quadratic(parse_int_poly(f_text), Xopt ? Xopt : preset.quad_X, qo);
      } else if (method == "decomposition") {
        c = decomposition_construct(parse_int_poly(f_text), parse_int_poly(g_text),
                                    parse_int_poly(h_text));
      } else if (method == "trinomial") {
        c = trinomial_construct(variant == "i" ? TrinomialVariant::I : TrinomialVariant::II,
                                Int(a_text), Int(b_text), kparam);
      } else {  // cubic-family
        auto entries = cubic_family(parse_int_poly(f_text), count);
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        doc["f"] = parse_int_poly(f_text).str();
        doc["entries"] = nlohmann::ordered_json::array();
        for (const auto& e : entries) {
          nlohmann::ordered_json j;
          j["A"] = e.A.get_str();
          j["B"] = e.B.get_str();
          j["C"] = e.C.get_str();
          j["g"] = e.g.str("y");
          j["r"] = rat_to_string(e.r);
          j["kappa"] = rat_to_string(e.kappa);
          j["m_beta"] = e.m_beta.str("y");
          j["m_gamma"] = e.m_gamma.str("y");
          j["ratio"] = rat_to_string(e.ratio);
          doc["entries"].push_back(std::move(j));
        }
        if (g.json) {
          std::cout << doc.dump(2) << "\n";
        } else {
          for (const auto& j : doc["entries"])
            std::cout << "beta = " << j["A"].get<std::string>() << "*a^2+"
                      << j["B"].get<std::string>() << "*a+" << j["C"].get<std::string>()
                      << "  f(g) = " << j["kappa"].get<std::string>() << " * ("
                      << j["m_beta"].get<std::string>() << ") * ("
                      << j["m_gamma"].get<std::string>() << ")\n";
        }
        return 0;
      }
      return emit_certificate(c, g);
    }

    if (*ver) {
      std::ifstream in(cert_path);
      if (!in) throw BadParameters("cannot open " + cert_path);
      std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      Certificate c = certificate_from_string(text);
      VerifyReport rep;
      if (ver_mode == "auto") {
        rep = verify_auto(c, g.seed, nullptr);
      } else {
        VerifyOptions vo;
        vo.seed = g.seed;
        rep = verify_certificate(
            c, ver_mode == "symbolic" ? VerifyMode::Symbolic : VerifyMode::Probabilistic, vo);
      }
      if (g.json) {
        std::cout << certificate_to_string(c, rep);
      } else {
        std::cout << (rep.pass ? "pass" : "FAIL") << " ("
                  << (rep.mode == VerifyMode::Symbolic ? "symbolic" : "probabilistic")
                  << "): " << rep.detail << "\n";
      }
      return rep.pass ? 0 : 1;
    }

    if (*scan) {
      IntPoly f = parse_int_poly(scan_f);
      unsigned H = height ? height : preset.scan_height;
      if (scan_kind == "quadratic-subst") {
        ScanOptions so;
        so.start_shell = resume_shell;
        so.threads = g.threads;
        ScanResult r = serial ? quadratic_substitution_scan_serial(f, H, so)
                              : quadratic_substitution_scan(f, H, so);
        if (g.json) {
          std::cout << scan_report_json(f, r).dump(2) << "\n";
        } else {
          std::cout << "scanned " << r.stats.candidates << " substitutions to height " << H
                    << ": " << r.stats.hits << " hits, " << r.stats.filtered << " filtered, "
                    << r.stats.factored << " factored (" << r.stats.wall_seconds << " s)\n";
          for (const auto& h : r.hits) {
            std::cout << "  (a,b,c) = (" << h.a.get_str() << "," << h.b.get_str() << ","
                      << h.c.get_str() << "):";
            for (const auto& [p, mult] : h.factorization.factors)
              std::cout << " (" << p.str() << ")^" << mult;
            std::cout << "\n";
          }
        }
      } else {
        auto pts = rational_point_search(f, H);
        if (g.json) {
          nlohmann::ordered_json doc;
          doc["schema"] = 1;
          doc["f"] = f.str();
          doc["height"] = H;
          doc["points"] = nlohmann::ordered_json::array();
          for (const auto& p : pts)
            doc["points"].push_back({{"x", p.x.get_str()},
                                     {"y", p.y.get_str()},
                                     {"s", p.s.get_str()},
                                     {"z", rat_to_string(p.z)}});
          std::cout << doc.dump(2) << "\n";
        } else {
          std::cout << pts.size() << " points with A*z^2 = phi(x, y), height " << H << "\n";
          for (const auto& p : pts)
            std::cout << "  (x,y) = (" << p.x.get_str() << "," << p.y.get_str()
                      << "), z = " << rat_to_string(p.z) << "\n";
        }
      }
      return 0;
    }

    if (*smooth) {
      if (do_sample || !smooth_cert.empty()) {
        std::ifstream in(smooth_cert);
        if (!in) throw BadParameters("cannot open " + smooth_cert);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        Certificate c = certificate_from_string(text);
        auto rep = smoothness_sample(c, Int(from_text), Int(to_text));
        if (csv)
          std::cout << smoothness_report_csv(rep);
        else if (g.json)
          std::cout << smoothness_report_json(c, rep).dump(2) << "\n";
        else
          std::cout << smoothness_report_table(rep);
        return 0;
      }
      if (smooth_f.empty()) throw BadParameters("smooth needs -f or --cert");
      WitnessOptions wo;
      wo.initial_X = preset.quad_X;
      wo.max_m = preset.witness_max_m;
      wo.quad.max_k = preset.max_k;
      wo.quad.search_budget = preset.search_budget;
      auto rep = smooth_witnesses(parse_int_poly(smooth_f), rat_from_string(eps_text),
                                  wit_count, wo);
      if (g.json) {
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        doc["eps"] = rat_to_string(rep.eps);
        doc["certificate"] = certificate_to_json(rep.certificate);
        doc["witnesses"] = nlohmann::ordered_json::array();
        for (const auto& w : rep.witnesses) {
          nlohmann::ordered_json j;
          j["m"] = w.m.get_str();
          j["n"] = w.n.get_str();
          j["value"] = w.value.get_str();
          j["lpf"] = w.lpf.get_str();
          j["factorization"] = nlohmann::ordered_json::array();
          for (const auto& [p, e] : w.factorization.entries)
            j["factorization"].push_back({{"p", p.get_str()}, {"e", e}});
          doc["witnesses"].push_back(std::move(j));
        }
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << rep.witnesses.size() << " witnesses with LPF(f(n)) <= n^"
                  << rat_to_string(rep.eps) << " via " << rep.certificate.method
                  << " certificate:\n";
        for (const auto& w : rep.witnesses) {
          std::cout << "  n = " << w.n.get_str() << ", f(n) = " << w.value.get_str() << " =";
          for (const auto& [p, e] : w.factorization.entries) {
            std::cout << " " << p.get_str();
            if (e > 1) std::cout << "^" << e;
          }
          std::cout << "\n";
        }
      }
      return rep.witnesses.size() >= wit_count ? 0 : 1;
    }

    if (*fpoly) {
      RatPoly p = parse_poly(fpoly_text);
      std::string var = poly_variable(fpoly_text);
      ZFactorization z = factor_over_Z(p);
      if (g.json) {
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        doc["input"] = p.str(var);
        doc["unit"] = z.unit;
        doc["content"] = z.content.get_str();
        doc["denominator"] = p.den().get_str();
        doc["factors"] = nlohmann::ordered_json::array();
        for (const auto& [q, mult] : z.factors)
          doc["factors"].push_back({{"poly", q.str(var)}, {"mult", mult}});
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << p.str(var) << " =";
        if (p.den() != 1) std::cout << " 1/" << p.den().get_str() << " *";
        if (z.unit < 0) std::cout << " -1 *";
        if (z.content != 1) std::cout << " " << z.content.get_str() << " *";
        bool first = true;
        for (const auto& [q, mult] : z.factors) {
          std::cout << (first ? " " : " * ") << "(" << q.str(var) << ")";
          if (mult > 1) std::cout << "^" << mult;
          first = false;
        }
        std::cout << "\n";
      }
      return 0;
    }

    if (*fint) {
      Int n(fint_text);
      auto fac = factor_integer(n);
      if (g.json) {
        nlohmann::ordered_json doc;
        doc["schema"] = 1;
        doc["n"] = n.get_str();
        doc["complete"] = fac.complete;
        doc["factors"] = nlohmann::ordered_json::array();
        for (const auto& [p, e] : fac.entries)
          doc["factors"].push_back({{"p", p.get_str()}, {"e", e}});
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << n.get_str() << " =";
        if (n < 0) std::cout << " -1 *";
        if (fac.entries.empty()) std::cout << " 1";
        bool first = true;
        for (const auto& [p, e] : fac.entries) {
          std::cout << (first ? " " : " * ") << p.get_str();
          if (e > 1) std::cout << "^" << e;
          first = false;
        }
        std::cout << "\n";
      }
      return 0;
    }
  } catch (const polysmooth::Error& e) {
    emit_error_json(error_type_name(e), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error_json(error_type_name(e), e.what());
    return 1;
  }
  return 2;
}
