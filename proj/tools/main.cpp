// gcalc: exact bracket calculus on graded supercommutative polynomial
// algebras. Subcommands verify contact forms, Jacobi triples, Courant
// structure data, and evaluate canonical/derived/Legendre brackets.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gcalc/cohomology.hpp"
#include "gcalc/courant.hpp"
#include "gcalc/forms.hpp"
#include "gcalc/gcm.hpp"
#include "gcalc/jacobi.hpp"
#include "gcalc/report.hpp"
#include "gcalc/sampler.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitInputError = 2;

struct Common {
  std::string file;
  std::string json_path;
  bool with_timing = false;
  uint64_t seed = 0;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw gcalc::Error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Common& c, gcalc::Report& rep, double ms) {
  rep.set_timing_ms(ms);
  if (!c.json_path.empty()) {
    std::ofstream out(c.json_path);
    out << rep.to_json(c.with_timing);
  }
}

gcalc::StructureFile load(const Common& c, gcalc::Report& rep) {
  (void)rep;
  return gcalc::parse_gcm(slurp(c.file));
}

int run_check_contact(const Common& c) {
  std::string text = slurp(c.file);
  gcalc::Report rep("check-contact", gcalc::digest_bytes(text));
  auto t0 = std::chrono::steady_clock::now();
  gcalc::StructureFile f = gcalc::parse_gcm(text);
  if (!f.oneform) throw gcalc::Error("file has no oneform block");
  bool yes = gcalc::check_contact(*f.oneform);
  rep.set_pass(yes);
  rep.add_field("contact", yes ? "yes" : "no");
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(c, rep, ms);
  std::cout << "CONTACT: " << (yes ? "yes" : "no") << "\n";
  return yes ? kExitPass : kExitMathFail;
}

int run_check_jacobi(const Common& c, long samples) {
  std::string text = slurp(c.file);
  gcalc::Report rep("check-jacobi", gcalc::digest_bytes(text));
  auto t0 = std::chrono::steady_clock::now();
  gcalc::StructureFile f = gcalc::parse_gcm(text);
  if (!f.jacobi) throw gcalc::Error("file has no jacobi block");
  gcalc::JacobiReport jr = gcalc::check_jacobi(*f.jacobi);
  bool pass = jr.pass;
  rep.add_field("conditions", jr.pass ? "pass" : "fail");
  for (const auto& [name, r] : jr.residuals)
    rep.add_residual(name, r.to_string());
  std::string axiom_line;
  if (samples > 0) {
    gcalc::AxiomReport ar = gcalc::verify_jacobi_axioms(*f.jacobi, c.seed,
                                                        samples);
    pass = pass && ar.pass;
    rep.add_numeric("axiom_samples", ar.checked);
    rep.add_field("axioms", ar.pass ? "pass" : "fail");
    axiom_line = "AXIOMS: " + std::string(ar.pass ? "pass" : "fail") + " (" +
                 std::to_string(ar.checked) + " samples)";
    for (const auto& v : ar.violations) axiom_line += "\n  violated: " + v;
  }
  rep.set_pass(pass);
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(c, rep, ms);
  std::cout << "JACOBI: " << (jr.pass ? "pass" : "fail") << "\n";
  for (const auto& [name, r] : jr.residuals)
    std::cout << "  " << name << " = " << r.to_string() << "\n";
  if (!axiom_line.empty()) std::cout << axiom_line << "\n";
  return pass ? kExitPass : kExitMathFail;
}

int run_poissonize(const Common& c) {
  std::string text = slurp(c.file);
  gcalc::Report rep("poissonize", gcalc::digest_bytes(text));
  auto t0 = std::chrono::steady_clock::now();
  gcalc::StructureFile f = gcalc::parse_gcm(text);
  if (!f.jacobi) throw gcalc::Error("file has no jacobi block");
  gcalc::Poissonization p = gcalc::poissonize(*f.jacobi);
  bool homological = gcalc::is_homological(p.carrier, p.hamiltonian);
  rep.set_pass(homological);
  rep.add_field("hamiltonian", p.hamiltonian.to_string());
  rep.add_field("homological", homological ? "yes" : "no");
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(c, rep, ms);
  std::cout << "POISSONIZATION: " << p.hamiltonian.to_string() << "\n";
  std::cout << "HOMOLOGICAL: " << (homological ? "yes" : "no") << "\n";
  return homological ? kExitPass : kExitMathFail;
}

int run_bracket(const Common& c, const std::string& op, const std::string& fs,
                const std::string& gs) {
  std::string text = slurp(c.file);
  gcalc::Report rep("bracket", gcalc::digest_bytes(text));
  auto t0 = std::chrono::steady_clock::now();
  gcalc::StructureFile f = gcalc::parse_gcm(text);
  gcalc::BracketCarrier b = gcalc::BracketCarrier::on(f.chart);
  gcalc::SuperPolynomial pf = gcalc::parse_polynomial(f.chart, fs);
  gcalc::SuperPolynomial pg = gcalc::parse_polynomial(f.chart, gs);
  gcalc::SuperPolynomial out;
  if (op == "canonical") {
    out = gcalc::canonical_bracket(b, pf, pg);
  } else if (op == "derived") {
    if (!f.hamiltonian) throw gcalc::Error("derived bracket needs a hamiltonian block");
    out = gcalc::derived_bracket(b, *f.hamiltonian, pf, pg);
  } else {
    throw gcalc::Error("unknown bracket op: " + op);
  }
  rep.set_pass(true);
  rep.add_field("bracket", out.to_string());
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(c, rep, ms);
  std::cout << out.to_string() << "\n";
  return kExitPass;
}

int run_legendre(const Common& c, const std::string& fs,
                 const std::string& gs) {
  std::string text = slurp(c.file);
  gcalc::Report rep("legendre", gcalc::digest_bytes(text));
  auto t0 = std::chrono::steady_clock::now();
  gcalc::StructureFile f = gcalc::parse_gcm(text);
  if (!f.oneform) throw gcalc::Error("file has no oneform block");
  gcalc::SuperPolynomial pf = gcalc::parse_polynomial(f.chart, fs);
  gcalc::SuperPolynomial pg = gcalc::parse_polynomial(f.chart, gs);
  gcalc::SuperPolynomial out = gcalc::legendre_bracket(*f.oneform, pf, pg);
  rep.set_pass(true);
  rep.add_field("bracket", out.to_string());
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(c, rep, ms);
  std::cout << out.to_string() << "\n";
  return kExitPass;
}

int run_cohomology(const Common& c, long truncate, long bound,
                   const std::vector<std::string>& fixes,
                   long degree_component) {
  std::string text = slurp(c.file);
  gcalc::Report rep("cohomology", gcalc::digest_bytes(text));
  auto t0 = std::chrono::steady_clock::now();
  gcalc::StructureFile f = gcalc::parse_gcm(text);
  if (!f.hamiltonian) throw gcalc::Error("file has no hamiltonian block");
  gcalc::BracketCarrier b = gcalc::BracketCarrier::on(f.chart);

  std::vector<std::pair<size_t, long>> fixed;
  for (const auto& fx : fixes) {
    auto eq = fx.find('=');
    if (eq == std::string::npos)
      throw gcalc::Error("--fix expects component=value");
    fixed.emplace_back(std::stoul(fx.substr(0, eq)),
                       std::stol(fx.substr(eq + 1)));
  }
  size_t dc = degree_component < 0 ? 0 : size_t(degree_component);
  if (dc >= f.chart->grading_dim())
    throw gcalc::Error("--degree-component out of range");
  gcalc::WeightSelector sel =
      [fixed, dc](const gcalc::Weight& w) -> std::optional<long> {
    for (const auto& [i, v] : fixed)
      if (i >= w.size() || w[i] != v) return std::nullopt;
    return w[dc];
  };
  gcalc::GradedComplex cx = gcalc::differential_from_hamiltonian(
      b, *f.hamiltonian, sel, truncate, bound);
  bool ok = gcalc::check_complex(cx);
  std::vector<long> dims = gcalc::cohomology_dims(cx);
  rep.set_pass(ok);
  std::ostringstream table;
  for (size_t k = 0; k < cx.spaces.size(); ++k) {
    long rank = 0;
    if (k < cx.matrices.size() && !cx.matrices[k].empty() &&
        !cx.matrices[k][0].empty()) {
      std::vector<std::vector<gcalc::Rational>> m = cx.matrices[k];
      rank = long(gcalc::exact_rank(m));
    }
    rep.add_numeric("dim_" + std::to_string(k),
                    long(cx.spaces[k].basis.size()));
    rep.add_numeric("rank_" + std::to_string(k), rank);
    rep.add_numeric("h_" + std::to_string(k), dims[k]);
    table << "degree " << k << ": dim " << cx.spaces[k].basis.size()
          << ", rank " << rank << ", H " << dims[k] << "\n";
  }
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(c, rep, ms);
  std::cout << "COMPLEX: " << (ok ? "d^2 = 0" : "d^2 != 0") << "\n"
            << table.str();
  return ok ? kExitPass : kExitMathFail;
}

int run_check_courant(const Common& c) {
  std::string text = slurp(c.file);
  gcalc::Report rep("check-courant", gcalc::digest_bytes(text));
  auto t0 = std::chrono::steady_clock::now();
  gcalc::StructureFile f = gcalc::parse_gcm(text);
  if (!f.courant) throw gcalc::Error("file has no courant block");
  gcalc::CourantModel model = gcalc::build_chart_and_hamiltonian(*f.courant);
  gcalc::MasterReport master = gcalc::check_master_equation(model);
  rep.add_field("hamiltonian", model.cubic.to_string());
  rep.add_residual("master", master.residual.to_string());
  bool pass = master.pass;
  if (master.pass) {
    gcalc::CourantData data = gcalc::courant_data(model);
    pass = data.axioms_pass;
    for (const auto& [name, r] : data.axiom_residuals)
      if (!r.is_zero()) rep.add_residual(name, r.to_string());
    rep.add_field("axioms", data.axioms_pass ? "pass" : "fail");
  }
  rep.set_pass(pass);
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(c, rep, ms);
  std::cout << "MASTER EQUATION: " << (master.pass ? "pass" : "fail") << "\n";
  if (!master.pass)
    std::cout << "  residual = " << master.residual.to_string() << "\n";
  else
    std::cout << "AXIOMS: " << (pass ? "pass" : "fail") << "\n";
  return pass ? kExitPass : kExitMathFail;
}

int run_wade(const Common& c, const std::string& un, const std::string& vn) {
  std::string text = slurp(c.file);
  gcalc::Report rep("wade", gcalc::digest_bytes(text));
  auto t0 = std::chrono::steady_clock::now();
  gcalc::StructureFile f = gcalc::parse_gcm(text);
  auto iu = f.sections.find(un);
  auto iv = f.sections.find(vn);
  if (iu == f.sections.end() || iv == f.sections.end())
    throw gcalc::Error("file must declare sections '" + un + "' and '" + vn +
                       "'");
  gcalc::WadeSection w = gcalc::wade_bracket(iu->second, iv->second);
  gcalc::SuperPolynomial pair = gcalc::wade_pairing(iu->second, iv->second);
  auto list = [](const std::vector<gcalc::SuperPolynomial>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
      if (i) s += ", ";
      s += v[i].to_string();
    }
    return s;
  };
  rep.set_pass(true);
  rep.add_field("X", list(w.vec));
  rep.add_field("f", w.f.to_string());
  rep.add_field("alpha", list(w.form));
  rep.add_field("g", w.g.to_string());
  rep.add_field("pairing", pair.to_string());
  auto ms = std::chrono::duration<double, std::milli>(
                std::chrono::steady_clock::now() - t0)
                .count();
  emit(c, rep, ms);
  std::cout << "X     : " << list(w.vec) << "\n"
            << "f     : " << w.f.to_string() << "\n"
            << "alpha : " << list(w.form) << "\n"
            << "g     : " << w.g.to_string() << "\n"
            << "<u,v> : " << pair.to_string() << "\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact bracket calculus for graded contact structures"};
  app.require_subcommand(1);

  Common common;
  std::string op = "canonical", fpoly, gpoly;
  std::string usec = "u", vsec = "v";
  long truncate = 3, bound = 3, degree_component = 0, samples = 0;
  std::vector<std::string> fixes;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", common.file, "input .gcm file")->required();
    sub->add_option("--json", common.json_path, "write a JSON report");
    sub->add_flag("--with-timing", common.with_timing,
                  "include wall time in the JSON report");
    sub->add_option("--seed", common.seed, "seed for randomized checks");
  };

  auto* contact = app.add_subcommand("check-contact",
                                     "contact criterion via symplectization");
  add_common(contact);
  auto* jac = app.add_subcommand("check-jacobi",
                                 "Jacobi structure conditions");
  add_common(jac);
  jac->add_option("--samples", samples,
                  "also verify the bracket axioms on N seeded triples");
  auto* poi = app.add_subcommand("poissonize",
                                 "degree -1 tensor of a Jacobi triple");
  add_common(poi);
  auto* bra = app.add_subcommand("bracket", "canonical or derived bracket");
  add_common(bra);
  bra->add_option("--op", op, "canonical | derived");
  bra->add_option("--f", fpoly, "left operand")->required();
  bra->add_option("--g", gpoly, "right operand")->required();
  auto* leg = app.add_subcommand("legendre", "Legendre bracket of a contact form");
  add_common(leg);
  leg->add_option("--f", fpoly, "left operand")->required();
  leg->add_option("--g", gpoly, "right operand")->required();
  auto* coh = app.add_subcommand("cohomology",
                                 "complex of a homological Hamiltonian");
  add_common(coh);
  coh->add_option("--truncate", truncate, "max cochain degree");
  coh->add_option("--bound", bound, "exponent box bound for the basis");
  coh->add_option("--fix", fixes, "fix a weight component, e.g. --fix 1=0");
  coh->add_option("--degree-component", degree_component,
                  "weight component used as the cochain degree");
  auto* cou = app.add_subcommand("check-courant",
                                 "master equation and algebroid axioms");
  add_common(cou);
  auto* wad = app.add_subcommand("wade", "Loday bracket of two sections");
  add_common(wad);
  wad->add_option("--u", usec, "left section name");
  wad->add_option("--v", vsec, "right section name");

  CLI11_PARSE(app, argc, argv);

  try {
    if (contact->parsed()) return run_check_contact(common);
    if (jac->parsed()) return run_check_jacobi(common, samples);
    if (poi->parsed()) return run_poissonize(common);
    if (bra->parsed()) return run_bracket(common, op, fpoly, gpoly);
    if (leg->parsed()) return run_legendre(common, fpoly, gpoly);
    if (coh->parsed())
      return run_cohomology(common, truncate, bound, fixes, degree_component);
    if (cou->parsed()) return run_check_courant(common);
    if (wad->parsed()) return run_wade(common, usec, vsec);
  } catch (const gcalc::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const gcalc::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMathFail;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
