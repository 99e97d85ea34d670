// Command-line workbench for the Racah algebra and its embedding into
// F[a,b,c] (x) U(sl2).
//
//   normalize EXPR   write an expression in the ordered basis
//   embed EXPR       image of an abstract expression in the tensor algebra
//   grade EXPR       homogeneous components (abstract input is embedded first)
//   verify           run named verification suites (all by default)
//   certify          exact-rank injectivity certificate for capped monomials
//   eval EXPR        evaluate in finite-dimensional representations
//
// --format selects text (default), structured (one JSON document) or latex.
// Exit codes: 0 success, 1 verification failure, 2 usage or syntax error.

#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "racah/embedding.hpp"
#include "racah/format.hpp"
#include "racah/independence.hpp"
#include "racah/parse.hpp"
#include "racah/racah_nf.hpp"
#include "racah/rep.hpp"
#include "racah/suites.hpp"
#include "racah/tensor.hpp"

namespace {

using nlohmann::json;

std::string matrix_text(const racah::RationalMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    out += "[";
    for (std::size_t j = 0; j < m.size(); ++j) {
      out += " " + racah::to_string(m.at(i, j));
    }
    out += " ]\n";
  }
  return out;
}

json matrix_json(const racah::RationalMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(racah::to_string(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for the Racah algebra, U(sl2) and the embedding"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "structured", "latex"}))
      ->capture_default_str();
  // Let global options like --format appear after the verb as well.
  app.fallthrough();

  std::string expr_text;
  std::int32_t degree = 0;
  bool degree_given = false;

  auto* cmd_normalize =
      app.add_subcommand("normalize", "write an expression in the ordered basis");
  cmd_normalize->add_option("expr", expr_text, "expression to normalize")->required();

  auto* cmd_embed =
      app.add_subcommand("embed", "image of an abstract expression in the tensor algebra");
  cmd_embed->add_option("expr", expr_text, "abstract expression")->required();

  auto* cmd_grade = app.add_subcommand("grade", "homogeneous components by degree");
  cmd_grade->add_option("expr", expr_text, "expression (abstract input is embedded first)")
      ->required();
  cmd_grade->add_option("--degree", degree, "print a single component")
      ->each([&degree_given](const std::string&) { degree_given = true; });

  racah::SuiteOptions sopt;
  std::vector<std::string> suite_sel;
  std::vector<std::int32_t> caps_in;
  bool list_suites = false;

  auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
  cmd_verify->add_option("--suite", suite_sel, "suite names (repeatable; default: all)");
  cmd_verify->add_flag("--list", list_suites, "list suite names and exit");
  cmd_verify->add_option("--seed", sopt.seed, "seed for randomized suites");
  cmd_verify->add_option("--count", sopt.count, "sample count for randomized suites");
  cmd_verify->add_option("--depth", sopt.depth, "random expression depth");
  cmd_verify->add_option("--grade-power", sopt.grade_power, "power bound for graded tables");
  cmd_verify->add_option("--grade-triple", sopt.grade_triple,
                         "total-degree bound for mixed products");
  cmd_verify->add_option("--degree-bound", sopt.degree, "exponent bound for independence");
  cmd_verify->add_option("--caps", caps_in, "injectivity caps i,j,k,l,r,s,t")->delimiter(',');
  cmd_verify->add_option("--limit", sopt.limit, "injectivity monomial-count guard");
  cmd_verify->add_option("--dims", sopt.dims, "evaluation dimensions")->delimiter(',');
  cmd_verify->add_option("--points", sopt.points, "evaluation points per dimension");

  racah::InjectivityOptions iopt;
  auto* cmd_certify = app.add_subcommand("certify", "injectivity certificate");
  cmd_certify->add_option("--caps", caps_in, "exponent caps i,j,k,l,r,s,t")->delimiter(',');
  cmd_certify->add_option("--limit", iopt.limit, "monomial-count guard");

  std::vector<std::int32_t> eval_dims{3};
  std::size_t eval_points = 1;
  std::uint64_t eval_seed = 0xACE5EEDull;
  auto* cmd_eval =
      app.add_subcommand("eval", "evaluate in finite-dimensional representations");
  cmd_eval->add_option("expr", expr_text, "expression (abstract input is embedded first)")
      ->required();
  cmd_eval->add_option("--dims", eval_dims, "representation dimensions")->delimiter(',');
  cmd_eval->add_option("--points", eval_points, "points sampled for a, b, c");
  cmd_eval->add_option("--seed", eval_seed, "seed for the sampled points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!caps_in.empty()) {
    if (caps_in.size() != 7) {
      std::cerr << "error: --caps expects exactly 7 values i,j,k,l,r,s,t\n";
      return 2;
    }
    for (std::size_t i = 0; i < 7; ++i) {
      sopt.caps[i] = caps_in[i];
      iopt.caps[i] = caps_in[i];
    }
  }

  try {
    if (cmd_normalize->parsed()) {
      racah::ParsedInput in = racah::parse_input(expr_text);
      if (std::holds_alternative<racah::RacahExpr>(in)) {
        racah::RacahNF nf = racah::normalize(std::get<racah::RacahExpr>(in));
        if (format == "structured")
          emit({{"input", expr_text}, {"normal_form", racah::to_json(nf)},
                {"text", racah::to_text(nf)}});
        else if (format == "latex")
          std::cout << racah::to_latex(nf) << "\n";
        else
          std::cout << racah::to_text(nf) << "\n";
      } else {
        const racah::TensorElement& u = std::get<racah::TensorElement>(in);
        if (format == "structured")
          emit({{"input", expr_text}, {"normal_form", racah::to_json(u)},
                {"text", racah::to_text(u)}});
        else if (format == "latex")
          std::cout << racah::to_latex(u) << "\n";
        else
          std::cout << racah::to_text(u) << "\n";
      }
      return 0;
    }

    if (cmd_embed->parsed()) {
      racah::TensorElement image = racah::embed(racah::parse_racah(expr_text));
      if (format == "structured")
        emit({{"input", expr_text}, {"image", racah::to_json(image)},
              {"text", racah::to_text(image)}});
      else if (format == "latex")
        std::cout << racah::to_latex(image) << "\n";
      else
        std::cout << racah::to_text(image) << "\n";
      return 0;
    }

    if (cmd_grade->parsed()) {
      racah::ParsedInput in = racah::parse_input(expr_text);
      racah::TensorElement u = std::holds_alternative<racah::RacahExpr>(in)
                                   ? racah::embed(std::get<racah::RacahExpr>(in))
                                   : std::get<racah::TensorElement>(in);
      if (degree_given) {
        racah::TensorElement comp = racah::grade_project_tensor(u, degree);
        if (format == "structured")
          emit({{"input", expr_text}, {"degree", degree},
                {"component", racah::to_json(comp)}, {"text", racah::to_text(comp)}});
        else if (format == "latex")
          std::cout << racah::to_latex(comp) << "\n";
        else
          std::cout << racah::to_text(comp) << "\n";
        return 0;
      }
      auto parts = racah::grade_decompose_tensor(u);
      if (format == "structured") {
        json comps = json::object();
        for (const auto& [n, comp] : parts)
          comps[std::to_string(n)] = racah::to_json(comp);
        emit({{"input", expr_text}, {"components", comps}});
      } else {
        for (const auto& [n, comp] : parts) {
          std::cout << "degree " << n << ": "
                    << (format == "latex" ? racah::to_latex(comp) : racah::to_text(comp))
                    << "\n";
        }
      }
      return 0;
    }

    if (cmd_verify->parsed()) {
      if (list_suites) {
        if (format == "structured") {
          json names = json::array();
          for (const auto& s : racah::suite_registry())
            names.push_back({{"name", s.name}, {"summary", s.summary}});
          emit(names);
        } else {
          for (const auto& s : racah::suite_registry())
            std::cout << s.name << "\n    " << s.summary << "\n";
        }
        return 0;
      }
      for (const auto& name : suite_sel) {
        if (!racah::has_suite(name)) {
          std::cerr << "error: unknown suite '" << name << "' (see verify --list)\n";
          return 2;
        }
      }
      std::vector<racah::VerificationReport> reports;
      if (suite_sel.empty()) {
        reports = racah::run_all_suites(sopt);
      } else {
        for (const auto& name : suite_sel) reports.push_back(racah::run_suite(name, sopt));
      }
      bool all_ok = true;
      std::size_t checks = 0;
      for (const auto& r : reports) {
        all_ok = all_ok && r.all_passed();
        checks += r.checks.size();
      }
      if (format == "structured") {
        json suites = json::array();
        for (const auto& r : reports) suites.push_back(racah::to_json(r));
        emit({{"suites", suites}, {"checks", checks}, {"passed", all_ok}});
      } else {
        for (const auto& r : reports) std::cout << racah::report_to_text(r, !r.all_passed());
        std::cout << (all_ok ? "PASS" : "FAIL") << " (" << checks << " checks)\n";
      }
      return all_ok ? 0 : 1;
    }

    if (cmd_certify->parsed()) {
      racah::InjectivityCertificate cert = racah::injectivity_certificate(iopt);
      if (format == "structured") {
        emit(racah::to_json(cert));
      } else {
        std::cout << "monomials: " << cert.dimension << "\nrank: " << cert.rank
                  << "\ninjective: " << (cert.injective ? "yes" : "no") << "\nelapsed: "
                  << cert.elapsed_seconds << " s\n";
      }
      return cert.injective ? 0 : 1;
    }

    if (cmd_eval->parsed()) {
      racah::ParsedInput in = racah::parse_input(expr_text);
      racah::TensorElement u = std::holds_alternative<racah::RacahExpr>(in)
                                   ? racah::embed(std::get<racah::RacahExpr>(in))
                                   : std::get<racah::TensorElement>(in);
      auto pts = racah::sample_points(eval_points, eval_seed);
      json docs = json::array();
      for (std::int32_t d : eval_dims) {
        racah::IrrepMatrices rep = racah::build_irrep(d);
        for (std::size_t pi = 0; pi < pts.size(); ++pi) {
          racah::RationalMatrix m = racah::evaluate(u, rep, pts[pi]);
          if (format == "structured") {
            docs.push_back({{"dim", d},
                            {"point",
                             {racah::to_string(pts[pi].a), racah::to_string(pts[pi].b),
                              racah::to_string(pts[pi].c)}},
                            {"matrix", matrix_json(m)}});
          } else {
            std::cout << "dim " << d << ", (a, b, c) = (" << racah::to_string(pts[pi].a)
                      << ", " << racah::to_string(pts[pi].b) << ", "
                      << racah::to_string(pts[pi].c) << "):\n"
                      << matrix_text(m);
          }
        }
      }
      if (format == "structured") emit({{"input", expr_text}, {"evaluations", docs}});
      return 0;
    }
  } catch (const racah::ParseError& ex) {
    std::cerr << "syntax error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
