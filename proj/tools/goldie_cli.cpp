// Command-line front end: Goldie rank reports, Goldie rank polynomials,
// Kazhdan-Lusztig tables with an on-disk cache, theorem verification
// suites, and the one-dimensional-module solver.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"

#include "goldie/goldie.hpp"
#include "goldie/json_io.hpp"
#include "goldie/onedim.hpp"
#include "goldie/verify.hpp"

namespace {

using namespace goldie;

// exit codes: 0 ok, 1 usage/parse, 2 domain precondition,
// 3 internal consistency, 4 verification failure, 5 numeric failure
constexpr int kOk = 0;
constexpr int kParseError = 1;
constexpr int kDomainError = 2;
constexpr int kInternalError = 3;
constexpr int kVerifyFailure = 4;
constexpr int kNumericFailure = 5;

std::string resolve_cache_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("GOLDIE_CACHE_DIR"); env && *env)
    return env;
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::string(home) + "/.cache/goldie";
  return ".goldie-cache";
}

Json parse_json_arg(const std::string& arg) {
  // a path is accepted as well as an inline JSON literal
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
    return Json::parse(arg);
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open file: " + arg);
  Json j;
  in >> j;
  return j;
}

void print_report(const GoldieReport& report, bool as_json) {
  if (as_json) {
    std::cout << report_to_json(report).dump(2) << "\n";
    return;
  }
  std::cout << "weight: " << weight_to_json(report.input).dump() << "\n";
  for (std::size_t i = 0; i < report.factors.size(); ++i) {
    const GoldieFactor& f = report.factors[i];
    std::cout << "factor " << (i + 1) << ": coset " << to_string(f.coset_rep)
              << ", sub-weight " << weight_to_json(f.sub_weight).dump()
              << "\n  shape " << Json(f.shape.parts).dump()
              << ", minimal cell member "
              << permutation_to_json(f.w_min).dump() << "\n  polynomial "
              << f.poly.to_string() << "\n  rank " << f.rank.str()
              << (f.factor_completely_prime ? " (completely prime factor)"
                                            : "")
              << "\n";
    if (f.induced)
      std::cout << "  induced: parabolic column heights "
                << Json(f.induced->column_heights).dump() << ", dim F = "
                << f.induced->dim_f.str() << "\n";
  }
  std::cout << "total Goldie rank: " << report.total_rank.str() << "\n";
  std::cout << (report.completely_prime ? "completely prime"
                                        : "not completely prime")
            << "\n";
}

int run_verify(const std::string& suite, std::optional<int> n, KLCache& cache,
               unsigned threads, bool as_json) {
  VerifyResult result;
  if (suite == "one") result = verify_one(cache, n.value_or(6));
  else if (suite == "myg") result = verify_myg(cache, n.value_or(5));
  else if (suite == "maing") result = verify_maing(cache, n.value_or(5));
  else if (suite == "inverse") result = verify_inverse(cache, n.value_or(5));
  else if (suite == "moeglin") result = verify_moeglin(cache, n.value_or(5));
  else if (suite == "red") result = verify_red(cache, n.value_or(5));
  else if (suite == "rs") result = verify_rs(n.value_or(6));
  else if (suite == "stup") result = verify_stup(n.value_or(100));
  else if (suite == "cells") result = verify_cells(cache, n.value_or(4));
  else if (suite == "kl") result = verify_kl(cache, n.value_or(5), threads);
  else throw std::invalid_argument("unknown suite: " + suite);

  if (as_json) {
    Json out;
    out["suite"] = result.suite;
    out["checks"] = result.checks;
    out["passed"] = result.passed();
    out["failures"] = result.failures;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "suite " << result.suite << ": " << result.checks
              << " checks, "
              << (result.passed() ? "all passed" : "FAILURES:") << "\n";
    for (const std::string& f : result.failures) std::cout << "  " << f << "\n";
  }
  return result.passed() ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of primitive ideals of U(gl_N)"};
  app.require_subcommand(1);

  std::string cache_dir_flag;
  int n_guard = 7;
  bool strict = false;
  double tol = 1e-9;
  bool as_json = false;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  app.add_option("--cache-dir", cache_dir_flag,
                 "KL cache directory (default $GOLDIE_CACHE_DIR or "
                 "~/.cache/goldie)");
  app.add_option("--n-guard", n_guard, "largest N the KL builder accepts")
      ->capture_default_str();
  app.add_flag("--strict", strict,
               "reject non-minimal cell members instead of substituting");
  app.add_option("--tol", tol, "numeric tolerance for the solver")
      ->capture_default_str();
  app.add_flag("--json", as_json, "machine-readable output");
  app.add_option("--threads", threads, "worker threads for the KL build");

  auto* rank_cmd =
      app.add_subcommand("rank", "Goldie rank report for a weight");
  std::string rank_weight;
  rank_cmd->add_option("weight", rank_weight,
                       "CSV of rationals (\"3,1\") or a JSON array")
      ->required();

  auto* poly_cmd = app.add_subcommand(
      "poly", "Goldie rank polynomial of a cell");
  std::string poly_perm, poly_tableau;
  poly_cmd->add_option("--perm", poly_perm, "one-line permutation JSON");
  poly_cmd->add_option("--tableau", poly_tableau,
                       "standard recording tableau JSON (file or inline)");

  auto* kl_cmd = app.add_subcommand(
      "kl", "dump the KL table for N, or one polynomial");
  int kl_n = 0;
  std::string kl_x, kl_y;
  kl_cmd->add_option("N", kl_n, "symmetric group degree")->required();
  kl_cmd->add_option("--x", kl_x, "one-line permutation JSON");
  kl_cmd->add_option("--y", kl_y, "one-line permutation JSON");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  int verify_n = -1;
  verify_cmd
      ->add_option("suite", suite,
                   "one of: moeglin one myg maing inverse rs red stup cells kl")
      ->required();
  verify_cmd->add_option("N", verify_n, "suite size override");

  auto* onedim_cmd = app.add_subcommand(
      "onedim", "solve for a one-dimensional module's highest weight");
  std::string onedim_input;
  onedim_cmd
      ->add_option("input", onedim_input,
                   "JSON with row_lengths, values (and optional shift_matrix)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kParseError;
  }

  KLCache cache(threads, resolve_cache_dir(cache_dir_flag), n_guard);

  try {
    if (rank_cmd->parsed()) {
      print_report(goldie_rank(weight_from_string(rank_weight), cache),
                   as_json);
      return kOk;
    }
    if (poly_cmd->parsed()) {
      Permutation w = Permutation::identity(1);
      if (!poly_perm.empty()) {
        w = permutation_from_json(Json::parse(poly_perm));
      } else if (!poly_tableau.empty()) {
        Tableau t = tableau_from_json(parse_json_arg(poly_tableau));
        if (!is_standard(t))
          throw std::domain_error("poly: tableau is not standard");
        // the tableau addresses the cell of all w with that recording
        // tableau; any member will do since the polynomial is cell-constant
        if (t.boxes() > 8)
          throw std::domain_error("poly: tableau addressing supports N <= 8");
        bool found = false;
        for (const Permutation& cand : all_permutations(t.boxes()))
          if (rs_pair(cand).q == t) {
            w = cand;
            found = true;
            break;
          }
        if (!found)
          throw std::domain_error(
              "poly: no permutation has this recording tableau");
      } else {
        throw std::invalid_argument("poly: need --perm or --tableau");
      }
      const KLTable& table = cache.table(w.n());
      MultiPoly p = goldie_poly_bform(table, w, strict);
      if (as_json) {
        Json out;
        out["n"] = w.n();
        out["minimal_cell_rep"] = permutation_to_json(minimal_cell_rep(w));
        out["polynomial"] = p.to_string();
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << p.to_string() << "\n";
      }
      return kOk;
    }
    if (kl_cmd->parsed()) {
      std::string dir = resolve_cache_dir(cache_dir_flag);
      std::string path = dir + "/kl-n" + std::to_string(kl_n) + ".jsonl";
      {
        std::ifstream probe(path);
        std::string header;
        if (probe && std::getline(probe, header) &&
            header != "GOLDIE-KL v1 N=" + std::to_string(kl_n))
          std::cerr << "warning: cache header mismatch, rebuilding " << path
                    << "\n";
      }
      const KLTable& table = cache.table(kl_n);
      if (!kl_x.empty() && !kl_y.empty()) {
        Permutation x = permutation_from_json(Json::parse(kl_x));
        Permutation y = permutation_from_json(Json::parse(kl_y));
        std::cout << table.poly(x, y).to_string() << "\n";
      } else {
        std::cout << "GOLDIE-KL v1 N=" << kl_n << "\n";
        for (std::int64_t yr = 0; yr < table.group_order(); ++yr)
          for (std::int64_t xr = 0; xr < table.group_order(); ++xr) {
            const UniPoly& p = table.poly_by_rank(xr, yr);
            if (p.is_zero()) continue;
            Json rec;
            rec["x"] = Permutation::from_lex_rank(kl_n, xr).images();
            rec["y"] = Permutation::from_lex_rank(kl_n, yr).images();
            rec["p"] = p.coeffs;
            std::cout << rec.dump() << "\n";
          }
      }
      return kOk;
    }
    if (verify_cmd->parsed()) {
      std::optional<int> n;
      if (verify_n > 0) n = verify_n;
      return run_verify(suite, n, cache, threads, as_json);
    }
    if (onedim_cmd->parsed()) {
      Json j = parse_json_arg(onedim_input);
      StupInput input = stup_input_from_json(j);
      StupSolution sol = stup_solve(input, tol);
      Json out = stup_solution_to_json(sol);
      if (j.contains("shift_matrix")) {
        TableauEmission emission = connected_tableau_of(
            sol,
            ShiftMatrix(j.at("shift_matrix")
                            .get<std::vector<std::vector<int>>>()),
            tol);
        if (emission.tableau)
          out["tableau"] = tableau_to_json(*emission.tableau);
        else
          out["tableau_declined"] = emission.message;
      }
      std::cout << out.dump(2) << "\n";
      return kOk;
    }
    throw std::invalid_argument("no subcommand");
  } catch (const InternalConsistencyError& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return kInternalError;
  } catch (const NumericFailure& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return kNumericFailure;
  } catch (const std::domain_error& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return kDomainError;
  } catch (const Json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}
