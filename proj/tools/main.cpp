// Copyright 2026 The biunitary Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// biunitary: command line front end for the library.
//
// Exit status: 0 when every check passes, 1 when a check fails, 2 on usage,
// input or budget errors.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "biunitary/algebra.hpp"
#include "biunitary/hadamard.hpp"
#include "biunitary/matrix_file.hpp"
#include "biunitary/report.hpp"
#include "biunitary/scenarios.hpp"
#include "biunitary/squares.hpp"
#include "biunitary/tower.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Globals {
  double tol = 1e-9;
  double rank_eps = 1e-8;
  std::uint64_t seed = 1;
  std::string json_path;
  std::size_t max_order = 6;
  std::size_t max_ambient = 128;
  bool no_timing = false;

  biu::ScenarioOptions options() const {
    biu::ScenarioOptions o;
    o.tol.residual_eps = tol;
    o.tol.rank_eps = rank_eps;
    o.tol.validate();
    o.seed = seed;
    o.max_ambient = max_ambient;
    return o;
  }
};

int emit(const biu::VerificationReport& report, const Globals& g) {
  std::cout << biu::to_text(report);
  if (!g.json_path.empty()) {
    std::ofstream out(g.json_path);
    if (!out) {
      std::cerr << "error: cannot write " << g.json_path << "\n";
      return kExitUsage;
    }
    out << biu::to_json(report, !g.no_timing);
  }
  return report.overall() ? kExitPass : kExitFail;
}

void emit_matrix(const biu::LeggedMatrix& m, const std::string& out) {
  if (out.empty()) {
    std::cout << biu::format_matrix(m);
  } else {
    biu::write_matrix(out, m);
  }
}

void check_order(std::size_t order, const Globals& g) {
  if (order > g.max_ambient) {
    throw biu::BudgetExceeded("matrix order " + std::to_string(order) + " exceeds --max-ambient " +
                              std::to_string(g.max_ambient));
  }
}

biu::VerificationReport hadamard_report(const biu::LeggedMatrix& m, const biu::Tolerance& tol) {
  const auto h = biu::is_complex_hadamard(m, tol);
  biu::VerificationReport r;
  r.scenario = "check-hadamard";
  r.params = {{"n", static_cast<std::int64_t>(m.order())}};
  r.add({"unitary", h.unitary_residual <= tol.residual_eps, h.unitary_residual, 0.0, h.unitary_residual});
  r.add({"unimodular_entries", h.modulus_residual <= tol.residual_eps, h.modulus_residual, 0.0,
         h.modulus_residual});
  return r;
}

biu::VerificationReport equivalence_report(const biu::LeggedMatrix& a, const biu::LeggedMatrix& b,
                                           const biu::Tolerance& tol, std::size_t max_order) {
  biu::VerificationReport r;
  r.scenario = "equiv";
  r.params = {{"n", static_cast<std::int64_t>(a.order())}};
  const auto witness = biu::hadamard_equivalent(a, b, tol, max_order);
  const double residual = witness ? witness->residual : std::numeric_limits<double>::infinity();
  r.add({"equivalent", witness.has_value(), witness ? 1.0 : 0.0, 1.0, residual});
  return r;
}

biu::VerificationReport commutant_report(const biu::LeggedMatrix& u, const biu::LeggedMatrix& w, std::size_t k,
                                         long expect, const Globals& g) {
  const auto opts = g.options();
  const std::size_t n = u.order();
  check_order(biu::int_pow(n, k + 2), g);
  const biu::TowerCache tu(u, 2 * k + 2, opts.tol);
  const biu::TowerCache tw(w, 2 * k + 2, opts.tol);
  const auto gens = biu::n_generators(tu, tw, k, biu::Parity::kEven);
  const auto rc = biu::relative_commutant(gens, biu::Split{n, biu::int_pow(n, k + 1)}, opts.tol);
  biu::VerificationReport r;
  r.scenario = "commutant";
  r.params = {{"n", static_cast<std::int64_t>(n)}, {"k", static_cast<std::int64_t>(k)}};
  const double dim = static_cast<double>(rc.dimension());
  if (expect >= 0) {
    r.add({"relative_commutant_dim", dim == static_cast<double>(expect), dim, static_cast<double>(expect),
           1.0 / rc.spectral_gap});
  } else {
    r.add({"observe_relative_commutant_dim", true, dim, dim, 1.0 / rc.spectral_gap});
  }
  r.add({"observe_spectral_gap", true, rc.spectral_gap, rc.spectral_gap, 0.0});
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biunitary matrices from complex Hadamard pairs"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--tol", g.tol, "Residual tolerance")->check(CLI::PositiveNumber);
  app.add_option("--rank-eps", g.rank_eps, "Rank cutoff for numerical dimensions")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "Seed for randomized checks");
  app.add_option("--json", g.json_path, "Write the report as JSON to this path");
  app.add_option("--max-order", g.max_order, "Largest order the Hadamard equivalence search accepts")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-ambient", g.max_ambient, "Largest matrix order any step may build")->check(CLI::PositiveNumber);
  app.add_flag("--no-timing", g.no_timing, "Write timing_ms as 0 in JSON output");

  std::size_t fourier_n = 2;
  std::string out_path;
  auto* fourier_cmd = app.add_subcommand("fourier", "Write the Fourier matrix F_n as a matrix file");
  fourier_cmd->add_option("n", fourier_n, "Order")->required()->check(CLI::PositiveNumber);
  fourier_cmd->add_option("-o,--out", out_path, "Output path (stdout if omitted)");

  std::string path_a;
  std::string path_b;
  auto* hadamard_cmd = app.add_subcommand("check-hadamard", "Check that a matrix file holds a complex Hadamard matrix");
  hadamard_cmd->add_option("matrix", path_a)->required();

  auto* equiv_cmd = app.add_subcommand("equiv", "Search for a Hadamard equivalence between two matrix files");
  equiv_cmd->add_option("a", path_a)->required();
  equiv_cmd->add_option("b", path_b)->required();

  std::size_t tower_m = 0;
  auto* tower_cmd = app.add_subcommand("tower", "Write the tower unitary u_m of a Hadamard matrix");
  tower_cmd->add_option("matrix", path_a)->required();
  tower_cmd->add_option("-m,--index", tower_m, "Tower index m")->required();
  tower_cmd->add_option("-o,--out", out_path, "Output path (stdout if omitted)");

  std::size_t level = 0;
  auto* bu_cmd = app.add_subcommand("biunitary", "Build BU(u,w;level) and run both biunitarity criteria");
  bu_cmd->add_option("u", path_a)->required();
  bu_cmd->add_option("w", path_b)->required();
  bu_cmd->add_option("-l,--level", level, "Level l");
  bu_cmd->add_option("-o,--out", out_path, "Also write BU to this path");

  std::size_t k = 0;
  long expect = -1;
  auto* commutant_cmd = app.add_subcommand("commutant", "Relative commutant of N_{2k} for a Hadamard pair");
  commutant_cmd->add_option("u", path_a)->required();
  commutant_cmd->add_option("w", path_b)->required();
  commutant_cmd->add_option("-k", k, "Level k");
  commutant_cmd->add_option("--expect", expect, "Fail unless the dimension equals this value");

  std::string scenario_name;
  std::size_t sn = 0;
  std::size_t sm = 1;
  std::size_t k_max = 1;
  std::size_t shift_power = 1;
  bool mutate = false;
  auto* scenario_cmd = app.add_subcommand("scenario", "Run a named verification scenario");
  scenario_cmd
      ->add_option("name", scenario_name,
                   "biunitary | diagonal_fourier | irreducible | noncommutativity | chain_isomorphism | "
                   "no_downward_basic | lemma_suite")
      ->required()
      ->check(CLI::IsMember({"biunitary", "diagonal_fourier", "irreducible", "noncommutativity",
                             "chain_isomorphism", "no_downward_basic", "lemma_suite"}));
  scenario_cmd->add_option("-n", sn, "Order of the Hadamard matrices (scenario default if omitted)");
  scenario_cmd->add_option("-k", k, "Level k");
  scenario_cmd->add_option("-m", sm, "Multiplier m (no_downward_basic)");
  scenario_cmd->add_option("-l,--level", level, "Level (biunitary, chain_isomorphism)");
  scenario_cmd->add_option("--k-max", k_max, "Largest k (lemma_suite)");
  scenario_cmd->add_option("--shift", shift_power, "p2 = sigma_1^shift (chain_isomorphism)");
  scenario_cmd->add_flag("--mutate", mutate, "Run the lemma suite on its documented corruptions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    const auto opts = g.options();
    if (*fourier_cmd) {
      check_order(fourier_n, g);
      emit_matrix(biu::fourier(fourier_n), out_path);
      return kExitPass;
    }
    if (*hadamard_cmd) return emit(hadamard_report(biu::read_matrix(path_a), opts.tol), g);
    if (*equiv_cmd) return emit(equivalence_report(biu::read_matrix(path_a), biu::read_matrix(path_b), opts.tol, g.max_order),
                  g);
    if (*tower_cmd) {
      const auto u = biu::read_matrix(path_a);
      check_order(biu::tower_order(u.order(), tower_m), g);
      const biu::TowerCache cache(u, tower_m, opts.tol);
      emit_matrix(cache.unitary(tower_m), out_path);
      return kExitPass;
    }
    if (*bu_cmd) {
      const auto u = biu::read_matrix(path_a);
      const auto w = biu::read_matrix(path_b);
      const auto report = biu::scenario_biunitary(u, w, level, opts);
      if (!out_path.empty()) biu::write_matrix(out_path, biu::biunitary_bu(u, w, level, opts.tol));
      return emit(report, g);
    }
    if (*commutant_cmd) {
      return emit(commutant_report(biu::read_matrix(path_a), biu::read_matrix(path_b), k, expect, g), g);
    }

    biu::VerificationReport report;
    if (scenario_name == "biunitary") {
      const auto f = biu::fourier(sn ? sn : 2);
      report = biu::scenario_biunitary(f, f, level, opts);
    } else if (scenario_name == "diagonal_fourier") {
      report = biu::scenario_diagonal_fourier(sn ? sn : 2, k, opts);
    } else if (scenario_name == "irreducible") {
      report = biu::scenario_irreducible(sn ? sn : 4, opts);
    } else if (scenario_name == "noncommutativity") {
      report = biu::scenario_noncommutativity(sn ? sn : 4, opts);
    } else if (scenario_name == "chain_isomorphism") {
      const std::size_t n = sn ? sn : 3;
      const auto id = biu::LeggedMatrix::identity({n});
      report = biu::scenario_chain_isomorphism({biu::fourier(n), id, id, biu::shift(n, shift_power), id,
                                                level ? level : 1},
                                               opts);
    } else if (scenario_name == "no_downward_basic") {
      report = biu::scenario_no_downward_basic(sn ? sn : 2, k ? k : 1, sm, opts);
    } else {
      report = biu::scenario_lemma_suite(sn ? sn : 2, k_max, opts, mutate);
    }
    return emit(report, g);
  } catch (const biu::BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << "\n";
  } catch (const biu::SearchRefused& e) {
    std::cerr << "refused: " << e.what() << "\n";
  } catch (const biu::MatrixFileException& e) {
    std::cerr << "matrix file: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
  } catch (const std::out_of_range& e) {
    std::cerr << "out of range: " << e.what() << "\n";
  }
  return kExitUsage;
}
