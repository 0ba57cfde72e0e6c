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

#include "biunitary/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <limits>
#include <string>

#include <Eigen/QR>

#include "biunitary/algebra.hpp"
#include "biunitary/hadamard.hpp"
#include "biunitary/squares.hpp"

namespace biu {
namespace {

using Index = Eigen::Index;
using Clock = std::chrono::steady_clock;

Index idx(std::size_t v) { return static_cast<Index>(v); }

constexpr const char* kBiunitarity = "biunitarity of BU(u,w;l) for Hadamard u, w";
constexpr const char* kSquareEquivalence = "block-transpose unitarity iff commuting square";
constexpr const char* kDiagonalFourier = "relative commutant of the (F_n,F_n) level-k subfactor is C^{n^{k+1}}";
constexpr const char* kClockToShift = "Ad_{I (x) (F_n)_{2k}}(I (x) D_1 (x) I) = I (x) sigma_1^{(k+1)}";
constexpr const char* kDiagonalization = "Ad_{(F_n)_{2k+1}(I (x) (F_n)_{2k})}(I (x) D_1 (x) I) is diagonal";
constexpr const char* kIrreducible = "(R_0^{F_n,PF_n})' cap R = C";
constexpr const char* kIrreduciblePre = "Ad_{PF_n}(D_{n/2}) not parallel to Ad_{D_1 PF_n}(D_{n/2})";
constexpr const char* kNoncommutative = "(u,w) and (w,u) give relative commutants C and C^n";
constexpr const char* kChainDiag = "theta_1(u D u*) = v D v*";
constexpr const char* kChainFixed = "theta_1(e_i) = e_i";
constexpr const char* kChainTower = "theta_1(Ad_{u_k}(x)) = Ad_{v_k}(x)";
constexpr const char* kOuterPeriod = "outer period equals the order of P_2 P_1*";
constexpr const char* kWitness = "nested sequence need not be a downward basic construction";
constexpr const char* kIntertwining = "u_k e_k u_k* = e_{k+1}";
constexpr const char* kClockShift = "sigma_k F_n = F_n D_k and D_k F_n = F_n sigma_{n-1}^k";
constexpr const char* kBasicSpan = "N_{2k+1} = <N_{2k}, e_{2k+3}>";
constexpr const char* kBasicContainment = "<N_{2k+1}, e_{2k+4}> containments (observation)";
constexpr const char* kLegRearrangement = "leg rearrangement by V_k W_k";

class Timer {
 public:
  Timer() : start_(Clock::now()) {}
  double ms() const { return std::chrono::duration<double, std::milli>(Clock::now() - start_).count(); }

 private:
  Clock::time_point start_;
};

void check_budget(std::size_t order, const ScenarioOptions& opts, const std::string& what) {
  if (order > opts.max_ambient) {
    throw BudgetExceeded(what + ": ambient order " + std::to_string(order) + " exceeds budget " +
                         std::to_string(opts.max_ambient));
  }
}

std::int64_t as_int(std::size_t v) { return static_cast<std::int64_t>(v); }

LeggedMatrix identity_legs(std::size_t n, std::size_t count) { return LeggedMatrix::identity(n, count); }

LeggedMatrix pad_right(const LeggedMatrix& x, std::size_t n, std::size_t count) {
  return count == 0 ? x : kron(x, identity_legs(n, count));
}

LeggedMatrix phase_shifted(const LeggedMatrix& u) {
  Matrix m = u.data();
  m(0, 0) *= std::polar(1.0, std::numbers::pi / 5.0);
  return {u.legs(), std::move(m)};
}

// Distance of the entries {z_j} from the full set of n-th roots of unity.
double roots_distance(const std::vector<Complex>& z, std::size_t n) {
  double worst = 0.0;
  for (std::size_t p = 0; p < n; ++p) {
    const Complex root = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(n));
    double best = std::numeric_limits<double>::infinity();
    for (const auto& v : z) best = std::min(best, std::abs(v - root));
    worst = std::max(worst, best);
  }
  return worst;
}

ReportCheck residual_check(std::string name, double residual, double eps, std::string ref) {
  return {std::move(name), residual <= eps, residual, 0.0, residual, std::move(ref)};
}

ReportCheck count_check(std::string name, std::size_t value, std::size_t expected, double residual,
                        std::string ref) {
  return {std::move(name), value == expected, static_cast<double>(value), static_cast<double>(expected),
          residual, std::move(ref)};
}

ReportCheck observation(std::string name, double value, std::string ref) {
  return {"observe_" + std::move(name), true, value, 0.0, value, std::move(ref)};
}

// Basis map of V: exchange digits a and b of a base-n index with `legs` digits.
std::size_t swap_digits(std::size_t i, std::size_t n, std::size_t legs, std::size_t a, std::size_t b) {
  std::vector<std::size_t> digits(legs);
  for (std::size_t l = legs; l-- > 0;) {
    digits[l] = i % n;
    i /= n;
  }
  std::swap(digits[a], digits[b]);
  std::size_t out = 0;
  for (auto d : digits) out = out * n + d;
  return out;
}

std::size_t relative_commutant_dim(const TowerCache& u, const TowerCache& w, std::size_t k,
                                   const Tolerance& tol, double* gap = nullptr) {
  const std::size_t n = u.n();
  const auto gens = n_generators(u, w, k, Parity::kEven);
  const AlgebraBasis rc = relative_commutant(gens, Split{n, int_pow(n, k + 1)}, tol);
  if (gap) *gap = rc.spectral_gap;
  return rc.dimension();
}

}  // namespace

LeggedMatrix irreducibility_permutation(std::size_t n) {
  if (n < 3) throw std::invalid_argument("irreducibility_permutation: n must be at least 3");
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;
  // E_13 + E_21 + E_32: column 3 -> row 1, column 1 -> row 2, column 2 -> row 3.
  perm[2] = 0;
  perm[0] = 1;
  perm[1] = 2;
  return permutation_matrix(perm);
}

LeggedMatrix random_unitary(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(idx(n), idx(n));
  for (Index i = 0; i < g.rows(); ++i) {
    for (Index j = 0; j < g.cols(); ++j) g(i, j) = Complex(gauss(rng), gauss(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(idx(n), idx(n));
  const Matrix& r = qr.matrixQR();
  for (Index j = 0; j < q.cols(); ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0.0) q.col(j) *= d / std::abs(d);
  }
  return LeggedMatrix(std::move(q));
}

LeggedMatrix random_hadamard_orbit(const LeggedMatrix& h, std::mt19937_64& rng) {
  const std::size_t n = h.order();
  const LeggedMatrix d1 = random_diagonal_unitary(n, rng);
  const LeggedMatrix p1 = random_permutation(n, rng);
  const LeggedMatrix p2 = random_permutation(n, rng);
  const LeggedMatrix d2 = random_diagonal_unitary(n, rng);
  return d1 * p1 * h.with_legs({n}) * p2 * d2;
}

double intertwining_residual(const TowerCache& tower, std::size_t m) {
  const std::size_t n = tower.n();
  const LeggedMatrix um = tower.unitary(m);
  const LeggedMatrix lhs = conjugate_by(um, embed_left(jones_projection(m, n), um.order()));
  const LeggedMatrix rhs = jones_projection(m + 1, n);
  const std::size_t order = std::max(lhs.order(), rhs.order());
  return normalized_norm(embed_left(lhs, order) - embed_left(rhs, order));
}

double clock_shift_residual(const LeggedMatrix& f) {
  const std::size_t n = f.order();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    worst = std::max(worst, normalized_norm(shift(n, k) * f - f * clock(n, k)));
    worst = std::max(worst, normalized_norm(clock(n, k) * f - f * shift(n, k * (n - 1))));
  }
  return worst;
}

double clock_to_shift_residual(const TowerCache& tower, std::size_t k) {
  const std::size_t n = tower.n();
  const LeggedMatrix id = identity_legs(n, 1);
  const LeggedMatrix x = pad_right(kron(id, clock(n, 1)), n, k);
  const LeggedMatrix lhs = conjugate_by(kron(id, tower.unitary(2 * k)), x);
  LeggedMatrix rhs = id;
  for (std::size_t i = 0; i <= k; ++i) rhs = kron(rhs, shift(n, 1));
  return normalized_norm(lhs - rhs);
}

DiagonalizationResult diagonalization(const TowerCache& tower, std::size_t k) {
  const std::size_t n = tower.n();
  const LeggedMatrix id = identity_legs(n, 1);
  const LeggedMatrix x = pad_right(kron(id, clock(n, 1)), n, k);
  const LeggedMatrix conj = tower.unitary(2 * k + 1) * kron(id, tower.unitary(2 * k));
  DiagonalizationResult out{0.0, 0.0, conjugate_by(conj, x)};
  Matrix off = out.z.data();
  off.diagonal().setZero();
  out.off_diagonal = normalized_norm(LeggedMatrix(off));

  const std::size_t rest = out.z.order() / n;
  for (std::size_t r = 0; r < rest; ++r) {
    std::vector<Complex> block(n);
    for (std::size_t i0 = 0; i0 < n; ++i0) block[i0] = out.z(i0 * rest + r, i0 * rest + r);
    out.spectrum = std::max(out.spectrum, roots_distance(block, n));
  }
  return out;
}

double leg_rearrangement_residual(std::size_t n, std::size_t k, std::size_t s, std::mt19937_64& rng,
                                  bool skip_swap) {
  const std::size_t legs = 2 * k + s + 2;
  const std::size_t block = int_pow(n, k + 1);
  std::normal_distribution<double> gauss(0.0, 1.0);

  // x[1..k+s+1], random n×n factors.
  std::vector<LeggedMatrix> x(k + s + 2);
  for (std::size_t i = 1; i < x.size(); ++i) {
    Matrix m(idx(n), idx(n));
    for (Index r = 0; r < m.rows(); ++r) {
      for (Index c = 0; c < m.cols(); ++c) m(r, c) = Complex(gauss(rng), gauss(rng));
    }
    x[i] = LeggedMatrix(std::move(m));
  }
  auto descending = [&](std::size_t hi, std::size_t lo) {
    LeggedMatrix out = x[hi];
    for (std::size_t i = hi; i-- > lo;) out = kron(out, x[i]);
    return out;
  };

  const LeggedMatrix input = kron(identity_legs(n, k + 1), descending(k + s + 1, 1));

  // Σ E_ij ⊗ I^{(s)} ⊗ E_ji sends |j, m, i> to |i, m, j>; V and W are permutation
  // matrices, so Ad_{VW} is a reindexing by the composite basis map.
  const std::size_t order = int_pow(n, legs);
  const std::size_t mid = int_pow(n, s);
  std::vector<std::size_t> image(order);
  for (std::size_t t = 0; t < order; ++t) {
    const std::size_t j = t / (mid * block);
    const std::size_t m = (t / block) % mid;
    const std::size_t i = t % block;
    const std::size_t wt = (i * mid + m) * block + j;
    image[t] = skip_swap ? wt : swap_digits(wt, n, legs, k + s, legs - 1);
  }
  Matrix moved(idx(order), idx(order));
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) moved(idx(image[r]), idx(image[c])) = input(r, c);
  }
  const LeggedMatrix lhs(Legs(legs, n), std::move(moved));

  LeggedMatrix expected = descending(k + 1, 1);
  if (s >= 2) expected = kron(expected, descending(k + s + 1, k + 3));
  expected = kron(expected, identity_legs(n, k + 1));
  expected = kron(expected, x[k + 2]);
  return normalized_norm(lhs - expected) / normalized_norm(expected);
}

VerificationReport scenario_biunitary(const LeggedMatrix& u, const LeggedMatrix& w, std::size_t level,
                                      const ScenarioOptions& opts) {
  Timer timer;
  const std::size_t n = u.order();
  const std::size_t order = int_pow(n, level + 2);
  check_budget(order, opts, "biunitary");
  VerificationReport report;
  report.scenario = "biunitary";
  report.params = {{"n", as_int(n)}, {"level", as_int(level)}};

  const LeggedMatrix bu = biunitary_bu(u, w, level, opts.tol);
  const Split split{n, int_pow(n, level + 1)};
  const SquareReport direct = is_biunitary_blockwise(bu, split, opts.tol);
  report.add(direct, "blockwise_", kBiunitarity);
  if (direct.checks.front().pass) {
    const SquareReport square = is_biunitary_via_square(bu, split, opts.tol);
    report.add(square, "square_", kBiunitarity);
    report.add({"criteria_agree", direct.overall == square.overall, direct.overall ? 1.0 : 0.0,
                square.overall ? 1.0 : 0.0, 0.0, kSquareEquivalence});
  }
  report.add(count_check("order", bu.order(), order, 0.0, kBiunitarity));
  report.timing_ms = timer.ms();
  return report;
}

VerificationReport scenario_diagonal_fourier(std::size_t n, std::size_t k, const ScenarioOptions& opts) {
  Timer timer;
  if (n < 2) throw std::invalid_argument("diagonal_fourier: n must be at least 2");
  check_budget(int_pow(n, k + 2), opts, "diagonal_fourier");
  VerificationReport report;
  report.scenario = "diagonal_fourier";
  report.params = {{"n", as_int(n)}, {"k", as_int(k)}};

  const TowerCache tower(fourier(n), 2 * k + 2, opts.tol);
  double gap = 0.0;
  const std::size_t dim = relative_commutant_dim(tower, tower, k, opts.tol, &gap);
  report.add(count_check("relative_commutant_dim", dim, int_pow(n, k + 1), 0.0, kDiagonalFourier));
  report.add({"spectral_gap", gap >= 1e3, gap, 1e3, 0.0, kDiagonalFourier});
  report.add(residual_check("clock_to_shift", clock_to_shift_residual(tower, k), opts.tol.residual_eps,
                            kClockToShift));
  const DiagonalizationResult diag = diagonalization(tower, k);
  report.add(residual_check("diagonalization_off_diagonal", diag.off_diagonal, opts.tol.residual_eps,
                            kDiagonalization));
  report.add(residual_check("diagonalization_spectrum", diag.spectrum, opts.tol.residual_eps, kDiagonalization));
  report.timing_ms = timer.ms();
  return report;
}

VerificationReport scenario_irreducible(std::size_t n, const ScenarioOptions& opts) {
  Timer timer;
  if (n < 4 || n % 2 != 0) throw std::invalid_argument("irreducible: n must be even and at least 4");
  check_budget(n * n, opts, "irreducible");
  VerificationReport report;
  report.scenario = "irreducible";
  report.params = {{"n", as_int(n)}};

  const LeggedMatrix f = fourier(n);
  const LeggedMatrix pf = irreducibility_permutation(n) * f;
  const LeggedMatrix a = conjugate_by(pf, clock(n, n / 2));
  const LeggedMatrix b = conjugate_by(clock(n, 1) * pf, clock(n, n / 2));
  const double cosine = std::abs(trace_inner(a, b)) / (normalized_norm(a) * normalized_norm(b));
  report.add({"precondition_not_parallel", cosine <= 1.0 - opts.tol.rank_eps, cosine, 1.0, 1.0 - cosine,
              kIrreduciblePre});

  const TowerCache tu(f, 2, opts.tol);
  const TowerCache tw(pf, 1, opts.tol);
  double gap = 0.0;
  const std::size_t dim = relative_commutant_dim(tu, tw, 0, opts.tol, &gap);
  report.add(count_check("relative_commutant_dim", dim, 1, 1.0 / gap, kIrreducible));
  report.timing_ms = timer.ms();
  return report;
}

VerificationReport scenario_noncommutativity(std::size_t n, const ScenarioOptions& opts) {
  Timer timer;
  if (n < 3) throw std::invalid_argument("noncommutativity: n must be at least 3");
  check_budget(n * n, opts, "noncommutativity");
  VerificationReport report;
  report.scenario = "noncommutativity";
  report.params = {{"n", as_int(n)}};

  const LeggedMatrix f = fourier(n);
  const LeggedMatrix pf = irreducibility_permutation(n) * f;
  const TowerCache tf(f, 2, opts.tol);
  const TowerCache tp(pf, 2, opts.tol);
  report.add(count_check("relative_commutant_dim_forward", relative_commutant_dim(tf, tp, 0, opts.tol), 1, 0.0,
                         kNoncommutative));
  report.add(count_check("relative_commutant_dim_reversed", relative_commutant_dim(tp, tf, 0, opts.tol), n, 0.0,
                         kNoncommutative));

  const LeggedMatrix forward = biunitary_bu(f, pf, 0, opts.tol);
  const LeggedMatrix reversed = biunitary_bu(pf, f, 0, opts.tol);
  const double diff = (forward.data() - reversed.data()).cwiseAbs().maxCoeff();
  report.add({"bu_matrices_differ", diff > opts.tol.residual_eps, diff, 0.0, 0.0, kNoncommutative});
  const Split split{n, n};
  const SquareReport fwd_direct = is_biunitary_blockwise(forward, split, opts.tol);
  const SquareReport rev_direct = is_biunitary_blockwise(reversed, split, opts.tol);
  report.add(fwd_direct, "forward_blockwise_", kBiunitarity);
  report.add(rev_direct, "reversed_blockwise_", kBiunitarity);
  report.add(is_biunitary_via_square(forward, split, opts.tol), "forward_square_", kBiunitarity);
  report.add(is_biunitary_via_square(reversed, split, opts.tol), "reversed_square_", kBiunitarity);
  report.timing_ms = timer.ms();
  return report;
}

VerificationReport scenario_chain_isomorphism(const ChainInput& in, const ScenarioOptions& opts) {
  Timer timer;
  const std::size_t n = in.w.order();
  const std::size_t level = in.level;
  check_budget(int_pow(n, level + 2), opts, "chain_isomorphism");
  const LeggedMatrix u = in.d1 * in.p1 * in.w.with_legs({n});
  const LeggedMatrix v = in.d2 * in.p2 * in.w.with_legs({n});
  if (!is_complex_hadamard(u, opts.tol).hadamard || !is_complex_hadamard(v, opts.tol).hadamard) {
    throw std::invalid_argument("chain_isomorphism: d1 p1 w and d2 p2 w must be Hadamard");
  }
  VerificationReport report;
  report.scenario = "chain_isomorphism";
  report.params = {{"n", as_int(n)}, {"level", as_int(level)}};

  const std::size_t top = 2 * level + 1;
  const TowerCache tu(u, top, opts.tol);
  const TowerCache tv(v, top, opts.tol);
  std::vector<LeggedMatrix> conjugators;
  for (std::size_t l = 0; l <= level + 1; ++l) {
    conjugators.push_back(chain_conjugator(in.p1, in.d1, in.p2, in.d2, l, opts.tol));
  }

  double diag_residual = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const LeggedMatrix e = matrix_unit(n, j, j);
    diag_residual = std::max(diag_residual,
                             normalized_norm(conjugate_by(conjugators[0], conjugate_by(u, e)) - conjugate_by(v, e)));
  }
  report.add(residual_check("diagonal_images", diag_residual, opts.tol.residual_eps, kChainDiag));

  double fixed_residual = 0.0;
  for (std::size_t l = 0; l <= level + 1; ++l) {
    const std::size_t order = int_pow(n, l + 1);
    for (std::size_t m = 2; m <= 2 * l + 1; ++m) {
      const LeggedMatrix e = embed_left(jones_projection(m, n), order);
      fixed_residual = std::max(fixed_residual, normalized_norm(conjugate_by(conjugators[l], e) - e));
    }
  }
  report.add(residual_check("fixes_jones_projections", fixed_residual, opts.tol.residual_eps, kChainFixed));
  const LeggedMatrix e1 = jones_projection(1, n);
  report.add(observation("e1_fixed_residual", normalized_norm(conjugate_by(conjugators[0], e1) - e1), kChainFixed));

  // Ad_{C_L}(Ad_{u_k}(x)) = Ad_{v_k}(x) on matrix units of the algebra u_k acts on:
  // Δ_n ⊗ M^{(m)} for k = 2m (L = m), I ⊗ M^{(m+1)} for k = 2m+1 (L = m+1).
  for (std::size_t k = 0; k <= top; ++k) {
    const LeggedMatrix uk = tu.unitary(k);
    const LeggedMatrix vk = tv.unitary(k);
    const std::size_t m = k / 2;
    double worst = 0.0;
    if (k % 2 == 0) {
      const std::size_t inner = int_pow(n, m);
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t r = 0; r < inner; ++r) {
          for (std::size_t c = 0; c < inner; ++c) {
            const LeggedMatrix x = kron(matrix_unit(n, a, a), matrix_unit(inner, r, c));
            worst = std::max(worst, normalized_norm(conjugate_by(conjugators[m], conjugate_by(uk, x)) -
                                                    conjugate_by(vk, x)));
          }
        }
      }
    } else {
      const std::size_t inner = int_pow(n, m + 1);
      for (std::size_t r = 0; r < inner; ++r) {
        for (std::size_t c = 0; c < inner; ++c) {
          const LeggedMatrix x = embed_left(matrix_unit(inner, r, c), uk.order());
          worst = std::max(worst, normalized_norm(conjugate_by(conjugators[m + 1], conjugate_by(uk, x)) -
                                                  conjugate_by(vk, x)));
        }
      }
    }
    report.add(residual_check("tower_intertwining_k" + std::to_string(k), worst, opts.tol.residual_eps, kChainTower));
  }

  const LeggedMatrix p = in.p2 * in.p1.adjoint();
  const std::size_t period = permutation_order(p, opts.tol);
  const auto projective = projective_order(p, int_pow(n, n), opts.tol);
  report.add({"outer_period", projective && *projective == period, static_cast<double>(period),
              projective ? static_cast<double>(*projective) : 0.0, 0.0, kOuterPeriod});
  report.timing_ms = timer.ms();
  return report;
}

VerificationReport scenario_no_downward_basic(std::size_t n, std::size_t k, std::size_t m,
                                              const ScenarioOptions& opts) {
  Timer timer;
  if (n < 2 || k < 1 || m < 1) throw std::invalid_argument("no_downward_basic: need n >= 2 and k, m >= 1");
  const std::size_t mk = m * k;
  const std::size_t level = (m + 1) * k - 1;
  check_budget(int_pow(n, level + 2), opts, "no_downward_basic");
  VerificationReport report;
  report.scenario = "no_downward_basic";
  report.params = {{"n", as_int(n)}, {"k", as_int(k)}, {"m", as_int(m)}};

  const TowerCache tower(fourier(n), std::max(2 * mk - 1, 2 * level + 2), opts.tol);
  const LeggedMatrix id = identity_legs(n, 1);
  const LeggedMatrix seed = pad_right(kron(id, clock(n, 1)), n, mk - 1);
  const LeggedMatrix x = conjugate_by(tower.unitary(2 * mk - 1) * kron(id, tower.unitary(2 * mk - 2)), seed);

  Matrix off = x.data();
  off.diagonal().setZero();
  report.add(residual_check("x_diagonal", normalized_norm(LeggedMatrix(off)), opts.tol.residual_eps, kWitness));
  double root_gap = 0.0;
  for (std::size_t i = 0; i < x.order(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < n; ++p) {
      const Complex root =
          std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(n));
      best = std::min(best, std::abs(x(i, i) - root));
    }
    root_gap = std::max(root_gap, best);
  }
  report.add(residual_check("x_entries_roots_of_unity", root_gap, opts.tol.residual_eps, kWitness));
  report.add(residual_check("x_unitary", is_unitary(x, opts.tol).residual, opts.tol.residual_eps, kWitness));
  const double tr = std::abs(normalized_trace(x));
  report.add(residual_check("trace_zero", tr, opts.tol.residual_eps, kWitness));

  const auto gens = n_generators(tower, tower, level, Parity::kEven);
  const std::size_t inner = int_pow(n, level + 1);
  const AlgebraBasis rc = relative_commutant(gens, Split{n, inner}, opts.tol);
  const AlgebraBasis diag = intersect(rc, diagonal_algebra(Legs(level + 2, n)), opts.tol);
  report.add(observation("relative_commutant_dim", static_cast<double>(rc.dimension()), kWitness));
  report.add(count_check("diagonal_part_dim", diag.dimension(), inner, 0.0, kWitness));

  const LeggedMatrix xe = embed_left(x, rc.ambient_order);
  double min_norm = std::numeric_limits<double>::infinity();
  double fxf_vs_xf = 0.0;
  for (const auto& f : minimal_projections(diag, opts.tol)) {
    const LeggedMatrix fxf = f * xe * f;
    min_norm = std::min(min_norm, fxf.data().norm());
    fxf_vs_xf = std::max(fxf_vs_xf, normalized_norm(fxf - xe * f));
  }
  report.add({"fxf_nonzero", min_norm > 1e-6, min_norm, 1e-6, 0.0, kWitness});
  report.add(residual_check("fxf_equals_xf", fxf_vs_xf, opts.tol.residual_eps, kWitness));
  report.timing_ms = timer.ms();
  return report;
}

VerificationReport scenario_lemma_suite(std::size_t n, std::size_t k_max, const ScenarioOptions& opts,
                                        bool mutate) {
  Timer timer;
  if (n < 2 || n > 4 || k_max > 2) throw std::invalid_argument("lemma_suite: need 2 <= n <= 4 and k_max <= 2");
  check_budget(int_pow(n, std::max<std::size_t>(k_max + 2, 3)), opts, "lemma_suite");
  VerificationReport report;
  report.scenario = mutate ? "lemma_suite_mutated" : "lemma_suite";
  const double eps = opts.tol.residual_eps;

  const LeggedMatrix f = mutate ? phase_shifted(fourier(n)) : fourier(n);
  const std::size_t top = 2 * k_max + 2;
  const TowerCache tower = mutate ? TowerCache::unchecked(f, top) : TowerCache(f, top, opts.tol);

  for (std::size_t m = 1; m <= top; ++m) {
    report.add(residual_check("intertwining_m" + std::to_string(m), intertwining_residual(tower, m), eps,
                              kIntertwining));
  }
  report.add(residual_check("clock_shift", clock_shift_residual(f), eps, kClockShift));

  const TowerCache clean(fourier(n), top, opts.tol);
  std::mt19937_64 rng(opts.seed);
  std::string skipped;
  for (std::size_t k = 0; k <= k_max; ++k) {
    const std::string suffix = "_k" + std::to_string(k);
    report.add(residual_check("clock_to_shift" + suffix, clock_to_shift_residual(tower, k), eps, kClockToShift));
    const DiagonalizationResult d = diagonalization(tower, k);
    report.add(residual_check("diagonalization" + suffix, std::max(d.off_diagonal, d.spectrum), eps,
                              kDiagonalization));

    // N_{2k+1} against the algebra generated by N_{2k} and e_{2k+3}.
    const auto even = n_generators(clean, clean, k, Parity::kEven);
    const auto odd = n_generators(clean, clean, k, Parity::kOdd);
    const Legs ambient(k + 2, n);
    std::vector<LeggedMatrix> gens = even;
    gens.push_back(mutate ? pad_right(matrix_unit(n, 0, 0), n, k + 1) : jones_projection(2 * k + 3, n));
    const AlgebraBasis generated = generate_algebra(gens, ambient, opts.tol);
    const AlgebraBasis target = generate_algebra(odd, ambient, opts.tol);
    const bool equal = algebra_equal(generated, target, opts.tol);
    double span_residual = 0.0;
    for (const auto& b : generated.basis) span_residual = std::max(span_residual, distance_from_span(target, b));
    report.add({"basic_construction_span" + suffix, equal, static_cast<double>(generated.dimension()),
                static_cast<double>(target.dimension()), span_residual, kBasicSpan});

    for (std::size_t s = 1; s <= 2; ++s) {
      const std::string name = "leg_rearrangement" + suffix + "_s" + std::to_string(s);
      if (int_pow(n, 2 * k + s + 2) > opts.max_ambient) {
        skipped += (skipped.empty() ? "" : ",") + name;
        continue;
      }
      report.add(residual_check(name, leg_rearrangement_residual(n, k, s, rng, mutate), eps, kLegRearrangement));
    }
  }

  // Both containments claimed for <N_{2k+1}, e_{2k+4}> at k = 0, recorded as observations.
  {
    const Legs ambient(3, n);
    std::vector<LeggedMatrix> gens;
    for (const auto& g : n_generators(clean, clean, 0, Parity::kOdd)) gens.push_back(embed_left(g, int_pow(n, 3)));
    gens.push_back(jones_projection(4, n));
    const AlgebraBasis generated = generate_algebra(gens, ambient, opts.tol);
    const AlgebraBasis n2 = generate_algebra(n_generators(clean, clean, 1, Parity::kEven), ambient, opts.tol);
    const AlgebraBasis n3 = generate_algebra(n_generators(clean, clean, 1, Parity::kOdd), ambient, opts.tol);
    double r2 = 0.0;
    double r3 = 0.0;
    for (const auto& b : n2.basis) r2 = std::max(r2, distance_from_span(generated, b));
    for (const auto& b : n3.basis) r3 = std::max(r3, distance_from_span(generated, b));
    report.add(observation("containment_n2_k0", r2, kBasicContainment));
    report.add(observation("containment_n3_k0", r3, kBasicContainment));
  }

  report.params = {{"n", as_int(n)}, {"k_max", as_int(k_max)}, {"mutated", mutate}, {"skipped", skipped}};
  report.timing_ms = timer.ms();
  return report;
}

}  // namespace biu
