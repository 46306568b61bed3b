#pragma once

#include <array>
#include <span>

#include "measurement.hpp"

namespace anyonic {

/// Max-entropy reconstruction from a complete joint-measurement record.
/// Since M_{a,0} is the unnormalized identity, identity slots enter the
/// orthonormal expansion with dual-frame weight 1/N_a; everything else
/// carries the plain coefficient p/(d_a d_b).
FactorizedOperator inferred_state_closed_form(const MeasurementRecord& record,
                                              const ObservableBasis& obs_a,
                                              const ObservableBasis& obs_b);

struct SolverOptions {
  double initial_step = 1.0;
  long max_iterations = 100000;
  double tolerance = 1e-9;  // max constraint residual
};

/// Independent route to the inferred state: dual ascent on Lagrange
/// multipliers with a per-(a,b)-block exponential-family candidate
/// exp(-1 + sum_ij Lambda_ij M_i x M_j). Requires a record realizable by a
/// maximal-rank state; throws ConvergenceError (carrying the worst residual)
/// if the iteration cap is reached.
FactorizedOperator inferred_state_numeric(const MeasurementRecord& record,
                                          const ObservableBasis& obs_a,
                                          const ObservableBasis& obs_b,
                                          const SolverOptions& options = {});

/// S(sigma_m(rho)) - S(rho), in bits. sigma_m is computed by severing, which
/// is the closed-form inferred state on maximal-rank states and extends to
/// all states by continuity of the limit procedure. Nonnegative up to
/// rounding (>= -1e-10).
double topological_correlation(const AnyonicDensityOperator& rho);

/// Entropy of anyonic charge entanglement, S(D_{A:B}[rho]) - S(rho). Shares
/// the severing code path with topological_correlation, so the two agree
/// exactly.
double ace(const AnyonicDensityOperator& rho);

struct LimitPoint {
  double p;
  double value;
};

struct LimitResult {
  std::vector<LimitPoint> table;
  double extrapolated;
};

/// Evaluates the correlation along rho(p) = (1-p) rho + p rho_mixed for a
/// strictly decreasing sequence of p in (0,1), with a linear tail
/// extrapolation in p*log2(1/p).
LimitResult topo_correlation_via_limit(const AnyonicDensityOperator& rho,
                                       std::span<const double> p_sequence);

/// -q log2 q - (1-q) log2 (1-q); endpoints 0.
double binary_entropy(double q);

// Fibonacci worked examples: a pair of tau pairs on each side.

/// Pure two-pair state sqrt(q)|(1,1);1> + sqrt(1-q)|(tau,tau);1>.
AnyonicDensityOperator fib_pure_state(double q);

/// Mixture of the five two-pair basis projectors with weights p1..p5
/// (p1, p4 in the vacuum block; p2, p3, p5 in the tau block).
AnyonicDensityOperator fib4_state(const std::array<double, 5>& p);

/// Closed form H(q,1-q) + (1-q) log2 d_tau^2.
double fib_pure_topo(double q);

/// Closed form p4 log2(p4 d^2/(p4+p5)) + p5 log2(p5 d/(p4+p5)).
double fib4_topo(const std::array<double, 5>& p);

/// Shared built-in model instances (validated once).
std::shared_ptr<const AnyonModel> shared_fibonacci();
std::shared_ptr<const AnyonModel> shared_ising();

}  // namespace anyonic
