#include "inference.hpp"

#include <cmath>

#include "errors.hpp"

namespace anyonic {

FactorizedOperator inferred_state_closed_form(const MeasurementRecord& record,
                                              const ObservableBasis& obs_a,
                                              const ObservableBasis& obs_b) {
  FactorizedOperator out(obs_a.sectors_ptr(), obs_b.sectors_ptr());
  const AnyonModel& m = out.model();
  for (const Charge a : obs_a.sectors().sectors()) {
    const int na = obs_a.sectors().dim(a);
    for (const Charge b : obs_b.sectors().sectors()) {
      const int nb = obs_b.sectors().dim(b);
      Matrix& blk = out.block(a, b);
      const double inv_dd = 1.0 / (m.qdim(a) * m.qdim(b));
      for (int i = 0; i < obs_a.count(a); ++i) {
        const double wi = (i == 0) ? 1.0 / na : 1.0;
        for (int j = 0; j < obs_b.count(b); ++j) {
          const double wj = (j == 0) ? 1.0 / nb : 1.0;
          const double p = record.value(a, i, b, j);
          if (p == 0.0) continue;
          blk += (inv_dd * wi * wj * p) * kron(obs_a.observable(a, i), obs_b.observable(b, j));
        }
      }
    }
  }
  return out;
}

namespace {

struct ConstraintKey {
  Charge a;
  Charge b;
  Matrix joint;   // M^A_i x M^B_j
  double weight;  // d_a d_b
};

// Solve (J + ridge) x = r for symmetric positive semidefinite J.
std::vector<double> ridge_solve(const Matrix& j, const std::vector<double>& r) {
  const int n = j.rows();
  double scale = 0.0;
  for (int k = 0; k < n; ++k) scale = std::max(scale, std::abs(j(k, k).real()));
  const double ridge = 1e-12 * (1.0 + scale);
  const EigenSystem sys = hermitian_eigensystem(j);
  std::vector<double> out(n, 0.0);
  for (int k = 0; k < n; ++k) {
    Complex proj = 0.0;
    for (int i = 0; i < n; ++i) proj += std::conj(sys.vectors(i, k)) * r[i];
    const Complex coeff = proj / (sys.values[k] + ridge);
    for (int i = 0; i < n; ++i) out[i] += (coeff * sys.vectors(i, k)).real();
  }
  return out;
}

}  // namespace

FactorizedOperator inferred_state_numeric(const MeasurementRecord& record,
                                          const ObservableBasis& obs_a,
                                          const ObservableBasis& obs_b,
                                          const SolverOptions& options) {
  const AnyonModel& m = obs_a.sectors().model();

  std::vector<ConstraintKey> keys;
  std::vector<double> target;
  std::vector<std::vector<int>> block_members;  // constraint indices per (a,b)
  for (const Charge a : obs_a.sectors().sectors())
    for (const Charge b : obs_b.sectors().sectors()) {
      block_members.emplace_back();
      for (int i = 0; i < obs_a.count(a); ++i)
        for (int j = 0; j < obs_b.count(b); ++j) {
          block_members.back().push_back(static_cast<int>(keys.size()));
          keys.push_back(
              {a, b, kron(obs_a.observable(a, i), obs_b.observable(b, j)),
               m.qdim(a) * m.qdim(b)});
          target.push_back(record.value(a, i, b, j));
        }
    }
  const size_t nc = keys.size();

  // Candidate per (a,b) block: sigma_ab = exp(-1 + sum_ij Lambda M_i x M_j);
  // the dual to maximize is sum Lambda.p - qTr[sigma(Lambda)], whose gradient
  // is the constraint residual and whose curvature comes from the Frechet
  // derivative of the block exponentials.
  auto exponentials = [&](const std::vector<double>& lambda) {
    std::vector<HermitianExp> exps;
    exps.reserve(block_members.size());
    size_t blk = 0;
    for (const Charge a : obs_a.sectors().sectors())
      for (const Charge b : obs_b.sectors().sectors()) {
        const int dim = obs_a.sectors().dim(a) * obs_b.sectors().dim(b);
        Matrix h(dim, dim);
        h -= Matrix::identity(dim);
        for (const int k : block_members[blk])
          if (lambda[k] != 0.0) h += lambda[k] * keys[k].joint;
        exps.emplace_back(h);
        ++blk;
      }
    return exps;
  };

  auto dual_value = [&](const std::vector<double>& lambda,
                        const std::vector<HermitianExp>& exps) {
    double v = 0.0;
    size_t blk = 0;
    for (const auto& members : block_members) {
      const double weight = members.empty() ? 0.0 : keys[members.front()].weight;
      v -= weight * exps[blk++].trace();
    }
    for (size_t k = 0; k < nc; ++k) v += lambda[k] * target[k];
    return v;
  };

  auto residuals_of = [&](const std::vector<HermitianExp>& exps) {
    std::pair<std::vector<double>, double> out{std::vector<double>(nc), 0.0};
    for (size_t blk = 0; blk < block_members.size(); ++blk)
      for (const int k : block_members[blk]) {
        const double value = keys[k].weight * (exps[blk].value() * keys[k].joint).trace().real();
        out.first[k] = target[k] - value;
        out.second = std::max(out.second, std::abs(out.first[k]));
      }
    return out;
  };

  std::vector<double> lambda(nc, 0.0);
  std::vector<HermitianExp> exps = exponentials(lambda);
  double dual = dual_value(lambda, exps);
  auto [residual, worst] = residuals_of(exps);

  for (long iter = 0; iter < options.max_iterations; ++iter) {
    if (worst < options.tolerance) {
      FactorizedOperator sigma(obs_a.sectors_ptr(), obs_b.sectors_ptr());
      size_t blk = 0;
      for (const Charge a : obs_a.sectors().sectors())
        for (const Charge b : obs_b.sectors().sectors()) sigma.block(a, b) = exps[blk++].value();
      return sigma;
    }

    // Newton system J dir = residual, block diagonal in (a,b).
    Matrix jac(static_cast<int>(nc), static_cast<int>(nc));
    for (size_t blk = 0; blk < block_members.size(); ++blk)
      for (const int k : block_members[blk]) {
        const Matrix dk = exps[blk].directional(keys[k].joint);
        for (const int l : block_members[blk])
          jac(l, k) = keys[k].weight * (dk * keys[l].joint).trace().real();
      }
    const std::vector<double> newton = ridge_solve(jac, residual);

    // Damped step, falling back to the plain gradient if Newton stalls. A
    // step is accepted when the worst constraint residual shrinks while the
    // dual does not drop beyond rounding, so the dual stays non-decreasing
    // across accepted iterations and the residual is strictly driven down.
    bool accepted = false;
    const std::array<const std::vector<double>*, 2> directions = {&newton, &residual};
    for (const std::vector<double>* dir : directions) {
      double step = options.initial_step;
      while (step > 1e-14 && !accepted) {
        std::vector<double> trial = lambda;
        for (size_t k = 0; k < nc; ++k) trial[k] += step * (*dir)[k];
        std::vector<HermitianExp> trial_exps = exponentials(trial);
        const double trial_dual = dual_value(trial, trial_exps);
        auto [trial_residual, trial_worst] = residuals_of(trial_exps);
        if (trial_worst < worst && trial_dual >= dual - 1e-12 * (1.0 + std::abs(dual))) {
          lambda = std::move(trial);
          exps = std::move(trial_exps);
          dual = trial_dual;
          residual = std::move(trial_residual);
          worst = trial_worst;
          accepted = true;
        }
        step *= 0.5;
      }
      if (accepted) break;
    }
    if (!accepted)
      throw ConvergenceError("max-entropy dual ascent stalled; worst residual " +
                                 std::to_string(worst),
                             worst, iter);
  }
  throw ConvergenceError("max-entropy dual ascent hit the iteration cap; worst residual " +
                             std::to_string(worst),
                         worst, options.max_iterations);
}

namespace {

void require_normalized(const AnyonicDensityOperator& rho) {
  const double t = quantum_trace(rho);
  if (std::abs(t - 1.0) > 1e-8)
    throw StateError("state is not normalized: quantum trace " + std::to_string(t));
}

}  // namespace

double topological_correlation(const AnyonicDensityOperator& rho) {
  require_normalized(rho);
  return anyonic_entropy(sever(rho)) - anyonic_entropy(rho);
}

double ace(const AnyonicDensityOperator& rho) { return topological_correlation(rho); }

LimitResult topo_correlation_via_limit(const AnyonicDensityOperator& rho,
                                       std::span<const double> p_sequence) {
  if (p_sequence.empty()) throw DomainError("empty p sequence");
  double prev = 1.0;
  for (const double p : p_sequence) {
    if (!(p > 0.0 && p < 1.0 && p < prev))
      throw DomainError("p sequence must decrease strictly within (0,1)");
    prev = p;
  }
  require_normalized(rho);

  LimitResult out;
  for (const double p : p_sequence) {
    const AnyonicDensityOperator rp = mix(rho, p);
    out.table.push_back({p, anyonic_entropy(sever(rp)) - anyonic_entropy(rp)});
  }
  const size_t n = out.table.size();
  if (n == 1) {
    out.extrapolated = out.table[0].value;
  } else {
    // The approach is O(p log 1/p); extrapolate the last two points to 0.
    auto t = [](double p) { return p * std::log2(1.0 / p); };
    const double t1 = t(out.table[n - 2].p), v1 = out.table[n - 2].value;
    const double t2 = t(out.table[n - 1].p), v2 = out.table[n - 1].value;
    out.extrapolated = v2 - t2 * (v1 - v2) / (t1 - t2);
  }
  return out;
}

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("binary entropy argument outside [0,1]");
  double s = 0.0;
  if (q > 0.0) s -= q * std::log2(q);
  if (q < 1.0) s -= (1.0 - q) * std::log2(1.0 - q);
  return s;
}

std::shared_ptr<const AnyonModel> shared_fibonacci() {
  static const auto model = std::make_shared<const AnyonModel>(AnyonModel::fibonacci());
  return model;
}

std::shared_ptr<const AnyonModel> shared_ising() {
  static const auto model = std::make_shared<const AnyonModel>(AnyonModel::ising());
  return model;
}

namespace {

std::shared_ptr<const BipartiteBasis> fib_pair_basis() {
  static const auto basis = [] {
    const auto model = shared_fibonacci();
    const Charge tau = model->charge("τ");
    return bipartite_basis(model, {tau, tau}, {tau, tau});
  }();
  return basis;
}

}  // namespace

AnyonicDensityOperator fib_pure_state(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("q outside [0,1]");
  const auto basis = fib_pair_basis();
  AnyonicDensityOperator rho(basis);
  // Vacuum block over pairs [(1,1), (tau,tau)]: |psi><psi| with
  // psi = (sqrt(q), sqrt(1-q)).
  const double c0 = std::sqrt(q), c1 = std::sqrt(1.0 - q);
  Matrix& blk = rho.block(Charge::vacuum());
  blk(0, 0) = c0 * c0;
  blk(0, 1) = c0 * c1;
  blk(1, 0) = c1 * c0;
  blk(1, 1) = c1 * c1;
  return rho;
}

AnyonicDensityOperator fib4_state(const std::array<double, 5>& p) {
  double sum = 0.0;
  for (const double x : p) {
    if (x < 0.0) throw DomainError("mixture weights must be nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("mixture weights must sum to 1");

  const auto basis = fib_pair_basis();
  const auto model = basis->basis_a().model_ptr();
  const Charge tau = model->charge("τ");
  const double dt = model->qdim(tau);

  AnyonicDensityOperator rho(basis);
  // Vacuum block pairs [(1,1), (tau,tau)]; tau block pairs
  // [(1,tau), (tau,1), (tau,tau)].
  Matrix& b1 = rho.block(Charge::vacuum());
  b1(0, 0) = p[0];
  b1(1, 1) = p[3];
  Matrix& bt = rho.block(tau);
  bt(0, 0) = p[2] / dt;
  bt(1, 1) = p[1] / dt;
  bt(2, 2) = p[4] / dt;
  return rho;
}

double fib_pure_topo(double q) {
  const auto model = shared_fibonacci();
  const double dt = model->qdim(model->charge("τ"));
  return binary_entropy(q) + (1.0 - q) * std::log2(dt * dt);
}

double fib4_topo(const std::array<double, 5>& p) {
  double sum = 0.0;
  for (const double x : p) {
    if (x < 0.0) throw DomainError("mixture weights must be nonnegative");
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-9) throw DomainError("mixture weights must sum to 1");

  const auto model = shared_fibonacci();
  const double dt = model->qdim(model->charge("τ"));
  const double p4 = p[3], p5 = p[4], tail = p4 + p5;
  double value = 0.0;
  if (p4 > 0.0) value += p4 * std::log2(p4 * dt * dt / tail);
  if (p5 > 0.0) value += p5 * std::log2(p5 * dt / tail);
  return value;
}

}  // namespace anyonic
