#include "state.hpp"

#include <cmath>

#include "errors.hpp"

namespace anyonic {

AnyonicDensityOperator::AnyonicDensityOperator(std::shared_ptr<const BipartiteBasis> basis)
    : basis_(std::move(basis)) {
  if (!basis_) throw DomainError("null basis");
  const AnyonModel& m = basis_->model();
  blocks_.reserve(m.charge_count());
  for (const Charge c : m.charges()) {
    const int d = basis_->block_dim(c);
    blocks_.emplace_back(d, d);
  }
}

AnyonicDensityOperator::AnyonicDensityOperator(std::shared_ptr<const BipartiteBasis> basis,
                                               std::vector<Matrix> blocks)
    : basis_(std::move(basis)), blocks_(std::move(blocks)) {
  if (!basis_) throw DomainError("null basis");
  const AnyonModel& m = basis_->model();
  if (static_cast<int>(blocks_.size()) != m.charge_count())
    throw DomainError("block count does not match charge count");
  for (const Charge c : m.charges()) {
    const int d = basis_->block_dim(c);
    if (blocks_[c.index()].rows() != d || blocks_[c.index()].cols() != d)
      throw DomainError("block dimension mismatch for charge " + m.label(c));
  }
}

void AnyonicDensityOperator::validate() const {
  const AnyonModel& m = model();
  for (const Charge c : m.charges()) {
    const Matrix& blk = blocks_[c.index()];
    if (blk.empty()) continue;
    if (hermiticity_residual(blk) > kHermTol)
      throw StateError("block " + m.label(c) + " is not Hermitian");
    const auto eigs = hermitian_eigenvalues(blk);
    if (!eigs.empty() && eigs.front() < kPsdFloor)
      throw StateError("block " + m.label(c) + " is not positive semidefinite");
  }
  const double t = quantum_trace(*this);
  if (std::abs(t - 1.0) > kTraceTol)
    throw StateError("quantum trace is " + std::to_string(t) + ", expected 1");
}

FactorizedOperator::FactorizedOperator(std::shared_ptr<const SectorBasis> basis_a,
                                       std::shared_ptr<const SectorBasis> basis_b)
    : basis_a_(std::move(basis_a)), basis_b_(std::move(basis_b)) {
  if (!basis_a_ || !basis_b_) throw DomainError("null sector basis");
  if (basis_a_->model_ptr() != basis_b_->model_ptr())
    throw DomainError("subsystem bases use different models");
  const int n = basis_a_->model().charge_count();
  blocks_.resize(static_cast<size_t>(n) * n);
  for (const Charge a : basis_a_->model().charges())
    for (const Charge b : basis_a_->model().charges()) {
      const int d = basis_a_->dim(a) * basis_b_->dim(b);
      blocks_[static_cast<size_t>(a.index()) * n + b.index()] = Matrix(d, d);
    }
}

const Matrix& FactorizedOperator::block(Charge a, Charge b) const {
  const int n = model().charge_count();
  return blocks_.at(static_cast<size_t>(a.index()) * n + b.index());
}

Matrix& FactorizedOperator::block(Charge a, Charge b) {
  const int n = model().charge_count();
  return blocks_.at(static_cast<size_t>(a.index()) * n + b.index());
}

double quantum_trace(const AnyonicDensityOperator& op) {
  double t = 0.0;
  for (const Charge c : op.model().charges()) {
    const Matrix& blk = op.block(c);
    if (!blk.empty()) t += op.model().qdim(c) * blk.trace().real();
  }
  return t;
}

double quantum_trace(const FactorizedOperator& op) {
  double t = 0.0;
  const AnyonModel& m = op.model();
  for (const Charge a : op.basis_a().sectors())
    for (const Charge b : op.basis_b().sectors()) {
      const Matrix& blk = op.block(a, b);
      if (!blk.empty()) t += m.qdim(a) * m.qdim(b) * blk.trace().real();
    }
  return t;
}

namespace {

double entropy_accumulate(const Matrix& block, double weight, const std::string& where) {
  if (block.empty()) return 0.0;
  double s = 0.0;
  for (const double lambda : hermitian_eigenvalues(block)) {
    if (lambda < kPsdFloor) throw StateError("negative eigenvalue in block " + where);
    if (lambda <= kLogFloor) continue;  // 0 log 0 := 0
    s -= weight * lambda * std::log2(lambda);
  }
  return s;
}

}  // namespace

double anyonic_entropy(const AnyonicDensityOperator& op) {
  double s = 0.0;
  for (const Charge c : op.model().charges())
    s += entropy_accumulate(op.block(c), op.model().qdim(c), op.model().label(c));
  return s;
}

double anyonic_entropy(const FactorizedOperator& op) {
  const AnyonModel& m = op.model();
  double s = 0.0;
  for (const Charge a : op.basis_a().sectors())
    for (const Charge b : op.basis_b().sectors())
      s += entropy_accumulate(op.block(a, b), m.qdim(a) * m.qdim(b),
                              m.label(a) + "," + m.label(b));
  return s;
}

AnyonicDensityOperator maximally_mixed(std::shared_ptr<const BipartiteBasis> basis) {
  if (!basis) throw DomainError("null basis");
  const AnyonModel& m = basis->model();
  double dh = 0.0;
  for (const Charge c : m.charges()) dh += m.qdim(c) * basis->block_dim(c);
  if (dh <= 0.0) throw DomainError("empty bipartite basis");
  AnyonicDensityOperator out(basis);
  for (const Charge c : m.charges()) {
    const int d = basis->block_dim(c);
    for (int i = 0; i < d; ++i) out.block(c)(i, i) = 1.0 / dh;
  }
  return out;
}

AnyonicDensityOperator mix(const AnyonicDensityOperator& rho, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("mixing weight outside [0,1]");
  AnyonicDensityOperator mm = maximally_mixed(rho.basis_ptr());
  AnyonicDensityOperator out(rho.basis_ptr());
  for (const Charge c : rho.model().charges())
    out.block(c) = (1.0 - p) * rho.block(c) + p * mm.block(c);
  return out;
}

bool is_maximal_rank(const AnyonicDensityOperator& rho, double tol) {
  for (const Charge c : rho.model().charges()) {
    const Matrix& blk = rho.block(c);
    if (blk.empty()) continue;
    const auto eigs = hermitian_eigenvalues(blk);
    if (eigs.front() <= tol) return false;
  }
  return true;
}

FactorizedOperator sever(const AnyonicDensityOperator& rho) {
  const BipartiteBasis& basis = rho.basis();
  const AnyonModel& m = rho.model();
  FactorizedOperator out(basis.basis_a_ptr(), basis.basis_b_ptr());

  for (const Charge c : m.charges()) {
    const Matrix& blk = rho.block(c);
    if (blk.empty()) continue;
    const double dc = m.qdim(c);
    for (const Charge a : basis.basis_a().sectors())
      for (const Charge b : basis.basis_b().sectors()) {
        if (!m.fusion_multiplicity(a, b, c)) continue;
        const int off = basis.pair_offset(c, a, b);
        const int na = basis.basis_a().dim(a);
        const int nb = basis.basis_b().dim(b);
        const double w = dc / (m.qdim(a) * m.qdim(b));
        Matrix& target = out.block(a, b);
        for (int r = 0; r < na * nb; ++r)
          for (int s = 0; s < na * nb; ++s) target(r, s) += w * blk(off + r, off + s);
      }
  }
  return out;
}

AnyonicDensityOperator embed(const FactorizedOperator& op,
                             std::shared_ptr<const BipartiteBasis> basis) {
  if (!basis) throw DomainError("null basis");
  if (!(op.basis_a() == basis->basis_a()) || !(op.basis_b() == basis->basis_b()))
    throw DomainError("sector mismatch between factorized operator and bipartite basis");
  const AnyonModel& m = basis->model();
  AnyonicDensityOperator out(basis);
  for (const Charge c : m.charges()) {
    if (basis->block_dim(c) == 0) continue;
    Matrix& blk = out.block(c);
    for (const Charge a : basis->basis_a().sectors())
      for (const Charge b : basis->basis_b().sectors()) {
        if (!m.fusion_multiplicity(a, b, c)) continue;
        const int off = basis->pair_offset(c, a, b);
        const Matrix& src = op.block(a, b);
        for (int r = 0; r < src.rows(); ++r)
          for (int s = 0; s < src.cols(); ++s) blk(off + r, off + s) = src(r, s);
      }
  }
  return out;
}

}  // namespace anyonic
