#pragma once

#include <memory>
#include <vector>

#include "fusion_space.hpp"
#include "linalg.hpp"

namespace anyonic {

inline constexpr double kHermTol = 1e-12;
inline constexpr double kPsdFloor = -1e-10;
inline constexpr double kTraceTol = 1e-10;
// Eigenvalues at or below this floor contribute nothing to entropies; the
// shared cutoff keeps entropy differences of nearly-singular states tame.
inline constexpr double kLogFloor = 1e-15;

/// Operator on a bipartite fusion basis, block-diagonal in the overall charge
/// (superselection forbids cross-charge matrix elements by construction).
/// Blocks are plain dense matrices; nothing here assumes normalization, so
/// the same type carries states and intermediate linear-map results.
class AnyonicDensityOperator {
 public:
  explicit AnyonicDensityOperator(std::shared_ptr<const BipartiteBasis> basis);
  AnyonicDensityOperator(std::shared_ptr<const BipartiteBasis> basis,
                         std::vector<Matrix> blocks);

  const BipartiteBasis& basis() const { return *basis_; }
  const std::shared_ptr<const BipartiteBasis>& basis_ptr() const { return basis_; }
  const AnyonModel& model() const { return basis_->model(); }

  const Matrix& block(Charge c) const { return blocks_.at(c.index()); }
  Matrix& block(Charge c) { return blocks_.at(c.index()); }
  const std::vector<Matrix>& blocks() const { return blocks_; }

  /// Throws StateError naming the violated invariant (Hermiticity,
  /// positivity, quantum-trace normalization).
  void validate() const;

 private:
  std::shared_ptr<const BipartiteBasis> basis_;
  std::vector<Matrix> blocks_;  // by overall charge index
};

/// Operator living in the factorized space (sum_a V^A_a) x (sum_b V^B_b):
/// one Hermitian block per sector pair (a,b), of dimension N_a * N_b.
class FactorizedOperator {
 public:
  FactorizedOperator(std::shared_ptr<const SectorBasis> basis_a,
                     std::shared_ptr<const SectorBasis> basis_b);

  const SectorBasis& basis_a() const { return *basis_a_; }
  const SectorBasis& basis_b() const { return *basis_b_; }
  const std::shared_ptr<const SectorBasis>& basis_a_ptr() const { return basis_a_; }
  const std::shared_ptr<const SectorBasis>& basis_b_ptr() const { return basis_b_; }
  const AnyonModel& model() const { return basis_a_->model(); }

  const Matrix& block(Charge a, Charge b) const;
  Matrix& block(Charge a, Charge b);

 private:
  std::shared_ptr<const SectorBasis> basis_a_;
  std::shared_ptr<const SectorBasis> basis_b_;
  std::vector<Matrix> blocks_;  // index a * charge_count + b
};

/// Quantum trace: sum_c d_c tr(block_c).
double quantum_trace(const AnyonicDensityOperator& op);
/// Quantum trace in the factorized space: sum_ab d_a d_b tr(block_ab).
double quantum_trace(const FactorizedOperator& op);

/// Anyonic von Neumann entropy in bits, from block eigenvalues weighted by
/// quantum dimensions. Throws StateError on eigenvalues below the PSD floor.
double anyonic_entropy(const AnyonicDensityOperator& op);
double anyonic_entropy(const FactorizedOperator& op);

/// Every block (1/D_H) * identity, D_H = sum_c d_c dim_c; quantum trace 1.
AnyonicDensityOperator maximally_mixed(std::shared_ptr<const BipartiteBasis> basis);

/// (1-p) rho + p * maximally_mixed; maximal rank whenever p > 0.
AnyonicDensityOperator mix(const AnyonicDensityOperator& rho, double p);

/// True iff every nonempty block's least eigenvalue exceeds `tol`.
bool is_maximal_rank(const AnyonicDensityOperator& rho, double tol = 1e-12);

/// The charge-line severing superoperator D_{A:B}. The (a,b)-diagonal part of
/// each overall-charge-c block lands in factorized block (a,b) with weight
/// d_c/(d_a d_b); cross-sector coherences are dropped. Linear and
/// quantum-trace preserving.
FactorizedOperator sever(const AnyonicDensityOperator& rho);

/// Completeness expansion back into the fusion basis: each (a,b) block is
/// copied with unit weight into every overall-charge block c with
/// N_ab^c = 1. Quantum trace is preserved since sum_c N_ab^c d_c = d_a d_b.
AnyonicDensityOperator embed(const FactorizedOperator& op,
                             std::shared_ptr<const BipartiteBasis> basis);

}  // namespace anyonic
