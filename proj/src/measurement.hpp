#pragma once

#include <memory>
#include <vector>

#include "state.hpp"

namespace anyonic {

/// Complete per-sector observable set for one subsystem: in each charge
/// sector of dimension N, the identity plus N^2-1 traceless Hermitian
/// generators, orthonormal under the matrix trace (tr M_i M_j = delta_ij for
/// i,j >= 1), so that pairwise products close on the span of {I, M_k}.
class ObservableBasis {
 public:
  explicit ObservableBasis(std::shared_ptr<const SectorBasis> sectors);

  /// Custom generator table (used by tests for rotated/corrupted bases).
  /// Shape is validated against the sector dimensions; contents are not.
  ObservableBasis(std::shared_ptr<const SectorBasis> sectors,
                  std::vector<std::vector<Matrix>> observables);

  const SectorBasis& sectors() const { return *sectors_; }
  const std::shared_ptr<const SectorBasis>& sectors_ptr() const { return sectors_; }

  /// N_a^2 for populated sectors, 0 otherwise.
  int count(Charge a) const { return static_cast<int>(observables_.at(a.index()).size()); }
  const Matrix& observable(Charge a, int i) const;

 private:
  std::shared_ptr<const SectorBasis> sectors_;
  std::vector<std::vector<Matrix>> observables_;  // by charge index
};

/// Closure check of the sector algebras: every product M_i M_j must equal
/// (1/N) delta_ij I + sum_k (i f_ijk + d_ijk) M_k with real, antisymmetric f
/// and real, symmetric d.
ValidationReport verify_algebra(const ObservableBasis& basis, double tol = 1e-12);

/// Hilbert-Schmidt orthonormal traceless Hermitian generators of su(n)
/// (generalized Gell-Mann family: symmetric, antisymmetric, diagonal).
std::vector<Matrix> su_generators(int n);

/// Joint expectation table p_{i_a, j_b}, deterministic order
/// (a index, i, b index, j).
class MeasurementRecord {
 public:
  struct Entry {
    Charge a;
    int i;
    Charge b;
    int j;
    double value;
  };

  const std::vector<Entry>& entries() const { return entries_; }
  double value(Charge a, int i, Charge b, int j) const;

  void append(Entry e) { entries_.push_back(e); }

 private:
  std::vector<Entry> entries_;
};

/// qTr[rho (M^A_{a,i} x M^B_{b,j})]: the factorized observable acts on the
/// (a,b) corner of every overall-charge block with unit weight.
double expectation(const AnyonicDensityOperator& rho, Charge a, int i, Charge b, int j,
                   const ObservableBasis& obs_a, const ObservableBasis& obs_b);

MeasurementRecord measure_all(const AnyonicDensityOperator& rho, const ObservableBasis& obs_a,
                              const ObservableBasis& obs_b);

}  // namespace anyonic
