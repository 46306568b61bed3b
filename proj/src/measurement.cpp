#include "measurement.hpp"

#include <cmath>

#include "errors.hpp"

namespace anyonic {

std::vector<Matrix> su_generators(int n) {
  std::vector<Matrix> out;
  if (n <= 1) return out;
  const double r = 1.0 / std::sqrt(2.0);
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q) {
      Matrix sym(n, n);
      sym(p, q) = r;
      sym(q, p) = r;
      out.push_back(std::move(sym));
      Matrix asym(n, n);
      asym(p, q) = Complex(0.0, -r);
      asym(q, p) = Complex(0.0, r);
      out.push_back(std::move(asym));
    }
  for (int l = 1; l < n; ++l) {
    Matrix diag(n, n);
    const double norm = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    for (int k = 0; k < l; ++k) diag(k, k) = norm;
    diag(l, l) = -static_cast<double>(l) * norm;
    out.push_back(std::move(diag));
  }
  return out;
}

ObservableBasis::ObservableBasis(std::shared_ptr<const SectorBasis> sectors)
    : sectors_(std::move(sectors)) {
  if (!sectors_) throw DomainError("null sector basis");
  observables_.resize(sectors_->model().charge_count());
  for (const Charge a : sectors_->model().charges()) {
    const int n = sectors_->dim(a);
    if (n == 0) continue;
    auto& list = observables_[a.index()];
    list.push_back(Matrix::identity(n));
    for (auto& g : su_generators(n)) list.push_back(std::move(g));
  }
}

ObservableBasis::ObservableBasis(std::shared_ptr<const SectorBasis> sectors,
                                 std::vector<std::vector<Matrix>> observables)
    : sectors_(std::move(sectors)), observables_(std::move(observables)) {
  if (!sectors_) throw DomainError("null sector basis");
  if (static_cast<int>(observables_.size()) != sectors_->model().charge_count())
    throw DomainError("observable table does not match charge count");
  for (const Charge a : sectors_->model().charges()) {
    const int n = sectors_->dim(a);
    const auto& list = observables_[a.index()];
    if (static_cast<int>(list.size()) != (n == 0 ? 0 : n * n))
      throw DomainError("sector " + sectors_->model().label(a) + " needs " +
                        std::to_string(n * n) + " observables");
    for (const Matrix& m : list)
      if (m.rows() != n || m.cols() != n) throw DomainError("observable dimension mismatch");
  }
}

const Matrix& ObservableBasis::observable(Charge a, int i) const {
  const auto& list = observables_.at(a.index());
  if (i < 0 || i >= static_cast<int>(list.size()))
    throw DomainError("observable index out of range");
  return list[i];
}

ValidationReport verify_algebra(const ObservableBasis& basis, double tol) {
  ValidationReport report;
  const AnyonModel& model = basis.sectors().model();

  for (const Charge a : basis.sectors().sectors()) {
    const int n = basis.sectors().dim(a);
    const int count = basis.count(a);
    ValidationCheck check{"algebra_" + model.label(a)};

    // Identity slot and tracelessness.
    check.residual = std::max(check.residual,
                              max_abs_diff(basis.observable(a, 0), Matrix::identity(n)));
    for (int i = 1; i < count; ++i)
      check.residual = std::max(check.residual, std::abs(basis.observable(a, i).trace()));

    // Orthonormality of the traceless family.
    for (int i = 1; i < count; ++i)
      for (int j = 1; j < count; ++j) {
        const Complex ip = (basis.observable(a, i) * basis.observable(a, j)).trace();
        const double want = (i == j) ? 1.0 : 0.0;
        check.residual = std::max(check.residual, std::abs(ip - Complex(want)));
      }

    // Closure: project each product onto {I, M_k}; the remainder must vanish
    // and the extracted structure constants must be real with f antisymmetric
    // and d symmetric in (i,j).
    for (int i = 1; i < count; ++i)
      for (int j = 1; j < count; ++j) {
        const Matrix prod = basis.observable(a, i) * basis.observable(a, j);
        Matrix residual = prod;
        const Complex id_coeff = prod.trace() / static_cast<double>(n);
        residual -= id_coeff * Matrix::identity(n);
        const double want_id = (i == j) ? 1.0 / n : 0.0;
        check.residual = std::max(check.residual, std::abs(id_coeff - Complex(want_id)));
        for (int k = 1; k < count; ++k)
          residual -= (basis.observable(a, k) * prod).trace() * basis.observable(a, k);
        check.residual = std::max(check.residual, residual.max_abs());
      }
    for (int i = 1; i < count; ++i)
      for (int j = 1; j < count; ++j)
        for (int k = 1; k < count; ++k) {
          const Complex cij = (basis.observable(a, k) *
                               (basis.observable(a, i) * basis.observable(a, j)))
                                  .trace();
          const Complex cji = (basis.observable(a, k) *
                               (basis.observable(a, j) * basis.observable(a, i)))
                                  .trace();
          const double f_ijk = 0.5 * (cij - cji).imag();
          const double d_ijk = 0.5 * (cij + cji).real();
          // i f + d must reconstruct the one-sided coefficient exactly.
          const Complex rebuilt = Complex(d_ijk, f_ijk);
          check.residual = std::max(check.residual, std::abs(rebuilt - cij));
        }

    check.pass = check.residual < tol;
    report.checks.push_back(std::move(check));
  }
  return report;
}

double MeasurementRecord::value(Charge a, int i, Charge b, int j) const {
  for (const Entry& e : entries_)
    if (e.a == a && e.i == i && e.b == b && e.j == j) return e.value;
  throw DomainError("measurement record has no entry for the requested indices");
}

double expectation(const AnyonicDensityOperator& rho, Charge a, int i, Charge b, int j,
                   const ObservableBasis& obs_a, const ObservableBasis& obs_b) {
  const BipartiteBasis& basis = rho.basis();
  const AnyonModel& m = rho.model();
  if (!(obs_a.sectors() == basis.basis_a()) || !(obs_b.sectors() == basis.basis_b()))
    throw DomainError("observable bases do not match the state's partition");

  const Matrix joint = kron(obs_a.observable(a, i), obs_b.observable(b, j));
  const int dim = joint.rows();

  double acc = 0.0;
  for (const Charge c : m.charges()) {
    if (!m.fusion_multiplicity(a, b, c)) continue;
    const Matrix& blk = rho.block(c);
    if (blk.empty()) continue;
    const int off = basis.pair_offset(c, a, b);
    Complex tr = 0.0;
    for (int r = 0; r < dim; ++r)
      for (int s = 0; s < dim; ++s) tr += blk(off + r, off + s) * joint(s, r);
    acc += m.qdim(c) * tr.real();
  }
  return acc;
}

MeasurementRecord measure_all(const AnyonicDensityOperator& rho, const ObservableBasis& obs_a,
                              const ObservableBasis& obs_b) {
  MeasurementRecord record;
  for (const Charge a : obs_a.sectors().sectors())
    for (int i = 0; i < obs_a.count(a); ++i)
      for (const Charge b : obs_b.sectors().sectors())
        for (int j = 0; j < obs_b.count(b); ++j)
          record.append({a, i, b, j, expectation(rho, a, i, b, j, obs_a, obs_b)});
  return record;
}

}  // namespace anyonic
