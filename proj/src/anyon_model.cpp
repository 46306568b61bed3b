#include "anyon_model.hpp"

#include <cmath>
#include <sstream>

namespace anyonic {

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.pass ? "  pass  " : "  FAIL  ") << c.name << "  residual=" << c.residual;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  os << (pass() ? "overall: pass" : "overall: FAIL") << "  max residual=" << max_residual()
     << "\n";
  return os.str();
}

uint64_t AnyonModel::fkey(int a, int b, int c, int d, int e, int f) {
  uint64_t k = 0;
  for (int v : {a, b, c, d, e, f}) k = (k << 10) | static_cast<uint64_t>(v);
  return k;
}

AnyonModel::AnyonModel(ModelData data, Validation mode) : name_(std::move(data.name)) {
  labels_ = std::move(data.charge_labels);
  n_ = static_cast<int>(labels_.size());
  if (n_ == 0) throw ModelError("model has no charges");
  if (n_ >= 1024) throw ModelError("too many charges");
  if (labels_[0] != "1") throw ModelError("charge 0 must be the vacuum, labeled \"1\"");
  for (int i = 0; i < n_; ++i) {
    if (labels_[i].empty()) throw ModelError("empty charge label");
    if (!label_index_.emplace(labels_[i], i).second)
      throw ModelError("duplicate charge label: " + labels_[i]);
  }

  fusion_.assign(static_cast<size_t>(n_) * n_ * n_, 0);
  for (const auto& t : data.fusion_triples) {
    for (int v : t)
      if (v < 0 || v >= n_) throw ModelError("fusion triple references unknown charge");
    uint8_t& slot = fusion_[(static_cast<size_t>(t[0]) * n_ + t[1]) * n_ + t[2]];
    if (slot != 0) throw ModelError("duplicate fusion triple");
    slot = 1;
  }

  validate_structure();
  compute_qdims();
  compute_duals();

  for (const auto& entry : data.f_symbols) {
    for (int v : {entry.a, entry.b, entry.c, entry.d, entry.e, entry.f})
      if (v < 0 || v >= n_) throw ModelError("f_symbol references unknown charge");
    f_[fkey(entry.a, entry.b, entry.c, entry.d, entry.e, entry.f)] = entry.value;
  }

  if (mode == Validation::strict) {
    const ValidationReport report = verify();
    if (!report.pass()) {
      const ValidationCheck* fail = report.first_failure();
      throw ModelError("model \"" + name_ + "\" failed validation: " + fail->name +
                       (fail->detail.empty() ? "" : " (" + fail->detail + ")"));
    }
  }
}

void AnyonModel::check_handle(Charge a) const {
  if (a.index() < 0 || a.index() >= n_)
    throw DomainError("unknown charge handle " + std::to_string(a.index()));
}

void AnyonModel::validate_structure() {
  auto nabc = [&](int a, int b, int c) -> int {
    return fusion_[(static_cast<size_t>(a) * n_ + b) * n_ + c];
  };
  // Vacuum fuses trivially on both sides.
  for (int a = 0; a < n_; ++a)
    for (int c = 0; c < n_; ++c) {
      const int want = (a == c) ? 1 : 0;
      if (nabc(0, a, c) != want || nabc(a, 0, c) != want)
        throw ModelError("vacuum fusion rule violated for charge " + labels_[a]);
    }
  // Associativity as an exact multiplicity count.
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int c = 0; c < n_; ++c)
        for (int d = 0; d < n_; ++d) {
          int lhs = 0, rhs = 0;
          for (int x = 0; x < n_; ++x) {
            lhs += nabc(a, b, x) * nabc(x, c, d);
            rhs += nabc(b, c, x) * nabc(a, x, d);
          }
          if (lhs != rhs) throw ModelError("fusion is not associative");
        }
}

void AnyonModel::compute_qdims() {
  // d is the Perron-Frobenius eigenvector of the total fusion matrix
  // M_bc = sum_a N_ab^c, normalized to d_1 = 1; every single-charge fusion
  // matrix then has d as eigenvector with eigenvalue d_a.
  std::vector<double> v(n_, 1.0), w(n_, 0.0);
  for (int iter = 0; iter < 2000; ++iter) {
    for (int b = 0; b < n_; ++b) {
      double acc = 0.0;
      for (int a = 0; a < n_; ++a)
        for (int c = 0; c < n_; ++c)
          if (fusion_[(static_cast<size_t>(a) * n_ + b) * n_ + c]) acc += v[c];
      w[b] = acc;
    }
    double norm = 0.0;
    for (double x : w) norm = std::max(norm, x);
    if (norm <= 0.0) throw ModelError("fusion graph is degenerate");
    double delta = 0.0;
    for (int i = 0; i < n_; ++i) {
      w[i] /= norm;
      delta = std::max(delta, std::abs(w[i] - v[i]));
      v[i] = w[i];
    }
    if (delta < 1e-15 && iter > 4) break;
  }
  if (v[0] <= 0.0) throw ModelError("no positive quantum-dimension solution");
  qdim_.resize(n_);
  for (int i = 0; i < n_; ++i) qdim_[i] = v[i] / v[0];
  qdim_[0] = 1.0;

  // The defining identity must hold, otherwise the model is invalid.
  double residual = 0.0;
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      double sum = 0.0;
      for (int c = 0; c < n_; ++c)
        if (fusion_[(static_cast<size_t>(a) * n_ + b) * n_ + c]) sum += qdim_[c];
      residual = std::max(residual, std::abs(sum - qdim_[a] * qdim_[b]));
    }
  if (residual > kModelTol)
    throw ModelError("no positive quantum-dimension solution within tolerance");
  for (double d : qdim_)
    if (d < 1.0 - kModelTol) throw ModelError("quantum dimension below 1");

  double s = 0.0;
  for (double d : qdim_) s += d * d;
  total_qdim_ = std::sqrt(s);
}

void AnyonModel::compute_duals() {
  dual_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int c = 0; c < n_; ++c)
      if (fusion_[(static_cast<size_t>(a) * n_ + c) * n_ + 0]) {
        if (dual_[a] != -1) throw ModelError("charge " + labels_[a] + " has two duals");
        dual_[a] = c;
      }
    if (dual_[a] == -1) throw ModelError("charge " + labels_[a] + " has no dual");
  }
}

std::vector<Charge> AnyonModel::charges() const {
  std::vector<Charge> out;
  out.reserve(n_);
  for (int i = 0; i < n_; ++i) out.emplace_back(i);
  return out;
}

const std::string& AnyonModel::label(Charge a) const {
  check_handle(a);
  return labels_[a.index()];
}

Charge AnyonModel::charge(std::string_view label) const {
  const auto it = label_index_.find(std::string(label));
  if (it == label_index_.end())
    throw DomainError("model \"" + name_ + "\" has no charge \"" + std::string(label) + "\"");
  return Charge(it->second);
}

int AnyonModel::fusion_multiplicity(Charge a, Charge b, Charge c) const {
  check_handle(a);
  check_handle(b);
  check_handle(c);
  return fusion_[(static_cast<size_t>(a.index()) * n_ + b.index()) * n_ + c.index()];
}

std::vector<Charge> AnyonModel::fusion_products(Charge a, Charge b) const {
  check_handle(a);
  check_handle(b);
  std::vector<Charge> out;
  for (int c = 0; c < n_; ++c)
    if (fusion_[(static_cast<size_t>(a.index()) * n_ + b.index()) * n_ + c]) out.emplace_back(c);
  return out;
}

double AnyonModel::qdim(Charge a) const {
  check_handle(a);
  return qdim_[a.index()];
}

Charge AnyonModel::dual(Charge a) const {
  check_handle(a);
  return Charge(dual_[a.index()]);
}

Complex AnyonModel::f_standard(Charge a, Charge b, Charge c, Charge d, Charge e,
                               Charge f) const {
  for (Charge x : {a, b, c, d, e, f}) check_handle(x);
  const auto it = f_.find(fkey(a.index(), b.index(), c.index(), d.index(), e.index(), f.index()));
  if (it == f_.end()) return 0.0;
  return it->second;
}

Complex AnyonModel::f_symbol(Charge a, Charge b, Charge ap, Charge bp, Charge c,
                             Charge g) const {
  for (Charge x : {a, b, ap, bp, c, g}) check_handle(x);
  // Admissibility of the two-vertex diagram and of its horizontal resolution.
  if (!fusion_multiplicity(a, b, c) || !fusion_multiplicity(ap, bp, c)) return 0.0;
  if (!fusion_multiplicity(ap, g, a) || !fusion_multiplicity(g, b, bp)) return 0.0;
  const double w = std::sqrt(qdim(c) * qdim(g) / (qdim(a) * qdim(bp)));
  return w * f_standard(ap, g, b, c, a, bp);
}

ValidationReport AnyonModel::verify(double tol) const {
  ValidationReport report;
  auto nabc = [&](int a, int b, int c) -> int {
    return fusion_[(static_cast<size_t>(a) * n_ + b) * n_ + c];
  };

  // Quantum-dimension consistency: sum_c N_ab^c d_c = d_a d_b.
  {
    ValidationCheck check{"qdim_consistency"};
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        double sum = 0.0;
        for (int c = 0; c < n_; ++c)
          if (nabc(a, b, c)) sum += qdim_[c];
        check.residual = std::max(check.residual, std::abs(sum - qdim_[a] * qdim_[b]));
      }
    check.pass = check.residual < tol;
    report.checks.push_back(std::move(check));
  }

  // Total quantum dimension matches its definition.
  {
    ValidationCheck check{"total_qdim"};
    double s = 0.0;
    for (double d : qdim_) s += d * d;
    check.residual = std::abs(total_qdim_ - std::sqrt(s));
    check.pass = check.residual < tol;
    report.checks.push_back(std::move(check));
  }

  // Every admissible recoupling entry must be present (exactly-zero entries
  // are representable; absence of a whole admissible block is a data bug).
  {
    ValidationCheck check{"f_coverage"};
    int missing = 0;
    for (int a = 0; a < n_ && missing == 0; ++a)
      for (int b = 0; b < n_ && missing == 0; ++b)
        for (int c = 0; c < n_ && missing == 0; ++c)
          for (int d = 0; d < n_ && missing == 0; ++d)
            for (int e = 0; e < n_ && missing == 0; ++e)
              for (int f = 0; f < n_; ++f) {
                if (!(nabc(a, b, e) && nabc(e, c, d) && nabc(b, c, f) && nabc(a, f, d)))
                  continue;
                if (f_.find(fkey(a, b, c, d, e, f)) == f_.end()) {
                  ++missing;
                  check.detail = "missing [F^{" + labels_[a] + labels_[b] + labels_[c] + "}_" +
                                 labels_[d] + "]_{" + labels_[e] + labels_[f] + "}";
                  break;
                }
              }
    check.residual = missing ? 1.0 : 0.0;
    check.pass = missing == 0;
    report.checks.push_back(std::move(check));
  }

  // Unitarity of each standard recoupling matrix [F^{abc}_d].
  {
    ValidationCheck check{"f_unitarity"};
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int d = 0; d < n_; ++d) {
            std::vector<int> es, fs;
            for (int e = 0; e < n_; ++e)
              if (nabc(a, b, e) && nabc(e, c, d)) es.push_back(e);
            for (int f = 0; f < n_; ++f)
              if (nabc(b, c, f) && nabc(a, f, d)) fs.push_back(f);
            if (es.empty() && fs.empty()) continue;
            if (es.size() != fs.size()) {
              check.residual = std::max(check.residual, 1.0);
              continue;
            }
            const int m = static_cast<int>(es.size());
            Matrix F(m, m);
            for (int i = 0; i < m; ++i)
              for (int j = 0; j < m; ++j)
                F(i, j) = f_standard(Charge(a), Charge(b), Charge(c), Charge(d), Charge(es[i]),
                                     Charge(fs[j]));
            check.residual =
                std::max(check.residual, max_abs_diff(F * F.adjoint(), Matrix::identity(m)));
          }
    check.pass = check.residual < tol;
    report.checks.push_back(std::move(check));
  }

  // Unitarity of each two-vertex F block, plus the vacuum-column identity
  // [F^{ab}_{ab}]_{c1} = sqrt(d_c / d_a d_b).
  {
    ValidationCheck unitarity{"f22_unitarity"};
    ValidationCheck column{"f22_vacuum_column"};
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int ap = 0; ap < n_; ++ap)
          for (int bp = 0; bp < n_; ++bp) {
            std::vector<int> cs, gs;
            for (int c = 0; c < n_; ++c)
              if (nabc(a, b, c) && nabc(ap, bp, c)) cs.push_back(c);
            for (int g = 0; g < n_; ++g)
              if (nabc(ap, g, a) && nabc(g, b, bp)) gs.push_back(g);
            if (cs.empty() && gs.empty()) continue;
            if (cs.size() != gs.size()) {
              unitarity.residual = std::max(unitarity.residual, 1.0);
              continue;
            }
            const int m = static_cast<int>(cs.size());
            Matrix F(m, m);
            for (int i = 0; i < m; ++i)
              for (int j = 0; j < m; ++j)
                F(i, j) = f_symbol(Charge(a), Charge(b), Charge(ap), Charge(bp), Charge(cs[i]),
                                   Charge(gs[j]));
            unitarity.residual =
                std::max(unitarity.residual, max_abs_diff(F * F.adjoint(), Matrix::identity(m)));
            if (a == ap && b == bp)
              for (int i = 0; i < m; ++i) {
                const double want = std::sqrt(qdim_[cs[i]] / (qdim_[a] * qdim_[b]));
                const Complex got =
                    f_symbol(Charge(a), Charge(b), Charge(a), Charge(b), Charge(cs[i]), Charge(0));
                column.residual = std::max(column.residual, std::abs(got - Complex(want)));
              }
          }
    unitarity.pass = unitarity.residual < tol;
    column.pass = column.residual < tol;
    report.checks.push_back(std::move(unitarity));
    report.checks.push_back(std::move(column));
  }

  // Pentagon identity:
  //   [F^{fcd}_e]_{gh} [F^{abh}_e]_{fj} =
  //     sum_i [F^{abc}_g]_{fi} [F^{aid}_e]_{gj} [F^{bcd}_j]_{ih}.
  {
    ValidationCheck check{"pentagon"};
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          for (int d = 0; d < n_; ++d)
            for (int f = 0; f < n_; ++f) {
              if (!nabc(a, b, f)) continue;
              for (int g = 0; g < n_; ++g) {
                if (!nabc(f, c, g)) continue;
                for (int e = 0; e < n_; ++e) {
                  if (!nabc(g, d, e)) continue;
                  for (int h = 0; h < n_; ++h) {
                    if (!(nabc(c, d, h) && nabc(f, h, e))) continue;
                    for (int j = 0; j < n_; ++j) {
                      if (!(nabc(b, h, j) && nabc(a, j, e))) continue;
                      Complex lhs = f_standard(Charge(f), Charge(c), Charge(d), Charge(e),
                                               Charge(g), Charge(h)) *
                                    f_standard(Charge(a), Charge(b), Charge(h), Charge(e),
                                               Charge(f), Charge(j));
                      Complex rhs = 0.0;
                      for (int i = 0; i < n_; ++i) {
                        if (!(nabc(b, c, i) && nabc(a, i, g) && nabc(i, d, j))) continue;
                        rhs += f_standard(Charge(a), Charge(b), Charge(c), Charge(g), Charge(f),
                                          Charge(i)) *
                               f_standard(Charge(a), Charge(i), Charge(d), Charge(e), Charge(g),
                                          Charge(j)) *
                               f_standard(Charge(b), Charge(c), Charge(d), Charge(j), Charge(i),
                                          Charge(h));
                      }
                      check.residual = std::max(check.residual, std::abs(lhs - rhs));
                    }
                  }
                }
              }
            }
    check.pass = check.residual < tol;
    report.checks.push_back(std::move(check));
  }

  return report;
}

ValidationReport verify_pentagon(const AnyonModel& model, double tol) {
  return model.verify(tol);
}

namespace {

// Default every admissible standard recoupling entry to 1; the nontrivial
// blocks of the built-in models are overwritten afterwards.
void populate_trivial_f(ModelData& data) {
  const int n = static_cast<int>(data.charge_labels.size());
  std::vector<uint8_t> fusion(static_cast<size_t>(n) * n * n, 0);
  for (const auto& t : data.fusion_triples)
    fusion[(static_cast<size_t>(t[0]) * n + t[1]) * n + t[2]] = 1;
  auto nabc = [&](int a, int b, int c) -> int {
    return fusion[(static_cast<size_t>(a) * n + b) * n + c];
  };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          for (int e = 0; e < n; ++e)
            for (int f = 0; f < n; ++f)
              if (nabc(a, b, e) && nabc(e, c, d) && nabc(b, c, f) && nabc(a, f, d))
                data.f_symbols.push_back({a, b, c, d, e, f, Complex(1.0)});
}

void set_f(ModelData& data, int a, int b, int c, int d, int e, int f, Complex value) {
  for (auto& entry : data.f_symbols)
    if (entry.a == a && entry.b == b && entry.c == c && entry.d == d && entry.e == e &&
        entry.f == f) {
      entry.value = value;
      return;
    }
  data.f_symbols.push_back({a, b, c, d, e, f, value});
}

}  // namespace

AnyonModel AnyonModel::fibonacci() {
  ModelData data;
  data.name = "fibonacci";
  data.charge_labels = {"1", "τ"};
  const int t = 1;
  data.fusion_triples = {{0, 0, 0}, {0, t, t}, {t, 0, t}, {t, t, 0}, {t, t, t}};
  populate_trivial_f(data);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  const double isp = 1.0 / std::sqrt(phi);
  // [F^{tau tau tau}_tau] over intermediates {1, tau}.
  set_f(data, t, t, t, t, 0, 0, 1.0 / phi);
  set_f(data, t, t, t, t, 0, t, isp);
  set_f(data, t, t, t, t, t, 0, isp);
  set_f(data, t, t, t, t, t, t, -1.0 / phi);
  return AnyonModel(std::move(data));
}

AnyonModel AnyonModel::ising() {
  ModelData data;
  data.name = "ising";
  data.charge_labels = {"1", "σ", "ψ"};
  const int s = 1, p = 2;
  data.fusion_triples = {{0, 0, 0}, {0, s, s}, {0, p, p}, {s, 0, s}, {p, 0, p},
                         {s, s, 0}, {s, s, p}, {s, p, s}, {p, s, s}, {p, p, 0}};
  populate_trivial_f(data);
  const double r = 1.0 / std::sqrt(2.0);
  // [F^{sigma sigma sigma}_sigma] over intermediates {1, psi}.
  set_f(data, s, s, s, s, 0, 0, r);
  set_f(data, s, s, s, s, 0, p, r);
  set_f(data, s, s, s, s, p, 0, r);
  set_f(data, s, s, s, s, p, p, -r);
  set_f(data, s, p, s, p, s, s, -1.0);
  set_f(data, p, s, p, s, s, s, -1.0);
  return AnyonModel(std::move(data));
}

AnyonModel AnyonModel::zn(int n) {
  // Validation enumerates pentagon instances, so keep the group small.
  if (n < 1 || n > 16) throw DomainError("zn parameter out of range (1..16)");
  ModelData data;
  data.name = "z" + std::to_string(n);
  data.charge_labels.push_back("1");
  for (int k = 1; k < n; ++k)
    data.charge_labels.push_back(k == 1 ? "e" : "e" + std::to_string(k));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) data.fusion_triples.push_back({a, b, (a + b) % n});
  populate_trivial_f(data);
  return AnyonModel(std::move(data));
}

}  // namespace anyonic
