#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"

namespace anyonic {

// Validation tolerances. Double precision leaves plenty of headroom above
// rounding accumulated in these small algebras.
inline constexpr double kModelTol = 1e-10;
inline constexpr double kZeroCutoff = 1e-14;

/// Topological charge handle. Index 0 is always the vacuum, labeled "1".
class Charge {
 public:
  constexpr Charge() = default;
  constexpr explicit Charge(int index) : index_(index) {}
  constexpr int index() const { return index_; }
  static constexpr Charge vacuum() { return Charge(0); }
  constexpr bool is_vacuum() const { return index_ == 0; }
  friend constexpr auto operator<=>(Charge, Charge) = default;

 private:
  int index_ = 0;
};

/// Raw description of a multiplicity-free anyon model. `f_symbols` holds the
/// recoupling data [F^{abc}_d]_{ef} for the standard three-leaf tree change
/// of basis; every admissible entry must be present.
struct ModelData {
  std::string name;
  std::vector<std::string> charge_labels;  // vacuum "1" first
  std::vector<std::array<int, 3>> fusion_triples;  // (a,b,c) with N_ab^c = 1

  struct FEntry {
    int a, b, c, d, e, f;
    Complex value;
  };
  std::vector<FEntry> f_symbols;
};

struct ValidationCheck {
  std::string name;
  double residual = 0.0;
  bool pass = true;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
  double max_residual() const {
    double m = 0.0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
  }
  const ValidationCheck* first_failure() const {
    for (const auto& c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
  std::string to_string() const;
};

/// Immutable multiplicity-free anyon model: charges, fusion tensor, quantum
/// dimensions, charge conjugation and F-symbols. Construction computes the
/// quantum dimensions (Perron-Frobenius data of the fusion matrices) and
/// validates the structural invariants; `Validation::strict` additionally
/// gates on the full F-matrix consistency report (pentagon + unitarity).
class AnyonModel {
 public:
  enum class Validation { strict, lax };

  explicit AnyonModel(ModelData data, Validation mode = Validation::strict);

  static AnyonModel fibonacci();
  static AnyonModel ising();
  static AnyonModel zn(int n);

  const std::string& name() const { return name_; }
  int charge_count() const { return static_cast<int>(labels_.size()); }
  std::vector<Charge> charges() const;

  const std::string& label(Charge a) const;
  /// Throws DomainError if no charge carries `label`.
  Charge charge(std::string_view label) const;

  /// N_ab^c; 0 or 1 in this multiplicity-free setting.
  int fusion_multiplicity(Charge a, Charge b, Charge c) const;
  std::vector<Charge> fusion_products(Charge a, Charge b) const;

  double qdim(Charge a) const;
  const std::vector<double>& quantum_dimensions() const { return qdim_; }
  double total_qdim() const { return total_qdim_; }

  Charge dual(Charge a) const;

  /// Recoupling matrix element [F^{abc}_d]_{ef}; exact 0 when inadmissible.
  Complex f_standard(Charge a, Charge b, Charge c, Charge d, Charge e, Charge f) const;

  /// Two-vertex ("vertical to horizontal") F-move element [F^{ab}_{a'b'}]_{cg}
  /// used when severing charge lines: c is the vertical internal charge, g the
  /// horizontal one. Inadmissible index combinations give exact 0.
  Complex f_symbol(Charge a, Charge b, Charge ap, Charge bp, Charge c, Charge g) const;

  /// Full consistency report: fusion identities, quantum-dimension
  /// consistency, F-unitarity (both presentations), the vacuum-column
  /// identity [F^{ab}_{ab}]_{c1} = sqrt(d_c/d_a d_b), and every pentagon
  /// instance. Passes iff every residual is below `tol`.
  ValidationReport verify(double tol = kModelTol) const;

 private:
  void check_handle(Charge a) const;
  void validate_structure();
  void compute_qdims();
  void compute_duals();
  static uint64_t fkey(int a, int b, int c, int d, int e, int f);

  std::string name_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> label_index_;
  int n_ = 0;
  std::vector<uint8_t> fusion_;  // [a][b][c]
  std::vector<double> qdim_;
  double total_qdim_ = 0.0;
  std::vector<int> dual_;
  std::unordered_map<uint64_t, Complex> f_;
};

/// Report wrapper used by CLI `validate` and by load-time gating.
ValidationReport verify_pentagon(const AnyonModel& model, double tol = kModelTol);

}  // namespace anyonic
