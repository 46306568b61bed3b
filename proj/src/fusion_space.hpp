#pragma once

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "anyon_model.hpp"

namespace anyonic {

/// Left-canonical fusion tree ((...((q1 q2) q3)...) qn). `internals` holds the
/// charge after each of the first n-2 fusions; `root` is the final result.
struct FusionTree {
  std::vector<Charge> leaves;
  std::vector<Charge> internals;  // length max(n-2, 0)
  Charge root;

  /// Charge after fusing the first k leaves (k in 1..n).
  Charge charge_after(int k) const {
    if (k <= 1) return leaves.at(0);
    if (k >= static_cast<int>(leaves.size())) return root;
    return internals.at(static_cast<size_t>(k) - 2);
  }

  /// "τ.τ.τ>τ.1": leaves, then the internal charges ending with the root.
  std::string label(const AnyonModel& model) const;

  friend bool operator==(const FusionTree&, const FusionTree&) = default;
};

/// All admissible left-canonical trees over `leaves` with the given root, in
/// deterministic (lexicographic in internal charges) order.
std::vector<FusionTree> enumerate_trees(const AnyonModel& model, std::span<const Charge> leaves,
                                        Charge root);

/// Sector dimension N_c for every charge c (indexed by charge index).
std::vector<int> sector_dimensions(const AnyonModel& model, std::span<const Charge> leaves);

/// Fusion-tree basis of one subsystem, split by total charge.
class SectorBasis {
 public:
  SectorBasis(std::shared_ptr<const AnyonModel> model, std::vector<Charge> leaves);

  const AnyonModel& model() const { return *model_; }
  const std::shared_ptr<const AnyonModel>& model_ptr() const { return model_; }
  const std::vector<Charge>& leaves() const { return leaves_; }

  int dim(Charge a) const { return static_cast<int>(trees_.at(a.index()).size()); }
  const std::vector<FusionTree>& trees(Charge a) const { return trees_.at(a.index()); }
  const std::vector<int>& dims() const { return dims_; }

  /// Charges with at least one tree.
  const std::vector<Charge>& sectors() const { return sectors_; }

  friend bool operator==(const SectorBasis& x, const SectorBasis& y) {
    return x.model_ == y.model_ && x.leaves_ == y.leaves_;
  }

 private:
  std::shared_ptr<const AnyonModel> model_;
  std::vector<Charge> leaves_;
  std::vector<std::vector<FusionTree>> trees_;  // by charge index
  std::vector<int> dims_;
  std::vector<Charge> sectors_;
};

/// Joint basis of a bipartite system, block-diagonal in the overall charge.
/// Within a block elements are ordered lexicographically by
/// (a, treeA index, b, treeB index), so two constructions from identical
/// inputs agree bit-exactly.
class BipartiteBasis {
 public:
  struct Element {
    Charge a;
    int tree_a;
    Charge b;
    int tree_b;
  };

  BipartiteBasis(std::shared_ptr<const SectorBasis> basis_a,
                 std::shared_ptr<const SectorBasis> basis_b);

  const AnyonModel& model() const { return basis_a_->model(); }
  const SectorBasis& basis_a() const { return *basis_a_; }
  const SectorBasis& basis_b() const { return *basis_b_; }
  const std::shared_ptr<const SectorBasis>& basis_a_ptr() const { return basis_a_; }
  const std::shared_ptr<const SectorBasis>& basis_b_ptr() const { return basis_b_; }

  int block_dim(Charge c) const { return static_cast<int>(blocks_.at(c.index()).size()); }
  std::span<const Element> block(Charge c) const { return blocks_.at(c.index()); }
  int total_dim() const { return total_dim_; }

  /// Offset of the contiguous (a,b) run inside block c, -1 if absent.
  int pair_offset(Charge c, Charge a, Charge b) const;

  /// "A[τ.τ>1]⊗B[τ.τ>τ]@τ" -- stable diagnostic label of one basis element.
  std::string element_label(Charge c, int index) const;

  friend bool operator==(const BipartiteBasis& x, const BipartiteBasis& y) {
    return *x.basis_a_ == *y.basis_a_ && *x.basis_b_ == *y.basis_b_;
  }

 private:
  std::shared_ptr<const SectorBasis> basis_a_;
  std::shared_ptr<const SectorBasis> basis_b_;
  std::vector<std::vector<Element>> blocks_;  // by overall charge index
  int total_dim_ = 0;
};

/// Convenience builder: enumerate both subsystem bases and join them.
std::shared_ptr<const BipartiteBasis> bipartite_basis(std::shared_ptr<const AnyonModel> model,
                                                      std::vector<Charge> leaves_a,
                                                      std::vector<Charge> leaves_b);

}  // namespace anyonic
