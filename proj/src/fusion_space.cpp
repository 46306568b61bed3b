#include "fusion_space.hpp"

#include <algorithm>

namespace anyonic {

std::string FusionTree::label(const AnyonModel& model) const {
  std::string out;
  for (size_t i = 0; i < leaves.size(); ++i) {
    if (i) out += '.';
    out += model.label(leaves[i]);
  }
  out += '>';
  for (const Charge c : internals) {
    out += model.label(c);
    out += '.';
  }
  out += model.label(root);
  return out;
}

std::vector<FusionTree> enumerate_trees(const AnyonModel& model, std::span<const Charge> leaves,
                                        Charge root) {
  if (leaves.empty()) throw DomainError("fusion tree needs at least one leaf");
  for (const Charge q : leaves) model.label(q);  // handle check
  model.label(root);

  std::vector<FusionTree> out;
  const int n = static_cast<int>(leaves.size());
  if (n == 1) {
    if (leaves[0] == root)
      out.push_back({{leaves.begin(), leaves.end()}, {}, root});
    return out;
  }

  // Depth-first over intermediate charges, trying charge indices in order;
  // the resulting tree sequence is lexicographic in the internal labels.
  std::vector<Charge> internals;
  internals.reserve(static_cast<size_t>(n) - 2);
  auto descend = [&](auto&& self, Charge current, int next_leaf) -> void {
    if (next_leaf == n) {
      if (current == root) out.push_back({{leaves.begin(), leaves.end()}, internals, root});
      return;
    }
    const bool record = next_leaf < n - 1;  // last fusion lands on the root
    for (const Charge c : model.fusion_products(current, leaves[next_leaf])) {
      if (record) internals.push_back(c);
      self(self, c, next_leaf + 1);
      if (record) internals.pop_back();
    }
  };
  descend(descend, leaves[0], 1);
  return out;
}

std::vector<int> sector_dimensions(const AnyonModel& model, std::span<const Charge> leaves) {
  std::vector<int> dims(model.charge_count(), 0);
  for (const Charge c : model.charges())
    dims[c.index()] = static_cast<int>(enumerate_trees(model, leaves, c).size());
  return dims;
}

SectorBasis::SectorBasis(std::shared_ptr<const AnyonModel> model, std::vector<Charge> leaves)
    : model_(std::move(model)), leaves_(std::move(leaves)) {
  if (!model_) throw DomainError("null model");
  trees_.resize(model_->charge_count());
  dims_.resize(model_->charge_count());
  for (const Charge c : model_->charges()) {
    trees_[c.index()] = enumerate_trees(*model_, leaves_, c);
    dims_[c.index()] = static_cast<int>(trees_[c.index()].size());
    if (dims_[c.index()] > 0) sectors_.push_back(c);
  }
}

BipartiteBasis::BipartiteBasis(std::shared_ptr<const SectorBasis> basis_a,
                               std::shared_ptr<const SectorBasis> basis_b)
    : basis_a_(std::move(basis_a)), basis_b_(std::move(basis_b)) {
  if (!basis_a_ || !basis_b_) throw DomainError("null sector basis");
  if (basis_a_->model_ptr() != basis_b_->model_ptr())
    throw DomainError("subsystem bases use different models");
  const AnyonModel& m = basis_a_->model();
  blocks_.resize(m.charge_count());
  for (const Charge c : m.charges()) {
    auto& block = blocks_[c.index()];
    for (const Charge a : basis_a_->sectors())
      for (const Charge b : basis_b_->sectors()) {
        if (!m.fusion_multiplicity(a, b, c)) continue;
        for (int ta = 0; ta < basis_a_->dim(a); ++ta)
          for (int tb = 0; tb < basis_b_->dim(b); ++tb) block.push_back({a, ta, b, tb});
      }
    total_dim_ += static_cast<int>(block.size());
  }
}

int BipartiteBasis::pair_offset(Charge c, Charge a, Charge b) const {
  const auto& block = blocks_.at(c.index());
  for (size_t i = 0; i < block.size(); ++i)
    if (block[i].a == a && block[i].b == b && block[i].tree_a == 0 && block[i].tree_b == 0)
      return static_cast<int>(i);
  return -1;
}

std::string BipartiteBasis::element_label(Charge c, int index) const {
  const Element& e = blocks_.at(c.index()).at(index);
  const AnyonModel& m = model();
  return "A[" + basis_a_->trees(e.a)[e.tree_a].label(m) + "]⊗B[" +
         basis_b_->trees(e.b)[e.tree_b].label(m) + "]@" + m.label(c);
}

std::shared_ptr<const BipartiteBasis> bipartite_basis(std::shared_ptr<const AnyonModel> model,
                                                      std::vector<Charge> leaves_a,
                                                      std::vector<Charge> leaves_b) {
  auto a = std::make_shared<const SectorBasis>(model, std::move(leaves_a));
  auto b = std::make_shared<const SectorBasis>(model, std::move(leaves_b));
  return std::make_shared<const BipartiteBasis>(std::move(a), std::move(b));
}

}  // namespace anyonic
