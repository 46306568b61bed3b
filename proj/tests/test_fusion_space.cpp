#include <doctest.h>

#include "fusion_space.hpp"
#include "inference.hpp"

using namespace anyonic;

namespace {

// Transfer-matrix oracle for tree counts: propagate a charge-indexed count
// vector through the leaf sequence, independently of the tree enumerator.
std::vector<long> path_counts(const AnyonModel& m, const std::vector<Charge>& leaves) {
  std::vector<long> v(m.charge_count(), 0);
  v[leaves[0].index()] = 1;
  for (size_t k = 1; k < leaves.size(); ++k) {
    std::vector<long> w(m.charge_count(), 0);
    for (const Charge x : m.charges()) {
      if (v[x.index()] == 0) continue;
      for (const Charge c : m.fusion_products(x, leaves[k])) w[c.index()] += v[x.index()];
    }
    v = std::move(w);
  }
  return v;
}

}  // namespace

TEST_CASE("tree enumeration matches the transfer-matrix oracle") {
  const auto fib = shared_fibonacci();
  const Charge tau = fib->charge("τ");
  const Charge one = Charge::vacuum();

  CHECK(enumerate_trees(*fib, std::vector<Charge>{tau, tau}, one).size() == 1);
  CHECK(enumerate_trees(*fib, std::vector<Charge>{tau, tau, tau}, tau).size() == 2);
  CHECK(enumerate_trees(*fib, std::vector<Charge>{tau, tau, tau, tau}, one).size() == 2);

  const auto ising = shared_ising();
  const Charge sigma = ising->charge("σ");
  for (const auto& model : {fib, ising}) {
    std::vector<Charge> leaves;
    const Charge seed = model == fib ? tau : sigma;
    for (int n = 1; n <= 6; ++n) {
      leaves.push_back(seed);
      const auto oracle = path_counts(*model, leaves);
      for (const Charge c : model->charges())
        CHECK(static_cast<long>(enumerate_trees(*model, leaves, c).size()) ==
              oracle[c.index()]);
    }
  }
}

TEST_CASE("sector dimensions") {
  const auto fib = shared_fibonacci();
  const Charge tau = fib->charge("τ");
  auto dims = sector_dimensions(*fib, std::vector<Charge>{tau, tau});
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 1);
  dims = sector_dimensions(*fib, std::vector<Charge>{tau, tau, tau});
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 2);

  const auto z2 = std::make_shared<const AnyonModel>(AnyonModel::zn(2));
  const Charge e = z2->charge("e");
  dims = sector_dimensions(*z2, std::vector<Charge>{e, e});
  CHECK(dims[0] == 1);
  CHECK(dims[1] == 0);
}

TEST_CASE("tree internals are admissible and deterministic") {
  const auto fib = shared_fibonacci();
  const Charge tau = fib->charge("τ");
  const std::vector<Charge> leaves{tau, tau, tau, tau};
  const auto trees = enumerate_trees(*fib, leaves, tau);
  for (const FusionTree& t : trees) {
    REQUIRE(t.internals.size() == 2);
    Charge current = t.leaves[0];
    for (size_t k = 1; k < t.leaves.size(); ++k) {
      const Charge next = t.charge_after(static_cast<int>(k) + 1);
      CHECK(fib->fusion_multiplicity(current, t.leaves[k], next) == 1);
      current = next;
    }
    CHECK(current == t.root);
  }
  const auto again = enumerate_trees(*fib, leaves, tau);
  REQUIRE(trees.size() == again.size());
  for (size_t i = 0; i < trees.size(); ++i) {
    CHECK(trees[i] == again[i]);
    CHECK(trees[i].label(*fib) == again[i].label(*fib));
    for (size_t j = i + 1; j < trees.size(); ++j) CHECK_FALSE(trees[i] == trees[j]);
  }
}

TEST_CASE("bipartite blocks") {
  const auto fib = shared_fibonacci();
  const Charge tau = fib->charge("τ");
  const auto basis = bipartite_basis(fib, {tau, tau}, {tau, tau});

  CHECK(basis->block_dim(Charge::vacuum()) == 2);
  CHECK(basis->block_dim(tau) == 3);
  CHECK(basis->total_dim() == 5);

  const auto vac = basis->block(Charge::vacuum());
  CHECK(vac[0].a == Charge::vacuum());
  CHECK(vac[0].b == Charge::vacuum());
  CHECK(vac[1].a == tau);
  CHECK(vac[1].b == tau);
  const auto tb = basis->block(tau);
  CHECK(tb[0].a == Charge::vacuum());
  CHECK(tb[0].b == tau);
  CHECK(tb[1].a == tau);
  CHECK(tb[1].b == Charge::vacuum());
  CHECK(tb[2].a == tau);
  CHECK(tb[2].b == tau);

  CHECK(basis->element_label(Charge::vacuum(), 0) == "A[τ.τ>1]⊗B[τ.τ>1]@1");

  const auto ising = shared_ising();
  const Charge sigma = ising->charge("σ");
  const auto ibasis = bipartite_basis(ising, {sigma, sigma}, {sigma, sigma});
  CHECK(ibasis->block_dim(Charge::vacuum()) == 2);
  CHECK(ibasis->block_dim(ising->charge("ψ")) == 2);
  CHECK(ibasis->block_dim(sigma) == 0);

  const auto z2 = std::make_shared<const AnyonModel>(AnyonModel::zn(2));
  const Charge e = z2->charge("e");
  const auto zbasis = bipartite_basis(z2, {e}, {e});
  CHECK(zbasis->block_dim(Charge::vacuum()) == 1);
  CHECK(zbasis->block_dim(e) == 0);
}

TEST_CASE("bipartite completeness") {
  const auto fib = shared_fibonacci();
  const Charge tau = fib->charge("τ");
  for (const auto& leaves_a :
       {std::vector<Charge>{tau}, std::vector<Charge>{tau, tau}, std::vector<Charge>{tau, tau, tau}}) {
    const auto basis = bipartite_basis(fib, leaves_a, {tau, tau});
    long want = 0;
    for (const Charge a : basis->basis_a().sectors())
      for (const Charge b : basis->basis_b().sectors())
        for (const Charge c : fib->fusion_products(a, b))
          want += static_cast<long>(basis->basis_a().dim(a)) * basis->basis_b().dim(b) *
                  fib->fusion_multiplicity(a, b, c);
    CHECK(basis->total_dim() == want);
  }
}
