#include <doctest.h>

#include <cmath>

#include "support.hpp"

using namespace anyonic;

namespace {

constexpr double kPhi = 1.6180339887498949;
constexpr double kTwoLog2D = 1.855205961074299;   // log2(1 + phi^2)
constexpr double kQStar = 0.276393202250021;      // 1 / D^2
constexpr double kUniform4t = 0.016545148178370;  // fib4 closed form at p = 0.2
constexpr double kHalfPure = 1.694241913630617;   // 1 + log2 phi

std::shared_ptr<const BipartiteBasis> fib_basis(int na, int nb) {
  const auto fib = shared_fibonacci();
  const Charge tau = fib->charge("τ");
  return bipartite_basis(fib, std::vector<Charge>(na, tau), std::vector<Charge>(nb, tau));
}

double factorized_diff(const FactorizedOperator& x, const FactorizedOperator& y) {
  double m = 0.0;
  for (const Charge a : x.basis_a().sectors())
    for (const Charge b : x.basis_b().sectors())
      m = std::max(m, max_abs_diff(x.block(a, b), y.block(a, b)));
  return m;
}

}  // namespace

TEST_CASE("closed-form inference reproduces the two-pair mixture") {
  const std::array<double, 5> p{0.1, 0.15, 0.2, 0.25, 0.3};
  const auto basis = fib_basis(2, 2);
  const ObservableBasis oa(basis->basis_a_ptr());
  const ObservableBasis ob(basis->basis_b_ptr());
  const MeasurementRecord record = measure_all(fib4_state(p), oa, ob);
  const FactorizedOperator inferred = inferred_state_closed_form(record, oa, ob);

  const Charge one = Charge::vacuum(), tau = Charge(1);
  CHECK(std::abs(inferred.block(one, one)(0, 0) - Complex(p[0])) < 1e-12);
  CHECK(std::abs(inferred.block(tau, one)(0, 0) - Complex(p[1] / kPhi)) < 1e-12);
  CHECK(std::abs(inferred.block(one, tau)(0, 0) - Complex(p[2] / kPhi)) < 1e-12);
  CHECK(std::abs(inferred.block(tau, tau)(0, 0) - Complex((p[3] + p[4]) / (kPhi * kPhi))) <
        1e-12);
  CHECK(quantum_trace(inferred) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed-form inference is the severing map on maximal-rank states") {
  auto rng = testing::make_rng(43);
  const auto fib = shared_fibonacci();
  const auto ising = shared_ising();
  const Charge tau = fib->charge("τ");
  const Charge sigma = ising->charge("σ");
  const std::vector<std::shared_ptr<const BipartiteBasis>> bases = {
      fib_basis(2, 2),
      bipartite_basis(fib, {tau, tau, tau}, {tau, tau}),
      bipartite_basis(ising, {sigma, sigma}, {sigma, sigma}),
  };
  for (const auto& basis : bases) {
    const ObservableBasis oa(basis->basis_a_ptr());
    const ObservableBasis ob(basis->basis_b_ptr());
    for (int rep = 0; rep < 20; ++rep) {
      const AnyonicDensityOperator rho = testing::random_maximal_rank_state(rng, basis);
      const FactorizedOperator via_record =
          inferred_state_closed_form(measure_all(rho, oa, ob), oa, ob);
      CHECK(factorized_diff(via_record, sever(rho)) < 1e-10);
    }
  }

  // The maximally mixed record reproduces the flat factorized state.
  const auto basis = fib_basis(2, 2);
  const ObservableBasis oa(basis->basis_a_ptr());
  const ObservableBasis ob(basis->basis_b_ptr());
  const AnyonicDensityOperator mm = maximally_mixed(basis);
  const FactorizedOperator flat = inferred_state_closed_form(measure_all(mm, oa, ob), oa, ob);
  CHECK(factorized_diff(flat, sever(mm)) < 1e-13);
}

TEST_CASE("numeric max-entropy solver agrees with the closed form") {
  const auto basis = fib_basis(2, 2);
  const ObservableBasis oa(basis->basis_a_ptr());
  const ObservableBasis ob(basis->basis_b_ptr());

  // Unconstrained-maximum sanity: the maximally mixed record converges to the
  // maximally mixed factorized state.
  const AnyonicDensityOperator mm = maximally_mixed(basis);
  const MeasurementRecord mm_record = measure_all(mm, oa, ob);
  const FactorizedOperator mm_numeric = inferred_state_numeric(mm_record, oa, ob);
  CHECK(factorized_diff(mm_numeric, sever(mm)) < 1e-7);

  // 50 random maximal-rank states on the two-pair partition.
  auto rng = testing::make_rng(47);
  for (int rep = 0; rep < 50; ++rep) {
    const AnyonicDensityOperator rho = testing::random_maximal_rank_state(rng, basis);
    const MeasurementRecord record = measure_all(rho, oa, ob);
    const FactorizedOperator closed = inferred_state_closed_form(record, oa, ob);
    const FactorizedOperator numeric = inferred_state_numeric(record, oa, ob);
    CHECK(factorized_diff(closed, numeric) < 1e-7);
  }

  // The uniform two-pair mixture: entropies of the two routes agree tightly.
  const std::array<double, 5> p{0.2, 0.2, 0.2, 0.2, 0.2};
  const MeasurementRecord record = measure_all(fib4_state(p), oa, ob);
  const double s_closed = anyonic_entropy(inferred_state_closed_form(record, oa, ob));
  const double s_numeric = anyonic_entropy(inferred_state_numeric(record, oa, ob));
  CHECK(std::abs(s_closed - s_numeric) < 1e-8);

  // A partition with a genuine su(2) sector.
  const auto rich = bipartite_basis(shared_fibonacci(), {Charge(1), Charge(1), Charge(1)},
                                    {Charge(1), Charge(1)});
  const ObservableBasis roa(rich->basis_a_ptr());
  const ObservableBasis rob(rich->basis_b_ptr());
  for (int rep = 0; rep < 3; ++rep) {
    const AnyonicDensityOperator rho = testing::random_maximal_rank_state(rng, rich);
    const MeasurementRecord rec = measure_all(rho, roa, rob);
    CHECK(factorized_diff(inferred_state_closed_form(rec, roa, rob),
                          inferred_state_numeric(rec, roa, rob)) < 1e-7);
  }

  // Tiny iteration caps surface as convergence errors carrying a residual.
  SolverOptions strangled;
  strangled.max_iterations = 1;
  CHECK_THROWS_AS((void)inferred_state_numeric(record, oa, ob, strangled), ConvergenceError);
}

TEST_CASE("topological correlation of the worked examples") {
  // Two-pair mixture at the LOCC-determinable point p4 = p5/d.
  const double p5 = 0.2, p4 = p5 / kPhi;
  const double rest = (1.0 - p4 - p5) / 3.0;
  const std::array<double, 5> locc{rest, rest, 1.0 - p4 - p5 - 2.0 * rest, p4, p5};
  const AnyonicDensityOperator rho = fib4_state(locc);
  CHECK(std::abs(topological_correlation(rho)) < 1e-10);
  CHECK(std::abs(fib4_topo(locc)) < 1e-12);
  // At that point the state is its own inferred state.
  const AnyonicDensityOperator back = embed(sever(rho), rho.basis_ptr());
  for (const Charge c : rho.model().charges())
    CHECK(max_abs_diff(back.block(c), rho.block(c)) < 1e-10);

  // Uniform weights.
  const std::array<double, 5> uniform{0.2, 0.2, 0.2, 0.2, 0.2};
  CHECK(topological_correlation(fib4_state(uniform)) ==
        doctest::Approx(kUniform4t).epsilon(1e-9));
  CHECK(fib4_topo(uniform) == doctest::Approx(kUniform4t).epsilon(1e-12));

  // Pure state at the maximum.
  CHECK(topological_correlation(fib_pure_state(kQStar)) ==
        doctest::Approx(kTwoLog2D).epsilon(1e-9));
  CHECK(fib_pure_topo(kQStar) == doctest::Approx(kTwoLog2D).epsilon(1e-12));

  // ACE shares the code path.
  const AnyonicDensityOperator sample = fib4_state(uniform);
  CHECK(ace(sample) == topological_correlation(sample));
}

TEST_CASE("nonnegativity and idempotence") {
  auto rng = testing::make_rng(53);
  const auto bases = {fib_basis(2, 2), fib_basis(3, 2)};
  for (const auto& basis : bases) {
    for (int rep = 0; rep < 25; ++rep) {
      const AnyonicDensityOperator rho = testing::random_state(rng, basis);
      const double c = topological_correlation(rho);
      CHECK(c >= -1e-10);
      const AnyonicDensityOperator inferred = embed(sever(rho), basis);
      CHECK(std::abs(topological_correlation(inferred)) < 1e-10);
    }
  }
}

TEST_CASE("sector-trivial configurations carry no correlation") {
  auto rng = testing::make_rng(59);
  for (int n : {2, 3, 5}) {
    const auto zn = std::make_shared<const AnyonModel>(AnyonModel::zn(n));
    const auto basis = bipartite_basis(zn, {zn->charge("e")}, {zn->charge("e")});
    for (int rep = 0; rep < 10; ++rep) {
      const AnyonicDensityOperator rho = testing::random_state(rng, basis);
      CHECK(std::abs(topological_correlation(rho)) < 1e-12);
    }
  }
}

TEST_CASE("limit procedure") {
  const std::vector<double> ps{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};

  const LimitResult pure = topo_correlation_via_limit(fib_pure_state(0.5), ps);
  REQUIRE(pure.table.size() == ps.size());
  CHECK(std::abs(pure.table.back().value - kHalfPure) < 1e-4);
  CHECK(std::abs(pure.extrapolated - kHalfPure) < 1e-5);
  // Error shrinks monotonically along the tail.
  for (size_t k = 2; k < pure.table.size(); ++k)
    CHECK(std::abs(pure.table[k].value - kHalfPure) <=
          std::abs(pure.table[k - 1].value - kHalfPure) + 1e-15);

  const AnyonicDensityOperator mm = maximally_mixed(fib_basis(2, 2));
  const LimitResult flat = topo_correlation_via_limit(mm, ps);
  for (const auto& point : flat.table) CHECK(std::abs(point.value) < 1e-12);

  const std::array<double, 5> uniform{0.2, 0.2, 0.2, 0.2, 0.2};
  const LimitResult mixture = topo_correlation_via_limit(fib4_state(uniform), ps);
  CHECK(std::abs(mixture.table.back().value - kUniform4t) < 1e-4);

  const std::vector<double> bad{1e-3, 1e-2};
  CHECK_THROWS_AS((void)topo_correlation_via_limit(mm, bad), DomainError);
}

TEST_CASE("binary entropy and the closed forms") {
  CHECK(binary_entropy(0.5) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(binary_entropy(0.0) == 0.0);
  CHECK(binary_entropy(1.0) == 0.0);
  CHECK_THROWS_AS((void)binary_entropy(1.5), DomainError);

  // The closed form splits into binary entropy plus the charge-line term.
  for (double q = 0.0; q <= 1.0; q += 0.05)
    CHECK(fib_pure_topo(q) - binary_entropy(q) ==
          doctest::Approx((1.0 - q) * std::log2(kPhi * kPhi)).epsilon(1e-12));

  // Grid maximum of the closed form sits at q = 1/D^2.
  double best_q = 0.0, best = -1.0;
  for (int k = 1; k < 10000; ++k) {
    const double q = k / 10000.0;
    const double v = fib_pure_topo(q);
    if (v > best) {
      best = v;
      best_q = q;
    }
  }
  CHECK(std::abs(best_q - kQStar) < 1e-3);
  CHECK(best <= kTwoLog2D + 1e-12);

  CHECK_THROWS_AS((void)fib4_topo({0.5, 0.5, 0.5, 0.25, 0.25}), DomainError);
  CHECK_THROWS_AS((void)fib_pure_state(1.5), DomainError);
}

TEST_CASE("the correlation does not depend on the observable basis") {
  auto rng = testing::make_rng(61);
  const auto basis = fib_basis(3, 2);
  const ObservableBasis oa(basis->basis_a_ptr());
  const ObservableBasis ob(basis->basis_b_ptr());

  for (int rep = 0; rep < 5; ++rep) {
    const AnyonicDensityOperator rho = testing::random_state(rng, basis);
    const double s_rho = anyonic_entropy(rho);
    const double reference =
        anyonic_entropy(inferred_state_closed_form(measure_all(rho, oa, ob), oa, ob)) - s_rho;
    for (int rot = 0; rot < 3; ++rot) {
      const ObservableBasis ra = testing::rotated_observables(rng, oa);
      const ObservableBasis rb = testing::rotated_observables(rng, ob);
      CHECK(verify_algebra(ra, 1e-10).pass());
      const double rotated =
          anyonic_entropy(inferred_state_closed_form(measure_all(rho, ra, rb), ra, rb)) - s_rho;
      CHECK(std::abs(rotated - reference) < 1e-9);
    }
  }
}
