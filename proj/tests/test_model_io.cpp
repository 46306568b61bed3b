#include <doctest.h>

#include "model_io.hpp"
#include "inference.hpp"
#include "support.hpp"

using namespace anyonic;
using nlohmann::json;

TEST_CASE("builtin model references") {
  CHECK(is_builtin_name("fibonacci"));
  CHECK(is_builtin_name("ising"));
  CHECK(is_builtin_name("z2"));
  CHECK(is_builtin_name("z12"));
  CHECK_FALSE(is_builtin_name("zx"));
  CHECK_FALSE(is_builtin_name("custom"));

  CHECK(builtin_model("fibonacci")->charge_count() == 2);
  CHECK(builtin_model("z3")->charge_count() == 3);
  CHECK_THROWS_AS((void)builtin_model("nope"), DomainError);

  const auto fib = parse_model(json{{"builtin", "fibonacci"}});
  CHECK(fib->name() == "fibonacci");
  const auto z4 = parse_model(json{{"builtin", "zn"}, {"n", 4}});
  CHECK(z4->charge_count() == 4);
}

TEST_CASE("explicit model documents round-trip through the two-vertex form") {
  // Hand-written Z2 document with its eight admissible two-vertex entries.
  const json doc = json::parse(R"({
    "name": "z2-explicit",
    "charges": ["1", "e"],
    "fusion": [["1","1","1"], ["1","e","e"], ["e","1","e"], ["e","e","1"]],
    "f_symbols": [
      {"a":"1","b":"1","ap":"1","bp":"1","c":"1","g":"1","re":1.0,"im":0.0},
      {"a":"1","b":"e","ap":"1","bp":"e","c":"e","g":"1","re":1.0,"im":0.0},
      {"a":"e","b":"1","ap":"e","bp":"1","c":"e","g":"1","re":1.0,"im":0.0},
      {"a":"e","b":"e","ap":"e","bp":"e","c":"1","g":"1","re":1.0,"im":0.0},
      {"a":"1","b":"1","ap":"e","bp":"e","c":"1","g":"e","re":1.0,"im":0.0},
      {"a":"e","b":"e","ap":"1","bp":"1","c":"1","g":"e","re":1.0,"im":0.0},
      {"a":"1","b":"e","ap":"e","bp":"1","c":"e","g":"e","re":1.0,"im":0.0},
      {"a":"e","b":"1","ap":"1","bp":"e","c":"e","g":"e","re":1.0,"im":0.0}
    ]
  })");
  const auto model = parse_model(doc);
  CHECK(model->verify(1e-10).pass());
  CHECK(model->qdim(model->charge("e")) == doctest::Approx(1.0));

  // Emitting any model and reparsing it preserves the whole structure.
  for (const auto& m : {shared_fibonacci(), shared_ising()}) {
    const auto reparsed = parse_model(model_to_json(*m));
    CHECK(reparsed->verify(1e-10).pass());
    CHECK(reparsed->charge_count() == m->charge_count());
    for (const Charge a : m->charges()) {
      CHECK(reparsed->label(a) == m->label(a));
      CHECK(reparsed->qdim(a) == doctest::Approx(m->qdim(a)).epsilon(1e-12));
      for (const Charge b : m->charges())
        for (const Charge c : m->charges())
          CHECK(reparsed->fusion_multiplicity(a, b, c) == m->fusion_multiplicity(a, b, c));
    }
  }
}

TEST_CASE("malformed model documents") {
  CHECK_THROWS_AS((void)parse_model(json::parse("[1,2]")), ParseError);
  CHECK_THROWS_AS((void)parse_model(json{{"name", "x"}}), ParseError);
  // Missing F entries fail the coverage check at strict construction.
  const json incomplete = json::parse(R"({
    "name": "z2-incomplete",
    "charges": ["1", "e"],
    "fusion": [["1","1","1"], ["1","e","e"], ["e","1","e"], ["e","e","1"]],
    "f_symbols": []
  })");
  CHECK_THROWS_AS((void)parse_model(incomplete), ModelError);
}

TEST_CASE("state documents round-trip") {
  const AnyonicDensityOperator rho = fib_pure_state(0.3);
  const json doc = state_to_json(rho);
  CHECK(doc["model"] == "fibonacci");

  const AnyonicDensityOperator back = parse_state(doc);
  for (const Charge c : rho.model().charges())
    CHECK(max_abs_diff(back.block(c), rho.block(c)) < 1e-15);
  CHECK(anyonic_entropy(back) == doctest::Approx(anyonic_entropy(rho)).epsilon(1e-12));
  CHECK(topological_correlation(back) ==
        doctest::Approx(topological_correlation(rho)).epsilon(1e-12));

  // Random mixed state; the document uses full double precision.
  auto rng = testing::make_rng(67);
  const auto basis = bipartite_basis(shared_fibonacci(), {Charge(1), Charge(1), Charge(1)},
                                     {Charge(1), Charge(1)});
  const AnyonicDensityOperator mixed = testing::random_state(rng, basis);
  const AnyonicDensityOperator mixed_back = parse_state(state_to_json(mixed));
  for (const Charge c : mixed.model().charges())
    CHECK(max_abs_diff(mixed_back.block(c), mixed.block(c)) < 1e-15);
}

TEST_CASE("state documents with inline models") {
  const auto z2doc = json::parse(R"({
    "model": {"builtin": "zn", "n": 2},
    "partition": {"leavesA": ["e"], "leavesB": ["e"]},
    "blocks": [{"charge": "1", "matrix": [[1.0, 0.0]]}]
  })");
  const AnyonicDensityOperator rho = parse_state(z2doc);
  CHECK(quantum_trace(rho) == doctest::Approx(1.0));
  CHECK(std::abs(topological_correlation(rho)) < 1e-12);
}

TEST_CASE("state loader names the violated invariant") {
  json doc = state_to_json(fib_pure_state(0.3));

  json skewed = doc;
  skewed["blocks"][0]["matrix"][1] = {0.9, 0.1};  // breaks Hermiticity
  CHECK_THROWS_WITH_AS((void)parse_state(skewed), doctest::Contains("Hermitian"), StateError);

  json unnormalized = doc;
  unnormalized["blocks"][0]["matrix"][0] = {2.0, 0.0};
  CHECK_THROWS_WITH_AS((void)parse_state(unnormalized), doctest::Contains("quantum trace"),
                       StateError);

  json wrong_dims = doc;
  wrong_dims["blocks"][0]["matrix"] = {{1.0, 0.0}};
  CHECK_THROWS_AS((void)parse_state(wrong_dims), ParseError);

  json no_partition = doc;
  no_partition.erase("partition");
  CHECK_THROWS_AS((void)parse_state(no_partition), ParseError);
}
