#include <doctest.h>

#include <random>

#include "support/random_corpus.hpp"
#include "trajnet/diffusion.hpp"
#include "trajnet/export.hpp"

using namespace trajnet;
using trajnet::testing::careers_corpus;

namespace {

TransitionMatrix first_order(const PathMultiset& s) { return transition_matrix(build_network(s, 1)); }

PathMultiset return_heavy() {
  PathMultiset s;
  s.add({"A", "B", "A"}, 4);
  s.add({"A", "B", "C"}, 1);
  return s;
}

}  // namespace

TEST_CASE("Markovian diffusion") {
  auto tr = markovian_diffusion(first_order(careers_corpus()), "A", 2);
  REQUIRE(tr.steps.size() == 3);
  CHECK(tr.steps[0] == std::map<Label, double>{{"A", 1.0}});
  CHECK(tr.steps[2] == std::map<Label, double>{{"D", 0.5}, {"E", 0.5}});
  CHECK(tr.terminated[2] == 0.0);

  auto zero = markovian_diffusion(first_order(careers_corpus()), "A", 0);
  CHECK(zero.steps.size() == 1);

  PathMultiset chain;
  chain.add({"A", "B", "C"});
  auto c = markovian_diffusion(first_order(chain), "A", 3);
  CHECK(c.steps[2] == std::map<Label, double>{{"C", 1.0}});
  CHECK(c.steps[3].empty());
  CHECK(c.terminated[3] == 1.0);

  CHECK_THROWS_AS(markovian_diffusion(first_order(chain), "Q", 1), Error);
}

TEST_CASE("empirical diffusion") {
  auto tr = empirical_diffusion(careers_corpus(), "A", 2);
  CHECK(tr.steps[2] == std::map<Label, double>{{"D", 1.0}});

  auto r = empirical_diffusion(return_heavy(), "A", 2);
  CHECK(r.steps[1] == std::map<Label, double>{{"B", 1.0}});
  CHECK(r.steps[2].at("A") == doctest::Approx(0.8));
  CHECK(r.steps[2].at("C") == doctest::Approx(0.2));

  auto longer = empirical_diffusion(return_heavy(), "A", 3);
  CHECK(longer.steps[3].empty());
  CHECK(longer.terminated[3] == 1.0);

  CHECK_THROWS_AS(empirical_diffusion(careers_corpus(), "Q", 2), Error);

  // a source seen only at trajectory ends cannot move
  auto end = empirical_diffusion(careers_corpus(), "D", 1);
  CHECK(end.steps[1].empty());
  CHECK(end.terminated[1] == 1.0);
}

TEST_CASE("return rate") {
  CHECK(return_rate(return_heavy(), "A") == doctest::Approx(0.8));
  PathMultiset chain;
  chain.add({"A", "B", "C"});
  CHECK(return_rate(chain, "A") == 0.0);
  PathMultiset ping;
  ping.add({"A", "B", "A"}, 9);
  CHECK(return_rate(ping, "A") == 1.0);
}

TEST_CASE("both modes agree up to one step and conserve mass") {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 50; ++i) {
    auto s = trajnet::testing::random_corpus(rng);
    auto t1 = first_order(s);
    for (const auto& source : s.labels()) {
      auto e = empirical_diffusion(s, source, 4);
      auto m = markovian_diffusion(t1, source, 4);
      CHECK(e.steps[0] == m.steps[0]);
      CHECK(e.steps[1] == m.steps[1]);
      for (const auto* tr : {&e, &m}) {
        for (std::size_t t = 0; t < tr->steps.size(); ++t) {
          double sum = tr->terminated[t];
          for (const auto& [l, p] : tr->steps[t]) sum += p;
          CHECK(std::abs(sum - 1.0) <= 1e-12);
        }
      }
    }
  }
}

TEST_CASE("alluvial export") {
  const auto s = careers_corpus();
  auto e = empirical_diffusion(s, "A", 2);
  auto m = markovian_diffusion(first_order(s), "A", 2);
  auto doc = io::alluvial_export(e, m);
  CHECK(doc["source"] == "A");
  const auto& flows = doc["empirical"]["flows"];
  REQUIRE(flows.size() == 2);
  CHECK(flows[0]["from"] == "A");
  CHECK(flows[0]["to"] == "C");
  CHECK(flows[0]["mass"] == 1.0);
  CHECK(flows[1]["from"] == "C");
  CHECK(flows[1]["to"] == "D");
  CHECK(doc["markovian"]["steps"].size() == 3);

  auto zero = io::alluvial_export(empirical_diffusion(s, "A", 0), markovian_diffusion(first_order(s), "A", 0));
  CHECK(zero["empirical"]["steps"].size() == 1);
  CHECK(zero["empirical"]["flows"].empty());

  PathMultiset ping;
  ping.add({"A", "B", "A"}, 3);
  auto p = io::alluvial_export(empirical_diffusion(ping, "A", 2),
                               markovian_diffusion(first_order(ping), "A", 2));
  const auto& last = p["empirical"]["flows"][1];
  CHECK(last["to"] == "A");
  CHECK(last["return"] == true);
  CHECK(last["mass"] == 1.0);

  CHECK_THROWS_AS(io::alluvial_export(e, markovian_diffusion(first_order(s), "B", 2)), Error);
  CHECK_THROWS_AS(io::alluvial_export(e, markovian_diffusion(first_order(s), "A", 1)), Error);
}
