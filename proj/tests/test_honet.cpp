#include <doctest.h>

#include <random>

#include "support/random_corpus.hpp"
#include "trajnet/honet.hpp"

using namespace trajnet;
using trajnet::testing::careers_corpus;

TEST_CASE("second-order network of the four career trajectories") {
  auto net = build_network(careers_corpus(), 2);
  CHECK(net.order() == 2);
  CHECK(net.nodes() == std::set<Path>{{"A", "C"}, {"C", "D"}, {"B", "C"}, {"C", "E"}});
  REQUIRE(net.edges().size() == 2);
  CHECK(net.edges().at({{"A", "C"}, {"C", "D"}}) == 2);
  CHECK(net.edges().at({{"B", "C"}, {"C", "E"}}) == 2);
}

TEST_CASE("first-order network of the four career trajectories") {
  auto net = build_network(careers_corpus(), 1);
  CHECK(net.nodes().size() == 5);
  CHECK(net.edges().size() == 4);
  CHECK(net.edges().at({{"C"}, {"D"}}) == 2);
}

TEST_CASE("single short trajectory has no second-order edge") {
  PathMultiset s;
  s.add({"A", "B"});
  auto net = build_network(s, 2);
  CHECK(net.nodes().size() == 1);
  CHECK(net.edges().empty());
}

TEST_CASE("network constructor rejects non-overlapping edges") {
  CHECK_THROWS_AS(HigherOrderNetwork(2, {{"A", "B"}, {"C", "D"}}, {{{{"A", "B"}, {"C", "D"}}, 1}}),
                  Error);
  CHECK_THROWS_AS(HigherOrderNetwork(2, {{"A"}}, {}), Error);
}

TEST_CASE("transition matrices") {
  auto t2 = transition_matrix(build_network(careers_corpus(), 2));
  CHECK(t2.at({"A", "C"}, {"C", "D"}) == 1.0);
  CHECK(t2.absorbing({"C", "D"}));

  auto t1 = transition_matrix(build_network(careers_corpus(), 1));
  CHECK(t1.at({"C"}, {"D"}) == 0.5);
  CHECK(t1.at({"C"}, {"E"}) == 0.5);
  CHECK(t1.row({"C"})->size() == 2);

  auto empty = transition_matrix(build_network(PathMultiset{}, 2));
  CHECK(empty.size() == 0);

  CHECK_THROWS_AS(TransitionMatrix(1, {{{"A"}, {{{"B"}, 0.5}}}}), Error);
}

TEST_CASE("maximum-entropy second-order matrix") {
  auto m = markovian_matrix(careers_corpus());
  CHECK(m.at({"A", "C"}, {"C", "D"}) == 0.5);
  CHECK(m.at({"A", "C"}, {"C", "E"}) == 0.5);
  CHECK(m.absorbing({"C", "D"}));

  PathMultiset chain;
  chain.add({"A", "B", "C"}, 3);
  chain.add({"B", "C"}, 1);
  auto t2 = transition_matrix(build_network(chain, 2));
  auto mm = markovian_matrix(chain);
  CHECK(mm.rows() == t2.rows());

  PathMultiset aba;
  aba.add({"A", "B", "A"});
  auto r = markovian_matrix(aba);
  CHECK(r.row({"A", "B"})->size() == 1);
  CHECK(r.at({"A", "B"}, {"B", "A"}) == 1.0);
}

TEST_CASE("maximum-entropy rows follow the product formula once normalized") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    auto s = trajnet::testing::random_corpus(rng);
    // oracle: count first-order edges by hand, weight T1(a,c) * T1(c,e), normalize
    std::map<Label, std::map<Label, double>> counts;
    for (const auto& [p, n] : s)
      for (std::size_t j = 0; j + 1 < p.size(); ++j) counts[p[j]][p[j + 1]] += static_cast<double>(n);
    auto t1 = [&](const Label& a, const Label& b) {
      double tot = 0;
      for (auto& [x, c] : counts[a]) tot += c;
      return counts[a].count(b) ? counts[a][b] / tot : 0.0;
    };
    auto m = markovian_matrix(s);
    for (const auto& [state, row] : m.rows()) {
      double norm = 0;
      for (auto& [e, c] : counts[state[1]]) norm += t1(state[0], state[1]) * t1(state[1], e);
      for (auto& [e, c] : counts[state[1]]) {
        CHECK(m.at(state, {state[1], e}) ==
              doctest::Approx(t1(state[0], state[1]) * t1(state[1], e) / norm).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("network and matrix invariants on random corpora") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 100; ++i) {
    auto s = trajnet::testing::random_corpus(rng);
    auto net2 = build_network(s, 2);
    CHECK(net2.nodes().size() == subpath_multiset(s, 1).distinct());
    CHECK(net2.edges().size() == subpath_multiset(s, 2).distinct());

    auto t2 = transition_matrix(net2);
    auto mm = markovian_matrix(s);
    for (const auto& [state, row] : t2.rows()) {
      double sum = 0;
      for (const auto& [next, p] : row) {
        sum += p;
        CHECK(mm.at(state, next) > 0.0);  // support of T2 within the Markovian support
      }
      if (!row.empty()) CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
  }
}

TEST_CASE("corpora of short paths have no second-order edges") {
  PathMultiset s;
  s.add({"A", "B"}, 3);
  s.add({"B", "C"}, 1);
  s.add({"D"}, 2);
  CHECK(build_network(s, 2).edges().empty());
}
