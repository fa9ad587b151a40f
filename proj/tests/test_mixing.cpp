#include <doctest.h>

#include <cmath>
#include <random>

#include "support/random_corpus.hpp"
#include "trajnet/mixing.hpp"

using namespace trajnet;
using trajnet::testing::careers_corpus;

TEST_CASE("edge entropy") {
  TransitionMatrix t(2, {{{"A", "B"}, {{{"B", "C"}, 1.0}}},
                         {{"B", "C"}, {}},
                         {{"C", "A"}, {{{"A", "B"}, 0.5}, {{"A", "C"}, 0.5}}}});
  CHECK(edge_entropy(t, {"A", "B"}) == 0.0);
  CHECK(edge_entropy(t, {"B", "C"}) == 0.0);
  CHECK(edge_entropy(t, {"C", "A"}) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(edge_entropy(t, {"Q", "R"}), Error);

  for (int n : {1, 2, 3, 7, 100, 1000}) {
    Row row;
    for (int i = 0; i < n; ++i) row[{"x" + std::to_string(i)}] = 1.0 / n;
    CHECK(std::abs(row_entropy(row) - std::log(static_cast<double>(n))) <= 1e-12);
  }
}

TEST_CASE("edge frequencies") {
  auto pi = edge_frequencies(careers_corpus());
  CHECK(pi.weights.size() == 4);
  for (const auto& [e, w] : pi.weights) CHECK(w == 0.25);

  PathMultiset ab;
  ab.add({"A", "B"});
  CHECK(edge_frequencies(ab).weights.at({"A", "B"}) == 1.0);

  PathMultiset s;
  s.add({"A", "B"}, 3);
  s.add({"B", "A"}, 1);
  auto f = edge_frequencies(s);
  CHECK(f.weights.at({"A", "B"}) == 0.75);
  CHECK(f.weights.at({"B", "A"}) == 0.25);

  PathMultiset none;
  none.add({"A"});
  CHECK_THROWS_AS(edge_frequencies(none), Error);
}

TEST_CASE("total entropy") {
  const auto s = careers_corpus();
  const auto pi = edge_frequencies(s);
  CHECK(total_entropy(transition_matrix(build_network(s, 2)), pi) == 0.0);
  CHECK(total_entropy(markovian_matrix(s), pi) ==
        doctest::Approx(0.5 * std::log(2.0)).epsilon(1e-14));

  TransitionMatrix t(2, {{{"A", "B"}, {{{"B", "A"}, 0.5}, {{"B", "C"}, 0.5}}},
                         {{"B", "A"}, {{{"A", "B"}, 0.5}, {{"A", "C"}, 0.5}}}});
  EdgeFrequency uniform{{{{"A", "B"}, 0.5}, {{"B", "A"}, 0.5}}};
  CHECK(total_entropy(t, uniform) == doctest::Approx(std::log(2.0)));

  EdgeFrequency partial{{{{"A", "B"}, 1.0}}};
  CHECK(total_entropy(t, partial) == doctest::Approx(std::log(2.0)));
  EdgeFrequency stray{{{{"Z", "Q"}, 1.0}}};
  CHECK_THROWS_AS(total_entropy(t, stray), Error);
}

TEST_CASE("entropy growth ratio") {
  auto r = entropy_growth_ratio(careers_corpus());
  CHECK(r.degenerate);
  CHECK(r.h_empirical == 0.0);
  CHECK(r.h_markovian == doctest::Approx(0.3466).epsilon(1e-4));
  REQUIRE(r.lambda.has_value());
  CHECK(std::isinf(*r.lambda));

  PathMultiset det;
  det.add({"A", "B", "C"});
  auto d = entropy_growth_ratio(det);
  CHECK(d.degenerate);
  CHECK_FALSE(d.lambda.has_value());

  PathMultiset short_paths;
  short_paths.add({"A", "B"});
  CHECK_THROWS_AS(entropy_growth_ratio(short_paths), Error);
}

TEST_CASE("exactly Markovian corpora have ratio one") {
  std::mt19937_64 rng(31);
  for (std::size_t labels = 3; labels <= 6; ++labels) {
    auto s = trajnet::testing::exactly_markovian_corpus(rng, labels);
    auto r = entropy_growth_ratio(s);
    REQUIRE(r.lambda.has_value());
    CHECK(std::abs(*r.lambda - 1.0) <= 1e-9);
  }
}

TEST_CASE("entropy is invariant under relabeling") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 30; ++i) {
    auto s = trajnet::testing::random_corpus(rng);
    if (s.max_length() < 2) continue;
    std::map<Label, Label> perm;
    const auto label_set = s.labels();
    std::vector<Label> labels(label_set.begin(), label_set.end());
    auto shuffled = labels;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    for (std::size_t j = 0; j < labels.size(); ++j) perm[labels[j]] = "p" + shuffled[j];
    auto a = entropy_growth_ratio(s);
    auto b = entropy_growth_ratio(relabel(s, perm));
    CHECK(a.h_empirical == doctest::Approx(b.h_empirical).epsilon(1e-12));
    CHECK(a.h_markovian == doctest::Approx(b.h_markovian).epsilon(1e-12));
    const auto t2 = transition_matrix(build_network(s, 2));
    for (const auto& [e, m] : a.per_edge) {
      const auto out_degree = static_cast<double>(t2.row(e)->size());
      CHECK(m.h_empirical >= 0.0);
      CHECK(m.h_empirical <= std::log(std::max(1.0, out_degree)) + 1e-12);
    }
  }
}
