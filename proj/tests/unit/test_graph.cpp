#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "tautint/graph.hpp"

using namespace tautint;

namespace {

IntersectionGraph relabel(const IntersectionGraph& graph,
                          const std::vector<int>& perm) {
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : graph.edges) {
    edges.emplace_back(perm[static_cast<std::size_t>(a) - 1],
                       perm[static_cast<std::size_t>(b) - 1]);
  }
  return IntersectionGraph(graph.num_vertices, std::move(edges));
}

std::vector<std::pair<int, int>> sorted_edges(const IntersectionGraph& graph) {
  auto edges = graph.edges;
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

TEST_CASE("vertex degrees count loops twice") {
  REQUIRE(vertex_degrees(IntersectionGraph(1, {{1, 1}})) ==
          std::vector<int>{2});
  REQUIRE(vertex_degrees(IntersectionGraph(3, {{1, 2}, {2, 3}})) ==
          std::vector<int>{1, 2, 1});
  REQUIRE(vertex_degrees(IntersectionGraph(2, {{1, 2}, {1, 2}, {1, 2}})) ==
          std::vector<int>{3, 3});
}

TEST_CASE("graph validation") {
  REQUIRE_THROWS_AS(IntersectionGraph(2, {{0, 1}}), std::invalid_argument);
  REQUIRE_THROWS_AS(IntersectionGraph(2, {{1, 3}}), std::invalid_argument);
  REQUIRE_THROWS_AS(IntersectionGraph(0, {}), std::invalid_argument);
}

TEST_CASE("split_components") {
  REQUIRE(split_components(IntersectionGraph(2, {{1, 1}, {2, 2}})).size() == 2);
  REQUIRE(split_components(IntersectionGraph(2, {{1, 2}, {1, 2}, {1, 2}}))
              .size() == 1);

  const auto parts = split_components(IntersectionGraph(2, {{1, 1}}));
  REQUIRE(parts.size() == 2);
  REQUIRE(parts[0].num_vertices == 1);
  REQUIRE(parts[0].edge_count() == 1);
  REQUIRE(parts[1].num_vertices == 1);
  REQUIRE(parts[1].edge_count() == 0);  // isolated vertex
}

TEST_CASE("contract_degree_two") {
  SECTION("3-cycle becomes a loop vertex") {
    const auto reduced = contract_degree_two(
        IntersectionGraph(3, {{1, 2}, {2, 3}, {1, 3}}));
    REQUIRE(reduced.num_vertices == 1);
    REQUIRE(sorted_edges(reduced) ==
            std::vector<std::pair<int, int>>{{1, 1}});
  }

  SECTION("2-cycle becomes a loop vertex") {
    const auto reduced =
        contract_degree_two(IntersectionGraph(2, {{1, 2}, {1, 2}}));
    REQUIRE(reduced.num_vertices == 1);
    REQUIRE(sorted_edges(reduced) ==
            std::vector<std::pair<int, int>>{{1, 1}});
  }

  SECTION("loop-path-loop contracts to the two-vertex dumbbell") {
    const auto reduced = contract_degree_two(IntersectionGraph(
        4, {{1, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 4}}));
    REQUIRE(reduced.num_vertices == 2);
    REQUIRE(sorted_edges(reduced) ==
            std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}});
  }

  SECTION("loop vertices are fixed points") {
    const IntersectionGraph loop(1, {{1, 1}});
    const auto reduced = contract_degree_two(loop);
    REQUIRE(reduced.num_vertices == 1);
    REQUIRE(sorted_edges(reduced) == sorted_edges(loop));
  }
}

TEST_CASE("classify_terminal") {
  REQUIRE(classify_terminal(IntersectionGraph(1, {{1, 1}})).kind ==
          TerminalKind::Circle);
  REQUIRE(classify_terminal(IntersectionGraph(1, {{1, 1}, {1, 1}})).kind ==
          TerminalKind::FigureEight);
  REQUIRE(classify_terminal(IntersectionGraph(2, {{1, 2}, {1, 2}, {1, 2}}))
              .kind == TerminalKind::Theta);
  REQUIRE(classify_terminal(IntersectionGraph(2, {{1, 1}, {1, 2}, {2, 2}}))
              .kind == TerminalKind::Dumbbell);
  REQUIRE(classify_terminal(IntersectionGraph(1, {})).kind ==
          TerminalKind::Vanishing);
  REQUIRE(classify_terminal(IntersectionGraph(2, {{1, 2}, {1, 2}})).kind ==
          TerminalKind::Vanishing);
}

TEST_CASE("evaluate_graph on the stated cases") {
  const Rational g2(2);
  REQUIRE(evaluate_graph(IntersectionGraph(1, {{1, 1}}), g2) ==
          scalar_value(Rational(-4)));
  REQUIRE(evaluate_graph(IntersectionGraph(3, {{1, 2}}), g2).is_zero());

  SECTION("disjoint 2-cycle and 3-cycle give 4g^2 at any genus") {
    const IntersectionGraph graph(
        5, {{1, 2}, {1, 2}, {3, 4}, {4, 5}, {3, 5}});
    for (const Rational& g :
         {Rational(1), Rational(2), make_rational(7, 2), Rational(0)}) {
      REQUIRE(evaluate_graph(graph, g) == scalar_value(4 * g * g));
    }
  }

  SECTION("theta at genus 2") {
    const auto value =
        evaluate_graph(IntersectionGraph(2, {{1, 2}, {1, 2}, {1, 2}}), g2);
    REQUIRE(value ==
            SymbolicValue{0, make_rational(5, 2), -1, 6});
  }

  SECTION("dumbbell next to a circle picks up one -2g factor") {
    const IntersectionGraph graph(
        3, {{1, 1}, {1, 2}, {2, 2}, {3, 3}});
    for (const Rational& g : {Rational(2), Rational(5)}) {
      const SymbolicValue expected{
          0, 0, 0, -2 * g * (-4 * (g - 1) * (g - 1))};
      REQUIRE(evaluate_graph(graph, g) == expected);
    }
  }

  SECTION("zero-edge graphs vanish") {
    REQUIRE(evaluate_graph(IntersectionGraph(1, {}), g2).is_zero());
    REQUIRE(evaluate_graph(IntersectionGraph(4, {}), g2).is_zero());
  }

  SECTION("genus 1 is singular exactly for non-scalar terminals") {
    const Rational g1(1);
    REQUIRE(evaluate_graph(IntersectionGraph(1, {{1, 1}}), g1) ==
            scalar_value(Rational(-2)));
    REQUIRE_THROWS_AS(
        evaluate_graph(IntersectionGraph(1, {{1, 1}, {1, 1}}), g1),
        SingularGenusError);
    REQUIRE_THROWS_AS(
        evaluate_graph(IntersectionGraph(2, {{1, 1}, {1, 2}, {2, 2}}), g1),
        SingularGenusError);
    REQUIRE_THROWS_AS(
        evaluate_graph(IntersectionGraph(2, {{1, 2}, {1, 2}, {1, 2}}), g1),
        SingularGenusError);
  }
}

TEST_CASE("reduction properties on random graphs") {
  tautint::detail::Rng rng(41);
  const Rational g(3);
  int special_seen = 0;
  for (int i = 0; i < 400; ++i) {
    const auto graph = testutil::random_graph(rng, 7);
    const auto value = evaluate_graph(graph, g);

    // contraction invariance, including randomized removal orders
    const auto contracted = contract_degree_two(graph, [&rng](std::size_t n) {
      return static_cast<std::size_t>(rng.below(static_cast<long>(n)));
    });
    REQUIRE(evaluate_graph(contracted, g) == value);

    // relabeling invariance
    std::vector<int> perm(static_cast<std::size_t>(graph.num_vertices));
    std::iota(perm.begin(), perm.end(), 1);
    for (std::size_t a = perm.size(); a > 1; --a) {
      std::swap(perm[a - 1],
                perm[static_cast<std::size_t>(rng.below(static_cast<long>(a)))]);
    }
    REQUIRE(evaluate_graph(relabel(graph, perm), g) == value);

    // component multiplicativity (at most one non-scalar factor)
    SymbolicValue product_value = scalar_value(Rational(1));
    for (const auto& component : split_components(graph)) {
      product_value = product(product_value, evaluate_graph(component, g));
    }
    REQUIRE(product_value == value);

    // terminal-shape exhaustiveness under the degree filter
    const auto degrees = vertex_degrees(graph);
    const bool min_degree_two =
        std::all_of(degrees.begin(), degrees.end(), [](int d) { return d >= 2; });
    const auto cls = classify_graph(graph);
    if (min_degree_two && graph.edge_count() == graph.num_vertices) {
      REQUIRE(cls.outcome == GraphClass::Outcome::Circles);
    }
    if (min_degree_two && graph.edge_count() == graph.num_vertices + 1) {
      REQUIRE(cls.outcome == GraphClass::Outcome::Special);
      REQUIRE(cls.special != TerminalKind::Vanishing);
      // the single-path/triple-path parity: a two-path join never appears
      REQUIRE((cls.special == TerminalKind::FigureEight ||
               cls.special == TerminalKind::Dumbbell ||
               cls.special == TerminalKind::Theta));
      ++special_seen;
    }
  }
  REQUIRE(special_seen > 0);
}
