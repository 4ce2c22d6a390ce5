#pragma once

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tautint/errors.hpp"
#include "tautint/rational.hpp"
#include "tautint/symbolic.hpp"

namespace tautint {

/// Undirected multigraph with loops on vertices 1..num_vertices. Edge order
/// never affects any computed result.
struct IntersectionGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // stored with first <= second

  IntersectionGraph() = default;

  IntersectionGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
      : num_vertices(vertex_count), edges(std::move(edge_list)) {
    if (num_vertices < 1) {
      throw std::invalid_argument("graph: need at least one vertex");
    }
    for (auto& [a, b] : edges) {
      if (a < 1 || a > num_vertices || b < 1 || b > num_vertices) {
        throw std::invalid_argument("graph: edge endpoint out of range");
      }
      if (a > b) std::swap(a, b);
    }
  }

  int edge_count() const { return static_cast<int>(edges.size()); }
};

enum class TerminalKind { Circle, FigureEight, Dumbbell, Theta, Vanishing };

struct TerminalForm {
  TerminalKind kind = TerminalKind::Vanishing;
  int circle_count_context = 0;  // b0 bookkeeping filled in by the evaluator
};

inline const char* terminal_name(TerminalKind kind) {
  switch (kind) {
    case TerminalKind::Circle: return "circle";
    case TerminalKind::FigureEight: return "figure-eight";
    case TerminalKind::Dumbbell: return "dumbbell";
    case TerminalKind::Theta: return "theta";
    case TerminalKind::Vanishing: return "vanishing";
  }
  return "?";
}

/// Degree of each vertex; a loop contributes 2 to its vertex.
inline std::vector<int> vertex_degrees(const IntersectionGraph& graph) {
  std::vector<int> degree(static_cast<std::size_t>(graph.num_vertices), 0);
  for (const auto& [a, b] : graph.edges) {
    degree[static_cast<std::size_t>(a) - 1] += 1;
    degree[static_cast<std::size_t>(b) - 1] += 1;
  }
  return degree;
}

namespace detail {

// Working form during reduction: vertices keep their original labels.
struct LooseGraph {
  std::vector<int> vertices;  // ascending
  std::vector<std::pair<int, int>> edges;
};

inline LooseGraph to_loose(const IntersectionGraph& graph) {
  LooseGraph loose;
  loose.vertices.resize(static_cast<std::size_t>(graph.num_vertices));
  std::iota(loose.vertices.begin(), loose.vertices.end(), 1);
  loose.edges = graph.edges;
  return loose;
}

// Relabels surviving vertices 1..k by ascending original label.
inline IntersectionGraph compact(const LooseGraph& loose) {
  std::unordered_map<int, int> label;
  int next = 1;
  for (int v : loose.vertices) label[v] = next++;
  std::vector<std::pair<int, int>> edges;
  edges.reserve(loose.edges.size());
  for (const auto& [a, b] : loose.edges) {
    edges.emplace_back(label.at(a), label.at(b));
  }
  return IntersectionGraph(static_cast<int>(loose.vertices.size()),
                           std::move(edges));
}

inline std::vector<int> eligible_contractions(const LooseGraph& loose) {
  std::unordered_map<int, int> degree;
  std::unordered_map<int, bool> has_loop;
  for (int v : loose.vertices) {
    degree[v] = 0;
    has_loop[v] = false;
  }
  for (const auto& [a, b] : loose.edges) {
    degree[a] += 1;
    degree[b] += 1;
    if (a == b) has_loop[a] = true;
  }
  std::vector<int> eligible;
  for (int v : loose.vertices) {
    if (degree[v] == 2 && !has_loop[v]) eligible.push_back(v);
  }
  return eligible;
}

// Removes one degree-2 non-loop vertex, splicing its two edges into one.
inline void contract_vertex(LooseGraph& loose, int v) {
  std::vector<int> other_ends;
  std::vector<std::pair<int, int>> kept;
  kept.reserve(loose.edges.size());
  for (const auto& [a, b] : loose.edges) {
    if (a == v) {
      other_ends.push_back(b);
    } else if (b == v) {
      other_ends.push_back(a);
    } else {
      kept.push_back({a, b});
    }
  }
  if (other_ends.size() != 2) {
    throw std::logic_error("contract: vertex does not have two edge slots");
  }
  int a = other_ends[0];
  int b = other_ends[1];
  if (a > b) std::swap(a, b);
  kept.push_back({a, b});
  loose.edges = std::move(kept);
  loose.vertices.erase(
      std::remove(loose.vertices.begin(), loose.vertices.end(), v),
      loose.vertices.end());
}

// pick(count) selects which of the currently eligible vertices (ascending
// order) goes next; the default takes the smallest. Exposed so tests can
// randomize the removal order.
inline LooseGraph contract_loose(
    LooseGraph loose, const std::function<std::size_t(std::size_t)>& pick) {
  for (;;) {
    const std::vector<int> eligible = eligible_contractions(loose);
    if (eligible.empty()) return loose;
    const std::size_t index = pick ? pick(eligible.size()) % eligible.size()
                                   : 0;
    contract_vertex(loose, eligible[index]);
  }
}

inline std::vector<LooseGraph> split_loose(const LooseGraph& loose) {
  std::unordered_map<int, int> root;
  for (int v : loose.vertices) root[v] = v;
  const std::function<int(int)> find = [&](int v) {
    while (root[v] != v) {
      root[v] = root[root[v]];
      v = root[v];
    }
    return v;
  };
  for (const auto& [a, b] : loose.edges) {
    root[find(a)] = find(b);
  }
  std::unordered_map<int, std::size_t> component_of;
  std::vector<LooseGraph> components;
  for (int v : loose.vertices) {
    const int rep = find(v);
    auto it = component_of.find(rep);
    if (it == component_of.end()) {
      it = component_of.emplace(rep, components.size()).first;
      components.emplace_back();
    }
    components[it->second].vertices.push_back(v);
  }
  for (const auto& edge : loose.edges) {
    components[component_of.at(find(edge.first))].edges.push_back(edge);
  }
  return components;
}

}  // namespace detail

/// Vertex-disjoint connected subgraphs covering the graph. Each component is
/// relabeled 1..k preserving the relative order of its original vertices;
/// isolated vertices come back as singleton components.
inline std::vector<IntersectionGraph> split_components(
    const IntersectionGraph& graph) {
  std::vector<IntersectionGraph> out;
  for (const auto& loose : detail::split_loose(detail::to_loose(graph))) {
    out.push_back(detail::compact(loose));
  }
  return out;
}

/// Repeatedly removes degree-2 vertices whose two edge slots are not a
/// single loop, replacing the pair of edges by one edge, until no such
/// vertex remains. The evaluation of the result is independent of the
/// removal order; surviving vertices are relabeled 1..k ascending.
inline IntersectionGraph contract_degree_two(
    const IntersectionGraph& graph,
    const std::function<std::size_t(std::size_t)>& pick = {}) {
  return detail::compact(detail::contract_loose(detail::to_loose(graph), pick));
}

/// Pattern-matches a connected, fully contracted component against the four
/// terminal shapes. Everything else is Vanishing.
inline TerminalForm classify_terminal(const IntersectionGraph& component) {
  const int r = component.num_vertices;
  const int n = component.edge_count();
  int loops = 0;
  int cross = 0;  // non-loop edges
  for (const auto& [a, b] : component.edges) {
    if (a == b) {
      ++loops;
    } else {
      ++cross;
    }
  }
  if (r == 1 && n == 1 && loops == 1) return {TerminalKind::Circle, 0};
  if (r == 1 && n == 2 && loops == 2) return {TerminalKind::FigureEight, 0};
  if (r == 2 && n == 3) {
    if (loops == 0 && cross == 3) return {TerminalKind::Theta, 0};
    if (loops == 2 && cross == 1) {
      bool loop_at_1 = false;
      bool loop_at_2 = false;
      for (const auto& [a, b] : component.edges) {
        if (a == b && a == 1) loop_at_1 = true;
        if (a == b && a == 2) loop_at_2 = true;
      }
      if (loop_at_1 && loop_at_2) return {TerminalKind::Dumbbell, 0};
    }
  }
  return {TerminalKind::Vanishing, 0};
}

/// Reduction summary of a graph: enough to evaluate it at any genus.
struct GraphClass {
  enum class Outcome { Zero, Circles, Special };
  Outcome outcome = Outcome::Zero;
  int b0 = 0;                                     // component count
  TerminalKind special = TerminalKind::Vanishing;  // set when outcome==Special
};

namespace detail {

inline GraphClass classify_edges(int num_vertices,
                                 std::span<const std::pair<int, int>> edges) {
  const int r = num_vertices;
  const int n = static_cast<int>(edges.size());
  if (n != r && n != r + 1) return {};

  std::vector<int> degree(static_cast<std::size_t>(r), 0);
  for (const auto& [a, b] : edges) {
    degree[static_cast<std::size_t>(a) - 1] += 1;
    degree[static_cast<std::size_t>(b) - 1] += 1;
  }
  if (std::any_of(degree.begin(), degree.end(),
                  [](int d) { return d <= 1; })) {
    return {};
  }

  LooseGraph loose;
  loose.vertices.resize(static_cast<std::size_t>(r));
  std::iota(loose.vertices.begin(), loose.vertices.end(), 1);
  loose.edges.assign(edges.begin(), edges.end());

  GraphClass out;
  out.outcome = GraphClass::Outcome::Circles;
  for (auto& component : split_loose(loose)) {
    ++out.b0;
    component = contract_loose(std::move(component), {});
    const TerminalForm form = classify_terminal(compact(component));
    if (form.kind == TerminalKind::Circle) continue;
    if (form.kind == TerminalKind::Vanishing ||
        out.outcome == GraphClass::Outcome::Special) {
      // Unreachable for r in {n-1, n} with min degree >= 2.
      throw std::logic_error("graph reduction reached an impossible shape");
    }
    out.outcome = GraphClass::Outcome::Special;
    out.special = form.kind;
  }
  if (n == r && out.outcome != GraphClass::Outcome::Circles) {
    throw std::logic_error("n = r graph with a non-circle terminal");
  }
  if (n == r + 1 && out.outcome != GraphClass::Outcome::Special) {
    throw std::logic_error("n = r + 1 graph reduced to circles only");
  }
  return out;
}

inline void append_key(std::string& key, int value) {
  key.append(reinterpret_cast<const char*>(&value), sizeof(value));
}

// Shared idempotent memo: canonical edge multiset -> reduction summary.
// The summary is genus-independent, so one entry serves every evaluation.
class GraphClassCache {
 public:
  GraphClass classify(int num_vertices,
                      std::span<const std::pair<int, int>> edges) {
    thread_local std::string key;
    thread_local std::vector<std::pair<int, int>> sorted;
    sorted.assign(edges.begin(), edges.end());
    std::sort(sorted.begin(), sorted.end());
    key.clear();
    append_key(key, num_vertices);
    for (const auto& [a, b] : sorted) {
      append_key(key, a);
      append_key(key, b);
    }
    {
      std::shared_lock lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    const GraphClass computed = classify_edges(num_vertices, sorted);
    std::unique_lock lock(mutex_);
    return map_.emplace(key, computed).first->second;
  }

  static GraphClassCache& instance() {
    static GraphClassCache cache;
    return cache;
  }

 private:
  std::shared_mutex mutex_;
  std::unordered_map<std::string, GraphClass> map_;
};

}  // namespace detail

inline GraphClass classify_graph(const IntersectionGraph& graph) {
  return detail::GraphClassCache::instance().classify(graph.num_vertices,
                                                      graph.edges);
}

/// The terminal values carried by the four reduced shapes.
inline SymbolicValue terminal_value(TerminalKind kind, const Rational& g) {
  switch (kind) {
    case TerminalKind::Circle:
      return scalar_value(-2 * g);
    case TerminalKind::FigureEight:
      return SymbolicValue{0, g / (g - 1), 0, 4 * (g - 1)};
    case TerminalKind::Dumbbell:
      return SymbolicValue{0, 0, 0, -4 * (g - 1) * (g - 1)};
    case TerminalKind::Theta:
      return SymbolicValue{0, (2 * g + 1) / (2 * g - 2), -1, 6 * (g - 1)};
    case TerminalKind::Vanishing:
      return SymbolicValue{};
  }
  return SymbolicValue{};
}

inline SymbolicValue evaluate_class(const GraphClass& cls, const Rational& g) {
  switch (cls.outcome) {
    case GraphClass::Outcome::Zero:
      return SymbolicValue{};
    case GraphClass::Outcome::Circles:
      return scalar_value(pow_rational(-2 * g, cls.b0));
    case GraphClass::Outcome::Special: {
      if (g == 1) {
        throw SingularGenusError("graph value undefined at genus 1");
      }
      return pow_rational(-2 * g, cls.b0 - 1) * terminal_value(cls.special, g);
    }
  }
  return SymbolicValue{};
}

/// Value of a graph: zero unless the edge count n satisfies r in {n-1, n}
/// and every vertex has degree >= 2; (-2g)^b0 for disjoint circles; and the
/// terminal-form value times (-2g)^(b0-1) when n = r + 1.
inline SymbolicValue evaluate_graph(const IntersectionGraph& graph,
                                    const Rational& genus) {
  return evaluate_class(classify_graph(graph), genus);
}

}  // namespace tautint
