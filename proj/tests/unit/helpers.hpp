#pragma once

#include <vector>

#include "tautint/detail/rng.hpp"
#include "tautint/graph.hpp"
#include "tautint/rational.hpp"

namespace testutil {

// Bell numbers by the Bell triangle; independent of the partition stream.
inline std::vector<tautint::Integer> bell_numbers(int max_n) {
  std::vector<tautint::Integer> bell{1};
  std::vector<tautint::Integer> row{1};
  for (int n = 1; n <= max_n; ++n) {
    std::vector<tautint::Integer> next;
    next.reserve(row.size() + 1);
    next.push_back(row.back());
    for (const auto& value : row) {
      next.push_back(next.back() + value);
    }
    bell.push_back(next.front());
    row = std::move(next);
  }
  return bell;
}

// Direct recursive generation of permutations, used to cross-check the
// stream enumerator by set equality.
inline void permutations_recursive(std::vector<int>& pool,
                                   std::vector<int>& prefix,
                                   std::vector<std::vector<int>>& out) {
  if (pool.empty()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    prefix.push_back(pool[i]);
    std::vector<int> rest = pool;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    permutations_recursive(rest, prefix, out);
    prefix.pop_back();
  }
}

inline std::vector<std::vector<int>> permutations_by_recursion(int n) {
  std::vector<int> pool;
  for (int i = 1; i <= n; ++i) pool.push_back(i);
  std::vector<int> prefix;
  std::vector<std::vector<int>> out;
  permutations_recursive(pool, prefix, out);
  return out;
}

inline tautint::IntersectionGraph random_graph(tautint::detail::Rng& rng,
                                               int max_vertices) {
  const int r = static_cast<int>(rng.range(1, max_vertices));
  const int n = static_cast<int>(rng.range(0, r + 2));
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(static_cast<int>(rng.range(1, r)),
                       static_cast<int>(rng.range(1, r)));
  }
  return tautint::IntersectionGraph(r, std::move(edges));
}

}  // namespace testutil
