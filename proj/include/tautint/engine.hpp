#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tautint/combinatorics.hpp"
#include "tautint/detail/parallel.hpp"
#include "tautint/graph.hpp"
#include "tautint/symbolic.hpp"

namespace tautint {

struct TensorEntry {
  int j = 0;
  int k = 0;
  Rational value;
};

/// Symmetric rational coefficients t_{l,j,k} for 1 <= l <= n and
/// 1 <= j,k <= r, defining the bundle list M_l = 1/2 sum t_{l,j,k} D_{jk}.
/// Setting (l,j,k) always sets (l,k,j) as well.
class CoefficientTensor {
 public:
  CoefficientTensor(int rank, int factor_count)
      : r_(rank), n_(factor_count) {
    if (r_ < 1) throw std::invalid_argument("tensor: rank must be >= 1");
    if (n_ < 0) throw std::invalid_argument("tensor: factor count must be >= 0");
    data_.resize(static_cast<std::size_t>(n_) * r_ * r_);
  }

  int rank() const { return r_; }
  int factor_count() const { return n_; }

  void set(int l, int j, int k, Rational value) {
    check_indices(l, j, k);
    data_[index(l, j, k)] = value;
    data_[index(l, k, j)] = std::move(value);
  }

  const Rational& at(int l, int j, int k) const {
    check_indices(l, j, k);
    return data_[index(l, j, k)];
  }

  /// All ordered pairs (j,k) with a nonzero coefficient in factor l.
  std::vector<TensorEntry> nonzero_entries(int l) const {
    std::vector<TensorEntry> out;
    for (int j = 1; j <= r_; ++j) {
      for (int k = 1; k <= r_; ++k) {
        const Rational& t = at(l, j, k);
        if (t != 0) out.push_back({j, k, t});
      }
    }
    return out;
  }

  bool operator==(const CoefficientTensor& other) const = default;

 private:
  void check_indices(int l, int j, int k) const {
    if (l < 1 || l > n_ || j < 1 || j > r_ || k < 1 || k > r_) {
      throw std::invalid_argument("tensor: index out of range");
    }
  }

  std::size_t index(int l, int j, int k) const {
    return (static_cast<std::size_t>(l - 1) * r_ + (j - 1)) * r_ + (k - 1);
  }

  int r_;
  int n_;
  std::vector<Rational> data_;
};

namespace detail {

inline int encode_class(const GraphClass& cls) {
  // kind slot 0 marks the all-circles outcome.
  const int kind_slot = cls.outcome == GraphClass::Outcome::Circles
                            ? 0
                            : static_cast<int>(cls.special);
  return cls.b0 * 8 + kind_slot;
}

inline GraphClass decode_class(int code) {
  GraphClass cls;
  cls.b0 = code / 8;
  const int kind_slot = code % 8;
  if (kind_slot == 0) {
    cls.outcome = GraphClass::Outcome::Circles;
  } else {
    cls.outcome = GraphClass::Outcome::Special;
    cls.special = static_cast<TerminalKind>(kind_slot);
  }
  return cls;
}

// Sums coefficient products per reduction class for one slice of the first
// factor's entries.
inline std::map<int, Rational> expand_slice(
    int rank, const std::vector<std::vector<TensorEntry>>& levels,
    std::size_t first_begin, std::size_t first_end) {
  const std::size_t depth = levels.size();
  std::map<int, Rational> buckets;
  std::vector<std::pair<int, int>> edges(depth);
  std::vector<Rational> coefficient(depth + 1);
  coefficient[0] = 1;
  auto& cache = GraphClassCache::instance();

  const std::function<void(std::size_t)> descend = [&](std::size_t level) {
    if (level == depth) {
      const GraphClass cls = cache.classify(rank, edges);
      if (cls.outcome == GraphClass::Outcome::Zero) return;
      buckets[encode_class(cls)] += coefficient[depth];
      return;
    }
    const std::size_t begin = level == 0 ? first_begin : 0;
    const std::size_t end = level == 0 ? first_end : levels[level].size();
    for (std::size_t i = begin; i < end; ++i) {
      const TensorEntry& entry = levels[level][i];
      coefficient[level + 1] = coefficient[level] * entry.value;
      edges[level] = {std::min(entry.j, entry.k), std::max(entry.j, entry.k)};
      descend(level + 1);
    }
  };
  descend(0);
  return buckets;
}

}  // namespace detail

/// Multilinear expansion of the intersection product into graphs: every
/// assignment of one ordered pair per factor contributes the product of its
/// 1/2 t coefficients times the value of the graph with those edges. This is
/// the oracle the closed-form engine is checked against.
inline SymbolicValue expand_bruteforce(const CoefficientTensor& tensor,
                                       const Rational& genus, int jobs = 1) {
  const int r = tensor.rank();
  const int n = tensor.factor_count();
  if (n != r && n != r + 1) {
    // Every expansion graph has r outside {edges-1, edges}.
    return SymbolicValue{};
  }
  std::vector<std::vector<TensorEntry>> levels;
  levels.reserve(static_cast<std::size_t>(n));
  for (int l = 1; l <= n; ++l) {
    levels.push_back(tensor.nonzero_entries(l));
    if (levels.back().empty()) return SymbolicValue{};
  }

  const auto partials = detail::run_chunked<std::map<int, Rational>>(
      levels[0].size(), jobs, [&](std::size_t begin, std::size_t end) {
        return detail::expand_slice(r, levels, begin, end);
      });
  std::map<int, Rational> buckets;
  for (const auto& partial : partials) {
    for (const auto& [code, sum] : partial) buckets[code] += sum;
  }

  SymbolicValue out;
  for (const auto& [code, sum] : buckets) {
    out += sum * evaluate_class(detail::decode_class(code), genus);
  }
  out *= pow_rational(Rational(1, 2), n);
  return out;
}

namespace detail {

// (1/|B|) * sum over all cyclic orders sigma of B of the product of
// t_{tau(sigma(j)), sigma(j), sigma(j+1)} around the circle.
inline Rational circle_factor(const CoefficientTensor& tensor,
                              const std::vector<int>& tau,
                              const std::vector<int>& block) {
  const int s = static_cast<int>(block.size());
  Rational sum = 0;
  CyclicOrderStream orders(block);
  while (auto sigma = orders.next()) {
    Rational term = 1;
    for (int j = 0; j < s; ++j) {
      const int from = sigma->image[static_cast<std::size_t>(j)];
      const int to = sigma->image[static_cast<std::size_t>((j + 1) % s)];
      const Rational& t =
          tensor.at(tau[static_cast<std::size_t>(from) - 1], from, to);
      if (t == 0) {
        term = 0;
        break;
      }
      term *= t;
    }
    sum += term;
  }
  return sum / s;
}

struct TailSums {
  Rational degree4;      // one degree-4 vertex (figure-eight family)
  Rational single_path;  // two degree-3 vertices, one connecting path
  Rational triple_path;  // two degree-3 vertices, three connecting paths
};

// Tail sums over the distinguished block: the cyclic order contributes the
// open path sigma(1)..sigma(0); the two extra edges leave sigma(0) and
// sigma(1). For the degree-4 shape both extra edges end at the same element
// k. For the two-vertex shapes they end at sigma(a), sigma(b) with
// 1 <= a < b <= |B|: the single-path shape attaches sigma(0) to sigma(b) and
// the bundle tau(r+1) to sigma(a), the triple-path shape the other way
// around. The expansion oracle pins this assignment.
inline TailSums block_tails(const CoefficientTensor& tensor,
                            const std::vector<int>& tau,
                            const std::vector<int>& block) {
  const int s = static_cast<int>(block.size());
  const int last_bundle = tau.back();
  TailSums sums;
  CyclicOrderStream orders(block);
  while (auto sigma = orders.next()) {
    Rational path = 1;
    bool dead = false;
    for (int i = 1; i < s; ++i) {
      const int from = sigma->at(i);
      const int to = sigma->at(i + 1);
      const Rational& t =
          tensor.at(tau[static_cast<std::size_t>(from) - 1], from, to);
      if (t == 0) {
        dead = true;
        break;
      }
      path *= t;
    }
    if (dead) continue;
    const int v0 = sigma->at(0);
    const int v1 = sigma->at(1);
    const int bundle0 = tau[static_cast<std::size_t>(v0) - 1];
    for (int k : block) {
      const Rational& t1 = tensor.at(bundle0, v0, k);
      if (t1 == 0) continue;
      const Rational& t2 = tensor.at(last_bundle, v1, k);
      if (t2 == 0) continue;
      sums.degree4 += path * t1 * t2;
    }
    for (int a = 1; a < s; ++a) {
      for (int b = a + 1; b <= s; ++b) {
        const int va = sigma->at(a);
        const int vb = sigma->at(b);
        const Rational& to_b = tensor.at(bundle0, v0, vb);
        const Rational& from_a = tensor.at(last_bundle, v1, va);
        if (to_b != 0 && from_a != 0) {
          sums.single_path += path * to_b * from_a;
        }
        const Rational& to_a = tensor.at(bundle0, v0, va);
        const Rational& from_b = tensor.at(last_bundle, v1, vb);
        if (to_a != 0 && from_b != 0) {
          sums.triple_path += path * to_a * from_b;
        }
      }
    }
  }
  return sums;
}

}  // namespace detail

/// Closed-form geometric intersection number: the double sum over
/// permutations tau of the factors and partitions pi of the vertices of
/// (-g)^|pi| times the product of circle factors of the blocks. Exact at
/// every rational g, including g = 1.
inline Rational intersect_geometric(const CoefficientTensor& tensor,
                                    const Rational& genus, int jobs = 1) {
  const int r = tensor.rank();
  if (tensor.factor_count() != r) {
    throw std::invalid_argument(
        "geometric intersection needs exactly rank many factors");
  }
  if (r > 8) {
    throw std::invalid_argument("rank above 8 is out of scope");
  }
  const auto permutations = all_permutations(r);
  const auto partitions = all_set_partitions(r);
  std::vector<Rational> sign_power(static_cast<std::size_t>(r) + 1);
  sign_power[0] = 1;
  for (std::size_t i = 1; i < sign_power.size(); ++i) {
    sign_power[i] = sign_power[i - 1] * -genus;
  }

  const std::size_t total = permutations.size() * partitions.size();
  const auto partials = detail::run_chunked<Rational>(
      total, jobs, [&](std::size_t begin, std::size_t end) {
        Rational acc = 0;
        for (std::size_t idx = begin; idx < end; ++idx) {
          const auto& tau = permutations[idx / partitions.size()];
          const auto& partition = partitions[idx % partitions.size()];
          Rational term = 1;
          for (const auto& block : partition.blocks) {
            const Rational factor = detail::circle_factor(tensor, tau, block);
            if (factor == 0) {
              term = 0;
              break;
            }
            term *= factor;
          }
          if (term != 0) {
            acc += term *
                   sign_power[static_cast<std::size_t>(partition.block_count())];
          }
        }
        return acc;
      });
  Rational out = 0;
  for (const auto& partial : partials) out += partial;
  return out;
}

struct ArithmeticCoefficients {
  Rational c1;
  Rational c2;
  Rational c3;
};

/// The three coefficient sums of the arithmetic intersection formula,
/// taken over permutations of the r+1 factors, partitions of the r
/// vertices, and a distinguished block carrying the extra edge pair.
inline ArithmeticCoefficients arithmetic_coefficients(
    const CoefficientTensor& tensor, const Rational& genus, int jobs = 1) {
  const int r = tensor.rank();
  if (tensor.factor_count() != r + 1) {
    throw std::invalid_argument(
        "arithmetic intersection needs exactly rank+1 factors");
  }
  if (r > 8) {
    throw std::invalid_argument("rank above 8 is out of scope");
  }
  if (genus == 0 || genus == 1) {
    throw SingularGenusError("arithmetic intersection undefined at genus " +
                             format_rational(genus));
  }
  const auto permutations = all_permutations(r + 1);
  const auto partitions = all_set_partitions(r);
  std::vector<Rational> sign_power(static_cast<std::size_t>(r) + 1);
  sign_power[0] = 1;
  for (std::size_t i = 1; i < sign_power.size(); ++i) {
    sign_power[i] = sign_power[i - 1] * -genus;
  }

  const std::size_t total = permutations.size() * partitions.size();
  const auto partials = detail::run_chunked<ArithmeticCoefficients>(
      total, jobs, [&](std::size_t begin, std::size_t end) {
        ArithmeticCoefficients acc;
        std::vector<Rational> prefix;
        std::vector<Rational> suffix;
        for (std::size_t idx = begin; idx < end; ++idx) {
          const auto& tau = permutations[idx / partitions.size()];
          const auto& partition = partitions[idx % partitions.size()];
          const auto& blocks = partition.blocks;
          const std::size_t count = blocks.size();

          prefix.assign(count + 1, Rational(1));
          suffix.assign(count + 1, Rational(1));
          for (std::size_t i = 0; i < count; ++i) {
            prefix[i + 1] =
                prefix[i] * detail::circle_factor(tensor, tau, blocks[i]);
          }
          for (std::size_t i = count; i-- > 0;) {
            suffix[i] = suffix[i + 1] *
                        detail::circle_factor(tensor, tau, blocks[i]);
          }
          const Rational& sign =
              sign_power[static_cast<std::size_t>(partition.block_count()) - 1];

          for (std::size_t i = 0; i < count; ++i) {
            const Rational base = prefix[i] * suffix[i + 1];
            if (base == 0) continue;
            const detail::TailSums tails =
                detail::block_tails(tensor, tau, blocks[i]);
            const Rational weight = sign * base;
            acc.c1 += weight * tails.degree4;
            acc.c2 += weight * tails.single_path;
            acc.c3 += weight * tails.triple_path;
          }
        }
        return acc;
      });
  ArithmeticCoefficients out;
  for (const auto& partial : partials) {
    out.c1 += partial.c1;
    out.c2 += partial.c2;
    out.c3 += partial.c3;
  }
  return out;
}

/// Closed-form arithmetic intersection number; the scalar component is
/// always zero. Requires factor count = rank + 1 and g not in {0, 1}.
inline SymbolicValue intersect_arithmetic(const CoefficientTensor& tensor,
                                          const Rational& genus,
                                          int jobs = 1) {
  const auto [c1, c2, c3] = arithmetic_coefficients(tensor, genus, jobs);
  SymbolicValue out;
  out.omega2 = (3 * genus * c1 + (2 * genus + 1) * c3) / (24 * (genus - 1));
  out.phi = -c3 / 12;
  out.hnt = (genus - 1) * (c1 + c3 - (genus - 1) * c2) / 2;
  return out;
}

struct IdentityReport {
  bool equal = true;
  std::optional<Rational> first_mismatch_genus;
  SymbolicValue lhs_value;
  SymbolicValue rhs_value;
};

/// Evaluates both sides at every genus in the list and reports the first
/// mismatch. Callers pick enough points to cover the degree of the
/// difference, which turns agreement into a polynomial identity.
inline IdentityReport verify_identity(
    const std::function<SymbolicValue(const Rational&)>& lhs,
    const std::function<SymbolicValue(const Rational&)>& rhs,
    const std::vector<Rational>& genus_points) {
  IdentityReport report;
  for (const Rational& g : genus_points) {
    const SymbolicValue left = lhs(g);
    const SymbolicValue right = rhs(g);
    if (!(left == right)) {
      report.equal = false;
      report.first_mismatch_genus = g;
      report.lhs_value = left;
      report.rhs_value = right;
      return report;
    }
  }
  return report;
}

}  // namespace tautint
