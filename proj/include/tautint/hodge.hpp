#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tautint/detail/parallel.hpp"
#include "tautint/engine.hpp"
#include "tautint/heights.hpp"
#include "tautint/symbolic.hpp"

namespace tautint {

/// Symmetric coefficient matrix defining the auxiliary bundle
/// M = sum_{j,k} t_{jk} m_j m_k D_{jk} (ordered sum, so an unordered
/// off-diagonal edge with weight w is stored as t_{jk} = t_{kj} = w/2).
struct BoundMatrix {
  int size = 0;
  std::vector<Rational> entries;  // row-major size*size

  BoundMatrix() = default;

  BoundMatrix(int rank, std::vector<Rational> row_major)
      : size(rank), entries(std::move(row_major)) {
    if (size < 1) throw std::invalid_argument("bound matrix: rank must be >= 1");
    if (entries.size() != static_cast<std::size_t>(size) * size) {
      throw std::invalid_argument("bound matrix: wrong entry count");
    }
    for (int j = 1; j <= size; ++j) {
      for (int k = j + 1; k <= size; ++k) {
        if (at(j, k) != at(k, j)) {
          throw std::invalid_argument("bound matrix: not symmetric");
        }
      }
    }
  }

  const Rational& at(int j, int k) const {
    return entries[static_cast<std::size_t>(j - 1) * size + (k - 1)];
  }

  Rational& at(int j, int k) {
    return entries[static_cast<std::size_t>(j - 1) * size + (k - 1)];
  }

  bool operator==(const BoundMatrix& other) const = default;
};

/// Strict ordering used for deterministic tie-breaking in searches.
inline bool lexicographically_less(const BoundMatrix& a, const BoundMatrix& b) {
  if (a.size != b.size) return a.size < b.size;
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    if (a.entries[i] != b.entries[i]) return a.entries[i] < b.entries[i];
  }
  return false;
}

/// The trace-type balance g * sum_j t_jj = sum_{j != k} t_jk under which the
/// Hodge-index inequality applies.
inline bool check_constraint(const BoundMatrix& matrix, const Rational& genus) {
  Rational trace = 0;
  Rational off_diagonal = 0;
  for (int j = 1; j <= matrix.size; ++j) {
    for (int k = 1; k <= matrix.size; ++k) {
      if (j == k) {
        trace += matrix.at(j, j);
      } else {
        off_diagonal += matrix.at(j, k);
      }
    }
  }
  return genus * trace == off_diagonal;
}

namespace detail {

inline void check_dimensions(const PullbackSpec& spec,
                             const BoundMatrix& matrix) {
  validate(spec);
  if (matrix.size != spec.rank()) {
    throw std::invalid_argument(
        "bound matrix rank does not match the multiplier vector");
  }
}

// Fills factor l with the engine-normalized coefficients of M, which is
// 2 t_{jk} m_j m_k under the half-normalization of CoefficientTensor.
inline void fill_bound_factor(CoefficientTensor& tensor, int l,
                              const PullbackSpec& spec,
                              const BoundMatrix& matrix) {
  const int r = spec.rank();
  for (int j = 1; j <= r; ++j) {
    for (int k = j; k <= r; ++k) {
      tensor.set(l, j, k,
                 2 * matrix.at(j, k) *
                     Rational(Integer(spec.multipliers[j - 1]) *
                              spec.multipliers[k - 1]));
    }
  }
}

inline void fill_pullback_factor(CoefficientTensor& tensor, int l,
                                 const PullbackSpec& spec) {
  const int r = spec.rank();
  for (int j = 1; j <= r; ++j) {
    for (int k = j; k <= r; ++k) {
      tensor.set(l, j, k,
                 Rational(-Integer(spec.multipliers[j - 1]) *
                          spec.multipliers[k - 1]));
    }
  }
}

}  // namespace detail

/// Tensor of the r+1 factor product: r-1 pullback factors followed by two
/// copies of the auxiliary bundle M.
inline CoefficientTensor build_hodge_tensor(const PullbackSpec& spec,
                                            const BoundMatrix& matrix) {
  detail::check_dimensions(spec, matrix);
  const int r = spec.rank();
  CoefficientTensor tensor(r, r + 1);
  for (int l = 1; l <= r - 1; ++l) detail::fill_pullback_factor(tensor, l, spec);
  detail::fill_bound_factor(tensor, r, spec, matrix);
  detail::fill_bound_factor(tensor, r + 1, spec, matrix);
  return tensor;
}

/// Tensor of the r factor product: r-1 pullback factors and one copy of M.
inline CoefficientTensor build_pairing_tensor(const PullbackSpec& spec,
                                              const BoundMatrix& matrix) {
  detail::check_dimensions(spec, matrix);
  const int r = spec.rank();
  CoefficientTensor tensor(r, r);
  for (int l = 1; l <= r - 1; ++l) detail::fill_pullback_factor(tensor, l, spec);
  detail::fill_bound_factor(tensor, r, spec, matrix);
  return tensor;
}

/// The arithmetic number <(pullback)^{r-1}, M^2>. Nonpositive whenever the
/// constraint holds; its phi/omega^2 ratio is the bound extracted by
/// derive_phi_bound.
inline SymbolicValue hodge_form(const PullbackSpec& spec,
                                const BoundMatrix& matrix,
                                const Rational& genus, int jobs = 1) {
  return intersect_arithmetic(build_hodge_tensor(spec, matrix), genus, jobs);
}

/// Closed form of the geometric pairing <(pullback)^{r-1}, M>:
/// -2 (r-1)! (g)_{r-1} prod m_j^2 (g sum t_jj - sum_{j!=k} t_jk).
/// Zero exactly on constraint-satisfying matrices when (g)_{r-1} != 0.
inline Rational geometric_pairing(const PullbackSpec& spec,
                                  const BoundMatrix& matrix,
                                  const Rational& genus) {
  detail::check_dimensions(spec, matrix);
  const int r = spec.rank();
  Rational trace = 0;
  Rational off_diagonal = 0;
  for (int j = 1; j <= r; ++j) {
    for (int k = 1; k <= r; ++k) {
      if (j == k) {
        trace += matrix.at(j, j);
      } else {
        off_diagonal += matrix.at(j, k);
      }
    }
  }
  Integer square_product = 1;
  for (long m : spec.multipliers) square_product *= Integer(m) * m;
  return Rational(-2 * factorial(r - 1) * square_product) *
         falling_factorial(genus, r - 1) * (genus * trace - off_diagonal);
}

/// The signed cycle matrix: unordered edge (j, j+1) weighted (-1)^(j+1) for
/// j = 1..r-1 plus the closing edge (1, r) weighted (-1)^(r+1), stored
/// halved for the ordered-sum convention. Satisfies the constraint at every
/// genus; requires even r >= 4.
inline BoundMatrix alternating_cycle_matrix(int rank,
                                            const PullbackSpec& spec) {
  detail::validate(spec);
  if (rank % 2 != 0 || rank < 4) {
    throw std::invalid_argument(
        "alternating matrix: rank must be even and >= 4");
  }
  if (spec.rank() != rank) {
    throw std::invalid_argument(
        "alternating matrix: rank does not match the multiplier vector");
  }
  BoundMatrix matrix(rank,
                     std::vector<Rational>(static_cast<std::size_t>(rank) *
                                           rank));
  const Rational half(1, 2);
  for (int j = 1; j < rank; ++j) {
    const Rational weight = (j % 2 == 1) ? half : -half;
    matrix.at(j, j + 1) = weight;
    matrix.at(j + 1, j) = weight;
  }
  const Rational closing = (rank % 2 == 0) ? -half : half;
  matrix.at(1, rank) = closing;
  matrix.at(rank, 1) = closing;
  return matrix;
}

struct SearchHit {
  BoundMatrix matrix;
  Rational ratio;
};

/// Filters the candidates by the constraint, evaluates the phi/omega^2 ratio
/// of their forms and returns the maximum with a witness. Ties go to the
/// lexicographically smallest matrix; candidates without a bound (the
/// omega^2 coefficient is not negative) are skipped.
inline std::optional<SearchHit> bound_search(
    const PullbackSpec& spec, const Rational& genus,
    const std::vector<BoundMatrix>& candidates, int jobs = 1) {
  detail::validate(spec);
  using Partial = std::optional<SearchHit>;
  const auto partials = detail::run_chunked<Partial>(
      candidates.size(), jobs, [&](std::size_t begin, std::size_t end) {
        Partial best;
        for (std::size_t i = begin; i < end; ++i) {
          const BoundMatrix& candidate = candidates[i];
          if (candidate.size != spec.rank()) continue;
          if (!check_constraint(candidate, genus)) continue;
          const auto ratio =
              derive_phi_bound(hodge_form(spec, candidate, genus));
          if (!ratio) continue;
          if (!best || *ratio > best->ratio ||
              (*ratio == best->ratio &&
               lexicographically_less(candidate, best->matrix))) {
            best = SearchHit{candidate, *ratio};
          }
        }
        return best;
      });
  std::optional<SearchHit> best;
  for (const auto& partial : partials) {
    if (!partial) continue;
    if (!best || partial->ratio > best->ratio ||
        (partial->ratio == best->ratio &&
         lexicographically_less(partial->matrix, best->matrix))) {
      best = partial;
    }
  }
  return best;
}

}  // namespace tautint
