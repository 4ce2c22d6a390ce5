#pragma once

#include <stdexcept>
#include <vector>

#include "tautint/engine.hpp"
#include "tautint/errors.hpp"
#include "tautint/rational.hpp"
#include "tautint/symbolic.hpp"

namespace tautint {

/// Genus of the curve and degree of its number field.
struct CurveParams {
  long genus = 2;
  long field_degree = 1;
};

/// The nonzero integer vector m defining the sum map X^r -> J and its image
/// cycle.
struct PullbackSpec {
  std::vector<long> multipliers;

  int rank() const { return static_cast<int>(multipliers.size()); }
};

namespace detail {

inline void validate(const PullbackSpec& spec) {
  if (spec.multipliers.empty()) {
    throw std::invalid_argument("pullback: multiplier vector is empty");
  }
  for (long m : spec.multipliers) {
    if (m == 0) {
      throw std::invalid_argument("pullback: multipliers must be nonzero");
    }
  }
}

inline void validate(const CurveParams& params, long min_genus) {
  if (params.field_degree < 1) {
    throw std::invalid_argument("curve: field degree must be >= 1");
  }
  if (params.genus < min_genus) {
    if (min_genus >= 2) {
      throw SingularGenusError("curve: genus must be >= " +
                               std::to_string(min_genus));
    }
    throw std::invalid_argument("curve: genus must be >= " +
                                std::to_string(min_genus));
  }
}

struct MultiplierSums {
  Integer square_sum;    // sum of m_j^2
  Integer total;         // sum of m_j
  Integer cross_ordered; // sum over j != k of m_j m_k
  Integer square_product;
};

inline MultiplierSums multiplier_sums(const PullbackSpec& spec) {
  MultiplierSums sums{0, 0, 0, 1};
  for (long m : spec.multipliers) {
    sums.square_sum += Integer(m) * m;
    sums.total += m;
    sums.square_product *= Integer(m) * m;
  }
  sums.cross_ordered = sums.total * sums.total - sums.square_sum;
  return sums;
}

}  // namespace detail

/// Coefficient tensor of the pulled-back polarization: every factor carries
/// t_{l,j,k} = -m_j m_k.
inline CoefficientTensor pullback_tensor(const PullbackSpec& spec,
                                         int n_factors) {
  detail::validate(spec);
  if (n_factors < 1) {
    throw std::invalid_argument("pullback: need at least one factor");
  }
  const int r = spec.rank();
  CoefficientTensor tensor(r, n_factors);
  for (int l = 1; l <= n_factors; ++l) {
    for (int j = 1; j <= r; ++j) {
      for (int k = j; k <= r; ++k) {
        tensor.set(l, j, k,
                   Rational(-Integer(spec.multipliers[j - 1]) *
                            spec.multipliers[k - 1]));
      }
    }
  }
  return tensor;
}

/// r! (g)_r prod m_j^2 at an arbitrary rational genus.
inline Rational geometric_closed_form(const PullbackSpec& spec,
                                      const Rational& genus) {
  detail::validate(spec);
  const int r = spec.rank();
  const auto sums = detail::multiplier_sums(spec);
  return Rational(factorial(r) * sums.square_product) *
         falling_factorial(genus, r);
}

/// The arithmetic self-intersection of the pulled-back polarization at an
/// arbitrary rational genus other than 1.
inline SymbolicValue arithmetic_closed_form(const PullbackSpec& spec,
                                            const Rational& genus) {
  detail::validate(spec);
  if (genus == 1) {
    throw SingularGenusError("arithmetic self-intersection undefined at genus 1");
  }
  const int r = spec.rank();
  const auto sums = detail::multiplier_sums(spec);
  const Rational square_sum(sums.square_sum);
  const Rational cross(sums.cross_ordered);
  const Rational total_sq(sums.total * sums.total);

  const Rational a_part =
      3 * genus * falling_factorial(genus - 2, r - 1) / (genus - 1) *
          square_sum -
      (2 * genus + 1) * falling_factorial(genus - 3, r - 2) / (genus - 1) *
          cross;
  const Rational b_part = 2 * falling_factorial(genus - 3, r - 2) * cross;
  const Rational c_part = 12 * falling_factorial(genus - 1, r) * total_sq;

  const Rational lead =
      Rational(factorial(r + 1) * sums.square_product, 24);
  return SymbolicValue{0, lead * a_part, lead * b_part, lead * c_part};
}

inline Rational geometric_self_intersection(const PullbackSpec& spec,
                                            const CurveParams& params) {
  detail::validate(params, 1);
  return geometric_closed_form(spec, Rational(params.genus));
}

inline SymbolicValue arithmetic_self_intersection(const PullbackSpec& spec,
                                                  const CurveParams& params) {
  detail::validate(params, 2);
  return arithmetic_closed_form(spec, Rational(params.genus));
}

/// Symbolic coefficient record of the cycle height: the assembled height is
/// prefactor * (a omega^2 + b phi + c h_NT) with prefactor (g-r)/(2 d_K).
struct HeightCoefficients {
  Rational a;
  Rational b;
  Rational c;
  Rational prefactor;
};

inline HeightCoefficients height_coefficients(const PullbackSpec& spec,
                                              const CurveParams& params) {
  detail::validate(spec);
  detail::validate(params, 2);
  const int r = spec.rank();
  const Rational g(params.genus);
  if (r > params.genus) {
    throw std::out_of_range("height: rank exceeds genus");
  }
  if (r >= 2 && params.genus == 2) {
    throw std::invalid_argument(
        "height: coefficients for rank >= 2 need genus >= 3");
  }
  const auto sums = detail::multiplier_sums(spec);
  const Rational square_sum(sums.square_sum);
  const Rational total_sq(sums.total * sums.total);
  const Rational pair_sum(sums.cross_ordered / 2);  // always even

  HeightCoefficients out;
  out.prefactor = (g - r) / Rational(2 * params.field_degree);
  if (r == 1) {
    out.a = square_sum / (4 * (g - 1) * (g - 1));
    out.b = 0;
  } else {
    out.a = square_sum / (4 * (g - 1) * (g - 1)) -
            (2 * g + 1) * pair_sum / (6 * g * (g - 1) * (g - 1) * (g - 2));
    out.b = pair_sum / (3 * g * (g - 1) * (g - 2));
  }
  out.c = total_sq / g;
  return out;
}

/// Normalized height of the tautological cycle against user-supplied
/// invariant values: arithmetic self-intersection divided by
/// d_K (r+1) times the geometric self-intersection.
inline Rational neron_tate_height(const PullbackSpec& spec,
                                  const CurveParams& params,
                                  const InvariantValues& invariants) {
  detail::validate(spec);
  detail::validate(params, 2);
  if (spec.rank() > params.genus) {
    throw std::out_of_range("height: rank exceeds genus");
  }
  const Rational geometric = geometric_self_intersection(spec, params);
  const Rational numerator =
      evaluate_numeric(arithmetic_self_intersection(spec, params), invariants);
  return numerator /
         (Rational(params.field_degree) * (spec.rank() + 1) * geometric);
}

/// Effective lower bound for the cycle height as a multiple of phi.
inline Rational bogomolov_bound(const PullbackSpec& spec,
                                const CurveParams& params) {
  detail::validate(spec);
  detail::validate(params, 2);
  const int r = spec.rank();
  if (r >= params.genus) {
    throw std::out_of_range("bound: rank must be smaller than the genus");
  }
  const Rational g(params.genus);
  const Rational dk(params.field_degree);
  const auto sums = detail::multiplier_sums(spec);
  if (r == 1) {
    return Rational(sums.square_sum) / (8 * dk * (2 * g + 1));
  }
  const Rational numerator =
      (3 * g * g - 8 * g - 1) * Rational(sums.square_sum) +
      (2 * g + 1) * Rational(sums.total * sums.total);
  return (g - r) * numerator /
         (24 * g * (g - 1) * (g - 2) * (2 * g + 1) * dk);
}

/// Local lower bound for phi at a finite place, from the counts of
/// non-separating (delta0) and separating (deltas[j-1], split of genus j)
/// double points on the reduction.
inline Rational phi_local_lower_bound(long genus, const Rational& delta0,
                                      const std::vector<Rational>& deltas) {
  if (genus < 2) {
    throw std::invalid_argument("phi bound: genus must be >= 2");
  }
  if (static_cast<long>(deltas.size()) > genus / 2) {
    throw std::invalid_argument("phi bound: too many separating counts");
  }
  if (delta0 < 0) {
    throw std::invalid_argument("phi bound: counts must be nonnegative");
  }
  const Rational g(genus);
  Rational out = (g - 1) / (2 * g * (7 * g + 5)) * delta0;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    if (deltas[i] < 0) {
      throw std::invalid_argument("phi bound: counts must be nonnegative");
    }
    const Rational j(static_cast<long>(i) + 1);
    out += 2 * j * (g - j) / g * deltas[i];
  }
  return out;
}

}  // namespace tautint
