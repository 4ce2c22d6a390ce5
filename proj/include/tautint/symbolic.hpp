#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tautint/rational.hpp"

namespace tautint {

/// An exact element of the 4-dimensional value space spanned by the scalar
/// unit, omega^2 (self-intersection of the admissible dualizing sheaf),
/// phi (Zhang's invariant) and h_NT(x_alpha). Every intersection number the
/// library produces lives in this span.
struct SymbolicValue {
  Rational scalar;
  Rational omega2;
  Rational phi;
  Rational hnt;

  bool operator==(const SymbolicValue& other) const = default;

  bool is_zero() const {
    return scalar == 0 && omega2 == 0 && phi == 0 && hnt == 0;
  }

  bool is_pure_scalar() const { return omega2 == 0 && phi == 0 && hnt == 0; }

  SymbolicValue& operator+=(const SymbolicValue& other) {
    scalar += other.scalar;
    omega2 += other.omega2;
    phi += other.phi;
    hnt += other.hnt;
    return *this;
  }

  SymbolicValue& operator-=(const SymbolicValue& other) {
    scalar -= other.scalar;
    omega2 -= other.omega2;
    phi -= other.phi;
    hnt -= other.hnt;
    return *this;
  }

  SymbolicValue& operator*=(const Rational& c) {
    scalar *= c;
    omega2 *= c;
    phi *= c;
    hnt *= c;
    return *this;
  }

  friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) {
    a += b;
    return a;
  }

  friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) {
    a -= b;
    return a;
  }

  friend SymbolicValue operator*(const Rational& c, SymbolicValue v) {
    v *= c;
    return v;
  }
};

inline SymbolicValue scalar_value(Rational c) {
  return SymbolicValue{std::move(c), 0, 0, 0};
}

/// Exact componentwise sum of scaled values.
inline SymbolicValue linear_combine(
    const std::vector<std::pair<Rational, SymbolicValue>>& terms) {
  SymbolicValue out;
  for (const auto& [coefficient, value] : terms) {
    out += coefficient * value;
  }
  return out;
}

/// Product of two values of which at least one must be a pure scalar; the
/// basis elements themselves are never multiplied.
inline SymbolicValue product(const SymbolicValue& a, const SymbolicValue& b) {
  if (a.is_pure_scalar()) return a.scalar * b;
  if (b.is_pure_scalar()) return b.scalar * a;
  throw std::invalid_argument(
      "product: at least one factor must be a pure scalar");
}

/// User-supplied numeric stand-ins for the three basis invariants.
struct InvariantValues {
  Rational omega2;
  Rational phi;
  Rational hnt;
};

inline Rational evaluate_numeric(const SymbolicValue& v,
                                 const InvariantValues& inv) {
  return v.scalar + v.omega2 * inv.omega2 + v.phi * inv.phi + v.hnt * inv.hnt;
}

/// Reads the inequality 0 >= v (scalar part must be 0; the h_NT component is
/// ignored under the alpha = omega/(2g-2) convention) as a lower bound
/// omega^2 >= ratio * phi. Returns the ratio when the omega^2 coefficient is
/// negative, nothing otherwise.
inline std::optional<Rational> derive_phi_bound(const SymbolicValue& v) {
  if (v.scalar != 0) {
    throw std::invalid_argument(
        "derive_phi_bound: value has a nonzero scalar component");
  }
  if (v.omega2 >= 0) return std::nullopt;
  return v.phi / -v.omega2;
}

inline std::string format_value(const SymbolicValue& v) {
  return "(" + format_rational(v.scalar) + ", " + format_rational(v.omega2) +
         ", " + format_rational(v.phi) + ", " + format_rational(v.hnt) + ")";
}

}  // namespace tautint
