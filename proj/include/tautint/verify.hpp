#pragma once

#include <cstdint>
#include <iterator>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "tautint/detail/rng.hpp"
#include "tautint/engine.hpp"
#include "tautint/graph.hpp"
#include "tautint/heights.hpp"
#include "tautint/hodge.hpp"
#include "tautint/symbolic.hpp"

namespace tautint {

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

struct SuiteOptions {
  int max_r = 4;
  std::uint64_t seed = 2026;
  int jobs = 1;
};

namespace detail {

// FNV-1a over every exact result, folded in fixed case order. Reruns with a
// different parallel width must reproduce it byte for byte.
class Digest {
 public:
  void add(std::string_view text) {
    for (const unsigned char c : text) {
      hash_ ^= c;
      hash_ *= 1099511628211ULL;
    }
  }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t h = hash_;
    for (int i = 15; i >= 0; --i) {
      out[static_cast<std::size_t>(i)] = digits[h & 0xf];
      h >>= 4;
    }
    return out;
  }

 private:
  std::uint64_t hash_ = 1469598103934665603ULL;
};

class CheckBuilder {
 public:
  explicit CheckBuilder(std::string name) { result_.name = std::move(name); }

  void record(std::string_view serialized) {
    ++cases_;
    digest_.add(serialized);
  }

  void require(bool condition, const std::string& counterexample) {
    if (condition || !result_.pass) return;
    result_.pass = false;
    failure_ = counterexample;
  }

  CheckResult finish() {
    std::ostringstream detail;
    if (result_.pass) {
      detail << "cases=" << cases_ << " digest=" << digest_.hex();
    } else {
      detail << "counterexample: " << failure_;
    }
    result_.detail = detail.str();
    return std::move(result_);
  }

 private:
  CheckResult result_;
  Digest digest_;
  std::size_t cases_ = 0;
  std::string failure_;
};

inline CoefficientTensor random_tensor(int rank, int factors, Rng& rng) {
  CoefficientTensor tensor(rank, factors);
  for (int l = 1; l <= factors; ++l) {
    for (int j = 1; j <= rank; ++j) {
      for (int k = j; k <= rank; ++k) {
        tensor.set(l, j, k,
                   make_rational(rng.range(-2, 2), rng.range(1, 2)));
      }
    }
  }
  return tensor;
}

inline PullbackSpec random_spec(int rank, Rng& rng, long magnitude = 3) {
  PullbackSpec spec;
  for (int i = 0; i < rank; ++i) {
    spec.multipliers.push_back(rng.nonzero(magnitude));
  }
  return spec;
}

// Random symmetric matrix forced onto the constraint surface by solving for
// the (1,2) entry. Needs rank >= 2.
inline BoundMatrix random_constrained_matrix(int rank, const Rational& genus,
                                             Rng& rng) {
  BoundMatrix matrix(
      rank, std::vector<Rational>(static_cast<std::size_t>(rank) * rank));
  Rational trace = 0;
  Rational rest = 0;
  for (int j = 1; j <= rank; ++j) {
    for (int k = j; k <= rank; ++k) {
      if (j == 1 && k == 2) continue;
      const Rational value = make_rational(rng.range(-2, 2), rng.range(1, 2));
      matrix.at(j, k) = value;
      matrix.at(k, j) = value;
      if (j == k) {
        trace += value;
      } else {
        rest += 2 * value;
      }
    }
  }
  const Rational forced = (genus * trace - rest) / 2;
  matrix.at(1, 2) = forced;
  matrix.at(2, 1) = forced;
  return matrix;
}

inline std::string serialize_tensor(const CoefficientTensor& tensor) {
  std::ostringstream out;
  out << "r=" << tensor.rank() << " n=" << tensor.factor_count();
  for (int l = 1; l <= tensor.factor_count(); ++l) {
    for (int j = 1; j <= tensor.rank(); ++j) {
      for (int k = j; k <= tensor.rank(); ++k) {
        if (tensor.at(l, j, k) != 0) {
          out << " (" << l << "," << j << "," << k
              << ")=" << format_rational(tensor.at(l, j, k));
        }
      }
    }
  }
  return out.str();
}

inline std::string serialize_matrix(const BoundMatrix& matrix) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < matrix.entries.size(); ++i) {
    if (i) out << ",";
    out << format_rational(matrix.entries[i]);
  }
  out << "]";
  return out.str();
}

inline std::string serialize_spec(const PullbackSpec& spec) {
  std::ostringstream out;
  out << "m=(";
  for (std::size_t i = 0; i < spec.multipliers.size(); ++i) {
    if (i) out << ",";
    out << spec.multipliers[i];
  }
  out << ")";
  return out.str();
}

}  // namespace detail

/// The four terminal graphs against their displayed values, g = 2..10.
inline std::vector<CheckResult> suite_table1(const SuiteOptions& options) {
  struct Row {
    const char* name;
    IntersectionGraph graph;
    SymbolicValue (*expected)(const Rational&);
  };
  const Row rows[] = {
      {"table1:circle", IntersectionGraph(1, {{1, 1}}),
       [](const Rational& g) { return scalar_value(-2 * g); }},
      {"table1:figure-eight", IntersectionGraph(1, {{1, 1}, {1, 1}}),
       [](const Rational& g) {
         return SymbolicValue{0, g / (g - 1), 0, 4 * (g - 1)};
       }},
      {"table1:dumbbell", IntersectionGraph(2, {{1, 1}, {1, 2}, {2, 2}}),
       [](const Rational& g) {
         return SymbolicValue{0, 0, 0, -4 * (g - 1) * (g - 1)};
       }},
      {"table1:theta", IntersectionGraph(2, {{1, 2}, {1, 2}, {1, 2}}),
       [](const Rational& g) {
         return SymbolicValue{0, (2 * g + 1) / (2 * g - 2), -1, 6 * (g - 1)};
       }},
  };
  std::vector<CheckResult> out;
  for (const Row& row : rows) {
    detail::CheckBuilder check(row.name);
    for (long g = 2; g <= 10; ++g) {
      const Rational genus(g);
      const SymbolicValue value = evaluate_graph(row.graph, genus);
      check.record(format_value(value));
      check.require(value == row.expected(genus),
                    "g=" + std::to_string(g) + " got " + format_value(value));
    }
    out.push_back(check.finish());
  }
  (void)options;
  return out;
}

/// Closed-form geometric engine against the multilinear expansion on seeded
/// random tensors with n = r.
inline std::vector<CheckResult> suite_oracle_geometric(
    const SuiteOptions& options) {
  detail::CheckBuilder check("oracle-geometric");
  detail::Rng rng(options.seed);
  const int max_r = std::max(1, std::min(options.max_r, 4));
  const long genera[] = {2, 3, 5};
  for (int i = 0; i < 200; ++i) {
    const int r = 1 + i % max_r;
    const CoefficientTensor tensor = detail::random_tensor(r, r, rng);
    for (const long g : genera) {
      const Rational genus(g);
      const Rational closed = intersect_geometric(tensor, genus, options.jobs);
      const SymbolicValue expanded =
          expand_bruteforce(tensor, genus, options.jobs);
      check.record(format_rational(closed) + format_value(expanded));
      check.require(expanded.is_pure_scalar() && closed == expanded.scalar,
                    detail::serialize_tensor(tensor) + " g=" +
                        std::to_string(g) + " closed=" +
                        format_rational(closed) + " expanded=" +
                        format_value(expanded));
    }
  }
  return {check.finish()};
}

/// Closed-form arithmetic engine against the expansion on seeded random
/// tensors with n = r + 1.
inline std::vector<CheckResult> suite_oracle_arithmetic(
    const SuiteOptions& options) {
  detail::CheckBuilder check("oracle-arithmetic");
  detail::Rng rng(options.seed);
  const int max_r = std::max(1, std::min(options.max_r, 3));
  const long genera[] = {2, 3, 5};
  for (int i = 0; i < 100; ++i) {
    const int r = 1 + i % max_r;
    const CoefficientTensor tensor = detail::random_tensor(r, r + 1, rng);
    for (const long g : genera) {
      const Rational genus(g);
      const SymbolicValue closed =
          intersect_arithmetic(tensor, genus, options.jobs);
      const SymbolicValue expanded =
          expand_bruteforce(tensor, genus, options.jobs);
      check.record(format_value(closed) + format_value(expanded));
      check.require(closed == expanded,
                    detail::serialize_tensor(tensor) + " g=" +
                        std::to_string(g) + " closed=" + format_value(closed) +
                        " expanded=" + format_value(expanded));
    }
  }
  return {check.finish()};
}

/// The two self-intersection closed forms against the engines on random
/// multiplier vectors, including validity at g = 1 and the vanishing at
/// r = g + 1.
inline std::vector<CheckResult> suite_closed_forms(const SuiteOptions& options) {
  std::vector<CheckResult> out;
  detail::Rng rng(options.seed);
  const int max_r = std::max(1, std::min(options.max_r, 4));
  {
    detail::CheckBuilder check("closed-forms:geometric");
    for (int r = 1; r <= max_r; ++r) {
      for (int rep = 0; rep < 3; ++rep) {
        const PullbackSpec spec = detail::random_spec(r, rng);
        const CoefficientTensor tensor = pullback_tensor(spec, r);
        for (long g = 1; g <= 8; ++g) {
          const Rational genus(g);
          const Rational closed = geometric_closed_form(spec, genus);
          const Rational engine =
              intersect_geometric(tensor, genus, options.jobs);
          check.record(format_rational(closed));
          check.require(closed == engine,
                        detail::serialize_spec(spec) + " g=" +
                            std::to_string(g) + " closed=" +
                            format_rational(closed) + " engine=" +
                            format_rational(engine));
        }
      }
    }
    out.push_back(check.finish());
  }
  {
    detail::CheckBuilder check("closed-forms:arithmetic");
    for (int r = 1; r <= std::min(max_r, 3); ++r) {
      for (int rep = 0; rep < 3; ++rep) {
        const PullbackSpec spec = detail::random_spec(r, rng);
        const CoefficientTensor tensor = pullback_tensor(spec, r + 1);
        for (long g = 2; g <= 8; ++g) {
          const Rational genus(g);
          const SymbolicValue closed = arithmetic_closed_form(spec, genus);
          const SymbolicValue engine =
              intersect_arithmetic(tensor, genus, options.jobs);
          check.record(format_value(closed));
          check.require(closed == engine,
                        detail::serialize_spec(spec) + " g=" +
                            std::to_string(g) + " closed=" +
                            format_value(closed) + " engine=" +
                            format_value(engine));
        }
      }
    }
    out.push_back(check.finish());
  }
  {
    detail::CheckBuilder check("closed-forms:rank-overflow-vanishing");
    for (int r = 2; r <= max_r + 1; ++r) {
      const PullbackSpec spec = detail::random_spec(r, rng);
      const Rational genus(r - 1);
      const Rational closed = geometric_closed_form(spec, genus);
      const Rational engine =
          intersect_geometric(pullback_tensor(spec, r), genus, options.jobs);
      check.record(format_rational(closed));
      check.require(closed == 0 && engine == 0,
                    detail::serialize_spec(spec) + " g=" +
                        std::to_string(r - 1) + " closed=" +
                        format_rational(closed) + " engine=" +
                        format_rational(engine));
    }
    out.push_back(check.finish());
  }
  return out;
}

/// Height coefficients against the normalized self-intersection route,
/// the r = g vanishing, and the genus-2 relation case.
inline std::vector<CheckResult> suite_heights(const SuiteOptions& options) {
  std::vector<CheckResult> out;
  detail::Rng rng(options.seed);
  {
    detail::CheckBuilder check("heights:route-equality");
    for (long g = 2; g <= 6; ++g) {
      for (int r = 1; r < g; ++r) {
        if (r >= 2 && g == 2) continue;
        for (int rep = 0; rep < 3; ++rep) {
          const PullbackSpec spec = detail::random_spec(r, rng);
          const CurveParams params{g, 1 + rep % 3};
          const HeightCoefficients hc = height_coefficients(spec, params);
          const Rational geometric = geometric_self_intersection(spec, params);
          const SymbolicValue route =
              (1 / (Rational(params.field_degree) * (r + 1) * geometric)) *
              arithmetic_self_intersection(spec, params);
          const SymbolicValue assembled{0, hc.prefactor * hc.a,
                                        hc.prefactor * hc.b,
                                        hc.prefactor * hc.c};
          check.record(format_value(route));
          check.require(route == assembled,
                        detail::serialize_spec(spec) + " g=" +
                            std::to_string(g) + " dK=" +
                            std::to_string(params.field_degree) + " route=" +
                            format_value(route) + " coefficients=" +
                            format_value(assembled));
        }
      }
    }
    out.push_back(check.finish());
  }
  {
    detail::CheckBuilder check("heights:rank-equals-genus-vanishing");
    for (long g = 3; g <= 6; ++g) {
      const PullbackSpec spec =
          detail::random_spec(static_cast<int>(g), rng);
      const SymbolicValue value =
          arithmetic_self_intersection(spec, CurveParams{g, 1});
      check.record(format_value(value));
      check.require(value.is_zero(), detail::serialize_spec(spec) + " g=" +
                                         std::to_string(g) + " value=" +
                                         format_value(value));
      const Rational height = neron_tate_height(
          spec, CurveParams{g, 1}, InvariantValues{Rational(7), Rational(3),
                                                   Rational(11, 2)});
      check.require(height == 0, "nonzero height at r=g");
    }
    out.push_back(check.finish());
  }
  {
    // Genus 2, r = 2: the value is nonzero symbolically and vanishes exactly
    // under phi = (5/2) omega^2, h_NT = 0.
    detail::CheckBuilder check("heights:genus-two-relation");
    const PullbackSpec spec{{1, 1}};
    const SymbolicValue value =
        arithmetic_self_intersection(spec, CurveParams{2, 1});
    check.record(format_value(value));
    check.require(!value.is_zero(), "expected a nonzero symbolic value");
    for (long t = 1; t <= 3; ++t) {
      const InvariantValues inv{Rational(t), Rational(5 * t, 2), 0};
      const Rational numeric = evaluate_numeric(value, inv);
      check.record(format_rational(numeric));
      check.require(numeric == 0,
                    "omega2=" + std::to_string(t) + " numeric=" +
                        format_rational(numeric));
    }
    out.push_back(check.finish());
  }
  return out;
}

namespace detail {

inline SymbolicValue paper_r2_expected(const Rational& g) {
  return SymbolicValue{0, -4 * g * g * (2 * g + 1) / (g - 1), 4 * g * g, 0};
}

inline SymbolicValue paper_r4_expected(const Rational& g) {
  const Rational omega2 =
      -4 * (15 * g * g * g - 14 * g * g - 19 * g - 6) / (g - 1);
  const Rational phi = 8 * (3 * g * g - g - 6);
  return SymbolicValue{0, omega2, phi, 0};
}

inline BoundMatrix paper_r2_matrix(const Rational& g) {
  return BoundMatrix(2, {Rational(1), g, g, Rational(1)});
}

}  // namespace detail

/// The published bound computations, the rank-overflow vanishing, the
/// geometric pairing closed form and the derived bound identities.
inline std::vector<CheckResult> suite_bounds(const SuiteOptions& options) {
  std::vector<CheckResult> out;
  detail::Rng rng(options.seed);

  {
    // Two-factor matrix ((1, g), (g, 1)) with m = (1, 1): the omega^2 and
    // phi components follow the displayed polynomials, the ratio is
    // (g-1)/(2g+1), and all four components agree with the expansion.
    detail::CheckBuilder check("bounds:two-factor-family");
    const PullbackSpec spec{{1, 1}};
    for (long g = 2; g <= 12; ++g) {
      const Rational genus(g);
      const BoundMatrix matrix = detail::paper_r2_matrix(genus);
      check.require(check_constraint(matrix, genus), "constraint fails");
      const SymbolicValue value =
          hodge_form(spec, matrix, genus, options.jobs);
      const SymbolicValue expected = detail::paper_r2_expected(genus);
      const SymbolicValue expansion = expand_bruteforce(
          build_hodge_tensor(spec, matrix), genus, options.jobs);
      check.record(format_value(value));
      check.require(value.scalar == expected.scalar &&
                        value.omega2 == expected.omega2 &&
                        value.phi == expected.phi,
                    "g=" + std::to_string(g) + " value=" +
                        format_value(value));
      check.require(value == expansion,
                    "g=" + std::to_string(g) + " expansion=" +
                        format_value(expansion));
      const auto ratio = derive_phi_bound(value);
      check.require(ratio && *ratio == (genus - 1) / (2 * genus + 1),
                    "g=" + std::to_string(g) + " bad ratio");
    }
    out.push_back(check.finish());
  }
  {
    // Four-factor alternating cycle with m = (1,1,1,1), g = 3..8; the
    // ratios at g = 3 and g = 4 are 1/3 and 38/109.
    detail::CheckBuilder check("bounds:alternating-family");
    const PullbackSpec spec{{1, 1, 1, 1}};
    const BoundMatrix matrix = alternating_cycle_matrix(4, spec);
    for (long g = 3; g <= 8; ++g) {
      const Rational genus(g);
      check.require(check_constraint(matrix, genus), "constraint fails");
      const SymbolicValue value =
          hodge_form(spec, matrix, genus, options.jobs);
      const SymbolicValue expected = detail::paper_r4_expected(genus);
      const SymbolicValue expansion = expand_bruteforce(
          build_hodge_tensor(spec, matrix), genus, options.jobs);
      check.record(format_value(value));
      check.require(value.scalar == expected.scalar &&
                        value.omega2 == expected.omega2 &&
                        value.phi == expected.phi,
                    "g=" + std::to_string(g) + " value=" +
                        format_value(value));
      check.require(value == expansion,
                    "g=" + std::to_string(g) + " expansion=" +
                        format_value(expansion));
      const auto ratio = derive_phi_bound(value);
      check.require(ratio.has_value(), "no ratio");
      if (g == 3) check.require(*ratio == Rational(1, 3), "ratio at g=3");
      if (g == 4) check.require(*ratio == Rational(38, 109), "ratio at g=4");
    }
    out.push_back(check.finish());
  }
  {
    // At r = g + 2 the form is zero as a number on every curve: at g = 2 the
    // scalar and h_NT coefficients vanish exactly and the omega^2/phi part
    // is a multiple of the relation 2 omega^2 + 5 phi (every genus-2 curve
    // is hyperelliptic with phi = (5/2) omega^2). The components themselves
    // do not vanish; the expansion oracle confirms them.
    detail::CheckBuilder check("bounds:rank-overflow-vanishing");
    const Rational genus(2);
    for (int i = 0; i < 20; ++i) {
      const PullbackSpec spec = detail::random_spec(4, rng, 2);
      const BoundMatrix matrix =
          detail::random_constrained_matrix(4, genus, rng);
      const SymbolicValue value = hodge_form(spec, matrix, genus, options.jobs);
      check.record(format_value(value));
      check.require(value.scalar == 0 && value.hnt == 0 &&
                        2 * value.omega2 + 5 * value.phi == 0,
                    detail::serialize_spec(spec) + " t=" +
                        detail::serialize_matrix(matrix) + " value=" +
                        format_value(value));
      if (i < 4) {
        const SymbolicValue expansion = expand_bruteforce(
            build_hodge_tensor(spec, matrix), genus, options.jobs);
        check.require(value == expansion,
                      "expansion disagrees: " + format_value(expansion));
      }
    }
    out.push_back(check.finish());
  }
  {
    // Geometric pairing closed form against the n = r engine; zero exactly
    // on the constraint surface (the genus keeps (g)_{r-1} nonzero).
    detail::CheckBuilder check("bounds:pairing");
    for (int i = 0; i < 50; ++i) {
      const int r = 2 + i % 3;
      const long g = std::max<long>(r - 1, rng.range(2, 6));
      const Rational genus(g);
      const PullbackSpec spec = detail::random_spec(r, rng, 2);
      BoundMatrix matrix(
          r, std::vector<Rational>(static_cast<std::size_t>(r) * r));
      if (i % 2 == 0) {
        matrix = detail::random_constrained_matrix(r, genus, rng);
      } else {
        for (int j = 1; j <= r; ++j) {
          for (int k = j; k <= r; ++k) {
            const Rational value =
                make_rational(rng.range(-2, 2), rng.range(1, 2));
            matrix.at(j, k) = value;
            matrix.at(k, j) = value;
          }
        }
      }
      const Rational closed = geometric_pairing(spec, matrix, genus);
      const Rational engine = intersect_geometric(
          build_pairing_tensor(spec, matrix), genus, options.jobs);
      check.record(format_rational(closed));
      check.require(closed == engine,
                    detail::serialize_spec(spec) + " t=" +
                        detail::serialize_matrix(matrix) + " g=" +
                        std::to_string(g) + " closed=" +
                        format_rational(closed) + " engine=" +
                        format_rational(engine));
      check.require((closed == 0) == check_constraint(matrix, genus),
                    "pairing zero/constraint mismatch at " +
                        detail::serialize_matrix(matrix));
    }
    out.push_back(check.finish());
  }
  {
    // Multiplier vectors summing to zero reach the ratio 2/(3g-1).
    detail::CheckBuilder check("bounds:sum-zero-ratio");
    const PullbackSpec specs[] = {PullbackSpec{{1, -1}},
                                  PullbackSpec{{1, 1, -2}}};
    for (const PullbackSpec& spec : specs) {
      for (long g = spec.rank() + 1; g <= 10; ++g) {
        const HeightCoefficients hc =
            height_coefficients(spec, CurveParams{g, 1});
        const SymbolicValue flipped{0, -hc.a, -hc.b, 0};
        const auto ratio = derive_phi_bound(flipped);
        check.record(ratio ? format_rational(*ratio) : "none");
        check.require(ratio && *ratio == Rational(2, 3 * g - 1),
                      detail::serialize_spec(spec) + " g=" + std::to_string(g));
      }
    }
    out.push_back(check.finish());
  }
  {
    // The effective bound coefficient equals the height coefficients
    // combined with the (g-1)/(2g+1) bound, as an identity in g.
    detail::CheckBuilder check("bounds:effective-coefficient");
    for (int rep = 0; rep < 6; ++rep) {
      const int r = 1 + rep % 3;
      const PullbackSpec spec = detail::random_spec(r, rng);
      const long dk = 1 + rep % 3;
      std::vector<Rational> points;
      for (long g = std::max<long>(3, r + 1); g <= 12; ++g) {
        points.emplace_back(g);
      }
      const auto report = verify_identity(
          [&](const Rational& genus) {
            const long g = numerator(genus).convert_to<long>();
            return scalar_value(bogomolov_bound(spec, CurveParams{g, dk}));
          },
          [&](const Rational& genus) {
            const long g = numerator(genus).convert_to<long>();
            const HeightCoefficients hc =
                height_coefficients(spec, CurveParams{g, dk});
            return scalar_value(hc.prefactor *
                                (hc.a * (genus - 1) / (2 * genus + 1) + hc.b));
          },
          points);
      check.record(detail::serialize_spec(spec) +
                   (report.equal ? " equal" : " mismatch"));
      check.require(report.equal,
                    detail::serialize_spec(spec) + " first mismatch at g=" +
                        (report.first_mismatch_genus
                             ? format_rational(*report.first_mismatch_genus)
                             : std::string("?")));
    }
    out.push_back(check.finish());
  }
  {
    // Exhaustive grid search at r = 2, g = 5 recovers the ratio 4/11.
    detail::CheckBuilder check("bounds:grid-search");
    const Rational genus(5);
    const PullbackSpec spec{{1, 1}};
    const Rational grid[] = {Rational(-1), Rational(-1, 2), Rational(0),
                             Rational(1, 2), Rational(1), genus};
    std::vector<BoundMatrix> candidates;
    for (const Rational& t11 : grid) {
      for (const Rational& t12 : grid) {
        for (const Rational& t22 : grid) {
          candidates.push_back(BoundMatrix(2, {t11, t12, t12, t22}));
        }
      }
    }
    const auto hit = bound_search(spec, genus, candidates, options.jobs);
    check.record(hit ? format_rational(hit->ratio) : "none");
    check.require(hit && hit->ratio == Rational(4, 11),
                  hit ? "best ratio " + format_rational(hit->ratio)
                      : "no candidate qualified");
    out.push_back(check.finish());
  }
  return out;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "table1",      "oracle-geometric", "oracle-arithmetic",
      "closed-forms", "heights",          "bounds",
      "all"};
  return names;
}

inline std::vector<CheckResult> run_suite(const std::string& name,
                                          const SuiteOptions& options) {
  if (name == "table1") return suite_table1(options);
  if (name == "oracle-geometric") return suite_oracle_geometric(options);
  if (name == "oracle-arithmetic") return suite_oracle_arithmetic(options);
  if (name == "closed-forms") return suite_closed_forms(options);
  if (name == "heights") return suite_heights(options);
  if (name == "bounds") return suite_bounds(options);
  if (name == "all") {
    std::vector<CheckResult> out;
    for (const std::string& suite :
         {"table1", "oracle-geometric", "oracle-arithmetic", "closed-forms",
          "heights", "bounds"}) {
      auto results = run_suite(suite, options);
      out.insert(out.end(), std::make_move_iterator(results.begin()),
                 std::make_move_iterator(results.end()));
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace tautint
