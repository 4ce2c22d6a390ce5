#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "tautint/detail/rng.hpp"
#include "tautint/heights.hpp"
#include "tautint/verify.hpp"

using namespace tautint;

TEST_CASE("pullback_tensor") {
  SECTION("m = (1): single -1 entry per factor") {
    const auto tensor = pullback_tensor(PullbackSpec{{1}}, 1);
    REQUIRE(tensor.at(1, 1, 1) == -1);
  }

  SECTION("m = (1,-1): checkerboard signs") {
    const auto tensor = pullback_tensor(PullbackSpec{{1, -1}}, 2);
    for (int l = 1; l <= 2; ++l) {
      REQUIRE(tensor.at(l, 1, 1) == -1);
      REQUIRE(tensor.at(l, 2, 2) == -1);
      REQUIRE(tensor.at(l, 1, 2) == 1);
      REQUIRE(tensor.at(l, 2, 1) == 1);
    }
  }

  SECTION("always symmetric") {
    detail::Rng rng(31);
    const auto spec = detail::random_spec(4, rng);
    const auto tensor = pullback_tensor(spec, 3);
    for (int l = 1; l <= 3; ++l) {
      for (int j = 1; j <= 4; ++j) {
        for (int k = 1; k <= 4; ++k) {
          REQUIRE(tensor.at(l, j, k) == tensor.at(l, k, j));
        }
      }
    }
  }

  REQUIRE_THROWS_AS(pullback_tensor(PullbackSpec{{1, 0}}, 2),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(pullback_tensor(PullbackSpec{{}}, 1),
                    std::invalid_argument);
}

TEST_CASE("geometric self-intersection closed form") {
  REQUIRE(geometric_self_intersection(PullbackSpec{{1, 2}},
                                      CurveParams{3, 1}) == 48);

  SECTION("vanishes at r = g + 1 and is positive at r = g") {
    for (long g = 1; g <= 5; ++g) {
      PullbackSpec spec;
      for (long i = 0; i <= g; ++i) spec.multipliers.push_back(i % 2 ? 2 : -1);
      REQUIRE(geometric_self_intersection(spec, CurveParams{g, 1}) == 0);

      PullbackSpec full;
      for (long i = 0; i < g; ++i) full.multipliers.push_back(i % 2 ? -2 : 1);
      Integer squares = 1;
      for (long m : full.multipliers) squares *= Integer(m) * m;
      REQUIRE(geometric_self_intersection(full, CurveParams{g, 1}) ==
              Rational(factorial(g) * factorial(g) * squares));
    }
  }

  SECTION("invariant under sign flips and permutations of m") {
    detail::Rng rng(7);
    for (int i = 0; i < 20; ++i) {
      const int r = 1 + i % 4;
      auto spec = detail::random_spec(r, rng);
      const CurveParams params{4, 1};
      const Rational value = geometric_self_intersection(spec, params);
      auto flipped = spec;
      flipped.multipliers[static_cast<std::size_t>(rng.below(r))] *= -1;
      REQUIRE(geometric_self_intersection(flipped, params) == value);
      auto shuffled = spec;
      std::reverse(shuffled.multipliers.begin(), shuffled.multipliers.end());
      REQUIRE(geometric_self_intersection(shuffled, params) == value);
    }
  }
}

TEST_CASE("arithmetic self-intersection closed form") {
  SECTION("r = 1") {
    for (long g = 2; g <= 6; ++g) {
      const Rational genus(g);
      REQUIRE(arithmetic_self_intersection(PullbackSpec{{1}},
                                           CurveParams{g, 1}) ==
              SymbolicValue{0, genus / (4 * (genus - 1)), 0, genus - 1});
    }
  }

  SECTION("r = 2, m = (1,-1), g = 3") {
    REQUIRE(arithmetic_self_intersection(PullbackSpec{{1, -1}},
                                         CurveParams{3, 1}) ==
            SymbolicValue{0, 4, -1, 0});
  }

  SECTION("symbolic vanishing at r = g for g >= 3, but not at g = 2") {
    detail::Rng rng(3);
    for (long g = 3; g <= 6; ++g) {
      const auto spec = detail::random_spec(static_cast<int>(g), rng);
      REQUIRE(arithmetic_self_intersection(spec, CurveParams{g, 1}).is_zero());
    }
    REQUIRE(!arithmetic_self_intersection(PullbackSpec{{1, 1}},
                                          CurveParams{2, 1})
                 .is_zero());
  }

  SECTION("invariance under permutations and a global sign flip") {
    detail::Rng rng(71);
    for (int i = 0; i < 15; ++i) {
      const int r = 1 + i % 3;
      const auto spec = detail::random_spec(r, rng);
      const CurveParams params{4 + i % 3, 1};
      const auto value = arithmetic_self_intersection(spec, params);

      auto shuffled = spec;
      for (std::size_t a = shuffled.multipliers.size(); a > 1; --a) {
        std::swap(shuffled.multipliers[a - 1],
                  shuffled.multipliers[static_cast<std::size_t>(
                      rng.below(static_cast<long>(a)))]);
      }
      REQUIRE(arithmetic_self_intersection(shuffled, params) == value);

      auto negated = spec;
      for (auto& m : negated.multipliers) m = -m;
      REQUIRE(arithmetic_self_intersection(negated, params) == value);
    }
  }

  SECTION("the normalized coefficients see m only through the two sums") {
    // (1,4,6,7) and (2,3,5,8) share the sum (18) and the sum of squares
    // (102) but not the square product; dividing out prod m^2 must give the
    // same value.
    const PullbackSpec a{{1, 4, 6, 7}};
    const PullbackSpec b{{2, 3, 5, 8}};
    const Rational prod_a(Integer(1) * 16 * 36 * 49);
    const Rational prod_b(Integer(4) * 9 * 25 * 64);
    for (long g = 5; g <= 7; ++g) {
      const auto va = arithmetic_self_intersection(a, CurveParams{g, 1});
      const auto vb = arithmetic_self_intersection(b, CurveParams{g, 1});
      REQUIRE(!(va == vb));
      REQUIRE(1 / prod_a * va == 1 / prod_b * vb);
    }
  }

  REQUIRE_THROWS_AS(
      arithmetic_self_intersection(PullbackSpec{{1}}, CurveParams{1, 1}),
      SingularGenusError);
}

TEST_CASE("height coefficients") {
  SECTION("r = 1 branch") {
    for (long g = 2; g <= 6; ++g) {
      const Rational genus(g);
      const auto hc =
          height_coefficients(PullbackSpec{{3}}, CurveParams{g, 2});
      REQUIRE(hc.a == 9 / (4 * (genus - 1) * (genus - 1)));
      REQUIRE(hc.b == 0);
      REQUIRE(hc.c == Rational(9) / genus);
      REQUIRE(hc.prefactor == (genus - 1) / 4);
    }
  }

  SECTION("r = 2, g = 3, m = (1,1)") {
    const auto hc =
        height_coefficients(PullbackSpec{{1, 1}}, CurveParams{3, 1});
    REQUIRE(hc.a == make_rational(1, 36));
    REQUIRE(hc.b == make_rational(1, 18));
    REQUIRE(hc.c == make_rational(4, 3));
    REQUIRE(hc.prefactor == make_rational(1, 2));
  }

  SECTION("r = g gives a vanishing assembled height") {
    const auto hc =
        height_coefficients(PullbackSpec{{1, 2, 1}}, CurveParams{3, 1});
    REQUIRE(hc.prefactor == 0);
  }

  REQUIRE_THROWS_AS(
      height_coefficients(PullbackSpec{{1, 1, 1}}, CurveParams{2, 1}),
      std::out_of_range);
  REQUIRE_THROWS_AS(
      height_coefficients(PullbackSpec{{1, 1}}, CurveParams{2, 1}),
      std::invalid_argument);
}

TEST_CASE("neron_tate_height") {
  SECTION("r = g vanishes for any invariant values") {
    REQUIRE(neron_tate_height(PullbackSpec{{1, 1, 1}}, CurveParams{3, 2},
                              InvariantValues{Rational(9), Rational(4),
                                              Rational(13, 7)}) == 0);
  }

  SECTION("r = 1 worked example") {
    // omega2 = 4(g-1)^2 makes a * omega2 = 1; with h = 0 and b = 0 the
    // height is the prefactor.
    const long g = 3;
    const InvariantValues inv{Rational(4 * (g - 1) * (g - 1)), Rational(77),
                              0};
    REQUIRE(neron_tate_height(PullbackSpec{{1}}, CurveParams{g, 1}, inv) ==
            1);
  }

  SECTION("zero invariants give zero") {
    REQUIRE(neron_tate_height(PullbackSpec{{2, -1}}, CurveParams{4, 1},
                              InvariantValues{0, 0, 0}) == 0);
  }

  SECTION("route equality against the coefficient record") {
    detail::Rng rng(59);
    for (long g = 3; g <= 6; ++g) {
      for (int r = 1; r < g; ++r) {
        const auto spec = detail::random_spec(r, rng);
        const CurveParams params{g, 1 + r % 2};
        const auto hc = height_coefficients(spec, params);
        const InvariantValues inv{make_rational(rng.range(-5, 5), 1),
                                  make_rational(rng.range(-5, 5), 1),
                                  make_rational(rng.range(0, 5), 1)};
        const Rational via_coefficients =
            hc.prefactor *
            (hc.a * inv.omega2 + hc.b * inv.phi + hc.c * inv.hnt);
        REQUIRE(neron_tate_height(spec, params, inv) == via_coefficients);
      }
    }
  }

  REQUIRE_THROWS_AS(
      neron_tate_height(PullbackSpec{{1, 1, 1}}, CurveParams{2, 1},
                        InvariantValues{0, 0, 0}),
      std::out_of_range);
}

TEST_CASE("bogomolov_bound") {
  SECTION("r = 1 branch") {
    for (long g = 2; g <= 5; ++g) {
      REQUIRE(bogomolov_bound(PullbackSpec{{2}}, CurveParams{g, 3}) ==
              Rational(4) / Rational(8 * 3 * (2 * g + 1)));
    }
  }

  SECTION("r = 2, m = (1,-1), g = 4") {
    REQUIRE(bogomolov_bound(PullbackSpec{{1, -1}}, CurveParams{4, 1}) ==
            make_rational(5, 432));
  }

  SECTION("matches the height coefficients combined with (g-1)/(2g+1)") {
    detail::Rng rng(67);
    for (int i = 0; i < 30; ++i) {
      const int r = 1 + i % 3;
      const long g = r + 1 + rng.below(4) + (r >= 2 ? 1 : 0);
      const auto spec = detail::random_spec(r, rng);
      const CurveParams params{std::max<long>(g, r + 1), 1 + i % 2};
      const auto hc = height_coefficients(spec, params);
      const Rational genus(params.genus);
      REQUIRE(bogomolov_bound(spec, params) ==
              hc.prefactor * (hc.a * (genus - 1) / (2 * genus + 1) + hc.b));
    }
  }

  REQUIRE_THROWS_AS(bogomolov_bound(PullbackSpec{{1, 1}}, CurveParams{2, 1}),
                    std::out_of_range);
}

TEST_CASE("phi_local_lower_bound") {
  REQUIRE(phi_local_lower_bound(2, Rational(1), {Rational(0)}) ==
          make_rational(1, 76));
  REQUIRE(phi_local_lower_bound(5, Rational(0), {}) == 0);
  REQUIRE(phi_local_lower_bound(4, Rational(0), {Rational(0), Rational(1)}) ==
          2);
  REQUIRE_THROWS_AS(phi_local_lower_bound(1, Rational(1), {}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(phi_local_lower_bound(4, Rational(-1), {}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(
      phi_local_lower_bound(4, Rational(0), {Rational(1), Rational(-2)}),
      std::invalid_argument);
  REQUIRE_THROWS_AS(
      phi_local_lower_bound(4, Rational(0),
                            {Rational(1), Rational(1), Rational(1)}),
      std::invalid_argument);
}
