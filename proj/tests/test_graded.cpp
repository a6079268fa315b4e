#include <catch2/catch_amalgamated.hpp>

#include <liefp/graded.hpp>
#include <liefp/prng.hpp>

using namespace liefp;

static GradedPoly P(const std::string& text, std::uint32_t nvars, std::uint32_t p) {
  return parse_poly(text, nvars, p);
}

TEST_CASE("polynomial parse and print round trips") {
  CHECK(to_string(GradedPoly(3, 2)) == "0");
  CHECK(to_string(P("0", 2, 3)) == "0");

  // grlex descending print, coefficient always explicit, ^e only for e >= 2
  auto f = P("1*v2^3 + 2*v1^3", 2, 5);
  CHECK(to_string(f) == "2*v1^3+1*v2^3");
  CHECK(to_string(P("1", 2, 3)) == "1");
  CHECK(to_string(P("3*v1", 2, 5)) == "3*v1");
  CHECK(to_string(P("2*v1^1", 2, 5)) == "2*v1");

  // whitespace is stripped before parsing
  CHECK(P("  2 * v1 ^ 2 + 1 * v2 ", 2, 5) == P("2*v1^2+1*v2", 2, 5));

  // repeated variables accumulate exponents, like terms merge mod p
  CHECK(to_string(P("1*v1*v1", 1, 3)) == "1*v1^2");
  CHECK(P("2*v1+2*v1", 1, 3) == P("1*v1", 1, 3));
  CHECK(P("1*v1+2*v1", 1, 3).is_zero());

  for (const char* text : {"2*v1^3+1*v1^2*v2+4*v2^3", "0", "1", "4*v1*v2*v3"}) {
    std::uint32_t nv = 3;
    auto g = P(text, nv, 5);
    CHECK(parse_poly(to_string(g), nv, 5) == g);
  }
}

TEST_CASE("polynomial parse rejects malformed text") {
  CHECK_THROWS_AS(P("v1", 1, 3), std::invalid_argument);        // coefficient required
  CHECK_THROWS_AS(P("2*v3", 2, 3), std::invalid_argument);      // variable out of range
  CHECK_THROWS_AS(P("2*v0", 2, 3), std::invalid_argument);      // vars are 1-based
  CHECK_THROWS_AS(P("3*v1", 1, 3), std::invalid_argument);      // coefficient must be < p
  CHECK_THROWS_AS(P("", 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(P("   ", 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(P("1*v1+", 1, 3), std::invalid_argument);     // trailing +
  CHECK_THROWS_AS(P("1*", 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(P("1*v1^", 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(P("1*x1", 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(P("1*v1 2", 1, 3), std::invalid_argument);
}

TEST_CASE("ring constructors validate their arguments") {
  CHECK_THROWS_AS(GradedPoly(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(GradedPoly(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(GradedPoly(3, 0), std::invalid_argument);
  GradedPoly f(3, 2);
  CHECK_THROWS_AS(f.add_term({1}, 1), std::invalid_argument);  // wrong exponent length
  CHECK_THROWS_AS(poly_add(P("1*v1", 1, 3), P("1*v1", 1, 5)), std::invalid_argument);
  CHECK_THROWS_AS(poly_add(P("1*v1", 1, 3), P("1*v1", 2, 3)), std::invalid_argument);
}

TEST_CASE("arithmetic basics and the freshman's dream") {
  auto x = P("1*v1", 2, 3);
  auto y = P("1*v2", 2, 3);
  auto s = poly_add(x, y);
  auto cube = poly_pow(s, 3);
  CHECK(cube == poly_add(poly_pow(x, 3), poly_pow(y, 3)));

  CHECK(poly_sub(s, s).is_zero());
  CHECK(poly_scale(s, 0).is_zero());
  CHECK(poly_scale(s, 2) == P("2*v1+2*v2", 2, 3));
  CHECK(poly_pow(s, 0) == P("1", 2, 3));

  auto prod = poly_mul(P("1*v1+1*v2", 2, 5), P("1*v1+4*v2", 2, 5));
  CHECK(prod == P("1*v1^2+4*v2^2", 2, 5));

  CHECK(P("1*v1^2+1*v1*v2", 2, 3).is_homogeneous());
  CHECK_FALSE(P("1*v1^2+1*v2", 2, 3).is_homogeneous());
  CHECK(P("2*v1^3+1*v2", 2, 3).degree() == 3);
  CHECK(GradedPoly(3, 2).degree() == 0);
}

TEST_CASE("poly_mul guards against exponent overflow") {
  GradedPoly f(3, 1);
  f.add_term({1u << 30}, 1);
  CHECK_THROWS_AS(poly_mul(f, f), budget_error);
}

TEST_CASE("partial derivatives") {
  auto f = P("1*v1^3+2*v1*v2^2+1*v2", 2, 5);
  CHECK(poly_derivative(f, 0) == P("3*v1^2+2*v2^2", 2, 5));
  CHECK(poly_derivative(f, 1) == P("4*v1*v2+1", 2, 5));
  // powers of p die under d/dv
  CHECK(poly_derivative(P("1*v1^5", 1, 5), 0).is_zero());
  CHECK_THROWS_AS(poly_derivative(f, 2), std::invalid_argument);
}

TEST_CASE("shift_power values and budget") {
  CHECK(shift_power(5, 0) == 1);
  CHECK(shift_power(5, 1) == 5);
  CHECK(shift_power(3, 4) == 81);
  CHECK(shift_power(5, 8) == 390625);
  CHECK_THROWS_AS(shift_power(5, 9), budget_error);  // 5^9 ~ 1.9M > 2^20
}

TEST_CASE("deformed derivations on worked examples") {
  // identity twist, r = 1, p = 5: D(v1) = v1^5, D(v1^2) = 2*v1^6
  DeformedDerivation id{FpMatrix::identity(2, 5), 1};
  CHECK(apply_deformed(id, P("1*v1", 2, 5)) == P("1*v1^5", 2, 5));
  CHECK(apply_deformed(id, P("1*v1^2", 2, 5)) == P("2*v1^6", 2, 5));

  // phi(v1) = 0, phi(v2) = v1 over F_3: D(v1^2*v2) = v1^2 * v1^3 = v1^5
  FpMatrix phi(2, 2, 3);
  phi.at(0, 1) = 1;  // column 1 is phi(v2) = v1
  DeformedDerivation d{phi, 1};
  CHECK(apply_deformed(d, P("1*v1^2*v2", 2, 3)) == P("1*v1^5", 2, 3));
  CHECK(apply_deformed(d, P("1*v1", 2, 3)).is_zero());

  // r = 0 gives an honest twisted derivation with no Frobenius shift
  DeformedDerivation d0{FpMatrix::identity(1, 3), 0};
  CHECK(apply_deformed(d0, P("1*v1^2", 1, 3)) == P("2*v1^2", 1, 3));

  DeformedDerivation wrong{FpMatrix::identity(3, 5), 1};
  CHECK_THROWS_AS(apply_deformed(wrong, P("1*v1", 2, 5)), std::invalid_argument);
}

TEST_CASE("deformed derivations satisfy Leibniz and kill p-th powers") {
  SplitMix64 rng(0xfeedbeefull);
  for (int trial = 0; trial < 60; ++trial) {
    std::uint32_t p = (trial % 2) ? 5 : 3;
    std::uint32_t nv = 2;
    FpMatrix phi(nv, nv, p);
    for (std::uint32_t i = 0; i < nv; ++i)
      for (std::uint32_t j = 0; j < nv; ++j) phi.at(i, j) = static_cast<std::uint32_t>(rng.below(p));
    DeformedDerivation d{phi, 1 + static_cast<std::uint32_t>(rng.below(2))};

    GradedPoly f(p, nv), g(p, nv);
    for (int t = 0; t < 3; ++t) {
      f.add_term({static_cast<std::uint32_t>(rng.below(4)), static_cast<std::uint32_t>(rng.below(4))},
                 static_cast<std::uint32_t>(rng.below(p)));
      g.add_term({static_cast<std::uint32_t>(rng.below(4)), static_cast<std::uint32_t>(rng.below(4))},
                 static_cast<std::uint32_t>(rng.below(p)));
    }
    auto lhs = apply_deformed(d, poly_mul(f, g));
    auto rhs = poly_add(poly_mul(apply_deformed(d, f), g), poly_mul(f, apply_deformed(d, g)));
    REQUIRE(lhs == rhs);
    REQUIRE(apply_deformed(d, poly_pow(f, p)).is_zero());
  }
}

TEST_CASE("frobenius decomposition") {
  auto f = P("1*v1^7+2*v1^3+1*v1", 1, 3);
  auto parts = frobenius_decompose(f);
  REQUIRE(parts.size() == 2);
  // v1^7 and v1 share residue exponent 1; v1^3 has residue 0
  auto b1 = parts.at({1});
  auto b0 = parts.at({0});
  CHECK(b1 == P("1*v1^6+1", 1, 3));
  CHECK(b0 == P("2*v1^3", 1, 3));
  for (const auto& [alpha, b] : parts) {
    for (const auto& [e, c] : b.terms)
      for (std::uint32_t i = 0; i < b.nvars; ++i) REQUIRE(e[i] % 3 == 0);
  }

  // reassembling the pieces gives f back
  GradedPoly sum(3, 1);
  for (const auto& [alpha, b] : parts) {
    GradedPoly mono(3, 1);
    mono.add_term(alpha, 1);
    sum = poly_add(sum, poly_mul(b, mono));
  }
  CHECK(sum == f);

  CHECK(frobenius_decompose(GradedPoly(3, 1)).empty());
}

TEST_CASE("homogeneous ideal validation") {
  auto v1 = P("1*v1", 2, 3);
  CHECK_NOTHROW(HomIdeal(3, 2, {v1}));
  CHECK_THROWS_AS(HomIdeal(4, 2, {}), std::invalid_argument);
  CHECK_THROWS_AS(HomIdeal(3, 2, {GradedPoly(3, 2)}), std::invalid_argument);  // zero gen
  CHECK_THROWS_AS(HomIdeal(3, 2, {P("1*v1+1", 2, 3)}), std::invalid_argument);  // not homogeneous
  CHECK_THROWS_AS(HomIdeal(3, 2, {P("1*v1", 2, 5)}), std::invalid_argument);    // ring mismatch
  CHECK_THROWS_AS(HomIdeal(3, 2, {P("1*v1", 1, 3)}), std::invalid_argument);
}

TEST_CASE("ideal membership") {
  HomIdeal j(5, 2, {P("1*v1+1*v2", 2, 5), P("1*v1*v2", 2, 5)});
  CHECK(ideal_contains(j, P("1*v1^2+1*v2^2", 2, 5)));
  CHECK(ideal_contains(j, P("2*v1+2*v2", 2, 5)));
  CHECK_FALSE(ideal_contains(j, P("1*v1", 2, 5)));
  CHECK_FALSE(ideal_contains(j, P("1", 2, 5)));
  CHECK(ideal_contains(j, GradedPoly(5, 2)));  // zero is in every ideal

  HomIdeal principal(3, 2, {P("1*v1", 2, 3)});
  CHECK(ideal_contains(principal, P("1*v1^4", 2, 3)));
  CHECK(ideal_contains(principal, P("2*v1^2*v2", 2, 3)));
  CHECK_FALSE(ideal_contains(principal, P("1*v2^3", 2, 3)));
  CHECK_FALSE(ideal_contains(principal, P("1*v1^2+1*v2^2", 2, 3)));

  CHECK_THROWS_AS(ideal_contains(principal, P("1*v1^2+1*v2", 2, 3)), std::invalid_argument);
  CHECK_THROWS_AS(ideal_contains(principal, P("1*v1", 2, 5)), std::invalid_argument);
}

TEST_CASE("degree budget refusals") {
  HomIdeal j(3, 4, {P("1*v1", 4, 3)});
  GradedPoly f(3, 4);
  f.add_term({20, 0, 0, 0}, 1);
  // C(23,3) = 1771 monomials of degree 20 in 4 vars, past a budget of 1000
  CHECK_THROWS_AS(ideal_contains(j, f, 1000), budget_error);
  CHECK(ideal_contains(j, f));  // default budget is large enough
}

TEST_CASE("window closure checks") {
  auto id2 = FpMatrix::identity(2, 3);
  HomIdeal principal(3, 2, {P("1*v1", 2, 3)});
  // D(v1) = v1^(3^r) stays inside (v1) for every r
  CHECK(window_closure_test(principal, P("1*v1", 2, 3), {id2}, 1, 3));

  // phi(v1) = v2 pushes v1 outside (v1)
  FpMatrix swap(2, 2, 3);
  swap.at(1, 0) = 1;
  swap.at(0, 1) = 1;
  CHECK_FALSE(window_closure_test(principal, P("1*v1", 2, 3), {swap}, 1, 1));

  // d(v1^7)/dv1 = 7 v1^6 = v1^6, times v1^3: v1^9 is in (v1^7); fails for the
  // twisted direction phi(v1) = v2 since v1^6 v2^3 is not
  HomIdeal j7(3, 2, {P("1*v1^7", 2, 3)});
  CHECK(window_closure_test(j7, P("1*v1^7", 2, 3), {id2}, 1, 1));
  CHECK_FALSE(window_closure_test(j7, P("1*v1^7", 2, 3), {swap}, 1, 1));

  // constants are killed by every deformed derivation
  CHECK(window_closure_test(principal, P("1", 2, 3), {id2, swap}, 1, 2));

  CHECK_THROWS_AS(window_closure_test(principal, P("1*v1", 2, 3), {id2}, 0, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(window_closure_test(principal, P("1*v1", 2, 3), {id2}, 2, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(window_closure_test(principal, P("1*v1+1", 2, 3), {id2}, 1, 1),
                  std::invalid_argument);
}

TEST_CASE("derivation stability") {
  CHECK(derivation_stable(HomIdeal(3, 2, {P("1*v1^3", 2, 3)})));
  CHECK(derivation_stable(HomIdeal(3, 2, {P("1*v1^3+1*v2^3", 2, 3)})));
  CHECK_FALSE(derivation_stable(HomIdeal(3, 2, {P("1*v1", 2, 3)})));
  // (v1^2, v1v2, v2^2) over F_5: d(v1^2)/dv1 = 2v1 has degree 1, not inside
  CHECK_FALSE(derivation_stable(HomIdeal(5, 2, {P("1*v1^2", 2, 5), P("1*v1*v2", 2, 5), P("1*v2^2", 2, 5)})));
  // same shape over F_3 contains all of degree >= 2, but the partials drop to
  // degree 1 so it is still unstable
  CHECK_FALSE(derivation_stable(HomIdeal(3, 2, {P("1*v1^2", 2, 3), P("1*v1*v2", 2, 3), P("1*v2^2", 2, 3)})));
}

TEST_CASE("control check against p-th power subring") {
  CHECK(control_check(HomIdeal(3, 1, {P("1*v1^3", 1, 3)}), 6));
  CHECK(control_check(HomIdeal(5, 2, {P("1*v1^5", 2, 5), P("1*v2^5", 2, 5)}), 10));
  CHECK_FALSE(control_check(HomIdeal(3, 2, {P("1*v1", 2, 3)}), 10));
  CHECK_FALSE(control_check(HomIdeal(3, 1, {P("1*v1^2", 1, 3)}), 6));
  CHECK_THROWS_AS(control_check(HomIdeal(3, 1, {P("1*v1^3", 1, 3)}), 2), std::invalid_argument);
}

TEST_CASE("monomial enumeration") {
  using liefp::detail::monomial_count;
  using liefp::detail::monomials_of_degree;
  CHECK(monomial_count(2, 3) == 4);
  CHECK(monomial_count(3, 2) == 6);
  CHECK(monomial_count(1, 100) == 1);
  auto ms = monomials_of_degree(2, 2, kDefaultDegreeBudget);
  REQUIRE(ms.size() == 3);
  // lex descending
  CHECK(ms[0] == std::vector<std::uint32_t>{2, 0});
  CHECK(ms[1] == std::vector<std::uint32_t>{1, 1});
  CHECK(ms[2] == std::vector<std::uint32_t>{0, 2});
  CHECK_THROWS_AS(monomials_of_degree(4, 20, 1000), budget_error);
}
