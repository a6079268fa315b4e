#pragma once

// Named invariant suites behind "verify": each runs a batch of exact checks
// and reports counts plus human-readable failure strings. A clean suite means
// zero failures; nothing here throws on a falsified identity.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "liefp/chevalley.hpp"
#include "liefp/graded.hpp"
#include "liefp/orbits.hpp"
#include "liefp/prng.hpp"
#include "liefp/root_system.hpp"

namespace liefp {

struct SuiteOutcome {
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  nlohmann::json details = nlohmann::json::object();
};

// The reference row set: every classified system the table covers, with the
// frozen expected numbers (dim of the algebra, the invariant u, the dual
// Coxeter number; the special-root count is always u - 2).
struct TableRow {
  const char* name;
  char family;
  int rank;
  int dim;
  int u;
  int dual_coxeter;
};

inline const std::vector<TableRow>& reference_table() {
  static const std::vector<TableRow> rows = {
      {"A1", 'A', 1, 3, 2, 2},    {"A2", 'A', 2, 8, 4, 3},    {"A3", 'A', 3, 15, 6, 4},
      {"A4", 'A', 4, 24, 8, 5},   {"A5", 'A', 5, 35, 10, 6},  {"A6", 'A', 6, 48, 12, 7},
      {"A7", 'A', 7, 63, 14, 8},  {"A8", 'A', 8, 80, 16, 9},  {"B2", 'B', 2, 10, 4, 3},
      {"B3", 'B', 3, 21, 8, 5},   {"B4", 'B', 4, 36, 12, 7},  {"B5", 'B', 5, 55, 16, 9},
      {"B6", 'B', 6, 78, 20, 11}, {"C2", 'C', 2, 10, 4, 3},   {"C3", 'C', 3, 21, 6, 4},
      {"C4", 'C', 4, 36, 8, 5},   {"C5", 'C', 5, 55, 10, 6},  {"C6", 'C', 6, 78, 12, 7},
      {"D3", 'D', 3, 15, 6, 4},   {"D4", 'D', 4, 28, 10, 6},  {"D5", 'D', 5, 45, 14, 8},
      {"D6", 'D', 6, 66, 18, 10}, {"D7", 'D', 7, 91, 22, 12}, {"D8", 'D', 8, 120, 26, 14},
      {"E6", 'E', 6, 78, 22, 12}, {"E7", 'E', 7, 133, 34, 18}, {"E8", 'E', 8, 248, 58, 30},
      {"F4", 'F', 4, 52, 16, 9},  {"G2", 'G', 2, 14, 6, 4}};
  return rows;
}

// ---------------------------------------------------------------------------

inline SuiteOutcome suite_jacobi(bool full) {
  SuiteOutcome out;
  std::vector<TableRow> systems;
  for (const auto& row : reference_table()) {
    bool small = row.rank <= 4 && row.family != 'E';
    if (small || (full && row.family == 'E')) systems.push_back(row);
  }
  auto js = nlohmann::json::array();
  for (const auto& row : systems) {
    try {
      auto alg = chevalley_algebra(build_root_system(row.family, row.rank));
      std::uint64_t triples = verify_jacobi(alg);
      js.push_back({{"system", row.name}, {"triples", triples}});
      ++out.checks;
    } catch (const std::exception& e) {
      out.failures.push_back(std::string(row.name) + ": " + e.what());
    }
  }
  out.details["systems"] = std::move(js);
  return out;
}

inline SuiteOutcome suite_table() {
  SuiteOutcome out;
  for (const auto& row : reference_table()) {
    try {
      auto rs = build_root_system(row.family, row.rank);
      long long u = u_invariant(rs);  // cross-checks u = 2h'-2 = |S|+2 internally
      long long d = dim_g(rs);
      long long h = dual_coxeter(rs);
      long long s = static_cast<long long>(special_roots(rs).size());
      long long pairing = two_rho_theta_pairing(rs);
      ++out.checks;
      if (u != row.u || d != row.dim || h != row.dual_coxeter || s != row.u - 2 || pairing != u)
        out.failures.push_back(std::string(row.name) + ": got dim=" + std::to_string(d) +
                               " u=" + std::to_string(u) + " h'=" + std::to_string(h) +
                               " |S|=" + std::to_string(s) + ", expected dim=" +
                               std::to_string(row.dim) + " u=" + std::to_string(row.u));
    } catch (const std::exception& e) {
      out.failures.push_back(std::string(row.name) + ": " + e.what());
    }
  }
  return out;
}

inline SuiteOutcome suite_adtheta() {
  SuiteOutcome out;
  std::uint64_t skipped = 0;
  for (const auto& row : reference_table()) {
    auto rs = build_root_system(row.family, row.rank);
    auto alg = chevalley_algebra(rs);
    long long target = two_rho_theta_pairing(rs);
    for (std::uint32_t p : {5u, 7u, 11u}) {
      if (!is_nice_prime(rs, p)) {
        ++skipped;
        continue;
      }
      try {
        ad_highest_root_image(alg, p);  // throws unless the image is <e_theta, h_theta, S part>
        auto m = adjoint_matrix(alg, alg.unit(alg.e_index(highest_root(rs))), p);
        ++out.checks;
        if (static_cast<long long>(rank(m)) != target)
          out.failures.push_back(std::string(row.name) + " p=" + std::to_string(p) +
                                 ": rank ad(e_theta) != " + std::to_string(target));
      } catch (const std::exception& e) {
        out.failures.push_back(std::string(row.name) + " p=" + std::to_string(p) + ": " + e.what());
      }
    }
  }
  out.details["skipped_non_nice"] = skipped;
  return out;
}

inline SuiteOutcome suite_derhyp(std::uint64_t seed) {
  SuiteOutcome out;
  const std::uint32_t p = 3;
  for (std::size_t d = 1; d <= 3; ++d) {
    auto subs = all_subspaces(d, p);
    std::vector<LieRep> reps;
    reps.push_back(gl_natural_rep(d, p));
    if (d >= 2) reps.push_back(sl_natural_rep(d, p));
    LieRep zero;
    zero.p = p;
    zero.d = d;
    zero.operators.push_back(FpMatrix(d, d, p));
    zero.label = "zero";
    reps.push_back(zero);
    SplitMix64 rng(seed ^ (0x9e3779b97f4a7c15ull * d));
    for (int k = 0; k < 100; ++k) {
      LieRep r;
      r.p = p;
      r.d = d;
      r.label = "random";
      std::size_t m = 1 + static_cast<std::size_t>(rng.below(3));
      for (std::size_t i = 0; i < m; ++i) {
        FpMatrix a(d, d, p);
        for (auto& cell : a.a) cell = static_cast<std::uint32_t>(rng.below(p));
        r.operators.push_back(std::move(a));
      }
      reps.push_back(std::move(r));
    }
    for (const auto& rep : reps)
      for (const auto& u : subs) {
        try {
          dual_span_equivalence(rep, u);  // throws if the two booleans ever agree
          ++out.checks;
        } catch (const std::exception& e) {
          out.failures.push_back("d=" + std::to_string(d) + " rep=" + rep.label +
                                 " dim U=" + std::to_string(u.dim()) + ": " + e.what());
        }
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// graded suite helpers

namespace detail {

inline GradedPoly random_poly(SplitMix64& rng, std::uint32_t p, std::uint32_t nvars,
                              std::uint32_t max_terms, std::uint32_t max_exp) {
  GradedPoly f(p, nvars);
  std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
  for (std::uint32_t k = 0; k < t; ++k) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& x : e) x = static_cast<std::uint32_t>(rng.below(max_exp + 1));
    f.add_term(e, static_cast<std::uint32_t>(rng.below(p)));
  }
  return f;
}

inline GradedPoly random_homogeneous(SplitMix64& rng, std::uint32_t p, std::uint32_t nvars,
                                     std::uint64_t degree, std::uint32_t max_terms) {
  GradedPoly f(p, nvars);
  std::uint32_t t = 1 + static_cast<std::uint32_t>(rng.below(max_terms));
  for (std::uint32_t k = 0; k < t; ++k) {
    std::vector<std::uint32_t> e(nvars, 0);
    std::uint64_t left = degree;
    for (std::uint32_t i = 0; i + 1 < nvars; ++i) {
      e[i] = static_cast<std::uint32_t>(rng.below(left + 1));
      left -= e[i];
    }
    e[nvars - 1] = static_cast<std::uint32_t>(left);
    f.add_term(e, static_cast<std::uint32_t>(rng.below(p)));
  }
  return f;
}

inline FpMatrix random_matrix(SplitMix64& rng, std::size_t n, std::uint32_t p) {
  FpMatrix m(n, n, p);
  for (auto& cell : m.a) cell = static_cast<std::uint32_t>(rng.below(p));
  return m;
}

}  // namespace detail

inline SuiteOutcome suite_graded(std::uint64_t seed) {
  SuiteOutcome out;
  SplitMix64 rng(seed ^ 0x5eedf00dull);
  auto fail = [&](const std::string& s) { out.failures.push_back(s); };

  // Leibniz on random pairs
  for (int k = 0; k < 1000; ++k) {
    std::uint32_t p = (k % 2) ? 5 : 3;
    GradedPoly f = detail::random_poly(rng, p, 2, 3, 3), g = detail::random_poly(rng, p, 2, 3, 3);
    DeformedDerivation d{detail::random_matrix(rng, 2, p), 1 + (std::uint32_t)rng.below(2)};
    ++out.checks;
    if (apply_deformed(d, poly_mul(f, g)) !=
        poly_add(poly_mul(f, apply_deformed(d, g)), poly_mul(g, apply_deformed(d, f))))
      fail("Leibniz failed, case " + std::to_string(k));
  }

  // D(f^p) = 0
  for (int k = 0; k < 200; ++k) {
    std::uint32_t p = (k % 2) ? 5 : 3;
    GradedPoly f = detail::random_poly(rng, p, 2, 3, 2);
    DeformedDerivation d{detail::random_matrix(rng, 2, p), 1 + (std::uint32_t)rng.below(2)};
    ++out.checks;
    if (!apply_deformed(d, poly_pow(f, p)).is_zero())
      fail("D(f^p) != 0, case " + std::to_string(k));
  }

  // degree law: homogeneous degree e maps to zero or degree e - 1 + p^r
  for (int k = 0; k < 200; ++k) {
    std::uint32_t p = (k % 2) ? 5 : 3;
    std::uint64_t e = 1 + rng.below(5);
    GradedPoly f = detail::random_homogeneous(rng, p, 2, e, 3);
    std::uint32_t r = 1 + (std::uint32_t)rng.below(2);
    DeformedDerivation d{detail::random_matrix(rng, 2, p), r};
    GradedPoly df = apply_deformed(d, f);
    ++out.checks;
    if (!df.is_zero() && !(df.is_homogeneous() && df.degree() == e - 1 + shift_power(p, r)))
      fail("degree law failed, case " + std::to_string(k));
  }

  // b1 decomposition round-trip
  for (int k = 0; k < 200; ++k) {
    std::uint32_t p = (k % 2) ? 5 : 3;
    GradedPoly f = detail::random_poly(rng, p, 2, 4, 7);
    auto comps = frobenius_decompose(f);
    GradedPoly back(p, 2);
    bool shape_ok = true;
    for (const auto& [alpha, b] : comps) {
      for (auto a : alpha) shape_ok = shape_ok && a < p;
      for (const auto& [e, c] : b.terms)
        for (auto x : e) shape_ok = shape_ok && x % p == 0;
      GradedPoly mono(p, 2);
      mono.add_term(alpha, 1);
      back = poly_add(back, poly_mul(b, mono));
    }
    ++out.checks;
    if (!shape_ok || back != f) fail("b1 decomposition round-trip failed, case " + std::to_string(k));
  }

  // linearity of D in phi
  for (int k = 0; k < 100; ++k) {
    std::uint32_t p = (k % 2) ? 5 : 3;
    GradedPoly f = detail::random_poly(rng, p, 2, 3, 3);
    FpMatrix m1 = detail::random_matrix(rng, 2, p), m2 = detail::random_matrix(rng, 2, p);
    FpMatrix msum(2, 2, p);
    for (std::size_t i = 0; i < msum.a.size(); ++i) msum.a[i] = fp_add(m1.a[i], m2.a[i], p);
    std::uint32_t r = 1 + (std::uint32_t)rng.below(2);
    ++out.checks;
    if (apply_deformed({msum, r}, f) !=
        poly_add(apply_deformed({m1, r}, f), apply_deformed({m2, r}, f)))
      fail("phi-linearity failed, case " + std::to_string(k));
  }

  // fixed application examples
  {
    GradedPoly v1(5, 2);
    v1.add_term({1, 0}, 1);
    DeformedDerivation d{FpMatrix::identity(2, 5), 1};
    ++out.checks;
    if (to_string(apply_deformed(d, v1)) != "1*v1^5") fail("D(v1) != v1^5");
    GradedPoly v1sq(5, 2);
    v1sq.add_term({2, 0}, 1);
    ++out.checks;
    if (to_string(apply_deformed(d, v1sq)) != "2*v1^6") fail("D(v1^2) != 2*v1^6");
    FpMatrix phi(2, 2, 3);  // phi(v1) = 0, phi(v2) = v1
    phi.at(0, 1) = 1;
    GradedPoly f = parse_poly("1*v1^2*v2", 2, 3);
    ++out.checks;
    if (to_string(apply_deformed({phi, 1}, f)) != "1*v1^5") fail("D(v1^2 v2) != v1^5");
  }

  // membership against the naive span oracle over F_3, two variables
  {
    const std::uint32_t p = 3;
    auto check_ideal = [&](const HomIdeal& j) {
      for (std::uint64_t e = 0; e <= 4; ++e) {
        detail::DegreePiece piece(2, e, kDefaultDegreeBudget);
        auto rows = detail::ideal_piece_rows(j, e, piece, kDefaultDegreeBudget);
        // every F_3 combination of the spanning products, encoded base 3
        auto encode = [&](const std::vector<std::uint32_t>& v) {
          std::uint64_t code = 0;
          for (auto x : v) code = code * 3 + x % 3;
          return code;
        };
        std::unordered_set<std::uint64_t> achievable;
        std::size_t n = piece.monomials.size();
        std::vector<std::uint32_t> combo(rows.size(), 0);
        for (;;) {
          std::vector<std::uint32_t> sum(n, 0);
          for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t c = 0; c < n; ++c)
              sum[c] = fp_add(sum[c], fp_mul(combo[i], rows[i][c], p), p);
          achievable.insert(encode(sum));
          std::size_t i = 0;
          while (i < combo.size() && combo[i] == p - 1) combo[i++] = 0;
          if (i == combo.size()) break;
          ++combo[i];
        }
        // walk every homogeneous candidate of this degree
        std::vector<std::uint32_t> cand(n, 0);
        for (;;) {
          GradedPoly f = piece.poly(cand, p, 2);
          ++out.checks;
          if (ideal_contains(j, f) != (achievable.count(encode(cand)) > 0))
            fail("membership oracle disagreement at degree " + std::to_string(e));
          std::size_t i = 0;
          while (i < cand.size() && cand[i] == p - 1) cand[i++] = 0;
          if (i == cand.size()) break;
          ++cand[i];
        }
      }
    };
    check_ideal(HomIdeal(p, 2, {parse_poly("1*v1", 2, p)}));
    check_ideal(HomIdeal(p, 2, {parse_poly("1*v1^2+2*v2^2", 2, p), parse_poly("1*v1*v2", 2, p)}));
    for (int k = 0; k < 10; ++k) {
      std::vector<GradedPoly> gens;
      std::uint32_t m = 1 + (std::uint32_t)rng.below(2);
      for (std::uint32_t i = 0; i < m; ++i) {
        GradedPoly g(p, 2);
        while (g.is_zero()) g = detail::random_homogeneous(rng, p, 2, 1 + rng.below(3), 3);
        gens.push_back(std::move(g));
      }
      check_ideal(HomIdeal(p, 2, std::move(gens)));
    }
  }

  // fixed membership examples
  {
    HomIdeal j1(3, 2, {parse_poly("1*v1", 2, 3)});
    ++out.checks;
    if (!ideal_contains(j1, parse_poly("1*v1*v2", 2, 3))) fail("v1*v2 not in (v1)");
    ++out.checks;
    if (ideal_contains(j1, parse_poly("1*v2^2", 2, 3))) fail("v2^2 in (v1)");
    HomIdeal j2(5, 2, {parse_poly("1*v1+1*v2", 2, 5), parse_poly("1*v1*v2", 2, 5)});
    ++out.checks;
    if (!ideal_contains(j2, parse_poly("1*v1^2+1*v2^2", 2, 5))) fail("v1^2+v2^2 not in ideal");
  }

  // windowed closure examples
  {
    std::vector<FpMatrix> id5 = {FpMatrix::identity(1, 5)};
    HomIdeal jv(5, 1, {parse_poly("1*v1", 1, 5)});
    ++out.checks;
    if (!window_closure_test(jv, parse_poly("1*v1", 1, 5), id5, 1, 3)) fail("closure (v1) window");
    HomIdeal jv7(5, 1, {parse_poly("1*v1^7", 1, 5)});
    ++out.checks;
    if (window_closure_test(jv7, parse_poly("1*v1", 1, 5), id5, 1, 1)) fail("closure (v1^7) window");
    HomIdeal jsq(5, 1, {parse_poly("1*v1^2", 1, 5)});
    ++out.checks;
    if (!window_closure_test(jsq, parse_poly("3", 1, 5), id5, 1, 2)) fail("closure on a constant");
  }

  // derivation stability examples
  {
    ++out.checks;
    if (!derivation_stable(HomIdeal(3, 2, {parse_poly("1*v1^3", 2, 3)}))) fail("(v1^p) not stable");
    ++out.checks;
    if (derivation_stable(HomIdeal(3, 2, {parse_poly("1*v1", 2, 3)}))) fail("(v1) stable");
    ++out.checks;
    if (derivation_stable(HomIdeal(5, 2, {parse_poly("1*v1^2", 2, 5), parse_poly("1*v1*v2", 2, 5),
                                          parse_poly("1*v2^2", 2, 5)})))
      fail("(v1^2, v1v2, v2^2) stable");
  }

  // control checks
  {
    ++out.checks;
    if (!control_check(HomIdeal(3, 2, {parse_poly("1*v1^3", 2, 3)}), 6)) fail("(v1^p) not controlled");
    ++out.checks;
    if (!control_check(HomIdeal(5, 2, {parse_poly("1*v1^5", 2, 5), parse_poly("1*v2^5", 2, 5)}), 10))
      fail("(v1^p, v2^p) not controlled");
    ++out.checks;
    if (control_check(HomIdeal(5, 2, {parse_poly("1*v1", 2, 5)}), 10)) fail("(v1) controlled");
    // generators inside the p-th power subring are always controlled
    for (int k = 0; k < 10; ++k) {
      GradedPoly g(3, 2);
      while (g.is_zero()) g = detail::random_poly(rng, 3, 2, 3, 2);
      GradedPoly gp(3, 2);  // inflate every exponent by p
      std::uint64_t deg = 0;
      bool hom = true;
      std::optional<std::uint64_t> d0;
      for (const auto& [e, c] : g.terms) {
        std::vector<std::uint32_t> ep(e);
        for (auto& x : ep) x *= 3;
        gp.add_term(ep, c);
      }
      for (const auto& [e, c] : gp.terms) {
        std::uint64_t te = gp.term_degree(e);
        if (!d0) d0 = te;
        hom = hom && te == *d0;
        deg = std::max(deg, te);
      }
      if (!hom) continue;  // only homogeneous inflations make a valid ideal
      ++out.checks;
      if (!control_check(HomIdeal(3, 2, {gp}), deg + 3))
        fail("B1-generated ideal not controlled, case " + std::to_string(k));
    }
  }

  return out;
}

}  // namespace liefp
