#pragma once

// Sparse multivariate polynomials over F_p, graded by total degree, with the
// deformed-derivation calculus: D(f) = sum_i (df/dv_i) * L_i^(p^r) for linear
// forms L_i = phi(v_i), membership tests in homogeneous ideals by per-degree
// linear algebra, the decomposition over the p-th-power subring, and the
// degreewise control check J = (J n k[v^p]) B.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liefp/fp.hpp"

namespace liefp {

struct GradedPoly {
  std::uint32_t p = 3;
  std::uint32_t nvars = 1;
  // exponent vector (length nvars) -> coefficient in [1, p)
  std::map<std::vector<std::uint32_t>, std::uint32_t> terms;

  GradedPoly() = default;
  GradedPoly(std::uint32_t mod, std::uint32_t vars) : p(mod), nvars(vars) {
    require_odd_prime(mod);
    if (vars == 0) throw std::invalid_argument("polynomial ring needs at least one variable");
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const std::vector<std::uint32_t>& exps, std::uint32_t c) {
    if (exps.size() != nvars) throw std::invalid_argument("exponent vector length mismatch");
    c %= p;
    if (!c) return;
    auto it = terms.find(exps);
    if (it == terms.end()) {
      terms.emplace(exps, c);
    } else {
      it->second = fp_add(it->second, c, p);
      if (!it->second) terms.erase(it);
    }
  }

  std::uint64_t term_degree(const std::vector<std::uint32_t>& exps) const {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }

  std::uint64_t degree() const {  // total degree; zero polynomial reports 0
    std::uint64_t d = 0;
    for (const auto& [e, c] : terms) d = std::max(d, term_degree(e));
    return d;
  }

  bool is_homogeneous() const {
    std::optional<std::uint64_t> d;
    for (const auto& [e, c] : terms) {
      std::uint64_t t = term_degree(e);
      if (!d) d = t;
      else if (*d != t) return false;
    }
    return true;
  }

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return a.p == b.p && a.nvars == b.nvars && a.terms == b.terms;
  }
  friend bool operator!=(const GradedPoly& a, const GradedPoly& b) { return !(a == b); }
};

namespace detail {
inline void check_same_ring(const GradedPoly& a, const GradedPoly& b) {
  if (a.p != b.p || a.nvars != b.nvars)
    throw std::invalid_argument("polynomials live in different rings");
}
}  // namespace detail

inline GradedPoly poly_add(const GradedPoly& a, const GradedPoly& b) {
  detail::check_same_ring(a, b);
  GradedPoly r = a;
  for (const auto& [e, c] : b.terms) r.add_term(e, c);
  return r;
}

inline GradedPoly poly_scale(const GradedPoly& a, std::uint32_t c) {
  GradedPoly r(a.p, a.nvars);
  c %= a.p;
  for (const auto& [e, k] : a.terms) r.add_term(e, fp_mul(k, c, a.p));
  return r;
}

inline GradedPoly poly_sub(const GradedPoly& a, const GradedPoly& b) {
  return poly_add(a, poly_scale(b, b.p - 1));
}

inline GradedPoly poly_mul(const GradedPoly& a, const GradedPoly& b) {
  detail::check_same_ring(a, b);
  GradedPoly r(a.p, a.nvars);
  std::vector<std::uint32_t> e(a.nvars);
  for (const auto& [ea, ca] : a.terms)
    for (const auto& [eb, cb] : b.terms) {
      for (std::uint32_t i = 0; i < a.nvars; ++i) {
        std::uint64_t s = (std::uint64_t)ea[i] + eb[i];
        if (s > (1u << 30)) throw budget_error("exponent overflow in polynomial product");
        e[i] = static_cast<std::uint32_t>(s);
      }
      r.add_term(e, fp_mul(ca, cb, a.p));
    }
  return r;
}

inline GradedPoly poly_pow(const GradedPoly& a, std::uint64_t k) {
  GradedPoly acc(a.p, a.nvars);
  acc.add_term(std::vector<std::uint32_t>(a.nvars, 0), 1);
  GradedPoly base = a;
  while (k) {
    if (k & 1) acc = poly_mul(acc, base);
    base = poly_mul(base, base);
    k >>= 1;
  }
  return acc;
}

inline GradedPoly poly_derivative(const GradedPoly& a, std::uint32_t var) {
  if (var >= a.nvars) throw std::invalid_argument("derivative: variable index out of range");
  GradedPoly r(a.p, a.nvars);
  for (const auto& [e, c] : a.terms) {
    if (e[var] == 0) continue;
    std::uint32_t factor = e[var] % a.p;
    if (!factor) continue;
    auto exps = e;
    exps[var] -= 1;
    r.add_term(exps, fp_mul(c, factor, a.p));
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text form. Canonical printing lists terms in descending graded-lex order as
// "c*v1^e1*...*vd^ed" joined by "+" (coefficients in [0,p), exponent 1
// implicit, zero exponents omitted); the zero polynomial prints "0".

inline std::string to_string(const GradedPoly& f) {
  if (f.is_zero()) return "0";
  std::vector<std::pair<std::vector<std::uint32_t>, std::uint32_t>> ts(f.terms.begin(),
                                                                       f.terms.end());
  std::sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    std::uint64_t da = f.term_degree(a.first), db = f.term_degree(b.first);
    if (da != db) return da > db;
    return a.first > b.first;
  });
  std::string out;
  for (std::size_t t = 0; t < ts.size(); ++t) {
    if (t) out += "+";
    out += std::to_string(ts[t].second);
    for (std::uint32_t i = 0; i < f.nvars; ++i) {
      std::uint32_t e = ts[t].first[i];
      if (!e) continue;
      out += "*v" + std::to_string(i + 1);
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

inline GradedPoly parse_poly(const std::string& text, std::uint32_t nvars, std::uint32_t p) {
  GradedPoly f(p, nvars);
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw std::invalid_argument("empty polynomial text");
  std::size_t pos = 0;
  auto read_uint = [&](const char* what) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
      throw std::invalid_argument(std::string("expected ") + what + " at position " +
                                  std::to_string(pos) + " in \"" + text + "\"");
    std::uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (1ull << 31)) throw std::invalid_argument("number too large in polynomial text");
      ++pos;
    }
    return static_cast<std::uint32_t>(v);
  };
  for (;;) {
    std::uint32_t coeff = read_uint("coefficient");
    if (coeff >= p)
      throw std::invalid_argument("coefficient " + std::to_string(coeff) +
                                  " out of range for modulus " + std::to_string(p));
    std::vector<std::uint32_t> exps(nvars, 0);
    while (pos < s.size() && s[pos] == '*') {
      ++pos;
      if (pos >= s.size() || s[pos] != 'v')
        throw std::invalid_argument("expected variable after '*' in \"" + text + "\"");
      ++pos;
      std::uint32_t idx = read_uint("variable index");
      if (idx < 1 || idx > nvars)
        throw std::invalid_argument("variable v" + std::to_string(idx) + " out of range");
      std::uint32_t e = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        e = read_uint("exponent");
      }
      std::uint64_t tot = (std::uint64_t)exps[idx - 1] + e;
      if (tot > (1u << 30)) throw std::invalid_argument("exponent too large");
      exps[idx - 1] = static_cast<std::uint32_t>(tot);
    }
    f.add_term(exps, coeff);
    if (pos == s.size()) break;
    if (s[pos] != '+')
      throw std::invalid_argument("unexpected character '" + std::string(1, s[pos]) +
                                  "' in \"" + text + "\"");
    ++pos;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Deformed derivations

// D = sum_i (d/dv_i) * phi(v_i)^(p^r): phi is an endomorphism of the span of
// the variables (column i = the linear form phi(v_i)); r is the shift, r = 0
// gives an ordinary derivation.
struct DeformedDerivation {
  FpMatrix phi;
  std::uint32_t r = 1;
};

inline std::uint64_t shift_power(std::uint32_t p, std::uint32_t r) {
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > (1u << 20)) throw budget_error("p^r shift exponent too large");
  }
  return q;
}

// In characteristic p a linear form to the p^r is computed coordinatewise:
// (sum c_j v_j)^(p^r) = sum c_j v_j^(p^r), since c^(p^r) = c on F_p.
inline GradedPoly apply_deformed(const DeformedDerivation& d, const GradedPoly& f) {
  if (d.phi.rows != f.nvars || d.phi.cols != f.nvars || d.phi.p != f.p)
    throw std::invalid_argument("deformed derivation does not match the polynomial ring");
  std::uint64_t q = shift_power(f.p, d.r);
  GradedPoly out(f.p, f.nvars);
  for (std::uint32_t i = 0; i < f.nvars; ++i) {
    GradedPoly di = poly_derivative(f, i);
    if (di.is_zero()) continue;
    GradedPoly li(f.p, f.nvars);  // phi(v_i)^(p^r)
    for (std::uint32_t j = 0; j < f.nvars; ++j) {
      std::uint32_t c = d.phi.at(j, i);
      if (!c) continue;
      std::vector<std::uint32_t> e(f.nvars, 0);
      e[j] = static_cast<std::uint32_t>(q);
      li.add_term(e, c);
    }
    out = poly_add(out, poly_mul(di, li));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Homogeneous ideals and per-degree linear algebra

struct HomIdeal {
  std::uint32_t p = 3;
  std::uint32_t nvars = 1;
  std::vector<GradedPoly> gens;

  HomIdeal(std::uint32_t mod, std::uint32_t vars, std::vector<GradedPoly> generators)
      : p(mod), nvars(vars), gens(std::move(generators)) {
    require_odd_prime(mod);
    for (const auto& g : gens) {
      if (g.p != p || g.nvars != nvars)
        throw std::invalid_argument("ideal generator lives in a different ring");
      if (g.is_zero()) throw std::invalid_argument("ideal generators must be nonzero");
      if (!g.is_homogeneous()) throw std::invalid_argument("ideal generators must be homogeneous");
    }
  }
};

inline constexpr std::uint64_t kDefaultDegreeBudget = 100000;

namespace detail {

inline std::uint64_t monomial_count(std::uint32_t nvars, std::uint64_t e) {
  // C(e + nvars - 1, nvars - 1), saturating
  unsigned __int128 num = 1;
  for (std::uint32_t i = 1; i < nvars; ++i) {
    num = num * (e + i) / i;  // exact: product of i consecutive integers is divisible by i!
    if (num > (unsigned __int128)1 << 62) return ~0ull;
  }
  return static_cast<std::uint64_t>(num);
}

inline void list_monomials(std::uint32_t nvars, std::uint64_t e, std::vector<std::uint32_t>& cur,
                           std::uint32_t var, std::vector<std::vector<std::uint32_t>>& out) {
  if (var + 1 == nvars) {
    cur[var] = static_cast<std::uint32_t>(e);
    out.push_back(cur);
    return;
  }
  for (std::uint64_t k = e + 1; k-- > 0;) {
    cur[var] = static_cast<std::uint32_t>(k);
    list_monomials(nvars, e - k, cur, var + 1, out);
  }
}

// All monomials of total degree e, lex-descending; throws past the budget.
inline std::vector<std::vector<std::uint32_t>> monomials_of_degree(std::uint32_t nvars,
                                                                   std::uint64_t e,
                                                                   std::uint64_t budget) {
  std::uint64_t count = monomial_count(nvars, e);
  if (count > budget)
    throw budget_error("degree-" + std::to_string(e) + " piece has " + std::to_string(count) +
                       " monomials, above the budget of " + std::to_string(budget));
  std::vector<std::vector<std::uint32_t>> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<std::uint32_t> cur(nvars, 0);
  list_monomials(nvars, e, cur, 0, out);
  return out;
}

struct DegreePiece {
  std::vector<std::vector<std::uint32_t>> monomials;
  std::map<std::vector<std::uint32_t>, std::size_t> index;

  DegreePiece(std::uint32_t nvars, std::uint64_t e, std::uint64_t budget)
      : monomials(monomials_of_degree(nvars, e, budget)) {
    for (std::size_t i = 0; i < monomials.size(); ++i) index.emplace(monomials[i], i);
  }

  std::vector<std::uint32_t> coords(const GradedPoly& f) const {
    std::vector<std::uint32_t> v(monomials.size(), 0);
    for (const auto& [e, c] : f.terms) v[index.at(e)] = c;
    return v;
  }

  GradedPoly poly(const std::vector<std::uint32_t>& v, std::uint32_t p, std::uint32_t nvars) const {
    GradedPoly f(p, nvars);
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] % p) f.add_term(monomials[i], v[i]);
    return f;
  }
};

// Spanning rows for the degree-e graded piece of the ideal.
inline std::vector<std::vector<std::uint32_t>> ideal_piece_rows(const HomIdeal& j, std::uint64_t e,
                                                                const DegreePiece& piece,
                                                                std::uint64_t budget) {
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& g : j.gens) {
    std::uint64_t dg = g.degree();
    if (dg > e) continue;
    for (const auto& m : monomials_of_degree(j.nvars, e - dg, budget)) {
      GradedPoly mono(j.p, j.nvars);
      mono.add_term(m, 1);
      rows.push_back(piece.coords(poly_mul(mono, g)));
    }
  }
  return rows;
}

}  // namespace detail

// Membership of a homogeneous f in the ideal, decided inside the one graded
// piece f lives in. The zero polynomial is a member of every ideal.
inline bool ideal_contains(const HomIdeal& j, const GradedPoly& f,
                           std::uint64_t budget = kDefaultDegreeBudget) {
  if (f.p != j.p || f.nvars != j.nvars)
    throw std::invalid_argument("ideal_contains: polynomial lives in a different ring");
  if (f.is_zero()) return true;
  if (!f.is_homogeneous()) throw std::invalid_argument("ideal_contains: polynomial must be homogeneous");
  std::uint64_t e = f.degree();
  detail::DegreePiece piece(j.nvars, e, budget);
  auto rows = detail::ideal_piece_rows(j, e, piece, budget);
  return span(rows, piece.monomials.size(), j.p).contains(piece.coords(f));
}

// Does every deformed derivation built from the given endomorphisms, over all
// shifts in [r_lo, r_hi], send y into the ideal?
inline bool window_closure_test(const HomIdeal& j, const GradedPoly& y,
                                const std::vector<FpMatrix>& phis, std::uint32_t r_lo,
                                std::uint32_t r_hi, std::uint64_t budget = kDefaultDegreeBudget) {
  if (r_lo < 1 || r_lo > r_hi) throw std::invalid_argument("window must satisfy 1 <= r_lo <= r_hi");
  if (y.p != j.p || y.nvars != j.nvars)
    throw std::invalid_argument("window_closure_test: polynomial lives in a different ring");
  if (!y.is_homogeneous()) throw std::invalid_argument("window_closure_test: y must be homogeneous");
  for (const auto& phi : phis)
    for (std::uint32_t r = r_lo; r <= r_hi; ++r)
      if (!ideal_contains(j, apply_deformed({phi, r}, y), budget)) return false;
  return true;
}

// dJ/dv_i stays inside J for every generator and variable. By the Leibniz
// rule this already makes the ideal stable under every derivation of the
// polynomial ring (they are combinations of the partials over the ring).
inline bool derivation_stable(const HomIdeal& j, std::uint64_t budget = kDefaultDegreeBudget) {
  for (const auto& g : j.gens)
    for (std::uint32_t i = 0; i < j.nvars; ++i)
      if (!ideal_contains(j, poly_derivative(g, i), budget)) return false;
  return true;
}

// Unique decomposition f = sum_alpha b_alpha v^alpha with alpha in [0,p-1]^d
// and b_alpha in the subring generated by p-th powers. Only nonzero
// components are returned.
inline std::map<std::vector<std::uint32_t>, GradedPoly> frobenius_decompose(const GradedPoly& f) {
  std::map<std::vector<std::uint32_t>, GradedPoly> out;
  for (const auto& [e, c] : f.terms) {
    std::vector<std::uint32_t> alpha(f.nvars), base(f.nvars);
    for (std::uint32_t i = 0; i < f.nvars; ++i) {
      alpha[i] = e[i] % f.p;
      base[i] = e[i] - alpha[i];
    }
    auto it = out.find(alpha);
    if (it == out.end()) it = out.emplace(alpha, GradedPoly(f.p, f.nvars)).first;
    it->second.add_term(base, c);
  }
  return out;
}

// Degreewise check that J is generated by its intersection with the subring
// of p-th powers: for every degree up to the bound, the degree piece of
// (J n k[v^p]) B must equal the degree piece of J.
inline bool control_check(const HomIdeal& j, std::uint64_t degree_bound,
                          std::uint64_t budget = kDefaultDegreeBudget) {
  for (const auto& g : j.gens)
    if (g.degree() > degree_bound)
      throw std::invalid_argument("control_check: degree bound below a generator degree");
  std::vector<std::vector<GradedPoly>> pth_power_layers(degree_bound + 1);
  for (std::uint64_t e = 0; e <= degree_bound; ++e) {
    detail::DegreePiece piece(j.nvars, e, budget);
    Subspace je = span(detail::ideal_piece_rows(j, e, piece, budget), piece.monomials.size(), j.p);

    if (e % j.p == 0) {
      // J_e intersected with the span of all-exponents-divisible-by-p monomials.
      std::vector<std::vector<std::uint32_t>> units;
      for (std::size_t i = 0; i < piece.monomials.size(); ++i) {
        bool divisible = true;
        for (auto ex : piece.monomials[i]) divisible = divisible && ex % j.p == 0;
        if (!divisible) continue;
        std::vector<std::uint32_t> u(piece.monomials.size(), 0);
        u[i] = 1;
        units.push_back(std::move(u));
      }
      Subspace meet = subspace_intersect(je, span(units, piece.monomials.size(), j.p));
      for (const auto& row : meet.basis) pth_power_layers[e].push_back(piece.poly(row, j.p, j.nvars));
    }

    std::vector<std::vector<std::uint32_t>> rebuilt;
    for (std::uint64_t ep = 0; ep <= e; ++ep) {
      if (pth_power_layers[ep].empty()) continue;
      for (const auto& m : detail::monomials_of_degree(j.nvars, e - ep, budget)) {
        GradedPoly mono(j.p, j.nvars);
        mono.add_term(m, 1);
        for (const auto& b : pth_power_layers[ep]) rebuilt.push_back(piece.coords(poly_mul(mono, b)));
      }
    }
    if (span(rebuilt, piece.monomials.size(), j.p) != je) return false;
  }
  return true;
}

}  // namespace liefp
