#pragma once

// Chevalley basis {e_r : r in Phi} u {h_i : i simple} with integer structure
// constants. Signs follow the extraspecial-pair convention under the
// height-then-lex order on positive roots: for each non-simple positive t the
// minimal pair (r1, s1) with r1 + s1 = t gets N(r1, s1) = +(p + 1), and every
// other constant is forced from those choices.
//
// Basis order (also the JSON export order): e over positive roots ascending,
// then h_1..h_n, then e over negative roots (negatives of the positive list
// in the same order).

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "liefp/fp.hpp"
#include "liefp/orbits.hpp"
#include "liefp/root_system.hpp"

namespace liefp {

using LieElement = std::vector<long long>;

struct ChevalleyAlgebra {
  RootSystem rs;
  std::size_t num_pos = 0;  // |Phi+|
  std::size_t dim = 0;      // 2*num_pos + rank

  // n_table[a * 2P + b] = N(r_a, r_b) for root indices a, b (0 when the sum
  // is not a root). Root index: i < P is positive_roots[i], P + i is its negative.
  std::vector<std::int32_t> n_table;
  // coroot[i][j]: expansion of the coroot of positive root i over h_1..h_n.
  std::vector<std::vector<long long>> coroot;
  // bracket_table[i * dim + j]: [basis_i, basis_j] as (basis index, coefficient).
  std::vector<std::vector<std::pair<int, long long>>> bracket_table;

  // --- indexing helpers ---
  std::size_t root_count() const { return 2 * num_pos; }
  Root root_at(std::size_t ridx) const {
    return ridx < num_pos ? rs.positive_roots[ridx] : -rs.positive_roots[ridx - num_pos];
  }
  std::size_t root_index(const Root& r) const {
    auto it = rs.positive_index.find(r.coords);
    if (it != rs.positive_index.end()) return static_cast<std::size_t>(it->second);
    it = rs.positive_index.find((-r).coords);
    if (it != rs.positive_index.end()) return num_pos + static_cast<std::size_t>(it->second);
    throw std::invalid_argument("not a root");
  }
  std::size_t e_index(const Root& r) const {
    std::size_t ridx = root_index(r);
    return ridx < num_pos ? ridx : rs.rank + ridx;  // negatives sit after the h block
  }
  std::size_t h_index(int i) const {
    if (i < 0 || i >= rs.rank) throw std::invalid_argument("h index out of range");
    return num_pos + static_cast<std::size_t>(i);
  }
  long long n_constant(std::size_t a, std::size_t b) const { return n_table[a * root_count() + b]; }

  std::string basis_label(std::size_t i) const {
    if (i >= num_pos && i < num_pos + static_cast<std::size_t>(rs.rank))
      return "h" + std::to_string(i - num_pos + 1);
    Root r = i < num_pos ? rs.positive_roots[i] : -rs.positive_roots[i - num_pos - rs.rank];
    std::string s = "e[";
    for (int j = 0; j < rs.rank; ++j) {
      if (j) s += ",";
      s += std::to_string(r.coords[j]);
    }
    return s + "]";
  }

  LieElement unit(std::size_t i) const {
    LieElement x(dim, 0);
    x.at(i) = 1;
    return x;
  }
  LieElement e(const Root& r) const { return unit(e_index(r)); }
  LieElement h(int i) const { return unit(h_index(i)); }
};

namespace detail {

// p(r, s) = max{k : s - k r is a root}; the strings met here are unbroken.
inline int string_depth(const RootSystem& rs, const Root& r, const Root& s) {
  int k = 0;
  Root down = s;
  for (;;) {
    down = down - r;
    bool zero = true;
    for (int c : down.coords) zero = zero && c == 0;
    if (zero || !rs.is_root(down)) break;
    ++k;
  }
  return k;
}

struct ConstantBuilder {
  const RootSystem& rs;
  std::size_t P;
  std::vector<std::int64_t> pos_n;  // P x P, positive pairs only
  std::vector<bool> pos_set;

  explicit ConstantBuilder(const RootSystem& r)
      : rs(r), P(r.positive_roots.size()), pos_n(P * P, 0), pos_set(P * P, false) {}

  Rational length(const Root& r) const { return inner_product(rs, r, r); }

  void set_pos(std::size_t i, std::size_t j, std::int64_t v) {
    pos_n[i * P + j] = v;
    pos_n[j * P + i] = -v;
    pos_set[i * P + j] = pos_set[j * P + i] = true;
  }

  static long long to_int(const Rational& q, const char* what) {
    if (q.denominator() != 1) throw invariant_violation(std::string(what) + ": non-integer constant");
    return q.numerator();
  }

  // N for any pair of roots, reduced to the positive-pair table via
  //   N(-a, -b) = -N(a, b)
  //   N(a, b) = -(z, z) N(-b, z) / (a, a)   for a > 0 > b, z = a + b > 0.
  long long n_any(const Root& a, const Root& b) const {
    if (!rs.is_root(a) || !rs.is_root(b)) return 0;
    Root z = a + b;
    if (!rs.is_root(z)) return 0;
    bool apos = rs.is_positive_root(a), bpos = rs.is_positive_root(b);
    if (apos && bpos) {
      std::size_t i = rs.index_of_positive(a), j = rs.index_of_positive(b);
      if (!pos_set[i * P + j]) throw invariant_violation("structure constant used before computed");
      return pos_n[i * P + j];
    }
    if (!apos && !bpos) return -n_any(-a, -b);
    if (!apos) return -n_any(b, a);
    // a positive, b negative
    if (rs.is_positive_root(z)) {
      Rational v = -length(z) * Rational(n_any(-b, z)) / length(a);
      return to_int(v, "mixed-sign reduction");
    }
    return -n_any(-a, -b);
  }

  void build() {
    for (std::size_t ti = 0; ti < P; ++ti) {
      const Root& t = rs.positive_roots[ti];
      if (t.height() == 1) continue;
      // Special pairs (r, s), r < s, r + s = t, scanned in root order so the
      // first one found is the extraspecial pair.
      bool have_extra = false;
      Root r1, s1;
      for (std::size_t ri = 0; ri < ti; ++ri) {
        const Root& r = rs.positive_roots[ri];
        Root s = t - r;
        if (!rs.is_positive_root(s)) continue;
        if (!(r < s)) continue;
        std::size_t si = static_cast<std::size_t>(rs.index_of_positive(s));
        if (!have_extra) {
          have_extra = true;
          r1 = r;
          s1 = s;
          set_pos(ri, si, string_depth(rs, r, s) + 1);
          continue;
        }
        // Jacobi identity for (-r1, r, s), whose sum is s1:
        //   N(-r1, r) N(r - r1, s) + N(r, s) N(t, -r1) + N(s, -r1) N(s - r1, r) = 0
        long long den = n_any(t, -r1);
        long long term1 = n_any(-r1, r) * n_any(r - r1, s);
        long long term2 = n_any(s, -r1) * n_any(s - r1, r);
        Rational v = Rational(-(term1 + term2), den);
        long long n = to_int(v, "special-pair recursion");
        int expect = string_depth(rs, r, s) + 1;
        if (n != expect && n != -expect)
          throw invariant_violation("structure constant magnitude differs from root-string length");
        set_pos(ri, si, n);
      }
      if (!have_extra) throw invariant_violation("positive root admits no decomposition");
    }
  }
};

}  // namespace detail

// Build the algebra for a classified root system. Custom Cartan input stops
// at root generation; the basis and constants need the classification-backed
// tables, so the builder refuses it.
inline ChevalleyAlgebra chevalley_algebra(const RootSystem& rs) {
  require_classified(rs, "chevalley_algebra");
  ChevalleyAlgebra alg;
  alg.rs = rs;
  alg.num_pos = rs.positive_roots.size();
  alg.dim = 2 * alg.num_pos + static_cast<std::size_t>(rs.rank);

  detail::ConstantBuilder builder(rs);
  builder.build();

  // Fill the all-pairs table, checking |N| = p + 1 for every valid pair.
  const std::size_t R = alg.root_count();
  alg.n_table.assign(R * R, 0);
  for (std::size_t a = 0; a < R; ++a) {
    Root ra = alg.root_at(a);
    for (std::size_t b = 0; b < R; ++b) {
      Root rb = alg.root_at(b);
      Root sum = ra + rb;
      if (!rs.is_root(sum)) continue;
      long long n = builder.n_any(ra, rb);
      int expect = detail::string_depth(rs, ra, rb) + 1;
      if (n != expect && n != -expect)
        throw invariant_violation("structure constant magnitude differs from root-string length");
      alg.n_table[a * R + b] = static_cast<std::int32_t>(n);
    }
  }

  // Coroot expansions: coefficient of h_j in the coroot of s is
  // s_j (alpha_j, alpha_j) / (s, s), always an integer.
  alg.coroot.resize(alg.num_pos);
  for (std::size_t i = 0; i < alg.num_pos; ++i) {
    const Root& s = rs.positive_roots[i];
    Rational len = inner_product(rs, s, s);
    alg.coroot[i].resize(rs.rank);
    for (int j = 0; j < rs.rank; ++j) {
      Rational c = Rational(s.coords[j]) * Rational(2) * rs.symmetrizer[j] / len;
      if (c.denominator() != 1) throw invariant_violation("coroot expansion is not integral");
      alg.coroot[i][j] = c.numerator();
    }
  }

  // Multiplication table over the chosen basis.
  const std::size_t d = alg.dim, n = static_cast<std::size_t>(rs.rank);
  alg.bracket_table.assign(d * d, {});
  auto basis_of_root = [&](std::size_t ridx) { return ridx < alg.num_pos ? ridx : n + ridx; };
  for (std::size_t a = 0; a < R; ++a) {
    Root ra = alg.root_at(a);
    std::size_t ia = basis_of_root(a);
    // [e_a, e_b]
    for (std::size_t b = 0; b < R; ++b) {
      Root rb = alg.root_at(b);
      std::size_t ib = basis_of_root(b);
      auto& cell = alg.bracket_table[ia * d + ib];
      Root sum = ra + rb;
      bool zero = true;
      for (int c : sum.coords) zero = zero && c == 0;
      if (zero) {
        // [e_r, e_-r] = coroot of r
        std::size_t pi = a < alg.num_pos ? a : b;
        long long sign = a < alg.num_pos ? 1 : -1;
        for (std::size_t j = 0; j < n; ++j) {
          long long c = sign * alg.coroot[pi][j];
          if (c) cell.emplace_back(static_cast<int>(alg.num_pos + j), c);
        }
      } else if (std::int32_t nc = alg.n_table[a * R + b]; nc != 0) {
        cell.emplace_back(static_cast<int>(basis_of_root(alg.root_index(sum))), nc);
      }
    }
    // [h_i, e_a] and [e_a, h_i]
    for (std::size_t i = 0; i < n; ++i) {
      long long pairing = simple_pairing(rs.cartan, ra, static_cast<int>(i));
      if (!pairing) continue;
      alg.bracket_table[(alg.num_pos + i) * d + ia].emplace_back(static_cast<int>(ia), pairing);
      alg.bracket_table[ia * d + (alg.num_pos + i)].emplace_back(static_cast<int>(ia), -pairing);
    }
  }
  return alg;
}

// [x, y] over the integers.
inline LieElement bracket(const ChevalleyAlgebra& alg, const LieElement& x, const LieElement& y) {
  if (x.size() != alg.dim || y.size() != alg.dim)
    throw std::invalid_argument("bracket: element length mismatch");
  LieElement z(alg.dim, 0);
  for (std::size_t i = 0; i < alg.dim; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < alg.dim; ++j) {
      if (!y[j]) continue;
      long long f = x[i] * y[j];
      for (const auto& [k, c] : alg.bracket_table[i * alg.dim + j]) z[k] += f * c;
    }
  }
  return z;
}

// Matrix of ad(x) mod p; column j holds [x, basis_j].
inline FpMatrix adjoint_matrix(const ChevalleyAlgebra& alg, const LieElement& x, std::uint32_t p) {
  require_odd_prime(p);
  if (x.size() != alg.dim) throw std::invalid_argument("adjoint_matrix: element length mismatch");
  FpMatrix m(alg.dim, alg.dim, p);
  for (std::size_t i = 0; i < alg.dim; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < alg.dim; ++j)
      for (const auto& [k, c] : alg.bracket_table[i * alg.dim + j])
        m.at(k, j) = fp_from_int(m.at(k, j) + x[i] * c, p);
  }
  return m;
}

// The adjoint representation: one operator per basis element.
inline LieRep adjoint_rep(const ChevalleyAlgebra& alg, std::uint32_t p) {
  require_odd_prime(p);
  LieRep rep;
  rep.p = p;
  rep.d = alg.dim;
  rep.label = "adjoint:" + std::string(1, alg.rs.family) + std::to_string(alg.rs.rank);
  for (std::size_t i = 0; i < alg.dim; ++i) rep.operators.push_back(adjoint_matrix(alg, alg.unit(i), p));
  if (!is_nice_prime(alg.rs, p))
    rep.warnings.push_back("p = " + std::to_string(p) +
                           " is not a nice prime for this system; minimal-orbit identities are not guaranteed");
  return rep;
}

// Image of ad(e_theta) mod p for a nice prime. The image must be spanned by
// e_theta, h_theta and the e_{theta - beta} over special roots beta, so its
// dimension is |special roots| + 2; both facts are asserted.
inline Subspace ad_highest_root_image(const ChevalleyAlgebra& alg, std::uint32_t p) {
  if (!is_nice_prime(alg.rs, p))
    throw std::invalid_argument("ad_highest_root_image requires a nice prime");
  Root theta = highest_root(alg.rs);
  FpMatrix m = adjoint_matrix(alg, alg.e(theta), p);
  std::vector<std::vector<std::uint32_t>> cols(alg.dim, std::vector<std::uint32_t>(alg.dim));
  for (std::size_t j = 0; j < alg.dim; ++j)
    for (std::size_t i = 0; i < alg.dim; ++i) cols[j][i] = m.at(i, j);
  Subspace image = span(cols, alg.dim, p);

  std::vector<std::vector<std::uint32_t>> expect_rows;
  std::vector<std::uint32_t> row(alg.dim, 0);
  row[alg.e_index(theta)] = 1;
  expect_rows.push_back(row);
  std::fill(row.begin(), row.end(), 0);
  std::size_t ti = static_cast<std::size_t>(alg.rs.index_of_positive(theta));
  for (int j = 0; j < alg.rs.rank; ++j) row[alg.h_index(j)] = fp_from_int(alg.coroot[ti][j], p);
  expect_rows.push_back(row);
  for (const Root& beta : special_roots(alg.rs)) {
    std::fill(row.begin(), row.end(), 0);
    row[alg.e_index(theta - beta)] = 1;
    expect_rows.push_back(row);
  }
  Subspace expected = span(expect_rows, alg.dim, p);

  if (image != expected || image.dim() != special_roots(alg.rs).size() + 2)
    throw invariant_violation("image of ad(e_theta) is not the predicted span at p = " +
                              std::to_string(p));
  return image;
}

// Full Jacobi verification over the integers. Antisymmetry is checked for
// every pair, then [[x,y],z] + [[y,z],x] + [[z,x],y] = 0 for every basis
// triple i < j < k (enough, since the bracket is bilinear and antisymmetric).
// Returns the number of triples checked.
inline std::uint64_t verify_jacobi(const ChevalleyAlgebra& alg) {
  const std::size_t d = alg.dim;
  for (std::size_t i = 0; i < d; ++i) {
    if (!alg.bracket_table[i * d + i].empty()) throw invariant_violation("[x, x] != 0");
    for (std::size_t j = i + 1; j < d; ++j) {
      auto a = alg.bracket_table[i * d + j];
      auto b = alg.bracket_table[j * d + i];
      if (a.size() != b.size()) throw invariant_violation("bracket is not antisymmetric");
      for (auto& [k, c] : b) c = -c;
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      if (a != b) throw invariant_violation("bracket is not antisymmetric");
    }
  }

  std::array<std::pair<int, long long>, 96> acc{};
  std::uint64_t checked = 0;
  auto add_cyclic = [&](std::size_t x, std::size_t y, std::size_t z, std::size_t& terms) {
    for (const auto& [m, c] : alg.bracket_table[x * d + y]) {
      for (const auto& [k, c2] : alg.bracket_table[static_cast<std::size_t>(m) * d + z]) {
        long long v = c * c2;
        std::size_t t = 0;
        for (; t < terms; ++t)
          if (acc[t].first == k) {
            acc[t].second += v;
            break;
          }
        if (t == terms) acc[terms++] = {k, v};
      }
    }
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      const bool ij_empty = alg.bracket_table[i * d + j].empty();
      for (std::size_t k = j + 1; k < d; ++k) {
        std::size_t terms = 0;
        if (!ij_empty) add_cyclic(i, j, k, terms);
        add_cyclic(j, k, i, terms);
        add_cyclic(k, i, j, terms);
        for (std::size_t t = 0; t < terms; ++t)
          if (acc[t].second != 0)
            throw invariant_violation("Jacobi identity fails on basis triple (" + std::to_string(i) +
                                      ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
        ++checked;
      }
    }
  return checked;
}

}  // namespace liefp
