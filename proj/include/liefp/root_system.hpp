#pragma once

// Indecomposable root systems in the Bourbaki labeling, generated from
// Cartan matrices by reflection closure. Inner products are exact rationals
// taken from the symmetrized Cartan matrix, rescaled so the highest root
// theta satisfies (theta, theta) = 2.

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liefp/fp.hpp"

namespace liefp {

using Rational = boost::rational<long long>;

// A root written in simple-root coordinates.
struct Root {
  std::vector<int> coords;

  int height() const {
    int h = 0;
    for (int c : coords) h += c;
    return h;
  }

  friend bool operator==(const Root& a, const Root& b) { return a.coords == b.coords; }
  friend bool operator!=(const Root& a, const Root& b) { return !(a == b); }
  // Height-then-lex: the total order used throughout (root listing order,
  // special/extraspecial pair selection).
  friend bool operator<(const Root& a, const Root& b) {
    int ha = a.height(), hb = b.height();
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  }
};

inline Root operator+(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] += b.coords[i];
  return r;
}

inline Root operator-(const Root& a, const Root& b) {
  Root r = a;
  for (std::size_t i = 0; i < r.coords.size(); ++i) r.coords[i] -= b.coords[i];
  return r;
}

inline Root operator-(const Root& a) {
  Root r = a;
  for (auto& c : r.coords) c = -c;
  return r;
}

struct RootSystem {
  char family = '?';  // 'A'..'G'; '?' when built from a user Cartan matrix
  int rank = 0;
  std::vector<std::vector<int>> cartan;  // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<Root> positive_roots;      // sorted height-then-lex
  std::vector<Rational> symmetrizer;     // d_j with (alpha_i, alpha_j) = cartan[i][j] * d_j
  bool classified = false;               // true when built from the family tables

  std::map<std::vector<int>, int> positive_index;  // coords -> index in positive_roots

  bool is_positive_root(const Root& r) const { return positive_index.count(r.coords) > 0; }
  bool is_root(const Root& r) const {
    return positive_index.count(r.coords) > 0 || positive_index.count((-r).coords) > 0;
  }
  int index_of_positive(const Root& r) const {
    auto it = positive_index.find(r.coords);
    if (it == positive_index.end()) throw std::invalid_argument("not a positive root");
    return it->second;
  }
};

inline void require_classified(const RootSystem& rs, const char* what) {
  if (!rs.classified)
    throw std::invalid_argument(std::string(what) + ": unsupported for custom Cartan input");
}

// ---------------------------------------------------------------------------
// Cartan matrices (Bourbaki numbering)

inline std::vector<std::vector<int>> cartan_matrix(char family, int rank) {
  auto bad = [&] {
    return std::invalid_argument("unsupported family/rank pair " + std::string(1, family) + ":" +
                                 std::to_string(rank));
  };
  if (rank < 1) throw bad();
  std::vector<std::vector<int>> c(rank, std::vector<int>(rank, 0));
  for (int i = 0; i < rank; ++i) c[i][i] = 2;
  auto chain_edge = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < rank; ++i) chain_edge(i, i + 1);
      return c;
    case 'B':
      if (rank < 2) throw bad();
      for (int i = 0; i + 2 < rank; ++i) chain_edge(i, i + 1);
      c[rank - 2][rank - 1] = -2;  // alpha_rank is the short root
      c[rank - 1][rank - 2] = -1;
      return c;
    case 'C':
      if (rank < 2) throw bad();
      for (int i = 0; i + 2 < rank; ++i) chain_edge(i, i + 1);
      c[rank - 2][rank - 1] = -1;  // alpha_rank is the long root
      c[rank - 1][rank - 2] = -2;
      return c;
    case 'D':
      if (rank < 3) throw bad();
      for (int i = 0; i + 2 < rank; ++i) chain_edge(i, i + 1);
      chain_edge(rank - 3, rank - 1);
      return c;
    case 'E': {
      if (rank < 6 || rank > 8) throw bad();
      chain_edge(0, 2);
      chain_edge(1, 3);
      for (int i = 2; i + 1 < rank; ++i) chain_edge(i, i + 1);
      return c;
    }
    case 'F':
      if (rank != 4) throw bad();
      chain_edge(0, 1);
      c[1][2] = -2;  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      c[2][1] = -1;
      chain_edge(2, 3);
      return c;
    case 'G':
      if (rank != 2) throw bad();
      c[0][1] = -1;  // alpha_1 short, alpha_2 long
      c[1][0] = -3;
      return c;
    default:
      throw bad();
  }
}

// ---------------------------------------------------------------------------
// Generation by reflection closure

// <r, alpha_i^vee> from the Cartan matrix, pure integer arithmetic.
inline int simple_pairing(const std::vector<std::vector<int>>& cartan, const Root& r, int i) {
  int s = 0;
  for (std::size_t j = 0; j < r.coords.size(); ++j) s += r.coords[j] * cartan[j][i];
  return s;
}

// One closure sweep: for every known root r and simple alpha_i, add r + alpha_i
// whenever the root string permits (q = p - <r, alpha_i^vee> > 0, where p is the
// depth of the string below r). Returns the number of roots added.
inline std::size_t closure_sweep(const std::vector<std::vector<int>>& cartan,
                                 std::map<std::vector<int>, int>& index,
                                 std::vector<Root>& roots) {
  int n = static_cast<int>(cartan.size());
  std::size_t added = 0;
  // Index grows while we scan; snapshot the current size.
  std::size_t upto = roots.size();
  for (std::size_t k = 0; k < upto; ++k) {
    Root r = roots[k];
    for (int i = 0; i < n; ++i) {
      Root down = r;
      int depth = 0;
      for (;;) {
        down.coords[i] -= 1;
        if (!index.count(down.coords)) break;
        ++depth;
      }
      int q = depth - simple_pairing(cartan, r, i);
      if (q <= 0) continue;
      Root up = r;
      up.coords[i] += 1;
      if (index.count(up.coords)) continue;
      index.emplace(up.coords, -1);  // real indices assigned after sorting
      roots.push_back(up);
      ++added;
    }
  }
  return added;
}

inline std::vector<Root> generate_positive_roots(const std::vector<std::vector<int>>& cartan,
                                                 std::size_t cap) {
  int n = static_cast<int>(cartan.size());
  std::vector<Root> roots;
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < n; ++i) {
    Root a;
    a.coords.assign(n, 0);
    a.coords[i] = 1;
    roots.push_back(a);
    index.emplace(a.coords, -1);
  }
  while (closure_sweep(cartan, index, roots) > 0) {
    if (roots.size() > cap)
      throw std::invalid_argument("root generation exceeded its cap; the Cartan matrix does not "
                                  "describe a finite root system of tractable size");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// ---------------------------------------------------------------------------
// Symmetrizer and validation for arbitrary Cartan input

namespace detail {

// Solve d_j * cartan[i][j] = d_i * cartan[j][i] along the Dynkin graph.
inline std::vector<Rational> unscaled_symmetrizer(const std::vector<std::vector<int>>& c) {
  int n = static_cast<int>(c.size());
  std::vector<Rational> d(n, Rational(0));
  std::vector<int> queue;
  d[0] = Rational(1);
  queue.push_back(0);
  while (!queue.empty()) {
    int i = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0) continue;
      Rational want = d[i] * Rational(c[j][i], c[i][j]);
      if (d[j] == Rational(0)) {
        d[j] = want;
        queue.push_back(j);
      } else if (d[j] != want) {
        throw std::invalid_argument("Cartan matrix is not symmetrizable");
      }
    }
  }
  for (int j = 0; j < n; ++j)
    if (d[j] == Rational(0)) throw std::invalid_argument("Cartan matrix graph is not connected");
  return d;
}

// Sylvester criterion on the symmetrized matrix, exact rational arithmetic.
inline bool symmetrization_positive_definite(const std::vector<std::vector<int>>& c,
                                             const std::vector<Rational>& d) {
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s[i][j] = Rational(c[i][j]) * d[j];
  // Fraction-based Gaussian elimination tracking leading principal minors.
  Rational det(1);
  for (int k = 0; k < n; ++k) {
    if (s[k][k] == Rational(0)) return false;
    det *= s[k][k];
    if (det <= Rational(0)) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = s[i][k] / s[k][k];
      for (int j = k; j < n; ++j) s[i][j] -= f * s[k][j];
    }
  }
  return true;
}

inline void validate_cartan_shape(const std::vector<std::vector<int>>& c) {
  int n = static_cast<int>(c.size());
  if (n < 1) throw std::invalid_argument("Cartan matrix must be nonempty");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(c[i].size()) != n) throw std::invalid_argument("Cartan matrix must be square");
    if (c[i][i] != 2) throw std::invalid_argument("Cartan matrix diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i != j && c[i][j] > 0)
        throw std::invalid_argument("off-diagonal Cartan entries must be <= 0");
      if ((c[i][j] == 0) != (c[j][i] == 0))
        throw std::invalid_argument("Cartan zero pattern must be symmetric");
    }
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Classification tables

inline long long dim_g_table(char family, int rank) {
  long long n = rank;
  switch (family) {
    case 'A': return n * n + 2 * n;
    case 'B':
    case 'C': return 2 * n * n + n;
    case 'D': return 2 * n * n - n;
    case 'E': return rank == 6 ? 78 : rank == 7 ? 133 : 248;
    case 'F': return 52;
    case 'G': return 14;
    default: throw std::invalid_argument("no dimension table for custom input");
  }
}

// Dual Coxeter numbers, kept as an independent table (not derived from the
// generated roots) so identities checked against it are real cross-checks.
inline long long dual_coxeter(const RootSystem& rs) {
  require_classified(rs, "dual_coxeter");
  long long n = rs.rank;
  switch (rs.family) {
    case 'A': return n + 1;
    case 'B': return 2 * n - 1;
    case 'C': return n + 1;
    case 'D': return 2 * n - 2;
    case 'E': return rs.rank == 6 ? 12 : rs.rank == 7 ? 18 : 30;
    case 'F': return 9;
    case 'G': return 4;
    default: throw std::invalid_argument("no dual Coxeter table for custom input");
  }
}

// ---------------------------------------------------------------------------
// Builders

inline Root highest_root(const RootSystem& rs);

namespace detail {

inline void finish_build(RootSystem& rs, std::size_t cap) {
  rs.positive_roots = generate_positive_roots(rs.cartan, cap);
  rs.positive_index.clear();
  for (std::size_t i = 0; i < rs.positive_roots.size(); ++i)
    rs.positive_index.emplace(rs.positive_roots[i].coords, static_cast<int>(i));

  rs.symmetrizer = unscaled_symmetrizer(rs.cartan);
  // Rescale so (theta, theta) = 2.
  const Root& theta = rs.positive_roots.back();
  Rational tt(0);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j)
      tt += Rational(theta.coords[i]) * Rational(theta.coords[j]) * Rational(rs.cartan[i][j]) *
            rs.symmetrizer[j];
  for (auto& d : rs.symmetrizer) d *= Rational(2) / tt;

  // The root of maximal height must be unique and must not extend.
  int hmax = theta.height();
  for (std::size_t i = 0; i + 1 < rs.positive_roots.size(); ++i)
    if (rs.positive_roots[i].height() == hmax)
      throw invariant_violation("highest root is not unique");
}

}  // namespace detail

inline RootSystem build_root_system(char family, int rank) {
  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  rs.cartan = cartan_matrix(family, rank);
  rs.classified = true;
  detail::finish_build(rs, 1u << 20);
  long long expect = dim_g_table(family, rank) - rank;
  if (static_cast<long long>(rs.positive_roots.size()) * 2 != expect)
    throw invariant_violation("generated root count disagrees with the classification");
  return rs;
}

// Build from a user-supplied Cartan matrix. Generation and inner products
// work; classification-backed data (family tables, dual Coxeter numbers,
// niceness of primes) is unavailable and those operations refuse.
inline RootSystem build_root_system(const std::vector<std::vector<int>>& cartan,
                                    std::size_t cap = 1u << 20) {
  detail::validate_cartan_shape(cartan);
  auto d = detail::unscaled_symmetrizer(cartan);
  if (!detail::symmetrization_positive_definite(cartan, d))
    throw std::invalid_argument("Cartan matrix is not of finite type");
  RootSystem rs;
  rs.family = '?';
  rs.rank = static_cast<int>(cartan.size());
  rs.cartan = cartan;
  rs.classified = false;
  detail::finish_build(rs, cap);
  return rs;
}

// ---------------------------------------------------------------------------
// Derived data

inline Root highest_root(const RootSystem& rs) {
  Root theta = rs.positive_roots.back();
  for (int i = 0; i < rs.rank; ++i) {
    Root up = theta;
    up.coords[i] += 1;
    if (rs.is_positive_root(up)) throw invariant_violation("highest root extends by a simple root");
  }
  return theta;
}

// Sum of all positive roots, i.e. 2*rho, in simple-root coordinates.
inline std::vector<long long> weyl_vector_doubled(const RootSystem& rs) {
  std::vector<long long> two_rho(rs.rank, 0);
  for (const Root& r : rs.positive_roots)
    for (int i = 0; i < rs.rank; ++i) two_rho[i] += r.coords[i];
  return two_rho;
}

// Exact inner product of two root-lattice vectors in simple-root coordinates.
template <typename IntA, typename IntB>
inline Rational inner_product(const RootSystem& rs, const std::vector<IntA>& a,
                              const std::vector<IntB>& b) {
  if (static_cast<int>(a.size()) != rs.rank || static_cast<int>(b.size()) != rs.rank)
    throw std::invalid_argument("inner_product: coordinate length mismatch");
  Rational acc(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rs.rank; ++j) {
      if (b[j] == 0) continue;
      acc += Rational(static_cast<long long>(a[i])) * Rational(static_cast<long long>(b[j])) *
             Rational(rs.cartan[i][j]) * rs.symmetrizer[j];
    }
  }
  return acc;
}

inline Rational inner_product(const RootSystem& rs, const Root& a, const Root& b) {
  return inner_product(rs, a.coords, b.coords);
}

// (2rho, theta) as an exact integer; defined for custom input too.
inline long long two_rho_theta_pairing(const RootSystem& rs) {
  Rational v = inner_product(rs, weyl_vector_doubled(rs), highest_root(rs).coords);
  if (v.denominator() != 1) throw invariant_violation("(2rho, theta) is not an integer");
  return v.numerator();
}

// Positive roots beta with theta - beta still a root.
inline std::vector<Root> special_roots(const RootSystem& rs) {
  Root theta = highest_root(rs);
  std::vector<Root> out;
  for (const Root& b : rs.positive_roots)
    if (b != theta && rs.is_root(theta - b)) out.push_back(b);
  return out;
}

// The invariant u = (2rho, theta). For classified systems this is
// cross-checked against 2*(dual Coxeter) - 2 and |special roots| + 2.
inline long long u_invariant(const RootSystem& rs) {
  require_classified(rs, "u_invariant");
  long long u = two_rho_theta_pairing(rs);
  if (u != 2 * dual_coxeter(rs) - 2)
    throw invariant_violation("(2rho, theta) != 2h^vee - 2");
  if (u != static_cast<long long>(special_roots(rs).size()) + 2)
    throw invariant_violation("(2rho, theta) != |special roots| + 2");
  return u;
}

inline long long dim_g(const RootSystem& rs) {
  return 2 * static_cast<long long>(rs.positive_roots.size()) + rs.rank;
}

// p is nice when p >= 5 and, for A_n, p does not divide n + 1.
inline bool is_nice_prime(const RootSystem& rs, std::uint32_t p) {
  require_classified(rs, "is_nice_prime");
  if (!is_prime_u32(p)) throw std::invalid_argument("is_nice_prime: p must be prime");
  if (p < 5) return false;
  if (rs.family == 'A' && static_cast<std::uint32_t>(rs.rank + 1) % p == 0) return false;
  return true;
}

struct WeylData {
  std::vector<long long> two_rho;
  long long u = 0;
  long long dual_coxeter = 0;
  std::vector<Root> special_roots;
};

inline WeylData weyl_data(const RootSystem& rs) {
  WeylData w;
  w.two_rho = weyl_vector_doubled(rs);
  w.u = u_invariant(rs);  // runs the identity cross-checks
  w.dual_coxeter = liefp::dual_coxeter(rs);
  w.special_roots = special_roots(rs);
  return w;
}

// Simple reflection w_i acting on a root-lattice vector.
inline std::vector<int> simple_reflection(const RootSystem& rs, int i, std::vector<int> v) {
  Root r;
  r.coords = v;
  int pairing = simple_pairing(rs.cartan, r, i);
  v[i] -= pairing;
  return v;
}

}  // namespace liefp
