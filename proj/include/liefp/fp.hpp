#pragma once

// Exact linear algebra over prime fields F_p (odd p < 2^16).
// Everything here is deterministic: subspaces are kept in canonical
// reduced-row-echelon form, so equal subspaces compare equal bytewise.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace liefp {

// Thrown when a search or construction would exceed its configured budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a computation contradicts an identity the library promises.
struct invariant_violation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

inline void require_odd_prime(std::uint32_t p) {
  if (p < 3 || p >= (1u << 16) || p % 2 == 0 || !is_prime_u32(p))
    throw std::invalid_argument("modulus must be an odd prime below 2^16, got " +
                                std::to_string(p));
}

inline std::uint32_t fp_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint32_t fp_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + p - b;
}

inline std::uint32_t fp_neg(std::uint32_t a, std::uint32_t p) { return a == 0 ? 0 : p - a; }

inline std::uint32_t fp_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>((std::uint64_t)a * b % p);
}

inline std::uint32_t fp_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t base = a % p, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(acc);
}

// Extended Euclid; a must be nonzero mod p.
inline std::uint32_t fp_inv(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw std::invalid_argument("inverse of zero residue");
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

// Reduce an arbitrary signed integer into [0, p).
inline std::uint32_t fp_from_int(std::int64_t x, std::uint32_t p) {
  std::int64_t r = x % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

// A residue tied to its modulus. Operations check that moduli agree.
struct FpScalar {
  std::uint32_t residue = 0;
  std::uint32_t p = 3;

  FpScalar() = default;
  FpScalar(std::uint32_t r, std::uint32_t mod) : residue(r % mod), p(mod) { require_odd_prime(mod); }

  friend FpScalar operator+(FpScalar a, FpScalar b) {
    a.check(b);
    return raw(fp_add(a.residue, b.residue, a.p), a.p);
  }
  friend FpScalar operator-(FpScalar a, FpScalar b) {
    a.check(b);
    return raw(fp_sub(a.residue, b.residue, a.p), a.p);
  }
  friend FpScalar operator*(FpScalar a, FpScalar b) {
    a.check(b);
    return raw(fp_mul(a.residue, b.residue, a.p), a.p);
  }
  friend FpScalar operator/(FpScalar a, FpScalar b) {
    a.check(b);
    return raw(fp_mul(a.residue, fp_inv(b.residue, a.p), a.p), a.p);
  }
  FpScalar operator-() const { return raw(fp_neg(residue, p), p); }
  FpScalar inverse() const { return raw(fp_inv(residue, p), p); }
  bool is_zero() const { return residue == 0; }
  friend bool operator==(const FpScalar& a, const FpScalar& b) {
    return a.p == b.p && a.residue == b.residue;
  }

 private:
  static FpScalar raw(std::uint32_t r, std::uint32_t mod) {
    FpScalar s;
    s.residue = r;
    s.p = mod;
    return s;
  }
  void check(const FpScalar& o) const {
    if (p != o.p) throw std::invalid_argument("FpScalar modulus mismatch");
  }
};

// Dense row-major matrix over F_p.
struct FpMatrix {
  std::uint32_t p = 3;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> a;  // rows*cols residues in [0, p)

  FpMatrix() = default;
  FpMatrix(std::size_t r, std::size_t c, std::uint32_t mod) : p(mod), rows(r), cols(c), a(r * c, 0) {
    require_odd_prime(mod);
  }

  static FpMatrix identity(std::size_t n, std::uint32_t mod) {
    FpMatrix m(n, n, mod);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::uint32_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint32_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  friend bool operator==(const FpMatrix& x, const FpMatrix& y) {
    return x.p == y.p && x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

inline FpMatrix transpose(const FpMatrix& m) {
  FpMatrix t(m.cols, m.rows, m.p);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

inline std::vector<std::uint32_t> matvec(const FpMatrix& m, const std::vector<std::uint32_t>& v) {
  if (v.size() != m.cols) throw std::invalid_argument("matvec dimension mismatch");
  std::vector<std::uint32_t> out(m.rows, 0);
  for (std::size_t i = 0; i < m.rows; ++i) {
    std::uint64_t acc = 0;
    const std::uint32_t* row = m.a.data() + i * m.cols;
    for (std::size_t j = 0; j < m.cols; ++j) acc += (std::uint64_t)row[j] * v[j];
    out[i] = static_cast<std::uint32_t>(acc % m.p);
  }
  return out;
}

inline FpMatrix matmul(const FpMatrix& x, const FpMatrix& y) {
  if (x.p != y.p) throw std::invalid_argument("matmul modulus mismatch");
  if (x.cols != y.rows) throw std::invalid_argument("matmul dimension mismatch");
  FpMatrix z(x.rows, y.cols, x.p);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      std::uint64_t f = x.at(i, k);
      if (!f) continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        z.at(i, j) = static_cast<std::uint32_t>((z.at(i, j) + f * y.at(k, j)) % x.p);
    }
  return z;
}

// In-place reduction to canonical RREF. Returns the rank; pivot columns,
// scanned left to right, land in *pivots when given.
inline std::size_t rref_in_place(FpMatrix& m, std::vector<std::size_t>* pivots = nullptr) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t sel = r;
    while (sel < m.rows && m.at(sel, c) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != r)
      for (std::size_t j = c; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
    std::uint32_t inv = fp_inv(m.at(r, c), m.p);
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = fp_mul(m.at(r, j), inv, m.p);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      std::uint32_t f = m.at(i, c);
      if (!f) continue;
      for (std::size_t j = c; j < m.cols; ++j)
        m.at(i, j) = fp_sub(m.at(i, j), fp_mul(f, m.at(r, j), m.p), m.p);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return r;
}

inline std::size_t rank(FpMatrix m) { return rref_in_place(m); }

// Basis of {x : m x = 0}, one vector per free column, canonicalized by the
// convention x[free] = 1 and zeros in the other free columns.
inline std::vector<std::vector<std::uint32_t>> kernel_basis(FpMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t r = rref_in_place(m, &pivots);
  std::vector<bool> is_pivot(m.cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> ker;
  for (std::size_t f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint32_t> x(m.cols, 0);
    x[f] = 1;
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = fp_neg(m.at(i, f), m.p);
    ker.push_back(std::move(x));
  }
  return ker;
}

// Linear subspace of F_p^ambient, stored as canonical RREF rows (pivot
// columns strictly increasing, pivots 1, pivot columns clear elsewhere).
// Two Subspace values are equal iff they are the same subspace.
struct Subspace {
  std::uint32_t p = 3;
  std::size_t ambient = 0;
  std::vector<std::vector<std::uint32_t>> basis;

  std::size_t dim() const { return basis.size(); }

  bool contains(std::vector<std::uint32_t> v) const {
    if (v.size() != ambient) throw std::invalid_argument("contains: dimension mismatch");
    for (const auto& row : basis) {
      std::size_t c = 0;
      while (c < ambient && row[c] == 0) ++c;
      std::uint32_t f = v[c] % p;
      if (!f) continue;
      for (std::size_t j = c; j < ambient; ++j) v[j] = fp_sub(v[j] % p, fp_mul(f, row[j], p), p);
    }
    for (std::uint32_t x : v)
      if (x % p != 0) return false;
    return true;
  }

  // Flattened deterministic key, usable for ordered containers.
  std::vector<std::uint32_t> key() const {
    std::vector<std::uint32_t> k;
    k.reserve(basis.size() * ambient + 1);
    k.push_back(static_cast<std::uint32_t>(basis.size()));
    for (const auto& row : basis) k.insert(k.end(), row.begin(), row.end());
    return k;
  }

  friend bool operator==(const Subspace& x, const Subspace& y) {
    return x.p == y.p && x.ambient == y.ambient && x.basis == y.basis;
  }
  friend bool operator!=(const Subspace& x, const Subspace& y) { return !(x == y); }
};

inline Subspace span(const std::vector<std::vector<std::uint32_t>>& vectors, std::size_t ambient,
                     std::uint32_t p) {
  require_odd_prime(p);
  FpMatrix m(vectors.size(), ambient, p);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient) throw std::invalid_argument("span: dimension mismatch");
    for (std::size_t j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j] % p;
  }
  std::size_t r = rref_in_place(m);
  Subspace s;
  s.p = p;
  s.ambient = ambient;
  s.basis.assign(r, std::vector<std::uint32_t>(ambient));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < ambient; ++j) s.basis[i][j] = m.at(i, j);
  return s;
}

inline Subspace zero_subspace(std::size_t ambient, std::uint32_t p) { return span({}, ambient, p); }

inline Subspace full_subspace(std::size_t ambient, std::uint32_t p) {
  std::vector<std::vector<std::uint32_t>> rows(ambient, std::vector<std::uint32_t>(ambient, 0));
  for (std::size_t i = 0; i < ambient; ++i) rows[i][i] = 1;
  return span(rows, ambient, p);
}

inline bool subspace_leq(const Subspace& s, const Subspace& t) {
  if (s.p != t.p || s.ambient != t.ambient)
    throw std::invalid_argument("subspace_leq: mismatched spaces");
  for (const auto& row : s.basis)
    if (!t.contains(row)) return false;
  return true;
}

inline Subspace subspace_sum(const Subspace& s, const Subspace& t) {
  if (s.p != t.p || s.ambient != t.ambient)
    throw std::invalid_argument("subspace_sum: mismatched spaces");
  std::vector<std::vector<std::uint32_t>> rows = s.basis;
  rows.insert(rows.end(), t.basis.begin(), t.basis.end());
  return span(rows, s.ambient, s.p);
}

// Annihilator {f in the dual : f(s) = 0}, coordinates in the dual basis.
// dim s + dim annihilator(s) = ambient, and the map is an inclusion-reversing
// involution under the double-dual identification.
inline Subspace annihilator(const Subspace& s) {
  FpMatrix m(s.dim(), s.ambient, s.p);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = 0; j < s.ambient; ++j) m.at(i, j) = s.basis[i][j];
  return span(kernel_basis(m), s.ambient, s.p);
}

inline Subspace subspace_intersect(const Subspace& s, const Subspace& t) {
  return annihilator(subspace_sum(annihilator(s), annihilator(t)));
}

// Every subspace of F_p^ambient, each exactly once, enumerated through its
// canonical RREF: pick the pivot columns, then run over all fillings of the
// free cells (entries right of a pivot in a non-pivot column). Only for tiny
// spaces; the count grows like the Gaussian binomials.
inline std::vector<Subspace> all_subspaces(std::size_t ambient, std::uint32_t p) {
  require_odd_prime(p);
  std::vector<Subspace> out;
  std::vector<std::size_t> pivots;
  auto emit_fillings = [&](auto&& self, std::vector<std::vector<std::uint32_t>>& rows,
                           std::size_t cell) -> void {
    std::vector<std::pair<std::size_t, std::size_t>> free_cells;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      for (std::size_t c = pivots[i] + 1; c < ambient; ++c) {
        bool is_pivot = false;
        for (std::size_t q : pivots) is_pivot = is_pivot || q == c;
        if (!is_pivot) free_cells.emplace_back(i, c);
      }
    if (cell == free_cells.size()) {
      Subspace s;
      s.p = p;
      s.ambient = ambient;
      s.basis = rows;
      out.push_back(std::move(s));
      return;
    }
    auto [r, c] = free_cells[cell];
    for (std::uint32_t v = 0; v < p; ++v) {
      rows[r][c] = v;
      self(self, rows, cell + 1);
    }
    rows[r][c] = 0;
  };
  auto choose = [&](auto&& self, std::size_t next, std::size_t left) -> void {
    if (left == 0) {
      std::vector<std::vector<std::uint32_t>> rows(pivots.size(),
                                                   std::vector<std::uint32_t>(ambient, 0));
      for (std::size_t i = 0; i < pivots.size(); ++i) rows[i][pivots[i]] = 1;
      emit_fillings(emit_fillings, rows, 0);
      return;
    }
    for (std::size_t c = next; c + left <= ambient; ++c) {
      pivots.push_back(c);
      self(self, c + 1, left - 1);
      pivots.pop_back();
    }
  };
  for (std::size_t k = 0; k <= ambient; ++k) choose(choose, 0, k);
  return out;
}

}  // namespace liefp
