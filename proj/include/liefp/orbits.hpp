#pragma once

// Orbit-dimension searches for matrix representations over F_p: exact
// exhaustive minima over projective points, seeded random sampling (upper
// bounds only), the multiset of orbit subspaces, and the duality test
// between spanning the dual and trapped vectors.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "liefp/fp.hpp"
#include "liefp/prng.hpp"

namespace liefp {

// A Lie algebra (or any operator family) acting on F_p^d through m matrices.
struct LieRep {
  std::uint32_t p = 3;
  std::size_t d = 0;
  std::vector<FpMatrix> operators;
  std::string label;
  std::vector<std::string> warnings;
};

inline void validate_rep(const LieRep& rep) {
  require_odd_prime(rep.p);
  if (rep.d == 0) throw std::invalid_argument("representation space must have dimension >= 1");
  if (rep.operators.empty()) throw std::invalid_argument("representation needs at least one operator");
  for (const auto& m : rep.operators) {
    if (m.p != rep.p) throw std::invalid_argument("operator modulus disagrees with representation");
    if (m.rows != rep.d || m.cols != rep.d)
      throw std::invalid_argument("operators must be d x d");
  }
}

// Natural action of gl_n: all elementary matrices E_ij.
inline LieRep gl_natural_rep(std::size_t n, std::uint32_t p) {
  if (n == 0) throw std::invalid_argument("gl_natural_rep: n >= 1 required");
  LieRep rep;
  rep.p = p;
  rep.d = n;
  rep.label = "gl:" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      FpMatrix e(n, n, p);
      e.at(i, j) = 1;
      rep.operators.push_back(std::move(e));
    }
  validate_rep(rep);
  return rep;
}

// Natural action of sl_n: off-diagonal E_ij plus E_ii - E_{i+1,i+1}.
inline LieRep sl_natural_rep(std::size_t n, std::uint32_t p) {
  if (n < 2) throw std::invalid_argument("sl_natural_rep: n >= 2 required");
  LieRep rep;
  rep.p = p;
  rep.d = n;
  rep.label = "sl:" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      FpMatrix e(n, n, p);
      e.at(i, j) = 1;
      rep.operators.push_back(std::move(e));
    }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    FpMatrix h(n, n, p);
    h.at(i, i) = 1;
    h.at(i + 1, i + 1) = p - 1;
    rep.operators.push_back(std::move(h));
  }
  validate_rep(rep);
  return rep;
}

// ---------------------------------------------------------------------------
// Projective enumeration
//
// Representatives are normalized so the first nonzero coordinate is 1 and are
// indexed in lexicographic order of the full coordinate vector, which places
// the representative (0, ..., 0, 1) first.

inline std::uint64_t projective_count(std::uint32_t p, std::size_t d) {
  unsigned __int128 count = 0, power = 1;
  for (std::size_t i = 0; i < d; ++i) {
    count += power;
    power *= p;
    if (count > (unsigned __int128)1 << 62) return ~0ull;  // saturate; exceeds any sane budget
  }
  return static_cast<std::uint64_t>(count);
}

inline void decode_projective(std::uint32_t p, std::size_t d, std::uint64_t idx,
                              std::vector<std::uint32_t>& v) {
  v.assign(d, 0);
  std::uint64_t block = 1;
  for (std::size_t lead = d; lead-- > 0;) {
    if (idx < block) {
      v[lead] = 1;
      for (std::size_t j = d; j-- > lead + 1;) {
        v[j] = static_cast<std::uint32_t>(idx % p);
        idx /= p;
      }
      return;
    }
    idx -= block;
    block *= p;
  }
  throw std::invalid_argument("projective index out of range");
}

// ---------------------------------------------------------------------------
// Core per-point work

namespace detail {

struct OrbitScratch {
  std::vector<std::uint32_t> rows;  // m x d elimination buffer
  std::vector<std::uint32_t> inv;   // inverse table for the modulus

  OrbitScratch(std::size_t m, std::size_t d, std::uint32_t p) : rows(m * d), inv(p, 0) {
    for (std::uint32_t x = 1; x < p; ++x) inv[x] = fp_inv(x, p);
  }
};

inline std::size_t rank_rows(std::uint32_t* rows, std::size_t m, std::size_t d, std::uint32_t p,
                             const std::uint32_t* inv) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < d && r < m; ++c) {
    std::size_t sel = r;
    while (sel < m && rows[sel * d + c] == 0) ++sel;
    if (sel == m) continue;
    if (sel != r)
      for (std::size_t j = c; j < d; ++j) std::swap(rows[sel * d + j], rows[r * d + j]);
    std::uint32_t pivinv = inv[rows[r * d + c]];
    for (std::size_t i = r + 1; i < m; ++i) {
      std::uint32_t f = rows[i * d + c];
      if (!f) continue;
      std::uint64_t mult = p - fp_mul(f, pivinv, p);
      for (std::size_t j = c; j < d; ++j)
        rows[i * d + j] = static_cast<std::uint32_t>((rows[i * d + j] + mult * rows[r * d + j]) % p);
    }
    ++r;
  }
  return r;
}

inline std::size_t orbit_dim(const LieRep& rep, const std::vector<std::uint32_t>& v,
                             OrbitScratch& scratch) {
  const std::size_t m = rep.operators.size(), d = rep.d;
  for (std::size_t i = 0; i < m; ++i) {
    const std::uint32_t* mat = rep.operators[i].a.data();
    std::uint32_t* row = scratch.rows.data() + i * d;
    for (std::size_t r = 0; r < d; ++r) {
      std::uint64_t acc = 0;
      const std::uint32_t* mrow = mat + r * d;
      for (std::size_t j = 0; j < d; ++j) acc += (std::uint64_t)mrow[j] * v[j];
      row[r] = static_cast<std::uint32_t>(acc % rep.p);
    }
  }
  return rank_rows(scratch.rows.data(), m, d, rep.p, scratch.inv.data());
}

}  // namespace detail

// The subspace spanned by {A v : A operator}. v = 0 gives the zero subspace.
inline Subspace orbit_subspace(const LieRep& rep, const std::vector<std::uint32_t>& v) {
  validate_rep(rep);
  if (v.size() != rep.d) throw std::invalid_argument("orbit_subspace: vector length mismatch");
  std::vector<std::vector<std::uint32_t>> rows;
  rows.reserve(rep.operators.size());
  for (const auto& op : rep.operators) rows.push_back(matvec(op, v));
  return span(rows, rep.d, rep.p);
}

// ---------------------------------------------------------------------------
// Reports

inline constexpr std::size_t kMaxWitnesses = 16;

struct OrbitWitness {
  std::vector<std::uint32_t> v;
  std::size_t dim = 0;
};

struct OrbitReport {
  std::size_t u = 0;                     // minimum orbit dimension found
  std::vector<OrbitWitness> witnesses;   // first few attaining the minimum, search order
  std::string mode;                      // "exhaustive" or "sampled"
  bool exact = false;                    // sampled results are upper bounds only
  std::uint64_t vectors_examined = 0;
  std::optional<std::uint64_t> seed;     // sampled mode
  std::string prng;                      // sampled mode: generator identifier
};

inline constexpr std::uint64_t kDefaultBudget = 1ull << 25;

struct SearchOptions {
  std::uint64_t budget = kDefaultBudget;  // max projective points for exhaustive work
  unsigned threads = 1;
};

namespace detail {

struct ChunkState {
  std::size_t min = ~std::size_t(0);
  std::vector<OrbitWitness> witnesses;

  void feed(const std::vector<std::uint32_t>& v, std::size_t dim) {
    if (dim < min) {
      min = dim;
      witnesses.clear();
    }
    if (dim == min && witnesses.size() < kMaxWitnesses) witnesses.push_back({v, dim});
  }

  // Merging chunks in index order reproduces the sequential stream exactly.
  void merge(ChunkState&& o) {
    if (o.min < min) {
      min = o.min;
      witnesses = std::move(o.witnesses);
    } else if (o.min == min) {
      for (auto& w : o.witnesses) {
        if (witnesses.size() >= kMaxWitnesses) break;
        witnesses.push_back(std::move(w));
      }
    }
  }
};

inline ChunkState scan_range(const LieRep& rep, std::uint64_t lo, std::uint64_t hi) {
  ChunkState st;
  OrbitScratch scratch(rep.operators.size(), rep.d, rep.p);
  std::vector<std::uint32_t> v;
  for (std::uint64_t idx = lo; idx < hi; ++idx) {
    decode_projective(rep.p, rep.d, idx, v);
    st.feed(v, orbit_dim(rep, v, scratch));
  }
  return st;
}

}  // namespace detail

// Exact minimum of dim(g v) over all projective points. Refuses when the
// projective count exceeds the budget. Thread count never changes the result:
// the index range is split into contiguous chunks and merged in order, which
// is bit-identical to the sequential scan.
inline OrbitReport exhaustive_min_orbit(const LieRep& rep, const SearchOptions& opts = {}) {
  validate_rep(rep);
  std::uint64_t count = projective_count(rep.p, rep.d);
  if (count > opts.budget)
    throw budget_error("projective point count " + std::to_string(count) + " exceeds budget " +
                       std::to_string(opts.budget) + "; raise --budget or use sampled mode");
  unsigned threads = opts.threads ? opts.threads : 1;
  if (threads > count && count > 0) threads = static_cast<unsigned>(count);

  detail::ChunkState total;
  if (threads <= 1) {
    total = detail::scan_range(rep, 0, count);
  } else {
    std::vector<detail::ChunkState> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t lo = count * t / threads, hi = count * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] { parts[t] = detail::scan_range(rep, lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts) total.merge(std::move(part));
  }

  OrbitReport rep_out;
  rep_out.u = total.min;
  rep_out.witnesses = std::move(total.witnesses);
  rep_out.mode = "exhaustive";
  rep_out.exact = true;
  rep_out.vectors_examined = count;
  return rep_out;
}

// Seeded random search. The result is an upper bound for the true minimum;
// distinguished vectors (evaluated first, in the order given) let callers pin
// known-good witnesses into the stream.
inline OrbitReport sampled_min_orbit(const LieRep& rep, std::uint64_t samples, std::uint64_t seed,
                                     const std::vector<std::vector<std::uint32_t>>& distinguished = {}) {
  validate_rep(rep);
  if (samples == 0 && distinguished.empty())
    throw std::invalid_argument("sampled_min_orbit: nothing to sample");
  detail::ChunkState st;
  detail::OrbitScratch scratch(rep.operators.size(), rep.d, rep.p);
  for (const auto& v : distinguished) {
    if (v.size() != rep.d) throw std::invalid_argument("distinguished vector length mismatch");
    st.feed(v, detail::orbit_dim(rep, v, scratch));
  }
  SplitMix64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    auto v = rng.nonzero_vector(rep.d, rep.p);
    st.feed(v, detail::orbit_dim(rep, v, scratch));
  }
  OrbitReport out;
  out.u = st.min;
  out.witnesses = std::move(st.witnesses);
  out.mode = "sampled";
  out.exact = false;
  out.vectors_examined = samples + distinguished.size();
  out.seed = seed;
  out.prng = kPrngName;
  return out;
}

// ---------------------------------------------------------------------------
// Orbit subspace family

struct SubspaceFamily {
  // (canonical subspace, number of projective points whose orbit span it is),
  // ordered by (dim, basis); multiplicities sum to the projective count.
  std::vector<std::pair<Subspace, std::uint64_t>> entries;
  std::size_t min_dim = 0;
};

inline SubspaceFamily orbit_subspace_family(const LieRep& rep, const SearchOptions& opts = {}) {
  validate_rep(rep);
  std::uint64_t count = projective_count(rep.p, rep.d);
  if (count > opts.budget)
    throw budget_error("projective point count " + std::to_string(count) + " exceeds budget " +
                       std::to_string(opts.budget));
  unsigned threads = opts.threads ? opts.threads : 1;
  if (threads > count && count > 0) threads = static_cast<unsigned>(count);

  using Acc = std::map<std::vector<std::uint32_t>, std::pair<Subspace, std::uint64_t>>;
  auto scan = [&](std::uint64_t lo, std::uint64_t hi) {
    Acc acc;
    std::vector<std::uint32_t> v;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      decode_projective(rep.p, rep.d, idx, v);
      Subspace s = orbit_subspace(rep, v);
      auto key = s.key();
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(std::move(key), std::make_pair(std::move(s), std::uint64_t(1)));
      else
        it->second.second += 1;
    }
    return acc;
  };

  Acc total;
  if (threads <= 1) {
    total = scan(0, count);
  } else {
    std::vector<Acc> parts(threads);
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t lo = count * t / threads, hi = count * (t + 1) / threads;
      pool.emplace_back([&, t, lo, hi] { parts[t] = scan(lo, hi); });
    }
    for (auto& th : pool) th.join();
    for (auto& part : parts)
      for (auto& [key, val] : part) {
        auto it = total.find(key);
        if (it == total.end())
          total.emplace(key, std::move(val));
        else
          it->second.second += val.second;
      }
  }

  SubspaceFamily fam;
  std::uint64_t seen = 0;
  fam.min_dim = rep.d + 1;
  for (auto& [key, val] : total) {
    seen += val.second;
    fam.min_dim = std::min(fam.min_dim, val.first.dim());
    fam.entries.emplace_back(std::move(val.first), val.second);
  }
  if (seen != count) throw invariant_violation("orbit family multiplicities do not sum to the point count");
  return fam;
}

// ---------------------------------------------------------------------------
// Dual-span / trapped-vector duality

struct DualSpanResult {
  bool gw_full = false;          // operators applied to U's annihilator span the dual
  bool exists_trapped_v = false; // some v != 0 with g v contained in U
};

// For W = annihilator(U), span{A^T w} = V* holds exactly when no nonzero v
// has its whole orbit inside U. Both sides are computed independently and the
// complementarity is asserted.
inline DualSpanResult dual_span_equivalence(const LieRep& rep, const Subspace& u,
                                            std::uint64_t budget = 1ull << 25) {
  validate_rep(rep);
  if (u.p != rep.p || u.ambient != rep.d)
    throw std::invalid_argument("dual_span_equivalence: subspace does not match the representation");

  Subspace w = annihilator(u);
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& op : rep.operators) {
    FpMatrix opt = transpose(op);
    for (const auto& f : w.basis) rows.push_back(matvec(opt, f));
  }
  DualSpanResult res;
  res.gw_full = span(rows, rep.d, rep.p).dim() == rep.d;

  std::uint64_t count = projective_count(rep.p, rep.d);
  if (count > budget)
    throw budget_error("dual_span_equivalence: projective count exceeds budget");
  std::vector<std::uint32_t> v;
  for (std::uint64_t idx = 0; idx < count && !res.exists_trapped_v; ++idx) {
    decode_projective(rep.p, rep.d, idx, v);
    bool trapped = true;
    for (const auto& op : rep.operators) {
      if (!u.contains(matvec(op, v))) {
        trapped = false;
        break;
      }
    }
    res.exists_trapped_v = trapped;
  }

  if (res.gw_full == res.exists_trapped_v)
    throw invariant_violation("dual-span and trapped-vector tests must be complementary");
  return res;
}

}  // namespace liefp
