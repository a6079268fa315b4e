#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "liefp/chevalley.hpp"
#include "liefp/orbits.hpp"
#include "liefp/prng.hpp"

using namespace liefp;

TEST_CASE("natural representations") {
  auto gl1 = gl_natural_rep(1, 5);
  REQUIRE(gl1.operators.size() == 1);
  CHECK(gl1.operators[0].at(0, 0) == 1);
  CHECK(gl1.label == "gl:1");

  auto gl2 = gl_natural_rep(2, 5);
  CHECK(gl2.operators.size() == 4);
  auto sl2 = sl_natural_rep(2, 5);
  CHECK(sl2.operators.size() == 3);
  CHECK(sl2.label == "sl:2");
  CHECK_THROWS_AS(sl_natural_rep(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(gl_natural_rep(0, 5), std::invalid_argument);
}

TEST_CASE("rep validation") {
  LieRep bad;
  bad.p = 5;
  bad.d = 2;
  CHECK_THROWS_AS(validate_rep(bad), std::invalid_argument);  // no operators
  bad.operators.push_back(FpMatrix(2, 3, 5));
  CHECK_THROWS_AS(validate_rep(bad), std::invalid_argument);  // not square of size d
  bad.operators[0] = FpMatrix(2, 2, 7);
  CHECK_THROWS_AS(validate_rep(bad), std::invalid_argument);  // modulus mismatch
  bad.operators[0] = FpMatrix(2, 2, 5);
  CHECK_NOTHROW(validate_rep(bad));
}

TEST_CASE("projective enumeration") {
  CHECK(projective_count(3, 2) == 4);
  CHECK(projective_count(5, 4) == 156);
  CHECK(projective_count(5, 10) == 2441406);
  std::set<std::vector<std::uint32_t>> seen;
  std::vector<std::uint32_t> v;
  for (std::uint64_t i = 0; i < projective_count(3, 3); ++i) {
    decode_projective(3, 3, i, v);
    bool nonzero = false;
    std::size_t lead = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] && !nonzero) {
        nonzero = true;
        lead = j;
      }
    REQUIRE(nonzero);
    CHECK(v[lead] == 1);  // normalized representative
    seen.insert(v);
  }
  CHECK(seen.size() == 13);
}

TEST_CASE("orbit subspaces") {
  auto gl2 = gl_natural_rep(2, 5);
  CHECK(orbit_subspace(gl2, {0, 0}).dim() == 0);
  CHECK(orbit_subspace(gl2, {1, 0}) == full_subspace(2, 5));
  CHECK(orbit_subspace(gl2, {3, 4}) == full_subspace(2, 5));
  CHECK_THROWS_AS(orbit_subspace(gl2, {1, 0, 0}), std::invalid_argument);

  // scalar invariance
  auto a2 = adjoint_rep(chevalley_algebra(build_root_system('A', 2)), 5);
  SplitMix64 rng(7);
  for (int k = 0; k < 20; ++k) {
    auto v = rng.nonzero_vector(a2.d, 5);
    for (std::uint32_t c = 2; c < 5; ++c) {
      auto w = v;
      for (auto& x : w) x = fp_mul(x, c, 5);
      CHECK(orbit_subspace(a2, v) == orbit_subspace(a2, w));
    }
  }
}

TEST_CASE("sl2 adjoint orbit of the highest root vector") {
  auto alg = chevalley_algebra(build_root_system('A', 1));
  auto rep = adjoint_rep(alg, 5);
  // e_theta = basis vector 0; orbit = span{e_theta, h_theta}
  auto orb = orbit_subspace(rep, {1, 0, 0});
  REQUIRE(orb.dim() == 2);
  CHECK(orb.contains({1, 0, 0}));
  CHECK(orb.contains({0, 1, 0}));
  CHECK_FALSE(orb.contains({0, 0, 1}));
}

TEST_CASE("exhaustive minimum over small reps") {
  auto r1 = exhaustive_min_orbit(gl_natural_rep(1, 5));
  CHECK(r1.u == 1);
  CHECK(r1.exact);
  CHECK(r1.mode == "exhaustive");
  CHECK(r1.vectors_examined == 1);

  auto r2 = exhaustive_min_orbit(gl_natural_rep(2, 5));
  CHECK(r2.u == 2);
  CHECK(r2.vectors_examined == 6);
  REQUIRE(r2.witnesses.size() == 6);  // every point attains the minimum
  for (const auto& w : r2.witnesses) CHECK(w.dim == 2);

  auto rs2 = exhaustive_min_orbit(sl_natural_rep(2, 5));
  CHECK(rs2.u == 2);

  auto ra = exhaustive_min_orbit(adjoint_rep(chevalley_algebra(build_root_system('A', 1)), 5));
  CHECK(ra.u == 2);
}

TEST_CASE("zero representation") {
  LieRep zero;
  zero.p = 3;
  zero.d = 2;
  zero.operators.push_back(FpMatrix(2, 2, 3));
  zero.label = "zero";
  auto rep = exhaustive_min_orbit(zero);
  CHECK(rep.u == 0);
  auto fam = orbit_subspace_family(zero);
  REQUIRE(fam.entries.size() == 1);
  CHECK(fam.entries[0].first.dim() == 0);
  CHECK(fam.entries[0].second == 4);
  CHECK(fam.min_dim == 0);
}

TEST_CASE("budget refusal directs to sampled mode") {
  auto b2 = adjoint_rep(chevalley_algebra(build_root_system('B', 2)), 5);
  SearchOptions opts;
  opts.budget = 10;
  CHECK_THROWS_WITH(exhaustive_min_orbit(b2, opts),
                    Catch::Matchers::ContainsSubstring("sampled"));
  CHECK_THROWS_AS(exhaustive_min_orbit(b2, opts), budget_error);
  CHECK_THROWS_AS(orbit_subspace_family(b2, opts), budget_error);
}

TEST_CASE("threaded scans match sequential bit for bit") {
  auto rep = adjoint_rep(chevalley_algebra(build_root_system('A', 2)), 3);
  CHECK(projective_count(3, rep.d) == 3280);
  SearchOptions seq;
  seq.threads = 1;
  auto base = exhaustive_min_orbit(rep, seq);
  for (unsigned t : {2u, 3u, 5u, 16u}) {
    SearchOptions par;
    par.threads = t;
    auto got = exhaustive_min_orbit(rep, par);
    CHECK(got.u == base.u);
    CHECK(got.vectors_examined == base.vectors_examined);
    REQUIRE(got.witnesses.size() == base.witnesses.size());
    for (std::size_t i = 0; i < base.witnesses.size(); ++i) {
      CHECK(got.witnesses[i].v == base.witnesses[i].v);
      CHECK(got.witnesses[i].dim == base.witnesses[i].dim);
    }
    auto fam_seq = orbit_subspace_family(rep, seq);
    auto fam_par = orbit_subspace_family(rep, par);
    CHECK(fam_seq.min_dim == fam_par.min_dim);
    CHECK(fam_seq.entries == fam_par.entries);
  }
}

TEST_CASE("witness list is capped") {
  auto rep = adjoint_rep(chevalley_algebra(build_root_system('A', 2)), 3);
  auto rpt = exhaustive_min_orbit(rep);
  CHECK(rpt.witnesses.size() <= kMaxWitnesses);
  for (const auto& w : rpt.witnesses) CHECK(w.dim == rpt.u);
}

TEST_CASE("sampled mode is seed-deterministic") {
  auto rep = adjoint_rep(chevalley_algebra(build_root_system('A', 2)), 5);
  auto a = sampled_min_orbit(rep, 500, 42);
  auto b = sampled_min_orbit(rep, 500, 42);
  CHECK_FALSE(a.exact);
  CHECK(a.mode == "sampled");
  REQUIRE(a.seed.has_value());
  CHECK(*a.seed == 42);
  CHECK(a.prng == kPrngName);
  CHECK(a.u == b.u);
  CHECK(a.vectors_examined == b.vectors_examined);
  REQUIRE(a.witnesses.size() == b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) CHECK(a.witnesses[i].v == b.witnesses[i].v);
  // sampled minimum can never undercut the exhaustive one
  auto exact = exhaustive_min_orbit(rep);
  CHECK(a.u >= exact.u);
}

TEST_CASE("distinguished witnesses are evaluated first") {
  auto alg = chevalley_algebra(build_root_system('A', 2));
  auto rep = adjoint_rep(alg, 5);
  std::vector<std::uint32_t> etheta(rep.d, 0);
  etheta[alg.e_index(highest_root(alg.rs))] = 1;
  auto rpt = sampled_min_orbit(rep, 50, 7, {etheta});
  REQUIRE_FALSE(rpt.witnesses.empty());
  CHECK(rpt.witnesses[0].v == etheta);
  CHECK(rpt.witnesses[0].dim == 4);  // |S| + 2 for A2
  CHECK(rpt.u == 4);                 // nothing samples below the true minimum

  CHECK_THROWS_AS(sampled_min_orbit(rep, 0, 1), std::invalid_argument);
  CHECK_NOTHROW(sampled_min_orbit(rep, 0, 1, {etheta}));
}

TEST_CASE("variety families") {
  auto fam = orbit_subspace_family(gl_natural_rep(2, 3));
  REQUIRE(fam.entries.size() == 1);
  CHECK(fam.entries[0].first == full_subspace(2, 3));
  CHECK(fam.entries[0].second == 4);
  CHECK(fam.min_dim == 2);

  auto a1 = orbit_subspace_family(adjoint_rep(chevalley_algebra(build_root_system('A', 1)), 5));
  CHECK(a1.min_dim == 2);
  std::uint64_t total = 0;
  for (const auto& [sub, count] : a1.entries) total += count;
  CHECK(total == projective_count(5, 3));
  // entries are sorted by the deterministic subspace key
  for (std::size_t i = 1; i < a1.entries.size(); ++i)
    CHECK(a1.entries[i - 1].first.key() < a1.entries[i].first.key());
}

TEST_CASE("dual span equivalence on named cases") {
  auto gl3 = gl_natural_rep(3, 3);
  auto res = dual_span_equivalence(gl3, zero_subspace(3, 3));
  CHECK(res.gw_full);
  CHECK_FALSE(res.exists_trapped_v);

  LieRep zero;
  zero.p = 3;
  zero.d = 2;
  zero.operators.push_back(FpMatrix(2, 2, 3));
  zero.label = "zero";
  for (const auto& u : all_subspaces(2, 3)) {
    auto r = dual_span_equivalence(zero, u);
    CHECK_FALSE(r.gw_full);
    CHECK(r.exists_trapped_v);
  }

  // full-space U always traps every vector
  auto r2 = dual_span_equivalence(gl3, full_subspace(3, 3));
  CHECK(r2.exists_trapped_v);
  CHECK_FALSE(r2.gw_full);
}

TEST_CASE("sampling rejects the zero vector") {
  SplitMix64 rng(99);
  for (int k = 0; k < 200; ++k) {
    auto v = rng.nonzero_vector(3, 3);
    bool nz = false;
    for (auto x : v) nz = nz || x != 0;
    CHECK(nz);
    for (auto x : v) CHECK(x < 3);
  }
}
