#include <catch2/catch_amalgamated.hpp>

#include "liefp/fp.hpp"

using namespace liefp;

TEST_CASE("prime validation") {
  CHECK(is_prime_u32(2));
  CHECK(is_prime_u32(3));
  CHECK(is_prime_u32(65521));
  CHECK_FALSE(is_prime_u32(0));
  CHECK_FALSE(is_prime_u32(1));
  CHECK_FALSE(is_prime_u32(9));
  CHECK_FALSE(is_prime_u32(65521u * 2));

  CHECK_NOTHROW(require_odd_prime(3));
  CHECK_NOTHROW(require_odd_prime(5));
  CHECK_NOTHROW(require_odd_prime(65521));
  CHECK_THROWS_AS(require_odd_prime(2), std::invalid_argument);
  CHECK_THROWS_AS(require_odd_prime(4), std::invalid_argument);
  CHECK_THROWS_AS(require_odd_prime(1), std::invalid_argument);
  CHECK_THROWS_AS(require_odd_prime(65537), std::invalid_argument);  // above 2^16
}

TEST_CASE("modular arithmetic") {
  const std::uint32_t p = 7;
  for (std::uint32_t a = 0; a < p; ++a) {
    for (std::uint32_t b = 0; b < p; ++b) {
      CHECK(fp_add(a, b, p) == (a + b) % p);
      CHECK(fp_sub(a, b, p) == (a + p - b) % p);
      CHECK(fp_mul(a, b, p) == (a * b) % p);
    }
    if (a) CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
    CHECK(fp_add(a, fp_neg(a, p), p) == 0);
  }
  CHECK_THROWS_AS(fp_inv(0, p), std::invalid_argument);
  CHECK(fp_pow(3, 6, 7) == 1);  // Fermat
  CHECK(fp_pow(2, 0, 5) == 1);
  CHECK(fp_from_int(-1, 5) == 4);
  CHECK(fp_from_int(-12, 5) == 3);
  CHECK(fp_from_int(12, 5) == 2);
}

TEST_CASE("scalar wrapper") {
  FpScalar a(3, 5), b(4, 5);
  CHECK((a + b).residue == 2);
  CHECK((a * b).residue == 2);
  CHECK((a - b).residue == 4);
  CHECK((a / b).residue == 2);  // 3 * 4^-1 = 3 * 4 = 12 = 2
  CHECK((-a).residue == 2);
  CHECK(a.inverse().residue == 2);
  FpScalar c(1, 7);
  CHECK_THROWS_AS(a + c, std::invalid_argument);
}

TEST_CASE("matrix basics") {
  auto id = FpMatrix::identity(3, 5);
  FpMatrix m(2, 3, 5);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(0, 2) = 3;
  m.at(1, 0) = 4;
  m.at(1, 1) = 0;
  m.at(1, 2) = 1;
  CHECK(matmul(m, id) == m);
  auto mt = transpose(m);
  CHECK(mt.rows == 3);
  CHECK(mt.at(1, 0) == 2);
  auto v = matvec(m, {1, 1, 1});
  CHECK(v == std::vector<std::uint32_t>{1, 0});
  CHECK_THROWS_AS(matvec(m, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(FpMatrix(2, 2, 4), std::invalid_argument);
}

TEST_CASE("rref and rank") {
  FpMatrix m(2, 2, 5);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(rank(m) == 1);

  FpMatrix inv2(2, 2, 7);
  inv2.at(0, 0) = 1;
  inv2.at(0, 1) = 3;
  inv2.at(1, 0) = 2;
  inv2.at(1, 1) = 1;  // det = 1 - 6 = -5 != 0
  FpMatrix cp = inv2;
  CHECK(rref_in_place(cp) == 2);
  CHECK(cp == FpMatrix::identity(2, 7));

  // kernel of (1 2) over F_5 is spanned by (-2, 1) = (3, 1)
  FpMatrix row(1, 2, 5);
  row.at(0, 0) = 1;
  row.at(0, 1) = 2;
  auto ker = kernel_basis(row);
  REQUIRE(ker.size() == 1);
  CHECK(matvec(row, ker[0]) == std::vector<std::uint32_t>{0});
}

TEST_CASE("subspace canonical form and membership") {
  auto s = span({{2, 2}}, 2, 3);
  REQUIRE(s.dim() == 1);
  CHECK(s.basis[0] == std::vector<std::uint32_t>{1, 1});
  CHECK(s.contains({2, 2}));
  CHECK(s.contains({0, 0}));
  CHECK_FALSE(s.contains({1, 2}));
  CHECK_THROWS_AS(s.contains({1, 1, 1}), std::invalid_argument);

  // annihilator of span{(1,1)} in F_3^2 is span{(1,2)}
  auto ann = annihilator(s);
  REQUIRE(ann.dim() == 1);
  CHECK(ann.basis[0] == std::vector<std::uint32_t>{1, 2});

  CHECK(zero_subspace(3, 5).dim() == 0);
  CHECK(full_subspace(3, 5).dim() == 3);
  CHECK(subspace_leq(s, full_subspace(2, 3)));
  CHECK(subspace_leq(zero_subspace(2, 3), s));
  CHECK_FALSE(subspace_leq(full_subspace(2, 3), s));
}

TEST_CASE("subspace lattice operations") {
  auto a = span({{1, 0, 0}, {0, 1, 0}}, 3, 5);
  auto b = span({{0, 1, 0}, {0, 0, 1}}, 3, 5);
  auto meet = subspace_intersect(a, b);
  REQUIRE(meet.dim() == 1);
  CHECK(meet.basis[0] == std::vector<std::uint32_t>{0, 1, 0});
  CHECK(subspace_sum(a, b).dim() == 3);
}

TEST_CASE("subspace enumeration counts") {
  CHECK(all_subspaces(1, 3).size() == 2);
  CHECK(all_subspaces(2, 3).size() == 6);
  CHECK(all_subspaces(3, 3).size() == 28);
  CHECK(all_subspaces(2, 5).size() == 8);
}

TEST_CASE("annihilator is an inclusion-reversing involution") {
  auto subs = all_subspaces(3, 3);
  for (const auto& s : subs) {
    auto ann = annihilator(s);
    CHECK(ann.dim() + s.dim() == 3);
    CHECK(annihilator(ann) == s);
  }
  for (const auto& s : subs)
    for (const auto& t : subs)
      if (subspace_leq(s, t)) CHECK(subspace_leq(annihilator(t), annihilator(s)));
}

TEST_CASE("subspace keys order by dimension first") {
  auto subs = all_subspaces(2, 3);
  for (const auto& s : subs)
    for (const auto& t : subs)
      if (s.dim() < t.dim()) CHECK(s.key() < t.key());
}
