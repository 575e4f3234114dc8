#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "homquot/context.hpp"
#include "homquot/errors.hpp"
#include "homquot/exalg.hpp"

#include <random>

using namespace homquot;

static Scalar qs(long n, long d = 1) {
  return Scalar::of(FieldSpec::rationals(), n, d);
}
static Scalar fs(uint32_t p, long n) { return Scalar::of(FieldSpec::prime(p), n); }

TEST_CASE("scalar arithmetic over the rationals") {
  Scalar a = qs(3, 2), b = qs(-7, 3);
  CHECK((a + b).str() == "-5/6");
  CHECK((a * b).str() == "-7/2");
  CHECK((a - a).is_zero());
  CHECK((a / a).is_one());
  CHECK((-b).str() == "7/3");
  CHECK(b.inv().str() == "-3/7");
  CHECK_THROWS_AS(qs(0).inv(), Error);
}

TEST_CASE("scalar arithmetic mod p") {
  Scalar a = fs(5, 3), b = fs(5, 4);
  CHECK((a + b).str() == "2");
  CHECK((a * b).str() == "2");
  CHECK(b.inv().str() == "4");  // 4*4 = 16 = 1 mod 5
  CHECK((a - b).str() == "4");
  CHECK(fs(5, -1).str() == "4");
  CHECK_THROWS_AS(Scalar::of(FieldSpec::prime(5), 0).inv(), Error);
  CHECK_THROWS_AS(FieldSpec::prime(6), Error);
  CHECK_THROWS_AS(FieldSpec::prime(1), Error);
}

TEST_CASE("scalar parse and round trip") {
  FieldSpec Q = FieldSpec::rationals();
  CHECK(Scalar::parse(Q, "-7/2").str() == "-7/2");
  CHECK(Scalar::parse(Q, "3").str() == "3");
  CHECK(Scalar::parse(Q, "6/4").str() == "3/2");
  CHECK(Scalar::parse(Q, "-0").is_zero());
  FieldSpec F5 = FieldSpec::prime(5);
  CHECK(Scalar::parse(F5, "9").str() == "4");
  CHECK(Scalar::parse(F5, "-1").str() == "4");
  CHECK_THROWS_AS(Scalar::parse(F5, "1/2"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, ""), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "2/0"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "a"), ParseError);
  CHECK_THROWS_AS(Scalar::parse(Q, "1 /2"), ParseError);
}

TEST_CASE("field axioms hold on random triples") {
  std::mt19937_64 rng(12345);
  auto rand_q = [&]() {
    long n = static_cast<long>(rng() % 41) - 20;
    long d = static_cast<long>(rng() % 19) + 1;
    return qs(n, d);
  };
  auto rand_f = [&]() { return fs(5, static_cast<long>(rng() % 5)); };

  for (int trial = 0; trial < 10000; ++trial) {
    for (int which = 0; which < 2; ++which) {
      Scalar a = which ? rand_q() : rand_f();
      Scalar b = which ? rand_q() : rand_f();
      Scalar c = which ? rand_q() : rand_f();
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE((a - b) + b == a);
      if (!c.is_zero()) REQUIRE((a / c) * c == a);
    }
  }
}

TEST_CASE("rref worked examples") {
  FieldSpec Q = FieldSpec::rationals();
  Matrix m = Matrix::from_rows(Q, {{qs(2), qs(4)}, {qs(1), qs(2)}}, 2);
  Matrix r = rref(m);
  CHECK(r.at(0, 0) == qs(1));
  CHECK(r.at(0, 1) == qs(2));
  CHECK(r.at(1, 0).is_zero());
  CHECK(r.at(1, 1).is_zero());
  CHECK(rank(m) == 1);

  FieldSpec F2 = FieldSpec::prime(2);
  Matrix m2 = Matrix::from_rows(F2, {{fs(2, 1), fs(2, 1)}, {fs(2, 1), fs(2, 1)}}, 2);
  Matrix r2 = rref(m2);
  CHECK(r2.at(0, 0) == fs(2, 1));
  CHECK(r2.at(0, 1) == fs(2, 1));
  CHECK(r2.at(1, 0).is_zero());
  CHECK(r2.at(1, 1).is_zero());
}

TEST_CASE("rref is idempotent and rank-nullity holds on random matrices") {
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 200; ++trial) {
    FieldSpec f = (trial % 2) ? FieldSpec::prime(5) : FieldSpec::rationals();
    std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 5;
    Matrix m(f, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.set(i, j, Scalar::of(f, static_cast<long>(rng() % 7) - 3));
    Matrix r = rref(m);
    REQUIRE(rref(r) == r);
    Subspace k = kernel(m);
    REQUIRE(rank(m) + k.dim() == cols);
    for (std::size_t i = 0; i < k.dim(); ++i)
      REQUIRE(vec_is_zero(m.apply(k.basis_row(i))));
  }
}

TEST_CASE("kernel worked example over GF(5)") {
  FieldSpec F5 = FieldSpec::prime(5);
  Matrix m = Matrix::from_rows(F5, {{fs(5, 1), fs(5, 2)}}, 2);
  Subspace k = kernel(m);
  REQUIRE(k.dim() == 1);
  // canonical basis row is (1, 2): 1 + 2*2 = 5 = 0
  CHECK(k.basis_row(0)[0] == fs(5, 1));
  CHECK(k.basis_row(0)[1] == fs(5, 2));
  CHECK(vec_is_zero(m.apply(k.basis_row(0))));
}

TEST_CASE("subspace membership, sum, intersection") {
  FieldSpec Q = FieldSpec::rationals();
  Vec e1 = vec_unit(Q, 3, 0), e2 = vec_unit(Q, 3, 1), e3 = vec_unit(Q, 3, 2);
  Subspace a = Subspace::from_vectors(Q, 3, {vec_add(e1, e2), e3});
  Subspace b = Subspace::from_vectors(Q, 3, {e2, e3});
  CHECK(a.dim() == 2);
  CHECK(a.member(vec_add(e1, e2)));
  CHECK_FALSE(a.member(e1));
  Subspace meet = a.intersect(b);
  REQUIRE(meet.dim() == 1);
  CHECK(meet.member(e3));
  Subspace join = a.sum(b);
  CHECK(join.dim() == 3);
  CHECK(join.is_full());
}

TEST_CASE("modular dimension law on random subspaces") {
  std::mt19937_64 rng(4242);
  FieldSpec F3 = FieldSpec::prime(3);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + rng() % 4;
    auto rand_space = [&]() {
      std::size_t cnt = rng() % (n + 1);
      std::vector<Vec> vs;
      for (std::size_t t = 0; t < cnt; ++t) {
        Vec v(n, Scalar::zero(F3));
        for (std::size_t j = 0; j < n; ++j)
          v[j] = Scalar::of(F3, static_cast<long>(rng() % 3));
        vs.push_back(v);
      }
      return Subspace::from_vectors(F3, n, vs);
    };
    Subspace a = rand_space(), b = rand_space();
    REQUIRE(a.dim() + b.dim() == a.sum(b).dim() + a.intersect(b).dim());
    Subspace meet = a.intersect(b);
    for (std::size_t i = 0; i < meet.dim(); ++i) {
      REQUIRE(a.member(meet.basis_row(i)));
      REQUIRE(b.member(meet.basis_row(i)));
    }
  }
}

TEST_CASE("conditions functionals cut out exactly the subspace") {
  FieldSpec F5 = FieldSpec::prime(5);
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t n = 2 + rng() % 3;
    std::vector<Vec> vs;
    for (std::size_t t = 0; t < 1 + rng() % n; ++t) {
      Vec v(n, Scalar::zero(F5));
      for (std::size_t j = 0; j < n; ++j)
        v[j] = Scalar::of(F5, static_cast<long>(rng() % 5));
      vs.push_back(v);
    }
    Subspace s = Subspace::from_vectors(F5, n, vs);
    Matrix cond = s.conditions();
    REQUIRE(cond.rows() == n - s.dim());
    ProjectiveScan scan(F5, n);
    std::vector<uint32_t> digits;
    while (scan.next(digits)) {
      Vec v = vec_from_digits(F5, digits);
      REQUIRE(vec_is_zero(cond.apply(v)) == s.member(v));
    }
  }
}

TEST_CASE("projective enumeration: counts and order") {
  FieldSpec F2 = FieldSpec::prime(2);
  Ctx ctx;
  auto pts2 = enumerate_projective(F2, 2, ctx);
  REQUIRE(pts2.size() == 3);
  CHECK(pts2[0] == Vec{fs(2, 0), fs(2, 1)});
  CHECK(pts2[1] == Vec{fs(2, 1), fs(2, 0)});
  CHECK(pts2[2] == Vec{fs(2, 1), fs(2, 1)});

  FieldSpec F3 = FieldSpec::prime(3);
  auto pts3 = enumerate_projective(F3, 2, ctx);
  REQUIRE(pts3.size() == 4);
  CHECK(pts3[0] == Vec{fs(3, 0), fs(3, 1)});
  CHECK(pts3[1] == Vec{fs(3, 1), fs(3, 0)});
  CHECK(pts3[2] == Vec{fs(3, 1), fs(3, 1)});
  CHECK(pts3[3] == Vec{fs(3, 1), fs(3, 2)});

  CHECK(projective_count(F2, 4, 1u << 20) == 15);
  CHECK(projective_count(F3, 3, 1u << 20) == 13);
  CHECK(projective_count(F2, 0, 1u << 20) == 0);
  CHECK_THROWS_AS(projective_count(F2, 64, 1u << 20), EnumerationTooLarge);
  CHECK_THROWS_AS(projective_count(FieldSpec::rationals(), 2, 1u << 20),
                  UnsupportedMode);
}

TEST_CASE("no two enumerated points are scalar multiples") {
  FieldSpec F5 = FieldSpec::prime(5);
  Ctx ctx;
  auto pts = enumerate_projective(F5, 3, ctx);
  REQUIRE(pts.size() == 31);
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) {
      bool dependent =
          Subspace::from_vectors(F5, 3, {pts[a], pts[b]}).dim() < 2;
      REQUIRE_FALSE(dependent);
    }
}

TEST_CASE("matrix multiply agrees across field backends") {
  std::mt19937_64 rng(31337);
  FieldSpec F7 = FieldSpec::prime(7);
  FieldSpec Q = FieldSpec::rationals();
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 1 + rng() % 4;
    Matrix aq(Q, n, n), bq(Q, n, n), af(F7, n, n), bf(F7, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long x = static_cast<long>(rng() % 7), y = static_cast<long>(rng() % 7);
        aq.set(i, j, qs(x));
        bq.set(i, j, qs(y));
        af.set(i, j, fs(7, x));
        bf.set(i, j, fs(7, y));
      }
    Matrix pq = aq * bq, pf = af * bf;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        long lhs = pq.at(i, j).rat().get_num().get_si() % 7;
        if (lhs < 0) lhs += 7;
        REQUIRE(static_cast<uint32_t>(lhs) == pf.at(i, j).residue());
      }
  }
}

TEST_CASE("least_index_where is deterministic across thread counts") {
  auto pred = [](std::size_t i) { return i % 97 == 41; };
  auto a = least_index_where(100000, 1, pred);
  auto b = least_index_where(100000, 8, pred);
  REQUIRE(a.has_value());
  CHECK(*a == 41);
  CHECK(a == b);
  CHECK_FALSE(least_index_where(40, 4, pred).has_value());
}

TEST_CASE("field mismatch is rejected") {
  Scalar a = qs(1), b = fs(5, 1);
  CHECK_THROWS_AS(a + b, FieldMismatch);
  CHECK(FieldSpec::rationals().str() == "QQ");
  CHECK(FieldSpec::prime(5).str() == "GF(5)");
}
