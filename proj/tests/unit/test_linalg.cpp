#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "seqdim/linalg.hpp"
#include "seqdim/unipoly.hpp"

using namespace seqdim;
using seqdim::testing::cofactor_det;
using seqdim::testing::cofactor_poly_det;
using seqdim::testing::naive_projected_dim;
using seqdim::testing::naive_rank;

namespace {

RatMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int span,
                        double density = 1.0) {
  std::uniform_int_distribution<int> value(-span, span);
  std::bernoulli_distribution keep(density);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (keep(rng)) m(i, j) = value(rng);
    }
  }
  return m;
}

// Low-rank matrix as a product of two random factors.
RatMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                          std::size_t inner) {
  const RatMatrix a = random_matrix(rng, rows, inner, 2);
  const RatMatrix b = random_matrix(rng, inner, cols, 2);
  RatMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      for (std::size_t k = 0; k < inner; ++k) m(i, j) += a(i, k) * b(k, j);
    }
  }
  return m;
}

bool coprime_integers(const RatVector& v) {
  mpz_class g = 0;
  for (const auto& x : v) {
    if (!x.is_integer()) return false;
    mpz_class n = x.numerator();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return g == 1;
}

}  // namespace

TEST_SUITE("exact_linalg") {
  TEST_CASE("rank examples") {
    CHECK(rank(RatMatrix::identity(3)) == 3);
    CHECK(rank(RatMatrix{{1, 1}, {2, 2}}) == 1);
    CHECK(rank(RatMatrix(2, 5)) == 0);
    CHECK(rank(RatMatrix(0, 3)) == 0);
  }

  TEST_CASE("kernel examples") {
    const auto k = kernel_basis(RatMatrix{{1, 1}});
    REQUIRE(k.size() == 1);
    CHECK(k[0][0] == -k[0][1]);
    CHECK(!k[0][0].is_zero());
    CHECK(kernel_basis(RatMatrix::identity(2)).empty());
    CHECK(kernel_basis(RatMatrix(1, 3)).size() == 3);
  }

  TEST_CASE("projected kernel examples") {
    const std::vector<std::size_t> first{0};
    const std::vector<std::size_t> both{0, 1};
    const std::vector<std::size_t> tail{1, 2};
    CHECK(projected_kernel_dim(RatMatrix{{1, 1}}, first) == 1);
    CHECK(projected_kernel_dim(RatMatrix::identity(2), both) == 0);
    CHECK(projected_kernel_dim(RatMatrix::identity(2), first) == 0);
    CHECK(projected_kernel_dim(RatMatrix{{1, 0, 0}}, tail) == 2);
  }

  TEST_CASE("determinant examples") {
    CHECK(determinant(RatMatrix::identity(4)) == 1);
    CHECK(determinant(RatMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(RatMatrix{{Rational(1, 2), 0}, {0, Rational(2, 3)}}) == Rational(1, 3));
    CHECK(determinant(RatMatrix{{1, 2}, {2, 4}}) == 0);
    CHECK(determinant(RatMatrix(0, 0)) == 1);
  }

  TEST_CASE("property: rank, kernel and determinant against naive elimination") {
    std::mt19937_64 rng(1234);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int trial = 0; trial < 400; ++trial) {
      const std::size_t rows = dim(rng);
      const std::size_t cols = dim(rng);
      const RatMatrix m = trial % 3 == 0
                              ? random_low_rank(rng, rows, cols, 1 + trial % 3)
                              : random_matrix(rng, rows, cols, 3, trial % 2 ? 0.4 : 1.0);
      const std::size_t r = rank(m);
      CHECK(r == naive_rank(m));
      const auto k = kernel_basis(m);
      CHECK(r + k.size() == cols);
      for (const auto& v : k) {
        const auto mv = multiply(m, v);
        CHECK(std::all_of(mv.begin(), mv.end(), [](const Rational& x) { return x.is_zero(); }));
        CHECK(coprime_integers(v));
      }
      RatMatrix kb(k.size(), cols);
      for (std::size_t i = 0; i < k.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) kb(i, j) = k[i][j];
      }
      CHECK(rank(kb) == k.size());

      std::vector<std::size_t> coords;
      for (std::size_t j = 0; j < cols; ++j) {
        if ((trial >> (j % 5)) & 1) coords.push_back(j);
      }
      CHECK(projected_kernel_dim(m, coords) == naive_projected_dim(m, coords));

      if (rows == cols && rows <= 6) CHECK(determinant(m) == cofactor_det(m));
    }
  }

  TEST_CASE("property: rational entries") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    for (int trial = 0; trial < 100; ++trial) {
      RatMatrix m(4, 4);
      for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) m(i, j) = Rational(num(rng), den(rng));
      }
      CHECK(determinant(m) == cofactor_det(m));
      CHECK(rank(m) == naive_rank(m));
    }
  }

  TEST_CASE("property: sparse echelon rank equals dense rank") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 300; ++trial) {
      const RatMatrix m = random_matrix(rng, 2 + trial % 9, 2 + trial % 7, 2, 0.35);
      std::vector<SparseEchelon::Row> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) {
        SparseEchelon::Row row;
        for (std::size_t j = 0; j < m.cols(); ++j) {
          if (!m(i, j).is_zero()) row.emplace_back(j, m(i, j));
        }
        rows.push_back(std::move(row));
      }
      CHECK(sparse_rank(rows) == rank(m));
    }
  }

  TEST_CASE("sparse echelon reports dependence") {
    SparseEchelon e;
    CHECK(e.insert({{0, 1}, {2, 1}}));
    CHECK(e.insert({{1, 1}, {2, -1}}));
    CHECK_FALSE(e.insert({{0, 2}, {1, 2}}));  // 2 r0 + 2 r1
    CHECK_FALSE(e.insert({}));
    CHECK(e.rank() == 2);
    CHECK(e.insert({{2, 5}}));
    CHECK(e.rank() == 3);
  }
}

TEST_SUITE("unipoly") {
  TEST_CASE("text form") {
    CHECK(UniPoly(std::vector<Rational>{-1, -4, 1}).to_string() == "t^2 - 4t - 1");
    CHECK(UniPoly(std::vector<Rational>{6, -1}).to_string() == "-t + 6");
    CHECK(UniPoly().to_string() == "0");
    CHECK(UniPoly(std::vector<Rational>{0, Rational(1, 2)}).to_string() == "(1/2)t");
    CHECK(UniPoly(std::vector<Rational>{0, 0, 0}).is_zero());
    CHECK(UniPoly(std::vector<Rational>{0, 0, 3}).valuation() == 2);
    CHECK(UniPoly(std::vector<Rational>{5}).to_string() == "5");
  }

  TEST_CASE("arithmetic and evaluation") {
    const UniPoly t = UniPoly::variable();
    const UniPoly p = t * t - UniPoly(4) * t - UniPoly(1);
    CHECK(p(Rational(2)) == -5);
    CHECK((p - p).is_zero());
    CHECK((t + UniPoly(1)) * (t - UniPoly(1)) == t * t - UniPoly(1));
    CHECK(p.degree() == 2);
    CHECK(UniPoly().degree() == -1);
  }

  TEST_CASE("interpolation reproduces random polynomials") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> c(-20, 20);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Rational> coeffs;
      for (int k = 0; k <= trial % 7; ++k) coeffs.emplace_back(c(rng));
      const UniPoly p(coeffs);
      std::vector<Rational> xs, ys;
      for (int k = 0; k <= trial % 7; ++k) {
        xs.emplace_back(k);
        ys.push_back(p(Rational(k)));
      }
      CHECK(interpolate(xs, ys) == p);
    }
  }

  TEST_CASE("poly_det examples") {
    const UniPoly t = UniPoly::variable();
    PolyMatrix diag(2, 2);
    diag(0, 0) = t;
    diag(1, 1) = t;
    CHECK(poly_det(diag, 2) == t * t);

    PolyMatrix fib(3, 3);
    const std::vector<std::vector<UniPoly>> rows{
        {UniPoly(-1), UniPoly(-1), UniPoly(1)},
        {t, UniPoly(-1), UniPoly(-1)},
        {-t, t, UniPoly(-1)}};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) fib(i, j) = rows[i][j];
    }
    CHECK(poly_det(fib, 2).to_string() == "t^2 - 4t - 1");
    CHECK(cofactor_poly_det(fib).to_string() == "t^2 - 4t - 1");

    PolyMatrix m(2, 2);
    m(0, 0) = UniPoly(-1);
    m(0, 1) = UniPoly(1);
    m(1, 0) = t;
    CHECK(poly_det(m, 1) == -t);
  }

  TEST_CASE("property: poly_det equals cofactor expansion, exhaustive 1x1 and 2x2") {
    const std::vector<int> vals{-1, 0, 1};
    // Each entry c0 + c1 t with c0, c1 in {-1, 0, 1}: 9 choices per entry.
    for (int code = 0; code < 9; ++code) {
      PolyMatrix m(1, 1);
      m(0, 0) = UniPoly(std::vector<Rational>{vals[code % 3], vals[code / 3]});
      CHECK(poly_det(m, 1) == cofactor_poly_det(m));
    }
    std::size_t checked = 0;
    for (int code = 0; code < 9 * 9 * 9 * 9; ++code) {
      PolyMatrix m(2, 2);
      int c = code;
      for (std::size_t e = 0; e < 4; ++e) {
        const int entry = c % 9;
        c /= 9;
        m(e / 2, e % 2) = UniPoly(std::vector<Rational>{vals[entry % 3], vals[entry / 3]});
      }
      REQUIRE(poly_det(m, 2) == cofactor_poly_det(m));
      ++checked;
    }
    CHECK(checked == 6561);
  }

  TEST_CASE("property: poly_det equals cofactor expansion, exhaustive 3x3 over {0,1} + {0,1}t") {
    std::size_t checked = 0;
    for (int code = 0; code < (1 << 18); ++code) {
      PolyMatrix m(3, 3);
      for (std::size_t e = 0; e < 9; ++e) {
        const int entry = (code >> (2 * e)) & 3;
        m(e / 3, e % 3) = UniPoly(std::vector<Rational>{entry & 1, entry >> 1});
      }
      REQUIRE(poly_det(m, 3) == cofactor_poly_det(m));
      ++checked;
    }
    CHECK(checked == 262144);
  }
}
