#include <algorithm>
#include <numeric>

#include "helpers.hpp"

using namespace testing;

namespace {

// Leibniz expansion; independent of elimination.
Rational leibniz(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    total += inversions % 2 ? -term : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// Largest nonvanishing minor.
std::size_t minor_rank(const Matrix& m) {
  const std::size_t k_max = std::min(m.rows(), m.cols());
  for (std::size_t k = k_max; k > 0; --k) {
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.end() - k, rsel.end(), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.end() - k, csel.end(), true);
      do {
        Matrix sub(k, k);
        std::size_t r2 = 0;
        for (std::size_t r = 0; r < m.rows(); ++r) {
          if (!rsel[r]) continue;
          std::size_t c2 = 0;
          for (std::size_t c = 0; c < m.cols(); ++c)
            if (csel[c]) sub(r2, c2++) = m(r, c);
          ++r2;
        }
        if (leibniz(sub) != 0) return k;
      } while (std::next_permutation(csel.begin(), csel.end()));
    } while (std::next_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

Matrix random_matrix(Rng& rng, std::size_t r, std::size_t c, std::int64_t bound, int zero_bias = 0) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (zero_bias && draw_int(rng, zero_bias) != 0) continue;
      m(i, j) = Rational(draw_int(rng, bound), 1 + draw_int(rng, 1) + 1);
      m(i, j).canonicalize();
    }
  return m;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(parse_rational("4/6") == Rational(2, 3));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
    CHECK(kind_of([] { parse_rational("1/0"); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { parse_rational("abc"); }) == ErrorKind::ParseError);
  }

  TEST_CASE("hand-computed rank, determinant, inverse") {
    Matrix m = mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}});
    CHECK(rank(m) == 2);
    CHECK(determinant(m) == 0);
    CHECK_FALSE(inverse(m).has_value());
    Matrix a = mat({{2, 1}, {1, 1}});
    CHECK(determinant(a) == 1);
    CHECK(*inverse(a) == mat({{1, -1}, {-1, 2}}));
    CHECK(nullspace(m).cols() == 1);
    CHECK((m * nullspace(m)).is_zero());
  }

  TEST_CASE("determinant and rank agree with Leibniz and minors") {
    Rng rng(11);
    for (int t = 0; t < 60; ++t) {
      const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
      Matrix m = random_matrix(rng, r, c, 3, t % 3);
      CHECK(rank(m) == minor_rank(m));
      if (r == c) CHECK(determinant(m) == leibniz(m));
    }
  }

  TEST_CASE("nullspace, solve and inverse postconditions") {
    Rng rng(12);
    for (int t = 0; t < 60; ++t) {
      const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
      Matrix m = random_matrix(rng, r, c, 4, t % 2 ? 2 : 0);
      Matrix k = nullspace(m);
      CHECK(k.cols() == c - rank(m));
      CHECK(rank(k) == k.cols());
      if (k.cols()) CHECK((m * k).is_zero());
      Matrix x = random_matrix(rng, c, 2, 4);
      Matrix b = m * x;
      auto sol = solve(m, b);
      REQUIRE(sol.has_value());
      CHECK(m * *sol == b);
      if (r == c && determinant(m) != 0) CHECK(m * *inverse(m) == Matrix::identity(r));
      CHECK(column_space(m).cols() == rank(m));
    }
  }

  TEST_CASE("inconsistent system") {
    Matrix a = mat({{1, 1}, {1, 1}});
    Matrix b = mat({{1}, {2}});
    CHECK_FALSE(solve(a, b).has_value());
  }

  TEST_CASE("sparse elimination matches dense rank") {
    Rng rng(13);
    for (int t = 0; t < 40; ++t) {
      Matrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 2, 3);
      auto e = sparse_rref(to_sparse_rows(m), m.cols());
      CHECK(e.rows.size() == rank(m));
      for (const auto& row : e.rows) {
        REQUIRE_FALSE(row.empty());
      }
      CHECK(sparse_nullspace(to_sparse_rows(m), m.cols()).size() == m.cols() - rank(m));
    }
  }

  TEST_CASE("complement columns complete a basis") {
    Matrix sub = mat({{1, 0}, {1, 0}, {0, 1}, {0, 1}});
    Matrix comp = complement_columns(sub);
    CHECK(comp.cols() == 2);
    CHECK(rank(hstack(sub, comp)) == 4);
  }

  TEST_CASE("characteristic polynomial against det(xI - M)") {
    Rng rng(14);
    for (int t = 0; t < 20; ++t) {
      const std::size_t n = 1 + rng() % 4;
      Matrix m = random_matrix(rng, n, n, 3);
      auto p = charpoly(m);
      REQUIRE(p.size() == n + 1);
      CHECK(p.back() == 1);
      for (int x = -2; x <= 2; ++x) {
        Matrix s = Matrix::identity(n);
        s *= Rational(x);
        CHECK(eval_poly(p, Rational(x)) == leibniz(s - m));
      }
    }
  }

  TEST_CASE("rational roots") {
    // (x - 1/2)(x + 3)(x^2 + 1)
    std::vector<Rational> p{Rational(-3, 2), Rational(5, 2), Rational(-1, 2), Rational(5, 2), Rational(1)};
    auto roots = rational_roots(p, Integer(1000000));
    std::sort(roots.begin(), roots.end());
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -3);
    CHECK(roots[1] == Rational(1, 2));
  }

  TEST_CASE("simplest rational in an interval, brute force") {
    Rng rng(15);
    for (int t = 0; t < 80; ++t) {
      Rational lo(draw_int(rng, 40), 1 + rng() % 12);
      lo.canonicalize();
      Rational step(1 + rng() % 5, 1 + rng() % 40);
      step.canonicalize();
      Rational hi = lo + step;
      Rational s = simplest_between(lo, hi);
      CHECK(s >= lo);
      CHECK(s <= hi);
      // no smaller denominator fits
      for (long q = 1; q < s.get_den().get_si(); ++q) {
        mpz_class p = lo.get_num() * q;
        mpz_class ceil_p;
        mpz_cdiv_q(ceil_p.get_mpz_t(), p.get_mpz_t(), lo.get_den().get_mpz_t());
        Rational f(ceil_p, q);
        f.canonicalize();
        CHECK(f > hi);
      }
    }
  }

  TEST_CASE("primitive integer vectors") {
    auto v = primitive_integer({Rational(-1, 2), Rational(1, 3), Rational(0)});
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 3);
    CHECK(v[1] == -2);
    CHECK(v[2] == 0);
  }

  TEST_CASE("block constructions") {
    Matrix a = mat({{1, 2}});
    Matrix b = mat({{3}});
    Matrix d = block_diagonal({a, b});
    CHECK(d == mat({{1, 2, 0}, {0, 0, 3}}));
    CHECK(vstack(a, mat({{5, 6}})) == mat({{1, 2}, {5, 6}}));
    CHECK(d.transpose().transpose() == d);
    CHECK(mat({{1, 2}, {3, 4}}).trace() == 5);
  }
}
