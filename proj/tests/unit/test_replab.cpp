#include "helpers.hpp"

using namespace testing;

namespace {

Morphism random_morphism(const Representation& M, const Representation& N, Rng& rng) {
  auto basis = hom_space(M, N);
  std::vector<Rational> c;
  for (std::size_t i = 0; i < basis.size(); ++i) c.emplace_back(draw_int(rng, 3));
  if (basis.empty()) return zero_morphism(M, N);
  return combination(basis, c);
}

std::size_t block_rank(const Morphism& f) {
  std::size_t r = 0;
  for (const auto& b : f.blocks) r += rank(b);
  return r;
}

}  // namespace

TEST_SUITE("replab") {
  TEST_CASE("relations are checked on construction") {
    auto S = bundled_algebra("string_band");
    // a1 = 1, b = 1 violates a1 b = 0
    CHECK(kind_of([&] { rep(S, {1, 1, 1}, {mat({{1}}), mat({{0}}), mat({{1}})}); }) ==
          ErrorKind::InvalidRepresentation);
    CHECK(kind_of([&] { rep(S, {1, 1, 1}, {mat({{1, 0}}), mat({{0}}), mat({{0}})}); }) ==
          ErrorKind::InvalidRepresentation);
  }

  TEST_CASE("projectives, injectives and simples have Cartan dimensions") {
    for (const char* name : {"kronecker", "gentle_b", "preprojective_a5", "two_cycle_J", "glued_example"}) {
      auto A = bundled_algebra(name);
      auto C = A->cartan();
      for (std::size_t j = 0; j < A->num_vertices(); ++j) {
        auto P = projective(A, j);
        auto I = injective(A, j);
        for (std::size_t i = 0; i < A->num_vertices(); ++i) {
          CHECK(static_cast<std::int64_t>(P.dim(i)) == C[i][j]);
          CHECK(static_cast<std::int64_t>(I.dim(i)) == C[j][i]);
        }
        CHECK(simple(A, j).total_dim() == 1);
      }
    }
  }

  TEST_CASE("Hom from projectives and into injectives count vertex dimensions") {
    Rng rng(31);
    for (const char* name : {"kronecker", "string_band", "gentle_b", "two_cycle_J", "preprojective_a5"}) {
      auto A = bundled_algebra(name);
      for (int t = 0; t < 4; ++t) {
        auto M = sample_cokernel(A, random_g(rng, A->num_vertices()), rng(), 5);
        for (std::size_t j = 0; j < A->num_vertices(); ++j) {
          CHECK(hom_dim(projective(A, j), M) == M.dim(j));
          CHECK(hom_dim(M, injective(A, j)) == M.dim(j));
        }
      }
    }
  }

  TEST_CASE("Hom is additive and its basis consists of morphisms") {
    Rng rng(32);
    auto A = bundled_algebra("gentle_b");
    for (int t = 0; t < 8; ++t) {
      auto M = sample_cokernel(A, random_g(rng, 4), rng(), 5);
      auto N1 = sample_cokernel(A, random_g(rng, 4), rng(), 5);
      auto N2 = sample_cokernel(A, random_g(rng, 4), rng(), 5);
      CHECK(hom_dim(M, direct_sum(N1, N2)) == hom_dim(M, N1) + hom_dim(M, N2));
      CHECK(hom_dim(direct_sum(N1, N2), M) == hom_dim(N1, M) + hom_dim(N2, M));
      for (const auto& f : hom_space(M, N1)) CHECK(is_morphism(M, N1, f));
    }
  }

  TEST_CASE("endomorphism algebras") {
    auto A2 = bundled_algebra("a2");
    auto S1 = simple(A2, 0);
    auto E = end_algebra(direct_sum(S1, S1));
    CHECK(E.basis.size() == 4);
    CHECK(E.radical_basis.empty());
    CHECK(E.top_dimension == 4);
    CHECK(is_brick(S1));
    CHECK(kind_of([&] { end_algebra(Representation::zero(A2)); }) == ErrorKind::ZeroModule);

    auto K = bundled_algebra("kronecker");
    auto J = rep(K, {2, 2}, {Matrix::identity(2), mat({{3, 1}, {0, 3}})});
    auto EJ = end_algebra(J);
    CHECK(EJ.basis.size() == 2);
    CHECK(EJ.radical_basis.size() == 1);
    CHECK(is_indecomposable(J));
    CHECK_FALSE(is_brick(J));
  }

  TEST_CASE("band_family_orthogonal") {
    auto S = bundled_algebra("string_band");
    std::vector<Rational> ls{Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(3)};
    for (std::size_t a = 0; a < ls.size(); ++a)
      for (std::size_t b = 0; b < ls.size(); ++b)
        CHECK(hom_dim(band_module(S, ls[a]), band_module(S, ls[b])) == (a == b ? 1u : 0u));
  }

  TEST_CASE("kernel, image and cokernel satisfy rank-nullity") {
    Rng rng(33);
    for (const char* name : {"kronecker", "gentle_b", "preprojective_a5"}) {
      auto A = bundled_algebra(name);
      const std::size_t n = A->num_vertices();
      for (int t = 0; t < 6; ++t) {
        auto M = sample_cokernel(A, random_g(rng, n), rng(), 4);
        auto N = sample_cokernel(A, random_g(rng, n), rng(), 4);
        auto f = random_morphism(M, N, rng);
        auto K = kernel(M, f);
        auto I = image(M, N, f);
        auto Cq = cokernel(N, f);
        const std::size_t r = block_rank(f);
        CHECK(K.module.total_dim() + r == M.total_dim());
        CHECK(I.module.total_dim() == r);
        CHECK(Cq.module.total_dim() + r == N.total_dim());
        CHECK(is_morphism(K.module, M, K.inclusion));
        CHECK(is_morphism(N, Cq.module, Cq.projection));
        CHECK(compose(f, K.inclusion).is_zero());
        CHECK(compose(Cq.projection, f).is_zero());
        // f = inclusion o surjection
        auto g = compose(I.inclusion, I.surjection);
        for (std::size_t v = 0; v < n; ++v) CHECK(g.blocks[v] == f.blocks[v]);
      }
    }
  }

  TEST_CASE("trivial images and quotients") {
    auto K = bundled_algebra("kronecker");
    auto M = kronecker_regular(K, Rational(2));
    auto I = image(M, M, identity_morphism(M));
    CHECK(isomorphic(I.module, M));
    std::vector<Matrix> zero;
    for (std::size_t v = 0; v < 2; ++v) zero.emplace_back(M.dim(v), 0);
    CHECK(isomorphic(quotient_module(M, zero).module, M));
  }

  TEST_CASE("P1 over A2 modulo its socle is S1") {
    auto A = bundled_algebra("a2");
    auto P1 = projective(A, 0);
    auto Q = quotient_module(P1, socle_subspace(P1));
    CHECK(Q.module.dims() == std::vector<std::size_t>{1, 0});
    CHECK(top_dims(P1) == std::vector<std::size_t>{1, 0});
  }

  TEST_CASE("generated submodules are closed") {
    auto A = bundled_algebra("gentle_b");
    auto P = projective(A, 0);
    std::vector<Matrix> gens;
    for (std::size_t v = 0; v < 4; ++v) gens.emplace_back(P.dim(v), 0);
    gens[1] = Matrix(1, 1);
    gens[1](0, 0) = 1;
    auto sub = submodule_generated(P, gens);
    CHECK(sub.module.dims() == std::vector<std::size_t>{0, 1, 0, 0});
    CHECK(is_morphism(sub.module, P, sub.inclusion));
    std::vector<Matrix> bad(4);
    for (std::size_t v = 0; v < 4; ++v) bad[v] = Matrix(P.dim(v), 0);
    bad[0] = Matrix(1, 1);
    bad[0](0, 0) = 1;
    CHECK(kind_of([&] { submodule_from_basis(P, bad); }) == ErrorKind::NotSubrepresentation);
  }

  TEST_CASE("decompose") {
    auto A2 = bundled_algebra("a2");
    auto S1 = simple(A2, 0);
    auto d = decompose(direct_sum(S1, S1));
    REQUIRE(d.size() == 1);
    CHECK(d[0].multiplicity == 2);
    CHECK(d[0].module.dims() == S1.dims());

    auto K = bundled_algebra("kronecker");
    auto d2 = decompose(regular_module(K));
    REQUIRE(d2.size() == 2);
    CHECK(d2[0].multiplicity == 1);
    CHECK(d2[1].multiplicity == 1);

    // irrational eigenvalue: indecomposable over Q, splits over the closure
    auto irr = rep(K, {2, 2}, {Matrix::identity(2), mat({{0, 2}, {1, 0}})});
    auto d3 = decompose(irr);
    REQUIRE(d3.size() == 1);
    CHECK(d3[0].geometric_split_warning);
    CHECK(end_algebra(irr).top_dimension == 2);
  }

  TEST_CASE("isomorphism certificates") {
    Rng rng(34);
    auto A = bundled_algebra("preprojective_a5");
    auto M = preprojective_example_module(A);
    auto N = twist(M, rng);
    auto r = isomorphism(M, N);
    REQUIRE(r.status == IsoStatus::Isomorphic);
    REQUIRE(r.certificate.has_value());
    CHECK(is_morphism(M, N, *r.certificate));
    CHECK(r.certificate->is_invertible());
    CHECK_FALSE(isomorphic(M, simple(A, 0)));
  }

  TEST_CASE("annihilators") {
    auto A2 = bundled_algebra("a2");
    auto J = annihilator(simple(A2, 1));
    CHECK(J.dim() == 2);
    CHECK(ideal_contains(J, SparseVec{{A2->idempotent(0), Rational(1)}}));
    CHECK(ideal_contains(J, SparseVec{{A2->arrow_element(0), Rational(1)}}));
    CHECK_FALSE(ideal_contains(J, SparseVec{{A2->idempotent(1), Rational(1)}}));
    for (const char* name : {"kronecker", "gentle_b", "two_cycle_J"}) {
      auto A = bundled_algebra(name);
      CHECK(is_faithful(regular_module(A)));
      // simple S_j is killed by everything except e_j
      CHECK(annihilator(simple(A, 0)).dim() == A->dim() - 1);
    }
  }

  TEST_CASE("double dual returns the module") {
    Rng rng(35);
    auto A = bundled_algebra("gentle_b");
    for (int t = 0; t < 5; ++t) {
      auto M = sample_cokernel(A, random_g(rng, 4), rng(), 5);
      auto D = dual(M, A->opposite());
      CHECK(D.dims() == M.dims());
      CHECK(hom_dim(D, D) == hom_dim(M, M));
      CHECK(isomorphic(dual(D, A), M));
    }
  }

  TEST_CASE("sampling is deterministic") {
    auto A = bundled_algebra("gentle_b");
    auto M = sample_cokernel(A, GVector{{1, 0, -1, 0}}, 9, 10);
    auto N = sample_cokernel(A, GVector{{1, 0, -1, 0}}, 9, 10);
    CHECK(M.mats() == N.mats());
  }
}
