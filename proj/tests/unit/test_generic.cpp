#include "helpers.hpp"

using namespace testing;

namespace {

Rational q_by_hand(const IntMatrix& C, const std::vector<Rational>& x) {
  Rational s = 0;
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = 0; j < C.size(); ++j) s += x[i] * Rational(C[i][j]) * x[j];
  return s;
}

std::vector<Rational> ray_sum(const SttPair& p) {
  std::vector<Rational> s(p.size(), Rational(0));
  for (const auto& r : p.rays())
    for (std::size_t i = 0; i < s.size(); ++i) s[i] += Rational(r.coords[i]);
  return s;
}

}  // namespace

TEST_SUITE("generic") {
  TEST_CASE("qform_expansion") {
    Rng rng(61);
    for (const char* name : {"a2", "kronecker", "gentle_b", "preprojective_a5", "glued_example"}) {
      auto A = bundled_algebra(name);
      auto q = qform(A);
      CHECK(q.cartan == A->cartan());
      for (int t = 0; t < 10; ++t) {
        auto v = random_g(rng, A->num_vertices(), 4);
        std::vector<Rational> x(v.coords.begin(), v.coords.end());
        CHECK(q.eval(v) == q_by_hand(q.cartan, x));
        Rational l1 = v.l1();
        CHECK(q.eval_normalized(v) == q.eval(v) / (l1 * l1));
      }
    }
    CHECK(qform(bundled_algebra("kronecker")).eval(GVector{{1, -1}}) == 0);
    CHECK(kind_of([] { (void)qform(bundled_algebra("a2")).eval_normalized(GVector{{0, 0}}); }) == ErrorKind::ZeroVector);
  }

  TEST_CASE("nullspace_oracle") {
    for (const char* name : {"a2", "kronecker", "string_band", "gentle_b", "two_cycle_I", "localx2"}) {
      auto A = bundled_algebra(name);
      auto q = qform(A);
      const std::size_t n = A->num_vertices();
      Matrix H(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) H(i, j) = Rational(q.symmetrized[i][j]);
      auto ns = hq_nullspace(A);
      CHECK(ns.size() == n - rank(H));
      for (const auto& v : ns) {
        for (std::size_t i = 0; i < n; ++i) {
          std::int64_t s = 0;
          for (std::size_t j = 0; j < n; ++j) s += q.symmetrized[i][j] * v.coords[j];
          CHECK(s == 0);
        }
      }
    }
    CHECK(hq_nullspace(bundled_algebra("kronecker")) == std::vector<GVector>{GVector{{1, -1}}});
  }

  TEST_CASE("kronecker_probe") {
    auto K = bundled_algebra("kronecker");
    auto snap = enumerate_fan(K, 50);
    auto p = tau_convergence_probe(K, snap);
    REQUIRE(p.infimum.has_value());
    CHECK(*p.infimum < Rational(1, 100));
    CHECK(*p.infimum > 0);
    auto q = qform(K);
    Rational m = p.sequence.front().second;
    for (std::size_t k = 0; k < p.sequence.size(); ++k) {
      const auto& [g, val] = p.sequence[k];
      CHECK(val == q.eval_normalized(g));
      if (k) CHECK(p.sequence[k - 1].first.l1() <= g.l1());
      m = std::min(m, val);
    }
    CHECK(m == *p.infimum);
    REQUIRE(p.limit_candidates.size() == 1);
    CHECK(p.limit_candidates[0] == std::vector<Rational>{Rational(1, 2), Rational(-1, 2)});
  }

  TEST_CASE("a2_probe") {
    auto A = bundled_algebra("a2");
    auto p = tau_convergence_probe(A, enumerate_fan(A));
    REQUIRE(p.infimum.has_value());
    CHECK(*p.infimum == Rational(1, 4));
    CHECK(p.limit_candidates.empty());
  }

  TEST_CASE("kronecker_candidates") {
    auto K = bundled_algebra("kronecker");
    auto c = outside_fan_candidates(K, enumerate_fan(K, 50));
    REQUIRE(c.size() == 1);
    CHECK(c[0].vector == GVector{{1, -1}});
    CHECK(c[0].q_value == 0);
    CHECK_FALSE(c[0].membership.found);
    CHECK(c[0].flagged());
    CHECK(c[0].sources.size() == 2);
    CHECK(source_name(CandidateSource::NullSpace) != source_name(CandidateSource::ConvergenceLimit));
  }

  TEST_CASE("localx2_candidates") {
    auto L = bundled_algebra("localx2");
    CHECK(outside_fan_candidates(L, enumerate_fan(L)).empty());
    auto A = bundled_algebra("a2");
    CHECK(outside_fan_candidates(A, enumerate_fan(A)).empty());
  }

  TEST_CASE("chamber_ar_positivity") {
    std::vector<std::pair<AlgebraPtr, std::size_t>> cases{{bundled_algebra("a2"), kDefaultMaxSteps},
                                                          {bundled_algebra("kronecker"), 50},
                                                          {linear_an(4), kDefaultMaxSteps},
                                                          {bundled_algebra("gentle_b"), kDefaultMaxSteps},
                                                          {bundled_algebra("two_cycle_J"), kDefaultMaxSteps},
                                                          {preprojective(3), kDefaultMaxSteps}};
    for (const auto& [A, steps] : cases) {
      auto snap = enumerate_fan(A, steps);
      auto viol = chamber_positivity_check(A, snap);
      auto q = qform(A);
      for (const auto& v : viol) {
        CHECK_FALSE(v.faithful_tilting);
        CHECK(v.q_value <= 0);
        CHECK(v.q_value == q.eval(ray_sum(snap.cones[v.cone])));
      }
      for (const auto& c : snap.cones)
        if (is_faithful_tilting_pd1(c)) CHECK(q_by_hand(q.cartan, ray_sum(c)) > 0);
    }
    // the Kronecker chamber spanned by (0,1) and (-1,0) has q = 0 at its ray sum
    auto K = bundled_algebra("kronecker");
    auto snap = enumerate_fan(K, 50);
    auto viol = chamber_positivity_check(K, snap);
    REQUIRE(viol.size() == 1);
    CHECK(viol[0].q_value == 0);
    CHECK(snap.cones[viol[0].cone].rays() == std::vector<GVector>{GVector{{-1, 0}}, GVector{{0, 1}}});
  }

  TEST_CASE("faithful tilting detection") {
    auto A = bundled_algebra("a2");
    CHECK(is_faithful_tilting_pd1(initial_pair(A)));
    auto K = bundled_algebra("kronecker");
    // (P2, P1 in the P-part) is not faithful
    auto p = make_pair(K, {projective(K, 1)}, {0});
    CHECK_FALSE(is_faithful_tilting_pd1(p));
  }

  TEST_CASE("sampled cokernels") {
    auto K = bundled_algebra("kronecker");
    auto M = sample_cokernel(K, GVector{{1, -1}}, 0);
    CHECK(M.dims() == std::vector<std::size_t>{1, 1});
    CHECK(g_vector(M) == GVector{{1, -1}});
    CHECK(is_brick(M));
    auto A = bundled_algebra("a2");
    CHECK(isomorphic(sample_cokernel(A, GVector{{1, 0}}, 3), projective(A, 0)));
    CHECK(isomorphic(sample_cokernel(A, GVector{{1, -1}}, 3), simple(A, 0)));
  }

  TEST_CASE("canonical decompositions") {
    auto K = bundled_algebra("kronecker");
    auto d = canonical_decomposition_sample(K, GVector{{2, -2}}, 3, 0);
    CHECK(d.summands == std::vector<GVector>{GVector{{1, -1}}, GVector{{1, -1}}});
    CHECK(d.residual.is_zero());
    auto e = canonical_decomposition_sample(K, GVector{{1, 1}}, 3, 0);
    CHECK(e.summands == std::vector<GVector>{GVector{{0, 1}}, GVector{{1, 0}}});
    auto f = canonical_decomposition_sample(K, GVector{{3, -2}}, 3, 0);
    CHECK(f.summands == std::vector<GVector>{GVector{{3, -2}}});
  }

  TEST_CASE("generic invariants") {
    auto K = bundled_algebra("kronecker");
    auto r = generic_invariants(K, GVector{{1, -1}}, 5, 0);
    CHECK(r.d_vector == std::vector<std::size_t>{1, 1});
    CHECK(r.h_min == 1);
    CHECK(r.e_min == 0);
    CHECK(r.end_min == 1);
    CHECK(r.e_min <= r.h_min);
    auto a = generic_invariants(bundled_algebra("a2"), GVector{{1, 0}}, 3, 0);
    CHECK(a.h_min == 0);
    CHECK(a.e_min == 0);
    CHECK(a.d_vector == std::vector<std::size_t>{1, 1});
  }

  TEST_CASE("faithful sums") {
    auto K = bundled_algebra("kronecker");
    auto fk = build_faithful_sum(K, GVector{{1, -1}}, 4, 0);
    CHECK(fk.faithful);
    CHECK(joint_annihilator(fk.terms).dim() == 0);
    auto S = bundled_algebra("string_band");
    auto fs = build_faithful_sum(S, GVector{{1, -1, 0}}, 4, 0);
    CHECK_FALSE(fs.faithful);
    CHECK(ideal_contains(fs.annihilator, SparseVec{{S->idempotent(2), Rational(1)}}));
  }

  TEST_CASE("kronecker_regular_orthogonal") {
    auto K = bundled_algebra("kronecker");
    std::vector<Representation> B;
    for (std::uint64_t s = 0; s < 3; ++s) {
      auto Z = sample_cokernel(K, GVector{{1, -1}}, s);
      auto r = minimal_image_brick(Z, s);
      CHECK(is_brick(r.brick));
      CHECK_FALSE(r.map.is_zero());
      B.push_back(r.brick);
    }
    for (std::size_t a = 0; a < 3; ++a)
      for (std::size_t b = 0; b < 3; ++b) CHECK(hom_dim(B[a], B[b]) == (a == b ? 1u : 0u));
    CHECK(kind_of([&] { minimal_image_brick(projective(K, 0)); }) == ErrorKind::TauRigidInput);
  }

  TEST_CASE("band image bricks") {
    auto S = bundled_algebra("string_band");
    auto r = minimal_image_brick(sample_cokernel(S, GVector{{1, -1, 0}}, 4));
    CHECK(r.brick.dims() == std::vector<std::size_t>{1, 1, 0});
    CHECK(proj_dimension(r.brick) == std::optional<std::size_t>(2));
  }

  TEST_CASE("end dimension survey") {
    auto A = preprojective(3);
    auto rows = end_dimension_survey(enumerate_fan(A));
    CHECK(rows.size() == 11);
    for (const auto& r : rows) {
      CHECK(r.dim_end >= 1);
      CHECK(r.dim_end <= r.dim_module * r.dim_module);
    }
  }
}
