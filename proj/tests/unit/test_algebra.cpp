#include <map>

#include "helpers.hpp"

using namespace testing;

namespace {

// Path count of a monomial algebra: walks avoiding every relation as a contiguous subpath.
IntMatrix monomial_cartan(const AlgebraPtr& A, std::size_t max_len) {
  const auto& Q = A->quiver();
  std::vector<std::vector<std::size_t>> forbidden;
  for (const auto& r : A->relations()) {
    REQUIRE(r.size() == 1);
    forbidden.push_back(r[0].path);
  }
  const std::size_t n = Q.vertices.size();
  IntMatrix C(n, std::vector<std::int64_t>(n, 0));
  std::vector<std::vector<std::size_t>> layer;
  for (std::size_t v = 0; v < n; ++v) C[v][v] += 1;
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) layer.push_back({a});
  for (std::size_t len = 1; len <= max_len && !layer.empty(); ++len) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& p : layer) {
      bool dead = false;
      for (const auto& f : forbidden)
        if (p.size() >= f.size() && std::equal(f.begin(), f.end(), p.end() - f.size())) dead = true;
      if (dead) continue;
      C[Q.arrows[p.back()].to][Q.arrows[p.front()].from] += 1;
      for (std::size_t a = 0; a < Q.arrows.size(); ++a)
        if (Q.arrows[a].from == Q.arrows[p.back()].to) {
          auto q = p;
          q.push_back(a);
          next.push_back(q);
        }
    }
    layer = std::move(next);
  }
  REQUIRE(layer.empty());
  return C;
}

std::int64_t total(const IntMatrix& C) {
  std::int64_t s = 0;
  for (const auto& r : C)
    for (auto x : r) s += x;
  return s;
}

SparseVec random_element(const AlgebraPtr& A, Rng& rng) {
  SparseVec x;
  for (std::size_t k = 0; k < A->dim(); ++k) {
    auto c = draw_int(rng, 2);
    if (c) x.emplace_back(k, Rational(c));
  }
  return x;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("cartan_by_path_count") {
    for (const char* name : {"point", "a2", "kronecker", "two_cycle_I", "two_cycle_J", "string_band", "localx2",
                             "gentle_b"}) {
      CAPTURE(name);
      auto A = bundled_algebra(name);
      auto C = monomial_cartan(A, 10);
      CHECK(A->cartan() == C);
      CHECK(static_cast<std::int64_t>(A->dim()) == total(C));
    }
    CHECK(bundled_algebra("kronecker")->cartan() == IntMatrix{{1, 0}, {2, 1}});
  }

  TEST_CASE("linear quivers have n(n+1)/2 paths") {
    for (int n = 1; n <= 6; ++n) CHECK(linear_an(n)->dim() == static_cast<std::size_t>(n * (n + 1) / 2));
  }

  TEST_CASE("preprojective_dimension") {
    // dim of the preprojective algebra of A_n is n(n+1)(n+2)/6
    for (int n = 2; n <= 5; ++n) CHECK(preprojective(n)->dim() == static_cast<std::size_t>(n * (n + 1) * (n + 2) / 6));
    auto pi = bundled_algebra("preprojective_a5");
    CHECK(pi->dim() == 35);
    CHECK(pi->num_arrows() == 8);
    // symmetric Cartan matrix: min(i, j, n+1-i, n+1-j)
    auto C = pi->cartan();
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 5; ++j) CHECK(C[i - 1][j - 1] == std::min({i, j, 6 - i, 6 - j}));
  }

  TEST_CASE("multiplication is associative and unital") {
    Rng rng(21);
    for (const char* name : {"preprojective_a5", "gentle_b", "two_cycle_J", "glued_example"}) {
      auto A = bundled_algebra(name);
      SparseVec one;
      for (std::size_t v = 0; v < A->num_vertices(); ++v) one.emplace_back(A->idempotent(v), Rational(1));
      std::sort(one.begin(), one.end());
      for (int t = 0; t < 10; ++t) {
        auto x = random_element(A, rng), y = random_element(A, rng), z = random_element(A, rng);
        CHECK(A->multiply(A->multiply(x, y), z) == A->multiply(x, A->multiply(y, z)));
        CHECK(A->multiply(one, x) == x);
        CHECK(A->multiply(x, one) == x);
      }
    }
  }

  TEST_CASE("commutativity relation is applied") {
    auto pi = preprojective(3);
    // a1 b1 = 0 and a2 b2 = b1 a1 at vertex 2
    auto lhs = pi->normal_form(1, {pi->quiver().arrow_index("a2"), pi->quiver().arrow_index("b2")});
    auto rhs = pi->normal_form(1, {pi->quiver().arrow_index("b1"), pi->quiver().arrow_index("a1")});
    CHECK(lhs == rhs);
    CHECK_FALSE(lhs.empty());
    CHECK(pi->normal_form(0, {pi->quiver().arrow_index("a1"), pi->quiver().arrow_index("b1")}).empty());
  }

  TEST_CASE("opposite algebra transposes the Cartan matrix") {
    for (const char* name : {"kronecker", "string_band", "gentle_b", "preprojective_a5"}) {
      auto A = bundled_algebra(name);
      auto op = A->opposite();
      CHECK(op->dim() == A->dim());
      auto C = A->cartan(), D = op->cartan();
      for (std::size_t i = 0; i < C.size(); ++i)
        for (std::size_t j = 0; j < C.size(); ++j) CHECK(C[i][j] == D[j][i]);
    }
  }

  TEST_CASE("quotients") {
    auto S = bundled_algebra("string_band");
    auto same = quotient_algebra(*S, make_ideal(*S, {}));
    CHECK(same->dim() == S->dim());
    CHECK(same->cartan() == S->cartan());

    auto K = quotient_algebra(*S, make_ideal(*S, {std::size_t{2}}));
    CHECK(K->dim() == 4);
    CHECK(K->num_vertices() == 2);
    CHECK(K->cartan() == bundled_algebra("kronecker")->cartan());

    auto J = bundled_algebra("two_cycle_J");
    const auto& Q = J->quiver();
    RelationElement ab{{Rational(1), {Q.arrow_index("alpha"), Q.arrow_index("beta")}}};
    RelationElement ba{{Rational(1), {Q.arrow_index("beta"), Q.arrow_index("alpha")}}};
    auto I = quotient_algebra(*J, make_ideal(*J, {ab, ba}));
    CHECK(I->dim() == 4);
    CHECK(I->cartan() == bundled_algebra("two_cycle_I")->cartan());

    CHECK(kind_of([&] { quotient_algebra(*S, make_ideal(*S, {std::size_t{0}, std::size_t{1}, std::size_t{2}})); }) ==
          ErrorKind::ImproperIdeal);
  }

  TEST_CASE("ideal membership") {
    auto S = bundled_algebra("string_band");
    auto J = make_ideal(*S, {std::size_t{2}});
    CHECK(ideal_contains(J, SparseVec{{S->idempotent(2), Rational(1)}}));
    CHECK(ideal_contains(J, SparseVec{{S->arrow_element(S->quiver().arrow_index("b")), Rational(3)}}));
    CHECK_FALSE(ideal_contains(J, SparseVec{{S->idempotent(0), Rational(1)}}));
    CHECK(J.dim() == 2);
  }

  TEST_CASE("global dimension") {
    auto gl = [](const char* name) { return global_dimension(bundled_algebra(name)); };
    CHECK(gl("point") == std::optional<std::size_t>(0));
    CHECK(gl("a2") == std::optional<std::size_t>(1));
    CHECK(gl("kronecker") == std::optional<std::size_t>(1));
    CHECK(gl("string_band") == std::optional<std::size_t>(2));
    CHECK(gl("gentle_b") == std::optional<std::size_t>(2));
    CHECK(gl("glued_example") == std::optional<std::size_t>(3));
    CHECK_FALSE(gl("localx2").has_value());
    CHECK_FALSE(gl("two_cycle_I").has_value());
    CHECK_FALSE(gl("preprojective_a5").has_value());
    CHECK(global_dimension(linear_an(5)) == std::optional<std::size_t>(1));
  }

  TEST_CASE("construction errors") {
    CHECK(kind_of([] { algebra_from_json(quiver_json(2, {{"a", 1, 2}}, Json::array({Json::array({rel({"a"})})}))); }) ==
          ErrorKind::NonAdmissibleRelation);
    CHECK(kind_of([] { algebra_from_json(quiver_json(1, {{"x", 1, 1}})); }) == ErrorKind::RadicalBoundExceeded);
    CHECK(kind_of([] { algebra_from_json(quiver_json(2, {{"a", 1, 2}, {"a", 2, 1}})); }) == ErrorKind::InvalidQuiver);
    CHECK(kind_of([] {
            algebra_from_json(quiver_json(2, {{"a", 1, 2}, {"b", 1, 2}}, Json::array({Json::array({rel({"a", "b"})})})));
          }) == ErrorKind::InvalidQuiver);
    // x^2 = x^3 forces x^2 = x^2 * x^k for all k, so x^2 = 0 once long paths vanish
    auto T = algebra_from_json(
        quiver_json(1, {{"x", 1, 1}}, Json::array({Json::array({rel({"x", "x"}), rel({"x", "x", "x"}, "-1")})})));
    CHECK(T->dim() == 2);
  }

  TEST_CASE("basis names use traversal order") {
    auto A = bundled_algebra("gentle_b");
    std::map<std::string, int> names;
    for (std::size_t k = 0; k < A->dim(); ++k) names[A->path_name(k)]++;
    CHECK(names.size() == A->dim());
  }
}
