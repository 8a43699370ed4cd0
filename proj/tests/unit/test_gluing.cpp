#include "helpers.hpp"

using namespace testing;

TEST_SUITE("gluing") {
  TEST_CASE("dimension_formula") {
    struct Case {
      AlgebraPtr left;
      std::string sink;
      AlgebraPtr right;
      std::string source;
    };
    std::vector<Case> cases{{bundled_algebra("a2"), "2", bundled_algebra("a2"), "1"},
                            {bundled_algebra("kronecker"), "2", bundled_algebra("a2"), "1"},
                            {linear_an(3), "3", bundled_algebra("gentle_b"), "y1"},
                            {bundled_algebra("kronecker"), "2", bundled_algebra("gentle_b"), "y1"},
                            {bundled_algebra("gentle_b"), "y4", bundled_algebra("kronecker"), "1"}};
    for (const auto& c : cases) {
      auto g = glue(c.left, c.sink, c.right, c.source);
      CHECK(g.algebra->dim() + 1 == c.left->dim() + c.right->dim());
      CHECK(g.algebra->num_vertices() + 1 == c.left->num_vertices() + c.right->num_vertices());
      CHECK(g.algebra->num_arrows() == c.left->num_arrows() + c.right->num_arrows());
    }
  }

  TEST_CASE("the worked example") {
    auto g = glued_example();
    CHECK(g.algebra->dim() == 11);
    CHECK(g.algebra->num_vertices() == 5);
    CHECK(global_dimension(g.algebra) == std::optional<std::size_t>(3));
    CHECK(g.algebra->quiver().vertices == std::vector<std::string>{"L.1", "v", "R.y2", "R.y3", "R.y4"});
    CHECK(g.algebra->quiver().vertices[g.node] == "v");
    CHECK(g.left_vertex[1] == g.node);
    CHECK(g.right_vertex[0] == g.node);
    CHECK(g.algebra->quiver().arrows[g.left_arrow[0]].name == "L.a");
    CHECK(g.algebra->quiver().arrows[g.right_arrow[0]].name == "R.b1");
    // paths through the node die: L.a then R.b1
    const auto& Q = g.algebra->quiver();
    CHECK(g.algebra->normal_form(0, {Q.arrow_index("L.a"), Q.arrow_index("R.b1")}).empty());
  }

  TEST_CASE("errors") {
    auto K = bundled_algebra("kronecker");
    auto A2 = bundled_algebra("a2");
    CHECK(kind_of([&] { glue(K, "1", A2, "1"); }) == ErrorKind::NotASink);
    CHECK(kind_of([&] { glue(K, "2", A2, "2"); }) == ErrorKind::NotASource);
    CHECK(kind_of([&] { glue(K, "7", A2, "1"); }) == ErrorKind::InvalidQuiver);
  }

  TEST_CASE("transfer of modules and g-vectors") {
    auto g = glued_example();
    auto K = g.left;
    auto B = g.right;
    auto M = kronecker_regular(K, 2);
    auto TM = transfer(M, g, Side::Left);
    CHECK(TM.dims() == std::vector<std::size_t>{1, 1, 0, 0, 0});
    CHECK(support_side(TM, g) == SupportSide::LeftOnly);
    CHECK(transfer(GVector{{1, -1}}, g, Side::Left) == GVector{{1, -1, 0, 0, 0}});
    CHECK(transfer(GVector{{1, 0, 0, -1}}, g, Side::Right) == GVector{{0, 1, 0, 0, -1}});
    auto S = transfer(simple(B, 0), g, Side::Right);
    CHECK(support_side(S, g) == SupportSide::NodeOnly);
    CHECK(support_side(Representation::zero(g.algebra), g) == SupportSide::Empty);
    CHECK(support_side(transfer(projective(B, 0), g, Side::Right), g) == SupportSide::RightOnly);
    CHECK(support_side_name(SupportSide::Mixed) == "Mixed");
  }

  TEST_CASE("brick and tau-rigidity transfer") {
    auto g = glued_example();
    std::vector<std::pair<Representation, Side>> ms;
    for (std::size_t j = 0; j < 2; ++j) {
      ms.emplace_back(projective(g.left, j), Side::Left);
      ms.emplace_back(simple(g.left, j), Side::Left);
    }
    ms.emplace_back(kronecker_regular(g.left, 3), Side::Left);
    for (std::size_t j = 0; j < 4; ++j) {
      ms.emplace_back(projective(g.right, j), Side::Right);
      ms.emplace_back(injective(g.right, j), Side::Right);
    }
    for (const auto& [M, side] : ms) {
      auto c = transfer_check(M, g, side);
      CHECK(c.consistent());
      CHECK(c.brick_before == is_brick(M));
    }
  }

  TEST_CASE("gldim of glued algebras against the factors") {
    auto A2 = bundled_algebra("a2");
    auto g = glue(A2, "2", A2, "1");
    // linear A3 with the length-2 path killed
    CHECK(g.algebra->dim() == 5);
    CHECK(global_dimension(g.algebra) == std::optional<std::size_t>(2));
  }
}
