#pragma once

// Gluing two bound quiver algebras along a sink of the first and a source of the second.

#include <string>
#include <vector>

#include "bricklab/ar.hpp"

namespace bricklab {

enum class Side { Left, Right };

struct GluedAlgebra {
  AlgebraPtr left;
  AlgebraPtr right;
  AlgebraPtr algebra;
  std::size_t node = 0;                 // the identified vertex "v"
  std::vector<std::size_t> left_vertex;   // left vertex -> glued vertex
  std::vector<std::size_t> right_vertex;  // right vertex -> glued vertex
  std::vector<std::size_t> left_arrow;
  std::vector<std::size_t> right_arrow;
};

/// Vertices "L.<name>", "v", "R.<name>"; arrows prefixed the same way. Throws NotASink, NotASource.
GluedAlgebra glue(const AlgebraPtr& left, std::string_view sink, const AlgebraPtr& right, std::string_view source);

enum class SupportSide { Empty, LeftOnly, RightOnly, NodeOnly, Mixed };
std::string support_side_name(SupportSide s);

/// The node counts for both sides.
SupportSide support_side(const Representation& M, const GluedAlgebra& g);

Representation transfer(const Representation& M, const GluedAlgebra& g, Side side);
GVector transfer(const GVector& v, const GluedAlgebra& g, Side side);

/// Brick and tau-rigidity before and after transfer.
struct TransferCheck {
  bool brick_before = false;
  bool brick_after = false;
  bool tau_rigid_before = false;
  bool tau_rigid_after = false;
  [[nodiscard]] bool consistent() const {
    return brick_before == brick_after && tau_rigid_before == tau_rigid_after;
  }
};
TransferCheck transfer_check(const Representation& M, const GluedAlgebra& g, Side side);

}  // namespace bricklab
