#include "bricklab/gluing.hpp"

#include "bricklab/errors.hpp"

namespace bricklab {

GluedAlgebra glue(const AlgebraPtr& left, std::string_view sink, const AlgebraPtr& right, std::string_view source) {
  const Quiver& QL = left->quiver();
  const Quiver& QR = right->quiver();
  const std::size_t x = QL.vertex_index(sink);
  const std::size_t y = QR.vertex_index(source);
  for (const auto& a : QL.arrows)
    if (a.from == x) throw Error(ErrorKind::NotASink, "vertex " + std::string(sink) + " has an outgoing arrow");
  for (const auto& a : QR.arrows)
    if (a.to == y) throw Error(ErrorKind::NotASource, "vertex " + std::string(source) + " has an incoming arrow");

  GluedAlgebra g;
  g.left = left;
  g.right = right;
  Quiver Q;
  g.left_vertex.resize(QL.vertices.size());
  g.right_vertex.resize(QR.vertices.size());
  for (std::size_t i = 0; i < QL.vertices.size(); ++i) {
    if (i == x) continue;
    g.left_vertex[i] = Q.vertices.size();
    Q.vertices.push_back("L." + QL.vertices[i]);
  }
  g.node = Q.vertices.size();
  Q.vertices.push_back("v");
  g.left_vertex[x] = g.node;
  g.right_vertex[y] = g.node;
  for (std::size_t i = 0; i < QR.vertices.size(); ++i) {
    if (i == y) continue;
    g.right_vertex[i] = Q.vertices.size();
    Q.vertices.push_back("R." + QR.vertices[i]);
  }
  for (const auto& a : QL.arrows) {
    g.left_arrow.push_back(Q.arrows.size());
    Q.arrows.push_back({"L." + a.name, g.left_vertex[a.from], g.left_vertex[a.to]});
  }
  for (const auto& a : QR.arrows) {
    g.right_arrow.push_back(Q.arrows.size());
    Q.arrows.push_back({"R." + a.name, g.right_vertex[a.from], g.right_vertex[a.to]});
  }

  std::vector<RelationElement> rels;
  auto copy = [&](const std::vector<RelationElement>& src, const std::vector<std::size_t>& arrow_map) {
    for (const auto& r : src) {
      RelationElement e;
      for (const auto& t : r) {
        Term u{t.coeff, {}};
        for (auto a : t.path) u.path.push_back(arrow_map[a]);
        e.push_back(std::move(u));
      }
      rels.push_back(std::move(e));
    }
  };
  copy(left->relations(), g.left_arrow);
  copy(right->relations(), g.right_arrow);
  for (std::size_t a = 0; a < QL.arrows.size(); ++a) {
    if (QL.arrows[a].to != x) continue;
    for (std::size_t b = 0; b < QR.arrows.size(); ++b)
      if (QR.arrows[b].from == y) rels.push_back({Term{Rational(1), {g.left_arrow[a], g.right_arrow[b]}}});
  }
  g.algebra = Algebra::build(std::move(Q), std::move(rels), std::max(left->max_path_len(), right->max_path_len()));
  return g;
}

std::string support_side_name(SupportSide s) {
  switch (s) {
    case SupportSide::Empty: return "Empty";
    case SupportSide::LeftOnly: return "LeftOnly";
    case SupportSide::RightOnly: return "RightOnly";
    case SupportSide::NodeOnly: return "NodeOnly";
    case SupportSide::Mixed: return "Mixed";
  }
  return "?";
}

SupportSide support_side(const Representation& M, const GluedAlgebra& g) {
  bool left = false, right = false;
  for (std::size_t i = 0; i < g.left_vertex.size(); ++i)
    if (g.left_vertex[i] != g.node && M.dim(g.left_vertex[i]) != 0) left = true;
  for (std::size_t i = 0; i < g.right_vertex.size(); ++i)
    if (g.right_vertex[i] != g.node && M.dim(g.right_vertex[i]) != 0) right = true;
  if (left && right) return SupportSide::Mixed;
  if (left) return SupportSide::LeftOnly;
  if (right) return SupportSide::RightOnly;
  return M.dim(g.node) != 0 ? SupportSide::NodeOnly : SupportSide::Empty;
}

Representation transfer(const Representation& M, const GluedAlgebra& g, Side side) {
  const bool L = side == Side::Left;
  const auto& vmap = L ? g.left_vertex : g.right_vertex;
  const auto& amap = L ? g.left_arrow : g.right_arrow;
  require_same_algebra(M, Representation::zero(L ? g.left : g.right));
  const AlgebraPtr& Lam = g.algebra;
  std::vector<std::size_t> dims(Lam->num_vertices(), 0);
  for (std::size_t i = 0; i < vmap.size(); ++i) dims[vmap[i]] = M.dim(i);
  std::vector<Matrix> mats;
  for (const auto& a : Lam->quiver().arrows) mats.emplace_back(dims[a.to], dims[a.from]);
  for (std::size_t a = 0; a < amap.size(); ++a) mats[amap[a]] = M.mat(a);
  return Representation(Lam, std::move(dims), std::move(mats));
}

GVector transfer(const GVector& v, const GluedAlgebra& g, Side side) {
  const auto& vmap = side == Side::Left ? g.left_vertex : g.right_vertex;
  GVector out{std::vector<std::int64_t>(g.algebra->num_vertices(), 0)};
  for (std::size_t i = 0; i < vmap.size(); ++i) out.coords[vmap[i]] = v.coords[i];
  return out;
}

TransferCheck transfer_check(const Representation& M, const GluedAlgebra& g, Side side) {
  TransferCheck c;
  Representation T = transfer(M, g, side);
  c.brick_before = !M.is_zero() && is_brick(M);
  c.brick_after = !T.is_zero() && is_brick(T);
  c.tau_rigid_before = is_tau_rigid(M);
  c.tau_rigid_after = is_tau_rigid(T);
  return c;
}

}  // namespace bricklab
