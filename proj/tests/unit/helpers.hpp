#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "bricklab/catalog.hpp"
#include "bricklab/decompose.hpp"
#include "bricklab/errors.hpp"

namespace testing {

using namespace bricklab;

inline Json rel(std::vector<std::string> path, const std::string& coeff = "1") {
  return {{"coeff", coeff}, {"path", path}};
}

inline Json quiver_json(int n, const std::vector<std::tuple<std::string, int, int>>& arrows, Json relations = Json::array()) {
  Json j;
  j["vertices"] = Json::array();
  for (int i = 1; i <= n; ++i) j["vertices"].push_back(std::to_string(i));
  j["arrows"] = Json::array();
  for (const auto& [name, from, to] : arrows)
    j["arrows"].push_back({{"name", name}, {"from", std::to_string(from)}, {"to", std::to_string(to)}});
  j["relations"] = relations;
  return j;
}

// 1 -> 2 -> ... -> n
inline AlgebraPtr linear_an(int n) {
  std::vector<std::tuple<std::string, int, int>> arrows;
  for (int i = 1; i < n; ++i) arrows.emplace_back("a" + std::to_string(i), i, i + 1);
  return algebra_from_json(quiver_json(n, arrows));
}

// preprojective algebra of A_n, n >= 2
inline AlgebraPtr preprojective(int n) {
  std::vector<std::tuple<std::string, int, int>> arrows;
  for (int i = 1; i < n; ++i) {
    arrows.emplace_back("a" + std::to_string(i), i, i + 1);
    arrows.emplace_back("b" + std::to_string(i), i + 1, i);
  }
  Json rels = Json::array();
  rels.push_back(Json::array({rel({"a1", "b1"})}));
  for (int i = 2; i < n; ++i) {
    auto s = std::to_string(i), p = std::to_string(i - 1);
    rels.push_back(Json::array({rel({"a" + s, "b" + s}), rel({"b" + p, "a" + p}, "-1")}));
  }
  auto l = std::to_string(n - 1);
  rels.push_back(Json::array({rel({"b" + l, "a" + l})}));
  return algebra_from_json(quiver_json(n, arrows, rels));
}

inline Matrix mat(const std::vector<std::vector<long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows[0].size();
  Matrix m(rows.size(), c);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t k = 0; k < c; ++k) m(r, k) = Rational(rows[r][k]);
  return m;
}

inline Representation rep(const AlgebraPtr& A, std::vector<std::size_t> dims, std::vector<Matrix> mats) {
  return Representation(A, std::move(dims), std::move(mats));
}

// An isomorphic copy of M: random invertible change of basis at every vertex.
inline Representation twist(const Representation& M, Rng& rng) {
  const auto& A = M.algebra();
  std::vector<Matrix> base;
  for (std::size_t v = 0; v < A->num_vertices(); ++v) {
    const std::size_t d = M.dim(v);
    for (;;) {
      Matrix g(d, d);
      for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c) g(r, c) = Rational(draw_int(rng, 3));
      if (d == 0 || determinant(g) != 0) {
        base.push_back(g);
        break;
      }
    }
  }
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < A->num_arrows(); ++a) {
    const auto& ar = A->quiver().arrows[a];
    const Matrix& m = M.mat(a);
    if (m.rows() == 0 || m.cols() == 0) {
      mats.push_back(m);
      continue;
    }
    mats.push_back(base[ar.to] * m * *inverse(base[ar.from]));
  }
  return Representation(A, M.dims(), mats);
}

// Dimension vector dot product.
inline std::int64_t dot(const GVector& g, const std::vector<std::size_t>& d) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < d.size(); ++i) s += g.coords[i] * static_cast<std::int64_t>(d[i]);
  return s;
}

inline std::vector<std::int64_t> cartan_times(const IntMatrix& C, const GVector& g) {
  std::vector<std::int64_t> out(C.size(), 0);
  for (std::size_t i = 0; i < C.size(); ++i)
    for (std::size_t j = 0; j < g.coords.size(); ++j) out[i] += C[i][j] * g.coords[j];
  return out;
}

inline std::vector<std::int64_t> signed_dims(const Representation& M) {
  return {M.dims().begin(), M.dims().end()};
}

// Random g-vector with entries in [-2, 2], not zero.
inline GVector random_g(Rng& rng, std::size_t n, std::int64_t bound = 2) {
  for (;;) {
    GVector g;
    for (std::size_t i = 0; i < n; ++i) g.coords.push_back(draw_int(rng, bound));
    if (!g.is_zero()) return g;
  }
}

inline ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::ParseError;
}

}  // namespace testing
