#include "bricklab/ar.hpp"

#include <algorithm>
#include <cstdlib>

#include "bricklab/errors.hpp"

namespace bricklab {

// ------------------------------------------------------------------ g-vectors

GVector GVector::plus() const {
  GVector v = *this;
  for (auto& x : v.coords) x = std::max<std::int64_t>(x, 0);
  return v;
}

GVector GVector::minus() const {
  GVector v = *this;
  for (auto& x : v.coords) x = std::max<std::int64_t>(-x, 0);
  return v;
}

bool GVector::is_zero() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t x) { return x == 0; });
}

std::int64_t GVector::l1() const {
  std::int64_t s = 0;
  for (auto x : coords) s += std::llabs(x);
  return s;
}

std::vector<Rational> GVector::normalized() const {
  if (is_zero()) throw Error(ErrorKind::ZeroVector, "normalising the zero vector");
  const Rational s(static_cast<long>(l1()));
  std::vector<Rational> out;
  for (auto x : coords) out.push_back(Rational(static_cast<long>(x)) / s);
  return out;
}

GVector operator+(const GVector& a, const GVector& b) {
  GVector v = a;
  for (std::size_t i = 0; i < v.coords.size(); ++i) v.coords[i] += b.coords[i];
  return v;
}

GVector operator-(const GVector& a, const GVector& b) {
  GVector v = a;
  for (std::size_t i = 0; i < v.coords.size(); ++i) v.coords[i] -= b.coords[i];
  return v;
}

GVector operator-(const GVector& a) {
  GVector v = a;
  for (auto& x : v.coords) x = -x;
  return v;
}

GVector unit_gvector(std::size_t n, std::size_t i) {
  GVector v{std::vector<std::int64_t>(n, 0)};
  v.coords[i] = 1;
  return v;
}

std::vector<std::int64_t> ProjectivePresentation::p0_multiplicity(std::size_t n) const {
  std::vector<std::int64_t> m(n, 0);
  for (auto v : p0_vertices) ++m[v];
  return m;
}

std::vector<std::int64_t> ProjectivePresentation::p1_multiplicity(std::size_t n) const {
  std::vector<std::int64_t> m(n, 0);
  for (auto v : p1_vertices) ++m[v];
  return m;
}

// -------------------------------------------------------- sums of projectives

Representation projective_sum(const AlgebraPtr& A, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return Representation::zero(A);
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(projective(A, v));
  return direct_sum(parts);
}

Representation injective_sum(const AlgebraPtr& A, const std::vector<std::size_t>& vertices) {
  if (vertices.empty()) return Representation::zero(A);
  std::vector<Representation> parts;
  for (auto v : vertices) parts.push_back(injective(A, v));
  return direct_sum(parts);
}

Morphism projective_sum_map(const AlgebraPtr& A, const std::vector<std::size_t>& src,
                            const std::vector<std::size_t>& dst,
                            const std::vector<std::vector<SparseVec>>& elements) {
  const std::size_t n = A->num_vertices();
  Morphism f;
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t rows = 0, cols = 0;
    for (auto v : dst) rows += A->paths_between(v, l).size();
    for (auto v : src) cols += A->paths_between(v, l).size();
    Matrix b(rows, cols);
    std::size_t c0 = 0;
    for (std::size_t r = 0; r < src.size(); ++r) {
      const auto& in = A->paths_between(src[r], l);
      std::size_t r0 = 0;
      for (std::size_t s = 0; s < dst.size(); ++s) {
        const auto& a = elements[r][s];
        for (std::size_t c = 0; c < in.size() && !a.empty(); ++c)
          for (const auto& [y, coeff] : a)
            for (const auto& [k, v] : A->mult(in[c], y)) b(r0 + A->position(k), c0 + c) += coeff * v;
        r0 += A->paths_between(dst[s], l).size();
      }
      c0 += in.size();
    }
    f.blocks.push_back(std::move(b));
  }
  return f;
}

Morphism nakayama_map(const AlgebraPtr& A, const std::vector<std::size_t>& src, const std::vector<std::size_t>& dst,
                      const std::vector<std::vector<SparseVec>>& elements) {
  const std::size_t n = A->num_vertices();
  Morphism f;
  for (std::size_t l = 0; l < n; ++l) {
    std::size_t rows = 0, cols = 0;
    for (auto v : dst) rows += A->paths_between(l, v).size();
    for (auto v : src) cols += A->paths_between(l, v).size();
    Matrix b(rows, cols);
    std::size_t c0 = 0;
    for (std::size_t r = 0; r < src.size(); ++r) {
      std::size_t r0 = 0;
      for (std::size_t s = 0; s < dst.size(); ++s) {
        const auto& a = elements[r][s];
        const auto& ys = A->paths_between(l, dst[s]);
        for (std::size_t yi = 0; yi < ys.size() && !a.empty(); ++yi)
          for (const auto& [x, coeff] : a)
            for (const auto& [p, v] : A->mult(x, ys[yi])) b(r0 + yi, c0 + A->position(p)) += coeff * v;
        r0 += ys.size();
      }
      c0 += A->paths_between(l, src[r]).size();
    }
    f.blocks.push_back(std::move(b));
  }
  return f;
}

// ------------------------------------------------------------ presentations

ProjectiveCover projective_cover(const Representation& M) {
  const AlgebraPtr& A = M.algebra();
  const std::size_t n = A->num_vertices();
  auto rad = radical_subspace(M);
  std::vector<Matrix> gens(n);
  ProjectiveCover pc;
  for (std::size_t i = 0; i < n; ++i) {
    gens[i] = complement_columns(rad[i]);
    for (std::size_t c = 0; c < gens[i].cols(); ++c) pc.vertices.push_back(i);
  }
  pc.P = projective_sum(A, pc.vertices);
  // block at vertex k: for each generator w at vertex i, columns M(p) w over paths p: i -> k
  pc.cover.blocks.assign(n, Matrix());
  for (std::size_t k = 0; k < n; ++k) {
    Matrix b(M.dim(k), pc.P.dim(k));
    std::size_t col = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (gens[i].cols() == 0) continue;
      const auto& paths = A->paths_between(i, k);
      std::vector<Matrix> imgs;
      for (auto p : paths) imgs.push_back(M.path_action(p) * gens[i]);
      for (std::size_t g = 0; g < gens[i].cols(); ++g)
        for (std::size_t pi = 0; pi < paths.size(); ++pi) {
          for (std::size_t r = 0; r < M.dim(k); ++r) b(r, col) = imgs[pi](r, g);
          ++col;
        }
    }
    pc.cover.blocks[k] = std::move(b);
  }
  return pc;
}

Representation syzygy(const Representation& M) {
  if (M.is_zero()) return M;
  auto pc = projective_cover(M);
  return kernel(pc.P, pc.cover).module;
}

ProjectivePresentation minimal_presentation(const Representation& M) {
  const AlgebraPtr& A = M.algebra();
  ProjectivePresentation pres;
  auto pc = projective_cover(M);
  pres.p0_vertices = pc.vertices;
  pres.P0 = pc.P;
  pres.cover = pc.cover;
  Submodule K = kernel(pc.P, pc.cover);
  if (K.module.is_zero()) {
    pres.P1 = Representation::zero(A);
    pres.map = zero_morphism(pres.P1, pres.P0);
    return pres;
  }
  auto kc = projective_cover(K.module);
  pres.p1_vertices = kc.vertices;
  pres.P1 = kc.P;
  pres.map = compose(K.inclusion, kc.cover);
  // read the elements off the images of the idempotent generators
  for (std::size_t r = 0; r < pres.p1_vertices.size(); ++r) {
    const std::size_t i = pres.p1_vertices[r];
    std::size_t col = 0;
    for (std::size_t r2 = 0; r2 < r; ++r2) col += A->paths_between(pres.p1_vertices[r2], i).size();
    col += A->position(A->idempotent(i));
    std::vector<SparseVec> row(pres.p0_vertices.size());
    std::size_t off = 0;
    for (std::size_t s = 0; s < pres.p0_vertices.size(); ++s) {
      const auto& paths = A->paths_between(pres.p0_vertices[s], i);
      for (std::size_t p = 0; p < paths.size(); ++p) {
        const Rational& v = pres.map.blocks[i](off + p, col);
        if (sgn(v) != 0) row[s].emplace_back(paths[p], v);
      }
      std::sort(row[s].begin(), row[s].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      off += paths.size();
    }
    pres.elements.push_back(std::move(row));
  }
  return pres;
}

// ---------------------------------------------------------------- translates

Representation tau(const Representation& M) {
  const AlgebraPtr& A = M.algebra();
  if (M.is_zero()) return M;
  auto pres = minimal_presentation(M);
  if (pres.p1_vertices.empty()) return Representation::zero(A);
  Representation nu1 = injective_sum(A, pres.p1_vertices);
  Morphism nmap = nakayama_map(A, pres.p1_vertices, pres.p0_vertices, pres.elements);
  return kernel(nu1, nmap).module;
}

Representation tau_minus(const Representation& M) {
  const AlgebraPtr& A = M.algebra();
  if (M.is_zero()) return M;
  auto op = A->opposite();
  return dual(tau(dual(M, op)), A);
}

SparseVec opposite_element(const Algebra& A, const Algebra& Aop, const SparseVec& x) {
  SparseVec out;
  for (const auto& [k, c] : x) {
    const auto& b = A.basis(k);
    std::vector<std::size_t> rev(b.arrows.rbegin(), b.arrows.rend());
    for (const auto& [j, v] : Aop.normal_form(b.target, rev)) out.emplace_back(j, c * v);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec merged;
  for (auto& e : out) {
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
      if (sgn(merged.back().second) == 0) merged.pop_back();
    } else {
      merged.push_back(e);
    }
  }
  return merged;
}

Representation transpose(const Representation& M) {
  const AlgebraPtr& A = M.algebra();
  auto op = A->opposite();
  if (M.is_zero()) return Representation::zero(op);
  auto pres = minimal_presentation(M);
  Representation P1star = projective_sum(op, pres.p1_vertices);
  if (pres.p1_vertices.empty()) return P1star;
  std::vector<std::vector<SparseVec>> elems(pres.p0_vertices.size(), std::vector<SparseVec>(pres.p1_vertices.size()));
  for (std::size_t r = 0; r < pres.p1_vertices.size(); ++r)
    for (std::size_t s = 0; s < pres.p0_vertices.size(); ++s)
      elems[s][r] = opposite_element(*A, *op, pres.elements[r][s]);
  Morphism m = projective_sum_map(op, pres.p0_vertices, pres.p1_vertices, elems);
  return cokernel(P1star, m).module;
}

std::size_t hom_tau_dim(const Representation& M, const Representation& N) { return hom_dim(M, tau(N)); }

bool is_tau_rigid(const Representation& M) {
  if (M.is_zero()) return true;
  Representation t = tau(M);
  if (t.is_zero()) return true;
  return hom_dim(M, t) == 0;
}

bool is_projective(const Representation& M) { return syzygy(M).is_zero(); }

GVector g_vector(const Representation& M) {
  const std::size_t n = M.algebra()->num_vertices();
  if (M.is_zero()) return GVector{std::vector<std::int64_t>(n, 0)};
  auto pres = minimal_presentation(M);
  auto p0 = pres.p0_multiplicity(n), p1 = pres.p1_multiplicity(n);
  GVector g{std::vector<std::int64_t>(n)};
  for (std::size_t i = 0; i < n; ++i) g.coords[i] = p0[i] - p1[i];
  return g;
}

std::optional<std::size_t> proj_dimension(const Representation& M, std::size_t bound) {
  if (M.is_zero()) return 0;
  Representation cur = M;
  for (std::size_t d = 0; d <= bound; ++d) {
    Representation K = syzygy(cur);
    if (K.is_zero()) return d;
    cur = std::move(K);
  }
  return std::nullopt;
}

std::optional<std::size_t> inj_dimension(const Representation& M, std::size_t bound) {
  return proj_dimension(dual(M, M.algebra()->opposite()), bound);
}

std::optional<std::size_t> global_dimension(const AlgebraPtr& A, std::size_t bound) {
  std::size_t best = 0;
  for (std::size_t i = 0; i < A->num_vertices(); ++i) {
    auto pd = proj_dimension(simple(A, i), bound);
    if (!pd) return std::nullopt;
    best = std::max(best, *pd);
  }
  return best;
}

// ------------------------------------------------------------- brick labels

Quotient quotient_by_radical_maps(const Representation& X, const std::vector<Morphism>& maps) {
  std::vector<Morphism> all = maps;
  if (!X.is_zero()) {
    auto E = end_algebra(X);
    all.insert(all.end(), E.radical_basis.begin(), E.radical_basis.end());
  }
  if (all.empty()) return quotient_module(X, std::vector<Matrix>(X.dims().size()));
  return quotient_module(X, sum_of_images(X, all));
}

Representation brick_label(const Representation& X) {
  if (X.is_zero()) throw Error(ErrorKind::ZeroModule, "brick label of the zero module");
  auto E = end_algebra(X);
  if (E.top_dimension != 1 && !is_indecomposable(X)) throw Error(ErrorKind::NotIndecomposable, "input splits");
  if (!is_tau_rigid(X)) throw Error(ErrorKind::NotTauRigid, "input is not tau-rigid");
  Representation B = E.radical_basis.empty() ? X : quotient_module(X, sum_of_images(X, E.radical_basis)).module;
  if (!is_brick(B)) throw Error(ErrorKind::PostconditionViolated, "brick label is not a brick");
  return B;
}

namespace {

Morphism random_combination(const std::vector<Morphism>& basis, Rng& rng, std::int64_t bound) {
  std::vector<Rational> c(basis.size());
  for (auto& x : c) x = Rational(static_cast<long>(draw_int(rng, bound)));
  return combination(basis, c);
}

std::optional<Quotient> quotient_brick_search(const Representation& X, Rng& rng, int depth) {
  if (depth > 32) return std::nullopt;
  auto E = end_algebra(X);
  std::vector<Morphism> cands = E.radical_basis;
  if (cands.empty()) return std::nullopt;
  for (int t = 0; t < 12; ++t) cands.push_back(random_combination(E.radical_basis, rng, 3));
  struct Ranked {
    std::size_t rank;
    std::size_t index;
  };
  std::vector<Ranked> order;
  for (std::size_t k = 0; k < cands.size(); ++k) {
    if (cands[k].is_zero() || !compose(cands[k], cands[k]).is_zero()) continue;
    order.push_back({cands[k].rank(), k});
  }
  std::stable_sort(order.begin(), order.end(), [](const Ranked& a, const Ranked& b) { return a.rank < b.rank; });
  for (const auto& [rk, k] : order) {
    const Morphism& phi = cands[k];
    Quotient Q = cokernel(X, phi);
    Morphism phibar;
    for (std::size_t i = 0; i < phi.blocks.size(); ++i) {
      const Matrix& q = Q.projection.blocks[i];
      if (q.rows() == 0) {
        phibar.blocks.emplace_back(X.dim(i), 0);
        continue;
      }
      auto rinv = solve(q, Matrix::identity(q.rows()));
      phibar.blocks.push_back(phi.blocks[i] * *rinv);
    }
    auto pieces = split_indecomposable(Q.module, rng());
    auto projs = piece_projections(Q.module, pieces);
    for (std::size_t j = 0; j < pieces.size(); ++j) {
      if (compose(phibar, pieces[j].inclusion).is_zero()) continue;
      const Representation& C = pieces[j].module;
      Morphism to_c = compose(projs[j], Q.projection);
      if (is_brick(C)) {
        if (!is_tau_rigid(C) && C.total_dim() < X.total_dim()) return Quotient{C, to_c};
        continue;
      }
      if (auto sub = quotient_brick_search(C, rng, depth + 1))
        return Quotient{sub->module, compose(sub->projection, to_c)};
    }
  }
  return std::nullopt;
}

}  // namespace

Quotient nontaurigid_brick_quotient(const Representation& X, std::uint64_t seed) {
  if (X.is_zero()) throw Error(ErrorKind::ZeroModule, "zero module");
  if (is_brick(X)) throw Error(ErrorKind::InputIsBrick, "input is already a brick");
  if (!is_indecomposable(X, seed)) throw Error(ErrorKind::NotIndecomposable, "input splits");
  Rng rng(seed);
  auto res = quotient_brick_search(X, rng, 0);
  if (!res) throw Error(ErrorKind::SearchExhausted, "no candidate endomorphism produced a verified quotient");
  const Representation& Y = res->module;
  if (!(Y.total_dim() < X.total_dim() && is_brick(Y) && !is_tau_rigid(Y)))
    throw Error(ErrorKind::PostconditionViolated, "quotient failed verification");
  return *res;
}

}  // namespace bricklab
