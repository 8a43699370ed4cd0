#include "bricklab/representation.hpp"

#include <algorithm>
#include <map>

#include "bricklab/errors.hpp"

namespace bricklab {

std::int64_t draw_int(Rng& rng, std::int64_t bound) {
  const auto width = static_cast<std::uint64_t>(2 * bound + 1);
  return static_cast<std::int64_t>(rng() % width) - bound;
}

Representation::Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> mats,
                               bool check)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (!check) return;
  const auto& Q = algebra_->quiver();
  if (dims_.size() != Q.vertices.size())
    throw Error(ErrorKind::InvalidRepresentation, "dimension vector has the wrong length");
  if (mats_.size() != Q.arrows.size()) throw Error(ErrorKind::InvalidRepresentation, "wrong number of matrices");
  for (std::size_t a = 0; a < mats_.size(); ++a) {
    const auto& ar = Q.arrows[a];
    if (mats_[a].rows() != dims_[ar.to] || mats_[a].cols() != dims_[ar.from])
      throw Error(ErrorKind::InvalidRepresentation, "matrix for arrow '" + ar.name + "' has the wrong shape");
  }
  for (const auto& rel : algebra_->relations()) {
    const std::size_t s = Q.arrows[rel.front().path.front()].from;
    const std::size_t t = Q.arrows[rel.front().path.back()].to;
    Matrix sum(dims_[t], dims_[s]);
    for (const auto& term : rel) {
      Matrix m = arrows_action(s, term.path);
      m *= term.coeff;
      sum += m;
    }
    if (!sum.is_zero()) throw Error(ErrorKind::InvalidRepresentation, "a relation does not vanish");
  }
}

Representation Representation::zero(const AlgebraPtr& algebra) {
  std::vector<Matrix> mats(algebra->num_arrows());
  return Representation(algebra, std::vector<std::size_t>(algebra->num_vertices(), 0), std::move(mats), false);
}

std::size_t Representation::total_dim() const {
  std::size_t t = 0;
  for (auto d : dims_) t += d;
  return t;
}

std::vector<std::size_t> Representation::offsets() const {
  std::vector<std::size_t> off(dims_.size() + 1, 0);
  for (std::size_t i = 0; i < dims_.size(); ++i) off[i + 1] = off[i] + dims_[i];
  return off;
}

Matrix Representation::arrows_action(std::size_t source, const std::vector<std::size_t>& arrows) const {
  Matrix x = Matrix::identity(dims_[source]);
  for (std::size_t a : arrows) x = mats_[a] * x;
  return x;
}

Matrix Representation::path_action(std::size_t k) const {
  const auto& b = algebra_->basis(k);
  return arrows_action(b.source, b.arrows);
}

Matrix Representation::element_action(const SparseVec& x) const {
  const auto off = offsets();
  Matrix out(total_dim(), total_dim());
  for (const auto& [k, c] : x) {
    const auto& b = algebra_->basis(k);
    Matrix m = path_action(k);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t s = 0; s < m.cols(); ++s)
        if (sgn(m(r, s)) != 0) out(off[b.target] + r, off[b.source] + s) += c * m(r, s);
  }
  return out;
}

// ------------------------------------------------------------- morphisms

bool Morphism::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const Matrix& m) { return m.is_zero(); });
}

std::size_t Morphism::rank() const {
  std::size_t r = 0;
  for (const auto& b : blocks) r += bricklab::rank(b);
  return r;
}

bool Morphism::is_invertible() const {
  for (const auto& b : blocks) {
    if (b.rows() != b.cols()) return false;
    if (b.rows() && bricklab::rank(b) != b.rows()) return false;
  }
  return true;
}

Morphism identity_morphism(const Representation& M) {
  Morphism f;
  for (auto d : M.dims()) f.blocks.push_back(Matrix::identity(d));
  return f;
}

Morphism zero_morphism(const Representation& M, const Representation& N) {
  Morphism f;
  for (std::size_t i = 0; i < M.dims().size(); ++i) f.blocks.emplace_back(N.dim(i), M.dim(i));
  return f;
}

Morphism compose(const Morphism& g, const Morphism& f) {
  Morphism h;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) h.blocks.push_back(g.blocks[i] * f.blocks[i]);
  return h;
}

Morphism add(const Morphism& f, const Morphism& g) {
  Morphism h;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) h.blocks.push_back(f.blocks[i] + g.blocks[i]);
  return h;
}

Morphism scale(const Morphism& f, const Rational& c) {
  Morphism h = f;
  for (auto& b : h.blocks) b *= c;
  return h;
}

Morphism combination(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs) {
  Morphism h = basis.front();
  for (auto& b : h.blocks) b = Matrix(b.rows(), b.cols());
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(coeffs[k]) == 0) continue;
    for (std::size_t i = 0; i < h.blocks.size(); ++i) {
      Matrix t = basis[k].blocks[i];
      t *= coeffs[k];
      h.blocks[i] += t;
    }
  }
  return h;
}

void require_same_algebra(const Representation& M, const Representation& N) {
  if (M.algebra() != N.algebra() && (M.algebra()->quiver().vertices != N.algebra()->quiver().vertices ||
                                     M.algebra()->dim() != N.algebra()->dim()))
    throw Error(ErrorKind::AlgebraMismatch, "representations over different algebras");
}

bool is_morphism(const Representation& M, const Representation& N, const Morphism& f) {
  const auto& Q = M.algebra()->quiver();
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
    const auto& ar = Q.arrows[a];
    if (!(f.blocks[ar.to] * M.mat(a) == N.mat(a) * f.blocks[ar.from])) return false;
  }
  return true;
}

namespace {

void push_entry(SparseRow& row, std::size_t col, const Rational& v) { row.emplace_back(col, v); }

void finish_row(SparseRow& row) {
  std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& e : row) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (sgn(out.back().second) == 0) out.pop_back();
    } else if (sgn(e.second) != 0) {
      out.push_back(std::move(e));
    }
  }
  row = std::move(out);
}

}  // namespace

std::vector<Morphism> hom_space(const Representation& M, const Representation& N) {
  require_same_algebra(M, N);
  const auto& Q = M.algebra()->quiver();
  const std::size_t n = Q.vertices.size();
  std::vector<std::size_t> off(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) off[i + 1] = off[i] + N.dim(i) * M.dim(i);
  const std::size_t nvars = off[n];
  if (nvars == 0) return {};
  auto var = [&](std::size_t i, std::size_t r, std::size_t c) { return off[i] + r * M.dim(i) + c; };
  std::vector<SparseRow> rows;
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
    const std::size_t i = Q.arrows[a].from, j = Q.arrows[a].to;
    const Matrix& Ma = M.mat(a);
    const Matrix& Na = N.mat(a);
    for (std::size_t r = 0; r < N.dim(j); ++r)
      for (std::size_t c = 0; c < M.dim(i); ++c) {
        SparseRow row;
        for (std::size_t k = 0; k < M.dim(j); ++k)
          if (sgn(Ma(k, c)) != 0) push_entry(row, var(j, r, k), Ma(k, c));
        for (std::size_t k = 0; k < N.dim(i); ++k)
          if (sgn(Na(r, k)) != 0) push_entry(row, var(i, k, c), -Na(r, k));
        finish_row(row);
        if (!row.empty()) rows.push_back(std::move(row));
      }
  }
  auto basis = sparse_nullspace(std::move(rows), nvars);
  std::vector<Morphism> out;
  out.reserve(basis.size());
  for (const auto& v : basis) {
    Morphism f;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix b(N.dim(i), M.dim(i));
      for (std::size_t r = 0; r < N.dim(i); ++r)
        for (std::size_t c = 0; c < M.dim(i); ++c) b(r, c) = v[var(i, r, c)];
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dim(const Representation& M, const Representation& N) { return hom_space(M, N).size(); }

EndAlgebra end_algebra(const Representation& M) {
  if (M.is_zero()) throw Error(ErrorKind::ZeroModule, "endomorphism algebra of the zero module");
  EndAlgebra E;
  E.basis = hom_space(M, M);
  const std::size_t m = E.basis.size();
  // trace form tr(f_a f_b); its kernel is the radical in characteristic zero
  Matrix gram(m, m);
  std::vector<std::vector<Matrix>> transposed(m);
  for (std::size_t a = 0; a < m; ++a)
    for (const auto& blk : E.basis[a].blocks) transposed[a].push_back(blk.transpose());
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a; b < m; ++b) {
      Rational t;
      for (std::size_t i = 0; i < M.dims().size(); ++i) {
        const Matrix& A = E.basis[a].blocks[i];
        const Matrix& Bt = transposed[b][i];
        for (std::size_t r = 0; r < A.rows(); ++r)
          for (std::size_t c = 0; c < A.cols(); ++c)
            if (sgn(A(r, c)) != 0 && sgn(Bt(r, c)) != 0) t += A(r, c) * Bt(r, c);
      }
      gram(a, b) = t;
      gram(b, a) = t;
    }
  Matrix ker = nullspace(gram);
  for (std::size_t k = 0; k < ker.cols(); ++k) E.radical_basis.push_back(combination(E.basis, ker.column_vector(k)));
  E.top_dimension = m - E.radical_basis.size();
  return E;
}

bool is_brick(const Representation& M) {
  if (M.is_zero()) throw Error(ErrorKind::ZeroModule, "brick test on the zero module");
  return hom_dim(M, M) == 1;
}

// ------------------------------------------------------ submodule calculus

namespace {

// Left inverse of a full column rank matrix.
Matrix left_inverse(const Matrix& B) {
  if (B.cols() == 0) return Matrix(0, B.rows());
  Echelon e = sparse_rref(to_sparse_rows(B.transpose()), B.rows(), true);
  std::vector<std::size_t> rows = e.pivots;
  std::sort(rows.begin(), rows.end());
  Matrix sub(B.cols(), B.cols());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < B.cols(); ++c) sub(k, c) = B(rows[k], c);
  auto inv = inverse(sub);
  Matrix L(B.cols(), B.rows());
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t r = 0; r < B.cols(); ++r) L(r, rows[k]) = (*inv)(r, k);
  return L;
}

Representation restrict(const Representation& M, const std::vector<Matrix>& B, const std::vector<Matrix>& Linv,
                        bool check) {
  const auto& Q = M.algebra()->quiver();
  std::vector<std::size_t> dims;
  for (const auto& b : B) dims.push_back(b.cols());
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
    const std::size_t i = Q.arrows[a].from, j = Q.arrows[a].to;
    Matrix img = M.mat(a) * B[i];
    Matrix x = Linv[j] * img;
    if (check && !(B[j] * x == img))
      throw Error(ErrorKind::NotSubrepresentation, "subspace is not closed under arrow '" + Q.arrows[a].name + "'");
    mats.push_back(std::move(x));
  }
  return Representation(M.algebra(), std::move(dims), std::move(mats), false);
}

}  // namespace

Submodule submodule_from_basis(const Representation& M, const std::vector<Matrix>& basis) {
  std::vector<Matrix> B, L;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].rows() != M.dim(i)) throw Error(ErrorKind::NotSubrepresentation, "vector in the wrong vertex space");
    Matrix b = column_space(basis[i]);
    L.push_back(left_inverse(b));
    B.push_back(std::move(b));
  }
  Submodule s{restrict(M, B, L, true), Morphism{B}};
  return s;
}

Submodule submodule_generated(const Representation& M, const std::vector<Matrix>& generators) {
  const auto& Q = M.algebra()->quiver();
  std::vector<Matrix> S;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i].rows() != M.dim(i) && generators[i].cols() > 0)
      throw Error(ErrorKind::NotSubrepresentation, "vector in the wrong vertex space");
    S.push_back(generators[i].cols() ? column_space(generators[i]) : Matrix(M.dim(i), 0));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
      const std::size_t i = Q.arrows[a].from, j = Q.arrows[a].to;
      if (S[i].cols() == 0) continue;
      Matrix grown = column_space(hstack(S[j], M.mat(a) * S[i]));
      if (grown.cols() > S[j].cols()) {
        S[j] = std::move(grown);
        changed = true;
      }
    }
  }
  std::vector<Matrix> L;
  for (const auto& b : S) L.push_back(left_inverse(b));
  return Submodule{restrict(M, S, L, false), Morphism{S}};
}

Quotient quotient_module(const Representation& M, const std::vector<Matrix>& sub_basis) {
  const auto& Q = M.algebra()->quiver();
  const std::size_t n = Q.vertices.size();
  std::vector<Matrix> C(n), q(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix B = sub_basis[i].cols() ? column_space(sub_basis[i]) : Matrix(M.dim(i), 0);
    if (B.rows() != M.dim(i)) throw Error(ErrorKind::NotSubrepresentation, "vector in the wrong vertex space");
    C[i] = complement_columns(B);
    Matrix T = hstack(B, C[i]);
    auto inv = inverse(T);
    q[i] = inv->block(B.cols(), 0, C[i].cols(), M.dim(i));
  }
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < n; ++i) dims.push_back(C[i].cols());
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
    const std::size_t i = Q.arrows[a].from, j = Q.arrows[a].to;
    if (sub_basis[i].cols() && !(q[j] * (M.mat(a) * sub_basis[i])).is_zero())
      throw Error(ErrorKind::NotSubrepresentation, "subspace is not closed under arrow '" + Q.arrows[a].name + "'");
    mats.push_back(q[j] * M.mat(a) * C[i]);
  }
  return Quotient{Representation(M.algebra(), std::move(dims), std::move(mats), false), Morphism{q}};
}

Image image(const Representation& M, const Representation& N, const Morphism& f) {
  (void)M;
  std::vector<Matrix> B, L, s;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    Matrix b = f.blocks[i].cols() ? column_space(f.blocks[i]) : Matrix(N.dim(i), 0);
    L.push_back(left_inverse(b));
    s.push_back(L.back() * f.blocks[i]);
    B.push_back(std::move(b));
  }
  Representation mod = restrict(N, B, L, false);
  return Image{std::move(mod), Morphism{std::move(s)}, Morphism{std::move(B)}};
}

Submodule kernel(const Representation& M, const Morphism& f) {
  std::vector<Matrix> B, L;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    Matrix b = f.blocks[i].rows() ? nullspace(f.blocks[i]) : Matrix::identity(M.dim(i));
    L.push_back(left_inverse(b));
    B.push_back(std::move(b));
  }
  return Submodule{restrict(M, B, L, false), Morphism{B}};
}

Quotient cokernel(const Representation& N, const Morphism& f) {
  std::vector<Matrix> B;
  for (std::size_t i = 0; i < f.blocks.size(); ++i)
    B.push_back(f.blocks[i].cols() ? column_space(f.blocks[i]) : Matrix(N.dim(i), 0));
  return quotient_module(N, B);
}

std::vector<Matrix> sum_of_images(const Representation& N, const std::vector<Morphism>& maps) {
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < N.dims().size(); ++i) {
    Matrix acc(N.dim(i), 0);
    for (const auto& f : maps)
      if (f.blocks[i].cols()) acc = hstack(acc, f.blocks[i]);
    out.push_back(acc.cols() ? column_space(acc) : acc);
  }
  return out;
}

// ---------------------------------------------------------- standard modules

Representation projective(const AlgebraPtr& A, std::size_t j) {
  const auto& Q = A->quiver();
  const std::size_t n = Q.vertices.size();
  std::vector<std::size_t> dims(n);
  for (std::size_t k = 0; k < n; ++k) dims[k] = A->paths_between(j, k).size();
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
    const std::size_t k = Q.arrows[a].from, l = Q.arrows[a].to;
    Matrix m(dims[l], dims[k]);
    const auto& src = A->paths_between(j, k);
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [r, v] : A->mult(A->arrow_element(a), src[c])) m(A->position(r), c) = v;
    mats.push_back(std::move(m));
  }
  return Representation(A, std::move(dims), std::move(mats), false);
}

Representation injective(const AlgebraPtr& A, std::size_t j) {
  const auto& Q = A->quiver();
  const std::size_t n = Q.vertices.size();
  std::vector<std::size_t> dims(n);
  for (std::size_t k = 0; k < n; ++k) dims[k] = A->paths_between(k, j).size();
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
    const std::size_t k = Q.arrows[a].from, l = Q.arrows[a].to;
    Matrix m(dims[l], dims[k]);
    const auto& tgt = A->paths_between(l, j);
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (const auto& [p, v] : A->mult(tgt[r], A->arrow_element(a))) m(r, A->position(p)) = v;
    mats.push_back(std::move(m));
  }
  return Representation(A, std::move(dims), std::move(mats), false);
}

Representation simple(const AlgebraPtr& A, std::size_t j) {
  std::vector<std::size_t> dims(A->num_vertices(), 0);
  dims[j] = 1;
  std::vector<Matrix> mats;
  for (const auto& ar : A->quiver().arrows) mats.emplace_back(dims[ar.to], dims[ar.from]);
  return Representation(A, std::move(dims), std::move(mats), false);
}

Representation direct_sum(const std::vector<Representation>& parts) {
  const AlgebraPtr& A = parts.front().algebra();
  const std::size_t n = A->num_vertices();
  std::vector<std::size_t> dims(n, 0);
  for (const auto& p : parts) {
    require_same_algebra(parts.front(), p);
    for (std::size_t i = 0; i < n; ++i) dims[i] += p.dim(i);
  }
  std::vector<Matrix> mats;
  for (std::size_t a = 0; a < A->num_arrows(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.mat(a));
    mats.push_back(block_diagonal(blocks));
  }
  return Representation(A, std::move(dims), std::move(mats), false);
}

Representation direct_sum(const Representation& a, const Representation& b) { return direct_sum({a, b}); }

Representation regular_module(const AlgebraPtr& A) {
  std::vector<Representation> parts;
  for (std::size_t j = 0; j < A->num_vertices(); ++j) parts.push_back(projective(A, j));
  return direct_sum(parts);
}

std::vector<Morphism> sum_inclusions(const std::vector<Representation>& parts) {
  const std::size_t n = parts.front().dims().size();
  std::vector<std::size_t> total(n, 0);
  for (const auto& p : parts)
    for (std::size_t i = 0; i < n; ++i) total[i] += p.dim(i);
  std::vector<Morphism> out;
  std::vector<std::size_t> run(n, 0);
  for (const auto& p : parts) {
    Morphism f;
    for (std::size_t i = 0; i < n; ++i) {
      Matrix b(total[i], p.dim(i));
      for (std::size_t k = 0; k < p.dim(i); ++k) b(run[i] + k, k) = 1;
      run[i] += p.dim(i);
      f.blocks.push_back(std::move(b));
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<Morphism> sum_projections(const std::vector<Representation>& parts) {
  auto inc = sum_inclusions(parts);
  for (auto& f : inc)
    for (auto& b : f.blocks) b = b.transpose();
  return inc;
}

Representation dual(const Representation& M, const AlgebraPtr& target) {
  std::vector<Matrix> mats;
  for (const auto& m : M.mats()) mats.push_back(m.transpose());
  return Representation(target, M.dims(), std::move(mats), false);
}

Morphism dual_morphism(const Morphism& f) {
  Morphism g;
  for (const auto& b : f.blocks) g.blocks.push_back(b.transpose());
  return g;
}

Morphism map_from_projective(const Representation& M, std::size_t j, const std::vector<Rational>& w) {
  const AlgebraPtr& A = M.algebra();
  const Matrix wcol = Matrix::column(w);
  Morphism f;
  for (std::size_t k = 0; k < A->num_vertices(); ++k) {
    const auto& paths = A->paths_between(j, k);
    Matrix b(M.dim(k), paths.size());
    for (std::size_t c = 0; c < paths.size(); ++c) {
      Matrix col = M.path_action(paths[c]) * wcol;
      for (std::size_t r = 0; r < M.dim(k); ++r) b(r, c) = col(r, 0);
    }
    f.blocks.push_back(std::move(b));
  }
  return f;
}

Morphism projective_map(const AlgebraPtr& A, std::size_t j, std::size_t k, const SparseVec& a) {
  Morphism f;
  for (std::size_t l = 0; l < A->num_vertices(); ++l) {
    const auto& src = A->paths_between(j, l);
    Matrix b(A->paths_between(k, l).size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c)
      for (const auto& [y, coeff] : a)
        for (const auto& [r, v] : A->mult(src[c], y)) b(A->position(r), c) += coeff * v;
    f.blocks.push_back(std::move(b));
  }
  return f;
}

std::vector<Matrix> radical_subspace(const Representation& M) {
  const auto& Q = M.algebra()->quiver();
  std::vector<Matrix> out;
  for (std::size_t j = 0; j < Q.vertices.size(); ++j) {
    Matrix acc(M.dim(j), 0);
    for (std::size_t a = 0; a < Q.arrows.size(); ++a)
      if (Q.arrows[a].to == j && M.mat(a).cols()) acc = hstack(acc, M.mat(a));
    out.push_back(acc.cols() ? column_space(acc) : acc);
  }
  return out;
}

std::vector<Matrix> socle_subspace(const Representation& M) {
  const auto& Q = M.algebra()->quiver();
  std::vector<Matrix> out;
  for (std::size_t i = 0; i < Q.vertices.size(); ++i) {
    Matrix acc(0, M.dim(i));
    for (std::size_t a = 0; a < Q.arrows.size(); ++a)
      if (Q.arrows[a].from == i && M.mat(a).rows()) acc = vstack(acc, M.mat(a));
    out.push_back(acc.rows() ? nullspace(acc) : Matrix::identity(M.dim(i)));
  }
  return out;
}

std::vector<std::size_t> top_dims(const Representation& M) {
  auto rad = radical_subspace(M);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rad.size(); ++i) out.push_back(M.dim(i) - rad[i].cols());
  return out;
}

// ------------------------------------------------------------ annihilators

TwoSidedIdeal joint_annihilator(const std::vector<Representation>& Ms) {
  const AlgebraPtr& A = Ms.front().algebra();
  std::map<std::pair<std::size_t, std::size_t>, SparseRow> rows;
  std::size_t base = 0;
  for (const auto& M : Ms) {
    const auto off = M.offsets();
    const std::size_t T = M.total_dim();
    for (std::size_t k = 0; k < A->dim(); ++k) {
      const auto& b = A->basis(k);
      if (M.dim(b.source) == 0 || M.dim(b.target) == 0) continue;
      Matrix act = M.path_action(k);
      for (std::size_t r = 0; r < act.rows(); ++r)
        for (std::size_t c = 0; c < act.cols(); ++c)
          if (sgn(act(r, c)) != 0)
            rows[{base, (off[b.target] + r) * T + off[b.source] + c}].emplace_back(k, act(r, c));
    }
    ++base;
  }
  std::vector<SparseRow> sys;
  for (auto& [key, row] : rows) sys.push_back(std::move(row));
  auto ker = sparse_nullspace(std::move(sys), A->dim());
  std::vector<SparseRow> elems;
  for (const auto& v : ker) {
    SparseRow s;
    for (std::size_t k = 0; k < v.size(); ++k)
      if (sgn(v[k]) != 0) s.emplace_back(k, v[k]);
    elems.push_back(std::move(s));
  }
  TwoSidedIdeal J;
  J.closure_basis = sparse_rref(std::move(elems), A->dim(), true).rows;
  return J;
}

TwoSidedIdeal annihilator(const Representation& M) { return joint_annihilator({M}); }

bool is_faithful(const Representation& M) { return annihilator(M).dim() == 0; }

}  // namespace bricklab
