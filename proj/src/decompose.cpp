#include "bricklab/decompose.hpp"

#include <algorithm>
#include <numeric>

#include "bricklab/errors.hpp"

namespace bricklab {

namespace {

const Integer kRootFactorBound("1000000000000");

// Smallest k with im f^k = im f^{k+1}, and dim im f^k.
std::pair<std::size_t, std::size_t> image_chain(const Representation& M, const Morphism& f) {
  std::vector<Matrix> V;
  std::size_t prev = 0;
  for (std::size_t i = 0; i < M.dims().size(); ++i) {
    V.push_back(Matrix::identity(M.dim(i)));
    prev += M.dim(i);
  }
  for (std::size_t k = 0;; ++k) {
    std::size_t total = 0;
    for (std::size_t i = 0; i < V.size(); ++i) {
      if (V[i].cols() == 0) continue;
      Matrix img = f.blocks[i] * V[i];
      V[i] = column_space(img);
      total += V[i].cols();
    }
    if (total == prev) return {k, total};
    prev = total;
  }
}

Morphism power(const Morphism& f, std::size_t k) {
  Morphism g = f;
  for (std::size_t i = 1; i < k; ++i) g = compose(f, g);
  return g;
}

struct Splitter {
  Morphism f;
  std::size_t power;
};

std::optional<Splitter> test_candidate(const Representation& M, const Morphism& f) {
  auto [k, stable] = image_chain(M, f);
  if (stable == 0 || stable == M.total_dim()) return std::nullopt;
  return Splitter{f, k};
}

Morphism shift(const Morphism& f, const Rational& lambda) {
  Morphism g = f;
  for (auto& b : g.blocks)
    for (std::size_t r = 0; r < b.rows(); ++r) b(r, r) -= lambda;
  return g;
}

std::optional<Splitter> try_with_eigenvalues(const Representation& M, const Morphism& f) {
  if (auto s = test_candidate(M, f)) return s;
  std::vector<Rational> tried;
  for (std::size_t i = 0; i < M.dims().size(); ++i) {
    if (M.dim(i) == 0) continue;
    for (const auto& lambda : rational_roots(charpoly(f.blocks[i]), kRootFactorBound)) {
      if (std::find(tried.begin(), tried.end(), lambda) != tried.end()) continue;
      tried.push_back(lambda);
      if (auto s = test_candidate(M, shift(f, lambda))) return s;
    }
  }
  return std::nullopt;
}

Morphism random_element(const std::vector<Morphism>& basis, Rng& rng, std::int64_t bound) {
  std::vector<Rational> c(basis.size());
  for (auto& x : c) x = Rational(static_cast<long>(draw_int(rng, bound)));
  return combination(basis, c);
}

std::optional<Splitter> find_splitter(const Representation& M, const std::vector<Morphism>& E, Rng& rng) {
  for (const auto& b : E)
    if (auto s = try_with_eigenvalues(M, b)) return s;
  for (int round = 0; round < 4; ++round)
    if (auto s = try_with_eigenvalues(M, random_element(E, rng, 3))) return s;
  // annihilators of single vectors: every element there is singular
  auto socle = socle_subspace(M);
  for (std::size_t i = 0; i < M.dims().size(); ++i) {
    if (M.dim(i) == 0) continue;
    std::vector<std::vector<Rational>> vectors;
    for (std::size_t c = 0; c < socle[i].cols(); ++c) vectors.push_back(socle[i].column_vector(c));
    for (std::size_t k = 0; k < M.dim(i); ++k) {
      std::vector<Rational> e(M.dim(i));
      e[k] = 1;
      vectors.push_back(std::move(e));
    }
    for (const auto& w : vectors) {
      Matrix W(M.dim(i), E.size());
      Matrix wc = Matrix::column(w);
      for (std::size_t a = 0; a < E.size(); ++a) W.set_block(0, a, E[a].blocks[i] * wc);
      Matrix ker = nullspace(W);
      if (ker.cols() == 0) continue;
      std::vector<Morphism> ann;
      for (std::size_t c = 0; c < ker.cols(); ++c) ann.push_back(combination(E, ker.column_vector(c)));
      for (std::size_t c = 0; c < std::min<std::size_t>(ann.size(), 6); ++c)
        if (auto s = test_candidate(M, ann[c])) return s;
      if (auto s = test_candidate(M, random_element(ann, rng, 3))) return s;
    }
  }
  for (int round = 0; round < 12; ++round)
    if (auto s = try_with_eigenvalues(M, random_element(E, rng, 10))) return s;
  return std::nullopt;
}

}  // namespace

std::vector<Piece> split_indecomposable(const Representation& M, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Piece> done;
  std::vector<Piece> work{{M, identity_morphism(M), false}};
  while (!work.empty()) {
    Piece cur = std::move(work.back());
    work.pop_back();
    if (cur.module.is_zero()) continue;
    EndAlgebra E = end_algebra(cur.module);
    if (E.top_dimension == 1) {
      done.push_back(std::move(cur));
      continue;
    }
    auto s = find_splitter(cur.module, E.basis, rng);
    if (!s) {
      cur.geometric_split_warning = true;
      done.push_back(std::move(cur));
      continue;
    }
    Morphism g = power(s->f, std::max<std::size_t>(s->power, 1));
    Submodule K = kernel(cur.module, g);
    Image I = image(cur.module, cur.module, g);
    work.push_back({I.module, compose(cur.inclusion, I.inclusion), false});
    work.push_back({K.module, compose(cur.inclusion, K.inclusion), false});
  }
  return done;
}

std::vector<Morphism> piece_projections(const Representation& M, const std::vector<Piece>& pieces) {
  std::vector<Morphism> out(pieces.size());
  for (std::size_t i = 0; i < M.dims().size(); ++i) {
    Matrix all(M.dim(i), 0);
    for (const auto& p : pieces) all = hstack(all, p.inclusion.blocks[i]);
    Matrix inv = M.dim(i) ? *inverse(all) : Matrix(0, 0);
    std::size_t row = 0;
    for (std::size_t k = 0; k < pieces.size(); ++k) {
      const std::size_t d = pieces[k].module.dim(i);
      out[k].blocks.push_back(inv.block(row, 0, d, M.dim(i)));
      row += d;
    }
  }
  return out;
}

bool is_indecomposable(const Representation& M, std::uint64_t seed) {
  if (M.is_zero()) return false;
  if (end_algebra(M).top_dimension == 1) return true;
  return split_indecomposable(M, seed).size() == 1;
}

std::optional<Morphism> indecomposable_isomorphism(const Representation& X, const Representation& Y,
                                                   std::uint64_t seed) {
  require_same_algebra(X, Y);
  if (X.dims() != Y.dims()) return std::nullopt;
  if (X.is_zero()) return identity_morphism(X);
  auto F = hom_space(X, Y);
  if (F.empty()) return std::nullopt;
  auto G = hom_space(Y, X);
  if (G.empty()) return std::nullopt;
  Rng rng(seed ^ 0x5bd1e995ULL);
  for (int t = 0; t < 6; ++t) {
    Morphism f = random_element(F, rng, 100);
    if (f.is_invertible()) return f;
  }
  if (F.size() * G.size() <= 400) {
    for (const auto& f : F)
      for (const auto& g : G)
        if (compose(g, f).is_invertible()) return f;
    return std::nullopt;
  }
  for (int t = 0; t < 10; ++t) {
    Morphism f = random_element(F, rng, 1000);
    Morphism g = random_element(G, rng, 1000);
    if (compose(g, f).is_invertible()) return f;
  }
  return std::nullopt;
}

std::vector<Summand> decompose(const Representation& M, std::uint64_t seed) {
  std::vector<Summand> out;
  if (M.is_zero()) return out;
  for (auto& p : split_indecomposable(M, seed)) {
    bool merged = false;
    for (auto& s : out)
      if (indecomposable_isomorphism(s.module, p.module, seed)) {
        ++s.multiplicity;
        s.geometric_split_warning = s.geometric_split_warning || p.geometric_split_warning;
        merged = true;
        break;
      }
    if (!merged) out.push_back({p.module, 1, p.geometric_split_warning});
  }
  std::stable_sort(out.begin(), out.end(), [](const Summand& a, const Summand& b) {
    if (a.module.total_dim() != b.module.total_dim()) return a.module.total_dim() < b.module.total_dim();
    return a.module.dims() < b.module.dims();
  });
  return out;
}

IsoResult isomorphism(const Representation& M, const Representation& N, std::uint64_t seed) {
  require_same_algebra(M, N);
  if (M.dims() != N.dims()) return {IsoStatus::NotIsomorphic, std::nullopt};
  if (M.is_zero()) return {IsoStatus::Isomorphic, identity_morphism(M)};
  auto F = hom_space(M, N);
  if (F.empty()) return {IsoStatus::NotIsomorphic, std::nullopt};
  Rng rng(seed);
  for (int t = 0; t < 4; ++t) {
    Morphism f = random_element(F, rng, 100);
    if (f.is_invertible()) return {IsoStatus::Isomorphic, f};
  }
  auto dm = decompose(M, seed);
  auto dn = decompose(N, seed);
  bool warn = false;
  for (const auto& s : dm) warn = warn || s.geometric_split_warning;
  for (const auto& s : dn) warn = warn || s.geometric_split_warning;
  std::vector<char> used(dn.size(), 0);
  bool match = dm.size() == dn.size();
  for (std::size_t a = 0; match && a < dm.size(); ++a) {
    bool found = false;
    for (std::size_t b = 0; b < dn.size() && !found; ++b) {
      if (used[b] || dm[a].multiplicity != dn[b].multiplicity) continue;
      if (indecomposable_isomorphism(dm[a].module, dn[b].module, seed)) {
        used[b] = 1;
        found = true;
      }
    }
    match = found;
  }
  if (!match) return {warn ? IsoStatus::Unknown : IsoStatus::NotIsomorphic, std::nullopt};
  for (int t = 0; t < 20; ++t) {
    Morphism f = random_element(F, rng, 10000);
    if (f.is_invertible()) return {IsoStatus::Isomorphic, f};
  }
  return {IsoStatus::Isomorphic, std::nullopt};
}

bool isomorphic(const Representation& M, const Representation& N, std::uint64_t seed) {
  return isomorphism(M, N, seed).status == IsoStatus::Isomorphic;
}

KnownSplit split_off_known(const Representation& M, const std::vector<Representation>& knowns,
                           std::uint64_t seed) {
  Rng rng(seed ^ 0x9e3779b97f4a7c15ULL);
  KnownSplit out{std::vector<std::size_t>(knowns.size(), 0), M};
  for (std::size_t k = 0; k < knowns.size(); ++k) {
    const auto& U = knowns[k];
    for (;;) {
      if (out.remainder.is_zero()) break;
      auto F = hom_space(U, out.remainder);
      if (F.empty()) break;
      auto G = hom_space(out.remainder, U);
      if (G.empty()) break;
      std::optional<Morphism> hit;
      for (int t = 0; t < 4 && !hit; ++t) {
        Morphism f = random_element(F, rng, 100);
        Morphism g = random_element(G, rng, 100);
        if (compose(g, f).is_invertible()) hit = g;
      }
      if (!hit) break;
      out.remainder = kernel(out.remainder, *hit).module;
      ++out.counts[k];
    }
  }
  return out;
}

}  // namespace bricklab
