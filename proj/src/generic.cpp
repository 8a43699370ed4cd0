#include "bricklab/generic.hpp"

#include <algorithm>
#include <numeric>

#include "bricklab/errors.hpp"

namespace bricklab {

namespace {

std::vector<std::size_t> repeat_vertices(const GVector& v) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.coords.size(); ++i)
    for (std::int64_t k = 0; k < v.coords[i]; ++k) out.push_back(i);
  return out;
}

std::vector<Rational> as_rationals(const GVector& v) {
  std::vector<Rational> out;
  for (auto c : v.coords) out.emplace_back(static_cast<long>(c));
  return out;
}

GVector primitive_same_direction(const std::vector<Rational>& x) {
  auto p = primitive_integer(x);
  int sign = 0;
  for (std::size_t i = 0; i < x.size() && sign == 0; ++i) sign = sgn(x[i]);
  GVector g;
  for (auto& c : p) g.coords.push_back((sign < 0 ? -c : c).get_si());
  return g;
}

// A summand that is indecomposable over Q only because End/rad is a field of degree d
// splits over the closure into d conjugates with equal g-vectors.
std::size_t conjugate_parts(const Representation& M, const GVector& g) {
  EndAlgebra E = end_algebra(M);
  const std::size_t d = E.top_dimension;
  if (d < 2) return 1;
  for (std::size_t a = 0; a < E.basis.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      Morphism ab = compose(E.basis[a], E.basis[b]);
      Morphism ba = compose(E.basis[b], E.basis[a]);
      if (!add(ab, scale(ba, -1)).is_zero()) return 1;
    }
  for (auto c : g.coords)
    if (c % static_cast<std::int64_t>(d) != 0) return 1;
  for (auto x : M.dims())
    if (x % d != 0) return 1;
  return d;
}

GVector zero_gvector(std::size_t n) { return GVector{std::vector<std::int64_t>(n, 0)}; }

Rational linf(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, Rational(abs(a[i] - b[i])));
  return m;
}

}  // namespace

Representation sample_cokernel(const AlgebraPtr& A, const GVector& v, std::uint64_t seed, std::int64_t entry_bound) {
  auto p0 = repeat_vertices(v.plus());
  auto p1 = repeat_vertices(v.minus());
  Representation P0 = projective_sum(A, p0);
  if (p1.empty() || p0.empty()) return P0;
  Rng rng(seed);
  std::vector<std::vector<SparseVec>> elems(p1.size(), std::vector<SparseVec>(p0.size()));
  for (std::size_t r = 0; r < p1.size(); ++r)
    for (std::size_t s = 0; s < p0.size(); ++s)
      for (std::size_t k : A->paths_between(p0[s], p1[r])) {
        auto c = draw_int(rng, entry_bound);
        if (c != 0) elems[r][s].emplace_back(k, Rational(static_cast<long>(c)));
      }
  Morphism f = projective_sum_map(A, p1, p0, elems);
  return cokernel(P0, f).module;
}

CanonicalDecomposition canonical_decomposition_sample(const AlgebraPtr& A, const GVector& v, std::size_t trials,
                                                      std::uint64_t seed, std::int64_t entry_bound) {
  CanonicalDecomposition best;
  bool have = false;
  for (std::size_t t = 0; t < std::max<std::size_t>(trials, 1); ++t) {
    Representation Z = sample_cokernel(A, v, seed + t, entry_bound);
    CanonicalDecomposition cur;
    cur.trial = t;
    GVector sum = zero_gvector(A->num_vertices());
    for (const auto& s : decompose(Z, seed + t)) {
      GVector g = g_vector(s.module);
      std::size_t parts = 1;
      if (s.geometric_split_warning) {
        parts = conjugate_parts(s.module, g);
        if (parts > 1) {
          cur.geometric_splits += s.multiplicity;
          for (auto& c : g.coords) c /= static_cast<std::int64_t>(parts);
        } else {
          cur.unresolved = true;
        }
      }
      for (std::size_t m = 0; m < s.multiplicity * parts; ++m) {
        cur.summands.push_back(g);
        sum = sum + g;
      }
    }
    std::sort(cur.summands.begin(), cur.summands.end());
    cur.residual = v - sum;
    if (!have || cur.summands.size() > best.summands.size()) {
      best = std::move(cur);
      have = true;
    }
  }
  return best;
}

GenericSampleReport generic_invariants(const AlgebraPtr& A, const GVector& v, std::size_t trials, std::uint64_t seed,
                                       std::int64_t entry_bound) {
  trials = std::max<std::size_t>(trials, 1);
  GenericSampleReport rep;
  rep.g_vector = v;
  rep.trials = trials;
  rep.seed = seed;
  rep.entry_bound = entry_bound;
  std::vector<Representation> Z;
  std::vector<Representation> tZ;
  for (std::size_t t = 0; t < trials; ++t) {
    Z.push_back(sample_cokernel(A, v, seed + t, entry_bound));
    tZ.push_back(tau(Z.back()));
  }
  for (std::size_t t = 0; t < trials; ++t) {
    if (t == 0 || Z[t].total_dim() < Z[rep.d_witness].total_dim()) rep.d_witness = t;
    std::size_t h = hom_dim(Z[t], tZ[t]);
    if (t == 0 || h < rep.h_min) rep.h_min = h, rep.h_witness = t;
    std::size_t e = Z[t].is_zero() ? 0 : hom_dim(Z[t], Z[t]);
    if (t == 0 || e < rep.end_min) rep.end_min = e, rep.end_witness = t;
  }
  rep.d_vector = Z[rep.d_witness].dims();
  bool first = true;
  for (std::size_t a = 0; a < trials; ++a)
    for (std::size_t b = 0; b < trials; ++b) {
      std::size_t e = hom_dim(Z[a], tZ[b]);
      if (first || e < rep.e_min) rep.e_min = e, rep.e_witness = {a, b};
      first = false;
    }
  rep.decomposition = canonical_decomposition_sample(A, v, trials, seed, entry_bound);
  return rep;
}

Rational QuadraticForm::eval(const std::vector<Rational>& x) const {
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (cartan[i][j] != 0) s += x[i] * Rational(static_cast<long>(cartan[i][j])) * x[j];
  return s;
}

Rational QuadraticForm::eval(const GVector& v) const { return eval(as_rationals(v)); }

Rational QuadraticForm::eval_normalized(const GVector& v) const {
  if (v.is_zero()) throw Error(ErrorKind::ZeroVector, "cannot normalize the zero vector");
  Rational l = Rational(static_cast<long>(v.l1()));
  return eval(v) / (l * l);
}

QuadraticForm qform(const AlgebraPtr& A) {
  QuadraticForm q;
  q.cartan = A->cartan();
  const std::size_t n = q.cartan.size();
  q.symmetrized.assign(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) q.symmetrized[i][j] = q.cartan[i][j] + q.cartan[j][i];
  return q;
}

std::vector<GVector> hq_nullspace(const AlgebraPtr& A) {
  auto q = qform(A);
  const std::size_t n = q.cartan.size();
  Matrix S(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) S(i, j) = Rational(static_cast<long>(q.symmetrized[i][j]));
  Matrix K = nullspace(S);
  std::vector<GVector> out;
  for (std::size_t c = 0; c < K.cols(); ++c) {
    GVector g;
    for (auto& x : primitive_integer(K.column_vector(c))) g.coords.push_back(x.get_si());
    out.push_back(std::move(g));
  }
  return out;
}

ConvergenceProbe tau_convergence_probe(const AlgebraPtr& A, const FanSnapshot& snapshot) {
  auto q = qform(A);
  ConvergenceProbe probe;
  std::vector<GVector> rays;
  for (const auto& c : snapshot.cones)
    for (const auto& s : c.slots)
      if (!s.in_projective_part) rays.push_back(s.ray);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  std::stable_sort(rays.begin(), rays.end(), [](const GVector& a, const GVector& b) { return a.l1() < b.l1(); });
  for (const auto& r : rays) {
    Rational v = q.eval_normalized(r);
    probe.sequence.emplace_back(r, v);
    if (!probe.infimum || v < *probe.infimum) probe.infimum = v;
  }

  // single-linkage clusters of normalized rays
  const std::size_t m = rays.size();
  std::vector<std::vector<Rational>> pts;
  for (const auto& r : rays) pts.push_back(r.normalized());
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (linf(pts[a], pts[b]) < kClusterTolerance) parent[find(a)] = find(b);
  std::map<std::size_t, std::vector<std::size_t>> clusters;
  for (std::size_t a = 0; a < m; ++a) clusters[find(a)].push_back(a);
  std::vector<GVector> seen;
  for (auto& [root, members] : clusters) {
    if (members.size() < 2) continue;
    std::vector<std::int64_t> norms;
    for (auto a : members) norms.push_back(rays[a].l1());
    std::sort(norms.begin(), norms.end());
    const std::int64_t median = norms[norms.size() / 2];
    std::vector<Rational> lo, hi;
    for (auto a : members) {
      if (rays[a].l1() < median) continue;
      if (lo.empty()) {
        lo = hi = pts[a];
        continue;
      }
      for (std::size_t i = 0; i < lo.size(); ++i) {
        lo[i] = std::min(lo[i], pts[a][i]);
        hi[i] = std::max(hi[i], pts[a][i]);
      }
    }
    std::vector<Rational> x(lo.size());
    bool nonzero = false;
    for (std::size_t i = 0; i < lo.size(); ++i) {
      x[i] = simplest_between(lo[i], hi[i]);
      nonzero = nonzero || x[i] != 0;
    }
    if (!nonzero) continue;
    GVector g = primitive_same_direction(x);
    if (std::find(seen.begin(), seen.end(), g) != seen.end()) continue;
    seen.push_back(g);
    probe.limit_candidates.push_back(g.normalized());
  }
  return probe;
}

std::string source_name(CandidateSource s) {
  return s == CandidateSource::NullSpace ? "NullSpace" : "ConvergenceLimit";
}

std::vector<CandidateRay> outside_fan_candidates(const AlgebraPtr& A, const FanSnapshot& snapshot) {
  auto q = qform(A);
  std::vector<CandidateRay> out;
  auto add = [&](const GVector& g, CandidateSource src) {
    for (auto& c : out)
      if (c.vector == g) {
        c.sources.push_back(src);
        return;
      }
    CandidateRay c;
    c.vector = g;
    c.q_value = q.eval(g);
    c.membership = fan_membership(g, snapshot);
    c.sources.push_back(src);
    out.push_back(std::move(c));
  };
  for (const auto& g : hq_nullspace(A)) add(g, CandidateSource::NullSpace);
  for (const auto& x : tau_convergence_probe(A, snapshot).limit_candidates)
    add(primitive_same_direction(x), CandidateSource::ConvergenceLimit);
  return out;
}

bool is_faithful_tilting_pd1(const SttPair& pair) {
  if (!pair.projective_part().empty()) return false;
  auto mods = pair.modules();
  for (const auto& T : mods) {
    auto pd = proj_dimension(T, 1);
    if (!pd) return false;
  }
  return joint_annihilator(mods).dim() == 0;
}

std::vector<ChamberViolation> chamber_positivity_check(const AlgebraPtr& A, const FanSnapshot& snapshot) {
  auto q = qform(A);
  std::vector<ChamberViolation> bad;
  for (std::size_t c = 0; c < snapshot.cones.size(); ++c) {
    GVector sum = zero_gvector(A->num_vertices());
    for (const auto& r : snapshot.cones[c].rays()) sum = sum + r;
    Rational v = q.eval(sum);
    if (sgn(v) <= 0) bad.push_back({c, v, is_faithful_tilting_pd1(snapshot.cones[c])});
  }
  return bad;
}

FaithfulSum build_faithful_sum(const AlgebraPtr& A, const GVector& v, std::size_t max_terms, std::uint64_t seed,
                               std::int64_t entry_bound) {
  FaithfulSum out;
  out.annihilator = joint_annihilator({Representation::zero(A)});
  std::size_t next = 0;
  auto round = [&]() {
    bool shrunk = false;
    for (std::size_t k = 0; k < std::max<std::size_t>(max_terms, 1) && out.annihilator.dim() > 0; ++k, ++next) {
      Representation Z = sample_cokernel(A, v, seed + next, entry_bound);
      auto terms = out.terms;
      terms.push_back(Z);
      TwoSidedIdeal ann = joint_annihilator(terms);
      if (ann.dim() < out.annihilator.dim()) {
        out.terms = std::move(terms);
        out.trials.push_back(next);
        out.annihilator = std::move(ann);
        shrunk = true;
      }
    }
    return shrunk;
  };
  round();
  // confirmation rounds until the annihilator is stable
  while (out.annihilator.dim() > 0 && round()) {
  }
  out.faithful = out.annihilator.dim() == 0;
  return out;
}

ImageBrick minimal_image_brick(const Representation& Z, std::uint64_t seed) {
  Representation tZ = tau(Z);
  auto H = tZ.is_zero() ? std::vector<Morphism>{} : hom_space(Z, tZ);
  if (H.empty()) throw Error(ErrorKind::TauRigidInput, "Hom(Z, tau Z) = 0");
  std::vector<Morphism> cands = H;
  Rng rng(seed);
  for (int t = 0; t < 12; ++t) {
    std::vector<Rational> c(H.size());
    for (auto& x : c) x = Rational(static_cast<long>(draw_int(rng, 3)));
    cands.push_back(combination(H, c));
  }
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i < cands.size(); ++i)
    if (!cands[i].is_zero()) order.emplace_back(cands[i].rank(), i);
  std::stable_sort(order.begin(), order.end());
  for (auto [r, i] : order) {
    Image im = image(Z, tZ, cands[i]);
    if (is_brick(im.module)) return {im.module, cands[i]};
  }
  throw Error(ErrorKind::SearchExhausted, "no image of a map Z -> tau Z is a brick");
}

std::vector<EndSurveyRow> end_dimension_survey(const FanSnapshot& snapshot) {
  std::vector<EndSurveyRow> out;
  for (const auto& T : tau_rigid_modules(snapshot)) out.push_back({g_vector(T), T.total_dim(), hom_dim(T, T)});
  return out;
}

}  // namespace bricklab
