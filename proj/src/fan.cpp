#include "bricklab/fan.hpp"

#include <algorithm>

#include "bricklab/errors.hpp"

namespace bricklab {

namespace {

std::vector<Rational> to_rationals(const GVector& g) {
  std::vector<Rational> out;
  out.reserve(g.coords.size());
  for (auto c : g.coords) out.emplace_back(static_cast<long>(c));
  return out;
}

Matrix ray_matrix(const std::vector<GVector>& rays, std::size_t n) {
  Matrix R(n, rays.size());
  for (std::size_t c = 0; c < rays.size(); ++c)
    for (std::size_t r = 0; r < n; ++r) R(r, c) = Rational(static_cast<long>(rays[c].coords[r]));
  return R;
}

Slot module_slot(Representation M, GVector g) {
  Slot s;
  s.module = std::move(M);
  s.ray = std::move(g);
  return s;
}

Slot projective_slot(const AlgebraPtr& A, std::size_t v) {
  Slot s;
  s.in_projective_part = true;
  s.vertex = v;
  s.module = Representation::zero(A);
  s.ray = -unit_gvector(A->num_vertices(), v);
  return s;
}

SttPair from_slots(const AlgebraPtr& A, std::vector<Slot> slots) {
  std::sort(slots.begin(), slots.end(), [](const Slot& a, const Slot& b) { return a.ray < b.ray; });
  return SttPair{A, std::move(slots)};
}

// Same quiver and relations, other pointer: the double opposite comes back as a fresh object.
Representation rebase(const Representation& M, const AlgebraPtr& A) {
  return Representation(A, M.dims(), M.mats(), false);
}

std::optional<std::size_t> unit_index(const GVector& g) {
  std::optional<std::size_t> at;
  for (std::size_t i = 0; i < g.coords.size(); ++i) {
    if (g.coords[i] == 0) continue;
    if (g.coords[i] != 1 || at) return std::nullopt;
    at = i;
  }
  return at;
}

// (M, P) over A  ->  (Tr M_np + P^op, M_pr) over A^op; rays negate.
SttPair dual_pair(const SttPair& pair, const AlgebraPtr& target) {
  std::vector<Slot> slots;
  for (const auto& s : pair.slots) {
    if (s.in_projective_part) {
      slots.push_back(module_slot(projective(target, s.vertex), unit_gvector(target->num_vertices(), s.vertex)));
    } else if (auto j = unit_index(s.ray)) {
      slots.push_back(projective_slot(target, *j));
    } else {
      Representation t = transpose(s.module);
      if (t.algebra().get() != target.get()) t = rebase(t, target);
      slots.push_back(module_slot(std::move(t), -s.ray));
    }
  }
  return from_slots(target, std::move(slots));
}

std::size_t slot_with_ray(const SttPair& pair, const GVector& ray) {
  for (std::size_t k = 0; k < pair.slots.size(); ++k)
    if (pair.slots[k].ray == ray) return k;
  throw Error(ErrorKind::MutationFailed, "exchanged summand lost in duality");
}

std::vector<Morphism> maps_from_others(const SttPair& pair, std::size_t index) {
  const auto& X = pair.slots[index].module;
  std::vector<Morphism> maps;
  for (std::size_t k = 0; k < pair.slots.size(); ++k) {
    if (k == index || pair.slots[k].in_projective_part) continue;
    for (auto& f : hom_space(pair.slots[k].module, X)) maps.push_back(std::move(f));
  }
  return maps;
}

bool generated_by_others(const SttPair& pair, std::size_t index) {
  const auto& X = pair.slots[index].module;
  auto span = sum_of_images(X, maps_from_others(pair, index));
  std::size_t d = 0;
  for (const auto& b : span) d += b.cols();
  return d == X.total_dim();
}

Representation edge_label(const SttPair& upper, std::size_t index) {
  Quotient q = quotient_by_radical_maps(upper.slots[index].module, maps_from_others(upper, index));
  if (!is_brick(q.module)) throw Error(ErrorKind::PostconditionViolated, "edge label is not a brick");
  return q.module;
}

// Left mutation at a module slot X not generated by the remaining modules U.
SttPair left_mutation(const SttPair& pair, std::size_t index) {
  const AlgebraPtr& A = pair.algebra;
  const auto& X = pair.slots[index].module;
  std::vector<Representation> U;
  std::vector<Representation> targets;
  std::vector<Morphism> comps;
  std::vector<Slot> kept;
  for (std::size_t k = 0; k < pair.slots.size(); ++k) {
    if (k == index) continue;
    kept.push_back(pair.slots[k]);
    if (pair.slots[k].in_projective_part) continue;
    U.push_back(pair.slots[k].module);
    for (auto& f : hom_space(X, pair.slots[k].module)) {
      targets.push_back(pair.slots[k].module);
      comps.push_back(std::move(f));
    }
  }
  Representation rest = Representation::zero(A);
  if (!targets.empty()) {
    Representation T = direct_sum(targets);
    Morphism f;
    for (std::size_t i = 0; i < A->num_vertices(); ++i) {
      Matrix b(0, X.dim(i));
      for (const auto& c : comps) b = vstack(b, c.blocks[i]);
      f.blocks.push_back(std::move(b));
    }
    Representation Y = cokernel(T, f).module;
    rest = split_off_known(Y, U).remainder;
  }
  if (!rest.is_zero()) {
    GVector g = g_vector(rest);
    kept.push_back(module_slot(std::move(rest), std::move(g)));
    return from_slots(A, std::move(kept));
  }
  // support reduction: the one vertex outside the support of U and outside P
  std::vector<std::size_t> free;
  for (std::size_t v = 0; v < A->num_vertices(); ++v) {
    bool used = false;
    for (const auto& s : kept)
      used = used || (s.in_projective_part ? s.vertex == v : s.module.dim(v) != 0);
    if (!used) free.push_back(v);
  }
  if (free.size() != 1) throw Error(ErrorKind::MutationFailed, "support reduction is not unique");
  kept.push_back(projective_slot(A, free.front()));
  return from_slots(A, std::move(kept));
}

SttCheck verify(const SttPair& pair, TauCache& cache) {
  const AlgebraPtr& A = pair.algebra;
  const std::size_t n = A->num_vertices();
  if (pair.slots.size() != n) return {false, "count: |M| + |P| != n"};
  std::vector<GVector> rays = pair.rays();
  if (determinant(ray_matrix(rays, n)) == 0) return {false, "rays are linearly dependent"};
  for (const auto& s : pair.slots) {
    if (s.in_projective_part) continue;
    if (s.module.is_zero()) return {false, "zero summand"};
    if (!is_indecomposable(s.module)) return {false, "summand is not indecomposable"};
  }
  for (const auto& a : pair.slots)
    for (const auto& b : pair.slots)
      if (!cache.compatible(a, b)) {
        if (a.in_projective_part || b.in_projective_part) return {false, "Hom(P, M) != 0"};
        return {false, "Hom(M, tau M) != 0"};
      }
  return {true, {}};
}

}  // namespace

std::vector<GVector> SttPair::rays() const {
  std::vector<GVector> out;
  for (const auto& s : slots) out.push_back(s.ray);
  return out;
}

std::vector<Representation> SttPair::modules() const {
  std::vector<Representation> out;
  for (const auto& s : slots)
    if (!s.in_projective_part) out.push_back(s.module);
  return out;
}

std::vector<std::size_t> SttPair::projective_part() const {
  std::vector<std::size_t> out;
  for (const auto& s : slots)
    if (s.in_projective_part) out.push_back(s.vertex);
  return out;
}

std::vector<std::vector<std::int64_t>> SttPair::key() const {
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& s : slots) out.push_back(s.ray.coords);
  return out;
}

const Representation& TauCache::tau_of(const Representation& M, const GVector& g) {
  auto key = std::make_pair(M.algebra().get(), g.coords);
  auto it = tau_.find(key);
  if (it == tau_.end()) it = tau_.emplace(key, tau(M)).first;
  return it->second;
}

bool TauCache::compatible(const Slot& a, const Slot& b) {
  // repeated projective vertices show up as dependent rays
  if (a.in_projective_part && b.in_projective_part) return true;
  if (a.in_projective_part) return b.module.dim(a.vertex) == 0;
  if (b.in_projective_part) return a.module.dim(b.vertex) == 0;
  auto key = std::make_tuple(a.module.algebra().get(), a.ray.coords, b.ray.coords);
  auto it = hom_.find(key);
  if (it != hom_.end()) return it->second;
  const Representation& t = tau_of(b.module, b.ray);
  bool ok = t.is_zero() || hom_dim(a.module, t) == 0;
  hom_.emplace(key, ok);
  return ok;
}

SttCheck is_stt_pair(const AlgebraPtr& A, const std::vector<Representation>& M,
                     const std::vector<std::size_t>& P) {
  const std::size_t n = A->num_vertices();
  if (M.size() + P.size() != n) return {false, "count: |M| + |P| != n"};
  for (std::size_t a = 0; a < P.size(); ++a) {
    if (P[a] >= n) return {false, "projective vertex out of range"};
    for (std::size_t b = 0; b < a; ++b)
      if (P[a] == P[b]) return {false, "P is not basic"};
  }
  for (const auto& X : M) {
    if (X.algebra().get() != A.get()) require_same_algebra(X, Representation::zero(A));
    if (X.is_zero()) return {false, "zero summand"};
    if (!is_indecomposable(X)) return {false, "summand is not indecomposable"};
  }
  for (std::size_t a = 0; a < M.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      if (M[a].dims() == M[b].dims() && indecomposable_isomorphism(M[a], M[b])) return {false, "M is not basic"};
  std::vector<Representation> taus;
  for (const auto& X : M) taus.push_back(tau(X));
  for (const auto& X : M)
    for (const auto& t : taus)
      if (!t.is_zero() && hom_dim(X, t) != 0) return {false, "Hom(M, tau M) != 0"};
  for (auto v : P)
    for (const auto& X : M)
      if (X.dim(v) != 0) return {false, "Hom(P, M) != 0"};
  return {true, {}};
}

SttCheck is_stt_pair(const SttPair& pair) { return is_stt_pair(pair.algebra, pair.modules(), pair.projective_part()); }

SttPair make_pair(const AlgebraPtr& A, const std::vector<Representation>& M, const std::vector<std::size_t>& P) {
  std::vector<Slot> slots;
  for (const auto& X : M) slots.push_back(module_slot(X, g_vector(X)));
  for (auto v : P) slots.push_back(projective_slot(A, v));
  return from_slots(A, std::move(slots));
}

SttPair initial_pair(const AlgebraPtr& A) {
  std::vector<Representation> P;
  for (std::size_t j = 0; j < A->num_vertices(); ++j) P.push_back(projective(A, j));
  return make_pair(A, P, {});
}

Mutation mutate_with_label(const SttPair& pair, std::size_t index, TauCache* cache) {
  if (index >= pair.slots.size()) throw Error(ErrorKind::MutationFailed, "slot index out of range");
  TauCache local;
  TauCache& c = cache ? *cache : local;
  const AlgebraPtr& A = pair.algebra;
  const Slot& old = pair.slots[index];
  Mutation out;
  out.left = !old.in_projective_part && !generated_by_others(pair, index);
  if (out.left) {
    out.pair = left_mutation(pair, index);
  } else {
    AlgebraPtr op = A->opposite();
    SttPair d = dual_pair(pair, op);
    std::size_t k = slot_with_ray(d, -old.ray);
    if (d.slots[k].in_projective_part || generated_by_others(d, k))
      throw Error(ErrorKind::MutationFailed, "dual summand admits no left mutation");
    SttPair dm = left_mutation(d, k);
    out.pair = dual_pair(dm, A);
  }
  std::size_t common = 0;
  for (const auto& s : out.pair.slots)
    for (std::size_t k = 0; k < pair.slots.size(); ++k)
      if (k != index && pair.slots[k].ray == s.ray) ++common;
  if (common != pair.slots.size() - 1 || out.pair.key() == pair.key())
    throw Error(ErrorKind::MutationFailed, "result is not an exchange at the given slot");
  for (std::size_t k = 0; k < out.pair.slots.size(); ++k) {
    bool shared = false;
    for (std::size_t j = 0; j < pair.slots.size(); ++j) shared = shared || (j != index && pair.slots[j].ray == out.pair.slots[k].ray);
    if (!shared) out.new_index = k;
  }
  auto check = verify(out.pair, c);
  if (!check.ok) throw Error(ErrorKind::MutationFailed, "completion fails verification: " + check.failure);
  out.label = out.left ? edge_label(pair, index) : edge_label(out.pair, out.new_index);
  return out;
}

SttPair mutate(const SttPair& pair, std::size_t index) { return mutate_with_label(pair, index).pair; }

bool same_pair(const SttPair& a, const SttPair& b) {
  if (a.key() != b.key()) return false;
  for (std::size_t k = 0; k < a.slots.size(); ++k) {
    if (a.slots[k].in_projective_part != b.slots[k].in_projective_part) return false;
    if (a.slots[k].in_projective_part) {
      if (a.slots[k].vertex != b.slots[k].vertex) return false;
    } else if (!indecomposable_isomorphism(a.slots[k].module, b.slots[k].module)) {
      return false;
    }
  }
  return true;
}

FanSnapshot enumerate_fan(const AlgebraPtr& A, std::size_t max_steps, const LabelObserver& observer) {
  FanSnapshot snap;
  snap.algebra = A;
  TauCache cache;
  std::map<std::vector<std::vector<std::int64_t>>, std::size_t> ids;
  std::vector<std::vector<std::optional<std::size_t>>> neighbour;
  auto add_cone = [&](SttPair p) {
    ids.emplace(p.key(), snap.cones.size());
    neighbour.emplace_back(p.size());
    snap.cones.push_back(std::move(p));
    return snap.cones.size() - 1;
  };
  bool truncated = false;
  bool stopped = false;
  std::vector<std::size_t> level{add_cone(initial_pair(A))};
  if (max_steps == 0) truncated = true;
  while (!level.empty() && !truncated && !stopped) {
    std::vector<std::size_t> next;
    for (std::size_t id : level) {
      for (std::size_t k = 0; k < snap.cones[id].size() && !truncated && !stopped; ++k) {
        if (neighbour[id][k]) continue;
        Mutation mu = mutate_with_label(snap.cones[id], k, &cache);
        auto it = ids.find(mu.pair.key());
        std::size_t other;
        if (it != ids.end()) {
          other = it->second;
        } else {
          if (snap.cones.size() >= max_steps) {
            truncated = true;
            break;
          }
          other = add_cone(std::move(mu.pair));
          next.push_back(other);
        }
        neighbour[id][k] = other;
        neighbour[other][mu.new_index] = id;
        snap.edges.push_back({id, other, k, mu.left ? id : other, mu.label});
        if (observer && !observer(snap.edges.back().label)) stopped = true;
      }
      if (truncated || stopped) break;
    }
    std::sort(next.begin(), next.end(),
              [&](std::size_t a, std::size_t b) { return snap.cones[a].key() < snap.cones[b].key(); });
    level = std::move(next);
  }
  snap.complete = !truncated && !stopped;
  snap.steps_used = snap.cones.size();
  std::vector<GVector> rays;
  for (const auto& c : snap.cones)
    for (const auto& s : c.slots) rays.push_back(s.ray);
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  snap.rays = std::move(rays);
  return snap;
}

Membership fan_membership(const std::vector<Rational>& v, const FanSnapshot& snapshot) {
  const std::size_t n = snapshot.algebra->num_vertices();
  for (std::size_t c = 0; c < snapshot.cones.size(); ++c) {
    auto inv = inverse(ray_matrix(snapshot.cones[c].rays(), n));
    if (!inv) continue;
    std::vector<Rational> coeffs(n);
    bool ok = true;
    for (std::size_t r = 0; r < n && ok; ++r) {
      for (std::size_t k = 0; k < n; ++k) coeffs[r] += (*inv)(r, k) * v[k];
      ok = sgn(coeffs[r]) >= 0;
    }
    if (ok) return {true, c, coeffs};
  }
  return {};
}

Membership fan_membership(const GVector& v, const FanSnapshot& snapshot) {
  return fan_membership(to_rationals(v), snapshot);
}

std::vector<Representation> tau_rigid_modules(const FanSnapshot& snapshot) {
  std::map<std::vector<std::int64_t>, Representation> by_ray;
  for (const auto& c : snapshot.cones)
    for (const auto& s : c.slots)
      if (!s.in_projective_part) by_ray.emplace(s.ray.coords, s.module);
  std::vector<Representation> out;
  for (auto& [g, M] : by_ray) out.push_back(M);
  return out;
}

BrickFiniteness is_brick_finite(const AlgebraPtr& A, std::size_t max_steps) {
  FanSnapshot snap = enumerate_fan(A, max_steps);
  BrickFiniteness out;
  out.steps_used = snap.steps_used;
  if (!snap.complete) return out;
  out.finite = true;
  for (const auto& X : tau_rigid_modules(snap)) out.bricks.push_back(brick_label(X));
  std::stable_sort(out.bricks.begin(), out.bricks.end(), [](const Representation& a, const Representation& b) {
    if (a.total_dim() != b.total_dim()) return a.total_dim() < b.total_dim();
    return a.dims() < b.dims();
  });
  return out;
}

LrdResult is_locally_rep_directed(const AlgebraPtr& A, std::size_t max_steps) {
  LrdResult out;
  std::vector<Representation> checked;
  auto observer = [&](const Representation& B) {
    for (const auto& C : checked)
      if (C.dims() == B.dims() && indecomposable_isomorphism(C, B)) return true;
    if (!is_tau_rigid(B)) {
      out.witness = B;
      return false;
    }
    checked.push_back(B);
    return true;
  };
  FanSnapshot snap = enumerate_fan(A, max_steps, observer);
  out.steps_used = snap.steps_used;
  if (out.witness) {
    out.value = Tristate::False;
    return out;
  }
  if (!snap.complete) return out;
  for (const auto& X : tau_rigid_modules(snap)) {
    Representation B = brick_label(X);
    if (!is_tau_rigid(B)) {
      out.value = Tristate::False;
      out.witness = B;
      return out;
    }
  }
  out.value = Tristate::True;
  return out;
}

}  // namespace bricklab
