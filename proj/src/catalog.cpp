#include "bricklab/catalog.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "bricklab/errors.hpp"

namespace bricklab {

namespace {

Json arrow(const std::string& name, const std::string& from, const std::string& to) {
  return {{"name", name}, {"from", from}, {"to", to}};
}

Json monomial(std::vector<std::string> path) { return Json::array({{{"coeff", "1"}, {"path", path}}}); }

Json make_algebra(std::vector<std::string> vertices, Json arrows, Json relations = Json::array()) {
  Json j;
  j["vertices"] = vertices;
  j["arrows"] = arrows;
  j["relations"] = relations;
  return j;
}

Json preprojective_a5() {
  std::vector<std::string> v{"1", "2", "3", "4", "5"};
  Json arrows = Json::array();
  for (int i = 1; i <= 4; ++i) {
    arrows.push_back(arrow("a" + std::to_string(i), std::to_string(i), std::to_string(i + 1)));
    arrows.push_back(arrow("b" + std::to_string(i), std::to_string(i + 1), std::to_string(i)));
  }
  Json rels = Json::array();
  rels.push_back(monomial({"a1", "b1"}));
  for (int i = 2; i <= 4; ++i) {
    std::string s = std::to_string(i), p = std::to_string(i - 1);
    rels.push_back(Json::array({{{"coeff", "1"}, {"path", {"a" + s, "b" + s}}},
                                {{"coeff", "-1"}, {"path", {"b" + p, "a" + p}}}}));
  }
  rels.push_back(monomial({"b4", "a4"}));
  return make_algebra(v, arrows, rels);
}

const std::map<std::string, std::function<Json()>>& registry() {
  static const std::map<std::string, std::function<Json()>> r{
      {"point", [] { return make_algebra({"1"}, Json::array()); }},
      {"a2", [] { return make_algebra({"1", "2"}, Json::array({arrow("a", "1", "2")})); }},
      {"kronecker",
       [] { return make_algebra({"1", "2"}, Json::array({arrow("a", "1", "2"), arrow("b", "1", "2")})); }},
      {"two_cycle_I",
       [] {
         return make_algebra({"1", "2"}, Json::array({arrow("alpha", "1", "2"), arrow("beta", "2", "1")}),
                             Json::array({monomial({"alpha", "beta"}), monomial({"beta", "alpha"})}));
       }},
      {"two_cycle_J",
       [] {
         return make_algebra({"1", "2"}, Json::array({arrow("alpha", "1", "2"), arrow("beta", "2", "1")}),
                             Json::array({monomial({"alpha", "beta", "alpha"}), monomial({"beta", "alpha", "beta"})}));
       }},
      {"preprojective_a5", preprojective_a5},
      {"string_band",
       [] {
         return make_algebra({"1", "2", "3"},
                             Json::array({arrow("a1", "1", "2"), arrow("a2", "1", "2"), arrow("b", "2", "3")}),
                             Json::array({monomial({"a1", "b"}), monomial({"a2", "b"})}));
       }},
      {"localx2",
       [] { return make_algebra({"1"}, Json::array({arrow("x", "1", "1")}), Json::array({monomial({"x", "x"})})); }},
      {"gentle_b",
       [] {
         return make_algebra({"y1", "y2", "y3", "y4"},
                             Json::array({arrow("b1", "y1", "y2"), arrow("b2", "y1", "y3"), arrow("b3", "y2", "y4"),
                                          arrow("b4", "y3", "y4")}),
                             Json::array({monomial({"b1", "b3"}), monomial({"b2", "b4"})}));
       }},
      {"glued_example", [] { return algebra_to_json(*glued_example().algebra); }},
  };
  return r;
}

Representation one_dim_arrows(const AlgebraPtr& A, std::vector<std::size_t> dims,
                              const std::vector<std::pair<std::string, Rational>>& entries) {
  std::vector<Matrix> mats;
  for (const auto& a : A->quiver().arrows) mats.emplace_back(dims[a.to], dims[a.from]);
  for (const auto& [name, value] : entries) mats[A->quiver().arrow_index(name)](0, 0) = value;
  return Representation(A, std::move(dims), std::move(mats));
}

std::string dims_text(const std::vector<std::size_t>& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s + ")";
}

struct Recorder {
  CaseResult& r;
  void published(const std::string& name, const std::string& ref, bool ok, std::string detail = {}) {
    r.assertions.push_back({name, "published", ref, ok, std::move(detail)});
  }
  void computed(const std::string& name, const std::string& oracle, bool ok, std::string detail = {}) {
    r.assertions.push_back({name, "computed", oracle, ok, std::move(detail)});
  }
  void immediate(const std::string& name, bool ok, std::string detail = {}) {
    r.assertions.push_back({name, "immediate", "", ok, std::move(detail)});
  }
};

const char* tri(Tristate t) { return t == Tristate::True ? "True" : t == Tristate::False ? "False" : "Unknown"; }

void case_two_cycle_i(Recorder& rec, const RunOptions&) {
  auto A = bundled_algebra("two_cycle_I");
  auto r = is_locally_rep_directed(A);
  rec.published("locally representation-directed", "two-cycle algebra, ideal <alpha beta, beta alpha>",
                r.value == Tristate::True, tri(r.value));
  rec.computed("fan is complete", "unit fan: two_cycle_I_fan", is_brick_finite(A).finite);
}

void case_two_cycle_j(Recorder& rec, const RunOptions&) {
  auto A = bundled_algebra("two_cycle_J");
  auto r = is_locally_rep_directed(A);
  rec.published("not locally representation-directed", "two-cycle algebra, ideal <alpha beta alpha, beta alpha beta>",
                r.value == Tristate::False, tri(r.value));
  bool have = r.witness.has_value();
  rec.published("witness brick is not tau-rigid", "two-cycle algebra with cubic relations",
                have && is_brick(*r.witness) && !is_tau_rigid(*r.witness),
                have ? "witness dims " + dims_text(r.witness->dims()) : "no witness");
}

void case_preprojective(Recorder& rec, const RunOptions&) {
  auto A = bundled_algebra("preprojective_a5");
  auto M = preprojective_example_module(A);
  std::size_t e = hom_dim(M, M);
  std::size_t h = hom_tau_dim(M, M);
  rec.published("dim End(M) = 1", "preprojective algebra of type A5, module with b1 = a2 = 1", e == 1,
                "dim End = " + std::to_string(e));
  rec.published("Hom(M, tau M) != 0", "preprojective algebra of type A5, module with b1 = a2 = 1", h >= 1,
                "dim Hom(M, tau M) = " + std::to_string(h));
  rec.computed("algebra dimension 35", "unit algebra: preprojective_dimension", A->dim() == 35,
               "dim = " + std::to_string(A->dim()));
}

void case_band(Recorder& rec, const RunOptions& opts) {
  auto A = bundled_algebra("string_band");
  const std::vector<Rational> lambdas{Rational(1), Rational(2), Rational(-1), Rational(1, 2), Rational(3)};
  std::vector<Representation> M;
  for (const auto& l : lambdas) M.push_back(band_module(A, l));
  bool bricks = true, pd2 = true, ann = true;
  for (const auto& X : M) {
    bricks = bricks && is_brick(X);
    auto pd = proj_dimension(X);
    pd2 = pd2 && pd && *pd == 2;
    ann = ann && ideal_contains(annihilator(X), SparseVec{{A->idempotent(2), Rational(1)}});
  }
  bool distinct = true;
  for (std::size_t a = 0; a < M.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) distinct = distinct && hom_dim(M[a], M[b]) == 0;
  rec.published("band modules are bricks", "string algebra with relations beta alpha_1, beta alpha_2", bricks);
  rec.computed("band modules pairwise non-isomorphic", "unit replab: band_family_orthogonal", distinct,
               "5 parameters, Hom between distinct ones vanishes");
  rec.published("projective dimension 2", "string algebra band family", pd2);
  rec.published("annihilator contains e3", "string algebra band family", ann);
  auto fs = build_faithful_sum(A, GVector{{1, -1, 0}}, 4, opts.seed, opts.entry_bound);
  bool e3 = ideal_contains(fs.annihilator, SparseVec{{A->idempotent(2), Rational(1)}});
  rec.published("component is not faithful", "string algebra band family", !fs.faithful && e3,
                fs.faithful ? "Faithful" : "NotFaithfulComponent, annihilator dim " + std::to_string(fs.annihilator.dim()));
}

void case_gluing(Recorder& rec, const RunOptions&) {
  auto g = glued_example();
  const auto& L = g.algebra;
  rec.published("glued algebra has dimension 11", "Kronecker glued to the gentle algebra", L->dim() == 11,
                "dim = " + std::to_string(L->dim()));
  rec.published("glued algebra has rank 5", "Kronecker glued to the gentle algebra", L->num_vertices() == 5);
  auto gl = global_dimension(L);
  rec.published("global dimension 3", "Kronecker glued to the gentle algebra", gl && *gl == 3,
                gl ? "gldim = " + std::to_string(*gl) : "above bound");
  rec.published("left factor has dimension 4", "Kronecker algebra", g.left->dim() == 4);
  auto glb = global_dimension(g.right);
  rec.published("gentle factor: dimension 8, global dimension 2", "gentle algebra with two quadratic relations",
                g.right->dim() == 8 && glb && *glb == 2);
  rec.computed("dim = dim A + dim B - 1", "unit gluing: dimension_formula", L->dim() + 1 == g.left->dim() + g.right->dim());
}

void case_kronecker(Recorder& rec, const RunOptions& opts) {
  auto K = bundled_algebra("kronecker");
  auto q = qform(K);
  rec.computed("Cartan matrix [[1,0],[2,1]]", "unit algebra: cartan_by_path_count",
               q.cartan == IntMatrix{{1, 0}, {2, 1}});
  auto ns = hq_nullspace(K);
  rec.computed("null space of C + C^T is spanned by (1,-1)", "unit generic: nullspace_oracle",
               ns.size() == 1 && ns[0] == GVector{{1, -1}});
  rec.computed("q((1,-1)) = 0", "unit generic: qform_expansion", q.eval(GVector{{1, -1}}) == 0);
  auto snap = enumerate_fan(K, 50);
  rec.computed("fan at 50 steps is incomplete", "unit fan: kronecker_incomplete", !snap.complete,
               std::to_string(snap.cones.size()) + " cones");
  auto viol = chamber_positivity_check(K, snap);
  bool in_scope = true;
  std::string vd;
  for (const auto& v : viol) {
    in_scope = in_scope && !v.faithful_tilting;
    vd += (vd.empty() ? "" : "; ") + std::string("cone ") + std::to_string(v.cone) + " q = " + to_string(v.q_value);
  }
  rec.computed("q > 0 on chambers of faithful tilting modules of pd <= 1", "unit generic: chamber_ar_positivity",
               in_scope, viol.empty() ? "no violations" : "outside that class: " + vd);
  auto probe = tau_convergence_probe(K, snap);
  rec.computed("infimum of q over normalized rays < 1/100", "unit generic: kronecker_probe",
               probe.infimum && *probe.infimum < Rational(1, 100),
               probe.infimum ? "infimum = " + to_string(*probe.infimum) : "empty");
  auto cands = outside_fan_candidates(K, snap);
  std::vector<GVector> flagged;
  for (const auto& c : cands)
    if (c.flagged()) flagged.push_back(c.vector);
  rec.computed("outside-fan candidates = {(1,-1)}, not found in snapshot", "unit generic: kronecker_candidates",
               flagged.size() == 1 && flagged[0] == GVector{{1, -1}} && cands.size() == 1);
  std::vector<Representation> B;
  for (std::uint64_t s = 0; s < 3; ++s)
    B.push_back(minimal_image_brick(sample_cokernel(K, GVector{{1, -1}}, opts.seed + s, opts.entry_bound)).brick);
  bool ortho = true;
  for (std::size_t a = 0; a < 3; ++a) {
    ortho = ortho && is_brick(B[a]);
    for (std::size_t b = 0; b < 3; ++b)
      if (a != b) ortho = ortho && hom_dim(B[a], B[b]) == 0;
  }
  rec.computed("three sampled bricks are pairwise Hom-orthogonal", "unit generic: kronecker_regular_orthogonal", ortho);
}

void case_a2(Recorder& rec, const RunOptions&) {
  auto A = bundled_algebra("a2");
  auto snap = enumerate_fan(A);
  rec.computed("5 maximal cones", "unit fan: a2_exhaustive_pairs", snap.cones.size() == 5);
  rec.computed("fan is complete", "unit fan: a2_exhaustive_pairs", snap.complete);
  auto bf = is_brick_finite(A);
  rec.computed("3 bricks", "unit fan: a2_bricks", bf.finite && bf.bricks.size() == 3);
  bool identity = true;
  for (const auto& X : tau_rigid_modules(snap)) identity = identity && isomorphic(brick_label(X), X);
  rec.computed("brick label map is the identity", "unit ar: hereditary_psi_identity", identity);
  auto probe = tau_convergence_probe(A, snap);
  rec.computed("infimum 1/4", "unit generic: a2_probe", probe.infimum && *probe.infimum == Rational(1, 4),
               probe.infimum ? to_string(*probe.infimum) : "empty");
}

void case_localx2(Recorder& rec, const RunOptions& opts) {
  auto A = bundled_algebra("localx2");
  auto R = regular_module(A);
  auto B = brick_label(R);
  rec.computed("brick label of the regular module is the simple", "unit ar: local_psi",
               B.dims() == std::vector<std::size_t>{1});
  auto Y = nontaurigid_brick_quotient(R, opts.seed);
  bool proper = Y.module.total_dim() < R.total_dim() && Y.projection.rank() == Y.module.total_dim();
  rec.computed("non-tau-rigid brick quotient of the regular module", "property quotient_brick_postcondition",
               proper && is_brick(Y.module) && !is_tau_rigid(Y.module), "quotient dims " + dims_text(Y.module.dims()));
  auto snap = enumerate_fan(A);
  rec.immediate("fan has 2 cones and is complete", snap.complete && snap.cones.size() == 2);
  rec.computed("no outside-fan candidates", "unit generic: localx2_candidates", outside_fan_candidates(A, snap).empty());
}

const std::vector<std::pair<std::string, std::pair<std::string, void (*)(Recorder&, const RunOptions&)>>>& cases() {
  static const std::vector<std::pair<std::string, std::pair<std::string, void (*)(Recorder&, const RunOptions&)>>> c{
      {"ex4.5-1a", {"two_cycle_I", case_two_cycle_i}},
      {"ex4.5-1b", {"two_cycle_J", case_two_cycle_j}},
      {"ex4.5-2", {"preprojective_a5", case_preprojective}},
      {"ex5-band", {"string_band", case_band}},
      {"ex7.3", {"glued_example", case_gluing}},
      {"kronecker-suite", {"kronecker", case_kronecker}},
      {"a2-suite", {"a2", case_a2}},
      {"localx2-suite", {"localx2", case_localx2}},
  };
  return c;
}

}  // namespace

std::vector<std::string> bundled_algebra_names() {
  std::vector<std::string> out;
  for (const auto& [name, f] : registry()) out.push_back(name);
  return out;
}

Json bundled_algebra_json(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw Error(ErrorKind::UnknownExample, "no bundled algebra '" + name + "'");
  return it->second();
}

AlgebraPtr bundled_algebra(const std::string& name) { return algebra_from_json(bundled_algebra_json(name)); }

GluedAlgebra glued_example() {
  return glue(bundled_algebra("kronecker"), "2", bundled_algebra("gentle_b"), "y1");
}

Representation preprojective_example_module(const AlgebraPtr& pi) {
  return one_dim_arrows(pi, {1, 1, 1, 0, 0}, {{"b1", Rational(1)}, {"a2", Rational(1)}});
}

Representation kronecker_regular(const AlgebraPtr& K, const Rational& lambda) {
  return one_dim_arrows(K, {1, 1}, {{"a", Rational(1)}, {"b", lambda}});
}

Representation band_module(const AlgebraPtr& S, const Rational& lambda) {
  return one_dim_arrows(S, {1, 1, 0}, {{"a1", Rational(1)}, {"a2", lambda}});
}

bool CaseResult::pass() const {
  for (const auto& a : assertions)
    if (!a.pass) return false;
  return !assertions.empty();
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> out;
  for (const auto& [id, c] : cases()) out.push_back(id);
  return out;
}

CaseResult run_case(const std::string& id, const RunOptions& opts) {
  for (const auto& [cid, c] : cases()) {
    if (cid != id) continue;
    CaseResult r;
    r.id = id;
    r.algebra = c.first;
    Recorder rec{r};
    auto t0 = std::chrono::steady_clock::now();
    try {
      c.second(rec, opts);
    } catch (const Error& e) {
      r.assertions.push_back({"completed without error", "immediate", "", false, e.what()});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
  }
  throw Error(ErrorKind::UnknownExample, "no example '" + id + "'");
}

Json case_to_json(const CaseResult& r) {
  Json j;
  j["id"] = r.id;
  j["algebra"] = r.algebra;
  j["pass"] = r.pass();
  Json as = Json::array();
  for (const auto& a : r.assertions) {
    Json aj{{"name", a.name}, {"basis", a.basis}, {"pass", a.pass}};
    if (!a.reference.empty()) aj["reference"] = a.reference;
    if (!a.detail.empty()) aj["detail"] = a.detail;
    as.push_back(aj);
  }
  j["assertions"] = as;
  return j;
}

}  // namespace bricklab
