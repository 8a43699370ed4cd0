#include "bricklab/io.hpp"

#include <fstream>
#include <sstream>

#include "bricklab/errors.hpp"

namespace bricklab {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
  return j.at(name);
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Rational as_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<std::int64_t>()));
  bad("rational entries must be strings or integers");
}

std::string dims_label(const std::vector<std::size_t>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

}  // namespace

RelationElement relation_from_json(const Quiver& Q, const Json& r) {
  if (!r.is_array()) bad("a relation must be an array of terms");
  RelationElement e;
  for (const auto& t : r) {
    Term term{as_rational(field(t, "coeff")), {}};
    const Json& p = field(t, "path");
    if (!p.is_array()) bad("path must be an array");
    for (const auto& a : p) term.path.push_back(Q.arrow_index(as_string(a, "arrow")));
    e.push_back(std::move(term));
  }
  return e;
}

TwoSidedIdeal ideal_from_json(const Algebra& A, const Json& j) {
  if (!j.is_object()) bad("ideal must be an object");
  std::vector<IdealGenerator> gens;
  if (j.contains("vertices")) {
    if (!j.at("vertices").is_array()) bad("ideal vertices must be an array");
    for (const auto& v : j.at("vertices")) gens.emplace_back(A.quiver().vertex_index(as_string(v, "vertex")));
  }
  if (j.contains("elements")) {
    if (!j.at("elements").is_array()) bad("ideal elements must be an array");
    for (const auto& r : j.at("elements")) gens.emplace_back(relation_from_json(A.quiver(), r));
  }
  return make_ideal(A, std::move(gens));
}

AlgebraPtr algebra_from_json(const Json& j, std::size_t max_path_len) {
  Quiver Q;
  const Json& vs = field(j, "vertices");
  if (!vs.is_array()) bad("vertices must be an array");
  for (const auto& v : vs) Q.vertices.push_back(as_string(v, "vertex"));
  const Json& as = field(j, "arrows");
  if (!as.is_array()) bad("arrows must be an array");
  for (const auto& a : as) {
    std::string from = as_string(field(a, "from"), "from");
    std::string to = as_string(field(a, "to"), "to");
    auto idx = [&](const std::string& name) {
      for (std::size_t i = 0; i < Q.vertices.size(); ++i)
        if (Q.vertices[i] == name) return i;
      throw Error(ErrorKind::InvalidQuiver, "arrow endpoint '" + name + "' is not a vertex");
    };
    Q.arrows.push_back({as_string(field(a, "name"), "arrow name"), idx(from), idx(to)});
  }
  Q.validate();
  std::vector<RelationElement> rels;
  if (j.contains("relations")) {
    const Json& rs = j.at("relations");
    if (!rs.is_array()) bad("relations must be an array");
    for (const auto& r : rs) rels.push_back(relation_from_json(Q, r));
  }
  return Algebra::build(std::move(Q), std::move(rels), max_path_len);
}

Json algebra_to_json(const Algebra& A) {
  Json j;
  j["vertices"] = A.quiver().vertices;
  Json arrows = Json::array();
  for (const auto& a : A.quiver().arrows)
    arrows.push_back({{"name", a.name}, {"from", A.quiver().vertices[a.from]}, {"to", A.quiver().vertices[a.to]}});
  j["arrows"] = arrows;
  Json rels = Json::array();
  for (const auto& r : A.relations()) {
    Json terms = Json::array();
    for (const auto& t : r) {
      Json path = Json::array();
      for (auto a : t.path) path.push_back(A.quiver().arrows[a].name);
      terms.push_back({{"coeff", to_string(t.coeff)}, {"path", path}});
    }
    rels.push_back(terms);
  }
  j["relations"] = rels;
  return j;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(path + ": " + e.what());
  }
}

AlgebraPtr load_algebra(const std::string& path, std::size_t max_path_len) {
  return algebra_from_json(read_json_file(path), max_path_len);
}

Representation representation_from_json(const AlgebraPtr& A, const Json& j) {
  const Json& dv = field(j, "dim_vector");
  if (!dv.is_array() || dv.size() != A->num_vertices())
    throw Error(ErrorKind::InvalidRepresentation, "dim_vector must have one entry per vertex");
  std::vector<std::size_t> dims;
  for (const auto& d : dv) {
    if (!d.is_number_integer() || d.get<std::int64_t>() < 0) bad("dimensions must be nonnegative integers");
    dims.push_back(d.get<std::size_t>());
  }
  std::vector<Matrix> mats;
  for (const auto& a : A->quiver().arrows) mats.emplace_back(dims[a.to], dims[a.from]);
  if (j.contains("matrices")) {
    const Json& ms = j.at("matrices");
    if (!ms.is_object()) bad("matrices must be an object keyed by arrow name");
    for (const auto& [name, rows] : ms.items()) {
      const std::size_t a = A->quiver().arrow_index(name);
      Matrix& m = mats[a];
      if (!rows.is_array() || rows.size() != m.rows())
        throw Error(ErrorKind::InvalidRepresentation, "matrix of " + name + " has the wrong number of rows");
      for (std::size_t r = 0; r < m.rows(); ++r) {
        if (!rows[r].is_array() || rows[r].size() != m.cols())
          throw Error(ErrorKind::InvalidRepresentation, "matrix of " + name + " has the wrong number of columns");
        for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = as_rational(rows[r][c]);
      }
    }
  }
  return Representation(A, std::move(dims), std::move(mats));
}

Json representation_to_json(const Representation& M) {
  Json j;
  j["dim_vector"] = M.dims();
  Json ms = Json::object();
  const auto& Q = M.algebra()->quiver();
  for (std::size_t a = 0; a < Q.arrows.size(); ++a) {
    const Matrix& m = M.mat(a);
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
      rows.push_back(row);
    }
    ms[Q.arrows[a].name] = rows;
  }
  j["matrices"] = ms;
  return j;
}

Representation load_representation(const AlgebraPtr& A, const std::string& path) {
  return representation_from_json(A, read_json_file(path));
}

Json gvector_to_json(const GVector& g) { return g.coords; }

GVector gvector_from_json(const Json& j, std::size_t n) {
  if (!j.is_array() || j.size() != n) bad("g-vector must have one entry per vertex");
  GVector g;
  for (const auto& x : j) {
    if (!x.is_number_integer()) bad("g-vector entries must be integers");
    g.coords.push_back(x.get<std::int64_t>());
  }
  return g;
}

Json rationals_to_json(const std::vector<Rational>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json int_matrix_to_json(const IntMatrix& m) { return m; }

Json fan_to_json(const FanSnapshot& snap) {
  Json j;
  j["complete"] = snap.complete;
  j["steps_used"] = snap.steps_used;
  Json rays = Json::array();
  for (const auto& r : snap.rays) rays.push_back(r.coords);
  j["rays"] = rays;
  Json cones = Json::array();
  for (const auto& c : snap.cones) {
    Json cj;
    Json cr = Json::array();
    Json mods = Json::array();
    for (const auto& s : c.slots) {
      cr.push_back(s.ray.coords);
      if (!s.in_projective_part) mods.push_back(s.module.dims());
    }
    cj["rays"] = cr;
    cj["modules"] = mods;
    Json pp = Json::array();
    for (auto v : c.projective_part()) pp.push_back(snap.algebra->quiver().vertices[v]);
    cj["projective_part"] = pp;
    cones.push_back(cj);
  }
  j["cones"] = cones;
  Json labels = Json::array();
  for (const auto& e : snap.edges)
    labels.push_back({{"cones", {e.from, e.to}}, {"upper", e.upper}, {"index", e.index}, {"brick", representation_to_json(e.label)}});
  j["labels"] = labels;
  return j;
}

std::string exchange_graph_dot(const FanSnapshot& snap) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (std::size_t c = 0; c < snap.cones.size(); ++c) {
    out << "  c" << c << " [label=\"";
    const auto& rays = snap.cones[c].rays();
    for (std::size_t r = 0; r < rays.size(); ++r) {
      out << (r ? " " : "") << "(";
      for (std::size_t i = 0; i < rays[r].coords.size(); ++i) out << (i ? "," : "") << rays[r].coords[i];
      out << ")";
    }
    out << "\"];\n";
  }
  for (const auto& e : snap.edges)
    out << "  c" << e.from << " -- c" << e.to << " [label=\"" << dims_label(e.label.dims()) << "\"];\n";
  out << "}\n";
  return out.str();
}

Json report_to_json(const GenericSampleReport& r) {
  Json j;
  j["g_vector"] = r.g_vector.coords;
  j["trials"] = r.trials;
  j["seed"] = r.seed;
  j["entry_bound"] = r.entry_bound;
  j["d_vector"] = r.d_vector;
  j["d_witness"] = r.d_witness;
  j["h_min"] = r.h_min;
  j["h_witness"] = r.h_witness;
  j["c_proxy"] = r.h_min;
  j["e_min"] = r.e_min;
  j["e_witness"] = {r.e_witness.first, r.e_witness.second};
  j["end_min"] = r.end_min;
  j["end_witness"] = r.end_witness;
  Json dec;
  Json sums = Json::array();
  for (const auto& g : r.decomposition.summands) sums.push_back(g.coords);
  dec["summands"] = sums;
  dec["residual"] = r.decomposition.residual.coords;
  dec["trial"] = r.decomposition.trial;
  dec["conjugate_splits"] = r.decomposition.geometric_splits;
  dec["unresolved"] = r.decomposition.unresolved;
  j["decomposition"] = dec;
  j["semantics"] = "minima over samples: certified upper bounds, generically exact";
  return j;
}

Json candidate_to_json(const CandidateRay& c) {
  Json j;
  j["vector"] = c.vector.coords;
  j["q_value"] = to_string(c.q_value);
  j["membership"] = c.membership.found ? "InCone" : "NotFoundWithinSnapshot";
  if (c.membership.found) {
    j["cone"] = c.membership.cone;
    j["coefficients"] = rationals_to_json(c.membership.coefficients);
  }
  Json src = Json::array();
  for (auto s : c.sources) src.push_back(source_name(s));
  j["provenance"] = src;
  j["flagged"] = c.flagged();
  return j;
}

}  // namespace bricklab
