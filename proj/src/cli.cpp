#include "bricklab/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "bricklab/catalog.hpp"
#include "bricklab/decompose.hpp"
#include "bricklab/errors.hpp"

namespace bricklab {

namespace {

struct Globals {
  std::uint64_t seed = 0;
  std::size_t max_steps = kDefaultMaxSteps;
  std::size_t trials = kDefaultTrials;
  std::int64_t entry_bound = kDefaultEntryBound;
  std::string format = "json";
  std::string out;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "bundled:<name>" picks a built-in algebra, anything else is a file.
AlgebraPtr resolve_algebra(const std::string& spec) {
  const std::string prefix = "bundled:";
  if (spec.rfind(prefix, 0) == 0) return bundled_algebra(spec.substr(prefix.size()));
  return load_algebra(spec);
}

GVector parse_vector(const std::string& text, std::size_t n) {
  GVector g;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      g.coords.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw UsageError("bad vector entry '" + item + "'");
    }
  }
  if (g.coords.size() != n)
    throw UsageError("vector has " + std::to_string(g.coords.size()) + " entries, algebra has " + std::to_string(n) +
                     " vertices");
  return g;
}

Json dims_json(const std::vector<std::size_t>& d) { return Json(d); }

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

Json membership_json(const Membership& m) {
  Json j;
  j["status"] = m.found ? "InCone" : "NotFoundWithinSnapshot";
  if (m.found) {
    j["cone"] = m.cone;
    j["coefficients"] = rationals_to_json(m.coefficients);
  }
  return j;
}

void render_text(const Json& j, std::ostream& os, int indent) {
  const std::string pad(indent, ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  auto is_flat = [](const Json& v) {
    if (!v.is_array()) return !v.is_object();
    return std::all_of(v.begin(), v.end(), [](const Json& e) {
      return !e.is_object() && (!e.is_array() || std::none_of(e.begin(), e.end(), [](const Json& x) {
        return x.is_object() || x.is_array();
      }));
    });
  };
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (is_flat(v)) {
        os << pad << k << ": " << scalar(v) << "\n";
      } else {
        os << pad << k << ":\n";
        render_text(v, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (is_flat(v)) {
        os << pad << "- " << scalar(v) << "\n";
      } else {
        os << pad << "-\n";
        render_text(v, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar(j) << "\n";
  }
}

void emit(const Json& doc, const Globals& g, std::ostream& out) {
  std::ostringstream body;
  if (g.format == "text")
    render_text(doc, body, 0);
  else
    body << doc.dump(2) << "\n";
  if (g.out.empty()) {
    out << body.str();
    return;
  }
  std::ofstream f(g.out);
  if (!f) throw UsageError("cannot write '" + g.out + "'");
  f << body.str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals G;
  CLI::App app{"Bound quiver algebras, tau-tilting fans and generic modules"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", G.seed, "random seed")->capture_default_str();
  app.add_option("--max-steps", G.max_steps, "cone budget for fan enumeration")->capture_default_str();
  app.add_option("--trials", G.trials, "samples per generic computation")->capture_default_str();
  app.add_option("--entry-bound", G.entry_bound, "coefficients drawn from [-b, b]")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--format", G.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
  app.add_option("--out", G.out, "write output to this file");

  std::string command;
  std::function<Json()> action;
  int assertion_exit = kExitOk;  // set by actions that check something

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    return parent->add_subcommand(name, help);
  };
  auto group = [&](const std::string& name, const std::string& help) {
    CLI::App* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    return g;
  };

  std::string alg_path, mod_path, mod2_path, vector_text, ideal_path, dot_path, example_id;
  std::vector<std::string> kill_vertices;
  std::size_t max_terms = 6;
  auto algebra_arg = [&](CLI::App* s) {
    s->add_option("algebra", alg_path, "algebra file, or bundled:<name>")->required();
  };
  auto module_arg = [&](CLI::App* s) {
    algebra_arg(s);
    s->add_option("module", mod_path, "representation file")->required();
  };
  auto vector_arg = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--vector,-v", vector_text, "integer vector, comma separated");
    if (required) o->required();
  };

  // algebra
  auto* alg = group("algebra", "build and inspect algebras");
  auto* alg_build = leaf(alg, "build", "normalize an algebra file");
  algebra_arg(alg_build);
  alg_build->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      Json j;
      j["dimension"] = A->dim();
      j["rank"] = A->num_vertices();
      j["loewy_length"] = A->nilpotency_length();
      j["cartan"] = int_matrix_to_json(A->cartan());
      Json basis = Json::array();
      for (std::size_t k = 0; k < A->dim(); ++k) basis.push_back(A->path_name(k));
      j["basis"] = basis;
      j["algebra"] = algebra_to_json(*A);
      return j;
    };
  });
  auto* alg_quot = leaf(alg, "quotient", "quotient by a two-sided ideal");
  algebra_arg(alg_quot);
  alg_quot->add_option("--ideal", ideal_path, "ideal file {\"vertices\": [...], \"elements\": [...]}");
  alg_quot->add_option("--kill-vertex", kill_vertices, "vertex whose idempotent generates the ideal");
  alg_quot->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      Json spec = ideal_path.empty() ? Json::object() : read_json_file(ideal_path);
      for (const auto& v : kill_vertices) spec["vertices"].push_back(v);
      auto J = ideal_from_json(*A, spec);
      auto Q = quotient_algebra(*A, J);
      Json j;
      j["ideal_dimension"] = J.dim();
      j["dimension"] = Q->dim();
      j["algebra"] = algebra_to_json(*Q);
      return j;
    };
  });
  auto* alg_gl = leaf(alg, "gldim", "global dimension");
  algebra_arg(alg_gl);
  alg_gl->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      Json j;
      j["global_dimension"] = opt_json(global_dimension(A));
      j["bound"] = kDefaultDimBound;
      return j;
    };
  });

  // modules
  auto* mod = group("mod", "module computations");
  auto with_module = [&](const std::string& name, const std::string& help,
                         std::function<Json(const AlgebraPtr&, const Representation&)> f) {
    auto* s = leaf(mod, name, help);
    module_arg(s);
    s->final_callback([&, f] {
      action = [&, f] {
        auto A = resolve_algebra(alg_path);
        return f(A, load_representation(A, mod_path));
      };
    });
    return s;
  };
  auto* mod_hom = leaf(mod, "hom", "dim Hom(M, N)");
  module_arg(mod_hom);
  mod_hom->add_option("second", mod2_path, "representation file N")->required();
  mod_hom->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto M = load_representation(A, mod_path);
      auto N = load_representation(A, mod2_path);
      Json j;
      j["hom_dimension"] = hom_dim(M, N);
      j["hom_tau_dimension"] = hom_tau_dim(M, N);
      return j;
    };
  });
  with_module("brick", "is End(M) one-dimensional", [](const AlgebraPtr&, const Representation& M) {
    Json j;
    j["end_dimension"] = hom_dim(M, M);
    j["brick"] = is_brick(M);
    return j;
  });
  with_module("tau", "Auslander-Reiten translate", [](const AlgebraPtr&, const Representation& M) {
    Json j;
    j["tau"] = representation_to_json(tau(M));
    return j;
  });
  with_module("taurigid", "Hom(M, tau M) = 0", [](const AlgebraPtr&, const Representation& M) {
    Json j;
    auto h = hom_tau_dim(M, M);
    j["hom_tau_dimension"] = h;
    j["tau_rigid"] = h == 0;
    return j;
  });
  with_module("gvector", "g-vector of a minimal presentation", [](const AlgebraPtr&, const Representation& M) {
    Json j;
    j["g_vector"] = gvector_to_json(g_vector(M));
    return j;
  });
  with_module("pd", "projective dimension", [](const AlgebraPtr&, const Representation& M) {
    Json j;
    j["projective_dimension"] = opt_json(proj_dimension(M));
    j["bound"] = kDefaultDimBound;
    return j;
  });
  with_module("decompose", "indecomposable summands", [&G](const AlgebraPtr&, const Representation& M) {
    Json parts = Json::array();
    for (const auto& s : decompose(M, G.seed)) {
      Json p;
      p["dim_vector"] = dims_json(s.module.dims());
      p["multiplicity"] = s.multiplicity;
      p["geometric_split_warning"] = s.geometric_split_warning;
      p["module"] = representation_to_json(s.module);
      parts.push_back(p);
    }
    Json j;
    j["summands"] = parts;
    return j;
  });
  with_module("ann", "annihilator ideal", [](const AlgebraPtr& A, const Representation& M) {
    auto J = annihilator(M);
    Json basis = Json::array();
    for (const auto& row : J.closure_basis) {
      Json terms = Json::array();
      for (const auto& [k, c] : row) terms.push_back({{"coeff", to_string(c)}, {"path", A->path_name(k)}});
      basis.push_back(terms);
    }
    Json killed = Json::array();
    for (std::size_t v = 0; v < A->num_vertices(); ++v)
      if (ideal_contains(J, SparseVec{{A->idempotent(v), Rational(1)}})) killed.push_back(A->quiver().vertices[v]);
    Json j;
    j["dimension"] = J.dim();
    j["faithful"] = J.dim() == 0;
    j["idempotents"] = killed;
    j["basis"] = basis;
    return j;
  });

  auto* psi = group("psi", "brick labels");
  auto* psi_label = leaf(psi, "label", "X / rad End(X) X");
  module_arg(psi_label);
  psi_label->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      Json j;
      j["brick"] = representation_to_json(brick_label(load_representation(A, mod_path)));
      return j;
    };
  });

  auto* p33 = group("prop33", "brick quotients of non-bricks");
  auto* p33q = leaf(p33, "quotient-brick", "proper quotient that is a brick and not tau-rigid");
  module_arg(p33q);
  p33q->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto Y = nontaurigid_brick_quotient(load_representation(A, mod_path), G.seed);
      Json j;
      j["quotient"] = representation_to_json(Y.module);
      j["brick"] = is_brick(Y.module);
      j["tau_rigid"] = is_tau_rigid(Y.module);
      return j;
    };
  });

  // fan
  auto* fan = group("fan", "support tau-tilting fan");
  auto* fan_enum = leaf(fan, "enumerate", "breadth-first mutation from (A, 0)");
  algebra_arg(fan_enum);
  fan_enum->add_option("--dot", dot_path, "also write the exchange graph in DOT format");
  fan_enum->final_callback([&] {
    action = [&] {
      auto snap = enumerate_fan(resolve_algebra(alg_path), G.max_steps);
      if (!dot_path.empty()) {
        std::ofstream f(dot_path);
        if (!f) throw UsageError("cannot write '" + dot_path + "'");
        f << exchange_graph_dot(snap);
      }
      return fan_to_json(snap);
    };
  });
  auto* fan_member = leaf(fan, "member", "find a cone containing a vector");
  algebra_arg(fan_member);
  vector_arg(fan_member, true);
  fan_member->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto v = parse_vector(vector_text, A->num_vertices());
      auto snap = enumerate_fan(A, G.max_steps);
      Json j = membership_json(fan_membership(v, snap));
      j["snapshot_complete"] = snap.complete;
      return j;
    };
  });
  auto* fan_bricks = leaf(fan, "bricks", "brick-finiteness and the list of bricks");
  algebra_arg(fan_bricks);
  fan_bricks->final_callback([&] {
    action = [&] {
      auto r = is_brick_finite(resolve_algebra(alg_path), G.max_steps);
      Json j;
      j["brick_finite"] = r.finite ? Json(true) : Json("Unknown");
      j["steps_used"] = r.steps_used;
      Json bs = Json::array();
      for (const auto& b : r.bricks) bs.push_back(representation_to_json(b));
      j["bricks"] = bs;
      return j;
    };
  });
  auto* fan_ldr = leaf(fan, "ldr", "locally representation-directed");
  algebra_arg(fan_ldr);
  fan_ldr->final_callback([&] {
    action = [&] {
      auto r = is_locally_rep_directed(resolve_algebra(alg_path), G.max_steps);
      Json j;
      j["value"] = r.value == Tristate::True ? "True" : r.value == Tristate::False ? "False" : "Unknown";
      j["steps_used"] = r.steps_used;
      if (r.witness) {
        j["witness"] = representation_to_json(*r.witness);
        j["witness_brick"] = is_brick(*r.witness);
        j["witness_tau_rigid"] = is_tau_rigid(*r.witness);
      }
      return j;
    };
  });

  // generic geometry
  auto* gq = group("gq", "Cartan form and generic modules");
  auto* gq_q = leaf(gq, "qform", "Cartan matrix and q");
  algebra_arg(gq_q);
  vector_arg(gq_q, false);
  gq_q->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto q = qform(A);
      Json j;
      j["cartan"] = int_matrix_to_json(q.cartan);
      j["symmetrized"] = int_matrix_to_json(q.symmetrized);
      if (!vector_text.empty()) {
        auto v = parse_vector(vector_text, A->num_vertices());
        j["vector"] = gvector_to_json(v);
        j["q"] = to_string(q.eval(v));
        j["q_normalized"] = to_string(q.eval_normalized(v));
      }
      return j;
    };
  });
  auto* gq_ns = leaf(gq, "nullspace", "null space of C + C^T");
  algebra_arg(gq_ns);
  gq_ns->final_callback([&] {
    action = [&] {
      Json vs = Json::array();
      for (const auto& v : hq_nullspace(resolve_algebra(alg_path))) vs.push_back(gvector_to_json(v));
      Json j;
      j["nullspace"] = vs;
      return j;
    };
  });
  auto* gq_probe = leaf(gq, "probe", "q along the enumerated rays");
  algebra_arg(gq_probe);
  gq_probe->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto snap = enumerate_fan(A, G.max_steps);
      auto p = tau_convergence_probe(A, snap);
      Json seq = Json::array();
      for (const auto& [g, q] : p.sequence) seq.push_back({{"ray", gvector_to_json(g)}, {"q", to_string(q)}});
      Json lims = Json::array();
      for (const auto& l : p.limit_candidates) lims.push_back(rationals_to_json(l));
      Json j;
      j["snapshot_complete"] = snap.complete;
      j["infimum"] = p.infimum ? Json(to_string(*p.infimum)) : Json(nullptr);
      j["sequence"] = seq;
      j["limit_candidates"] = lims;
      return j;
    };
  });
  auto* gq_c = leaf(gq, "candidates", "q-null directions outside the enumerated fan");
  algebra_arg(gq_c);
  gq_c->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto snap = enumerate_fan(A, G.max_steps);
      Json cs = Json::array();
      for (const auto& c : outside_fan_candidates(A, snap)) cs.push_back(candidate_to_json(c));
      Json j;
      j["snapshot_complete"] = snap.complete;
      j["candidates"] = cs;
      return j;
    };
  });
  auto* gq_ch = leaf(gq, "chambers", "q at chamber interior points");
  algebra_arg(gq_ch);
  gq_ch->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto snap = enumerate_fan(A, G.max_steps);
      auto viol = chamber_positivity_check(A, snap);
      Json vs = Json::array();
      for (const auto& v : viol) {
        Json r;
        r["cone"] = v.cone;
        r["rays"] = Json::array();
        for (const auto& g : snap.cones[v.cone].rays()) r["rays"].push_back(gvector_to_json(g));
        r["q"] = to_string(v.q_value);
        r["faithful_tilting"] = v.faithful_tilting;
        vs.push_back(r);
      }
      Json j;
      j["cones_checked"] = snap.cones.size();
      j["violations"] = vs;
      return j;
    };
  });
  auto* gq_s = leaf(gq, "sample", "generic invariants of Z(v) by sampling");
  algebra_arg(gq_s);
  vector_arg(gq_s, true);
  gq_s->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto v = parse_vector(vector_text, A->num_vertices());
      return report_to_json(generic_invariants(A, v, G.trials, G.seed, G.entry_bound));
    };
  });
  auto* gq_f = leaf(gq, "faithful-sum", "direct sum of samples with zero annihilator");
  algebra_arg(gq_f);
  vector_arg(gq_f, true);
  gq_f->add_option("--max-terms", max_terms)->capture_default_str();
  gq_f->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto v = parse_vector(vector_text, A->num_vertices());
      auto fs = build_faithful_sum(A, v, max_terms, G.seed, G.entry_bound);
      Json j;
      j["status"] = fs.faithful ? "Faithful" : "NotFaithfulComponent";
      j["annihilator_dimension"] = fs.annihilator.dim();
      j["terms"] = Json::array();
      for (std::size_t k = 0; k < fs.terms.size(); ++k)
        j["terms"].push_back({{"trial", fs.trials[k]}, {"dim_vector", dims_json(fs.terms[k].dims())}});
      return j;
    };
  });
  auto* gq_m = leaf(gq, "min-image-brick", "brick image of Z -> tau Z for a sampled Z");
  algebra_arg(gq_m);
  vector_arg(gq_m, true);
  gq_m->final_callback([&] {
    action = [&] {
      auto A = resolve_algebra(alg_path);
      auto v = parse_vector(vector_text, A->num_vertices());
      auto Z = sample_cokernel(A, v, G.seed, G.entry_bound);
      auto r = minimal_image_brick(Z, G.seed);
      Json j;
      j["sample_dim_vector"] = dims_json(Z.dims());
      j["map_rank"] = r.map.rank();
      j["brick"] = representation_to_json(r.brick);
      return j;
    };
  });

  // gluing
  std::string right_path, sink, source;
  auto* glue_cmd = app.add_subcommand("glue", "identify a sink of one algebra with a source of another");
  glue_cmd->add_option("left", alg_path, "left algebra")->required();
  glue_cmd->add_option("sink", sink, "sink vertex of the left algebra")->required();
  glue_cmd->add_option("right", right_path, "right algebra")->required();
  glue_cmd->add_option("source", source, "source vertex of the right algebra")->required();
  glue_cmd->final_callback([&] {
    action = [&] {
      auto g = glue(resolve_algebra(alg_path), sink, resolve_algebra(right_path), source);
      Json j;
      j["dimension"] = g.algebra->dim();
      j["rank"] = g.algebra->num_vertices();
      j["algebra"] = algebra_to_json(*g.algebra);
      return j;
    };
  });

  // catalog
  auto* ex = group("examples", "worked-example catalog");
  auto* ex_run = leaf(ex, "run", "run catalog cases");
  ex_run->add_option("--id", example_id, "run a single case");
  ex_run->final_callback([&] {
    action = [&] {
      RunOptions opts{G.seed, G.trials, G.entry_bound};
      std::vector<std::string> ids = example_id.empty() ? catalog_ids() : std::vector<std::string>{example_id};
      Json cases = Json::array();
      std::size_t passed = 0;
      for (const auto& id : ids) {
        auto r = run_case(id, opts);
        passed += r.pass();
        cases.push_back(case_to_json(r));
      }
      if (passed != ids.size()) assertion_exit = kExitAssertion;
      Json j;
      j["passed"] = passed;
      j["total"] = ids.size();
      j["cases"] = cases;
      return j;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "UsageError: " << e.what() << "\n";
    return kExitUsage;
  }

  for (const CLI::App* cur = &app; !cur->get_subcommands().empty();) {
    cur = cur->get_subcommands().front();
    command += (command.empty() ? "" : " ") + cur->get_name();
  }
  Json doc;
  doc["command"] = command;
  doc["seed"] = G.seed;
  try {
    if (!action) throw UsageError("no command selected");
    doc["result"] = action();
    emit(doc, G, out);
    return assertion_exit;
  } catch (const UsageError& e) {
    err << "UsageError: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    doc["error"] = {{"category", std::string(kind_name(e.kind()))}, {"message", e.what()}};
    try {
      emit(doc, G, out);
    } catch (const UsageError&) {
    }
    err << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    err << "InternalError: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace bricklab
