#include "bricklab/algebra.hpp"

#include <algorithm>
#include <set>

#include "bricklab/errors.hpp"

namespace bricklab {

namespace {

constexpr std::size_t kPathCap = 400000;

void add_term(SparseVec& v, std::size_t index, const Rational& c) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::size_t i) { return e.first < i; });
  if (it != v.end() && it->first == index) {
    it->second += c;
    if (sgn(it->second) == 0) v.erase(it);
  } else if (sgn(c) != 0) {
    v.insert(it, {index, c});
  }
}

}  // namespace

std::size_t Quiver::vertex_index(std::string_view name) const {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == name) return i;
  throw Error(ErrorKind::InvalidQuiver, "unknown vertex '" + std::string(name) + "'");
}

std::size_t Quiver::arrow_index(std::string_view name) const {
  for (std::size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == name) return i;
  throw Error(ErrorKind::InvalidQuiver, "unknown arrow '" + std::string(name) + "'");
}

void Quiver::validate() const {
  if (vertices.empty()) throw Error(ErrorKind::InvalidQuiver, "quiver has no vertices");
  std::set<std::string> seen(vertices.begin(), vertices.end());
  if (seen.size() != vertices.size()) throw Error(ErrorKind::InvalidQuiver, "duplicate vertex name");
  std::set<std::string> names;
  for (const auto& a : arrows) {
    if (!names.insert(a.name).second)
      throw Error(ErrorKind::InvalidQuiver, "duplicate arrow name '" + a.name + "'");
    if (a.from >= vertices.size() || a.to >= vertices.size())
      throw Error(ErrorKind::InvalidQuiver, "arrow '" + a.name + "' has an undeclared endpoint");
  }
}

AlgebraPtr Algebra::build(Quiver quiver, std::vector<RelationElement> relations, std::size_t max_path_len) {
  quiver.validate();
  if (max_path_len == 0) throw Error(ErrorKind::RadicalBoundExceeded, "max_path_len must be positive");
  // normalise relations: merge equal paths, drop zero terms, check shape
  std::vector<RelationElement> clean;
  for (const auto& rel : relations) {
    std::map<std::vector<std::size_t>, Rational> merged;
    std::size_t src = SIZE_MAX, tgt = SIZE_MAX;
    for (const auto& t : rel) {
      if (t.path.size() < 2)
        throw Error(ErrorKind::NonAdmissibleRelation, "relation term of length " + std::to_string(t.path.size()));
      for (std::size_t a : t.path)
        if (a >= quiver.arrows.size()) throw Error(ErrorKind::InvalidQuiver, "relation uses an unknown arrow");
      for (std::size_t k = 0; k + 1 < t.path.size(); ++k)
        if (quiver.arrows[t.path[k]].to != quiver.arrows[t.path[k + 1]].from)
          throw Error(ErrorKind::InvalidQuiver, "relation path is not composable");
      const std::size_t s = quiver.arrows[t.path.front()].from;
      const std::size_t e = quiver.arrows[t.path.back()].to;
      if (src == SIZE_MAX) {
        src = s;
        tgt = e;
      } else if (s != src || e != tgt) {
        throw Error(ErrorKind::InvalidQuiver, "relation terms do not share endpoints");
      }
      merged[t.path] += t.coeff;
    }
    RelationElement r;
    for (auto& [p, c] : merged)
      if (sgn(c) != 0) r.push_back({c, p});
    if (!r.empty()) clean.push_back(std::move(r));
  }
  std::shared_ptr<Algebra> alg(new Algebra());
  alg->quiver_ = std::move(quiver);
  alg->relations_ = std::move(clean);
  alg->max_path_len_ = max_path_len;
  for (std::size_t L = 1; L <= max_path_len; ++L)
    if (alg->try_build(L)) return alg;
  throw Error(ErrorKind::RadicalBoundExceeded,
              "paths of length " + std::to_string(max_path_len) + " are not all in the ideal");
}

bool Algebra::try_build(std::size_t L) {
  const auto& arrows = quiver_.arrows;
  const std::size_t n = num_vertices();
  // paths by length
  std::vector<std::vector<std::vector<std::size_t>>> by_len(L + 1);
  for (std::size_t a = 0; a < arrows.size(); ++a) by_len[1].push_back({a});
  std::size_t total = by_len[1].size();
  for (std::size_t l = 2; l <= L; ++l) {
    for (const auto& p : by_len[l - 1])
      for (std::size_t a = 0; a < arrows.size(); ++a)
        if (arrows[a].from == arrows[p.back()].to) {
          auto q = p;
          q.push_back(a);
          by_len[l].push_back(std::move(q));
        }
    total += by_len[l].size();
    if (total > kPathCap)
      throw Error(ErrorKind::RadicalBoundExceeded, "too many paths below the length bound");
  }
  // columns: longest first
  std::vector<const std::vector<std::size_t>*> cols;
  std::map<std::vector<std::size_t>, std::size_t> col_of;
  for (std::size_t l = L; l >= 1; --l)
    for (const auto& p : by_len[l]) {
      col_of.emplace(p, cols.size());
      cols.push_back(&p);
    }
  const std::size_t ncols = cols.size();
  auto src_of = [&](const std::vector<std::size_t>& p) { return arrows[p.front()].from; };
  auto tgt_of = [&](const std::vector<std::size_t>& p) { return arrows[p.back()].to; };

  std::vector<SparseRow> gens;
  for (const auto& rel : relations_) {
    SparseRow row;
    for (const auto& t : rel)
      if (t.path.size() <= L) row.emplace_back(col_of.at(t.path), t.coeff);
    std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    if (!row.empty()) gens.push_back(std::move(row));
  }
  Echelon ech = sparse_rref(gens, ncols, true);
  for (;;) {
    std::vector<SparseRow> all = ech.rows;
    for (const auto& row : ech.rows) {
      const auto& first = *cols[row.front().first];
      const std::size_t s = src_of(first), t = tgt_of(first);
      for (std::size_t a = 0; a < arrows.size(); ++a) {
        if (arrows[a].from == t) {
          SparseRow prod;
          for (const auto& [c, v] : row) {
            if (cols[c]->size() + 1 > L) continue;
            auto q = *cols[c];
            q.push_back(a);
            prod.emplace_back(col_of.at(q), v);
          }
          std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          if (!prod.empty()) all.push_back(std::move(prod));
        }
        if (arrows[a].to == s) {
          SparseRow prod;
          for (const auto& [c, v] : row) {
            if (cols[c]->size() + 1 > L) continue;
            std::vector<std::size_t> q{a};
            q.insert(q.end(), cols[c]->begin(), cols[c]->end());
            prod.emplace_back(col_of.at(q), v);
          }
          std::sort(prod.begin(), prod.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
          if (!prod.empty()) all.push_back(std::move(prod));
        }
      }
    }
    Echelon next = sparse_rref(std::move(all), ncols, true);
    const bool stable = next.rows.size() == ech.rows.size();
    ech = std::move(next);
    if (stable) break;
  }
  std::vector<std::size_t> pivot_row(ncols, SIZE_MAX);
  for (std::size_t k = 0; k < ech.pivots.size(); ++k) pivot_row[ech.pivots[k]] = k;
  for (const auto& p : by_len[L])
    if (pivot_row[col_of.at(p)] == SIZE_MAX) return false;

  // basis: idempotents, then surviving paths by increasing length
  basis_.clear();
  idempotent_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    idempotent_[v] = basis_.size();
    basis_.push_back({v, v, {}});
  }
  std::vector<std::size_t> basis_of_col(ncols, SIZE_MAX);
  for (std::size_t l = 1; l < L; ++l)
    for (const auto& p : by_len[l]) {
      const std::size_t c = col_of.at(p);
      if (pivot_row[c] != SIZE_MAX) continue;
      basis_of_col[c] = basis_.size();
      basis_.push_back({src_of(p), tgt_of(p), p});
    }
  arrow_element_.assign(arrows.size(), SIZE_MAX);
  nf_.clear();
  for (std::size_t c = 0; c < ncols; ++c) {
    SparseVec v;
    if (pivot_row[c] == SIZE_MAX) {
      v.emplace_back(basis_of_col[c], Rational(1));
    } else {
      for (const auto& [cc, coeff] : ech.rows[pivot_row[c]])
        if (cc != c) add_term(v, basis_of_col[cc], -coeff);
    }
    nf_.emplace(*cols[c], std::move(v));
  }
  for (std::size_t a = 0; a < arrows.size(); ++a) {
    const auto& v = nf_.at({a});
    if (v.size() != 1 || basis_[v[0].first].arrows != std::vector<std::size_t>{a})
      throw Error(ErrorKind::NonAdmissibleRelation, "arrow '" + arrows[a].name + "' lies in the ideal");
    arrow_element_[a] = v[0].first;
  }
  loewy_ = L;

  between_.assign(n * n, {});
  position_.assign(basis_.size(), 0);
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    auto& list = between_[basis_[k].source * n + basis_[k].target];
    position_[k] = list.size();
    list.push_back(k);
  }
  const std::size_t d = basis_.size();
  table_.assign(d * d, {});
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y) {
      if (basis_[y].target != basis_[x].source) continue;
      std::vector<std::size_t> p = basis_[y].arrows;
      p.insert(p.end(), basis_[x].arrows.begin(), basis_[x].arrows.end());
      table_[x * d + y] = normal_form(basis_[y].source, p);
    }
  return true;
}

SparseVec Algebra::normal_form(std::size_t source, const std::vector<std::size_t>& arrows) const {
  if (arrows.empty()) return {{idempotent_[source], Rational(1)}};
  if (quiver_.arrows[arrows.front()].from != source) return {};
  if (arrows.size() > loewy_) {
    for (std::size_t k = 0; k + 1 < arrows.size(); ++k)
      if (quiver_.arrows[arrows[k]].to != quiver_.arrows[arrows[k + 1]].from) return {};
    return {};
  }
  auto it = nf_.find(arrows);
  if (it == nf_.end()) return {};
  return it->second;
}

SparseVec Algebra::multiply(const SparseVec& x, const SparseVec& y) const {
  SparseVec out;
  for (const auto& [i, a] : x)
    for (const auto& [j, b] : y)
      for (const auto& [k, c] : mult(i, j)) add_term(out, k, a * b * c);
  return out;
}

SparseVec Algebra::relation_vector(const RelationElement& rel) const {
  SparseVec out;
  for (const auto& t : rel) {
    const std::size_t src = t.path.empty() ? 0 : quiver_.arrows[t.path.front()].from;
    for (const auto& [k, c] : normal_form(src, t.path)) add_term(out, k, t.coeff * c);
  }
  return out;
}

IntMatrix Algebra::cartan() const {
  const std::size_t n = num_vertices();
  IntMatrix c(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = static_cast<std::int64_t>(paths_between(j, i).size());
  return c;
}

std::string Algebra::path_name(std::size_t k) const {
  const auto& b = basis_[k];
  if (b.arrows.empty()) return "e" + quiver_.vertices[b.source];
  std::string s;
  for (std::size_t i = 0; i < b.arrows.size(); ++i) {
    if (i) s += ".";
    s += quiver_.arrows[b.arrows[i]].name;
  }
  return s;
}

AlgebraPtr Algebra::opposite() const {
  if (opposite_) return opposite_;
  Quiver q = quiver_;
  for (auto& a : q.arrows) std::swap(a.from, a.to);
  std::vector<RelationElement> rels = relations_;
  for (auto& r : rels)
    for (auto& t : r) std::reverse(t.path.begin(), t.path.end());
  opposite_ = build(std::move(q), std::move(rels), max_path_len_);
  return opposite_;
}

// ------------------------------------------------------------------ ideals

namespace {

SparseVec generator_vector(const Algebra& A, const IdealGenerator& g) {
  if (const auto* v = std::get_if<std::size_t>(&g)) return {{A.idempotent(*v), Rational(1)}};
  SparseVec out;
  for (const auto& t : std::get<RelationElement>(g)) {
    if (t.path.empty()) throw Error(ErrorKind::UnsupportedIdeal, "empty path in ideal generator");
    for (const auto& [k, c] : A.normal_form(A.quiver().arrows[t.path.front()].from, t.path))
      add_term(out, k, t.coeff * c);
  }
  return out;
}

}  // namespace

TwoSidedIdeal ideal_from_elements(const Algebra& A, const std::vector<SparseVec>& elements) {
  const std::size_t d = A.dim();
  std::vector<SparseRow> rows(elements.begin(), elements.end());
  Echelon ech = sparse_rref(rows, d, true);
  std::vector<std::size_t> mults;
  for (std::size_t v = 0; v < A.num_vertices(); ++v) mults.push_back(A.idempotent(v));
  for (std::size_t a = 0; a < A.num_arrows(); ++a) mults.push_back(A.arrow_element(a));
  for (;;) {
    std::vector<SparseRow> all = ech.rows;
    for (const auto& row : ech.rows)
      for (std::size_t m : mults) {
        SparseVec unit{{m, Rational(1)}};
        all.push_back(A.multiply(unit, row));
        all.push_back(A.multiply(row, unit));
      }
    Echelon next = sparse_rref(std::move(all), d, true);
    const bool stable = next.rows.size() == ech.rows.size();
    ech = std::move(next);
    if (stable) break;
  }
  TwoSidedIdeal J;
  J.closure_basis = std::move(ech.rows);
  return J;
}

TwoSidedIdeal make_ideal(const Algebra& A, std::vector<IdealGenerator> generators) {
  std::vector<SparseVec> elems;
  for (const auto& g : generators) elems.push_back(generator_vector(A, g));
  TwoSidedIdeal J = ideal_from_elements(A, elems);
  J.generators = std::move(generators);
  return J;
}

bool ideal_contains(const TwoSidedIdeal& J, const SparseVec& x) {
  std::size_t ncols = 0;
  for (const auto& r : J.closure_basis)
    if (!r.empty()) ncols = std::max(ncols, r.back().first + 1);
  if (!x.empty()) ncols = std::max(ncols, x.back().first + 1);
  const std::size_t before = sparse_rref(J.closure_basis, ncols, true).rows.size();
  auto rows = J.closure_basis;
  rows.push_back(x);
  return sparse_rref(std::move(rows), ncols, true).rows.size() == before;
}

AlgebraPtr quotient_algebra(const Algebra& A, const TwoSidedIdeal& J) {
  const std::size_t n = A.num_vertices();
  // split the closure into (source, target)-homogeneous parts
  std::vector<SparseVec> parts;
  for (const auto& row : J.closure_basis) {
    std::map<std::pair<std::size_t, std::size_t>, SparseVec> split;
    for (const auto& [k, c] : row) split[{A.basis(k).source, A.basis(k).target}].emplace_back(k, c);
    for (auto& [key, v] : split) parts.push_back(std::move(v));
  }
  std::vector<char> drop_vertex(n, 0), drop_arrow(A.num_arrows(), 0);
  std::vector<SparseVec> higher;
  for (const auto& p : parts) {
    std::size_t min_len = SIZE_MAX;
    for (const auto& [k, c] : p) min_len = std::min(min_len, A.basis(k).length());
    if (min_len == 0) {
      drop_vertex[A.basis(p.front().first).source] = 1;
    } else if (min_len == 1) {
      if (p.size() != 1) throw Error(ErrorKind::UnsupportedIdeal, "ideal contains a non-monomial arrow combination");
      drop_arrow[A.basis(p.front().first).arrows.front()] = 1;
    } else {
      higher.push_back(p);
    }
  }
  if (std::all_of(drop_vertex.begin(), drop_vertex.end(), [](char c) { return c != 0; }))
    throw Error(ErrorKind::ImproperIdeal, "ideal contains the identity");
  const auto& Q = A.quiver();
  Quiver q;
  std::vector<std::size_t> new_vertex(n, SIZE_MAX), new_arrow(A.num_arrows(), SIZE_MAX);
  for (std::size_t v = 0; v < n; ++v)
    if (!drop_vertex[v]) {
      new_vertex[v] = q.vertices.size();
      q.vertices.push_back(Q.vertices[v]);
    }
  for (std::size_t a = 0; a < A.num_arrows(); ++a) {
    const auto& ar = Q.arrows[a];
    if (drop_arrow[a] || drop_vertex[ar.from] || drop_vertex[ar.to]) continue;
    new_arrow[a] = q.arrows.size();
    q.arrows.push_back({ar.name, new_vertex[ar.from], new_vertex[ar.to]});
  }
  auto translate = [&](const std::vector<std::size_t>& path, std::vector<std::size_t>& out) {
    out.clear();
    for (std::size_t a : path) {
      if (new_arrow[a] == SIZE_MAX) return false;
      out.push_back(new_arrow[a]);
    }
    return true;
  };
  std::vector<RelationElement> rels;
  std::vector<std::size_t> tp;
  for (const auto& r : A.relations()) {
    RelationElement nr;
    for (const auto& t : r)
      if (translate(t.path, tp)) nr.push_back({t.coeff, tp});
    if (!nr.empty()) rels.push_back(std::move(nr));
  }
  for (const auto& p : higher) {
    RelationElement nr;
    for (const auto& [k, c] : p)
      if (translate(A.basis(k).arrows, tp)) nr.push_back({c, tp});
    if (!nr.empty()) rels.push_back(std::move(nr));
  }
  return Algebra::build(std::move(q), std::move(rels), A.max_path_len());
}

}  // namespace bricklab
