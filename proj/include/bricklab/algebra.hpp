#pragma once

// Bound quiver algebras kQ/I in explicit path-basis form.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "bricklab/linalg.hpp"

namespace bricklab {

/// Element of the algebra in basis coordinates: sorted (basis index, coefficient).
using SparseVec = SparseRow;

struct Arrow {
  std::string name;
  std::size_t from = 0;
  std::size_t to = 0;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;

  [[nodiscard]] std::size_t vertex_index(std::string_view name) const;
  [[nodiscard]] std::size_t arrow_index(std::string_view name) const;
  /// Throws InvalidQuiver when names collide or endpoints are undeclared.
  void validate() const;
};

/// One summand c * path of a relation; the path lists arrow indices in traversal order.
struct Term {
  Rational coeff;
  std::vector<std::size_t> path;
};
using RelationElement = std::vector<Term>;

/// A basis element: a path from `source` to `target`; no arrows means the idempotent.
struct BasisPath {
  std::size_t source = 0;
  std::size_t target = 0;
  std::vector<std::size_t> arrows;
  [[nodiscard]] std::size_t length() const { return arrows.size(); }
};

using IntMatrix = std::vector<std::vector<std::int64_t>>;

class Algebra {
 public:
  static constexpr std::size_t kDefaultMaxPathLen = 30;

  /// Throws NonAdmissibleRelation, InvalidQuiver or RadicalBoundExceeded.
  static std::shared_ptr<const Algebra> build(Quiver quiver, std::vector<RelationElement> relations,
                                              std::size_t max_path_len = kDefaultMaxPathLen);

  [[nodiscard]] const Quiver& quiver() const { return quiver_; }
  [[nodiscard]] const std::vector<RelationElement>& relations() const { return relations_; }
  [[nodiscard]] std::size_t num_vertices() const { return quiver_.vertices.size(); }
  [[nodiscard]] std::size_t num_arrows() const { return quiver_.arrows.size(); }
  [[nodiscard]] std::size_t dim() const { return basis_.size(); }
  [[nodiscard]] std::size_t max_path_len() const { return max_path_len_; }
  /// Every path of this length vanishes.
  [[nodiscard]] std::size_t nilpotency_length() const { return loewy_; }

  [[nodiscard]] const BasisPath& basis(std::size_t k) const { return basis_[k]; }
  /// Basis indices of the paths source -> target, i.e. a basis of e_target A e_source.
  [[nodiscard]] const std::vector<std::size_t>& paths_between(std::size_t source, std::size_t target) const {
    return between_[source * num_vertices() + target];
  }
  /// Position of basis element k inside paths_between(source, target).
  [[nodiscard]] std::size_t position(std::size_t k) const { return position_[k]; }
  [[nodiscard]] std::size_t idempotent(std::size_t v) const { return idempotent_[v]; }
  [[nodiscard]] std::size_t arrow_element(std::size_t a) const { return arrow_element_[a]; }

  /// Product x*y of basis elements (y is traversed first).
  [[nodiscard]] const SparseVec& mult(std::size_t x, std::size_t y) const { return table_[x * dim() + y]; }
  [[nodiscard]] SparseVec multiply(const SparseVec& x, const SparseVec& y) const;

  /// Residue of the path starting at `source` that traverses `arrows`.
  [[nodiscard]] SparseVec normal_form(std::size_t source, const std::vector<std::size_t>& arrows) const;
  [[nodiscard]] SparseVec relation_vector(const RelationElement& rel) const;

  /// c_ij = dim e_i A e_j.
  [[nodiscard]] IntMatrix cartan() const;
  [[nodiscard]] std::string path_name(std::size_t k) const;

  /// Reversed arrows and relations; cached.
  [[nodiscard]] std::shared_ptr<const Algebra> opposite() const;

  Algebra(const Algebra&) = delete;
  Algebra& operator=(const Algebra&) = delete;

 private:
  Algebra() = default;
  bool try_build(std::size_t L);

  Quiver quiver_;
  std::vector<RelationElement> relations_;
  std::size_t max_path_len_ = kDefaultMaxPathLen;
  std::size_t loewy_ = 0;
  std::vector<BasisPath> basis_;
  std::vector<std::vector<std::size_t>> between_;
  std::vector<std::size_t> position_;
  std::vector<std::size_t> idempotent_;
  std::vector<std::size_t> arrow_element_;
  std::vector<SparseVec> table_;
  std::map<std::vector<std::size_t>, SparseVec> nf_;  // paths of length >= 1
  mutable std::shared_ptr<const Algebra> opposite_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Generator of a two-sided ideal: a vertex idempotent or an element given by paths.
using IdealGenerator = std::variant<std::size_t, RelationElement>;

struct TwoSidedIdeal {
  std::vector<IdealGenerator> generators;
  std::vector<SparseVec> closure_basis;  // reduced echelon rows in A's basis
  [[nodiscard]] std::size_t dim() const { return closure_basis.size(); }
};

/// Span closure of the generators under left and right multiplication.
TwoSidedIdeal make_ideal(const Algebra& A, std::vector<IdealGenerator> generators);
TwoSidedIdeal ideal_from_elements(const Algebra& A, const std::vector<SparseVec>& elements);
bool ideal_contains(const TwoSidedIdeal& J, const SparseVec& x);

/// A/J. Vertices whose idempotent lies in J are deleted, arrows lying in J are
/// deleted, remaining generators become extra relations. Throws ImproperIdeal,
/// UnsupportedIdeal.
AlgebraPtr quotient_algebra(const Algebra& A, const TwoSidedIdeal& J);

}  // namespace bricklab
