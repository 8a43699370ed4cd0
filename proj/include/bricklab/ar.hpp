#pragma once

// Presentations, Auslander-Reiten translates, g-vectors, homological dimensions
// and the brick label map.

#include <cstdint>
#include <optional>
#include <vector>

#include "bricklab/decompose.hpp"
#include "bricklab/representation.hpp"

namespace bricklab {

struct GVector {
  std::vector<std::int64_t> coords;

  [[nodiscard]] GVector plus() const;
  [[nodiscard]] GVector minus() const;
  /// v / sum |v_i|; throws ZeroVector.
  [[nodiscard]] std::vector<Rational> normalized() const;
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::int64_t l1() const;
  bool operator==(const GVector& o) const { return coords == o.coords; }
  bool operator<(const GVector& o) const { return coords < o.coords; }
};

GVector operator+(const GVector& a, const GVector& b);
GVector operator-(const GVector& a, const GVector& b);
GVector operator-(const GVector& a);
GVector unit_gvector(std::size_t n, std::size_t i);

/// P1 -> P0 -> M -> 0; elements[r][s] lies in e_{p1[r]} A e_{p0[s]}.
struct ProjectivePresentation {
  std::vector<std::size_t> p1_vertices;
  std::vector<std::size_t> p0_vertices;
  std::vector<std::vector<SparseVec>> elements;
  Representation P1;
  Representation P0;
  Morphism map;    // P1 -> P0
  Morphism cover;  // P0 -> M

  [[nodiscard]] std::vector<std::int64_t> p0_multiplicity(std::size_t n) const;
  [[nodiscard]] std::vector<std::int64_t> p1_multiplicity(std::size_t n) const;
};

/// Projective cover P -> M from the top of M.
struct ProjectiveCover {
  std::vector<std::size_t> vertices;
  Representation P;
  Morphism cover;
};
ProjectiveCover projective_cover(const Representation& M);

ProjectivePresentation minimal_presentation(const Representation& M);
Representation syzygy(const Representation& M);

/// Nakayama functor on the map of projectives given by element matrix (rows = source summands).
Morphism nakayama_map(const AlgebraPtr& A, const std::vector<std::size_t>& src_vertices,
                      const std::vector<std::size_t>& dst_vertices,
                      const std::vector<std::vector<SparseVec>>& elements);
Representation injective_sum(const AlgebraPtr& A, const std::vector<std::size_t>& vertices);
Representation projective_sum(const AlgebraPtr& A, const std::vector<std::size_t>& vertices);
/// Map between sums of projectives, x -> x * a on each block.
Morphism projective_sum_map(const AlgebraPtr& A, const std::vector<std::size_t>& src_vertices,
                            const std::vector<std::size_t>& dst_vertices,
                            const std::vector<std::vector<SparseVec>>& elements);

Representation tau(const Representation& M);
Representation tau_minus(const Representation& M);
/// Auslander-Bridger transpose, a module over the opposite algebra.
Representation transpose(const Representation& M);
/// Element of the opposite algebra corresponding to x.
SparseVec opposite_element(const Algebra& A, const Algebra& Aop, const SparseVec& x);

/// dim Hom(M, tau N).
std::size_t hom_tau_dim(const Representation& M, const Representation& N);
bool is_tau_rigid(const Representation& M);
bool is_projective(const Representation& M);

GVector g_vector(const Representation& M);

constexpr std::size_t kDefaultDimBound = 12;
/// nullopt means above the bound.
std::optional<std::size_t> proj_dimension(const Representation& M, std::size_t bound = kDefaultDimBound);
std::optional<std::size_t> inj_dimension(const Representation& M, std::size_t bound = kDefaultDimBound);
std::optional<std::size_t> global_dimension(const AlgebraPtr& A, std::size_t bound = kDefaultDimBound);

/// X / rad End(X) X, checked to be a brick. Throws NotTauRigid, NotIndecomposable.
Representation brick_label(const Representation& X);
/// Quotient of X by the images of all maps in `maps` together with rad End(X).
Quotient quotient_by_radical_maps(const Representation& X, const std::vector<Morphism>& maps);

/// Proper quotient Y of a non-brick indecomposable X with Y a brick and Hom(Y, tau Y) != 0.
/// Throws InputIsBrick, NotIndecomposable, SearchExhausted.
Quotient nontaurigid_brick_quotient(const Representation& X, std::uint64_t seed = 0);

}  // namespace bricklab
