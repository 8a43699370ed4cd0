#pragma once

// Representations of bound quivers, morphisms, Hom spaces and the module calculus.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "bricklab/algebra.hpp"

namespace bricklab {

using Rng = std::mt19937_64;

/// Uniform integer in [-bound, bound] (modulo mapping, portable across platforms).
std::int64_t draw_int(Rng& rng, std::int64_t bound);

class Representation {
 public:
  Representation() = default;
  /// Throws InvalidRepresentation on shape mismatch or when a relation does not vanish.
  Representation(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> mats, bool check = true);

  static Representation zero(const AlgebraPtr& algebra);

  [[nodiscard]] const AlgebraPtr& algebra() const { return algebra_; }
  [[nodiscard]] const std::vector<std::size_t>& dims() const { return dims_; }
  [[nodiscard]] std::size_t dim(std::size_t v) const { return dims_[v]; }
  [[nodiscard]] std::size_t total_dim() const;
  [[nodiscard]] bool is_zero() const { return total_dim() == 0; }
  [[nodiscard]] const Matrix& mat(std::size_t arrow) const { return mats_[arrow]; }
  [[nodiscard]] const std::vector<Matrix>& mats() const { return mats_; }
  [[nodiscard]] std::vector<std::size_t> offsets() const;

  /// Action of basis element k, a dim(target) x dim(source) matrix.
  [[nodiscard]] Matrix path_action(std::size_t k) const;
  [[nodiscard]] Matrix arrows_action(std::size_t source, const std::vector<std::size_t>& arrows) const;
  /// Action of an algebra element on the total space.
  [[nodiscard]] Matrix element_action(const SparseVec& x) const;

 private:
  AlgebraPtr algebra_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> mats_;
};

/// Per-vertex blocks f_i : M_i -> N_i.
struct Morphism {
  std::vector<Matrix> blocks;

  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::size_t rank() const;
  [[nodiscard]] bool is_invertible() const;
};

Morphism identity_morphism(const Representation& M);
Morphism zero_morphism(const Representation& M, const Representation& N);
Morphism compose(const Morphism& g, const Morphism& f);  // g after f
Morphism add(const Morphism& f, const Morphism& g);
Morphism scale(const Morphism& f, const Rational& c);
Morphism combination(const std::vector<Morphism>& basis, const std::vector<Rational>& coeffs);
bool is_morphism(const Representation& M, const Representation& N, const Morphism& f);
void require_same_algebra(const Representation& M, const Representation& N);

/// Basis of Hom(M, N). Throws AlgebraMismatch.
std::vector<Morphism> hom_space(const Representation& M, const Representation& N);
std::size_t hom_dim(const Representation& M, const Representation& N);

struct EndAlgebra {
  std::vector<Morphism> basis;
  std::vector<Morphism> radical_basis;
  std::size_t top_dimension = 0;
};

/// Throws ZeroModule.
EndAlgebra end_algebra(const Representation& M);
bool is_brick(const Representation& M);

// ---- submodules, quotients, images

struct Submodule {
  Representation module;
  Morphism inclusion;
};
struct Quotient {
  Representation module;
  Morphism projection;
};
struct Image {
  Representation module;
  Morphism surjection;
  Morphism inclusion;
};

/// Smallest subrepresentation containing the given columns (one matrix per vertex).
Submodule submodule_generated(const Representation& M, const std::vector<Matrix>& generators);
/// Subrepresentation with the given basis; throws NotSubrepresentation when not closed.
Submodule submodule_from_basis(const Representation& M, const std::vector<Matrix>& basis);
Quotient quotient_module(const Representation& M, const std::vector<Matrix>& sub_basis);
Image image(const Representation& M, const Representation& N, const Morphism& f);
Submodule kernel(const Representation& M, const Morphism& f);
Quotient cokernel(const Representation& N, const Morphism& f);
/// Sum of the images of the given maps X_k -> N, as a subspace basis of N.
std::vector<Matrix> sum_of_images(const Representation& N, const std::vector<Morphism>& maps);

// ---- standard modules

Representation projective(const AlgebraPtr& A, std::size_t j);
Representation injective(const AlgebraPtr& A, std::size_t j);
Representation simple(const AlgebraPtr& A, std::size_t j);
Representation regular_module(const AlgebraPtr& A);
Representation direct_sum(const std::vector<Representation>& parts);
Representation direct_sum(const Representation& a, const Representation& b);
/// Inclusions/projections of direct_sum(parts).
std::vector<Morphism> sum_inclusions(const std::vector<Representation>& parts);
std::vector<Morphism> sum_projections(const std::vector<Representation>& parts);
/// k-linear dual as a representation over `target` (the opposite algebra).
Representation dual(const Representation& M, const AlgebraPtr& target);
Morphism dual_morphism(const Morphism& f);

/// The map P_j -> M sending e_j to w (w in M_j).
Morphism map_from_projective(const Representation& M, std::size_t j, const std::vector<Rational>& w);
/// The map P_j -> P_k given by right multiplication with a in e_j A e_k.
Morphism projective_map(const AlgebraPtr& A, std::size_t j, std::size_t k, const SparseVec& a);

/// Radical and socle as subspace bases.
std::vector<Matrix> radical_subspace(const Representation& M);
std::vector<Matrix> socle_subspace(const Representation& M);
std::vector<std::size_t> top_dims(const Representation& M);

// ---- annihilators

TwoSidedIdeal annihilator(const Representation& M);
TwoSidedIdeal joint_annihilator(const std::vector<Representation>& Ms);
bool is_faithful(const Representation& M);

}  // namespace bricklab
