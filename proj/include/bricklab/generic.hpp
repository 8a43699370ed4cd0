#pragma once

// Sampled generic modules for a g-vector, the Cartan form and candidates outside the fan.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bricklab/fan.hpp"

namespace bricklab {

constexpr std::int64_t kDefaultEntryBound = 100;
constexpr std::size_t kDefaultTrials = 5;

/// Cokernel of a random map P(v-) -> P(v+) with path coefficients in [-entry_bound, entry_bound].
Representation sample_cokernel(const AlgebraPtr& A, const GVector& v, std::uint64_t seed,
                               std::int64_t entry_bound = kDefaultEntryBound);

struct CanonicalDecomposition {
  std::vector<GVector> summands;  // with repetition, sorted
  GVector residual;               // v minus the sum of the summands
  std::size_t trial = 0;          // sample achieving it
  std::size_t geometric_splits = 0;  // summands split into Galois conjugates
  bool unresolved = false;           // a summand may still split over the closure
};

CanonicalDecomposition canonical_decomposition_sample(const AlgebraPtr& A, const GVector& v, std::size_t trials,
                                                      std::uint64_t seed,
                                                      std::int64_t entry_bound = kDefaultEntryBound);

/// Minima over samples; every minimum comes with the index of a witness sample (trial seed = seed + index).
struct GenericSampleReport {
  GVector g_vector;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::int64_t entry_bound = kDefaultEntryBound;
  std::vector<std::size_t> d_vector;
  std::size_t d_witness = 0;
  std::size_t h_min = 0;
  std::size_t h_witness = 0;
  std::size_t e_min = 0;
  std::pair<std::size_t, std::size_t> e_witness;
  std::size_t end_min = 0;
  std::size_t end_witness = 0;
  CanonicalDecomposition decomposition;
};

GenericSampleReport generic_invariants(const AlgebraPtr& A, const GVector& v, std::size_t trials = kDefaultTrials,
                                       std::uint64_t seed = 0, std::int64_t entry_bound = kDefaultEntryBound);

struct QuadraticForm {
  IntMatrix cartan;
  IntMatrix symmetrized;  // C + C^T

  [[nodiscard]] Rational eval(const std::vector<Rational>& x) const;
  [[nodiscard]] Rational eval(const GVector& v) const;
  /// q(v / sum |v_i|); throws ZeroVector.
  [[nodiscard]] Rational eval_normalized(const GVector& v) const;
};

QuadraticForm qform(const AlgebraPtr& A);
/// Null space of C + C^T as primitive integer vectors.
std::vector<GVector> hq_nullspace(const AlgebraPtr& A);

struct ConvergenceProbe {
  std::vector<std::pair<GVector, Rational>> sequence;  // positive rays by increasing l1, with q of the normalized ray
  std::optional<Rational> infimum;
  std::vector<std::vector<Rational>> limit_candidates;  // normalized
};

/// Rays closer than this in the max norm (after normalizing) are clustered.
const Rational kClusterTolerance(1, 20);

ConvergenceProbe tau_convergence_probe(const AlgebraPtr& A, const FanSnapshot& snapshot);

enum class CandidateSource { NullSpace, ConvergenceLimit };
std::string source_name(CandidateSource s);

struct CandidateRay {
  GVector vector;
  Rational q_value;
  Membership membership;
  std::vector<CandidateSource> sources;
  /// q = 0 and not found in any enumerated cone.
  [[nodiscard]] bool flagged() const { return q_value == 0 && !membership.found; }
};

std::vector<CandidateRay> outside_fan_candidates(const AlgebraPtr& A, const FanSnapshot& snapshot);

struct ChamberViolation {
  std::size_t cone = 0;
  Rational q_value;  // at the ray-sum interior point
  /// The chamber belongs to a faithful tau-tilting module of projective dimension <= 1,
  /// where positivity is forced by the AR formula.
  bool faithful_tilting = false;
};

/// Cones whose ray-sum interior point has q <= 0.
std::vector<ChamberViolation> chamber_positivity_check(const AlgebraPtr& A, const FanSnapshot& snapshot);
bool is_faithful_tilting_pd1(const SttPair& pair);

struct FaithfulSum {
  bool faithful = false;
  std::vector<Representation> terms;
  std::vector<std::size_t> trials;  // sample index of each term
  TwoSidedIdeal annihilator;        // joint annihilator of the terms
};

/// Greedy: keep samples that shrink the joint annihilator.
FaithfulSum build_faithful_sum(const AlgebraPtr& A, const GVector& v, std::size_t max_terms, std::uint64_t seed,
                               std::int64_t entry_bound = kDefaultEntryBound);

struct ImageBrick {
  Representation brick;
  Morphism map;  // Z -> tau Z
};

/// Image of a nonzero Z -> tau Z of small rank that is a brick. Throws TauRigidInput, SearchExhausted.
ImageBrick minimal_image_brick(const Representation& Z, std::uint64_t seed = 0);

/// dim End(T) against dim T over the tau-rigid modules of a snapshot.
struct EndSurveyRow {
  GVector g;
  std::size_t dim_module = 0;
  std::size_t dim_end = 0;
};
std::vector<EndSurveyRow> end_dimension_survey(const FanSnapshot& snapshot);

}  // namespace bricklab
