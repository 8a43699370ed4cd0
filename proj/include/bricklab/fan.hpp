#pragma once

// Support tau-tilting pairs, mutation and the g-vector fan.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bricklab/ar.hpp"

namespace bricklab {

/// One of the n summands of a pair: an indecomposable tau-rigid module or P_vertex in the P-part.
struct Slot {
  bool in_projective_part = false;
  std::size_t vertex = 0;
  Representation module;
  GVector ray;  // g(module), or -e_vertex
};

struct SttPair {
  AlgebraPtr algebra;
  std::vector<Slot> slots;  // sorted by ray

  [[nodiscard]] std::vector<GVector> rays() const;
  [[nodiscard]] std::vector<Representation> modules() const;
  [[nodiscard]] std::vector<std::size_t> projective_part() const;
  [[nodiscard]] std::vector<std::vector<std::int64_t>> key() const;
  [[nodiscard]] std::size_t size() const { return slots.size(); }
};

struct SttCheck {
  bool ok = false;
  std::string failure;  // empty when ok
};

/// Basicness, tau-rigidity of the sum, Hom(P, M) = 0 and |M| + |P| = n.
SttCheck is_stt_pair(const AlgebraPtr& A, const std::vector<Representation>& M,
                     const std::vector<std::size_t>& P);
SttCheck is_stt_pair(const SttPair& pair);

/// Builds the pair with slots sorted by ray; does not verify.
SttPair make_pair(const AlgebraPtr& A, const std::vector<Representation>& M, const std::vector<std::size_t>& P);
/// (A, 0).
SttPair initial_pair(const AlgebraPtr& A);

/// Caches tau and Hom(X, tau Y) by g-vector; g-vectors determine tau-rigid modules.
class TauCache {
 public:
  const Representation& tau_of(const Representation& M, const GVector& g);
  bool compatible(const Slot& a, const Slot& b);

 private:
  std::map<std::pair<const Algebra*, std::vector<std::int64_t>>, Representation> tau_;
  std::map<std::tuple<const Algebra*, std::vector<std::int64_t>, std::vector<std::int64_t>>, bool> hom_;
};

struct Mutation {
  SttPair pair;
  std::size_t new_index = 0;  // slot of the new summand in `pair`
  bool left = true;           // the old pair is the larger one
  Representation label;       // brick labelling the edge
};

/// Exchanges slot `index`. Throws MutationFailed when no verified completion is produced.
Mutation mutate_with_label(const SttPair& pair, std::size_t index, TauCache* cache = nullptr);
SttPair mutate(const SttPair& pair, std::size_t index);

/// Pairs agree when rays agree and module summands are isomorphic slot by slot.
bool same_pair(const SttPair& a, const SttPair& b);

struct FanEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  std::size_t index = 0;     // slot mutated in `from`
  std::size_t upper = 0;     // the larger pair of the two
  Representation label;
};

struct FanSnapshot {
  AlgebraPtr algebra;
  std::vector<SttPair> cones;
  std::vector<GVector> rays;  // sorted, deduplicated
  std::vector<FanEdge> edges;
  bool complete = false;
  std::size_t steps_used = 0;
};

constexpr std::size_t kDefaultMaxSteps = 10000;

/// Return false to stop enumeration early.
using LabelObserver = std::function<bool(const Representation& label)>;

FanSnapshot enumerate_fan(const AlgebraPtr& A, std::size_t max_steps = kDefaultMaxSteps,
                          const LabelObserver& observer = {});

struct Membership {
  bool found = false;
  std::size_t cone = 0;
  std::vector<Rational> coefficients;  // along cones[cone].rays()
};
Membership fan_membership(const GVector& v, const FanSnapshot& snapshot);
Membership fan_membership(const std::vector<Rational>& v, const FanSnapshot& snapshot);

struct BrickFiniteness {
  bool finite = false;
  std::vector<Representation> bricks;  // Psi-images when finite
  std::size_t steps_used = 0;
};
BrickFiniteness is_brick_finite(const AlgebraPtr& A, std::size_t max_steps = kDefaultMaxSteps);

enum class Tristate { True, False, Unknown };
struct LrdResult {
  Tristate value = Tristate::Unknown;
  std::optional<Representation> witness;  // brick that is not tau-rigid
  std::size_t steps_used = 0;
};
LrdResult is_locally_rep_directed(const AlgebraPtr& A, std::size_t max_steps = kDefaultMaxSteps);

/// Indecomposable tau-rigid modules appearing in the snapshot, one per ray.
std::vector<Representation> tau_rigid_modules(const FanSnapshot& snapshot);

}  // namespace bricklab
