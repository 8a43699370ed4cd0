#pragma once

// Krull-Schmidt decomposition and isomorphism tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "bricklab/representation.hpp"

namespace bricklab {

struct Piece {
  Representation module;
  Morphism inclusion;  // into the decomposed module
  bool geometric_split_warning = false;
};

struct Summand {
  Representation module;
  std::size_t multiplicity = 1;
  bool geometric_split_warning = false;
};

/// Indecomposable pieces whose inclusions give M as an internal direct sum.
std::vector<Piece> split_indecomposable(const Representation& M, std::uint64_t seed = 0);
/// Pieces grouped up to isomorphism, ordered by dimension vector.
std::vector<Summand> decompose(const Representation& M, std::uint64_t seed = 0);
/// Projections matching the inclusions of `pieces`.
std::vector<Morphism> piece_projections(const Representation& M, const std::vector<Piece>& pieces);
bool is_indecomposable(const Representation& M, std::uint64_t seed = 0);

/// Exact for indecomposables: an isomorphism X -> Y or nullopt.
std::optional<Morphism> indecomposable_isomorphism(const Representation& X, const Representation& Y,
                                                   std::uint64_t seed = 0);

enum class IsoStatus { Isomorphic, NotIsomorphic, Unknown };

struct IsoResult {
  IsoStatus status = IsoStatus::Unknown;
  std::optional<Morphism> certificate;
};

IsoResult isomorphism(const Representation& M, const Representation& N, std::uint64_t seed = 0);
bool isomorphic(const Representation& M, const Representation& N, std::uint64_t seed = 0);

/// Splits copies of the given indecomposables off M. counts[k] copies of knowns[k]
/// were found; the remainder is a complement.
struct KnownSplit {
  std::vector<std::size_t> counts;
  Representation remainder;
};
KnownSplit split_off_known(const Representation& M, const std::vector<Representation>& knowns,
                           std::uint64_t seed = 0);

}  // namespace bricklab
