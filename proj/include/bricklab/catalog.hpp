#pragma once

// Bundled algebras and the worked-example catalog.

#include <string>
#include <vector>

#include "bricklab/gluing.hpp"
#include "bricklab/io.hpp"

namespace bricklab {

std::vector<std::string> bundled_algebra_names();
/// Throws UnknownExample.
Json bundled_algebra_json(const std::string& name);
AlgebraPtr bundled_algebra(const std::string& name);

/// Kronecker algebra glued to the gentle algebra at its sink "2" and the source "y1".
GluedAlgebra glued_example();

/// The brick of the preprojective algebra of type A5 with b1 = a2 = 1.
Representation preprojective_example_module(const AlgebraPtr& pi);
/// Kronecker regular module a = 1, b = lambda.
Representation kronecker_regular(const AlgebraPtr& K, const Rational& lambda);
/// Band module of the string algebra: a1 = 1, a2 = lambda.
Representation band_module(const AlgebraPtr& S, const Rational& lambda);

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t trials = kDefaultTrials;
  std::int64_t entry_bound = kDefaultEntryBound;
};

/// One checked statement. `basis` is "published", "computed" or "immediate";
/// `reference` names the worked example or the unit-test oracle behind the expectation.
struct Assertion {
  std::string name;
  std::string basis;
  std::string reference;
  bool pass = false;
  std::string detail;
};

struct CaseResult {
  std::string id;
  std::string algebra;
  std::vector<Assertion> assertions;
  double seconds = 0;
  [[nodiscard]] bool pass() const;
};

std::vector<std::string> catalog_ids();
/// Throws UnknownExample.
CaseResult run_case(const std::string& id, const RunOptions& opts = {});
Json case_to_json(const CaseResult& r);

}  // namespace bricklab
