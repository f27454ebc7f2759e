#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "cylrig/graph.hpp"
#include "cylrig/normed_space.hpp"
#include "cylrig/rigidity_linear.hpp"

namespace cylrig {

/// The spaces with a combinatorial characterisation.
enum class SpaceKind {
  CylEuclid,   // linf(l2(2))
  CylGeneric,  // linf(X), X a generic non-Euclidean plane such as lq
  ConeEuclid,  // l1(l2(2))
  Cyl4,        // linf(l1(l2(2)))
};

/// "cyl-euclid", "cyl-lq", "cone-euclid", "cyl4".
std::string to_string(SpaceKind k);
SpaceKind parse_space_kind(std::string_view name);
/// Concrete space for the kind; q is used by CylGeneric.
Space space_for(SpaceKind k, const Rational& q = Rational(3, 2));
/// Kind of a concrete space, when it has one.
std::optional<SpaceKind> kind_of(const Space& s);

/// Rank of the rigidity matroid on n vertices (0 for n <= 1).
int rank_target(SpaceKind k, int n);

/// Combinatorial verdicts for the space kind, with certificates.
RigidityReport classify(const Graph& g, SpaceKind kind);

/// The edge-connectivity hypotheses of the sufficient conditions for
/// rigidity (exhaustive over deleted vertex sets).
bool connectivity_sufficient(const Graph& g, SpaceKind kind);

struct NecessaryScreens {
  /// |E| >= 2(|V| - 1), needed for rigidity (|V| >= 2).
  bool rigid_count = false;
  /// Count condition needed for minimal rigidity: (3,4)-tight for
  /// cyl-euclid / cone-euclid, (3,3)-tight for cyl-lq, |E| = 4|V|-5 for cyl4.
  bool minimal_count = false;
  std::string minimal_rule;
};
NecessaryScreens necessary_counts(const Graph& g, SpaceKind kind);

/// Compares the report with a randomized rank computation in `space` and
/// appends any disagreement to report.conflicts. Returns the numeric result.
RandomizedResult numeric_cross_check(const Graph& g, SpaceKind kind, const Space& space, RigidityReport& report,
                                     std::uint64_t seed, int retries = 3, double tau = kRankTolerance);

}  // namespace cylrig
