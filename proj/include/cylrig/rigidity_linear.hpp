#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "cylrig/graph.hpp"
#include "cylrig/linear_algebra.hpp"
#include "cylrig/matroids.hpp"
#include "cylrig/normed_space.hpp"

namespace cylrig {

/// Dense matrix with rational entries when every entry is known exactly.
struct RMatrix {
  int rows = 0;
  int cols = 0;
  Eigen::MatrixXd approx;
  std::optional<std::vector<Vector>> exact;

  bool is_exact() const { return exact.has_value(); }
  /// "num/den" cells when exact, decimal otherwise.
  std::string to_csv() const;
};

/// Columns of b placed to the right of a. Exact iff both are.
RMatrix hstack(const RMatrix& a, const RMatrix& b);

/// Exact rank when available, otherwise singular-value rank.
int rank(const RMatrix& m, double tau = kRankTolerance);

/// Directed edges: arcs[e] = (initial vertex, terminal vertex).
struct Orientation {
  std::vector<std::pair<VertexId, VertexId>> arcs;
};

/// Every edge directed from its smaller to its larger endpoint.
Orientation default_orientation(const Graph& g);
/// v -> w when the last coordinate of p_v exceeds that of p_w. Throws
/// PreconditionError when an edge has equal heights.
Orientation height_orientation(const Graph& g, const Placement& p);

/// Row e = vw holds the rigidity row of p_v - p_w in the columns of v and its
/// negation in those of w. Throws NotWellPositionedError naming the edge.
RMatrix rigidity_matrix(const Graph& g, const Placement& p, const Space& space);

/// |E| x |V| matrix: +b_e at the initial vertex of e, -b_e at the other
/// endpoint, b_e non-zero dyadic rationals drawn from the seed.
RMatrix b_matrix(const Graph& g, const Orientation& orient, std::uint64_t seed);
/// Same with the multipliers given explicitly.
RMatrix b_matrix(const Graph& g, const Orientation& orient, const std::vector<Rational>& b);

/// A random placement in the space whose edge displacements are all smooth.
Placement random_placement(const Graph& g, const Space& space, std::mt19937_64& rng);

struct RandomizedResult {
  bool independent = false;
  int rank = 0;
  int attempts = 0;
  bool exact = false;
};

/// Independence in a cylinder over a generic space via rank [R_X(G,p) B(G)]
/// with random p and b. A rank deficiency is retried with fresh randomness up
/// to `retries` more times before the set is reported dependent.
RandomizedResult randomized_independence(const Graph& g, const Space& cylinder, std::uint64_t seed,
                                         int retries = 3, double tau = kRankTolerance);

/// [R(G,q) D(G,q) I(G,delta)] for a placement q in the inner space of a cone,
/// with D the diagonal of inner edge lengths.
RMatrix conical_m_matrix(const Graph& g, const Placement& q, const Orientation& orient, const Space& cone);

/// Trivial infinitesimal flexes evaluated at p, one per row (dim*|V|
/// columns): a translation per coordinate and, when the space contains a
/// Euclidean plane in its first two coordinates, the rotation of that plane.
RMatrix trivial_flexes(const Placement& p, const Space& space);

enum class Method { Combinatorial, ExactRank, FloatRank, RandomizedExact, RandomizedFloat };
std::string to_string(Method m);

struct RigidityReport {
  std::string space;
  bool independent = false;
  bool rigid = false;
  bool minimally_rigid = false;
  int rank = 0;
  int rank_target = 0;
  Method method = Method::Combinatorial;
  /// Fewer vertices than the space dimension; rigidity was decided by
  /// comparing the kernel with the evaluated trivial flexes.
  bool small_instance = false;
  std::optional<Decomposition> decomposition;
  std::optional<Placement> placement;
  /// Edge-disjoint spanning trees, when the certificate is a tree packing.
  std::vector<EdgeSet> spanning_trees;
  /// Free-form notes on how verdicts were derived.
  std::vector<std::string> notes;
  /// Disagreements between methods; empty when all agree.
  std::vector<std::string> conflicts;
};

/// Infinitesimal rigidity of a well-positioned framework from the rank of its
/// rigidity matrix: rigid when every infinitesimal flex is trivial.
RigidityReport infinitesimal_rigidity(const Graph& g, const Placement& p, const Space& space,
                                      double tau = kRankTolerance);

struct ProjectedCheck {
  EdgeSet blue;
  EdgeSet green;
  bool blue_independent = false;
  bool blue_rigid = false;
  bool green_forest = false;
  bool green_connected = false;
  bool full_independent = false;
  bool full_rigid = false;
  /// Product rule agreement for both independence and rigidity.
  bool matches = false;
};

/// Compares the framework's verdicts to those of its projected blue part in
/// the inner space and its green part on the line.
ProjectedCheck projected_rank_check(const Graph& g, const Placement& p, const Space& cylinder,
                                    double tau = kRankTolerance);

}  // namespace cylrig
