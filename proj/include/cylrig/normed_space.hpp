#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cylrig/graph.hpp"
#include "cylrig/rational.hpp"

namespace cylrig {

/// A finite dimensional normed space built from planes by the cylindrical
/// (max) and conical (sum) product with the real line.
class Space {
 public:
  enum class Kind { EuclideanPlane, LqPlane, Cylinder, Cone };

  static Space euclidean_plane();
  /// q > 1; q = 2 gives the Euclidean plane.
  static Space lq_plane(const Rational& q);
  static Space cylinder(const Space& inner);
  static Space cone(const Space& inner);

  Kind kind() const { return kind_; }
  bool is_plane() const { return kind_ == Kind::EuclideanPlane || kind_ == Kind::LqPlane; }
  bool is_product() const { return !is_plane(); }
  const Rational& q() const { return q_; }
  /// Throws PreconditionError for planes.
  const Space& inner() const;

  int dim() const { return dim_; }
  /// Dimension of the space of trivial infinitesimal flexes.
  int trivial_flex_dim() const;
  /// The first two coordinates carry a Euclidean plane, so the space has a
  /// rotational trivial flex.
  bool has_rotation() const;
  /// Whether every norm comparison can be decided in exact arithmetic.
  bool exact_comparisons() const;

  /// Norm expression: "l2(2)", "lq(2,3/2)", "linf(...)", "l1(...)".
  std::string str() const;

  friend bool operator==(const Space& a, const Space& b);

 private:
  Space(Kind kind, int dim) : kind_(kind), dim_(dim) {}

  Kind kind_;
  int dim_;
  Rational q_ = 2;
  std::shared_ptr<const Space> inner_;
};

/// Parses a norm expression; throws ParseError with the byte offset.
Space parse_space(std::string_view text);

/// Absolute tolerance used for floating norm comparisons.
inline constexpr double kNormTolerance = 1e-12;

struct NormValue {
  double approx = 0;
  /// Present when the norm is a rational number.
  std::optional<Rational> exact;
};

/// Throws PreconditionError on a dimension mismatch.
NormValue norm(const Space& space, const Vector& v);

/// Sign of ||v|| - c. Exact where the space allows; in floating mode values
/// within kNormTolerance compare as equal.
int compare_norm(const Space& space, const Vector& v, const Rational& c);

enum class ConeRegion { Interior, Boundary, Complement };
std::string to_string(ConeRegion r);

/// Position of (x, y) relative to the double cone ||x|| <= |y| of a
/// cylindrical space. The zero vector is reported as Boundary.
ConeRegion cone_region(const Space& space, const Vector& v);

/// Why z fails to be a smooth point, or nullopt when it is smooth.
std::optional<std::string> smoothness_failure(const Space& space, const Vector& z);
bool is_smooth(const Space& space, const Vector& z);

/// Coefficients of a linear functional on the space.
struct SupportRow {
  std::vector<double> approx;
  std::optional<Vector> exact;

  bool is_exact() const { return exact.has_value(); }
  double apply(const std::vector<double>& u) const;
};

/// The support functional phi_z (phi_z(z) = ||z||^2, operator norm ||z||).
/// Throws SmoothnessError if z is not smooth.
SupportRow support_row(const Space& space, const Vector& z);
/// phi_z / ||z|| for conical spaces; support_row for the rest. Used as the
/// row form of rigidity matrices, and recursively inside products.
SupportRow rigidity_row(const Space& space, const Vector& z);

/// Points indexed by vertex id.
struct Placement {
  int dim = 0;
  std::vector<Vector> points;

  Placement() = default;
  Placement(int dim, std::vector<Vector> points);

  int num_vertices() const { return static_cast<int>(points.size()); }
  const Vector& operator[](VertexId v) const { return points.at(static_cast<std::size_t>(v)); }
  Vector displacement(VertexId v, VertexId w) const;
  /// Drops the last coordinate.
  Placement project_inner() const;
  /// Last coordinate per vertex.
  std::vector<Rational> heights() const;
  /// Every point shifted by t.
  Placement translated(const Vector& t) const;

  friend bool operator==(const Placement&, const Placement&) = default;
};

enum class EdgeColour { Blue, Green };

struct EdgeColouring {
  std::vector<EdgeColour> colour;

  EdgeSet blue() const;
  EdgeSet green() const;
};

/// Blue where the edge displacement lies outside the double cone, green
/// inside. Throws NotWellPositionedError on a boundary or zero displacement.
EdgeColouring monochrome_labelling(const Graph& g, const Placement& p, const Space& space);

/// Every edge displacement is a smooth point of the space.
bool is_well_positioned(const Graph& g, const Placement& p, const Space& space);

/// First edge whose displacement is not smooth, with the reason.
std::optional<std::pair<EdgeId, std::string>> first_non_smooth_edge(const Graph& g, const Placement& p,
                                                                     const Space& space);

}  // namespace cylrig
