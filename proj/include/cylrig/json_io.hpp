#pragma once

#include <cstdint>
#include <optional>

#include <json.hpp>

#include "cylrig/characterize.hpp"
#include "cylrig/matroids.hpp"
#include "cylrig/normed_space.hpp"
#include "cylrig/rigidity_linear.hpp"

namespace cylrig {

using Json = nlohmann::ordered_json;

/// {"h": [...], "trees": [[...], ...]}, plus "rest" when non-empty.
Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

/// {"0": ["num/den", ...], "1": [...], ...}
Json to_json(const Placement& p);
Placement placement_from_json(const Json& j);

/// Rows of "num/den" strings when exact, numbers otherwise.
Json to_json(const RMatrix& m);

struct Screens {
  NecessaryScreens counts;
  bool connectivity_sufficient = false;
  int edge_connectivity = 0;
};
Screens compute_screens(const Graph& g, SpaceKind kind);
Json to_json(const Screens& s);

/// Per-graph report object.
Json report_json(const Graph& g, const RigidityReport& r, std::optional<Screens> screens, std::uint64_t seed);

}  // namespace cylrig
