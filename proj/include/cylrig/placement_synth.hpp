#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "cylrig/graph.hpp"
#include "cylrig/matroids.hpp"
#include "cylrig/normed_space.hpp"
#include "cylrig/rigidity_linear.hpp"

namespace cylrig {

/// Construction data for one tree of the forest.
struct LevelData {
  VertexId root = 0;
  /// levels[k]: vertices at tree distance k from the root, ascending.
  std::vector<std::vector<VertexId>> levels;
  /// Tree parent per vertex of the component (-1 for the root and for
  /// vertices of other components).
  std::vector<VertexId> parent;
  /// Radii s_0 > s_1 > ... and r_k = s_k + epsilon / 2^k.
  std::vector<Rational> s;
  std::vector<Rational> r;
  Rational epsilon;
  /// h[k] = sum_{i<k} (-1)^i r_i; h[0] = 0.
  std::vector<Rational> h;
};

struct KeyLemmaResult {
  Placement placement;
  std::vector<LevelData> trees;
  /// Component index per vertex (components ordered by smallest vertex).
  std::vector<int> component;
  /// Horizontal shift x; component i is moved by i * x.
  Vector shift;
  /// Every inequality was decided in exact arithmetic.
  bool exact = false;
};

/// Placement in the cylinder over `inner` whose green edges are exactly the
/// forest edges and whose blue edges are the rest. The forest must be
/// acyclic; it may be disconnected. Inner spaces: planes only.
KeyLemmaResult key_lemma_construction(const Graph& g, const EdgeSet& forest, const Space& inner);
Placement key_lemma_placement(const Graph& g, const EdgeSet& forest, const Space& inner);

/// The colouring of (g, p) is green exactly on the forest, with no boundary
/// edges.
bool verify_colouring(const Graph& g, const Placement& p, const EdgeSet& forest, const Space& cylinder);

/// Smallest gap | ||x|| - |y| | over the edge displacements (floating).
double cone_margin(const Graph& g, const Placement& p, const Space& cylinder);

/// Random dyadic jitter of every coordinate, scaled to a fraction of the cone
/// margin and halved until the colouring of the forest is kept.
Placement perturb_placement(const Graph& g, const Placement& p, const EdgeSet& forest, const Space& cylinder,
                            std::mt19937_64& rng);

struct CertifiedPlacement {
  Placement placement;
  RigidityReport report;
  int attempts = 0;
};

/// Realises a decomposition H + T (trees[0] the green part): Key Lemma
/// placement for T, then jitter until the rank of R(G,p) reaches the
/// expected value for the certificate or `attempts` is exhausted.
CertifiedPlacement realise_decomposition(const Graph& g, const Decomposition& d, const Space& inner,
                                         std::uint64_t seed, int attempts = 8);

}  // namespace cylrig
