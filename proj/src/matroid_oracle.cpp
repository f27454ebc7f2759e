#include <algorithm>
#include <numeric>

#include "cylrig/error.hpp"
#include "cylrig/matroids.hpp"

namespace cylrig {

namespace {

class BruteForceExchange final : public ExchangeQuery {
 public:
  BruteForceExchange(const MatroidOracle& oracle, std::span<const EdgeId> base)
      : oracle_(oracle), base_(base.begin(), base.end()) {}

  bool can_add(EdgeId in) override {
    EdgeSet trial = base_;
    trial.insert(std::lower_bound(trial.begin(), trial.end(), in), in);
    return oracle_.is_independent(trial);
  }

  bool can_swap(EdgeId out, EdgeId in) override {
    EdgeSet trial;
    trial.reserve(base_.size());
    for (EdgeId e : base_)
      if (e != out) trial.push_back(e);
    trial.insert(std::lower_bound(trial.begin(), trial.end(), in), in);
    return oracle_.is_independent(trial);
  }

 private:
  const MatroidOracle& oracle_;
  EdgeSet base_;
};

// Exchanges in a forest: in closes a cycle through the tree path between its
// endpoints, and only edges on that path can leave.
class ForestExchange final : public ExchangeQuery {
 public:
  ForestExchange(const Graph& g, std::span<const EdgeId> base) : g_(g), adj_(g.num_vertices()) {
    for (EdgeId e : base) {
      const Edge& ed = g.edge(e);
      adj_[static_cast<std::size_t>(ed.u)].emplace_back(ed.v, e);
      adj_[static_cast<std::size_t>(ed.v)].emplace_back(ed.u, e);
    }
  }

  bool can_add(EdgeId in) override {
    path(in);
    return !connected_;
  }

  bool can_swap(EdgeId out, EdgeId in) override {
    const EdgeSet& p = path(in);
    if (!connected_) return true;
    return std::binary_search(p.begin(), p.end(), out);
  }

 private:
  const EdgeSet& path(EdgeId in) {
    if (in == cached_in_) return cached_path_;
    cached_in_ = in;
    cached_path_.clear();
    const Edge& ed = g_.edge(in);
    const std::size_t n = adj_.size();
    std::vector<std::pair<VertexId, EdgeId>> parent(n, {-1, -1});
    std::vector<char> seen(n, 0);
    std::vector<VertexId> queue{ed.u};
    seen[static_cast<std::size_t>(ed.u)] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      VertexId x = queue[i];
      for (auto [y, e] : adj_[static_cast<std::size_t>(x)]) {
        if (seen[static_cast<std::size_t>(y)]) continue;
        seen[static_cast<std::size_t>(y)] = 1;
        parent[static_cast<std::size_t>(y)] = {x, e};
        queue.push_back(y);
      }
    }
    connected_ = seen[static_cast<std::size_t>(ed.v)] != 0;
    if (connected_) {
      for (VertexId y = ed.v; y != ed.u; y = parent[static_cast<std::size_t>(y)].first)
        cached_path_.push_back(parent[static_cast<std::size_t>(y)].second);
      std::sort(cached_path_.begin(), cached_path_.end());
    }
    return cached_path_;
  }

  const Graph& g_;
  std::vector<std::vector<std::pair<VertexId, EdgeId>>> adj_;
  EdgeId cached_in_ = -1;
  EdgeSet cached_path_;
  bool connected_ = false;
};

// Holds a pebble game loaded with the base set; a swap query removes out,
// tests in and puts out back.
class PebbleExchange final : public ExchangeQuery {
 public:
  PebbleExchange(const Graph& g, CountParams params, std::span<const EdgeId> base)
      : g_(g), game_(g.num_vertices(), params) {
    for (EdgeId e : base) {
      if (!game_.add_edge(g.edge(e).u, g.edge(e).v))
        throw MatroidAxiomError("exchange base is not " + params.str() + "-sparse");
    }
  }

  bool can_add(EdgeId in) override { return game_.can_add(g_.edge(in).u, g_.edge(in).v); }

  bool can_swap(EdgeId out, EdgeId in) override {
    const Edge& o = g_.edge(out);
    game_.remove_edge(o.u, o.v);
    bool ok = game_.can_add(g_.edge(in).u, g_.edge(in).v);
    if (!game_.add_edge(o.u, o.v)) throw MatroidAxiomError("pebble game could not restore a base edge");
    return ok;
  }

 private:
  const Graph& g_;
  PebbleGame game_;
};

}  // namespace

std::unique_ptr<ExchangeQuery> MatroidOracle::exchange(std::span<const EdgeId> base) const {
  return std::make_unique<BruteForceExchange>(*this, base);
}

bool GraphicOracle::is_independent(std::span<const EdgeId> edges) const { return is_forest(graph(), edges); }

std::unique_ptr<ExchangeQuery> GraphicOracle::exchange(std::span<const EdgeId> base) const {
  return std::make_unique<ForestExchange>(graph(), base);
}

CountOracle::CountOracle(const Graph& g, CountParams params) : MatroidOracle(g), params_(params) {
  params_.validate();
}

bool CountOracle::is_independent(std::span<const EdgeId> edges) const {
  PebbleGame game(graph().num_vertices(), params_);
  for (EdgeId e : edges)
    if (!game.add_edge(graph().edge(e).u, graph().edge(e).v)) return false;
  return true;
}

std::unique_ptr<ExchangeQuery> CountOracle::exchange(std::span<const EdgeId> base) const {
  return std::make_unique<PebbleExchange>(graph(), params_, base);
}

}  // namespace cylrig
