#include "powerclass/rhee.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "powerclass/constructions.hpp"
#include "powerclass/kempe.hpp"

namespace powerclass {

ExchangeState make_exchange_state(std::shared_ptr<const Graph> target, EdgeColoring coloring) {
  if (!target || target->n() != coloring.n()) throw std::invalid_argument("exchange state: target and coloring sizes differ");
  ExchangeState s{std::move(coloring), std::move(target), {}, {}};
  for (const auto& e : s.coloring.colored_edges())
    if (!s.target->has_edge(e)) s.extra.insert(e);
  for (const auto& e : s.target->edges())
    if (!s.coloring.is_colored(e)) s.missing.insert(e);
  return s;
}

namespace {

void record_removal(ExchangeState& s, const Edge& e) {
  if (s.target->has_edge(e)) {
    s.missing.insert(e);
  } else {
    s.extra.erase(e);
  }
}

void record_addition(ExchangeState& s, const Edge& e) {
  if (s.target->has_edge(e)) {
    s.missing.erase(e);
  } else {
    s.extra.insert(e);
  }
}

std::vector<Color> with_preferred_first(std::vector<Color> colors, Color preferred) {
  auto it = std::find(colors.begin(), colors.end(), preferred);
  if (it != colors.end()) std::rotate(colors.begin(), it, it + 1);
  return colors;
}

bool color_added_edge(ExchangeState& s, const Edge& add, Color freed, ExchangeStats* stats) {
  auto& c = s.coloring;
  const auto mu = with_preferred_first(c.missing_colors(add.u), freed);
  const auto mv = c.missing_colors(add.v);
  for (Color a : mu) {
    if (std::find(mv.begin(), mv.end(), a) != mv.end()) {
      c.assign(add, a);
      if (stats) ++stats->direct;
      return true;
    }
  }
  const Vertex ends[2][2] = {{add.u, add.v}, {add.v, add.u}};
  for (const auto& [p, q] : ends) {
    // p misses a, q misses b; the {a,b} path from q leaves along a.
    const auto mp = with_preferred_first(c.missing_colors(p), freed);
    const auto mq = c.missing_colors(q);
    for (Color a : mp) {
      for (Color b : mq) {
        if (a == b) continue;
        const auto path = kempe_path(c, q, a, b);
        if (path.back() == p) continue;
        kempe_invert_in_place(c, path);
        c.assign(add, a);
        if (stats) ++stats->kempe;
        return true;
      }
    }
  }
  return false;
}

}  // namespace

bool try_exchange(ExchangeState& s, const Edge& remove, const Edge& add, ExchangeStats* stats) {
  auto& c = s.coloring;
  if (!c.is_colored(remove)) throw std::invalid_argument("exchange: edge to remove is not colored");
  if (c.is_colored(add)) throw std::invalid_argument("exchange: edge to add is already colored");
  const Color freed = c.color(remove);
  c.clear(remove);
  if (!color_added_edge(s, add, freed, stats)) {
    c.assign(remove, freed);
    return false;
  }
  record_removal(s, remove);
  record_addition(s, add);
  if (stats) ++stats->exchanges;
  return true;
}

std::optional<ExchangeState> exchange_edge(const ExchangeState& s, const Edge& remove, const Edge& add) {
  ExchangeState next = s;
  if (!try_exchange(next, remove, add)) return std::nullopt;
  return next;
}

namespace {

class Transformer {
 public:
  Transformer(const Graph& target, const RheeOptions& opt)
      : opt_(opt), n_(target.n()), rng_(opt.seed) {
    auto shared = std::make_shared<const Graph>(target);
    state_ = make_exchange_state(shared, base_near_coloring(n_).coloring);
  }

  RheeResult run() {
    RheeResult r;
    while (!state_.missing.empty()) {
      const Edge m = *state_.missing.begin();
      if (single_step(state_, m)) continue;
      if (opt_.sacrifice_depth >= 2 && multi_step(state_, m, opt_.sacrifice_depth, {})) {
        ++stats_.multi_step;
        bump(RheeRung::MultiStep);
        continue;
      }
      if (randomized(m)) continue;
      return fallback(r);
    }
    for (const auto& e : std::vector<Edge>(state_.extra.begin(), state_.extra.end())) {
      state_.coloring.clear(e);
      ++r.leftover_removed;
    }
    state_.extra.clear();
    if (stats_.kempe > 0) bump(RheeRung::Kempe);
    if (stats_.direct > 0) bump(RheeRung::Direct);
    r.coloring = std::move(state_.coloring);
    r.stats = stats_;
    r.highest_rung = rung_;
    return r;
  }

 private:
  void bump(RheeRung r) { rung_ = std::max(rung_, r); }

  std::vector<Edge> removal_candidates(const ExchangeState& s, const Edge& m) const {
    std::vector<Edge> near, far;
    for (const auto& a : s.extra) (a.touches(m.u) || a.touches(m.v) ? near : far).push_back(a);
    near.insert(near.end(), far.begin(), far.end());
    return near;
  }

  bool single_step(ExchangeState& s, const Edge& m) {
    for (const auto& a : removal_candidates(s, m))
      if (try_exchange(s, a, m, &stats_)) return true;
    return false;
  }

  // Sacrifice a colored target edge r at an endpoint of m, then re-insert r.
  bool multi_step(ExchangeState& s, const Edge& m, std::size_t steps, std::vector<Edge> forbidden) {
    forbidden.push_back(m);
    std::vector<Edge> sacrifices;
    for (Vertex x : {m.u, m.v})
      for (Vertex y : s.target->neighbors(x)) {
        const Edge r(x, y);
        if (r != m && s.coloring.is_colored(r) &&
            std::find(forbidden.begin(), forbidden.end(), r) == forbidden.end())
          sacrifices.push_back(r);
      }
    for (const auto& r : sacrifices) {
      ExchangeState trial = s;
      ExchangeStats local;
      if (!try_exchange(trial, r, m, &local)) continue;
      bool done = false;
      for (const auto& a : removal_candidates(trial, r)) {
        if (try_exchange(trial, a, r, &local)) {
          done = true;
          break;
        }
      }
      if (!done && steps > 2) done = multi_step(trial, r, steps - 1, forbidden);
      if (done) {
        s = std::move(trial);
        stats_.exchanges += local.exchanges;
        stats_.direct += local.direct;
        stats_.kempe += local.kempe;
        return true;
      }
    }
    return false;
  }

  void random_kempe_moves() {
    const std::size_t moves = opt_.moves_per_restart ? opt_.moves_per_restart : n_;
    const auto palette = static_cast<Color>(state_.coloring.palette());
    std::uniform_int_distribution<Vertex> pick_vertex(0, n_ - 1);
    std::uniform_int_distribution<Color> pick_color(0, palette - 1);
    for (std::size_t i = 0; i < moves; ++i) {
      const Vertex v = pick_vertex(rng_);
      const Color a = pick_color(rng_);
      Color b = pick_color(rng_);
      if (a == b) b = (b + 1) % palette;
      kempe_invert_in_place(state_.coloring, kempe_component(state_.coloring, v, a, b));
      ++stats_.random_inversions;
    }
  }

  bool randomized(const Edge& m) {
    if (state_.coloring.palette() < 2) return false;
    for (std::size_t i = 0; i < opt_.restarts; ++i) {
      ++stats_.random_restarts;
      random_kempe_moves();
      if (single_step(state_, m) || (opt_.sacrifice_depth >= 2 && multi_step(state_, m, 2, {}))) {
        bump(RheeRung::Randomized);
        return true;
      }
    }
    return false;
  }

  RheeResult& fallback(RheeResult& r) {
    r.stats = stats_;
    if (opt_.allow_backtracking) {
      auto search = is_k_edge_colorable(*state_.target, n_ - 1, opt_.node_budget);
      r.backtracking_nodes = search.nodes;
      if (search.verdict == Verdict::Yes) {
        r.coloring = std::move(search.witness);
        r.highest_rung = RheeRung::Backtracking;
        return r;
      }
    }
    r.highest_rung = rung_;
    r.partial = restrict_to(state_.coloring, *state_.target);
    r.remaining_extra.assign(state_.extra.begin(), state_.extra.end());
    r.remaining_missing.assign(state_.missing.begin(), state_.missing.end());
    return r;
  }

  RheeOptions opt_;
  std::size_t n_;
  std::mt19937_64 rng_;
  ExchangeState state_;
  ExchangeStats stats_;
  RheeRung rung_ = RheeRung::Base;
};

}  // namespace

RheeResult rhee_transform(const Graph& target, const RheeOptions& options) {
  const std::size_t n = target.n();
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("rhee_transform: order must be odd and >= 3");
  if (max_degree(target) != n - 1) throw std::invalid_argument("rhee_transform: target needs a vertex of degree n-1");
  const std::size_t m = (n - 1) / 2;
  if (target.edge_count() > 2 * m * m) throw std::invalid_argument("rhee_transform: target is overfull");
  return Transformer(target, options).run();
}

std::string to_string(RheeRung r) {
  switch (r) {
    case RheeRung::Base: return "base";
    case RheeRung::Direct: return "direct";
    case RheeRung::Kempe: return "kempe";
    case RheeRung::MultiStep: return "multi-step";
    case RheeRung::Randomized: return "randomized";
    case RheeRung::Backtracking: return "backtracking";
  }
  return "unknown";
}

}  // namespace powerclass
