#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "coxgrowth/diagram.hpp"

namespace coxgrowth {

inline constexpr int kMaxEnumerationRank = 8;

/// Simple graph on at most 8 vertices as a bitmask over the 28 vertex pairs.
struct SmallGraph {
  int n = 0;
  std::uint32_t mask = 0;

  static int pair_index(int i, int j) {  // 0-based, i < j
    return j * (j - 1) / 2 + i;
  }
  bool has(int i, int j) const {
    if (i > j) std::swap(i, j);
    return (mask >> pair_index(i, j)) & 1u;
  }
  int edge_count() const { return std::popcount(mask); }
  /// Edges (i, j), 0-based with i < j, in pair-index order.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (has(i, j)) out.emplace_back(i, j);
    std::sort(out.begin(), out.end(), [](auto a, auto b) { return pair_index(a.first, a.second) < pair_index(b.first, b.second); });
    return out;
  }
  bool connected() const {
    if (n == 0) return true;
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint32_t next = 0;
      for (int v = 0; v < n; ++v)
        if ((frontier >> v) & 1u)
          for (int w = 0; w < n; ++w)
            if (w != v && has(v, w) && !((seen >> w) & 1u)) next |= 1u << w;
      seen |= next;
      frontier = next;
    }
    return seen == (1u << n) - 1u;
  }
};

namespace detail {

inline std::uint32_t permute_mask(const SmallGraph& g, const std::vector<int>& perm) {
  std::uint32_t m = 0;
  for (int j = 1; j < g.n; ++j)
    for (int i = 0; i < j; ++i)
      if (g.has(i, j)) {
        int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
        if (a > b) std::swap(a, b);
        m |= 1u << SmallGraph::pair_index(a, b);
      }
  return m;
}

/// Calls f(perm) for every relabelling that sends vertices, sorted by degree,
/// onto consecutive positions; the images of isomorphic graphs coincide as sets.
template <class F>
void for_each_degree_respecting(const SmallGraph& g, F&& f) {
  std::vector<int> deg(static_cast<std::size_t>(g.n), 0);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j && g.has(i, j)) ++deg[static_cast<std::size_t>(i)];
  std::vector<int> order(static_cast<std::size_t>(g.n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return deg[static_cast<std::size_t>(a)] != deg[static_cast<std::size_t>(b)]
               ? deg[static_cast<std::size_t>(a)] < deg[static_cast<std::size_t>(b)]
               : a < b;
  });
  // Blocks of equal degree; permute within each block.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t s = 0; s < order.size();) {
    std::size_t e = s;
    while (e < order.size() && deg[static_cast<std::size_t>(order[e])] == deg[static_cast<std::size_t>(order[s])]) ++e;
    blocks.emplace_back(s, e);
    s = e;
  }
  std::vector<int> perm(static_cast<std::size_t>(g.n));
  std::function<void(std::size_t)> rec = [&](std::size_t b) {
    if (b == blocks.size()) {
      for (std::size_t pos = 0; pos < order.size(); ++pos) perm[static_cast<std::size_t>(order[pos])] = static_cast<int>(pos);
      f(perm);
      return;
    }
    auto [s, e] = blocks[b];
    std::sort(order.begin() + static_cast<long>(s), order.begin() + static_cast<long>(e));
    do {
      rec(b + 1);
    } while (std::next_permutation(order.begin() + static_cast<long>(s), order.begin() + static_cast<long>(e)));
  };
  rec(0);
}

}  // namespace detail

/// Least mask over degree-respecting relabellings; equal iff isomorphic.
inline SmallGraph canonical_form(const SmallGraph& g) {
  std::uint32_t best = UINT32_MAX;
  detail::for_each_degree_respecting(g, [&](const std::vector<int>& p) { best = std::min(best, detail::permute_mask(g, p)); });
  return {g.n, best};
}

/// Vertex permutations preserving the graph.
inline std::vector<std::vector<int>> automorphisms(const SmallGraph& g) {
  std::vector<std::vector<int>> out;
  detail::for_each_degree_respecting(g, [&](const std::vector<int>& p) {
    if (detail::permute_mask(g, p) == g.mask) out.push_back(p);
  });
  return out;
}

/// All graphs on n vertices with exactly e edges, one per isomorphism class,
/// ordered by canonical mask.
inline std::vector<SmallGraph> graphs_with_edges(int n, int e) {
  require(n >= 1 && n <= kMaxEnumerationRank, ErrorKind::ScanTooLarge, "graph enumeration supports 1..8 vertices");
  const int pairs = n * (n - 1) / 2;
  if (e < 0 || e > pairs) return {};
  std::set<std::uint32_t> level{0};
  for (int k = 0; k < e; ++k) {
    std::set<std::uint32_t> next;
    for (std::uint32_t m : level)
      for (int bit = 0; bit < pairs; ++bit)
        if (!((m >> bit) & 1u)) next.insert(canonical_form({n, m | (1u << bit)}).mask);
    level = std::move(next);
  }
  std::vector<SmallGraph> out;
  for (std::uint32_t m : level) out.push_back({n, m});
  return out;
}

/// Unlabelled trees on n vertices.
inline std::vector<SmallGraph> trees(int n) {
  std::vector<SmallGraph> out;
  for (const auto& g : graphs_with_edges(n, n - 1))
    if (g.connected()) out.push_back(g);
  return out;
}

/// Visits one edge labelling per automorphism orbit (the lexicographically least),
/// as a Coxeter system whose absent pairs are infinite.
template <class F>
void for_each_labelling(const SmallGraph& g, const std::vector<long>& labels, F&& visit) {
  const auto es = g.edges();
  const std::size_t e = es.size();
  const std::size_t L = labels.size();
  if (L == 0) return;
  // Edge permutation induced by each nontrivial automorphism.
  std::vector<std::vector<std::size_t>> edge_perms;
  for (const auto& p : automorphisms(g)) {
    std::vector<std::size_t> ep(e);
    bool identity = true;
    for (std::size_t k = 0; k < e; ++k) {
      int a = p[static_cast<std::size_t>(es[k].first)], b = p[static_cast<std::size_t>(es[k].second)];
      if (a > b) std::swap(a, b);
      const auto it = std::find(es.begin(), es.end(), std::pair{a, b});
      ep[k] = static_cast<std::size_t>(it - es.begin());
      identity = identity && ep[k] == k;
    }
    if (!identity) edge_perms.push_back(std::move(ep));
  }
  std::vector<std::size_t> digit(e, 0), image(e);
  while (true) {
    bool minimal = true;
    for (const auto& ep : edge_perms) {
      for (std::size_t k = 0; k < e; ++k) image[ep[k]] = digit[k];
      if (std::lexicographical_compare(image.begin(), image.end(), digit.begin(), digit.end())) {
        minimal = false;
        break;
      }
    }
    if (minimal) {
      CoxeterSystem s(g.n);
      for (std::size_t k = 0; k < e; ++k) s.set_label(es[k].first + 1, es[k].second + 1, Label(labels[digit[k]]));
      visit(s);
    }
    std::size_t k = 0;
    while (k < e && ++digit[k] == L) digit[k++] = 0;
    if (k == e) break;
  }
}

/// Rough orbit count sum over ranks and edge counts of C(pairs, e) L^e / n!.
inline double estimated_orbits(int max_rank, int labels, int min_chi, int max_chi) {
  double total = 0;
  for (int n = 1; n <= max_rank; ++n) {
    const int pairs = n * (n - 1) / 2;
    double fact = std::tgamma(n + 1.0);
    for (int e = std::max(0, n - max_chi); e <= std::min(pairs, n - min_chi); ++e) {
      const double choose = std::exp(std::lgamma(pairs + 1.0) - std::lgamma(e + 1.0) - std::lgamma(pairs - e + 1.0));
      total += choose * std::pow(static_cast<double>(labels), e) / fact;
    }
  }
  return total;
}

}  // namespace coxgrowth
