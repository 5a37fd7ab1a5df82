#pragma once

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "coxgrowth/diagram.hpp"

namespace coxgrowth {

enum class Sphericity { Spherical, Affine, Other };

constexpr std::string_view to_string(Sphericity s) {
  switch (s) {
    case Sphericity::Spherical: return "Spherical";
    case Sphericity::Affine: return "Affine";
    case Sphericity::Other: return "Other";
  }
  return "Other";
}

/// Coxeter-diagram graph: an edge wherever the label is >= 3 or infinite.
/// Edge weights: the label value, or 0 for infinity; absent edges are -1.
struct LabeledGraph {
  int n = 0;
  std::vector<long> w;  // n*n

  explicit LabeledGraph(int size = 0) : n(size), w(static_cast<std::size_t>(size) * size, -1) {}
  long at(int i, int j) const { return w[static_cast<std::size_t>(i) * n + j]; }
  void connect(int i, int j, long label) {
    w[static_cast<std::size_t>(i) * n + j] = label;
    w[static_cast<std::size_t>(j) * n + i] = label;
  }
  int degree(int i) const {
    int d = 0;
    for (int j = 0; j < n; ++j) d += at(i, j) >= 0 ? 1 : 0;
    return d;
  }
};

namespace detail {

inline std::vector<long> edge_label_profile(const LabeledGraph& g) {
  std::vector<long> out;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.at(i, j) >= 0) out.push_back(g.at(i, j));
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> degree_profile(const LabeledGraph& g) {
  std::vector<int> out;
  for (int i = 0; i < g.n; ++i) out.push_back(g.degree(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

/// Exact labeled-graph isomorphism by backtracking with invariant pruning.
inline bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
  if (a.n != b.n) return false;
  if (detail::edge_label_profile(a) != detail::edge_label_profile(b)) return false;
  if (detail::degree_profile(a) != detail::degree_profile(b)) return false;
  const int n = a.n;
  std::vector<int> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> extend = [&](int v) -> bool {
    if (v == n) return true;
    for (int t = 0; t < n; ++t) {
      if (used[static_cast<std::size_t>(t)] || a.degree(v) != b.degree(t)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.at(u, v) == b.at(map[static_cast<std::size_t>(u)], t);
      if (!ok) continue;
      map[static_cast<std::size_t>(v)] = t;
      used[static_cast<std::size_t>(t)] = 1;
      if (extend(v + 1)) return true;
      used[static_cast<std::size_t>(t)] = 0;
    }
    return false;
  };
  return extend(0);
}

struct DiagramType {
  std::string name;
  Sphericity kind = Sphericity::Other;
  LabeledGraph graph;
};

namespace detail {

inline LabeledGraph path_graph(const std::vector<long>& labels) {
  LabeledGraph g(static_cast<int>(labels.size()) + 1);
  for (std::size_t i = 0; i < labels.size(); ++i) g.connect(static_cast<int>(i), static_cast<int>(i) + 1, labels[i]);
  return g;
}

/// Star of three arms of the given lengths, all labels 3.
inline LabeledGraph tripod(int x, int y, int z) {
  LabeledGraph g(1 + x + y + z);
  int next = 1;
  for (int len : {x, y, z}) {
    int prev = 0;
    for (int i = 0; i < len; ++i) {
      g.connect(prev, next, 3);
      prev = next++;
    }
  }
  return g;
}

/// Path 0..m-1 plus forks: vertex m-1 hangs off vertex m-3 when fork_end,
/// vertex 0 is replaced by two leaves on vertex 1 when fork_start.
inline LabeledGraph forked(int m, bool fork_start, bool fork_end, long last_label) {
  LabeledGraph g(m);
  // Spine vertices occupy [s, e]; leaves are attached afterwards.
  const int s = fork_start ? 1 : 0;
  const int e = fork_end ? m - 2 : m - 1;
  for (int i = s; i < e; ++i) g.connect(i, i + 1, (i + 1 == e && !fork_end) ? last_label : 3);
  if (fork_start) g.connect(0, 2, 3);
  if (fork_end) g.connect(m - 1, m - 3, 3);
  return g;
}

inline std::string idx(const char* base, int k) { return std::string(base) + std::to_string(k); }

}  // namespace detail

/// Every irreducible spherical and affine diagram with exactly m vertices.
/// For rank 2 the finite label is needed to instantiate I2.
inline std::vector<DiagramType> diagram_tables(int m, long rank_two_label = 0) {
  using namespace detail;
  std::vector<DiagramType> t;
  auto add = [&](std::string name, Sphericity k, LabeledGraph g) { t.push_back({std::move(name), k, std::move(g)}); };
  const auto S = Sphericity::Spherical;
  const auto A = Sphericity::Affine;
  if (m == 1) add("A1", S, LabeledGraph(1));
  if (m == 2) {
    if (rank_two_label >= 3) add(idx("I2(", static_cast<int>(rank_two_label)) + ")", S, path_graph({rank_two_label}));
    add("~A1", A, path_graph({0}));
  }
  if (m >= 3) {
    add(idx("A", m), S, path_graph(std::vector<long>(static_cast<std::size_t>(m - 1), 3)));
    std::vector<long> b(static_cast<std::size_t>(m - 1), 3);
    b.back() = 4;
    add(idx("B", m), S, path_graph(b));
    LabeledGraph cyc = path_graph(std::vector<long>(static_cast<std::size_t>(m - 1), 3));
    cyc.connect(m - 1, 0, 3);
    add(idx("~A", m - 1), A, cyc);
    std::vector<long> c(static_cast<std::size_t>(m - 1), 3);
    c.front() = 4;
    c.back() = 4;
    add(idx("~C", m - 1), A, path_graph(c));
  }
  if (m >= 4) {
    add(idx("D", m), S, forked(m, false, true, 3));
    add(idx("~B", m - 1), A, forked(m, true, false, 4));
  }
  if (m >= 5) add(idx("~D", m - 1), A, forked(m, true, true, 3));
  if (m == 3) {
    add("H3", S, path_graph({5, 3}));
    add("~G2", A, path_graph({6, 3}));
  }
  if (m == 4) {
    add("F4", S, path_graph({3, 4, 3}));
    add("H4", S, path_graph({5, 3, 3}));
  }
  if (m == 5) add("~F4", A, path_graph({3, 3, 4, 3}));
  if (m == 6) add("E6", S, tripod(1, 2, 2));
  if (m == 7) {
    add("E7", S, tripod(1, 2, 3));
    add("~E6", A, tripod(2, 2, 2));
  }
  if (m == 8) {
    add("E8", S, tripod(1, 2, 4));
    add("~E7", A, tripod(1, 3, 3));
  }
  if (m == 9) add("~E8", A, tripod(1, 2, 5));
  return t;
}

struct ComponentVerdict {
  std::vector<int> vertices;  // 1-based
  Sphericity kind = Sphericity::Other;
  std::string type_name;      // empty when Other
};

struct SphericityReport {
  Sphericity global = Sphericity::Other;
  std::vector<ComponentVerdict> components;
  std::vector<std::string> warnings;  // advisory eigenvalue disagreements
};

/// Components of the Coxeter diagram (edges where the label is >= 3 or infinite).
inline std::vector<std::vector<int>> coxeter_components(const CoxeterSystem& s) {
  const int n = s.rank();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (comp[static_cast<std::size_t>(start - 1)] >= 0) continue;
    out.emplace_back();
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start - 1)] = static_cast<int>(out.size()) - 1;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w = 1; w <= n; ++w) {
        if (w == v || comp[static_cast<std::size_t>(w - 1)] >= 0) continue;
        if (s.label(v, w) >= Label(3)) {
          comp[static_cast<std::size_t>(w - 1)] = comp[static_cast<std::size_t>(v - 1)];
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace detail {

inline Sphericity advisory_kind(const CoxeterSystem& s, const std::vector<int>& vs) {
  const int m = static_cast<int>(vs.size());
  Eigen::MatrixXd c(m, m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const Label& k = s.label(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)]);
      c(a, b) = k.is_infinite() ? -1.0 : -std::cos(M_PI / static_cast<double>(k.value()));
    }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(c, Eigen::EigenvaluesOnly);
  const double lo = es.eigenvalues().minCoeff();
  if (lo > 1e-9) return Sphericity::Spherical;
  if (lo > -1e-9) return Sphericity::Affine;
  return Sphericity::Other;
}

}  // namespace detail

inline SphericityReport classify_sphericity(const CoxeterSystem& s) {
  SphericityReport r;
  bool all_spherical = true;
  bool all_known = true;
  for (const auto& vs : coxeter_components(s)) {
    const int m = static_cast<int>(vs.size());
    LabeledGraph g(m);
    long rank_two_label = 0;
    for (int a = 0; a < m; ++a)
      for (int b = a + 1; b < m; ++b) {
        const Label& k = s.label(vs[static_cast<std::size_t>(a)], vs[static_cast<std::size_t>(b)]);
        if (k >= Label(3)) {
          g.connect(a, b, k.is_infinite() ? 0 : k.value());
          if (k.is_finite()) rank_two_label = k.value();
        }
      }
    ComponentVerdict cv{vs, Sphericity::Other, {}};
    for (const auto& t : diagram_tables(m, rank_two_label)) {
      if (isomorphic(g, t.graph)) {
        cv.kind = t.kind;
        cv.type_name = t.name;
        break;
      }
    }
    const Sphericity adv = detail::advisory_kind(s, vs);
    if (adv != cv.kind) {
      std::string vlist;
      for (int v : vs) vlist += (vlist.empty() ? "" : ",") + std::to_string(v);
      r.warnings.push_back("eigenvalue cross-check on {" + vlist + "} suggests " + std::string(to_string(adv)) +
                           ", table says " + std::string(to_string(cv.kind)));
    }
    if (cv.kind != Sphericity::Spherical) all_spherical = false;
    if (cv.kind == Sphericity::Other) all_known = false;
    r.components.push_back(std::move(cv));
  }
  r.global = all_spherical ? Sphericity::Spherical : (all_known ? Sphericity::Affine : Sphericity::Other);
  return r;
}

}  // namespace coxgrowth
