#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "coxgrowth/error.hpp"
#include "coxgrowth/polynomial.hpp"

namespace coxgrowth {

/// A Coxeter label: an integer >= 1 or infinity, with infinity maximal.
class Label {
 public:
  constexpr Label() = default;
  constexpr explicit Label(long value) : value_(value), infinite_(false) {}
  static constexpr Label infinity() {
    Label l;
    l.infinite_ = true;
    l.value_ = 0;
    return l;
  }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  long value() const {
    require(!infinite_, ErrorKind::InvalidLabel, "infinite label has no integer value");
    return value_;
  }

  friend constexpr bool operator==(const Label& a, const Label& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }

  std::string to_string() const { return infinite_ ? std::string("inf") : std::to_string(value_); }

 private:
  long value_ = 1;
  bool infinite_ = true;
};

/// Finite off-diagonal entry of the label matrix, 1-based with i < j.
struct Edge {
  int i = 0;
  int j = 0;
  long label = 2;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Symmetric label matrix with unit diagonal; off-diagonal entries are >= 2 or infinite.
class CoxeterSystem {
 public:
  CoxeterSystem() = default;

  /// All off-diagonal pairs start infinite.
  explicit CoxeterSystem(int rank) : rank_(rank), labels_(static_cast<std::size_t>(rank) * rank, Label::infinity()) {
    require(rank >= 1, ErrorKind::BadIndex, "rank must be positive");
    for (int i = 0; i < rank; ++i) labels_[idx(i, i)] = Label(1);
  }

  int rank() const noexcept { return rank_; }

  /// 1-based access.
  const Label& label(int i, int j) const {
    check_index(i);
    check_index(j);
    return labels_[idx(i - 1, j - 1)];
  }

  /// Sets k_ij = k_ji; the diagonal is immutable.
  void set_label(int i, int j, Label k) {
    check_index(i);
    check_index(j);
    require(i != j, ErrorKind::BadIndex, "diagonal labels are fixed at 1");
    if (k.is_finite()) require(k.value() >= 2, ErrorKind::InvalidLabel, "labels must be >= 2");
    labels_[idx(i - 1, j - 1)] = k;
    labels_[idx(j - 1, i - 1)] = k;
  }

  /// Finite pairs i < j in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int i = 1; i <= rank_; ++i)
      for (int j = i + 1; j <= rank_; ++j) {
        const Label& k = labels_[idx(i - 1, j - 1)];
        if (k.is_finite()) out.push_back({i, j, k.value()});
      }
    return out;
  }

  int edge_count() const {
    int e = 0;
    for (int i = 0; i < rank_; ++i)
      for (int j = i + 1; j < rank_; ++j) e += labels_[idx(i, j)].is_finite() ? 1 : 0;
    return e;
  }

  bool has_edge(int i, int j) const { return i != j && label(i, j).is_finite(); }

  /// label -> number of edges carrying it.
  std::map<long, int> label_multiset() const {
    std::map<long, int> m;
    for (const auto& e : edges()) ++m[e.label];
    return m;
  }

  /// Neighbours of i in the presentation diagram, ascending.
  std::vector<int> neighbours(int i) const {
    std::vector<int> out;
    for (int j = 1; j <= rank_; ++j)
      if (has_edge(i, j)) out.push_back(j);
    return out;
  }

  friend bool operator==(const CoxeterSystem& a, const CoxeterSystem& b) {
    return a.rank_ == b.rank_ && a.labels_ == b.labels_;
  }

 private:
  std::size_t idx(int i, int j) const { return static_cast<std::size_t>(i) * rank_ + j; }
  void check_index(int i) const {
    require(i >= 1 && i <= rank_, ErrorKind::BadIndex,
            "generator index " + std::to_string(i) + " outside 1.." + std::to_string(rank_));
  }

  int rank_ = 0;
  std::vector<Label> labels_;
};

/// Edge list semantics: listed pairs are finite, everything else is infinite.
inline CoxeterSystem build_system(int rank, const std::vector<Edge>& edges) {
  require(rank >= 1, ErrorKind::BadIndex, "rank must be positive");
  CoxeterSystem s(rank);
  std::vector<char> seen(static_cast<std::size_t>(rank) * rank, 0);
  for (const auto& e : edges) {
    require(e.i >= 1 && e.i <= rank && e.j >= 1 && e.j <= rank && e.i != e.j, ErrorKind::BadIndex,
            "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") has an index outside 1.." +
                std::to_string(rank));
    require(e.label >= 2, ErrorKind::InvalidLabel, "edge label " + std::to_string(e.label) + " is below 2");
    const int a = std::min(e.i, e.j);
    const int b = std::max(e.i, e.j);
    char& flag = seen[static_cast<std::size_t>(a - 1) * rank + (b - 1)];
    require(!flag, ErrorKind::DuplicateEdge,
            "pair (" + std::to_string(a) + "," + std::to_string(b) + ") listed twice");
    flag = 1;
    s.set_label(a, b, Label(e.label));
  }
  return s;
}

inline int euler_characteristic(const CoxeterSystem& s) { return s.rank() - s.edge_count(); }

struct DimensionCheck {
  bool at_most_two = true;
  std::optional<std::array<int, 3>> witness;  // spherical triangle, 1-based
};

/// A triangle {i,j,k} with 1/k_ij + 1/k_jk + 1/k_ik > 1 spans a finite rank-3 parabolic.
inline DimensionCheck dimension_at_most_two(const CoxeterSystem& s) {
  const int n = s.rank();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      if (!s.has_edge(i, j)) continue;
      for (int k = j + 1; k <= n; ++k) {
        if (!s.has_edge(i, k) || !s.has_edge(j, k)) continue;
        const long a = s.label(i, j).value();
        const long b = s.label(j, k).value();
        const long c = s.label(i, k).value();
        if (b * c + a * c + a * b > a * b * c) return {false, std::array<int, 3>{i, j, k}};
      }
    }
  return {true, std::nullopt};
}

/// c_ij = -cos(pi / k_ij), with -1 for infinite labels.
inline Eigen::MatrixXd cosine_matrix(const CoxeterSystem& s) {
  const int n = s.rank();
  Eigen::MatrixXd c(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const Label& k = s.label(i, j);
      c(i - 1, j - 1) = k.is_infinite() ? -1.0 : -std::cos(M_PI / static_cast<double>(k.value()));
    }
  return c;
}

/// injection[i-1] is the image of generator i of a, 1-based in b.
inline bool partial_order_leq(const CoxeterSystem& a, const CoxeterSystem& b, const std::vector<int>& injection) {
  require(static_cast<int>(injection.size()) == a.rank(), ErrorKind::BadInjection,
          "injection must list one image per generator");
  std::vector<char> used(static_cast<std::size_t>(b.rank()) + 1, 0);
  for (int v : injection) {
    require(v >= 1 && v <= b.rank(), ErrorKind::BadInjection, "image outside the target generators");
    require(!used[static_cast<std::size_t>(v)], ErrorKind::BadInjection, "map is not injective");
    used[static_cast<std::size_t>(v)] = 1;
  }
  for (int i = 1; i <= a.rank(); ++i)
    for (int j = i + 1; j <= a.rank(); ++j)
      if (a.label(i, j) > b.label(injection[i - 1], injection[j - 1])) return false;
  return true;
}

inline std::vector<int> identity_injection(int rank) {
  std::vector<int> v(static_cast<std::size_t>(rank));
  std::iota(v.begin(), v.end(), 1);
  return v;
}

/// The 4-cycle 1-2-3-4-1 with all labels 3; diagonals infinite.
inline CoxeterSystem gamma_star() { return build_system(4, {{1, 2, 3}, {2, 3, 3}, {3, 4, 3}, {1, 4, 3}}); }

/// Four generators forming a cycle with labels >= 3 and infinite diagonals.
inline std::optional<std::vector<int>> contains_gamma_star(const CoxeterSystem& s) {
  const int n = s.rank();
  if (n < 4) return std::nullopt;
  const Label three(3);
  auto cycle_ok = [&](int a, int b) { return s.label(a, b) >= three; };
  auto diag_ok = [&](int a, int b) { return s.label(a, b).is_infinite(); };
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          // The three cyclic orders of a 4-set, each as v1-v2-v3-v4-v1.
          const std::array<std::array<int, 4>, 3> orders{{{a, b, c, d}, {a, b, d, c}, {a, c, b, d}}};
          for (const auto& o : orders) {
            if (cycle_ok(o[0], o[1]) && cycle_ok(o[1], o[2]) && cycle_ok(o[2], o[3]) && cycle_ok(o[3], o[0]) &&
                diag_ok(o[0], o[2]) && diag_ok(o[1], o[3]))
              return std::vector<int>(o.begin(), o.end());
          }
        }
  return std::nullopt;
}

struct DiagramInvariants {
  int euler_characteristic = 0;
  std::optional<int> dimension;  // empty when a spherical triangle exists
  bool connected = false;
  bool is_tree = false;
  int components = 0;
  std::map<long, int> label_multiset;
};

/// Component index (0-based) of every vertex in the presentation diagram.
inline std::vector<int> presentation_components(const CoxeterSystem& s) {
  const int n = s.rank();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int start = 1; start <= n; ++start) {
    if (comp[static_cast<std::size_t>(start - 1)] >= 0) continue;
    std::vector<int> stack{start};
    comp[static_cast<std::size_t>(start - 1)] = next;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : s.neighbours(v))
        if (comp[static_cast<std::size_t>(w - 1)] < 0) {
          comp[static_cast<std::size_t>(w - 1)] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

inline DiagramInvariants connectivity_report(const CoxeterSystem& s) {
  DiagramInvariants d;
  d.euler_characteristic = euler_characteristic(s);
  const auto comp = presentation_components(s);
  d.components = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  d.connected = d.components == 1;
  d.is_tree = d.connected && d.euler_characteristic == 1;
  d.label_multiset = s.label_multiset();
  if (dimension_at_most_two(s).at_most_two) d.dimension = s.rank() == 1 ? 0 : (s.edge_count() == 0 ? 1 : 2);
  return d;
}

inline std::string describe(const CoxeterSystem& s) {
  std::string out = "rank " + std::to_string(s.rank()) + " [";
  bool first = true;
  for (const auto& e : s.edges()) {
    if (!first) out += ", ";
    first = false;
    out += "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," + std::to_string(e.label) + ")";
  }
  return out + "]";
}

}  // namespace coxgrowth
