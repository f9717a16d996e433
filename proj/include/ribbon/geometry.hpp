#pragma once

// Global and local geometry of the moduli space M(O_X, P_d) of semistable
// length-2 sheaves on a ribbon: strata of stable generalized line bundles
// keyed by local-index multiset, the irreducible-component table, the
// specialization graph used for connectivity, and tangent-space dimensions.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "ribbon/core.hpp"
#include "ribbon/stability.hpp"

namespace ribbon {

struct Stratum {
  IndexMultiset indices;
  std::int64_t dim;
  Verdict stability;

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// g - sum(b_i - 1).
inline std::int64_t stratum_dim(const RibbonInvariants& ribbon, const IndexMultiset& indices) {
  return checked::add(checked::sub(ribbon.g(), indices.sum()), static_cast<std::int64_t>(indices.size()));
}

namespace detail {

// Appends every weakly decreasing sequence with entries <= max_part and sum exactly `remaining`.
inline void partitions_with_sum(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& prefix,
                                std::vector<IndexMultiset>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (std::int64_t part = std::min(max_part, remaining); part >= 1; --part) {
    prefix.push_back(part);
    partitions_with_sum(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in ascending lexicographic order of their weakly decreasing form.
inline std::vector<IndexMultiset> partitions_of(std::int64_t n) {
  std::vector<IndexMultiset> out;
  if (n < 0) return out;
  std::vector<std::int64_t> prefix;
  detail::partitions_with_sum(n, n, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// Strata Z_b of stable generalized line bundles of degree d (and, when asked,
/// the strictly semistable index sequences), ordered by (sum, partition).
inline std::vector<Stratum> enumerate_strata(const RibbonInvariants& ribbon, std::int64_t d, bool include_semistable) {
  const std::int64_t bound = ribbon.stable_index_bound();
  std::vector<Stratum> out;
  const std::int64_t top = include_semistable ? bound + 1 : bound;
  for (std::int64_t sum = 0; sum <= top; ++sum) {
    if (!checked::is_even(checked::sub(d, sum))) continue;
    const Verdict v = sum <= bound ? Verdict::Stable : Verdict::StrictlySemistable;
    for (auto& p : partitions_of(sum)) {
      const std::int64_t dim = stratum_dim(ribbon, p);
      out.push_back(Stratum{std::move(p), dim, v});
    }
  }
  return out;
}

/// Dimension of the locus of pushed-forward semistable rank-2 bundles of
/// degree e = d + deg N, or nullopt when that locus is empty.
inline std::optional<std::int64_t> vb_locus_dim(const RibbonInvariants& ribbon, std::int64_t d) {
  const std::int64_t e = ribbon.vb_degree(d);
  switch (ribbon.gbar()) {
    case 0: return checked::is_even(e) ? std::optional<std::int64_t>(0) : std::nullopt;
    case 1: return checked::is_even(e) ? 2 : 1;
    default: return checked::sub(checked::mul(4, ribbon.gbar()), 3);
  }
}

struct GlbComponent {
  IndexMultiset generic;  // all-ones local index sequence of the generic point
  std::int64_t dim;
  friend bool operator==(const GlbComponent&, const GlbComponent&) = default;
};

enum class VbStatus { Exists, NotExists, Unknown };

constexpr std::string_view to_string(VbStatus s) {
  switch (s) {
    case VbStatus::Exists: return "exists";
    case VbStatus::NotExists: return "absent";
    case VbStatus::Unknown: return "unknown";
  }
  return "?";
}

struct VbComponent {
  VbStatus status;
  std::optional<std::int64_t> dim;
  friend bool operator==(const VbComponent&, const VbComponent&) = default;
};

/// Set when no stable generalized line bundle of degree d exists; the moduli
/// space is then the rank-2 bundle locus, irreducible or empty.
struct NoStableGlbCase {
  bool empty;
  std::int64_t dim;  // meaningless when empty
  friend bool operator==(const NoStableGlbCase&, const NoStableGlbCase&) = default;
};

struct ComponentTable {
  std::vector<GlbComponent> glb_components;
  VbComponent vb_component;
  std::optional<NoStableGlbCase> special_case;

  std::size_t component_count() const {
    return glb_components.size() + (vb_component.status == VbStatus::Exists ? 1 : 0);
  }
};

inline ComponentTable component_table(const RibbonInvariants& ribbon, std::int64_t d) {
  ComponentTable table;
  const std::int64_t bound = ribbon.stable_index_bound();
  // Generic points of the line-bundle components: all-ones sequences of the
  // right parity, one per admissible length.
  for (std::int64_t len = checked::is_even(d) ? 0 : 1; len <= bound; len += 2) {
    table.glb_components.push_back(
        GlbComponent{IndexMultiset(std::vector<std::int64_t>(static_cast<std::size_t>(len), 1)), ribbon.g()});
  }

  const std::int64_t gbar = ribbon.gbar();
  if (table.glb_components.empty()) {
    const auto dim = vb_locus_dim(ribbon, d);
    table.special_case = NoStableGlbCase{!dim.has_value(), dim.value_or(0)};
    table.vb_component = dim ? VbComponent{VbStatus::Exists, dim} : VbComponent{VbStatus::NotExists, std::nullopt};
    return table;
  }

  const std::int64_t vb_dim = checked::sub(checked::mul(4, gbar), 3);
  if (gbar <= 1) {
    table.vb_component = {VbStatus::NotExists, std::nullopt};
  } else if (vb_dim >= ribbon.g()) {
    table.vb_component = {VbStatus::Exists, vb_dim};
  } else {
    table.vb_component = {VbStatus::Unknown, std::nullopt};
  }
  return table;
}

enum class EdgeKind { MoveI, MoveII, GrIdentification, OddDegeneration };

constexpr std::string_view to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::MoveI: return "move-I";
    case EdgeKind::MoveII: return "move-II";
    case EdgeKind::GrIdentification: return "gr-identification";
    case EdgeKind::OddDegeneration: return "odd-degeneration";
  }
  return "?";
}

struct SpecializationEdge {
  IndexMultiset generic;
  IndexMultiset special;
  EdgeKind kind;
  friend bool operator==(const SpecializationEdge&, const SpecializationEdge&) = default;
};

/// Index sequences that specialize from `generic` by one move: raising an
/// entry b0 >= 0 to b0 + 2 (move I) or merging an entry 1 with an entry b1
/// into b1 + 1 (move II).
inline std::vector<std::pair<IndexMultiset, EdgeKind>> specializations_of(const IndexMultiset& generic) {
  std::vector<std::pair<IndexMultiset, EdgeKind>> out;
  const auto entries = generic.entries();
  std::set<std::int64_t> distinct(entries.begin(), entries.end());

  auto without = [&](std::int64_t a, std::optional<std::int64_t> b) {
    std::vector<std::int64_t> rest(entries.begin(), entries.end());
    rest.erase(std::find(rest.begin(), rest.end(), a));
    if (b) rest.erase(std::find(rest.begin(), rest.end(), *b));
    return rest;
  };

  {
    std::vector<std::int64_t> fresh(entries.begin(), entries.end());
    fresh.push_back(2);
    out.emplace_back(IndexMultiset(std::move(fresh)), EdgeKind::MoveI);
  }
  for (std::int64_t b0 : distinct) {
    auto rest = without(b0, std::nullopt);
    rest.push_back(b0 + 2);
    out.emplace_back(IndexMultiset(std::move(rest)), EdgeKind::MoveI);
  }

  const auto ones = std::count(entries.begin(), entries.end(), 1);
  if (ones > 0) {
    for (std::int64_t b1 : distinct) {
      if (b1 == 1 && ones < 2) continue;
      auto rest = without(1, b1);
      rest.push_back(b1 + 1);
      out.emplace_back(IndexMultiset(std::move(rest)), EdgeKind::MoveII);
    }
  }
  return out;
}

/// Moves among the given strata, oriented generic -> special.
inline std::vector<SpecializationEdge> specialization_edges(const std::vector<Stratum>& strata) {
  std::set<IndexMultiset> present;
  for (const auto& s : strata) present.insert(s.indices);
  std::vector<SpecializationEdge> edges;
  for (const auto& s : strata) {
    for (auto& [special, kind] : specializations_of(s.indices)) {
      if (present.count(special)) edges.push_back(SpecializationEdge{s.indices, std::move(special), kind});
    }
  }
  return edges;
}

enum class NodeKind { Stratum, GrClass, VbLocus };

struct GraphNode {
  NodeKind kind;
  std::optional<IndexMultiset> indices;  // strata only
  std::optional<SplitClass> gr;          // Gr-class node only
  std::int64_t dim;

  std::string label() const {
    std::string head;
    switch (kind) {
      case NodeKind::Stratum: head = "(" + indices->to_string() + ")"; break;
      case NodeKind::GrClass:
        head = "Gr O(" + std::to_string(gr->deg_F1) + ")+O(" + std::to_string(gr->deg_Ibar) + ")";
        break;
      case NodeKind::VbLocus: head = "rank-2 bundles"; break;
    }
    return head + " | " + std::to_string(dim);
  }
};

struct GraphEdge {
  std::size_t from;  // generic end
  std::size_t to;    // special end
  EdgeKind kind;
  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

struct StratGraph {
  std::vector<GraphNode> nodes;
  std::vector<GraphEdge> edges;
  bool connected = false;

  bool empty() const { return nodes.empty(); }

  std::optional<std::size_t> find(NodeKind kind) const {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].kind == kind) return i;
    }
    return std::nullopt;
  }
};

inline bool is_connected(std::size_t node_count, const std::vector<GraphEdge>& edges) {
  if (node_count == 0) return false;
  std::vector<std::vector<std::size_t>> adj(node_count);
  for (const auto& e : edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(node_count, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == node_count;
}

/// Stable strata, one node for the strictly semistable Gr-class, and one node
/// for the rank-2 bundle locus when it is positive dimensional (gbar >= 1).
/// On a rational ribbon the rank-2 locus is the single polystable point, which
/// is the Gr-class node itself.
inline StratGraph stratification_graph(const RibbonInvariants& ribbon, std::int64_t d) {
  StratGraph graph;
  const std::int64_t e = ribbon.vb_degree(d);
  const auto all = enumerate_strata(ribbon, d, true);

  std::map<IndexMultiset, std::size_t> node_of;
  bool has_semistable = false;
  for (const auto& s : all) {
    if (s.stability == Verdict::Stable) {
      node_of[s.indices] = graph.nodes.size();
      graph.nodes.push_back(GraphNode{NodeKind::Stratum, s.indices, std::nullopt, s.dim});
    } else {
      has_semistable = true;
    }
  }

  std::optional<std::size_t> gr_node;
  if (has_semistable || (ribbon.gbar() == 0 && checked::is_even(e))) {
    gr_node = graph.nodes.size();
    graph.nodes.push_back(GraphNode{NodeKind::GrClass, std::nullopt, SplitClass{e / 2, e / 2}, 0});
    for (const auto& s : all) {
      if (s.stability == Verdict::StrictlySemistable) node_of[s.indices] = *gr_node;
    }
  }

  std::optional<std::size_t> vb_node;
  if (ribbon.gbar() >= 1) {
    vb_node = graph.nodes.size();
    graph.nodes.push_back(GraphNode{NodeKind::VbLocus, std::nullopt, std::nullopt, *vb_locus_dim(ribbon, d)});
  }

  std::set<std::tuple<std::size_t, std::size_t, EdgeKind>> seen;
  for (const auto& edge : specialization_edges(all)) {
    const std::size_t from = node_of.at(edge.generic);
    const std::size_t to = node_of.at(edge.special);
    if (from == to) continue;
    if (seen.emplace(from, to, edge.kind).second) graph.edges.push_back(GraphEdge{from, to, edge.kind});
  }

  if (gr_node && vb_node) graph.edges.push_back(GraphEdge{*vb_node, *gr_node, EdgeKind::GrIdentification});

  // Odd e: stable generalized line bundles of index g - 2 gbar degenerate to
  // stable rank-2 bundles.
  if (vb_node && !checked::is_even(e) && ribbon.stable_index_bound() >= 0) {
    const std::int64_t top = ribbon.stable_index_bound();
    const IndexMultiset generic = top == 0 ? IndexMultiset{} : IndexMultiset({top});
    if (auto it = node_of.find(generic); it != node_of.end()) {
      graph.edges.push_back(GraphEdge{it->second, *vb_node, EdgeKind::OddDegeneration});
    }
  }

  graph.connected = is_connected(graph.nodes.size(), graph.edges);
  return graph;
}

/// dim Ext^1(I, I) = g + b + h0(X', O_X') - 1, where h0(X', O_X') - 1 is
/// h0 of the blow-up's nilradical, a line bundle of degree deg N + b on X_red.
inline DimRange tangent_dim_glb(const RibbonInvariants& ribbon, const GLBDescriptor& glb) {
  const std::int64_t b = glb.b();
  const std::int64_t base = checked::add(ribbon.g(), b);
  const DimRange h0 = h0_line_bundle(checked::add(ribbon.degN(), b), ribbon.gbar());
  return {checked::add(base, h0.lo), checked::add(base, h0.hi)};
}

/// Tangent dimension at a stable pushed-forward rank-2 bundle E:
/// 4 gbar - 3 + h0(End(E) (x) N^-1). The correction is forced by
/// Riemann-Roch once g >= 4 gbar - 2; otherwise it must be supplied.
inline std::optional<std::int64_t> tangent_dim_vb(const RibbonInvariants& ribbon,
                                                  std::optional<std::int64_t> h_end = std::nullopt) {
  using namespace checked;
  if (h_end && *h_end < 0) throw InvalidInput("h0(End(E) (x) N^-1) must be non-negative");
  const std::int64_t gbar = ribbon.gbar();
  if (ribbon.g() >= sub(mul(4, gbar), 2)) return sub(add(mul(4, ribbon.g()), 5), mul(8, gbar));
  if (h_end) return add(sub(mul(4, gbar), 3), *h_end);
  return std::nullopt;
}

enum class Smoothness { Smooth, Singular, Unknown };

constexpr std::string_view to_string(Smoothness s) {
  switch (s) {
    case Smoothness::Smooth: return "smooth";
    case Smoothness::Singular: return "singular";
    case Smoothness::Unknown: return "unknown";
  }
  return "?";
}

using ModuliPoint = std::variant<GLBDescriptor, VBDescriptor>;

/// Only stable points are accepted: at strictly semistable points the tangent
/// space is not Ext^1(F, F).
inline Smoothness smoothness_verdict(const RibbonInvariants& ribbon, std::int64_t d, const ModuliPoint& point,
                                     std::optional<std::int64_t> h_end = std::nullopt) {
  const std::int64_t gbar = ribbon.gbar();
  const bool line_bundle_regime = gbar >= 2 && ribbon.g() >= checked::sub(checked::mul(4, gbar), 2);

  if (const auto* glb = std::get_if<GLBDescriptor>(&point)) {
    if (glb->d() != d) throw InvalidInput("descriptor degree differs from d");
    if (classify_glb(ribbon, *glb) != Verdict::Stable) throw UnstableInput("smoothness is only decided at stable points");
    // Tangent dimension g + b against the local dimension g.
    return glb->is_line_bundle() ? Smoothness::Smooth : Smoothness::Singular;
  }

  const auto& vb = std::get<VBDescriptor>(point);
  if (vb.e() != ribbon.vb_degree(d)) throw InvalidInput("rank-2 bundle degree must be d + deg N");
  if (classify_vb(ribbon, vb) != Verdict::Stable) throw UnstableInput("smoothness is only decided at stable points");
  if (line_bundle_regime) return Smoothness::Singular;
  const auto tangent = tangent_dim_vb(ribbon, h_end);
  if (!tangent) return Smoothness::Unknown;
  const std::int64_t local_max = std::max(ribbon.g(), checked::sub(checked::mul(4, gbar), 3));
  return *tangent > local_max ? Smoothness::Singular : Smoothness::Unknown;
}

}  // namespace ribbon
