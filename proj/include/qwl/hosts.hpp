#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qwl/graph.hpp"

namespace qwl {

enum class HostKind { cylinder, caterpillar, firecracker, banana };

inline constexpr HostKind kAllHostKinds[] = {HostKind::cylinder, HostKind::caterpillar,
                                             HostKind::firecracker, HostKind::banana};

std::string_view to_string(HostKind kind);
std::optional<HostKind> parse_host_kind(std::string_view name);

// A host topology on 3^n vertices, labeled so that the identity map is the
// lexicographic embedding of Q_n^3, together with the cut family that
// certifies its wirelength.
struct HostSpec {
  HostKind kind;
  int n = 0;
  LabeledGraph graph;
  CutFamily cut_family;
};

// C3 x P_{3^{n-1}}: column r (0-based) holds labels 3r, 3r+1, 3r+2 top to
// bottom. Cuts: X_i^t (row edges between columns i and i+1, each listed for
// t = 1, 2) and Y_j (the two triangle edges at row j in every column);
// multiplicity 2.
HostSpec build_cylinder(int n);

// Spine of 3^{n-1} vertices with two leaves each. Spine vertex i is 3i, its
// leaves 3i+1 and 3i+2. Cuts S_i (spine edges) and T_j (leaf edges).
HostSpec build_caterpillar(int n);

// 3^{n-1} three-vertex stars: unit i has link leaf 3i, center 3i+1 and free
// leaf 3i+2; link leaves form a path. Cuts S_i (links), R_j (link leaf to
// center), T_k (center to free leaf).
HostSpec build_firecracker(int n);

// B_{2,m} with m = floor(3^n / 2). Preorder from the first center:
// c1 = 0, free leaves 1..m-2, l1 = m-1, root = m, l2 = m+1, c2 = m+2, free
// leaves m+3..3^n-1. Cuts S^1_i, S^2_i (free leaves), R_1, R_2 (center to
// link leaf), T_1, T_2 (root to link leaf).
HostSpec build_banana(int n);

HostSpec build_host(HostKind kind, int n);

// Orders the children of a vertex during preorder traversal; returns true
// when `a` should be visited before `b`.
using ChildOrder = std::function<bool(Vertex a, Vertex b)>;

// new_label[v] = position of v in a depth-first preorder from `root`.
// Throws PreconditionError unless `tree` is connected and acyclic.
std::vector<Vertex> preorder_labels(const LabeledGraph& tree, Vertex root,
                                    const ChildOrder& child_order = std::less<Vertex>{});

}  // namespace qwl
