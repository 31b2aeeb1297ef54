#include "qwl/hosts.hpp"

#include <algorithm>
#include <numeric>

#include "qwl/error.hpp"
#include "qwl/qcube.hpp"

namespace qwl {

std::string_view to_string(HostKind kind) {
  switch (kind) {
    case HostKind::cylinder: return "cylinder";
    case HostKind::caterpillar: return "caterpillar";
    case HostKind::firecracker: return "firecracker";
    case HostKind::banana: return "banana";
  }
  return "unknown";
}

std::optional<HostKind> parse_host_kind(std::string_view name) {
  for (HostKind kind : kAllHostKinds) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

namespace {

void require_dimension(int n, std::string_view what) {
  if (n < 2) {
    throw DomainError(std::string(what) + " host needs n >= 2 (got n = " +
                      std::to_string(n) + ")");
  }
  if (n > kDefaultMaxCubeDimension + 4) {
    throw BudgetError(std::string(what) + " host: n = " + std::to_string(n) +
                      " is too large to build explicitly");
  }
}

std::vector<Vertex> label_range(Vertex first, Vertex last_exclusive) {
  std::vector<Vertex> out(last_exclusive - first);
  std::iota(out.begin(), out.end(), first);
  return out;
}

std::string indexed(std::string_view stem, std::size_t i) {
  return std::string(stem) + "_" + std::to_string(i);
}

}  // namespace

HostSpec build_cylinder(int n) {
  require_dimension(n, "cylinder");
  const auto columns = static_cast<Vertex>(pow3(n - 1));
  std::vector<Edge> edges;
  RoleMap roles;
  for (Vertex c = 0; c < columns; ++c) {
    const Vertex top = 3 * c;
    edges.emplace_back(top, top + 1);
    edges.emplace_back(top + 1, top + 2);
    edges.emplace_back(top, top + 2);
    if (c + 1 < columns) {
      for (Vertex j = 0; j < 3; ++j) edges.emplace_back(top + j, top + 3 + j);
    }
    for (Vertex j = 0; j < 3; ++j) {
      roles.emplace(top + j, "row:" + std::to_string(j) + ";col:" + std::to_string(c + 1));
    }
  }

  CutFamily family{2, {}};
  for (int t = 1; t <= 2; ++t) {
    for (Vertex i = 1; i < columns; ++i) {
      EdgeCut cut;
      cut.name = "X_" + std::to_string(i) + "^" + std::to_string(t);
      for (Vertex j = 0; j < 3; ++j) cut.edges.emplace_back(3 * (i - 1) + j, 3 * i + j);
      cut.small_side = label_range(0, 3 * i);
      family.cuts.push_back(std::move(cut));
    }
  }
  for (Vertex j = 0; j < 3; ++j) {
    EdgeCut cut;
    cut.name = indexed("Y", j);
    for (Vertex c = 0; c < columns; ++c) {
      for (Vertex other = 0; other < 3; ++other) {
        if (other != j) cut.edges.emplace_back(3 * c + j, 3 * c + other);
      }
      cut.small_side.push_back(3 * c + j);
    }
    std::sort(cut.edges.begin(), cut.edges.end());
    family.cuts.push_back(std::move(cut));
  }
  return HostSpec{HostKind::cylinder, n,
                  LabeledGraph(3 * static_cast<std::size_t>(columns), edges, std::move(roles)),
                  std::move(family)};
}

std::vector<Vertex> preorder_labels(const LabeledGraph& tree, Vertex root,
                                    const ChildOrder& child_order) {
  if (root >= tree.vertex_count()) throw PreconditionError("preorder root out of range");
  if (!tree.is_tree()) throw PreconditionError("preorder_labels needs a connected acyclic graph");
  std::vector<Vertex> label(tree.vertex_count(), 0);
  std::vector<char> visited(tree.vertex_count(), 0);
  std::vector<Vertex> stack{root};
  visited[root] = 1;
  Vertex next = 0;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    label[x] = next++;
    std::vector<Vertex> children;
    for (Vertex y : tree.neighbors(x)) {
      if (!visited[y]) children.push_back(y);
    }
    std::sort(children.begin(), children.end(), child_order);
    for (auto it = children.rbegin(); it != children.rend(); ++it) {
      visited[*it] = 1;
      stack.push_back(*it);
    }
  }
  return label;
}

namespace {

// Builds a tree on structural ids, then relabels it by preorder from `root`.
LabeledGraph preorder_relabeled(std::size_t count, const std::vector<Edge>& edges,
                                RoleMap roles, Vertex root, const ChildOrder& order) {
  LabeledGraph structural(count, edges, std::move(roles));
  return relabel(structural, preorder_labels(structural, root, order));
}

// Single-edge cut whose small side is a contiguous label range.
EdgeCut edge_cut(std::string name, Edge e, std::vector<Vertex> small_side) {
  return EdgeCut{std::move(name), {e}, std::move(small_side)};
}

}  // namespace

HostSpec build_caterpillar(int n) {
  require_dimension(n, "caterpillar");
  const auto spine = static_cast<Vertex>(pow3(n - 1));
  // Structural ids: spine vertex i is i; its leaves are spine + 2i, spine + 2i + 1.
  std::vector<Edge> edges;
  RoleMap roles;
  for (Vertex i = 0; i < spine; ++i) {
    if (i + 1 < spine) edges.emplace_back(i, i + 1);
    edges.emplace_back(i, spine + 2 * i);
    edges.emplace_back(i, spine + 2 * i + 1);
    roles.emplace(i, "spine");
    roles.emplace(spine + 2 * i, "leaf");
    roles.emplace(spine + 2 * i + 1, "leaf");
  }
  auto leaves_first = [spine](Vertex a, Vertex b) {
    const bool a_leaf = a >= spine, b_leaf = b >= spine;
    return a_leaf != b_leaf ? a_leaf : a < b;
  };
  auto graph = preorder_relabeled(3 * static_cast<std::size_t>(spine), edges,
                                  std::move(roles), 0, leaves_first);

  CutFamily family{1, {}};
  for (Vertex i = 1; i < spine; ++i) {
    family.cuts.push_back(edge_cut(indexed("S", i), Edge(3 * (i - 1), 3 * i),
                                   label_range(0, 3 * i)));
  }
  std::size_t j = 1;
  for (Vertex i = 0; i < spine; ++i) {
    for (Vertex leaf : {3 * i + 1, 3 * i + 2}) {
      family.cuts.push_back(edge_cut(indexed("T", j++), Edge(3 * i, leaf), {leaf}));
    }
  }
  return HostSpec{HostKind::caterpillar, n, std::move(graph), std::move(family)};
}

HostSpec build_firecracker(int n) {
  require_dimension(n, "firecracker");
  const auto units = static_cast<Vertex>(pow3(n - 1));
  // Structural ids: unit i has link leaf i, center units + i, free leaf 2 units + i.
  std::vector<Edge> edges;
  RoleMap roles;
  for (Vertex i = 0; i < units; ++i) {
    const Vertex link = i, center = units + i, free_leaf = 2 * units + i;
    edges.emplace_back(link, center);
    edges.emplace_back(center, free_leaf);
    if (i + 1 < units) edges.emplace_back(link, link + 1);
    roles.emplace(link, "link-leaf");
    roles.emplace(center, "center");
    roles.emplace(free_leaf, "leaf");
  }
  // Descend into the unit's own star before following the link path.
  auto star_first = [units](Vertex a, Vertex b) {
    const bool a_link = a < units, b_link = b < units;
    return a_link != b_link ? b_link : a < b;
  };
  auto graph = preorder_relabeled(3 * static_cast<std::size_t>(units), edges,
                                  std::move(roles), 0, star_first);

  CutFamily family{1, {}};
  for (Vertex i = 1; i < units; ++i) {
    family.cuts.push_back(edge_cut(indexed("S", i), Edge(3 * (i - 1), 3 * i),
                                   label_range(0, 3 * i)));
  }
  for (Vertex j = 0; j < units; ++j) {
    family.cuts.push_back(
        edge_cut(indexed("R", j + 1), Edge(3 * j, 3 * j + 1), {3 * j + 1, 3 * j + 2}));
  }
  for (Vertex k = 0; k < units; ++k) {
    family.cuts.push_back(
        edge_cut(indexed("T", k + 1), Edge(3 * k + 1, 3 * k + 2), {3 * k + 2}));
  }
  return HostSpec{HostKind::firecracker, n, std::move(graph), std::move(family)};
}

HostSpec build_banana(int n) {
  require_dimension(n, "banana");
  const auto total = static_cast<Vertex>(pow3(n));
  const Vertex m = total / 2;
  // Structural ids: star s in {0, 1} occupies s*m .. s*m + m - 1 with its
  // center first and its link leaf last; the root is 2m.
  const Vertex root = 2 * m;
  std::vector<Edge> edges;
  RoleMap roles{{root, "root"}};
  for (Vertex s = 0; s < 2; ++s) {
    const Vertex center = s * m, link = s * m + m - 1;
    for (Vertex leaf = center + 1; leaf <= link; ++leaf) {
      edges.emplace_back(center, leaf);
      roles.emplace(leaf, leaf == link ? "link-leaf" : "leaf");
    }
    roles.emplace(center, "center");
    edges.emplace_back(link, root);
  }
  // From the first center: free leaves, then the link leaf. From the second
  // link leaf: its center before anything else.
  auto order = [m, root](Vertex a, Vertex b) {
    auto rank = [m, root](Vertex v) {
      if (v == root) return 1;
      const Vertex offset = v % m;
      if (v < root && offset == m - 1) return 2;  // link leaf
      return 0;
    };
    return rank(a) != rank(b) ? rank(a) < rank(b) : a < b;
  };
  auto graph = preorder_relabeled(total, edges, std::move(roles), 0, order);

  const Vertex c1 = 0, l1 = m - 1, r = m, l2 = m + 1, c2 = m + 2;
  CutFamily family{1, {}};
  std::size_t i = 1;
  for (Vertex leaf = 1; leaf + 1 < m; ++leaf) {
    family.cuts.push_back(edge_cut(indexed("S^1", i++), Edge(c1, leaf), {leaf}));
  }
  i = 1;
  for (Vertex leaf = m + 3; leaf < total; ++leaf) {
    family.cuts.push_back(edge_cut(indexed("S^2", i++), Edge(c2, leaf), {leaf}));
  }
  family.cuts.push_back(edge_cut("R_1", Edge(c1, l1), label_range(0, m - 1)));
  family.cuts.push_back(edge_cut("R_2", Edge(c2, l2), label_range(m + 2, total)));
  family.cuts.push_back(edge_cut("T_1", Edge(r, l1), label_range(0, m)));
  family.cuts.push_back(edge_cut("T_2", Edge(r, l2), label_range(m + 1, total)));
  return HostSpec{HostKind::banana, n, std::move(graph), std::move(family)};
}

HostSpec build_host(HostKind kind, int n) {
  switch (kind) {
    case HostKind::cylinder: return build_cylinder(n);
    case HostKind::caterpillar: return build_caterpillar(n);
    case HostKind::firecracker: return build_firecracker(n);
    case HostKind::banana: return build_banana(n);
  }
  throw PreconditionError("unknown host kind");
}

}  // namespace qwl
