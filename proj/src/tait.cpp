#include "vweb/tait.hpp"

#include <algorithm>
#include <numeric>

#include "vweb/error.hpp"

namespace vweb {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::TooLarge, "Tait count exceeds 64 bits");
  return out;
}

std::uint64_t pow3(std::size_t k) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < k; ++i) out = checked_mul(out, 3);
  return out;
}

// Edge order in which every edge after the first touches an already
// reached vertex; components are laid out one after another.
struct SearchOrder {
  std::vector<int> edges;
  std::vector<std::size_t> component_start;  // offsets into `edges`
};

SearchOrder breadth_first_order(const TrivalentGraph& g) {
  SearchOrder order;
  std::vector<char> seen_vertex(g.num_vertices(), 0);
  std::vector<char> seen_edge(g.num_edges(), 0);
  std::vector<int> queue;
  for (std::size_t root = 0; root < g.num_vertices(); ++root) {
    if (seen_vertex[root]) continue;
    order.component_start.push_back(order.edges.size());
    queue.assign(1, static_cast<int>(root));
    seen_vertex[root] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (int e : g.rotation[v]) {
        if (seen_edge[e]) continue;
        seen_edge[e] = 1;
        order.edges.push_back(e);
        for (int w : g.ends[e]) {
          if (!seen_vertex[w]) {
            seen_vertex[w] = 1;
            queue.push_back(w);
          }
        }
      }
    }
  }
  return order;
}

class Search {
 public:
  explicit Search(const TrivalentGraph& g)
      : g_(g), colors_(g.num_edges(), 0), used_(g.num_vertices(), 0) {}

  bool assign(int e, Color c) {
    const auto [a, b] = g_.ends[e];
    const unsigned bit = 1u << c;
    if ((used_[a] | used_[b]) & bit) return false;
    colors_[e] = c;
    used_[a] |= bit;
    used_[b] |= bit;
    return true;
  }

  void unassign(int e) {
    const auto [a, b] = g_.ends[e];
    const unsigned bit = 1u << colors_[e];
    used_[a] &= ~bit;
    used_[b] &= ~bit;
    colors_[e] = 0;
  }

  template <typename Leaf>
  void run(std::span<const int> order, std::size_t depth, Leaf&& leaf) {
    if (depth == order.size()) {
      leaf();
      return;
    }
    const int e = order[depth];
    const auto [a, b] = g_.ends[e];
    const unsigned taken = used_[a] | used_[b];
    for (Color c = 1; c <= 3; ++c) {
      if (taken & (1u << c)) continue;
      assign(e, c);
      run(order, depth + 1, leaf);
      unassign(e);
    }
  }

  std::span<const Color> colors() const { return colors_; }

 private:
  const TrivalentGraph& g_;
  std::vector<Color> colors_;
  std::vector<unsigned> used_;
};

}  // namespace

bool has_loop(const TrivalentGraph& graph) {
  return std::any_of(graph.ends.begin(), graph.ends.end(),
                     [](const auto& e) { return e[0] == e[1]; });
}

std::uint64_t count_tait(const TrivalentGraph& graph) {
  const std::uint64_t circles = pow3(graph.free_circles);
  if (graph.num_vertices() == 0) return circles;
  if (has_loop(graph)) return 0;

  const SearchOrder order = breadth_first_order(graph);
  Search search(graph);
  std::uint64_t total = circles;
  for (std::size_t c = 0; c < order.component_start.size(); ++c) {
    const std::size_t begin = order.component_start[c];
    const std::size_t end =
        c + 1 < order.component_start.size() ? order.component_start[c + 1] : order.edges.size();
    std::span<const int> component(order.edges.data() + begin, end - begin);
    // The first three edges are the root's; fixing them to (1,2,3) leaves
    // one representative per permutation of the colors.
    for (int k = 0; k < 3; ++k) search.assign(component[k], static_cast<Color>(k + 1));
    std::uint64_t found = 0;
    search.run(component, 3, [&] { ++found; });
    for (int k = 0; k < 3; ++k) search.unassign(component[k]);
    total = checked_mul(total, checked_mul(found, 6));
    if (total == 0) return 0;
  }
  return total;
}

void for_each_edge_coloring(const TrivalentGraph& graph,
                            const std::function<void(std::span<const Color>)>& visit) {
  if (has_loop(graph)) return;
  const SearchOrder order = breadth_first_order(graph);
  Search search(graph);
  search.run(order.edges, 0, [&] { visit(search.colors()); });
}

std::vector<TaitColoring> enumerate_tait(const TrivalentGraph& graph, std::size_t cap) {
  const std::uint64_t total = count_tait(graph);
  if (total > cap)
    throw Error(ErrorKind::CapExceeded, "graph has " + std::to_string(total) +
                                            " Tait colorings, more than the cap of " +
                                            std::to_string(cap));
  std::vector<std::vector<Color>> edge_part;
  for_each_edge_coloring(graph, [&](std::span<const Color> colors) {
    edge_part.emplace_back(colors.begin(), colors.end());
  });
  std::sort(edge_part.begin(), edge_part.end());

  const std::size_t k = graph.free_circles;
  const std::uint64_t circle_choices = pow3(k);
  std::vector<TaitColoring> out;
  out.reserve(total);
  for (const auto& colors : edge_part) {
    for (std::uint64_t code = 0; code < circle_choices; ++code) {
      TaitColoring coloring{colors, std::vector<Color>(k, 1)};
      std::uint64_t rest = code;
      for (std::size_t i = k; i-- > 0;) {
        coloring.circle_colors[i] = static_cast<Color>(1 + rest % 3);
        rest /= 3;
      }
      out.push_back(std::move(coloring));
    }
  }
  return out;
}

bool has_bridge(const TrivalentGraph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<int> depth(n, -1), low(n, 0);
  bool found = false;
  // iterative lowpoint DFS; entering edge is skipped by id so that parallel
  // edges are not mistaken for bridges
  struct Frame {
    int vertex;
    int via_edge;
    int next_slot;
  };
  for (std::size_t root = 0; root < n && !found; ++root) {
    if (depth[root] >= 0) continue;
    std::vector<Frame> stack{{static_cast<int>(root), -1, 0}};
    depth[root] = low[root] = 0;
    while (!stack.empty() && !found) {
      Frame& f = stack.back();
      if (f.next_slot < 3) {
        const int e = graph.rotation[f.vertex][f.next_slot++];
        if (e == f.via_edge) continue;
        const auto [a, b] = graph.ends[e];
        if (a == b) continue;
        const int w = a == f.vertex ? b : a;
        if (depth[w] < 0) {
          depth[w] = low[w] = depth[f.vertex] + 1;
          stack.push_back({w, e, 0});
        } else {
          low[f.vertex] = std::min(low[f.vertex], depth[w]);
        }
      } else {
        const Frame done = f;
        stack.pop_back();
        if (!stack.empty()) {
          Frame& parent = stack.back();
          low[parent.vertex] = std::min(low[parent.vertex], low[done.vertex]);
          if (low[done.vertex] > depth[parent.vertex]) found = true;
        }
      }
    }
  }
  return found;
}

TrivalentGraph disjoint_union(const TrivalentGraph& a, const TrivalentGraph& b) {
  TrivalentGraph out = a;
  const int dv = static_cast<int>(a.num_vertices());
  const int de = static_cast<int>(a.num_edges());
  for (auto rot : b.rotation) {
    for (int& e : rot) e += de;
    out.rotation.push_back(rot);
  }
  for (auto ends : b.ends) {
    for (int& v : ends) v += dv;
    out.ends.push_back(ends);
  }
  out.free_circles += b.free_circles;
  out.vertex_ids.insert(out.vertex_ids.end(), b.vertex_ids.begin(), b.vertex_ids.end());
  out.edge_ids.insert(out.edge_ids.end(), b.edge_ids.begin(), b.edge_ids.end());
  out.circle_ids.insert(out.circle_ids.end(), b.circle_ids.begin(), b.circle_ids.end());
  return out;
}

}  // namespace vweb
