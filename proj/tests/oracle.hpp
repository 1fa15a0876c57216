#pragma once

// Brute-force reference computations. They share nothing with the library
// beyond the Diagram / TrivalentGraph data types.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vweb/diagram.hpp"

namespace oracle {

struct Totals {
  std::uint64_t colorings = 0;
  std::int64_t penrose = 0;
};

inline std::uint64_t pow3(std::size_t k) {
  std::uint64_t r = 1;
  while (k--) r *= 3;
  return r;
}

// +1 for the clockwise word 1,2,3 up to rotation.
inline int chirality(int a, int b, int c) {
  return (a == 1 && b == 2 && c == 3) || (a == 2 && b == 3 && c == 1) ||
                 (a == 3 && b == 1 && c == 2)
             ? 1
             : -1;
}

inline bool next_assignment(std::vector<int>& colors) {
  for (int& c : colors) {
    if (c < 3) {
      ++c;
      return true;
    }
    c = 1;
  }
  return false;
}

// All 3^E assignments of the graph's edges; rainbow check at every vertex.
inline Totals graph(const vweb::TrivalentGraph& g) {
  Totals t;
  std::vector<int> colors(g.num_edges(), 1);
  do {
    bool ok = true;
    int plus = 0, minus = 0;
    for (const auto& rot : g.rotation) {
      const int a = colors[rot[0]], b = colors[rot[1]], c = colors[rot[2]];
      if (a == b || b == c || a == c) {
        ok = false;
        break;
      }
      (chirality(a, b, c) > 0 ? plus : minus)++;
    }
    if (!ok) continue;
    ++t.colorings;
    t.penrose += ((plus - minus) % 4 + 4) % 4 == 0 ? 1 : -1;
  } while (next_assignment(colors));
  const std::uint64_t f = pow3(g.free_circles);
  t.colorings *= f;
  t.penrose *= static_cast<std::int64_t>(f);
  return t;
}

// All 3^E assignments of the diagram's own edges, requiring opposite slots
// of every crossing to agree. Only usable for small diagrams.
inline Totals diagram(const vweb::Diagram& d) {
  std::map<std::string, int> edge_at;
  for (std::size_t i = 0; i < d.edges.size(); ++i) {
    edge_at[d.edges[i].tail] = static_cast<int>(i);
    edge_at[d.edges[i].head] = static_cast<int>(i);
  }
  Totals t;
  std::vector<int> colors(d.edges.size(), 1);
  do {
    bool ok = true;
    for (const auto& x : d.crossings) {
      const auto& s = x.half_edges;
      if (colors[edge_at[s[0]]] != colors[edge_at[s[2]]] ||
          colors[edge_at[s[1]]] != colors[edge_at[s[3]]])
        ok = false;
    }
    int plus = 0, minus = 0;
    for (const auto& v : d.vertices) {
      if (!ok) break;
      const auto& h = v.half_edges;
      const int a = colors[edge_at[h[0]]], b = colors[edge_at[h[1]]], c = colors[edge_at[h[2]]];
      if (a == b || b == c || a == c) ok = false;
      else (chirality(a, b, c) > 0 ? plus : minus)++;
    }
    if (!ok) continue;
    ++t.colorings;
    t.penrose += ((plus - minus) % 4 + 4) % 4 == 0 ? 1 : -1;
  } while (!d.edges.empty() && next_assignment(colors));
  if (d.edges.empty()) t = {1, 1};
  const std::uint64_t f = pow3(d.circles.size());
  t.colorings *= f;
  t.penrose *= static_cast<std::int64_t>(f);
  return t;
}

}  // namespace oracle
