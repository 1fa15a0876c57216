#include "vweb/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "map_index.hpp"
#include "vweb/error.hpp"

namespace vweb {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Syntax: return "syntax";
    case ErrorKind::DuplicateId: return "duplicate-identifier";
    case ErrorKind::DanglingHalfEdge: return "dangling-half-edge";
    case ErrorKind::Degree: return "degree";
    case ErrorKind::StrandOrientation: return "strand-orientation";
    case ErrorKind::UnknownId: return "unknown-identifier";
    case ErrorKind::ContractViolation: return "contract-violation";
    case ErrorKind::CapExceeded: return "cap-exceeded";
    case ErrorKind::TooLarge: return "too-large";
    case ErrorKind::StaleSite: return "stale-site";
    case ErrorKind::InvalidParameter: return "invalid-parameter";
  }
  return "unknown";
}

namespace {

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

[[noreturn]] void syntax_error(std::size_t line_no, const std::string& msg) {
  throw Error(ErrorKind::Syntax, "line " + std::to_string(line_no) + ": " + msg);
}

template <std::size_t N>
void rotate_to_min(std::array<std::string, N>& slots) {
  auto smallest = std::min_element(slots.begin(), slots.end());
  std::rotate(slots.begin(), smallest, slots.end());
}

struct Violations {
  std::vector<std::pair<ErrorKind, std::string>> items;

  void add(ErrorKind kind, std::string msg) { items.emplace_back(kind, std::move(msg)); }

  void raise_if_any() const {
    if (items.empty()) return;
    std::string text;
    for (const auto& [kind, msg] : items) {
      if (!text.empty()) text += "; ";
      text += msg;
    }
    throw Error(items.front().first, text);
  }
};

}  // namespace

Diagram parse(std::string_view text) {
  Diagram diagram;
  bool seen_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = split_tokens(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const std::string& kind = tokens[0];
    if (!seen_header) {
      if (kind != "vweb") syntax_error(line_no, "expected 'vweb 1' header");
      if (tokens.size() != 2 || tokens[1] != "1")
        syntax_error(line_no, "unsupported format version");
      seen_header = true;
    } else if (kind == "vertex") {
      if (tokens.size() < 2) syntax_error(line_no, "vertex record without identifier");
      if (tokens.size() != 5)
        throw Error(ErrorKind::Degree, "line " + std::to_string(line_no) + ": vertex " +
                                           tokens[1] + " lists " +
                                           std::to_string(tokens.size() - 2) +
                                           " half-edges, expected 3");
      diagram.vertices.push_back({tokens[1], {tokens[2], tokens[3], tokens[4]}});
    } else if (kind == "crossing") {
      if (tokens.size() < 2) syntax_error(line_no, "crossing record without identifier");
      if (tokens.size() != 6)
        throw Error(ErrorKind::Degree, "line " + std::to_string(line_no) + ": crossing " +
                                           tokens[1] + " lists " +
                                           std::to_string(tokens.size() - 2) +
                                           " half-edges, expected 4");
      diagram.crossings.push_back({tokens[1], {tokens[2], tokens[3], tokens[4], tokens[5]}});
    } else if (kind == "edge") {
      if (tokens.size() != 4) syntax_error(line_no, "expected 'edge <id> <tail> <head>'");
      diagram.edges.push_back({tokens[1], tokens[2], tokens[3]});
    } else if (kind == "circle") {
      if (tokens.size() != 2) syntax_error(line_no, "expected 'circle <id>'");
      diagram.circles.push_back(tokens[1]);
    } else if (kind == "vweb") {
      syntax_error(line_no, "repeated header");
    } else {
      syntax_error(line_no, "unknown record '" + kind + "'");
    }
    if (end == text.size()) break;
  }
  if (!seen_header) syntax_error(line_no == 0 ? 1 : line_no, "missing 'vweb 1' header");
  return validate(std::move(diagram));
}

std::string serialize(const Diagram& diagram) {
  std::ostringstream out;
  out << "vweb 1\n";
  for (const auto& v : diagram.vertices)
    out << "vertex " << v.id << ' ' << v.half_edges[0] << ' ' << v.half_edges[1] << ' '
        << v.half_edges[2] << '\n';
  for (const auto& c : diagram.crossings)
    out << "crossing " << c.id << ' ' << c.half_edges[0] << ' ' << c.half_edges[1] << ' '
        << c.half_edges[2] << ' ' << c.half_edges[3] << '\n';
  for (const auto& e : diagram.edges) out << "edge " << e.id << ' ' << e.tail << ' ' << e.head << '\n';
  for (const auto& c : diagram.circles) out << "circle " << c << '\n';
  return out.str();
}

Diagram validate(Diagram d) {
  Violations bad;

  std::unordered_set<std::string> ids;
  auto claim_id = [&](const std::string& id, const char* what) {
    if (id.empty()) bad.add(ErrorKind::Syntax, std::string("empty ") + what + " identifier");
    else if (!ids.insert(id).second)
      bad.add(ErrorKind::DuplicateId, std::string("duplicate identifier '") + id + "' (" + what + ")");
  };

  // half-edge -> owning node, and half-edge -> edge end
  std::unordered_map<std::string, std::string> owner;
  auto claim_slot = [&](const std::string& he, const std::string& node) {
    auto [it, inserted] = owner.emplace(he, node);
    if (!inserted)
      bad.add(ErrorKind::DuplicateId,
              "half-edge '" + he + "' used by nodes '" + it->second + "' and '" + node + "'");
  };

  for (const auto& v : d.vertices) {
    claim_id(v.id, "vertex");
    std::set<std::string> distinct(v.half_edges.begin(), v.half_edges.end());
    if (distinct.size() != 3)
      bad.add(ErrorKind::Degree, "vertex '" + v.id + "' must reference 3 distinct half-edges");
    for (const auto& he : distinct) claim_slot(he, v.id);
  }
  for (const auto& c : d.crossings) {
    claim_id(c.id, "crossing");
    std::set<std::string> distinct(c.half_edges.begin(), c.half_edges.end());
    if (distinct.size() != 4)
      bad.add(ErrorKind::Degree, "crossing '" + c.id + "' must reference 4 distinct half-edges");
    for (const auto& he : distinct) claim_slot(he, c.id);
  }

  std::unordered_map<std::string, bool> end_is_head;
  for (const auto& e : d.edges) {
    claim_id(e.id, "edge");
    if (e.tail == e.head) {
      bad.add(ErrorKind::DuplicateId, "edge '" + e.id + "' uses half-edge '" + e.tail + "' twice");
      continue;
    }
    for (const auto& [he, head] : {std::pair{e.tail, false}, std::pair{e.head, true}}) {
      if (!end_is_head.emplace(he, head).second)
        bad.add(ErrorKind::DuplicateId, "half-edge '" + he + "' used twice in edges");
      if (!owner.contains(he))
        bad.add(ErrorKind::DanglingHalfEdge,
                "edge '" + e.id + "' ends at half-edge '" + he + "' which belongs to no node");
    }
  }
  for (const auto& c : d.circles) claim_id(c, "circle");

  for (const auto& [he, node] : owner)
    if (!end_is_head.contains(he))
      bad.add(ErrorKind::DanglingHalfEdge,
              "half-edge '" + he + "' of node '" + node + "' belongs to no edge");

  for (const auto& c : d.crossings) {
    for (int s = 0; s < 2; ++s) {
      auto a = end_is_head.find(c.half_edges[s]);
      auto b = end_is_head.find(c.half_edges[s + 2]);
      if (a == end_is_head.end() || b == end_is_head.end()) continue;
      if (a->second == b->second)
        bad.add(ErrorKind::StrandOrientation,
                "crossing '" + c.id + "': strand (" + c.half_edges[s] + ", " +
                    c.half_edges[s + 2] + ") has two " + (a->second ? "inbound" : "outbound") +
                    " ends");
    }
  }

  // dangling messages come from an unordered map; keep error text stable
  std::stable_sort(bad.items.begin(), bad.items.end(), [](const auto& x, const auto& y) {
    return static_cast<int>(x.first) < static_cast<int>(y.first) ||
           (x.first == y.first && x.second < y.second);
  });
  bad.raise_if_any();

  for (auto& v : d.vertices) rotate_to_min(v.half_edges);
  for (auto& c : d.crossings) rotate_to_min(c.half_edges);
  auto by_id = [](const auto& a, const auto& b) { return a.id < b.id; };
  std::sort(d.vertices.begin(), d.vertices.end(), by_id);
  std::sort(d.crossings.begin(), d.crossings.end(), by_id);
  std::sort(d.edges.begin(), d.edges.end(), by_id);
  std::sort(d.circles.begin(), d.circles.end());
  return d;
}

bool is_web(const Diagram& diagram) { return diagram.crossings.empty(); }

std::size_t circle_count(const Diagram& diagram) {
  if (!is_web(diagram))
    throw Error(ErrorKind::ContractViolation, "circle_count requires a diagram without crossings");
  return diagram.circles.size();
}

namespace detail {

MapIndex::MapIndex(const Diagram& d)
    : num_vertices(static_cast<int>(d.vertices.size())),
      num_crossings(static_cast<int>(d.crossings.size())) {
  slots.reserve(num_nodes());
  auto add_node = [&](const auto& half_edges) {
    const int node = static_cast<int>(slots.size());
    std::vector<int> darts;
    for (std::size_t k = 0; k < half_edges.size(); ++k) {
      const int dart = static_cast<int>(dart_names.size());
      dart_names.push_back(half_edges[k]);
      dart_of_name.emplace(half_edges[k], dart);
      node_of.push_back(node);
      pos_of.push_back(static_cast<int>(k));
      darts.push_back(dart);
    }
    slots.push_back(std::move(darts));
  };
  for (const auto& v : d.vertices) add_node(v.half_edges);
  for (const auto& c : d.crossings) add_node(c.half_edges);

  mate.assign(dart_names.size(), -1);
  edge_of.assign(dart_names.size(), -1);
  is_head.assign(dart_names.size(), 0);
  for (std::size_t e = 0; e < d.edges.size(); ++e) {
    const int t = dart_of_name.at(d.edges[e].tail);
    const int h = dart_of_name.at(d.edges[e].head);
    mate[t] = h;
    mate[h] = t;
    edge_of[t] = edge_of[h] = static_cast<int>(e);
    is_head[h] = 1;
  }
}

std::vector<std::vector<int>> faces(const MapIndex& index) {
  std::vector<std::vector<int>> result;
  std::vector<char> seen(index.mate.size(), 0);
  for (int start = 0; start < static_cast<int>(index.mate.size()); ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    int dart = start;
    do {
      seen[dart] = 1;
      face.push_back(dart);
      dart = index.face_next(dart);
    } while (dart != start);
    result.push_back(std::move(face));
  }
  return result;
}

}  // namespace detail

int genus(const Diagram& diagram) {
  const detail::MapIndex index(diagram);
  const int nodes = index.num_nodes();
  std::vector<int> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t dart = 0; dart < index.mate.size(); ++dart)
    parent[find(index.node_of[dart])] = find(index.node_of[index.mate[dart]]);
  int components = 0;
  for (int n = 0; n < nodes; ++n) components += find(n) == n;
  const int edges = static_cast<int>(diagram.edges.size());
  const int face_count = static_cast<int>(detail::faces(index).size());
  return (2 * components - nodes + edges - face_count) / 2;
}

Diagram reverse_strand(const Diagram& diagram, std::string_view edge_id) {
  auto it = std::find_if(diagram.edges.begin(), diagram.edges.end(),
                         [&](const Edge& e) { return e.id == edge_id; });
  if (it == diagram.edges.end())
    throw Error(ErrorKind::UnknownId, "unknown edge '" + std::string(edge_id) + "'");
  const detail::MapIndex index(diagram);
  std::vector<char> flip(diagram.edges.size(), 0);
  const int start = index.dart_of_name.at(it->tail);
  // walk both ways from the edge, continuing straight through crossings
  for (int first : {start, index.mate[start]}) {
    int dart = first;
    while (true) {
      if (flip[index.edge_of[dart]] && dart != first) break;
      flip[index.edge_of[dart]] = 1;
      const int far = index.mate[dart];
      if (!index.is_crossing(index.node_of[far])) break;
      dart = index.opposite(far);
      if (flip[index.edge_of[dart]]) break;
    }
  }
  Diagram out = diagram;
  for (std::size_t e = 0; e < out.edges.size(); ++e)
    if (flip[e]) std::swap(out.edges[e].tail, out.edges[e].head);
  return out;
}

TrivalentGraph underlying_graph(const Diagram& diagram) {
  const detail::MapIndex index(diagram);
  TrivalentGraph graph;
  graph.rotation.assign(index.num_vertices, {-1, -1, -1});
  for (const auto& v : diagram.vertices) graph.vertex_ids.push_back(v.id);

  std::vector<char> used(index.mate.size(), 0);
  for (int v = 0; v < index.num_vertices; ++v) {
    for (int k = 0; k < 3; ++k) {
      const int dart = index.slots[v][k];
      if (used[dart]) continue;
      const std::string* name = &diagram.edges[index.edge_of[dart]].id;
      int cur = dart;
      int far = index.mate[cur];
      used[cur] = 1;
      while (index.is_crossing(index.node_of[far])) {
        used[far] = 1;
        cur = index.opposite(far);
        used[cur] = 1;
        name = std::min(name, &diagram.edges[index.edge_of[cur]].id,
                        [](const std::string* a, const std::string* b) { return *a < *b; });
        far = index.mate[cur];
      }
      used[far] = 1;
      const int g = static_cast<int>(graph.ends.size());
      graph.ends.push_back({v, index.node_of[far]});
      graph.edge_ids.push_back(*name);
      graph.rotation[v][k] = g;
      graph.rotation[index.node_of[far]][index.pos_of[far]] = g;
    }
  }

  graph.circle_ids = diagram.circles;
  for (int dart = 0; dart < static_cast<int>(index.mate.size()); ++dart) {
    if (used[dart]) continue;
    const std::string* name = &diagram.edges[index.edge_of[dart]].id;
    int cur = dart;
    do {
      used[cur] = 1;
      const int far = index.mate[cur];
      used[far] = 1;
      if (diagram.edges[index.edge_of[cur]].id < *name) name = &diagram.edges[index.edge_of[cur]].id;
      cur = index.opposite(far);
    } while (cur != dart);
    graph.circle_ids.push_back(*name);
  }
  std::sort(graph.circle_ids.begin(), graph.circle_ids.end());
  graph.free_circles = graph.circle_ids.size();
  return graph;
}

}  // namespace vweb
