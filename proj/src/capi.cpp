#include "vweb/vweb.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "vweb/diagram.hpp"
#include "vweb/error.hpp"
#include "vweb/generate.hpp"
#include "vweb/moves.hpp"
#include "vweb/penrose.hpp"
#include "vweb/report.hpp"
#include "vweb/resolution.hpp"
#include "vweb/tait.hpp"

struct vweb_diagram {
  vweb::Diagram diagram;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

vweb_status status_of(vweb::ErrorKind kind) {
  using vweb::ErrorKind;
  switch (kind) {
    case ErrorKind::Syntax:
    case ErrorKind::DuplicateId:
    case ErrorKind::DanglingHalfEdge:
    case ErrorKind::Degree:
    case ErrorKind::StrandOrientation: return VWEB_E_INPUT;
    case ErrorKind::CapExceeded:
    case ErrorKind::TooLarge: return VWEB_E_LIMIT;
    case ErrorKind::UnknownId:
    case ErrorKind::ContractViolation:
    case ErrorKind::StaleSite:
    case ErrorKind::InvalidParameter: return VWEB_E_USAGE;
  }
  return VWEB_E_INTERNAL;
}

template <class F>
vweb_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const vweb::Error& e) {
    last_error = std::string(vweb::to_string(e.kind())) + ": " + e.what();
    return status_of(e.kind());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return VWEB_E_LIMIT;
  } catch (const std::exception& e) {
    last_error = e.what();
    return VWEB_E_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw vweb::Error(vweb::ErrorKind::InvalidParameter, what);
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vweb_status emit(const std::string& s, char** out) {
  *out = copy_out(s);
  return VWEB_OK;
}

vweb_status emit(vweb::Diagram d, vweb_diagram** out) {
  *out = new vweb_diagram{std::move(d)};
  return VWEB_OK;
}

json graph_json(const vweb::TrivalentGraph& g) {
  return {{"vertices", g.num_vertices()},
          {"edges", g.edge_ids},
          {"free_circles", g.free_circles},
          {"has_loop", vweb::has_loop(g)},
          {"has_bridge", vweb::has_bridge(g)}};
}

}  // namespace

extern "C" {

const char* vweb_last_error(void) { return last_error.c_str(); }

void vweb_string_free(char* s) { std::free(s); }

void vweb_free(vweb_diagram* d) { delete d; }

vweb_status vweb_parse(const char* text, vweb_diagram** out) {
  return guarded([&] {
    require(text && out, "null argument");
    return emit(vweb::parse(text), out);
  });
}

vweb_status vweb_generate(const char* family, long parameter, vweb_diagram** out) {
  return guarded([&] {
    require(family && out, "null argument");
    vweb::GeneratorSpec spec{vweb::parse_family(family), std::nullopt};
    if (parameter >= 0) {
      require(parameter <= 1'000'000, "parameter too large");
      spec.parameter = static_cast<unsigned>(parameter);
    }
    return emit(vweb::generate(spec), out);
  });
}

vweb_status vweb_random(uint64_t seed, size_t max_crossings, size_t max_vertices,
                        vweb_diagram** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    require(max_vertices >= 2, "max_vertices must be at least 2");
    return emit(vweb::random_diagram(seed, {max_crossings, max_vertices}), out);
  });
}

vweb_status vweb_serialize(const vweb_diagram* d, char** out) {
  return guarded([&] {
    require(d && out, "null argument");
    return emit(vweb::serialize(d->diagram), out);
  });
}

size_t vweb_crossing_count(const vweb_diagram* d) { return d ? d->diagram.crossings.size() : 0; }

vweb_status vweb_info_json(const vweb_diagram* d, char** out) {
  return guarded([&] {
    require(d && out, "null argument");
    const vweb::Diagram& dg = d->diagram;
    const json j = {{"vertices", dg.vertices.size()},
                    {"crossings", dg.crossings.size()},
                    {"edges", dg.edges.size()},
                    {"circles", dg.circles.size()},
                    {"is_web", vweb::is_web(dg)},
                    {"genus", vweb::genus(dg)},
                    {"graph", graph_json(vweb::underlying_graph(dg))}};
    return emit(j.dump(), out);
  });
}

vweb_status vweb_tait_count(const vweb_diagram* d, uint64_t* out) {
  return guarded([&] {
    require(d && out, "null argument");
    *out = vweb::count_tait(vweb::underlying_graph(d->diagram));
    return VWEB_OK;
  });
}

vweb_status vweb_tait_list_json(const vweb_diagram* d, size_t cap, char** out) {
  return guarded([&] {
    require(d && out, "null argument");
    const vweb::TrivalentGraph g = vweb::underlying_graph(d->diagram);
    json list = json::array();
    for (const auto& c : vweb::enumerate_tait(g, cap)) {
      json edges = json::object(), circles = json::object();
      for (std::size_t i = 0; i < c.edge_colors.size(); ++i) edges[g.edge_ids[i]] = c.edge_colors[i];
      for (std::size_t i = 0; i < c.circle_colors.size(); ++i)
        circles[g.circle_ids[i]] = c.circle_colors[i];
      list.push_back({{"edges", edges}, {"circles", circles}});
    }
    return emit(list.dump(), out);
  });
}

vweb_status vweb_penrose(const vweb_diagram* d, const char* method, size_t cap,
                         size_t max_crossings, int64_t* value, uint64_t* terms,
                         int64_t* elapsed_ns) {
  return guarded([&] {
    require(d && method && value, "null argument");
    vweb::PenroseResult r;
    switch (vweb::parse_method(method)) {
      case vweb::Method::Direct: r = vweb::penrose_direct(d->diagram, cap); break;
      case vweb::Method::Cube: r = vweb::euler_characteristic(d->diagram, {max_crossings}); break;
      case vweb::Method::Skein: r = vweb::penrose_skein(d->diagram); break;
    }
    *value = r.value;
    if (terms) *terms = r.terms;
    if (elapsed_ns) *elapsed_ns = r.elapsed.count();
    return VWEB_OK;
  });
}

vweb_status vweb_cube_json(const vweb_diagram* d, size_t max_crossings, char** out) {
  return guarded([&] {
    require(d && out, "null argument");
    const vweb::ResolutionCube cube = vweb::build_cube(d->diagram, {max_crossings});
    json entries = json::array();
    const std::size_t n = cube.crossings.size();
    for (std::size_t mask = 0; mask < cube.tait_counts.size(); ++mask) {
      std::string bits(n, '0');
      for (std::size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u) bits[i] = '1';
      entries.push_back({{"assignment", bits}, {"tait", cube.tait_counts[mask]}});
    }
    const json j = {{"crossings", cube.crossings},
                    {"graded_dims", cube.graded_dims},
                    {"euler", cube.euler},
                    {"entries", entries}};
    return emit(j.dump(), out);
  });
}

vweb_status vweb_resolve(const vweb_diagram* d, const char* bits, vweb_diagram** out) {
  return guarded([&] {
    require(d && bits && out, "null argument");
    const auto assignment = vweb::ResolutionAssignment::from_bitstring(d->diagram, bits);
    return emit(vweb::complete_resolution(d->diagram, assignment), out);
  });
}

vweb_status vweb_moves_list_json(const vweb_diagram* d, const char* kind, char** out) {
  return guarded([&] {
    require(d && kind && out, "null argument");
    const auto sites = vweb::find_moves(d->diagram, vweb::parse_move_kind(kind));
    json list = json::array();
    for (std::size_t i = 0; i < sites.size(); ++i)
      list.push_back({{"index", i},
                      {"kind", vweb::to_string(sites[i].kind)},
                      {"anchors", sites[i].anchors},
                      {"crossing_delta", vweb::crossing_delta(sites[i])}});
    return emit(list.dump(), out);
  });
}

vweb_status vweb_moves_apply(const vweb_diagram* d, const char* kind, size_t index,
                             vweb_diagram** out) {
  return guarded([&] {
    require(d && kind && out, "null argument");
    const auto sites = vweb::find_moves(d->diagram, vweb::parse_move_kind(kind));
    if (index >= sites.size())
      throw vweb::Error(vweb::ErrorKind::InvalidParameter,
                        "site index " + std::to_string(index) + " out of range (" +
                            std::to_string(sites.size()) + " sites)");
    return emit(vweb::apply_move(d->diagram, sites[index]), out);
  });
}

vweb_status vweb_verify_json(const vweb_diagram* d, size_t cap, size_t max_crossings,
                             char** out) {
  return guarded([&] {
    require(d && out, "null argument");
    const vweb::VerifyReport report = vweb::verify(d->diagram, {cap, {max_crossings}});
    json methods = json::array();
    for (const auto& r : report.results)
      methods.push_back({{"method", vweb::to_string(r.method)},
                         {"value", r.value},
                         {"terms", r.terms},
                         {"elapsed_ns", r.elapsed.count()}});
    const json j = {{"ok", report.ok()},
                    {"tait_count", report.tait_count},
                    {"is_web", report.is_web},
                    {"genus", report.genus},
                    {"methods", methods},
                    {"mismatches", report.mismatches}};
    *out = copy_out(j.dump());
    if (!report.ok()) last_error = "mismatch: " + report.mismatches.front();
    return report.ok() ? VWEB_OK : VWEB_E_MISMATCH;
  });
}

vweb_status vweb_export_dot(const vweb_diagram* d, char** out) {
  return guarded([&] {
    require(d && out, "null argument");
    return emit(vweb::export_dot(d->diagram), out);
  });
}

}  // extern "C"
