#include "vweb/report.hpp"

#include <map>
#include <sstream>

namespace vweb {

VerifyReport verify(const Diagram& diagram, const VerifyOptions& options) {
  VerifyReport report;
  report.tait_count = count_tait(underlying_graph(diagram));
  report.is_web = is_web(diagram);
  report.genus = genus(diagram);
  report.results.push_back(penrose_direct(diagram, options.cap));
  report.results.push_back(euler_characteristic(diagram, options.limits));
  report.results.push_back(penrose_skein(diagram));

  const PenroseResult& first = report.results.front();
  for (std::size_t i = 1; i < report.results.size(); ++i) {
    const PenroseResult& r = report.results[i];
    if (r.value != first.value)
      report.mismatches.push_back(std::string(to_string(first.method)) + "=" +
                                  std::to_string(first.value) + " but " + to_string(r.method) +
                                  "=" + std::to_string(r.value));
  }
  if (report.is_web && first.value != static_cast<std::int64_t>(report.tait_count))
    report.mismatches.push_back("web with " + std::string(to_string(first.method)) + "=" +
                                std::to_string(first.value) + " but tait count " +
                                std::to_string(report.tait_count));
  return report;
}

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const Diagram& diagram) {
  std::map<std::string, std::string> node_of;
  for (const auto& v : diagram.vertices)
    for (const auto& h : v.half_edges) node_of[h] = v.id;
  for (const auto& c : diagram.crossings)
    for (const auto& h : c.half_edges) node_of[h] = c.id;

  std::ostringstream out;
  out << "digraph vweb {\n";
  for (const auto& v : diagram.vertices)
    out << "  " << quoted(v.id) << " [shape=circle, label=" << quoted(v.id) << "];\n";
  for (const auto& c : diagram.crossings)
    out << "  " << quoted(c.id) << " [shape=box, style=dashed, label=" << quoted(c.id) << "];\n";
  for (const auto& e : diagram.edges)
    out << "  " << quoted(node_of.at(e.tail)) << " -> " << quoted(node_of.at(e.head))
        << " [label=" << quoted(e.id) << "];\n";
  for (const auto& c : diagram.circles) out << "  // circle " << c << "\n";
  out << "}\n";
  return out.str();
}

}  // namespace vweb
