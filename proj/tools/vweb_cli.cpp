// Command-line front end over the C interface.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "vweb/vweb.h"

namespace {

using nlohmann::json;

struct Failure {
  vweb_status status;
  std::string message;
};

void check(vweb_status s) {
  if (s != VWEB_OK) throw Failure{s, vweb_last_error()};
}

// Owning wrappers for the C handles.
struct DiagramHandle {
  vweb_diagram* p = nullptr;
  DiagramHandle() = default;
  DiagramHandle(const DiagramHandle&) = delete;
  DiagramHandle& operator=(const DiagramHandle&) = delete;
  ~DiagramHandle() { vweb_free(p); }
};

std::string take(char* s) {
  std::string out(s);
  vweb_string_free(s);
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{VWEB_E_USAGE, "cannot open '" + path + "'"};
  return {std::istreambuf_iterator<char>(in), {}};
}

void load(const std::string& path, DiagramHandle& d) { check(vweb_parse(read_input(path).c_str(), &d.p)); }

std::string serialized(const DiagramHandle& d) {
  char* s = nullptr;
  check(vweb_serialize(d.p, &s));
  return take(s);
}

struct Settings {
  bool json = false;
  bool timings = false;
  std::uint64_t seed = 1;
  std::optional<std::size_t> max_crossings;
  std::size_t cap = 1'000'000;

  std::size_t cube_limit() const { return max_crossings.value_or(20); }
};

class Output {
 public:
  Output(const Settings& settings, std::string command, std::string input)
      : settings_(settings), command_(std::move(command)), input_(std::move(input)),
        start_(std::chrono::steady_clock::now()) {}

  // `text` goes to stdout in plain mode, `result` inside the envelope in
  // JSON mode.
  void emit(const std::string& text, const json& result, const json& extra = json::object()) const {
    if (!settings_.json) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return;
    }
    json envelope = {{"command", command_}, {"input", input_}, {"result", result}};
    for (const auto& [k, v] : extra.items()) envelope[k] = v;
    if (settings_.timings) {
      const auto elapsed = std::chrono::steady_clock::now() - start_;
      envelope["elapsed_ms"] = std::chrono::duration<double, std::milli>(elapsed).count();
    } else {
      envelope["elapsed_ms"] = nullptr;
    }
    std::cout << envelope.dump() << '\n';
  }

 private:
  const Settings& settings_;
  std::string command_;
  std::string input_;
  std::chrono::steady_clock::time_point start_;
};

int run(int argc, char** argv) {
  CLI::App app{"Tait colorings and Penrose numbers of plane trivalent diagrams with crossings",
               "vweb"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_flag("--json", s.json, "Emit a JSON envelope");
  app.add_flag("--timings", s.timings, "Report elapsed time");
  app.add_option("--seed", s.seed, "Seed for randomized commands")->capture_default_str();
  app.add_option("--max-crossings", s.max_crossings,
                 "Cube size limit (default 20); crossing bound for gen random (default 10)");
  app.add_option("--cap", s.cap, "Enumeration cap")->capture_default_str();

  std::string file;
  auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "Diagram file, '-' for stdin")->required();
  };

  auto* parse_cmd = app.add_subcommand("parse", "Validate and print in canonical form");
  add_file(parse_cmd);

  auto* tait_cmd = app.add_subcommand("tait", "Tait colorings of the underlying graph");
  tait_cmd->require_subcommand(1);
  auto* tait_count = tait_cmd->add_subcommand("count", "Number of Tait colorings");
  add_file(tait_count);
  auto* tait_list = tait_cmd->add_subcommand("list", "All Tait colorings, up to --cap");
  add_file(tait_list);

  std::string method = "direct";
  auto* penrose_cmd = app.add_subcommand("penrose", "Penrose number");
  add_file(penrose_cmd);
  penrose_cmd->add_option("--method", method, "direct, cube or skein")
      ->check(CLI::IsMember({"direct", "cube", "skein"}))
      ->capture_default_str();

  auto* euler_cmd = app.add_subcommand("euler", "Cube of resolutions and its Euler characteristic");
  add_file(euler_cmd);

  std::string assignment, out_dir;
  bool all = false;
  auto* resolve_cmd = app.add_subcommand("resolve", "Complete resolutions");
  add_file(resolve_cmd);
  auto* assignment_opt =
      resolve_cmd->add_option("--assignment", assignment, "One 0/1 per crossing in identifier order");
  auto* all_opt = resolve_cmd->add_flag("--all", all, "Write every complete resolution");
  auto* out_opt = resolve_cmd->add_option("--out", out_dir, "Directory for --all");
  all_opt->excludes(assignment_opt);
  all_opt->needs(out_opt);

  std::string kind;
  std::size_t site = 0;
  auto* moves_cmd = app.add_subcommand("moves", "Virtual Reidemeister moves");
  moves_cmd->require_subcommand(1);
  auto* moves_list = moves_cmd->add_subcommand("list", "Sites of one move kind");
  add_file(moves_list);
  moves_list->add_option("--kind", kind, "Move kind")->required();
  auto* moves_apply = moves_cmd->add_subcommand("apply", "Apply the move at a listed site");
  add_file(moves_apply);
  moves_apply->add_option("--kind", kind, "Move kind")->required();
  moves_apply->add_option("--site", site, "Index into the site list")->required();

  std::string family;
  std::optional<long> parameter;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a diagram (families: unlink n, theta, "
                                            "crossed_theta, kinked_unknot, k4, prism n, dumbbell, "
                                            "petersen, random)");
  gen_cmd->add_option("family", family, "Family name")->required();
  gen_cmd->add_option("n", parameter, "Family parameter");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check all methods");
  add_file(verify_cmd);

  auto* export_cmd = app.add_subcommand("export", "Export to another format");
  export_cmd->require_subcommand(1);
  auto* export_dot = export_cmd->add_subcommand("dot", "Graphviz DOT");
  add_file(export_dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return VWEB_E_USAGE;
  }

  DiagramHandle d;
  if (parse_cmd->parsed()) {
    load(file, d);
    char* info = nullptr;
    check(vweb_info_json(d.p, &info));
    Output(s, "parse", file).emit(serialized(d), json::parse(take(info)));
  } else if (tait_count->parsed()) {
    load(file, d);
    std::uint64_t n = 0;
    check(vweb_tait_count(d.p, &n));
    Output(s, "tait count", file).emit(std::to_string(n), n);
  } else if (tait_list->parsed()) {
    load(file, d);
    char* list = nullptr;
    check(vweb_tait_list_json(d.p, s.cap, &list));
    const json colorings = json::parse(take(list));
    std::ostringstream text;
    for (const auto& c : colorings) {
      const char* sep = "";
      for (const auto& [id, color] : c["edges"].items()) {
        text << sep << id << '=' << color;
        sep = " ";
      }
      for (const auto& [id, color] : c["circles"].items()) {
        text << sep << id << '=' << color;
        sep = " ";
      }
      text << '\n';
    }
    Output(s, "tait list", file).emit(text.str(), colorings);
  } else if (penrose_cmd->parsed()) {
    load(file, d);
    std::int64_t value = 0, elapsed = 0;
    std::uint64_t terms = 0;
    check(vweb_penrose(d.p, method.c_str(), s.cap, s.cube_limit(), &value, &terms, &elapsed));
    std::string text = std::to_string(value);
    if (s.timings) text += "\n# " + method + ": " + std::to_string(terms) + " terms, " +
                           std::to_string(elapsed / 1000) + " us";
    Output(s, "penrose", file).emit(text, value, {{"method", method}, {"terms", terms}});
  } else if (euler_cmd->parsed()) {
    load(file, d);
    char* cube = nullptr;
    check(vweb_cube_json(d.p, s.cube_limit(), &cube));
    const json j = json::parse(take(cube));
    std::ostringstream text;
    text << "euler " << j["euler"] << "\ngraded_dims " << j["graded_dims"].dump() << '\n';
    Output(s, "euler", file)
        .emit(text.str(), j, {{"method", "cube"}, {"terms", j["entries"].size()}});
  } else if (resolve_cmd->parsed()) {
    load(file, d);
    if (!all) {
      if (assignment_opt->count() == 0)
        throw Failure{VWEB_E_USAGE, "resolve needs --assignment or --all --out"};
      DiagramHandle r;
      check(vweb_resolve(d.p, assignment.c_str(), &r.p));
      const std::string text = serialized(r);
      Output(s, "resolve", file).emit(text, {{"assignment", assignment}, {"diagram", text}});
    } else {
      const std::size_t n = vweb_crossing_count(d.p);
      if (n > s.cube_limit())
        throw Failure{VWEB_E_LIMIT, "cube of " + std::to_string(n) + " crossings exceeds the limit"};
      std::filesystem::create_directories(out_dir);
      json written = json::array();
      std::ostringstream text;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        std::string bits(n, '0');
        for (std::size_t i = 0; i < n; ++i)
          if ((mask >> i) & 1u) bits[i] = '1';
        DiagramHandle r;
        check(vweb_resolve(d.p, bits.c_str(), &r.p));
        const std::string path = (std::filesystem::path(out_dir) / (bits + ".vweb")).string();
        std::ofstream(path, std::ios::binary) << serialized(r);
        written.push_back({{"assignment", bits}, {"path", path}});
        text << bits << ' ' << path << '\n';
      }
      Output(s, "resolve", file).emit(text.str(), written);
    }
  } else if (moves_list->parsed()) {
    load(file, d);
    char* list = nullptr;
    check(vweb_moves_list_json(d.p, kind.c_str(), &list));
    const json sites = json::parse(take(list));
    std::ostringstream text;
    for (const auto& site_j : sites) {
      text << site_j["index"] << ' ' << site_j["kind"].get<std::string>();
      for (const auto& a : site_j["anchors"]) text << ' ' << a.get<std::string>();
      text << '\n';
    }
    Output(s, "moves list", file).emit(text.str(), sites);
  } else if (moves_apply->parsed()) {
    load(file, d);
    DiagramHandle r;
    check(vweb_moves_apply(d.p, kind.c_str(), site, &r.p));
    const std::string text = serialized(r);
    Output(s, "moves apply", file).emit(text, {{"kind", kind}, {"site", site}, {"diagram", text}});
  } else if (gen_cmd->parsed()) {
    std::string input = family;
    if (family == "random") {
      if (parameter) throw Failure{VWEB_E_USAGE, "family 'random' takes no parameter"};
      check(vweb_random(s.seed, s.max_crossings.value_or(10), 12, &d.p));
      input += " --seed " + std::to_string(s.seed);
    } else {
      if (parameter && *parameter < 0) throw Failure{VWEB_E_USAGE, "parameter must be positive"};
      check(vweb_generate(family.c_str(), parameter.value_or(-1), &d.p));
      if (parameter) input += " " + std::to_string(*parameter);
    }
    const std::string text = serialized(d);
    Output(s, "gen", input).emit(text, {{"diagram", text}});
  } else if (verify_cmd->parsed()) {
    load(file, d);
    char* report = nullptr;
    const vweb_status st = vweb_verify_json(d.p, s.cap, s.cube_limit(), &report);
    if (st != VWEB_OK && st != VWEB_E_MISMATCH) check(st);
    json j = json::parse(take(report));
    if (!s.timings)
      for (auto& m : j["methods"]) m.erase("elapsed_ns");
    std::ostringstream text;
    for (const auto& m : j["methods"]) {
      text << m["method"].get<std::string>() << ' ' << m["value"] << " (" << m["terms"] << " terms";
      if (s.timings) text << ", " << m["elapsed_ns"].get<std::int64_t>() / 1000 << " us";
      text << ")\n";
    }
    text << "tait " << j["tait_count"] << "\nweb " << (j["is_web"].get<bool>() ? "yes" : "no")
         << "\ngenus " << j["genus"] << '\n';
    for (const auto& m : j["mismatches"]) text << "MISMATCH " << m.get<std::string>() << '\n';
    text << (j["ok"].get<bool>() ? "ok" : "FAILED") << '\n';
    Output(s, "verify", file).emit(text.str(), j);
    if (st == VWEB_E_MISMATCH) return VWEB_E_MISMATCH;
  } else if (export_dot->parsed()) {
    load(file, d);
    char* dot = nullptr;
    check(vweb_export_dot(d.p, &dot));
    const std::string text = take(dot);
    Output(s, "export dot", file).emit(text, text);
  }
  return VWEB_OK;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.status;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return VWEB_E_INTERNAL;
  }
}
