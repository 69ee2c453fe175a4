#include "circweb/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "circweb/errors.hpp"
#include "circweb/render.hpp"

namespace circweb::cli {

namespace {

struct UsageError : Error {
  using Error::Error;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<double> parse_reals(const std::string& text, std::size_t count, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad number in ") + what + ": " + item);
    }
  }
  if (out.size() != count) throw UsageError(std::string(what) + " needs " + std::to_string(count) + " values");
  return out;
}

Params parse_params(const std::vector<std::string>& kvs) {
  Params p;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects k=v, got " + kv);
    p[kv.substr(0, eq)] = parse_reals(kv.substr(eq + 1), 1, "--param")[0];
  }
  return p;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream f(path);
  if (!f) throw UsageError("cannot write " + path);
  f << j.dump(2) << "\n";
}

nlohmann::json plane_json(const Plane4& p) { return {p[0], p[1], p[2], p[3]}; }
nlohmann::json point_json(const TetraPoint& p) { return {p.X, p.Y, p.Z, p.U}; }

std::string params_text(const Params& p) {
  std::string s;
  for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + fmt("%g", v);
  return s.empty() ? "-" : s;
}

void print_record(std::ostream& out, const VerifyRecord& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-24s %-10s %4d/%-4d K %.2e  explicit %.2e  abr %.2e  defect %.2e  %s  %.3fs",
                r.id.c_str(), params_text(r.params).c_str(), r.stats.tested - r.stats.skipped, r.stats.tested,
                r.stats.max_K, r.stats.max_explicit, r.stats.max_abr, r.stats.max_defect, r.pass ? "PASS" : "FAIL",
                r.wall_seconds);
  out << buf << "\n";
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& id : catalog_ids()) {
    const auto& s = spec_of(id);
    std::string ps;
    for (const auto& p : s.params) ps += (ps.empty() ? "" : "; ") + p.name + ": " + p.range_text;
    char buf[96];
    std::snprintf(buf, sizeof buf, "%-24s %-16s %-3s ", id.c_str(), std::string(recipe_name(s.recipe)).c_str(),
                  s.expected_hexagonal ? "hex" : "-");
    out << buf << s.description << (ps.empty() ? "" : "  [" + ps + "]") << "\n";
  }
  return 0;
}

int cmd_verify(std::ostream& out, const std::string& target, const std::vector<std::string>& kvs, int grid,
               double tol, const std::string& sampling, const std::string& json_path, bool extras) {
  if (grid < 1) throw UsageError("--grid must be positive");
  if (!(tol > 0)) throw UsageError("--tol must be positive");
  const Sampling sm = sampling == "halton" ? Sampling::halton : Sampling::regular;
  const Params given = parse_params(kvs);
  std::vector<BuiltWeb> webs;
  if (target == "all") {
    if (!given.empty()) throw UsageError("--param needs a single id");
    for (const auto& id : catalog_ids()) {
      const auto& spec = spec_of(id);
      if (!spec.expected_hexagonal) continue;
      webs.push_back(build(id));
      if (!extras) continue;
      for (const auto& p : spec.params)
        for (double v : p.extra) webs.push_back(build(id, {{p.name, v}}));
    }
  } else {
    if (extras) throw UsageError("--extras needs 'all'");
    webs.push_back(build(target, given));
  }
  nlohmann::json report{{"schema_version", kSchemaVersion}, {"command", "verify"}, {"tolerance", tol},
                        {"grid", grid}, {"sampling", sampling_name(sm)}, {"webs", nlohmann::json::array()}};
  int failed = 0;
  for (const auto& w : webs) {
    auto r = verify_web(w, grid, tol, sm);
    print_record(out, r);
    if (!r.pass) ++failed;
    report["webs"].push_back(to_json(r));
  }
  report["summary"] = {{"webs", webs.size()}, {"failed", failed}, {"status", failed ? "FAIL" : "PASS"}};
  out << (failed ? "FAIL" : "PASS") << ": " << webs.size() - failed << "/" << webs.size() << " webs\n";
  if (!json_path.empty()) write_json(json_path, report);
  return failed ? 1 : 0;
}

int cmd_curvature(std::ostream& out, const std::string& id, const std::vector<std::string>& kvs,
                  const std::string& at) {
  const auto st = parse_reals(at, 2, "--at");
  const auto b = build(id, parse_params(kvs));
  const auto p = b.web.chart.to_plane(st[0], st[1]);
  out << "web " << id << "  chart " << b.web.chart.name() << "  (s,t) = (" << fmt("%.17g", st[0]) << ", "
      << fmt("%.17g", st[1]) << ")  plane (" << fmt("%.17g", p.x) << ", " << fmt("%.17g", p.y) << ")\n";
  try {
    const auto r = evaluate(b.web, st[0], st[1]);
    out << "slopes " << fmt("%.17g", r.slopes[0]) << " " << fmt("%.17g", r.slopes[1]) << " "
        << fmt("%.17g", r.slopes[2]) << "\n";
    out << "K " << fmt("%.6e", r.connection.K) << "  normalized " << fmt("%.3e", r.connection.K_normalized) << "\n";
    out << "explicit residual " << fmt("%.6e", r.explicit_form.raw) << "  normalized "
        << fmt("%.3e", r.explicit_form.normalized) << "\n";
    out << "abr residual " << fmt("%.6e", r.abr_form.raw) << "  normalized " << fmt("%.3e", r.abr_form.normalized)
        << "\n";
    out << "connection defect " << fmt("%.3e", r.connection.defect) << "\n";
  } catch (const DomainError& e) {
    out << "irregular point: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

int cmd_classify(std::ostream& out, const std::string& text) {
  PluckerLine l;
  try {
    l = parse_generator(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Classification c;
  try {
    c = classify(l);
  } catch (const ZeroGeneratorError& e) {
    throw UsageError(e.what());
  }
  out << describe(c.cls) << (c.marginal ? " (marginal)" : "") << "\n";
  return 0;
}

int cmd_singular(std::ostream& out, const std::string& id, const std::string& json_path) {
  const auto b = build(id);
  if (b.polar_lines.size() != 3) throw UsageError(id + " is not a three-pencil web");
  const auto rep = singular_circle_check(b.polar_lines[0], b.polar_lines[1], b.polar_lines[2]);
  out << "web " << id << "  lines " << class_name(rep.classes[0]) << " " << class_name(rep.classes[1]) << " "
      << class_name(rep.classes[2]) << "\n";
  for (const auto& p : rep.pairs) {
    out << "  pair " << p.first << p.second << " | " << p.third << "  " << status_name(p.status)
        << (p.intersecting ? "  intersecting" : "  skew") << (p.note.empty() ? "" : "  " + p.note) << "\n";
    for (const auto& c : p.circles)
      out << "    circle pole (" << fmt("%.6f", c.pole.X) << ", " << fmt("%.6f", c.pole.Y) << ", "
          << fmt("%.6f", c.pole.Z) << ", " << fmt("%.6f", c.pole.U) << ")  distance " << fmt("%.2e", c.distance)
          << "  defect " << fmt("%.1e", c.circularity_defect) << (c.trivial ? "  trivial" : "")
          << (c.ok ? "" : "  FAIL") << "\n";
    for (auto k : p.other_components) out << "    " << kind_name(k) << " component\n";
  }
  out << verdict_name(rep.verdict) << (rep.note.empty() ? "" : ": " + rep.note) << "\n";
  if (!json_path.empty()) {
    auto j = to_json(rep);
    j["schema_version"] = kSchemaVersion;
    j["command"] = "singular";
    j["id"] = id;
    write_json(json_path, j);
  }
  return rep.verdict == Verdict::fail ? 1 : 0;
}

int cmd_subwebs(std::ostream& out, const std::string& which, bool verify) {
  const auto subs = enumerate_subwebs(which);
  int failed = 0;
  for (const auto& s : subs) {
    if (!verify) {
      out << s.web.spec.id << (s.coplanar ? "  coplanar lines" : "") << "\n";
      continue;
    }
    auto r = verify_web(s.web, kDefaultGrid, kDefaultTol);
    print_record(out, r);
    if (r.pass != s.web.spec.expected_hexagonal) ++failed;
  }
  if (verify)
    out << (failed ? "FAIL" : "PASS") << ": " << subs.size() - failed << "/" << subs.size() << " subwebs\n";
  return failed ? 1 : 0;
}

int cmd_render(std::ostream& out, const std::string& id, const std::vector<std::string>& kvs,
               const std::string& path, const std::string& window, int leaves, bool no_envelope) {
  if (leaves < 2) throw UsageError("--leaves must be at least 2");
  RenderConfig cfg;
  if (!window.empty()) {
    const auto w = parse_reals(window, 4, "--window");
    cfg.window = Window{w[0], w[1], w[2], w[3]};
  }
  cfg.leaves = leaves;
  cfg.envelope = !no_envelope;
  const auto svg = render_web(build(id, parse_params(kvs)), cfg);
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write " + path);
  f << svg;
  out << "wrote " << path << " (" << svg.size() << " bytes)\n";
  return 0;
}

}  // namespace

VerifyRecord verify_web(const BuiltWeb& web, int grid, double tol, Sampling sampling) {
  VerifyRecord r;
  r.id = web.spec.id;
  r.params = web.params;
  r.grid = grid;
  r.sampling = sampling;
  r.tol = tol;
  r.expected_hexagonal = web.spec.expected_hexagonal;
  const auto t0 = std::chrono::steady_clock::now();
  r.stats = sweep(web.web, web.spec.window, grid, sampling);
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.pass = r.stats.pass(tol);
  return r;
}

nlohmann::json to_json(const VerifyRecord& r) {
  const auto& s = r.stats;
  return {{"id", r.id},
          {"params", r.params},
          {"grid", r.grid},
          {"sampling", sampling_name(r.sampling)},
          {"points_tested", s.tested},
          {"points_skipped", s.skipped},
          {"max", {{"K", s.max_K}, {"explicit", s.max_explicit}, {"abr", s.max_abr}}},
          {"mean", {{"K", s.mean_K}, {"explicit", s.mean_explicit}, {"abr", s.mean_abr}}},
          {"max_defect", s.max_defect},
          {"expected_hexagonal", r.expected_hexagonal},
          {"pass", r.pass},
          {"status", r.pass ? "PASS" : "FAIL"},
          {"wall_seconds", r.wall_seconds}};
}

nlohmann::json to_json(const SingularReport& r) {
  nlohmann::json j{{"lines", nlohmann::json::array()}, {"pairs", nlohmann::json::array()}};
  for (int i = 0; i < 3; ++i)
    j["lines"].push_back({{"plucker", r.lines[i].coords()}, {"class", class_name(r.classes[i])}});
  for (const auto& p : r.pairs) {
    nlohmann::json pj{{"pair", {p.first, p.second}},   {"third", p.third},
                      {"status", status_name(p.status)}, {"note", p.note},
                      {"intersecting", p.intersecting},  {"samples", p.samples},
                      {"circles", nlohmann::json::array()}, {"other_components", nlohmann::json::array()}};
    for (const auto& c : p.circles)
      pj["circles"].push_back({{"plane", plane_json(c.plane)},
                               {"pole", point_json(c.pole)},
                               {"circularity_defect", c.circularity_defect},
                               {"incidence_distance", c.distance},
                               {"trivial", c.trivial},
                               {"status", c.ok ? "PASS" : "FAIL"}});
    for (auto k : p.other_components) pj["other_components"].push_back(kind_name(k));
    j["pairs"].push_back(pj);
  }
  j["verdict"] = verdict_name(r.verdict);
  j["note"] = r.note;
  j["max_incidence_distance"] = r.max_distance;
  return j;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Circular 3-webs: catalog, curvature sweeps, singular circles and figures", "circweb"};
  app.require_subcommand(1);

  auto* catalog = app.add_subcommand("catalog", "Catalog of webs");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "List catalog entries");

  std::string target, id, at, line_text, json_path, window, output, sampling = "regular";
  std::vector<std::string> kvs;
  int grid = kDefaultGrid, leaves = 24;
  double tol = kDefaultTol;
  bool verify_subwebs = false, no_envelope = false, extras = false;

  auto* verify = app.add_subcommand("verify", "Curvature sweep of one entry or all hexagonal entries");
  verify->add_option("target", target, "catalog id or 'all'")->required();
  verify->add_option("--param", kvs, "parameter k=v")->allow_extra_args(false);
  verify->add_option("--grid", grid, "grid size N (N x N points)");
  verify->add_option("--tol", tol, "normalized residual tolerance");
  verify->add_option("--sampling", sampling, "regular or halton")->check(CLI::IsMember({"regular", "halton"}));
  verify->add_option("--json", json_path, "write a JSON report");
  verify->add_flag("--extras", extras, "with 'all', also sweep the extra parameter values of each entry");

  auto* curvature = app.add_subcommand("curvature", "Curvature at one chart point");
  curvature->add_option("id", id, "catalog id")->required();
  curvature->add_option("--at", at, "chart coordinates s,t")->required();
  curvature->add_option("--param", kvs, "parameter k=v")->allow_extra_args(false);

  auto* classify_line = app.add_subcommand("classify-line", "Classify a line a:b:c:f:g:h");
  classify_line->add_option("line", line_text, "Pluecker coordinates")->required();

  auto* singular = app.add_subcommand("singular", "Singular-circle check of a three-pencil web");
  singular->add_option("id", id, "three-pencil catalog id")->required();
  singular->add_option("--json", json_path, "write a JSON report");

  auto* subwebs = app.add_subcommand("subwebs", "Three-line subwebs of A6 or A4");
  subwebs->add_option("web", target, "A6 or A4")->required()->check(CLI::IsMember({"A6", "A4", "a6", "a4"}));
  subwebs->add_flag("--verify", verify_subwebs, "sweep every subweb");

  auto* render = app.add_subcommand("render", "Write an SVG figure");
  render->add_option("id", id, "catalog id")->required();
  render->add_option("-o,--output", output, "SVG file")->required();
  render->add_option("--window", window, "x0,x1,y0,y1");
  render->add_option("--leaves", leaves, "leaves per family");
  render->add_option("--param", kvs, "parameter k=v")->allow_extra_args(false);
  render->add_flag("--no-envelope", no_envelope, "omit the envelope curve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (catalog->parsed()) return cmd_catalog_list(out);
    if (verify->parsed()) return cmd_verify(out, target, kvs, grid, tol, sampling, json_path, extras);
    if (curvature->parsed()) return cmd_curvature(out, id, kvs, at);
    if (classify_line->parsed()) return cmd_classify(out, line_text);
    if (singular->parsed()) return cmd_singular(out, id, json_path);
    if (subwebs->parsed()) return cmd_subwebs(out, target, verify_subwebs);
    if (render->parsed()) return cmd_render(out, id, kvs, output, window, leaves, no_envelope);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnknownIdError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParamRangeError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const DegenerateParamError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const EmptyWindowError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace circweb::cli
