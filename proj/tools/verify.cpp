// verify: run configured checks, prebuild Groebner caches, render reports.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "qg/algebra.hpp"
#include "qg/errors.hpp"
#include "qg/runner.hpp"

namespace {

// QG_CACHE_DIR overrides the cache directory of every config.
qg::RunConfig load(const std::string& path) {
  qg::RunConfig cfg = qg::load_config(path);
  if (const char* env = std::getenv("QG_CACHE_DIR"); env && *env) cfg.cache_dir = env;
  return cfg;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out || !(out << text)) throw qg::Error(qg::ErrorCode::Io, "cannot write " + p.string());
}

std::string read_file(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw qg::Error(qg::ErrorCode::Io, "cannot read " + p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int cmd_run(const std::string& path, const std::string& md_path, bool no_timing) {
  const qg::RunConfig cfg = load(path);
  const qg::RunReport rep = qg::run_config(cfg);
  const std::string json = qg::report_json(rep, !no_timing);
  if (cfg.report_path.empty())
    std::cout << json;
  else
    write_file(cfg.report_path, json);
  if (!md_path.empty()) write_file(md_path, qg::report_markdown(rep));
  for (const auto& c : rep.checks)
    std::cerr << c.name << ": " << qg::status_name(c.status) << " (" << c.items << " items)\n";
  return qg::exit_code(rep);
}

int cmd_gb(const std::string& path) {
  const qg::RunConfig cfg = load(path);
  const auto [a, b] = qg::instance_matrices(cfg);
  qg::AlgebraSpec s;
  s.kind = cfg.instance.kind;
  s.a = a;
  s.b = b;
  if (cfg.instance.q) s.q = *cfg.instance.q;
  s.degree_bound = cfg.degree_bound;
  s.cache_dir = cfg.cache_dir;
  const qg::AlgebraPtr alg = qg::build_presented(s);
  const qg::RewriteSystem& rs = alg->rewrite();
  std::cout << "algebra: " << qg::kind_name(alg->kind()) << "\n"
            << "rules: " << rs.rules().size() << "\n"
            << "certified degree: " << rs.certified_degree() << "\n"
            << "complete: " << (rs.complete() ? "yes" : "no") << "\n"
            << "cache: " << (cfg.cache_dir.empty() ? "disabled" : (alg->cache_hit() ? "hit" : "written")) << "\n";
  return 0;
}

int cmd_report(const std::string& path, bool md) {
  const qg::RunReport rep = qg::report_from_json(read_file(path));
  std::cout << (md ? qg::report_markdown(rep) : qg::report_json(rep, true));
  return qg::exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic verification of quantum-group Hopf algebras, resolutions and cohomology"};
  app.require_subcommand(1);

  std::string run_path, md_path;
  bool no_timing = false;
  auto* run = app.add_subcommand("run", "Run the checks of a config; JSON report to report_path or stdout");
  run->add_option("config", run_path, "config JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--md", md_path, "also write a markdown report here");
  run->add_flag("--no-timing", no_timing, "omit the timing section");

  std::string gb_path;
  auto* gb = app.add_subcommand("gb", "Complete and cache the Groebner basis of a config's instance");
  gb->add_option("config", gb_path, "config JSON")->required()->check(CLI::ExistingFile);

  std::string report_path;
  bool md = false;
  auto* report = app.add_subcommand("report", "Re-render a JSON report");
  report->add_option("report", report_path, "report JSON")->required()->check(CLI::ExistingFile);
  report->add_flag("--md", md, "render markdown");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run) return cmd_run(run_path, md_path, no_timing);
    if (*gb) return cmd_gb(gb_path);
    return cmd_report(report_path, md);
  } catch (const qg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
