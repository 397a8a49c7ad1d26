#include "qg/runner.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qg/cohomology.hpp"
#include "qg/complexes.hpp"
#include "qg/errors.hpp"
#include "qg/hopf.hpp"
#include "qg/invariants.hpp"

namespace qg {

using json = nlohmann::ordered_json;

const std::vector<std::string>& known_checks() {
  static const std::vector<std::string> order = {"invariants", "hopf",  "nakayama", "cogroupoid", "galois",
                                                 "resolution", "gamma", "dual",     "twist",      "slq",
                                                 "cone",       "glq_iso", "probe",  "cohomology"};
  return order;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Uncertified: return "uncertified";
    case CheckStatus::Skipped: return "skipped";
  }
  return "fail";
}

CheckStatus parse_status(const std::string& s) {
  if (s == "pass") return CheckStatus::Pass;
  if (s == "fail") return CheckStatus::Fail;
  if (s == "uncertified") return CheckStatus::Uncertified;
  if (s == "skipped") return CheckStatus::Skipped;
  throw Error(ErrorCode::ConfigInvalid, "unknown status " + s);
}

// ---------------------------------------------------------------- config

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::ConfigInvalid, what); }

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) invalid(where + " must be an object");
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) invalid("unknown key '" + k + "' in " + where);
}

std::string scalar_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  invalid(where + ": scalars are integers or rational strings");
}

ScalarMatrix matrix_from_json(const json& v, const std::string& where) {
  if (!v.is_array() || v.empty()) invalid(where + " must be a non-empty array of rows");
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : v) {
    if (!r.is_array()) invalid(where + " rows must be arrays");
    std::vector<std::string> row;
    for (const auto& x : r) row.push_back(scalar_text(x, where));
    if (!rows.empty() && row.size() != rows.front().size()) invalid(where + " rows differ in length");
    rows.push_back(std::move(row));
  }
  try {
    return ScalarMatrix::parse(rows);
  } catch (const Error& e) {
    invalid(where + ": " + e.what());
  }
}

int int_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) invalid(where + " must be an integer");
  return v.get<int>();
}

}  // namespace

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    invalid(std::string("config is not valid JSON: ") + e.what());
  }
  reject_unknown(j, {"name", "instance", "degree_bound", "probe", "checks", "cache_dir", "report_path", "seed"},
                 "config");
  RunConfig cfg;
  if (j.contains("name")) cfg.name = j["name"].get<std::string>();
  if (!j.contains("instance")) invalid("config needs an instance");
  const json& in = j["instance"];
  reject_unknown(in, {"kind", "a", "b", "q", "random", "c", "d", "conjugator"}, "instance");
  const std::string kind = in.value("kind", "");
  InstanceConfig& ic = cfg.instance;
  if (kind == "GLq") {
    ic.kind = AlgebraKind::GLq;
    if (!in.contains("q")) invalid("GLq instance needs q");
    if (in.contains("a") || in.contains("b") || in.contains("random")) invalid("GLq instance takes no matrices");
  } else if (kind == "GAB") {
    ic.kind = AlgebraKind::GAB;
    if (in.contains("random")) {
      const json& r = in["random"];
      reject_unknown(r, {"n", "range"}, "instance.random");
      RandomMatrixSpec rs;
      if (r.contains("n")) rs.n = static_cast<std::size_t>(int_field(r["n"], "random.n"));
      if (r.contains("range")) rs.range = int_field(r["range"], "random.range");
      if (rs.n < 2 || rs.range < 1) invalid("random instance needs n >= 2 and range >= 1");
      ic.random = rs;
      if (in.contains("a") || in.contains("b")) invalid("random instance takes no explicit matrices");
      if (!j.contains("seed")) invalid("seed is mandatory for a random instance");
    } else {
      if (!in.contains("a") || !in.contains("b")) invalid("GAB instance needs a and b (or random)");
      ic.a = matrix_from_json(in["a"], "instance.a");
      ic.b = matrix_from_json(in["b"], "instance.b");
    }
  } else {
    invalid("instance.kind must be GLq or GAB");
  }
  if (in.contains("q")) {
    try {
      ic.q = parse_scalar(scalar_text(in["q"], "instance.q"));
    } catch (const Error& e) {
      invalid(std::string("instance.q: ") + e.what());
    }
  }
  if (in.contains("c") != in.contains("d")) invalid("instance.c and instance.d go together");
  if (in.contains("c")) ic.cd = std::make_pair(matrix_from_json(in["c"], "instance.c"), matrix_from_json(in["d"], "instance.d"));
  if (in.contains("conjugator")) {
    if (ic.cd) invalid("give either c/d or a conjugator");
    ic.conjugator = matrix_from_json(in["conjugator"], "instance.conjugator");
  }

  if (j.contains("degree_bound")) cfg.degree_bound = int_field(j["degree_bound"], "degree_bound");
  if (j.contains("probe")) {
    const json& p = j["probe"];
    reject_unknown(p, {"N", "slack", "laurent_window"}, "probe");
    if (p.contains("N")) cfg.probe.weight_bound = int_field(p["N"], "probe.N");
    if (p.contains("slack")) cfg.probe.slack = int_field(p["slack"], "probe.slack");
    if (p.contains("laurent_window")) cfg.probe.laurent_window = int_field(p["laurent_window"], "probe.laurent_window");
  }
  if (j.contains("checks")) {
    if (!j["checks"].is_array()) invalid("checks must be an array");
    const auto& known = known_checks();
    std::set<std::string> seen;
    for (const auto& c : j["checks"]) {
      if (!c.is_string()) invalid("check names are strings");
      const std::string name = c.get<std::string>();
      if (std::find(known.begin(), known.end(), name) == known.end()) invalid("unknown check '" + name + "'");
      seen.insert(name);
    }
    for (const auto& k : known)
      if (seen.count(k)) cfg.checks.push_back(k);
  }
  if (j.contains("cache_dir")) cfg.cache_dir = j["cache_dir"].get<std::string>();
  if (j.contains("report_path")) cfg.report_path = j["report_path"].get<std::string>();
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) invalid("seed must be a non-negative integer");
    cfg.seed = j["seed"].get<std::uint64_t>();
  }
  return cfg;
}

RunConfig load_config(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  RunConfig cfg = parse_config(ss.str());
  if (cfg.name.empty()) cfg.name = file.stem().string();
  return cfg;
}

std::pair<ScalarMatrix, ScalarMatrix> instance_matrices(const RunConfig& cfg) {
  const InstanceConfig& ic = cfg.instance;
  if (ic.kind == AlgebraKind::GLq) {
    const ScalarMatrix a = a_q(*ic.q);
    return {a, a.inverse()};
  }
  if (ic.random) {
    const ScalarMatrix a = random_invertible_matrix(ic.random->n, cfg.seed.value(), ic.random->range);
    return {a, a.transpose().inverse()};
  }
  return {ic.a, ic.b};
}

// ---------------------------------------------------------------- running

namespace {

struct Context {
  const RunConfig& cfg;
  ScalarMatrix a, b;
  AlgebraPtr alg;
  std::optional<HopfStructure> hopf;
  std::optional<YDResolution> res;
  std::optional<bool> generic;
  int bound = 0;
};

void absorb(CheckOutcome& out, const CheckReport& rep, const std::string& prefix = "") {
  out.items += rep.items.size();
  for (const auto& it : rep.items) {
    if (it.passed) continue;
    out.status = CheckStatus::Fail;
    if (out.witnesses.size() < 20) out.witnesses.push_back(prefix + it.name + ": " + it.witness);
  }
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::pair<ScalarMatrix, ScalarMatrix> second_object(const Context& cx) {
  const InstanceConfig& ic = cx.cfg.instance;
  if (ic.cd) return *ic.cd;
  if (ic.conjugator) {
    const ScalarMatrix& f = *ic.conjugator;
    return {f.transpose() * cx.a * f, f.inverse() * cx.b * f.transpose().inverse()};
  }
  throw Error(ErrorCode::ConfigInvalid, "this check needs instance.c/d or instance.conjugator");
}

const Scalar& require_q(const Context& cx) {
  if (cx.cfg.instance.kind != AlgebraKind::GLq)
    throw Error(ErrorCode::ConfigInvalid, "this check applies to GL_q(2) instances only");
  return *cx.cfg.instance.q;
}

// Generic: no root of X^2 + p X + 1 is a root of unity other than (possibly) 1 and -1, which the
// check rejects separately. Irrational real roots are never roots of unity; for complex roots
// 2 cos(theta) = -p is rational, so by Niven's theorem they are roots of unity iff p is 0 or +-1.
void check_invariants(Context& cx, CheckOutcome& out) {
  const MatrixInvariants inv = matrix_invariants(cx.a, cx.b);
  out.details.push_back({"lambda", to_display(inv.lambda)});
  out.details.push_back({"tr(A B^t)", to_display(inv.trace)});
  const Scalar* q = cx.cfg.instance.q ? &*cx.cfg.instance.q : nullptr;
  try {
    const GenericityReport g = genericity_check(cx.a, cx.b, q);
    std::string roots;
    for (const auto& r : g.roots) roots += (roots.empty() ? "" : ", ") + to_display(r);
    out.details.push_back({"quadratic roots", roots});
    out.details.push_back({"generic", g.generic ? "yes" : "no"});
    cx.generic = g.generic;
    if (g.has_q) {
      // Both sign conventions for the linear term are in use; q may solve either.
      const GenericityReport plus = genericity_check(cx.a, cx.b, q, QuadraticForm::Plus);
      out.details.push_back({"q solves X^2 - tr X + 1", g.satisfies_quadratic ? "yes" : "no"});
      out.details.push_back({"q solves X^2 + tr X + 1", plus.satisfies_quadratic ? "yes" : "no"});
      if (!g.satisfies_quadratic && !plus.satisfies_quadratic) {
        out.status = CheckStatus::Fail;
        out.witnesses.push_back("q = " + to_display(*q) + " solves neither X^2 + " + to_display(g.linear_coeff) +
                                " X + 1 nor X^2 + " + to_display(plus.linear_coeff) + " X + 1");
      }
    }
    if (!g.generic) {
      out.status = CheckStatus::Fail;
      out.witnesses.push_back("roots " + roots + " include 1 or -1: instance is not generic");
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NeedsFieldExtension) throw;
    const NormalizedPair np = normalize_pair(cx.a, cx.b);
    const Scalar p = -(np.a * np.b.transpose()).trace();
    const Scalar disc = p * p - 4;
    const bool root_of_unity = disc < 0 && (p == 0 || p == 1 || p == -1);
    out.details.push_back({"quadratic roots", "irrational (discriminant " + to_display(disc) + ")"});
    out.details.push_back({"generic", root_of_unity ? "no" : "yes"});
    cx.generic = !root_of_unity;
    if (root_of_unity) {
      out.status = CheckStatus::Fail;
      out.witnesses.push_back("roots are roots of unity (discriminant " + to_display(disc) + ")");
    }
  }
  out.items = 1;
}

void check_hopf(Context& cx, CheckOutcome& out) {
  absorb(out, verify_hopf_axioms(*cx.hopf), "axioms: ");
  absorb(out, antipode_squared_sovereign(*cx.hopf), "sovereign: ");
  absorb(out, commutation_check(*cx.alg), "commutation: ");
}

void check_nakayama(Context& cx, CheckOutcome& out) {
  const NakayamaResult n = nakayama_G(*cx.hopf);
  absorb(out, n.report);
  const PresentedAlgebra& A = *cx.alg;
  for (int g : generator_ids(A)) {
    const std::string label = generator_label(A, g);
    out.details.push_back({"mu(" + label + ")", A.to_string(n.mu.image(g))});
  }
  for (int g : generator_ids(A)) {
    const std::string label = generator_label(A, g);
    out.details.push_back({"xi(" + label + ")", to_display(n.xi.image(g))});
  }
}

void check_cogroupoid(Context& cx, CheckOutcome& out) {
  const auto cd = second_object(cx);
  absorb(out, cogroupoid_suite({{cx.a, cx.b}, cd}, cx.bound, cx.cfg.cache_dir));
}

void check_galois(Context& cx, CheckOutcome& out) {
  const auto [c, d] = second_object(cx);
  const GaloisResult g = nakayama_galois(cx.a, cx.b, c, d, cx.bound, cx.cfg.cache_dir);
  absorb(out, g.report);
  out.details.push_back({"certified nonzero up to", std::to_string(g.alg->rewrite().certified_degree())});
}

void check_resolution(Context& cx, CheckOutcome& out) {
  absorb(out, is_complex(cx.res->complex));
  absorb(out, yd_morphism_suite(*cx.hopf, *cx.res));
  out.details.push_back({"ranks", join(cx.res->complex.ranks())});
}

void check_gamma(Context& cx, CheckOutcome& out) {
  absorb(out, gamma_identity_suite(*cx.hopf, *cx.res));
  absorb(out, gamma_comodule_suite(*cx.hopf));
}

void check_dual(Context& cx, CheckOutcome& out) {
  absorb(out, is_complex(build_left_resolution(*cx.hopf)), "phi: ");
  absorb(out, is_complex(dualize_resolution(*cx.hopf)), "psi^t: ");
}

void check_twist(Context& cx, CheckOutcome& out) {
  const Complex left = build_left_resolution(*cx.hopf);
  const Complex dual = dualize_resolution(*cx.hopf);
  absorb(out, build_twist_chainmap(*cx.hopf, dual, left).report);
}

void check_slq(Context& cx, CheckOutcome& out) {
  AlgebraSpec s;
  s.kind = AlgebraKind::SLq;
  s.q = require_q(cx);
  s.degree_bound = cx.bound;
  s.cache_dir = cx.cfg.cache_dir;
  const AlgebraPtr slq = build_presented(s);
  const Complex c = build_slq_resolution(*slq);
  absorb(out, is_complex(c));
  const HopfStructure h = build_hopf(slq);
  absorb(out, verify_hopf_axioms(h), "SL_q Hopf: ");
}

void check_cone(Context& cx, CheckOutcome& out) {
  const ConeResult cone = laurent_cone(require_q(cx), cx.bound, cx.cfg.cache_dir);
  absorb(out, cone.report);
  const ProbeConfig& p = cx.cfg.probe;
  const ProbeResult pr = probe_exactness(cone.cone, {p.weight_bound, p.slack, p.laurent_window});
  absorb(out, pr.report, "cone probe: ");
  out.details.push_back({"cone ranks", join(cone.cone.ranks())});
  for (const auto& pos : pr.positions)
    out.details.push_back({"cone position " + std::to_string(pos.position),
                           std::to_string(pos.cycles_lifted) + "/" + std::to_string(pos.cycles_found)});
}

void check_glq_iso(Context& cx, CheckOutcome& out) {
  const Scalar& q = require_q(cx);
  absorb(out, glq_slq_laurent_iso(q, cx.bound, cx.cfg.cache_dir).report, "Laurent iso: ");
  absorb(out, build_glq_complexes(q, cx.bound, cx.cfg.cache_dir).report);
}

void check_probe(Context& cx, CheckOutcome& out) {
  const ProbeConfig& p = cx.cfg.probe;
  const ProbeOptions opt{p.weight_bound, p.slack, p.laurent_window};
  const ProbeResult pr = probe_exactness(cx.res->complex, opt);
  absorb(out, pr.report);
  for (const auto& pos : pr.positions)
    out.details.push_back({"position " + std::to_string(pos.position),
                           std::to_string(pos.cycles_lifted) + "/" + std::to_string(pos.cycles_found)});
  const PresentedAlgebra& A = *cx.alg;
  const std::vector<std::pair<std::string, LocalizedElement>> witnesses = {
      {A.gen_names()[0] + " - 1", A.gen(0) - A.one()}, {"D - 1", A.loc_power(1) - A.one()}};
  for (const auto& [label, w] : witnesses) {
    const bool ok = lift_through(cx.res->complex.maps[0], {w}, opt).has_value();
    ++out.items;
    out.details.push_back({"lift of " + label, ok ? "yes" : "no"});
    if (!ok) {
      out.status = CheckStatus::Fail;
      out.witnesses.push_back("augmentation witness " + label + " does not lift");
    }
  }
}

void check_cohomology(Context& cx, CheckOutcome& out) {
  if (cx.generic && !*cx.generic) {
    out.status = CheckStatus::Skipped;
    out.witnesses.push_back("instance is not generic");
    return;
  }
  const CohomologyResult c = bialgebra_cohomology(*cx.res, std::vector<std::size_t>{1, 2, 2, 2, 1});
  absorb(out, c.report);
  const GsReport gs = gs_dimension_report(c, cx.res->complex.length());
  out.details.push_back({"cochain dims", join(c.cochains.dims)});
  out.details.push_back({"ranks", join(c.ranks)});
  out.details.push_back({"H_b", join(c.dims)});
  for (std::size_t i = 0; i < c.cochains.maps.size(); ++i)
    out.details.push_back({"D_" + std::to_string(i + 1), c.cochains.maps[i].to_display()});
  out.details.push_back({"gs upper", std::to_string(gs.upper)});
  out.details.push_back({"gs lower", std::to_string(gs.lower)});
  out.details.push_back({"gs verdict", gs.verdict});
}

}  // namespace

RunReport run_config(const RunConfig& cfg) {
  RunReport rep;
  rep.config_name = cfg.name;
  Context cx{cfg, {}, {}, nullptr, std::nullopt, std::nullopt, std::nullopt, cfg.degree_bound};
  std::optional<std::pair<CheckStatus, std::string>> build_error;
  try {
    std::tie(cx.a, cx.b) = instance_matrices(cfg);
    rep.instance = std::string(kind_name(cfg.instance.kind)) + " A=" + cx.a.to_display() + " B=" + cx.b.to_display();
    if (cfg.instance.q) rep.instance += " q=" + to_display(*cfg.instance.q);
  } catch (const Error& e) {
    build_error = {CheckStatus::Fail, e.what()};
  }

  const std::map<std::string, std::function<void(Context&, CheckOutcome&)>> table = {
      {"invariants", check_invariants}, {"hopf", check_hopf},         {"nakayama", check_nakayama},
      {"cogroupoid", check_cogroupoid}, {"galois", check_galois},     {"resolution", check_resolution},
      {"gamma", check_gamma},           {"dual", check_dual},         {"twist", check_twist},
      {"slq", check_slq},               {"cone", check_cone},         {"glq_iso", check_glq_iso},
      {"probe", check_probe},           {"cohomology", check_cohomology}};
  const std::set<std::string> needs_algebra = {"hopf", "nakayama", "resolution", "gamma", "dual",
                                               "twist", "probe", "cohomology"};

  for (const auto& name : cfg.checks) {
    CheckOutcome out;
    out.name = name;
    out.certified_degree = cfg.degree_bound;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      if (build_error) throw Error(ErrorCode::ConfigInvalid, build_error->second);
      if (needs_algebra.count(name) && !cx.alg) {
        AlgebraSpec s;
        s.kind = cfg.instance.kind;
        s.a = cx.a;
        s.b = cx.b;
        if (cfg.instance.q) s.q = *cfg.instance.q;
        s.degree_bound = cfg.degree_bound;
        s.cache_dir = cfg.cache_dir;
        cx.alg = build_presented(s);
        cx.hopf = build_hopf(cx.alg);
        cx.res = build_yd_resolution(*cx.hopf);
      }
      table.at(name)(cx, out);
    } catch (const Error& e) {
      out.status = e.code() == ErrorCode::ExceedsCertifiedDegree ? CheckStatus::Uncertified : CheckStatus::Fail;
      out.witnesses.push_back(e.what());
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.checks.push_back(std::move(out));
  }
  return rep;
}

int exit_code(const RunReport& r) {
  bool uncertified = false;
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::Fail) return 1;
    if (c.status == CheckStatus::Uncertified) uncertified = true;
  }
  return uncertified ? 2 : 0;
}

// ---------------------------------------------------------------- reports

std::string report_json(const RunReport& r, bool include_timing) {
  json j;
  j["config"] = r.config_name;
  j["instance"] = r.instance;
  j["exit_code"] = exit_code(r);
  json checks = json::array();
  for (const auto& c : r.checks) {
    json o;
    o["name"] = c.name;
    o["status"] = status_name(c.status);
    o["certified_degree"] = c.certified_degree;
    o["items"] = c.items;
    o["witnesses"] = c.witnesses;
    json d = json::array();
    for (const auto& [k, v] : c.details) d.push_back(json::array({k, v}));
    o["details"] = d;
    checks.push_back(o);
  }
  j["checks"] = checks;
  if (include_timing) {
    json t;
    for (const auto& c : r.checks) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(3) << c.seconds;
      t[c.name] = os.str();
    }
    j["timing"] = t;
  }
  return j.dump(2) + "\n";
}

RunReport report_from_json(const std::string& text) {
  RunReport r;
  try {
    const json j = json::parse(text);
    r.config_name = j.at("config").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    for (const auto& o : j.at("checks")) {
      CheckOutcome c;
      c.name = o.at("name").get<std::string>();
      c.status = parse_status(o.at("status").get<std::string>());
      c.certified_degree = o.at("certified_degree").get<int>();
      c.items = o.at("items").get<std::size_t>();
      c.witnesses = o.at("witnesses").get<std::vector<std::string>>();
      for (const auto& kv : o.at("details")) c.details.push_back({kv.at(0).get<std::string>(), kv.at(1).get<std::string>()});
      if (j.contains("timing") && j["timing"].contains(c.name)) c.seconds = std::stod(j["timing"][c.name].get<std::string>());
      r.checks.push_back(std::move(c));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ConfigInvalid, std::string("malformed report: ") + e.what());
  }
  return r;
}

std::string report_markdown(const RunReport& r) {
  std::ostringstream md;
  md << "# Verification report: " << r.config_name << "\n\n";
  md << "Instance: `" << r.instance << "`\n\n";
  md << "| check | status | items | certified degree |\n|---|---|---|---|\n";
  for (const auto& c : r.checks)
    md << "| " << c.name << " | " << status_name(c.status) << " | " << c.items << " | " << c.certified_degree << " |\n";
  for (const auto& c : r.checks) {
    if (c.name == "cohomology" && !c.details.empty()) {
      md << "\n## Bialgebra cohomology\n\n| cohomology |\n|---|\n";
      for (const auto& [k, v] : c.details) md << "| " << k << ": " << v << " |\n";
    } else if (c.name == "nakayama" && !c.details.empty()) {
      md << "\n## Nakayama automorphism on generators\n\n| generator | image |\n|---|---|\n";
      for (const auto& [k, v] : c.details) md << "| " << k << " | `" << v << "` |\n";
    } else if (!c.details.empty()) {
      md << "\n## " << c.name << "\n\n";
      for (const auto& [k, v] : c.details) md << "- " << k << ": " << v << "\n";
    }
  }
  bool any = false;
  for (const auto& c : r.checks) {
    if (c.witnesses.empty()) continue;
    if (!any) md << "\n## Witnesses\n";
    any = true;
    md << "\n### " << c.name << " (" << status_name(c.status) << ")\n\n";
    for (const auto& w : c.witnesses) md << "- `" << w << "`\n";
  }
  md << "\n## Timing\n\n| check | seconds |\n|---|---|\n";
  for (const auto& c : r.checks) {
    std::ostringstream os;
    os << std::fixed << std::setprecision(3) << c.seconds;
    md << "| " << c.name << " | " << os.str() << " |\n";
  }
  return md.str();
}

}  // namespace qg
