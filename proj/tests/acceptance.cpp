// Acceptance gate: one PASS/FAIL line per criterion. Exit status 0 iff every criterion passes.
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <csignal>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "qg/cohomology.hpp"
#include "qg/complexes.hpp"
#include "qg/hopf.hpp"
#include "qg/runner.hpp"

using namespace qg;

namespace {

constexpr double kHopfBudgetSeconds = 60;         // criterion 1, per instance
constexpr double kResolutionBudgetSeconds = 300;  // criterion 2, n = 2 at bound 8
constexpr int kHopfBound = 6;
constexpr int kGlqBound = 8;
constexpr std::uint64_t kRandomSeed = 1;
// n = 3 resolution checks: every reduction they perform has weight <= 4, and the
// algebra throws ExceedsCertifiedDegree otherwise.
constexpr int kRandomResolutionBound = 4;

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void require(const CheckReport& r, const std::string& what) {
    std::string detail = what + " (" + std::to_string(r.items.size()) + " items";
    if (!r.passed()) {
      const auto it = std::find_if(r.items.begin(), r.items.end(), [](const CheckItem& i) { return !i.passed; });
      detail += ", first failure " + it->name + ": " + it->witness.substr(0, 200);
    }
    require(r.passed() && !r.items.empty(), detail + ")");
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

std::string fmt(double s) {
  std::ostringstream os;
  os.precision(3);
  os << std::fixed << s << " s";
  return os.str();
}

AlgebraPtr glq(int bound) {
  AlgebraSpec s;
  s.kind = AlgebraKind::GLq;
  s.q = 2;
  s.degree_bound = bound;
  return build_presented(s);
}

std::pair<ScalarMatrix, ScalarMatrix> random_pair() {
  const ScalarMatrix a = random_invertible_matrix(3, kRandomSeed, 2);
  return {a, a.transpose().inverse()};
}

AlgebraPtr gab(const std::pair<ScalarMatrix, ScalarMatrix>& ab, int bound) {
  AlgebraSpec s;
  s.kind = AlgebraKind::GAB;
  s.a = ab.first;
  s.b = ab.second;
  s.degree_bound = bound;
  return build_presented(s);
}

void hopf_suite(Verdict& v, const AlgebraPtr& alg, const std::string& label) {
  const HopfStructure h = build_hopf(alg);
  v.require(verify_hopf_axioms(h), label + ": Hopf axioms");
  v.require(antipode_squared_sovereign(h), label + ": S^2 closed forms and sovereign form");
  v.require(commutation_check(*alg), label + ": B A D u = u D B A");
}

// Runs body in a child process with a wall-clock budget. The child reports through its exit status.
struct ChildOutcome {
  bool finished = false;
  bool passed = false;
  double seconds = 0;
};

ChildOutcome run_with_budget(double budget, const std::function<bool()>& body) {
  std::cout.flush();
  const auto t0 = Clock::now();
  const pid_t pid = fork();
  if (pid == 0) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception& e) {
      std::fprintf(stderr, "child error: %s\n", e.what());
    }
    std::_Exit(ok ? 0 : 3);
  }
  ChildOutcome out;
  if (pid < 0) return out;
  int status = 0;
  while (true) {
    const pid_t r = waitpid(pid, &status, WNOHANG);
    if (r == pid) {
      out.finished = WIFEXITED(status);
      out.passed = out.finished && WEXITSTATUS(status) == 0;
      break;
    }
    if (since(t0) > budget) {
      kill(pid, SIGKILL);
      waitpid(pid, &status, 0);
      break;
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
  out.seconds = since(t0);
  return out;
}

// ---------------------------------------------------------------- criteria

Verdict criterion1() {
  Verdict v;
  auto t0 = Clock::now();
  hopf_suite(v, glq(kHopfBound), "GL_q(2) q=2 bound 6");
  const double t_glq = since(t0);
  v.require(t_glq < kHopfBudgetSeconds, "GL_q(2) runtime " + fmt(t_glq) + " < 60 s");

  const auto ab = random_pair();
  v.note("random A (seed 1) = " + ab.first.to_display());
  const ChildOutcome c = run_with_budget(kHopfBudgetSeconds, [&] {
    Verdict inner;
    hopf_suite(inner, gab(ab, kHopfBound), "random 3x3 bound 6");
    for (const auto& n : inner.notes) std::fprintf(stderr, "     child: %s\n", n.c_str());
    return inner.pass;
  });
  if (!c.finished)
    v.require(false, "random 3x3 at bound 6 did not finish within 60 s (stopped at " + fmt(c.seconds) + ")");
  else
    v.require(c.passed, "random 3x3 at bound 6 suites pass in " + fmt(c.seconds));
  if (!v.pass) {
    // Informational only: the verdict above stands.
    Verdict low;
    const auto t4 = Clock::now();
    hopf_suite(low, gab(ab, 4), "random 3x3 bound 4");
    v.note(std::string("info: at degree bound 4 the same suites ") + (low.pass ? "pass" : "fail") + " in " +
           fmt(since(t4)));
  }
  return v;
}

Verdict criterion2() {
  Verdict v;
  const auto t0 = Clock::now();
  const HopfStructure h = build_hopf(glq(kGlqBound));
  const YDResolution res = build_yd_resolution(h);
  v.require(res.complex.ranks() == std::vector<std::size_t>{1, 5, 8, 5, 1}, "n=2 ranks (1,5,8,5,1)");
  const CheckReport c = is_complex(res.complex);
  v.require(c, "n=2 is_complex, including eps psi_1 = 0");
  const bool eps_item = std::any_of(c.items.begin(), c.items.end(), [](const CheckItem& i) {
    return i.passed && i.name == "eps d_1 = 0";
  });
  v.require(eps_item, "n=2 augmentation composite eps psi_1 checked and zero");
  const CheckReport g = gamma_identity_suite(h, res);
  v.require(g, "n=2 gamma identities and psi assembly");
  v.require(gamma_comodule_suite(h), "n=2 gamma comodule maps");
  v.require(yd_morphism_suite(h, res), "n=2 psi_i are YD morphisms");
  const double t2 = since(t0);
  v.require(t2 < kResolutionBudgetSeconds, "n=2 runtime at bound 8 " + fmt(t2) + " < 300 s");

  const HopfStructure h3 = build_hopf(gab(random_pair(), kRandomResolutionBound));
  const YDResolution r3 = build_yd_resolution(h3);
  v.require(r3.complex.ranks() == std::vector<std::size_t>{1, 10, 18, 10, 1}, "n=3 ranks (1,10,18,10,1)");
  v.require(is_complex(r3.complex), "n=3 seeded is_complex, including eps psi_1 = 0");
  v.require(gamma_identity_suite(h3, r3), "n=3 gamma identities and psi assembly");
  return v;
}

Verdict criterion3() {
  Verdict v;
  const HopfStructure h = build_hopf(glq(kGlqBound));
  const YDResolution res = build_yd_resolution(h);
  const ProbeOptions opt{6, 2, 2};
  const ProbeResult p = probe_exactness(res.complex, opt);
  for (const auto& pos : p.positions)
    v.require(pos.cycles_lifted == pos.cycles_found,
              "position " + std::to_string(pos.position) + ": " + std::to_string(pos.cycles_lifted) + "/" +
                  std::to_string(pos.cycles_found) + " cycles lifted");
  v.require(p.positions.size() == 5, "all five positions probed");
  const PresentedAlgebra& A = *h.alg;
  const LocalizedElement a1 = A.gen(0) - A.one(), d1 = A.loc_power(1) - A.one();
  v.require(lift_through(res.complex.maps[0], {a1}, opt).has_value(), "a - 1 lifts (solver)");
  v.require(lift_through(res.complex.maps[0], {d1}, opt).has_value(), "D - 1 lifts (solver)");
  // Stated preimages: -1 on the w_1* (x) w_1 generator for a - 1, and 1 on the trivial summand for D - 1.
  std::vector<LocalizedElement> pa(res.complex.maps[0].source_rank), pd(res.complex.maps[0].source_rank);
  pa[1] = LocalizedElement(-1);
  pd[0] = LocalizedElement(1);
  v.require(apply_module_map(res.complex.maps[0], pa) == std::vector<LocalizedElement>{a1},
            "psi_1(w_1* (x) w_1 (x) -1) = a - 1");
  v.require(apply_module_map(res.complex.maps[0], pd) == std::vector<LocalizedElement>{d1}, "psi_1(1 (x) 1) = D - 1");
  return v;
}

Verdict criterion4() {
  Verdict v;
  const HopfStructure h = build_hopf(glq(kGlqBound));
  const YDResolution res = build_yd_resolution(h);
  const CohomologyResult c = bialgebra_cohomology(res, std::vector<std::size_t>{1, 2, 2, 2, 1});
  v.require(c.report, "cochain maps compose to zero");
  v.require(c.dims == std::vector<std::size_t>{1, 1, 0, 1, 1}, "dims (1,1,0,1,1)");
  v.require(c.ranks == std::vector<std::size_t>{0, 1, 1, 0}, "ranks (0,1,1,0)");
  const GsReport gs = gs_dimension_report(c, res.complex.length());
  v.require(gs.upper == 4 && gs.lower == 4, "gs upper = lower = 4 (" + gs.verdict + ")");
  return v;
}

Verdict criterion5() {
  Verdict v;
  const HopfStructure h = build_hopf(glq(kGlqBound));
  const PresentedAlgebra& A = *h.alg;
  const NakayamaResult n = nakayama_G(h);
  v.require(n.report, "mu respects relations, S^-2 [eta S]^r = conj_D o mu");
  v.require(n.mu.images[0] == A.gen(0).scaled(4), "mu(a) = 4a");
  v.require(n.mu.images[1] == A.gen(1), "mu(b) = b");
  v.require(n.mu.images[2] == A.gen(2), "mu(c) = c");
  v.require(n.mu.images[3] == A.gen(3).scaled(Scalar(1) / 4), "mu(d) = d/4");
  v.require(n.mu.images[4] == A.loc_power(1) && *n.mu.loc_inv_image == A.loc_power(-1), "mu(D^{+-1}) = D^{+-1}");
  v.require(n.xi.images == std::vector<Scalar>{4, 0, 0, Scalar(1) / 4, 1}, "xi(u) = diag(4, 1/4), xi(D) = 1");
  v.require(map_respects_relations(n.mu), "map_respects_relations(mu)");
  return v;
}

Verdict criterion6() {
  Verdict v;
  const ScalarMatrix aq = a_q(2), bq = aq.inverse();
  const ScalarMatrix f{{1, 1}, {0, 1}};
  const ScalarMatrix c = f.transpose() * aq * f, d = f.inverse() * bq * f.transpose().inverse();
  v.note("F = " + f.to_display());
  const GaloisResult g = nakayama_galois(aq, bq, c, d, kHopfBound);
  v.require(g.report, "G(A,B|C,D): nonzero, mu and mu' respect relations, sigma o mu = mu'");
  v.require(g.alg->rewrite().certified_degree() == kHopfBound, "nonzero certified to degree 6");
  v.require(cogroupoid_suite({{aq, bq}, {c, d}}, kHopfBound), "cogroupoid diagrams on generators");
  return v;
}

Verdict criterion7() {
  Verdict v;
  v.require(glq_slq_laurent_iso(2, kGlqBound).report, "GL_q(2) <-> SL_q(2)[z^{+-1}] round trips");
  AlgebraSpec s;
  s.kind = AlgebraKind::SLq;
  s.q = 2;
  s.degree_bound = kGlqBound;
  v.require(is_complex(build_slq_resolution(*build_presented(s))), "SL_q(2) resolution is_complex");
  const ConeResult cone = laurent_cone(2, kGlqBound, {});
  v.require(cone.report, "(z-1) chain map squares and cone is_complex");
  const ProbeResult p = probe_exactness(cone.cone, {5, 2, 2});
  std::size_t found = 0, lifted = 0;
  for (const auto& pos : p.positions) {
    found += pos.cycles_found;
    lifted += pos.cycles_lifted;
  }
  v.require(found > 0 && lifted == found,
            "augmented cone probe N=5 slack 2: " + std::to_string(lifted) + "/" + std::to_string(found) + " lifted");
  const GlqComplexes gc = build_glq_complexes(2, kGlqBound, {});
  v.require(gc.report, "g_0..g_4 squares and explicit inverses (with P)");
  v.require(gc.g_inv.components.size() == 5, "five inverse components");
  return v;
}

Verdict criterion8(const std::string& config_dir) {
  Verdict v;
  for (const char* name : {"glq2.json", "random3.json", "q1_nongeneric.json", "low_bound.json"}) {
    RunConfig cfg = load_config(config_dir + "/" + name);
    cfg.cache_dir.clear();
    const std::string first = report_json(run_config(cfg), false);
    const std::string second = report_json(run_config(cfg), false);
    v.require(first == second, std::string(name) + ": reports byte-identical without timing (" +
                                   std::to_string(first.size()) + " bytes)");
  }
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  const std::string config_dir = argc > 1 ? argv[1] : "configs";
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"1 Hopf suite", criterion1},
      {"2 resolution is a complex", criterion2},
      {"3 exactness probe", criterion3},
      {"4 bialgebra cohomology", criterion4},
      {"5 Nakayama automorphism", criterion5},
      {"6 Galois objects and cogroupoid", criterion6},
      {"7 GL_q/SL_q machinery", criterion7},
      {"8 determinism", [&] { return criterion8(config_dir); }},
  };
  bool all = true;
  for (const auto& [name, fn] : criteria) {
    const auto t0 = Clock::now();
    Verdict v;
    try {
      v = fn();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    for (const auto& n : v.notes) std::cout << "  " << n << "\n";
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << name << " (" << fmt(since(t0)) << ")\n";
    std::cout.flush();
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
