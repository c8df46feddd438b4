#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "varcross/catalog.hpp"
#include "varcross/family.hpp"
#include "varcross/free_object.hpp"
#include "varcross/harness.hpp"
#include "varcross/isomorphism.hpp"
#include "varcross/proof.hpp"
#include "varcross/satisfaction.hpp"
#include "varcross/search.hpp"
#include "varcross/structure.hpp"

using namespace varcross;
namespace fs = std::filesystem;

namespace {

  Catalog const& cat() {
    return Catalog::builtin();
  }

  using Clock = std::chrono::steady_clock;

  double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
  }

  // Collects the failed sub-checks of one criterion.
  struct Checks {
    std::vector<std::string> failures;

    void expect(bool ok, std::string what) {
      if (!ok) {
        failures.push_back(std::move(what));
      }
    }
  };

  std::string slurp(fs::path const& p) {
    std::ifstream      in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::vector<fs::path> shipped(char const* sub, char const* ext) {
    std::vector<fs::path> out;
    for (auto const& e : fs::directory_iterator(fs::path(VARCROSS_DATA_DIR) / sub)) {
      if (e.path().extension() == ext) {
        out.push_back(e.path());
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<Manifest> load_manifests(std::vector<std::string> const& stems) {
    std::vector<Manifest> out;
    for (auto const& s : stems) {
      auto p = fs::path(VARCROSS_DATA_DIR) / "manifests" / (s + ".manifest");
      out.push_back(parse_manifest(s, slurp(p), cat()));
    }
    return out;
  }

  std::string summary(ManifestReport const& r) {
    std::size_t pass = 0, fail = 0, inc = 0;
    for (auto const& c : r.results) {
      (c.verdict == Verdict::pass ? pass : c.verdict == Verdict::fail ? fail : inc)++;
    }
    return r.name + " " + std::to_string(pass) + "/" + std::to_string(r.results.size());
  }

  void report_failures(Checks& checks, ManifestReport const& r) {
    for (auto const& c : r.results) {
      if (c.verdict != Verdict::pass) {
        checks.expect(false, c.id + " " + std::string(to_string(c.verdict)) + ": " + c.claim);
      }
    }
  }

  // 1: catalog orders, presentation closures, self-check.
  Checks criterion1() {
    Checks checks;
    auto   t0 = Clock::now();
    auto   r  = cat().selfcheck();
    checks.expect(r.passed, "selfcheck failed");
    std::map<std::string, std::size_t> orders{{"B", 6},  {"A0", 5}, {"B0", 5},  {"E", 4},       {"Q", 6},
                                              {"F1", 6}, {"H3", 7}, {"K", 12}, {"K/~", 10}, {"Rq{xy}", 5},
                                              {"Rq{xhx}", 7}};
    for (auto const& [name, order] : orders) {
      auto m = cat().monoid(name);
      checks.expect(m.order() == order, name + " has order " + std::to_string(m.order()));
    }
    for (auto const& e : cat().monoids()) {
      if (e.presentation) {
        auto closure = close_presentation(*e.presentation);
        checks.expect(closure.monoid && find_isomorphism(*closure.monoid, e.monoid).has_value(),
                      e.name + " presentation closure is not isomorphic to its table");
      }
    }
    checks.expect(seconds_since(t0) < 5.0, "over 5 s");
    return checks;
  }

  // 2: each stated finite basis holds in its generator, and dual bases are
  // told apart where the generator is not self-dual.
  Checks criterion2() {
    Checks checks;
    struct Row {
      char const* monoid;
      char const* basis;
      bool        holds;
    };
    Row const rows[] = {
      {"A0", "basis.A0", true},          {"A0", "basis.A0alt", true},      {"B0", "basis.B0", true},
      {"E", "basis.E", true},            {"dual(E)", "dual(basis.E)", true}, {"E", "dual(basis.E)", false},
      {"Q", "basis.Q", true},            {"A0", "basis.A0vQ", true},       {"Q", "basis.A0vQ", true},
      {"F1", "basis.F1", true},          {"F1", "basis.F", true},          {"H3", "basis.H3", true},
      {"H3", "basis.H2", false},         {"dual(H3)", "dual(basis.H3)", true}, {"H3", "dual(basis.H3)", false},
      {"Rq{1}", "basis.Rq1", true},      {"Rq{x}", "basis.Rqx", true},     {"Rq{xy}", "basis.Rqxy", true},
      {"Rq{xhx}", "basis.Rqxhx", true},  {"Rq{xhytxy}", "basis.Y3", true}, {"Rq{xyhxty}", "basis.Y3dual", true},
      {"Rq{x_3}", "basis.L", true},      {"F1", "basis.P", true},          {"F1", "basis.I4", true},
      {"K", "basis.F1vA0", false},       {"A0", "basis.F1vA0", true},      {"F1", "basis.F1vA0", true},
    };
    for (auto const& row : rows) {
      auto t0 = Clock::now();
      auto m  = cat().monoid(row.monoid);
      auto r  = satisfies_all(m, cat().basis(row.basis));
      auto dt = seconds_since(t0);
      bool ok = r.decision == (row.holds ? Decision::yes : Decision::no);
      checks.expect(ok, std::string(row.monoid) + " vs " + row.basis);
      checks.expect(dt < 1.0, std::string(row.monoid) + " vs " + row.basis + " over 1 s");
    }
    for (auto const& c : cat().checks()) {
      auto t0  = Clock::now();
      auto m   = cat().monoid(c.subject);
      auto r   = satisfies_all(m, cat().basis(c.object));
      bool got = r.decision == Decision::yes;
      checks.expect(got == c.expect_satisfied && r.decision != Decision::inconclusive, c.subject + " " + c.object);
      checks.expect(seconds_since(t0) < 1.0, c.subject + " " + c.object + " over 1 s");
    }
    return checks;
  }

  // 3: the natural-form criterion for Q against brute force.
  Checks criterion3() {
    Checks checks;
    auto   q     = cat().monoid("Q");
    auto   words = oracle::all_words(oracle::letters("xy"), 4);
    for (auto const& u : words) {
      for (auto const& v : words) {
        if (q_satisfies(u, v) != oracle::satisfies(q, Identity(u, v))) {
          checks.expect(false, u.to_string() + " = " + v.to_string());
        }
      }
    }
    std::mt19937_64 rng(20240531);
    auto            four = oracle::letters("xyzt");
    std::uniform_int_distribution<std::size_t> nvars(1, 4);
    for (int i = 0; i < 10000; ++i) {
      std::vector<Variable> alphabet(four.begin(), four.begin() + static_cast<std::ptrdiff_t>(nvars(rng)));
      auto                  u = oracle::random_word(rng, alphabet, 7);
      auto                  v = oracle::random_word(rng, alphabet, 7);
      if (q_satisfies(u, v) != (satisfies(q, Identity(u, v)).decision == Decision::yes)) {
        checks.expect(false, u.to_string() + " = " + v.to_string());
      }
    }
    return checks;
  }

  // 4: shipped proof scripts.
  Checks criterion4(std::size_t& count) {
    Checks checks;
    auto   t0       = Clock::now();
    auto   files    = shipped("proofs", ".proof");
    auto   resolver = [](std::string_view l) { return cat().find_identity(l); };
    count           = files.size();
    checks.expect(files.size() >= 10, "fewer than 10 proof scripts");
    for (auto const& f : files) {
      auto report = verify_proof_script(parse_proof_script(slurp(f), resolver));
      checks.expect(report.decision == Decision::yes, f.filename().string() + " does not verify");
    }
    checks.expect(seconds_since(t0) < 10.0, "over 10 s");
    return checks;
  }

  // 5: structural predicates across the catalog.
  Checks criterion5() {
    Checks checks;
    for (auto const& e : cat().monoids()) {
      bool jt = is_j_trivial(e.monoid);
      checks.expect(jt == (e.name != "B"), e.name + " J-triviality");
      if (jt) {
        checks.expect(aperiodicity(e.monoid).aperiodic, e.name + " J-trivial but not aperiodic");
      }
    }
    checks.expect(!idempotents_commute(cat().monoid("A0")), "A0 idempotents commute");
    struct Pin {
      char const* name;
      std::size_t index;
      std::size_t idempotents;
      bool        commute;
      bool        central;
      bool        regular;
    };
    for (auto const& p : {Pin{"Q", 2, 3, true, false, false}, Pin{"E", 2, 3, true, false, false},
                          Pin{"F1", 2, 3, true, false, false}}) {
      auto m = cat().monoid(p.name);
      auto a = aperiodicity(m);
      checks.expect(is_j_trivial(m) && a.aperiodic && a.index == p.index, std::string(p.name) + " aperiodicity");
      checks.expect(idempotents(m).size() == p.idempotents, std::string(p.name) + " idempotent count");
      checks.expect(idempotents_commute(m) == p.commute, std::string(p.name) + " idempotents commute");
      checks.expect(idempotents_central(m) == p.central, std::string(p.name) + " idempotents central");
      checks.expect(is_completely_regular(m) == p.regular, std::string(p.name) + " complete regularity");
    }
    return checks;
  }

  char const* const figure_claims = R"(member      H3        basis.H3
not-member  H3        basis.H2
fails       H3        R_2
fails       dual(H3)  "x h x y^2 x = x h y^2 x"
fails       H3        "x y^2 x t x = x y^2 t x"
satisfies   K         "x h x^2 = x h x"
fails       K         "x^2 h x = x h x"
satisfies   F1        basis.F
member      Rq{x}     basis.J2
not-member  Rq{x}     basis.J1
fails       Rq{x}     a_1
not-member  Rq{1}     basis.J0
)";

  // 6: figure manifests and the named claims.
  Checks criterion6(std::string& detail) {
    Checks checks;
    auto   t0        = Clock::now();
    auto   manifests = load_manifests({"a0vq", "h", "p", "i", "k", "z", "y1y2"});
    manifests.push_back(parse_manifest("figure-claims", figure_claims, cat()));
    RunOptions opts;
    auto       reports = run_manifests(manifests, opts);
    for (auto const& r : reports) {
      report_failures(checks, r);
      detail += (detail.empty() ? "" : ", ") + summary(r);
    }
    checks.expect(seconds_since(t0) < 30.0, "over 30 s");
    return checks;
  }

  // 7: isoterms and small free objects.
  Checks criterion7() {
    Checks checks;
    auto   t0 = Clock::now();
    checks.expect(is_isoterm(cat().monoid("Rq{xhx}"), parse_word("x h x")).decision == Decision::yes,
                  "x h x for Rq{xhx}");
    checks.expect(is_isoterm(cat().monoid("Rq{xy}"), parse_word("x y")).decision == Decision::yes, "x y for Rq{xy}");
    checks.expect(is_isoterm(cat().monoid("Rq{xy}"), parse_word("x")).decision == Decision::yes, "x for Rq{xy}");
    auto r = is_isoterm(cat().monoid("Rq{x}"), parse_word("x y"));
    checks.expect(r.decision == Decision::no && r.witness && *r.witness == parse_word("y x"), "x y for Rq{x}");
    auto f1 = build_free_object(cat().monoid("Rq{x}"), 1);
    checks.expect(f1.automaton && f1.automaton->size() == 3, "|F(var Rq{x}, 1)|");
    auto f2 = build_free_object(cat().monoid("Rq{1}"), 2);
    checks.expect(f2.automaton && f2.automaton->size() == 4, "|F(var Rq{1}, 2)|");
    checks.expect(seconds_since(t0) < 60.0, "over 60 s");
    return checks;
  }

  // 8: witness search and the enumeration count at order 4.
  Checks criterion8(std::string& detail) {
    Checks     checks;
    auto       t0 = Clock::now();
    SearchSpec spec;
    spec.must_satisfy.add(family_identity(*parse_family_label("a_2")));
    spec.must_satisfy.add(family_identity(*parse_family_label("c_2")));
    spec.must_fail.push_back(parse_identity("x y = y x"));
    spec.max_order = 5;
    auto r         = witness_search(spec);
    checks.expect(r.witness && r.witness->order() <= 5, "no witness of order at most 5");
    if (r.witness) {
      detail = "witness of order " + std::to_string(r.witness->order());
      checks.expect(satisfies(*r.witness, parse_identity("x y = y x")).decision == Decision::no, "witness commutes");
    }
    checks.expect(seconds_since(t0) < 60.0, "over 60 s");
    auto count = enumerate_monoids(4, [](FiniteMonoid const&) { return true; });
    checks.expect(count == 35, "order 4 gives " + std::to_string(count));
    checks.expect(oracle::count_monoids(4) == 35, "naive enumerator disagrees");
    return checks;
  }

  // 9: manifest records do not depend on the worker count.
  Checks criterion9(unsigned& workers) {
    Checks                   checks;
    std::vector<std::string> stems;
    for (auto const& f : shipped("manifests", ".manifest")) {
      stems.push_back(f.stem().string());
    }
    auto       manifests = load_manifests(stems);
    RunOptions one, many;
    workers    = std::max(4u, std::thread::hardware_concurrency());
    many.jobs  = workers;
    auto a     = run_manifests(manifests, one);
    auto b     = run_manifests(manifests, many);
    std::string ra, rb, ta, tb;
    for (std::size_t i = 0; i < a.size(); ++i) {
      ra += a[i].records();
      rb += b[i].records();
      ta += a[i].to_string();
      tb += b[i].to_string();
    }
    checks.expect(!ra.empty(), "no records");
    checks.expect(ra == rb, "records differ");
    checks.expect(ta == tb, "reports differ");
    return checks;
  }

  // 10: duality and product conjunction on random identities.
  Checks criterion10() {
    Checks                    checks;
    std::vector<FiniteMonoid> pool;
    for (auto name : {"Rq{1}", "Rq{x}", "Rq{xy}", "E", "A0", "B0", "Q", "F1", "H3", "B"}) {
      pool.push_back(cat().monoid(name));
    }
    std::mt19937_64                            rng(99);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> nvars(1, 3);
    auto                                       letters = oracle::letters("xyh");
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<Variable> alphabet(letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(nvars(rng)));
      Identity              idy(oracle::random_word(rng, alphabet, 5), oracle::random_word(rng, alphabet, 5));
      auto const&           m = pool[pick(rng)];
      auto const&           n = pool[pick(rng)];
      auto                  sm = satisfies(m, idy).decision;
      auto                  sd = satisfies(dual_monoid(m), dualize(idy)).decision;
      checks.expect(sm == sd, "duality fails on " + idy.to_string());
      auto sn = satisfies(n, idy).decision;
      auto sp = satisfies(direct_product(m, n), idy).decision;
      bool both = sm == Decision::yes && sn == Decision::yes;
      checks.expect((sp == Decision::yes) == both, "product conjunction fails on " + idy.to_string());
    }
    return checks;
  }

  int emit(int n, char const* what, Checks const& c, double secs, std::string const& detail = {}) {
    std::printf("criterion %2d: %s  %s (%.2f s)%s%s\n", n, c.failures.empty() ? "PASS" : "FAIL", what, secs,
                detail.empty() ? "" : "; ", detail.c_str());
    for (std::size_t i = 0; i < c.failures.size() && i < 10; ++i) {
      std::printf("    %s\n", c.failures[i].c_str());
    }
    std::fflush(stdout);
    return c.failures.empty() ? 0 : 1;
  }

  template <typename F>
  int run(int n, char const* what, F&& f) {
    auto        t0 = Clock::now();
    std::string detail;
    Checks      c;
    try {
      c = f(detail);
    } catch (std::exception const& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    return emit(n, what, c, seconds_since(t0), detail);
  }

}  // namespace

int main() {
  int failed = 0;
  failed += run(1, "catalog self-check and orders", [](std::string&) { return criterion1(); });
  failed += run(2, "basis cross-checks under 1 s each", [](std::string&) { return criterion2(); });
  failed += run(3, "Q criterion against brute force", [](std::string&) { return criterion3(); });
  failed += run(4, "shipped proof scripts", [](std::string& d) {
    std::size_t n = 0;
    auto        c = criterion4(n);
    d             = std::to_string(n) + " scripts";
    return c;
  });
  failed += run(5, "structural predicates", [](std::string&) { return criterion5(); });
  failed += run(6, "figure manifests", [](std::string& d) { return criterion6(d); });
  failed += run(7, "isoterms and free objects", [](std::string&) { return criterion7(); });
  failed += run(8, "witness search and enumeration", [](std::string& d) { return criterion8(d); });
  failed += run(9, "deterministic manifest records", [](std::string& d) {
    unsigned w = 0;
    auto     c = criterion9(w);
    d          = "1 vs " + std::to_string(w) + " workers";
    return c;
  });
  failed += run(10, "duality and product invariants", [](std::string&) { return criterion10(); });
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
