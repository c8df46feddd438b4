#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <string>

#include "doctest.h"
#include "varcross/varcross.h"

namespace {
  struct Context {
    vc_context* ctx = nullptr;
    Context() {
      REQUIRE(vc_context_create(nullptr, &ctx) == VC_OK);
    }
    ~Context() {
      vc_context_destroy(ctx);
    }
  };

  std::string text_of(vc_report* r) {
    std::string s = vc_report_text(r);
    vc_report_destroy(r);
    return s;
  }
}

TEST_CASE("context lifecycle") {
  CHECK(std::string(vc_version()) == "1.0.0");
  vc_context* ctx = nullptr;
  CHECK(vc_context_create("/nonexistent/catalog", &ctx) == VC_INPUT_ERROR);
  CHECK(ctx == nullptr);
  CHECK(vc_context_create(nullptr, nullptr) == VC_INPUT_ERROR);
  Context c;
  CHECK(vc_context_set_jobs(c.ctx, 0) == VC_INPUT_ERROR);
  CHECK(vc_context_set_jobs(c.ctx, 2) == VC_OK);
  CHECK(vc_context_set_budget(c.ctx, 0) == VC_INPUT_ERROR);
  CHECK(vc_context_set_timings(nullptr, 1) == VC_INPUT_ERROR);
  vc_context_destroy(nullptr);
  vc_report_destroy(nullptr);
  vc_monoid_destroy(nullptr);
}

TEST_CASE("selfcheck") {
  Context    c;
  vc_report* r = nullptr;
  CHECK(vc_selfcheck(c.ctx, &r) == VC_OK);
  CHECK(vc_report_status(r) == VC_OK);
  CHECK(text_of(r).find("selfcheck passed") != std::string::npos);
}

TEST_CASE("manifests through the C API") {
  Context    c;
  vc_report* r = nullptr;
  CHECK(vc_run_manifest_text(c.ctx, "empty", "", &r) == VC_OK);
  CHECK(text_of(r).find("0 passed, 0 failed, 0 inconclusive") != std::string::npos);
  CHECK(vc_run_manifest_text(c.ctx, "f", "satisfies A0 sqcomm\n", &r) == VC_FAIL);
  CHECK(std::string(vc_report_records(r)).rfind("f:1 fail", 0) == 0);
  vc_report_destroy(r);
  CHECK(vc_run_manifest_text(c.ctx, "i", "budget 3\nsatisfies K R_3\n", &r) == VC_INCONCLUSIVE);
  vc_report_destroy(r);
  CHECK(vc_run_manifest_text(c.ctx, "e", "satisfies Nope xhxtx\n", &r) == VC_INPUT_ERROR);
  CHECK(r == nullptr);
  CHECK(std::string(vc_context_last_error(c.ctx)).find("Nope") != std::string::npos);
  char const* missing[] = {"/nonexistent.manifest"};
  CHECK(vc_run_manifests(c.ctx, missing, 1, &r) == VC_INPUT_ERROR);
}

TEST_CASE("proofs through the C API") {
  Context    c;
  vc_report* r = nullptr;
  CHECK(vc_run_proof_text(c.ctx, "axioms:\n  a_1\nchain:\n  x\n  -> x^2 by a_1\n", 0, &r) == VC_OK);
  vc_report_destroy(r);
  CHECK(vc_run_proof_text(c.ctx, "axioms:\n  a_1\nchain:\n  x\n  -> x^3 by a_1\n", 0, &r) == VC_FAIL);
  CHECK(text_of(r).find("step 1") != std::string::npos);
  CHECK(vc_run_proof_text(c.ctx, "chain:\n", 0, &r) == VC_INPUT_ERROR);
}

TEST_CASE("probes and search through the C API") {
  Context    c;
  vc_report* r = nullptr;
  CHECK(vc_probe_isoterm(c.ctx, "rees(x y)", "x y", &r) == VC_OK);
  vc_report_destroy(r);
  CHECK(vc_probe_isoterm(c.ctx, "Rq{x}", "x y", &r) == VC_FAIL);
  CHECK(text_of(r).find("y x") != std::string::npos);
  CHECK(vc_probe_properties(c.ctx, "B", &r) == VC_OK);
  CHECK(text_of(r).find("J-trivial: no") != std::string::npos);
  CHECK(vc_probe_exclusion(c.ctx, "A0", &r) == VC_OK);
  vc_report_destroy(r);
  CHECK(vc_search(c.ctx, "a_2\nc_2\n", "x y = y x\n", 5, &r) == VC_OK);
  CHECK(text_of(r).find("order 4") != std::string::npos);
  CHECK(vc_search(c.ctx, "", "x = x\n", 4, &r) == VC_FAIL);
  vc_report_destroy(r);
  CHECK(vc_search(c.ctx, "", "x = x\n", 0, &r) == VC_INPUT_ERROR);
}

TEST_CASE("monoid handles") {
  Context    c;
  vc_monoid* m = nullptr;
  REQUIRE(vc_monoid_from_expr(c.ctx, "A0 x Q", &m) == VC_OK);
  CHECK(vc_monoid_order(m) == 30);
  CHECK(vc_monoid_is_j_trivial(m) == 1);
  int sat = -1;
  CHECK(vc_monoid_satisfies(c.ctx, m, "left_sq", &sat) == VC_OK);
  CHECK(sat == 1);
  CHECK(vc_monoid_satisfies(c.ctx, m, "x h x t x = x h t x", &sat) == VC_OK);
  CHECK(sat == 0);
  CHECK(vc_monoid_satisfies(c.ctx, m, "x h x t", &sat) == VC_INPUT_ERROR);
  CHECK(std::string(vc_monoid_table(m)).find("order 30") != std::string::npos);
  vc_monoid_destroy(m);
  CHECK(vc_monoid_from_expr(c.ctx, "B", &m) == VC_OK);
  CHECK(vc_monoid_is_j_trivial(m) == 0);
  vc_monoid_destroy(m);
  CHECK(vc_monoid_from_expr(c.ctx, "rees(x", &m) == VC_INPUT_ERROR);
  CHECK(m == nullptr);
}
