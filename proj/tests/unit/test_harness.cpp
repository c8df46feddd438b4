#include "doctest.h"
#include "varcross/catalog.hpp"
#include "varcross/error.hpp"
#include "varcross/harness.hpp"
#include "varcross/search.hpp"

using namespace varcross;

namespace {
  Catalog const& cat() {
    return Catalog::builtin();
  }

  ManifestReport run_one(std::string_view text, RunOptions const& opts = {}) {
    return run_manifests({parse_manifest("t", text, cat())}, opts).front();
  }
}

TEST_CASE("empty manifest passes with zero claims") {
  auto r = run_one("");
  CHECK(r.results.empty());
  CHECK(r.status() == Status::ok);
  CHECK(r.to_string().find("0 passed, 0 failed, 0 inconclusive") != std::string::npos);
  auto c = run_one("# only comments\n\n");
  CHECK(c.results.empty());
}

TEST_CASE("claim verdicts map to statuses") {
  CHECK(run_one("satisfies A0 xhxtx\n").status() == Status::ok);
  auto f = run_one("satisfies A0 sqcomm\nsatisfies Q sqcomm\n");
  CHECK(f.status() == Status::fail);
  CHECK(f.results[0].verdict == Verdict::fail);
  CHECK(f.results[0].detail.find("fails sqcomm") != std::string::npos);
  CHECK(f.results[1].verdict == Verdict::pass);
  auto i = run_one("budget 5\nsatisfies K R_3\n");
  CHECK(i.status() == Status::inconclusive);
  CHECK(i.results[0].detail.find("budget of 5") != std::string::npos);
}

TEST_CASE("worst status ordering") {
  CHECK(worst(Status::ok, Status::fail) == Status::fail);
  CHECK(worst(Status::inconclusive, Status::fail) == Status::fail);
  CHECK(worst(Status::input_error, Status::fail) == Status::input_error);
  CHECK(worst(Status::ok, Status::inconclusive) == Status::inconclusive);
}

TEST_CASE("manifest input errors") {
  CHECK_THROWS_AS(parse_manifest("t", "satisfies A0\n", cat()), ParseError);
  CHECK_THROWS_AS(parse_manifest("t", "frobnicate A0 xhxtx\n", cat()), ParseError);
  CHECK_THROWS_AS(parse_manifest("t", "satisfies A9 xhxtx\n", cat()), Error);
  CHECK_THROWS_AS(parse_manifest("t", "satisfies A0 nosuch\n", cat()), Error);
  CHECK_THROWS_AS(parse_manifest("t", "satisfies A0 \"x h x\"\n", cat()), Error);
}

TEST_CASE("claim ids and records") {
  auto r = run_one("# c\nsatisfies A0 xhxtx\nnote hello\nfails Q xhxtx\n");
  REQUIRE(r.results.size() == 2);
  CHECK(r.results[0].id == "t:2");
  CHECK(r.results[1].id == "t:4");
  auto rec = r.records();
  CHECK(rec.find("t:2 pass - satisfied") != std::string::npos);
  CHECK(r.to_string().find("hello") != std::string::npos);
}

TEST_CASE("reports do not depend on the number of workers") {
  std::string text = "satisfies A0 basis.A0\nfails Q xhxtx\nisoterm Rq{xhx} \"x h x\"\nin-var E B0\n"
                     "not-isoterm Rq{x} \"x y\"\naperiodic K 2\njtrivial H3\nfails H3 R_2\n";
  RunOptions one, many;
  many.jobs = 4;
  auto a    = run_manifests({parse_manifest("d", text, cat())}, one).front();
  auto b    = run_manifests({parse_manifest("d", text, cat())}, many).front();
  CHECK(a.records() == b.records());
  CHECK(a.to_string() == b.to_string());
}

TEST_CASE("probes") {
  auto p = probe_properties("rees(x h x)", cat());
  CHECK(p.text.find("order: 7") != std::string::npos);
  CHECK(p.text.find("J-trivial: yes") != std::string::npos);
  CHECK(p.text.find("aperiodic: yes, index 2") != std::string::npos);
  auto b = probe_properties("B", cat());
  CHECK(b.text.find("J-trivial: no") != std::string::npos);
  auto i = probe_isoterm("rees(x y)", "x y", cat());
  CHECK(i.status == Status::ok);
  CHECK(i.text.find(": isoterm") != std::string::npos);
  auto n = probe_isoterm("Rq{x}", "x y", cat());
  CHECK(n.status == Status::fail);
  CHECK(n.text.find("identified with y x") != std::string::npos);
  CHECK_THROWS_AS(probe_properties("nosuch", cat()), Error);
}

TEST_CASE("proof runs report status") {
  auto ok = run_proof("axioms:\n  a_1\nchain:\n  x\n  -> x^2 by a_1\n", cat());
  CHECK(ok.status == Status::ok);
  auto bad = run_proof("axioms:\n  a_1\nchain:\n  x\n  -> x^3 by a_1\n  -> x^4 by a_1\n", cat());
  CHECK(bad.status == Status::fail);
}

TEST_CASE("axiom specs") {
  auto s = parse_axiom_spec("a_2\nc_2\nmine: x y = y x\nx^2 = x\n", cat());
  CHECK(s.size() == 4);
  CHECK(s.find("mine") != nullptr);
  auto b = parse_axiom_spec("basis.E", cat());
  CHECK(b.size() == 3);
}
