#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "varcross/catalog.hpp"
#include "varcross/family.hpp"
#include "varcross/harness.hpp"
#include "varcross/proof.hpp"

using namespace varcross;
namespace fs = std::filesystem;

namespace {
  Catalog const& cat() {
    return Catalog::builtin();
  }

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

  // The catalog label an identity resolves to. Family instances resolve to
  // themselves and dual(L) to L.
  void check_resolves(Identity const& idy) {
    CAPTURE(idy.label);
    CAPTURE(idy.to_string());
    std::string label = idy.label;
    Identity    base  = idy;
    if (label.rfind("dual(", 0) == 0 && label.back() == ')') {
      label = label.substr(5, label.size() - 6);
      base  = dualize(idy);
    }
    auto matches = cat().labels_of(base);
    if (parse_family_label(label)) {
      CHECK(matches.empty());
      return;
    }
    REQUIRE(matches.size() == 1);
    if (cat().find_identity(label)) {
      CHECK(matches.front() == label);
    }
  }
}

TEST_CASE("catalog identities are pairwise distinct") {
  auto const& ids = cat().identities();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      CAPTURE(ids[i].label);
      CAPTURE(ids[j].label);
      CHECK_FALSE(equivalent_identities(ids[i], ids[j]));
    }
  }
}

TEST_CASE("every identity of a shipped manifest resolves to one catalog label") {
  auto files = shipped("manifests", ".manifest");
  CHECK(files.size() >= 8);
  for (auto const& f : files) {
    CAPTURE(f.string());
    auto m = parse_manifest(f.stem().string(), slurp(f), cat());
    for (auto const& c : m.claims) {
      for (auto const& idy : c.axioms) {
        check_resolves(idy);
      }
    }
  }
}

TEST_CASE("every axiom of a shipped proof resolves to one catalog label") {
  auto files = shipped("proofs", ".proof");
  CHECK(files.size() >= 10);
  auto resolver = [](std::string_view l) { return cat().find_identity(l); };
  for (auto const& f : files) {
    CAPTURE(f.string());
    auto script = parse_proof_script(slurp(f), resolver);
    for (auto const& idy : script.axioms) {
      check_resolves(idy);
    }
    for (auto const& step : script.steps) {
      CHECK(script.axioms.find(step.label) != nullptr);
    }
  }
}

TEST_CASE("every catalog basis resolves label by label") {
  for (auto const& b : cat().bases()) {
    CAPTURE(b.name);
    for (auto const& idy : b.axioms) {
      check_resolves(idy);
    }
  }
}
