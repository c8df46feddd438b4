#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "varcross/varcross.h"

namespace {

  struct Options {
    std::string              catalog;
    unsigned                 jobs   = 1;
    double                   budget = 0;
    bool                     timings = false;
    std::string              records;
    std::vector<std::string> files;
    bool                     lax = false;
    std::string              expr;
    std::string              word;
    std::vector<std::string> satisfy;
    std::vector<std::string> fail;
    unsigned                 max_order = 5;
  };

  // An argument naming a readable file stands for its contents.
  std::string file_or_text(std::string const& arg) {
    std::ifstream in(arg);
    if (!in) {
      return arg;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  std::string joined(std::vector<std::string> const& args) {
    std::string out;
    for (auto const& a : args) {
      out += file_or_text(a) + "\n";
    }
    return out;
  }

  int finish(vc_context* ctx, vc_status status, vc_report* report) {
    if (report != nullptr) {
      std::fputs(vc_report_text(report), stdout);
      vc_report_destroy(report);
    } else if (status == VC_INPUT_ERROR || status == VC_INTERNAL_ERROR) {
      std::fprintf(stderr, "error: %s\n", vc_context_last_error(ctx));
    }
    return static_cast<int>(status);
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monoid identities and finite monoids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", vc_version());
  Options opt;
  app.add_option("--catalog", opt.catalog, "Catalog directory (default: builtin)")->check(CLI::ExistingDirectory);
  app.add_option("--budget", opt.budget, "Evaluation budget per satisfaction check")->check(CLI::PositiveNumber);

  auto* selfcheck = app.add_subcommand("selfcheck", "Validate the catalog");

  auto* manifest = app.add_subcommand("manifest", "Run claim manifests");
  manifest->add_option("files", opt.files, "Manifest files")->required()->check(CLI::ExistingFile);
  manifest->add_option("--jobs,-j", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  manifest->add_option("--budget", opt.budget, "Evaluation budget per satisfaction check")->check(CLI::PositiveNumber);
  manifest->add_option("--records", opt.records, "Write claim records to FILE ('-' for stdout)");
  manifest->add_flag("--timings", opt.timings, "Include timings in records");

  auto* proof = app.add_subcommand("proof", "Verify a derivation script");
  proof->add_option("file", opt.files, "Proof script")->required()->check(CLI::ExistingFile);
  proof->add_flag("--lax", opt.lax, "Accept repeated chain words with a warning");

  auto* probe = app.add_subcommand("probe", "Inspect a monoid expression");
  probe->require_subcommand(1);
  auto* iso = probe->add_subcommand("iso", "Decide whether a word is an isoterm");
  iso->add_option("expr", opt.expr, "Monoid expression")->required();
  iso->add_option("word", opt.word, "Word")->required();
  auto* props = probe->add_subcommand("props", "Structural properties");
  props->add_option("expr", opt.expr, "Monoid expression")->required();
  auto* excl = probe->add_subcommand("excl", "Exclusion tests against the almost Cross varieties");
  excl->add_option("expr", opt.expr, "Monoid expression")->required();

  auto* search = app.add_subcommand("search", "Find a smallest monoid separating identities");
  search->add_option("--satisfy", opt.satisfy, "Identity, label, basis name or file; repeatable");
  search->add_option("--fail", opt.fail, "Identity, label or file; repeatable");
  search->add_option("--max-order", opt.max_order, "Largest order to enumerate")->check(CLI::Range(1u, 7u));

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : VC_INPUT_ERROR;
  }

  vc_context* ctx = nullptr;
  if (vc_context_create(opt.catalog.empty() ? nullptr : opt.catalog.c_str(), &ctx) != VC_OK) {
    std::fprintf(stderr, "error: cannot load catalog %s\n", opt.catalog.c_str());
    return VC_INPUT_ERROR;
  }
  vc_context_set_jobs(ctx, opt.jobs);
  vc_context_set_timings(ctx, opt.timings ? 1 : 0);
  if (opt.budget > 0) {
    vc_context_set_budget(ctx, static_cast<uint64_t>(opt.budget));
  }

  vc_report* report = nullptr;
  vc_status  status = VC_OK;
  int        code   = 0;
  if (*selfcheck) {
    status = vc_selfcheck(ctx, &report);
    code   = finish(ctx, status, report);
  } else if (*manifest) {
    std::vector<char const*> paths;
    for (auto const& f : opt.files) {
      paths.push_back(f.c_str());
    }
    status = vc_run_manifests(ctx, paths.data(), paths.size(), &report);
    if (report != nullptr && !opt.records.empty()) {
      if (opt.records == "-") {
        std::fputs(vc_report_records(report), stdout);
      } else {
        std::ofstream out(opt.records, std::ios::binary);
        out << vc_report_records(report);
        if (!out) {
          std::fprintf(stderr, "error: cannot write %s\n", opt.records.c_str());
          status = VC_INPUT_ERROR;
        }
      }
    }
    code = finish(ctx, status, report);
    code = status == VC_INPUT_ERROR ? VC_INPUT_ERROR : code;
  } else if (*proof) {
    status = vc_run_proof(ctx, opt.files.front().c_str(), opt.lax ? 1 : 0, &report);
    code   = finish(ctx, status, report);
  } else if (*iso) {
    status = vc_probe_isoterm(ctx, opt.expr.c_str(), opt.word.c_str(), &report);
    code   = finish(ctx, status, report);
  } else if (*props) {
    status = vc_probe_properties(ctx, opt.expr.c_str(), &report);
    code   = finish(ctx, status, report);
  } else if (*excl) {
    status = vc_probe_exclusion(ctx, opt.expr.c_str(), &report);
    code   = finish(ctx, status, report);
  } else if (*search) {
    auto sat  = joined(opt.satisfy);
    auto fail = joined(opt.fail);
    status    = vc_search(ctx, sat.c_str(), fail.c_str(), opt.max_order, &report);
    code      = finish(ctx, status, report);
  }
  vc_context_destroy(ctx);
  return code;
}
