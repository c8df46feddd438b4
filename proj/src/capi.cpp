#include "varcross/varcross.h"

#include <filesystem>
#include <fstream>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "varcross/catalog.hpp"
#include "varcross/error.hpp"
#include "varcross/harness.hpp"
#include "varcross/search.hpp"
#include "varcross/structure.hpp"

struct vc_context {
  std::unique_ptr<varcross::Catalog> owned;
  varcross::Catalog const*           catalog = nullptr;
  varcross::RunOptions               options;
  std::string                        last_error;
};

struct vc_report {
  vc_status   status = VC_OK;
  std::string text;
  std::string records;
};

struct vc_monoid {
  varcross::MonoidExpression expr;
  varcross::FiniteMonoid     monoid;
  std::string                table;
};

namespace {

  class InputError : public varcross::Error {
   public:
    using Error::Error;
  };

  std::string read_file(char const* path) {
    if (path == nullptr) {
      throw InputError("missing file path");
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw InputError(std::string("cannot read ") + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  vc_status to_c(varcross::Status s) {
    return static_cast<vc_status>(static_cast<int>(s));
  }

  // Runs `body`, mapping exceptions to status codes and the context error.
  template <typename Body>
  vc_status guarded(vc_context* ctx, Body&& body) {
    if (ctx == nullptr) {
      return VC_INPUT_ERROR;
    }
    ctx->last_error.clear();
    try {
      return body();
    } catch (varcross::Error const& e) {
      ctx->last_error = e.what();
      return VC_INPUT_ERROR;
    } catch (std::bad_alloc const&) {
      ctx->last_error = "out of memory";
      return VC_INTERNAL_ERROR;
    } catch (std::exception const& e) {
      ctx->last_error = e.what();
      return VC_INTERNAL_ERROR;
    }
  }

  vc_status emit(vc_report** out, vc_status status, std::string text, std::string records = {}) {
    *out = new vc_report{status, std::move(text), std::move(records)};
    return status;
  }

  template <typename Body>
  vc_status reporting(vc_context* ctx, vc_report** out, Body&& body) {
    if (out == nullptr) {
      return VC_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded(ctx, [&] { return body(); });
  }

}  // namespace

extern "C" {

const char* vc_version(void) {
  return "1.0.0";
}

vc_status vc_context_create(const char* catalog_dir, vc_context** out) {
  if (out == nullptr) {
    return VC_INPUT_ERROR;
  }
  *out = nullptr;
  try {
    auto ctx = std::make_unique<vc_context>();
    if (catalog_dir == nullptr) {
      ctx->catalog = &varcross::Catalog::builtin();
    } else {
      ctx->owned   = std::make_unique<varcross::Catalog>(varcross::Catalog::load_directory(catalog_dir));
      ctx->catalog = ctx->owned.get();
    }
    *out = ctx.release();
    return VC_OK;
  } catch (varcross::Error const&) {
    return VC_INPUT_ERROR;
  } catch (std::exception const&) {
    return VC_INTERNAL_ERROR;
  }
}

void vc_context_destroy(vc_context* ctx) {
  delete ctx;
}

vc_status vc_context_set_jobs(vc_context* ctx, unsigned jobs) {
  if (ctx == nullptr || jobs == 0) {
    return VC_INPUT_ERROR;
  }
  ctx->options.jobs = jobs;
  return VC_OK;
}

vc_status vc_context_set_budget(vc_context* ctx, uint64_t budget) {
  if (ctx == nullptr || budget == 0) {
    return VC_INPUT_ERROR;
  }
  ctx->options.budget = static_cast<std::size_t>(budget);
  return VC_OK;
}

vc_status vc_context_set_timings(vc_context* ctx, int enabled) {
  if (ctx == nullptr) {
    return VC_INPUT_ERROR;
  }
  ctx->options.timings = enabled != 0;
  return VC_OK;
}

const char* vc_context_last_error(const vc_context* ctx) {
  return ctx == nullptr ? "" : ctx->last_error.c_str();
}

vc_status vc_selfcheck(vc_context* ctx, vc_report** out) {
  return reporting(ctx, out, [&] {
    auto r = ctx->catalog->selfcheck();
    return emit(out, r.passed ? VC_OK : VC_FAIL, r.to_string());
  });
}

vc_status vc_run_manifests(vc_context* ctx, const char* const* paths, size_t count, vc_report** out) {
  return reporting(ctx, out, [&] {
    std::vector<varcross::Manifest> manifests;
    for (size_t i = 0; i < count; ++i) {
      auto text = read_file(paths[i]);
      auto name = std::filesystem::path(paths[i]).stem().string();
      try {
        manifests.push_back(varcross::parse_manifest(name, text, *ctx->catalog));
      } catch (varcross::Error const& e) {
        throw InputError(std::string(paths[i]) + ": " + e.what());
      }
    }
    auto        reports = varcross::run_manifests(manifests, ctx->options);
    std::string text, records;
    auto        status  = varcross::Status::ok;
    for (auto const& r : reports) {
      text += r.to_string(ctx->options.timings);
      records += r.records(ctx->options.timings);
      status = varcross::worst(status, r.status());
    }
    return emit(out, to_c(status), std::move(text), std::move(records));
  });
}

vc_status vc_run_manifest_text(vc_context* ctx, const char* name, const char* text, vc_report** out) {
  return reporting(ctx, out, [&] {
    if (text == nullptr) {
      throw InputError("missing manifest text");
    }
    auto manifest = varcross::parse_manifest(name ? name : "manifest", text, *ctx->catalog);
    auto reports  = varcross::run_manifests({manifest}, ctx->options);
    auto const& r = reports.front();
    return emit(out, to_c(r.status()), r.to_string(ctx->options.timings), r.records(ctx->options.timings));
  });
}

vc_status vc_run_proof_text(vc_context* ctx, const char* text, int lax, vc_report** out) {
  return reporting(ctx, out, [&] {
    if (text == nullptr) {
      throw InputError("missing proof text");
    }
    varcross::ProofOptions opts;
    opts.lax = lax != 0;
    auto r   = varcross::run_proof(text, *ctx->catalog, opts);
    return emit(out, to_c(r.status), std::move(r.text));
  });
}

vc_status vc_run_proof(vc_context* ctx, const char* path, int lax, vc_report** out) {
  return reporting(ctx, out, [&] {
    auto                   text = read_file(path);
    varcross::ProofOptions opts;
    opts.lax = lax != 0;
    try {
      auto r = varcross::run_proof(text, *ctx->catalog, opts);
      return emit(out, to_c(r.status), std::move(r.text));
    } catch (varcross::Error const& e) {
      throw InputError(std::string(path) + ": " + e.what());
    }
  });
}

vc_status vc_probe_isoterm(vc_context* ctx, const char* expr, const char* word, vc_report** out) {
  return reporting(ctx, out, [&] {
    if (expr == nullptr || word == nullptr) {
      throw InputError("missing argument");
    }
    auto r = varcross::probe_isoterm(expr, word, *ctx->catalog, ctx->options);
    return emit(out, to_c(r.status), std::move(r.text));
  });
}

vc_status vc_probe_properties(vc_context* ctx, const char* expr, vc_report** out) {
  return reporting(ctx, out, [&] {
    if (expr == nullptr) {
      throw InputError("missing argument");
    }
    auto r = varcross::probe_properties(expr, *ctx->catalog, ctx->options);
    return emit(out, to_c(r.status), std::move(r.text));
  });
}

vc_status vc_probe_exclusion(vc_context* ctx, const char* expr, vc_report** out) {
  return reporting(ctx, out, [&] {
    if (expr == nullptr) {
      throw InputError("missing argument");
    }
    auto r = varcross::probe_exclusion(expr, *ctx->catalog, ctx->options);
    return emit(out, to_c(r.status), std::move(r.text));
  });
}

vc_status vc_search(vc_context* ctx, const char* satisfy, const char* fail, unsigned max_order, vc_report** out) {
  return reporting(ctx, out, [&] {
    varcross::SearchSpec spec;
    if (satisfy != nullptr) {
      spec.must_satisfy = varcross::parse_axiom_spec(satisfy, *ctx->catalog);
    }
    if (fail != nullptr) {
      auto set       = varcross::parse_axiom_spec(fail, *ctx->catalog);
      spec.must_fail = set.axioms();
    }
    if (max_order == 0) {
      throw InputError("maximum order must be positive");
    }
    spec.max_order = max_order;
    spec.budget    = ctx->options.budget;
    auto        r  = varcross::witness_search(spec);
    std::string text = r.detail + "\n";
    if (r.witness) {
      text += varcross::to_table_text(*r.witness);
    }
    return emit(out, to_c(varcross::status_of(r.decision)), std::move(text));
  });
}

const char* vc_report_text(const vc_report* report) {
  return report == nullptr ? "" : report->text.c_str();
}

const char* vc_report_records(const vc_report* report) {
  return report == nullptr ? "" : report->records.c_str();
}

vc_status vc_report_status(const vc_report* report) {
  return report == nullptr ? VC_INPUT_ERROR : report->status;
}

void vc_report_destroy(vc_report* report) {
  delete report;
}

vc_status vc_monoid_from_expr(vc_context* ctx, const char* expr, vc_monoid** out) {
  if (out == nullptr) {
    return VC_INPUT_ERROR;
  }
  *out = nullptr;
  return guarded(ctx, [&] {
    if (expr == nullptr) {
      throw InputError("missing expression");
    }
    auto e = varcross::parse_monoid_expression(expr, *ctx->catalog);
    auto m = e.materialize();
    auto t = varcross::to_table_text(m);
    *out   = new vc_monoid{std::move(e), std::move(m), std::move(t)};
    return VC_OK;
  });
}

size_t vc_monoid_order(const vc_monoid* m) {
  return m == nullptr ? 0 : m->monoid.order();
}

vc_status vc_monoid_satisfies(vc_context* ctx, const vc_monoid* m, const char* identity, int* satisfied) {
  return guarded(ctx, [&] {
    if (m == nullptr || identity == nullptr || satisfied == nullptr) {
      throw InputError("missing argument");
    }
    auto set = varcross::parse_axiom_spec(identity, *ctx->catalog);
    auto d   = varcross::Decision::yes;
    for (auto const& f : m->expr.factors) {
      auto r = varcross::satisfies_all(f, set, ctx->options.budget);
      if (r.decision == varcross::Decision::no) {
        d = r.decision;
        break;
      }
      if (r.decision == varcross::Decision::inconclusive) {
        d = r.decision;
      }
    }
    *satisfied = d == varcross::Decision::yes ? 1 : 0;
    return d == varcross::Decision::inconclusive ? VC_INCONCLUSIVE : VC_OK;
  });
}

int vc_monoid_is_j_trivial(const vc_monoid* m) {
  return m != nullptr && varcross::is_j_trivial(m->monoid) ? 1 : 0;
}

const char* vc_monoid_table(const vc_monoid* m) {
  return m == nullptr ? "" : m->table.c_str();
}

void vc_monoid_destroy(vc_monoid* m) {
  delete m;
}

}  // extern "C"
