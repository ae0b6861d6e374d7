// l2inv: exact von Neumann dimensions, L2-Betti numbers and the alpha series
// on the command line.  Exit codes: 0 success, 1 verification failure,
// 2 input error, 3 backend/domain mismatch.

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "l2inv/alpha.hpp"
#include "l2inv/betti.hpp"
#include "l2inv/errors.hpp"
#include "l2inv/json_io.hpp"
#include "l2inv/registry.hpp"
#include "l2inv/verify.hpp"

namespace {

using namespace l2inv;

std::uint64_t seed_from_env() {
  const char* env = std::getenv("L2INV_SEED");
  if (!env) return 0;
  std::uint64_t value = 0;
  const std::string s(env);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("L2INV_SEED must be a non-negative integer, got '" + s + "'");
  return value;
}

void emit(const nlohmann::json& out, const std::string& output_path) {
  const std::string text = out.dump(2) + "\n";
  std::cout << text;
  if (!output_path.empty()) {
    std::ofstream file(output_path);
    if (!file) throw InputError("cannot write '" + output_path + "'");
    file << text;
  }
}

struct CommonFlags {
  long samples = 4096;
  double svd_tol = 1e-9;
  std::uint64_t seed = 0;
  bool seed_given = false;
  int jobs = 1;
  int tail_window = 3;
  std::string output;

  std::uint64_t resolved_seed() const { return seed_given ? seed : seed_from_env(); }
  SampleOptions sample_options() const {
    SampleOptions s;
    s.samples = samples;
    s.svd_tol = svd_tol;
    s.seed = resolved_seed();
    s.jobs = jobs;
    return s;
  }
};

void add_common(CLI::App* cmd, CommonFlags& f) {
  cmd->add_option("--samples", f.samples, "Torus sample count for the sampled backend");
  cmd->add_option("--svd-tol", f.svd_tol, "Relative singular value cutoff");
  cmd->add_option("--seed", f.seed, "Sampling seed (default: L2INV_SEED or 0)")
      ->each([&f](const std::string&) { f.seed_given = true; });
  cmd->add_option("--jobs", f.jobs, "Worker threads; results do not depend on this")
      ->check(CLI::Range(1, 256));
  cmd->add_option("--tail-window", f.tail_window, "Trailing levels measured for tower stability")
      ->check(CLI::Range(1, 64));
  cmd->add_option("--output", f.output, "Also write the JSON result to this file");
}

int run_dim_ker(const std::string& matrix_path, const std::string& backend,
                const std::string& tower_spec, const CommonFlags& f) {
  const RingMatrix a = matrix_from_json(load_json_file(matrix_path));
  if (!tower_spec.empty()) {
    if (backend != "auto") throw InputError("--tower and --backend are mutually exclusive");
    const QuotientTower tower = resolve_tower(a.group(), tower_spec);
    const ApproxReport rep = dim_ker_approx(a, tower, f.tail_window, f.jobs);
    emit(dimension_to_json(approx_result(rep)), f.output);
    return 0;
  }
  std::string chosen = backend;
  if (chosen == "auto")
    chosen = a.group()->is_finite() ? "finite"
             : a.group()->kind() == GroupKind::FreeAbelian
                 ? "abelian"
                 : throw DomainError("a word-group matrix needs --tower");
  DimensionResult d;
  if (chosen == "finite")
    d = dim_ker_finite(a);
  else if (chosen == "abelian")
    d = dim_ker_abelian(a);
  else if (chosen == "sampled")
    d = dim_ker_sampled(a, f.sample_options());
  else
    throw InputError("unknown backend '" + chosen + "'");
  emit(dimension_to_json(d), f.output);
  return 0;
}

int run_betti(const std::string& complex_spec, const std::string& backend,
              const std::string& quotient_spec, const std::string& tower_spec, int manifold_dim,
              const CommonFlags& f) {
  ChainComplex c = resolve_complex(complex_spec);
  if (!quotient_spec.empty() && !tower_spec.empty())
    throw InputError("--quotient and --tower are mutually exclusive");
  if (!quotient_spec.empty())
    c = push_complex(c, resolve_quotient(c.group, quotient_spec));

  BettiOptions opt;
  opt.sample = f.sample_options();
  opt.tail_window = f.tail_window;
  opt.jobs = f.jobs;
  if (!tower_spec.empty()) {
    if (backend != "auto" && backend != "tower")
      throw InputError("--tower and --backend are mutually exclusive");
    opt.backend = Backend::Tower;
    opt.tower = resolve_tower(c.group, tower_spec);
  } else if (backend == "auto") {
    if (c.group->is_finite())
      opt.backend = Backend::Finite;
    else if (c.group->kind() == GroupKind::FreeAbelian)
      opt.backend = Backend::AbelianGeneric;
    else
      throw DomainError("a word-group complex needs --quotient or --tower");
  } else {
    opt.backend = backend_from_string(backend);
    if (opt.backend == Backend::Tower) throw InputError("tower backend needs --tower SPEC");
  }

  BettiReport rep = l2_betti(c, opt);
  nlohmann::json checks;
  const CheckReport euler = euler_check(c, rep);
  const CheckReport b0 = b0_check(c, rep);
  checks["euler"] = check_to_json(euler);
  checks["b0"] = check_to_json(b0);
  bool failed = (euler.applicable && !euler.ok) || (b0.applicable && !b0.ok);
  if (manifold_dim >= 0) {
    rep.flags.duality_dim = manifold_dim;
    const CheckReport duality = poincare_check(rep, manifold_dim);
    checks["poincare"] = check_to_json(duality);
    failed = failed || (duality.applicable && !duality.ok);
  }

  nlohmann::json out = betti_report_to_json(rep);
  out["complex"] = complex_spec;
  out["checks"] = std::move(checks);
  emit(out, f.output);
  return failed ? 1 : 0;
}

int run_verify(const std::string& suite, std::uint64_t seed, int jobs) {
  const std::vector<SuiteResult> results = run_suites(suite, seed, jobs);
  int suites_failed = 0, properties = 0, failures = 0;
  for (const SuiteResult& s : results) {
    for (const PropertyResult& p : s.properties) {
      ++properties;
      std::cout << s.suite << "/" << p.name << ": " << p.cases << " cases, " << p.failures
                << " failures\n";
      if (p.failures > 0) {
        std::cout << "  repro: " << p.repro << "\n";
        failures += p.failures;
      }
    }
    std::cout << s.suite << ": " << (s.ok() ? "PASS" : "FAIL") << "\n";
    if (!s.ok()) ++suites_failed;
  }
  std::cout << "verify: " << (suites_failed == 0 ? "PASS" : "FAIL") << " (" << results.size()
            << " suites, " << properties << " properties, " << failures << " failures)\n";
  return suites_failed == 0 ? 0 : 1;
}

int run_alpha(long long r, long long s, const std::string& bound_text, int digits,
              const std::string& output) {
  const auto bound = parse_big_integer(bound_text);
  if (!bound || *bound < 1) throw InputError("--bound must be a positive integer like 1e100");
  const AlphaReport rep = rationality_report(r, s, *bound, digits);
  emit(alpha_report_to_json(rep), output);
  return 0;
}

int run_trace(const std::string& matrix_path, const std::string& quotient_spec, int moment,
              long cap, const std::string& output) {
  const RingMatrix a = matrix_from_json(load_json_file(matrix_path));
  const QuotientHom q = resolve_quotient(a.group(), quotient_spec);
  const TraceMomentReport rep =
      trace_moment_check(a, q, moment, static_cast<std::size_t>(cap));
  nlohmann::json out = trace_report_to_json(rep);
  out["moment"] = moment;
  emit(out, output);
  return 0;
}

int run_validate(const std::string& complex_spec, const std::string& output) {
  // Registry complexes are valid by construction; for files, build without
  // the load-time validation so the verdict lands in the report (exit 1)
  // rather than in an input error (exit 2).
  const bool registry = complex_spec == "point" || complex_spec.starts_with("torus:") ||
                        complex_spec.starts_with("wedge:") ||
                        complex_spec.starts_with("presentation:");
  const ChainComplex c = registry ? resolve_complex(complex_spec)
                                  : complex_from_json(load_json_file(complex_spec), false);
  const ValidationReport v = validate(c);
  emit(validation_to_json(v), output);
  return v.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact L2-Betti numbers and von Neumann dimensions over group rings"};
  app.require_subcommand(1);

  CommonFlags dim_flags, betti_flags;
  std::string matrix_path, dim_backend = "auto", dim_tower;
  CLI::App* dim = app.add_subcommand("dim-ker", "Kernel dimension of a group-ring matrix");
  dim->add_option("--matrix", matrix_path, "Matrix JSON file")->required();
  dim->add_option("--backend", dim_backend, "finite | abelian | sampled (default: by group)");
  dim->add_option("--tower", dim_tower, "Quotient tower: cyclic:a:b or a JSON file");
  add_common(dim, dim_flags);

  std::string complex_spec, betti_backend = "auto", betti_quotient, betti_tower;
  int manifold_dim = -1;
  CLI::App* betti = app.add_subcommand("betti", "L2-Betti numbers of a chain complex");
  betti->add_option("--complex", complex_spec,
                    "torus:n | wedge:k | point | presentation:file | complex JSON file")
      ->required();
  betti->add_option("--backend", betti_backend, "finite | abelian | sampled | tower");
  betti->add_option("--quotient", betti_quotient, "Push along cyclic:k or a hom JSON file first");
  betti->add_option("--tower", betti_tower, "Tower backend: cyclic:a:b or a JSON file");
  betti->add_option("--manifold-dim", manifold_dim,
                    "Caller-asserted closed-manifold dimension; enables the duality check")
      ->check(CLI::Range(0, 64));
  add_common(betti, betti_flags);

  std::string suite;
  std::uint64_t verify_seed = 0;
  bool verify_seed_given = false;
  int verify_jobs = 1;
  CLI::App* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite,
                     "algebra | dimension | betti | approximation | atiyah | alpha | all")
      ->required();
  verify->add_option("--seed", verify_seed, "Suite seed (default: L2INV_SEED or 0)")
      ->each([&verify_seed_given](const std::string&) { verify_seed_given = true; });
  verify->add_option("--jobs", verify_jobs, "Worker threads")->check(CLI::Range(1, 256));

  long long alpha_r = 0, alpha_s = 0;
  std::string alpha_bound = "100", alpha_output;
  int alpha_digits = 30;
  CLI::App* alpha = app.add_subcommand("alpha", "Certified alpha series evaluation");
  alpha->add_option("--r", alpha_r, "First base, an integer >= 2")->required();
  alpha->add_option("--s", alpha_s, "Second base, an integer >= 2")->required();
  alpha->add_option("--bound", alpha_bound, "Denominator bound to certify against, e.g. 1e100");
  alpha->add_option("--digits", alpha_digits, "Agreeing decimal digits to print")
      ->check(CLI::Range(1, 100000));
  alpha->add_option("--output", alpha_output, "Also write the JSON report to this file");

  std::string trace_matrix, trace_quotient, trace_output;
  int trace_moment = 1;
  long trace_cap = 200000;
  CLI::App* trace = app.add_subcommand("trace", "Compare trace moments across a quotient");
  trace->add_option("--matrix", trace_matrix, "Matrix JSON file")->required();
  trace->add_option("--quotient", trace_quotient, "cyclic:k or a hom JSON file")->required();
  trace->add_option("--moment", trace_moment, "Power m in tr(A^m)")->check(CLI::Range(0, 16));
  trace->add_option("--cap", trace_cap, "Product enumeration cap for the injectivity probe")
      ->check(CLI::Range(1L, 100000000L));
  trace->add_option("--output", trace_output, "Also write the JSON report to this file");

  std::string validate_spec, validate_output;
  CLI::App* validate_cmd = app.add_subcommand("validate-complex", "Check a chain complex");
  validate_cmd->add_option("--complex", validate_spec, "Registry name or complex JSON file")
      ->required();
  validate_cmd->add_option("--output", validate_output, "Also write the JSON report to this file");

  try {
    app.parse(argc, argv);
    if (*dim) return run_dim_ker(matrix_path, dim_backend, dim_tower, dim_flags);
    if (*betti)
      return run_betti(complex_spec, betti_backend, betti_quotient, betti_tower, manifold_dim,
                       betti_flags);
    if (*verify)
      return run_verify(suite, verify_seed_given ? verify_seed : seed_from_env(), verify_jobs);
    if (*alpha) return run_alpha(alpha_r, alpha_s, alpha_bound, alpha_digits, alpha_output);
    if (*trace)
      return run_trace(trace_matrix, trace_quotient, trace_moment, trace_cap, trace_output);
    if (*validate_cmd) return run_validate(validate_spec, validate_output);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  }
}
