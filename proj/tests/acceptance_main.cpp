// Acceptance gate for the dimension library and its command line tool.  Each
// criterion prints exactly one PASS or FAIL line; the process exits nonzero
// if any of them fail.  Every tolerance and budget is pinned right here.

#include <l2inv/alpha.hpp>
#include <l2inv/betti.hpp>
#include <l2inv/json_io.hpp>
#include <l2inv/registry.hpp>

#include <nlohmann/json.hpp>

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace l2inv;
using nlohmann::json;

namespace {

// Pinned budgets and tolerances.
constexpr long long kTorusRunBudgetMs = 1000;        // criterion 1, per run
constexpr long long kQuotientBudgetMs = 30000;       // criterion 2, total
constexpr int kQuotientCases = 25;                   // criterion 2
constexpr int kEulerRandomCases = 50;                // criterion 3
constexpr int kTowerCases = 20;                      // criterion 4
const Rational kTowerToleranceScale(10, 256);        // criterion 4: 10 d / 256
constexpr int kAtiyahCases = 100;                    // criterion 5
constexpr long long kAtiyahSamples = 4096;           // criterion 5
const Rational kSampleTolerance(1, 1000);            // criterion 5
constexpr int kZeroDivisorCases = 100;               // criterion 6
constexpr int kAxiomTrials = 40;                     // criterion 7
constexpr long long kAlphaBudgetMs = 60000;          // criterion 8
constexpr int kAlphaDigits = 250;                    // criterion 8
constexpr int kStableDigits = 50;                    // criterion 8
constexpr int kRescalingCases = 20;                  // criterion 9
constexpr std::uint64_t kSeed = 20260814;

struct CliResult {
  int exit_code = -1;
  std::string out;
  long long elapsed_ms = 0;
};

CliResult run_cli(const std::string& args) {
  const std::string command = std::string(L2INV_CLI_PATH) + " " + args + " 2>/dev/null";
  CliResult r;
  const auto t0 = std::chrono::steady_clock::now();
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

// First `digits` decimal places of x in (0, 1), truncated.
std::string decimal_prefix(const Rational& x, int digits) {
  Int scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const Rational scaled = x * Rational(scale);
  Int f = numerator(scaled) / denominator(scaled);
  std::string body = f.str();
  while (static_cast<int>(body.size()) < digits) body.insert(body.begin(), '0');
  return "0." + body;
}

RingElem random_laurent(std::mt19937_64& rng, const Group::Ptr& g, int radius, int max_terms) {
  std::uniform_int_distribution<int> expo(-radius, radius);
  std::uniform_int_distribution<long long> coeff(-4, 4);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  RingElem e(g);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<int> v(static_cast<std::size_t>(g->generator_count()));
    for (auto& x : v) x = expo(rng);
    const Rational c(coeff(rng));
    if (c != 0) e.add_term(GroupElement::exponents(v), c);
  }
  return e;
}

RingMatrix random_laurent_matrix(std::mt19937_64& rng, const Group::Ptr& g, int max_dim,
                                 int radius) {
  std::uniform_int_distribution<int> dim(1, max_dim);
  const int rows = dim(rng), cols = dim(rng);
  RingMatrix a(g, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) a.at(i, j) = random_laurent(rng, g, radius, 3);
  return a;
}

RingElem random_finite_elem(std::mt19937_64& rng, const Group::Ptr& g, int max_terms) {
  std::uniform_int_distribution<long long> idx(0, g->order() - 1);
  std::uniform_int_distribution<long long> coeff(-4, 4);
  std::uniform_int_distribution<int> nterms(0, max_terms);
  RingElem e(g);
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    const Rational c(coeff(rng));
    if (c != 0) e.add_term(GroupElement::finite(idx(rng)), c);
  }
  return e;
}

Group::Ptr random_small_group(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 5);
  switch (pick(rng)) {
    case 0: return Group::cyclic(std::uniform_int_distribution<long>(2, 24)(rng));
    case 1: return Group::cyclic_product({2, 3});
    case 2: return Group::cyclic_product({2, 2, 2});
    case 3: return Group::cyclic_product({4, 3});
    case 4: return Group::cyclic_product({2, 12});
    default: return Group::cyclic_product({3, 3});
  }
}

ChainComplex lens_mod(int n) {
  Presentation p;
  p.num_generators = 1;
  p.relators = {Word{std::vector<int>(static_cast<std::size_t>(n), 1)}};
  const ChainComplex c = presentation_complex(p);
  return push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(n)));
}

// A pushed geometric complex over a finite group, drawn from the families
// whose covers are honest cell complexes.
ChainComplex random_finite_geometric(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> small(2, 6);
  switch (pick(rng)) {
    case 0: {
      const ChainComplex c = torus_complex(1);
      return push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(small(rng))));
    }
    case 1: {
      const ChainComplex c = torus_complex(2);
      std::uniform_int_distribution<int> k(2, 4);
      return push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(k(rng))));
    }
    case 2: return lens_mod(small(rng));
    default: {
      const ChainComplex w = wedge_complex(small(rng) - 1);
      return push_complex(w, resolve_quotient(w.group, "cyclic:" + std::to_string(small(rng))));
    }
  }
}

ChainComplex random_one_boundary_complex(std::mt19937_64& rng) {
  const Group::Ptr g = random_small_group(rng);
  std::uniform_int_distribution<int> dim(1, 3);
  const int rows = dim(rng), cols = dim(rng);
  RingMatrix d(g, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) d.at(i, j) = random_finite_elem(rng, g, 3);
  ChainComplex c;
  c.group = g;
  c.ranks = {rows, cols};
  c.boundaries = {d};
  return c;
}

bool report_all_exact(const BettiReport& rep) {
  for (const auto& b : rep.betti)
    if (!b.exact) return false;
  return true;
}

// ---------------------------------------------------------------- criteria

bool criterion_flat_torus(std::string& note) {
  for (int n = 1; n <= 3; ++n) {
    const CliResult r =
        run_cli("betti --complex torus:" + std::to_string(n) + " --backend abelian");
    if (r.exit_code != 0) {
      note = "torus:" + std::to_string(n) + " exited " + std::to_string(r.exit_code);
      return false;
    }
    if (r.elapsed_ms >= kTorusRunBudgetMs) {
      note = "torus:" + std::to_string(n) + " took " + std::to_string(r.elapsed_ms) + " ms";
      return false;
    }
    const json j = json::parse(r.out);
    if (static_cast<int>(j["betti"].size()) != n + 1) {
      note = "wrong degree count";
      return false;
    }
    for (const auto& b : j["betti"])
      if (b["value"] != "0") {
        note = "nonzero value " + b["value"].dump() + " at torus:" + std::to_string(n);
        return false;
      }
  }
  return true;
}

bool criterion_finite_quotients(std::string& note) {
  std::mt19937_64 rng(kSeed + 2);
  const auto t0 = std::chrono::steady_clock::now();
  BettiOptions finite;
  finite.backend = Backend::Finite;
  for (int trial = 0; trial < kQuotientCases; ++trial) {
    std::uniform_int_distribution<int> pick(0, 3);
    ChainComplex pushed;
    switch (pick(rng)) {
      case 0: {
        const ChainComplex c = torus_complex(1);
        std::uniform_int_distribution<int> k(2, 24);
        pushed = push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(k(rng))));
        break;
      }
      case 1: {
        const ChainComplex c = torus_complex(2);
        std::uniform_int_distribution<int> k(2, 4);
        pushed = push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(k(rng))));
        break;
      }
      case 2: {
        std::uniform_int_distribution<int> n(2, 12);
        pushed = lens_mod(n(rng));
        break;
      }
      default: {
        Presentation p;
        p.num_generators = 2;
        p.relators = {word_from_string("a b a- b-", 2)};
        const ChainComplex c = presentation_complex(p);
        std::uniform_int_distribution<int> k(2, 4);
        pushed = push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(k(rng))));
        break;
      }
    }
    const long order = pushed.group->order();
    const BettiReport rep = l2_betti(pushed, finite);
    const std::vector<long> cb = cover_betti(finite_cover_complex(pushed));
    for (std::size_t p = 0; p < rep.betti.size(); ++p) {
      if (*rep.betti[p].exact != Rational(Int(cb[p]), Int(order))) {
        note = "trial " + std::to_string(trial) + " degree " + std::to_string(p) + ": " +
               rational_to_string(*rep.betti[p].exact) + " vs cover " + std::to_string(cb[p]) +
               "/" + std::to_string(order);
        return false;
      }
    }
  }
  const auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  if (ms >= kQuotientBudgetMs) {
    note = "took " + std::to_string(ms) + " ms";
    return false;
  }
  return true;
}

bool criterion_euler(std::string& note) {
  BettiOptions finite;
  finite.backend = Backend::Finite;
  BettiOptions abelian;
  abelian.backend = Backend::AbelianGeneric;

  std::vector<std::pair<std::string, ChainComplex>> fixtures;
  fixtures.emplace_back("point", point_complex());
  for (int n = 1; n <= 3; ++n)
    fixtures.emplace_back("torus:" + std::to_string(n), torus_complex(n));
  fixtures.emplace_back("wedge:1", wedge_complex(1));
  for (int k = 2; k <= 4; ++k) {
    const ChainComplex w = wedge_complex(k);
    fixtures.emplace_back("wedge:" + std::to_string(k) + " mod 3",
                          push_complex(w, resolve_quotient(w.group, "cyclic:3")));
  }
  for (int n = 2; n <= 4; ++n)
    fixtures.emplace_back("lens " + std::to_string(n), lens_mod(n));

  for (const auto& [name, c] : fixtures) {
    const BettiOptions& opt = c.group->is_finite() ? finite : abelian;
    const BettiReport rep = l2_betti(c, opt);
    const CheckReport chk = euler_check(c, rep);
    if (!chk.applicable || !chk.ok) {
      note = name + ": " + chk.message;
      return false;
    }
  }

  std::mt19937_64 rng(kSeed + 3);
  for (int trial = 0; trial < kEulerRandomCases; ++trial) {
    std::uniform_int_distribution<int> pick(0, 2);
    ChainComplex c;
    switch (pick(rng)) {
      case 0: c = random_one_boundary_complex(rng); break;
      case 1: c = random_finite_geometric(rng); break;
      default: {
        const ChainComplex a = random_finite_geometric(rng);
        // The summands must share a group for the direct sum to make sense;
        // reuse the same draw twice.
        c = complex_direct_sum(a, a);
        break;
      }
    }
    const BettiReport rep = l2_betti(c, finite);
    const CheckReport chk = euler_check(c, rep);
    if (!chk.applicable || !chk.ok) {
      note = "random trial " + std::to_string(trial) + ": " + chk.message;
      return false;
    }
    if (!report_all_exact(rep)) {
      note = "random trial " + std::to_string(trial) + ": inexact finite backend value";
      return false;
    }
  }
  return true;
}

bool criterion_tower(std::string& note) {
  std::mt19937_64 rng(kSeed + 4);
  for (int trial = 0; trial < kTowerCases; ++trial) {
    const Group::Ptr g = (trial % 2 == 0) ? Group::free_abelian(1) : Group::free_abelian(2);
    const RingMatrix a = random_laurent_matrix(rng, g, 3, 2);
    const Rational tolerance = kTowerToleranceScale * Rational(Int(a.cols()));
    const QuotientTower tower = resolve_tower(g, "cyclic:2:256");
    const ApproxReport rep = dim_ker_approx(a, tower);
    if (!(rep.tail_diameter < tolerance)) {
      note = "trial " + std::to_string(trial) +
             ": tail diameter " + rational_to_string(rep.tail_diameter);
      return false;
    }
    const Rational final_value = rep.levels.back().value;
    const Rational exact = *dim_ker_abelian(a).exact;
    const Rational gap = final_value > exact ? final_value - exact : exact - final_value;
    if (!(gap < tolerance)) {
      note = "trial " + std::to_string(trial) + ": final " + rational_to_string(final_value) +
             " vs abelian " + rational_to_string(exact);
      return false;
    }
  }
  return true;
}

bool criterion_atiyah(std::string& note) {
  std::mt19937_64 rng(kSeed + 5);
  std::uniform_int_distribution<int> rank(1, 3);
  SampleOptions sample;
  sample.samples = kAtiyahSamples;
  sample.jobs = 4;
  for (int trial = 0; trial < kAtiyahCases; ++trial) {
    const Group::Ptr g = Group::free_abelian(rank(rng));
    const RingMatrix a = random_laurent_matrix(rng, g, 4, 2);
    const DimensionResult exact = dim_ker_abelian(a);
    if (denominator(*exact.exact) != 1) {
      note = "trial " + std::to_string(trial) + ": non-integer " +
             rational_to_string(*exact.exact);
      return false;
    }
    const DimensionResult sampled = dim_ker_sampled(a, sample);
    const Rational lo = sampled.interval->first - kSampleTolerance;
    const Rational hi = sampled.interval->second + kSampleTolerance;
    if (*exact.exact < lo || *exact.exact > hi) {
      note = "trial " + std::to_string(trial) + ": interval misses " +
             rational_to_string(*exact.exact);
      return false;
    }
  }
  return true;
}

bool criterion_zero_divisors(std::string& note) {
  std::mt19937_64 rng(kSeed + 6);
  for (int trial = 0; trial < kZeroDivisorCases; ++trial) {
    const Group::Ptr g = Group::free_abelian(trial % 2 == 0 ? 1 : 2);
    RingElem a = random_laurent(rng, g, 2, 4);
    while (a.is_zero()) a = random_laurent(rng, g, 2, 4);
    RingMatrix m(g, 1, 1);
    m.at(0, 0) = a;
    if (*dim_ker_abelian(m).exact != 0) {
      note = "trial " + std::to_string(trial) + ": nonzero element with positive kernel";
      return false;
    }
  }
  for (long n = 2; n <= 12; ++n) {
    const Group::Ptr g = Group::cyclic(n);
    const RingElem a = RingElem::one(g) - RingElem::unit(g, GroupElement::finite(1));
    RingElem b(g);
    for (long k = 0; k < n; ++k) b.add_term(GroupElement::finite(k), Rational(1));
    if (!(a * b).is_zero()) {
      note = "torsion pair at n = " + std::to_string(n) + " does not annihilate";
      return false;
    }
    RingMatrix m(g, 1, 1);
    m.at(0, 0) = a;
    if (*dim_ker_finite(m).exact != Rational(1, n)) {
      note = "torsion kernel at n = " + std::to_string(n) + " is not 1/n";
      return false;
    }
  }
  return true;
}

bool criterion_axioms(std::string& note) {
  std::mt19937_64 rng(kSeed + 7);
  for (int trial = 0; trial < kAxiomTrials; ++trial) {
    const Group::Ptr g = random_small_group(rng);
    std::uniform_int_distribution<int> dim(1, 3);
    const int n = dim(rng);

    // Normalization.
    if (*dim_ker_finite(RingMatrix(g, n, n)).exact != n ||
        *dim_ker_finite(RingMatrix::identity(g, n)).exact != 0) {
      note = "normalization failed";
      return false;
    }

    RingMatrix a(g, n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a.at(i, j) = random_finite_elem(rng, g, 3);

    // Monotone bound.
    const Rational d = *dim_ker_finite(a).exact;
    if (d < 0 || d > n) {
      note = "dimension out of range";
      return false;
    }

    // Faithfulness through the trace form.
    const Rational t = trace_gamma(adjoint(a) * a);
    if ((t == 0) != a.is_zero()) {
      note = "trace form not faithful";
      return false;
    }

    // Block additivity.
    RingMatrix b(g, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) b.at(i, j) = random_finite_elem(rng, g, 3);
    const Rational sum = *dim_ker_finite(direct_sum(a, b)).exact;
    if (sum != d + *dim_ker_finite(b).exact) {
      note = "direct sum not additive";
      return false;
    }

    // Index scaling along the cyclic subgroup generated by a random element.
    std::uniform_int_distribution<long long> pick(0, g->order() - 1);
    const long long x = pick(rng);
    const long e = g->identity_index();
    std::vector<long> subgroup = {e};
    long cur = static_cast<long>(x);
    while (cur != e) {
      subgroup.push_back(cur);
      cur = element_mul(*g, GroupElement::finite(cur), GroupElement::finite(x)).index();
    }
    const ScalingReport scaling = dim_scaling_check(a, subgroup);
    if (!scaling.ok) {
      note = "index scaling failed at index " + std::to_string(scaling.index);
      return false;
    }
  }
  return true;
}

bool criterion_alpha(std::string& note) {
  const CliResult r = run_cli("alpha --r 2 --s 2 --bound 1e100 --digits " +
                              std::to_string(kAlphaDigits));
  if (r.exit_code != 0) {
    note = "exit " + std::to_string(r.exit_code);
    return false;
  }
  if (r.elapsed_ms >= kAlphaBudgetMs) {
    note = "took " + std::to_string(r.elapsed_ms) + " ms";
    return false;
  }
  const json j = json::parse(r.out);
  if (j["exceeds_bound"] != true) {
    note = "bound not certified";
    return false;
  }
  const Rational lo = rational_from_json(j["enclosure"]["lo"]);
  const Rational hi = rational_from_json(j["enclosure"]["hi"]);
  Int bound_sq = 1;
  for (int i = 0; i < 200; ++i) bound_sq *= 10;
  if (!(hi - lo < Rational(Int(1), bound_sq))) {
    note = "enclosure wider than 1/bound^2";
    return false;
  }

  // Digit stability: the N-term and 2N-term runs print the same leading
  // digits.
  const long long n_terms = j["terms_used"].get<long long>();
  const RationalInterval first = alpha_enclosure_terms(2, 2, n_terms);
  const RationalInterval second = alpha_enclosure_terms(2, 2, 2 * n_terms);
  const std::string d1 = decimal_prefix(first.lo, kStableDigits);
  const std::string d2 = decimal_prefix(second.lo, kStableDigits);
  if (d1 != d2) {
    note = "digits drifted: " + d1 + " vs " + d2;
    return false;
  }
  return true;
}

bool criterion_rescaling(std::string& note) {
  std::mt19937_64 rng(kSeed + 9);
  BettiOptions finite;
  finite.backend = Backend::Finite;
  BettiOptions abelian;
  abelian.backend = Backend::AbelianGeneric;
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < kRescalingCases; ++trial) {
    const bool torus_case = trial % 2 == 0;
    const ChainComplex c =
        torus_case ? torus_complex(trial % 4 == 0 ? 1 : 2) : random_finite_geometric(rng);
    const BettiOptions& opt = c.group->is_finite() ? finite : abelian;

    std::vector<std::vector<BasisUnit>> units;
    for (const int r : c.ranks) {
      std::vector<BasisUnit> layer;
      for (int i = 0; i < r; ++i) {
        GroupElement e = identity_element(*c.group);
        if (c.group->is_finite()) {
          std::uniform_int_distribution<long long> idx(0, c.group->order() - 1);
          e = GroupElement::finite(idx(rng));
        } else {
          std::uniform_int_distribution<int> expo(-2, 2);
          std::vector<int> v(static_cast<std::size_t>(c.group->generator_count()));
          for (auto& x : v) x = expo(rng);
          e = GroupElement::exponents(v);
        }
        layer.push_back({e, coin(rng) ? 1 : -1});
      }
      units.push_back(std::move(layer));
    }
    const ChainComplex rescaled = rescale_basis(c, units);
    const json before = betti_report_to_json(l2_betti(c, opt));
    const json after = betti_report_to_json(l2_betti(rescaled, opt));
    if (before.dump() != after.dump()) {
      note = "trial " + std::to_string(trial) + ": reports differ";
      return false;
    }
  }
  return true;
}

struct Criterion {
  const char* name;
  bool (*run)(std::string&);
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"flat torus Betti numbers vanish through the CLI", criterion_flat_torus},
      {"finite quotients match their covers exactly", criterion_finite_quotients},
      {"Euler characteristic equals the alternating Betti sum", criterion_euler},
      {"cyclic towers converge within the pinned envelope", criterion_tower},
      {"Laurent kernels are integers and sampling brackets them", criterion_atiyah},
      {"nonzero elements have trivial kernels and torsion pairs do not", criterion_zero_divisors},
      {"dimension axioms hold on randomized finite groups", criterion_axioms},
      {"the alpha series enclosure certifies the huge denominator", criterion_alpha},
      {"unit rescalings leave every report byte identical", criterion_rescaling},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    const bool ok = criteria[i].run(note);
    std::cout << "criterion " << (i + 1) << " (" << criteria[i].name
              << "): " << (ok ? "PASS" : "FAIL") << (note.empty() ? "" : "  [" + note + "]")
              << std::endl;
    if (!ok) ++failures;
  }
  if (failures > 0) std::cout << failures << " criteria failed" << std::endl;
  return failures == 0 ? 0 : 1;
}
