#include "l2inv/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "l2inv/alpha.hpp"
#include "l2inv/betti.hpp"
#include "l2inv/chain_complex.hpp"
#include "l2inv/dimension.hpp"
#include "l2inv/errors.hpp"
#include "l2inv/exact_linalg.hpp"
#include "l2inv/group_ring.hpp"
#include "l2inv/json_io.hpp"
#include "l2inv/registry.hpp"

namespace l2inv {

bool SuiteResult::ok() const {
  for (const PropertyResult& p : properties)
    if (p.failures > 0) return false;
  return true;
}

namespace {

using Rng = std::mt19937_64;

long rand_in(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

Rational rand_rational(Rng& rng) {
  return Rational(Int(rand_in(rng, -4, 4)), Int(rand_in(rng, 1, 4)));
}

/// Symmetric group on n letters as an explicit table, permutations in
/// lexicographic order, (a, b) -> a after b.
Group::Ptr symmetric_table(int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, long> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<long>(i);
  const std::size_t m = perms.size();
  std::vector<long> mul(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> comp(static_cast<std::size_t>(n));
      for (int x = 0; x < n; ++x)
        comp[static_cast<std::size_t>(x)] =
            perms[a][static_cast<std::size_t>(perms[b][static_cast<std::size_t>(x)])];
      mul[a * m + b] = index.at(comp);
    }
  return Group::finite_table(std::move(mul));
}

Group::Ptr random_finite_group(Rng& rng) {
  switch (rand_in(rng, 0, 4)) {
    case 0: return Group::cyclic(rand_in(rng, 2, 12));
    case 1: return Group::cyclic_product({rand_in(rng, 2, 4), rand_in(rng, 2, 4)});
    case 2: return symmetric_table(3);
    case 3: return symmetric_table(4);
    default: return Group::cyclic_product({2, rand_in(rng, 2, 3), rand_in(rng, 2, 3)});
  }
}

RingElem random_finite_elem(Rng& rng, const Group::Ptr& g, int max_terms = 3) {
  RingElem x(g);
  const int terms = static_cast<int>(rand_in(rng, 0, max_terms));
  for (int t = 0; t < terms; ++t)
    x.add_term(GroupElement::finite(rand_in(rng, 0, static_cast<long>(g->order()) - 1)),
               rand_rational(rng));
  return x;
}

RingElem random_laurent_elem(Rng& rng, const Group::Ptr& g, int radius, int max_terms = 3) {
  RingElem x(g);
  const int n = g->generator_count();
  const int terms = static_cast<int>(rand_in(rng, 0, max_terms));
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
      e[static_cast<std::size_t>(v)] = static_cast<int>(rand_in(rng, -radius, radius));
    x.add_term(GroupElement::exponents(std::move(e)), rand_rational(rng));
  }
  return x;
}

RingElem random_elem(Rng& rng, const Group::Ptr& g, int radius = 2) {
  return g->is_finite() ? random_finite_elem(rng, g) : random_laurent_elem(rng, g, radius);
}

RingMatrix random_matrix(Rng& rng, const Group::Ptr& g, int rows, int cols, int radius = 2) {
  RingMatrix m(g, rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m.at(i, j) = random_elem(rng, g, radius);
  return m;
}

RingMatrix stack_rows(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out(a.group(), a.rows() + b.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

std::vector<long> cyclic_subgroup_of(const Group& g, long x) {
  std::vector<long> h{g.identity_index()};
  long y = x;
  while (y != g.identity_index()) {
    h.push_back(y);
    y = g.mul(y, x);
  }
  return h;
}

/// One property: runs `body(case_index)` which returns an empty string on
/// success and a repro description on failure.
class Suite {
 public:
  explicit Suite(std::string name) { result_.suite = std::move(name); }

  void property(const std::string& name, int cases,
                const std::function<std::string(int)>& body) {
    PropertyResult p;
    p.name = name;
    p.cases = cases;
    for (int i = 0; i < cases; ++i) {
      std::string failure;
      try {
        failure = body(i);
      } catch (const std::exception& e) {
        failure = std::string("exception: ") + e.what();
      }
      if (!failure.empty()) {
        ++p.failures;
        if (p.repro.empty())
          p.repro = result_.suite + "/" + name + " case " + std::to_string(i) + ": " + failure;
      }
    }
    result_.properties.push_back(std::move(p));
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::uint64_t suite_seed(std::uint64_t seed, const std::string& name) {
  std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
  for (char c : name) h = (h ^ static_cast<std::uint64_t>(c)) * 0x100000001b3ULL;
  return h;
}

SuiteResult run_algebra(std::uint64_t seed) {
  Suite s("algebra");
  Rng rng(suite_seed(seed, "algebra"));

  s.property("ring-associativity-distributivity", 40, [&](int i) -> std::string {
    Group::Ptr g = (i % 2 == 0) ? random_finite_group(rng) : Group::free_abelian(2);
    RingElem a = random_elem(rng, g), b = random_elem(rng, g), c = random_elem(rng, g);
    if ((a * b) * c != a * (b * c)) return "associativity broke on " + a.to_string();
    if (a * (b + c) != a * b + a * c) return "distributivity broke on " + a.to_string();
    return {};
  });

  s.property("star-is-an-anti-automorphism", 40, [&](int i) -> std::string {
    Group::Ptr g = (i % 2 == 0) ? random_finite_group(rng) : Group::free_abelian(2);
    RingElem a = random_elem(rng, g), b = random_elem(rng, g);
    if (star(star(a)) != a) return "star not involutive on " + a.to_string();
    if (star(a * b) != star(b) * star(a)) return "star(ab) != star(b)star(a)";
    if (star(a + b) != star(a) + star(b)) return "star not additive";
    return {};
  });

  s.property("trace-is-cyclic", 30, [&](int i) -> std::string {
    Group::Ptr g = (i % 2 == 0) ? random_finite_group(rng) : Group::free_abelian(2);
    const int n = static_cast<int>(rand_in(rng, 1, 3));
    RingMatrix a = random_matrix(rng, g, n, n), b = random_matrix(rng, g, n, n);
    if (trace_gamma(a * b) != trace_gamma(b * a)) return "tr(AB) != tr(BA)";
    return {};
  });

  s.property("trace-is-faithful-on-positives", 30, [&](int i) -> std::string {
    Group::Ptr g = (i % 2 == 0) ? random_finite_group(rng) : Group::free_abelian(2);
    const int n = static_cast<int>(rand_in(rng, 1, 2));
    RingMatrix a = (i % 5 == 0) ? RingMatrix(g, n, n) : random_matrix(rng, g, n, n);
    const Rational t = trace_gamma(adjoint(a) * a);
    if (t < 0) return "tr(A*A) negative";
    if ((t == 0) != a.is_zero()) return "tr(A*A) = 0 does not match A = 0";
    return {};
  });

  s.property("quotient-push-is-a-ring-map", 30, [&](int) -> std::string {
    Group::Ptr src = Group::free_abelian(2);
    Group::Ptr tgt = Group::cyclic_product({rand_in(rng, 2, 6), rand_in(rng, 2, 6)});
    std::vector<long> images{rand_in(rng, 0, static_cast<long>(tgt->order()) - 1),
                             rand_in(rng, 0, static_cast<long>(tgt->order()) - 1)};
    QuotientHom q(src, tgt, images);
    RingElem a = random_elem(rng, src), b = random_elem(rng, src);
    if (push_to_quotient(a + b, q) != push_to_quotient(a, q) + push_to_quotient(b, q))
      return "push not additive";
    if (push_to_quotient(a * b, q) != push_to_quotient(a, q) * push_to_quotient(b, q))
      return "push not multiplicative";
    if (push_to_quotient(star(a), q) != star(push_to_quotient(a, q)))
      return "push does not commute with star";
    return {};
  });

  return s.take();
}

SuiteResult run_dimension(std::uint64_t seed, int jobs) {
  Suite s("dimension");
  Rng rng(suite_seed(seed, "dimension"));

  s.property("normalization", 20, [&](int i) -> std::string {
    Group::Ptr g = (i % 2 == 0) ? random_finite_group(rng) : Group::free_abelian(1 + i % 3);
    const int n = 1 + i % 3;
    auto dim = [&](const RingMatrix& m) {
      return *(g->is_finite() ? dim_ker_finite(m) : dim_ker_abelian(m)).exact;
    };
    if (dim(RingMatrix(g, n, n)) != n) return "zero matrix kernel is not full";
    if (dim(RingMatrix::identity(g, n)) != 0) return "identity has nonzero kernel";
    return {};
  });

  s.property("bounds-and-row-monotonicity", 25, [&](int) -> std::string {
    Group::Ptr g = random_finite_group(rng);
    const int rows = static_cast<int>(rand_in(rng, 1, 2)),
              cols = static_cast<int>(rand_in(rng, 1, 3));
    RingMatrix a = random_matrix(rng, g, rows, cols), b = random_matrix(rng, g, 1, cols);
    const Rational da = *dim_ker_finite(a).exact;
    if (da < 0 || da > cols) return "dimension escaped [0, cols]";
    if (*dim_ker_finite(stack_rows(a, b)).exact > da) return "adding a row enlarged the kernel";
    return {};
  });

  s.property("block-additivity", 25, [&](int i) -> std::string {
    Group::Ptr g = (i % 2 == 0) ? random_finite_group(rng) : Group::free_abelian(2);
    auto dim = [&](const RingMatrix& m) {
      return *(g->is_finite() ? dim_ker_finite(m) : dim_ker_abelian(m)).exact;
    };
    RingMatrix a = random_matrix(rng, g, rand_in(rng, 1, 2), rand_in(rng, 1, 2));
    RingMatrix b = random_matrix(rng, g, rand_in(rng, 1, 2), rand_in(rng, 1, 2));
    if (dim(direct_sum(a, b)) != dim(a) + dim(b)) return "direct sum not additive";
    return {};
  });

  s.property("kernel-of-adjoint-composition", 25, [&](int i) -> std::string {
    Group::Ptr g = (i % 2 == 0) ? random_finite_group(rng) : Group::free_abelian(2);
    auto dim = [&](const RingMatrix& m) {
      return *(g->is_finite() ? dim_ker_finite(m) : dim_ker_abelian(m)).exact;
    };
    RingMatrix a = random_matrix(rng, g, rand_in(rng, 1, 2), rand_in(rng, 1, 2));
    if (dim(a) != dim(adjoint(a) * a)) return "ker A != ker A*A";
    return {};
  });

  s.property("index-scaling-on-subgroups", 25, [&](int) -> std::string {
    Group::Ptr g = random_finite_group(rng);
    RingMatrix a = random_matrix(rng, g, rand_in(rng, 1, 2), rand_in(rng, 1, 2));
    const ScalingReport rep =
        dim_scaling_check(a, cyclic_subgroup_of(*g, rand_in(rng, 0, static_cast<long>(g->order()) - 1)));
    if (!rep.ok) return "dim_H != index * dim_G";
    if (rep.group_order != rep.index * rep.subgroup_order) return "Lagrange bookkeeping broke";
    return {};
  });

  s.property("table-and-character-routes-agree", 15, [&](int) -> std::string {
    const long k = rand_in(rng, 2, 10);
    Group::Ptr table = Group::cyclic(k);
    Group::Ptr chars = Group::cyclic_product({k});
    RingMatrix a(table, 2, 2), b(chars, 2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const int terms = static_cast<int>(rand_in(rng, 0, 3));
        for (int t = 0; t < terms; ++t) {
          const long e = rand_in(rng, 0, k - 1);
          const Rational c = rand_rational(rng);
          a.at(i, j).add_term(GroupElement::finite(e), c);
          b.at(i, j).add_term(GroupElement::finite(e), c);
        }
      }
    if (*dim_ker_finite(a).exact != *dim_ker_finite(b).exact)
      return "regular representation and character orbits disagree on Z/" + std::to_string(k);
    return {};
  });

  (void)jobs;
  return s.take();
}

ChainComplex random_pushed_complex(Rng& rng, std::string* desc) {
  const int pick = static_cast<int>(rand_in(rng, 0, 3));
  const long k = rand_in(rng, 2, 6);
  if (pick == 0) {
    const int n = static_cast<int>(rand_in(rng, 1, 3));
    ChainComplex c = torus_complex(n);
    *desc = "torus:" + std::to_string(n) + " pushed to cyclic:" + std::to_string(k);
    return push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(k)));
  }
  if (pick == 1) {
    Presentation p;
    p.num_generators = 1;
    p.relators.push_back(Word{std::vector<int>(static_cast<std::size_t>(k), 1)});
    ChainComplex c = presentation_complex(p);
    *desc = "one-relator lens of order " + std::to_string(k);
    return push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(k)));
  }
  if (pick == 2) {
    const int w = static_cast<int>(rand_in(rng, 2, 3));
    ChainComplex c = wedge_complex(w);
    *desc = "wedge:" + std::to_string(w) + " pushed to cyclic:" + std::to_string(k);
    return push_complex(c, resolve_quotient(c.group, "cyclic:" + std::to_string(k)));
  }
  Group::Ptr g = random_finite_group(rng);
  ChainComplex c;
  c.group = g;
  c.ranks = {static_cast<int>(rand_in(rng, 1, 3)), static_cast<int>(rand_in(rng, 1, 3))};
  c.boundaries.push_back(random_matrix(rng, g, c.ranks[0], c.ranks[1]));
  *desc = "random one-boundary complex over a finite group";
  return c;
}

SuiteResult run_betti(std::uint64_t seed, int jobs) {
  Suite s("betti");
  Rng rng(suite_seed(seed, "betti"));
  BettiOptions finite_opt;
  finite_opt.backend = Backend::Finite;
  finite_opt.jobs = jobs;
  BettiOptions abelian_opt;
  abelian_opt.backend = Backend::AbelianGeneric;
  abelian_opt.jobs = jobs;

  s.property("euler-identity", 25, [&](int i) -> std::string {
    if (i < 3) {
      const BettiReport rep = l2_betti(torus_complex(i + 1), abelian_opt);
      const CheckReport chk = euler_check(torus_complex(i + 1), rep);
      if (!chk.ok) return "torus euler: " + chk.message;
      return {};
    }
    std::string desc;
    ChainComplex c = random_pushed_complex(rng, &desc);
    if (rand_in(rng, 0, 2) == 0) {
      std::string desc2;
      ChainComplex other = random_pushed_complex(rng, &desc2);
      if (*other.group == *c.group) c = complex_direct_sum(c, other);
    }
    const CheckReport chk = euler_check(c, l2_betti(c, finite_opt));
    if (!chk.ok) return desc + ": " + chk.message;
    return {};
  });

  s.property("b0-vanishing-and-component-count", 15, [&](int i) -> std::string {
    if (i == 0) {
      const BettiReport rep = l2_betti(point_complex(), finite_opt);
      if (*rep.betti[0].exact != 1) return "point does not have b_0 = 1";
      return {};
    }
    if (i <= 3) {
      const ChainComplex c = torus_complex(i);
      const BettiReport rep = l2_betti(c, abelian_opt);
      if (*rep.betti[0].exact != 0) return "torus b_0 != 0";
      const CheckReport chk = b0_check(c, rep);
      if (!chk.ok) return "torus b0 check: " + chk.message;
      return {};
    }
    std::string desc;
    const ChainComplex c = random_pushed_complex(rng, &desc);
    const CheckReport chk = b0_check(c, l2_betti(c, finite_opt));
    if (!chk.applicable) return {};
    if (!chk.ok) return desc + ": " + chk.message;
    return {};
  });

  s.property("finite-cover-identity", 20, [&](int) -> std::string {
    std::string desc;
    const ChainComplex c = random_pushed_complex(rng, &desc);
    const BettiReport rep = l2_betti(c, finite_opt);
    const std::vector<long> cover = cover_betti(finite_cover_complex(c));
    const long long order = c.group->order();
    for (std::size_t p = 0; p < cover.size(); ++p)
      if (*rep.betti[p].exact != Rational(Int(cover[p]), Int(order)))
        return desc + ": degree " + std::to_string(p) + " disagrees with the cover";
    return {};
  });

  s.property("basis-change-invariance", 20, [&](int i) -> std::string {
    std::string desc;
    ChainComplex c;
    BettiOptions* opt;
    if (i % 3 == 0) {
      c = torus_complex(static_cast<int>(rand_in(rng, 1, 3)));
      desc = "torus";
      opt = &abelian_opt;
    } else {
      c = random_pushed_complex(rng, &desc);
      opt = &finite_opt;
    }
    std::vector<std::vector<BasisUnit>> units;
    for (int r : c.ranks) {
      std::vector<BasisUnit> level;
      for (int j = 0; j < r; ++j) {
        GroupElement e = identity_element(*c.group);
        if (c.group->is_finite())
          e = GroupElement::finite(rand_in(rng, 0, static_cast<long>(c.group->order()) - 1));
        else if (c.group->kind() == GroupKind::FreeAbelian) {
          std::vector<int> exp(static_cast<std::size_t>(c.group->generator_count()));
          for (auto& x : exp) x = static_cast<int>(rand_in(rng, -2, 2));
          e = GroupElement::exponents(std::move(exp));
        }
        level.push_back({e, rand_in(rng, 0, 1) == 0 ? 1 : -1});
      }
      units.push_back(std::move(level));
    }
    const ChainComplex rescaled = rescale_basis(c, units);
    if (betti_report_to_json(l2_betti(c, *opt)) != betti_report_to_json(l2_betti(rescaled, *opt)))
      return desc + ": rescaled report differs";
    return {};
  });

  return s.take();
}

SuiteResult run_approximation(std::uint64_t seed, int jobs) {
  Suite s("approximation");
  Rng rng(suite_seed(seed, "approximation"));

  s.property("tower-tail-and-abelian-limit", 10, [&](int i) -> std::string {
    const int n = 1 + i % 2;
    Group::Ptr g = Group::free_abelian(n);
    const int d = static_cast<int>(rand_in(rng, 1, 2));
    const RingMatrix a = random_matrix(rng, g, d, d, 2);
    const QuotientTower tower = resolve_tower(g, "cyclic:2:64");
    const ApproxReport rep = dim_ker_approx(a, tower, 3, jobs);
    const Rational tol(10LL * d, 64);
    if (rep.tail_diameter >= tol) return "tail diameter too large";
    const Rational exact = *dim_ker_abelian(a).exact;
    Rational err = rep.levels.back().value - exact;
    if (err < 0) err = -err;
    if (err >= tol) return "final level too far from the generic value";
    return {};
  });

  s.property("levels-echo-the-tower", 10, [&](int) -> std::string {
    Group::Ptr g = Group::free_abelian(1);
    const RingMatrix a = random_matrix(rng, g, 1, 1, 2);
    const QuotientTower tower = resolve_tower(g, "cyclic:2:32");
    const ApproxReport rep = dim_ker_approx(a, tower, 3, jobs);
    if (rep.levels.size() != tower.homs.size()) return "level count mismatch";
    for (std::size_t k = 0; k + 1 < rep.levels.size(); ++k)
      if (rep.levels[k].quotient_order >= rep.levels[k + 1].quotient_order)
        return "orders not increasing";
    const DimensionResult d = approx_result(rep);
    if (*d.exact != rep.levels.back().value) return "result is not the last level";
    if (d.backend != "tower") return "wrong backend tag";
    return {};
  });

  s.property("trace-moments-along-quotients", 20, [&](int) -> std::string {
    Group::Ptr g = Group::free_abelian(1);
    const int m = static_cast<int>(rand_in(rng, 0, 3));
    const RingMatrix a = random_matrix(rng, g, 1, 1, 2);
    const QuotientHom wide = resolve_quotient(g, "cyclic:32");
    const TraceMomentReport rep = trace_moment_check(a, wide, m);
    if (rep.injective && *rep.injective && !rep.equal)
      return "injective products but unequal traces";
    if (!rep.equal && !rep.collision && rep.injective.has_value())
      return "unequal traces without a collision witness";
    const QuotientHom narrow = resolve_quotient(g, "cyclic:2");
    const TraceMomentReport rep2 = trace_moment_check(a, narrow, m);
    if (rep2.collision && rep2.injective && *rep2.injective)
      return "collision witness on an allegedly injective range";
    return {};
  });

  return s.take();
}

SuiteResult run_atiyah(std::uint64_t seed, int jobs) {
  Suite s("atiyah");
  Rng rng(suite_seed(seed, "atiyah"));

  s.property("generic-dimension-is-an-integer", 25, [&](int i) -> std::string {
    Group::Ptr g = Group::free_abelian(1 + i % 2);
    const RingMatrix a =
        random_matrix(rng, g, rand_in(rng, 1, 3), rand_in(rng, 1, 3), 2);
    const DimensionResult d = dim_ker_abelian(a);
    const CheckReport chk = atiyah_check(d, FinSet::for_group(*g));
    if (!chk.ok) return "free abelian dimension not an integer: " + chk.message;
    return {};
  });

  s.property("finite-dimension-lies-in-the-order-lattice", 25, [&](int) -> std::string {
    Group::Ptr g = random_finite_group(rng);
    const RingMatrix a = random_matrix(rng, g, rand_in(rng, 1, 2), rand_in(rng, 1, 2));
    const CheckReport chk = atiyah_check(dim_ker_finite(a), FinSet::for_group(*g));
    if (!chk.ok) return chk.message;
    return {};
  });

  s.property("sampled-interval-contains-the-generic-value", 8, [&](int i) -> std::string {
    Group::Ptr g = Group::free_abelian(1 + i % 2);
    const RingMatrix a =
        random_matrix(rng, g, rand_in(rng, 1, 2), rand_in(rng, 1, 2), 2);
    const Rational exact = *dim_ker_abelian(a).exact;
    SampleOptions opt;
    opt.samples = 64;
    opt.seed = suite_seed(i, "sampled");
    opt.jobs = jobs;
    const DimensionResult d = dim_ker_sampled(a, opt);
    if (exact < d.interval->first - Rational(1, 1000) ||
        exact > d.interval->second + Rational(1, 1000))
      return "interval " + rational_to_string(d.interval->first) + ".." +
             rational_to_string(d.interval->second) + " misses " + rational_to_string(exact);
    return {};
  });

  s.property("zero-divisor-dichotomy", 20, [&](int i) -> std::string {
    if (i < 11) {
      const long n = i + 2;
      Group::Ptr g = Group::cyclic(n);
      RingElem a(g), b(g);
      a.add_term(GroupElement::finite(0), 1);
      a.add_term(GroupElement::finite(1), -1);
      for (long t = 0; t < n; ++t) b.add_term(GroupElement::finite(t), 1);
      const ZeroDivisorReport rep = zero_divisor_probe(a, b);
      if (!rep.product_zero) return "(1-g) * (1+...+g^{n-1}) != 0";
      if (*rep.dim_ker_a.exact != Rational(1, n)) return "torsion kernel is not 1/n";
      return {};
    }
    Group::Ptr g = Group::free_abelian(1 + i % 2);
    RingElem a = random_laurent_elem(rng, g, 2);
    while (a.is_zero()) a = random_laurent_elem(rng, g, 2);
    const ZeroDivisorReport rep = zero_divisor_probe(a, random_laurent_elem(rng, g, 2));
    if (!rep.dichotomy_ok || !*rep.dichotomy_ok) return "dichotomy violated for " + a.to_string();
    if (*rep.dim_ker_a.exact != 0) return "nonzero element with nonzero kernel " + a.to_string();
    return {};
  });

  return s.take();
}

SuiteResult run_alpha(std::uint64_t seed) {
  Suite s("alpha");
  Rng rng(suite_seed(seed, "alpha"));

  s.property("tail-majorant-inequality", 150, [&](int i) -> std::string {
    static const long rs[3][2] = {{2, 2}, {2, 3}, {3, 5}};
    const long n = 1 + i % 50, r = rs[i / 50][0], ss = rs[i / 50][1];
    if (euler_phi(n) > n) return "phi(n) > n";
    const Int rn = pow(Int(r), static_cast<unsigned>(n)), sn = pow(Int(ss), static_cast<unsigned>(n));
    if (Rational((rn - 1) * (sn - 1)) < Rational(rn * sn, 4)) return "denominator bound fails";
    return {};
  });

  s.property("enclosures-nest-as-width-shrinks", 8, [&](int i) -> std::string {
    Rational w(1, 10);
    for (int k = 0; k < i; ++k) w /= 10;
    const auto [n1, wide] = alpha_enclosure(2, 3, w);
    const auto [n2, tight] = alpha_enclosure(2, 3, w / 100);
    if (n2 < n1) return "more precision used fewer terms";
    if (tight.lo < wide.lo || tight.hi > wide.hi) return "tighter enclosure escaped wider one";
    if (tight.hi - tight.lo > w / 100) return "width target missed";
    return {};
  });

  s.property("smallest-denominator-matches-brute-force", 40, [&](int) -> std::string {
    const Rational lo(Int(rand_in(rng, 0, 1200)), Int(rand_in(rng, 1, 400)));
    const Rational hi = lo + Rational(Int(1), Int(rand_in(rng, 7, 300)));
    const Rational got = min_denominator_in_interval({lo, hi});
    for (Int q = 1; q <= 10000; ++q) {
      Int p = numerator(lo) * q / denominator(lo);
      while (Rational(p, q) < lo) ++p;
      if (Rational(p, q) <= hi) {
        if (got != Rational(p, q))
          return "interval [" + rational_to_string(lo) + ", " + rational_to_string(hi) +
                 "] expected " + rational_to_string(Rational(p, q)) + " got " +
                 rational_to_string(got);
        return {};
      }
    }
    return denominator(got) > 10000 ? std::string{} : "brute force found nothing but result is small";
  });

  s.property("small-bound-certification", 3, [&](int i) -> std::string {
    if (i == 0) {
      const AlphaReport rep = rationality_report(2, 2, Int(100), 20);
      if (!rep.exceeds_bound) return "alpha(2,2) admitted a denominator <= 100";
      if (rep.enclosure.hi - rep.enclosure.lo > Rational(1, 10000)) return "width target missed";
      return {};
    }
    if (i == 1) {
      const AlphaReport rep = rationality_report(3, 2, Int(50), 15);
      if (rep.enclosure.lo <= 0) return "enclosure lost positivity";
      return {};
    }
    const Rational witness = min_denominator_in_interval({Rational(33, 100), Rational(34, 100)});
    if (witness != Rational(1, 3)) return "witness path broke";
    return {};
  });

  return s.take();
}

}  // namespace

std::vector<SuiteResult> run_suites(const std::string& name, std::uint64_t seed, int jobs) {
  std::vector<SuiteResult> out;
  const bool all = name == "all";
  if (all || name == "algebra") out.push_back(run_algebra(seed));
  if (all || name == "dimension") out.push_back(run_dimension(seed, jobs));
  if (all || name == "betti") out.push_back(run_betti(seed, jobs));
  if (all || name == "approximation") out.push_back(run_approximation(seed, jobs));
  if (all || name == "atiyah") out.push_back(run_atiyah(seed, jobs));
  if (all || name == "alpha") out.push_back(run_alpha(seed));
  if (out.empty())
    throw InputError("unknown suite '" + name +
                     "' (algebra | dimension | betti | approximation | atiyah | alpha | all)");
  return out;
}

}  // namespace l2inv
