#include "l2inv/betti.hpp"

#include <algorithm>
#include <functional>
#include <thread>

#include "l2inv/errors.hpp"
#include "l2inv/exact_linalg.hpp"

namespace l2inv {

Backend backend_from_string(const std::string& name) {
  if (name == "finite") return Backend::Finite;
  if (name == "abelian") return Backend::AbelianGeneric;
  if (name == "sampled") return Backend::AbelianSampled;
  if (name == "tower") return Backend::Tower;
  throw InputError("unknown backend '" + name + "' (finite | abelian | sampled | tower)");
}

std::string backend_to_string(Backend b) {
  switch (b) {
    case Backend::Finite: return "finite";
    case Backend::AbelianGeneric: return "abelian";
    case Backend::AbelianSampled: return "sampled";
    case Backend::Tower: return "tower";
  }
  throw std::logic_error("unreachable backend");
}

namespace {

void parallel_for(std::size_t n, int jobs, const std::function<void(std::size_t)>& body) {
  const int threads_wanted = std::max(1, jobs);
  if (threads_wanted == 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + threads_wanted - 1) / threads_wanted;
  for (int t = 0; t < threads_wanted; ++t) {
    const std::size_t lo = static_cast<std::size_t>(t) * chunk, hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) body(i);
    });
  }
  for (auto& th : pool) th.join();
}

bool group_is_infinite(const Group& g) {
  if (g.kind() == GroupKind::FreeAbelian) return g.generator_count() >= 1;
  return g.kind() == GroupKind::FinitelyGenerated;
}

}  // namespace

BettiReport l2_betti(const ChainComplex& c, const BettiOptions& opt) {
  const ValidationReport v = validate(c);
  if (!v.ok) throw InputError("invalid complex: " + v.message);

  BettiReport rep;
  const int top = c.top_degree();
  if (top < 0) throw InputError("complex has no degrees");

  {
    long long chi = 0, sign = 1;
    for (int p = 0; p <= top; ++p, sign = -sign) chi += sign * c.ranks[static_cast<std::size_t>(p)];
    rep.euler_from_ranks = chi;
  }
  rep.flags.b0_expected_zero = group_is_infinite(*c.group);

  const std::size_t degrees = static_cast<std::size_t>(top) + 1;
  rep.betti.resize(degrees);

  switch (opt.backend) {
    case Backend::Finite:
      parallel_for(degrees, opt.jobs, [&](std::size_t p) {
        rep.betti[p] = dim_ker_finite(laplacian(c, static_cast<int>(p)));
      });
      break;
    case Backend::AbelianGeneric:
      parallel_for(degrees, opt.jobs, [&](std::size_t p) {
        rep.betti[p] = dim_ker_abelian(laplacian(c, static_cast<int>(p)));
      });
      break;
    case Backend::AbelianSampled:
      for (std::size_t p = 0; p < degrees; ++p) {
        SampleOptions s = opt.sample;
        s.jobs = opt.jobs;
        rep.betti[p] = dim_ker_sampled(laplacian(c, static_cast<int>(p)), s);
      }
      break;
    case Backend::Tower: {
      if (!opt.tower) throw InputError("tower backend needs a quotient tower");
      const QuotientTower& tw = *opt.tower;
      if (tw.homs.empty()) throw InputError("tower has no levels");
      for (const QuotientHom& q : tw.homs)
        if (*q.source() != *c.group)
          throw InputError("tower level source does not match the complex group");
      const std::size_t L = tw.homs.size();
      std::vector<std::vector<Rational>> values(degrees, std::vector<Rational>(L));
      std::vector<long long> orders(L);
      parallel_for(L, opt.jobs, [&](std::size_t k) {
        const ChainComplex pushed = push_complex(c, tw.homs[k]);
        const ValidationReport pv = validate(pushed);
        if (!pv.ok)
          throw InputError("pushed complex invalid (relators not killed by the quotient): " +
                           pv.message);
        orders[k] = tw.homs[k].target()->order();
        for (std::size_t p = 0; p < degrees; ++p)
          values[p][k] = *dim_ker_finite(laplacian(pushed, static_cast<int>(p))).exact;
      });
      for (std::size_t p = 0; p < degrees; ++p) {
        ApproxReport ar;
        ar.tail_window = opt.tail_window;
        ar.nested_assertion = tw.nested_assertion;
        ar.class_assertion = tw.class_assertion;
        for (std::size_t k = 0; k < L; ++k) ar.levels.push_back({orders[k], values[p][k]});
        const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(opt.tail_window), L);
        Rational lo = values[p][L - w], hi = lo;
        for (std::size_t k = L - w; k < L; ++k) {
          lo = std::min(lo, values[p][k]);
          hi = std::max(hi, values[p][k]);
        }
        ar.tail_diameter = hi - lo;
        rep.betti[p] = approx_result(ar);
      }
      break;
    }
  }

  bool all_exact = true;
  for (const DimensionResult& d : rep.betti) all_exact = all_exact && d.exact.has_value();
  if (all_exact) {
    Rational e(0);
    int sign = 1;
    for (const DimensionResult& d : rep.betti) {
      e += sign * *d.exact;
      sign = -sign;
    }
    rep.euler_from_betti = e;
  }
  return rep;
}

CheckReport euler_check(const ChainComplex& c, const BettiReport& report) {
  CheckReport out;
  if (!report.euler_from_betti) {
    out.applicable = false;
    out.message = "euler check needs exact values in every degree";
    return out;
  }
  if (static_cast<int>(report.betti.size()) != c.top_degree() + 1)
    throw InputError("report does not match the complex");
  out.ok = *report.euler_from_betti == Rational(report.euler_from_ranks);
  if (!out.ok)
    out.message = "alternating betti sum " + rational_to_string(*report.euler_from_betti) +
                  " != cell count sum " + std::to_string(report.euler_from_ranks);
  return out;
}

CheckReport b0_check(const ChainComplex& c, const BettiReport& report) {
  CheckReport out;
  if (report.betti.empty()) throw InputError("empty report");
  const DimensionResult& b0 = report.betti.front();
  if (!b0.exact || b0.backend == "tower") {
    out.applicable = false;
    out.message = "b0 check needs an exact non-tower backend";
    return out;
  }
  const Group& g = *c.group;
  if (group_is_infinite(g)) {
    out.ok = *b0.exact == 0;
    if (!out.ok)
      out.message = "b_0 = " + rational_to_string(*b0.exact) + " but the group is infinite";
    return out;
  }
  RationalComplex cover;
  if (g.is_finite()) {
    cover = finite_cover_complex(c);
  } else {
    // Free abelian of rank zero: entries are constants, the complex is its
    // own cover.
    cover.ranks = c.ranks;
    for (const RingMatrix& d : c.boundaries) {
      QMatrix m(static_cast<std::size_t>(d.rows()),
                std::vector<Rational>(static_cast<std::size_t>(d.cols()), Rational(0)));
      for (int i = 0; i < d.rows(); ++i)
        for (int j = 0; j < d.cols(); ++j)
          for (const auto& [e, coeff] : d.at(i, j).terms())
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += coeff;
      cover.boundaries.push_back(std::move(m));
    }
  }
  // The union-find count equals b_0 only when every degree-1 column of the
  // cover is an edge, c * (vertex - vertex); guard it instead of guessing.
  if (!cover.boundaries.empty()) {
    const std::size_t cols =
        cover.boundaries[0].empty() ? 0 : cover.boundaries[0][0].size();
    for (std::size_t j = 0; j < cols; ++j) {
      int nonzeros = 0;
      Rational sum(0);
      for (const auto& row : cover.boundaries[0])
        if (row[j] != 0) {
          ++nonzeros;
          sum += row[j];
        }
      if (!(nonzeros == 0 || (nonzeros == 2 && sum == 0))) {
        out.applicable = false;
        out.message = "degree-1 boundary of the cover is not edge-like";
        return out;
      }
    }
  }
  const long long order = g.is_finite() ? g.order() : 1;
  const Rational expected = Rational(Int(component_count(cover)), Int(order));
  out.ok = *b0.exact == expected;
  if (!out.ok)
    out.message = "b_0 = " + rational_to_string(*b0.exact) + " but the cover has " +
                  rational_to_string(expected) + " components per group order";
  return out;
}

CheckReport poincare_check(const BettiReport& report, int n) {
  CheckReport out;
  if (n < 0) throw InputError("manifold dimension must be >= 0");
  auto bounds = [&](int p) -> std::pair<Rational, Rational> {
    if (p < 0 || p >= static_cast<int>(report.betti.size())) return {Rational(0), Rational(0)};
    const DimensionResult& d = report.betti[static_cast<std::size_t>(p)];
    if (d.exact) return {*d.exact, *d.exact};
    if (d.interval) return *d.interval;
    throw InputError("dimension result carries no value");
  };
  for (int p = 0; p <= n; ++p) {
    const auto [alo, ahi] = bounds(p);
    const auto [blo, bhi] = bounds(n - p);
    if (ahi < blo || bhi < alo) {
      out.ok = false;
      out.message = "b_" + std::to_string(p) + " and b_" + std::to_string(n - p) +
                    " are incompatible";
      return out;
    }
  }
  return out;
}

FinSet FinSet::for_group(const Group& g, std::optional<Int> user_lattice) {
  FinSet fin;
  switch (g.kind()) {
    case GroupKind::Finite:
      fin.lattice_denominator = Int(g.order());
      break;
    case GroupKind::FreeAbelian:
      fin.lattice_denominator = 1;
      break;
    case GroupKind::FinitelyGenerated:
      if (!user_lattice)
        throw InputError("finite-subgroup lattice must be supplied for word groups");
      fin.lattice_denominator = *user_lattice;
      break;
  }
  if (user_lattice && g.kind() != GroupKind::FinitelyGenerated) fin.lattice_denominator = *user_lattice;
  if (fin.lattice_denominator < 1) throw InputError("lattice denominator must be >= 1");
  return fin;
}

bool FinSet::contains(const Rational& q) const {
  return denominator(Rational(q * lattice_denominator)) == 1;
}

CheckReport atiyah_check(const DimensionResult& d, const FinSet& fin) {
  CheckReport out;
  if (!d.exact) {
    out.applicable = false;
    out.message = "integrality check needs an exact value";
    return out;
  }
  out.ok = fin.contains(*d.exact);
  if (!out.ok)
    out.message = "dimension " + rational_to_string(*d.exact) + " is not a multiple of 1/" +
                  fin.lattice_denominator.str();
  return out;
}

ZeroDivisorReport zero_divisor_probe(const RingElem& a, const RingElem& b) {
  const Group& g = *a.group();
  if (g.kind() == GroupKind::FinitelyGenerated)
    throw DomainError("zero-divisor probe needs a finite or free abelian group");

  ZeroDivisorReport rep;
  rep.a_zero = a.is_zero();
  rep.b_zero = b.is_zero();
  rep.product_zero = (a * b).is_zero();

  RingMatrix m(a.group(), 1, 1);
  m.at(0, 0) = a;
  rep.dim_ker_a = g.is_finite() ? dim_ker_finite(m) : dim_ker_abelian(m);

  if (!g.is_finite()) {
    const Rational dim = *rep.dim_ker_a.exact;
    bool ok = (dim == 0 || dim == 1) && ((dim == 1) == rep.a_zero);
    if (rep.product_zero && !rep.a_zero && !rep.b_zero) ok = false;
    rep.dichotomy_ok = ok;
  }
  return rep;
}

}  // namespace l2inv
