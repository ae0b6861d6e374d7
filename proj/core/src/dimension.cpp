#include "l2inv/dimension.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "l2inv/errors.hpp"
#include "l2inv/exact_linalg.hpp"
#include "l2inv/laurent.hpp"

namespace l2inv {

Rational DimensionResult::midpoint() const {
  if (exact) return *exact;
  if (interval) return (interval->first + interval->second) / 2;
  throw InputError("dimension result carries no value");
}

Rational DimensionResult::width() const {
  if (interval) return interval->second - interval->first;
  return Rational(0);
}

DimensionResult dim_ker_finite(const RingMatrix& a) {
  const Group& g = *a.group();
  if (!g.is_finite()) throw DomainError("finite backend needs a finite group");
  const long long order = g.order();
  const long long nullity = expanded_nullity(a);
  DimensionResult out;
  out.exact = Rational(Int(nullity), Int(order));
  out.backend = "finite";
  out.certificate = {
      {"method", g.is_cyclic_product() ? "character-orbits" : "regular-representation"},
      {"group_order", order},
      {"expanded_nullity", nullity},
  };
  return out;
}

DimensionResult dim_ker_abelian(const RingMatrix& a) {
  const Group& g = *a.group();
  if (g.kind() != GroupKind::FreeAbelian)
    throw DomainError("generic-rank backend needs a free abelian group");
  const int rank = generic_rank(a);
  DimensionResult out;
  out.exact = Rational(a.cols() - rank);
  out.backend = "abelian-generic";
  out.certificate = {
      {"method", "generic-rank"},
      {"generic_rank", rank},
      {"variables", g.generator_count()},
  };
  return out;
}

namespace {

/// Floor square root based bound: returns r with r >= sqrt(q), r - sqrt(q) < 1/den(q).
Rational sqrt_upper_bound(const Rational& q) {
  if (q == 0) return Rational(0);
  const Int p = numerator(q), d = denominator(q);
  const Int root = sqrt(Int(p * d));
  return Rational(Int(root + 1), d);
}

}  // namespace

DimensionResult dim_ker_sampled(const RingMatrix& a, const SampleOptions& opt) {
  const Group& g = *a.group();
  if (g.kind() != GroupKind::FreeAbelian)
    throw DomainError("sampled backend needs a free abelian group");
  if (opt.samples < 1) throw InputError("need at least one sample");
  if (opt.svd_tol <= 0 || opt.svd_tol >= 1) throw InputError("svd_tol must lie in (0,1)");

  const long N = opt.samples;
  std::vector<int> nullities(static_cast<std::size_t>(N), 0);
  const int n = g.generator_count();

  auto run_range = [&](long lo, long hi) {
    for (long s = lo; s < hi; ++s) {
      std::mt19937_64 rng(opt.seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(s + 1));
      std::uniform_real_distribution<double> uniform(0.0, 1.0);
      std::vector<std::complex<double>> z(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v)
        z[static_cast<std::size_t>(v)] = std::polar(1.0, 2.0 * M_PI * uniform(rng));
      Eigen::MatrixXcd fiber(a.rows(), a.cols());
      for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
          std::complex<double> acc = 0.0;
          for (const auto& [elem, c] : a.at(i, j).terms()) {
            std::complex<double> term = c.convert_to<double>();
            const auto& e = elem.exponents();
            for (int v = 0; v < n; ++v) {
              const int ev = e[static_cast<std::size_t>(v)];
              for (int t = 0; t < std::abs(ev); ++t)
                term *= ev > 0 ? z[static_cast<std::size_t>(v)]
                               : std::conj(z[static_cast<std::size_t>(v)]);
            }
            acc += term;
          }
          fiber(i, j) = acc;
        }
      int rank = 0;
      if (a.rows() > 0 && a.cols() > 0) {
        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(fiber);
        const auto& sv = svd.singularValues();
        const double smax = sv.size() ? sv(0) : 0.0;
        for (Eigen::Index k = 0; k < sv.size(); ++k)
          if (sv(k) > smax * opt.svd_tol) ++rank;
      }
      nullities[static_cast<std::size_t>(s)] = a.cols() - rank;
    }
  };

  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    run_range(0, N);
  } else {
    std::vector<std::thread> threads;
    const long chunk = (N + jobs - 1) / jobs;
    for (int t = 0; t < jobs; ++t) {
      const long lo = t * chunk, hi = std::min(N, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(run_range, lo, hi);
    }
    for (auto& th : threads) th.join();
  }

  // Exact integer statistics make the output independent of job count.
  long long sum = 0, sumsq = 0;
  for (int v : nullities) {
    sum += v;
    sumsq += static_cast<long long>(v) * v;
  }
  const Rational mean = Rational(Int(sum), Int(N));
  Rational stderr_bound(0);
  if (N > 1) {
    const Rational variance = (Rational(Int(sumsq)) - Rational(Int(sum * sum)) / N) / (N - 1);
    stderr_bound = sqrt_upper_bound(variance / N);
  }
  Rational lo = mean - stderr_bound, hi = mean + stderr_bound;
  lo = std::max(lo, Rational(0));
  hi = std::min(hi, Rational(a.cols()));
  if (lo > hi) std::swap(lo, hi);

  DimensionResult out;
  out.interval = std::make_pair(lo, hi);
  out.backend = "abelian-sampled";
  out.certificate = {
      {"samples", N},
      {"svd_tol", opt.svd_tol},
      {"seed", opt.seed},
      {"mean", rational_to_string(mean)},
      {"stderr_bound", rational_to_string(stderr_bound)},
  };
  return out;
}

ApproxReport dim_ker_approx(const RingMatrix& a, const QuotientTower& tower, int tail_window,
                            int jobs) {
  if (tower.homs.empty()) throw InputError("tower has no levels");
  if (tail_window < 1) throw InputError("tail window must be >= 1");
  for (const QuotientHom& q : tower.homs)
    if (*q.source() != *a.group())
      throw InputError("tower level source does not match the matrix group");

  const std::size_t L = tower.homs.size();
  std::vector<Rational> values(L);
  auto run_range = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t k = lo; k < hi; ++k)
      values[k] = *dim_ker_finite(push_to_quotient(a, tower.homs[k])).exact;
  };
  const int threads_wanted = std::max(1, jobs);
  if (threads_wanted == 1 || L <= 1) {
    run_range(0, L);
  } else {
    std::vector<std::thread> threads;
    const std::size_t chunk = (L + threads_wanted - 1) / threads_wanted;
    for (int t = 0; t < threads_wanted; ++t) {
      const std::size_t lo = static_cast<std::size_t>(t) * chunk, hi = std::min(L, lo + chunk);
      if (lo >= hi) break;
      threads.emplace_back(run_range, lo, hi);
    }
    for (auto& th : threads) th.join();
  }

  ApproxReport rep;
  rep.tail_window = tail_window;
  rep.nested_assertion = tower.nested_assertion;
  rep.class_assertion = tower.class_assertion;
  for (std::size_t k = 0; k < L; ++k)
    rep.levels.push_back({tower.homs[k].target()->order(), values[k]});
  const std::size_t w = std::min<std::size_t>(static_cast<std::size_t>(tail_window), L);
  Rational lo = values[L - w], hi = values[L - w];
  for (std::size_t k = L - w; k < L; ++k) {
    lo = std::min(lo, values[k]);
    hi = std::max(hi, values[k]);
  }
  rep.tail_diameter = hi - lo;
  return rep;
}

DimensionResult approx_result(const ApproxReport& report) {
  DimensionResult out;
  out.exact = report.levels.back().value;
  out.backend = "tower";
  nlohmann::json levels = nlohmann::json::array();
  for (const ApproxLevel& l : report.levels)
    levels.push_back({{"order", l.quotient_order}, {"value", rational_to_string(l.value)}});
  out.certificate = {
      {"levels", levels},
      {"tail_window", report.tail_window},
      {"tail_diameter", rational_to_string(report.tail_diameter)},
      {"nested_assertion", report.nested_assertion},
      {"class_assertion", report.class_assertion},
      {"note", "value is the last level; the limit is not certified"},
  };
  return out;
}

namespace {

RingMatrix free_carrier_matmul(const RingMatrix& a, const RingMatrix& b) {
  RingMatrix out(a.group(), a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        out.at(i, j) = out.at(i, j) + free_carrier_mul(a.at(i, k), b.at(k, j));
      }
    }
  return out;
}

}  // namespace

TraceMomentReport trace_moment_check(const RingMatrix& a, const QuotientHom& q, int m,
                                     std::size_t enumeration_cap) {
  if (a.rows() != a.cols()) throw InputError("moment check needs a square matrix");
  if (m < 0) throw InputError("moment must be >= 0");
  if (*a.group() != *q.source()) throw InputError("hom source does not match the matrix group");

  TraceMomentReport rep;

  if (m == 0) {
    rep.source_trace = rep.pushed_trace = Rational(a.rows());
  } else {
    RingMatrix power = a;
    for (int t = 1; t < m; ++t) power = free_carrier_matmul(power, a);
    rep.source_trace = trace_gamma(power);

    RingMatrix pushed = push_to_quotient(a, q);
    RingMatrix ppower = pushed;
    for (int t = 1; t < m; ++t) ppower = ppower * pushed;
    rep.pushed_trace = trace_gamma(ppower);
  }
  rep.equal = rep.source_trace == rep.pushed_trace;

  // Injectivity diagnosis on products of at most m support words.
  std::set<GroupElement> support;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (const auto& [g, c] : a.at(i, j).terms()) support.insert(g);

  const Group& src = *a.group();
  std::set<GroupElement> seen{identity_element(src)};
  std::map<long, GroupElement> image_of;
  image_of[q.map_index(identity_element(src))] = identity_element(src);
  std::vector<GroupElement> frontier(seen.begin(), seen.end());
  bool truncated = false;
  for (int level = 1; level <= m && !rep.collision && !truncated; ++level) {
    std::vector<GroupElement> next;
    for (const GroupElement& p : frontier) {
      for (const GroupElement& w : support) {
        GroupElement prod = element_mul(src, p, w);
        if (seen.count(prod)) continue;
        if (seen.size() >= enumeration_cap) {
          truncated = true;
          break;
        }
        seen.insert(prod);
        next.push_back(prod);
        const long img = q.map_index(prod);
        auto [it, inserted] = image_of.try_emplace(img, prod);
        if (!inserted) {
          rep.collision = CollisionWitness{element_to_string(src, it->second),
                                           element_to_string(src, prod), img};
          break;
        }
      }
      if (rep.collision || truncated) break;
    }
    frontier = std::move(next);
  }
  if (rep.collision)
    rep.injective = false;
  else if (!truncated)
    rep.injective = true;
  return rep;
}

ScalingReport dim_scaling_check(const RingMatrix& a, const std::vector<long>& subgroup) {
  const Group& g = *a.group();
  if (!g.is_finite()) throw DomainError("scaling check needs a finite group");
  std::set<long> h(subgroup.begin(), subgroup.end());
  if (h.empty()) throw InputError("subgroup list is empty");
  for (long x : h)
    if (x < 0 || x >= g.order()) throw InputError("subgroup element out of range");
  if (!h.count(g.identity_index())) throw InputError("subgroup does not contain the identity");
  for (long x : h) {
    if (!h.count(g.inv(x))) throw InputError("subgroup not closed under inverses");
    for (long y : h)
      if (!h.count(g.mul(x, y))) throw InputError("subgroup not closed under multiplication");
  }

  ScalingReport rep;
  rep.group_order = g.order();
  rep.subgroup_order = static_cast<long long>(h.size());
  if (rep.group_order % rep.subgroup_order != 0)
    throw InputError("subgroup order does not divide the group order");
  rep.index = rep.group_order / rep.subgroup_order;

  const long long nullity = expanded_nullity(a);
  rep.dim_group = Rational(Int(nullity), Int(rep.group_order));
  rep.dim_subgroup = Rational(Int(nullity), Int(rep.subgroup_order));
  rep.ok = rep.dim_subgroup == rep.dim_group * rep.index;
  return rep;
}

}  // namespace l2inv
