#include "l2inv/cyclotomic.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

#include "l2inv/errors.hpp"

namespace l2inv {

namespace {

// Dense univariate division, exact by construction for every use below
// (x^m - 1 is a product of cyclotomics, all monic).
std::vector<Int> poly_divide_exact(std::vector<Int> num, const std::vector<Int>& den) {
  const std::size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<Int> quot(dn - dd + 1, Int(0));
  for (std::size_t k = dn - dd + 1; k-- > 0;) {
    Int q = num[k + dd] / den[dd];
    quot[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= q * den[j];
  }
  return quot;
}

}  // namespace

std::vector<Int> cyclotomic_polynomial(long m) {
  static std::map<long, std::vector<Int>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  std::function<std::vector<Int>(long)> compute = [&](long n) -> std::vector<Int> {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    std::vector<Int> num(static_cast<std::size_t>(n) + 1, Int(0));
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    std::vector<Int> result = std::move(num);
    for (long d = 1; d < n; ++d)
      if (n % d == 0) result = poly_divide_exact(std::move(result), compute(d));
    cache[n] = result;
    return result;
  };
  if (m < 1) throw InputError("cyclotomic index must be >= 1");
  return compute(m);
}

CycloRing::CycloRing(long m) : m_(m) {
  std::vector<Int> phi = cyclotomic_polynomial(m);
  degree_ = static_cast<int>(phi.size()) - 1;
  const long max_exp = std::max(m - 1, 2L * degree_ - 2);
  if (max_exp >= degree_) {
    reduced_.resize(static_cast<std::size_t>(max_exp - degree_ + 1));
    // x^degree = -(lower part of Phi); then repeatedly multiply by x.
    std::vector<Int> cur(static_cast<std::size_t>(degree_));
    for (int j = 0; j < degree_; ++j) cur[static_cast<std::size_t>(j)] = -phi[static_cast<std::size_t>(j)];
    reduced_[0] = cur;
    for (std::size_t t = 1; t < reduced_.size(); ++t) {
      std::vector<Int> next(static_cast<std::size_t>(degree_), Int(0));
      const Int top = cur[static_cast<std::size_t>(degree_ - 1)];
      for (int j = degree_ - 1; j > 0; --j) next[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)];
      if (top != 0)
        for (int j = 0; j < degree_; ++j) next[static_cast<std::size_t>(j)] += top * reduced_[0][static_cast<std::size_t>(j)];
      reduced_[t] = next;
      cur = std::move(next);
    }
  }
}

void CycloRing::add_power(Elem& e, long k, const Int& c) const {
  if (c == 0) return;
  if (k < degree_) {
    e[static_cast<std::size_t>(k)] += c;
    return;
  }
  const auto& red = reduced_[static_cast<std::size_t>(k - degree_)];
  for (int j = 0; j < degree_; ++j) e[static_cast<std::size_t>(j)] += c * red[static_cast<std::size_t>(j)];
}

CycloRing::Elem CycloRing::mul(const Elem& a, const Elem& b) const {
  std::vector<Int> buf(static_cast<std::size_t>(2 * degree_ - 1), Int(0));
  for (int i = 0; i < degree_; ++i) {
    if (a[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < degree_; ++j) {
      if (b[static_cast<std::size_t>(j)] == 0) continue;
      buf[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
  }
  Elem out(buf.begin(), buf.begin() + degree_);
  for (int t = degree_; t <= 2 * degree_ - 2; ++t) {
    const Int& c = buf[static_cast<std::size_t>(t)];
    if (c == 0) continue;
    const auto& red = reduced_[static_cast<std::size_t>(t - degree_)];
    for (int j = 0; j < degree_; ++j) out[static_cast<std::size_t>(j)] += c * red[static_cast<std::size_t>(j)];
  }
  return out;
}

bool CycloRing::is_zero(const Elem& e) {
  for (const Int& c : e)
    if (c != 0) return false;
  return true;
}

namespace {

void strip_row_content(std::vector<CycloRing::Elem>& row) {
  Int g = 0;
  for (const auto& e : row)
    for (const Int& c : e) {
      if (c != 0) g = gcd(g, c);
      if (g == 1) return;
    }
  if (g == 0 || g == 1) return;
  for (auto& e : row)
    for (Int& c : e) c /= g;
}

/// Rank of a matrix over the field Q[x]/Phi_m using division-free row
/// operations (row_i := pivot*row_i - factor*row_pivot); scaling a row by a
/// nonzero field element preserves rank.
int cyclo_rank(const CycloRing& ring, std::vector<std::vector<CycloRing::Elem>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  int rank = 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows; ++col) {
    std::size_t pivot_row = rows;
    for (std::size_t i = rank; i < rows; ++i)
      if (!CycloRing::is_zero(m[i][col])) {
        pivot_row = i;
        break;
      }
    if (pivot_row == rows) continue;
    std::swap(m[static_cast<std::size_t>(rank)], m[pivot_row]);
    const std::size_t r = static_cast<std::size_t>(rank);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (CycloRing::is_zero(m[i][col])) continue;
      const CycloRing::Elem factor = m[i][col];
      for (std::size_t j = col + 1; j < cols; ++j)
        m[i][j] = [&] {
          CycloRing::Elem t = ring.mul(m[r][col], m[i][j]);
          CycloRing::Elem u = ring.mul(factor, m[r][j]);
          for (int k = 0; k < ring.degree(); ++k) t[static_cast<std::size_t>(k)] -= u[static_cast<std::size_t>(k)];
          return t;
        }();
      m[i][col] = ring.zero();
      strip_row_content(m[i]);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

long long cyclic_product_expanded_nullity(const RingMatrix& a) {
  const Group& g = *a.group();
  if (!g.is_cyclic_product())
    throw DomainError("character evaluation needs a cyclic-product group");
  const std::vector<long>& ks = g.moduli();
  const std::size_t n = ks.size();
  const long long order = g.order();
  if (a.cols() == 0) return 0;

  // Common denominator out front: scaling the matrix by a nonzero rational
  // does not change any kernel.
  Int den = 1;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      for (const auto& [elem, c] : a.at(i, j).terms()) den = lcm(den, denominator(c));

  std::vector<long> strides(n);
  long long s = 1;
  for (std::size_t l = 0; l < n; ++l) {
    strides[l] = static_cast<long>(s);
    s *= ks[l];
  }
  auto digit = [&](long long idx, std::size_t l) { return (idx / strides[l]) % ks[l]; };

  long L = 1;
  for (long k : ks) L = std::lcm(L, k);
  std::vector<long> units;
  for (long u = 0; u < L; ++u)
    if (std::gcd(u, L) == 1) units.push_back(u);

  std::map<long, std::unique_ptr<CycloRing>> rings;
  std::vector<char> visited(static_cast<std::size_t>(order), 0);
  long long total = 0;

  for (long long t = 0; t < order; ++t) {
    if (visited[static_cast<std::size_t>(t)]) continue;
    // Galois orbit of the character with digit vector j: u.j for u coprime
    // to L.  Conjugate characters give conjugate fiber matrices, hence equal
    // nullity, so one representative serves the whole orbit.
    long long orbit_size = 0;
    for (long u : units) {
      long long tu = 0;
      for (std::size_t l = 0; l < n; ++l)
        tu += ((digit(t, l) * u) % ks[l]) * strides[l];
      if (!visited[static_cast<std::size_t>(tu)]) {
        visited[static_cast<std::size_t>(tu)] = 1;
        ++orbit_size;
      }
    }

    long m = 1;
    for (std::size_t l = 0; l < n; ++l) {
      const long jl = digit(t, l);
      m = std::lcm(m, ks[l] / std::gcd(jl, ks[l]));
    }
    auto& ring = rings[m];
    if (!ring) ring = std::make_unique<CycloRing>(m);

    // Character value of generator l is zeta_m ^ w[l].
    std::vector<long> w(n);
    for (std::size_t l = 0; l < n; ++l) {
      const long jl = digit(t, l);
      const long gl = std::gcd(jl, ks[l]);
      const long ord = ks[l] / gl;
      w[l] = ord == 1 ? 0 : ((m / ord) * (jl / gl)) % m;
    }

    std::vector<std::vector<CycloRing::Elem>> fiber(
        static_cast<std::size_t>(a.rows()),
        std::vector<CycloRing::Elem>(static_cast<std::size_t>(a.cols()), ring->zero()));
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j)
        for (const auto& [elem, c] : a.at(i, j).terms()) {
          long exp = 0;
          for (std::size_t l = 0; l < n; ++l)
            exp = (exp + digit(elem.index(), l) % ks[l] * w[l]) % m;
          ring->add_power(fiber[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], exp,
                          numerator(c) * (den / denominator(c)));
        }

    const int rank = cyclo_rank(*ring, std::move(fiber));
    total += orbit_size * static_cast<long long>(a.cols() - rank);
  }
  return total;
}

}  // namespace l2inv
