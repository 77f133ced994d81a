#include "diagmon/counting.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diagmon {

namespace {

std::mutex memo_mutex;

std::vector<std::vector<BigCount>>& stirling_rows() {
  static std::vector<std::vector<BigCount>> rows{{BigCount(1)}};
  return rows;
}

BigCount stirling_unchecked(unsigned n, unsigned r) {
  if (r > n) return 0;
  std::lock_guard<std::mutex> lock(memo_mutex);
  auto& rows = stirling_rows();
  while (rows.size() <= n) {
    const auto& prev = rows.back();
    unsigned m = static_cast<unsigned>(rows.size());
    std::vector<BigCount> row(m + 1, BigCount(0));
    for (unsigned k = 1; k <= m; ++k) {
      BigCount left = k < prev.size() ? prev[k] : BigCount(0);
      row[k] = BigCount(k) * left + prev[k - 1];
    }
    rows.push_back(std::move(row));
  }
  return rows[n][r];
}

BigCount binomial0(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigCount power(unsigned base, unsigned e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, e);
  return out;
}

BigCount two_pow(unsigned long e) {
  BigCount out;
  mpz_ui_pow_ui(out.get_mpz_t(), 2, e);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

BigCount factorial(unsigned n) {
  BigCount out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigCount binomial(unsigned n, unsigned k) {
  require(k <= n, "binomial: k > n");
  return binomial0(n, k);
}

BigCount stirling2(unsigned n, unsigned r) {
  require(r <= n, "stirling2: r > n");
  return stirling_unchecked(n, r);
}

BigCount bell(unsigned n) {
  BigCount sum = 0;
  for (unsigned r = 0; r <= n; ++r) sum += stirling_unchecked(n, r);
  return sum;
}

BigCount catalan(unsigned n) {
  BigCount out = binomial0(2 * n, n);
  out /= n + 1;
  return out;
}

BigCount double_factorial(long k) {
  require(k >= -1, "double_factorial: k < -1");
  BigCount out = 1;
  for (long i = k; i > 1; i -= 2) out *= static_cast<unsigned long>(i);
  return out;
}

BigCount fibonacci(unsigned n) {
  BigCount out;
  mpz_fib_ui(out.get_mpz_t(), n);
  return out;
}

BigCount derangements(unsigned m) {
  BigCount prev2 = 1, prev1 = 0;
  if (m == 0) return prev2;
  for (unsigned k = 2; k <= m; ++k) {
    BigCount next = BigCount(k - 1) * (prev1 + prev2);
    prev2 = std::move(prev1);
    prev1 = std::move(next);
  }
  return prev1;
}

BigCount catalan_c(unsigned i) { return i % 2 ? BigCount(0) : catalan(i / 2); }

BigCount rank_ideal(Family f, unsigned n, unsigned r) {
  switch (f) {
    case Family::Partition: {
      require(r + 1 <= n, "rank_ideal: need r <= n-1");
      BigCount sum = 0;
      for (unsigned j = r; j <= n; ++j) sum += stirling_unchecked(n, j) * binomial0(j, r);
      return sum;
    }
    case Family::Brauer: {
      require(r + 2 <= n, "rank_ideal: need r <= n-2");
      require((n - r) % 2 == 0, "rank_ideal: parity of n-r must be even");
      unsigned k = (n - r) / 2;
      BigCount den = two_pow(k) * factorial(k) * factorial(r);
      BigCount out = factorial(n);
      mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), den.get_mpz_t());
      return out;
    }
    case Family::Jones: {
      require(r + 2 <= n, "rank_ideal: need r <= n-2");
      require((n - r) % 2 == 0, "rank_ideal: parity of n-r must be even");
      unsigned k = (n - r) / 2;
      BigCount out = BigCount(r + 1) * binomial0(n + 1, k);
      BigCount den = n + 1;
      mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), den.get_mpz_t());
      return out;
    }
    case Family::FullTransformation:
    case Family::SingularTransformation:
      require(r >= 1 && r + 1 <= n, "rank_ideal: need 1 <= r <= n-1");
      return r == 1 ? BigCount(n) : stirling_unchecked(n, r);
    case Family::PlanarPartition:
      break;
  }
  throw std::invalid_argument("rank_ideal: no formula for this family");
}

BigCount rank_ideal_partition_alt(unsigned n, unsigned r) {
  require(r + 1 <= n, "rank_ideal: need r <= n-1");
  BigCount sum = 0;
  for (unsigned j = r; j <= n; ++j)
    sum += binomial0(n, j) * stirling_unchecked(j, r) * bell(n - j);
  return sum;
}

BigCount jones_rho(unsigned n, unsigned r) {
  if (r > n || (n - r) % 2) return 0;
  if (r == n) return 1;
  if (r == 0) return catalan_c(n);
  static std::map<std::pair<unsigned, unsigned>, BigCount> memo;
  {
    std::lock_guard<std::mutex> lock(memo_mutex);
    auto it = memo.find({n, r});
    if (it != memo.end()) return it->second;
  }
  BigCount v = jones_rho(n - 1, r - 1) + jones_rho(n - 1, r + 1);
  std::lock_guard<std::mutex> lock(memo_mutex);
  memo.emplace(std::make_pair(n, r), v);
  return v;
}

BigCount jones_rho_alt(unsigned n, unsigned r) {
  if (r > n) return 0;
  if (r == n) return 1;
  if (r == 0) return catalan_c(n);
  BigCount sum = 0;
  for (unsigned i = 1; i <= n; ++i) sum += catalan_c(i - 1) * jones_rho_alt(n - i, r - 1);
  return sum;
}

BigCount strong_tournaments_w(unsigned n) {
  require(n >= 1, "strong_tournaments_w: n >= 1");
  std::vector<BigCount> w(n + 1);
  for (unsigned m = 1; m <= n; ++m) {
    BigCount v = two_pow(static_cast<unsigned long>(m) * (m - 1) / 2);
    for (unsigned s = 1; s < m; ++s)
      v -= binomial0(m, s) * w[s] * two_pow(static_cast<unsigned long>(m - s) * (m - s - 1) / 2);
    w[m] = v;
  }
  return w[n];
}

BigCount partition_a(unsigned k) {
  std::vector<BigCount> a{1, 0, 0};
  for (unsigned j = 2; j < k; ++j)
    a.push_back(BigCount(j) * a[j] + BigCount(j) * (j - 1) * a[j - 2]);
  return a[k];
}

BigCount partition_b(unsigned n, unsigned k) {
  BigCount sum = 0;
  for (unsigned i = 0; 2 * i <= k; ++i) {
    BigCount term = binomial0(k, 2 * i) * double_factorial(2 * static_cast<long>(i) - 1) *
                    power(n, k - 2 * i);
    if (i % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

BigCount partition_gsets(unsigned n) {
  BigCount sum = 0;
  for (unsigned k = 0; k <= n; ++k)
    sum += binomial0(n, k) * partition_a(k) * partition_b(n, n - k);
  return sum;
}

BigCount jones_f(unsigned n) {
  require(n >= 2, "jones_f: n >= 2");
  BigCount prev = 1, cur = 7;
  if (n == 2) return prev;
  for (unsigned m = 4; m <= n; ++m) {
    BigCount next = 5 * cur + 6 * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigCount jones_f_closed(unsigned n) {
  require(n >= 2, "jones_f: n >= 2");
  BigCount num = 2 * power(6, n) + (n % 2 ? 9 : -9);
  BigCount den = 63;
  require(mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()) != 0, "jones_f_closed: not integral");
  mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return num;
}

BrauerBounds brauer_bounds(unsigned n) {
  require(n >= 2, "brauer_bounds: n >= 2");
  BrauerBounds out{1, derangements(n * (n - 1) / 2)};
  for (unsigned i = 1; i < n; ++i) out.c *= factorial(i);
  return out;
}

BigCount min_generating_sets(Family f, unsigned n, unsigned r) {
  BigCount rho = rank_ideal(f, n, r);
  BigCount h = (f == Family::Jones) ? BigCount(1) : factorial(r);
  BigCount out = factorial(static_cast<unsigned>(rho.get_ui()));
  BigCount hp;
  mpz_pow_ui(hp.get_mpz_t(), h.get_mpz_t(), rho.get_ui());
  return out * hp;
}

BigCount family_size(Family f, unsigned n) {
  switch (f) {
    case Family::Partition: return bell(2 * n);
    case Family::Brauer: return double_factorial(2 * static_cast<long>(n) - 1);
    case Family::Jones: return catalan(n);
    case Family::PlanarPartition: return catalan(2 * n);
    case Family::FullTransformation: return power(n, n);
    case Family::SingularTransformation: return power(n, n) - factorial(n);
  }
  return 0;
}

}  // namespace diagmon
