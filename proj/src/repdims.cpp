#include "diagmon/repdims.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace diagmon {

IntegerPartition::IntegerPartition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] == 0) throw std::invalid_argument("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

IntegerPartition IntegerPartition::parse(const std::string& text) {
  std::vector<unsigned> parts;
  std::string tok;
  std::stringstream ss(text);
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(),
                             [](char c) { return c == ' ' || c == '(' || c == ')'; }),
              tok.end());
    if (tok.empty()) continue;
    std::size_t used = 0;
    unsigned long v = std::stoul(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad partition part: " + tok);
    parts.push_back(static_cast<unsigned>(v));
  }
  return IntegerPartition(std::move(parts));
}

unsigned IntegerPartition::size() const {
  unsigned s = 0;
  for (unsigned p : parts_) s += p;
  return s;
}

IntegerPartition IntegerPartition::conjugate() const {
  std::vector<unsigned> c(parts_.empty() ? 0 : parts_.front(), 0);
  for (unsigned p : parts_)
    for (unsigned j = 0; j < p; ++j) ++c[j];
  return IntegerPartition(std::move(c));
}

std::string IntegerPartition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<IntegerPartition> partitions_of(unsigned r) {
  std::vector<IntegerPartition> out;
  std::vector<unsigned> cur;
  auto rec = [&](auto&& self, unsigned left, unsigned cap) -> void {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, r, r);
  return out;
}

std::vector<std::vector<unsigned>> hook_lengths(const IntegerPartition& lambda) {
  auto conj = lambda.conjugate().parts();
  const auto& rows = lambda.parts();
  std::vector<std::vector<unsigned>> h(rows.size());
  for (unsigned i = 0; i < rows.size(); ++i)
    for (unsigned j = 0; j < rows[i]; ++j) h[i].push_back((rows[i] - j) + (conj[j] - i) - 1);
  return h;
}

BigCount std_tableaux_count(const IntegerPartition& lambda) {
  BigCount prod = 1;
  for (const auto& row : hook_lengths(lambda))
    for (unsigned h : row) prod *= h;
  BigCount out = factorial(lambda.size());
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), prod.get_mpz_t());
  return out;
}

BigCount dim_partition_algebra(unsigned n, const IntegerPartition& mu) {
  const unsigned m = mu.size();
  if (m > n) throw std::invalid_argument("dim_partition_algebra: |mu| > n");
  BigCount sum = 0;
  for (unsigned j = m; j <= n; ++j) sum += stirling2(n, j) * binomial(j, m);
  return sum * std_tableaux_count(mu);
}

namespace {

unsigned brauer_k(unsigned n, const IntegerPartition& mu) {
  const unsigned m = mu.size();
  if (m > n || (n - m) % 2) throw std::invalid_argument("dim_brauer_algebra: need |mu| = n - 2k");
  return (n - m) / 2;
}

}  // namespace

BigCount dim_brauer_algebra(unsigned n, const IntegerPartition& mu) {
  const unsigned k = brauer_k(n, mu);
  BigCount den = factorial(k);
  den <<= k;
  for (const auto& row : hook_lengths(mu))
    for (unsigned h : row) den *= h;
  BigCount out = factorial(n);
  mpz_divexact(out.get_mpz_t(), out.get_mpz_t(), den.get_mpz_t());
  return out;
}

BigCount dim_brauer_algebra_rank_form(unsigned n, const IntegerPartition& mu) {
  const unsigned k = brauer_k(n, mu);
  // R-classes of J_|mu|(B_n); one class when |mu| = n.
  BigCount rho = k == 0 ? BigCount(1) : rank_ideal(Family::Brauer, n, mu.size());
  return rho * std_tableaux_count(mu);
}

BigCount dim_tl_algebra(unsigned n, unsigned r) {
  if (r > n || (n - r) % 2) throw std::invalid_argument("dim_tl_algebra: need r = n - 2k");
  return jones_rho(n, r);
}

BigCount bratteli_paths(unsigned n, const IntegerPartition& mu) {
  if (mu.size() > n) throw std::invalid_argument("bratteli_paths: |mu| > n");
  using Level = std::map<std::vector<unsigned>, BigCount>;
  Level cur{{{}, 1}};
  for (unsigned step = 0; step < 2 * n; ++step) {
    Level next;
    const bool removing = step % 2 == 0;
    for (const auto& [lam, count] : cur) {
      next[lam] += count;
      for (std::size_t i = 0; i <= lam.size(); ++i) {
        std::vector<unsigned> v = lam;
        if (removing) {
          if (i == lam.size()) break;
          // a corner box ends row i
          if (i + 1 < lam.size() && lam[i + 1] == lam[i]) continue;
          if (--v[i] == 0) v.pop_back();
        } else {
          if (i == lam.size()) v.push_back(1);
          else if (i > 0 && lam[i - 1] == lam[i]) continue;
          else ++v[i];
        }
        next[v] += count;
      }
    }
    cur = std::move(next);
  }
  auto it = cur.find(mu.parts());
  return it == cur.end() ? BigCount(0) : it->second;
}

}  // namespace diagmon
