#ifndef DIAGMON_COUNTING_HPP
#define DIAGMON_COUNTING_HPP

#include <gmpxx.h>

#include <string>

#include "diagmon/family.hpp"

namespace diagmon {

using BigCount = mpz_class;

inline std::string to_string(const BigCount& x) { return x.get_str(); }

// Base sequences. Arguments outside the documented domain throw
// std::out_of_range.
BigCount factorial(unsigned n);
BigCount binomial(unsigned n, unsigned k);
BigCount stirling2(unsigned n, unsigned r);
BigCount bell(unsigned n);
BigCount catalan(unsigned n);
BigCount double_factorial(long k);  // (-1)!! = 1
BigCount fibonacci(unsigned n);     // F_1 = F_2 = 1
BigCount derangements(unsigned m);

// 0 for odd i, C_{i/2} for even i.
BigCount catalan_c(unsigned i);

// rank = idrank of I_r for the given family.
BigCount rank_ideal(Family f, unsigned n, unsigned r);

// Second form for the partition monoid: sum_j C(n,j) S(j,r) B_{n-j}.
BigCount rank_ideal_partition_alt(unsigned n, unsigned r);

// Ballot table: rho(n,0) = c_n, rho(n,n) = 1, zero when r > n or the
// parity of n - r is odd.
BigCount jones_rho(unsigned n, unsigned r);
BigCount jones_rho_alt(unsigned n, unsigned r);

// Strongly connected labelled tournaments.
BigCount strong_tournaments_w(unsigned n);

BigCount partition_a(unsigned k);
BigCount partition_b(unsigned n, unsigned k);
BigCount partition_gsets(unsigned n);

BigCount jones_f(unsigned n);
BigCount jones_f_closed(unsigned n);

struct BrauerBounds {
  BigCount c;
  BigCount e;
};
BrauerBounds brauer_bounds(unsigned n);

// rho! * h^rho where rho = rank_ideal(f, n, r) and h is the H-class size.
BigCount min_generating_sets(Family f, unsigned n, unsigned r);

// Size of the whole monoid.
BigCount family_size(Family f, unsigned n);

}  // namespace diagmon

#endif
