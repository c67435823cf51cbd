#pragma once

#include <vector>

#include "ratlink/bigint.hpp"

namespace ratlink {

/// C(a, b), exact; 0 whenever a < 0, b < 0 or b > a, matching the empty-sum
/// convention of the counting formulas.
BigInt binomial(long long a, long long b);

/// Fibonacci numbers F_0 = 0, F_1 = 1, ...
BigInt fibonacci(long long m);

/// Number of unoriented rational links with crossing number n, for n >= 3:
/// 2^(n-3) + 2^floor((n-3)/2). (For n = 2 the census value is 1; the formula
/// only evaluates in integers from n = 3 on.)
BigInt u_count(long long n);

/// Sub-counts of the unoriented census: rational knots (tk) and two-component
/// rational links (tl), both for n >= 4, plus the two-component links with a
/// reversal-symmetric preferred form (tls), for odd n >= 5. Every division
/// by 3 is checked exact.
BigInt tk(long long n);
BigInt tl(long long n);
BigInt tls(long long n);

/// Number of oriented rational links with crossing number n >= 2. Evaluates
/// both the parity case split and the combined single expression and insists
/// they agree.
BigInt lambda_count(long long n);

/// Deficiency-resolved counts of Type I, Type III, and symmetric Type III
/// decompositions with n crossings. rs3_count evaluates both the four-case
/// form and the unified floor form and insists they agree.
BigInt r1_count(long long n, long long d);
BigInt r3_count(long long n, long long d);
BigInt rs3_count(long long n, long long d);

/// Merged Type I + Type III count H^(d)_n; equals r1_count + r3_count, and 0
/// for n <= 1, d < 0 or d > (n-2)/2.
BigInt h_count(long long n, long long d);

/// Memo table of convolved Fibonacci numbers: F^(0) is the Fibonacci sequence
/// and F^(d+1)_m = sum_i F_i F^(d)_{m-i}. Every cell is computed by both the
/// convolution and the recurrence F^(d)_m = F^(d)_{m-1} + F^(d)_{m-2} +
/// F^(d-1)_{m-1} and the two must agree. The table grows on demand and never
/// evicts; create an instance where bounded memory matters.
class ConvolvedFibTable {
public:
    BigInt get(long long d, long long m);

private:
    void ensure(long long d, long long m);
    std::vector<std::vector<BigInt>> table_;
};

/// Shared ConvolvedFibTable behind a lock.
BigInt convolved_fib(long long d, long long m);

/// |Lambda_n(d)| = F^(d)_{n-d-1} + (1+(-1)^(nd))/2 * F^(floor(d/2))_{floor(n/2)-floor((d+1)/2)}.
/// Returns 0 (and sets *out_of_range when provided) if d is outside
/// [0, floor((n-2)/2)].
BigInt lambda_nd(long long n, long long d, bool* out_of_range = nullptr);

/// The deficiency-zero special case F_{n-1} + F_{floor(n/2)}.
BigInt lambda_n0(long long n);

/// True iff the closed form for |Lambda_n| equals the sum of lambda_nd over
/// all admissible d, as exact integers.
bool verify_corollary(long long n);

} // namespace ratlink
