#include "ratlink/formulas.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace ratlink {

BigInt binomial(long long a, long long b) {
    if (a < 0 || b < 0 || b > a) return 0;
    if (b > a - b) b = a - b;
    // The counting sums hammer binomial with the same small arguments over
    // and over; a factorial memo serves those, anything huge falls back to
    // the multiplicative loop.
    constexpr long long kFactCap = 4096;
    if (a <= kFactCap) {
        static std::mutex mu;
        static std::vector<BigInt> fact{1};
        std::lock_guard<std::mutex> lock(mu);
        while (static_cast<long long>(fact.size()) <= a) fact.push_back(fact.back() * fact.size());
        return fact[a] / (fact[b] * fact[a - b]);
    }
    BigInt r = 1;
    for (long long i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return r;
}

BigInt fibonacci(long long m) {
    if (m < 0) throw std::invalid_argument("fibonacci: negative index");
    BigInt a = 0, b = 1;
    for (long long i = 0; i < m; ++i) {
        BigInt t = a + b;
        a = b;
        b = t;
    }
    return a;
}

BigInt u_count(long long n) {
    if (n < 3) throw std::invalid_argument("u_count: defined for n >= 3");
    return pow2(n - 3) + pow2((n - 3) / 2);
}

BigInt tk(long long n) {
    if (n < 4) throw std::invalid_argument("tk: defined for n >= 4");
    if (n % 2 == 0) return exact_div(pow2(n - 2) - 1, 3);
    if (n % 4 == 1) return exact_div(pow2(n - 2) + pow2((n - 1) / 2), 3);
    return exact_div(pow2(n - 2) + pow2((n - 1) / 2) + 2, 3);
}

BigInt tl(long long n) {
    if (n < 4) throw std::invalid_argument("tl: defined for n >= 4");
    if (n % 2 == 0) return exact_div(pow2(n - 3) + 1, 3) + pow2((n - 4) / 2);
    if (n % 4 == 1) return exact_div(pow2(n - 3) + pow2((n - 3) / 2), 3);
    return exact_div(pow2(n - 3) + pow2((n - 3) / 2) - 2, 3);
}

BigInt tls(long long n) {
    if (n < 5 || n % 2 == 0) throw std::invalid_argument("tls: defined for odd n >= 5");
    if (n % 4 == 1) return exact_div(pow2((n - 1) / 2) + 2, 3);
    return exact_div(pow2((n - 1) / 2) - 2, 3);
}

BigInt lambda_count(long long n) {
    if (n < 2) throw std::invalid_argument("lambda_count: defined for n >= 2");
    BigInt cases;
    if (n % 2 == 0)
        cases = exact_div(pow2(n - 1) + 1, 3) + pow2(n / 2 - 1);
    else if (n % 4 == 1)
        cases = exact_div(pow2(n - 1) + pow2((n - 1) / 2) - 2, 3);
    else
        cases = exact_div(pow2(n - 1) + pow2((n - 1) / 2), 3);

    // combined single expression
    int sg_n = (n % 2 == 0) ? 1 : -1;
    long long e = ((n + 1) / 2) * n;
    int sg_e = (e % 2 == 0) ? 1 : -1;
    BigInt combined = pow2(n - 1) * 2;                       // keep everything over 2
    combined += BigInt(5 + sg_n) * pow2(n / 2 - 1);
    combined += BigInt(-1) + sg_n + 2 * sg_e;
    combined = exact_div(exact_div(combined, 2), 3);
    if (cases != combined)
        throw std::logic_error("lambda_count: case split disagrees with combined form at n = " +
                               std::to_string(n));
    return cases;
}

BigInt r1_count(long long n, long long d) {
    BigInt total = 0;
    for (long long j = 1; 4 * j <= n - 2 * d; ++j)
        total += binomial(n - 2 * d - 2 * j - 1, 2 * j - 1) * binomial(n - d - 2 * j - 1, d);
    return total;
}

BigInt r3_count(long long n, long long d) {
    BigInt total = 0;
    for (long long j = 0; 4 * j <= n - 2 * d - 2; ++j)
        total += binomial(n - 2 * d - 2 * j - 2, 2 * j) * binomial(n - d - 2 * j - 2, d);
    return total;
}

BigInt rs3_count(long long n, long long d) {
    if (n < 2 || d < 0) return 0;
    // four-case form
    BigInt cases = 0;
    if (n % 2 == 1 && d % 2 == 1) {
        cases = 0;
    } else {
        for (long long j = 0; 4 * j <= n - 2 * d - 2; ++j) {
            BigInt ways_free, ways_ins;
            if (n % 2 == 0)
                ways_free = binomial(n / 2 - d - j - 1, j);
            else
                ways_free = binomial((n - 1) / 2 - d - j - 1, j);
            if (n % 2 == 0 && d % 2 == 0)
                ways_ins = binomial((n - d) / 2 - j - 1, d / 2);
            else if (n % 2 == 0)
                ways_ins = binomial((n - d - 1) / 2 - j - 1, (d - 1) / 2);
            else
                ways_ins = binomial((n - d - 1) / 2 - j - 1, d / 2);
            cases += ways_free * ways_ins;
        }
    }
    // unified floor form
    BigInt unified = 0;
    if ((n * d) % 2 == 0) {
        for (long long j = 0; 4 * j <= n - 2 * d - 2; ++j)
            unified += binomial(n / 2 - d - j - 1, j) * binomial((n - d) / 2 - j - 1, d / 2);
    }
    if (cases != unified)
        throw std::logic_error("rs3_count: case form disagrees with unified form at (" +
                               std::to_string(n) + "," + std::to_string(d) + ")");
    return cases;
}

BigInt h_count(long long n, long long d) {
    if (n <= 1 || d < 0 || 2 * d > n - 2) return 0;
    BigInt total = 0;
    for (long long k = 0; 2 * k <= n - 2 * d - 2; ++k)
        total += binomial(n - 2 * d - 2 - k, k) * binomial(n - d - 2 - k, d);
    return total;
}

BigInt ConvolvedFibTable::get(long long d, long long m) {
    if (d < 0 || m < 0) throw std::invalid_argument("convolved_fib: negative argument");
    ensure(d, m);
    return table_[static_cast<size_t>(d)][static_cast<size_t>(m)];
}

void ConvolvedFibTable::ensure(long long d, long long m) {
    if (table_.empty()) table_.push_back({BigInt(0), BigInt(1)});
    while (static_cast<long long>(table_.size()) <= d) table_.push_back({BigInt(0)});
    auto& fib = table_[0];
    for (long long i = static_cast<long long>(fib.size()); i <= m; ++i)
        fib.push_back(fib[i - 1] + (i >= 2 ? fib[i - 2] : BigInt(0)));
    // Rows extend in order, so row dd-1 always reaches m before row dd.
    for (long long dd = 1; dd <= d; ++dd) {
        auto& row = table_[dd];
        const auto& prev = table_[dd - 1];
        for (long long i = static_cast<long long>(row.size()); i <= m; ++i) {
            BigInt rec = row[i - 1] + (i >= 2 ? row[i - 2] : BigInt(0)) + prev[i - 1];
            BigInt conv = 0;
            for (long long k = 0; k <= i; ++k) conv += fib[k] * prev[i - k];
            if (rec != conv)
                throw std::logic_error("convolved_fib: recurrence and convolution disagree");
            row.push_back(rec);
        }
    }
}

BigInt convolved_fib(long long d, long long m) {
    static std::mutex mu;
    static ConvolvedFibTable table;
    std::lock_guard<std::mutex> lock(mu);
    return table.get(d, m);
}

BigInt lambda_nd(long long n, long long d, bool* out_of_range) {
    if (n < 2) throw std::invalid_argument("lambda_nd: defined for n >= 2");
    if (out_of_range) *out_of_range = false;
    if (d < 0 || 2 * d > n - 2) {
        if (out_of_range) *out_of_range = true;
        return 0;
    }
    BigInt value = convolved_fib(d, n - d - 1);
    if ((n * d) % 2 == 0)
        value += convolved_fib(d / 2, n / 2 - (d + 1) / 2);
    BigInt split = r1_count(n, d) + r3_count(n, d) + rs3_count(n, d);
    if (value != split)
        throw std::logic_error("lambda_nd: convolved-Fibonacci form disagrees with r1+r3+rs3 at (" +
                               std::to_string(n) + "," + std::to_string(d) + ")");
    return value;
}

BigInt lambda_n0(long long n) {
    if (n < 2) throw std::invalid_argument("lambda_n0: defined for n >= 2");
    return fibonacci(n - 1) + fibonacci(n / 2);
}

bool verify_corollary(long long n) {
    BigInt sum = 0;
    for (long long d = 0; 2 * d <= n - 2; ++d)
        sum += lambda_nd(n, d);
    return sum == lambda_count(n);
}

} // namespace ratlink
