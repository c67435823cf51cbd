#include "ratlink/numtheory.hpp"

#include <boost/multiprecision/integer.hpp>

namespace ratlink {

Fraction::Fraction(BigInt num, BigInt den) : p(std::move(num)), q(std::move(den)) {
    if (p <= 0 || q <= 0 || p >= q)
        throw std::invalid_argument("Fraction: need 0 < p < q, got " + p.str() + "/" + q.str());
    if (boost::multiprecision::gcd(p, q) != 1)
        throw std::invalid_argument("Fraction: gcd(p,q) != 1 for " + p.str() + "/" + q.str());
}

Fraction parse_fraction(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos || slash == 0 || slash + 1 == s.size())
        throw std::invalid_argument("expected \"p/q\", got \"" + s + "\"");
    auto digits = [](const std::string& t) {
        if (t.empty()) return false;
        for (char c : t)
            if (c < '0' || c > '9') return false;
        return true;
    };
    std::string ps = s.substr(0, slash), qs = s.substr(slash + 1);
    if (!digits(ps) || !digits(qs))
        throw std::invalid_argument("expected \"p/q\" with decimal integers, got \"" + s + "\"");
    return Fraction(BigInt(ps), BigInt(qs));
}

void check_odd_cf(const OddCF& v) {
    if (v.empty() || v.size() % 2 == 0)
        throw std::invalid_argument("continued fraction vector must have odd length");
    for (const BigInt& a : v)
        if (a < 1) throw std::invalid_argument("continued fraction entries must be positive");
}

namespace {

// Greedy all-positive expansion of p/q = 1/(a1 + 1/(a2 + ...)), i.e. the
// Euclidean quotient sequence of q/p. The last entry is >= 2 except for the
// excluded p/q = 1/1.
std::vector<BigInt> greedy_cf(const Fraction& f) {
    std::vector<BigInt> out;
    BigInt a = f.q, b = f.p;
    while (b != 0) {
        out.push_back(a / b);
        BigInt r = a % b;
        a = b;
        b = r;
    }
    return out;
}

// Flip the parity of the expansion length without changing value or sum.
void flip_tail(std::vector<BigInt>& v) {
    if (v.back() > 1) {
        v.back() -= 1;
        v.push_back(1);
    } else {
        v.pop_back();
        v.back() += 1;
    }
}

} // namespace

OddCF to_odd_cf(const Fraction& f) {
    std::vector<BigInt> v = greedy_cf(f);
    if (v.size() % 2 == 0) flip_tail(v);
    check_odd_cf(v);
    return v;
}

std::vector<BigInt> to_even_cf(const Fraction& f) {
    std::vector<BigInt> v = greedy_cf(f);
    if (v.size() % 2 == 1) flip_tail(v);
    return v;
}

std::pair<BigInt, BigInt> eval_cf(const std::vector<BigInt>& v) {
    // Bottom-up: x = a_m, then x -> a_i + 1/x; result is 1/x as a fraction.
    BigInt num = v.back(), den = 1;
    for (auto it = v.rbegin() + 1; it != v.rend(); ++it) {
        // a + den/num
        BigInt new_num = *it * num + den;
        den = num;
        num = new_num;
    }
    return {den, num}; // 1/(num/den)
}

Fraction from_odd_cf(const OddCF& v) {
    check_odd_cf(v);
    auto [p, q] = eval_cf(v);
    return Fraction(p, q);
}

BigInt crossing_number(const OddCF& v) {
    check_odd_cf(v);
    BigInt n = 0;
    for (const BigInt& a : v) n += a;
    return n;
}

bool unoriented_equivalent(const Fraction& a, const Fraction& b) {
    if (a.q != b.q) return false;
    return a.p == b.p || (a.p * b.p) % a.q == 1 % a.q;
}

bool oriented_equivalent(const BigInt& p1, const BigInt& q1,
                         const BigInt& p2, const BigInt& q2) {
    if (p1 % 2 == 0 || p2 % 2 == 0)
        throw std::domain_error("oriented_equivalent: numerators must be odd");
    if (q1 != q2) return false;
    BigInt m = 2 * q1;
    return (p1 - p2) % m == 0 || (p1 * p2) % m == 1 % m;
}

bool is_palindromic(const OddCF& v) {
    check_odd_cf(v);
    for (size_t i = 0, j = v.size() - 1; i < j; ++i, --j)
        if (v[i] != v[j]) return false;
    return true;
}

bool is_strongly_invertible(const Fraction& f) {
    if (!f.two_components())
        throw not_two_component("is_strongly_invertible: " + f.str() +
                                " is not a two-component link (q is odd)");
    OddCF v = to_odd_cf(f);
    return is_palindromic(v) && v[v.size() / 2] % 2 == 1;
}

Fraction mirror_fraction(const Fraction& f) {
    return Fraction(f.q - f.p, f.q);
}

} // namespace ratlink
