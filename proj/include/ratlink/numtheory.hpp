#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "ratlink/bigint.hpp"

namespace ratlink {

/// The Schubert parameter of a rational link: a reduced fraction p/q with
/// 0 < p < q and gcd(p,q) = 1.
struct Fraction {
    BigInt p;
    BigInt q;

    Fraction(BigInt num, BigInt den);

    bool operator==(const Fraction& o) const { return p == o.p && q == o.q; }
    bool operator!=(const Fraction& o) const { return !(*this == o); }

    bool two_components() const { return q % 2 == 0; }
    std::string str() const { return p.str() + "/" + q.str(); }
};

/// Parses "p/q"; throws std::invalid_argument on malformed input or
/// violated Fraction invariants.
Fraction parse_fraction(const std::string& s);

/// The unique odd-length all-positive continued fraction vector
/// [a1, ..., a_{2k+1}] with p/q = 1/(a1 + 1/(a2 + ...)).
using OddCF = std::vector<BigInt>;

/// Throws unless v has odd length and every entry >= 1.
void check_odd_cf(const OddCF& v);

/// Odd-length expansion of f. Greedy Euclidean expansion; when that comes out
/// with even length the tail is rewritten ([..., a] -> [..., a-1, 1] for a > 1,
/// [..., a, 1] -> [..., a+1] otherwise), which preserves both the value and
/// the entry sum.
OddCF to_odd_cf(const Fraction& f);

/// Like to_odd_cf but normalized to even length. Used as the partner
/// expansion in sum-invariance checks.
std::vector<BigInt> to_even_cf(const Fraction& f);

/// Exact inverse of to_odd_cf.
Fraction from_odd_cf(const OddCF& v);

/// Evaluates any all-positive continued fraction to (p, q), not necessarily
/// with p < q reduced-form checks applied.
std::pair<BigInt, BigInt> eval_cf(const std::vector<BigInt>& v);

/// Sum of the entries; the crossing number of the corresponding link.
BigInt crossing_number(const OddCF& v);

/// Schubert equivalence of unoriented rational links:
/// q = q' and (p = p' (mod q) or p p' = 1 (mod q)).
bool unoriented_equivalent(const Fraction& a, const Fraction& b);

/// Schubert equivalence of oriented rational links for odd numerators:
/// q = q' and (p = p' (mod 2q) or p p' = 1 (mod 2q)).
/// The inputs are taken as stated (p need not be reduced below q).
/// Throws std::domain_error if either numerator is even.
bool oriented_equivalent(const BigInt& p1, const BigInt& q1,
                         const BigInt& p2, const BigInt& q2);

bool is_palindromic(const OddCF& v);

struct not_two_component : std::domain_error {
    explicit not_two_component(const std::string& what) : std::domain_error(what) {}
};

/// A two-component rational link is strongly invertible iff its odd
/// continued fraction is a palindrome with odd middle entry.
/// Throws not_two_component when q is odd (the predicate is only defined
/// for two-component links).
bool is_strongly_invertible(const Fraction& f);

/// Fraction of the mirror image: (q - p)/q.
Fraction mirror_fraction(const Fraction& f);

} // namespace ratlink
