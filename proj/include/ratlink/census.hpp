#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ratlink/seifert.hpp"

namespace ratlink {

/// Calls fn for every composition of n into an odd number of positive parts,
/// exactly once, in lexicographic order. Throws for n < 2.
void for_each_odd_composition(long long n,
                              const std::function<void(const std::vector<long long>&)>& fn);

/// Materialized variant of the stream above.
std::vector<std::vector<long long>> enumerate_vectors(long long n);

struct CensusEntry {
    SignedVector canonical;     // lexicographic min of {sv, reversal(sv)}
    Fraction fraction;          // the fraction whose PS form realizes canonical
    InvariantRecord record;
};

struct OrientedCensus {
    long long n = 0;
    BigInt count;               // |Lambda_n|
    BigInt omega;               // all R-decompositions with n crossings
    BigInt omega_symmetric;     // the reversal-symmetric ones
    std::vector<CensusEntry> entries;  // sorted by canonical vector
};

/// Enumerates every (odd composition, legal orientation) pair, canonicalizes
/// the signed vectors under reversal and deduplicates. The composition stream
/// may be sharded across threads; results are merged deterministically.
OrientedCensus census_oriented(long long n, int shards = 1);

struct UnorientedCensus {
    long long n = 0;
    BigInt count;               // |U_n|
    std::vector<Fraction> representatives;
};

/// Deduplicates the census fractions under the unoriented Schubert
/// equivalence p ~ p' iff p = p' or p p' = 1 (mod q).
UnorientedCensus census_unoriented(long long n);

/// Number of strongly invertible links in the unoriented census of n.
BigInt census_strongly_invertible(long long n);

struct DeficiencyCell {
    // raw tallies over all R-decompositions (no reversal dedup)
    BigInt r1, r2, r3, r4, rs1, rs2, rs3, rs4;
    BigInt lambda;              // deduplicated |Lambda_n(d)|
};

struct CountTable {
    long long n = 0;
    std::vector<DeficiencyCell> rows;  // d = 0 .. floor((n-2)/2)
    BigInt lambda_total;
    BigInt omega, omega_symmetric;
    BigInt unoriented;
    BigInt unoriented_two_component;
    BigInt knots, two_component, strongly_invertible;
};

CountTable tally_by_deficiency(long long n, int shards = 1);

/// Serializable (n, d) table rows shared by the census and the closed forms.
struct TableRow {
    long long n, d;
    BigInt r1, r3, rs3, lambda_nd;
};

std::vector<TableRow> table_rows(const CountTable& t);

std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);
std::string table_text(const std::vector<TableRow>& rows);

} // namespace ratlink
