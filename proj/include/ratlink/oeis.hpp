#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ratlink/bigint.hpp"

namespace ratlink {

struct BFileEntry {
    long long index;
    BigInt value;
};

/// Parses OEIS b-file text: "index value" per line, '#' comments and blank
/// lines ignored. Throws std::invalid_argument on malformed lines.
std::vector<BFileEntry> parse_b_file(std::istream& in);

bool oeis_id_known(const std::string& id);  // A007581 or A192466

/// Bundled prefix of the sequence (the offline fallback).
const std::vector<BFileEntry>& oeis_snapshot(const std::string& id);

/// Index of the sequence term that equals |Lambda_n|. Frozen once against the
/// sequence data: A007581 holds the even-n counts at index n/2 (its leading
/// term at index 0 precedes the n=2 count), A192466 the odd-n counts at index
/// (n-1)/2.
long long oeis_index_for(const std::string& id, long long n);

/// True when n is of the parity the sequence covers (even for A007581, odd
/// for A192466) and n >= 2 resp. 3.
bool oeis_covers(const std::string& id, long long n);

struct OeisTerms {
    std::vector<BFileEntry> entries;
    std::string source;  // "snapshot", "cache" or "network"
};

struct oeis_network_error : std::runtime_error {
    explicit oeis_network_error(const std::string& what) : std::runtime_error(what) {}
};

/// Obtains sequence terms. offline forces the snapshot; otherwise the cache
/// directory is consulted and, failing that, oeis.org. Fetched data is cached
/// and must agree with the snapshot on overlapping indices.
OeisTerms oeis_terms(const std::string& id, const std::string& cache_dir, bool offline);

struct OeisCheck {
    long long n;
    BigInt expected;  // lambda_count(n)
    BigInt term;
    bool ok;
};

struct OeisReport {
    std::string id;
    std::string source;
    std::vector<OeisCheck> checks;
    bool ok = true;
};

/// Compares lambda_count(n) against the sequence for every covered n <= n_max.
OeisReport oeis_check(const std::string& id, long long n_max,
                      const std::string& cache_dir, bool offline);

} // namespace ratlink
