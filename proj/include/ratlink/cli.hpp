#pragma once

#include <iosfwd>
#include <string>

#include "ratlink/bigint.hpp"

namespace ratlink {

struct Config {
    std::string format = "json";  // json | csv | text
    long long max_n = 26;
    int shards = 1;
    std::string oeis_cache_dir;   // empty disables caching
    bool offline = false;
};

// Exit codes shared by the command implementations:
//   0 success          4 table --census disagreement
//   2 parse failure    5 verify failure
//   3 bad orientation  6 OEIS network failure   7 OEIS term mismatch
enum ExitCode {
    kOk = 0,
    kParseError = 2,
    kOrientationError = 3,
    kTableMismatch = 4,
    kVerifyFailed = 5,
    kNetworkError = 6,
    kTermMismatch = 7,
};

int cmd_classify(const std::string& pq, const std::string& orient, bool emit_diagram,
                 const Config& cfg, std::ostream& out, std::ostream& err);

int cmd_table(long long n_max, bool with_census, const Config& cfg, std::ostream& out,
              std::ostream& err);

int cmd_verify(const std::string& suite, long long n_max, const Config& cfg, std::ostream& out,
               std::ostream& err);

int cmd_oeis(const std::string& id, long long n_max, const Config& cfg, std::ostream& out,
             std::ostream& err);

} // namespace ratlink
