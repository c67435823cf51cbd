#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ratlink/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"ratlink: invariants and censuses of oriented rational (2-bridge) links"};
    app.require_subcommand(1);
    app.fallthrough();  // accept the global options after a subcommand too

    ratlink::Config cfg;
    if (const char* env = std::getenv("RATLINK_OEIS_CACHE")) cfg.oeis_cache_dir = env;
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--shards", cfg.shards, "Worker threads for census enumeration")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--max-n", cfg.max_n, "Cap on census crossing numbers")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--oeis-cache", cfg.oeis_cache_dir,
                   "Directory for cached OEIS b-files (or $RATLINK_OEIS_CACHE)");

    auto* classify = app.add_subcommand("classify", "Invariants of a single link p/q");
    std::string pq, orient;
    bool emit_diagram = false;
    classify->add_option("pq", pq, "Fraction p/q with 0 < p < q")->required();
    classify->add_option("orientation", orient, "+ or - (two-component links only)");
    classify->add_flag("--emit-diagram", emit_diagram, "Also print the 4-plat diagram as JSON");

    auto* table = app.add_subcommand("table", "Deficiency-resolved counts for n = 2..n_max");
    long long table_n = 13;
    bool with_census = false;
    table->add_option("n_max", table_n, "Largest crossing number")->required();
    table->add_flag("--census", with_census, "Recompute by brute force and compare");

    auto* verify = app.add_subcommand("verify", "Run identity / census verification suites");
    std::string suite;
    long long verify_n = 13;
    verify->add_option("suite", suite, "identities, census or all")->required();
    verify->add_option("n_max", verify_n, "Largest crossing number")->required();

    auto* oeis = app.add_subcommand("oeis", "Cross-check counts against an OEIS sequence");
    std::string oeis_id;
    long long oeis_n = 13;
    oeis->add_option("id", oeis_id, "A007581 (even n) or A192466 (odd n)")->required();
    oeis->add_option("n_max", oeis_n, "Largest crossing number")->required();
    oeis->add_flag("--offline", cfg.offline, "Use only the bundled snapshot");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : ratlink::kParseError;
    }

    try {
        if (classify->parsed())
            return ratlink::cmd_classify(pq, orient, emit_diagram, cfg, std::cout, std::cerr);
        if (table->parsed())
            return ratlink::cmd_table(table_n, with_census, cfg, std::cout, std::cerr);
        if (verify->parsed())
            return ratlink::cmd_verify(suite, verify_n, cfg, std::cout, std::cerr);
        if (oeis->parsed())
            return ratlink::cmd_oeis(oeis_id, oeis_n, cfg, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
