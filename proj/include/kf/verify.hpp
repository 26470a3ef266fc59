#pragma once

#include <string>
#include <vector>

#include "kf/weight.hpp"

namespace kf {

// Bounds for the verification suites; -1 picks the suite's standard grid
// (the one quoted in the README tables).
struct VerifyOptions {
    long long max_size = -1;
    int max_rank = -1;
    long long max_height = -1;
};

struct VerifyCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::string suite;
    std::vector<VerifyCase> cases;

    int failures() const;
    bool all_pass() const { return failures() == 0; }
};

const std::vector<std::string>& suite_names();

// Runs one named suite; throws Error("UnknownSuite") for anything else.
VerifyReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

// Partitions of size <= max_size with at most max_parts parts, padded with
// zeros to length dim; ordered by (size, lex descending). Shared by the
// suites and the CLI grid commands.
std::vector<Weight> partition_grid(long long max_size, int max_parts, int dim);

} // namespace kf
