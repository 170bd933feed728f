#pragma once

#include <string>
#include <vector>

#include "v2xec/rng.hpp"

namespace v2xec {

enum class BenchOp { KeyGen, KeyExpand, Sign, Verify };

std::string bench_op_name(BenchOp op);

struct BenchResult {
    BenchOp op{};
    std::string curve;
    std::size_t iterations{};
    double mean_ms{};
    double median_ms{};
    double stddev_ms{};  // sample standard deviation
};

struct BenchConfig {
    std::vector<BenchOp> ops;        // deduplicated, canonical order enforced
    std::vector<std::string> curves; // emitted in registry order
    std::size_t iterations = 100;    // >= 30
    std::size_t warmup = 10;         // >= 5, untimed
};

// Single-threaded wall-clock measurement (steady_clock). Per iteration the
// inputs are freshly randomized outside the timed region so scalar
// Hamming-weight variance averages out. Median is the headline number.
std::vector<BenchResult> run_bench(const BenchConfig& config, RandomSource& rng);

std::string to_json_line(const BenchResult& r);
std::string csv_header();
std::string to_csv_line(const BenchResult& r);

}  // namespace v2xec
