#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cliffrad/transforms.hpp"

namespace cliffrad {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_dev = 0.0;
    double tol = 0.0;
    double millis = 0.0;
};

struct VerifyOptions {
    int n = 2;
    int max_degree = 6;
    unsigned seed = 20240601;
    int threads = 0;  // 0: CLIFFRAD_THREADS or hardware_concurrency
};

// Runs the check closures on a small worker pool (order of results matches
// the order of checks regardless of scheduling).
std::vector<CheckResult> run_checks(const std::vector<std::function<CheckResult()>>& checks,
                                    int threads = 0);

std::vector<CheckResult> suite_constants(const VerifyOptions& opts);
std::vector<CheckResult> suite_dual_radon(const VerifyOptions& opts);
std::vector<CheckResult> suite_radon(const VerifyOptions& opts);
std::vector<CheckResult> suite_roundtrip(const VerifyOptions& opts);
std::vector<CheckResult> suite_monogenicity(const VerifyOptions& opts);
std::vector<CheckResult> suite_intertwine(const VerifyOptions& opts);
std::vector<CheckResult> suite_all(const VerifyOptions& opts);

// Seeded random data used by the randomized suites and tests.
ExactPoly random_spherical_monogenic(int k, int n, std::mt19937_64& rng);
SliceSeries random_slice_series(int n, int j_min, int j_max, int k_max, std::mt19937_64& rng,
                                double density = 0.5);
MonogenicSeries random_monogenic_series(int n, SeriesPart part, int j_max, int k_max,
                                        std::mt19937_64& rng, double density = 0.5);
std::vector<double> random_unit_vector(int n, std::mt19937_64& rng);

int thread_count_from_env(int requested);

}  // namespace cliffrad
