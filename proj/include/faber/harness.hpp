#pragma once

#include <string>
#include <vector>

#include "faber/corpus.hpp"
#include "faber/manifold.hpp"

namespace faber {

struct SupErrorResult {
    Real value = 0.0;
    bool subsampled = false;
    long long points = 0;
};

/// Sup-norm estimate of |f - g|: full dyadic grid {s 2^{-L}}^d for d <= 2
/// (subsampled when the grid exceeds `full_grid_cap`), a seeded 10^6-point
/// grid subsample for d = 3, plus `random_points` seeded uniform points.
/// Deterministic for a fixed seed.
SupErrorResult sup_error(const Oracle& f, const Oracle& g, int grid_level, long random_points,
                         std::uint64_t seed, long long full_grid_cap = (1LL << 25));

/// One bound-vs-measurement row. `ratio` compares against the bound; a
/// discrete identity check uses measured in {0,1} against the 0.5 sentinel.
struct ErrorReport {
    std::string suite;
    std::string label;
    int d = 0;
    Real alpha = 0.0;
    int m = -1;
    int n = -1;
    Real measured_error = 0.0;
    Real bound = 0.0;
    Real ratio = 0.0;
    int grid_level = 0;
    long random_points = 0;
    bool subsampled = false;
    long long runtime_ms = 0; // console only, kept out of canonical files

    bool violation() const { return ratio > 1.0 + 1e-9; }
};

struct SuiteConfig {
    int dim = 0;        // 0: suite default sweep
    Real alpha = 0.0;   // 0: suite default sweep
    int m = -1;         // -1: suite default sweep
    int n = -1;
    std::uint64_t seed = 0;
    int grid_level = 0; // 0: suite default
    long random_points = 10000;
    int functions = 3;  // corpus functions per configuration
};

/// Suites: interp, lemma22, quantizer, covering, decomposition, pipeline,
/// budget, params. Each executes its bound or identity checks over the
/// deterministic corpus and returns one report per check.
std::vector<ErrorReport> run_suite(const std::string& name, const SuiteConfig& config);

bool all_pass(const std::vector<ErrorReport>& reports);

/// Fixed-column CSV (no runtimes, byte-identical across runs at fixed seed).
std::string reports_to_csv(const std::vector<ErrorReport>& reports);
/// Aligned human-readable table, same content contract as the CSV.
std::string reports_to_text(const std::vector<ErrorReport>& reports);
/// Console table including runtimes.
std::string reports_to_console(const std::vector<ErrorReport>& reports);

} // namespace faber
