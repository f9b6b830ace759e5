#include "faber/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <future>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "faber/textio.hpp"

namespace faber {

namespace {

unsigned worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return std::clamp(hw, 1u, 8u);
}

template <typename EvalMax>
Real parallel_max(long long count, EvalMax&& local_max) {
    unsigned workers = worker_count();
    if (count < 4096 || workers == 1) return local_max(0, count);
    std::vector<std::future<Real>> futures;
    long long chunk = (count + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        long long lo = static_cast<long long>(w) * chunk;
        long long hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [lo, hi, &local_max] { return local_max(lo, hi); }));
    }
    Real best = 0.0;
    for (auto& fut : futures) best = std::max(best, fut.get());
    return best;
}

long long ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
        .count();
}

} // namespace

SupErrorResult sup_error(const Oracle& f, const Oracle& g, int grid_level, long random_points,
                         std::uint64_t seed, long long full_grid_cap) {
    if (f.dim != g.dim) throw std::invalid_argument("sup_error: dimension mismatch");
    if (grid_level < 1) throw std::invalid_argument("sup_error: grid level >= 1 required");
    int d = f.dim;
    long side = (1L << grid_level) + 1;
    long long total = 1;
    for (int i = 0; i < d; ++i) total *= side;

    SupErrorResult out;
    auto abs_diff = [&](std::span<const Real> x) { return std::abs(f(x) - g(x)); };

    bool full = d <= 2 && total <= full_grid_cap;
    if (d == 3 && total > 1000000) full = false;
    if (d == 3 && total <= 1000000) full = true;

    if (full) {
        out.points = total;
        if (d == 1) {
            out.value = parallel_max(side, [&](long long lo, long long hi) {
                Real best = 0.0;
                Point p(1);
                for (long long i = lo; i < hi; ++i) {
                    p[0] = std::ldexp(static_cast<Real>(i), -grid_level);
                    best = std::max(best, abs_diff(p));
                }
                return best;
            });
        } else if (d == 2) {
            out.value = parallel_max(side, [&](long long lo, long long hi) {
                Real best = 0.0;
                Point p(2);
                for (long long i = lo; i < hi; ++i) {
                    p[0] = std::ldexp(static_cast<Real>(i), -grid_level);
                    for (long jj = 0; jj < side; ++jj) {
                        p[1] = std::ldexp(static_cast<Real>(jj), -grid_level);
                        best = std::max(best, abs_diff(p));
                    }
                }
                return best;
            });
        } else {
            out.value = parallel_max(total, [&](long long lo, long long hi) {
                Real best = 0.0;
                Point p(static_cast<size_t>(d));
                for (long long idx = lo; idx < hi; ++idx) {
                    long long rem = idx;
                    for (int i = 0; i < d; ++i) {
                        p[static_cast<size_t>(i)] = std::ldexp(static_cast<Real>(rem % side), -grid_level);
                        rem /= side;
                    }
                    best = std::max(best, abs_diff(p));
                }
                return best;
            });
        }
    } else {
        // seeded subsample of the grid, drawn up front so chunking cannot
        // change the point set
        long long draws = 1000000;
        out.subsampled = true;
        out.points = draws;
        Rng rng(seed ^ 0x9d1dULL);
        std::vector<Real> pts(static_cast<size_t>(draws) * static_cast<size_t>(d));
        for (long long i = 0; i < draws; ++i)
            for (int q = 0; q < d; ++q)
                pts[static_cast<size_t>(i * d + q)] =
                    std::ldexp(static_cast<Real>(rng.next_below(side)), -grid_level);
        out.value = parallel_max(draws, [&](long long lo, long long hi) {
            Real best = 0.0;
            for (long long i = lo; i < hi; ++i) {
                std::span<const Real> p(pts.data() + i * d, static_cast<size_t>(d));
                best = std::max(best, std::abs(f(p) - g(p)));
            }
            return best;
        });
    }

    if (random_points > 0) {
        Rng rng(seed ^ 0x5a5aULL);
        std::vector<Real> pts(static_cast<size_t>(random_points) * static_cast<size_t>(d));
        for (long long i = 0; i < random_points; ++i)
            for (int q = 0; q < d; ++q) pts[static_cast<size_t>(i * d + q)] = rng.next_real();
        Real rnd = parallel_max(random_points, [&](long long lo, long long hi) {
            Real best = 0.0;
            for (long long i = lo; i < hi; ++i) {
                std::span<const Real> p(pts.data() + i * d, static_cast<size_t>(d));
                best = std::max(best, std::abs(f(p) - g(p)));
            }
            return best;
        });
        out.value = std::max(out.value, rnd);
        out.points += random_points;
    }
    return out;
}

namespace {

struct SweepValues {
    std::vector<int> dims;
    std::vector<Real> alphas;
    std::vector<int> ms;
};

std::vector<int> sweep_dims(const SuiteConfig& c, std::vector<int> defaults) {
    if (c.dim > 0) return {c.dim};
    return defaults;
}

std::vector<Real> sweep_alphas(const SuiteConfig& c, std::vector<Real> defaults) {
    if (c.alpha > 0.0) return {c.alpha};
    return defaults;
}

std::vector<int> sweep_ms(const SuiteConfig& c, std::vector<int> defaults) {
    if (c.m >= 0) return {c.m};
    return defaults;
}

int default_grid_level(const SuiteConfig& c, int fallback) {
    return c.grid_level > 0 ? c.grid_level : fallback;
}

ErrorReport make_report(std::string suite, std::string label, int d, Real alpha, int m, int n,
                        Real measured, Real bound, int grid_level, long random_points,
                        bool subsampled, long long runtime_ms) {
    ErrorReport r;
    r.suite = std::move(suite);
    r.label = std::move(label);
    r.d = d;
    r.alpha = alpha;
    r.m = m;
    r.n = n;
    r.measured_error = measured;
    r.bound = bound;
    r.ratio = bound == 0.0 ? (measured == 0.0 ? 0.0 : std::numeric_limits<Real>::infinity())
                           : measured / bound;
    r.grid_level = grid_level;
    r.random_points = random_points;
    r.subsampled = subsampled;
    r.runtime_ms = runtime_ms;
    return r;
}

std::vector<ErrorReport> suite_interp(const SuiteConfig& c) {
    std::vector<ErrorReport> out;
    for (int d : sweep_dims(c, {1, 2, 3})) {
        int count = c.functions > 0 ? c.functions : 7;
        auto specs = standard_corpus(d, 1.0, d == 3 ? std::max(1, count - 1) : count);
        for (const auto& spec : specs) {
            Oracle f = make_function(spec);
            for (int m : sweep_ms(c, {0, 1, 2, 3, 4, 5})) {
                auto start = std::chrono::steady_clock::now();
                Oracle fm = memoized(f);
                SparseFaberExpansion e = sparse_truncate(fm, m, d);
                Real worst = 0.0;
                for (const auto& pt : smolyak_grid(m, d).points)
                    worst = std::max(worst, std::abs(e.eval(pt) - f(pt)));
                out.push_back(make_report("interp", spec.label(), d, spec.alpha, m, -1, worst, 1e-10,
                                          0, 0, false, ms_since(start)));
            }
        }
    }
    return out;
}

std::vector<ErrorReport> suite_lemma22(const SuiteConfig& c) {
    std::vector<ErrorReport> out;
    for (int d : sweep_dims(c, {2, 3})) {
        for (Real alpha : sweep_alphas(c, {0.5, 1.0})) {
            auto specs = standard_corpus(d, alpha, c.functions > 0 ? c.functions : 3);
            for (int m : sweep_ms(c, {2, 3, 4, 5, 6})) {
                Real bound = truncation_error_bound(alpha, d, m);
                for (const auto& spec : specs) {
                    auto start = std::chrono::steady_clock::now();
                    Oracle f = make_function(spec);
                    SparseFaberExpansion e = sparse_truncate(memoized(f), m, d);
                    int L = default_grid_level(c, d == 2 ? 9 : 7);
                    auto res = sup_error(f, e.as_oracle(), L, c.random_points, c.seed);
                    out.push_back(make_report("lemma22", spec.label(), d, alpha, m, -1, res.value,
                                              bound, L, c.random_points, res.subsampled,
                                              ms_since(start)));
                }
            }
        }
    }
    return out;
}

std::vector<ErrorReport> suite_quantizer(const SuiteConfig& c) {
    std::vector<ErrorReport> out;
    for (Real alpha : sweep_alphas(c, {0.5, 1.0})) {
        auto specs = standard_corpus(1, alpha, c.functions > 0 ? std::max(c.functions, 10) : 50);
        Real worst_node = 0.0, worst_chain = 0.0, worst_l0 = 0.0;
        auto start = std::chrono::steady_clock::now();
        for (const auto& spec : specs) {
            Oracle f = make_function(spec);
            for (int m : sweep_ms(c, {0, 1, 2, 3, 4, 5, 6, 7, 8})) {
                auto code = quantize(f, m, alpha);
                Real unit = code.unit();
                worst_l0 = std::max(worst_l0, static_cast<Real>(std::llabs(code.l[0])));
                for (size_t s = 1; s < code.l.size(); ++s)
                    worst_chain = std::max(
                        worst_chain, static_cast<Real>(std::llabs(code.l[s] - code.l[s - 1])));
                for (size_t s = 0; s < code.l.size(); ++s) {
                    Real x = std::ldexp(static_cast<Real>(s), -m - 1);
                    Real err = std::abs(unit * static_cast<Real>(code.l[s]) - f({x}));
                    // compare in units so one report covers all levels
                    worst_node = std::max(worst_node, err / (unit / 2.0 + 1e-12));
                }
            }
        }
        long long elapsed = ms_since(start);
        out.push_back(make_report("quantizer", "l0-anchored", 1, alpha, -1, -1, worst_l0, 0.5, 0, 0,
                                  false, elapsed));
        out.push_back(make_report("quantizer", "unit-chain", 1, alpha, -1, -1, worst_chain, 1.0, 0,
                                  0, false, 0));
        out.push_back(make_report("quantizer", "node-accuracy", 1, alpha, -1, -1, worst_node, 1.0,
                                  0, 0, false, 0));
    }
    // distinct-code counts over a large random family
    for (int m : sweep_ms(c, {0, 1, 2})) {
        auto start = std::chrono::steady_clock::now();
        std::set<std::vector<long long>> seen;
        long trials = 10000;
        for (long t = 0; t < trials; ++t) {
            FunctionSpec spec;
            spec.family = "faber-random";
            spec.dim = 1;
            spec.alpha = 1.0;
            spec.level = 3;
            spec.seed = 0xc0deULL + static_cast<std::uint64_t>(t);
            seen.insert(quantize(make_function(spec), m, 1.0).l);
        }
        Real limit = std::pow(3.0, static_cast<Real>(1L << (m + 1)));
        out.push_back(make_report("quantizer", "distinct-codes-m" + std::to_string(m), 1, 1.0, m,
                                  -1, static_cast<Real>(seen.size()), limit, 0, trials, false,
                                  ms_since(start)));
    }
    return out;
}

std::vector<ErrorReport> suite_covering(const SuiteConfig& c) {
    std::vector<ErrorReport> out;
    for (int d : sweep_dims(c, {2, 3})) {
        for (Real alpha : sweep_alphas(c, {0.5, 1.0})) {
            auto specs = standard_corpus(d, alpha, c.functions > 0 ? c.functions : 3);
            for (int m : sweep_ms(c, {1, 2, 3, 4, 5})) {
                Real bound = covering_error_bound(alpha, d, m);
                for (const auto& spec : specs) {
                    auto start = std::chrono::steady_clock::now();
                    Oracle f = make_function(spec);
                    CoveringCode code = build_covering(memoized(f), m, d, alpha);
                    Oracle g{d, [&code](std::span<const Real> x) { return code.eval(x); }};
                    int L = default_grid_level(c, d == 2 ? 9 : 7);
                    auto res = sup_error(f, g, L, c.random_points, c.seed);
                    out.push_back(make_report("covering", spec.label(), d, alpha, m, -1, res.value,
                                              bound, L, c.random_points, res.subsampled,
                                              ms_since(start)));
                }
            }
        }
    }
    return out;
}

std::vector<ErrorReport> suite_decomposition(const SuiteConfig& c) {
    std::vector<ErrorReport> out;
    for (int d : sweep_dims(c, {2, 3})) {
        for (int n : (c.n >= 0 ? std::vector<int>{c.n} : std::vector<int>{1, 2, 3})) {
            auto start = std::chrono::steady_clock::now();
            FunctionSpec spec;
            spec.family = "faber-random";
            spec.dim = d;
            spec.alpha = 1.0;
            spec.level = n + 3;
            spec.seed = 0xdecULL + static_cast<std::uint64_t>(16 * d + n);
            Oracle f = make_function(spec);
            SparseFaberExpansion rn = sparse_truncate(memoized(f), n, d);
            Rng rng(c.seed ^ 0xdec0ULL);
            Real worst = 0.0;
            Point x(static_cast<size_t>(d));
            for (int t = 0; t < 500; ++t) {
                for (int q = 0; q < d; ++q) x[static_cast<size_t>(q)] = rng.next_real();
                Real lhs = f(x) - rn.eval(x);
                Real rhs = 0.0;
                for (int j = 0; j <= d - 1; ++j)
                    for (const auto& head : enumerate_levels(j, n)) rhs += layer_F_eval(f, head, n, x);
                worst = std::max(worst, std::abs(lhs - rhs));
            }
            out.push_back(make_report("decomposition", spec.label(), d, spec.alpha, -1, n, worst,
                                      1e-8, 0, 500, false, ms_since(start)));
        }
    }
    return out;
}

std::vector<ErrorReport> suite_pipeline(const SuiteConfig& c) {
    std::vector<ErrorReport> out;
    for (int d : sweep_dims(c, {2, 3})) {
        std::vector<std::pair<int, int>> mns;
        if (c.m >= 1 && c.n >= 1)
            mns = {{c.m, c.n}};
        else if (d == 2)
            mns = {{1, 3}, {2, 4}, {2, 6}};
        else
            mns = {{1, 3}};
        for (Real alpha : sweep_alphas(c, {0.5, 1.0})) {
            auto specs = standard_corpus(d, alpha, c.functions > 0 ? std::min(c.functions, 2) : 2);
            for (auto [m, n] : mns) {
                Real bound = pipeline_error_bound(alpha, d, m, n);
                for (const auto& spec : specs) {
                    auto start = std::chrono::steady_clock::now();
                    Oracle f = make_function(spec);
                    ManifoldCode code = encode(f, m, n, alpha);
                    int L = default_grid_level(c, m + n + 3);
                    auto res = sup_error(f, code.as_oracle(), L, c.random_points, c.seed);
                    out.push_back(make_report("pipeline", spec.label(), d, alpha, m, n, res.value,
                                              bound, L, c.random_points, res.subsampled,
                                              ms_since(start)));
                }
            }
        }
    }
    return out;
}

std::vector<ErrorReport> suite_budget(const SuiteConfig& c) {
    std::vector<ErrorReport> out;
    int d = c.dim > 0 ? c.dim : 2;
    int m = c.m >= 1 ? c.m : 1;
    int n = c.n >= 1 ? c.n : 3;
    ParamBudget b = budget(m, n, d);

    if (d == 2 && m == 1 && n == 3) {
        auto start = std::chrono::steady_clock::now();
        bool exact = b.n_mn_bound == BigUint(78892ULL);
        out.push_back(make_report("budget", "closed-form-78892", d, 0.0, m, n, exact ? 0.0 : 1.0,
                                  0.5, 0, 0, false, ms_since(start)));
    }
    Real alpha = c.alpha > 0.0 ? c.alpha : 1.0;
    auto specs = standard_corpus(d, alpha, c.functions > 0 ? std::min(c.functions, 3) : 3);
    for (const auto& spec : specs) {
        auto start = std::chrono::steady_clock::now();
        ManifoldCode code = encode(make_function(spec), m, n, alpha);
        long long actual = code.parameter_count();
        long long expected = dim_Fdm(n, d);
        for (int j = 0; j < d; ++j)
            expected += static_cast<long long>(code.layers[static_cast<size_t>(j)].dictionary.size()) *
                            dim_Fdm(m, d - j) +
                        gamma_size(j, n);
        bool identity = actual == expected;
        bool within = BigUint(static_cast<unsigned long long>(actual)) <= b.n_mn_bound;
        out.push_back(make_report("budget", spec.label() + "/count-identity", d, alpha, m, n,
                                  identity ? 0.0 : 1.0, 0.5, 0, 0, false, ms_since(start)));
        out.push_back(make_report("budget", spec.label() + "/count-within-bound", d, alpha, m, n,
                                  within ? 0.0 : 1.0, 0.5, 0, 0, false, 0));
    }
    return out;
}

std::vector<ErrorReport> suite_params(const SuiteConfig& c) {
    std::vector<ErrorReport> out;
    int d = c.dim > 0 ? c.dim : 2;
    auto start = std::chrono::steady_clock::now();

    auto sel = select_params(BigUint(1000000ULL), d);
    bool expected = d != 2 || (sel.feasible && sel.m == 1 && sel.n == 13 && !sel.meets_threshold);
    out.push_back(make_report("params", "select-1e6", d, 0.0, sel.m, sel.n, expected ? 0.0 : 1.0,
                              0.5, 0, 0, false, ms_since(start)));

    bool monotone = true;
    BigUint N(4096ULL);
    auto prev = select_params(N, d);
    for (int step = 0; step < 24; ++step) {
        N = N * BigUint(2ULL);
        auto cur = select_params(N, d);
        if (cur.feasible && prev.feasible && (cur.n < prev.n || cur.m < prev.m)) monotone = false;
        prev = cur;
    }
    out.push_back(make_report("params", "monotone-in-N", d, 0.0, -1, -1, monotone ? 0.0 : 1.0, 0.5,
                              0, 0, false, 0));

    // threshold flag flips exactly at N(d)
    auto at = select_params(prev.threshold, d);
    BigUint below = prev.threshold; // threshold - 1 via decimal round trip
    {
        auto dec = below.to_decimal();
        // subtract one in decimal
        int i = static_cast<int>(dec.size()) - 1;
        while (i >= 0 && dec[static_cast<size_t>(i)] == '0') dec[static_cast<size_t>(i--)] = '9';
        if (i >= 0) dec[static_cast<size_t>(i)] -= 1;
        below = BigUint::from_decimal(dec);
    }
    auto under = select_params(below, d);
    bool threshold_ok = at.meets_threshold && !under.meets_threshold;
    out.push_back(make_report("params", "threshold-flag", d, 0.0, -1, -1, threshold_ok ? 0.0 : 1.0,
                              0.5, 0, 0, false, 0));

    // decay bound decreasing on a log-spaced ladder
    Real alpha = c.alpha > 0.0 ? c.alpha : 1.0;
    bool decreasing = true;
    Real last = std::numeric_limits<Real>::infinity();
    BigUint Ng(16ULL);
    for (int step = 0; step < 40; ++step) {
        Real v = theorem_upper_bound(Ng, d, alpha);
        if (v > last * (1.0 + 1e-12)) decreasing = false;
        last = v;
        Ng = Ng * BigUint(2ULL);
    }
    out.push_back(make_report("params", "bound-decreasing", d, alpha, -1, -1, decreasing ? 0.0 : 1.0,
                              0.5, 0, 0, false, 0));
    return out;
}

} // namespace

std::vector<ErrorReport> run_suite(const std::string& name, const SuiteConfig& config) {
    if (name == "interp") return suite_interp(config);
    if (name == "lemma22") return suite_lemma22(config);
    if (name == "quantizer") return suite_quantizer(config);
    if (name == "covering") return suite_covering(config);
    if (name == "decomposition") return suite_decomposition(config);
    if (name == "pipeline") return suite_pipeline(config);
    if (name == "budget") return suite_budget(config);
    if (name == "params") return suite_params(config);
    throw std::invalid_argument("run_suite: unknown suite '" + name + "'");
}

bool all_pass(const std::vector<ErrorReport>& reports) {
    for (const auto& r : reports)
        if (r.violation()) return false;
    return true;
}

std::string reports_to_csv(const std::vector<ErrorReport>& reports) {
    std::ostringstream os;
    os << "suite,label,d,alpha,m,n,measured_error,bound,ratio,grid_level,random_points,subsampled,"
          "violation\n";
    for (const auto& r : reports) {
        os << r.suite << ',' << r.label << ',' << r.d << ',' << real_to_string(r.alpha) << ','
           << r.m << ',' << r.n << ',' << real_to_string(r.measured_error) << ','
           << real_to_string(r.bound) << ',' << real_to_string(r.ratio) << ',' << r.grid_level
           << ',' << r.random_points << ',' << (r.subsampled ? 1 : 0) << ','
           << (r.violation() ? 1 : 0) << "\n";
    }
    return os.str();
}

namespace {

std::string format_table(const std::vector<ErrorReport>& reports, bool with_runtime) {
    std::ostringstream os;
    os << std::left << std::setw(14) << "suite" << std::setw(28) << "label" << std::right
       << std::setw(3) << "d" << std::setw(6) << "alpha" << std::setw(4) << "m" << std::setw(4)
       << "n" << std::setw(14) << "measured" << std::setw(14) << "bound" << std::setw(10)
       << "ratio" << std::setw(6) << "ok";
    if (with_runtime) os << std::setw(10) << "ms";
    os << "\n";
    for (const auto& r : reports) {
        os << std::left << std::setw(14) << r.suite << std::setw(28) << r.label << std::right
           << std::setw(3) << r.d << std::setw(6) << std::setprecision(2) << std::fixed << r.alpha
           << std::setw(4) << r.m << std::setw(4) << r.n << std::setw(14) << std::setprecision(4)
           << std::scientific << r.measured_error << std::setw(14) << r.bound << std::setw(10)
           << std::setprecision(3) << std::fixed << r.ratio << std::setw(6)
           << (r.violation() ? "FAIL" : "ok");
        if (with_runtime) os << std::setw(10) << r.runtime_ms;
        os << "\n";
        os.unsetf(std::ios::floatfield);
    }
    return os.str();
}

} // namespace

std::string reports_to_text(const std::vector<ErrorReport>& reports) {
    return format_table(reports, false);
}

std::string reports_to_console(const std::vector<ErrorReport>& reports) {
    return format_table(reports, true);
}

} // namespace faber
