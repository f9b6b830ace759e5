#pragma once

#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace faber {

using Real = double;
using MultiIndex = std::vector<int>;   // level vectors k
using ShiftVector = std::vector<long>; // shift vectors s

/// Number of shifts per dyadic level: |Z(k)| = 2^k for k >= 0, 2 for k = -1.
inline long shifts_per_level(int level) {
    if (level == -1) return 2;
    if (level < -1) throw std::invalid_argument("dyadic level must be >= -1");
    return 1L << level;
}

inline long level_sum(const MultiIndex& k) {
    return std::accumulate(k.begin(), k.end(), 0L);
}

/// Hat function (1 - |x-1|)_+, the piecewise linear bump on [0,2] peaking at 1.
inline Real hat(Real x) {
    return std::max(0.0, 1.0 - std::abs(x - 1.0));
}

/// One basis index of the hierarchical hat system.
struct DyadicIndex {
    int level = 0;  // k >= -1
    long shift = 0; // s in Z(k)

    bool valid() const {
        return level >= -1 && shift >= 0 && shift < shifts_per_level(level);
    }
    friend auto operator<=>(const DyadicIndex&, const DyadicIndex&) = default;
};

/// Hierarchical hat: phi(2^{k+1} x - 2s) for k >= 0, phi(x - s + 1) for k = -1.
/// Support for k >= 0 is [s 2^{-k}, (s+1) 2^{-k}].
inline Real faber_eval(const DyadicIndex& idx, Real x) {
    if (!idx.valid())
        throw std::invalid_argument("faber_eval: shift " + std::to_string(idx.shift) +
                                    " invalid for level " + std::to_string(idx.level));
    if (idx.level == -1) return hat(x - static_cast<Real>(idx.shift) + 1.0);
    return hat(std::ldexp(x, idx.level + 1) - 2.0 * static_cast<Real>(idx.shift));
}

/// Nodal hat at x = s 2^{-m-1}: phi(2^{m+1} x - s + 1), s in {1, ..., 2^{m+1}-1}.
inline Real nodal_hat_eval(int m, long s, Real x) {
    if (m < 0 || s < 1 || s > (1L << (m + 1)) - 1)
        throw std::invalid_argument("nodal_hat_eval: node " + std::to_string(s) +
                                    " outside Z_*(" + std::to_string(m) + ")");
    return hat(std::ldexp(x, m + 1) - static_cast<Real>(s) + 1.0);
}

/// Cell index c with x in [c 2^{-k}, (c+1) 2^{-k}], clamped so c < 2^k.
inline long dyadic_cell(Real x, int level) {
    long cells = 1L << level;
    auto c = static_cast<long>(std::floor(std::ldexp(x, level)));
    if (c < 0) c = 0;
    if (c >= cells) c = cells - 1;
    return c;
}

/// Exact binomial via the multiplicative recurrence.
inline long long binomial(long long n, long long r) {
    if (r < 0 || r > n) return 0;
    r = std::min(r, n - r);
    long long out = 1;
    for (long long i = 1; i <= r; ++i) out = out * (n - r + i) / i;
    return out;
}

/// Graded lexicographic order on level multi-indices: by |k|_1, then lexicographic.
struct GradedLexLess {
    bool operator()(const MultiIndex& a, const MultiIndex& b) const {
        long la = level_sum(a), lb = level_sum(b);
        if (la != lb) return la < lb;
        return a < b;
    }
};

/// Enumerate all k in N_0^dim with |k|_1 <= budget (graded lex order),
/// or |k|_1 == budget exactly when exact = true.
std::vector<MultiIndex> enumerate_levels(int dim, int budget, bool exact = false);

/// Enumerate all shift vectors s with s_i in Z(k_i), lexicographic order.
std::vector<ShiftVector> enumerate_shifts(const MultiIndex& levels);

} // namespace faber
