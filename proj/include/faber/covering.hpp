#pragma once

#include <map>
#include <utility>

#include "faber/bigint.hpp"
#include "faber/tensor.hpp"
#include "faber/univariate.hpp"

namespace faber {

/// Per-bank key: trailing levels kbar (length dim-1, |kbar|_1 <= level)
/// and trailing shifts sbar in Z(kbar). Ordered graded-lex on kbar, lex on sbar.
struct BankKey {
    MultiIndex trail_levels;
    ShiftVector trail_shifts;
};

struct BankKeyLess {
    bool operator()(const BankKey& a, const BankKey& b) const {
        GradedLexLess less;
        if (less(a.trail_levels, b.trail_levels)) return true;
        if (less(b.trail_levels, a.trail_levels)) return false;
        return a.trail_shifts < b.trail_shifts;
    }
};

/// Bank of univariate quantized codes realizing the finite covering of the
/// mixed Hoelder ball: one code per (kbar, sbar), at level `level - |kbar|_1`.
/// For dim = 1 there is a single bank with empty keys.
struct CoveringCode {
    int dim = 1;
    int level = 0;
    Real alpha = 1.0;
    std::map<BankKey, UnivariateQuantizedCode, BankKeyLess> banks;

    Real eval(std::span<const Real> x) const;
    Real eval(std::initializer_list<Real> x) const {
        return eval(std::span<const Real>(x.begin(), x.size()));
    }
    /// free integer parameters: per bank the nodes s >= 1; totals dim F^dim(level)
    long long parameter_count() const;
    bool chain_ok() const;
};

/// Univariate slice oracle: the normalized (dim-1)-fold second difference of f
/// in the trailing coordinates at base 2^{-kbar} sbar, as a function of x_1.
/// The stencil offsets and weights are precomputed; each call costs 3^{dim-1}
/// evaluations of f along the x_1 fiber.
Oracle K_function(const Oracle& f, const MultiIndex& trail_levels,
                  const ShiftVector& trail_shifts, Real alpha);

/// Quantize every slice at its level: the explicit member of the finite
/// covering attached to f.
CoveringCode build_covering(const Oracle& f, int level, int dim, Real alpha);

/// Sup-norm bound B^d 2^{-alpha m} binom(m+d, d-1) for ||f - S_m(f)||.
Real covering_error_bound(Real alpha, int dim, int m);

/// Upper bound 3^{2^{m+1} binom(m+d-1, d-1)} on the covering cardinality.
BigUint cardinality_bound(int m, int dim);

} // namespace faber
