#pragma once

#include <map>
#include <vector>

#include "faber/covering.hpp"
#include "faber/tensor.hpp"

namespace faber {

/// Tensorized residual of nodal interpolation: per coordinate with k_i >= 1
/// subtract the piecewise linear interpolant through the level-(k_i - 1)
/// nodes (spacing 2^{-k_i}); k_i = 0 leaves the coordinate untouched.
/// Costs at most 3^d oracle calls.
Real T_eval(const Oracle& f, const MultiIndex& k, std::span<const Real> x);
inline Real T_eval(const Oracle& f, const MultiIndex& k, std::initializer_list<Real> x) {
    return T_eval(f, k, std::span<const Real>(x.begin(), x.size()));
}

/// Localized, rescaled residual 2^{alpha |k|_1 - d} T_k(f)(2^{-k}(x + s)),
/// supported in [0,1]^d and lying in the unit ball when f does.
Real T_localized_eval(const Oracle& f, const MultiIndex& k, const ShiftVector& s,
                      std::span<const Real> x, Real alpha);
inline Real T_localized_eval(const Oracle& f, const MultiIndex& k, const ShiftVector& s,
                             std::initializer_list<Real> x, Real alpha) {
    return T_localized_eval(f, k, s, std::span<const Real>(x.begin(), x.size()), alpha);
}
Oracle localized_residual_oracle(const Oracle& f, const MultiIndex& k, const ShiftVector& s,
                                 Real alpha);

/// Leading-coordinate second-difference slice: the (d - j)-variate function
/// obtained from f by j normalized (or raw) second differences at base
/// 2^{-k_head} s_head. With `normalized`, each factor carries 2^{alpha(k_i+1)}
/// and the result stays in the unit ball.
Oracle head_difference_oracle(const Oracle& f, const MultiIndex& head_levels,
                              const ShiftVector& head_shifts, bool normalized, Real alpha);

/// One term of the telescoping layer decomposition of f - R_n(f):
/// the residual operator at level n + 1 - |k_head|_1 in coordinate j + 1
/// applied to the level-k_head detail of f. Summing over all j = 0..d-1 and
/// |k_head|_1 <= n reproduces f - R_n(f).
Real layer_F_eval(const Oracle& f, const MultiIndex& head_levels, int n,
                  std::span<const Real> x);

/// Assignment-table index: head levels k (length j), head shifts, and the
/// leading-coordinate cell s_next in {0, ..., 2^{n+1-|k|_1} - 1}.
struct GammaTriple {
    MultiIndex head_levels;
    ShiftVector head_shifts;
    long next_shift = 0;
};

/// All triples for layer j at resolution n, canonical order
/// (|k|_1, k lex, shifts lex, next ascending). Size 2^{n+1} binom(n+j, j).
std::vector<GammaTriple> gamma_set(int j, int n, int dim);

long long gamma_size(int j, int n);

/// One decoder layer: dictionary of covering codes (theta is a 1-based index)
/// plus the assignment table in canonical gamma order.
struct LayerCode {
    int j = 0;
    std::vector<CoveringCode> dictionary;
    std::vector<int> theta;
};

/// Full parameter vector of the nonlinear approximant: raw truncation
/// coefficients plus per-layer code dictionaries and assignment tables.
struct ManifoldCode {
    int dim = 1;
    Real alpha = 1.0;
    int m = 1;
    int n = 1;
    SparseFaberExpansion lambda_R{1, 0};
    std::vector<LayerCode> layers;

    Real eval(std::span<const Real> x) const;
    Real eval(std::initializer_list<Real> x) const {
        return eval(std::span<const Real>(x.begin(), x.size()));
    }
    Oracle as_oracle() const;
    /// scalar budget: |lambda_R| + sum_j (|dict_j| dim F^{d-j}(m) + |Gamma_j(n)|)
    long long parameter_count() const;
};

ManifoldCode encode(const Oracle& f, int m, int n, Real alpha);
inline Real decode_eval(const ManifoldCode& code, std::span<const Real> x) { return code.eval(x); }

/// End-to-end bound 2^{-alpha+1} (2B)^d 2^{-alpha(m+n)} binom(m+n+d, d-1).
Real pipeline_error_bound(Real alpha, int dim, int m, int n);

/// Parameter-budget report for an (m, n, d) configuration.
struct ParamBudget {
    int m = 0, n = 0, dim = 0;
    std::vector<BigUint> gamma_sizes; // |Gamma_j(n)|, j = 0..d-1
    std::vector<BigUint> dict_bounds; // covering cardinality bound per layer
    BigUint n_mn_bound;               // closed-form budget bound
    BigUint k_mn;                     // dim F^d(m+n+1)
};

ParamBudget budget(int m, int n, int dim);

/// Largest feasible (m, n) for a scalar budget N:
/// n with 2^{n+2} binom(n+d, d-1) <= N/2 and
/// m with 3^{2^{m+1} binom(m+d-1, d-1)} 2^{m+1} binom(m+d, d-1) <= N/2.
struct SelectedParams {
    bool feasible = false;
    int m = 0, n = 0, m_star = 0;
    bool meets_threshold = false; // N >= N(d)
    bool regime_ok = false;       // n >= m >= d+1
    BigUint threshold;            // N(d)
};

SelectedParams select_params(const BigUint& N, int dim);

/// Decay-rate bound C_a (K^{d-1}/(d-1)!)^{2a+1} (log N)^{(d-1)(a+1)}
/// (N log N)^{-a} (log log N)^{(d-1)a}, logs base 2.
Real theorem_upper_bound(const BigUint& N, int dim, Real alpha);

} // namespace faber
