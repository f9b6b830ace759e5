#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "faber/dyadic.hpp"
#include "faber/oracle.hpp"

namespace faber {

/// Tensor product of hierarchical hats: prod_i phi_{k_i, s_i}(x_i).
/// Zero unless every coordinate lies in its (k_i, s_i) cell.
Real tensor_faber_eval(const MultiIndex& levels, const ShiftVector& shifts,
                       std::span<const Real> x);

/// Sparse hierarchical expansion: coefficients on levels |k|_1 <= budget_level.
class SparseFaberExpansion {
  public:
    using ShiftMap = std::map<ShiftVector, Real>;

    SparseFaberExpansion(int dim, int budget_level) : dim_(dim), budget_level_(budget_level) {}

    void set(const MultiIndex& levels, const ShiftVector& shifts, Real value);
    Real coefficient(const MultiIndex& levels, const ShiftVector& shifts) const;
    Real eval(std::span<const Real> x) const;
    Real eval(std::initializer_list<Real> x) const {
        return eval(std::span<const Real>(x.begin(), x.size()));
    }
    Oracle as_oracle() const;

    int dim() const { return dim_; }
    int budget_level() const { return budget_level_; }
    long long coefficient_count() const;
    /// canonical order: levels by (|k|_1, lex), shifts lex
    const std::map<MultiIndex, ShiftMap, GradedLexLess>& levels() const { return levels_; }

  private:
    int dim_;
    int budget_level_;
    std::map<MultiIndex, ShiftMap, GradedLexLess> levels_;
};

/// d-fold second-difference coefficient and its class envelope
/// 2^{-alpha d} 2^{-alpha |k|_1}. The value is a signed sum of the
/// 3^d-point tensor stencil based at 2^{-k} s.
std::pair<Real, Real> tensor_coeff(const Oracle& f, const MultiIndex& levels,
                                   const ShiftVector& shifts, Real alpha);

/// Truncation at budget m: every coefficient with |k|_1 <= m (zeros kept,
/// so the stored count is exactly dim_Fdm(m, d)). Interpolates f on the
/// level-m Smolyak grid when f vanishes on the boundary.
SparseFaberExpansion sparse_truncate(const Oracle& f, int m, int dim);

/// Deduplicated Smolyak grid: points 2^{-k-1} s over |k|_1 = m, s_i in Z_*(k_i).
struct SmolyakGrid {
    int dim = 0;
    int level = 0;
    std::vector<Point> points;
};

SmolyakGrid smolyak_grid(int m, int dim);

/// dim F^d(m) = sum_{l=0}^m 2^l binom(l+d-1, d-1)
long long dim_Fdm(int m, int dim);

/// Sup-norm truncation bound 2^{-alpha} B^d 2^{-alpha m} binom(m+d, d-1),
/// B = 1/(2^alpha - 1), for functions in the mixed Hoelder unit ball.
Real truncation_error_bound(Real alpha, int dim, int m);

} // namespace faber
