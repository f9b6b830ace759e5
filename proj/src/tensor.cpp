#include "faber/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace faber {

Real tensor_faber_eval(const MultiIndex& levels, const ShiftVector& shifts,
                       std::span<const Real> x) {
    Real prod = 1.0;
    for (size_t i = 0; i < levels.size(); ++i) {
        prod *= faber_eval({levels[i], shifts[i]}, x[i]);
        if (prod == 0.0) return 0.0;
    }
    return prod;
}

void SparseFaberExpansion::set(const MultiIndex& levels, const ShiftVector& shifts, Real value) {
    if (static_cast<int>(levels.size()) != dim_ || shifts.size() != levels.size())
        throw std::invalid_argument("SparseFaberExpansion::set: dimension mismatch");
    if (level_sum(levels) > budget_level_)
        throw std::invalid_argument("SparseFaberExpansion::set: level outside budget");
    for (size_t i = 0; i < levels.size(); ++i)
        if (!DyadicIndex{levels[i], shifts[i]}.valid() || levels[i] < 0)
            throw std::invalid_argument("SparseFaberExpansion::set: invalid index");
    levels_[levels][shifts] = value;
}

Real SparseFaberExpansion::coefficient(const MultiIndex& levels, const ShiftVector& shifts) const {
    auto lit = levels_.find(levels);
    if (lit == levels_.end()) return 0.0;
    auto sit = lit->second.find(shifts);
    return sit == lit->second.end() ? 0.0 : sit->second;
}

Real SparseFaberExpansion::eval(std::span<const Real> x) const {
    Real acc = 0.0;
    ShiftVector cell(static_cast<size_t>(dim_));
    for (const auto& [levels, shifts] : levels_) {
        // supports at a fixed level tile the cube: only the cell of x can contribute
        Real prod = 1.0;
        for (int i = 0; i < dim_; ++i) {
            cell[static_cast<size_t>(i)] = dyadic_cell(x[static_cast<size_t>(i)], levels[static_cast<size_t>(i)]);
            prod *= hat(std::ldexp(x[static_cast<size_t>(i)], levels[static_cast<size_t>(i)] + 1) -
                        2.0 * static_cast<Real>(cell[static_cast<size_t>(i)]));
            if (prod == 0.0) break;
        }
        if (prod == 0.0) continue;
        auto sit = shifts.find(cell);
        if (sit != shifts.end()) acc += sit->second * prod;
    }
    return acc;
}

Oracle SparseFaberExpansion::as_oracle() const {
    return Oracle{dim_, [copy = *this](std::span<const Real> x) { return copy.eval(x); }};
}

long long SparseFaberExpansion::coefficient_count() const {
    long long n = 0;
    for (const auto& [levels, shifts] : levels_) n += static_cast<long long>(shifts.size());
    return n;
}

std::pair<Real, Real> tensor_coeff(const Oracle& f, const MultiIndex& levels,
                                   const ShiftVector& shifts, Real alpha) {
    int d = f.dim;
    if (static_cast<int>(levels.size()) != d || shifts.size() != levels.size())
        throw std::invalid_argument("tensor_coeff: dimension mismatch");
    Point base(static_cast<size_t>(d)), half(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        if (levels[static_cast<size_t>(i)] < 0 || !DyadicIndex{levels[static_cast<size_t>(i)], shifts[static_cast<size_t>(i)]}.valid())
            throw std::invalid_argument("tensor_coeff: invalid index");
        base[static_cast<size_t>(i)] = std::ldexp(static_cast<Real>(shifts[static_cast<size_t>(i)]), -levels[static_cast<size_t>(i)]);
        half[static_cast<size_t>(i)] = std::ldexp(1.0, -levels[static_cast<size_t>(i)] - 1);
    }
    // (-1/2)^d (1, -2, 1)^{tensor d} stencil
    static const Real w3[3] = {1.0, -2.0, 1.0};
    long points = 1;
    for (int i = 0; i < d; ++i) points *= 3;
    Real value = 0.0;
    Point p(static_cast<size_t>(d));
    for (long idx = 0; idx < points; ++idx) {
        long rem = idx;
        Real w = 1.0;
        for (int i = 0; i < d; ++i) {
            int j = static_cast<int>(rem % 3);
            rem /= 3;
            w *= -0.5 * w3[j];
            p[static_cast<size_t>(i)] = base[static_cast<size_t>(i)] + static_cast<Real>(j) * half[static_cast<size_t>(i)];
        }
        value += w * f(p);
    }
    Real bound = std::exp2(-alpha * static_cast<Real>(d) - alpha * static_cast<Real>(level_sum(levels)));
    return {value, bound};
}

SparseFaberExpansion sparse_truncate(const Oracle& f, int m, int dim) {
    if (m < 0 || dim < 1) throw std::invalid_argument("sparse_truncate: bad arguments");
    if (f.dim != dim) throw std::invalid_argument("sparse_truncate: oracle dimension mismatch");
    SparseFaberExpansion out(dim, m);
    for (const auto& levels : enumerate_levels(dim, m))
        for (const auto& shifts : enumerate_shifts(levels))
            out.set(levels, shifts, tensor_coeff(f, levels, shifts, 1.0).first);
    return out;
}

SmolyakGrid smolyak_grid(int m, int dim) {
    if (m < 0 || dim < 1) throw std::invalid_argument("smolyak_grid: bad arguments");
    // key per coordinate: (odd numerator, exponent) of s / 2^{k+1} in lowest terms
    std::set<std::vector<std::pair<long, int>>> seen;
    SmolyakGrid grid{dim, m, {}};
    for (const auto& levels : enumerate_levels(dim, m, /*exact=*/true)) {
        long count = 1;
        for (int k : levels) count *= (1L << (k + 1)) - 1;
        for (long idx = 0; idx < count; ++idx) {
            long rem = idx;
            std::vector<std::pair<long, int>> key(static_cast<size_t>(dim));
            Point pt(static_cast<size_t>(dim));
            for (int i = dim - 1; i >= 0; --i) {
                long card = (1L << (levels[static_cast<size_t>(i)] + 1)) - 1;
                long s = 1 + rem % card;
                rem /= card;
                int e = levels[static_cast<size_t>(i)] + 1;
                long num = s;
                while (num % 2 == 0) {
                    num /= 2;
                    --e;
                }
                key[static_cast<size_t>(i)] = {num, e};
                pt[static_cast<size_t>(i)] = std::ldexp(static_cast<Real>(s), -(levels[static_cast<size_t>(i)] + 1));
            }
            if (seen.insert(key).second) grid.points.push_back(std::move(pt));
        }
    }
    return grid;
}

long long dim_Fdm(int m, int dim) {
    if (m < 0 || dim < 1) throw std::invalid_argument("dim_Fdm: bad arguments");
    long long total = 0;
    for (int l = 0; l <= m; ++l) total += (1LL << l) * binomial(l + dim - 1, dim - 1);
    return total;
}

Real truncation_error_bound(Real alpha, int dim, int m) {
    if (alpha <= 0.0 || alpha > 1.0 || dim < 1 || m < 0)
        throw std::invalid_argument("truncation_error_bound: bad arguments");
    Real B = 1.0 / (std::exp2(alpha) - 1.0);
    return std::exp2(-alpha) * std::pow(B, dim) * std::exp2(-alpha * m) *
           static_cast<Real>(binomial(m + dim, dim - 1));
}

} // namespace faber
