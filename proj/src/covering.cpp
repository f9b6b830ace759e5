#include "faber/covering.hpp"

#include <cmath>
#include <stdexcept>

namespace faber {

Real CoveringCode::eval(std::span<const Real> x) const {
    if (static_cast<int>(x.size()) != dim)
        throw std::invalid_argument("CoveringCode::eval: dimension mismatch");
    if (banks.empty()) throw std::logic_error("CoveringCode::eval: empty code");
    if (dim == 1) return banks.begin()->second.eval(x[0]);

    Real acc = 0.0;
    BankKey probe;
    probe.trail_shifts.resize(static_cast<size_t>(dim - 1));
    auto it = banks.begin();
    while (it != banks.end()) {
        const MultiIndex& kbar = it->first.trail_levels;
        // cell of the trailing coordinates at this level block
        Real phi = 1.0;
        for (int i = 0; i < dim - 1; ++i) {
            long cell = dyadic_cell(x[static_cast<size_t>(i + 1)], kbar[static_cast<size_t>(i)]);
            probe.trail_shifts[static_cast<size_t>(i)] = cell;
            phi *= hat(std::ldexp(x[static_cast<size_t>(i + 1)], kbar[static_cast<size_t>(i)] + 1) -
                       2.0 * static_cast<Real>(cell));
            if (phi == 0.0) break;
        }
        if (phi != 0.0) {
            probe.trail_levels = kbar;
            auto bank = banks.find(probe);
            if (bank != banks.end()) {
                Real weight = std::exp2(-alpha * static_cast<Real>(level_sum(kbar) + dim - 1));
                acc += weight * phi * bank->second.eval(x[0]);
            }
        }
        // jump to the next level block
        while (it != banks.end() && it->first.trail_levels == kbar) ++it;
    }
    return acc;
}

long long CoveringCode::parameter_count() const {
    long long n = 0;
    for (const auto& [key, code] : banks) n += static_cast<long long>(code.l.size()) - 1;
    return n;
}

bool CoveringCode::chain_ok() const {
    for (const auto& [key, code] : banks)
        if (!code.chain_ok()) return false;
    return true;
}

Oracle K_function(const Oracle& f, const MultiIndex& trail_levels,
                  const ShiftVector& trail_shifts, Real alpha) {
    int d = f.dim;
    if (static_cast<int>(trail_levels.size()) != d - 1 || trail_shifts.size() != trail_levels.size())
        throw std::invalid_argument("K_function: index length must be dim - 1");
    if (d == 1) return f;

    // Precompute trailing stencil points and weights: they do not depend on x_1.
    // weight = prod_j (-1/2) 2^{alpha(k_j+1)} c_j with c = (1, -2, 1)
    static const Real w3[3] = {1.0, -2.0, 1.0};
    long points = 1;
    for (int i = 0; i < d - 1; ++i) points *= 3;
    Real norm = 1.0;
    for (int k : trail_levels) norm *= -0.5 * std::exp2(alpha * static_cast<Real>(k + 1));
    std::vector<std::pair<Point, Real>> stencil;
    stencil.reserve(static_cast<size_t>(points));
    for (long idx = 0; idx < points; ++idx) {
        long rem = idx;
        Real w = norm;
        Point tail(static_cast<size_t>(d - 1));
        for (int i = 0; i < d - 1; ++i) {
            int j = static_cast<int>(rem % 3);
            rem /= 3;
            w *= w3[j];
            if (!DyadicIndex{trail_levels[static_cast<size_t>(i)], trail_shifts[static_cast<size_t>(i)]}.valid())
                throw std::invalid_argument("K_function: invalid index");
            tail[static_cast<size_t>(i)] =
                std::ldexp(static_cast<Real>(trail_shifts[static_cast<size_t>(i)]), -trail_levels[static_cast<size_t>(i)]) +
                static_cast<Real>(j) * std::ldexp(1.0, -trail_levels[static_cast<size_t>(i)] - 1);
        }
        stencil.emplace_back(std::move(tail), w);
    }

    auto fn = [f, stencil = std::move(stencil), d](std::span<const Real> x) -> Real {
        Point p(static_cast<size_t>(d));
        p[0] = x[0];
        Real acc = 0.0;
        for (const auto& [tail, w] : stencil) {
            for (int i = 1; i < d; ++i) p[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - 1)];
            acc += w * f(p);
        }
        return acc;
    };
    return Oracle{1, std::move(fn)};
}

CoveringCode build_covering(const Oracle& f, int level, int dim, Real alpha) {
    if (level < 0 || dim < 1) throw std::invalid_argument("build_covering: bad arguments");
    if (f.dim != dim) throw std::invalid_argument("build_covering: oracle dimension mismatch");
    CoveringCode out{dim, level, alpha, {}};
    for (const auto& kbar : enumerate_levels(dim - 1, level)) {
        int sub_level = level - static_cast<int>(level_sum(kbar));
        for (const auto& sbar : enumerate_shifts(kbar)) {
            Oracle slice = K_function(f, kbar, sbar, alpha);
            out.banks.emplace(BankKey{kbar, sbar}, quantize(slice, sub_level, alpha));
        }
    }
    return out;
}

Real covering_error_bound(Real alpha, int dim, int m) {
    if (alpha <= 0.0 || alpha > 1.0 || dim < 1 || m < 0)
        throw std::invalid_argument("covering_error_bound: bad arguments");
    Real B = 1.0 / (std::exp2(alpha) - 1.0);
    return std::pow(B, dim) * std::exp2(-alpha * m) * static_cast<Real>(binomial(m + dim, dim - 1));
}

BigUint cardinality_bound(int m, int dim) {
    if (m < 0 || dim < 1) throw std::invalid_argument("cardinality_bound: bad arguments");
    auto exponent = static_cast<unsigned long long>((1ULL << (m + 1)) * static_cast<unsigned long long>(binomial(m + dim - 1, dim - 1)));
    return BigUint::pow(3, exponent);
}

} // namespace faber
