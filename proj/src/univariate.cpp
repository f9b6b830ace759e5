#include "faber/univariate.hpp"

#include <cmath>
#include <stdexcept>

namespace faber {

void UnivariateExpansion::set(const DyadicIndex& idx, Real value) {
    if (!idx.valid() || idx.level > max_level_)
        throw std::invalid_argument("UnivariateExpansion::set: index outside expansion");
    levels_[idx.level][idx.shift] = value;
}

Real UnivariateExpansion::coefficient(const DyadicIndex& idx) const {
    auto lit = levels_.find(idx.level);
    if (lit == levels_.end()) return 0.0;
    auto sit = lit->second.find(idx.shift);
    return sit == lit->second.end() ? 0.0 : sit->second;
}

Real UnivariateExpansion::eval(Real x) const {
    Real acc = 0.0;
    for (const auto& [level, shifts] : levels_) {
        if (level == -1) {
            // the two boundary hats overlap; all deeper levels tile disjointly
            auto s0 = shifts.find(0);
            auto s1 = shifts.find(1);
            if (s0 != shifts.end()) acc += s0->second * (1.0 - x);
            if (s1 != shifts.end()) acc += s1->second * x;
            continue;
        }
        long cell = dyadic_cell(x, level);
        auto sit = shifts.find(cell);
        if (sit == shifts.end()) continue;
        Real v = hat(std::ldexp(x, level + 1) - 2.0 * static_cast<Real>(cell));
        acc += sit->second * v;
    }
    return acc;
}

Real faber_coeff(const Oracle& f, const DyadicIndex& idx) {
    if (f.dim != 1) throw std::invalid_argument("faber_coeff: univariate oracle required");
    if (!idx.valid()) throw std::invalid_argument("faber_coeff: invalid index");
    if (idx.level == -1) return f({static_cast<Real>(idx.shift)});
    Real base = std::ldexp(static_cast<Real>(idx.shift), -idx.level);
    Real half = std::ldexp(1.0, -idx.level - 1);
    return -0.5 * (f({base + 2.0 * half}) - 2.0 * f({base + half}) + f({base}));
}

UnivariateExpansion truncate_univariate(const Oracle& f, int m) {
    if (m < 0) throw std::invalid_argument("truncate_univariate: level must be >= 0");
    UnivariateExpansion out(m);
    for (int k = 0; k <= m; ++k)
        for (long s = 0; s < shifts_per_level(k); ++s)
            out.set({k, s}, faber_coeff(f, {k, s}));
    return out;
}

Real UnivariateQuantizedCode::eval(Real x) const {
    long last = (1L << (level + 1)) - 1;
    Real t = std::ldexp(x, level + 1);
    auto s = static_cast<long>(std::floor(t));
    if (s < 0) s = 0;
    if (s > last) s = last;
    Real u = unit();
    Real left = u * static_cast<Real>(l[static_cast<size_t>(s)]);
    Real right = s + 1 <= last ? u * static_cast<Real>(l[static_cast<size_t>(s + 1)]) : 0.0;
    return left + (t - static_cast<Real>(s)) * (right - left);
}

bool UnivariateQuantizedCode::chain_ok() const {
    if (l.empty() || l[0] != 0) return false;
    for (size_t s = 1; s < l.size(); ++s)
        if (std::llabs(l[s] - l[s - 1]) > 1) return false;
    return true;
}

UnivariateQuantizedCode quantize_values(const std::vector<Real>& values, int level, Real alpha) {
    if (level < 0) throw std::invalid_argument("quantize: level must be >= 0");
    if (alpha <= 0.0 || alpha > 1.0) throw std::invalid_argument("quantize: alpha in (0,1] required");
    long count = 1L << (level + 1);
    if (static_cast<long>(values.size()) != count)
        throw std::invalid_argument("quantize: wrong node count");
    if (std::abs(values[0]) > 1e-12)
        throw std::invalid_argument("quantize: function must vanish at 0");

    UnivariateQuantizedCode code{level, alpha, std::vector<long long>(static_cast<size_t>(count), 0)};
    Real scale = std::exp2(alpha * (level + 1)); // 1/unit
    for (long s = 1; s < count; ++s) {
        Real t = values[static_cast<size_t>(s)] * scale;
        Real lo = std::floor(t);
        Real d0 = t - lo, d1 = lo + 1.0 - t;
        long long prev = code.l[static_cast<size_t>(s - 1)];
        long long pick;
        if (std::abs(d0 - d1) <= 1e-12 * std::max(1.0, std::abs(t))) {
            // exact (or float-blurred) tie: take the candidate nearer the previous level
            auto c0 = static_cast<long long>(lo);
            pick = std::llabs(c0 - prev) <= std::llabs(c0 + 1 - prev) ? c0 : c0 + 1;
        } else {
            pick = static_cast<long long>(lo) + (d0 < d1 ? 0 : 1);
        }
        code.l[static_cast<size_t>(s)] = pick;
    }
    return code;
}

UnivariateQuantizedCode quantize(const Oracle& f, int level, Real alpha) {
    if (f.dim != 1) throw std::invalid_argument("quantize: univariate oracle required");
    if (level < 0) throw std::invalid_argument("quantize: level must be >= 0");
    long count = 1L << (level + 1);
    std::vector<Real> values(static_cast<size_t>(count));
    for (long s = 0; s < count; ++s)
        values[static_cast<size_t>(s)] = f({std::ldexp(static_cast<Real>(s), -level - 1)});
    return quantize_values(values, level, alpha);
}

} // namespace faber
