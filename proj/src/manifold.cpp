#include "faber/manifold.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace faber {

namespace {

struct StencilEntry {
    Real coord;
    Real weight;
};

// per-coordinate residual stencil: identity minus nodal interpolation
void residual_stencil(Real x, int level, std::vector<StencilEntry>& out) {
    out.clear();
    out.push_back({x, 1.0});
    if (level == 0) return;
    long cell = dyadic_cell(x, level);
    Real h = std::ldexp(1.0, -level);
    Real t = std::ldexp(x, level) - static_cast<Real>(cell);
    if (t != 1.0) out.push_back({static_cast<Real>(cell) * h, -(1.0 - t)});
    if (t != 0.0) out.push_back({static_cast<Real>(cell + 1) * h, -t});
}

} // namespace

Real T_eval(const Oracle& f, const MultiIndex& k, std::span<const Real> x) {
    int d = f.dim;
    if (static_cast<int>(k.size()) != d || static_cast<int>(x.size()) != d)
        throw std::invalid_argument("T_eval: dimension mismatch");
    std::vector<std::vector<StencilEntry>> per_coord(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        if (k[static_cast<size_t>(i)] < 0) throw std::invalid_argument("T_eval: negative level");
        residual_stencil(x[static_cast<size_t>(i)], k[static_cast<size_t>(i)], per_coord[static_cast<size_t>(i)]);
    }
    Real acc = 0.0;
    Point p(static_cast<size_t>(d));
    std::vector<size_t> pos(static_cast<size_t>(d), 0);
    while (true) {
        Real w = 1.0;
        for (int i = 0; i < d; ++i) {
            const auto& e = per_coord[static_cast<size_t>(i)][pos[static_cast<size_t>(i)]];
            w *= e.weight;
            p[static_cast<size_t>(i)] = e.coord;
        }
        acc += w * f(p);
        int i = d - 1;
        while (i >= 0 && ++pos[static_cast<size_t>(i)] == per_coord[static_cast<size_t>(i)].size()) {
            pos[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    return acc;
}

Real T_localized_eval(const Oracle& f, const MultiIndex& k, const ShiftVector& s,
                      std::span<const Real> x, Real alpha) {
    int d = f.dim;
    if (static_cast<int>(k.size()) != d || s.size() != k.size() || static_cast<int>(x.size()) != d)
        throw std::invalid_argument("T_localized_eval: dimension mismatch");
    Point mapped(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        if (!DyadicIndex{k[static_cast<size_t>(i)], s[static_cast<size_t>(i)]}.valid() || k[static_cast<size_t>(i)] < 0)
            throw std::invalid_argument("T_localized_eval: invalid index");
        mapped[static_cast<size_t>(i)] =
            std::ldexp(x[static_cast<size_t>(i)] + static_cast<Real>(s[static_cast<size_t>(i)]), -k[static_cast<size_t>(i)]);
    }
    Real scale = std::exp2(alpha * static_cast<Real>(level_sum(k)) - static_cast<Real>(d));
    return scale * T_eval(f, k, mapped);
}

Oracle localized_residual_oracle(const Oracle& f, const MultiIndex& k, const ShiftVector& s,
                                 Real alpha) {
    return Oracle{f.dim, [f, k, s, alpha](std::span<const Real> x) {
                      return T_localized_eval(f, k, s, x, alpha);
                  }};
}

Oracle head_difference_oracle(const Oracle& f, const MultiIndex& head_levels,
                              const ShiftVector& head_shifts, bool normalized, Real alpha) {
    int d = f.dim;
    int j = static_cast<int>(head_levels.size());
    if (j == 0) return f;
    if (j >= d || head_shifts.size() != head_levels.size())
        throw std::invalid_argument("head_difference_oracle: bad head length");

    static const Real w3[3] = {1.0, -2.0, 1.0};
    Real norm = 1.0;
    for (int k : head_levels)
        norm *= -0.5 * (normalized ? std::exp2(alpha * static_cast<Real>(k + 1)) : 1.0);
    long points = 1;
    for (int i = 0; i < j; ++i) points *= 3;
    std::vector<std::pair<Point, Real>> stencil;
    stencil.reserve(static_cast<size_t>(points));
    for (long idx = 0; idx < points; ++idx) {
        long rem = idx;
        Real w = norm;
        Point head(static_cast<size_t>(j));
        for (int i = 0; i < j; ++i) {
            int q = static_cast<int>(rem % 3);
            rem /= 3;
            w *= w3[q];
            if (!DyadicIndex{head_levels[static_cast<size_t>(i)], head_shifts[static_cast<size_t>(i)]}.valid())
                throw std::invalid_argument("head_difference_oracle: invalid index");
            head[static_cast<size_t>(i)] =
                std::ldexp(static_cast<Real>(head_shifts[static_cast<size_t>(i)]), -head_levels[static_cast<size_t>(i)]) +
                static_cast<Real>(q) * std::ldexp(1.0, -head_levels[static_cast<size_t>(i)] - 1);
        }
        stencil.emplace_back(std::move(head), w);
    }
    auto fn = [f, stencil = std::move(stencil), d, j](std::span<const Real> tail) -> Real {
        Point p(static_cast<size_t>(d));
        for (int i = j; i < d; ++i) p[static_cast<size_t>(i)] = tail[static_cast<size_t>(i - j)];
        Real acc = 0.0;
        for (const auto& [head, w] : stencil) {
            for (int i = 0; i < j; ++i) p[static_cast<size_t>(i)] = head[static_cast<size_t>(i)];
            acc += w * f(p);
        }
        return acc;
    };
    return Oracle{d - j, std::move(fn)};
}

Real layer_F_eval(const Oracle& f, const MultiIndex& head_levels, int n,
                  std::span<const Real> x) {
    int d = f.dim;
    int j = static_cast<int>(head_levels.size());
    if (j > d - 1) throw std::invalid_argument("layer_F_eval: head too long");
    long head_sum = level_sum(head_levels);
    if (head_sum > n) throw std::invalid_argument("layer_F_eval: |k|_1 exceeds n");
    int L = n + 1 - static_cast<int>(head_sum);

    MultiIndex tail_k(static_cast<size_t>(d - j), 0);
    tail_k[0] = L;
    if (j == 0) return T_eval(f, tail_k, x);

    // only the cell of x_head contributes at this level
    ShiftVector cells(static_cast<size_t>(j));
    Real phi = 1.0;
    for (int i = 0; i < j; ++i) {
        long c = dyadic_cell(x[static_cast<size_t>(i)], head_levels[static_cast<size_t>(i)]);
        cells[static_cast<size_t>(i)] = c;
        phi *= hat(std::ldexp(x[static_cast<size_t>(i)], head_levels[static_cast<size_t>(i)] + 1) - 2.0 * static_cast<Real>(c));
        if (phi == 0.0) return 0.0;
    }
    Oracle g = head_difference_oracle(f, head_levels, cells, /*normalized=*/false, 1.0);
    return phi * T_eval(g, tail_k, x.subspan(static_cast<size_t>(j)));
}

std::vector<GammaTriple> gamma_set(int j, int n, int dim) {
    if (j < 0 || j > dim - 1 || n < 0) throw std::invalid_argument("gamma_set: bad arguments");
    std::vector<GammaTriple> out;
    for (const auto& k : enumerate_levels(j, n)) {
        long cells = 1L << (n + 1 - level_sum(k));
        for (const auto& s : enumerate_shifts(k))
            for (long c = 0; c < cells; ++c) out.push_back({k, s, c});
    }
    return out;
}

long long gamma_size(int j, int n) {
    return (1LL << (n + 1)) * binomial(n + j, j);
}

Real ManifoldCode::eval(std::span<const Real> x) const {
    if (static_cast<int>(x.size()) != dim)
        throw std::invalid_argument("ManifoldCode::eval: dimension mismatch");
    Real acc = lambda_R.eval(x);
    Point arg;
    for (int j = 0; j < dim && j < static_cast<int>(layers.size()); ++j) {
        const LayerCode& layer = layers[static_cast<size_t>(j)];
        if (layer.theta.empty()) continue;
        Real weight = std::exp2(static_cast<Real>(dim - j) - alpha * static_cast<Real>(n + 1 + j));
        long offset = 0;
        for (const auto& k : enumerate_levels(j, n)) {
            int L = n + 1 - static_cast<int>(level_sum(k));
            long block = (1L << L) << level_sum(k);
            // cell and hat product over the head coordinates
            Real phi = 1.0;
            long shift_rank = 0;
            for (int i = 0; i < j; ++i) {
                long c = dyadic_cell(x[static_cast<size_t>(i)], k[static_cast<size_t>(i)]);
                shift_rank = shift_rank * shifts_per_level(k[static_cast<size_t>(i)]) + c;
                phi *= hat(std::ldexp(x[static_cast<size_t>(i)], k[static_cast<size_t>(i)] + 1) - 2.0 * static_cast<Real>(c));
                if (phi == 0.0) break;
            }
            if (phi != 0.0) {
                Real t = std::ldexp(x[static_cast<size_t>(j)], L);
                long cell = static_cast<long>(std::floor(t));
                if (cell < 0) cell = 0;
                if (cell >= (1L << L)) cell = (1L << L) - 1;
                long idx = offset + shift_rank * (1L << L) + cell;
                if (idx < 0 || idx >= static_cast<long>(layer.theta.size()))
                    throw std::out_of_range("ManifoldCode::eval: assignment table too short");
                int theta = layer.theta[static_cast<size_t>(idx)];
                if (theta < 1 || theta > static_cast<int>(layer.dictionary.size()))
                    throw std::out_of_range("ManifoldCode::eval: assignment index outside dictionary");
                arg.assign(x.begin() + j, x.end());
                arg[0] = t - static_cast<Real>(cell);
                acc += weight * phi * layer.dictionary[static_cast<size_t>(theta - 1)].eval(arg);
            }
            offset += block;
        }
    }
    return acc;
}

Oracle ManifoldCode::as_oracle() const {
    return Oracle{dim, [copy = *this](std::span<const Real> x) { return copy.eval(x); }};
}

long long ManifoldCode::parameter_count() const {
    long long total = lambda_R.coefficient_count();
    for (const auto& layer : layers) {
        for (const auto& entry : layer.dictionary) total += entry.parameter_count();
        total += static_cast<long long>(layer.theta.size());
    }
    return total;
}

namespace {

void check_boundary_vanishing(const Oracle& f) {
    Rng rng(0x0b0d);
    Point p(static_cast<size_t>(f.dim));
    for (int i = 0; i < f.dim; ++i) {
        for (Real face : {0.0, 1.0}) {
            for (int trial = 0; trial < 16; ++trial) {
                for (int q = 0; q < f.dim; ++q) p[static_cast<size_t>(q)] = rng.next_real();
                p[static_cast<size_t>(i)] = face;
                if (std::abs(f(p)) > 1e-12)
                    throw std::invalid_argument("encode: function does not vanish on the boundary");
            }
        }
    }
}

std::string bank_signature(const CoveringCode& code) {
    std::ostringstream os;
    for (const auto& [key, univ] : code.banks) {
        for (long long v : univ.l) os << v << ',';
        os << ';';
    }
    return os.str();
}

} // namespace

ManifoldCode encode(const Oracle& f, int m, int n, Real alpha) {
    int d = f.dim;
    if (m < 1 || n < 1) throw std::invalid_argument("encode: m, n >= 1 required");
    if (d < 1) throw std::invalid_argument("encode: dimension >= 1 required");
    if (alpha <= 0.0 || alpha > 1.0) throw std::invalid_argument("encode: alpha in (0,1] required");
    check_boundary_vanishing(f);

    Oracle fm = memoized(f);
    ManifoldCode code;
    code.dim = d;
    code.alpha = alpha;
    code.m = m;
    code.n = n;
    code.lambda_R = sparse_truncate(fm, n, d);
    code.layers.resize(static_cast<size_t>(d));

    for (int j = 0; j < d; ++j) {
        LayerCode& layer = code.layers[static_cast<size_t>(j)];
        layer.j = j;
        std::unordered_map<std::string, int> dict_index;
        MultiIndex loc_k(static_cast<size_t>(d - j), 0);
        ShiftVector loc_s(static_cast<size_t>(d - j), 0);
        for (const auto& k : enumerate_levels(j, n)) {
            int L = n + 1 - static_cast<int>(level_sum(k));
            for (const auto& s : enumerate_shifts(k)) {
                Oracle g = head_difference_oracle(fm, k, s, /*normalized=*/true, alpha);
                for (long cell = 0; cell < (1L << L); ++cell) {
                    loc_k[0] = L;
                    loc_s[0] = cell;
                    Oracle h = localized_residual_oracle(g, loc_k, loc_s, alpha);
                    CoveringCode entry = build_covering(h, m, d - j, alpha);
                    auto [it, inserted] =
                        dict_index.emplace(bank_signature(entry), static_cast<int>(layer.dictionary.size()) + 1);
                    if (inserted) layer.dictionary.push_back(std::move(entry));
                    layer.theta.push_back(it->second);
                }
            }
        }
    }
    return code;
}

Real pipeline_error_bound(Real alpha, int dim, int m, int n) {
    if (alpha <= 0.0 || alpha > 1.0 || dim < 1 || m < 0 || n < 0)
        throw std::invalid_argument("pipeline_error_bound: bad arguments");
    Real B = 1.0 / (std::exp2(alpha) - 1.0);
    return std::exp2(-alpha + 1.0) * std::pow(2.0 * B, dim) * std::exp2(-alpha * (m + n)) *
           static_cast<Real>(binomial(m + n + dim, dim - 1));
}

namespace {

BigUint big_pow2(unsigned long long e) { return BigUint::pow(2, e); }

BigUint big_binom(long long nn, long long rr) {
    return BigUint(static_cast<unsigned long long>(binomial(nn, rr)));
}

// 3^{2^{m+1} binom(m+d-1,d-1)} 2^{m+1} binom(m+d,d-1)
BigUint dictionary_budget_term(int m, int dim) {
    auto exponent = static_cast<unsigned long long>(
        (1ULL << (m + 1)) * static_cast<unsigned long long>(binomial(m + dim - 1, dim - 1)));
    return BigUint::pow(3, exponent) * big_pow2(static_cast<unsigned long long>(m + 1)) *
           big_binom(m + dim, dim - 1);
}

// 2^{n+2} binom(n+d,d-1)
BigUint resolution_budget_term(int n, int dim) {
    return big_pow2(static_cast<unsigned long long>(n + 2)) * big_binom(n + dim, dim - 1);
}

BigUint big_dim_Fdm(int m, int dim) {
    BigUint total(0ULL);
    for (int l = 0; l <= m; ++l)
        total += big_pow2(static_cast<unsigned long long>(l)) * big_binom(l + dim - 1, dim - 1);
    return total;
}

} // namespace

ParamBudget budget(int m, int n, int dim) {
    if (m < 0 || n < 0 || dim < 1) throw std::invalid_argument("budget: bad arguments");
    ParamBudget out;
    out.m = m;
    out.n = n;
    out.dim = dim;
    for (int j = 0; j < dim; ++j) {
        out.gamma_sizes.push_back(big_pow2(static_cast<unsigned long long>(n + 1)) * big_binom(n + j, j));
        out.dict_bounds.push_back(cardinality_bound(m, dim - j));
    }
    out.n_mn_bound = dictionary_budget_term(m, dim) + resolution_budget_term(n, dim);
    out.k_mn = big_dim_Fdm(m + n + 1, dim);
    return out;
}

SelectedParams select_params(const BigUint& N, int dim) {
    if (dim < 1) throw std::invalid_argument("select_params: dimension >= 1 required");
    SelectedParams out;
    // N(d) = 3^{2^{d+2} binom(2d, d-1)} 2^{d+3} binom(2d+1, d-1)
    auto exponent = static_cast<unsigned long long>(
        (1ULL << (dim + 2)) * static_cast<unsigned long long>(binomial(2 * dim, dim - 1)));
    out.threshold = BigUint::pow(3, exponent) * big_pow2(static_cast<unsigned long long>(dim + 3)) *
                    big_binom(2 * dim + 1, dim - 1);
    out.meets_threshold = N >= out.threshold;

    // largest n with 2 * 2^{n+2} binom(n+d, d-1) <= N  (i.e. term <= N/2)
    int n = 0;
    for (int cand = 1;; ++cand) {
        BigUint lhs = resolution_budget_term(cand, dim) * BigUint(2ULL);
        if (lhs <= N)
            n = cand;
        else
            break;
    }
    int m = 0;
    for (int cand = 1;; ++cand) {
        BigUint lhs = dictionary_budget_term(cand, dim) * BigUint(2ULL);
        if (lhs <= N)
            m = cand;
        else
            break;
    }
    if (n == 0 || m == 0) {
        out.feasible = false;
        return out;
    }
    out.feasible = true;
    out.m = m;
    out.n = n;
    out.m_star = m + n;
    out.regime_ok = n >= m && m >= dim + 1;
    return out;
}

Real theorem_upper_bound(const BigUint& N, int dim, Real alpha) {
    if (dim < 1 || alpha <= 0.0 || alpha > 1.0) throw std::invalid_argument("theorem_upper_bound: bad arguments");
    if (N < BigUint(4ULL)) throw std::invalid_argument("theorem_upper_bound: N >= 4 required");
    Real logN = N.log2();
    Real loglogN = std::log2(logN);
    Real K = std::pow(std::pow(4.0, alpha) * 6.0 / (std::exp2(alpha) - 1.0), 1.0 / (2.0 * alpha + 1.0));
    Real C = std::exp2(7.0 * alpha + 2.0) / (std::exp2(alpha) - 1.0);
    Real dfact = 1.0;
    for (int i = 2; i <= dim - 1; ++i) dfact *= i;
    Real lead = C * std::pow(std::pow(K, dim - 1) / dfact, 2.0 * alpha + 1.0);
    // (N log N)^{-alpha} in log space so huge N cannot overflow
    Real n_logn = std::exp2(-alpha * (logN + std::log2(logN)));
    return lead * std::pow(logN, (dim - 1) * (alpha + 1.0)) * n_logn *
           std::pow(loglogN, (dim - 1) * alpha);
}

} // namespace faber
