#include "faber/corpus.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "faber/textio.hpp"

namespace faber {

namespace {

Real factor_eval(const std::string& g, Real alpha, Real x) {
    if (g == "poly") return x * (1.0 - x);
    if (g == "sinpi") return std::sin(std::numbers::pi * x) / std::numbers::pi;
    if (g == "kink") return std::pow(std::min(x, 1.0 - x), alpha);
    throw std::invalid_argument("make_function: unknown factor '" + g + "'");
}

/// Upper bound on the mixed Hoelder norm of a finite expansion from its
/// per-level coefficient maxima A_k:
///   |f|_{H^alpha(u)} <= sum_k A_k (2^{1+alpha})^{|u|} 2^{alpha sum_{i in u} k_i}.
/// Each difference touches at most two hat supports per differenced
/// coordinate, and a hat at level k has Hoelder-alpha seminorm 2^{alpha(k+1)}.
Real norm_certificate(const SparseFaberExpansion& e, Real alpha) {
    int d = e.dim();
    Real worst = 0.0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        Real total = 0.0;
        for (const auto& [levels, shifts] : e.levels()) {
            Real a = 0.0;
            for (const auto& [s, c] : shifts) a = std::max(a, std::abs(c));
            if (a == 0.0) continue;
            Real weight = 1.0;
            for (int i = 0; i < d; ++i)
                if (mask & (1u << i))
                    weight *= std::exp2(1.0 + alpha + alpha * static_cast<Real>(levels[static_cast<size_t>(i)]));
            total += a * weight;
        }
        worst = std::max(worst, total);
    }
    return worst;
}

void rescale(SparseFaberExpansion& e, Real target_scale, Real alpha) {
    Real cert = norm_certificate(e, alpha);
    if (cert <= 0.0) return; // identically zero expansion
    Real rho = target_scale / std::max(1.0, cert);
    SparseFaberExpansion scaled(e.dim(), e.budget_level());
    for (const auto& [levels, shifts] : e.levels())
        for (const auto& [s, c] : shifts) scaled.set(levels, s, c * rho);
    e = std::move(scaled);
}

Oracle expansion_family(const FunctionSpec& spec, bool single_scale) {
    if (spec.level < 0) throw std::invalid_argument("make_function: negative level");
    SparseFaberExpansion e(spec.dim, spec.level);
    Rng rng(spec.seed);
    for (const auto& levels : enumerate_levels(spec.dim, spec.level, single_scale)) {
        Real envelope = std::exp2(-spec.alpha * static_cast<Real>(spec.dim) -
                                  spec.alpha * static_cast<Real>(level_sum(levels)));
        for (const auto& shifts : enumerate_shifts(levels)) {
            Real c;
            if (single_scale) {
                long parity = spec.seed;
                for (long s : shifts) parity += s;
                c = (parity % 2 == 0 ? 1.0 : -1.0) * envelope;
            } else {
                c = (2.0 * rng.next_real() - 1.0) * envelope;
            }
            e.set(levels, shifts, c);
        }
    }
    rescale(e, spec.scale, spec.alpha);
    return e.as_oracle();
}

} // namespace

std::string FunctionSpec::to_record() const {
    std::ostringstream os;
    os << "family=" << family << " d=" << dim << " alpha=" << real_to_string(alpha)
       << " seed=" << seed << " g=" << g << " level=" << level
       << " scale=" << real_to_string(scale);
    return os.str();
}

FunctionSpec FunctionSpec::parse_record(const std::string& record) {
    FunctionSpec spec;
    std::istringstream is(record);
    std::string token;
    while (is >> token) {
        auto eq = token.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("FunctionSpec: expected key=value, got '" + token + "'");
        std::string key = token.substr(0, eq), value = token.substr(eq + 1);
        if (key == "family")
            spec.family = value;
        else if (key == "d")
            spec.dim = static_cast<int>(int_from_string(value));
        else if (key == "alpha")
            spec.alpha = real_from_string(value);
        else if (key == "seed")
            spec.seed = static_cast<std::uint64_t>(int_from_string(value));
        else if (key == "g")
            spec.g = value;
        else if (key == "level")
            spec.level = static_cast<int>(int_from_string(value));
        else if (key == "scale")
            spec.scale = real_from_string(value);
        else
            throw std::invalid_argument("FunctionSpec: unknown key '" + key + "'");
    }
    return spec;
}

std::string FunctionSpec::label() const {
    // no commas so the label embeds cleanly in CSV rows
    std::ostringstream os;
    os << family;
    if (family == "tensor-smooth")
        os << '(' << g;
    else
        os << "(L" << level << ";s" << seed;
    if (scale != 1.0) os << ";c" << real_to_string(scale);
    os << ')';
    return os.str();
}

Oracle make_function(const FunctionSpec& spec) {
    if (spec.dim < 1) throw std::invalid_argument("make_function: dimension >= 1 required");
    if (spec.alpha <= 0.0 || spec.alpha > 1.0)
        throw std::invalid_argument("make_function: alpha in (0,1] required");
    if (spec.scale <= 0.0 || spec.scale > 1.0)
        throw std::invalid_argument("make_function: scale in (0,1] required");
    if (spec.family == "tensor-smooth") {
        std::string g = spec.g;
        Real alpha = spec.alpha, c = spec.scale;
        factor_eval(g, alpha, 0.5); // validate the factor name up front
        return Oracle{spec.dim, [g, alpha, c](std::span<const Real> x) {
                          Real prod = c;
                          for (Real xi : x) prod *= factor_eval(g, alpha, xi);
                          return prod;
                      }};
    }
    if (spec.family == "faber-random") return expansion_family(spec, /*single_scale=*/false);
    if (spec.family == "fooling") return expansion_family(spec, /*single_scale=*/true);
    throw std::invalid_argument("make_function: unknown family '" + spec.family + "'");
}

Real seminorm_estimate(const Oracle& f, Real alpha, const std::vector<int>& u, long trials,
                       std::uint64_t seed) {
    int d = f.dim;
    for (int i : u)
        if (i < 1 || i > d) throw std::invalid_argument("seminorm_estimate: subset out of range");
    if (trials < 1) throw std::invalid_argument("seminorm_estimate: trials >= 1 required");
    Rng rng(seed ^ 0x5eedULL);
    Point x(static_cast<size_t>(d)), h(static_cast<size_t>(d), 0.0), p(static_cast<size_t>(d));
    Real best = 0.0;
    const int max_dyadic_level = 12;
    for (long t = 0; t < trials; ++t) {
        bool dyadic = (t % 2 == 0); // half the probes on the grids the bounds live on
        Real hpow = 1.0;
        if (dyadic) {
            for (int i = 0; i < d; ++i)
                x[static_cast<size_t>(i)] =
                    std::ldexp(static_cast<Real>(rng.next_below((1L << max_dyadic_level) + 1)), -max_dyadic_level);
            for (int i : u) {
                int l = static_cast<int>(rng.next_below(max_dyadic_level + 1));
                Real hi = std::ldexp(1.0, -l);
                h[static_cast<size_t>(i - 1)] = hi;
                x[static_cast<size_t>(i - 1)] = static_cast<Real>(rng.next_below(1L << l)) * hi;
                hpow *= std::pow(hi, -alpha);
            }
        } else {
            for (int i = 0; i < d; ++i) x[static_cast<size_t>(i)] = rng.next_real();
            bool degenerate = false;
            for (int i : u) {
                Real room = 1.0 - x[static_cast<size_t>(i - 1)];
                Real hi = room * (1.0 - rng.next_real()); // in (0, room]
                if (hi <= 0.0) {
                    degenerate = true;
                    break;
                }
                h[static_cast<size_t>(i - 1)] = hi;
                hpow *= std::pow(hi, -alpha);
            }
            if (degenerate) continue;
        }
        // mixed difference over u
        Real delta = 0.0;
        auto subsets = 1u << u.size();
        for (unsigned mask = 0; mask < subsets; ++mask) {
            p = x;
            int ones = 0;
            for (size_t q = 0; q < u.size(); ++q)
                if (mask & (1u << q)) {
                    p[static_cast<size_t>(u[q] - 1)] += h[static_cast<size_t>(u[q] - 1)];
                    ++ones;
                }
            Real sign = ((static_cast<int>(u.size()) - ones) % 2 == 0) ? 1.0 : -1.0;
            delta += sign * f(p);
        }
        best = std::max(best, hpow * std::abs(delta));
    }
    return best;
}

Real norm_estimate(const Oracle& f, Real alpha, long trials_per_subset, std::uint64_t seed) {
    int d = f.dim;
    Real best = 0.0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<int> u;
        for (int i = 0; i < d; ++i)
            if (mask & (1u << i)) u.push_back(i + 1);
        best = std::max(best, seminorm_estimate(f, alpha, u, trials_per_subset, seed + mask));
    }
    return best;
}

std::vector<FunctionSpec> standard_corpus(int dim, Real alpha, int count) {
    std::vector<FunctionSpec> out;
    int i = 0;
    while (static_cast<int>(out.size()) < count) {
        FunctionSpec spec;
        spec.dim = dim;
        spec.alpha = alpha;
        Real cycle_scale = 1.0 - 0.25 * static_cast<Real>((i / 5) % 3);
        switch (i % 5) {
        case 0:
            spec.family = "tensor-smooth";
            spec.g = "poly";
            spec.scale = cycle_scale;
            break;
        case 1:
            spec.family = "tensor-smooth";
            spec.g = "sinpi";
            spec.scale = cycle_scale;
            break;
        case 2:
            spec.family = "faber-random";
            spec.level = 3;
            spec.seed = 100 + static_cast<std::uint64_t>(i);
            break;
        case 3:
            spec.family = "fooling";
            spec.level = 2;
            spec.seed = 200 + static_cast<std::uint64_t>(i);
            break;
        default:
            spec.family = alpha < 1.0 ? "tensor-smooth" : "faber-random";
            if (alpha < 1.0) {
                spec.g = "kink";
            } else {
                spec.level = 4;
                spec.seed = 300 + static_cast<std::uint64_t>(i);
            }
            break;
        }
        out.push_back(spec);
        ++i;
    }
    return out;
}

} // namespace faber
