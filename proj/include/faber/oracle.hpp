#pragma once

#include <cstring>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "faber/dyadic.hpp"

namespace faber {

using Point = std::vector<Real>;

/// A pointwise-evaluable real function on [0,1]^dim.
struct Oracle {
    int dim = 0;
    std::function<Real(std::span<const Real>)> f;

    Real operator()(std::span<const Real> x) const { return f(x); }
    Real operator()(std::initializer_list<Real> x) const {
        return f(std::span<const Real>(x.begin(), x.size()));
    }
};

inline Oracle make_oracle(int dim, std::function<Real(std::span<const Real>)> fn) {
    return Oracle{dim, std::move(fn)};
}

inline Oracle make_oracle_1d(std::function<Real(Real)> fn) {
    return Oracle{1, [g = std::move(fn)](std::span<const Real> x) { return g(x[0]); }};
}

/// Wrap an oracle with a cache keyed by the exact bit pattern of the point.
/// All evaluation points in the pipeline are dyadic rationals, so bitwise
/// keys collide exactly when the points coincide.
Oracle memoized(Oracle inner);

/// Deterministic 64-bit generator (splitmix64). Used instead of std::
/// distributions so that streams are bit-stable across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform in [0, 1).
    Real next_real() { return static_cast<Real>(next_u64() >> 11) * 0x1.0p-53; }
    /// Uniform integer in [0, n).
    long next_below(long n) { return static_cast<long>(next_u64() % static_cast<std::uint64_t>(n)); }

  private:
    std::uint64_t state_;
};

} // namespace faber
