#pragma once

#include <map>
#include <vector>

#include "faber/dyadic.hpp"
#include "faber/oracle.hpp"

namespace faber {

/// Finite hierarchical hat expansion on [0,1]; piecewise linear with
/// breakpoints on the dyadic grid of the deepest stored level.
class UnivariateExpansion {
  public:
    explicit UnivariateExpansion(int max_level = 0) : max_level_(max_level) {}

    void set(const DyadicIndex& idx, Real value);
    Real coefficient(const DyadicIndex& idx) const; // 0 when absent
    Real eval(Real x) const;

    int max_level() const { return max_level_; }
    /// level -> (shift -> coefficient), levels ascending
    const std::map<int, std::map<long, Real>>& levels() const { return levels_; }

  private:
    int max_level_;
    std::map<int, std::map<long, Real>> levels_;
};

/// Hierarchical coefficient -1/2 [f(2^{-k}(s+1)) - 2 f(2^{-k}s + 2^{-k-1}) + f(2^{-k}s)]
/// for level >= 0; the boundary value f(s) at level -1.
Real faber_coeff(const Oracle& f, const DyadicIndex& idx);

/// Truncation at level m: levels 0..m of the hierarchical expansion.
/// For f vanishing at 0 and 1, the result interpolates f at the nodes
/// s 2^{-m-1}, s = 1, ..., 2^{m+1}-1.
UnivariateExpansion truncate_univariate(const Oracle& f, int m);

/// Greedy nodal quantization of a univariate function at level `level`:
/// l_0 = 0 and l_s minimizes |2^{-alpha(level+1)} l - f(s 2^{-level-1})|,
/// ties broken toward l_{s-1}.
struct UnivariateQuantizedCode {
    int level = 0;
    Real alpha = 1.0;
    std::vector<long long> l; // indexed by s = 0, ..., 2^{level+1}-1

    Real unit() const { return std::exp2(-alpha * (level + 1)); }
    Real eval(Real x) const;
    bool chain_ok() const; // l_0 = 0 and |l_s - l_{s-1}| <= 1
};

UnivariateQuantizedCode quantize(const Oracle& f, int level, Real alpha);

/// Same as above for an already-sampled node sequence f(s 2^{-level-1}),
/// s = 0..2^{level+1} - 1 (values[0] must vanish).
UnivariateQuantizedCode quantize_values(const std::vector<Real>& values, int level, Real alpha);

} // namespace faber
