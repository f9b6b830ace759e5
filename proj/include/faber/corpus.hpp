#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "faber/oracle.hpp"
#include "faber/tensor.hpp"

namespace faber {

/// Recipe for a test function vanishing on the boundary with mixed Hoelder
/// norm at most 1.
///
///   tensor-smooth  c * prod_i g(x_i) with g one of {poly, sinpi, kink};
///                  the factorized norm is known in closed form.
///   faber-random   seeded hierarchical expansion, |coeff| within the
///                  per-level class envelope, then shrunk by the analytic
///                  norm certificate.
///   fooling        single-scale expansion (|k|_1 = level) with alternating
///                  signs at the envelope, shrunk the same way; concentrates
///                  all detail where a truncation at level-1 must pay.
struct FunctionSpec {
    std::string family = "tensor-smooth"; // tensor-smooth | faber-random | fooling
    int dim = 1;
    Real alpha = 1.0;
    std::uint64_t seed = 0;
    std::string g = "poly"; // tensor-smooth factor: poly | sinpi | kink
    int level = 3;          // expansion depth for the seeded families
    Real scale = 1.0;       // extra shrink factor in (0, 1]

    std::string to_record() const;
    static FunctionSpec parse_record(const std::string& record);
    /// short tag for report rows
    std::string label() const;
};

Oracle make_function(const FunctionSpec& spec);

/// Empirical lower bound on the mixed seminorm over coordinate subset u:
/// max over sampled (x, h) pairs, both uniform and dyadic, of
/// prod_{i in u} h_i^{-alpha} |Delta_{h,u} f(x)|. u empty gives a sup-norm
/// estimate.
Real seminorm_estimate(const Oracle& f, Real alpha, const std::vector<int>& u, long trials,
                       std::uint64_t seed = 0);

/// Maximum of seminorm_estimate over all 2^dim coordinate subsets.
Real norm_estimate(const Oracle& f, Real alpha, long trials_per_subset, std::uint64_t seed = 0);

/// A deterministic batch of corpus specs covering all families.
std::vector<FunctionSpec> standard_corpus(int dim, Real alpha, int count);

} // namespace faber
