#include "faber/dyadic.hpp"

namespace faber {

namespace {

void levels_rec(int dim, int pos, int remaining, MultiIndex& cur, bool exact,
                std::vector<MultiIndex>& out) {
    if (pos == dim) {
        if (!exact || remaining == 0) out.push_back(cur);
        return;
    }
    if (pos == dim - 1 && exact) {
        cur[pos] = remaining;
        out.push_back(cur);
        cur[pos] = 0;
        return;
    }
    for (int k = 0; k <= remaining; ++k) {
        cur[pos] = k;
        levels_rec(dim, pos + 1, remaining - k, cur, exact, out);
    }
    cur[pos] = 0;
}

} // namespace

std::vector<MultiIndex> enumerate_levels(int dim, int budget, bool exact) {
    if (dim < 0 || budget < 0) throw std::invalid_argument("enumerate_levels: bad arguments");
    std::vector<MultiIndex> out;
    if (dim == 0) {
        out.push_back({});
        return out;
    }
    MultiIndex cur(dim, 0);
    if (exact) {
        levels_rec(dim, 0, budget, cur, true, out);
    } else {
        for (int total = 0; total <= budget; ++total) {
            std::vector<MultiIndex> level;
            levels_rec(dim, 0, total, cur, true, level);
            out.insert(out.end(), level.begin(), level.end());
        }
    }
    return out;
}

std::vector<ShiftVector> enumerate_shifts(const MultiIndex& levels) {
    std::vector<ShiftVector> out;
    ShiftVector cur(levels.size(), 0);
    long count = 1;
    for (int k : levels) count *= shifts_per_level(k);
    out.reserve(static_cast<size_t>(count));
    for (long idx = 0; idx < count; ++idx) {
        long rem = idx;
        for (int i = static_cast<int>(levels.size()) - 1; i >= 0; --i) {
            long card = shifts_per_level(levels[i]);
            cur[i] = rem % card;
            rem /= card;
        }
        out.push_back(cur);
    }
    return out;
}

} // namespace faber
