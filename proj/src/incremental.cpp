#include "rankagg/incremental.hpp"

#include <utility>

namespace rankagg {

namespace {

// Contribution of one label v (ranked in s, between a and b in p) to the
// delta, given the buckets of a, b and v in s. Zero buckets mean unranked.
inline int between_contribution(int ba, int bb, int bv) {
    int c = 0;
    // p has a before v; after the swap v is before a.
    if (ba != 0 && bv != ba) c += ba < bv ? 1 : -1;
    // p has v before b; after the swap b is before v.
    if (bb != 0 && bv != bb) c += bv < bb ? 1 : -1;
    return c;
}

// a precedes b in p.
std::int64_t ordered_swap_delta(const Permutation& p, Label a, Label b, const Ranking& s) {
    const auto bucket = s.bucket_table();
    const int ba = bucket[static_cast<std::size_t>(a)];
    const int bb = bucket[static_cast<std::size_t>(b)];
    if (ba == 0 && bb == 0) return 0;

    std::int64_t delta = 0;
    if (ba != 0 && bb != 0 && ba != bb) delta += ba < bb ? 1 : -1;

    const int pa = p.rank_of(a);
    const int pb = p.rank_of(b);
    const int p_gap = pb - pa - 1;
    if (p_gap == 0) return delta;

    if (ba != 0 && bb != 0) {
        // Labels outside the closed bucket range [lo, hi] contribute zero.
        const auto start = s.bucket_start();
        const int lo = ba < bb ? ba : bb;
        const int hi = ba < bb ? bb : ba;
        const int first = start[static_cast<std::size_t>(lo - 1)];
        const int last = start[static_cast<std::size_t>(hi)];
        if (last - first - 2 < p_gap) {
            const auto flat = s.flat();
            const auto rank = p.rank_table();
            for (int k = first; k < last; ++k) {
                const Label v = flat[static_cast<std::size_t>(k)];
                const int pv = rank[static_cast<std::size_t>(v)];
                if (pv > pa && pv < pb) delta += between_contribution(ba, bb, bucket[static_cast<std::size_t>(v)]);
            }
            return delta;
        }
    }

    const auto order = p.order();
    for (int pos = pa + 1; pos < pb; ++pos) {
        const int bv = bucket[static_cast<std::size_t>(order[static_cast<std::size_t>(pos - 1)])];
        if (bv != 0) delta += between_contribution(ba, bb, bv);
    }
    return delta;
}

}  // namespace

std::int64_t swap_delta(const Permutation& p, Label a, Label b, const Ranking& s) {
    if (a == b) throw RankingError("swap needs two different labels");
    if (p.size() != s.universe()) throw RankingError("universe size mismatch in swap_delta");
    if (p.rank_of(a) > p.rank_of(b)) std::swap(a, b);
    return ordered_swap_delta(p, a, b, s);
}

std::int64_t fitness_delta(const Permutation& p, Label a, Label b, const Dataset& d) {
    if (a == b) throw RankingError("swap needs two different labels");
    if (p.size() != d.m()) throw RankingError("universe size mismatch in fitness_delta");
    if (p.rank_of(a) > p.rank_of(b)) std::swap(a, b);
    std::int64_t total = 0;
    for (const auto& s : d.rankings()) total += ordered_swap_delta(p, a, b, s);
    return total;
}

}  // namespace rankagg
