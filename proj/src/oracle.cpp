#include "primpack/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "primpack/counting.hpp"
#include "primpack/packing.hpp"

namespace primpack {

namespace {

void require_dk(int d, long long k, const char* who) {
    if (d < 2) throw std::invalid_argument(std::string(who) + ": d must be >= 2");
    if (k < 1) throw std::invalid_argument(std::string(who) + ": k must be >= 1");
}

std::size_t checked_state_count(int d, long long k, std::size_t cap) {
    std::size_t states = 1;
    for (int i = 0; i < d; ++i) {
        if (states > cap / static_cast<std::size_t>(k + 1))
            throw resource_limit_error("oracle: budget lattice of " + std::to_string(k + 1) +
                                       "^" + std::to_string(d) + " states exceeds the cap of " +
                                       std::to_string(cap));
        states *= static_cast<std::size_t>(k + 1);
    }
    return states;
}

void gen_box(int d, long long k, long long norm_budget, int pos, bool all_zero,
             Point& acc, std::vector<Point>& out, std::size_t cap) {
    if (pos == d) {
        if (!all_zero && norm1(acc) <= norm_budget && is_primitive(acc)) {
            out.push_back(acc);
            if (out.size() > cap)
                throw resource_limit_error("oracle: candidate count exceeds the cap of " +
                                           std::to_string(cap));
        }
        return;
    }
    long long lo = all_zero ? 0 : -k;
    for (long long v = lo; v <= k; ++v) {
        acc[pos] = v;
        gen_box(d, k, norm_budget, pos + 1, all_zero && v == 0, acc, out, cap);
    }
}

// One in-place item update over every budget state >= w componentwise, in
// descending flat order so each item is used at most once.
template <typename Fn>
void foreach_state_desc(int d, long long k, const std::vector<long long>& w,
                        const std::vector<std::size_t>& stride, Fn&& fn) {
    std::vector<long long> b(d - 1, k);
    for (;;) {
        std::size_t rowbase = 0;
        for (int i = 0; i < d - 1; ++i) rowbase += static_cast<std::size_t>(b[i]) * stride[i];
        const std::size_t lo = rowbase + static_cast<std::size_t>(w[d - 1]);
        for (std::size_t idx = rowbase + static_cast<std::size_t>(k); idx + 1 > lo; --idx)
            fn(idx);
        int i = d - 2;
        for (; i >= 0; --i) {
            if (b[i] > w[i]) { --b[i]; break; }
            b[i] = k;
        }
        if (i < 0) break;
    }
}

std::vector<long long> abs_weights(const Point& x) {
    std::vector<long long> w(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) w[i] = x[i] < 0 ? -x[i] : x[i];
    return w;
}

struct Dp {
    int d;
    long long k;
    std::size_t states;
    std::vector<std::size_t> stride;

    Dp(int d_, long long k_, std::size_t cap) : d(d_), k(k_) {
        states = checked_state_count(d, k, cap);
        stride.assign(d, 1);
        for (int i = d - 2; i >= 0; --i)
            stride[i] = stride[i + 1] * static_cast<std::size_t>(k + 1);
    }

    std::size_t offset_of(const std::vector<long long>& w) const {
        std::size_t off = 0;
        for (int i = 0; i < d; ++i) off += static_cast<std::size_t>(w[i]) * stride[i];
        return off;
    }

    void apply_item(std::vector<uint32_t>& best, const std::vector<long long>& w) const {
        const std::size_t off = offset_of(w);
        foreach_state_desc(d, k, w, stride, [&](std::size_t idx) {
            uint32_t cand = best[idx - off] + 1;
            if (cand > best[idx]) best[idx] = cand;
        });
    }

    void apply_item_counting(std::vector<uint32_t>& best, std::vector<BigInt>& count,
                             const std::vector<long long>& w) const {
        const std::size_t off = offset_of(w);
        foreach_state_desc(d, k, w, stride, [&](std::size_t idx) {
            const std::size_t src = idx - off;
            uint32_t cand = best[src] + 1;
            if (cand > best[idx]) {
                best[idx] = cand;
                count[idx] = count[src];
            } else if (cand == best[idx]) {
                count[idx] += count[src];
            }
        });
    }
};

}  // namespace

HalfPointSet candidate_points(int d, long long k, const OracleLimits& limits) {
    require_dk(d, k, "candidate_points");
    std::vector<Point> out;
    Point acc(d);
    gen_box(d, k, static_cast<long long>(d) * k, 0, true, acc, out, limits.candidate_cap);
    std::sort(out.begin(), out.end());
    return HalfPointSet::of_sorted_unchecked(d, std::move(out));
}

OracleResult solve_with_items(int d, long long k, const std::vector<Point>& items,
                              const OracleLimits& limits) {
    require_dk(d, k, "solve_exact");
    for (const Point& x : items)
        if (static_cast<int>(x.size()) != d)
            throw std::invalid_argument("solve_exact: item dimension mismatch");
    if (items.size() > limits.candidate_cap)
        throw resource_limit_error("oracle: item count exceeds the candidate cap");

    Dp dp(d, k, limits.state_cap);
    const std::size_t n = items.size();
    std::vector<std::vector<long long>> weights(n);
    for (std::size_t t = 0; t < n; ++t) weights[t] = abs_weights(items[t]);

    // Forward pass with counting; snapshot `best` every `chunk` items so the
    // witness backtrack can replay one segment at a time.
    const std::size_t chunk =
        std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n) + 1.0)));
    std::vector<uint32_t> best(dp.states, 0);
    std::vector<BigInt> count(dp.states, 1);
    std::vector<std::vector<uint32_t>> snapshots;
    for (std::size_t t = 0; t < n; ++t) {
        if (t % chunk == 0) snapshots.push_back(best);
        dp.apply_item_counting(best, count, weights[t]);
    }

    const std::size_t full = dp.states - 1;
    OracleResult res;
    res.max_size = best[full];
    res.optimum_count = count[full];

    // Backtrack, replaying each segment from its snapshot.  Exclusion wins
    // whenever the prefix alone still reaches the target value.
    std::vector<Point> chosen;
    long long v = res.max_size;
    std::size_t cur = full;
    std::vector<long long> budget(d, k);
    std::vector<std::vector<uint32_t>> layers;
    for (std::size_t seg = snapshots.size(); seg-- > 0 && n > 0;) {
        const std::size_t t0 = seg * chunk;
        const std::size_t t1 = std::min(n, t0 + chunk);
        layers.assign(1, snapshots[seg]);
        for (std::size_t t = t0; t + 1 < t1; ++t) {
            layers.push_back(layers.back());
            dp.apply_item(layers.back(), weights[t]);
        }
        for (std::size_t t = t1; t-- > t0;) {
            const auto& before = layers[t - t0];
            if (before[cur] == v) continue;  // prefer exclusion
            const auto& w = weights[t];
            bool fits = true;
            for (int i = 0; i < d; ++i)
                if (budget[i] < w[i]) { fits = false; break; }
            if (!fits || before[cur - dp.offset_of(w)] != v - 1)
                throw std::logic_error("oracle: witness backtracking lost the optimum");
            chosen.push_back(items[t]);
            for (int i = 0; i < d; ++i) budget[i] -= w[i];
            cur -= dp.offset_of(w);
            --v;
        }
    }
    if (v != 0) throw std::logic_error("oracle: witness size mismatch after backtracking");
    std::sort(chosen.begin(), chosen.end());
    res.witness = HalfPointSet::of(d, std::move(chosen));
    if (kappa(res.witness) > k) throw std::logic_error("oracle: witness violates the budget");
    return res;
}

OracleResult solve_exact(int d, long long k, const OracleLimits& limits) {
    return solve_with_items(d, k, candidate_points(d, k, limits).points(), limits);
}

long long max_sandwiched(int d, long long k, const OracleLimits& limits) {
    require_dk(d, k, "max_sandwiched");
    const long long p = locate_shell(d, k);
    const BallStats prev = ball_stats(d, p - 1);
    const long long r = k - prev.kappa;
    if (r < 0) throw std::logic_error("max_sandwiched: forced ball infeasible");
    if (r == 0) return prev.half_count;

    std::vector<Point> items;
    for (const Point& x : enumerate_shell_half(d, p)) {
        bool ok = true;
        for (Coord c : x)
            if ((c < 0 ? -c : c) > r) { ok = false; break; }
        if (ok) items.push_back(x);
    }

    Dp dp(d, r, limits.state_cap);
    std::vector<uint32_t> best(dp.states, 0);
    for (const Point& x : items) dp.apply_item(best, abs_weights(x));
    return prev.half_count + best[dp.states - 1];
}

}  // namespace primpack
