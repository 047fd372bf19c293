#include "edgedepth/formulas.hpp"
#include "edgedepth/errors.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace edgedepth {

long ceil_div(long a, long b) {
    long q = a / b, r = a % b;
    return q + ((r != 0 && (r > 0) == (b > 0)) ? 1 : 0);
}

long phi(long n, long t) { return ceil_div(n - t + 1, 3); }

long depth_path(long n) {
    if (n < 2)
        throw std::invalid_argument("depth_path: need n >= 2");
    return ceil_div(n, 3);
}

long depth_cycle(long n) {
    if (n < 3)
        throw std::invalid_argument("depth_cycle: need n >= 3");
    return ceil_div(n - 1, 3);
}

long depth_path_power(long n, long t) {
    if (n < 2 || t < 1)
        throw std::invalid_argument("depth_path_power: need n >= 2 and t >= 1");
    return std::max(phi(n, t), 1L);
}

long depth_cycle_power(long n, long t) {
    if (n < 3 || t < 1)
        throw std::invalid_argument("depth_cycle_power: need n >= 3 and t >= 1");
    if (n == 3)
        return t == 1 ? 1 : 0;
    if (n == 4)
        return 1;
    long stab = (n + 2) / 2; // ceil((n+1)/2)
    if (t == 1)
        return ceil_div(n - 1, 3);
    if (t < stab)
        return phi(n, t);
    return n % 2 == 0 ? 1 : 0;
}

long g_value(const std::vector<long>& a) {
    if (a.empty())
        throw std::invalid_argument("g_value: empty tuple");
    long sum = 0;
    bool has1 = false, has2 = false;
    for (long x : a) {
        if (x < 0)
            throw std::invalid_argument("g_value: negative entry");
        sum += ceil_div(x - 1, 3);
        has1 |= x % 3 == 1;
        has2 |= x % 3 == 2;
    }
    if (!(!has1 && has2))
        sum += 1;
    return sum;
}

long g_value(const StarlikeShape& shape) { return g_value(shape.branch_lengths); }

BetaSplit beta_split(const StarlikeShape& shape, long t) {
    if (t < 1)
        throw std::invalid_argument("beta_split: need t >= 1");
    BetaSplit out;
    out.reordered_a = shape.branch_lengths;
    auto rank = [](long x) {
        switch (x % 3) {
        case 2: return 0;
        case 0: return 1;
        default: return 2;
        }
    };
    std::sort(out.reordered_a.begin(), out.reordered_a.end(), [&](long x, long y) {
        if (rank(x) != rank(y))
            return rank(x) < rank(y);
        return x > y;
    });
    for (long x : out.reordered_a)
        ++out.alpha[static_cast<std::size_t>(x % 3)];
    long a2 = out.alpha[2], a0 = out.alpha[0];
    out.beta1 = std::min(a2, t - 1);
    out.beta2 = std::min(a0, std::max(0L, t - 1 - a2) / 2);
    out.beta3 = std::max(0L, t - 1 - out.beta1 - 2 * out.beta2) / 3;
    out.b = out.reordered_a;
    for (long i = 0; i < out.beta1; ++i)
        out.b[static_cast<std::size_t>(i)] -= 1;
    for (long i = a2; i < a2 + out.beta2; ++i)
        out.b[static_cast<std::size_t>(i)] -= 2;
    return out;
}

long min_g_after_spending(const std::vector<long>& a, long budget) {
    if (a.empty())
        throw std::invalid_argument("min_g_after_spending: empty tuple");
    if (budget < 0)
        throw std::invalid_argument("min_g_after_spending: negative budget");
    const long INF = LONG_MAX / 4;
    // dp[r][h]: spend exactly (budget - r) on a prefix; h bit 0 = some entry
    // ended 1 mod 3, bit 1 = some entry ended 2 mod 3
    std::vector<std::array<long, 4>> dp(static_cast<std::size_t>(budget) + 1,
                                        {INF, INF, INF, INF});
    dp[static_cast<std::size_t>(budget)][0] = 0;
    for (long ai : a) {
        std::vector<std::array<long, 4>> ndp(static_cast<std::size_t>(budget) + 1,
                                             {INF, INF, INF, INF});
        for (long r = budget; r >= 0; --r)
            for (int h = 0; h < 4; ++h) {
                long cur = dp[static_cast<std::size_t>(r)][h];
                if (cur >= INF)
                    continue;
                long max_spend = std::min(r, ai - 1);
                for (long spend = 0; spend <= max_spend; ++spend) {
                    long rest = ai - spend;
                    long cost = ceil_div(rest - 1, 3);
                    int nh = h | (rest % 3 == 1 ? 1 : 0) | (rest % 3 == 2 ? 2 : 0);
                    long& slot = ndp[static_cast<std::size_t>(r - spend)][nh];
                    slot = std::min(slot, cur + cost);
                }
            }
        dp = std::move(ndp);
    }
    long best = INF;
    for (int h = 0; h < 4; ++h) {
        long cur = dp[0][h];
        if (cur >= INF)
            continue;
        bool has1 = h & 1, has2 = h & 2;
        best = std::min(best, cur + ((!has1 && has2) ? 0 : 1));
    }
    if (best >= INF)
        throw std::invalid_argument("min_g_after_spending: budget exceeds |a - 1|");
    return best;
}

StarlikeDepth depth_starlike_power(const StarlikeShape& shape, long t) {
    if (t < 1)
        throw std::invalid_argument("depth_starlike_power: need t >= 1");
    long s = shape.total() - shape.k();
    if (t > s)
        return {1, true};
    return {min_g_after_spending(shape.branch_lengths, t - 1), false};
}

long depth_caterpillar3_power(long d1, long d2, long d3, long t) {
    if (d1 < 0 || d2 < 0 || d3 < 0 || t < 1)
        throw std::invalid_argument("depth_caterpillar3_power: bad arguments");
    if (t == 1)
        return std::min(d1 + d3 + 1, d2 + 2);
    if (t == 2)
        return std::min({d1 + 1, d2 + 2, d3 + 1});
    return 1;
}

long depth_tree(const Graph& tree) { return q_tree(tree); }

long dstab_tree(const Graph& tree) {
    if (!is_tree(tree))
        throw std::invalid_argument("dstab_tree: input is not a tree");
    long value = tree.n_vertices() - static_cast<long>(leaves(tree).size());
    return std::max(value, 1L);
}

long dstab_cycle(long n) {
    if (n < 5)
        throw std::invalid_argument("dstab_cycle: need n >= 5");
    return (n + 2) / 2;
}

long depth_sum_powers(const std::vector<long>& dI, const std::vector<long>& dJ, long s) {
    if (s < 1)
        throw std::invalid_argument("depth_sum_powers: need s >= 1");
    if (static_cast<long>(dI.size()) < s || static_cast<long>(dJ.size()) < s)
        throw std::invalid_argument("depth_sum_powers: profiles must cover powers 1..s");
    long best = LONG_MAX;
    for (long i = 1; i <= s - 1; ++i)
        best = std::min(best, dI[static_cast<std::size_t>(s - i - 1)] +
                                  dJ[static_cast<std::size_t>(i - 1)] + 1);
    for (long j = 1; j <= s; ++j)
        best = std::min(best, dI[static_cast<std::size_t>(s - j)] +
                                  dJ[static_cast<std::size_t>(j - 1)]);
    return best;
}

namespace {

// all of x's neighbors walking away from the root form a path; returns its
// vertex count or -1 when a branch vertex of degree >= 3 shows up
long branch_length(const Graph& g, int root, int first) {
    long length = 0;
    int prev = root, at = first;
    for (;;) {
        ++length;
        if (g.degree(at) == 1)
            return length;
        if (g.degree(at) != 2)
            return -1;
        for (int w : g.neighbors(at))
            if (w != prev) {
                prev = at;
                at = w;
                break;
            }
    }
}

} // namespace

FamilyInfo recognize_family(const Graph& g) {
    FamilyInfo info;
    int n = g.n_vertices();
    if (g.edge_count() == 0) {
        info.kind = FamilyInfo::Kind::empty;
        return info;
    }
    bool tree = is_tree(g);
    int max_deg = 0;
    for (int v = 1; v <= n; ++v)
        max_deg = std::max(max_deg, g.degree(v));
    if (tree && max_deg <= 2) {
        info.kind = FamilyInfo::Kind::path;
        return info;
    }
    if (g.edge_count() == n && max_deg == 2 && is_connected(g)) {
        info.kind = FamilyInfo::Kind::cycle;
        return info;
    }
    if (!tree) {
        info.kind = FamilyInfo::Kind::unknown;
        return info;
    }
    // starlike: a unique branch vertex, every branch a path
    std::vector<int> hubs;
    for (int v = 1; v <= n; ++v)
        if (g.degree(v) >= 3)
            hubs.push_back(v);
    if (hubs.size() == 1) {
        int root = hubs[0];
        std::vector<long> shape;
        for (int w : g.neighbors(root))
            shape.push_back(branch_length(g, root, w));
        info.kind = FamilyInfo::Kind::starlike;
        info.star_shape = std::move(shape);
        return info;
    }
    // 3-spine caterpillar: some path x-y-z with every other vertex a leaf
    // hanging off it
    for (int y = 1; y <= n; ++y) {
        const auto& ny = g.neighbors(y);
        for (std::size_t i = 0; i < ny.size(); ++i)
            for (std::size_t j = 0; j < ny.size(); ++j) {
                if (i == j)
                    continue;
                int x = ny[i], z = ny[j];
                bool ok = true;
                for (int w = 1; w <= n && ok; ++w) {
                    if (w == x || w == y || w == z)
                        continue;
                    if (g.degree(w) != 1)
                        ok = false;
                    else {
                        int nb = g.neighbors(w)[0];
                        ok = (nb == x || nb == y || nb == z);
                    }
                }
                if (!ok)
                    continue;
                info.kind = FamilyInfo::Kind::caterpillar3;
                info.d1 = g.degree(x) - 1;
                info.d2 = g.degree(y) - 2;
                info.d3 = g.degree(z) - 1;
                return info;
            }
    }
    info.kind = FamilyInfo::Kind::tree;
    return info;
}

long formula_depth(const Graph& g, long t) {
    if (t < 1)
        throw std::invalid_argument("formula_depth: need t >= 1");
    FamilyInfo info = recognize_family(g);
    switch (info.kind) {
    case FamilyInfo::Kind::empty:
        return g.n_vertices(); // zero ideal: the full polynomial ring
    case FamilyInfo::Kind::path:
        return depth_path_power(g.n_vertices(), t);
    case FamilyInfo::Kind::cycle:
        return depth_cycle_power(g.n_vertices(), t);
    case FamilyInfo::Kind::starlike:
        return depth_starlike_power(StarlikeShape(info.star_shape), t).depth;
    case FamilyInfo::Kind::caterpillar3:
        return depth_caterpillar3_power(info.d1, info.d2, info.d3, t);
    case FamilyInfo::Kind::tree:
        if (t == 1)
            return depth_tree(g);
        throw UnsupportedFamily("no closed form for powers of this tree; use the oracle");
    default:
        throw UnsupportedFamily("no closed form for this graph; use the oracle");
    }
}

DepthProfile formula_profile(const Graph& g, long t_max) {
    if (t_max < 1)
        throw std::invalid_argument("formula_profile: need t_max >= 1");
    DepthProfile profile;
    for (long t = 1; t <= t_max; ++t)
        profile.values.push_back(formula_depth(g, t));
    FamilyInfo info = recognize_family(g);
    int n = g.n_vertices();
    switch (info.kind) {
    case FamilyInfo::Kind::empty:
        profile.stable_value = n;
        profile.stable_index = 1;
        break;
    case FamilyInfo::Kind::cycle:
        if (n >= 5) {
            profile.stable_value = n % 2 == 0 ? 1 : 0;
            profile.stable_index = dstab_cycle(n);
        } else if (n == 4) {
            profile.stable_value = 1;
            profile.stable_index = 1;
        } else {
            profile.stable_value = 0;
            profile.stable_index = 2;
        }
        break;
    default: // the remaining families are trees
        profile.stable_value = 1;
        profile.stable_index = dstab_tree(g);
        break;
    }
    return profile;
}

} // namespace edgedepth
