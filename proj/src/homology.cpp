#include "edgedepth/homology.hpp"
#include "edgedepth/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace edgedepth {

using boost::multiprecision::cpp_int;

std::size_t DynBitset::count() const {
    std::size_t c = 0;
    for (std::uint64_t w : words_)
        c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool DynBitset::any() const {
    for (std::uint64_t w : words_)
        if (w)
            return true;
    return false;
}

Poset make_poset(const std::vector<std::vector<bool>>& less) {
    std::size_t n = less.size();
    for (const auto& row : less)
        if (row.size() != n)
            throw std::invalid_argument("make_poset: matrix must be square");
    // topological reindexing so integer order extends the partial order
    std::vector<std::size_t> indeg(n, 0), order;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (less[j][i])
                ++indeg[i];
    std::deque<std::size_t> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indeg[i] == 0)
            ready.push_back(i);
    while (!ready.empty()) {
        std::size_t i = ready.front();
        ready.pop_front();
        order.push_back(i);
        for (std::size_t j = 0; j < n; ++j)
            if (less[i][j] && --indeg[j] == 0)
                ready.push_back(j);
    }
    if (order.size() != n)
        throw std::invalid_argument("make_poset: relation is not a strict partial order");
    std::vector<std::size_t> pos(n);
    for (std::size_t r = 0; r < n; ++r)
        pos[order[r]] = r;

    Poset p;
    p.size = n;
    p.below.assign(n, DynBitset(n));
    p.above.assign(n, DynBitset(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (less[i][j]) {
                p.below[pos[j]].set(pos[i]);
                p.above[pos[i]].set(pos[j]);
            }
    return p;
}

namespace {

// x has a unique minimal element above it (equivalently, a unique upper
// cover) within alive.  Index order is a linear extension, so the first
// set bit of above[x] & alive is minimal; uniqueness holds iff every other
// member lies above it.
bool unique_upper_cover(const Poset& p, const DynBitset& alive, std::size_t x) {
    std::size_t first = p.size;
    bool unique = true;
    bool nonempty = false;
    p.above[x].for_each_and(alive, [&](std::size_t y) {
        nonempty = true;
        if (first == p.size) {
            first = y;
            return true;
        }
        if (!p.below[y].test(first)) {
            unique = false;
            return false;
        }
        return true;
    });
    return nonempty && unique;
}

bool unique_lower_cover(const Poset& p, const DynBitset& alive, std::size_t x) {
    // symmetric: scan below[x] & alive descending; the last set bit is maximal
    const auto& bw = p.below[x].words();
    const auto& aw = alive.words();
    std::size_t last = p.size;
    bool nonempty = false;
    for (std::size_t w = bw.size(); w-- > 0;) {
        std::uint64_t bits = bw[w] & aw[w];
        while (bits) {
            int top = 63 - __builtin_clzll(bits);
            std::size_t z = (w << 6) + static_cast<std::size_t>(top);
            if (last == p.size) {
                last = z;
                nonempty = true;
            } else if (!p.above[z].test(last)) {
                return false;
            }
            bits &= ~(std::uint64_t(1) << top);
        }
    }
    return nonempty;
}

} // namespace

void core_beat_points(const Poset& poset, DynBitset& alive) {
    std::size_t n_alive = alive.count();
    if (n_alive <= 1)
        return;
    std::vector<char> queued(poset.size, 0);
    std::deque<std::size_t> work;
    alive.for_each([&](std::size_t x) {
        queued[x] = 1;
        work.push_back(x);
        return true;
    });
    while (!work.empty() && n_alive > 1) {
        std::size_t x = work.front();
        work.pop_front();
        queued[x] = 0;
        if (!alive.test(x))
            continue;
        if (!unique_upper_cover(poset, alive, x) && !unique_lower_cover(poset, alive, x))
            continue;
        alive.reset(x);
        --n_alive;
        // only elements comparable to x can change beat status
        auto requeue = [&](std::size_t y) {
            if (!queued[y]) {
                queued[y] = 1;
                work.push_back(y);
            }
            return true;
        };
        poset.above[x].for_each_and(alive, requeue);
        poset.below[x].for_each_and(alive, requeue);
    }
}

std::vector<std::vector<int>> order_complex_faces(const Poset& poset, const DynBitset& alive,
                                                  long max_faces) {
    std::vector<int> members;
    alive.for_each([&](std::size_t x) {
        members.push_back(static_cast<int>(x));
        return true;
    });
    std::size_t k = members.size();
    std::vector<int> local(poset.size, -1);
    for (std::size_t i = 0; i < k; ++i)
        local[static_cast<std::size_t>(members[i])] = static_cast<int>(i);
    // local successor lists (ascending, consistent with the linear extension)
    std::vector<std::vector<int>> greater(k);
    for (std::size_t i = 0; i < k; ++i)
        poset.above[static_cast<std::size_t>(members[i])].for_each_and(alive, [&](std::size_t y) {
            greater[i].push_back(local[y]);
            return true;
        });

    std::vector<std::vector<int>> faces;
    long budget = max_faces;
    std::vector<int> chain;
    auto extend = [&](auto&& self, int last) -> void {
        faces.push_back(chain);
        if (--budget < 0)
            throw BudgetExceeded("order complex exceeds the face cap");
        for (int next : greater[static_cast<std::size_t>(last)]) {
            chain.push_back(next);
            self(self, next);
            chain.pop_back();
        }
    };
    for (std::size_t i = 0; i < k; ++i) {
        chain = {static_cast<int>(i)};
        extend(extend, static_cast<int>(i));
    }
    return faces;
}

long rank_exact(std::vector<SparseIntRow> rows) {
    long rank = 0;
    std::vector<char> active(rows.size(), 1);
    for (;;) {
        // pivot selection: prefer +-1 entries, then shortest row
        std::size_t pivot_row = rows.size();
        int pivot_col = -1;
        bool pivot_unit = false;
        std::size_t pivot_len = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r] || rows[r].empty())
                continue;
            for (const auto& [col, val] : rows[r]) {
                bool unit = (val == 1 || val == -1);
                if (pivot_row == rows.size() || (unit && !pivot_unit) ||
                    (unit == pivot_unit && rows[r].size() < pivot_len)) {
                    pivot_row = r;
                    pivot_col = col;
                    pivot_unit = unit;
                    pivot_len = rows[r].size();
                }
                if (unit)
                    break;
            }
        }
        if (pivot_row == rows.size())
            break;
        ++rank;
        active[pivot_row] = 0;
        const SparseIntRow prow = rows[pivot_row];
        cpp_int pval;
        for (const auto& [col, val] : prow)
            if (col == pivot_col)
                pval = val;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (!active[r])
                continue;
            cpp_int a = 0;
            for (const auto& [col, val] : rows[r])
                if (col == pivot_col) {
                    a = val;
                    break;
                }
            if (a == 0)
                continue;
            // row_r := pval * row_r - a * prow  (fraction-free), then strip gcd
            SparseIntRow merged;
            merged.reserve(rows[r].size() + prow.size());
            auto ir = rows[r].begin();
            auto ip = prow.begin();
            while (ir != rows[r].end() || ip != prow.end()) {
                if (ip == prow.end() || (ir != rows[r].end() && ir->first < ip->first)) {
                    merged.push_back({ir->first, pval * ir->second});
                    ++ir;
                } else if (ir == rows[r].end() || ip->first < ir->first) {
                    merged.push_back({ip->first, -a * ip->second});
                    ++ip;
                } else {
                    cpp_int v = pval * ir->second - a * ip->second;
                    if (v != 0)
                        merged.push_back({ir->first, std::move(v)});
                    ++ir;
                    ++ip;
                }
            }
            if (!merged.empty()) {
                cpp_int g = 0;
                for (const auto& [col, val] : merged) {
                    g = boost::multiprecision::gcd(g, val);
                    if (g == 1)
                        break;
                }
                if (g > 1)
                    for (auto& [col, val] : merged)
                        val /= g;
            }
            rows[r] = std::move(merged);
        }
    }
    return rank;
}

std::map<int, long> reduced_homology_ranks(const std::vector<std::vector<int>>& faces) {
    if (faces.empty())
        return {{-1, 1}};
    int max_dim = 0;
    for (const auto& f : faces)
        max_dim = std::max(max_dim, static_cast<int>(f.size()) - 1);
    std::vector<std::vector<std::vector<int>>> by_dim(static_cast<std::size_t>(max_dim) + 1);
    for (const auto& f : faces) {
        if (f.empty())
            continue;
        by_dim[f.size() - 1].push_back(f);
    }
    for (auto& level : by_dim)
        std::sort(level.begin(), level.end());
    auto face_index = [&](int dim, const std::vector<int>& f) -> int {
        const auto& level = by_dim[static_cast<std::size_t>(dim)];
        auto it = std::lower_bound(level.begin(), level.end(), f);
        if (it == level.end() || *it != f)
            throw std::invalid_argument("reduced_homology_ranks: face list is not closed");
        return static_cast<int>(it - level.begin());
    };

    // boundary_rank[d] = rank of the map C_d -> C_{d-1} (augmented complex)
    std::vector<long> boundary_rank(static_cast<std::size_t>(max_dim) + 2, 0);
    boundary_rank[0] = by_dim[0].empty() ? 0 : 1; // augmentation onto the empty simplex
    for (int d = 1; d <= max_dim; ++d) {
        std::vector<SparseIntRow> rows;
        rows.reserve(by_dim[static_cast<std::size_t>(d)].size());
        for (const auto& f : by_dim[static_cast<std::size_t>(d)]) {
            SparseIntRow row;
            std::vector<int> sub(f.begin() + 1, f.end());
            int sign = 1;
            for (std::size_t omit = 0;; ++omit) {
                row.push_back({face_index(d - 1, sub), sign});
                sign = -sign;
                if (omit + 1 > static_cast<std::size_t>(d))
                    break;
                sub[omit] = f[omit];
            }
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            rows.push_back(std::move(row));
        }
        boundary_rank[static_cast<std::size_t>(d)] = rank_exact(std::move(rows));
    }

    std::map<int, long> ranks;
    long h_minus1 = 1 - boundary_rank[0];
    if (h_minus1 != 0)
        ranks[-1] = h_minus1;
    for (int d = 0; d <= max_dim; ++d) {
        long fd = static_cast<long>(by_dim[static_cast<std::size_t>(d)].size());
        long h = fd - boundary_rank[static_cast<std::size_t>(d)] -
                 boundary_rank[static_cast<std::size_t>(d) + 1];
        if (h != 0)
            ranks[d] = h;
    }
    return ranks;
}

std::map<int, long> poset_reduced_homology(const Poset& poset, DynBitset alive, long max_faces,
                                           bool core_first) {
    if (core_first)
        core_beat_points(poset, alive);
    std::size_t k = alive.count();
    if (k == 0)
        return {{-1, 1}};
    if (k == 1)
        return {};
    return reduced_homology_ranks(order_complex_faces(poset, alive, max_faces));
}

std::vector<std::vector<int>> complex_faces(const SimplicialComplex& complex, long max_faces) {
    std::vector<std::vector<int>> sorted_facets = complex.facets;
    for (auto& f : sorted_facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto emit = [&](const std::vector<int>& f) {
        out.push_back(f);
        if (static_cast<long>(out.size()) > max_faces)
            throw BudgetExceeded("simplicial complex exceeds the face cap");
    };
    for (const auto& facet : sorted_facets) {
        std::size_t m = facet.size();
        if (m > 60)
            throw BudgetExceeded("facet too large to expand");
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
            current.clear();
            for (std::size_t i = 0; i < m; ++i)
                if (mask & (std::uint64_t(1) << i))
                    current.push_back(facet[i]);
            emit(current);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::map<int, long> reduced_homology_of_complex(const SimplicialComplex& complex,
                                                long max_faces) {
    return reduced_homology_ranks(complex_faces(complex, max_faces));
}

} // namespace edgedepth
