#include "edgedepth/oracle.hpp"
#include "edgedepth/errors.hpp"
#include "edgedepth/homology.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

namespace edgedepth {

namespace {

using ExpVec = std::vector<std::int32_t>;

struct ExpVecHash {
    std::size_t operator()(const ExpVec& v) const {
        std::size_t h = 1469598103934665603ull;
        for (std::int32_t x : v) {
            h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

ExpVec to_expvec(const Monomial& m, int n_vars) {
    ExpVec v(static_cast<std::size_t>(n_vars), 0);
    for (const auto& [var, exp] : m.exponents()) {
        if (exp > 1000000000)
            throw BudgetExceeded("oracle: exponent too large for the dense lattice encoding");
        v[static_cast<std::size_t>(var - 1)] = static_cast<std::int32_t>(exp);
    }
    return v;
}

Monomial from_expvec(const ExpVec& v) {
    std::vector<std::pair<int, Exponent>> exps;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i])
            exps.push_back({static_cast<int>(i) + 1, v[i]});
    return Monomial(std::move(exps));
}

long vec_degree(const ExpVec& v) {
    long d = 0;
    for (std::int32_t x : v)
        d += x;
    return d;
}

bool vec_divides(const ExpVec& a, const ExpVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

// All subset-lcms of the generators, sorted by (degree, lex) so that the
// index order is a linear extension of divisibility.
std::vector<ExpVec> lattice_elements(const MonomialIdeal& ideal, const OracleCaps& caps) {
    if (ideal.is_zero())
        throw std::invalid_argument("lcm lattice: zero ideal has no lattice");
    const auto& gens = ideal.generators();
    if (gens.size() == 1 && gens[0].is_one())
        throw std::invalid_argument("lcm lattice: unit ideal");
    if (static_cast<long>(gens.size()) > caps.max_generators)
        throw BudgetExceeded("oracle: generator count " + std::to_string(gens.size()) +
                             " exceeds cap " + std::to_string(caps.max_generators));
    std::vector<ExpVec> gen_vecs;
    gen_vecs.reserve(gens.size());
    for (const auto& g : gens)
        gen_vecs.push_back(to_expvec(g, ideal.n_vars()));

    std::vector<ExpVec> elems = gen_vecs;
    std::unordered_map<ExpVec, int, ExpVecHash> seen;
    for (const auto& v : elems)
        seen.emplace(v, 1);
    ExpVec join(static_cast<std::size_t>(ideal.n_vars()));
    for (std::size_t head = 0; head < elems.size(); ++head) {
        ExpVec current = elems[head]; // copy: elems may reallocate below
        for (const auto& g : gen_vecs) {
            bool grew = false;
            for (std::size_t i = 0; i < join.size(); ++i) {
                join[i] = std::max(current[i], g[i]);
                grew |= join[i] != current[i];
            }
            if (!grew)
                continue;
            if (seen.emplace(join, 1).second) {
                elems.push_back(join);
                if (static_cast<long>(elems.size()) > caps.max_lattice)
                    throw BudgetExceeded("oracle: lcm lattice exceeds cap " +
                                         std::to_string(caps.max_lattice));
            }
        }
    }
    std::sort(elems.begin(), elems.end(), [](const ExpVec& a, const ExpVec& b) {
        long da = vec_degree(a), db = vec_degree(b);
        if (da != db)
            return da < db;
        return a < b;
    });
    return elems;
}

int resolve_threads(int requested) {
    if (requested > 0)
        return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

// Divisibility bitsets over the sorted element list; parallel by row.
Poset build_poset(const std::vector<ExpVec>& elems, int threads) {
    std::size_t n = elems.size();
    Poset p;
    p.size = n;
    p.below.assign(n, DynBitset(n));
    p.above.assign(n, DynBitset(n));
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            for (std::size_t j = 0; j < i; ++j)
                if (vec_divides(elems[j], elems[i]))
                    p.below[i].set(j);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    for (std::size_t i = 0; i < n; ++i)
        p.below[i].for_each([&](std::size_t j) {
            p.above[j].set(i);
            return true;
        });
    return p;
}

} // namespace

LcmLattice lcm_lattice(const MonomialIdeal& ideal, const OracleCaps& caps) {
    auto elems = lattice_elements(ideal, caps);
    LcmLattice lattice;
    lattice.n_vars = ideal.n_vars();
    lattice.elements.reserve(elems.size() + 1);
    lattice.elements.push_back(Monomial::one());
    for (const auto& v : elems)
        lattice.elements.push_back(from_expvec(v));
    // atoms are exactly the minimal generators
    std::unordered_map<ExpVec, int, ExpVecHash> gen_set;
    for (const auto& g : ideal.generators())
        gen_set.emplace(to_expvec(g, ideal.n_vars()), 1);
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (gen_set.count(elems[i]))
            lattice.atoms.push_back(i + 1);
    return lattice;
}

long BettiTable::pd() const {
    long top = 0;
    for (const auto& [key, value] : entries)
        top = std::max(top, key.first);
    return top;
}

long BettiTable::total(long i) const {
    long sum = 0;
    for (const auto& [key, value] : entries)
        if (key.first == i)
            sum += value;
    return sum;
}

std::string BettiTable::str() const {
    std::ostringstream out;
    for (const auto& [key, value] : entries)
        out << "beta_{" << key.first << "," << key.second.str() << "} = " << value << '\n';
    return out.str();
}

BettiTable betti_numbers(const MonomialIdeal& ideal, const OracleCaps& caps) {
    auto elems = lattice_elements(ideal, caps);
    std::size_t n = elems.size();
    int threads = resolve_threads(caps.threads);
    Poset poset = build_poset(elems, threads);

    // per-element interval homology, fanned out over a worker pool;
    // results are merged in index order so the table is deterministic
    std::vector<std::vector<std::pair<int, long>>> per_element(n);
    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr first_error;
    auto worker = [&]() {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= n)
                return;
            {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (first_error)
                    return;
            }
            try {
                auto ranks = poset_reduced_homology(poset, poset.below[i], caps.max_faces);
                for (const auto& [degree, rank] : ranks)
                    per_element[i].push_back({degree + 2, rank});
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error)
                    first_error = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);

    BettiTable table;
    for (std::size_t i = 0; i < n; ++i) {
        if (per_element[i].empty())
            continue;
        Monomial m = from_expvec(elems[i]);
        for (const auto& [index, rank] : per_element[i])
            table.entries[{index, m}] = rank;
    }
    return table;
}

long depth_oracle(const MonomialIdeal& ideal, const OracleCaps& caps) {
    if (ideal.is_zero())
        return ideal.n_vars();
    if (ideal.generators().size() == 1 && ideal.generators()[0].is_one())
        throw std::invalid_argument("depth_oracle: unit ideal (zero module)");
    return ideal.n_vars() - betti_numbers(ideal, caps).pd();
}

long pd_oracle(const MonomialIdeal& ideal, const OracleCaps& caps) {
    if (ideal.is_zero())
        return 0;
    return betti_numbers(ideal, caps).pd();
}

long depth_power_oracle(const Graph& g, long t, const OracleCaps& caps) {
    return depth_oracle(power(edge_ideal(g), t), caps);
}

} // namespace edgedepth
