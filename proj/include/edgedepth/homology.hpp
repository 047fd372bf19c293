#ifndef EDGEDEPTH_HOMOLOGY_HPP
#define EDGEDEPTH_HOMOLOGY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <vector>

namespace edgedepth {

/// Fixed-size bitset allocated at runtime.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
    std::size_t count() const;
    bool any() const;

    const std::vector<std::uint64_t>& words() const { return words_; }
    std::vector<std::uint64_t>& words() { return words_; }

    // ascending set-bit traversal of (*this & other); stops when fn returns false
    template <typename Fn>
    void for_each_and(const DynBitset& other, Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w] & other.words_[w];
            while (bits) {
                std::size_t i = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
                if (!fn(i))
                    return;
                bits &= bits - 1;
            }
        }
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                std::size_t i = (w << 6) + static_cast<std::size_t>(__builtin_ctzll(bits));
                if (!fn(i))
                    return;
                bits &= bits - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Strict partial order on elements 0..size-1 whose index order is a linear
/// extension: i < j in the poset implies i < j as integers.
struct Poset {
    std::size_t size = 0;
    std::vector<DynBitset> below; // below[i] = { j : j < i }
    std::vector<DynBitset> above; // above[i] = { j : j > i }
};

// Builds a Poset from a strict-order matrix, reindexing by a linear
// extension first.  Intended for small inputs (tests, core extraction).
Poset make_poset(const std::vector<std::vector<bool>>& less);

// Removes beat points (elements with a unique upper cover or a unique
// lower cover) from alive until none remain.  The surviving subposet has
// an order complex homotopy equivalent to the original one.
void core_beat_points(const Poset& poset, DynBitset& alive);

// All chains of the alive subposet as sorted index lists.  Throws
// BudgetExceeded when more than max_faces chains would be produced.
std::vector<std::vector<int>> order_complex_faces(const Poset& poset, const DynBitset& alive,
                                                  long max_faces);

// Ranks of reduced simplicial homology over the rationals, degree -> rank,
// zero ranks omitted.  `faces` must be closed under taking subsets and
// contain each simplex once, vertices sorted.  The empty complex yields
// {-1: 1}; a cone yields {}.
std::map<int, long> reduced_homology_ranks(const std::vector<std::vector<int>>& faces);

// Reduced homology of the order complex of the alive subposet; cores by
// beat points first.
std::map<int, long> poset_reduced_homology(const Poset& poset, DynBitset alive, long max_faces,
                                           bool core_first = true);

/// Simplicial complex described by its inclusion-maximal faces.
struct SimplicialComplex {
    int n_vertices = 0;
    std::vector<std::vector<int>> facets;
};

// Expands the facet description to the full (closed) face list.
std::vector<std::vector<int>> complex_faces(const SimplicialComplex& complex, long max_faces);

std::map<int, long> reduced_homology_of_complex(const SimplicialComplex& complex,
                                                long max_faces = 2000000);

using SparseIntRow = std::vector<std::pair<int, boost::multiprecision::cpp_int>>;

// Exact rank over the rationals of an integer matrix given by sparse rows;
// fraction-free elimination, no floating point or modular shortcuts.
long rank_exact(std::vector<SparseIntRow> rows);

} // namespace edgedepth

#endif
