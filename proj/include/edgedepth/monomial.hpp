#ifndef EDGEDEPTH_MONOMIAL_HPP
#define EDGEDEPTH_MONOMIAL_HPP

#include "edgedepth/graph.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace edgedepth {

using Exponent = boost::multiprecision::cpp_int;

/// Monomial in variables x1, x2, ...  Stored as sorted (variable, exponent)
/// pairs with no zero exponents; the empty list is the unit monomial 1.
/// Exponents are arbitrary-precision so ideal powers never overflow.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<std::pair<int, Exponent>> exps);

    static Monomial one() { return Monomial(); }
    static Monomial variable(int var, Exponent exp = 1);
    static Monomial edge(int u, int v); // x_u * x_v

    const std::vector<std::pair<int, Exponent>>& exponents() const { return exps_; }
    Exponent exponent(int var) const;
    Exponent degree() const;
    bool is_one() const { return exps_.empty(); }
    int max_var() const { return exps_.empty() ? 0 : exps_.back().first; }

    bool divides(const Monomial& other) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    // exact quotient; requires d | *this
    Monomial divide_by(const Monomial& d) const;

    static Monomial gcd(const Monomial& a, const Monomial& b);
    static Monomial lcm(const Monomial& a, const Monomial& b);
    // a : b  =  a / gcd(a, b)
    static Monomial colon(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    // graded lexicographic: degree first, then exponent vectors
    bool operator<(const Monomial& other) const;

    std::string str() const;                       // e.g. "x1^2*x2"
    static Monomial parse(const std::string& text); // same syntax

private:
    std::vector<std::pair<int, Exponent>> exps_;
};

/// Monomial ideal given by its unique minimal generating set, kept sorted
/// so equality is structural.
class MonomialIdeal {
public:
    MonomialIdeal(int n_vars, std::vector<Monomial> generators);
    static MonomialIdeal zero(int n_vars) { return MonomialIdeal(n_vars, {}); }

    int n_vars() const { return n_vars_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool contains(const Monomial& m) const;

    bool operator==(const MonomialIdeal& other) const {
        return n_vars_ == other.n_vars_ && gens_ == other.gens_;
    }

    std::string str() const; // "(x1*x2, x2*x3)"

private:
    int n_vars_ = 0;
    std::vector<Monomial> gens_;
};

MonomialIdeal edge_ideal(const Graph& g);
MonomialIdeal power(const MonomialIdeal& ideal, long t);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);

// "(x1*x2, x2^2*x3)"; whitespace is ignored, "(" ")" optional
MonomialIdeal parse_ideal(int n_vars, const std::string& text);

} // namespace edgedepth

#endif
