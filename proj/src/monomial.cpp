#include "edgedepth/monomial.hpp"
#include "edgedepth/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace edgedepth {

Monomial::Monomial(std::vector<std::pair<int, Exponent>> exps) : exps_(std::move(exps)) {
    std::sort(exps_.begin(), exps_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<int, Exponent>> merged;
    for (auto& [var, exp] : exps_) {
        if (var < 1)
            throw std::invalid_argument("monomial: variable index must be >= 1");
        if (exp < 0)
            throw std::invalid_argument("monomial: negative exponent");
        if (exp == 0)
            continue;
        if (!merged.empty() && merged.back().first == var)
            merged.back().second += exp;
        else
            merged.push_back({var, std::move(exp)});
    }
    exps_ = std::move(merged);
}

Monomial Monomial::variable(int var, Exponent exp) {
    return Monomial({{var, std::move(exp)}});
}

Monomial Monomial::edge(int u, int v) {
    if (u == v)
        throw std::invalid_argument("monomial edge: endpoints must differ");
    return Monomial({{u, 1}, {v, 1}});
}

Exponent Monomial::exponent(int var) const {
    for (const auto& [v, e] : exps_)
        if (v == var)
            return e;
    return 0;
}

Exponent Monomial::degree() const {
    Exponent d = 0;
    for (const auto& [v, e] : exps_)
        d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.exps_.begin();
    for (const auto& [var, exp] : exps_) {
        while (it != other.exps_.end() && it->first < var)
            ++it;
        if (it == other.exps_.end() || it->first != var || it->second < exp)
            return false;
    }
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<int, Exponent>> out;
    out.reserve(a.exps_.size() + b.exps_.size());
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first))
            out.push_back(*ia++);
        else if (ia == a.exps_.end() || ib->first < ia->first)
            out.push_back(*ib++);
        else {
            out.push_back({ia->first, ia->second + ib->second});
            ++ia;
            ++ib;
        }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

Monomial Monomial::divide_by(const Monomial& d) const {
    if (!d.divides(*this))
        throw std::invalid_argument("monomial divide_by: not divisible");
    std::vector<std::pair<int, Exponent>> out;
    auto id = d.exps_.begin();
    for (const auto& [var, exp] : exps_) {
        Exponent e = exp;
        if (id != d.exps_.end() && id->first == var) {
            e -= id->second;
            ++id;
        }
        if (e != 0)
            out.push_back({var, std::move(e)});
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

Monomial Monomial::gcd(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<int, Exponent>> out;
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() && ib != b.exps_.end()) {
        if (ia->first < ib->first)
            ++ia;
        else if (ib->first < ia->first)
            ++ib;
        else {
            out.push_back({ia->first, std::min(ia->second, ib->second)});
            ++ia;
            ++ib;
        }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<std::pair<int, Exponent>> out;
    auto ia = a.exps_.begin(), ib = b.exps_.begin();
    while (ia != a.exps_.end() || ib != b.exps_.end()) {
        if (ib == b.exps_.end() || (ia != a.exps_.end() && ia->first < ib->first))
            out.push_back(*ia++);
        else if (ia == a.exps_.end() || ib->first < ia->first)
            out.push_back(*ib++);
        else {
            out.push_back({ia->first, std::max(ia->second, ib->second)});
            ++ia;
            ++ib;
        }
    }
    Monomial m;
    m.exps_ = std::move(out);
    return m;
}

Monomial Monomial::colon(const Monomial& a, const Monomial& b) {
    return a.divide_by(gcd(a, b));
}

bool Monomial::operator<(const Monomial& other) const {
    Exponent da = degree(), db = other.degree();
    if (da != db)
        return da < db;
    // lexicographic on the exponent vectors, x1 highest
    auto ia = exps_.begin(), ib = other.exps_.begin();
    while (ia != exps_.end() && ib != other.exps_.end()) {
        if (ia->first != ib->first)
            return ia->first > ib->first; // other has earlier variable with positive exp
        if (ia->second != ib->second)
            return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return ia == exps_.end() && ib != other.exps_.end();
}

std::string Monomial::str() const {
    if (exps_.empty())
        return "1";
    std::ostringstream out;
    bool first = true;
    for (const auto& [var, exp] : exps_) {
        if (!first)
            out << '*';
        first = false;
        out << 'x' << var;
        if (exp != 1)
            out << '^' << exp;
    }
    return out.str();
}

Monomial Monomial::parse(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ParseError("monomial: empty input");
    if (s == "1")
        return Monomial::one();
    std::vector<std::pair<int, Exponent>> exps;
    std::size_t i = 0;
    while (i < s.size()) {
        if (s[i] != 'x')
            throw ParseError("monomial: expected 'x' at position " + std::to_string(i) +
                             " in '" + text + "'");
        ++i;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        if (start == i)
            throw ParseError("monomial: missing variable index in '" + text + "'");
        int var = std::stoi(s.substr(start, i - start));
        Exponent exp = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (start == i)
                throw ParseError("monomial: missing exponent in '" + text + "'");
            exp = Exponent(s.substr(start, i - start));
        }
        exps.push_back({var, std::move(exp)});
        if (i < s.size()) {
            if (s[i] != '*')
                throw ParseError("monomial: expected '*' in '" + text + "'");
            ++i;
        }
    }
    return Monomial(std::move(exps));
}

namespace {

// Keep only the divisibility-minimal monomials, sorted and deduplicated.
std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Exponent> degs;
    degs.reserve(gens.size());
    for (const auto& g : gens)
        degs.push_back(g.degree());
    std::vector<Monomial> kept;
    std::vector<Exponent> kept_degs;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < kept.size(); ++j) {
            if (kept_degs[j] >= degs[i])
                break; // sorted by degree: equal-degree monomials are distinct
            if (kept[j].divides(gens[i])) {
                redundant = true;
                break;
            }
        }
        if (!redundant) {
            kept.push_back(gens[i]);
            kept_degs.push_back(degs[i]);
        }
    }
    return kept;
}

} // namespace

MonomialIdeal::MonomialIdeal(int n_vars, std::vector<Monomial> generators) : n_vars_(n_vars) {
    if (n_vars < 0)
        throw std::invalid_argument("monomial ideal: negative variable count");
    for (const auto& g : generators)
        if (g.max_var() > n_vars)
            throw std::invalid_argument("monomial ideal: generator uses variable beyond n_vars");
    for (const auto& g : generators)
        if (g.is_one()) {
            // the unit ideal: minimal generating set is {1}
            gens_ = {Monomial::one()};
            return;
        }
    gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m))
            return true;
    return false;
}

std::string MonomialIdeal::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i)
            out << ", ";
        out << gens_[i].str();
    }
    out << ')';
    return out.str();
}

MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    gens.reserve(g.edges().size());
    for (const auto& [u, v] : g.edges())
        gens.push_back(Monomial::edge(u, v));
    return MonomialIdeal(g.n_vertices(), std::move(gens));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n_vars() != b.n_vars())
        throw std::invalid_argument("ideal product: mismatched variable counts");
    if (a.is_zero() || b.is_zero())
        return MonomialIdeal::zero(a.n_vars());
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators())
            gens.push_back(f * g);
    return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal power(const MonomialIdeal& ideal, long t) {
    if (t < 1)
        throw std::invalid_argument("ideal power: exponent must be >= 1");
    MonomialIdeal acc = ideal;
    for (long i = 1; i < t; ++i)
        acc = product(acc, ideal);
    return acc;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& f) {
    std::vector<Monomial> gens;
    gens.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators())
        gens.push_back(Monomial::colon(g, f));
    return MonomialIdeal(ideal.n_vars(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n_vars() != b.n_vars())
        throw std::invalid_argument("ideal sum: mismatched variable counts");
    std::vector<Monomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return MonomialIdeal(a.n_vars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.n_vars() != b.n_vars())
        throw std::invalid_argument("ideal intersect: mismatched variable counts");
    std::vector<Monomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& f : a.generators())
        for (const auto& g : b.generators())
            gens.push_back(Monomial::lcm(f, g));
    return MonomialIdeal(a.n_vars(), std::move(gens));
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

MonomialIdeal parse_ideal(int n_vars, const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (!s.empty() && s.front() == '(' && s.back() == ')')
        s = s.substr(1, s.size() - 2);
    std::vector<Monomial> gens;
    if (!s.empty()) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ','))
            gens.push_back(Monomial::parse(item));
    }
    return MonomialIdeal(n_vars, std::move(gens));
}

} // namespace edgedepth
