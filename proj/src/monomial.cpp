#include "pfglm/monomial.hpp"

#include "pfglm/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace pfglm {

std::string to_string(OrderTag order) {
    switch (order.kind) {
        case OrderKind::lex: return "lex";
        case OrderKind::grevlex: return "grevlex";
        case OrderKind::deglex: return "deglex";
    }
    return "?";
}

OrderTag parse_order(const std::string& name) {
    if (name == "lex") return {OrderKind::lex};
    if (name == "grevlex") return {OrderKind::grevlex};
    if (name == "deglex") return {OrderKind::deglex};
    throw std::invalid_argument("unknown monomial order: " + name);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.e_[i] = 1;
    return m;
}

std::uint64_t Monomial::degree() const noexcept {
    std::uint64_t d = 0;
    for (auto x : e_) d += x;
    return d;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(e_.begin(), e_.end(), [](Exponent x) { return x == 0; });
}

bool Monomial::divides(const Monomial& other) const {
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > other.e_[i]) return false;
    return true;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial q(other);
    for (std::size_t i = 0; i < e_.size(); ++i) q.e_[i] -= e_[i];
    return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
    Monomial m(*this);
    for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = std::max(e_[i], other.e_[i]);
    return m;
}

Monomial Monomial::times_variable(std::size_t i) const {
    Monomial m(*this);
    ++m.e_[i];
    return m;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    for (std::size_t i = 0; i < a.e_.size(); ++i) m.e_[i] += b.e_[i];
    return m;
}

std::string Monomial::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        if (e_[i] == 0) continue;
        if (!first) os << '*';
        first = false;
        os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
        if (e_[i] > 1) os << '^' << e_[i];
    }
    if (first) return "1";
    return os.str();
}

std::strong_ordering compare_monomials(OrderTag order, const Monomial& u, const Monomial& v) {
    const std::size_t n = u.nvars();
    if (v.nvars() != n) throw DimensionMismatch("monomials with different variable counts");
    if (order.kind != OrderKind::lex) {
        const auto du = u.degree();
        const auto dv = v.degree();
        if (du != dv) return du <=> dv;
    }
    if (order.kind == OrderKind::grevlex) {
        for (std::size_t k = n; k-- > 0;)
            if (u[k] != v[k]) return v[k] <=> u[k];
        return std::strong_ordering::equal;
    }
    for (std::size_t k = 0; k < n; ++k)
        if (u[k] != v[k]) return u[k] <=> v[k];
    return std::strong_ordering::equal;
}

bool in_monomial_ideal(const std::vector<Monomial>& generators, const Monomial& m) {
    return std::any_of(generators.begin(), generators.end(), [&](const Monomial& g) { return g.divides(m); });
}

std::vector<Monomial> staircase(const std::vector<Monomial>& leading_monomials, OrderTag order) {
    if (leading_monomials.empty()) throw NotZeroDimensional("empty set of leading monomials");
    const std::size_t n = leading_monomials.front().nvars();
    for (std::size_t i = 0; i < n; ++i) {
        const bool has_pure_power = std::any_of(leading_monomials.begin(), leading_monomials.end(), [&](const Monomial& m) {
            for (std::size_t k = 0; k < n; ++k)
                if (k != i && m[k] != 0) return false;
            return true;
        });
        if (!has_pure_power) throw NotZeroDimensional("no pure power of variable " + std::to_string(i + 1));
    }
    std::vector<Monomial> out;
    const Monomial one(n);
    if (in_monomial_ideal(leading_monomials, one)) return out;
    std::set<Monomial> seen{one};
    std::deque<Monomial> todo{one};
    while (!todo.empty()) {
        Monomial m = std::move(todo.front());
        todo.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            Monomial next = m.times_variable(i);
            if (in_monomial_ideal(leading_monomials, next) || !seen.insert(next).second) continue;
            todo.push_back(next);
        }
        out.push_back(std::move(m));
    }
    std::sort(out.begin(), out.end(), MonomialLess{order});
    return out;
}

}  // namespace pfglm
