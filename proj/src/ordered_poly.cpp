#include "pfglm/ordered_poly.hpp"

#include "pfglm/errors.hpp"

#include <sstream>

namespace pfglm {

OrderedPoly::OrderedPoly(const Ring& ring, std::size_t nvars, OrderTag order)
    : ring_(&ring), nvars_(nvars), order_(order), terms_(MonomialGreater{order}) {}

Prec OrderedPoly::min_prec() const {
    Prec m = zero_prec_;
    for (const auto& [mono, c] : terms_) m = std::min(m, c.abs_prec());
    return m;
}

const Monomial& OrderedPoly::leading_monomial() const {
    if (terms_.empty()) throw Error("leading monomial of the zero polynomial");
    return terms_.begin()->first;
}

const Ball& OrderedPoly::leading_coefficient() const {
    if (terms_.empty()) throw Error("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

Ball OrderedPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Ball() : it->second;
}

void OrderedPoly::set_term(const Monomial& m, const Ball& c) {
    if (m.nvars() != nvars_) throw DimensionMismatch("monomial has the wrong number of variables");
    if (c.is_zero()) {
        terms_.erase(m);
        note_zero_prec(c.abs_prec());
        return;
    }
    terms_.insert_or_assign(m, c);
}

void OrderedPoly::add_term(const Monomial& m, const Ball& c) {
    if (c.is_exact_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        set_term(m, c);
        return;
    }
    Ball sum = it->second + c;
    if (sum.is_zero()) {
        note_zero_prec(sum.abs_prec());
        terms_.erase(it);
    } else {
        it->second = std::move(sum);
    }
}

OrderedPoly OrderedPoly::reordered(OrderTag order) const {
    OrderedPoly r(*ring_, nvars_, order);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
    r.zero_prec_ = zero_prec_;
    return r;
}

OrderedPoly& OrderedPoly::operator+=(const OrderedPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    note_zero_prec(other.zero_prec_);
    return *this;
}

OrderedPoly& OrderedPoly::operator-=(const OrderedPoly& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    note_zero_prec(other.zero_prec_);
    return *this;
}

void OrderedPoly::add_multiple(const Ball& c, const Monomial& m, const OrderedPoly& other) {
    for (const auto& [mo, co] : other.terms_) add_term(m * mo, c * co);
    if (!is_infinite(other.zero_prec_)) note_zero_prec(prec_add(other.zero_prec_, c.valuation_lower_bound()));
}

OrderedPoly OrderedPoly::operator-() const {
    OrderedPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Ball OrderedPoly::evaluate(const std::vector<Ball>& point) const {
    if (point.size() != nvars_) throw DimensionMismatch("point has the wrong number of coordinates");
    Ball sum = Ball::zero(*ring_, zero_prec_);
    for (const auto& [m, c] : terms_) {
        Ball t = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            for (Monomial::Exponent k = 0; k < m[i]; ++k) t *= point[i];
        sum += t;
    }
    return sum;
}

std::string OrderedPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool bare = c.is_exact() && c.is_one();
        if (m.is_one()) {
            os << (c.is_exact() ? c.to_string() : "(" + c.to_string() + ")");
        } else if (bare) {
            os << m.to_string(names);
        } else {
            os << (c.is_exact() && c.to_rational() >= 0 ? c.to_string() : "(" + c.to_string() + ")") << '*'
               << m.to_string(names);
        }
    }
    return os.str();
}

OrderedPoly operator+(OrderedPoly a, const OrderedPoly& b) { return a += b; }
OrderedPoly operator-(OrderedPoly a, const OrderedPoly& b) { return a -= b; }

std::vector<std::string> default_variable_names(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
    return names;
}

}  // namespace pfglm
