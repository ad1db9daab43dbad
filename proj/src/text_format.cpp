#include "pfglm/text_format.hpp"

#include "pfglm/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace pfglm {

namespace {

class Cursor {
public:
    Cursor(std::string_view s, int line, int column0) : s_(s), line_(line), col0_(column0) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string integer() {
        skip_ws();
        const std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        const std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        return std::string(s_.substr(start, pos_ - start));
    }
    bool at_digit() {
        const char c = peek();
        return std::isdigit(static_cast<unsigned char>(c));
    }
    bool at_identifier() {
        const char c = peek();
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    std::string identifier() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
        if (pos_ == start) fail("expected a name");
        return std::string(s_.substr(start, pos_ - start));
    }
    int column() const { return col0_ + static_cast<int>(pos_) + 1; }
    int line() const { return line_; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, column()); }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
    int line_;
    int col0_;
};

Prec to_prec(Cursor& c, const std::string& digits) {
    try {
        return std::stoll(digits);
    } catch (const std::exception&) {
        c.fail("integer out of range: " + digits);
    }
}

// The prime in `p^k`: either the literal name p or the number itself.
void prime_token(Cursor& c, const Ring& ring) {
    if (c.at_identifier()) {
        if (c.identifier() != "p") c.fail("expected the prime");
        return;
    }
    const std::string d = c.integer();
    if (mpz_class(d) != ring.prime()) c.fail("power of " + d + " but the prime is " + ring.to_string());
}

// [-]int [/ p^k]  as a rational.
mpq_class value(Cursor& c, const Ring& ring) {
    mpq_class q(mpz_class(c.integer()));
    if (c.accept('/')) {
        prime_token(c, ring);
        const Prec k = c.accept('^') ? to_prec(c, c.integer()) : 1;
        if (k < 0) c.fail("negative exponent in a denominator");
        q /= mpq_class(ring.pow(k));
        q.canonicalize();
    }
    return q;
}

Ball scalar(Cursor& c, const Ring& ring, std::optional<Prec> default_prec) {
    if (c.accept('(')) {
        const mpq_class q = value(c, ring);
        Prec prec = kInfinity;
        if (c.accept('+')) {
            if (c.identifier() != "O") c.fail("expected O(p^k)");
            c.expect('(');
            prime_token(c, ring);
            c.expect('^');
            prec = to_prec(c, c.integer());
            c.expect(')');
        }
        c.expect(')');
        return Ball::from_rational(ring, q, prec);
    }
    const mpq_class q = value(c, ring);
    return Ball::from_rational(ring, q, default_prec.value_or(kInfinity));
}

Monomial factor_into(Cursor& c, const std::vector<std::string>& vars, Monomial m) {
    const int col = c.column();
    const std::string name = c.identifier();
    const auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UnknownVariable("unknown variable '" + name + "'", c.line(), col);
    Monomial::Exponent e = 1;
    if (c.accept('^')) {
        const std::string d = c.integer();
        if (d[0] == '-') c.fail("negative exponent");
        e = static_cast<Monomial::Exponent>(std::stoul(d));
    }
    m[static_cast<std::size_t>(it - vars.begin())] += e;
    return m;
}

OrderedPoly polynomial(Cursor& c, const SystemFile& sys) {
    const Ring& ring = *sys.ring;
    const std::size_t n = sys.vars.size();
    OrderedPoly f(ring, n, sys.order);
    bool first = true;
    while (!c.done()) {
        bool negative = false;
        if (c.accept('+')) {
        } else if (c.accept('-')) {
            negative = true;
        } else if (!first) {
            c.fail("expected '+' or '-'");
        }
        first = false;
        Ball coef = Ball::exact(ring, 1);
        Monomial m(n);
        if (c.at_identifier()) {
            m = factor_into(c, sys.vars, m);
        } else {
            coef = scalar(c, ring, sys.prec);
            if (!c.accept('*')) {
                f.add_term(m, negative ? -coef : coef);
                continue;
            }
            m = factor_into(c, sys.vars, m);
        }
        while (c.accept('*')) m = factor_into(c, sys.vars, m);
        if (!c.done() && c.peek() != '+' && c.peek() != '-') c.fail("unexpected character");
        // A bare monomial carries the header precision like a bare "1".
        if (coef.is_exact() && coef.is_one() && sys.prec && !m.is_one()) coef = Ball::from_integer(ring, 1, *sys.prec);
        f.add_term(m, negative ? -coef : coef);
    }
    if (first) c.fail("empty polynomial");
    return f;
}

std::vector<std::string> split_words(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string w; is >> w;) out.push_back(w);
    return out;
}

std::string strip_comment(const std::string& line) {
    const auto k = line.find('#');
    return k == std::string::npos ? line : line.substr(0, k);
}

}  // namespace

Ball parse_scalar(const std::string& text, const Ring& ring, std::optional<Prec> default_prec) {
    Cursor c(text, 1, 0);
    Ball b = scalar(c, ring, default_prec);
    if (!c.done()) c.fail("trailing characters after scalar");
    return b;
}

SystemFile parse_system(const std::string& text) {
    SystemFile sys;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        const auto kw_end = line.find_first_of(" \t\r", start);
        const std::string kw = line.substr(start, kw_end == std::string::npos ? std::string::npos : kw_end - start);
        const std::string rest = kw_end == std::string::npos ? "" : line.substr(kw_end);
        const int rest_col = static_cast<int>(kw_end == std::string::npos ? line.size() : kw_end);
        Cursor c(rest, lineno, rest_col);
        if (kw == "p") {
            const std::string d = c.integer();
            if (!c.done()) c.fail("trailing characters");
            sys.ring = &Ring::of(mpz_class(d));
        } else if (kw == "prec") {
            const Prec p = to_prec(c, c.integer());
            if (!c.done()) c.fail("trailing characters");
            if (p <= 0) throw ParseError("precision must be positive", lineno, rest_col + 1);
            sys.prec = p;
        } else if (kw == "vars") {
            sys.vars = split_words(rest);
            if (sys.vars.empty()) c.fail("no variable names");
            for (const auto& v : sys.vars)
                if (v.empty() || !(std::isalpha(static_cast<unsigned char>(v[0])) || v[0] == '_'))
                    throw ParseError("bad variable name '" + v + "'", lineno, rest_col + 1);
        } else if (kw == "order") {
            const auto words = split_words(rest);
            if (words.size() != 1) c.fail("expected one ordering name");
            try {
                sys.order = parse_order(words[0]);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), lineno, rest_col + 2);
            }
        } else if (kw == "poly") {
            if (!sys.ring) throw ParseError("poly before the p line", lineno, static_cast<int>(start) + 1);
            if (sys.vars.empty()) throw ParseError("poly before the vars line", lineno, static_cast<int>(start) + 1);
            sys.polys.push_back(polynomial(c, sys));
        } else {
            throw ParseError("unknown keyword '" + kw + "'", lineno, static_cast<int>(start) + 1);
        }
    }
    if (!sys.ring) throw ParseError("missing p line", lineno, 1);
    for (auto& f : sys.polys)
        if (f.order() != sys.order) f = f.reordered(sys.order);
    return sys;
}

namespace {

// The terms of g, leading first, with every standard monomial below the
// leading one that g pruned written as an explicit zero at zero_prec.
std::vector<std::pair<Monomial, Ball>> emitted_terms(const GroebnerBasis& G, const OrderedPoly& g) {
    std::vector<std::pair<Monomial, Ball>> out(g.terms().begin(), g.terms().end());
    if (!is_infinite(g.zero_prec()) && !g.is_zero()) {
        const Monomial& lead = g.leading_monomial();
        for (const auto& m : G.staircase)
            if (compare_monomials(G.order, m, lead) < 0 && !g.terms().contains(m))
                out.emplace_back(m, Ball::zero(*G.ring, g.zero_prec()));
        std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
            return compare_monomials(G.order, a.first, b.first) > 0;
        });
    }
    return out;
}

}  // namespace

std::string emit_basis(const GroebnerBasis& G) {
    Prec max_prec = 0;
    bool exact_tail = false;
    std::vector<std::vector<std::pair<Monomial, Ball>>> polys;
    for (const auto& g : G.polys) {
        polys.push_back(emitted_terms(G, g));
        bool lead = true;
        for (const auto& [m, c] : polys.back()) {
            if (!c.is_exact()) max_prec = std::max(max_prec, c.abs_prec());
            else if (!lead) exact_tail = true;
            lead = false;
        }
    }
    const std::vector<std::string> names = G.names.empty() ? default_variable_names(G.nvars) : G.names;
    std::ostringstream os;
    os << "p " << G.ring->to_string() << '\n';
    if (max_prec > 0 && !exact_tail) os << "prec " << max_prec << '\n';
    os << "vars";
    for (const auto& v : names) os << ' ' << v;
    os << "\norder " << to_string(G.order) << '\n';
    for (const auto& terms : polys) {
        os << "poly ";
        bool first = true;
        for (const auto& [m, c] : terms) {
            const bool lead = first;
            if (!first) os << " + ";
            first = false;
            std::string coef;
            if (c.is_exact()) coef = c.to_rational() < 0 ? "(" + c.to_string() + ")" : c.to_string();
            else coef = "(" + c.to_string() + ")";
            if (m.is_one()) os << coef;
            else if (lead && c.is_exact() && c.is_one()) os << m.to_string(names);
            else os << coef << '*' << m.to_string(names);
        }
        os << '\n';
    }
    return os.str();
}

BallMatrix parse_matrix(const std::string& text, const Ring* default_ring, std::optional<Prec> default_prec) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    const Ring* ring = default_ring;
    std::optional<Prec> prec = default_prec;
    std::optional<std::pair<std::size_t, std::size_t>> dims;
    std::vector<Ball> entries;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string line = strip_comment(raw);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Cursor c(line, lineno, 0);
        if (!dims) {
            if (c.at_identifier()) {
                const std::string kw = c.identifier();
                if (kw == "p") ring = &Ring::of(mpz_class(c.integer()));
                else if (kw == "prec") prec = to_prec(c, c.integer());
                else c.fail("unknown keyword '" + kw + "'");
                if (!c.done()) c.fail("trailing characters");
                continue;
            }
            const auto r = to_prec(c, c.integer());
            const auto k = to_prec(c, c.integer());
            if (!c.done()) c.fail("trailing characters after dimensions");
            if (r <= 0 || k <= 0) c.fail("dimensions must be positive");
            if (!ring) c.fail("missing p line before the dimensions");
            dims = {static_cast<std::size_t>(r), static_cast<std::size_t>(k)};
            continue;
        }
        while (!c.done()) entries.push_back(scalar(c, *ring, prec));
    }
    if (!dims) throw ParseError("missing dimensions line", lineno, 1);
    if (entries.size() != dims->first * dims->second)
        throw ParseError("expected " + std::to_string(dims->first * dims->second) + " entries, found " +
                             std::to_string(entries.size()),
                         lineno, 1);
    BallMatrix M(*ring, dims->first, dims->second);
    for (std::size_t i = 0; i < dims->first; ++i)
        for (std::size_t j = 0; j < dims->second; ++j) M(i, j) = entries[i * dims->second + j];
    return M;
}

}  // namespace pfglm
