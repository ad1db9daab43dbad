#include "pfglm/fixture_basis.hpp"

#include "pfglm/buchberger.hpp"
#include "pfglm/errors.hpp"
#include "pfglm/random_system.hpp"

#include <algorithm>
#include <map>
#include <optional>

namespace pfglm {

namespace {

bool is_homogeneous(const ExactPoly& f) {
    if (f.is_zero()) return true;
    const auto d = f.leading_monomial().degree();
    return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) { return t.first.degree() == d; });
}

std::uint64_t total_degree(const ExactPoly& f) {
    std::uint64_t d = 0;
    for (const auto& [m, c] : f.terms()) d = std::max(d, m.degree());
    return d;
}

// Reduced basis from the Macaulay matrix at working precision M, or nullopt
// when some output coefficient is known to less than N.
std::optional<std::vector<OrderedPoly>> macaulay_attempt(const std::vector<ExactPoly>& F, const Ring& ring, Prec N,
                                                         Prec M, std::size_t expected_rank) {
    const std::size_t n = F.front().nvars();
    std::vector<unsigned> degrees;
    for (const auto& f : F) degrees.push_back(static_cast<unsigned>(total_degree(f)));
    std::uint64_t D = 1;
    for (auto d : degrees) D += d > 0 ? d - 1 : 0;

    const OrderTag grevlex{OrderKind::grevlex};
    const std::vector<Monomial> cols = monomials_of_degree(n, static_cast<unsigned>(D), true);
    std::map<Monomial, std::size_t> col_index;
    for (std::size_t k = 0; k < cols.size(); ++k) col_index.emplace(cols[k], k);

    std::vector<std::vector<Ball>> rows;
    for (std::size_t i = 0; i < F.size(); ++i) {
        if (degrees[i] > D) continue;
        for (const auto& m : monomials_of_degree(n, static_cast<unsigned>(D - degrees[i]), true)) {
            std::vector<Ball> row(cols.size(), Ball::zero(ring, kInfinity));
            for (const auto& [u, c] : F[i].terms())
                row[col_index.at(m * u)] = Ball::from_rational(ring, c, M);
            rows.push_back(std::move(row));
        }
    }

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols.size() && r < rows.size(); ++c) {
        std::size_t best = rows.size();
        for (std::size_t k = r; k < rows.size(); ++k) {
            const Ball& x = rows[k][c];
            if (x.is_zero()) continue;
            if (best == rows.size() || x.valuation().value < rows[best][c].valuation().value) best = k;
        }
        if (best == rows.size()) continue;
        std::swap(rows[r], rows[best]);
        const Ball inv = rows[r][c].inverse();
        for (std::size_t j = c; j < cols.size(); ++j)
            if (!rows[r][j].is_exact_zero()) rows[r][j] *= inv;
        rows[r][c] = Ball::exact(ring, 1);
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (k == r || rows[k][c].is_exact_zero()) continue;
            const Ball f = rows[k][c];
            for (std::size_t j = c + 1; j < cols.size(); ++j)
                if (!rows[r][j].is_exact_zero()) rows[k][j] -= f * rows[r][j];
            rows[k][c] = Ball::zero(ring, kInfinity);
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() < expected_rank) throw NotZeroDimensional("leading forms are not a regular sequence");

    std::vector<bool> is_pivot(cols.size(), false);
    for (auto c : pivot_col) is_pivot[c] = true;
    std::vector<Monomial> pivots;
    for (auto c : pivot_col) pivots.push_back(cols[c]);

    std::vector<OrderedPoly> out;
    for (std::size_t k = 0; k < pivot_col.size(); ++k) {
        const Monomial& u = cols[pivot_col[k]];
        const bool minimal = std::none_of(pivots.begin(), pivots.end(), [&](const Monomial& v) { return v != u && v.divides(u); });
        if (!minimal) continue;
        OrderedPoly g(ring, n, grevlex);
        g.set_term(u, Ball::exact(ring, 1));
        for (std::size_t j = pivot_col[k] + 1; j < cols.size(); ++j) {
            if (is_pivot[j]) continue;
            const Ball& x = rows[k][j];
            if (x.abs_prec() < N) return std::nullopt;
            g.set_term(cols[j], x.with_prec(N));
        }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

std::vector<std::uint64_t> regular_sequence_hilbert(const std::vector<unsigned>& degrees) {
    const std::size_t n = degrees.size();
    std::size_t top = 1;
    for (auto d : degrees) top += d;
    // Numerator prod (1 - t^d), then divide by (1 - t)^n.
    std::vector<long long> h(top + 1, 0);
    h[0] = 1;
    for (auto d : degrees)
        for (std::size_t k = top; k >= d; --k) {
            h[k] -= h[k - d];
            if (k == d) break;
        }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 1; k <= top; ++k) h[k] += h[k - 1];
    std::vector<std::uint64_t> out;
    for (auto x : h) out.push_back(static_cast<std::uint64_t>(std::max(0LL, x)));
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

GroebnerBasis truncated_grevlex_basis(const std::vector<ExactPoly>& F, const Ring& ring, Prec N, FixtureMethod method) {
    if (F.empty()) throw NotZeroDimensional("no generators");
    const OrderTag grevlex{OrderKind::grevlex};
    if (method == FixtureMethod::automatic)
        method = std::all_of(F.begin(), F.end(), is_homogeneous) ? FixtureMethod::buchberger : FixtureMethod::macaulay;

    if (method == FixtureMethod::buchberger) {
        std::vector<OrderedPoly> polys;
        for (const auto& g : exact_buchberger(F, grevlex)) polys.push_back(embed(g, ring, N));
        return GroebnerBasis::from_polys(std::move(polys), grevlex);
    }

    if (F.size() != F.front().nvars()) throw NotZeroDimensional("the Macaulay method needs a square system");
    std::vector<unsigned> degrees;
    for (const auto& f : F) degrees.push_back(static_cast<unsigned>(total_degree(f)));
    std::uint64_t D = 1;
    for (auto d : degrees) D += d > 0 ? d - 1 : 0;
    const auto hilbert = regular_sequence_hilbert(degrees);
    std::uint64_t standard = 0;
    for (std::size_t k = 0; k < hilbert.size() && k <= D; ++k) standard += hilbert[k];
    const std::size_t ncols = monomials_of_degree(F.front().nvars(), static_cast<unsigned>(D), true).size();
    const std::size_t expected_rank = ncols - standard;

    for (Prec M = 2 * N + 32; M <= 64 * N + 1024; M *= 2) {
        auto polys = macaulay_attempt(F, ring, N, M, expected_rank);
        if (polys) return GroebnerBasis::from_polys(std::move(*polys), grevlex);
    }
    throw InsufficientPrecision("Macaulay matrix too ill-conditioned for the working precision cap");
}

}  // namespace pfglm
