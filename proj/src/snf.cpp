#include "pfglm/snf.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/kernels.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace pfglm {

namespace {

void axpy_rows(BallMatrix& m, std::size_t k, std::size_t i, const Ball& c) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Ball& x = m(i, j);
        if (x.is_exact_zero()) continue;
        m(k, j) += c * x;
    }
}

void axpy_cols(BallMatrix& m, std::size_t k, std::size_t j, const Ball& c) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        const Ball& x = m(i, j);
        if (x.is_exact_zero()) continue;
        m(i, k) += c * x;
    }
}

void swap_rows(BallMatrix& m, std::size_t i, std::size_t k) {
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(i, j), m(k, j));
}

void swap_cols(BallMatrix& m, std::size_t j, std::size_t k) {
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, j), m(i, k));
}

// Elementary operations applied to a working matrix and, in lockstep, to the
// transforms: A <- E A with P <- E P and P_inv <- P_inv E^-1 for row
// operations, A <- A F with Q <- Q F and Q_inv <- F^-1 Q_inv for columns.
struct Workspace {
    BallMatrix& A;
    BallMatrix& P;
    BallMatrix* P_inv;
    BallMatrix& Q;
    BallMatrix* Q_inv;
    std::uint64_t ops = 0;

    void row_swap(std::size_t i, std::size_t k) {
        swap_rows(A, i, k);
        swap_rows(P, i, k);
        if (P_inv) swap_cols(*P_inv, i, k);
    }

    void col_swap(std::size_t j, std::size_t k) {
        swap_cols(A, j, k);
        swap_cols(Q, j, k);
        if (Q_inv) swap_rows(*Q_inv, j, k);
    }

    void row_scale(std::size_t i, const Ball& u, const Ball& u_inv) {
        for (auto& x : A.row(i)) x *= u;
        for (auto& x : P.row(i)) x *= u;
        if (P_inv)
            for (std::size_t r = 0; r < P_inv->rows(); ++r) (*P_inv)(r, i) *= u_inv;
        ++ops;
    }

    // row_k += c * row_i
    void row_axpy(std::size_t k, std::size_t i, const Ball& c) {
        axpy_rows(A, k, i, c);
        axpy_rows(P, k, i, c);
        if (P_inv) axpy_cols(*P_inv, i, k, -c);
        ++ops;
    }

    // col_k += c * col_j
    void col_axpy(std::size_t k, std::size_t j, const Ball& c) {
        axpy_cols(A, k, j, c);
        axpy_cols(Q, k, j, c);
        if (Q_inv) axpy_rows(*Q_inv, j, k, -c);
        ++ops;
    }
};

struct Pivot {
    std::size_t row;
    std::size_t col;
    Prec val;
};

// Smallest valuation among significant entries of the trailing submatrix;
// ties go to the lexicographically smallest (row, col).
std::optional<Pivot> find_pivot(const BallMatrix& a, std::size_t t) {
    std::optional<Pivot> best;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) {
            const Ball& x = a(i, j);
            if (x.is_zero()) continue;
            const Prec v = x.valuation().value;
            if (!best || v < best->val) best = Pivot{i, j, v};
        }
    return best;
}

Prec trailing_min_prec(const BallMatrix& a, std::size_t t) {
    Prec m = kInfinity;
    for (std::size_t i = t; i < a.rows(); ++i)
        for (std::size_t j = t; j < a.cols(); ++j) m = std::min(m, a(i, j).abs_prec());
    return m;
}

// The unit that scales the pivot p^a * w to p^a: an exact lift of w^-1.
Ball normalizing_unit(const Ball& pivot) {
    const Ring& ring = *pivot.ring();
    const Ball w = Ball::from_parts(ring, pivot.unit(), 0, pivot.relative_prec());
    return w.inverse().lifted();
}

// Iterative form of the recursive approximate-SNF elimination.
void approximate_phase(Workspace& w, std::vector<Valuation>& diag, Prec transform_prec) {
    BallMatrix& A = w.A;
    const std::size_t t_max = std::min(A.rows(), A.cols());
    diag.assign(t_max, Valuation{});
    for (std::size_t t = 0; t < t_max; ++t) {
        const auto pivot = find_pivot(A, t);
        if (!pivot) {
            const Prec bound = trailing_min_prec(A, t);
            for (std::size_t k = t; k < t_max; ++k) diag[k] = Valuation{false, bound};
            return;
        }
        if (pivot->row != t) w.row_swap(t, pivot->row);
        if (pivot->col != t) w.col_swap(t, pivot->col);
        const Prec a = pivot->val;
        if (A(t, t).unit() != 1) {
            const Ball u = normalizing_unit(A(t, t));
            const Ball u_inv = u.with_prec(transform_prec).inverse();
            w.row_scale(t, u, u_inv);
        }
        for (std::size_t k = t + 1; k < A.rows(); ++k) {
            if (A(k, t).is_zero()) continue;
            const Ball c = -A(k, t).shifted(-a).lifted();
            w.row_axpy(k, t, c);
        }
        for (std::size_t k = t + 1; k < A.cols(); ++k) {
            if (A(t, k).is_zero()) continue;
            const Ball c = -A(t, k).shifted(-a).lifted();
            w.col_axpy(k, t, c);
        }
        diag[t] = Valuation{true, a};
    }
}

BallMatrix empty_like(const Ring& ring) { return BallMatrix(ring, 0, 0); }

}  // namespace

bool SnfFactorization::full_rank_certified() const noexcept {
    return std::all_of(diag_valuations.begin(), diag_valuations.end(), [](const Valuation& v) { return v.known; });
}

Prec default_transform_prec(const BallMatrix& M) {
    Prec best = std::numeric_limits<Prec>::min();
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) {
            const Ball& x = M(i, j);
            if (x.is_exact()) continue;
            best = std::max(best, x.abs_prec());
            if (!x.is_zero()) best = std::max(best, x.relative_prec());
        }
    if (best == std::numeric_limits<Prec>::min()) return kInfinity;
    return std::max<Prec>(best, 1);
}

SnfFactorization snf_approximate(const BallMatrix& M, bool with_inverses) {
    return snf_approximate(M, with_inverses, default_transform_prec(M));
}

SnfFactorization snf_approximate(const BallMatrix& M, bool with_inverses, Prec transform_prec) {
    const Ring& ring = *M.ring();
    SnfFactorization f;
    f.Delta = M;
    f.P = BallMatrix::identity(ring, M.rows(), transform_prec);
    f.Q = BallMatrix::identity(ring, M.cols(), transform_prec);
    f.P_inv = with_inverses ? BallMatrix::identity(ring, M.rows(), transform_prec) : empty_like(ring);
    f.Q_inv = with_inverses ? BallMatrix::identity(ring, M.cols(), transform_prec) : empty_like(ring);
    f.has_inverses = with_inverses;
    f.transform_prec = transform_prec;
    Workspace w{f.Delta, f.P, with_inverses ? &f.P_inv : nullptr, f.Q, with_inverses ? &f.Q_inv : nullptr};
    approximate_phase(w, f.diag_valuations, transform_prec);
    f.op_count = w.ops;
    return f;
}

void snf_update_in_place(SnfFactorization& f, std::span<const Ball> v) {
    if (!f.has_inverses) throw Error("snf_update needs a factorization with inverses");
    if (v.size() != f.rows()) throw DimensionMismatch("appended column has the wrong length");
    const Ring& ring = *f.Delta.ring();
    const BallVector w = kernels::matvec(f.P, v);
    f.Delta.append_column(w);
    const Ball one = Ball::exact(ring, 1);
    f.Q.grow(1, 1, one);
    f.Q_inv.grow(1, 1, one);
    Workspace ws{f.Delta, f.P, &f.P_inv, f.Q, &f.Q_inv};
    approximate_phase(ws, f.diag_valuations, f.transform_prec);
    f.op_count += ws.ops;
    f.refined = false;
}

SnfFactorization snf_update(const SnfFactorization& f, std::span<const Ball> v) {
    SnfFactorization g = f;
    snf_update_in_place(g, v);
    return g;
}

SnfFactorization snf_precise(const SnfFactorization& f) {
    if (!f.full_rank_certified()) throw RankNotCertified("cannot refine: rank not certified");
    SnfFactorization g = f;
    const Ring& ring = *g.Delta.ring();
    BallMatrix& A = g.Delta;
    const std::size_t t = std::min(A.rows(), A.cols());
    const bool tall = t == A.cols();
    Workspace w{A, g.P, g.has_inverses ? &g.P_inv : nullptr, g.Q, g.has_inverses ? &g.Q_inv : nullptr};
    for (std::size_t i = 0; i < t; ++i) {
        const Prec a = g.diag_valuations[i].value;
        const Ball exact_pivot = Ball::uniformizer_power(ring, a);
        const Ball& d = A(i, i);
        if (!(d.is_exact() && d == exact_pivot)) {
            // d = p^a * w with w = 1 + O(p^(l-a)); scaling by the unknown
            // exact w^-1 puts that uncertainty on the transforms.
            const Ball u = exact_pivot * d.inverse();
            const Ball u_inv = d.shifted(-a);
            w.row_scale(i, u, u_inv);
        }
        A(i, i) = exact_pivot;
        if (tall) {
            for (std::size_t j = 0; j < A.rows(); ++j) {
                if (j == i || A(j, i).is_exact_zero()) continue;
                const Ball c = -A(j, i).shifted(-a);
                w.row_axpy(j, i, c);
                A(j, i) = Ball::zero(ring, kInfinity);
            }
        } else {
            for (std::size_t j = 0; j < A.cols(); ++j) {
                if (j == i || A(i, j).is_exact_zero()) continue;
                const Ball c = -A(i, j).shifted(-a);
                w.col_axpy(j, i, c);
                A(i, j) = Ball::zero(ring, kInfinity);
            }
        }
    }
    g.op_count += w.ops;
    g.refined = true;
    return g;
}

Prec condition_number(const SnfFactorization& f) {
    if (!f.full_rank_certified()) throw RankNotCertified("condition number of a matrix whose rank is not certified");
    Prec c = 0;
    for (const auto& v : f.diag_valuations) c = std::max(c, v.value);
    return c;
}

BallVector solve_in_image(const SnfFactorization& f, std::span<const Ball> Y) {
    if (!f.full_rank_certified()) throw RankNotCertified("solve: rank not certified");
    const std::size_t rows = f.rows();
    const std::size_t cols = f.cols();
    if (rows < cols) throw DimensionMismatch("solve_in_image needs rows >= cols");
    if (Y.size() != rows) throw DimensionMismatch("right-hand side has the wrong length");
    const Ring& ring = *f.Delta.ring();
    const BallMatrix& D = f.Delta;
    BallVector lambda = kernels::matvec(f.P, Y);

    if (!f.refined) {
        // Replay the refinement's row operations on the vector. Off-diagonal
        // entries of Delta keep precision >= 2*l_off - a_max through the
        // refinement as long as l_off > a_max; otherwise refine for real.
        Prec a_max = 0;
        for (const auto& v : f.diag_valuations) a_max = std::max(a_max, v.value);
        Prec l_off = kInfinity;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                if (i != j && !D(i, j).is_exact_zero()) l_off = std::min(l_off, D(i, j).abs_prec());
        if (!is_infinite(l_off) && l_off <= a_max) return solve_in_image(snf_precise(f), Y);
        const Prec bound = is_infinite(l_off) ? kInfinity : 2 * l_off - a_max;
        for (std::size_t i = 0; i < cols; ++i) {
            const Prec a = f.diag_valuations[i].value;
            const Ball exact_pivot = Ball::uniformizer_power(ring, a);
            const Ball& d = D(i, i);
            if (!(d.is_exact() && d == exact_pivot)) lambda[i] = (exact_pivot * d.inverse()) * lambda[i];
            if (lambda[i].is_exact_zero()) continue;
            for (std::size_t j = 0; j < rows; ++j) {
                if (j == i || D(j, i).is_exact_zero()) continue;
                const Ball c = -D(j, i).with_prec(std::min(D(j, i).abs_prec(), bound)).shifted(-a);
                lambda[j] += c * lambda[i];
            }
        }
    }

    for (std::size_t k = cols; k < rows; ++k)
        if (!lambda[k].is_zero())
            throw MembershipViolated("right-hand side has a significant digit outside the image: " +
                                     lambda[k].to_string());
    BallVector z(cols);
    for (std::size_t i = 0; i < cols; ++i) z[i] = lambda[i].shifted(-f.diag_valuations[i].value);
    return kernels::matvec(f.Q, z);
}

BallVector solve_in_image(const BallMatrix& M, std::span<const Ball> Y) {
    if (M.rows() < M.cols()) throw DimensionMismatch("solve_in_image needs rows >= cols");
    const SnfFactorization f = snf_approximate(M, false);
    if (!f.full_rank_certified()) throw RankNotCertified("solve_in_image: rank not certified");
    return solve_in_image(snf_precise(f), Y);
}

BallVector solve_square(const BallMatrix& M, std::span<const Ball> Y) {
    if (M.rows() != M.cols()) throw DimensionMismatch("solve_square needs a square matrix");
    return solve_in_image(M, Y);
}

}  // namespace pfglm
