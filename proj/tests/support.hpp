#pragma once

#include "pfglm/exact_poly.hpp"
#include "pfglm/groebner.hpp"
#include "pfglm/snf.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace testing {

using namespace pfglm;

using IntMatrix = std::vector<std::vector<mpz_class>>;

/// p-adic valuation of a nonzero integer.
Prec pval(const mpz_class& n, const mpz_class& p);

/// Valuations of the elementary divisors of an integer matrix, from
/// determinantal divisors (min valuation over the k x k minors). Entries past
/// the rank are nullopt.
std::vector<std::optional<Prec>> elementary_divisor_valuations(const IntMatrix& M, const mpz_class& p);

/// Entries p^v * u with v in [0, vmax] and u a random unit below p^8.
IntMatrix random_padic_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned long p,
                              unsigned vmax);

BallMatrix to_balls(const IntMatrix& M, const Ring& ring, Prec prec);

/// True iff the ball and the rational agree modulo p^(ball precision).
bool congruent(const Ball& a, const mpq_class& q);

/// Coefficient-wise congruence; coefficients the ball polynomial pruned must
/// vanish modulo p^zero_prec. `why` receives the first mismatch.
bool congruent(const OrderedPoly& f, const ExactPoly& g, std::string* why = nullptr);

/// Same leading monomials and congruent elements.
bool congruent(const GroebnerBasis& G, const std::vector<ExactPoly>& exact, std::string* why = nullptr);

/// Two ball polynomials agree at their shared precision.
bool agree(const OrderedPoly& f, const OrderedPoly& g);

/// Every entry of a - b has no significant digit.
bool indistinguishable(const BallMatrix& a, const BallMatrix& b);

/// The exact basis with coefficients truncated to absolute precision N.
GroebnerBasis truncate(const std::vector<ExactPoly>& G, const Ring& ring, Prec N, OrderTag order);

ExactPoly exact_poly(std::size_t nvars, OrderTag order,
                     const std::vector<std::pair<std::vector<unsigned>, long>>& terms);

/// Reduced lex basis (x_i - h_i(x_n), h_n(x_n)) of a set of points with
/// distinct last coordinates.
std::vector<ExactPoly> points_lex_basis(const std::vector<std::vector<long>>& points);

/// Random points with distinct last coordinates, coordinates in [-range, range].
std::vector<std::vector<long>> random_points(std::mt19937_64& rng, std::size_t n, std::size_t count, long range);

/// A zero-dimensional test system with its exact reduced grevlex basis.
struct Fixture {
    std::string name;
    unsigned long prime = 2;
    std::size_t nvars = 0;
    std::vector<ExactPoly> grevlex;
    /// Known points when built from points.
    std::vector<std::vector<long>> points;
};

/// Random dense system (homogeneous or affine) through exact Buchberger.
Fixture random_system_fixture(const std::vector<unsigned>& degrees, bool affine, unsigned long p, Prec coeff_prec,
                              std::uint64_t seed);

/// Ideal of random points through the lex interpolation basis and exact FGLM.
Fixture points_fixture(std::mt19937_64& rng, std::size_t n, std::size_t count, unsigned long p, long range = 30);

}  // namespace testing
