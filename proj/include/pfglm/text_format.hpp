#pragma once

#include "pfglm/ball_matrix.hpp"
#include "pfglm/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfglm {

/// Parsed system file:
///
///     # comment
///     p 5
///     prec 50
///     vars x y
///     order grevlex
///     poly x^2 - (3 + O(5^40))*y + 1/5^2
///
/// A bare coefficient gets the `prec` header's precision, or is exact when
/// the file has no `prec` line. `(c + O(p^k))` and `(c/p^j + O(p^k))` give a
/// coefficient its own precision; `/p` alone means `/p^1`.
struct SystemFile {
    const Ring* ring = nullptr;
    std::optional<Prec> prec;
    std::vector<std::string> vars;
    OrderTag order;
    std::vector<OrderedPoly> polys;
};

/// Throws ParseError (with line and column), UnknownVariable, InvalidPrime.
SystemFile parse_system(const std::string& text);

/// Scalar in the textual form above.
Ball parse_scalar(const std::string& text, const Ring& ring, std::optional<Prec> default_prec);

/// A system file reproducing G: `prec` is the largest finite coefficient
/// precision, every inexact coefficient is annotated, and exact non-leading
/// coefficients are only allowed bare when there is no `prec` line, so
/// those files omit it.
std::string emit_basis(const GroebnerBasis& G);

/// Matrix file: optional `p` and `prec` lines, then `rows cols`, then the
/// entries row by row. The headers override the defaults.
BallMatrix parse_matrix(const std::string& text, const Ring* default_ring = nullptr,
                        std::optional<Prec> default_prec = std::nullopt);

}  // namespace pfglm
