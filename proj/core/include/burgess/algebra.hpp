#pragma once

#include <optional>
#include <vector>

#include "burgess/polynomial.hpp"

namespace burgess {

/// Quotient a / b when b divides a exactly in F_q[x]; nullopt otherwise.
/// Lex-order division by a single polynomial leaves remainder zero exactly
/// when b | a.
std::optional<FieldPoly> divide_exact(const FieldPoly& a, const FieldPoly& b);

/// Scales p so that its lexicographically leading coefficient is 1.
FieldPoly make_monic(const FieldPoly& p);

/// Monic greatest common divisor in F_q[x_1..x_n], computed by recursion on
/// the smallest variable present: content / primitive part in that variable
/// and a primitive pseudo-remainder sequence. gcd(0, 0) = 0.
FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);

struct SquarefreeFactor {
    FieldPoly factor;  // monic, squarefree, pairwise coprime across entries
    std::uint32_t multiplicity;
};

/// f = lc(f) * prod factor^multiplicity. Handles characteristic-p
/// inseparability (all partials vanishing) by p-th-root extraction, so it is
/// valid at every degree. Throws ZeroPolynomial.
std::vector<SquarefreeFactor> squarefree_decomposition(const FieldPoly& f);

}  // namespace burgess
