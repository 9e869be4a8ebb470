#pragma once

#include <optional>
#include <string>
#include <vector>

#include "burgess/collection.hpp"
#include "burgess/polynomial.hpp"

namespace burgess {

/// How to treat forms whose degree reaches the characteristic.
///
/// `strict` refuses (deg f >= q) because the derivative-based decomposition
/// is only guaranteed below the characteristic; `full` runs the
/// characteristic-aware algorithm that extracts p-th roots when needed.
enum class CharPolicy { strict, full };

/// f = g^Delta * h with h free of Delta-th powers of non-constant factors.
/// The leading coefficient of f is kept in h; g is monic.
struct PowerFreeDecomposition {
    FieldPoly g;
    FieldPoly h;
};

/// Throws ZeroPolynomial for f = 0 and, under CharPolicy::strict,
/// DegreeTooLarge when deg f >= q.
PowerFreeDecomposition power_free_decompose(const FieldPoly& f, std::uint32_t order,
                                            CharPolicy policy = CharPolicy::strict);

/// True when h(x + s v) == h(x) identically in the formal parameter s.
bool is_invariant_direction(const FieldPoly& h, std::span<const Residue> v);

enum class Verdict { yes, no, indeterminate };
std::string to_string(Verdict v);

struct AdmissibilityReport {
    Verdict verdict = Verdict::indeterminate;
    std::optional<FieldPoly> h;              // Delta-th-power-free part
    std::optional<std::vector<Residue>> witness;  // invariant direction, when found
    std::string method;                      // "invariant-direction"
    std::string reason;                      // why the verdict was reached
};

/// Decides whether F mod q is (Delta, q)-admissible: the power-free part h
/// is non-constant and no invertible linear change of variables makes h
/// independent of one variable. The latter is equivalent to h having no
/// invariant direction, which is searched over projective representatives
/// (first non-zero coordinate 1) in lexicographic order.
///
/// Under CharPolicy::strict, deg(F mod q) >= q yields Verdict::indeterminate.
/// Throws ZeroModQ when F vanishes mod q.
AdmissibilityReport check_admissible(const IntPoly& form, std::uint64_t q, std::uint32_t order,
                                     CharPolicy policy = CharPolicy::strict);

/// All projective direction representatives of F_q^n in the search order.
std::vector<std::vector<Residue>> projective_directions(std::size_t n, std::uint64_t q);

/// prod_j F(X + x^(j))^delta(j) reduced mod q.
FieldPoly product_polynomial(const IntPoly& form, const Collection& points, std::uint32_t order,
                             std::uint64_t q);

}  // namespace burgess
