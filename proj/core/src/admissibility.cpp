#include "burgess/admissibility.hpp"

#include "burgess/algebra.hpp"
#include "burgess/ff_core.hpp"

namespace burgess {

PowerFreeDecomposition power_free_decompose(const FieldPoly& f, std::uint32_t order, CharPolicy policy) {
    if (f.is_zero()) throw ZeroPolynomial("cannot decompose the zero polynomial");
    if (order < 2) throw OrderOne("Delta must be at least 2");
    const std::uint64_t q = f.ring().modulus();
    if (policy == CharPolicy::strict && f.degree() >= q)
        throw DegreeTooLarge("degree " + std::to_string(f.degree()) + " is not below q = " + std::to_string(q));

    const ResidueRing& ring = f.ring();
    FieldPoly g = FieldPoly::constant(f.dim(), 1, ring);
    FieldPoly h = FieldPoly::constant(f.dim(), f.leading().second, ring);
    for (const auto& [factor, mult] : squarefree_decomposition(f)) {
        if (mult / order > 0) g = g * factor.pow(mult / order);
        if (mult % order > 0) h = h * factor.pow(mult % order);
    }
    return {std::move(g), std::move(h)};
}

bool is_invariant_direction(const FieldPoly& h, std::span<const Residue> v) {
    const std::size_t n = h.dim();
    if (v.size() != n) throw DimensionMismatch("direction has wrong dimension");
    const ResidueRing& ring = h.ring();
    std::vector<FieldPoly> images;
    images.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        FieldPoly img = FieldPoly::variable(n + 1, i, ring);
        if (v[i] != 0) img.add_term(Monomial::unit(n + 1, n), v[i]);
        images.push_back(std::move(img));
    }
    return substitute(h, std::span<const FieldPoly>(images)) == embed(h, n + 1);
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::indeterminate: return "indeterminate";
    }
    return "?";
}

std::vector<std::vector<Residue>> projective_directions(std::size_t n, std::uint64_t q) {
    std::vector<std::vector<Residue>> out;
    // Lexicographic order over tuples: leading zeros first, so the
    // representative with its 1 furthest right comes first.
    for (std::size_t lead = n; lead-- > 0;) {
        std::vector<Residue> v(n, 0);
        v[lead] = 1;
        while (true) {
            out.push_back(v);
            bool carry = true;
            for (std::size_t i = n; carry && i > lead + 1;) {
                --i;
                if (++v[i] < q) carry = false;
                else v[i] = 0;
            }
            if (carry) break;
        }
    }
    return out;
}

AdmissibilityReport check_admissible(const IntPoly& form, std::uint64_t q, std::uint32_t order, CharPolicy policy) {
    if (!is_prime(q)) throw NotPrime(std::to_string(q) + " is not prime");
    if (order < 2) throw OrderOne("Delta must be at least 2");
    const FieldPoly f = reduce_mod(form, q);
    if (f.is_zero()) throw ZeroModQ("form vanishes identically mod " + std::to_string(q));

    AdmissibilityReport report;
    report.method = "invariant-direction";
    if (policy == CharPolicy::strict && f.degree() >= q) {
        report.verdict = Verdict::indeterminate;
        report.reason = "degree " + std::to_string(f.degree()) + " >= q; rerun with the full characteristic mode";
        return report;
    }
    auto [g, h] = power_free_decompose(f, order, policy);
    report.h = h;
    if (h.is_constant()) {
        report.verdict = Verdict::no;
        report.reason = "power-free part is constant";
        return report;
    }
    for (const auto& v : projective_directions(f.dim(), q)) {
        if (is_invariant_direction(h, v)) {
            report.verdict = Verdict::no;
            report.witness = v;
            report.reason = "power-free part is invariant along a direction";
            return report;
        }
    }
    report.verdict = Verdict::yes;
    report.reason = "power-free part has no invariant direction";
    return report;
}

FieldPoly product_polynomial(const IntPoly& form, const Collection& points, std::uint32_t order, std::uint64_t q) {
    const std::size_t n = form.dim();
    points.validate(n);
    const FieldPoly f = reduce_mod(form, q);
    FieldPoly out = FieldPoly::constant(n, 1, f.ring());
    for (std::size_t j = 1; j <= points.size(); ++j) {
        const FieldPoly shifted = shift(f, std::span<const std::int64_t>(points.points[j - 1]));
        out = out * shifted.pow(Collection::delta_exponent(j, order));
    }
    return out;
}

}  // namespace burgess
