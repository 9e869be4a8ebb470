#include "burgess/algebra.hpp"

#include <map>

namespace burgess {

std::optional<FieldPoly> divide_exact(const FieldPoly& a, const FieldPoly& b) {
    if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
    const ResidueRing& ring = a.ring();
    const auto& [lead_m, lead_c] = b.leading();
    const auto lead_inv = ring.inv(lead_c);
    FieldPoly quotient(a.dim(), ring);
    FieldPoly rest = a;
    while (!rest.is_zero()) {
        const auto& [rm, rc] = rest.leading();
        if (!lead_m.divides(rm)) return std::nullopt;
        Monomial qm = rm;
        for (std::size_t i = 0; i < qm.dim(); ++i) qm.exps[i] -= lead_m.exps[i];
        const auto qc = ring.mul(rc, lead_inv);
        quotient.add_term(qm, qc);
        rest -= FieldPoly::monomial(qm, qc, ring) * b;
    }
    return quotient;
}

FieldPoly make_monic(const FieldPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.ring().inv(p.leading().second));
}

namespace {

FieldPoly exact(const FieldPoly& a, const FieldPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw Error("internal: expected exact division");
    return *std::move(q);
}

std::optional<std::size_t> first_variable(const FieldPoly& a, const FieldPoly& b) {
    for (std::size_t v = 0; v < a.dim(); ++v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return std::nullopt;
}

/// Coefficients of p viewed as a polynomial in x_v (x_v removed from each).
std::map<std::uint32_t, FieldPoly> coefficients_in(const FieldPoly& p, std::size_t v) {
    std::map<std::uint32_t, FieldPoly> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial rest = m;
        rest.exps[v] = 0;
        auto it = out.try_emplace(m.exps[v], p.dim(), p.ring()).first;
        it->second.add_term(rest, c);
    }
    return out;
}

FieldPoly content_in(const FieldPoly& p, std::size_t v) {
    FieldPoly g(p.dim(), p.ring());
    for (const auto& [k, c] : coefficients_in(p, v)) {
        g = gcd(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

FieldPoly x_power(std::size_t n, std::size_t v, std::uint32_t k, const ResidueRing& ring) {
    Monomial m(n);
    m.exps[v] = k;
    return FieldPoly::monomial(m, ring.one(), ring);
}

/// Pseudo-remainder of a by b in x_v (up to a unit of F_q[other variables]).
FieldPoly pseudo_remainder(FieldPoly a, const FieldPoly& b, std::size_t v) {
    const std::uint32_t db = b.degree_in(v);
    const FieldPoly lb = coefficients_in(b, v).rbegin()->second;
    while (!a.is_zero() && a.degree_in(v) >= db) {
        const std::uint32_t da = a.degree_in(v);
        const FieldPoly la = coefficients_in(a, v).rbegin()->second;
        a = lb * a - la * x_power(a.dim(), v, da - db, a.ring()) * b;
    }
    return a;
}

}  // namespace

FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return FieldPoly::constant(a.dim(), 1, a.ring());

    const std::size_t v = *first_variable(a, b);
    if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

    const FieldPoly ca = content_in(a, v);
    const FieldPoly cb = content_in(b, v);
    const FieldPoly c = gcd(ca, cb);
    FieldPoly pa = exact(a, ca);
    FieldPoly pb = exact(b, cb);
    if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

    while (!pb.is_zero() && pb.degree_in(v) > 0) {
        FieldPoly r = pseudo_remainder(pa, pb, v);
        pa = std::move(pb);
        pb = r.is_zero() ? std::move(r) : exact(r, content_in(r, v));
    }
    if (!pb.is_zero()) return make_monic(c);  // primitive parts are coprime
    return make_monic(exact(pa, content_in(pa, v)) * c);
}

namespace {

FieldPoly pth_root(const FieldPoly& f, std::uint64_t p) {
    FieldPoly out(f.dim(), f.ring());
    for (const auto& [m, c] : f.terms()) {
        Monomial r = m;
        for (auto& e : r.exps) {
            if (e % p != 0) throw Error("internal: expected a p-th power");
            e /= static_cast<std::uint32_t>(p);
        }
        // Frobenius is the identity on the prime field, so c^(1/p) = c.
        out.add_term(r, c);
    }
    return out;
}

void decompose_monic(const FieldPoly& f, std::uint32_t scale, std::vector<SquarefreeFactor>& out) {
    if (f.is_constant()) return;
    const std::uint64_t p = f.ring().modulus();

    FieldPoly c = f;
    bool all_zero = true;
    for (std::size_t v = 0; v < f.dim(); ++v) {
        const FieldPoly d = f.derivative(v);
        if (d.is_zero()) continue;
        all_zero = false;
        c = gcd(c, d);
    }
    if (all_zero) {
        decompose_monic(pth_root(f, p), scale * static_cast<std::uint32_t>(p), out);
        return;
    }

    FieldPoly w = exact(f, c);
    for (std::uint32_t i = 1; !w.is_constant(); ++i) {
        const FieldPoly y = gcd(w, c);
        const FieldPoly z = exact(w, y);
        if (!z.is_constant()) out.push_back({make_monic(z), i * scale});
        w = y;
        c = exact(c, y);
    }
    if (!c.is_constant()) decompose_monic(pth_root(make_monic(c), p), scale * static_cast<std::uint32_t>(p), out);
}

}  // namespace

std::vector<SquarefreeFactor> squarefree_decomposition(const FieldPoly& f) {
    if (f.is_zero()) throw ZeroPolynomial("squarefree decomposition of zero");
    std::vector<SquarefreeFactor> out;
    decompose_monic(make_monic(f), 1, out);
    return out;
}

}  // namespace burgess
