#include <doctest.h>

#include "burgess/admissibility.hpp"
#include "burgess/errors.hpp"
#include "burgess/random.hpp"
#include "oracles.hpp"

using namespace burgess;

TEST_CASE("reference verdicts") {
    CHECK(check_admissible(parse_int_poly("x1*x2", 2), 5, 2).verdict == Verdict::yes);

    const auto square = check_admissible(parse_int_poly("x1^2", 2), 5, 2);
    CHECK(square.verdict == Verdict::no);
    REQUIRE(square.h);
    CHECK(square.h->degree() == 0);

    // x1 alone is invariant along x2.
    const auto lin = check_admissible(parse_int_poly("x1", 2), 5, 2);
    CHECK(lin.verdict == Verdict::no);
    REQUIRE(lin.witness);
    CHECK(*lin.witness == std::vector<Residue>{0, 1});

    // (x1 + x2)^2 * x1 has h = x1: not admissible.
    CHECK(check_admissible(parse_int_poly("x1^3 + 2*x1^2*x2 + x1*x2^2", 2), 7, 2).verdict == Verdict::no);
    // x1^2 - x2^2 = (x1-x2)(x1+x2) has no invariant direction.
    CHECK(check_admissible(parse_int_poly("x1^2 - x2^2", 2), 7, 2).verdict == Verdict::yes);
}

TEST_CASE("degree at the characteristic") {
    const auto strict = check_admissible(parse_int_poly("x1^4", 1), 3, 2);
    CHECK(strict.verdict == Verdict::indeterminate);
    const auto full = check_admissible(parse_int_poly("x1^4", 1), 3, 2, CharPolicy::full);
    CHECK(full.verdict == Verdict::no);
    CHECK_THROWS_AS(power_free_decompose(reduce_mod(parse_int_poly("x1^4", 1), 3), 2), DegreeTooLarge);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(check_admissible(parse_int_poly("x1", 1), 9, 2), NotPrime);
    CHECK_THROWS_AS(check_admissible(parse_int_poly("x1", 1), 5, 1), OrderOne);
    CHECK_THROWS_AS(check_admissible(parse_int_poly("5*x1", 1), 5, 2), ZeroModQ);
    CHECK_THROWS_AS(power_free_decompose(FieldPoly(1, ResidueRing(5)), 2), ZeroPolynomial);
}

TEST_CASE("power-free decomposition reassembles and agrees with trial division") {
    Rng rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const std::uint64_t q = trial % 2 ? 5 : 7;
        const std::uint32_t order = trial % 3 == 0 ? 3 : 2;
        FieldPoly f(2, ResidueRing(q));
        for (int t = 0; t < 3; ++t) {
            Monomial m{static_cast<std::uint32_t>(rng.uniform(std::uint64_t{0}, std::uint64_t{1})),
                       static_cast<std::uint32_t>(rng.uniform(std::uint64_t{0}, std::uint64_t{1}))};
            f.add_term(m, rng.uniform(std::uint64_t{1}, q - 1));
        }
        if (f.degree() == 0) continue;
        f = f.pow(rng.uniform(std::uint64_t{1}, std::uint64_t{3})) * parse_field_poly("x1 + 1", 2, q);
        if (f.degree() >= q) continue;
        const auto dec = power_free_decompose(f, order);
        CHECK(dec.g.pow(order) * dec.h == f);
        const FieldPoly brute = oracle::trial_power_free_part(f, order);
        CHECK(make_monic(brute) == make_monic(dec.h));
    }
}

TEST_CASE("direction search agrees with substitution over GL_2(F_5)") {
    const auto group = oracle::general_linear_group(2, 5);
    CHECK(group.size() == 480);
    Rng rng(77);
    for (int trial = 0; trial < 60; ++trial) {
        FieldPoly f(2, ResidueRing(5));
        const auto deg = static_cast<std::uint32_t>(rng.uniform(std::uint64_t{1}, std::uint64_t{3}));
        for (std::uint32_t a = 0; a <= deg; ++a)
            for (std::uint32_t b = 0; a + b <= deg; ++b)
                if (rng.uniform(std::uint64_t{0}, std::uint64_t{2}) == 0)
                    f.add_term(Monomial{a, b}, rng.uniform(std::uint64_t{1}, std::uint64_t{4}));
        if (f.is_zero()) continue;
        IntPoly form(2);
        for (const auto& [m, c] : f.terms()) form.add_term(m, static_cast<std::int64_t>(c));
        const auto rep = check_admissible(form, 5, 2, CharPolicy::full);
        CHECK_MESSAGE((rep.verdict == Verdict::yes) == oracle::gl_admissible(f, 2, group), to_string(f));
    }
}

TEST_CASE("projective directions") {
    const auto dirs = projective_directions(2, 3);
    const std::vector<std::vector<Residue>> expect{{0, 1}, {1, 0}, {1, 1}, {1, 2}};
    CHECK(dirs == expect);
    CHECK(projective_directions(3, 5).size() == 31);
}

TEST_CASE("product polynomial of an all-equal collection") {
    // delta exponents 1 and Delta-1 sum to Delta, so the product is a perfect power.
    const Collection c{{{1, 1}, {1, 1}}};
    const FieldPoly p = product_polynomial(parse_int_poly("x1*x2", 2), c, 3, 7);
    CHECK(p == parse_field_poly("x1 + 1", 2, 7).pow(3) * parse_field_poly("x2 + 1", 2, 7).pow(3));
}
