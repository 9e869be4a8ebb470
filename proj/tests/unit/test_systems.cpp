#include <doctest.h>

#include "burgess/errors.hpp"
#include "burgess/systems.hpp"
#include "oracles.hpp"

using namespace burgess;

TEST_CASE("standard system size and weight match enumeration") {
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::uint32_t d = 1; d <= 6; ++d) {
            const auto [r, m] = oracle::count_monomials(n, d);
            const auto sys = standard_system(n, d);
            CHECK(sys.rank() == r);
            CHECK(sys.weight() == m);
            CHECK(standard_rank(n, d) == r);
            CHECK(standard_weight(n, d) == m);
        }
    const auto s22 = standard_system(2, 2);
    CHECK(s22.rank() == 5);
    CHECK(s22.weight() == 8);
}

TEST_CASE("graded ordering of exponents") {
    const auto s = standard_system(2, 2);
    const std::vector<Monomial> expect{{1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}};
    CHECK(s.exponents() == expect);
    CHECK(s.descriptor() == "standard(2,2)");
}

TEST_CASE("ack systems") {
    const auto a = ack_system({1, 1}, 2);
    CHECK(a.rank() == 3);
    CHECK(a.weight() == 4);
    CHECK(a.kind() == SystemKind::ack);
    CHECK(is_tdi(a).tdi);
    CHECK(parse_system("ack 1,1 2") == a);
    CHECK_THROWS_AS(ack_system({0, 1}, 2), DegenerateSystem);
}

TEST_CASE("translation-dilation invariance") {
    for (std::size_t n = 1; n <= 3; ++n)
        for (std::uint32_t d = 1; d <= 3; ++d) CHECK(is_tdi(standard_system(n, d)).tdi);

    // x1^2 without x1 is not closed under shifts; the certificate names the term.
    const auto bad = parse_system("custom 2,0;0,1");
    const auto cert = is_tdi(bad);
    CHECK_FALSE(cert.tdi);
    REQUIRE(cert.beta);
    CHECK(*cert.beta == Monomial{2, 0});
    CHECK(*cert.gamma == Monomial{1, 0});
    CHECK(cert.coefficient == 2);
    CHECK(cert.term == "2*xi1*x1");
    CHECK_FALSE(is_downward_closed(bad));

    // Downward closed sets are TDI.
    const auto ok = parse_system("custom 1,0;0,1;1,1");
    CHECK(is_tdi(ok).tdi);
    CHECK(is_downward_closed(ok));
    CHECK(ok.has_linear_monomials());
    CHECK_FALSE(parse_system("custom 1,0").has_linear_monomials());
}

TEST_CASE("descriptor parsing errors") {
    CHECK_THROWS_AS(parse_system("standard 2"), DegenerateSystem);
    CHECK_THROWS_AS(parse_system("nonsense 1 2"), DegenerateSystem);
    CHECK_THROWS_AS(parse_system("custom 1,0;0"), DegenerateSystem);
    CHECK_THROWS_AS(parse_system("custom 0,0"), DegenerateSystem);
    CHECK_THROWS_AS(parse_system("custom 1,0;1,0"), DegenerateSystem);
    CHECK(parse_system("standard 3 2") == standard_system(3, 2));
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(60, 30) == 118264581564861424ULL);
}
