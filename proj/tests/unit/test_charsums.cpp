#include <doctest.h>

#include <cmath>

#include "burgess/charsums.hpp"
#include "burgess/errors.hpp"
#include "burgess/random.hpp"
#include "oracles.hpp"

using namespace burgess;

namespace {

Collection random_collection(Rng& rng, std::size_t n, std::size_t r, std::int64_t k) {
    Collection c;
    for (std::size_t j = 0; j < 2 * r; ++j) {
        Point p(n);
        for (auto& v : p) v = rng.uniform(std::int64_t{1}, k);
        c.points.push_back(p);
    }
    return c;
}

}  // namespace

TEST_CASE("full-period mixed sums vanish") {
    for (std::uint64_t q : {5ULL, 13ULL, 101ULL}) {
        const auto chi = build_character(q, 2);
        const auto qi = static_cast<std::int64_t>(q);
        const BoxRegion box{{0, 0}, {qi, qi}};
        const auto s = mixed_sum(parse_int_poly("x1*x2", 2), RealPoly(2), chi, box);
        CHECK(std::abs(s.value) < 1e-9 * static_cast<double>(q * q));
        CHECK(s.terms == q * q);
    }
}

TEST_CASE("mixed sum matches direct evaluation and is partition independent") {
    const auto chi = build_character(13, 4);
    const IntPoly f = parse_int_poly("x1^2 + 3*x2 + 1", 2);
    const RealPoly g = parse_real_poly("0.3*x1 + 0.125*x1*x2", 2);
    const BoxRegion box{{-2, 5}, {6, 7}};
    std::complex<double> direct = 0;
    for (std::int64_t a = -1; a <= 4; ++a)
        for (std::int64_t b = 6; b <= 12; ++b) {
            const std::int64_t pt[] = {a, b};
            direct += std::polar(1.0, 2 * M_PI * evaluate(g, std::span<const std::int64_t>(pt))) *
                      oracle::naive_character(evaluate(f, std::span<const std::int64_t>(pt)), 13, 4);
        }
    const auto ref = mixed_sum(f, g, chi, box);
    CHECK(std::abs(ref.value - direct) < 1e-9);
    for (unsigned threads : {1u, 3u}) {
        const auto par = mixed_sum(f, g, chi, box, {}, ExecPolicy{threads, 5});
        CHECK(std::abs(par.value - ref.value) < 1e-12);
        const auto par2 = mixed_sum(f, g, chi, box, {}, ExecPolicy{1, 5});
        CHECK(par.value == par2.value);
    }
    CHECK_THROWS_AS(mixed_sum(f, g, chi, box, Budget{10}), BudgetExceeded);
}

TEST_CASE("complete sum of an all-equal collection is q^2 minus the zeros") {
    const auto chi = build_character(5, 2);
    const IntPoly f = parse_int_poly("x1*x2", 2);
    for (std::int64_t a = 1; a <= 3; ++a)
        for (std::size_t r = 1; r <= 3; ++r) {
            Collection c;
            for (std::size_t j = 0; j < 2 * r; ++j) c.points.push_back({a, a + 1});
            for (auto method : {MultSumMethod::termwise, MultSumMethod::product_polynomial}) {
                const auto s = complete_mult_sum(f, c, chi, method);
                CHECK(std::abs(s.value - 16.0) < 1e-9);
                CHECK(s.zeros == 9);
                CHECK(s.counts[0] == 16);
            }
        }
}

TEST_CASE("complete sum methods agree with each other and with the definition") {
    Rng rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const std::uint64_t q = trial % 2 ? 7 : 13;
        const std::uint32_t order = trial % 3 == 0 ? 3 : 2;
        const auto chi = build_character(q, order);
        const IntPoly f = trial % 2 ? parse_int_poly("x1*x2 + x1", 2) : parse_int_poly("x1^2 - x2", 2);
        const Collection c = random_collection(rng, 2, 1 + trial % 2, 4);
        const auto a = complete_mult_sum(f, c, chi, MultSumMethod::termwise);
        const auto b = complete_mult_sum(f, c, chi, MultSumMethod::product_polynomial);
        CHECK(a == b);
        CHECK(std::abs(a.value - oracle::direct_mult_sum(f, c, q, order)) < 1e-9);
        FormTable table(f, chi);
        CHECK(complete_mult_sum(table, c) == a);
    }
}

TEST_CASE("signed moments and the variety indicator") {
    const auto sys = standard_system(2, 2);
    const Collection c{{{1, 2}, {2, 1}, {2, 1}, {1, 2}}};
    const auto d = signed_moments(sys, c);
    CHECK(d == std::vector<std::int64_t>(5, 0));
    CHECK(xi_indicator(sys, c));
    const Collection e{{{1, 1}, {3, 1}}};
    CHECK(signed_moments(standard_system(2, 1), e) == std::vector<std::int64_t>{-2, 0});
    CHECK_FALSE(xi_indicator(standard_system(2, 1), e));
    CHECK(xi_indicator(standard_system(2, 1), e, 2));
    CHECK_FALSE(xi_indicator(standard_system(2, 1), e, 4));
}

TEST_CASE("box partition vertices") {
    BoxPartition part(standard_system(2, 1), 3);
    CHECK(part.vertex_count() == 9);
    CHECK(part.vertex(5) == std::vector<std::uint64_t>{1, 2});
    const auto coords = part.coordinates(5);
    CHECK(coords[0] == Rational(1, 3));
    CHECK(coords[1] == Rational(2, 3));
    BoxPartition quad(standard_system(1, 2), 2);
    CHECK(quad.ranges() == std::vector<std::uint64_t>{2, 4});
}

TEST_CASE("additive box sums: factorized, vertices and direct agree") {
    Rng rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto sys = trial % 2 ? standard_system(2, 1) : standard_system(1, 2);
        const std::uint64_t qp = 2 + trial % 3;
        const Collection c = random_collection(rng, sys.dim(), 1 + trial % 2, 3);
        const auto f = additive_box_sum(sys, qp, c, AddSumMethod::factorized);
        const auto v = additive_box_sum(sys, qp, c, AddSumMethod::vertices);
        const auto direct = oracle::direct_vertex_sum(sys, qp, c);
        CHECK(std::abs(f.value - direct) < 1e-9);
        CHECK(std::abs(v.value - direct) < 1e-9);
    }
}

TEST_CASE("additive sum identity holds exhaustively at small size") {
    ProdLemmaOptions opt;
    opt.r = 1;
    opt.k = 2;
    const auto rep = verify_prod_lemma(standard_system(2, 1), opt, true);
    CHECK(rep.q_param == 4);
    CHECK(rep.checked == 16);
    CHECK(rep.vertex_terms == 256);
    CHECK(rep.passed == 16);
    CHECK(rep.hypothesis);
    CHECK(rep.wraparound == 0);

    ProdLemmaOptions vert = opt;
    vert.method = AddSumMethod::vertices;
    CHECK(verify_prod_lemma(standard_system(2, 1), vert).passed == 16);
}

TEST_CASE("below the partition hypothesis wraparound is reported, not failed") {
    ProdLemmaOptions opt;
    opt.r = 1;
    opt.k = 3;
    opt.q_param = 2;
    const auto rep = verify_prod_lemma(standard_system(1, 1), opt);
    CHECK_FALSE(rep.hypothesis);
    CHECK(rep.wraparound > 0);
    REQUIRE_FALSE(rep.wraparound_examples.empty());
    CHECK(partition_parameter(2, 3) == 12);
}

TEST_CASE("sampled identity checks are seeded") {
    ProdLemmaOptions opt;
    opt.r = 2;
    opt.k = 2;
    opt.samples = 50;
    opt.seed = 8;
    const auto a = verify_prod_lemma(standard_system(2, 2), opt, true);
    const auto b = verify_prod_lemma(standard_system(2, 2), opt, true);
    CHECK(a.passed == 50);
    CHECK(a.in_variety == b.in_variety);
    CHECK(a.max_error == b.max_error);
}

TEST_CASE("B function values") {
    // n = 2, r = 3 (Theta = 2): B(1) = k1^(r-1), B(2) = k1^(2r).
    CHECK(b_function(2, 3, 0, {3, 4}) == 1);
    CHECK(b_function(2, 3, 1, {3, 4}) == 9);
    CHECK(b_function(2, 3, 2, {3, 4}) == 729);
    // n = 3, r = 5 (Theta = 2): k1^2, k1^4, k1^(2r) k2^r.
    CHECK(b_function(3, 5, 1, {2, 3, 5}) == 4);
    CHECK(b_function(3, 5, 2, {2, 3, 5}) == 16);
    CHECK(b_function(3, 5, 3, {2, 3, 5}) == 248832);
    // n = 4, r = 7 (Theta = 2): k1^(j Theta) below n-1, then (k1 k2)^(2r).
    CHECK(b_function(4, 7, 2, {2, 3, 5, 7}) == 16);
    CHECK(b_function(4, 7, 3, {2, 3, 5, 7}) == 64);
    CHECK(b_function(4, 7, 4, {2, 3, 5, 7}) == boost::multiprecision::pow(BigInt(6), 14));
    CHECK_THROWS_AS(b_function(2, 3, 1, {4, 3}), UnsortedSides);
    CHECK_THROWS_AS(b_function(3, 2, 1, {1, 1, 1}), InvalidRange);
    const auto big = b_function(4, 20, 4, {50, 60, 70, 80});
    CHECK(std::abs(static_cast<double>(log_b_function(4, 20, 4, {50, 60, 70, 80})) -
                   std::log(big.convert_to<double>())) < 1e-9);
}

TEST_CASE("B-function sum inequality") {
    const auto c = check_b_sum(2, 5, 101, {10, 12});
    CHECK(c.hypothesis);
    CHECK(c.holds);
    CHECK(c.lhs <= c.rhs);
    CHECK(c.partial_lhs <= c.partial_rhs * (1 + 1e-12L));
    CHECK_FALSE(check_b_sum(2, 2, 10007, {2, 3}).hypothesis);

    BSumOptions opt;
    opt.trials = 300;
    opt.seed = 1;
    const auto rep = verify_b_sum_lemma(opt, true);
    CHECK(rep.checked == 300);
    CHECK(rep.violations == 0);
    CHECK(rep.worst_margin <= 1);
}
