#include <doctest.h>

#include <cmath>

#include "burgess/burgess_calc.hpp"
#include "burgess/errors.hpp"

using namespace burgess;

TEST_CASE("Theta and beta_n") {
    CHECK(theta(2, 5) == 4);
    CHECK(theta(3, 100) == 49);
    CHECK_THROWS_AS(theta(1, 5), DimensionTooSmall);
    CHECK(theta(1, 5, ThetaRule{true, std::nullopt}) == 5);
    CHECK(theta(2, 7, ThetaRule{false, Rational(3, 2)}) == 4);
    CHECK(beta_n(2) == Rational(1, 3));
    CHECK(beta_n(3) == Rational(3, 8));
}

TEST_CASE("exponent report at (2,1,5)") {
    const auto rep = exponent_report(2, 1, 5);
    CHECK(rep.valid);
    CHECK(rep.theta == 4);
    CHECK(rep.weight == 2);
    CHECK(rep.a == Rational(17, 10));
    REQUIRE(rep.b);
    CHECK(*rep.b == Rational(1, 8));
    CHECK(*rep.h_exponent_cap == Rational(5, 8));
    CHECK(*rep.beta_threshold == Rational(5, 12));
    CHECK(nontrivial_threshold(2, 1, 5) == Rational(5, 12));
    CHECK(std::abs(to_double(nontrivial_threshold(3, 1, 100)) - 0.377717) < 1e-6);
    CHECK_FALSE(exponent_report(2, 2, 9).valid);
    CHECK_THROWS_AS(nontrivial_threshold(2, 2, 9), InvalidRange);
}

TEST_CASE("threshold approaches beta_n") {
    for (std::int64_t n = 2; n <= 4; ++n) {
        const Rational gap = nontrivial_threshold(n, 1, 100000) - beta_n(n);
        CHECK(gap > 0);
        CHECK(gap < Rational(1, 1000));
    }
}

TEST_CASE("bound is nontrivial exactly above the threshold") {
    // H^a q^b <= H^n with H = q^beta iff beta (n - a) >= b.
    for (std::int64_t n = 2; n <= 3; ++n)
        for (std::int64_t r = 2; r <= 40; r += 3) {
            const auto rep = exponent_report(n, 1, r);
            if (!rep.b) continue;
            for (int num = 1; num < 60; ++num) {
                const Rational beta(num, 60);
                const bool nontrivial = beta * (Rational(n) - rep.a) > *rep.b;
                CHECK(nontrivial == (beta > *rep.beta_threshold));
            }
        }
}

TEST_CASE("range rules by system kind") {
    const auto std_rep = tdi_theorem_report(standard_system(2, 1), 5);
    const auto plain = exponent_report(2, 1, 5);
    CHECK(std_rep.a == plain.a);
    CHECK(*std_rep.b == *plain.b);
    CHECK(std_rep.valid == plain.valid);

    CHECK_FALSE(tdi_theorem_report(ack_system({1, 1}, 2), 5).valid);
    CHECK(tdi_theorem_report(ack_system({1, 1}, 2), 6).valid);
    CHECK_THROWS_AS(tdi_theorem_report(parse_system("custom 1,0;0,1;2,1"), 50), NotTDI);
    CHECK_THROWS_AS(tdi_theorem_report(parse_system("custom 1,0"), 50), DegenerateSystem);
    const auto custom = parse_system("custom 1,0;0,1;1,1");
    // Large-r range: r > R(d+1) = 9.
    CHECK_FALSE(tdi_theorem_report(custom, 9).valid);
    CHECK(tdi_theorem_report(custom, 10).valid);
    CHECK(tdi_theorem_report(custom, 10).range == RangeRule::large_r);
}

TEST_CASE("P window") {
    const long double q = 1e4L;
    const long double h = std::pow(q, 0.45L);
    const auto w = p_window(2, 1, 5, h, q);
    CHECK(static_cast<double>(w.lower) == doctest::Approx(3.155).epsilon(1e-3));
    CHECK(static_cast<double>(w.upper) == doctest::Approx(6.31).epsilon(1e-3));
    CHECK(w.hp_below_q);
    CHECK(w.below_theta_cap);
    CHECK_THROWS_AS(p_window(2, 1, 5, std::pow(q, 0.7L), q), EmptyWindow);
    CHECK_THROWS_AS(p_window(2, 1, 5, h, q, 4), EmptyWindow);
}

TEST_CASE("window nonemptiness on a rational grid") {
    for (std::int64_t r = 4; r <= 12; ++r)
        for (int num = 1; num < 40; ++num) {
            const Rational beta(num, 40);
            const std::int64_t gap = theta(2, r) - 2;
            const bool expect = gap > 0 && beta < Rational(1, 2) + Rational(1, 4 * gap);
            CHECK(window_nonempty(2, 1, r, beta) == expect);
        }
}

TEST_CASE("delta savings") {
    const auto rep = delta_savings(2, 1, parse_rational("0.02"));
    CHECK(rep.r == 17);
    CHECK(rep.r_from_rule);
    CHECK(rep.theta == 16);
    CHECK(rep.delta == Rational(17, 23800));
    CHECK(rep.asymptotic_ratio == Rational(9, 4));
    CHECK(std::abs(rep.best_r - rep.continuous_argmax) <= 1);
    CHECK(rep.best_delta >= rep.delta);

    const auto small = delta_savings(2, 1, parse_rational("1e-3"));
    CHECK(std::abs(to_double(small.delta_over_kappa_sq) / 2.25 - 1) < 0.1);
    CHECK_THROWS_AS(delta_savings(2, 3, parse_rational("0.5")), KappaTooLarge);
    CHECK_THROWS_AS(delta_savings(2, 1, parse_rational("0.02"), 3), InvalidRange);
    CHECK(delta_formula(2, 2, 16, 17, Rational(1, 50)) == Rational(1, 1400));
}

TEST_CASE("continuous argmax maximizes the savings curve") {
    const auto rep = delta_savings(2, 1, parse_rational("0.02"));
    const double b = to_double(rep.b), c = to_double(rep.c), e = to_double(rep.e);
    const double x = rep.continuous_argmax;
    CHECK(x == doctest::Approx(continuous_argmax(rep.b, rep.c, rep.e)));
    auto f = [&](double r) { return (b * r - c) / (r * (r - e)); };
    CHECK(f(x) >= f(x - 0.01));
    CHECK(f(x) >= f(x + 0.01));
}

TEST_CASE("amplified bound shape") {
    const long double q = 1e6L, h = std::pow(q, 0.45L);
    const std::int64_t n = 2, r = 5;
    const std::uint64_t m = 2;
    const std::int64_t th = theta(n, r);
    auto j_pred = [&](long double p) { return std::pow(2 * h / p, static_cast<long double>(2 * r * n - m)); };

    // At the window edge with the predicted J the two terms are within a
    // constant factor of each other.
    const auto w = p_window(n, 1, r, h, q);
    const auto edge = prop_bound_rhs(n, m, r, h, w.upper * 0.999L, q, j_pred(w.upper * 0.999L));
    const long double ratio = edge.vinogradov_term / edge.shift_term;
    const long double c = std::pow(2.0L, static_cast<long double>(2 * r * n - m) / (2 * r)) * 2;
    CHECK(ratio <= c);
    CHECK(ratio >= 1 / c);

    // The Vinogradov term decreases with P, and with Theta = M + 1 so does the total.
    long double prev = 1e300L;
    for (long double p = 1; p <= 30; p += 1) {
        const auto b = prop_bound_rhs(n, m, r, h, p, q, j_pred(p));
        CHECK(b.vinogradov_term * b.prefactor < prev * (1 + 1e-12L));
        prev = b.vinogradov_term * b.prefactor;
    }
    (void)th;
    const std::int64_t r3 = 4;  // Theta = 3 = M + 1
    const long double h3 = std::pow(q, 0.4L);
    long double last = 1e300L;
    for (long double p = 1; p <= 4; p += 0.5L) {
        const auto b = prop_bound_rhs(n, m, r3, h3, p, q,
                                      std::pow(2 * h3 / p, static_cast<long double>(2 * r3 * n - m)));
        CHECK(b.total < last);
        last = b.total;
    }
    CHECK_THROWS_AS(prop_bound_rhs(n, m, r, 1e4L, 1e3L, 1e6L, 1), HypothesisViolated);
    CHECK_THROWS_AS(prop_bound_rhs(n, m, 1, h, 2, q, 1), HypothesisViolated);
}
