#include <doctest.h>

#include <limits>

#include "burgess/errors.hpp"
#include "burgess/polynomial.hpp"

using namespace burgess;

TEST_CASE("canonical printing round-trips") {
    for (const char* text : {"1*x1^2*x2 + 3*x2^3", "1*x1*x2", "-2*x1 + 5", "0", "7"}) {
        const IntPoly p = parse_int_poly(text, 2);
        CHECK(to_string(p) == text);
        CHECK(parse_int_poly(to_string(p), 2) == p);
    }
}

TEST_CASE("parser accepts the relaxed grammar") {
    CHECK(to_string(parse_int_poly("x1 * x2", 2)) == "1*x1*x2");
    CHECK(to_string(parse_int_poly("x2 + x1 - x1", 2)) == "1*x2");
    CHECK(to_string(parse_int_poly(" -x1^2+2*x1 ", 1)) == "-1*x1^2 + 2*x1");
    CHECK(to_string(parse_int_poly("x1*x1", 1)) == "1*x1^2");
    CHECK(to_string(parse_field_poly("6*x1 + 8", 1, 5)) == "1*x1 + 3");
    CHECK(to_string(parse_real_poly("0.5*x1 - 0.25", 1)) == "0.5*x1 - 0.25");
}

TEST_CASE("parser errors") {
    CHECK_THROWS_AS(parse_int_poly("x1 +", 1), ParseError);
    CHECK_THROWS_AS(parse_int_poly("2x1", 1), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x1 ^", 1), ParseError);
    CHECK_THROWS_AS(parse_int_poly("y1", 1), ParseError);
    CHECK_THROWS_AS(parse_int_poly("0.5*x1", 1), ParseError);
    CHECK_THROWS_AS(parse_int_poly("x3", 2), VariableOutOfRange);
    CHECK_THROWS_AS(parse_int_poly("x0", 2), VariableOutOfRange);
    CHECK(max_variable_index("x1*x7 + x3") == 7);
    CHECK(max_variable_index("5") == 0);
}

TEST_CASE("ring arithmetic") {
    const IntPoly a = parse_int_poly("x1 + x2", 2);
    CHECK(to_string(a * a) == "1*x1^2 + 2*x1*x2 + 1*x2^2");
    CHECK(a.pow(3) == a * a * a);
    CHECK((a - a).is_zero());
    CHECK(to_string(a.derivative(0)) == "1");
    CHECK(to_string(parse_int_poly("x1^3*x2", 2).derivative(0)) == "3*x1^2*x2");
    const FieldPoly f = reduce_mod(parse_int_poly("x1^3", 1), 3);
    CHECK(f.derivative(0).is_zero());
    CHECK(reduce_mod(parse_int_poly("3*x1 + 4", 1), 3) == parse_field_poly("1", 1, 3));
}

TEST_CASE("overflow is detected") {
    IntPoly big = IntPoly::constant(1, std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(big + IntPoly::constant(1, 1), OverflowError);
    const IntPoly x = parse_int_poly("x1", 1);
    const std::int64_t pt[] = {1LL << 40};
    CHECK_THROWS_AS(evaluate(x.pow(2), std::span<const std::int64_t>(pt)), OverflowError);
}

TEST_CASE("evaluation, shift and substitution") {
    const IntPoly p = parse_int_poly("x1*x2 + 2*x1 - 1", 2);
    const std::int64_t pt[] = {3, -4};
    CHECK(evaluate(p, std::span<const std::int64_t>(pt)) == -7);
    const std::int64_t off[] = {1, 2};
    const IntPoly s = shift(p, std::span<const std::int64_t>(off));
    const std::int64_t zero[] = {0, 0};
    const std::int64_t one_two[] = {1, 2};
    CHECK(evaluate(s, std::span<const std::int64_t>(zero)) == evaluate(p, std::span<const std::int64_t>(one_two)));
    const FieldPoly fp = reduce_mod(p, 5);
    CHECK(evaluate(fp, std::span<const std::int64_t>(pt)) == 3);  // -7 mod 5
    std::vector<IntPoly> images{parse_int_poly("x2", 2), parse_int_poly("x1", 2)};
    CHECK(to_string(substitute(p, std::span<const IntPoly>(images))) == "1*x1*x2 + 2*x2 - 1");
    CHECK(embed(p, 3).dim() == 3);
}

TEST_CASE("phases are reduced term by term") {
    const RealPoly g = parse_real_poly("0.5*x1^2 + 0.25*x1", 1);
    const std::int64_t big[] = {1000001};
    const long double v = evaluate_mod1(g, std::span<const std::int64_t>(big));
    CHECK(v >= 0);
    CHECK(v < 1);
    CHECK(static_cast<double>(v) == doctest::Approx(0.75));
}
