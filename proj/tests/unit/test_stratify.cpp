#include <doctest.h>

#include "burgess/errors.hpp"
#include "burgess/stratify.hpp"

using namespace burgess;

namespace {

StratifyReport fixture(const ExecPolicy& policy = {}) {
    StratifyOptions opt;
    opt.r = 2;
    opt.sides = {2, 2};
    opt.policy = policy;
    return stratify_audit(parse_int_poly("x1*x2", 2), build_character(7, 2), standard_system(2, 1), opt);
}

}  // namespace

// Values from tests/oracles/stratify_fixture.py.
TEST_CASE("exhaustive audit matches the frozen fixture") {
    const auto rep = fixture();
    CHECK(rep.collections == 256);
    CHECK(rep.in_variety == 36);
    CHECK(rep.zero_sums == 0);
    CHECK(rep.max_abs == doctest::Approx(36));
    REQUIRE(rep.levels.size() == 2);
    CHECK(rep.levels[0].count == 64);
    CHECK(rep.levels[0].count_in_variety == 36);
    CHECK(rep.levels[1].count == 64);
    CHECK(rep.levels[1].count_in_variety == 36);
    CHECK(rep.levels[0].threshold == doctest::Approx(7));
    std::uint64_t binned = 0;
    for (const auto& b : rep.histogram) binned += b.count;
    CHECK(binned == 256);
}

TEST_CASE("ceilings use the B function and the box volume") {
    const auto rep = fixture();
    // ||k||^(2r) = 4^4 = 256; B(1) = k1^(r-1) = 2, B(2) = k1^(2r) = 16.
    CHECK(static_cast<double>(rep.levels[0].ceiling) == doctest::Approx(128));
    CHECK(static_cast<double>(rep.levels[1].ceiling) == doctest::Approx(16));
    CHECK(static_cast<double>(rep.levels[1].ratio) == doctest::Approx(4));
}

TEST_CASE("audit is independent of the thread count") {
    const auto a = fixture(ExecPolicy{1, 4});
    const auto b = fixture(ExecPolicy{4, 4});
    CHECK(a.levels[0].count == b.levels[0].count);
    CHECK(a.max_abs == b.max_abs);
}

TEST_CASE("sampled audits are seeded") {
    StratifyOptions opt;
    opt.r = 2;
    opt.sides = {3, 3};
    opt.samples = 200;
    opt.seed = 42;
    const auto chi = build_character(11, 2);
    const auto f = parse_int_poly("x1*x2 + x1^2", 2);
    const auto a = stratify_audit(f, chi, standard_system(2, 1), opt);
    const auto b = stratify_audit(f, chi, standard_system(2, 1), opt);
    CHECK(a.sampled);
    CHECK(a.collections == 200);
    CHECK(a.levels[0].count == b.levels[0].count);
    CHECK(a.max_abs == b.max_abs);
}

TEST_CASE("unsorted sides are rejected") {
    StratifyOptions opt;
    opt.r = 2;
    opt.sides = {3, 2};
    CHECK_THROWS_AS(stratify_audit(parse_int_poly("x1*x2", 2), build_character(7, 2), standard_system(2, 1), opt),
                    UnsortedSides);
}
