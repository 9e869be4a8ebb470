#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace burgess {

using Point = std::vector<std::int64_t>;

/// An ordered tuple {x} = (x^(1), ..., x^(2r)) of points in Z^n.
///
/// Positions are 1-based in the sign conventions: eps(j) = (-1)^(j+1) and
/// delta(j) = 1 for odd j, Delta - 1 for even j.
struct Collection {
    std::vector<Point> points;

    std::size_t size() const noexcept { return points.size(); }
    std::size_t r() const noexcept { return points.size() / 2; }
    std::size_t dim() const noexcept { return points.empty() ? 0 : points.front().size(); }

    /// Throws DimensionMismatch unless the length is even, positive, and all
    /// points share dimension n.
    void validate(std::size_t n) const;

    static int sign(std::size_t j) noexcept { return j % 2 == 1 ? 1 : -1; }
    static std::uint64_t delta_exponent(std::size_t j, std::uint64_t order) noexcept {
        return j % 2 == 1 ? 1 : order - 1;
    }

    /// Integer-array text "[[1,1],[2,1]]".
    std::string to_string() const;

    bool operator==(const Collection&) const = default;
};

}  // namespace burgess

namespace burgess {

/// All collections with points in the box (0, k_1] x ... x (0, k_n],
/// indexed lexicographically (first point, first coordinate most
/// significant).
class CollectionBox {
public:
    CollectionBox(std::vector<std::int64_t> sides, std::size_t r);

    std::size_t dim() const noexcept { return sides_.size(); }
    std::size_t r() const noexcept { return r_; }
    const std::vector<std::int64_t>& sides() const noexcept { return sides_; }
    /// (k_1 ... k_n)^(2r); throws OverflowError beyond 2^64 - 1.
    std::uint64_t count() const;
    Collection at(std::uint64_t index) const;

private:
    std::vector<std::int64_t> sides_;
    std::size_t r_;
};

}  // namespace burgess
