#include "burgess/collection.hpp"

#include "burgess/errors.hpp"

namespace burgess {

void Collection::validate(std::size_t n) const {
    if (points.empty() || points.size() % 2 != 0)
        throw DimensionMismatch("a collection needs an even, positive number of points");
    for (const auto& p : points)
        if (p.size() != n) throw DimensionMismatch("collection point has dimension " + std::to_string(p.size()) +
                                                   ", expected " + std::to_string(n));
}

std::string Collection::to_string() const {
    std::string out = "[";
    for (std::size_t j = 0; j < points.size(); ++j) {
        if (j) out += ",";
        out += "[";
        for (std::size_t i = 0; i < points[j].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(points[j][i]);
        }
        out += "]";
    }
    return out + "]";
}

CollectionBox::CollectionBox(std::vector<std::int64_t> sides, std::size_t r) : sides_(std::move(sides)), r_(r) {
    if (sides_.empty()) throw DimensionMismatch("box needs at least one side");
    if (r_ == 0) throw InvalidRange("r must be at least 1");
    for (auto k : sides_)
        if (k < 1) throw InvalidRange("box sides must be at least 1");
}

std::uint64_t CollectionBox::count() const {
    std::uint64_t out = 1;
    for (std::size_t j = 0; j < 2 * r_; ++j)
        for (auto k : sides_)
            if (__builtin_mul_overflow(out, static_cast<std::uint64_t>(k), &out))
                throw OverflowError("collection count overflows 64 bits");
    return out;
}

Collection CollectionBox::at(std::uint64_t index) const {
    const std::size_t n = sides_.size();
    Collection c;
    c.points.assign(2 * r_, Point(n, 0));
    for (std::size_t j = 2 * r_; j-- > 0;) {
        for (std::size_t i = n; i-- > 0;) {
            const auto k = static_cast<std::uint64_t>(sides_[i]);
            c.points[j][i] = static_cast<std::int64_t>(index % k) + 1;
            index /= k;
        }
    }
    return c;
}

}  // namespace burgess
