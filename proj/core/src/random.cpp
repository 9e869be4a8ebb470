#include "burgess/random.hpp"

#include "burgess/errors.hpp"

namespace burgess {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw InvalidRange("empty sampling range");
    const std::uint64_t span = hi - lo;
    if (span == UINT64_MAX) return engine_();
    const std::uint64_t size = span + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % size;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + x % size;
}

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
    if (hi < lo) throw InvalidRange("empty sampling range");
    const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform(std::uint64_t{0}, span));
}

}  // namespace burgess
