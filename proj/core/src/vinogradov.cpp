#include "burgess/vinogradov.hpp"
#include "wide_int.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "burgess/polynomial.hpp"

namespace burgess {

namespace {

/// Moment contributions of every point in the box (0, k]^n, points listed
/// with the first coordinate most significant.
std::vector<std::int64_t> point_moments(const MonomialSystem& system, const std::vector<std::int64_t>& sides,
                                        std::uint64_t& points) {
    const std::size_t n = system.dim();
    const std::size_t rank = system.rank();
    points = 1;
    for (auto k : sides) points *= static_cast<std::uint64_t>(k);
    std::vector<std::int64_t> out(points * rank);
    const IntegerRing z;
    std::vector<std::int64_t> x(n);
    for (std::uint64_t idx = 0; idx < points; ++idx) {
        std::uint64_t rest = idx;
        for (std::size_t i = n; i-- > 0;) {
            x[i] = static_cast<std::int64_t>(rest % static_cast<std::uint64_t>(sides[i])) + 1;
            rest /= static_cast<std::uint64_t>(sides[i]);
        }
        for (std::size_t b = 0; b < rank; ++b) {
            std::int64_t v = 1;
            const auto& beta = system.exponents()[b];
            for (std::size_t i = 0; i < n; ++i)
                for (std::uint32_t e = 0; e < beta.exps[i]; ++e) v = z.mul(v, x[i]);
            out[idx * rank + b] = v;
        }
    }
    return out;
}

void check_sides(const MonomialSystem& system, std::size_t r, const std::vector<std::int64_t>& sides) {
    if (r < 1) throw InvalidRange("r must be at least 1");
    if (sides.size() != system.dim()) throw DimensionMismatch("need one side per variable");
    for (auto k : sides)
        if (k < 1) throw InvalidRange("sides must be at least 1");
}

long double tuple_count(const std::vector<std::int64_t>& sides, std::size_t r) {
    long double per = 1;
    for (auto k : sides) per *= static_cast<long double>(k);
    return std::pow(per, static_cast<long double>(r));
}

/// Upper bounds r * max_point |x^beta| used to pack a moment vector into one
/// integer key; empty when the packed key would not fit 64 bits.
std::optional<std::vector<std::uint64_t>> packing_strides(const std::vector<std::int64_t>& moments, std::size_t rank,
                                                          std::size_t r) {
    std::vector<std::uint64_t> strides(rank);
    detail::u128 total = 1;
    for (std::size_t b = rank; b-- > 0;) {
        std::int64_t hi = 0;
        for (std::size_t i = b; i < moments.size(); i += rank) hi = std::max(hi, moments[i]);
        const detail::u128 radix = static_cast<detail::u128>(hi) * r + 1;
        strides[b] = static_cast<std::uint64_t>(total);
        total *= radix;
        if (total > UINT64_MAX) return std::nullopt;
    }
    return strides;
}

/// sum_v N(v)^2 over r-tuples drawn from the given point moments.
BigInt energy(const std::vector<std::int64_t>& moments, std::uint64_t points, std::size_t rank, std::size_t r,
              const ExecPolicy& policy) {
    const auto strides = packing_strides(moments, rank, r);
    const unsigned parts = std::max(1u, policy.partitions);
    std::uint64_t tuples = 1;
    for (std::size_t i = 0; i < r; ++i) tuples *= points;

    // Tuple index t enumerates point indices with the first point most
    // significant; partitions take contiguous ranges of t.
    auto tuple_moments = [&](std::uint64_t t, std::vector<std::int64_t>& sum) {
        std::fill(sum.begin(), sum.end(), 0);
        for (std::size_t j = 0; j < r; ++j) {
            const std::uint64_t p = t % points;
            t /= points;
            for (std::size_t b = 0; b < rank; ++b) sum[b] += moments[p * rank + b];
        }
    };

    BigInt total = 0;
    if (strides) {
        std::vector<std::uint64_t> keys(tuples);
        run_partitions(policy, [&](unsigned p) {
            const Slice s = partition_slice(tuples, p, parts);
            std::vector<std::int64_t> sum(rank);
            for (std::uint64_t t = s.begin; t < s.end; ++t) {
                tuple_moments(t, sum);
                std::uint64_t key = 0;
                for (std::size_t b = 0; b < rank; ++b) key += static_cast<std::uint64_t>(sum[b]) * (*strides)[b];
                keys[t] = key;
            }
        });
        std::sort(keys.begin(), keys.end());
        for (std::size_t i = 0; i < keys.size();) {
            std::size_t j = i;
            while (j < keys.size() && keys[j] == keys[i]) ++j;
            const BigInt run = j - i;
            total += run * run;
            i = j;
        }
        return total;
    }

    std::vector<std::int64_t> flat(tuples * rank);
    run_partitions(policy, [&](unsigned p) {
        const Slice s = partition_slice(tuples, p, parts);
        std::vector<std::int64_t> sum(rank);
        for (std::uint64_t t = s.begin; t < s.end; ++t) {
            tuple_moments(t, sum);
            std::copy(sum.begin(), sum.end(), flat.begin() + static_cast<std::ptrdiff_t>(t * rank));
        }
    });
    std::vector<std::uint64_t> order(tuples);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](std::uint64_t a, std::uint64_t b) {
        return std::lexicographical_compare(flat.begin() + a * rank, flat.begin() + (a + 1) * rank,
                                            flat.begin() + b * rank, flat.begin() + (b + 1) * rank);
    };
    auto same = [&](std::uint64_t a, std::uint64_t b) {
        return std::equal(flat.begin() + a * rank, flat.begin() + (a + 1) * rank, flat.begin() + b * rank);
    };
    std::sort(order.begin(), order.end(), less);
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j < order.size() && same(order[j], order[i])) ++j;
        const BigInt run = j - i;
        total += run * run;
        i = j;
    }
    return total;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

MomentVector moment_vector(const MonomialSystem& system, const std::vector<std::vector<std::int64_t>>& tuple) {
    const IntegerRing z;
    MomentVector out;
    for (const auto& beta : system.exponents()) {
        std::int64_t s = 0;
        for (const auto& x : tuple) {
            if (x.size() != system.dim()) throw DimensionMismatch("point dimension differs from the system");
            std::int64_t v = 1;
            for (std::size_t i = 0; i < x.size(); ++i)
                for (std::uint32_t e = 0; e < beta.exps[i]; ++e) v = z.mul(v, x[i]);
            s = z.add(s, v);
        }
        out.push_back(s);
    }
    return out;
}

std::string to_string(CountMethod m) { return m == CountMethod::bruteforce ? "bruteforce" : "mitm"; }

CountResult jr_bruteforce(const MonomialSystem& system, std::size_t r, std::uint64_t x, const Budget& budget,
                          const ExecPolicy& policy) {
    const auto start = std::chrono::steady_clock::now();
    const std::vector<std::int64_t> sides(system.dim(), static_cast<std::int64_t>(x));
    check_sides(system, r, sides);
    const long double half = tuple_count(sides, r);
    require_budget(half * half, budget, "brute-force J_r");

    std::uint64_t points = 0;
    const auto moments = point_moments(system, sides, points);
    const std::size_t rank = system.rank();
    const std::size_t len = 2 * r;

    // Partition over the first point; each partition walks the remaining
    // 2r-1 points with an odometer.
    const unsigned parts = std::max(1u, policy.partitions);
    std::vector<std::uint64_t> partial(parts, 0);
    run_partitions(policy, [&](unsigned p) {
        const Slice s = partition_slice(points, p, parts);
        std::vector<std::uint64_t> idx(len, 0);
        std::vector<std::int64_t> diff(rank);
        std::uint64_t count = 0;
        for (std::uint64_t first = s.begin; first < s.end; ++first) {
            idx.assign(len, 0);
            idx[0] = first;
            while (true) {
                std::fill(diff.begin(), diff.end(), 0);
                for (std::size_t j = 0; j < len; ++j)
                    for (std::size_t b = 0; b < rank; ++b)
                        diff[b] += (j < r ? 1 : -1) * moments[idx[j] * rank + b];
                if (std::all_of(diff.begin(), diff.end(), [](std::int64_t v) { return v == 0; })) ++count;
                bool done = true;
                for (std::size_t j = len; j > 1;) {
                    --j;
                    if (++idx[j] < points) {
                        done = false;
                        break;
                    }
                    idx[j] = 0;
                }
                if (done) break;
            }
        }
        partial[p] = count;
    });
    CountResult out;
    for (auto c : partial) out.j += c;
    out.x = x;
    out.r = r;
    out.system = system.descriptor();
    out.method = CountMethod::bruteforce;
    out.seconds = seconds_since(start);
    return out;
}

CountResult jr_mitm(const MonomialSystem& system, std::size_t r, std::uint64_t x, const Budget& budget,
                    const ExecPolicy& policy) {
    const auto start = std::chrono::steady_clock::now();
    CountResult out;
    out.j = vr_count(system, r, std::vector<std::int64_t>(system.dim(), static_cast<std::int64_t>(x)), budget, policy);
    out.x = x;
    out.r = r;
    out.system = system.descriptor();
    out.method = CountMethod::mitm;
    out.seconds = seconds_since(start);
    return out;
}

CountResult count_jr(const MonomialSystem& system, std::size_t r, std::uint64_t x, CountMethod method,
                     const Budget& budget, const ExecPolicy& policy) {
    return method == CountMethod::bruteforce ? jr_bruteforce(system, r, x, budget, policy)
                                             : jr_mitm(system, r, x, budget, policy);
}

BigInt vr_count(const MonomialSystem& system, std::size_t r, const std::vector<std::int64_t>& sides,
                const Budget& budget, const ExecPolicy& policy) {
    check_sides(system, r, sides);
    require_budget(tuple_count(sides, r), budget, "meet-in-the-middle tuples");
    std::uint64_t points = 0;
    const auto moments = point_moments(system, sides, points);
    return energy(moments, points, system.rank(), r, policy);
}

Rational standard_k(std::size_t j, std::uint32_t d) {
    return Rational(BigInt(j) * binomial(j + d, j + 1));
}

PredictedExponent predicted_exponent(const MonomialSystem& system, std::size_t r,
                                     const std::optional<std::vector<Rational>>& k_values) {
    const std::size_t n = system.dim();
    if (r < 1) throw InvalidRange("r must be at least 1");
    PredictedExponent out;
    const Rational rn(static_cast<std::int64_t>(r * n));

    if (system.kind() == SystemKind::custom && !k_values) {
        const std::uint64_t need = system.rank() * (system.degree() + 1);
        if (r <= need)
            throw UnsupportedSystem("custom systems are supported only for r > R(d+1) = " + std::to_string(need));
        out.large_r_regime = true;
        out.terms = {rn};
        out.exponent = Rational(static_cast<std::int64_t>(2 * r * n)) - Rational(static_cast<std::int64_t>(system.weight()));
        out.j_star = n;
        if (out.exponent <= rn) {
            out.exponent = rn;
            out.j_star = 0;
        }
        return out;
    }
    if (k_values) {
        if (k_values->size() != n) throw DimensionMismatch("need K_1..K_n");
        out.k_values = *k_values;
    } else if (system.kind() == SystemKind::standard) {
        for (std::size_t j = 1; j <= n; ++j) out.k_values.push_back(standard_k(j, system.degree()));
    } else {
        throw UnsupportedSystem("ACK systems need K_1..K_n supplied explicitly");
    }

    out.terms.push_back(rn);
    for (std::size_t j = 1; j <= n; ++j)
        out.terms.push_back(Rational(static_cast<std::int64_t>(2 * r * j + (n - j))) - out.k_values[j - 1]);
    out.exponent = rn;
    out.j_star = 0;
    for (std::size_t j = 1; j <= n; ++j) {
        if (out.terms[j] > out.exponent) {
            out.exponent = out.terms[j];
            out.j_star = j;
        }
    }
    return out;
}

SlopeFit slope_check(const MonomialSystem& system, std::size_t r, const std::vector<std::uint64_t>& xs,
                     CountMethod method, const Budget& budget, const ExecPolicy& policy,
                     const std::optional<std::vector<Rational>>& k_values) {
    std::vector<std::uint64_t> distinct = xs;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    if (distinct.size() < 3) throw InvalidRange("slope fit needs at least three distinct X values");
    if (distinct.front() < 1) throw InvalidRange("X must be at least 1");

    SlopeFit fit;
    fit.predicted = predicted_exponent(system, r, k_values);
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (auto x : xs) {
        fit.counts.push_back(count_jr(system, r, x, method, budget, policy));
        const double lx = std::log(static_cast<double>(x));
        const double ly = std::log(fit.counts.back().j.convert_to<double>());
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    const double m = static_cast<double>(xs.size());
    fit.slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    return fit;
}

}  // namespace burgess
