#include "burgess/charsums.hpp"
#include "wide_int.hpp"

#include <cmath>
#include <random>

#include "burgess/admissibility.hpp"
#include "burgess/random.hpp"

namespace burgess {

void BoxRegion::validate(std::size_t n) const {
    if (offset.size() != n || sides.size() != n)
        throw DimensionMismatch("box needs " + std::to_string(n) + " offsets and sides");
    for (auto h : sides)
        if (h < 1) throw InvalidRange("box sides must be at least 1");
}

long double BoxRegion::volume() const noexcept {
    long double v = 1;
    for (auto h : sides) v *= static_cast<long double>(h);
    return v;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t e) {
    std::uint64_t out = 1;
    for (std::uint64_t i = 0; i < e; ++i)
        if (__builtin_mul_overflow(out, base, &out)) throw OverflowError("power overflows 64 bits");
    return out;
}

/// Decodes a flat index into digits in [0, radix), first digit most significant.
void decode(std::uint64_t index, std::uint64_t radix, std::span<std::int64_t> out) {
    for (std::size_t i = out.size(); i-- > 0;) {
        out[i] = static_cast<std::int64_t>(index % radix);
        index /= radix;
    }
}

}  // namespace

SumResult mixed_sum(const IntPoly& form, const RealPoly& phase, const DirichletCharacter& chi, const BoxRegion& box,
                    const Budget& budget, const ExecPolicy& policy) {
    const std::size_t n = form.dim();
    if (phase.dim() != n) throw DimensionMismatch("F and g must have the same dimension");
    box.validate(n);
    require_budget(box.volume(), budget, "mixed sum");

    const std::uint64_t q = chi.modulus();
    const FieldPoly f = reduce_mod(form, q);
    const bool has_phase = !phase.is_zero();
    std::uint64_t total = 1;
    for (auto h : box.sides) total *= static_cast<std::uint64_t>(h);

    const unsigned parts = std::max(1u, policy.partitions);
    std::vector<ComplexAcc> partial(parts);
    run_partitions(policy, [&](unsigned p) {
        const Slice s = partition_slice(total, p, parts);
        std::vector<std::int64_t> x(n);
        ComplexAcc acc;
        for (std::uint64_t idx = s.begin; idx < s.end; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t i = n; i-- > 0;) {
                const auto h = static_cast<std::uint64_t>(box.sides[i]);
                x[i] = box.offset[i] + 1 + static_cast<std::int64_t>(rest % h);
                rest /= h;
            }
            const std::uint32_t t = chi.exponent_of_residue(evaluate(f, x));
            if (t == DirichletCharacter::kZero) {
                acc.add({0.0, 0.0});
                continue;
            }
            std::complex<double> term = chi.root(t);
            if (has_phase) term *= unit_phase(evaluate_mod1(phase, x));
            acc.add(term);
        }
        partial[p] = acc;
    });
    ComplexAcc total_acc;
    for (const auto& a : partial) total_acc.merge(a);
    return {total_acc.value(), total_acc.term_count, total_acc.roundoff_bound()};
}

FormTable::FormTable(const IntPoly& form, const DirichletCharacter& chi, const Budget& budget)
    : n_(form.dim()), q_(chi.modulus()), chi_(&chi) {
    require_budget(std::pow(static_cast<long double>(q_), static_cast<long double>(n_)), budget, "form table");
    const FieldPoly f = reduce_mod(form, q_);
    const std::uint64_t size = checked_pow(q_, n_);
    exps_.resize(size);
    std::vector<std::int64_t> m(n_);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        decode(idx, q_, m);
        exps_[idx] = chi.exponent_of_residue(evaluate(f, m));
    }
}

namespace {

MultSum finish(std::vector<std::uint64_t> counts, std::uint64_t zeros, const DirichletCharacter& chi) {
    MultSum out;
    out.zeros = zeros;
    double re = 0, im = 0;
    for (std::uint32_t t = 0; t < counts.size(); ++t) {
        const auto z = chi.root(t) * static_cast<double>(counts[t]);
        re += z.real();
        im += z.imag();
    }
    out.counts = std::move(counts);
    out.value = {re, im};
    return out;
}

}  // namespace

MultSum complete_mult_sum(const FormTable& table, const Collection& points) {
    const std::size_t n = table.dim();
    points.validate(n);
    const std::uint64_t q = table.modulus();
    const DirichletCharacter& chi = table.character();
    const std::uint32_t order = chi.order();

    // Shifts reduced mod q, and the place value of each coordinate.
    const std::size_t len = points.size();
    std::vector<std::vector<std::uint64_t>> shift(len, std::vector<std::uint64_t>(n));
    for (std::size_t j = 0; j < len; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            const auto m = static_cast<std::int64_t>(q);
            const std::int64_t v = points.points[j][i] % m;
            shift[j][i] = static_cast<std::uint64_t>(v < 0 ? v + m : v);
        }
    std::vector<std::uint64_t> place(n);
    for (std::size_t i = n; i-- > 0;) place[i] = i + 1 == n ? 1 : place[i + 1] * q;

    std::vector<std::uint64_t> counts(order, 0);
    std::uint64_t zeros = 0;
    std::vector<std::int64_t> m(n);
    for (std::uint64_t idx = 0; idx < table.size(); ++idx) {
        decode(idx, q, m);
        std::uint64_t t = 0;
        bool zero = false;
        for (std::size_t j = 0; j < len && !zero; ++j) {
            std::uint64_t at = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t c = static_cast<std::uint64_t>(m[i]) + shift[j][i];
                if (c >= q) c -= q;
                at += c * place[i];
            }
            const std::uint32_t e = table.exponent(at);
            if (e == DirichletCharacter::kZero) {
                zero = true;
                break;
            }
            t += static_cast<std::uint64_t>(e) * Collection::delta_exponent(j + 1, order);
        }
        if (zero) ++zeros;
        else ++counts[t % order];
    }
    return finish(std::move(counts), zeros, chi);
}

MultSum complete_mult_sum(const IntPoly& form, const Collection& points, const DirichletCharacter& chi,
                          MultSumMethod method, const Budget& budget) {
    if (method == MultSumMethod::termwise) return complete_mult_sum(FormTable(form, chi, budget), points);

    const std::size_t n = form.dim();
    const std::uint64_t q = chi.modulus();
    require_budget(std::pow(static_cast<long double>(q), static_cast<long double>(n)), budget, "complete sum");
    const FieldPoly product = product_polynomial(form, points, chi.order(), q);
    std::vector<std::uint64_t> counts(chi.order(), 0);
    std::uint64_t zeros = 0;
    const std::uint64_t size = checked_pow(q, n);
    std::vector<std::int64_t> m(n);
    for (std::uint64_t idx = 0; idx < size; ++idx) {
        decode(idx, q, m);
        const std::uint32_t e = chi.exponent_of_residue(evaluate(product, m));
        if (e == DirichletCharacter::kZero) ++zeros;
        else ++counts[e];
    }
    return finish(std::move(counts), zeros, chi);
}

std::vector<std::int64_t> signed_moments(const MonomialSystem& system, const Collection& points) {
    const std::size_t n = system.dim();
    points.validate(n);
    const IntegerRing z;
    std::vector<std::int64_t> out;
    out.reserve(system.rank());
    for (const auto& beta : system.exponents()) {
        std::int64_t d = 0;
        for (std::size_t j = 0; j < points.size(); ++j) {
            std::int64_t v = 1;
            for (std::size_t i = 0; i < n; ++i)
                for (std::uint32_t e = 0; e < beta.exps[i]; ++e) v = z.mul(v, points.points[j][i]);
            d = Collection::sign(j + 1) > 0 ? z.add(d, v) : z.sub(d, v);
        }
        out.push_back(d);
    }
    return out;
}

bool xi_indicator(const MonomialSystem& system, const Collection& points, std::optional<std::uint64_t> modulus) {
    const auto moments = signed_moments(system, points);
    const auto& lambda = system.exponents();
    for (std::size_t b = 0; b < lambda.size(); ++b) {
        if (!modulus) {
            if (moments[b] != 0) return false;
            continue;
        }
        const std::uint64_t period = checked_pow(*modulus, lambda[b].degree());
        const auto p = static_cast<std::int64_t>(period);
        if (period > static_cast<std::uint64_t>(INT64_MAX)) {
            if (moments[b] != 0) return false;  // |D| < 2^63 <= period
        } else if (moments[b] % p != 0) {
            return false;
        }
    }
    return true;
}

BoxPartition::BoxPartition(MonomialSystem system, std::uint64_t q_param) : system_(std::move(system)), q_(q_param) {
    if (q_ < 1) throw InvalidRange("Q must be at least 1");
    for (const auto& beta : system_.exponents()) ranges_.push_back(checked_pow(q_, beta.degree()));
}

std::uint64_t BoxPartition::vertex_count() const { return checked_pow(q_, system_.weight()); }

std::vector<std::uint64_t> BoxPartition::vertex(std::uint64_t index) const {
    std::vector<std::uint64_t> c(ranges_.size());
    for (std::size_t b = ranges_.size(); b-- > 0;) {
        c[b] = index % ranges_[b];
        index /= ranges_[b];
    }
    return c;
}

std::vector<Rational> BoxPartition::coordinates(std::uint64_t index) const {
    const auto c = vertex(index);
    std::vector<Rational> out;
    out.reserve(c.size());
    for (std::size_t b = 0; b < c.size(); ++b) out.emplace_back(BigInt(c[b]), BigInt(ranges_[b]));
    return out;
}

std::uint64_t partition_parameter(std::size_t r, std::uint64_t k) { return 2 * r * k; }

SumResult additive_box_sum(const MonomialSystem& system, std::uint64_t q_param, const Collection& points,
                           AddSumMethod method, const Budget& budget) {
    const BoxPartition part(system, q_param);
    const auto moments = signed_moments(system, points);
    const auto& ranges = part.ranges();

    // D_beta reduced modulo Q^|beta|; the phase of c_beta is c_beta D_beta / Q^|beta|.
    std::vector<std::uint64_t> residues(ranges.size());
    for (std::size_t b = 0; b < ranges.size(); ++b) {
        const auto period = static_cast<detail::i128>(ranges[b]);
        detail::i128 v = static_cast<detail::i128>(moments[b]) % period;
        if (v < 0) v += period;
        residues[b] = static_cast<std::uint64_t>(v);
    }

    if (method == AddSumMethod::factorized) {
        long double terms = 0;
        for (auto p : ranges) terms += static_cast<long double>(p);
        require_budget(terms, budget, "additive box sum");
        std::complex<double> value{1.0, 0.0};
        std::uint64_t count = 0;
        for (std::size_t b = 0; b < ranges.size(); ++b) {
            ComplexAcc acc;
            for (std::uint64_t c = 0; c < ranges[b]; ++c) {
                const auto t = static_cast<std::uint64_t>(static_cast<detail::u128>(c) * residues[b] % ranges[b]);
                acc.add(root_of_unity(t, ranges[b]));
            }
            value *= acc.value();
            count += acc.term_count;
        }
        const double magnitude = std::pow(static_cast<double>(q_param), static_cast<double>(system.weight()));
        return {value, count, static_cast<double>(count) * std::ldexp(1.0, -48) * magnitude};
    }

    require_budget(std::pow(static_cast<long double>(q_param), static_cast<long double>(system.weight())), budget,
                   "additive box sum (vertex enumeration)");
    // Common denominator Q^d: phase numerator sum_b c_b D_b Q^(d - |b|).
    const std::uint64_t denom = checked_pow(q_param, system.degree());
    std::vector<std::uint64_t> scale(ranges.size());
    for (std::size_t b = 0; b < ranges.size(); ++b)
        scale[b] = static_cast<std::uint64_t>(static_cast<detail::u128>(residues[b]) * (denom / ranges[b]) % denom);
    const std::uint64_t total = part.vertex_count();
    ComplexAcc acc;
    std::vector<std::uint64_t> c(ranges.size(), 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        detail::u128 t = 0;
        for (std::size_t b = 0; b < ranges.size(); ++b) t += static_cast<detail::u128>(c[b]) * scale[b];
        acc.add(root_of_unity(static_cast<std::uint64_t>(t % denom), denom));
        for (std::size_t b = ranges.size(); b-- > 0;) {
            if (++c[b] < ranges[b]) break;
            c[b] = 0;
        }
    }
    return {acc.value(), acc.term_count, acc.roundoff_bound()};
}

ProdLemmaReport verify_prod_lemma(const MonomialSystem& system, const ProdLemmaOptions& opt, bool throw_on_failure) {
    const std::size_t n = system.dim();
    ProdLemmaReport rep;
    rep.q_param = opt.q_param.value_or(partition_parameter(opt.r, opt.k));
    rep.weight = system.weight();
    rep.hypothesis = rep.q_param >= partition_parameter(opt.r, opt.k);
    const BoxPartition part(system, rep.q_param);
    const long double scale = std::pow(static_cast<long double>(rep.q_param), static_cast<long double>(rep.weight));
    const CollectionBox box(std::vector<std::int64_t>(n, static_cast<std::int64_t>(opt.k)), opt.r);

    std::vector<Collection> work;
    if (opt.samples) {
        Rng rng(opt.seed);
        for (std::uint64_t s = 0; s < *opt.samples; ++s) {
            Collection c;
            c.points.assign(2 * opt.r, Point(n));
            for (auto& p : c.points)
                for (auto& v : p) v = static_cast<std::int64_t>(rng.uniform(1, opt.k));
            work.push_back(std::move(c));
        }
    } else {
        const std::uint64_t count = box.count();
        require_budget(static_cast<long double>(count), opt.budget, "collections");
        for (std::uint64_t i = 0; i < count; ++i) work.push_back(box.at(i));
    }

    struct Outcome {
        bool xi = false, xi_q = false;
        double error = 0;
    };
    std::vector<Outcome> outcome(work.size());
    const unsigned parts = std::max(1u, opt.policy.partitions);
    run_partitions(opt.policy, [&](unsigned p) {
        const Slice s = partition_slice(work.size(), p, parts);
        for (std::uint64_t i = s.begin; i < s.end; ++i) {
            const auto sum = additive_box_sum(system, rep.q_param, work[i], opt.method, opt.budget);
            Outcome o;
            o.xi = xi_indicator(system, work[i]);
            o.xi_q = xi_indicator(system, work[i], rep.q_param);
            o.error = static_cast<double>(std::abs(std::complex<long double>(sum.value) -
                                                   std::complex<long double>(o.xi ? scale : 0.0L)) /
                                          scale);
            outcome[i] = o;
        }
    });

    for (std::size_t i = 0; i < work.size(); ++i) {
        const Outcome& o = outcome[i];
        ++rep.checked;
        if (o.xi) ++rep.in_variety;
        if (o.xi_q && !o.xi) {
            ++rep.wraparound;
            if (rep.wraparound_examples.size() < 8) rep.wraparound_examples.push_back(work[i]);
        }
        rep.max_error = std::max(rep.max_error, o.error);
        if (o.error < 1e-6) {
            ++rep.passed;
        } else if (!rep.first_failure) {
            rep.first_failure = work[i];
        }
    }
    const long double vertices = scale * static_cast<long double>(rep.checked);
    rep.vertex_terms = vertices > 1.8e19L ? UINT64_MAX : static_cast<std::uint64_t>(vertices);
    if (throw_on_failure && rep.hypothesis && rep.first_failure)
        throw IdentityViolation("additive box sum differs from Q^M * Xi at collection " + rep.first_failure->to_string());
    return rep;
}

namespace {

void check_b_args(std::int64_t n, std::int64_t r, std::int64_t j, const std::vector<std::int64_t>& k) {
    if (n < 2 || r < n) throw InvalidRange("B needs r >= n >= 2");
    if (j < 0 || j > n) throw InvalidRange("B needs 0 <= j <= n");
    if (k.size() != static_cast<std::size_t>(n)) throw DimensionMismatch("B needs n side lengths");
    for (std::size_t i = 0; i < k.size(); ++i) {
        if (k[i] < 1) throw InvalidRange("side lengths must be at least 1");
        if (i && k[i] < k[i - 1]) throw UnsortedSides("side lengths must be non-decreasing");
    }
}

/// B as a list of (side index, exponent) factors.
std::vector<std::pair<std::size_t, std::int64_t>> b_factors(std::int64_t n, std::int64_t r, std::int64_t j) {
    const std::int64_t th = (r - 1) / (n - 1);
    if (j == 0) return {};
    if (j <= n - 2) return {{0, j * th}};
    if (j == n - 1) return {{0, r - 1}};
    std::vector<std::pair<std::size_t, std::int64_t>> out;
    for (std::int64_t i = 0; i < n / 2; ++i) out.emplace_back(static_cast<std::size_t>(i), 2 * r);
    if (n % 2 == 1) out.emplace_back(static_cast<std::size_t>(n / 2), r);
    return out;
}

}  // namespace

BigInt b_function(std::int64_t n, std::int64_t r, std::int64_t j, const std::vector<std::int64_t>& k) {
    check_b_args(n, r, j, k);
    BigInt out = 1;
    for (const auto& [i, e] : b_factors(n, r, j)) out *= boost::multiprecision::pow(BigInt(k[i]), static_cast<unsigned>(e));
    return out;
}

long double log_b_function(std::int64_t n, std::int64_t r, std::int64_t j, const std::vector<std::int64_t>& k) {
    check_b_args(n, r, j, k);
    long double out = 0;
    for (const auto& [i, e] : b_factors(n, r, j)) out += static_cast<long double>(e) * std::log(static_cast<long double>(k[i]));
    return out;
}

BSumCheck check_b_sum(std::int64_t n, std::int64_t r, long double q, const std::vector<std::int64_t>& k) {
    BSumCheck c;
    const std::int64_t th = (r - 1) / (n - 1);
    const long double log_q = std::log(q);
    const long double log_ratio = 0.5L * log_q - th * std::log(static_cast<long double>(k.at(0)));
    c.ratio = std::exp(log_ratio);
    c.hypothesis = log_ratio <= 1e-15L;
    for (std::int64_t j = 1; j <= n; ++j) {
        const long double term = std::exp(0.5L * j * log_q - log_b_function(n, r, j, k));
        c.lhs += term;
        if (j <= n - 1) {
            c.partial_lhs += term;
            c.partial_rhs += std::exp(j * log_ratio);
        }
    }
    c.rhs = n * c.ratio;
    constexpr long double tol = 1e-12L;
    c.holds = c.lhs <= c.rhs * (1 + tol) && c.partial_lhs <= c.partial_rhs * (1 + tol);
    return c;
}

namespace {

/// Smallest K >= 1 with K^(2 Theta) >= q, i.e. q^(1/2) K^-Theta <= 1.
std::int64_t hypothesis_floor(std::uint64_t q, std::int64_t th) {
    std::int64_t k = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::floor(std::pow(static_cast<long double>(q), 0.5L / th))) - 1);
    auto ok = [&](std::int64_t cand) {
        BigInt p = boost::multiprecision::pow(BigInt(cand), static_cast<unsigned>(2 * th));
        return p >= q;
    };
    while (!ok(k)) ++k;
    while (k > 1 && ok(k - 1)) --k;
    return k;
}

}  // namespace

BSumReport verify_b_sum_lemma(const BSumOptions& opt, bool throw_on_failure) {
    BSumReport rep;
    Rng rng(opt.seed);
    while (rep.checked < opt.trials) {
        ++rep.trials;
        const std::int64_t n = opt.n.value_or(static_cast<std::int64_t>(rng.uniform(opt.n_min, opt.n_max)));
        const std::int64_t r = opt.r.value_or(static_cast<std::int64_t>(rng.uniform(n, std::max(n, opt.r_max))));
        std::uint64_t q = 0;
        if (opt.q) {
            q = *opt.q;
        } else {
            do q = rng.uniform(2, opt.q_max);
            while (!is_prime(q));
        }
        const std::int64_t th = (r - 1) / (n - 1);
        const std::int64_t floor_k = hypothesis_floor(q, std::max<std::int64_t>(th, 1));
        std::vector<std::int64_t> k(n);
        k[0] = static_cast<std::int64_t>(rng.uniform(1, floor_k + opt.k_span));
        for (std::int64_t i = 1; i < n; ++i) k[i] = k[i - 1] + static_cast<std::int64_t>(rng.uniform(0, opt.k_span));
        const BSumCheck c = check_b_sum(n, r, static_cast<long double>(q), k);
        if (!c.hypothesis) {
            ++rep.skipped;
            continue;
        }
        ++rep.checked;
        rep.worst_margin = std::max(rep.worst_margin, c.lhs / c.rhs);
        if (!c.holds) {
            ++rep.violations;
            if (!rep.first_violation) rep.first_violation = BSumReport::Sample{n, r, q, k, c};
        }
    }
    if (throw_on_failure && rep.first_violation) {
        const auto& s = *rep.first_violation;
        std::string ks;
        for (auto v : s.k) ks += (ks.empty() ? "" : ",") + std::to_string(v);
        throw InequalityViolation("B-sum inequality fails at n=" + std::to_string(s.n) + " r=" + std::to_string(s.r) +
                                  " q=" + std::to_string(s.q) + " K=(" + ks + ")");
    }
    return rep;
}

}  // namespace burgess
