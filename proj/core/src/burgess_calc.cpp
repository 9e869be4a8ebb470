#include "burgess/burgess_calc.hpp"

#include <cmath>

#include "burgess/errors.hpp"

namespace burgess {

std::int64_t theta(std::int64_t n, std::int64_t r, const ThetaRule& rule) {
    if (r < 1) throw InvalidRange("r must be at least 1");
    if (rule.alpha) {
        if (*rule.alpha <= 0) throw InvalidRange("alpha must be positive");
        return static_cast<std::int64_t>(floor(Rational(r) / *rule.alpha));
    }
    if (n == 1 && rule.one_dim) return r;
    if (n < 2) throw DimensionTooSmall("Theta needs n >= 2 (enable the one-dimensional convention for n = 1)");
    return (r - 1) / (n - 1);
}

Rational beta_n(std::int64_t n) { return Rational(1, 2) - Rational(1, 2 * (n + 1)); }

namespace {

ExponentReport build_report(std::int64_t n, std::int64_t d, std::int64_t r, std::uint64_t weight, std::uint64_t rank,
                            RangeRule range, const ThetaRule& rule) {
    ExponentReport rep;
    rep.n = n;
    rep.d = d;
    rep.r = r;
    rep.weight = weight;
    rep.rank = rank;
    rep.range = range;
    rep.theta = theta(n, r, rule);
    rep.conjectural = rule.alpha.has_value();
    rep.beta_n = beta_n(n);
    rep.a = Rational(n) - Rational(n + 1, 2 * r);

    const auto m = static_cast<std::int64_t>(weight);
    const std::int64_t gap = rep.theta - m;
    if (gap <= 0) rep.reasons.push_back("Theta = " + std::to_string(rep.theta) + " is not above M = " + std::to_string(m));
    switch (range) {
        case RangeRule::theorem:
            if (n >= 2 && r <= (m + 1) * (n - 1) + 1)
                rep.reasons.push_back("r must exceed (M+1)(n-1)+1 = " + std::to_string((m + 1) * (n - 1) + 1));
            break;
        case RangeRule::theta_only:
            break;
        case RangeRule::large_r: {
            const auto need = static_cast<std::int64_t>(rank) * (d + 1);
            if (r <= need) rep.reasons.push_back("r must exceed R(d+1) = " + std::to_string(need));
            break;
        }
    }
    rep.valid = rep.reasons.empty();
    if (gap > 0) {
        rep.b = Rational(n * gap + 1, 4 * r * gap);
        rep.h_exponent_cap = Rational(1, 2) + Rational(1, 4 * gap);
        rep.beta_threshold = Rational(1, 2) - Rational(gap - 1, 2 * gap * (n + 1));
    }
    return rep;
}

}  // namespace

ExponentReport exponent_report(std::int64_t n, std::int64_t d, std::int64_t r, const ThetaRule& rule) {
    if (d < 1) throw InvalidRange("d must be at least 1");
    if (n < 1) throw DimensionTooSmall("n must be at least 1");
    auto rep = build_report(n, d, r, standard_weight(n, d), standard_rank(n, d), RangeRule::theorem, rule);
    rep.system = standard_system(n, d).descriptor();
    return rep;
}

ExponentReport tdi_theorem_report(const MonomialSystem& system, std::int64_t r, const ThetaRule& rule) {
    const auto cert = is_tdi(system);
    if (!cert.tdi) throw NotTDI(system.descriptor() + " is not translation-dilation invariant: " + cert.term);
    if (!system.has_linear_monomials()) throw DegenerateSystem(system.descriptor() + " lacks a linear monomial in some variable");
    RangeRule range = RangeRule::large_r;
    if (system.kind() == SystemKind::standard) range = RangeRule::theorem;
    if (system.kind() == SystemKind::ack) range = RangeRule::theta_only;
    auto rep = build_report(static_cast<std::int64_t>(system.dim()), system.degree(), r, system.weight(), system.rank(),
                            range, rule);
    rep.system = system.descriptor();
    return rep;
}

Rational nontrivial_threshold(std::int64_t n, std::int64_t d, std::int64_t r, const ThetaRule& rule) {
    const auto rep = exponent_report(n, d, r, rule);
    if (!rep.beta_threshold) throw InvalidRange("threshold needs Theta > M");
    return *rep.beta_threshold;
}

PWindow p_window(std::int64_t n, std::int64_t d, std::int64_t r, long double h, long double q,
                 std::optional<std::int64_t> mu) {
    if (!(h > 0) || !(q > 1)) throw InvalidRange("need H > 0 and q > 1");
    PWindow w;
    w.theta = theta(n, r);
    w.mu = mu.value_or(static_cast<std::int64_t>(standard_weight(n, d)));
    const std::int64_t gap = w.theta - w.mu;
    if (gap <= 0) throw EmptyWindow("window needs Theta > mu");
    const long double cap = std::pow(q, 0.5L + 1.0L / (4.0L * gap));
    if (h >= cap) throw EmptyWindow("H must stay below q^(1/2 + 1/(4(Theta-mu)))");
    w.upper = h * std::pow(q, -1.0L / (2.0L * gap));
    w.lower = w.upper / 2;
    w.hp_below_q = h * w.upper < q;
    w.below_theta_cap = w.theta > 0 && w.upper <= h * std::pow(q, -1.0L / (2.0L * w.theta));
    return w;
}

bool window_nonempty(std::int64_t n, std::int64_t d, std::int64_t r, const Rational& beta,
                     std::optional<std::int64_t> mu) {
    const std::int64_t gap = theta(n, r) - mu.value_or(static_cast<std::int64_t>(standard_weight(n, d)));
    if (gap <= 0) return false;
    // H P < q at the top of the window: 2 beta - 1/(2 gap) < 1.
    return beta < Rational(1, 2) + Rational(1, 4 * gap);
}

Rational delta_formula(std::int64_t n, std::uint64_t weight, std::int64_t theta_value, std::int64_t r,
                       const Rational& kappa) {
    const std::int64_t gap = theta_value - static_cast<std::int64_t>(weight);
    if (gap <= 0) throw InvalidRange("delta needs Theta > M");
    return (2 * kappa * (n + 1) * gap - 1) / Rational(4 * r * gap);
}

double continuous_argmax(const Rational& b, const Rational& c, const Rational& e) {
    const double bd = to_double(b), cd = to_double(c), ed = to_double(e);
    const double disc = cd * cd - bd * cd * ed;
    return (cd + std::sqrt(std::max(disc, 0.0))) / bd;
}

DeltaReport delta_savings(std::int64_t n, std::int64_t d, const Rational& kappa, std::optional<std::int64_t> r) {
    if (kappa <= 0) throw InvalidRange("kappa must be positive");
    if (n < 2) throw DimensionTooSmall("delta savings need n >= 2");
    DeltaReport rep;
    rep.n = n;
    rep.d = d;
    rep.kappa = kappa;
    rep.weight = standard_weight(n, d);
    const auto m = static_cast<std::int64_t>(rep.weight);
    rep.r_from_rule = !r.has_value();
    if (r) {
        if (*r < 1) throw InvalidRange("r must be at least 1");
        rep.r = *r;
    } else {
        const BigInt rounded = round_half_up(Rational(n - 1) / (Rational(n + 1) * kappa));
        if (rounded > 1'000'000'000) throw InvalidRange("kappa too small");
        rep.r = static_cast<std::int64_t>(rounded);
    }
    rep.theta = theta(n, rep.r);
    if (rep.theta <= m) {
        if (rep.r_from_rule)
            throw KappaTooLarge("r = " + std::to_string(rep.r) + " gives Theta = " + std::to_string(rep.theta) +
                                " <= M = " + std::to_string(m));
        throw InvalidRange("r = " + std::to_string(rep.r) + " gives Theta <= M");
    }
    rep.delta = delta_formula(n, rep.weight, rep.theta, rep.r, kappa);
    rep.delta_over_kappa_sq = rep.delta / (kappa * kappa);
    rep.asymptotic_ratio = Rational((n + 1) * (n + 1), 4 * (n - 1));

    rep.b = kappa * (n + 1) / 2;
    rep.e = Rational(m * (n - 1) + 1);
    rep.c = rep.e * rep.b + Rational(n - 1, 4);
    rep.continuous_argmax = continuous_argmax(rep.b, rep.c, rep.e);

    // Exact search over integer r: start at the first r with Theta > M and
    // scan past the continuous maximizer, where f is decreasing.
    const std::int64_t first = (m + 1) * (n - 1) + 1;
    const auto last = static_cast<std::int64_t>(std::ceil(2 * rep.continuous_argmax)) + 2 * (n - 1) + 2;
    rep.best_r = 0;
    for (std::int64_t cand = first; cand <= last; ++cand) {
        const std::int64_t th = theta(n, cand);
        if (th <= m) continue;
        const Rational dl = delta_formula(n, rep.weight, th, cand, kappa);
        if (rep.best_r == 0 || dl > rep.best_delta) {
            rep.best_r = cand;
            rep.best_delta = dl;
        }
    }
    return rep;
}

PropBound prop_bound_rhs(std::int64_t n, std::uint64_t weight, std::int64_t r, long double h, long double p,
                         long double q, long double j_value) {
    if (!(h > 0) || !(p > 0) || !(q > 1) || !(j_value > 0)) throw InvalidRange("H, P, J must be positive and q > 1");
    std::vector<std::string> failed;
    if (r < n) failed.push_back("r >= n");
    const std::int64_t th = r >= 1 && n >= 2 ? theta(n, r) : 0;
    if (p > h) failed.push_back("P <= H");
    if (!(h * p < q)) failed.push_back("HP < q");
    if (th <= 0 || p > h * std::pow(q, -1.0L / (2.0L * th))) failed.push_back("P <= H q^(-1/(2 Theta))");
    if (!failed.empty()) {
        std::string msg = "hypotheses violated:";
        for (const auto& f : failed) msg += " " + f + ";";
        msg.pop_back();
        throw HypothesisViolated(msg);
    }
    const long double two_r = 2.0L * r;
    const long double ratio = h / p;
    PropBound out;
    out.prefactor = std::pow(ratio, weight / two_r) * std::pow(h, -n / two_r) * std::pow(p, n - 1.0L / two_r) *
                    std::pow(q, n / (2.0L * two_r)) * std::pow(std::log(q), static_cast<long double>(n + 1));
    out.vinogradov_term = std::pow(j_value, 1.0L / two_r);
    out.shift_term = std::pow(q, 1.0L / (2.0L * two_r)) * std::pow(ratio, n - th / two_r);
    out.total = out.prefactor * (out.vinogradov_term + out.shift_term);
    return out;
}

}  // namespace burgess
