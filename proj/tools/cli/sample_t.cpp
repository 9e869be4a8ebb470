#include "cli/sample_t.hpp"

#include <cmath>

#include "burgess/random.hpp"

namespace burgess::cli {

TEstimate sample_t(const IntPoly& form, const DirichletCharacter& chi, const MonomialSystem& system,
                   const BoxRegion& box, std::uint64_t samples, std::uint64_t seed, const std::vector<TProbe>& probes,
                   const Budget& budget, const ExecPolicy& policy) {
    const std::size_t n = form.dim();
    box.validate(n);
    if (system.dim() != n) throw DimensionMismatch("system and form dimensions differ");
    if (samples < 1) throw InvalidRange("need at least one sample");
    require_budget(box.volume() * static_cast<long double>(samples + probes.size()), budget, "T estimate");

    TEstimate est;
    est.samples = samples;
    est.seed = seed;
    Rng rng(seed);
    const std::size_t coeffs = system.rank() + 1;
    for (std::uint64_t s = 0; s < samples; ++s) {
        TSample smp;
        smp.coefficients.assign(coeffs, 0.0);
        smp.sides = box.sides;
        RealPoly g(n);
        if (s > 0) {
            for (auto& c : smp.coefficients) c = rng.unit();
            for (std::size_t i = 0; i < n; ++i) smp.sides[i] = rng.uniform(std::int64_t{1}, box.sides[i]);
            g.add_term(Monomial(n), smp.coefficients[0]);
            for (std::size_t b = 0; b < system.rank(); ++b) g.add_term(system.exponents()[b], smp.coefficients[b + 1]);
        }
        const BoxRegion sub{box.offset, smp.sides};
        smp.magnitude = std::abs(mixed_sum(form, g, chi, sub, budget, policy).value);
        if (s == 0) est.zero_phase_value = smp.magnitude;
        if (s == 0 || smp.magnitude > est.estimate) {
            est.estimate = smp.magnitude;
            est.best_sample = s;
            est.best = smp;
        }
        est.running_max.push_back(est.estimate);
    }
    for (const auto& p : probes) {
        if (p.sides.size() != n) throw DimensionMismatch("probe box needs n sides");
        for (std::size_t i = 0; i < n; ++i)
            if (p.sides[i] < 1 || p.sides[i] > box.sides[i]) throw InvalidRange("probe sides must satisfy 1 <= K_i <= H_i");
        const double v = std::abs(mixed_sum(form, p.phase, chi, BoxRegion{box.offset, p.sides}, budget, policy).value);
        est.probe_values.push_back(v);
        est.estimate = std::max(est.estimate, v);
    }
    return est;
}

}  // namespace burgess::cli
