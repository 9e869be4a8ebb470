#include "burgess/stratify.hpp"

#include <cmath>
#include <map>

#include "burgess/random.hpp"

namespace burgess {

StratifyReport stratify_audit(const IntPoly& form, const DirichletCharacter& chi, const MonomialSystem& system,
                              const StratifyOptions& opt) {
    const std::size_t n = form.dim();
    if (system.dim() != n) throw DimensionMismatch("system and form dimensions differ");
    if (opt.sides.size() != n) throw DimensionMismatch("need one side length per variable");
    for (std::size_t i = 1; i < n; ++i)
        if (opt.sides[i] < opt.sides[i - 1]) throw UnsortedSides("side lengths must be non-decreasing");
    const CollectionBox box(opt.sides, opt.r);
    const long double per_sum = std::pow(static_cast<long double>(chi.modulus()), static_cast<long double>(n)) * 2 * opt.r;

    StratifyReport rep;
    rep.q = chi.modulus();
    rep.n = n;
    rep.r = opt.r;
    rep.sampled = opt.samples.has_value();
    rep.seed = opt.seed;

    std::vector<Collection> work;
    if (opt.samples) {
        require_budget(static_cast<long double>(*opt.samples) * per_sum, opt.budget, "stratification audit");
        Rng rng(opt.seed);
        for (std::uint64_t s = 0; s < *opt.samples; ++s) {
            Collection c;
            c.points.assign(2 * opt.r, Point(n));
            for (auto& p : c.points)
                for (std::size_t i = 0; i < n; ++i) p[i] = rng.uniform(std::int64_t{1}, opt.sides[i]);
            work.push_back(std::move(c));
        }
    } else {
        const std::uint64_t count = box.count();
        require_budget(static_cast<long double>(count) * per_sum, opt.budget, "stratification audit");
        work.reserve(count);
        for (std::uint64_t i = 0; i < count; ++i) work.push_back(box.at(i));
    }

    const FormTable table(form, chi, opt.budget);
    struct Outcome {
        double magnitude = 0;
        bool in_variety = false;
    };
    std::vector<Outcome> outcome(work.size());
    const unsigned parts = std::max(1u, opt.policy.partitions);
    run_partitions(opt.policy, [&](unsigned p) {
        const Slice s = partition_slice(work.size(), p, parts);
        for (std::uint64_t i = s.begin; i < s.end; ++i)
            outcome[i] = {std::abs(complete_mult_sum(table, work[i]).value), xi_indicator(system, work[i])};
    });

    const auto q = static_cast<double>(rep.q);
    for (std::size_t j = 1; j <= n; ++j) {
        StratifyLevel lvl;
        lvl.j = static_cast<std::int64_t>(j);
        lvl.threshold = opt.c * std::pow(q, (static_cast<double>(n + j) - 1) / 2);
        rep.levels.push_back(lvl);
    }

    const double unit = std::pow(q, static_cast<double>(n) / 2);
    std::map<int, std::uint64_t> bins;
    for (const auto& o : outcome) {
        ++rep.collections;
        if (o.in_variety) ++rep.in_variety;
        rep.max_abs = std::max(rep.max_abs, o.magnitude);
        for (auto& lvl : rep.levels) {
            if (o.magnitude > lvl.threshold + 1e-9 * std::max(1.0, lvl.threshold)) {
                ++lvl.count;
                if (o.in_variety) ++lvl.count_in_variety;
            }
        }
        if (o.magnitude < 1e-9) {
            ++rep.zero_sums;
        } else {
            ++bins[static_cast<int>(std::floor(std::log2(o.magnitude / unit)))];
        }
    }
    for (const auto& [b, c] : bins) rep.histogram.push_back({b, c});

    if (opt.r >= n && n >= 2) {
        long double log_norm = 0;
        for (auto k : opt.sides) log_norm += std::log(static_cast<long double>(k));
        for (auto& lvl : rep.levels) {
            lvl.ceiling = opt.c_ceiling *
                          std::exp(2.0L * opt.r * log_norm -
                                   log_b_function(static_cast<std::int64_t>(n), static_cast<std::int64_t>(opt.r), lvl.j, opt.sides));
            lvl.ratio = lvl.ceiling > 0 ? lvl.count / lvl.ceiling : 0;
        }
    }
    return rep;
}

}  // namespace burgess
