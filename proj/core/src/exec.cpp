#include "burgess/exec.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>
#include <vector>

#include "burgess/errors.hpp"

namespace burgess {

void require_budget(long double terms, const Budget& budget, const std::string& what) {
    if (terms > static_cast<long double>(budget.max_terms)) {
        std::ostringstream os;
        os << what << ": " << terms << " terms exceeds budget of " << budget.max_terms;
        throw BudgetExceeded(os.str());
    }
}

Slice partition_slice(std::uint64_t total, unsigned p, unsigned k) {
    const std::uint64_t base = total / k;
    const std::uint64_t extra = total % k;
    const std::uint64_t begin = p * base + std::min<std::uint64_t>(p, extra);
    return {begin, begin + base + (p < extra ? 1 : 0)};
}

void run_partitions(const ExecPolicy& policy, const std::function<void(unsigned)>& body) {
    const unsigned parts = std::max(1u, policy.partitions);
    const unsigned workers = std::clamp(policy.threads, 1u, parts);
    std::vector<std::exception_ptr> errors(parts);

    if (workers == 1) {
        for (unsigned p = 0; p < parts; ++p) {
            try {
                body(p);
            } catch (...) {
                errors[p] = std::current_exception();
            }
        }
    } else {
        std::atomic<unsigned> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (unsigned p = next++; p < parts; p = next++) {
                    try {
                        body(p);
                    } catch (...) {
                        errors[p] = std::current_exception();
                    }
                }
            });
        }
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

}  // namespace burgess
