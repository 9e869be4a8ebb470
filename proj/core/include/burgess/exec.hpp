#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace burgess {

/// Upper limit on the number of elementary terms an enumeration may visit.
struct Budget {
    std::uint64_t max_terms = 1'000'000'000ULL;
};

/// Throws BudgetExceeded when `terms` (possibly fractional, from a power)
/// exceeds the budget. `what` names the enumeration in the message.
void require_budget(long double terms, const Budget& budget, const std::string& what);

/// Execution policy for enumeration loops.
///
/// Work is cut into `partitions` contiguous slices of the index space and
/// partial results are combined in slice order, so the result depends on
/// `partitions` only, never on `threads`. partitions == 1 is the reference.
struct ExecPolicy {
    unsigned threads = 1;
    unsigned partitions = 1;
};

/// Runs body(p) for p in [0, partitions) on up to `threads` workers.
/// Exceptions thrown by a body are rethrown (lowest partition first).
void run_partitions(const ExecPolicy& policy, const std::function<void(unsigned)>& body);

/// Half-open slice [begin, end) of [0, total) owned by partition p of k.
struct Slice {
    std::uint64_t begin;
    std::uint64_t end;
};
Slice partition_slice(std::uint64_t total, unsigned p, unsigned k);

}  // namespace burgess
