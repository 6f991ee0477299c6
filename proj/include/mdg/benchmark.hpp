#ifndef MDG_BENCHMARK_HPP
#define MDG_BENCHMARK_HPP

#include <vector>

namespace mdg {

/**
 * Cost comparison between analysing a product digraph directly and analysing
 * its factors. A step is one ordered-pair directed-distance evaluation, so a
 * whole-digraph analysis of N vertices costs N(N-1) steps and the factored
 * route costs the sum of n_i(n_i - 1) over the factors.
 */
struct CostLedger {
    std::vector<int> factor_sizes;
    long long direct_evals = 0;    // N(N-1), N = product of the sizes
    long long factored_evals = 0;  // sum of n_i(n_i-1)
    // wall time over `repetitions` runs on directed-cycle factors of the
    // given sizes; zero when not measured
    double direct_ms = 0.0;
    double factored_ms = 0.0;
    int repetitions = 0;
};

/// Formula counts only.
CostLedger step_count_ledger(const std::vector<int>& factor_sizes);

/// Formula counts plus measured wall time: full direct analysis of the
/// explicit product of directed cycles with the given sizes versus
/// factor-based analysis of the cycles themselves.
CostLedger benchmark_step_counts(const std::vector<int>& factor_sizes,
                                 int repetitions = 100);

}  // namespace mdg

#endif
