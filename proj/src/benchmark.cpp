#include "mdg/benchmark.hpp"

#include <chrono>

#include "mdg/product.hpp"

namespace mdg {

CostLedger step_count_ledger(const std::vector<int>& factor_sizes) {
    if (factor_sizes.empty()) throw Error("at least one factor size required");
    CostLedger ledger;
    ledger.factor_sizes = factor_sizes;
    long long product = 1;
    for (int n : factor_sizes) {
        if (n < 1) throw Error("factor sizes must be at least 1");
        product *= n;
        ledger.factored_evals += static_cast<long long>(n) * (n - 1);
    }
    ledger.direct_evals = product * (product - 1);
    return ledger;
}

CostLedger benchmark_step_counts(const std::vector<int>& factor_sizes,
                                 int repetitions) {
    CostLedger ledger = step_count_ledger(factor_sizes);
    if (repetitions < 1) return ledger;
    ledger.repetitions = repetitions;

    std::vector<Digraph> factors;
    for (int n : factor_sizes) factors.push_back(directed_cycle(n));
    const Digraph explicit_product = n_ary_product(factors);

    using clock = std::chrono::steady_clock;
    long long direct_checksum = 0, factored_checksum = 0;

    const auto t0 = clock::now();
    for (int r = 0; r < repetitions; ++r)
        direct_checksum += full_report(explicit_product).diameter;
    const auto t1 = clock::now();
    for (int r = 0; r < repetitions; ++r) {
        const FactorAnalysis analysis = factor_analysis(factors);
        factored_checksum += factored_sets(factors, analysis).report.diameter;
    }
    const auto t2 = clock::now();

    if (direct_checksum != factored_checksum)
        throw Error("direct and factored analyses disagree on the diameter");

    ledger.direct_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    ledger.factored_ms = std::chrono::duration<double, std::milli>(t2 - t1).count();
    return ledger;
}

}  // namespace mdg
