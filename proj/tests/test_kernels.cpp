#include "bsl/errors.hpp"
#include "bsl/kernels.hpp"

#include <doctest.h>

using namespace bsl;

namespace {

std::vector<AlgorithmSpec> specs()
{
    return {AlgorithmSpec::greedy(), AlgorithmSpec::dc(),    AlgorithmSpec::ldc(),
            AlgorithmSpec::bal(),    AlgorithmSpec::dummy(), AlgorithmSpec::opt(),
            AlgorithmSpec::adc(Rational(1, 2)), AlgorithmSpec::aldc(Rational(3, 2))};
}

}  // namespace

TEST_CASE("serial sequence scan is one run per sequence")
{
    const ProblemParams params(Rational(5, 2));
    for (const auto& spec : specs()) {
        const auto costs = kernels::serial::sequence_costs(spec, params, 5);
        REQUIRE(costs.size() == sequence_count(5));
        for (std::uint64_t i = 0; i < costs.size(); ++i) CHECK(costs[i] == cost_of(spec, params, sequence_at(5, i)));
    }
}

TEST_CASE("parallel and serial sequence scans agree for any worker count")
{
    for (Rational d : {Rational(3, 2), Rational(2), Rational(5, 2)}) {
        const ProblemParams params(d);
        for (const auto& spec : specs())
            for (std::size_t n : {0, 1, 2, 7, 9}) {
                const auto want = kernels::serial::sequence_costs(spec, params, n);
                for (int jobs : {1, 2, 3, 8}) {
                    CAPTURE(spec.label());
                    CAPTURE(n);
                    CAPTURE(jobs);
                    CHECK(kernels::parallel::sequence_costs(spec, params, n, jobs) == want);
                }
            }
    }
}

TEST_CASE("parallel and serial permutation scans agree")
{
    const ProblemParams params(Rational(2));
    const RequestMultiset multisets[] = {{0, 0, 0}, {2, 3, 1}, {4, 5, 2}, {0, 6, 0}, {3, 3, 3}};
    for (const auto& spec : specs())
        for (const auto& m : multisets) {
            const auto want = kernels::serial::permutation_costs(spec, params, m);
            REQUIRE(want.size() == multinomial(m));
            for (std::uint64_t i = 0; i < want.size(); i += 7)
                CHECK(want[i] == cost_of(spec, params, permutation_at(m, i)));
            for (int jobs : {1, 4}) CHECK(kernels::parallel::permutation_costs(spec, params, m, jobs) == want);
        }
}

TEST_CASE("dispatching entry points honour backend and budget")
{
    const ProblemParams params(Rational(2));
    EnumerationBudget budget;
    const auto serial = kernels::sequence_costs(AlgorithmSpec::ldc(), params, 6, budget, {kernels::Backend::serial, 0});
    const auto parallel =
        kernels::sequence_costs(AlgorithmSpec::ldc(), params, 6, budget, {kernels::Backend::parallel, 3});
    CHECK(serial == parallel);

    budget.max_sequences = 100;
    CHECK_THROWS_AS(kernels::sequence_costs(AlgorithmSpec::ldc(), params, 6, budget), BudgetError);
    budget.max_permutations = 59;
    CHECK_THROWS_AS(kernels::permutation_costs(AlgorithmSpec::ldc(), params, {2, 3, 1}, budget), BudgetError);
}
