#include "bsl/kernels.hpp"

#include <omp.h>

#include <exception>

namespace bsl::kernels::parallel {

namespace {

// A subtree of the enumeration: every input that starts with the prefix
// already fed into `eval`. `base` is the rank of its first leaf.
template <typename Remaining>
struct Subtree {
    Evaluator eval;
    Remaining remaining;
    std::uint64_t base;
};

// Free tree over {A,B,C}^n: remaining = number of requests still to place.
struct FreeTree {
    using Remaining = std::size_t;

    static bool leaf(Remaining r) { return r == 0; }

    template <typename Visit>
    static void children(Remaining r, Visit&& visit)
    {
        const std::uint64_t block = sequence_count(r - 1);
        for (std::size_t i = 0; i < 3; ++i) visit(all_points[i], r - 1, block * i);
    }
};

// Multiset tree: remaining = the points not yet placed.
struct MultisetTree {
    using Remaining = RequestMultiset;

    static bool leaf(const Remaining& r) { return r.size() == 0; }

    template <typename Visit>
    static void children(const Remaining& r, Visit&& visit)
    {
        std::uint64_t offset = 0;
        for (Point p : all_points) {
            if (r.count(p) == 0) continue;
            Remaining child = r;
            --child.count(p);
            visit(p, child, offset);
            offset += multinomial(child);
        }
    }
};

template <typename Tree>
void descend(const Evaluator& eval, const typename Tree::Remaining& remaining, std::uint64_t base,
             std::vector<Rational>& out)
{
    if (Tree::leaf(remaining)) {
        out[base] = eval.total();
        return;
    }
    Tree::children(remaining, [&](Point p, const typename Tree::Remaining& child, std::uint64_t offset) {
        Evaluator next = eval;
        next.feed(p);
        descend<Tree>(next, child, base + offset, out);
    });
}

template <typename Tree>
std::vector<Rational> scan(const AlgorithmSpec& spec, const ProblemParams& params,
                           const typename Tree::Remaining& root, std::uint64_t leaves, int jobs)
{
    std::vector<Rational> out(leaves);
    const int threads = jobs > 0 ? jobs : omp_get_max_threads();
    const std::size_t target = static_cast<std::size_t>(threads) * 32;

    std::vector<Subtree<typename Tree::Remaining>> frontier;
    frontier.push_back({Evaluator(spec, params), root, 0});
    while (frontier.size() < target) {
        bool grew = false;
        std::vector<Subtree<typename Tree::Remaining>> next;
        for (auto& node : frontier) {
            if (Tree::leaf(node.remaining)) {
                next.push_back(std::move(node));
                continue;
            }
            grew = true;
            Tree::children(node.remaining,
                           [&](Point p, const typename Tree::Remaining& child, std::uint64_t offset) {
                               Evaluator e = node.eval;
                               e.feed(p);
                               next.push_back({std::move(e), child, node.base + offset});
                           });
        }
        frontier = std::move(next);
        if (!grew) break;
    }

    const auto tasks = static_cast<std::int64_t>(frontier.size());
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t i = 0; i < tasks; ++i) {
        try {
            const auto& node = frontier[static_cast<std::size_t>(i)];
            descend<Tree>(node.eval, node.remaining, node.base, out);
        }
        catch (...) {
#pragma omp critical(bsl_scan_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

}  // namespace

std::vector<Rational> sequence_costs(const AlgorithmSpec& spec, const ProblemParams& params, std::size_t n, int jobs)
{
    return scan<FreeTree>(spec, params, n, sequence_count(n), jobs);
}

std::vector<Rational> permutation_costs(const AlgorithmSpec& spec, const ProblemParams& params,
                                        const RequestMultiset& m, int jobs)
{
    return scan<MultisetTree>(spec, params, m, multinomial(m), jobs);
}

}  // namespace bsl::kernels::parallel
