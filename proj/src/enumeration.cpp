#include "bsl/enumeration.hpp"

#include <algorithm>
#include <limits>

namespace bsl {

namespace {

constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b)
{
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) return saturated;
    return r;
}

// C(n, k) saturating. Computed incrementally so intermediates stay exact.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > saturated) return saturated;
    }
    return static_cast<std::uint64_t>(r);
}

RequestSequence sorted_expansion(const RequestMultiset& m)
{
    RequestSequence s;
    s.requests.reserve(static_cast<std::size_t>(m.size()));
    for (Point p : all_points) s.requests.insert(s.requests.end(), static_cast<std::size_t>(m.count(p)), p);
    return s;
}

void require_valid(const RequestMultiset& m)
{
    if (m.n_a < 0 || m.n_b < 0 || m.n_c < 0) throw std::invalid_argument("negative multiset count");
}

}  // namespace

std::uint64_t sequence_count(std::size_t n)
{
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < n; ++i) r = sat_mul(r, 3);
    return r;
}

std::uint64_t multinomial(const RequestMultiset& m)
{
    require_valid(m);
    auto a = static_cast<std::uint64_t>(m.n_a);
    auto b = static_cast<std::uint64_t>(m.n_b);
    auto c = static_cast<std::uint64_t>(m.n_c);
    return sat_mul(binomial(a + b + c, a), binomial(b + c, b));
}

void require_sequence_budget(std::size_t n, const EnumerationBudget& budget)
{
    if (sequence_count(n) > budget.max_sequences)
        throw BudgetError("3^" + std::to_string(n) + " sequences exceed max_sequences="
                          + std::to_string(budget.max_sequences));
}

void require_permutation_budget(const RequestMultiset& m, const EnumerationBudget& budget)
{
    auto count = multinomial(m);
    if (count > budget.max_permutations)
        throw BudgetError("multiset " + m.str() + " has " + (count == saturated ? "too many" : std::to_string(count))
                          + " arrangements, exceeding max_permutations=" + std::to_string(budget.max_permutations));
}

RequestSequence sequence_at(std::size_t n, std::uint64_t index)
{
    RequestSequence s;
    s.requests.assign(n, Point::A);
    for (std::size_t i = n; i-- > 0;) {
        s.requests[i] = static_cast<Point>(index % 3);
        index /= 3;
    }
    return s;
}

RequestSequence permutation_at(const RequestMultiset& m, std::uint64_t index)
{
    require_valid(m);
    RequestMultiset left = m;
    RequestSequence s;
    s.requests.reserve(static_cast<std::size_t>(m.size()));
    while (left.size() > 0) {
        for (Point p : all_points) {
            if (left.count(p) == 0) continue;
            --left.count(p);
            std::uint64_t block = multinomial(left);
            if (index < block) {
                s.requests.push_back(p);
                break;
            }
            index -= block;
            ++left.count(p);
        }
    }
    return s;
}

SequenceStream::SequenceStream(std::size_t n, const EnumerationBudget& budget) : n_(n), count_(sequence_count(n))
{
    require_sequence_budget(n, budget);
    reset();
}

void SequenceStream::reset()
{
    emitted_ = 0;
    current_.requests.assign(n_, Point::A);
}

bool SequenceStream::next(RequestSequence& out)
{
    if (emitted_ == count_) return false;
    if (emitted_ > 0) {
        // Base-3 increment from the right.
        for (std::size_t i = n_; i-- > 0;) {
            auto& p = current_.requests[i];
            if (p != Point::C) {
                p = static_cast<Point>(static_cast<int>(p) + 1);
                break;
            }
            p = Point::A;
        }
    }
    ++emitted_;
    out = current_;
    return true;
}

PermutationStream::PermutationStream(const RequestMultiset& m, const EnumerationBudget& budget)
    : m_(m), count_(multinomial(m))
{
    require_permutation_budget(m, budget);
    reset();
}

void PermutationStream::reset()
{
    emitted_ = 0;
    current_ = sorted_expansion(m_);
}

bool PermutationStream::next(RequestSequence& out)
{
    if (emitted_ == count_) return false;
    if (emitted_ > 0) std::next_permutation(current_.requests.begin(), current_.requests.end());
    ++emitted_;
    out = current_;
    return true;
}

std::vector<RequestSequence> all_sequences(std::size_t n, const EnumerationBudget& budget)
{
    SequenceStream stream(n, budget);
    std::vector<RequestSequence> out;
    out.reserve(stream.count());
    RequestSequence s;
    while (stream.next(s)) out.push_back(s);
    return out;
}

std::vector<RequestSequence> distinct_permutations(const RequestMultiset& m, const EnumerationBudget& budget)
{
    PermutationStream stream(m, budget);
    std::vector<RequestSequence> out;
    out.reserve(stream.count());
    RequestSequence s;
    while (stream.next(s)) out.push_back(s);
    return out;
}

RequestSequence sample_permutation(const RequestMultiset& m, std::mt19937_64& rng)
{
    require_valid(m);
    RequestSequence s = sorted_expansion(m);
    auto uniform_below = [&rng](std::uint64_t bound) {
        // Largest multiple of bound that fits; reject draws above it.
        std::uint64_t limit = saturated - saturated % bound;
        std::uint64_t x;
        do x = rng();
        while (x >= limit);
        return x % bound;
    };
    for (std::size_t i = s.size(); i > 1; --i) {
        auto j = static_cast<std::size_t>(uniform_below(i));
        std::swap(s.requests[i - 1], s.requests[j]);
    }
    return s;
}

RequestSequence sample_permutation(const RequestMultiset& m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    return sample_permutation(m, rng);
}

std::size_t count_runs(const RequestSequence& seq)
{
    std::size_t runs = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (i == 0 || seq.requests[i] != seq.requests[i - 1]) ++runs;
    return runs;
}

}  // namespace bsl
