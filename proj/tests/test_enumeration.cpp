#include "bsl/enumeration.hpp"
#include "bsl/errors.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace bsl;

namespace {

std::vector<RequestMultiset> small_multisets(std::size_t max_n)
{
    std::vector<RequestMultiset> out;
    for (std::int64_t a = 0; a <= static_cast<std::int64_t>(max_n); ++a)
        for (std::int64_t b = 0; a + b <= static_cast<std::int64_t>(max_n); ++b)
            for (std::int64_t c = 0; a + b + c <= static_cast<std::int64_t>(max_n); ++c) out.push_back({a, b, c});
    return out;
}

}  // namespace

TEST_CASE("sequence counts and order")
{
    CHECK(sequence_count(0) == 1);
    CHECK(sequence_count(2) == 9);
    CHECK(sequence_count(13) == 1'594'323);
    CHECK(sequence_count(200) == UINT64_MAX);

    const auto two = all_sequences(2);
    REQUIRE(two.size() == 9);
    CHECK(two.front().str() == "AA");
    CHECK(two[1].str() == "AB");
    CHECK(two.back().str() == "CC");

    const auto none = all_sequences(0);
    REQUIRE(none.size() == 1);
    CHECK(none.front().empty());
}

TEST_CASE("sequence stream is lexicographic, complete and restartable")
{
    for (std::size_t n = 0; n <= 6; ++n) {
        SequenceStream stream(n, {});
        CHECK(stream.count() == sequence_count(n));
        RequestSequence seq;
        std::vector<std::string> seen;
        std::uint64_t index = 0;
        while (stream.next(seq)) {
            CHECK(seq.size() == n);
            CHECK(seq == sequence_at(n, index++));
            seen.push_back(seq.str());
        }
        CHECK(index == sequence_count(n));
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == seen.size());

        stream.reset();
        REQUIRE(stream.next(seq));
        CHECK(seq == sequence_at(n, 0));
    }
}

TEST_CASE("multinomials")
{
    CHECK(multinomial({1, 1, 1}) == 6);
    CHECK(multinomial({0, 0, 0}) == 1);
    CHECK(multinomial({2, 3, 1}) == 60);
    CHECK(multinomial({0, 5, 0}) == 1);
    CHECK(multinomial({10, 10, 10}) == 5'550'996'791'340ULL);
    CHECK(multinomial({100, 100, 100}) == UINT64_MAX);
}

TEST_CASE("permutation stream yields every distinct arrangement once")
{
    for (const auto& m : small_multisets(6)) {
        CAPTURE(m.str());
        PermutationStream stream(m, {});
        CHECK(stream.count() == multinomial(m));
        RequestSequence seq;
        std::vector<std::string> seen;
        std::uint64_t index = 0;
        while (stream.next(seq)) {
            CHECK(seq.signature() == m);
            CHECK(seq == permutation_at(m, index++));
            seen.push_back(seq.str());
        }
        CHECK(index == multinomial(m));
        CHECK(std::is_sorted(seen.begin(), seen.end()));
        CHECK(std::set<std::string>(seen.begin(), seen.end()).size() == seen.size());
    }
    CHECK(distinct_permutations({0, 5, 0}).front().str() == "BBBBB");
}

TEST_CASE("budgets are enforced, not truncated")
{
    EnumerationBudget tight;
    tight.max_sequences = 80;
    tight.max_permutations = 59;
    CHECK_NOTHROW(require_sequence_budget(3, tight));
    CHECK_THROWS_AS(require_sequence_budget(4, tight), BudgetError);
    CHECK_THROWS_AS(SequenceStream(4, tight), BudgetError);
    CHECK_THROWS_AS(all_sequences(4, tight), BudgetError);
    CHECK_THROWS_AS(require_permutation_budget({2, 3, 1}, tight), BudgetError);
    CHECK_THROWS_AS(PermutationStream({2, 3, 1}, tight), BudgetError);
    tight.max_permutations = 60;
    CHECK(distinct_permutations({2, 3, 1}, tight).size() == 60);
}

TEST_CASE("sampling is seeded and keeps the multiset")
{
    const RequestMultiset m{3, 4, 2};
    CHECK(sample_permutation(m, 7) == sample_permutation(m, 7));
    std::set<std::string> distinct;
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto s = sample_permutation(m, seed);
        CHECK(s.signature() == m);
        distinct.insert(s.str());
    }
    CHECK(distinct.size() > 40);
    CHECK(sample_permutation({0, 5, 0}, 1).str() == "BBBBB");
    CHECK(sample_permutation({0, 0, 0}, 1).empty());
}

TEST_CASE("sampling is uniform over arrangements")
{
    const RequestMultiset m{1, 1, 1};
    std::mt19937_64 rng(2024);
    std::map<std::string, int> counts;
    const int draws = 60'000;
    for (int i = 0; i < draws; ++i) ++counts[sample_permutation(m, rng).str()];
    REQUIRE(counts.size() == 6);
    // Expected 10000 each; 5 standard deviations is about 456.
    for (const auto& [s, c] : counts) {
        CAPTURE(s);
        CHECK(c > 9'500);
        CHECK(c < 10'500);
    }
}

TEST_CASE("runs")
{
    CHECK(count_runs(parse_sequence("")) == 0);
    CHECK(count_runs(parse_sequence("A")) == 1);
    CHECK(count_runs(parse_sequence("AABBBA")) == 3);
    CHECK(count_runs(parse_sequence("(BA)^4")) == 8);
}
