#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "macpoly/combinat.hpp"

using namespace macpoly;

namespace {

// number of pairs k < l with arr[k] < arr[l]; for a descending source this
// is the minimal number of adjacent swaps
int inversions_from_sorted(const Composition& arr) {
    int c = 0;
    for (size_t k = 0; k < arr.size(); ++k)
        for (size_t l = k + 1; l < arr.size(); ++l)
            if (arr[k] < arr[l]) ++c;
    return c;
}

void check_replay(const Partition& source, const CosetElement& e) {
    Composition cur = source;
    for (auto it = e.word.rbegin(); it != e.word.rend(); ++it) {
        const size_t i = static_cast<size_t>(*it - 1);
        REQUIRE(i + 1 < cur.size());
        CHECK(cur[i] > cur[i + 1]);  // strict descent
        std::swap(cur[i], cur[i + 1]);
    }
    CHECK(cur == e.arrangement);
    CHECK(static_cast<int>(e.word.size()) == inversions_from_sorted(e.arrangement));
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK(is_partition({3, 1, 0}));
    CHECK(is_partition({2, 2, 2}));
    CHECK_FALSE(is_partition({1, 2}));
    CHECK_FALSE(is_partition({1, -1}));
    CHECK_THROWS_AS(check_partition({1, 2}), std::invalid_argument);
}

TEST_CASE("conjugate") {
    CHECK(conjugate({3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate({0, 0, 0}) == Partition{});
    CHECK(conjugate({3, 2, 0}) == Partition{2, 2, 1});
    CHECK(conjugate(conjugate({3, 1})) == Partition{3, 1});
    CHECK(conjugate(conjugate({4, 4, 3, 3, 3, 2, 0, 0, 0})) ==
          Partition{4, 4, 3, 3, 3, 2});
    CHECK(conjugate_part({3, 2, 0}, 1) == 2);
    CHECK(conjugate_part({3, 2, 0}, 3) == 1);
    CHECK(conjugate_part({3, 2, 0}, 4) == 0);
}

TEST_CASE("truncate zeroes small parts") {
    Partition la{3, 3, 2, 1, 1, 1, 0};
    CHECK(truncate(la, 0) == la);
    CHECK(truncate(la, 1) == Partition{3, 3, 2, 0, 0, 0, 0});
    CHECK(truncate(la, 2) == Partition{3, 3, 0, 0, 0, 0, 0});
    CHECK(truncate(la, 3) == Partition(7, 0));
    CHECK_THROWS_AS(truncate(la, 4), std::invalid_argument);
    CHECK_THROWS_AS(truncate(la, -1), std::invalid_argument);
}

TEST_CASE("part statistics on the worked pair") {
    Composition la{4, 4, 3, 3, 3, 2, 0, 0, 0};
    Composition mu{0, 3, 0, 0, 3, 0, 4, 3, 4};
    CHECK(multiplicity(mu, 3) == 3);
    CHECK(multiplicity(mu, 0) == 4);
    CHECK(multiplicity(mu, 7) == 0);
    CHECK(a_stat(la, mu, 1) == 0);
    CHECK(a_stat(la, mu, 2) == 0);
    CHECK(a_stat(la, mu, 3) == 1);
    CHECK(a_stat(la, mu, 4) == 2);
    CHECK(b_stat(la, mu, 1) == 0);
    CHECK(b_stat(la, mu, 2) == 1);
    CHECK(b_stat(la, mu, 3) == 2);
    CHECK(b_stat(la, mu, 4) == 2);
    CHECK_THROWS_AS(a_stat({1, 2}, {1}, 1), std::invalid_argument);
    CHECK_THROWS_AS(b_stat({1, 2}, {1}, 1), std::invalid_argument);
}

TEST_CASE("sorting and weight") {
    CHECK(sort_desc({0, 3, 0, 4}) == Partition{4, 3, 0, 0});
    CHECK(sort_desc({3, 1, 0}) == Partition{3, 1, 0});
    CHECK(sort_desc({2, 2}) == Partition{2, 2});
    CHECK(weight({0, 3, 0, 4}) == 7);
}

TEST_CASE("dominance order") {
    CHECK(dominance_less({2, 2}, {3, 1}));
    CHECK_FALSE(dominance_less({3, 1}, {2, 2}));
    CHECK_FALSE(dominance_less({3, 1}, {3, 1}));
    CHECK(dominance_less({1, 1, 1, 1}, {4, 0, 0, 0}));
    CHECK_FALSE(dominance_less({3, 1, 1}, {2, 2, 1}));
    CHECK_FALSE(dominance_less({2, 2, 1}, {3, 1, 1}) ==
                dominance_less({3, 1, 1}, {2, 2, 1}));
    CHECK_THROWS_AS(dominance_less({2, 1}, {2, 2}), std::invalid_argument);
}

TEST_CASE("coset representatives") {
    auto reps220 = coset_reps({2, 2, 0, 0});
    CHECK(reps220.size() == 6);
    CHECK(coset_count({2, 2, 0, 0}) == 6);

    auto reps3 = coset_reps({3, 0, 0});
    REQUIRE(reps3.size() == 3);
    CHECK(reps3[0].arrangement == Composition{3, 0, 0});
    CHECK(reps3[0].word.empty());
    CHECK(reps3[1].arrangement == Composition{0, 3, 0});
    CHECK(reps3[1].word == std::vector<int>{1});
    CHECK(reps3[2].arrangement == Composition{0, 0, 3});
    CHECK(reps3[2].word == std::vector<int>{2, 1});

    CHECK(coset_reps({2, 2, 2}).size() == 1);
    CHECK(coset_reps({2, 2, 2})[0].word.empty());
}

TEST_CASE("coset words replay correctly") {
    for (const Partition& la :
         {Partition{3, 1, 0}, Partition{2, 2, 1, 0}, Partition{3, 2, 1},
          Partition{1, 1, 0, 0}, Partition{4, 2, 2, 1, 0}}) {
        auto reps = coset_reps(la);
        CHECK(mpz_class(static_cast<long>(reps.size())) == coset_count(la));
        for (const auto& e : reps) {
            check_replay(la, e);
            CHECK(sort_desc(e.arrangement) == la);
        }
        // arrangements in strictly descending lexicographic order
        for (size_t k = 0; k + 1 < reps.size(); ++k)
            CHECK(reps[k].arrangement > reps[k + 1].arrangement);
    }
}

TEST_CASE("alternative reduced words") {
    // braid-distinct pair for the full reversal of (2,1,0)
    CHECK(coset_word({2, 1, 0}, {0, 1, 2}) == std::vector<int>{2, 1, 2});
    CHECK(coset_word_alt({2, 1, 0}, {0, 1, 2}) == std::vector<int>{1, 2, 1});
    for (const Partition& la : {Partition{3, 1, 0}, Partition{2, 1, 1, 0}}) {
        for (const auto& e : coset_reps(la)) {
            CosetElement alt{e.arrangement, coset_word_alt(la, e.arrangement)};
            check_replay(la, alt);
        }
    }
    CHECK_THROWS_AS(coset_word({2, 1, 0}, {3, 0, 0}), std::invalid_argument);
}

TEST_CASE("z factor") {
    CHECK(z_factor({1, 1}) == 2);
    CHECK(z_factor({2, 1}) == 2);
    CHECK(z_factor({2, 2, 1, 1}) == 16);
    CHECK(z_factor({3, 0, 0}) == 3);
    CHECK(z_factor({0, 0}) == 1);
}

TEST_CASE("partition enumeration") {
    auto p4 = enumerate_partitions(4, 4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4, 0, 0, 0});
    CHECK(p4[1] == Partition{3, 1, 0, 0});
    CHECK(p4[2] == Partition{2, 2, 0, 0});
    CHECK(p4[3] == Partition{2, 1, 1, 0});
    CHECK(p4[4] == Partition{1, 1, 1, 1});
    CHECK(enumerate_partitions(4, 2).size() == 3);
    CHECK(enumerate_partitions(0, 3) == std::vector<Partition>{{0, 0, 0}});
    CHECK(enumerate_partitions(5, 4).size() == 6);
}

TEST_CASE("composition enumeration") {
    auto cs = enumerate_compositions(3, 3);
    CHECK(cs.size() == 64);
    CHECK(cs.front() == Composition{0, 0, 0});
    CHECK(cs.back() == Composition{3, 3, 3});
    CHECK(enumerate_compositions(2, 1).size() == 4);
}

TEST_CASE("parsing") {
    CHECK(parse_composition("3,1,0") == Composition{3, 1, 0});
    CHECK(parse_composition("7") == Composition{7});
    CHECK_THROWS_AS(parse_composition("3,x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition("3,-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_composition(""), std::invalid_argument);
    CHECK(composition_str({3, 1, 0}) == "(3,1,0)");
}
