#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "vramsey/checker.hpp"
#include "vramsey/constructions.hpp"

using namespace vramsey;

namespace {

std::vector<element_set> sets_of(std::initializer_list<mask_t> masks, int n) {
    std::vector<element_set> out;
    for (mask_t m : masks) out.emplace_back(m, n);
    return out;
}

// random chain: sorted distinct sets along a random maximal chain
std::vector<element_set> random_chain(std::mt19937_64& rng, int n, bool allow_empty_set) {
    std::vector<int> coords(n);
    for (int i = 0; i < n; ++i) coords[i] = i;
    std::shuffle(coords.begin(), coords.end(), rng);
    std::vector<mask_t> ladder{0};
    mask_t cur = 0;
    for (int c : coords) ladder.push_back(cur |= mask_t{1} << c);
    std::vector<element_set> chain;
    for (mask_t m : ladder)
        if (rng() & 1) chain.emplace_back(m, n);
    if (!allow_empty_set)
        std::erase_if(chain, [](const element_set& x) { return x.bits == 0; });
    return chain;
}

std::vector<element_set> random_antichain(std::mt19937_64& rng, int n) {
    std::vector<mask_t> masks(std::size_t{1} << n);
    for (std::size_t i = 0; i < masks.size(); ++i) masks[i] = static_cast<mask_t>(i);
    std::shuffle(masks.begin(), masks.end(), rng);
    std::vector<element_set> anti;
    std::size_t want = 1 + rng() % 6;
    for (mask_t m : masks) {
        element_set x(m, n);
        bool clash = false;
        for (const auto& y : anti) clash |= x.comparable(y);
        if (!clash) {
            anti.push_back(x);
            if (anti.size() == want) break;
        }
    }
    return anti;
}

std::vector<element_set> random_family(std::mt19937_64& rng, int n, std::size_t count) {
    count = std::min(count, std::size_t{1} << n);  // B_n cannot supply more
    std::set<mask_t> picked;
    while (picked.size() < count) picked.insert(static_cast<mask_t>(rng() & ((1u << n) - 1)));
    std::vector<element_set> fam;
    for (mask_t m : picked) fam.emplace_back(m, n);
    return fam;
}

int longest_chain_in(const std::vector<element_set>& fam) {
    std::vector<element_set> sorted = fam;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    std::vector<int> len(sorted.size(), 1);
    int best = sorted.empty() ? 0 : 1;
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (sorted[j].proper_subset_of(sorted[i])) {
                len[i] = std::max(len[i], len[j] + 1);
                best = std::max(best, len[i]);
            }
    return best;
}

}  // namespace

TEST_CASE("chain removal: fixed instances") {
    // smallest member {1} nonempty: image avoids coordinate 1
    auto e = chain_removal_embedding(2, sets_of({0b01, 0b11}, 2));
    CHECK(e.src_n == 1);
    CHECK(e.image == std::vector<mask_t>{0b00, 0b10});
    // {} in the chain: every image gains the free coordinate 3
    auto e2 = chain_removal_embedding(3, sets_of({0b000, 0b001, 0b011}, 3));
    CHECK(e2.src_n == 2);
    CHECK(e2.image == std::vector<mask_t>{0b100, 0b101, 0b110, 0b111});
    CHECK(valid_cube_embedding(e2, sets_of({0b000, 0b001, 0b011}, 3)));
    // both extremes present: rejected
    CHECK_THROWS_AS(chain_removal_embedding(2, sets_of({0b00, 0b11}, 2)),
                    std::invalid_argument);
    // not a chain: rejected
    CHECK_THROWS_AS(chain_removal_embedding(2, sets_of({0b01, 0b10}, 2)),
                    std::invalid_argument);
}

TEST_CASE("antichain removal: fixed instances") {
    // A = {{}}: everything gains the expansion coordinate
    auto e = antichain_removal_embedding(2, sets_of({0b00}, 2));
    CHECK(e.image == std::vector<mask_t>{0b10, 0b11});
    CHECK(valid_cube_embedding(e, sets_of({0b00}, 2)));
    // A = {{3}} with w = 3: nothing below contains it, identity
    auto e2 = antichain_removal_embedding(3, sets_of({0b100}, 3), 3);
    CHECK(e2.image == std::vector<mask_t>{0b000, 0b001, 0b010, 0b011});
    CHECK_THROWS_AS(antichain_removal_embedding(3, sets_of({0b001, 0b011}, 3)),
                    std::invalid_argument);
}

TEST_CASE("mirsky partition: fixed instances") {
    // a 5-chain: five singleton parts
    std::vector<element_set> chain;
    mask_t cur = 0;
    chain.emplace_back(cur, 5);
    for (int i = 0; i < 4; ++i) chain.emplace_back(cur |= mask_t{1} << i, 5);
    auto parts = mirsky_antichain_partition(chain);
    CHECK(parts.size() == 5);
    for (const auto& part : parts) CHECK(part.size() == 1);
    // an antichain: one part
    CHECK(mirsky_antichain_partition(sets_of({0b001, 0b010, 0b100}, 3)).size() == 1);
    // all of B_3: the four rank levels
    std::vector<element_set> all;
    for (mask_t m = 0; m < 8; ++m) all.emplace_back(m, 3);
    auto levels = mirsky_antichain_partition(all);
    REQUIRE(levels.size() == 4);
    CHECK(levels[0].size() == 1);
    CHECK(levels[1].size() == 3);
    CHECK(levels[2].size() == 3);
    CHECK(levels[3].size() == 1);
}

TEST_CASE("iterated removal: fixed instances") {
    auto e = iterated_removal_embedding(3, sets_of({0b001, 0b010, 0b100}, 3));
    CHECK(e.src_n == 2);
    CHECK(valid_cube_embedding(e, sets_of({0b001, 0b010, 0b100}, 3)));
    auto id = iterated_removal_embedding(2, {});
    CHECK(id.src_n == 2);
    CHECK(id.image == std::vector<mask_t>{0b00, 0b01, 0b10, 0b11});
    // maximal chain minus the top: h = 4 leaves B_0
    std::vector<element_set> chain = sets_of({0b0000, 0b0001, 0b0011, 0b0111}, 4);
    auto e0 = iterated_removal_embedding(4, chain);
    CHECK(e0.src_n == 0);
    CHECK(valid_cube_embedding(e0, chain));
    CHECK_THROWS_AS(iterated_removal_embedding(2, sets_of({0b00, 0b01, 0b11}, 2), true),
                    std::invalid_argument);  // h would exceed n
}

TEST_CASE("embedding property suite: 1000 random instances each") {
    std::mt19937_64 rng(20260813);
    std::uniform_int_distribution<int> pick_n(2, 10);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = pick_n(rng);
        auto chain = random_chain(rng, n, (trial % 2) == 0);
        // keep the precondition: drop the top if the empty set is present
        if (!chain.empty() && chain.front().bits == 0)
            std::erase_if(chain, [&](const element_set& x) {
                return x.bits == (mask_t{1} << n) - 1;
            });
        auto e = chain_removal_embedding(n, chain);
        CHECK(e.src_n == n - 1);
        CHECK(valid_cube_embedding(e, chain));
    }
    for (int trial = 0; trial < 1000; ++trial) {
        int n = pick_n(rng);
        auto anti = random_antichain(rng, n);
        int w = 1 + static_cast<int>(rng() % n);
        auto e = antichain_removal_embedding(n, anti, w);
        CHECK(e.src_n == n - 1);
        CHECK(valid_cube_embedding(e, anti));
    }
    int done = 0;
    while (done < 1000) {
        int n = pick_n(rng);
        auto fam = random_family(rng, n, 1 + rng() % 8);
        if (longest_chain_in(fam) > n) continue;
        auto e = iterated_removal_embedding(n, fam);
        CHECK(e.src_n == n - longest_chain_in(fam));
        CHECK(valid_cube_embedding(e, fam));
        ++done;
    }
}

TEST_CASE("mirsky property suite: part count equals longest chain") {
    std::mt19937_64 rng(97);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        auto fam = random_family(rng, n, 1 + rng() % 10);
        auto parts = mirsky_antichain_partition(fam);
        CHECK(static_cast<int>(parts.size()) == longest_chain_in(fam));
        std::size_t total = 0;
        for (const auto& part : parts) {
            CHECK(is_antichain(part));
            total += part.size();
        }
        CHECK(total == fam.size());
    }
}

TEST_CASE("layered coloring: band structure and goodness") {
    coloring c = layered_coloring(2, 2, 1);  // B_4, V(m,2) bands
    CHECK(c.n() == 4);
    CHECK(c.at(0b0000) == 1);
    CHECK(c.at(0b0001) == 1);
    CHECK(c.at(0b0011) == 2);
    CHECK(c.at(0b0111) == 2);
    CHECK(c.at(0b1111) == 1);  // the top takes top_color
    for (int top = 1; top <= 2; ++top) {
        coloring cc = layered_coloring(2, 2, top);
        CHECK(is_good(cc, parse_targets("V(1,2),V(1,2)")));
        CHECK(is_good(cc, parse_targets("V(2,2),V(2,2)")));
        // each class spans at most 2 sizes aside from the top
        for (int color = 1; color <= 2; ++color) {
            std::set<int> sizes;
            for (mask_t m = 0; m < 15; ++m)
                if (cc.at(m) == color) sizes.insert(element_set(m, 4).card());
            CHECK(sizes.size() <= 2);
        }
    }
    CHECK(is_good(layered_coloring(1, 2, 2), parse_targets("V(1,1),V(1,1)")));
    CHECK(is_good(layered_coloring(1, 3, 3), parse_targets("V(1,1),V(1,1),V(1,1)")));
}

TEST_CASE("mixed coloring: size threshold and goodness") {
    coloring c = mixed_coloring(2, 2);
    CHECK(c.n() == 4);
    CHECK(c.at(0b0001) == 1);
    CHECK(c.at(0b0011) == 2);
    CHECK(is_good(c, parse_targets("V(2,2),V(2,2)")));
    coloring c12 = mixed_coloring(1, 2);
    CHECK(c12.n() == 3);
    CHECK(c12.at(0) == 1);
    for (mask_t m = 1; m < 8; ++m) CHECK(c12.at(m) == 2);
    CHECK(is_good(c12, parse_targets("V(1,1),V(2,2)")));
    CHECK(is_good(mixed_coloring(1, 1), parse_targets("V(1,1),V(1,1)")));
}

TEST_CASE("single removal coloring: all proper subsets stay good") {
    for (int k = 2; k <= 4; ++k) {
        int n = k + 1;
        target_list targets(k, target{poset::make_v(1, 1), embed_mode::strong});
        for (mask_t s = 0; s < (mask_t{1} << n) - 1; ++s) {
            coloring c = single_removal_v11_coloring(k, element_set(s, n));
            CHECK(c.dom.size() == (std::size_t{1} << n) - 1);
            CHECK_FALSE(c.dom.present(s));
            CHECK(c.max_color() <= k);
            CHECK(is_good(c, targets));
        }
        CHECK_THROWS_AS(single_removal_v11_coloring(
                            k, element_set((mask_t{1} << n) - 1, n)),
                        std::invalid_argument);
    }
}

TEST_CASE("capped band coloring: class k is the two extremes") {
    coloring c = capped_band_coloring(2, 3);
    CHECK(c.n() == 5);
    CHECK(c.at(0) == 3);
    CHECK(c.at(0b11111) == 3);
    CHECK(c.at(0b00001) == 1);
    CHECK(c.at(0b00011) == 1);
    CHECK(c.at(0b00111) == 2);
    CHECK(c.at(0b01111) == 2);
    CHECK(is_good_rainbow(c, poset::make_v(1, 2), poset::antichain(3)));
    coloring c22 = capped_band_coloring(2, 2);
    CHECK(c22.n() == 3);
    CHECK(is_good_rainbow(c22, poset::make_v(1, 2), poset::antichain(2)));
}

TEST_CASE("extremes coloring instances") {
    coloring c = extremes_coloring(poset::make_v(1, 2));  // dim2 3 + m 1 - 1 = B_3
    CHECK(c.n() == 3);
    CHECK(c.at(0) == 1);
    CHECK(c.at(0b111) == 2);
    CHECK(c.at(0b001) == 3);
    CHECK(is_good_rainbow(c, poset::make_v(1, 2), poset::antichain(2)));
    coloring cb = extremes_coloring(poset::cube(2));  // dim2 2 + m 2 - 1 = B_3
    CHECK(cb.n() == 3);
    CHECK(is_good_rainbow(cb, poset::cube(2), poset::antichain(2)));
    coloring cc = extremes_coloring(poset::chain(3));  // dim2 2 + m 2 - 1 = B_3
    CHECK(cc.n() == 3);
    CHECK(is_good_rainbow(cc, poset::chain(3), poset::antichain(2)));
}
