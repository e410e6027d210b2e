#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vramsey/checker.hpp"

using namespace vramsey;

namespace {

coloring from_assignment(const domain& d, const std::vector<int>& colors) {
    coloring c(d);
    auto order = d.present_masks();
    REQUIRE(order.size() == colors.size());
    for (std::size_t i = 0; i < order.size(); ++i) c.set(order[i], colors[i]);
    return c;
}

// generic-embedder answer to "does color class hold a strong V(m,n)?"
bool generic_has_v(const coloring& c, int m, int n, int color) {
    std::vector<mask_t> elems;
    for (mask_t mm : c.dom.present_masks())
        if (c.at(mm) == color) elems.push_back(mm);
    return embed_in_elements(poset::make_v(m, n), c.n(), elems, embed_mode::strong)
        .has_value();
}

}  // namespace

TEST_CASE("parse_targets") {
    auto t = parse_targets("V(1,1),V(2,2)");
    REQUIRE(t.size() == 2);
    CHECK(isomorphic(t[0].pattern, poset::make_v(1, 1)));
    CHECK(isomorphic(t[1].pattern, poset::make_v(2, 2)));
    CHECK(t[0].mode == embed_mode::strong);
    auto w = parse_targets("B(2) , C(3)", embed_mode::weak);
    REQUIRE(w.size() == 2);
    CHECK(w[1].mode == embed_mode::weak);
    CHECK_THROWS_AS(parse_targets("V(1,1),,V(1,1)"), pattern_error);
    CHECK_THROWS_AS(parse_targets(""), pattern_error);
}

TEST_CASE("find_monochromatic reports the least color with a copy") {
    // B_2 all one color: V(1,1) sits in color 1
    coloring c(domain::full(2), 1);
    auto w = find_monochromatic(c, parse_targets("V(1,1),V(1,1)"));
    REQUIRE(w);
    CHECK(w->kind == witness_kind::mono);
    CHECK(w->color == 1);
    REQUIRE(w->map.images.size() == 3);
    // reported images really are monochromatic and really embed
    for (const auto& img : w->map.images) CHECK(c.at(img.bits) == 1);
    CHECK(valid_embedding(poset::make_v(1, 1), c.dom, w->map));
    // layered coloring of B_2 defeats both classes
    coloring good = from_assignment(domain::full(2), {1, 2, 2, 2});
    CHECK_FALSE(find_monochromatic(good, parse_targets("V(1,1),V(1,1)")));
    CHECK(is_good(good, parse_targets("V(1,1),V(1,1)")));
}

TEST_CASE("colors beyond the target list never match") {
    coloring c(domain::full(2), 3);  // all color 3, only two targets
    CHECK(is_good(c, parse_targets("V(1,1),V(1,1)")));
}

TEST_CASE("weak targets catch weak copies") {
    // B_2 one color: weak V(1,2) exists (chain bent into an arm) though no
    // strong one does
    coloring c(domain::full(2), 1);
    CHECK(is_good(c, parse_targets("V(1,2)")));
    CHECK_FALSE(is_good(c, parse_targets("V(1,2)", embed_mode::weak)));
}

TEST_CASE("find_rainbow and is_good_rainbow") {
    // B_2 with all four elements distinct colors: {1},{2} form a rainbow A(2)
    coloring c = from_assignment(domain::full(2), {1, 2, 3, 4});
    auto w = find_rainbow(c, poset::antichain(2));
    REQUIRE(w);
    CHECK(w->kind == witness_kind::rainbow);
    REQUIRE(w->map.images.size() == 2);
    CHECK(c.at(w->map.images[0].bits) != c.at(w->map.images[1].bits));
    CHECK_FALSE(c.at(w->map.images[0].bits) == 0);
    // chain domain: no rainbow antichain regardless of colors
    coloring chain = from_assignment(domain(2, {0b10}), {1, 2, 3});
    CHECK_FALSE(find_rainbow(chain, poset::antichain(2)));
}

TEST_CASE("is_good_rainbow verdicts on fixed colorings") {
    coloring chain = from_assignment(domain(2, {0b10}), {1, 2, 3});
    CHECK(is_good_rainbow(chain, poset::chain(3), poset::antichain(2)));
    coloring mono = from_assignment(domain(2, {0b10}), {1, 1, 1});
    CHECK_FALSE(is_good_rainbow(mono, poset::chain(3), poset::antichain(2)));
    coloring two = from_assignment(domain::full(2), {1, 2, 2, 2});
    // {1},{2} same color, no rainbow A(2); classes hold no V(1,1)
    CHECK(is_good_rainbow(two, poset::make_v(1, 1), poset::antichain(2)));
    coloring rb = from_assignment(domain::full(2), {1, 1, 2, 1});
    CHECK_FALSE(is_good_rainbow(rb, poset::make_v(1, 1), poset::antichain(2)));
}

TEST_CASE("fast V detector equals the generic embedder everywhere") {
    std::vector<std::pair<int, int>> arm_shapes{{1, 1}, {1, 2}, {2, 2}};
    // all 256 two-colorings of B_3
    domain b3 = domain::full(3);
    for (int word = 0; word < 256; ++word) {
        std::vector<int> colors(8);
        for (int i = 0; i < 8; ++i) colors[i] = 1 + ((word >> i) & 1);
        coloring c = from_assignment(b3, colors);
        for (auto [m, n] : arm_shapes)
            for (int color = 1; color <= 2; ++color) {
                bool fast = find_monochromatic_v_fast(c, m, n, color).has_value();
                CHECK(fast == generic_has_v(c, m, n, color));
            }
    }
    // 10^4 seeded random 3-colorings of B_4
    std::mt19937_64 rng(424242);
    domain b4 = domain::full(4);
    for (int trial = 0; trial < 10000; ++trial) {
        std::vector<int> colors(16);
        for (auto& v : colors) v = 1 + static_cast<int>(rng() % 3);
        coloring c = from_assignment(b4, colors);
        int color = 1 + static_cast<int>(rng() % 3);
        auto [m, n] = arm_shapes[rng() % arm_shapes.size()];
        bool fast = find_monochromatic_v_fast(c, m, n, color).has_value();
        CHECK(fast == generic_has_v(c, m, n, color));
    }
}

TEST_CASE("fast V witnesses verify") {
    std::mt19937_64 rng(7);
    domain b4 = domain::full(4);
    int verified = 0;
    while (verified < 200) {
        std::vector<int> colors(16);
        for (auto& v : colors) v = 1 + static_cast<int>(rng() % 2);
        coloring c = from_assignment(b4, colors);
        auto w = find_monochromatic_v_fast(c, 1, 2, 1);
        if (!w) continue;
        CHECK(valid_embedding(poset::make_v(1, 2), c.dom, w->map));
        for (const auto& img : w->map.images) CHECK(c.at(img.bits) == 1);
        ++verified;
    }
}

TEST_CASE("family word detector anchors") {
    auto t = lattice_tables::build(2);
    // all of B_2 holds a V(1,1) but no V(1,2): the unsound naive reading
    // of "two incomparable up-chains" would say otherwise
    CHECK(family_has_v(0b1111, 1, 1, t));
    CHECK_FALSE(family_has_v(0b1111, 1, 2, t));
    auto t3 = lattice_tables::build(3);
    CHECK(family_has_v(0xFF, 1, 2, t3));
    CHECK(family_has_v(0xFF, 2, 2, t3));
    // family {∅, {1}, {1,2}}: a chain, no V at all
    std::uint64_t chain = (1ull << 0b000) | (1ull << 0b001) | (1ull << 0b011);
    CHECK_FALSE(family_has_v(chain, 1, 1, t3));
}
