#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "vramsey/search.hpp"

using namespace vramsey;

namespace {

search_config plain_config() {
    search_config cfg;
    cfg.orbit_pruning = false;
    cfg.color_symmetry = color_symmetry_mode::off;
    return cfg;
}

std::vector<search_config> config_grid() {
    std::vector<search_config> grid;
    for (bool orbit : {false, true})
        for (auto sym : {color_symmetry_mode::off, color_symmetry_mode::automatic})
            for (int workers : {1, 3}) {
                search_config cfg;
                cfg.orbit_pruning = orbit;
                cfg.color_symmetry = sym;
                cfg.workers = workers;
                grid.push_back(cfg);
            }
    return grid;
}

// partition-coloring reference: every restricted-growth assignment, checked
// whole at the leaves
bool reference_partition_good_exists(const domain& d, const poset& p, const poset& q) {
    auto order = d.present_masks();
    std::vector<int> assign(order.size(), 0);
    std::function<bool(std::size_t, int)> rec = [&](std::size_t i, int used) {
        if (i == order.size()) {
            coloring c(d);
            for (std::size_t j = 0; j < order.size(); ++j) c.set(order[j], assign[j]);
            return is_good_rainbow(c, p, q);
        }
        for (int color = 1; color <= used + 1; ++color) {
            assign[i] = color;
            if (rec(i + 1, std::max(used, color))) return true;
        }
        return false;
    };
    return rec(0, 0);
}

}  // namespace

TEST_CASE("reduced search matches plain enumeration outcome") {
    auto v11 = parse_targets("V(1,1),V(1,1)");
    // every instance of the smallest theorem: B_0..B_3
    for (int n = 0; n <= 3; ++n) {
        domain d = domain::full(n);
        auto ref = reference_find_good_coloring(d, 2, v11);
        for (const auto& cfg : config_grid()) {
            auto got = find_good_coloring(d, 2, v11, cfg);
            CHECK(got.outcome == ref.outcome);
        }
    }
    // assorted sub-domains of B_3
    for (mask_t removed = 0; removed < 8; ++removed) {
        domain d = domain(3, {removed});
        auto ref = reference_find_good_coloring(d, 2, v11);
        auto got = find_good_coloring(d, 2, v11);
        CHECK(got.outcome == ref.outcome);
    }
    // B_4 with 2 colors, mixed target lists
    for (const char* targets : {"V(1,1),V(1,1)", "V(1,2),V(1,2)", "V(1,1),V(2,2)",
                                "V(2,2),V(2,2)", "C(3),C(3)"}) {
        auto t = parse_targets(targets);
        auto ref = reference_find_good_coloring(domain::full(4), 2, t);
        for (const auto& cfg : config_grid()) {
            auto got = find_good_coloring(domain::full(4), 2, t, cfg);
            CHECK(got.outcome == ref.outcome);
        }
    }
}

TEST_CASE("witnesses always pass the checker") {
    auto t = parse_targets("V(1,1),V(2,2)");
    auto cert = find_good_coloring(domain::full(3), 2, t);
    REQUIRE(cert.outcome == search_outcome::witness);
    REQUIRE(cert.witness);
    CHECK(is_good(*cert.witness, t));
    CHECK(cert.witness->total());
}

TEST_CASE("deterministic across worker counts") {
    auto t12 = parse_targets("V(1,2),V(1,2)");
    // exhausted instance: node counts agree exactly
    search_config one;
    one.workers = 1;
    search_config four;
    four.workers = 4;
    auto a = find_good_coloring(domain::full(4), 2, t12, one);
    auto b = find_good_coloring(domain::full(4), 2, t12, four);
    CHECK(a.outcome == b.outcome);
    CHECK(a.nodes == b.nodes);
    // witness instance: same witness, same count
    auto t22 = parse_targets("V(2,2),V(2,2)");
    auto wa = find_good_coloring(domain::full(4), 2, t22, one);
    auto wb = find_good_coloring(domain::full(4), 2, t22, four);
    REQUIRE(wa.outcome == search_outcome::witness);
    REQUIRE(wb.outcome == search_outcome::witness);
    CHECK(*wa.witness == *wb.witness);
    CHECK(wa.nodes == wb.nodes);
    // partition semantics too
    auto pa = find_good_partition_coloring(domain::full(4), poset::make_v(1, 2),
                                           poset::antichain(2), one);
    auto pb = find_good_partition_coloring(domain::full(4), poset::make_v(1, 2),
                                           poset::antichain(2), four);
    CHECK(pa.outcome == pb.outcome);
    CHECK(pa.nodes == pb.nodes);
}

TEST_CASE("budget yields inconclusive, never a wrong claim") {
    search_config tight;
    tight.node_budget = 4;
    auto cert = find_good_coloring(domain::full(4), 2, parse_targets("V(1,2),V(1,2)"), tight);
    CHECK(cert.outcome == search_outcome::inconclusive);
    CHECK_FALSE(cert.witness);
    CHECK_THROWS_AS(is_ramsey_domain(domain::full(4), parse_targets("V(1,2),V(1,2)"), tight),
                    budget_error);
}

TEST_CASE("partition search matches the partition reference") {
    struct instance {
        int n;
        poset p, q;
    };
    std::vector<instance> instances{
        {1, poset::chain(2), poset::antichain(2)},
        {2, poset::make_v(1, 1), poset::antichain(2)},
        {3, poset::make_v(1, 2), poset::antichain(2)},
        {3, poset::make_v(1, 1), poset::antichain(2)},
        {3, poset::make_v(1, 1), poset::antichain(3)},
        {3, poset::chain(3), poset::antichain(2)},
    };
    for (const auto& inst : instances) {
        domain d = domain::full(inst.n);
        bool expect = reference_partition_good_exists(d, inst.p, inst.q);
        auto cert = find_good_partition_coloring(d, inst.p, inst.q);
        CHECK((cert.outcome == search_outcome::witness) == expect);
        if (cert.outcome == search_outcome::witness)
            CHECK(is_good_rainbow(*cert.witness, inst.p, inst.q));
    }
    CHECK_THROWS_AS(find_good_partition_coloring(domain::full(2), poset::make_v(1, 1),
                                                 poset::chain(2)),
                    std::invalid_argument);
}

TEST_CASE("partition search fixed verdicts") {
    // a 2-element chain: color differently, no mono C(2), no rainbow A(2)
    auto c1 = find_good_partition_coloring(domain::full(1), poset::chain(2),
                                           poset::antichain(2));
    CHECK(c1.outcome == search_outcome::witness);
    auto c3 = find_good_partition_coloring(domain::full(3), poset::make_v(1, 2),
                                           poset::antichain(2));
    CHECK(c3.outcome == search_outcome::witness);
    auto c4 = find_good_partition_coloring(domain::full(4), poset::make_v(1, 2),
                                           poset::antichain(2));
    CHECK(c4.outcome == search_outcome::exhausted);
}

TEST_CASE("ramsey values: frozen theorem instances") {
    CHECK(compute_ramsey(parse_targets("V(1,1),V(1,1)"), 6).value == 3);
    CHECK(compute_ramsey(parse_targets("V(1,1),V(2,2)"), 6).value == 4);
    CHECK(compute_ramsey(parse_targets("V(1,2),V(1,2)", embed_mode::weak), 6).value == 4);
    CHECK(compute_rainbow_ramsey(poset::make_v(1, 1), poset::antichain(2), 6).value == 3);
    search_config tight;
    tight.node_budget = 2;
    CHECK_THROWS_AS(compute_ramsey(parse_targets("V(1,2),V(1,2)"), 6, tight), budget_error);
    CHECK_THROWS_AS(compute_ramsey(parse_targets("V(1,1),V(1,1)"), 1), undecided_error);
}

TEST_CASE("ramsey certificates carry both directions") {
    auto r = compute_ramsey(parse_targets("V(1,1),V(1,1)"), 6);
    REQUIRE(r.lower);
    CHECK(r.lower->outcome == search_outcome::witness);
    CHECK(r.lower->witness->n() == 2);
    CHECK(is_good(*r.lower->witness, parse_targets("V(1,1),V(1,1)")));
    CHECK(r.upper.outcome == search_outcome::exhausted);
    // the constructed layered coloring is the published witness
    CHECK(*r.lower->witness == layered_coloring(1, 2, 2));
}

TEST_CASE("is_ramsey_domain spec anchors") {
    auto v11 = parse_targets("V(1,1),V(1,1)");
    CHECK(is_ramsey_domain(domain(3, {0b111}), v11));
    CHECK_FALSE(is_ramsey_domain(domain(3, {0b000}), v11));
    auto mixed = parse_targets("V(1,1),V(2,2)");
    CHECK_FALSE(is_ramsey_domain(domain(4, {0b0001, 0b0010, 0b1111}), mixed));
    CHECK(is_ramsey_domain(domain(4, {0b0011, 0b0101, 0b1111}), mixed));
}

TEST_CASE("minimal ramsey decisions") {
    auto v11 = parse_targets("V(1,1),V(1,1)");
    CHECK(is_minimal_ramsey(domain(3, {0b111}), v11));
    CHECK_FALSE(is_minimal_ramsey(domain::full(3), v11));
    auto mixed = parse_targets("V(1,1),V(2,2)");
    CHECK(is_minimal_ramsey(domain(4, {0b0011, 0b1100, 0b1111}), mixed));
}

TEST_CASE("enumerate_minimal_ramsey at n = 3") {
    auto found = enumerate_minimal_ramsey(3, parse_targets("V(1,1),V(1,1)"));
    REQUIRE(found.size() == 1);
    CHECK(found[0] == domain(3, {0b111}));
}

TEST_CASE("vmn lemma brute force and search") {
    CHECK(verify_vmn_lemma(1, 1));
    CHECK(verify_vmn_lemma(1, 2));
    CHECK(verify_vmn_lemma(2, 1));
    CHECK(verify_vmn_lemma(2, 2));
    CHECK_THROWS_AS(verify_vmn_lemma(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(verify_vmn_lemma(3, 3), std::invalid_argument);
}

TEST_CASE("reference searcher sanity") {
    auto v11 = parse_targets("V(1,1),V(1,1)");
    CHECK(reference_find_good_coloring(domain::full(2), 2, v11).outcome ==
          search_outcome::witness);
    auto ref = reference_find_good_coloring(domain::full(3), 2, v11);
    CHECK(ref.outcome == search_outcome::exhausted);
    CHECK(ref.nodes == 256);  // all 2^8 colorings
}
