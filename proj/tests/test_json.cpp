#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vramsey/json_io.hpp"

using namespace vramsey;

TEST_CASE("domain round-trip") {
    domain d(4, {0b0011, 0b1111});
    json j = to_json(d);
    CHECK(j["n"] == 4);
    CHECK(j["removed"].size() == 2);
    CHECK(domain_from_json(j) == d);
    CHECK(domain_from_json(parse_json_text(R"({"n":3})")) == domain::full(3));
}

TEST_CASE("domain rejects malformed payloads") {
    CHECK_THROWS_AS(parse_json_text("{nope"), json_error);
    CHECK_THROWS_AS(domain_from_json(parse_json_text(R"({"removed":[]})")), json_error);
    CHECK_THROWS_AS(domain_from_json(parse_json_text(R"({"n":"three"})")), json_error);
    CHECK_THROWS_AS(domain_from_json(parse_json_text(R"({"n":3,"removed":["{4}"]})")),
                    json_error);
    CHECK_THROWS_AS(domain_from_json(parse_json_text(R"({"n":3,"removed":[4]})")), json_error);
    CHECK_THROWS_AS(domain_from_json(parse_json_text(R"({"n":-1})")), json_error);
    // duplicates collapse rather than error
    CHECK(domain_from_json(parse_json_text(R"({"n":3,"removed":["{1}","{1}"]})"))
              .removed_count() == 1);
}

TEST_CASE("coloring round-trip drops removed elements") {
    coloring c(domain(2, {0b10}));
    c.set(0b00, 2);
    c.set(0b01, 1);
    c.set(0b11, 4);
    c.k_declared = 4;
    json j = to_json(c);
    CHECK(j["colors"].size() == 3);
    CHECK_FALSE(j["colors"].contains("{2}"));
    coloring back = coloring_from_json(j);
    CHECK(back == c);
    CHECK(back.k_declared == c.k_declared);
}

TEST_CASE("coloring rejects bad colors") {
    CHECK_THROWS_AS(coloring_from_json(parse_json_text(R"({"n":1,"colors":{"{}":0}})")),
                    json_error);
    CHECK_THROWS_AS(coloring_from_json(parse_json_text(R"({"n":1,"colors":{"{}":2},"k":1})")),
                    json_error);
    CHECK_THROWS_AS(coloring_from_json(parse_json_text(R"({"n":1,"colors":[]})")), json_error);
}

TEST_CASE("witness serialization shape") {
    witness w;
    w.kind = witness_kind::mono;
    w.color = 2;
    w.map.mode = embed_mode::strong;
    w.map.images = {element_set(0, 2), element_set(1, 2), element_set(2, 2)};
    json j = to_json(w);
    CHECK(j["kind"] == "mono");
    CHECK(j["color"] == 2);
    CHECK(j["images"] == json::array({"{}", "{1}", "{2}"}));
}

TEST_CASE("cube embedding round-trip") {
    cube_embedding e;
    e.src_n = 1;
    e.dst_n = 2;
    e.image = {0b00, 0b10};
    json j = to_json(e);
    cube_embedding back = cube_embedding_from_json(j);
    CHECK(back.src_n == 1);
    CHECK(back.dst_n == 2);
    CHECK(back.image == e.image);
    CHECK_THROWS_AS(cube_embedding_from_json(parse_json_text(
                        R"({"src_n":1,"dst_n":2,"image":{"{}":"{}"}})")),
                    json_error);  // misses source "{1}"
}

TEST_CASE("certificate serialization carries config and stats") {
    search_config cfg;
    cfg.workers = 4;
    cfg.node_budget = 1000;
    cfg.color_symmetry = color_symmetry_mode::on;
    search_certificate cert;
    cert.outcome = search_outcome::exhausted;
    cert.nodes = 48;
    cert.symmetry = "none";
    cert.elapsed_ms = 1.5;
    cert.config = cfg;
    json j = to_json(cert);
    CHECK(j["outcome"] == "exhausted");
    CHECK(j["stats"]["nodes"] == 48);
    CHECK(j["meta"]["elapsed_ms"] == 1.5);  // timing quarantined from stats
    CHECK(j["config"]["workers"] == 4);
    CHECK(j["config"]["node_budget"] == 1000);
    CHECK(j["config"]["color_symmetry"] == "on");
    search_config back = search_config_from_json(j["config"]);
    CHECK(back.workers == 4);
    CHECK(back.node_budget == std::optional<std::uint64_t>{1000});
    CHECK(back.color_symmetry == color_symmetry_mode::on);
}

TEST_CASE("config echo is byte-stable") {
    search_config cfg;
    json a = to_json(cfg), b = to_json(cfg);
    CHECK(a.dump() == b.dump());
}
