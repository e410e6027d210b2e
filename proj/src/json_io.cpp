#include "vramsey/json_io.hpp"

#include <algorithm>
#include <fstream>

namespace vramsey {

namespace {

int require_int(const json& j, const char* key, int lo, int hi) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw json_error(std::string("missing or non-integer field \"") + key + "\"");
    int v = j[key].get<int>();
    if (v < lo || v > hi)
        throw json_error(std::string("field \"") + key + "\" out of range");
    return v;
}

mask_t parse_member(const std::string& text, int n) {
    try {
        return parse_set(text, n).bits;
    } catch (const std::invalid_argument& e) {
        throw json_error(e.what());
    }
}

}  // namespace

json to_json(const domain& d) {
    json removed = json::array();
    for (const element_set& x : d.removed_sets()) removed.push_back(format_set(x));
    return json{{"n", d.n()}, {"removed", removed}};
}

domain domain_from_json(const json& j) {
    int n = require_int(j, "n", 0, max_ground);
    std::vector<mask_t> removed;
    if (j.contains("removed")) {
        if (!j["removed"].is_array()) throw json_error("\"removed\" must be an array");
        for (const auto& item : j["removed"]) {
            if (!item.is_string()) throw json_error("removed entries must be set texts");
            removed.push_back(parse_member(item.get<std::string>(), n));
        }
    }
    try {
        return domain(n, std::move(removed));
    } catch (const std::invalid_argument& e) {
        throw json_error(e.what());
    }
}

json to_json(const coloring& c) {
    json colors = json::object();
    for (mask_t m : c.dom.present_masks())
        colors[format_set(element_set(m, c.n()))] = c.at(m);
    json out{{"n", c.n()}, {"colors", colors}};
    if (c.k_declared) out["k"] = *c.k_declared;
    return out;
}

coloring coloring_from_json(const json& j) {
    int n = require_int(j, "n", 0, coloring_ground_limit);
    if (!j.contains("colors") || !j["colors"].is_object())
        throw json_error("missing \"colors\" object");
    std::vector<int> color_of(std::size_t{1} << n, 0);
    std::vector<bool> present(std::size_t{1} << n, false);
    for (auto it = j["colors"].begin(); it != j["colors"].end(); ++it) {
        mask_t m = parse_member(it.key(), n);
        if (!it.value().is_number_integer() || it.value().get<int>() < 1)
            throw json_error("colors must be integers >= 1");
        if (present[m]) throw json_error("duplicate element in \"colors\"");
        present[m] = true;
        color_of[m] = it.value().get<int>();
    }
    std::vector<mask_t> removed;
    for (mask_t m = 0; m < (mask_t{1} << n); ++m)
        if (!present[m]) removed.push_back(m);
    coloring c{domain(n, std::move(removed))};
    c.color_of = std::move(color_of);
    if (j.contains("k")) {
        int k = require_int(j, "k", 1, 1 << 20);
        for (mask_t m : c.dom.present_masks())
            if (c.at(m) > k) throw json_error("color exceeds declared k");
        c.k_declared = k;
    }
    return c;
}

json to_json(const witness& w) {
    json images = json::array();
    for (const element_set& x : w.map.images) images.push_back(format_set(x));
    json out{{"kind", w.kind == witness_kind::mono ? "mono" : "rainbow"}, {"images", images}};
    if (w.kind == witness_kind::mono) out["color"] = w.color;
    out["mode"] = w.map.mode == embed_mode::strong ? "strong" : "weak";
    return out;
}

json to_json(const cube_embedding& e) {
    json image = json::object();
    for (mask_t src = 0; src < (mask_t{1} << e.src_n); ++src)
        image[format_set(element_set(src, e.src_n))] =
            format_set(element_set(e.image[src], e.dst_n));
    return json{{"src_n", e.src_n}, {"dst_n", e.dst_n}, {"image", image}};
}

cube_embedding cube_embedding_from_json(const json& j) {
    cube_embedding e;
    // full-table serialization; keep the table enumerable
    e.src_n = require_int(j, "src_n", 0, 16);
    e.dst_n = require_int(j, "dst_n", 0, 16);
    if (!j.contains("image") || !j["image"].is_object())
        throw json_error("missing \"image\" object");
    e.image.assign(std::size_t{1} << e.src_n, 0);
    std::vector<bool> seen(std::size_t{1} << e.src_n, false);
    for (auto it = j["image"].begin(); it != j["image"].end(); ++it) {
        mask_t src = parse_member(it.key(), e.src_n);
        if (!it.value().is_string()) throw json_error("image values must be set texts");
        if (seen[src]) throw json_error("duplicate source element in \"image\"");
        seen[src] = true;
        e.image[src] = parse_member(it.value().get<std::string>(), e.dst_n);
    }
    if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
        throw json_error("image must cover every source element");
    return e;
}

json to_json(const search_config& cfg) {
    json out{{"workers", cfg.workers},
             {"orbit_pruning", cfg.orbit_pruning},
             {"symmetry_levels", cfg.symmetry_levels},
             {"frontier_levels", cfg.frontier_levels},
             {"seed", cfg.seed}};
    out["color_symmetry"] = cfg.color_symmetry == color_symmetry_mode::automatic
                                ? "auto"
                                : (cfg.color_symmetry == color_symmetry_mode::on ? "on" : "off");
    if (cfg.node_budget) out["node_budget"] = *cfg.node_budget;
    return out;
}

search_config search_config_from_json(const json& j) {
    search_config cfg;
    if (j.contains("workers")) cfg.workers = require_int(j, "workers", 1, 256);
    if (j.contains("symmetry_levels")) cfg.symmetry_levels = require_int(j, "symmetry_levels", 0, 7);
    if (j.contains("frontier_levels")) cfg.frontier_levels = require_int(j, "frontier_levels", 0, 7);
    if (j.contains("orbit_pruning")) {
        if (!j["orbit_pruning"].is_boolean()) throw json_error("orbit_pruning must be boolean");
        cfg.orbit_pruning = j["orbit_pruning"].get<bool>();
    }
    if (j.contains("node_budget")) {
        if (!j["node_budget"].is_number_unsigned() && !j["node_budget"].is_number_integer())
            throw json_error("node_budget must be a count");
        cfg.node_budget = j["node_budget"].get<std::uint64_t>();
    }
    if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("color_symmetry")) {
        std::string s = j["color_symmetry"].get<std::string>();
        if (s == "auto")
            cfg.color_symmetry = color_symmetry_mode::automatic;
        else if (s == "on")
            cfg.color_symmetry = color_symmetry_mode::on;
        else if (s == "off")
            cfg.color_symmetry = color_symmetry_mode::off;
        else
            throw json_error("color_symmetry must be auto|on|off");
    }
    return cfg;
}

json to_json(const search_certificate& cert) {
    json out;
    switch (cert.outcome) {
        case search_outcome::witness: out["outcome"] = "witness"; break;
        case search_outcome::exhausted: out["outcome"] = "exhausted"; break;
        case search_outcome::inconclusive: out["outcome"] = "inconclusive"; break;
    }
    if (cert.witness) out["witness"] = to_json(*cert.witness);
    out["symmetry"] = cert.symmetry;
    out["stats"] = json{{"nodes", cert.nodes}};
    // timing lives apart so the rest of the document is run-to-run identical
    out["meta"] = json{{"elapsed_ms", cert.elapsed_ms}};
    out["config"] = to_json(cert.config);
    return out;
}

json parse_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw json_error("malformed JSON");
    return j;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw json_error("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_json_text(text);
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw json_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace vramsey
