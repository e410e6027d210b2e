// Command-line workbench: every library operation behind a scriptable
// surface with JSON document emission and independent re-verification.
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vramsey/checker.hpp"
#include "vramsey/constructions.hpp"
#include "vramsey/json_io.hpp"
#include "vramsey/lattice.hpp"
#include "vramsey/poset.hpp"
#include "vramsey/render.hpp"
#include "vramsey/search.hpp"

using namespace vramsey;

namespace {

// exit codes fixed by the surface contract
constexpr int exit_ok = 0;           // requested claim fully certified
constexpr int exit_uncertified = 1;  // ran fine, claim not certified
constexpr int exit_pattern = 2;      // unknown pattern literal
constexpr int exit_json = 3;         // malformed JSON
constexpr int exit_budget = 4;       // budget or undecidable at desk scale

struct run_options {
    int workers = 0;  // 0 = resolve from the environment
    std::optional<std::uint64_t> node_budget;
    std::uint64_t seed = 0;
    std::string output;  // empty = no document, "-" = stdout
};

void add_run_flags(CLI::App* cmd, run_options& opt) {
    cmd->add_option("--workers", opt.workers,
                    "search workers (default: VRAMSEY_WORKERS or 1)");
    cmd->add_option("--node-budget", opt.node_budget,
                    "give up inconclusively after this many search nodes");
    cmd->add_option("--seed", opt.seed, "seed echoed into certificates");
    cmd->add_option("--output,-o", opt.output,
                    "write the JSON document here ('-' for stdout)");
}

search_config make_config(const run_options& opt) {
    search_config cfg;
    int workers = opt.workers;
    if (workers <= 0) {
        if (const char* env = std::getenv("VRAMSEY_WORKERS")) workers = std::atoi(env);
        if (workers <= 0) workers = 1;
    }
    cfg.workers = workers;
    cfg.node_budget = opt.node_budget;
    cfg.seed = opt.seed;
    return cfg;
}

void emit(const json& doc, const std::string& output) {
    if (output.empty()) return;
    if (output == "-")
        std::cout << doc.dump(2) << "\n";
    else
        save_json_file(output, doc);
}

void emit_text(const std::string& text, const std::string& output) {
    if (output.empty() || output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output);
    if (!out) throw std::runtime_error("cannot write " + output);
    out << text;
}

embed_mode mode_of(bool weak) { return weak ? embed_mode::weak : embed_mode::strong; }
const char* mode_name(bool weak) { return weak ? "weak" : "strong"; }

// key=value parameter list for construct coloring
std::vector<std::pair<std::string, std::string>> parse_params(
    const std::vector<std::string>& raw) {
    std::vector<std::pair<std::string, std::string>> kv;
    for (const std::string& item : raw) {
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw std::invalid_argument("--params entries look like key=value, got \"" +
                                        item + "\"");
        kv.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return kv;
}

std::string param(const std::vector<std::pair<std::string, std::string>>& kv,
                  const std::string& key, const std::string& fallback = "") {
    for (const auto& [k, v] : kv)
        if (k == key) return v;
    if (fallback.empty())
        throw std::invalid_argument("construct coloring: missing parameter \"" + key + "\"");
    return fallback;
}

int param_int(const std::vector<std::pair<std::string, std::string>>& kv,
              const std::string& key, const std::string& fallback = "") {
    return std::stoi(param(kv, key, fallback));
}

std::vector<element_set> family_of_json(const json& j, int n) {
    if (!j.is_array()) throw json_error("\"family\" must be an array of set texts");
    std::vector<element_set> fam;
    for (const auto& item : j) {
        if (!item.is_string()) throw json_error("family entries must be set texts");
        try {
            fam.push_back(parse_set(item.get<std::string>(), n));
        } catch (const std::invalid_argument& e) {
            throw json_error(e.what());
        }
    }
    return fam;
}

json family_to_json(const std::vector<element_set>& fam) {
    json out = json::array();
    for (const element_set& x : fam) out.push_back(format_set(x));
    return out;
}

// ---- document construction --------------------------------------------

json ramsey_compute_doc(const std::string& targets_text, bool weak, const ramsey_result& r) {
    json doc{{"command", "ramsey compute"},
             {"targets", targets_text},
             {"mode", mode_name(weak)},
             {"value", r.value}};
    if (r.lower) doc["lower"] = to_json(*r.lower);
    doc["upper"] = to_json(r.upper);
    return doc;
}

json rainbow_compute_doc(const std::string& p_text, const std::string& q_text, bool weak,
                         const ramsey_result& r) {
    json doc{{"command", "rainbow compute"},
             {"p", p_text},
             {"q", q_text},
             {"mode", mode_name(weak)},
             {"value", r.value}};
    if (r.lower) doc["lower"] = to_json(*r.lower);
    doc["upper"] = to_json(r.upper);
    return doc;
}

// ---- independent re-verification of emitted documents ------------------

bool reverify(const json& doc, std::ostream& log) {
    if (!doc.contains("command") || !doc["command"].is_string())
        throw json_error("document lacks a \"command\" field");
    const std::string command = doc["command"].get<std::string>();
    auto cfg_of = [](const json& cert) {
        return cert.contains("config") ? search_config_from_json(cert["config"])
                                       : search_config{};
    };

    if (command == "ramsey compute" || command == "rainbow compute") {
        const bool rainbow = command == "rainbow compute";
        const bool weak = doc.at("mode").get<std::string>() == "weak";
        const int value = doc.at("value").get<int>();
        target_list targets;
        poset p = poset::antichain(1), q = poset::antichain(1);
        if (rainbow) {
            p = parse_pattern(doc.at("p").get<std::string>());
            q = parse_pattern(doc.at("q").get<std::string>());
        } else {
            targets = parse_targets(doc.at("targets").get<std::string>(), mode_of(weak));
        }
        bool ok = true;
        if (value > 0) {
            if (!doc.contains("lower") || !doc["lower"].contains("witness")) {
                log << "missing lower witness\n";
                ok = false;
            } else {
                coloring w = coloring_from_json(doc["lower"]["witness"]);
                bool good = w.dom == domain::full(value - 1) &&
                            (rainbow ? is_good_rainbow(w, p, q, mode_of(weak))
                                     : is_good(w, targets));
                log << "lower witness at B_" << value - 1 << ": "
                    << (good ? "good" : "BAD") << "\n";
                ok &= good;
            }
        }
        search_config cfg = cfg_of(doc.at("upper"));
        search_certificate cert =
            rainbow ? find_good_partition_coloring(domain::full(value), p, q, cfg,
                                                   mode_of(weak))
                    : find_good_coloring(domain::full(value),
                                         static_cast<int>(targets.size()), targets, cfg);
        bool exhausted = cert.outcome == search_outcome::exhausted;
        log << "upper exhaustion at B_" << value << ": "
            << (exhausted ? "reproduced" : "NOT reproduced") << "\n";
        return ok && exhausted;
    }

    if (command == "ramsey verify-upper" || command == "ramsey find-lower") {
        const bool weak = doc.at("mode").get<std::string>() == "weak";
        const int n = doc.at("n").get<int>();
        target_list targets = parse_targets(doc.at("targets").get<std::string>(), mode_of(weak));
        const json& cert = doc.at("certificate");
        const std::string outcome = cert.at("outcome").get<std::string>();
        if (outcome == "witness") {
            coloring w = coloring_from_json(cert.at("witness"));
            bool good = w.dom == domain::full(n) && is_good(w, targets);
            log << "stored witness at B_" << n << ": " << (good ? "good" : "BAD") << "\n";
            return good;
        }
        if (outcome == "exhausted") {
            search_certificate rerun = find_good_coloring(
                domain::full(n), static_cast<int>(targets.size()), targets, cfg_of(cert));
            bool same = rerun.outcome == search_outcome::exhausted;
            log << "exhaustion at B_" << n << ": " << (same ? "reproduced" : "NOT reproduced")
                << "\n";
            return same;
        }
        log << "certificate is inconclusive; nothing to verify\n";
        return false;
    }

    if (command == "ramsey explore-conjecture") {
        std::vector<int> arms;
        for (const auto& a : doc.at("arms")) arms.push_back(a.get<int>());
        target_list strong_t, weak_t;
        for (int m : arms) {
            strong_t.push_back({poset::make_v(m, m), embed_mode::strong});
            weak_t.push_back({poset::make_v(m, m), embed_mode::weak});
        }
        int n_max = doc.at("n_max").get<int>();
        int rs = compute_ramsey(strong_t, n_max).value;
        int rw = compute_ramsey(weak_t, n_max).value;
        bool same = rs == doc.at("strong").get<int>() && rw == doc.at("weak").get<int>();
        log << "recomputed strong=" << rs << " weak=" << rw << ": "
            << (same ? "match" : "MISMATCH") << "\n";
        return same && doc.at("holds").get<bool>();
    }

    if (command == "minimal check") {
        domain d = domain_from_json(doc.at("domain"));
        const bool weak = doc.at("mode").get<std::string>() == "weak";
        target_list targets = parse_targets(doc.at("targets").get<std::string>(), mode_of(weak));
        bool minimal = is_minimal_ramsey(d, targets);
        bool same = minimal == doc.at("minimal").get<bool>();
        log << "recomputed minimal=" << (minimal ? "yes" : "no") << ": "
            << (same ? "match" : "MISMATCH") << "\n";
        return same;
    }

    if (command == "minimal enumerate") {
        const bool weak = doc.at("mode").get<std::string>() == "weak";
        target_list targets = parse_targets(doc.at("targets").get<std::string>(), mode_of(weak));
        std::vector<domain> classes = enumerate_minimal_ramsey(
            doc.at("n").get<int>(), targets, {}, doc.at("max_removed").get<int>());
        const json& stored = doc.at("classes");
        bool same = stored.is_array() && stored.size() == classes.size();
        for (std::size_t i = 0; same && i < classes.size(); ++i)
            same = domain_from_json(stored[i]) == classes[i];
        log << "recomputed " << classes.size() << " classes: "
            << (same ? "match" : "MISMATCH") << "\n";
        return same;
    }

    if (command == "construct coloring") {
        coloring c = coloring_from_json(doc.at("coloring"));
        const json& claim = doc.at("claim");
        bool good;
        if (claim.at("kind").get<std::string>() == "mono") {
            target_list targets = parse_targets(claim.at("targets").get<std::string>());
            good = is_good(c, targets);
        } else {
            good = is_good_rainbow(c, parse_pattern(claim.at("p").get<std::string>()),
                                   parse_pattern(claim.at("q").get<std::string>()));
        }
        bool same = good && doc.at("verified").get<bool>();
        log << "coloring re-check: " << (good ? "good" : "BAD") << "\n";
        return same;
    }

    if (command == "construct embedding") {
        cube_embedding e = cube_embedding_from_json(doc.at("embedding"));
        std::vector<element_set> fam = family_of_json(doc.at("family"), e.dst_n);
        bool valid = valid_cube_embedding(e, fam);
        log << "embedding re-check: " << (valid ? "valid" : "INVALID") << "\n";
        return valid && doc.at("valid").get<bool>();
    }

    throw json_error("unknown document command \"" + command + "\"");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boolean Ramsey workbench for V-shaped posets"};
    app.require_subcommand(1);
    std::function<int()> action;

    run_options opt;

    // ---- ramsey ---------------------------------------------------------
    auto* ramsey = app.add_subcommand("ramsey", "Boolean Ramsey numbers and certificates");
    ramsey->require_subcommand(1);
    std::string rc_targets;
    bool rc_weak = false;
    int rc_nmax = 6;
    int rc_n = 0;

    auto* rc = ramsey->add_subcommand("compute", "least n with B_n Ramsey for the targets");
    rc->add_option("--targets", rc_targets, "comma-separated pattern list")->required();
    rc->add_flag("--weak", rc_weak, "weak subposet containment");
    rc->add_option("--n-max", rc_nmax, "give up past this ground size");
    add_run_flags(rc, opt);
    rc->callback([&] {
        action = [&]() -> int {
            target_list targets = parse_targets(rc_targets, mode_of(rc_weak));
            ramsey_result r = compute_ramsey(targets, rc_nmax, make_config(opt));
            std::cout << r.value << "\n";
            emit(ramsey_compute_doc(rc_targets, rc_weak, r), opt.output);
            return exit_ok;
        };
    });

    auto* ru = ramsey->add_subcommand("verify-upper", "exhaust colorings of B_n");
    ru->add_option("--n", rc_n, "ground size")->required();
    ru->add_option("--targets", rc_targets, "comma-separated pattern list")->required();
    ru->add_flag("--weak", rc_weak, "weak subposet containment");
    add_run_flags(ru, opt);
    ru->callback([&] {
        action = [&]() -> int {
            target_list targets = parse_targets(rc_targets, mode_of(rc_weak));
            search_certificate cert = find_good_coloring(
                domain::full(rc_n), static_cast<int>(targets.size()), targets,
                make_config(opt));
            json doc{{"command", "ramsey verify-upper"},
                     {"targets", rc_targets},
                     {"mode", mode_name(rc_weak)},
                     {"n", rc_n},
                     {"certificate", to_json(cert)}};
            emit(doc, opt.output);
            switch (cert.outcome) {
                case search_outcome::exhausted:
                    std::cout << "exhausted: every coloring of B_" << rc_n
                              << " contains a target\n";
                    return exit_ok;
                case search_outcome::witness:
                    std::cout << "witness: B_" << rc_n << " admits a good coloring\n";
                    return exit_uncertified;
                default:
                    std::cout << "inconclusive under the node budget\n";
                    return exit_budget;
            }
        };
    });

    auto* rl = ramsey->add_subcommand("find-lower", "search a good coloring of B_n");
    rl->add_option("--n", rc_n, "ground size")->required();
    rl->add_option("--targets", rc_targets, "comma-separated pattern list")->required();
    rl->add_flag("--weak", rc_weak, "weak subposet containment");
    add_run_flags(rl, opt);
    rl->callback([&] {
        action = [&]() -> int {
            target_list targets = parse_targets(rc_targets, mode_of(rc_weak));
            search_certificate cert = find_good_coloring(
                domain::full(rc_n), static_cast<int>(targets.size()), targets,
                make_config(opt));
            json doc{{"command", "ramsey find-lower"},
                     {"targets", rc_targets},
                     {"mode", mode_name(rc_weak)},
                     {"n", rc_n},
                     {"certificate", to_json(cert)}};
            emit(doc, opt.output);
            switch (cert.outcome) {
                case search_outcome::witness:
                    std::cout << "good coloring of B_" << rc_n << " found\n";
                    return exit_ok;
                case search_outcome::exhausted:
                    std::cout << "no good coloring of B_" << rc_n << " exists\n";
                    return exit_uncertified;
                default:
                    std::cout << "inconclusive under the node budget\n";
                    return exit_budget;
            }
        };
    });

    std::vector<int> ec_arms;
    auto* ec = ramsey->add_subcommand(
        "explore-conjecture",
        "check strong = weak = sum of arms + 1 for identical-arm V targets");
    ec->add_option("--arms", ec_arms, "arm lengths m_i for targets V(m_i,m_i)")
        ->required()
        ->delimiter(',');
    ec->add_option("--n-max", rc_nmax, "give up past this ground size");
    add_run_flags(ec, opt);
    ec->callback([&] {
        action = [&]() -> int {
            target_list strong_t, weak_t;
            for (int m : ec_arms) {
                strong_t.push_back({poset::make_v(m, m), embed_mode::strong});
                weak_t.push_back({poset::make_v(m, m), embed_mode::weak});
            }
            int predicted = std::accumulate(ec_arms.begin(), ec_arms.end(), 1);
            search_config cfg = make_config(opt);
            ramsey_result rs = compute_ramsey(strong_t, rc_nmax, cfg);
            ramsey_result rw = compute_ramsey(weak_t, rc_nmax, cfg);
            bool holds = rs.value == predicted && rw.value == predicted;
            std::cout << "predicted " << predicted << "\nstrong " << rs.value << "\nweak "
                      << rw.value << "\n"
                      << (holds ? "conjecture holds at this instance"
                                : "MISMATCH against the prediction")
                      << "\n";
            json doc{{"command", "ramsey explore-conjecture"}, {"arms", ec_arms},
                     {"n_max", rc_nmax},       {"predicted", predicted},
                     {"strong", rs.value},     {"weak", rw.value},
                     {"holds", holds}};
            emit(doc, opt.output);
            return holds ? exit_ok : exit_uncertified;
        };
    });

    // ---- rainbow --------------------------------------------------------
    auto* rainbow = app.add_subcommand("rainbow", "rainbow Ramsey numbers");
    rainbow->require_subcommand(1);
    std::string rb_p, rb_q;
    bool rb_weak = false;
    int rb_nmax = 6;
    auto* rbc = rainbow->add_subcommand(
        "compute", "least n forcing a monochromatic p or rainbow q in B_n");
    rbc->add_option("--p", rb_p, "monochromatic pattern")->required();
    rbc->add_option("--q", rb_q, "rainbow pattern (an antichain)")->required();
    rbc->add_flag("--weak", rb_weak, "weak subposet containment");
    rbc->add_option("--n-max", rb_nmax, "give up past this ground size");
    add_run_flags(rbc, opt);
    rbc->callback([&] {
        action = [&]() -> int {
            poset p = parse_pattern(rb_p), q = parse_pattern(rb_q);
            ramsey_result r =
                compute_rainbow_ramsey(p, q, rb_nmax, make_config(opt), mode_of(rb_weak));
            std::cout << r.value << "\n";
            emit(rainbow_compute_doc(rb_p, rb_q, rb_weak, r), opt.output);
            return exit_ok;
        };
    });

    // ---- minimal --------------------------------------------------------
    auto* minimal = app.add_subcommand("minimal", "minimal Ramsey sub-domains");
    minimal->require_subcommand(1);
    std::string mc_domain, mc_targets;
    bool mc_weak = false;
    int me_n = 0, me_max_removed = 3;

    auto* mc = minimal->add_subcommand("check", "is the domain minimal Ramsey?");
    mc->add_option("--domain", mc_domain, "domain JSON file")->required();
    mc->add_option("--targets", mc_targets, "comma-separated pattern list")->required();
    mc->add_flag("--weak", mc_weak, "weak subposet containment");
    add_run_flags(mc, opt);
    mc->callback([&] {
        action = [&]() -> int {
            domain d = domain_from_json(load_json_file(mc_domain));
            target_list targets = parse_targets(mc_targets, mode_of(mc_weak));
            bool minimal_ramsey = is_minimal_ramsey(d, targets, make_config(opt));
            std::cout << (minimal_ramsey ? "yes" : "no") << "\n";
            json doc{{"command", "minimal check"},
                     {"domain", to_json(d)},
                     {"targets", mc_targets},
                     {"mode", mode_name(mc_weak)},
                     {"minimal", minimal_ramsey}};
            emit(doc, opt.output);
            return exit_ok;
        };
    });

    auto* me = minimal->add_subcommand(
        "enumerate", "classify minimal Ramsey domains below B_n minus its top");
    me->add_option("--n", me_n, "ground size")->required();
    me->add_option("--targets", mc_targets, "comma-separated pattern list")->required();
    me->add_flag("--weak", mc_weak, "weak subposet containment");
    me->add_option("--max-removed", me_max_removed,
                   "removals tried below the top (top always removed)");
    add_run_flags(me, opt);
    me->callback([&] {
        action = [&]() -> int {
            target_list targets = parse_targets(mc_targets, mode_of(mc_weak));
            std::vector<domain> classes =
                enumerate_minimal_ramsey(me_n, targets, make_config(opt), me_max_removed);
            for (const domain& d : classes) {
                std::cout << "B_" << d.n() << " -";
                for (const element_set& x : d.removed_sets()) std::cout << " " << format_set(x);
                std::cout << "\n";
            }
            std::cout << classes.size() << " isomorphism class"
                      << (classes.size() == 1 ? "" : "es") << "\n";
            json list = json::array();
            for (const domain& d : classes) list.push_back(to_json(d));
            json doc{{"command", "minimal enumerate"}, {"n", me_n},
                     {"targets", mc_targets},          {"mode", mode_name(mc_weak)},
                     {"max_removed", me_max_removed},  {"classes", list}};
            emit(doc, opt.output);
            return exit_ok;
        };
    });

    // ---- construct ------------------------------------------------------
    auto* construct = app.add_subcommand("construct", "published colorings and embeddings");
    construct->require_subcommand(1);
    std::string cc_rule;
    std::vector<std::string> cc_params;
    auto* cc = construct->add_subcommand("coloring", "emit a lower-bound coloring");
    cc->add_option("--rule", cc_rule, "layered | mixed | theorem3 | rainbow-lower | prop8")
        ->required()
        ->check(CLI::IsMember({"layered", "mixed", "theorem3", "rainbow-lower", "prop8"}));
    cc->add_option("--params", cc_params, "key=value list, e.g. m=1 n=2 k=2");
    add_run_flags(cc, opt);
    cc->callback([&] {
        action = [&]() -> int {
            auto kv = parse_params(cc_params);
            std::optional<coloring> built;
            json claim;
            if (cc_rule == "layered") {
                int m = param_int(kv, "m", "1");
                int n = param_int(kv, "n");
                int k = param_int(kv, "k");
                if (m < 1 || m > n)
                    throw std::invalid_argument("layered: need 1 <= m <= n");
                built = layered_coloring(n, k, k);
                std::string t;
                for (int i = 0; i < k; ++i)
                    t += (i ? "," : "") + ("V(" + std::to_string(m) + "," +
                                           std::to_string(n) + ")");
                claim = json{{"kind", "mono"}, {"targets", t}};
            } else if (cc_rule == "mixed") {
                int m = param_int(kv, "m");
                int n = param_int(kv, "n");
                built = mixed_coloring(m, n);
                claim = json{{"kind", "mono"},
                             {"targets", "V(" + std::to_string(m) + "," + std::to_string(m) +
                                             "),V(" + std::to_string(n) + "," +
                                             std::to_string(n) + ")"}};
            } else if (cc_rule == "theorem3") {
                int k = param_int(kv, "k");
                element_set s = parse_set(param(kv, "s"), k + 1);
                built = single_removal_v11_coloring(k, s);
                std::string t;
                for (int i = 0; i < k; ++i) t += (i ? ",V(1,1)" : "V(1,1)");
                claim = json{{"kind", "mono"}, {"targets", t}};
            } else if (cc_rule == "rainbow-lower") {
                int n = param_int(kv, "n");
                int k = param_int(kv, "k");
                built = capped_band_coloring(n, k);
                claim = json{{"kind", "rainbow"},
                             {"p", "V(1," + std::to_string(n) + ")"},
                             {"q", "A(" + std::to_string(k) + ")"}};
            } else {  // prop8
                std::string pattern = param(kv, "pattern");
                built = extremes_coloring(parse_pattern(pattern));
                claim = json{{"kind", "rainbow"}, {"p", pattern}, {"q", "A(2)"}};
            }
            bool good;
            if (claim["kind"] == "mono")
                good = is_good(*built, parse_targets(claim["targets"].get<std::string>()));
            else
                good = is_good_rainbow(*built,
                                       parse_pattern(claim["p"].get<std::string>()),
                                       parse_pattern(claim["q"].get<std::string>()));
            std::cout << "coloring of B_" << built->n() << " ("
                      << built->dom.size() << " elements): "
                      << (good ? "verified good" : "NOT good") << "\n";
            json doc{{"command", "construct coloring"},
                     {"rule", cc_rule},
                     {"coloring", to_json(*built)},
                     {"claim", claim},
                     {"verified", good}};
            emit(doc, opt.output);
            return good ? exit_ok : exit_uncertified;
        };
    });

    std::string ce_rule, ce_input;
    int ce_w = 0;
    bool ce_forbid_top = false;
    auto* ce = construct->add_subcommand("embedding", "emit a removal embedding");
    ce->add_option("--rule", ce_rule, "chain-removal | antichain-removal | iterated")
        ->required()
        ->check(CLI::IsMember({"chain-removal", "antichain-removal", "iterated"}));
    ce->add_option("--input", ce_input, "family JSON file: {\"n\": 4, \"family\": [\"{1}\"]}")
        ->required();
    ce->add_option("--w", ce_w, "expansion coordinate for antichain-removal (default n)");
    ce->add_flag("--forbid-top", ce_forbid_top, "iterated: avoid the full set too");
    add_run_flags(ce, opt);
    ce->callback([&] {
        action = [&]() -> int {
            json j = load_json_file(ce_input);
            if (!j.contains("n") || !j["n"].is_number_integer())
                throw json_error("family file needs an integer \"n\"");
            int n = j["n"].get<int>();
            std::vector<element_set> fam =
                family_of_json(j.contains("family") ? j["family"] : json::array(), n);
            cube_embedding e;
            if (ce_rule == "chain-removal")
                e = chain_removal_embedding(n, fam);
            else if (ce_rule == "antichain-removal")
                e = antichain_removal_embedding(n, fam, ce_w);
            else
                e = iterated_removal_embedding(n, fam, ce_forbid_top);
            std::vector<element_set> avoid = fam;
            if (ce_forbid_top) avoid.push_back(element_set((mask_t{1} << n) - 1, n));
            bool valid = valid_cube_embedding(e, avoid);
            std::cout << "embedding of B_" << e.src_n << " into B_" << e.dst_n << ": "
                      << (valid ? "valid, image avoids the family" : "INVALID") << "\n";
            json doc{{"command", "construct embedding"},
                     {"rule", ce_rule},
                     {"n", n},
                     {"family", family_to_json(avoid)},
                     {"embedding", to_json(e)},
                     {"valid", valid}};
            emit(doc, opt.output);
            return valid ? exit_ok : exit_uncertified;
        };
    });

    // ---- poset ----------------------------------------------------------
    auto* poset_cmd = app.add_subcommand("poset", "pattern metrics");
    poset_cmd->require_subcommand(1);
    std::string pd_pattern, pd_covers;

    auto load_pattern = [&]() -> poset {
        if (!pd_covers.empty()) {
            json j = load_json_file(pd_covers);
            if (!j.contains("size") || !j["size"].is_number_integer() ||
                !j.contains("covers") || !j["covers"].is_array())
                throw json_error("covers file needs \"size\" and \"covers\" pairs");
            std::vector<std::pair<int, int>> covers;
            for (const auto& pr : j["covers"]) {
                if (!pr.is_array() || pr.size() != 2)
                    throw json_error("covers entries are [below, above] index pairs");
                covers.emplace_back(pr[0].get<int>(), pr[1].get<int>());
            }
            return poset::from_covers(j["size"].get<int>(), covers);
        }
        if (pd_pattern.empty())
            throw pattern_error("give --pattern or --covers");
        return parse_pattern(pd_pattern);
    };

    auto* pd = poset_cmd->add_subcommand("dim2", "least n with a strong copy inside B_n");
    pd->add_option("--pattern", pd_pattern, "pattern literal");
    pd->add_option("--covers", pd_covers, "covers JSON file for a custom poset");
    pd->callback([&] {
        action = [&]() -> int {
            std::cout << dim2(load_pattern()) << "\n";
            return exit_ok;
        };
    });

    auto* pi = poset_cmd->add_subcommand("info", "size, height, dim2, extremal count");
    pi->add_option("--pattern", pd_pattern, "pattern literal");
    pi->add_option("--covers", pd_covers, "covers JSON file for a custom poset");
    pi->callback([&] {
        action = [&]() -> int {
            poset p = load_pattern();
            std::cout << "size " << p.size() << "\nheight " << p.height() << "\ndim2 "
                      << dim2(p) << "\nextremal " << extremal_count(p) << "\n";
            return exit_ok;
        };
    });

    // ---- verify-certificate ---------------------------------------------
    std::string vc_file;
    auto* vc = app.add_subcommand("verify-certificate",
                                  "independently re-check an emitted JSON document");
    vc->add_option("--file", vc_file, "document to verify")->required();
    vc->callback([&] {
        action = [&]() -> int {
            json doc = load_json_file(vc_file);
            bool ok = reverify(doc, std::cout);
            std::cout << (ok ? "certificate verified" : "verification FAILED") << "\n";
            return ok ? exit_ok : exit_uncertified;
        };
    });

    // ---- render -----------------------------------------------------------
    auto* render = app.add_subcommand("render", "diagram emission");
    std::string rh_domain, rh_coloring, rh_format = "dot";
    auto* rh = render->add_subcommand("hasse", "Hasse diagram of a domain");
    rh->add_option("--domain", rh_domain, "domain JSON file")->required();
    rh->add_option("--coloring", rh_coloring, "coloring JSON file (fills nodes)");
    rh->add_option("--format", rh_format, "dot | svg")
        ->check(CLI::IsMember({"dot", "svg"}));
    rh->add_option("--output,-o", opt.output, "write here instead of stdout");
    rh->callback([&] {
        action = [&]() -> int {
            domain d = domain_from_json(load_json_file(rh_domain));
            std::optional<coloring> c;
            if (!rh_coloring.empty()) {
                c = coloring_from_json(load_json_file(rh_coloring));
                if (!(c->dom == d))
                    throw json_error("coloring domain differs from --domain");
            }
            emit_text(rh_format == "dot" ? hasse_dot(d, c) : hasse_svg(d, c), opt.output);
            return exit_ok;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        return action ? action() : exit_uncertified;
    } catch (const pattern_error& e) {
        std::cerr << "pattern error: " << e.what() << "\n";
        return exit_pattern;
    } catch (const json_error& e) {
        std::cerr << "JSON error: " << e.what() << "\n";
        return exit_json;
    } catch (const budget_error& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return exit_budget;
    } catch (const undecided_error& e) {
        std::cerr << "undecided at desk scale: " << e.what() << "\n";
        return exit_budget;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_uncertified;
    }
}
