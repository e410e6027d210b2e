#include "vramsey/checker.hpp"

#include <algorithm>
#include <sstream>

namespace vramsey {

target_list parse_targets(const std::string& csv, embed_mode mode) {
    target_list out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        // split at commas that sit outside parentheses
        int depth = 0;
        std::size_t end = start;
        while (end < csv.size() && (csv[end] != ',' || depth > 0)) {
            if (csv[end] == '(') ++depth;
            if (csv[end] == ')') --depth;
            ++end;
        }
        std::string piece = csv.substr(start, end - start);
        if (piece.find_first_not_of(" \t") == std::string::npos) {
            // a blank piece is fine only when the whole list is blank
            if (!(start == 0 && end == csv.size()))
                throw pattern_error("empty entry in target list \"" + csv + "\"");
        } else {
            out.push_back({parse_pattern(piece), mode});
        }
        if (end == csv.size()) break;
        start = end + 1;
    }
    if (out.empty()) throw pattern_error("no targets in \"" + csv + "\"");
    return out;
}

namespace {

std::vector<mask_t> class_masks(const coloring& c, int color) {
    std::vector<mask_t> out;
    for (mask_t m : c.dom.present_masks())
        if (c.at(m) == color) out.push_back(m);
    return out;
}

}  // namespace

std::optional<witness> find_monochromatic(const coloring& c, const target_list& targets) {
    for (std::size_t i = 0; i < targets.size(); ++i) {
        auto elems = class_masks(c, static_cast<int>(i) + 1);
        auto found = embed_in_elements(targets[i].pattern, c.n(), elems, targets[i].mode);
        if (found) return witness{witness_kind::mono, static_cast<int>(i) + 1, *found};
    }
    return std::nullopt;
}

std::optional<witness> find_rainbow(const coloring& c, const poset& q, embed_mode mode) {
    embed_options opt;
    opt.colors = &c.color_of;
    opt.distinct_colors = true;
    auto found = embed_in_elements(q, c.n(), c.dom.present_masks(), mode, opt);
    if (found) return witness{witness_kind::rainbow, 0, *found};
    return std::nullopt;
}

bool is_good(const coloring& c, const target_list& targets) {
    return !find_monochromatic(c, targets).has_value();
}

bool is_good_rainbow(const coloring& c, const poset& p, const poset& q, embed_mode mode) {
    for (int color : c.used_colors()) {
        auto elems = class_masks(c, color);
        if (embed_in_elements(p, c.n(), elems, mode)) return false;
    }
    return !find_rainbow(c, q, mode).has_value();
}

namespace {

// Longest-chain reach set: bit T of reach[B] is set iff the family holds a
// chain of at least `len` elements from B up to T (inclusive).
std::uint64_t reach_at_least(std::uint64_t fam, int base, int len, const lattice_tables& t,
                             const std::vector<mask_t>& order) {
    std::array<std::uint8_t, 64> chain{};
    std::uint64_t out = 0;
    std::uint64_t above = fam & (t.up_strict[base] | (std::uint64_t{1} << base));
    for (mask_t m : order) {
        if (!((above >> m) & 1u)) continue;
        int best = 1;
        std::uint64_t below = above & t.down_strict[m];
        while (below) {
            int s = __builtin_ctzll(below);
            below &= below - 1;
            best = std::max(best, chain[s] + 1);
        }
        chain[m] = static_cast<std::uint8_t>(best);
        if (best >= len) out |= std::uint64_t{1} << m;
    }
    return out;
}

}  // namespace

bool family_has_v(std::uint64_t fam, int a, int b, const lattice_tables& t) {
    if (a < 1 || b < 1) throw std::invalid_argument("family_has_v: need arms >= 1");
    std::vector<mask_t> order;
    order.reserve(64);
    for (mask_t m : canonical_masks(t.n))
        if ((fam >> m) & 1u) order.push_back(m);

    std::array<std::uint64_t, 64> reach_a{}, reach_b{};
    for (mask_t base : order) {
        reach_a[base] = reach_at_least(fam, base, a, t, order);
        reach_b[base] = (a == b) ? reach_a[base] : reach_at_least(fam, base, b, t, order);
    }
    for (mask_t x : order) {
        std::uint64_t up = fam & t.up_strict[x];
        std::uint64_t b1s = up;
        while (b1s) {
            int b1 = __builtin_ctzll(b1s);
            b1s &= b1s - 1;
            std::uint64_t b2s = up & t.incomp[b1];
            while (b2s) {
                int b2 = __builtin_ctzll(b2s);
                b2s &= b2s - 1;
                if ((reach_a[b1] & t.incomp[b2]) && (reach_b[b2] & t.incomp[b1])) return true;
            }
        }
    }
    return false;
}

namespace {

// Rebuild one chain of exactly `len` elements from `base` whose top is
// incomparable with `avoid`; exists by family_has_v's reach test. Any chain
// prefix keeps full cross-incomparability: a comparability between interior
// elements would force one between the endpoints checked there.
std::vector<mask_t> extract_chain(std::uint64_t fam, mask_t base, int len, mask_t avoid,
                                  const lattice_tables& t, const std::vector<mask_t>& order) {
    std::array<std::uint8_t, 64> chain{};
    std::array<int, 64> parent{};
    parent.fill(-1);
    std::uint64_t above = fam & (t.up_strict[base] | (std::uint64_t{1} << base));
    mask_t top = base;
    bool found = false;
    for (mask_t m : order) {
        if (!((above >> m) & 1u)) continue;
        int best = 1, from = -1;
        std::uint64_t below = above & t.down_strict[m];
        while (below) {
            int s = __builtin_ctzll(below);
            below &= below - 1;
            if (chain[s] + 1 > best) { best = chain[s] + 1; from = s; }
        }
        chain[m] = static_cast<std::uint8_t>(best);
        parent[m] = from;
        if (!found && best >= len && ((t.incomp[m] >> avoid) & 1u)) {
            top = m;
            found = true;
        }
    }
    std::vector<mask_t> path;
    for (int cur = top; cur != -1; cur = parent[cur]) path.push_back(static_cast<mask_t>(cur));
    std::reverse(path.begin(), path.end());
    path.resize(len);  // bottom-up prefix of the located chain
    return path;
}

}  // namespace

std::optional<witness> find_monochromatic_v_fast(const coloring& c, int m, int n, int color) {
    if (c.n() > max_exhaustive_ground)
        throw std::invalid_argument("find_monochromatic_v_fast: ground too large");
    lattice_tables t = lattice_tables::build(c.n());
    std::uint64_t fam = 0;
    for (mask_t msk : c.dom.present_masks())
        if (c.at(msk) == color) fam |= std::uint64_t{1} << msk;

    std::vector<mask_t> order;
    for (mask_t msk : canonical_masks(c.n()))
        if ((fam >> msk) & 1u) order.push_back(msk);

    std::array<std::uint64_t, 64> reach_m{}, reach_n{};
    for (mask_t base : order) {
        reach_m[base] = reach_at_least(fam, base, m, t, order);
        reach_n[base] = (m == n) ? reach_m[base] : reach_at_least(fam, base, n, t, order);
    }
    for (mask_t x : order) {
        std::uint64_t up = fam & t.up_strict[x];
        std::uint64_t b1s = up;
        while (b1s) {
            mask_t b1 = static_cast<mask_t>(__builtin_ctzll(b1s));
            b1s &= b1s - 1;
            std::uint64_t b2s = up & t.incomp[b1];
            while (b2s) {
                mask_t b2 = static_cast<mask_t>(__builtin_ctzll(b2s));
                b2s &= b2s - 1;
                if (!(reach_m[b1] & t.incomp[b2]) || !(reach_n[b2] & t.incomp[b1])) continue;
                auto ys = extract_chain(fam, b1, m, b2, t, order);
                auto zs = extract_chain(fam, b2, n, b1, t, order);
                witness w;
                w.kind = witness_kind::mono;
                w.color = color;
                w.map.mode = embed_mode::strong;
                w.map.images.emplace_back(x, c.n());
                for (mask_t y : ys) w.map.images.emplace_back(y, c.n());
                for (mask_t z : zs) w.map.images.emplace_back(z, c.n());
                return w;
            }
        }
    }
    return std::nullopt;
}

}  // namespace vramsey
