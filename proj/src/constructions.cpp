#include "vramsey/constructions.hpp"

#include <algorithm>

namespace vramsey {

bool coloring::total() const {
    for (mask_t m : dom.present_masks())
        if (color_of[m] <= 0) return false;
    return true;
}

int coloring::max_color() const {
    int best = 0;
    for (int c : color_of) best = std::max(best, c);
    return best;
}

std::vector<int> coloring::used_colors() const {
    std::vector<int> out;
    for (int c : color_of)
        if (c > 0 && std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    std::sort(out.begin(), out.end());
    return out;
}

bool valid_cube_embedding(const cube_embedding& e, const std::vector<element_set>& avoid) {
    if (e.src_n < 0 || e.dst_n < e.src_n) return false;
    std::size_t count = std::size_t{1} << e.src_n;
    if (e.image.size() != count) return false;
    for (std::size_t a = 0; a < count; ++a) {
        if (e.dst_n < 32 && (e.image[a] >> e.dst_n)) return false;
        for (std::size_t b = 0; b < count; ++b) {
            if (a == b) continue;
            if (e.image[a] == e.image[b]) return false;
            bool src_le = (a & b) == a;
            bool img_le = (e.image[a] & e.image[b]) == e.image[a];
            if (src_le != img_le) return false;
        }
    }
    for (auto& x : avoid)
        for (std::size_t a = 0; a < count; ++a)
            if (e.image[a] == x.bits) return false;
    return true;
}

embedding_map to_embedding_map(const cube_embedding& e) {
    embedding_map out;
    out.mode = embed_mode::strong;
    out.images.reserve(std::size_t{1} << e.src_n);
    for (mask_t src = 0; src < (mask_t{1} << e.src_n); ++src)
        out.images.emplace_back(e.image[src], e.dst_n);
    return out;
}

cube_embedding compose(const cube_embedding& outer, const cube_embedding& inner) {
    if (inner.dst_n != outer.src_n) throw std::invalid_argument("compose: size mismatch");
    cube_embedding out;
    out.src_n = inner.src_n;
    out.dst_n = outer.dst_n;
    out.image.resize(std::size_t{1} << inner.src_n);
    for (mask_t src = 0; src < (mask_t{1} << inner.src_n); ++src)
        out.image[src] = outer.image[inner.image[src]];
    return out;
}

namespace {

// Spread a mask of B_{n-1} over the coordinates of [n] minus w (0-based w).
mask_t expand_skipping(mask_t src, int w) {
    mask_t low = src & ((mask_t{1} << w) - 1);
    return low | ((src >> w) << (w + 1));
}

void check_ground(int n, const std::vector<element_set>& family, const char* who) {
    if (n < 1 || n > max_ground) throw std::invalid_argument(std::string(who) + ": n out of range");
    for (auto& x : family)
        if (x.n != n) throw std::invalid_argument(std::string(who) + ": member ground mismatch");
}

}  // namespace

cube_embedding chain_removal_embedding(int n, const std::vector<element_set>& chain) {
    check_ground(n, chain, "chain_removal_embedding");
    if (!is_chain(chain)) throw std::invalid_argument("chain_removal_embedding: not a chain");
    mask_t full = (n == 32) ? ~mask_t{0} : (mask_t{1} << n) - 1;

    cube_embedding out;
    out.src_n = n - 1;
    out.dst_n = n;
    out.image.resize(std::size_t{1} << (n - 1));

    auto sorted = chain;
    std::sort(sorted.begin(), sorted.end(), canonical_less);

    if (!sorted.empty() && sorted.front().bits == 0) {
        // {} is in C: every image gains a coordinate outside all of C.
        mask_t top = sorted.back().bits;
        if (top == full)
            throw std::invalid_argument("chain_removal_embedding: chain hits both {} and [n]");
        int w = __builtin_ctz(~top & full);
        for (mask_t src = 0; src < (mask_t{1} << (n - 1)); ++src)
            out.image[src] = expand_skipping(src, w) | (mask_t{1} << w);
    } else {
        // Smallest member nonempty (or chain empty): drop a coordinate of it.
        int w = sorted.empty() ? n - 1 : __builtin_ctz(sorted.front().bits);
        for (mask_t src = 0; src < (mask_t{1} << (n - 1)); ++src)
            out.image[src] = expand_skipping(src, w);
    }
    return out;
}

cube_embedding antichain_removal_embedding(int n, const std::vector<element_set>& antichain,
                                           int w) {
    check_ground(n, antichain, "antichain_removal_embedding");
    if (!is_antichain(antichain))
        throw std::invalid_argument("antichain_removal_embedding: not an antichain");
    if (w == 0) w = n;
    if (w < 1 || w > n) throw std::invalid_argument("antichain_removal_embedding: bad w");
    int wb = w - 1;

    cube_embedding out;
    out.src_n = n - 1;
    out.dst_n = n;
    out.image.resize(std::size_t{1} << (n - 1));
    for (mask_t src = 0; src < (mask_t{1} << (n - 1)); ++src) {
        mask_t x = expand_skipping(src, wb);
        bool hits = false;
        for (auto& a : antichain)
            if ((a.bits & x) == a.bits) { hits = true; break; }
        out.image[src] = hits ? (x | (mask_t{1} << wb)) : x;
    }
    return out;
}

std::vector<std::vector<element_set>> mirsky_antichain_partition(
    const std::vector<element_set>& family) {
    if (family.empty()) return {};
    int n = family.front().n;
    check_ground(n, family, "mirsky_antichain_partition");

    auto sorted = family;
    std::sort(sorted.begin(), sorted.end(), canonical_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end(),
                             [](auto& a, auto& b) { return a.bits == b.bits; }),
                 sorted.end());

    // Canonical order is a linear extension, so ranks are ready when needed.
    std::vector<int> rank(sorted.size(), 1);
    int height = 0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (sorted[j].proper_subset_of(sorted[i]))
                rank[i] = std::max(rank[i], rank[j] + 1);
        height = std::max(height, rank[i]);
    }
    std::vector<std::vector<element_set>> parts(height);
    for (std::size_t i = 0; i < sorted.size(); ++i) parts[rank[i] - 1].push_back(sorted[i]);
    return parts;
}

cube_embedding iterated_removal_embedding(int n, const std::vector<element_set>& family,
                                          bool forbid_top) {
    check_ground(n, family, "iterated_removal_embedding");
    mask_t full = (mask_t{1} << n) - 1;

    std::vector<mask_t> to_avoid;
    for (auto& x : family) to_avoid.push_back(x.bits);
    if (forbid_top) to_avoid.push_back(full);
    std::sort(to_avoid.begin(), to_avoid.end());
    to_avoid.erase(std::unique(to_avoid.begin(), to_avoid.end()), to_avoid.end());

    std::vector<element_set> cur;
    for (mask_t m : to_avoid) cur.emplace_back(m, n);
    int height = static_cast<int>(mirsky_antichain_partition(cur).size());
    if (height > n)
        throw std::invalid_argument("iterated_removal_embedding: family deeper than the cube");

    cube_embedding acc;
    acc.src_n = n;
    acc.dst_n = n;
    acc.image.resize(std::size_t{1} << n);
    for (mask_t m = 0; m < (mask_t{1} << n); ++m) acc.image[m] = m;

    int n_cur = n;
    // Peel the minimal antichain, then pull the rest back through the step
    // embedding. Exactly `height` steps, padding with empty antichains if
    // the pullback loses members early, so the result is always B_{n-h}.
    for (int step = 0; step < height; ++step) {
        auto parts = mirsky_antichain_partition(cur);
        std::vector<element_set> bottom = parts.empty() ? std::vector<element_set>{} : parts[0];
        cube_embedding e = antichain_removal_embedding(n_cur, bottom, n_cur);

        std::vector<element_set> next;
        for (auto& parts_rest : parts) {
            if (&parts_rest == &parts[0]) continue;
            for (auto& x : parts_rest) {
                for (mask_t src = 0; src < (mask_t{1} << (n_cur - 1)); ++src)
                    if (e.image[src] == x.bits) { next.emplace_back(src, n_cur - 1); break; }
            }
        }
        acc = compose(acc, e);
        cur = std::move(next);
        --n_cur;
    }
    return acc;  // src_n == n - height
}

coloring layered_coloring(int n, int k, int top_color) {
    if (n < 1 || k < 1) throw std::invalid_argument("layered_coloring: need n, k >= 1");
    if (top_color < 1 || top_color > k)
        throw std::invalid_argument("layered_coloring: top_color outside 1..k");
    if (n * k > coloring_ground_limit)
        throw std::invalid_argument("layered_coloring: ground too large");
    domain d = domain::full(n * k);
    coloring c(std::move(d));
    mask_t full = (mask_t{1} << (n * k)) - 1;
    for (mask_t m = 0; m <= full; ++m)
        c.set(m, m == full ? top_color : __builtin_popcount(m) / n + 1);
    c.k_declared = k;
    return c;
}

coloring mixed_coloring(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("mixed_coloring: need m, n >= 1");
    if (m + n > coloring_ground_limit)
        throw std::invalid_argument("mixed_coloring: ground too large");
    coloring c(domain::full(m + n));
    for (mask_t x = 0; x < (mask_t{1} << (m + n)); ++x)
        c.set(x, __builtin_popcount(x) < m ? 1 : 2);
    c.k_declared = 2;
    return c;
}

coloring single_removal_v11_coloring(int k, const element_set& s) {
    if (k < 1) throw std::invalid_argument("single_removal_v11_coloring: need k >= 1");
    int n = k + 1;
    if (s.n != n) throw std::invalid_argument("single_removal_v11_coloring: S must live in [k+1]");
    mask_t full = (mask_t{1} << n) - 1;
    if (s.bits == full)
        throw std::invalid_argument("single_removal_v11_coloring: S must be proper");

    coloring c(domain(n, {s.bits}));
    // co-singleton missing the j-th smallest member of S gets color j
    std::vector<int> s_members;
    for (int i = 0; i < n; ++i)
        if ((s.bits >> i) & 1u) s_members.push_back(i);
    for (mask_t x = 0; x <= full; ++x) {
        if (x == s.bits) continue;
        int size = __builtin_popcount(x);
        int color = 0;
        if (size == n - 1) {
            int missing = __builtin_ctz(full & ~x);
            auto member = std::find(s_members.begin(), s_members.end(), missing);
            if (member != s_members.end())
                color = static_cast<int>(member - s_members.begin()) + 1;
        }
        if (color == 0) {
            if ((s.bits & x) == s.bits)
                color = std::min(size, k);
            else
                color = size + 1;
        }
        c.set(x, color);
    }
    c.k_declared = k;
    return c;
}

coloring capped_band_coloring(int n, int k) {
    if (n < 2 || k < 2) throw std::invalid_argument("capped_band_coloring: need n, k >= 2");
    int ground = n * (k - 1) + 1;
    if (ground > coloring_ground_limit)
        throw std::invalid_argument("capped_band_coloring: ground too large");
    coloring c(domain::full(ground));
    mask_t full = (mask_t{1} << ground) - 1;
    for (mask_t x = 0; x <= full; ++x) {
        int size = __builtin_popcount(x);
        c.set(x, (x == 0 || x == full) ? k : (size + n - 1) / n);
    }
    c.k_declared = k;
    return c;
}

coloring extremes_coloring(const poset& p, int n_max) {
    if (p.size() < 2) throw std::invalid_argument("extremes_coloring: pattern too small");
    int ground = dim2(p, n_max) + extremal_count(p) - 1;
    coloring c(domain::full(ground));
    mask_t full = (mask_t{1} << ground) - 1;
    for (mask_t x = 0; x <= full; ++x) c.set(x, x == 0 ? 1 : (x == full ? 2 : 3));
    c.k_declared = 3;
    return c;
}

}  // namespace vramsey
