#include "vramsey/poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace vramsey {

namespace {

void check_poset_size(int size) {
    if (size < 0 || size > 64) throw std::invalid_argument("poset: size out of range");
}

}  // namespace

poset poset::make_v(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("make_v: need m, n >= 1");
    check_poset_size(1 + m + n);
    poset p;
    p.leq.assign(1 + m + n, 0);
    int sz = 1 + m + n;
    for (int a = 0; a < sz; ++a) p.leq[a] |= std::uint64_t{1} << a;
    for (int a = 1; a <= m + n; ++a) p.leq[0] |= std::uint64_t{1} << a;
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) p.leq[a] |= std::uint64_t{1} << b;
    for (int a = m + 1; a <= m + n; ++a)
        for (int b = a + 1; b <= m + n; ++b) p.leq[a] |= std::uint64_t{1} << b;
    std::ostringstream os;
    os << "V(" << m << "," << n << ")";
    p.label = os.str();
    return p;
}

poset poset::chain(int k) {
    if (k < 1) throw std::invalid_argument("chain: need k >= 1");
    check_poset_size(k);
    poset p;
    p.leq.assign(k, 0);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) p.leq[a] |= std::uint64_t{1} << b;
    p.label = "C(" + std::to_string(k) + ")";
    return p;
}

poset poset::antichain(int k) {
    if (k < 1) throw std::invalid_argument("antichain: need k >= 1");
    check_poset_size(k);
    poset p;
    p.leq.assign(k, 0);
    for (int a = 0; a < k; ++a) p.leq[a] = std::uint64_t{1} << a;
    p.label = "A(" + std::to_string(k) + ")";
    return p;
}

poset poset::cube(int m) {
    if (m < 0 || m > max_exhaustive_ground) throw std::invalid_argument("cube: m out of range");
    poset p;
    int count = 1 << m;
    p.leq.assign(count, 0);
    for (int a = 0; a < count; ++a)
        for (int b = 0; b < count; ++b)
            if ((a & b) == a) p.leq[a] |= std::uint64_t{1} << b;
    p.label = "B(" + std::to_string(m) + ")";
    return p;
}

poset poset::induced(const domain& d) {
    auto elems = d.present_masks();
    check_poset_size(static_cast<int>(elems.size()));
    poset p;
    p.leq.assign(elems.size(), 0);
    for (std::size_t a = 0; a < elems.size(); ++a)
        for (std::size_t b = 0; b < elems.size(); ++b)
            if ((elems[a] & elems[b]) == elems[a]) p.leq[a] |= std::uint64_t{1} << b;
    p.label = "induced";
    return p;
}

poset poset::from_covers(int size, const std::vector<std::pair<int, int>>& covers) {
    check_poset_size(size);
    poset p;
    p.leq.assign(size, 0);
    for (int a = 0; a < size; ++a) p.leq[a] = std::uint64_t{1} << a;
    for (auto& [lo, hi] : covers) {
        if (lo < 0 || lo >= size || hi < 0 || hi >= size || lo == hi)
            throw std::invalid_argument("from_covers: bad cover pair");
        p.leq[lo] |= std::uint64_t{1} << hi;
    }
    // Warshall closure, then antisymmetry check.
    for (int k = 0; k < size; ++k)
        for (int a = 0; a < size; ++a)
            if ((p.leq[a] >> k) & 1u) p.leq[a] |= p.leq[k];
    for (int a = 0; a < size; ++a)
        for (int b = a + 1; b < size; ++b)
            if (p.le(a, b) && p.le(b, a))
                throw std::invalid_argument("from_covers: cover relation has a cycle");
    p.label = "custom";
    return p;
}

int poset::height() const {
    int sz = size();
    std::vector<int> order(sz), len(sz, 1);
    std::iota(order.begin(), order.end(), 0);
    // longest chain ending at each element, below-count ascending is a
    // topological order
    std::vector<int> below(sz, 0);
    for (int a = 0; a < sz; ++a)
        for (int b = 0; b < sz; ++b)
            if (a != b && le(b, a)) ++below[a];
    std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
    int best = 0;
    for (int a : order) {
        for (int b : order) {
            if (b != a && le(b, a)) len[a] = std::max(len[a], len[b] + 1);
        }
        best = std::max(best, len[a]);
    }
    return best;
}

int poset::relation_count(int a) const {
    int c = 0;
    for (int b = 0; b < size(); ++b)
        if (b != a && comparable(a, b)) ++c;
    return c;
}

poset dual(const poset& p) {
    poset q;
    q.leq.assign(p.size(), 0);
    for (int a = 0; a < p.size(); ++a)
        for (int b = 0; b < p.size(); ++b)
            if (p.le(b, a)) q.leq[a] |= std::uint64_t{1} << b;
    q.label = "dual(" + p.label + ")";
    return q;
}

namespace {

bool iso_backtrack(const poset& a, const poset& b, std::vector<int>& map,
                   std::vector<char>& used, int next) {
    int sz = a.size();
    if (next == sz) return true;
    for (int cand = 0; cand < sz; ++cand) {
        if (used[cand]) continue;
        bool ok = true;
        for (int prev = 0; prev < next && ok; ++prev) {
            if (a.le(prev, next) != b.le(map[prev], cand)) ok = false;
            if (a.le(next, prev) != b.le(cand, map[prev])) ok = false;
        }
        if (!ok) continue;
        map[next] = cand;
        used[cand] = 1;
        if (iso_backtrack(a, b, map, used, next + 1)) return true;
        used[cand] = 0;
    }
    return false;
}

}  // namespace

bool isomorphic(const poset& a, const poset& b) {
    if (a.size() != b.size()) return false;
    auto profile = [](const poset& p) {
        std::vector<std::pair<int, int>> deg;
        for (int x = 0; x < p.size(); ++x) {
            int up = __builtin_popcountll(p.leq[x]) - 1, down = 0;
            for (int y = 0; y < p.size(); ++y)
                if (y != x && p.le(y, x)) ++down;
            deg.emplace_back(up, down);
        }
        std::sort(deg.begin(), deg.end());
        return deg;
    };
    if (profile(a) != profile(b)) return false;
    std::vector<int> map(a.size(), -1);
    std::vector<char> used(a.size(), 0);
    return iso_backtrack(a, b, map, used, 0);
}

poset parse_pattern(const std::string& text) {
    std::size_t pos = 0;
    auto skip = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    auto number = [&]() -> int {
        skip();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw pattern_error("bad pattern literal: \"" + text + "\"");
        return std::stoi(text.substr(start, pos - start));
    };
    auto expect = [&](char c) {
        skip();
        if (pos >= text.size() || text[pos] != c)
            throw pattern_error("bad pattern literal: \"" + text + "\"");
        ++pos;
    };
    skip();
    if (pos >= text.size()) throw pattern_error("empty pattern literal");
    char kind = text[pos++];
    expect('(');
    poset p;
    try {
        switch (kind) {
            case 'V': case 'v': {
                int m = number();
                expect(',');
                int n = number();
                p = poset::make_v(m, n);
                break;
            }
            case 'C': case 'c': p = poset::chain(number()); break;
            case 'A': case 'a': p = poset::antichain(number()); break;
            case 'B': case 'b': p = poset::cube(number()); break;
            default: throw pattern_error("bad pattern literal: \"" + text + "\"");
        }
    } catch (const pattern_error&) {
        throw;
    } catch (const std::invalid_argument& e) {  // factory range errors
        throw pattern_error("bad pattern literal: \"" + text + "\": " + e.what());
    }
    expect(')');
    skip();
    if (pos != text.size()) throw pattern_error("bad pattern literal: \"" + text + "\"");
    return p;
}

bool valid_embedding(const poset& pattern, const domain& d, const embedding_map& map) {
    int sz = pattern.size();
    if (static_cast<int>(map.images.size()) != sz) return false;
    for (auto& x : map.images) {
        if (x.n != d.n()) return false;
        if (!d.present(x.bits)) return false;
    }
    for (int a = 0; a < sz; ++a) {
        for (int b = 0; b < sz; ++b) {
            if (a == b) continue;
            if (map.images[a].bits == map.images[b].bits) return false;  // injective
            bool img_le = map.images[a].subset_of(map.images[b]);
            if (pattern.le(a, b) && !img_le) return false;
            if (map.mode == embed_mode::strong && !pattern.le(a, b) && img_le) return false;
        }
    }
    return true;
}

namespace {

// Linear extension of the pattern, most-constrained (highest relation count)
// first among the minimal remaining elements. A forced element is placed
// first regardless; order affects only search effort, not completeness.
std::vector<int> embed_order(const poset& pattern, std::optional<int> first) {
    int sz = pattern.size();
    std::vector<int> order;
    std::vector<char> placed(sz, 0);
    if (first) {
        order.push_back(*first);
        placed[*first] = 1;
    }
    while (static_cast<int>(order.size()) < sz) {
        int pick = -1, pick_rel = -1;
        for (int cand = 0; cand < sz; ++cand) {
            if (placed[cand]) continue;
            bool minimal = true;
            for (int below = 0; below < sz && minimal; ++below)
                if (below != cand && !placed[below] && pattern.le(below, cand)) minimal = false;
            if (!minimal) continue;
            int rel = pattern.relation_count(cand);
            if (rel > pick_rel) { pick = cand; pick_rel = rel; }
        }
        order.push_back(pick);
        placed[pick] = 1;
    }
    return order;
}

struct embed_ctx {
    const poset& pattern;
    int n;
    const std::vector<mask_t>& elems;
    embed_mode mode;
    const embed_options& opt;
    std::vector<int> order;
    std::vector<mask_t> image;      // by pattern element
    std::vector<char> img_set;
    std::vector<char> elem_used;    // by element index

    bool consistent(int p_elt, mask_t cand) const {
        for (int q = 0; q < pattern.size(); ++q) {
            if (!img_set[q] || q == p_elt) continue;
            mask_t qi = image[q];
            if (qi == cand) return false;
            bool cand_le = (cand & qi) == cand;
            bool qi_le = (qi & cand) == qi;
            if (pattern.le(p_elt, q) && !cand_le) return false;
            if (pattern.le(q, p_elt) && !qi_le) return false;
            if (mode == embed_mode::strong && !pattern.comparable(p_elt, q) && (cand_le || qi_le))
                return false;
            if (opt.distinct_colors && opt.colors &&
                (*opt.colors)[cand] == (*opt.colors)[qi])
                return false;
        }
        return true;
    }

    bool search(std::size_t step) {
        if (step == order.size()) return true;
        int p_elt = order[step];
        for (std::size_t idx = 0; idx < elems.size(); ++idx) {
            if (elem_used[idx]) continue;
            mask_t cand = elems[idx];
            if (!consistent(p_elt, cand)) continue;
            image[p_elt] = cand;
            img_set[p_elt] = 1;
            elem_used[idx] = 1;
            if (search(step + 1)) return true;
            img_set[p_elt] = 0;
            elem_used[idx] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<embedding_map> embed_in_elements(const poset& pattern, int n,
                                               const std::vector<mask_t>& elems,
                                               embed_mode mode, const embed_options& opt) {
    if (pattern.size() == 0) return embedding_map{{}, mode};
    if (pattern.size() > static_cast<int>(elems.size())) return std::nullopt;

    auto run = [&](std::optional<int> forced_elt) -> std::optional<embedding_map> {
        embed_ctx ctx{pattern, n, elems, mode, opt,
                      embed_order(pattern, forced_elt),
                      std::vector<mask_t>(pattern.size(), 0),
                      std::vector<char>(pattern.size(), 0),
                      std::vector<char>(elems.size(), 0)};
        std::size_t start = 0;
        if (forced_elt) {
            mask_t fm = *opt.forced_mask;
            auto it = std::find(elems.begin(), elems.end(), fm);
            if (it == elems.end()) return std::nullopt;
            ctx.image[*forced_elt] = fm;
            ctx.img_set[*forced_elt] = 1;
            ctx.elem_used[it - elems.begin()] = 1;
            if (!ctx.consistent(*forced_elt, fm)) return std::nullopt;
            start = 1;
        }
        if (!ctx.search(start)) return std::nullopt;
        embedding_map out;
        out.mode = mode;
        out.images.reserve(pattern.size());
        for (int a = 0; a < pattern.size(); ++a) out.images.emplace_back(ctx.image[a], n);
        return out;
    };

    if (!opt.forced_mask) return run(std::nullopt);
    // The forced element is maximal among `elems` in every use here, so only
    // maximal pattern elements can map onto it; trying each keeps the check
    // complete.
    for (int p_elt = 0; p_elt < pattern.size(); ++p_elt) {
        bool maximal = true;
        for (int q = 0; q < pattern.size() && maximal; ++q)
            if (q != p_elt && pattern.le(p_elt, q)) maximal = false;
        if (!maximal) continue;
        if (auto found = run(p_elt)) return found;
    }
    return std::nullopt;
}

std::optional<embedding_map> embed(const poset& pattern, const domain& d, embed_mode mode) {
    return embed_in_elements(pattern, d.n(), d.present_masks(), mode);
}

int dim2(const poset& p, int n_max) {
    if (n_max > max_exhaustive_ground)
        throw std::invalid_argument("dim2: bound above exhaustive range");
    for (int n = 0; n <= n_max; ++n)
        if (embed(p, domain::full(n), embed_mode::strong)) return n;
    throw undecided_error("dim2: no embedding up to B_" + std::to_string(n_max));
}

int extremal_count(const poset& p) {
    int count = 0;
    for (int x = 0; x < p.size(); ++x) {
        bool global_min = true, global_max = true;
        for (int y = 0; y < p.size(); ++y) {
            if (!p.le(x, y)) global_min = false;
            if (!p.le(y, x)) global_max = false;
        }
        if (global_min || global_max) ++count;
    }
    return count;
}

int antichain_dim2(int k) {
    if (k < 1) throw std::invalid_argument("antichain_dim2: need k >= 1");
    auto middle_binomial = [](int m) {
        std::uint64_t r = 1;
        for (int i = 1; i <= m / 2; ++i) r = r * (m - i + 1) / i;
        return r;
    };
    for (int m = 0;; ++m)
        if (middle_binomial(m) >= static_cast<std::uint64_t>(k)) return m;
}

}  // namespace vramsey
