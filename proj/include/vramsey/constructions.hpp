#pragma once

#include <optional>
#include <vector>

#include "vramsey/lattice.hpp"
#include "vramsey/poset.hpp"

namespace vramsey {

// Total coloring of a domain's present elements with colors 1..k.
// color_of is indexed by mask; 0 marks removed elements.
struct coloring {
    domain dom;
    std::vector<int> color_of;
    std::optional<int> k_declared;

    explicit coloring(domain d, int fill = 0)
        : dom(std::move(d)), color_of() {
        if (dom.n() > 20) throw std::invalid_argument("coloring: ground too large");
        color_of.assign(std::size_t{1} << dom.n(), 0);
        if (fill > 0)
            for (mask_t m : dom.present_masks()) color_of[m] = fill;
    }

    int n() const { return dom.n(); }
    int at(mask_t m) const { return color_of[m]; }
    void set(mask_t m, int c) { color_of[m] = c; }
    bool total() const;
    int max_color() const;
    std::vector<int> used_colors() const;  // distinct, ascending
    bool operator==(const coloring& o) const {
        return dom == o.dom && color_of == o.color_of;
    }
};

// Embedding of B_src into B_dst given by the image of every source mask.
struct cube_embedding {
    int src_n = 0;
    int dst_n = 0;
    std::vector<mask_t> image;  // indexed by source mask

    mask_t operator()(mask_t src) const { return image[src]; }
};

// Is the map a strong embedding whose image avoids `avoid` entirely?
bool valid_cube_embedding(const cube_embedding& e, const std::vector<element_set>& avoid);

embedding_map to_embedding_map(const cube_embedding& e);

cube_embedding compose(const cube_embedding& outer, const cube_embedding& inner);

// Strong embedding of B_{n-1} into B_n avoiding a chain C that misses at
// least one of {}, [n]. When the smallest member is nonempty the image is
// the sets avoiding a witness coordinate of it; when {} is in C the image
// is X | {w} for a coordinate w outside every member.
cube_embedding chain_removal_embedding(int n, const std::vector<element_set>& chain);

// Strong embedding of B_{n-1} into B_n avoiding an antichain A, with
// expansion coordinate w (1-based, default n): X maps to itself unless it
// contains a member of A, in which case w is added.
cube_embedding antichain_removal_embedding(int n, const std::vector<element_set>& antichain,
                                           int w = 0);

// Partition of a family into antichains by longest-chain-ending-here rank;
// part count equals the longest chain in the family.
std::vector<std::vector<element_set>> mirsky_antichain_partition(
    const std::vector<element_set>& family);

// Strong embedding of B_{n-h} into B_n avoiding every member of F, where h
// is the longest chain in F (in elements), by peeling one Mirsky antichain
// per step. forbid_top additionally avoids [n] (h then counts F plus [n]).
cube_embedding iterated_removal_embedding(int n, const std::vector<element_set>& family,
                                          bool forbid_top = false);

// Coloring of B_{n*k} splitting levels into k bands of n consecutive sizes:
// color(X) = floor(|X|/n) + 1 except the top, which takes top_color. Each
// band spans n sizes, so a monochromatic chain has at most n elements and
// no band fits a V(m,n), which needs an (n+1)-chain.
coloring layered_coloring(int n, int k, int top_color);

// Two-coloring of B_{m+n}: 1 below size m, 2 at size m and above.
coloring mixed_coloring(int m, int n);

// k-coloring of B_{k+1} minus one proper subset S with no monochromatic
// V(1,1). With S = {s_1 < ... < s_r}: the co-singleton missing s_j takes
// color j; otherwise sets containing S take min(|X|, k) and the rest
// |X| + 1. (The full set is capped at color k; it is comparable to
// everything, so no color class can build a V through it.)
coloring single_removal_v11_coloring(int k, const element_set& s);

// k-coloring of B_{n(k-1)+1} by ceil(|X|/n), with {} and the top pushed to
// color k. Classes 1..k-1 are bands of n sizes (no (n+1)-chain, so no
// V(m,n)); class k is exactly {{}, top}, and any antichain of distinctly
// colored sets would need one of those two, which are comparable to all.
coloring capped_band_coloring(int n, int k);

// Three-coloring of B_{N-1}, N = dim2(P) + extremal_count(P): {} takes 1,
// the top 2, everything else 3. Too small for a monochromatic P; any two
// colors meet only in comparable pairs.
coloring extremes_coloring(const poset& p, int n_max = max_exhaustive_ground);

}  // namespace vramsey
