#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "vramsey/lattice.hpp"

namespace vramsey {

enum class embed_mode { strong, weak };

// Raised by pattern literal parsing on unknown syntax.
struct pattern_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Search bound exceeded without an answer (dim2 past n_max, Ramsey value
// past n_max, node budget hit). Distinct from a decided "no".
struct undecided_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite poset on at most 64 elements. leq[a] has bit b set iff a <= b
// (reflexive). For V(m,n): element 0 is the root, 1..m the first chain
// bottom-up, m+1..m+n the second chain bottom-up. For Cube(m) element
// indices are the masks of B_m.
struct poset {
    std::vector<std::uint64_t> leq;
    std::string label;

    static poset make_v(int m, int n);
    static poset chain(int k);
    static poset antichain(int k);
    static poset cube(int m);
    static poset induced(const domain& d);
    // Transitive-reflexive closure of the given cover pairs; rejects cycles.
    static poset from_covers(int size, const std::vector<std::pair<int, int>>& covers);

    int size() const { return static_cast<int>(leq.size()); }
    bool le(int a, int b) const { return (leq[a] >> b) & 1u; }
    bool comparable(int a, int b) const { return le(a, b) || le(b, a); }
    int height() const;            // longest chain, in elements
    int relation_count(int a) const;
};

poset dual(const poset& p);
bool isomorphic(const poset& a, const poset& b);

// Pattern literals: "V(m,n)", "C(k)", "A(k)", "B(m)".
poset parse_pattern(const std::string& text);

struct embedding_map {
    std::vector<element_set> images;  // indexed by pattern element
    embed_mode mode = embed_mode::strong;
};

// Does the map realize the pattern in the domain under the given mode?
bool valid_embedding(const poset& pattern, const domain& d, const embedding_map& map);

// First embedding under the fixed search order (pattern elements in a
// most-constrained-first linear extension, candidate images in canonical
// order), or nullopt.
std::optional<embedding_map> embed(const poset& pattern, const domain& d, embed_mode mode);

// Core used by the checker: images restricted to `elems` (masks over B_n).
// forced_mask, when set, must appear in the image. colors+distinct makes
// images pairwise differently colored (rainbow search).
struct embed_options {
    std::optional<mask_t> forced_mask;
    const std::vector<int>* colors = nullptr;  // color per mask index, 0 = absent
    bool distinct_colors = false;
};
std::optional<embedding_map> embed_in_elements(const poset& pattern, int n,
                                               const std::vector<mask_t>& elems,
                                               embed_mode mode, const embed_options& opt = {});

// Least n <= n_max with a strong embedding into B_n; throws undecided_error
// past the bound.
int dim2(const poset& p, int n_max = max_exhaustive_ground);

// Number of extremal elements: global minimum plus global maximum count.
int extremal_count(const poset& p);

// Least m with binomial(m, floor(m/2)) >= k: the 2-dimension of the
// k-element antichain, by width of the middle layer.
int antichain_dim2(int k);

}  // namespace vramsey
