#pragma once

#include <optional>
#include <vector>

#include "vramsey/constructions.hpp"
#include "vramsey/lattice.hpp"
#include "vramsey/poset.hpp"

namespace vramsey {

struct target {
    poset pattern;
    embed_mode mode = embed_mode::strong;
};
using target_list = std::vector<target>;

target_list parse_targets(const std::string& csv, embed_mode mode = embed_mode::strong);

enum class witness_kind { mono, rainbow };

struct witness {
    witness_kind kind = witness_kind::mono;
    int color = 0;  // 1-based target index for mono
    embedding_map map;
};

// Least color i whose class contains pattern T[i-1] under its mode, with the
// first embedding found under the fixed search order. Colors beyond the
// target list are ignored.
std::optional<witness> find_monochromatic(const coloring& c, const target_list& targets);

// An embedding of q with pairwise distinctly colored images, or nullopt.
std::optional<witness> find_rainbow(const coloring& c, const poset& q,
                                    embed_mode mode = embed_mode::strong);

// No monochromatic target in its own color class.
bool is_good(const coloring& c, const target_list& targets);

// Partition reading: no color class (whatever its label) contains p, and no
// rainbow q.
bool is_good_rainbow(const coloring& c, const poset& p, const poset& q,
                     embed_mode mode = embed_mode::strong);

// Strong V(m,n) detector over one color class by chain ranks: two chains
// Y_1<..<Y_m and Z_1<..<Z_n above a common root are fully cross-incomparable
// iff Y_1 || Z_n and Y_m || Z_1, so per-element longest-chain reach sets
// decide existence. Requires n <= 6. Agrees with the generic embedder.
std::optional<witness> find_monochromatic_v_fast(const coloring& c, int m, int n, int color);

// Existence-only core of the fast detector: does the family (bitset over
// masks of B_gn) contain a strong V(a,b)?
bool family_has_v(std::uint64_t family, int a, int b, const lattice_tables& t);

}  // namespace vramsey
