#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vramsey/checker.hpp"

namespace vramsey {

// Node budget ran out before the question was decided.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class search_outcome { witness, exhausted, inconclusive };

enum class color_symmetry_mode { automatic, on, off };

struct search_config {
    int workers = 1;                     // OpenMP tasks run over a frontier split
    std::optional<std::uint64_t> node_budget;
    bool orbit_pruning = true;           // prune non-canonical prefixes under the
                                         // domain stabilizer
    int symmetry_levels = 2;             // size-levels covered by orbit pruning
    color_symmetry_mode color_symmetry = color_symmetry_mode::automatic;
    int frontier_levels = 2;             // size-levels assigned before the split
    std::uint64_t seed = 0;              // echoed into certificates
};

struct search_certificate {
    search_outcome outcome = search_outcome::inconclusive;
    std::optional<coloring> witness;
    std::uint64_t nodes = 0;   // deterministic across worker counts on
                               // budget-free runs: aborted subtrees are excluded
    std::string symmetry;      // reductions applied, for the record
    double elapsed_ms = 0.0;
    search_config config;
};

// DFS over colorings of the present elements in canonical order with
// incremental monochromatic pruning. Witness outcome returns a coloring that
// passes the independent checker; exhausted certifies no good coloring
// exists. k must equal targets.size(). Ground size at most 6.
search_certificate find_good_coloring(const domain& d, int k, const target_list& targets,
                                      const search_config& cfg = {});

// Plain enumeration of all k^|D| colorings with the generic checker; the
// serial reference the reduced search is tested against.
search_certificate reference_find_good_coloring(const domain& d, int k,
                                                const target_list& targets);

// Partition semantics: colorings with any number of classes, enumerated as
// restricted-growth strings. Good means no class contains p and no rainbow q
// (q an antichain).
search_certificate find_good_partition_coloring(const domain& d, const poset& p,
                                                const poset& q, const search_config& cfg = {},
                                                embed_mode mode = embed_mode::strong);

struct ramsey_result {
    int value = -1;
    std::optional<search_certificate> lower;  // witness at value-1, absent for value 0
    search_certificate upper;                 // exhaustion at value
};

// Least N with B_N exhausted for the target list; good colorings restrict
// downward, so the first exhausted level decides. Throws undecided_error
// past n_max.
ramsey_result compute_ramsey(const target_list& targets, int n_max,
                             const search_config& cfg = {});

// Least N with B_N exhausted under partition semantics.
ramsey_result compute_rainbow_ramsey(const poset& p, const poset& q, int n_max,
                                     const search_config& cfg = {},
                                     embed_mode mode = embed_mode::strong);

// Exhausted -> true, witness -> false, budget -> budget_error. Never turns
// an inconclusive run into a boolean.
bool is_ramsey_domain(const domain& d, const target_list& targets,
                      const search_config& cfg = {});

// Ramsey and every one-element-smaller sub-domain is not.
bool is_minimal_ramsey(const domain& d, const target_list& targets,
                       const search_config& cfg = {});

// All minimal Ramsey domains of the form B_n minus the top minus at most
// max_removed further elements, one representative per ground-permutation
// class, canonical form, sorted.
std::vector<domain> enumerate_minimal_ramsey(int n, const target_list& targets,
                                             const search_config& cfg = {},
                                             int max_removed = 3);

// Does every 2-coloring of B_{m+n+1} that repeats the color of {} on some
// co-singleton contain a V(m,m) in color 1 or a V(n,n) in color 2?
// Enumerates all colorings directly for m+n+1 <= 4; ground 5 runs as a
// pruned exhaustive search, with an internal node budget when m != n that
// throws undecided_error if it blows.
bool verify_vmn_lemma(int m, int n);

}  // namespace vramsey
