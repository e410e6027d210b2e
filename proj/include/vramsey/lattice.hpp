#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

// Subsets of [n] = {1,..,n} as bitmasks: element i <-> bit i-1.
// Masks double as flat array indices, so a coloring of B_n is a
// vector of length 2^n and a family over B_6 fits in one uint64_t.

namespace vramsey {

using mask_t = std::uint32_t;

inline constexpr int max_ground = 30;  // constructive ops
inline constexpr int max_exhaustive_ground = 6;
inline constexpr int coloring_ground_limit = 12;  // explicit coloring tables

// A subset of [n]. Invariant: bits < 2^n.
struct element_set {
    mask_t bits = 0;
    int n = 0;

    element_set() = default;
    element_set(mask_t b, int ground) : bits(b), n(ground) {
        if (ground < 0 || ground > max_ground)
            throw std::invalid_argument("element_set: ground size out of range");
        if (ground < max_ground && b >> ground)
            throw std::invalid_argument("element_set: bits outside ground set");
    }

    int card() const { return __builtin_popcount(bits); }
    bool contains(int i) const { return (bits >> (i - 1)) & 1u; }  // i is 1-based
    bool subset_of(const element_set& o) const { return (bits & o.bits) == bits; }
    bool proper_subset_of(const element_set& o) const { return subset_of(o) && bits != o.bits; }
    bool comparable(const element_set& o) const { return subset_of(o) || o.subset_of(*this); }
    bool operator==(const element_set& o) const { return bits == o.bits && n == o.n; }
};

// Canonical element order: cardinality ascending, then mask value ascending.
inline bool canonical_less(const element_set& a, const element_set& b) {
    int ca = a.card(), cb = b.card();
    return ca != cb ? ca < cb : a.bits < b.bits;
}
inline bool canonical_mask_less(mask_t a, mask_t b) {
    int ca = __builtin_popcount(a), cb = __builtin_popcount(b);
    return ca != cb ? ca < cb : a < b;
}

// All masks of B_n in canonical order.
std::vector<mask_t> canonical_masks(int n);

element_set complement(const element_set& x);

// Text form "{1,3}", "{}": 1-based, ascending.
std::string format_set(const element_set& x);
std::string format_mask(mask_t m);
element_set parse_set(const std::string& text, int n);

// All sets containing i and avoiding j, canonical order. 1-based i, j.
std::vector<element_set> interval_family(int n, int i, int j);

// Permutation of the ground set [n]; image[i] is the image of i+1, 0-based storage.
struct ground_permutation {
    std::vector<int> image;  // 0-based: coordinate i maps to image[i]

    static ground_permutation identity(int n);
    int n() const { return static_cast<int>(image.size()); }
    bool valid() const;
    mask_t apply_mask(mask_t m) const;
    ground_permutation inverse() const;
    ground_permutation after(const ground_permutation& first) const;  // this ∘ first
};

element_set apply_permutation(const element_set& x, const ground_permutation& g);

std::vector<ground_permutation> all_permutations(int n);  // n <= 8

bool is_chain(std::span<const element_set> family);
bool is_antichain(std::span<const element_set> family);

// B_n minus a removed family. present() is total over masks 0..2^n-1.
class domain {
public:
    explicit domain(int n);  // full B_n
    domain(int n, std::vector<mask_t> removed);

    static domain full(int n) { return domain(n); }

    int n() const { return n_; }
    bool present(mask_t m) const;
    std::size_t removed_count() const { return removed_.size(); }
    std::size_t size() const { return (std::size_t{1} << n_) - removed_.size(); }

    domain without(mask_t m) const;          // remove one more element
    domain without(const element_set& x) const { return without(x.bits); }

    const std::vector<mask_t>& removed_masks() const { return removed_; }  // value-sorted
    std::vector<element_set> removed_sets() const;                         // canonical order
    std::vector<mask_t> present_masks() const;                             // canonical order
    std::vector<element_set> elements() const;                             // canonical order

    // For n <= 6: present elements as one bitset indexed by mask.
    std::uint64_t present_bits() const;

    bool operator==(const domain& o) const { return n_ == o.n_ && removed_ == o.removed_; }

private:
    int n_;
    std::vector<mask_t> removed_;  // sorted by value, unique
};

domain apply_permutation(const domain& d, const ground_permutation& g);

// Permutations of [n] mapping the removed family onto itself. n <= 8.
std::vector<ground_permutation> domain_stabilizer(const domain& d);

// Comparability tables over all masks of B_n, n <= 6. Bit M of up_strict[X]
// is set iff X is a proper subset of M, and so on.
struct lattice_tables {
    int n = 0;
    std::array<std::uint64_t, 64> up_strict{}, down_strict{}, incomp{};

    static lattice_tables build(int n);
};

}  // namespace vramsey
