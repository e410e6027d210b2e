#include "vramsey/lattice.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace vramsey {

std::vector<mask_t> canonical_masks(int n) {
    if (n < 0 || n > 26) throw std::invalid_argument("canonical_masks: n out of range");
    std::vector<mask_t> out(std::size_t{1} << n);
    std::iota(out.begin(), out.end(), 0u);
    std::sort(out.begin(), out.end(), canonical_mask_less);
    return out;
}

element_set complement(const element_set& x) {
    mask_t full = x.n == 32 ? ~mask_t{0} : (mask_t{1} << x.n) - 1;
    return element_set(full & ~x.bits, x.n);
}

std::string format_mask(mask_t m) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if ((m >> i) & 1u) {
            if (!first) s += ',';
            s += std::to_string(i + 1);
            first = false;
        }
    }
    s += '}';
    return s;
}

std::string format_set(const element_set& x) { return format_mask(x.bits); }

element_set parse_set(const std::string& text, int n) {
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos; };
    skip_ws();
    if (pos >= text.size() || text[pos] != '{')
        throw std::invalid_argument("parse_set: expected '{' in \"" + text + "\"");
    ++pos;
    mask_t bits = 0;
    skip_ws();
    if (pos < text.size() && text[pos] == '}') {
        ++pos;
    } else {
        while (true) {
            skip_ws();
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("parse_set: expected element in \"" + text + "\"");
            int v = std::stoi(text.substr(start, pos - start));
            if (v < 1 || v > n)
                throw std::invalid_argument("parse_set: element out of range in \"" + text + "\"");
            if ((bits >> (v - 1)) & 1u)
                throw std::invalid_argument("parse_set: repeated element in \"" + text + "\"");
            bits |= mask_t{1} << (v - 1);
            skip_ws();
            if (pos < text.size() && text[pos] == ',') { ++pos; continue; }
            if (pos < text.size() && text[pos] == '}') { ++pos; break; }
            throw std::invalid_argument("parse_set: expected ',' or '}' in \"" + text + "\"");
        }
    }
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("parse_set: trailing input in \"" + text + "\"");
    return element_set(bits, n);
}

std::vector<element_set> interval_family(int n, int i, int j) {
    if (n < 2 || n > 26) throw std::invalid_argument("interval_family: n out of range");
    if (i < 1 || i > n || j < 1 || j > n || i == j)
        throw std::invalid_argument("interval_family: need distinct i, j in [n]");
    // Insert fixed bit i-1 set and bit j-1 clear around the free coordinates.
    int lo = std::min(i, j) - 1, hi = std::max(i, j) - 1;
    auto expand = [&](mask_t free) {
        mask_t m = free & ((mask_t{1} << lo) - 1);
        free >>= lo;
        m |= (free & ((mask_t{1} << (hi - lo - 1)) - 1)) << (lo + 1);
        free >>= (hi - lo - 1);
        m |= free << (hi + 1);
        return m | (mask_t{1} << (i - 1));
    };
    std::vector<element_set> out;
    out.reserve(std::size_t{1} << (n - 2));
    for (mask_t free : canonical_masks(n - 2)) out.emplace_back(expand(free), n);
    // expand is monotone in the free mask and adds one fixed bit, so canonical
    // order of the free masks is canonical order of the results.
    return out;
}

ground_permutation ground_permutation::identity(int n) {
    ground_permutation g;
    g.image.resize(n);
    std::iota(g.image.begin(), g.image.end(), 0);
    return g;
}

bool ground_permutation::valid() const {
    std::vector<char> seen(image.size(), 0);
    for (int v : image) {
        if (v < 0 || v >= static_cast<int>(image.size()) || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

mask_t ground_permutation::apply_mask(mask_t m) const {
    mask_t out = 0;
    for (std::size_t i = 0; i < image.size(); ++i)
        if ((m >> i) & 1u) out |= mask_t{1} << image[i];
    return out;
}

ground_permutation ground_permutation::inverse() const {
    ground_permutation g;
    g.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) g.image[image[i]] = static_cast<int>(i);
    return g;
}

ground_permutation ground_permutation::after(const ground_permutation& first) const {
    ground_permutation g;
    g.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) g.image[i] = image[first.image[i]];
    return g;
}

element_set apply_permutation(const element_set& x, const ground_permutation& g) {
    if (g.n() != x.n) throw std::invalid_argument("apply_permutation: ground size mismatch");
    if (!g.valid()) throw std::invalid_argument("apply_permutation: not a permutation");
    return element_set(g.apply_mask(x.bits), x.n);
}

std::vector<ground_permutation> all_permutations(int n) {
    if (n < 0 || n > 8) throw std::invalid_argument("all_permutations: n out of range");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    std::vector<ground_permutation> out;
    do {
        ground_permutation g;
        g.image = base;
        out.push_back(std::move(g));
    } while (std::next_permutation(base.begin(), base.end()));
    return out;
}

bool is_chain(std::span<const element_set> family) {
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
            if (!family[a].comparable(family[b])) return false;
    return true;
}

bool is_antichain(std::span<const element_set> family) {
    for (std::size_t a = 0; a < family.size(); ++a)
        for (std::size_t b = a + 1; b < family.size(); ++b)
            if (family[a].comparable(family[b])) return false;
    return true;
}

domain::domain(int n) : n_(n) {
    if (n < 0 || n > max_ground) throw std::invalid_argument("domain: n out of range");
}

domain::domain(int n, std::vector<mask_t> removed) : n_(n), removed_(std::move(removed)) {
    if (n < 0 || n > max_ground) throw std::invalid_argument("domain: n out of range");
    std::sort(removed_.begin(), removed_.end());
    removed_.erase(std::unique(removed_.begin(), removed_.end()), removed_.end());
    for (mask_t m : removed_)
        if (n < 32 && (m >> n)) throw std::invalid_argument("domain: removed mask outside B_n");
}

bool domain::present(mask_t m) const {
    return !std::binary_search(removed_.begin(), removed_.end(), m);
}

domain domain::without(mask_t m) const {
    if (!present(m)) throw std::invalid_argument("domain::without: element not present");
    auto r = removed_;
    r.push_back(m);
    return domain(n_, std::move(r));
}

std::vector<element_set> domain::removed_sets() const {
    std::vector<element_set> out;
    out.reserve(removed_.size());
    for (mask_t m : removed_) out.emplace_back(m, n_);
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<mask_t> domain::present_masks() const {
    if (n_ > 26) throw std::invalid_argument("domain: too large to enumerate");
    std::vector<mask_t> out;
    out.reserve(size());
    for (mask_t m : canonical_masks(n_))
        if (present(m)) out.push_back(m);
    return out;
}

std::vector<element_set> domain::elements() const {
    std::vector<element_set> out;
    out.reserve(size());
    for (mask_t m : present_masks()) out.emplace_back(m, n_);
    return out;
}

std::uint64_t domain::present_bits() const {
    if (n_ > max_exhaustive_ground) throw std::invalid_argument("present_bits: n > 6");
    std::uint64_t bits = n_ == 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (1 << n_)) - 1;
    for (mask_t m : removed_) bits &= ~(std::uint64_t{1} << m);
    return bits;
}

domain apply_permutation(const domain& d, const ground_permutation& g) {
    if (g.n() != d.n()) throw std::invalid_argument("apply_permutation: ground size mismatch");
    std::vector<mask_t> removed;
    removed.reserve(d.removed_masks().size());
    for (mask_t m : d.removed_masks()) removed.push_back(g.apply_mask(m));
    return domain(d.n(), std::move(removed));
}

std::vector<ground_permutation> domain_stabilizer(const domain& d) {
    std::vector<ground_permutation> out;
    for (auto& g : all_permutations(d.n())) {
        std::vector<mask_t> mapped;
        mapped.reserve(d.removed_masks().size());
        for (mask_t m : d.removed_masks()) mapped.push_back(g.apply_mask(m));
        std::sort(mapped.begin(), mapped.end());
        if (mapped == d.removed_masks()) out.push_back(g);
    }
    return out;
}

lattice_tables lattice_tables::build(int n) {
    if (n < 0 || n > max_exhaustive_ground)
        throw std::invalid_argument("lattice_tables: n out of range");
    lattice_tables t;
    t.n = n;
    int count = 1 << n;
    for (int a = 0; a < count; ++a) {
        for (int b = 0; b < count; ++b) {
            if (a == b) continue;
            bool ab = (a & b) == a;  // a subset of b
            bool ba = (a & b) == b;
            if (ab) t.up_strict[a] |= std::uint64_t{1} << b;
            if (ba) t.down_strict[a] |= std::uint64_t{1} << b;
            if (!ab && !ba) t.incomp[a] |= std::uint64_t{1} << b;
        }
    }
    return t;
}

}  // namespace vramsey
