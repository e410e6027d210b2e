// Compares the plain-enumeration reference, the reduced serial search, and
// the reduced search over OpenMP workers on fixed instances. Node counts for
// the reduced runs must agree across worker counts; wall times are whatever
// the machine gives.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "vramsey/checker.hpp"
#include "vramsey/search.hpp"

using namespace vramsey;

namespace {

struct timing {
    std::uint64_t nodes = 0;
    double ms = 0.0;
    bool ran = false;
};

timing timed(const std::function<search_certificate()>& run) {
    auto t0 = std::chrono::steady_clock::now();
    search_certificate cert = run();
    double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
            .count();
    return {cert.nodes, ms, true};
}

void row(const std::string& name, const timing& plain, const timing& serial,
         const timing& parallel) {
    std::printf("%-34s", name.c_str());
    if (plain.ran)
        std::printf("  %10llu %8.1f", static_cast<unsigned long long>(plain.nodes), plain.ms);
    else
        std::printf("  %10s %8s", "-", "-");
    std::printf("  %10llu %8.1f", static_cast<unsigned long long>(serial.nodes), serial.ms);
    std::printf("  %10llu %8.1f", static_cast<unsigned long long>(parallel.nodes),
                parallel.ms);
    std::printf("  %s\n", serial.nodes == parallel.nodes ? "agree" : "DIFFER");
}

}  // namespace

int main() {
    search_config serial;
    search_config four;
    four.workers = 4;

    std::printf("%-34s  %10s %8s  %10s %8s  %10s %8s  %s\n", "instance", "plain", "ms",
                "serial", "ms", "workers=4", "ms", "nodes");

    struct mono_case {
        const char* name;
        int n;
        const char* targets;
        bool plain_feasible;  // plain enumerates k^(2^n) leaves
    };
    const mono_case mono[] = {
        {"B_3 2-col V(1,1),V(1,1)", 3, "V(1,1),V(1,1)", true},
        {"B_4 2-col V(1,2),V(1,2)", 4, "V(1,2),V(1,2)", true},
        {"B_4 3-col V(1,1) x3", 4, "V(1,1),V(1,1),V(1,1)", false},
        {"B_5 2-col V(1,2),V(1,2)", 5, "V(1,2),V(1,2)", false},
        {"B_5 2-col V(2,2),V(2,2)", 5, "V(2,2),V(2,2)", false},
    };
    for (const mono_case& c : mono) {
        target_list targets = parse_targets(c.targets);
        int k = static_cast<int>(targets.size());
        domain d = domain::full(c.n);
        timing plain;
        if (c.plain_feasible)
            plain = timed([&] { return reference_find_good_coloring(d, k, targets); });
        timing s = timed([&] { return find_good_coloring(d, k, targets, serial); });
        timing p = timed([&] { return find_good_coloring(d, k, targets, four); });
        row(c.name, plain, s, p);
    }

    struct partition_case {
        const char* name;
        int n;
        const char* p;
        int q_size;
    };
    const partition_case part[] = {
        {"B_3 partition V(1,2) | A(2)", 3, "V(1,2)", 2},
        {"B_4 partition V(1,2) | A(2)", 4, "V(1,2)", 2},
        {"B_4 partition B(2) | A(2)", 4, "B(2)", 2},
    };
    for (const partition_case& c : part) {
        poset p = parse_pattern(c.p);
        poset q = poset::antichain(c.q_size);
        domain d = domain::full(c.n);
        timing s = timed([&] { return find_good_partition_coloring(d, p, q, serial); });
        timing pr = timed([&] { return find_good_partition_coloring(d, p, q, four); });
        row(c.name, timing{}, s, pr);
    }
    return 0;
}
