#include "vramsey/render.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace vramsey {

namespace {

const char* palette(int color) {
    static const char* fills[] = {"#ffffff", "#ffd7d7", "#d7e8ff", "#d8f5d0",
                                  "#fff3c2", "#ecd9ff", "#ffe0b8", "#d9f2f2",
                                  "#f1d4e5"};
    if (color < 0 || color > 8) color = 0;
    return fills[color];
}

// Covers inside the domain: y covers x when x < y and nothing present sits
// strictly between.
std::vector<std::pair<mask_t, mask_t>> cover_pairs(const domain& d) {
    std::vector<mask_t> present = d.present_masks();
    std::vector<std::pair<mask_t, mask_t>> covers;
    for (mask_t x : present)
        for (mask_t y : present) {
            if (x == y || (x & y) != x) continue;
            bool direct = true;
            for (mask_t z : present) {
                if (z == x || z == y) continue;
                if ((x & z) == x && (z & y) == z) { direct = false; break; }
            }
            if (direct) covers.emplace_back(x, y);
        }
    return covers;
}

std::string node_name(mask_t m) { return "s" + std::to_string(m); }

}  // namespace

std::string hasse_dot(const domain& d, const std::optional<coloring>& c) {
    std::ostringstream out;
    out << "graph hasse {\n  rankdir=BT;\n  node [shape=ellipse, style=filled];\n";
    std::map<int, std::vector<mask_t>> by_size;
    for (mask_t m : d.present_masks()) by_size[element_set(m, d.n()).card()].push_back(m);
    for (auto& [size, masks] : by_size) {
        out << "  { rank=same;";
        for (mask_t m : masks) out << " " << node_name(m) << ";";
        out << " }\n";
    }
    for (mask_t m : d.present_masks()) {
        element_set x(m, d.n());
        int color = c ? c->at(m) : 0;
        out << "  " << node_name(m) << " [label=\"" << format_set(x);
        if (color > 0) out << "\\n" << color;
        out << "\", fillcolor=\"" << palette(color) << "\"];\n";
    }
    for (auto& [x, y] : cover_pairs(d))
        out << "  " << node_name(x) << " -- " << node_name(y) << ";\n";
    out << "}\n";
    return out.str();
}

std::string hasse_svg(const domain& d, const std::optional<coloring>& c) {
    std::map<int, std::vector<mask_t>> by_size;
    for (mask_t m : d.present_masks()) by_size[element_set(m, d.n()).card()].push_back(m);
    int rows = static_cast<int>(by_size.size());
    std::size_t widest = 1;
    for (auto& [size, masks] : by_size) widest = std::max(widest, masks.size());

    const int cell_w = 110, cell_h = 80, r = 24;
    int width = static_cast<int>(widest) * cell_w + cell_w;
    int height = rows * cell_h + cell_h;

    std::map<mask_t, std::pair<int, int>> at;
    int row = 0;
    for (auto& [size, masks] : by_size) {
        int y = height - (row + 1) * cell_h;  // small sets at the bottom
        int offset = (width - static_cast<int>(masks.size()) * cell_w) / 2;
        for (std::size_t i = 0; i < masks.size(); ++i)
            at[masks[i]] = {offset + static_cast<int>(i) * cell_w + cell_w / 2, y};
        ++row;
    }

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    for (auto& [x, y] : cover_pairs(d)) {
        auto [x1, y1] = at[x];
        auto [x2, y2] = at[y];
        out << "  <line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\""
            << y2 << "\" stroke=\"#555\" stroke-width=\"1\"/>\n";
    }
    for (mask_t m : d.present_masks()) {
        auto [cx, cy] = at[m];
        int color = c ? c->at(m) : 0;
        out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << r
            << "\" fill=\"" << palette(color) << "\" stroke=\"#222\"/>\n";
        out << "  <text x=\"" << cx << "\" y=\"" << cy + 4
            << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"monospace\">"
            << format_set(element_set(m, d.n()));
        if (color > 0) out << ":" << color;
        out << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace vramsey
