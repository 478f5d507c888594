#include "cambrian/io.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace cambrian {

using ordered_json = nlohmann::ordered_json;

std::string heap_to_dot(const Heap& heap) {
    std::ostringstream os;
    os << "digraph heap {\n  rankdir=LR;\n  node [shape=circle];\n";
    for (int i = 0; i < heap.size(); ++i) {
        os << "  v" << i << " [label=\"s" << heap.gens[i] + 1 << "\"";
        if (heap.has_coords)
            os << ", pos=\"" << heap.coords[i][0] << "," << heap.coords[i][1] << "!\"";
        os << "];\n";
    }
    for (auto [i, j] : heap.covers) os << "  v" << i << " -> v" << j << ";\n";
    os << "}\n";
    return os.str();
}

std::string heap_to_json(const Heap& heap) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "heap";
    ordered_json letters = ordered_json::array();
    for (int i = 0; i < heap.size(); ++i) {
        ordered_json l;
        l["index"] = i;
        l["gen"] = heap.gens[i] + 1;
        if (!heap.positions.empty()) l["pos"] = heap.positions[i];
        letters.push_back(std::move(l));
    }
    j["letters"] = std::move(letters);
    ordered_json covers = ordered_json::array();
    for (auto [a, b] : heap.covers) covers.push_back({a, b});
    j["covers"] = std::move(covers);
    if (heap.has_coords) {
        ordered_json coords = ordered_json::array();
        for (const auto& c : heap.coords) coords.push_back({c[0], c[1]});
        j["coords"] = std::move(coords);
    }
    return j.dump(2) + "\n";
}

namespace {

int kappa_mark(const TwoCover& tc, int e) {
    const auto& k = tc.kappa().edges;
    const auto& ks = tc.kappa_star().edges;
    if (std::find(k.begin(), k.end(), e) != k.end()) return 1;
    if (std::find(ks.begin(), ks.end(), e) != ks.end()) return 2;
    return 0;
}

}  // namespace

std::string two_cover_to_dot(const TwoCover& tc) {
    std::ostringstream os;
    os << "digraph two_cover {\n  node [shape=circle];\n";
    for (int v = 0; v < tc.num_vertices(); ++v) {
        os << "  v" << v << " [label=\"s" << tc.vertex_gen(v) + 1 << "\", pos=\""
           << tc.vertex_x(v) << "," << tc.vertex_y(v) << "!\""
           << (tc.part(v) == Side::W ? "" : ", style=dashed") << "];\n";
    }
    for (int e = 0; e < tc.num_edges(); ++e) {
        os << "  v" << tc.edge_tail(e) << " -> v" << tc.edge_head(e);
        std::vector<std::string> attrs;
        if (tc.edge_wrap(e)) attrs.push_back("style=dashed");
        int mark = kappa_mark(tc, e);
        if (mark == 1) attrs.push_back("color=red, penwidth=2");
        if (mark == 2) attrs.push_back("color=blue, penwidth=2");
        if (!attrs.empty()) {
            os << " [";
            for (size_t i = 0; i < attrs.size(); ++i) os << (i ? ", " : "") << attrs[i];
            os << "]";
        }
        os << ";\n";
    }
    os << "}\n";
    return os.str();
}

std::string two_cover_to_json(const TwoCover& tc) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "two_cover";
    j["system"] = tc.system().type().str();
    j["element"] = element_bitstring(tc.system(), tc.element());
    j["copies"] = tc.copies();
    ordered_json vertices = ordered_json::array();
    for (int v = 0; v < tc.num_vertices(); ++v) {
        ordered_json vx;
        vx["copy"] = tc.vertex_copy(v);
        vx["gen"] = tc.vertex_gen(v) + 1;
        vx["part"] = tc.part(v) == Side::W ? 0 : 1;
        vx["x"] = tc.vertex_x(v);
        vx["y"] = tc.vertex_y(v);
        vertices.push_back(std::move(vx));
    }
    j["vertices"] = std::move(vertices);
    ordered_json edges = ordered_json::array();
    for (int e = 0; e < tc.num_edges(); ++e) {
        ordered_json ex;
        ex["from"] = tc.edge_tail(e);
        ex["to"] = tc.edge_head(e);
        ex["wrap"] = tc.edge_wrap(e) ? 1 : 0;
        edges.push_back(std::move(ex));
    }
    j["edges"] = std::move(edges);
    ordered_json tiles = ordered_json::array();
    for (const Tile& t : tc.tiles()) {
        ordered_json tx;
        tx["slot"] = t.slot;
        tx["copy"] = t.copy;
        tx["vertices"] = {t.src, t.mid_lo, t.mid_hi, t.snk};
        tiles.push_back(std::move(tx));
    }
    j["tiles"] = std::move(tiles);
    j["kappa_c"] = tc.kappa().edges;
    j["kappa_c_star"] = tc.kappa_star().edges;
    return j.dump(2) + "\n";
}

}  // namespace cambrian
