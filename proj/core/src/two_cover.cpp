#include "cambrian/two_cover.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace cambrian {

namespace {

[[noreturn]] void internal(const char* what) { throw std::logic_error(what); }

}  // namespace

TwoCover::TwoCover(const CoxeterSystem& sys, const CoxeterElement& c)
    : sys_(&sys), c_(c), n_(sys.rank()), h_(sys.coxeter_number()) {
    if (n_ < 2) throw std::invalid_argument("2-cover requires rank >= 2");
    x0_ = copy0_x(sys, c);
    idx_in_c_.assign(n_, -1);
    for (int i = 0; i < n_; ++i) idx_in_c_[c.word[i]] = i;

    // chain order of the graph edges from bottom to top; the branch edge is
    // inserted right after the path reaches the branch vertex
    int E = num_gamma_edges();
    if (sys.path_like()) {
        for (int k = 0; k < E; ++k) chain_.push_back(k);
    } else {
        int r = sys.branch_vertex();
        for (int k = 0; k < r; ++k) chain_.push_back(k);
        chain_.push_back(E - 1);
        for (int k = r; k < E - 1; ++k) chain_.push_back(k);
    }

    build_parts();
    build_tiles();
    build_cut_paths();
}

int TwoCover::edge_tail(int e) const {
    const GammaEdge& ge = sys_->edges()[edge_gamma(e)];
    bool fwd = edge_forward(*sys_, c_, ge.a, ge.b);
    int first = fwd ? ge.a : ge.b;
    int second = fwd ? ge.b : ge.a;
    return edge_cross(e) ? vertex(edge_copy(e), second) : vertex(edge_copy(e), first);
}

int TwoCover::edge_head(int e) const {
    const GammaEdge& ge = sys_->edges()[edge_gamma(e)];
    bool fwd = edge_forward(*sys_, c_, ge.a, ge.b);
    int first = fwd ? ge.a : ge.b;
    int second = fwd ? ge.b : ge.a;
    return edge_cross(e) ? vertex((edge_copy(e) + 1) % h_, first) : vertex(edge_copy(e), second);
}

std::optional<Side> TwoCover::edge_side(int e) const {
    Side a = part_[edge_tail(e)];
    Side b = part_[edge_head(e)];
    if (a != b) return std::nullopt;
    return a;
}

void TwoCover::build_parts() {
    w0c_ = c_sorting_word(*sys_, c_);
    std::vector<char> taken(static_cast<size_t>(n_) * h_, 0);
    for (long long p : w0c_.positions) {
        if (p < 0 || p >= static_cast<long long>(n_) * h_)
            internal("sorting word leaves the fundamental window");
        taken[p] = 1;
    }
    part_.assign(n_ * h_, Side::Psi);
    for (int copy = 0; copy < h_; ++copy)
        for (int idx = 0; idx < n_; ++idx)
            if (taken[copy * n_ + idx]) part_[vertex(copy, c_.word[idx])] = Side::W;

    int w_count = static_cast<int>(std::count(part_.begin(), part_.end(), Side::W));
    if (w_count != sys_->longest_length()) internal("halves of the 2-cover are unbalanced");
    for (int g = 0; g < n_; ++g) {
        if (part_[vertex(0, g)] != Side::W) internal("first copy of c not inside the w0^c half");
        if (part_[vertex(h_ - 1, g)] != Side::Psi) internal("last copy of c not inside the psi half");
        // copies of each generator used by w0^c must be a prefix run
        bool ended = false;
        for (int copy = 0; copy < h_; ++copy) {
            bool w = part_[vertex(copy, g)] == Side::W;
            if (ended && w) internal("w0^c does not use consecutive copies of a generator");
            if (!w) ended = true;
        }
    }
}

void TwoCover::build_tiles() {
    tiles_.clear();
    lo_tile_of_edge_.assign(num_edges(), -1);
    hi_tile_of_edge_.assign(num_edges(), -1);

    // (enter, exit, mid) of the two boundary edges a tile has on the side of
    // neighbor nbr of its source/sink generator g in copy i
    auto pair_for = [&](int g, int nbr, int i) {
        int ge = -1;
        const auto& edges = sys_->edges();
        for (size_t k = 0; k < edges.size(); ++k)
            if ((edges[k].a == g && edges[k].b == nbr) || (edges[k].a == nbr && edges[k].b == g))
                ge = static_cast<int>(k);
        assert(ge >= 0);
        if (edge_forward(*sys_, c_, g, nbr)) {
            return std::array<int, 3>{edge_id(i, ge, false), edge_id(i, ge, true),
                                      vertex(i, nbr)};
        }
        return std::array<int, 3>{edge_id(i, ge, true), edge_id((i + 1) % h_, ge, false),
                                  vertex((i + 1) % h_, nbr)};
    };

    for (int slot = 0; slot + 1 <= num_slots(); ++slot) {
        const GammaEdge& lo = sys_->edges()[chain_[slot]];
        const GammaEdge& hi = sys_->edges()[chain_[slot + 1]];
        int g = (lo.a == hi.a || lo.a == hi.b) ? lo.a : lo.b;
        int lo_nbr = lo.a == g ? lo.b : lo.a;
        int hi_nbr = hi.a == g ? hi.b : hi.a;
        for (int i = 0; i < h_; ++i) {
            auto lo_pair = pair_for(g, lo_nbr, i);
            auto hi_pair = pair_for(g, hi_nbr, i);
            Tile t;
            t.slot = slot;
            t.copy = i;
            t.src = vertex(i, g);
            t.snk = vertex((i + 1) % h_, g);
            t.mid_lo = lo_pair[2];
            t.mid_hi = hi_pair[2];
            t.edges = {lo_pair[0], lo_pair[1], hi_pair[0], hi_pair[1]};
            int id = static_cast<int>(tiles_.size());
            lo_tile_of_edge_[lo_pair[0]] = id;
            lo_tile_of_edge_[lo_pair[1]] = id;
            hi_tile_of_edge_[hi_pair[0]] = id;
            hi_tile_of_edge_[hi_pair[1]] = id;
            tiles_.push_back(t);
        }
    }
    if (static_cast<int>(tiles_.size()) != h_ * std::max(num_slots(), 0))
        internal("tile count differs from h*(n-2)");
}

void TwoCover::build_cut_paths() {
    kappa_.edges.clear();
    kappa_star_.edges.clear();
    for (int k : chain_) {
        kappa_.edges.push_back(edge_id(h_ - 1, k, true));
        int found = -1;
        for (int i = 0; i < h_; ++i)
            for (int cross = 0; cross < 2; ++cross) {
                int e = edge_id(i, k, cross);
                if (edge_wrap(e)) continue;
                if (!edge_side(e).has_value()) {
                    if (found >= 0) internal("graph edge with two part-joining flat edges");
                    found = e;
                }
            }
        if (found < 0) internal("graph edge with no part-joining flat edge");
        kappa_star_.edges.push_back(found);
    }
    for (int e : kappa_.edges)
        if (edge_side(e).has_value()) internal("wrap edge inside one half");

    // consecutive chain edges of both distinguished cut paths share a tile
    for (const CutPath* k : {&kappa_, &kappa_star_})
        for (int s = 0; s + 1 < static_cast<int>(k->edges.size()); ++s)
            if (lo_tile_of_edge_[k->edges[s]] != hi_tile_of_edge_[k->edges[s + 1]] ||
                lo_tile_of_edge_[k->edges[s]] < 0)
                internal("distinguished cut path fails the tile chain condition");
}

std::vector<CutPath> enumerate_cut_paths(const TwoCover& tc) {
    // Each path carries exactly one edge per graph edge.  The alternating
    // two-generator cycle of a graph edge contains all of its instances, so
    // those fundamental cycles are hit exactly once by construction; the
    // exhaustive check over all directed cycles lives in full_cycle_check.
    const CoxeterSystem& sys = tc.system();
    int E = tc.num_gamma_edges();
    const std::vector<int>& chain = tc.chain_gamma_edges();
    std::vector<CutPath> out;
    out.reserve((size_t(1) << E) * tc.copies());

    for (uint32_t bits = 0; bits < (1u << E); ++bits) {
        // bit k of bits orients graph edge k exactly as in CoxeterElement
        auto wants_tail = [&](int gamma_edge) {
            const GammaEdge& ge = sys.edges()[gamma_edge];
            return ((bits >> gamma_edge) & 1) ? ge.b : ge.a;
        };
        for (int start = 0; start < tc.copies(); ++start) {
            CutPath k;
            int ge0 = chain[0];
            bool fwd0 = edge_forward(sys, tc.element(), sys.edges()[ge0].a, sys.edges()[ge0].b);
            bool want_fwd0 = wants_tail(ge0) == sys.edges()[ge0].a;
            // within-copy instances realize the ambient direction, cross-copy
            // instances the reversed one
            k.edges.push_back(tc.edge_id(start, ge0, fwd0 != want_fwd0));
            for (int slot = 0; slot < tc.num_slots(); ++slot) {
                int tile = tc.lo_tile_of_edge(k.edges.back());
                if (tile < 0 || tc.tiles()[tile].slot != slot)
                    internal("cut path walk left its tile chain");
                const Tile& t = tc.tiles()[tile];
                int hi_enter = t.edges[2], hi_exit = t.edges[3];
                int tail_gen = tc.vertex_gen(tc.edge_tail(hi_enter));
                k.edges.push_back(wants_tail(chain[slot + 1]) == tail_gen ? hi_enter : hi_exit);
            }
            out.push_back(std::move(k));
        }
    }
    return out;
}

CoxeterElement coxeter_element_of(const TwoCover& tc, const CutPath& k) {
    uint32_t bits = 0;
    for (int e : k.edges) {
        int ge = tc.edge_gamma(e);
        int tail = tc.vertex_gen(tc.edge_tail(e));
        if (tail == tc.system().edges()[ge].b) bits |= 1u << ge;
    }
    return element_from_bits(tc.system(), bits);
}

std::vector<int> tiles_of(const TwoCover& tc, const CutPath& k) {
    std::vector<int> out;
    for (int slot = 0; slot < tc.num_slots(); ++slot) {
        int tile = tc.lo_tile_of_edge(k.edges[slot]);
        if (tile < 0 || tc.tiles()[tile].slot != slot ||
            tc.hi_tile_of_edge(k.edges[slot + 1]) != tile)
            internal("cut path does not determine a tile chain");
        out.push_back(tile);
    }
    return out;
}

namespace {

// vertex tags of the two components cut out by base and its partner: on every
// two-generator cycle the near side starts at the head of base's edge and is
// as long as the sorting word of the rebased element dictates
std::vector<Side> parts_for_base(const TwoCover& tc, const CutPath& base) {
    const CoxeterSystem& sys = tc.system();
    CoxeterElement rebased = reverse_element(sys, coxeter_element_of(tc, base));
    Word w = c_sorting_word(sys, rebased);
    std::vector<int> mult(sys.rank(), 0);
    for (int s : w.letters) ++mult[s];

    std::vector<int> tag(tc.num_vertices(), -1);
    const std::vector<int>& chain = tc.chain_gamma_edges();
    for (size_t j = 0; j < chain.size(); ++j) {
        const GammaEdge& ge = sys.edges()[chain[j]];
        bool fwd = edge_forward(sys, tc.element(), ge.a, ge.b);
        int first = fwd ? ge.a : ge.b;
        int arc = mult[ge.a] + mult[ge.b];
        int v = tc.edge_head(base.edges[j]);
        for (int step = 0; step < 2 * tc.copies(); ++step) {
            int want = step < arc ? 0 : 1;
            if (tag[v] >= 0 && tag[v] != want) internal("rebased halves are inconsistent");
            tag[v] = want;
            v = tc.edge_head(
                tc.edge_id(tc.vertex_copy(v), chain[j], tc.vertex_gen(v) != first));
        }
    }
    std::vector<Side> out(tc.num_vertices());
    for (int v = 0; v < tc.num_vertices(); ++v) {
        if (tag[v] < 0) internal("vertex missed by the rebased tagging");
        out[v] = tag[v] == 0 ? Side::W : Side::Psi;
    }
    return out;
}

std::optional<int> crosses_with_tags(const TwoCover& tc, const CutPath& k, const CutPath& base,
                                     const std::vector<Side>& tags) {
    std::vector<int> tk = tiles_of(tc, k);
    std::vector<int> tb = tiles_of(tc, base);
    bool shares = false;
    for (int t : tk)
        if (std::find(tb.begin(), tb.end(), t) != tb.end()) shares = true;
    if (!shares) return std::nullopt;

    auto side_of = [&](int e) -> std::optional<Side> {
        Side a = tags[tc.edge_tail(e)];
        Side b = tags[tc.edge_head(e)];
        if (a != b) return std::nullopt;
        return a;
    };

    bool has_w = false, has_psi = false;
    int min_edge = -1;
    for (int e : k.edges) {
        auto side = side_of(e);
        if (!side) continue;
        if (*side == Side::W) has_w = true;
        if (*side == Side::Psi) has_psi = true;
        if (min_edge < 0 || tc.edge_mid_y2(e) < tc.edge_mid_y2(min_edge)) min_edge = e;
    }
    if (!has_w || !has_psi) return std::nullopt;

    Side initial = *side_of(min_edge);
    Side final = initial == Side::W ? Side::Psi : Side::W;
    for (int t : tk) {
        for (int e : tc.tiles()[t].edges) {
            if (std::find(k.edges.begin(), k.edges.end(), e) == k.edges.end()) continue;
            auto side = side_of(e);
            if (side && *side == final) return t;
        }
    }
    internal("crossing cut path without an edge of the final side on its tiles");
}

}  // namespace

std::optional<int> crosses(const TwoCover& tc, const CutPath& k) {
    std::vector<Side> tags(tc.num_vertices());
    for (int v = 0; v < tc.num_vertices(); ++v) tags[v] = tc.part(v);
    return crosses_with_tags(tc, k, tc.kappa(), tags);
}

std::optional<int> crosses(const TwoCover& tc, const CutPath& k, const CutPath& base) {
    return crosses_with_tags(tc, k, base, parts_for_base(tc, base));
}

namespace {

// the lower/upper boundary edges of tile i (1-based) of the base cut path
// that do not belong to the base, and the component on the upper side
struct TileSides {
    int tile;
    int e1, e2;
    Side out;
};

TileSides primary_tile_sides(const TwoCover& tc, int i) {
    if (i < 1 || i > tc.num_slots()) throw std::invalid_argument("tile index out of range");
    std::vector<int> tb = tiles_of(tc, tc.kappa());
    const Tile& t = tc.tiles()[tb[i - 1]];
    std::vector<int> rest;
    for (int e : t.edges)
        if (std::find(tc.kappa().edges.begin(), tc.kappa().edges.end(), e) ==
            tc.kappa().edges.end())
            rest.push_back(e);
    if (rest.size() != 2) internal("primary cut path does not split its tile boundary 2+2");
    if (tc.edge_mid_y2(rest[0]) == tc.edge_mid_y2(rest[1]))
        internal("tile boundary edges at equal height");
    if (tc.edge_mid_y2(rest[0]) > tc.edge_mid_y2(rest[1])) std::swap(rest[0], rest[1]);
    auto side = tc.edge_side(rest[1]);
    if (!side) internal("upper tile boundary edge joins the two halves");
    return {tb[i - 1], rest[0], rest[1], *side};
}

}  // namespace

long long initial_segment_count(const TwoCover& tc, int i) {
    TileSides ts = primary_tile_sides(tc, i);
    std::set<std::vector<int>> segments;
    for (const CutPath& k : enumerate_cut_paths(tc)) {
        if (tc.lo_tile_of_edge(k.edges[i - 1]) != ts.tile) continue;  // tile not on k's chain
        std::vector<int> seg(k.edges.begin(), k.edges.begin() + i);
        bool ok = true;
        for (int e : seg) {
            auto side = tc.edge_side(e);
            if (side && *side == ts.out) ok = false;
        }
        if (!ok) continue;
        std::sort(seg.begin(), seg.end());
        segments.insert(std::move(seg));
    }
    return static_cast<long long>(segments.size());
}

long long final_segment_count(const TwoCover& tc, int i) {
    TileSides ts = primary_tile_sides(tc, i);
    std::set<std::vector<int>> segments;
    for (const CutPath& k : enumerate_cut_paths(tc)) {
        if (tc.lo_tile_of_edge(k.edges[i - 1]) != ts.tile) continue;
        if (k.edges[i] != ts.e2) continue;  // final segments containing e2
        std::vector<int> seg(k.edges.begin() + i, k.edges.end());
        std::sort(seg.begin(), seg.end());
        segments.insert(std::move(seg));
    }
    long long direct = static_cast<long long>(segments.size());
    long long closed = 1ll << (tc.num_slots() - i);
    if (direct != closed) internal("final segment count differs from 2^(n-2-i)");
    return closed;
}

long long q_value(const TwoCover& tc) {
    long long direct = 0;
    for (const CutPath& k : enumerate_cut_paths(tc))
        if (crosses(tc, k)) ++direct;

    long long by_tiles = 0;
    for (int i = 1; i <= tc.num_slots(); ++i)
        by_tiles += (1ll << (tc.num_slots() - i)) * initial_segment_count(tc, i);
    if (tc.num_slots() >= 0) by_tiles -= (1ll << tc.num_slots()) - 1;

    if (direct != by_tiles) internal("crossing count disagrees with the tile formula");
    return direct;
}

long long singleton_count_cutpaths(const TwoCover& tc) {
    int h = tc.copies();
    int slots = tc.num_slots();
    long long total = (1ll << slots) * (h + 1);
    for (int i = 1; i <= slots; ++i)
        total -= (1ll << (slots - i)) * initial_segment_count(tc, i);

    // double counting all cut paths gives S = 2^(n-2)*h - Q + 1
    long long q = q_value(tc);
    if (total != (1ll << slots) * h - q + 1) internal("cut path double counting failed");
    return total;
}

bool ideal_cutpath_bijection_check(const TwoCover& tc, const Heap& sorting_heap) {
    const CoxeterSystem& sys = tc.system();
    int n = sys.rank();

    // map W vertices to letters of the sorting-word heap
    std::vector<int> letter_of(tc.num_vertices(), -1);
    if (sorting_heap.positions.size() != sorting_heap.gens.size()) return false;
    for (int i = 0; i < sorting_heap.size(); ++i) {
        long long p = sorting_heap.positions[i];
        int v = tc.vertex(static_cast<int>(p) / n, sorting_heap.gens[i]);
        if (tc.part(v) != Side::W) return false;
        letter_of[v] = i;
    }

    std::set<std::vector<int>> avoiders;
    for (const CutPath& k : enumerate_cut_paths(tc)) {
        bool avoids = true;
        for (int e : k.edges) {
            auto side = tc.edge_side(e);
            if (side && *side == Side::Psi) avoids = false;
        }
        if (avoids) {
            std::vector<int> key = k.edges;
            std::sort(key.begin(), key.end());
            avoiders.insert(std::move(key));
        }
    }

    // explicit map: on each two-generator cycle an ideal picks the edge
    // leaving its last member, or the wrap edge when it owns none
    std::vector<std::vector<int>> ideals = enumerate_ideals(sorting_heap);
    std::set<std::vector<int>> image;
    for (const std::vector<int>& ideal : ideals) {
        std::vector<char> in_ideal(sorting_heap.size(), 0);
        for (int i : ideal) in_ideal[i] = 1;
        std::vector<int> key;
        for (int ge : tc.chain_gamma_edges()) {
            const GammaEdge& edge = sys.edges()[ge];
            int first = edge_forward(sys, tc.element(), edge.a, edge.b) ? edge.a : edge.b;
            int chosen = tc.edge_id(tc.copies() - 1, ge, true);
            int vtx = tc.vertex(0, first);
            bool w_arc_over = false;
            for (int j = 0; j < 2 * tc.copies(); ++j) {
                int leave = tc.edge_id(tc.vertex_copy(vtx), ge, tc.vertex_gen(vtx) != first);
                if (tc.part(vtx) == Side::W) {
                    if (w_arc_over) return false;  // W arc not contiguous
                    if (letter_of[vtx] >= 0 && in_ideal[letter_of[vtx]]) chosen = leave;
                } else {
                    w_arc_over = true;
                }
                vtx = tc.edge_head(leave);
            }
            key.push_back(chosen);
        }
        std::sort(key.begin(), key.end());
        if (!avoiders.count(key)) return false;
        image.insert(key);
    }
    return image.size() == ideals.size() && image.size() == avoiders.size();
}

void validate_cut_function(const CoxeterSystem& sys, const CutFunction& f) {
    if (f.values.size() != static_cast<size_t>(sys.rank()))
        throw std::invalid_argument("cut function needs one value per generator");
    if (((f.values[0] % 2) + 2) % 2 != 1)
        throw std::invalid_argument("cut function must be odd at s1");
    for (const GammaEdge& e : sys.edges())
        if (std::abs(f.values[e.a] - f.values[e.b]) != 1)
            throw std::invalid_argument("cut function must differ by 1 across each edge");
}

CoxeterElement cut_function_element(const CoxeterSystem& sys, const CutFunction& f) {
    validate_cut_function(sys, f);
    uint32_t bits = 0;
    const auto& edges = sys.edges();
    for (size_t k = 0; k < edges.size(); ++k)
        if (f.values[edges[k].a] > f.values[edges[k].b]) bits |= 1u << k;
    return element_from_bits(sys, bits);
}

CutPath cut_path_of_function(const TwoCover& tc, const CutFunction& f) {
    const CoxeterSystem& sys = tc.system();
    validate_cut_function(sys, f);
    int h = tc.copies();

    // anchor: the s2 letter whose x-coordinate is f(s1) modulo 2h
    int target = ((f.values[0] % (2 * h)) + 2 * h) % (2 * h);
    int sigma = -1;
    for (int copy = 0; copy < h; ++copy) {
        int v = tc.vertex(copy, 1);
        if (((tc.vertex_x(v) % (2 * h)) + 2 * h) % (2 * h) == target) sigma = v;
    }
    if (sigma < 0) internal("no s2 letter matches the anchor residue");

    // pick the s1 edge at sigma: incoming when f(s1) > f(s2), outgoing otherwise
    int ge0 = tc.chain_gamma_edges()[0];
    int first_edge = -1;
    for (int copy = 0; copy < h; ++copy)
        for (int cross = 0; cross < 2; ++cross) {
            int e = tc.edge_id(copy, ge0, cross);
            if (f.values[0] > f.values[1]) {
                if (tc.edge_head(e) == sigma) first_edge = e;
            } else {
                if (tc.edge_tail(e) == sigma) first_edge = e;
            }
        }
    if (first_edge < 0) internal("anchored s1 edge not found");

    // extend upward; kappa_f induces rev(c_f), so each edge points from the
    // generator with the larger value to the one with the smaller value
    CutPath k;
    k.edges.push_back(first_edge);
    const std::vector<int>& chain = tc.chain_gamma_edges();
    for (int slot = 0; slot < tc.num_slots(); ++slot) {
        int tile = tc.lo_tile_of_edge(k.edges.back());
        if (tile < 0 || tc.tiles()[tile].slot != slot) internal("cut function walk left its chain");
        const Tile& t = tc.tiles()[tile];
        const GammaEdge& ge = sys.edges()[chain[slot + 1]];
        int want_tail = f.values[ge.a] > f.values[ge.b] ? ge.a : ge.b;
        int hi_enter = t.edges[2], hi_exit = t.edges[3];
        k.edges.push_back(tc.vertex_gen(tc.edge_tail(hi_enter)) == want_tail ? hi_enter : hi_exit);
    }

    CoxeterElement expect = reverse_element(sys, cut_function_element(sys, f));
    if (!(coxeter_element_of(tc, k) == expect))
        internal("cut path of a cut function induces the wrong element");
    return k;
}

bool functions_cross(const CoxeterSystem& sys, const CutFunction& f, const CutFunction& g) {
    validate_cut_function(sys, f);
    validate_cut_function(sys, g);
    int n = sys.rank();
    int period = 2 * sys.coxeter_number();
    int gmin = *std::min_element(g.values.begin(), g.values.end());
    int gmax = *std::max_element(g.values.begin(), g.values.end());

    // equivalent representatives differ by multiples of 2h; outside this band
    // every comparison is one-sided
    long long lo = gmin - static_cast<long long>(n) * sys.coxeter_number() - f.values[0];
    long long hi = gmax + static_cast<long long>(n) * sys.coxeter_number() - f.values[0];
    for (long long shift = lo - ((lo % period) + period) % period; shift <= hi; shift += period) {
        bool less = false, greater = false;
        for (int s = 0; s < n; ++s) {
            long long v = f.values[s] + shift;
            if (v < g.values[s]) less = true;
            if (v > g.values[s]) greater = true;
        }
        if (less && greater) return true;
    }
    return false;
}

std::vector<int> extrema(const CoxeterSystem& sys, const CutFunction& f) {
    validate_cut_function(sys, f);
    std::vector<int> out;
    for (int s = 0; s < sys.rank(); ++s) {
        bool below = true, above = true;
        for (int t : sys.neighbors(s)) {
            if (f.values[s] >= f.values[t]) below = false;
            if (f.values[s] <= f.values[t]) above = false;
        }
        if (below || above) out.push_back(s);
    }
    int count = static_cast<int>(out.size());
    int min_allowed = sys.path_like() ? 2 : 3;
    if (count < min_allowed || count > sys.rank()) internal("extrema count out of range");
    return out;
}

bool full_cycle_check(const TwoCover& tc, const std::vector<CutPath>& paths) {
    // enumerate every simple directed cycle (anchored at its smallest vertex)
    std::vector<std::vector<int>> out_edges(tc.num_vertices());
    for (int e = 0; e < tc.num_edges(); ++e) out_edges[tc.edge_tail(e)].push_back(e);

    std::vector<std::vector<char>> cycles;  // edge membership masks
    std::vector<char> on_path(tc.num_vertices(), 0);
    std::vector<int> edge_stack;
    long long guard = 0;

    auto dfs = [&](auto&& self, int anchor, int v) -> void {
        if (++guard > 5'000'000) internal("cycle enumeration exceeded its budget");
        for (int e : out_edges[v]) {
            int w = tc.edge_head(e);
            if (w == anchor) {
                std::vector<char> mask(tc.num_edges(), 0);
                for (int pe : edge_stack) mask[pe] = 1;
                mask[e] = 1;
                cycles.push_back(std::move(mask));
                continue;
            }
            if (w < anchor || on_path[w]) continue;
            on_path[w] = 1;
            edge_stack.push_back(e);
            self(self, anchor, w);
            edge_stack.pop_back();
            on_path[w] = 0;
        }
    };
    for (int v = 0; v < tc.num_vertices(); ++v) {
        on_path[v] = 1;
        dfs(dfs, v, v);
        on_path[v] = 0;
    }

    for (const CutPath& k : paths)
        for (const std::vector<char>& cyc : cycles) {
            int hits = 0;
            for (int e : k.edges) hits += cyc[e];
            if (hits != 1) return false;
        }
    return true;
}

}  // namespace cambrian
