#pragma once

#include <optional>
#include <vector>

#include "cambrian/coxeter.hpp"
#include "cambrian/heap.hpp"

namespace cambrian {

/*
  A cut path: one directed edge of the 2-cover per edge of the Coxeter
  graph, stored in chain order from bottom (the s1/s2 edge) to top.  Every
  directed cycle of the 2-cover contains exactly one of its edges.
*/
struct CutPath {
    std::vector<int> edges;

    bool operator==(const CutPath& o) const { return edges == o.edges; }
};

struct CutFunction {
    std::vector<int> values;  // one per generator; values[0] odd
};

struct Tile {
    int slot;                  // 0-based position in the bottom-to-top chain
    int copy;
    int src, snk;              // same generator, consecutive copies
    int mid_lo, mid_hi;
    std::array<int, 4> edges;  // lo_enter, lo_exit, hi_enter, hi_exit
};

enum class Side { W, Psi };

/*
  The cylindrical 2-cover of a Coxeter element: the heap of c^h with its
  covers taken modulo h copies.  Vertices are (copy, generator) pairs; the
  wrap edges from copy h-1 back to copy 0 form the primary cut path and
  the edges joining the w0^c half to the psi(w0^c) half form the secondary
  one.  Immutable after construction.
*/
class TwoCover {
  public:
    TwoCover(const CoxeterSystem& sys, const CoxeterElement& c);

    const CoxeterSystem& system() const { return *sys_; }
    const CoxeterElement& element() const { return c_; }
    int copies() const { return h_; }

    // vertices
    int num_vertices() const { return n_ * h_; }
    int vertex(int copy, int gen) const { return copy * n_ + gen; }
    int vertex_copy(int v) const { return v / n_; }
    int vertex_gen(int v) const { return v % n_; }
    int vertex_x(int v) const { return x0_[vertex_gen(v)] + 2 * vertex_copy(v); }
    int vertex_y(int v) const { return sys_->draw_y(vertex_gen(v)); }
    Side part(int v) const { return part_[v]; }

    // edges; two per (copy, graph edge): within-copy and cross-copy
    int num_edges() const { return 2 * h_ * num_gamma_edges(); }
    int num_gamma_edges() const { return static_cast<int>(sys_->edges().size()); }
    int edge_id(int copy, int gamma_edge, bool cross) const {
        return (copy * num_gamma_edges() + gamma_edge) * 2 + (cross ? 1 : 0);
    }
    int edge_gamma(int e) const { return (e / 2) % num_gamma_edges(); }
    int edge_copy(int e) const { return e / (2 * num_gamma_edges()); }
    bool edge_cross(int e) const { return e & 1; }
    bool edge_wrap(int e) const { return edge_cross(e) && edge_copy(e) == h_ - 1; }
    int edge_tail(int e) const;
    int edge_head(int e) const;
    // twice the height of the edge midpoint
    int edge_mid_y2(int e) const { return vertex_y(edge_tail(e)) + vertex_y(edge_head(e)); }
    // W / Psi for an edge inside one half, nullopt for a part-joining edge
    std::optional<Side> edge_side(int e) const;

    const CutPath& kappa() const { return kappa_; }
    const CutPath& kappa_star() const { return kappa_star_; }

    const std::vector<Tile>& tiles() const { return tiles_; }
    int num_slots() const { return n_ - 2; }
    const std::vector<int>& chain_gamma_edges() const { return chain_; }
    // the slot-k tile having e on its lower / upper boundary pair (-1 if none)
    int lo_tile_of_edge(int e) const { return lo_tile_of_edge_[e]; }
    int hi_tile_of_edge(int e) const { return hi_tile_of_edge_[e]; }

    const Word& sorting_word() const { return w0c_; }

  private:
    void build_parts();
    void build_tiles();
    void build_cut_paths();

    const CoxeterSystem* sys_;
    CoxeterElement c_;
    int n_, h_;
    std::vector<int> x0_;
    std::vector<int> idx_in_c_;
    std::vector<Side> part_;
    std::vector<int> chain_;
    std::vector<Tile> tiles_;
    std::vector<int> lo_tile_of_edge_, hi_tile_of_edge_;
    CutPath kappa_, kappa_star_;
    Word w0c_;
};

std::vector<CutPath> enumerate_cut_paths(const TwoCover& tc);

CoxeterElement coxeter_element_of(const TwoCover& tc, const CutPath& k);

// tile ids bottom to top; ties at the branch resolved by chain position
std::vector<int> tiles_of(const TwoCover& tc, const CutPath& k);

// crossing tile against the primary (or the given base) cut path
std::optional<int> crosses(const TwoCover& tc, const CutPath& k);
std::optional<int> crosses(const TwoCover& tc, const CutPath& k, const CutPath& base);

// I(T_i^c) and F(T_i^c) for tile i (1-based) of the primary cut path
long long initial_segment_count(const TwoCover& tc, int i);
long long final_segment_count(const TwoCover& tc, int i);

long long q_value(const TwoCover& tc);
long long singleton_count_cutpaths(const TwoCover& tc);

// checks that cut paths avoiding the psi half biject with the order ideals
// of the heap of w0^c
bool ideal_cutpath_bijection_check(const TwoCover& tc, const Heap& sorting_heap);

void validate_cut_function(const CoxeterSystem& sys, const CutFunction& f);
CoxeterElement cut_function_element(const CoxeterSystem& sys, const CutFunction& f);
CutPath cut_path_of_function(const TwoCover& tc, const CutFunction& f);
bool functions_cross(const CoxeterSystem& sys, const CutFunction& f, const CutFunction& g);
std::vector<int> extrema(const CoxeterSystem& sys, const CutFunction& f);

// exhaustive cut-path validation against every simple directed cycle;
// intended for rank <= 4 (enabled in the CLI via CAMBRIAN_DEBUG_FULL_CYCLE_CHECK)
bool full_cycle_check(const TwoCover& tc, const std::vector<CutPath>& paths);

}  // namespace cambrian
