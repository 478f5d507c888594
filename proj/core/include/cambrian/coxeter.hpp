#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cambrian/ring.hpp"

namespace cambrian {

enum class Family { A, B, D, E, F, H, I2 };

struct CoxeterType {
    Family family;
    int rank;
    int m_param = 0;  // only for I2(m)

    // accepts strings like "A5", "B4", "E8", "I2:m=9"
    static CoxeterType parse(const std::string& spec);
    std::string str() const;
    int coxeter_number() const;
    void validate() const;  // throws std::invalid_argument
};

struct GammaEdge {
    int a, b;   // generator indices, a < b
    int label;  // m(a, b) >= 3
};

/*
  A word in the generators; generator indices are 0-based throughout the
  library (the CLI and all printed output use the 1-based names s1..sn).
  When the word is a subword of c^infty, positions records where each letter
  sits: letter at position p belongs to copy p/n of c and is the (p%n)-th
  letter of the chosen reduced word for c.
*/
struct Word {
    std::vector<int> letters;
    std::vector<long long> positions;

    size_t size() const { return letters.size(); }
};

/*
  Finite irreducible Coxeter system with exact root system.

  Generators are labeled by the planar-drawing convention: s1..sp run along
  a path of maximum length of the Coxeter graph; in types D and E the extra
  generator sn attaches to s_{n-2} resp. s_{n-3}.  Edges are listed path
  first, branch edge last; this order is the one used for element
  bitstrings.

  Group elements are handled as permutations of the root list.  The object
  is immutable after construction and safe to share across threads.
*/
class CoxeterSystem {
  public:
    using RootPerm = std::vector<int32_t>;

    explicit CoxeterSystem(const CoxeterType& type);

    const CoxeterType& type() const { return type_; }
    int rank() const { return n_; }
    int coxeter_number() const { return h_; }
    int longest_length() const { return n_ * h_ / 2; }

    int m(int i, int j) const { return matrix_[i][j]; }
    bool adjacent(int i, int j) const { return i != j && matrix_[i][j] >= 3; }
    const std::vector<GammaEdge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int gen) const { return neighbors_[gen]; }

    int path_length() const { return p_; }       // p in the labeling convention
    int branch_vertex() const { return branch_; }  // -1 when the graph is a path
    bool path_like() const { return branch_ < 0; }

    // height of a generator in the planar drawing (s1 at 0, sp at p-1)
    int draw_y(int gen) const { return draw_y_[gen]; }

    const Ring& ring() const { return ring_; }
    int num_roots() const { return static_cast<int>(root_sign_.size()); }
    bool root_positive(int idx) const { return root_sign_[idx] > 0; }
    int negate_root(int idx) const { return neg_root_[idx]; }
    int reflect_root(int gen, int idx) const { return simple_action_[gen][idx]; }

    RootPerm identity_perm() const;
    void apply_right(RootPerm& w, int gen) const;  // w <- w * s
    bool is_ascent(const RootPerm& w, int gen) const;
    int length(const RootPerm& w) const;

    const RootPerm& longest_element() const { return w0_; }
    const std::vector<int>& psi() const { return psi_; }

  private:
    void build_graph();
    void build_roots();
    void build_longest();

    CoxeterType type_;
    int n_, h_, p_, branch_;
    std::vector<std::vector<int>> matrix_;
    std::vector<GammaEdge> edges_;
    std::vector<std::vector<int>> neighbors_;
    std::vector<int> draw_y_;
    Ring ring_;
    std::vector<int> root_sign_;  // +1 / -1
    std::vector<int> neg_root_;
    std::vector<std::vector<int32_t>> simple_action_;
    RootPerm w0_;
    std::vector<int> psi_;
};

/*
  Coxeter element, identified with an acyclic orientation of the Coxeter
  graph.  Bit k of bits refers to edges()[k]: 0 orients a -> b (the
  canonical direction along the path), 1 orients b -> a.  word is the
  canonical reduced expression (topological sort, smallest generator
  first).  Elements compare equal iff their orientations agree.
*/
struct CoxeterElement {
    uint32_t bits = 0;
    std::vector<int> word;

    bool operator==(const CoxeterElement& o) const { return bits == o.bits; }
    bool operator!=(const CoxeterElement& o) const { return bits != o.bits; }
};

CoxeterElement element_from_bits(const CoxeterSystem& sys, uint32_t bits);
CoxeterElement element_from_word(const CoxeterSystem& sys, const std::vector<int>& word);
std::vector<CoxeterElement> enumerate_coxeter_elements(const CoxeterSystem& sys);
CoxeterElement reverse_element(const CoxeterSystem& sys, const CoxeterElement& c);
CoxeterElement bipartite_element(const CoxeterSystem& sys);

// true iff a comes before b in c (requires adjacent generators a, b)
bool edge_forward(const CoxeterSystem& sys, const CoxeterElement& c, int a, int b);

std::string element_bitstring(const CoxeterSystem& sys, const CoxeterElement& c);
CoxeterElement element_from_bitstring(const CoxeterSystem& sys, const std::string& bits);

// the c-sorting word of the longest element, with positions in c^infty
Word c_sorting_word(const CoxeterSystem& sys, const CoxeterElement& c);

// x-coordinates of the copy-0 letters in the planar drawing for c
std::vector<int> copy0_x(const CoxeterSystem& sys, const CoxeterElement& c);

std::string word_str(const Word& w);

}  // namespace cambrian
