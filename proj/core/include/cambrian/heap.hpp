#pragma once

#include <array>
#include <vector>

#include "cambrian/coxeter.hpp"

namespace cambrian {

/*
  The natural partial order on the letters of a word: sigma_i precedes
  sigma_j iff the two positions are connected by a chain of pairwise
  non-commuting letters read left to right.  covers holds the transitive
  reduction; the word-position order is a linear extension.
*/
struct Heap {
    std::vector<int> gens;                      // generator per letter
    std::vector<long long> positions;           // optional, from the source word
    std::vector<std::pair<int, int>> covers;    // (lower, upper), lexicographic
    std::vector<std::array<int, 2>> coords;     // optional planar coordinates
    bool has_coords = false;

    std::vector<std::vector<int>> up, down;     // cover neighbors

    int size() const { return static_cast<int>(gens.size()); }
};

Heap build_heap(const Word& word, const CoxeterSystem& sys);

// full predecessor bitmasks (one word-row per letter, 64 letters per limb)
std::vector<std::vector<uint64_t>> predecessor_masks(const Heap& heap);

/*
  Integer planar coordinates for a heap whose letters carry positions in
  c^infty: letter at position p gets x = copy0_x[gen] + 2*(p/n), y = draw_y.
  Throws if positions are missing or inconsistent with c.
*/
void add_planar_coords(Heap& heap, const CoxeterSystem& sys, const CoxeterElement& c);

// the heap of c^k, letters in word order with positions 0..nk-1
Heap power_heap(const CoxeterSystem& sys, const CoxeterElement& c, int k);

/*
  Greedy embedding of a word into c^infty: each letter is placed at the
  earliest position of its generator after all of its predecessors.  The
  result is the lexicographically first subword of c^infty that coincides
  with the input up to commutations.
*/
Word embed_in_power(const Word& word, const CoxeterSystem& sys, const CoxeterElement& c);

long long count_ideals(const Heap& heap);

// all order ideals as sorted letter-index sets, in lexicographic order
std::vector<std::vector<int>> enumerate_ideals(const Heap& heap);

// one reduced word per ideal (letters in word-index order)
std::vector<Word> enumerate_singletons(const Heap& heap);

// labeled-poset isomorphism; same-generator letters form chains, so the
// only candidate bijection matches k-th occurrences per generator
bool heaps_isomorphic(const Heap& a, const Heap& b);

}  // namespace cambrian
