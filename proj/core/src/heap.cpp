#include "cambrian/heap.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

namespace cambrian {

namespace {

struct BitRows {
    int k;
    int limbs;
    std::vector<uint64_t> bits;

    explicit BitRows(int k_) : k(k_), limbs((k_ + 63) / 64), bits(size_t(k_) * limbs, 0) {}
    uint64_t* row(int i) { return bits.data() + size_t(i) * limbs; }
    const uint64_t* row(int i) const { return bits.data() + size_t(i) * limbs; }
    void set(int i, int j) { row(i)[j >> 6] |= uint64_t(1) << (j & 63); }
    bool get(int i, int j) const { return (row(i)[j >> 6] >> (j & 63)) & 1; }
    void or_into(int dst, int src) {
        uint64_t* d = row(dst);
        const uint64_t* s = row(src);
        for (int l = 0; l < limbs; ++l) d[l] |= s[l];
    }
};

}  // namespace

Heap build_heap(const Word& word, const CoxeterSystem& sys) {
    int k = static_cast<int>(word.letters.size());
    for (int g : word.letters)
        if (g < 0 || g >= sys.rank()) throw std::invalid_argument("word letter out of range");

    Heap heap;
    heap.gens = word.letters;
    heap.positions = word.positions;

    // succ[i] = all j with i < j in the natural partial order; scan right to
    // left, j inherits the successors of the nearest later non-commuting
    // letters
    BitRows succ(std::max(k, 1));
    for (int i = k - 1; i >= 0; --i)
        for (int j = i + 1; j < k; ++j)
            if (sys.adjacent(heap.gens[i], heap.gens[j]) && !succ.get(i, j)) {
                succ.set(i, j);
                succ.or_into(i, j);
            }

    BitRows pred(std::max(k, 1));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (succ.get(i, j)) pred.set(j, i);

    heap.up.assign(k, {});
    heap.down.assign(k, {});
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            if (!sys.adjacent(heap.gens[i], heap.gens[j]) || !succ.get(i, j)) continue;
            bool cover = true;
            for (int l = 0; l < succ.limbs && cover; ++l)
                if (succ.row(i)[l] & pred.row(j)[l]) cover = false;
            if (cover) {
                heap.covers.emplace_back(i, j);
                heap.up[i].push_back(j);
                heap.down[j].push_back(i);
            }
        }
    return heap;
}

std::vector<std::vector<uint64_t>> predecessor_masks(const Heap& heap) {
    int k = heap.size();
    int limbs = (k + 63) / 64;
    std::vector<std::vector<uint64_t>> pred(k, std::vector<uint64_t>(std::max(limbs, 1), 0));
    for (int j = 0; j < k; ++j)
        for (int i : heap.down[j]) {
            for (int l = 0; l < limbs; ++l) pred[j][l] |= pred[i][l];
            pred[j][i >> 6] |= uint64_t(1) << (i & 63);
        }
    return pred;
}

void add_planar_coords(Heap& heap, const CoxeterSystem& sys, const CoxeterElement& c) {
    if (heap.positions.size() != heap.gens.size())
        throw std::invalid_argument("planar coordinates require positions in a power of c");
    int n = sys.rank();
    std::vector<int> x0 = copy0_x(sys, c);
    heap.coords.assign(heap.size(), {0, 0});
    for (int i = 0; i < heap.size(); ++i) {
        long long pos = heap.positions[i];
        if (pos < 0 || c.word[pos % n] != heap.gens[i])
            throw std::invalid_argument("letter positions do not match a power of c");
        heap.coords[i] = {x0[heap.gens[i]] + 2 * static_cast<int>(pos / n),
                          sys.draw_y(heap.gens[i])};
    }
    heap.has_coords = true;
}

Heap power_heap(const CoxeterSystem& sys, const CoxeterElement& c, int k) {
    Word w;
    for (int copy = 0; copy < k; ++copy)
        for (int idx = 0; idx < sys.rank(); ++idx) {
            w.letters.push_back(c.word[idx]);
            w.positions.push_back(static_cast<long long>(copy) * sys.rank() + idx);
        }
    Heap heap = build_heap(w, sys);
    add_planar_coords(heap, sys, c);
    return heap;
}

Word embed_in_power(const Word& word, const CoxeterSystem& sys, const CoxeterElement& c) {
    Heap heap = build_heap(word, sys);
    int n = sys.rank();
    std::vector<int> idx_in_c(n, -1);
    for (int i = 0; i < n; ++i) idx_in_c[c.word[i]] = i;

    std::vector<long long> pos(heap.size(), -1);
    for (int i = 0; i < heap.size(); ++i) {
        long long bound = -1;  // positions of all predecessors are below this
        for (int p : heap.down[i]) bound = std::max(bound, pos[p]);
        int idx = idx_in_c[heap.gens[i]];
        long long copy = 0;
        if (bound >= 0) {
            copy = bound / n;
            if (idx <= static_cast<int>(bound % n)) ++copy;
        }
        pos[i] = copy * n + idx;
    }

    std::vector<int> order(heap.size());
    for (int i = 0; i < heap.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return pos[a] < pos[b]; });

    Word out;
    for (int i : order) {
        out.letters.push_back(heap.gens[i]);
        out.positions.push_back(pos[i]);
    }
    return out;
}

namespace {

template <class Visit>
void ideal_dfs(const Heap& heap, const std::vector<std::vector<uint64_t>>& pred, Visit&& visit) {
    int k = heap.size();
    int limbs = std::max((k + 63) / 64, 1);
    std::vector<uint64_t> ideal(limbs, 0);
    std::vector<int> members;

    auto contained = [&](const std::vector<uint64_t>& mask) {
        for (int l = 0; l < limbs; ++l)
            if (mask[l] & ~ideal[l]) return false;
        return true;
    };

    // every ideal is reached exactly once by adding letters in increasing
    // word-index order
    auto rec = [&](auto&& self, int last) -> void {
        visit(members);
        for (int v = last + 1; v < k; ++v) {
            if (!contained(pred[v])) continue;
            ideal[v >> 6] |= uint64_t(1) << (v & 63);
            members.push_back(v);
            self(self, v);
            members.pop_back();
            ideal[v >> 6] &= ~(uint64_t(1) << (v & 63));
        }
    };
    rec(rec, -1);
}

}  // namespace

long long count_ideals(const Heap& heap) {
    long long count = 0;
    ideal_dfs(heap, predecessor_masks(heap), [&](const std::vector<int>&) { ++count; });
    return count;
}

std::vector<std::vector<int>> enumerate_ideals(const Heap& heap) {
    std::vector<std::vector<int>> out;
    ideal_dfs(heap, predecessor_masks(heap), [&](const std::vector<int>& m) { out.push_back(m); });
    return out;
}

std::vector<Word> enumerate_singletons(const Heap& heap) {
    std::vector<Word> out;
    ideal_dfs(heap, predecessor_masks(heap), [&](const std::vector<int>& m) {
        Word w;
        for (int i : m) {
            w.letters.push_back(heap.gens[i]);
            if (!heap.positions.empty()) w.positions.push_back(heap.positions[i]);
        }
        out.push_back(std::move(w));
    });
    return out;
}

bool heaps_isomorphic(const Heap& a, const Heap& b) {
    if (a.size() != b.size()) return false;
    int maxgen = 0;
    for (int g : a.gens) maxgen = std::max(maxgen, g + 1);
    for (int g : b.gens) maxgen = std::max(maxgen, g + 1);

    auto occurrence_key = [&](const Heap& h) {
        std::vector<int> seen(maxgen, 0), occ(h.size());
        for (int i = 0; i < h.size(); ++i) occ[i] = seen[h.gens[i]]++;
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> covers;
        for (auto [i, j] : h.covers)
            covers.push_back({{h.gens[i], occ[i]}, {h.gens[j], occ[j]}});
        std::sort(covers.begin(), covers.end());
        return covers;
    };

    std::vector<int> ca(maxgen, 0), cb(maxgen, 0);
    for (int g : a.gens) ca[g]++;
    for (int g : b.gens) cb[g]++;
    if (ca != cb) return false;
    return occurrence_key(a) == occurrence_key(b);
}

}  // namespace cambrian
