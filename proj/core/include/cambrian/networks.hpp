#pragma once

#include <string>
#include <vector>

#include "cambrian/coxeter.hpp"
#include "cambrian/heap.hpp"

namespace cambrian {

/*
  Type-A sorting-network machinery.  The 1-kernel of the network of a
  Coxeter element is stored by its commutator columns: level i (1-based)
  holds the walls of the bounded regions of the kernel, one more wall than
  there are copies of s_i in w0^c.  The trapeze extension widens each level
  by one slot per side going down from the top row.
*/
struct KernelNetwork {
    int n;
    std::vector<int> up_set;  // subset of {2..n+1}
    CoxeterElement element;

    std::vector<std::vector<int>> kernel;    // [level-1] -> wall x positions
    std::vector<std::vector<int>> trapeze;   // [level-1] -> wall x positions
    std::vector<std::vector<int>> letter_x;  // [level-1] -> letter x positions

    struct TrapezeCommutator {
        int level;  // 1-based
        int x;
        long long gamma;  // greedy continuations inside the kernel; in Theta iff > 0
    };
    std::vector<TrapezeCommutator> trapeze_commutators;
};

KernelNetwork build_kernel(int n, const std::vector<int>& up_set);

// evaluates (|U|+2)*2^(n-1) - sum gamma_t * 2^(l_t - 1) and checks it against
// a direct enumeration of the greedy ordinate-monotone paths of the kernel
long long count_singletons_network(const KernelNetwork& net);

// all greedy ordinate-monotone paths through the kernel, one wall per level
std::vector<std::vector<int>> enumerate_greedy_paths(const KernelNetwork& net);

// the order ideal of kernel letters lying strictly left of a greedy path
std::vector<std::vector<int>> path_ideal_letter_counts(const KernelNetwork& net,
                                                       const std::vector<int>& path);

// one-line permutations of [n+1] for the singleton words of a type-A heap
std::vector<std::vector<int>> singletons_as_permutations(const Heap& sorting_heap, int n);

// Ward's condition: no triple of candidates realizes a cyclic set of orders
bool check_acyclic_domain(const std::vector<std::vector<int>>& perms);

std::string render_network_ascii(const KernelNetwork& net);

}  // namespace cambrian
