#include "cambrian/networks.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cambrian {

namespace {

bool contains(const std::vector<int>& sorted, int x) {
    return std::binary_search(sorted.begin(), sorted.end(), x);
}

// number of upward kernel-only continuations from level (1-based) and wall x
std::vector<std::map<int, long long>> upward_counts(const KernelNetwork& net) {
    std::vector<std::map<int, long long>> up(net.n);
    for (int x : net.kernel[net.n - 1]) up[net.n - 1][x] = 1;
    for (int lvl = net.n - 2; lvl >= 0; --lvl)
        for (int x : net.kernel[lvl]) {
            long long total = 0;
            for (int dx : {-1, 1})
                if (contains(net.kernel[lvl + 1], x + dx)) total += up[lvl + 1][x + dx];
            up[lvl][x] = total;
        }
    return up;
}

}  // namespace

KernelNetwork build_kernel(int n, const std::vector<int>& up_set) {
    if (n < 1) throw std::invalid_argument("build_kernel requires n >= 1");
    std::vector<int> up = up_set;
    std::sort(up.begin(), up.end());
    for (size_t i = 0; i < up.size(); ++i) {
        if (up[i] < 2 || up[i] > n + 1) throw std::invalid_argument("up set must lie in {2..n+1}");
        if (i > 0 && up[i] == up[i - 1]) throw std::invalid_argument("up set has repeats");
    }

    KernelNetwork net;
    net.n = n;
    net.up_set = up;

    CoxeterSystem sys(CoxeterType{Family::A, n});
    // s_i is oriented toward s_{i+1} iff i+1 lies on the lower hull
    uint32_t bits = 0;
    for (int k = 0; k + 1 < n; ++k)
        if (contains(up, k + 2)) bits |= 1u << k;
    net.element = element_from_bits(sys, bits);

    Word w0c = c_sorting_word(sys, net.element);
    std::vector<int> x0 = copy0_x(sys, net.element);
    std::vector<std::vector<int>> copies(n);
    for (size_t i = 0; i < w0c.letters.size(); ++i)
        copies[w0c.letters[i]].push_back(static_cast<int>(w0c.positions[i] / n));

    net.kernel.assign(n, {});
    net.letter_x.assign(n, {});
    for (int g = 0; g < n; ++g) {
        for (size_t j = 0; j < copies[g].size(); ++j)
            if (copies[g][j] != static_cast<int>(j))
                throw std::logic_error("sorting word does not use consecutive copies");
        for (size_t j = 0; j < copies[g].size(); ++j)
            net.letter_x[g].push_back(x0[g] + 2 * static_cast<int>(j));
        for (int x = x0[g] - 1; x <= net.letter_x[g].back() + 1; x += 2)
            net.kernel[g].push_back(x);
    }
    if (static_cast<int>(net.kernel[n - 1].size()) != static_cast<int>(up.size()) + 2)
        throw std::logic_error("kernel top row differs from |U|+2");

    // full trapeze hull: one extra slot per side per level below the top
    net.trapeze.assign(n, {});
    int top_lo = net.kernel[n - 1].front();
    int top_hi = net.kernel[n - 1].back();
    for (int g = 0; g < n; ++g) {
        int pad = n - 1 - g;
        for (int x = top_lo - pad; x <= top_hi + pad; x += 2) net.trapeze[g].push_back(x);
        for (int x : net.kernel[g])
            if (!contains(net.trapeze[g], x))
                throw std::logic_error("kernel leaves the trapeze hull");
    }

    auto up_counts = upward_counts(net);
    for (int g = 0; g < n; ++g)
        for (int x : net.trapeze[g]) {
            if (contains(net.kernel[g], x)) continue;
            long long gamma = 0;
            if (g == n - 1) throw std::logic_error("trapeze commutator in the top row");
            for (int dx : {-1, 1})
                if (contains(net.kernel[g + 1], x + dx)) gamma += up_counts[g + 1][x + dx];
            net.trapeze_commutators.push_back({g + 1, x, gamma});
        }
    return net;
}

std::vector<std::vector<int>> enumerate_greedy_paths(const KernelNetwork& net) {
    std::vector<std::vector<int>> out;
    std::vector<int> path;
    auto rec = [&](auto&& self, int lvl, int x) -> void {
        path.push_back(x);
        if (lvl == net.n - 1) {
            out.push_back(path);
        } else {
            for (int dx : {-1, 1})
                if (contains(net.kernel[lvl + 1], x + dx)) self(self, lvl + 1, x + dx);
        }
        path.pop_back();
    };
    for (int x : net.kernel[0]) rec(rec, 0, x);
    return out;
}

long long count_singletons_network(const KernelNetwork& net) {
    long long formula = (static_cast<long long>(net.up_set.size()) + 2) * (1ll << (net.n - 1));
    for (const auto& t : net.trapeze_commutators)
        formula -= t.gamma * (1ll << (t.level - 1));

    long long direct = static_cast<long long>(enumerate_greedy_paths(net).size());
    if (formula != direct)
        throw std::logic_error("trapeze formula disagrees with greedy path enumeration");
    return formula;
}

std::vector<std::vector<int>> path_ideal_letter_counts(const KernelNetwork& net,
                                                       const std::vector<int>& path) {
    std::vector<std::vector<int>> ideal(net.n);
    for (int g = 0; g < net.n; ++g)
        for (size_t j = 0; j < net.letter_x[g].size(); ++j)
            if (net.letter_x[g][j] < path[g]) ideal[g].push_back(static_cast<int>(j));
    return ideal;
}

std::vector<std::vector<int>> singletons_as_permutations(const Heap& sorting_heap, int n) {
    std::vector<std::vector<int>> perms;
    std::set<std::vector<int>> seen;
    for (const Word& w : enumerate_singletons(sorting_heap)) {
        std::vector<int> line(n + 1);
        for (int i = 0; i <= n; ++i) line[i] = i + 1;
        for (int g : w.letters) std::swap(line[g], line[g + 1]);
        if (!seen.insert(line).second)
            throw std::logic_error("singleton permutations are not pairwise distinct");
        perms.push_back(std::move(line));
    }
    return perms;
}

bool check_acyclic_domain(const std::vector<std::vector<int>>& perms) {
    if (perms.empty()) return true;
    size_t m = perms[0].size();
    for (const auto& p : perms)
        if (p.size() != m) throw std::invalid_argument("permutations over different ground sets");

    // rank[v] = position of candidate v in the linear order
    std::vector<std::vector<int>> rank(perms.size(), std::vector<int>(m + 1, 0));
    for (size_t i = 0; i < perms.size(); ++i)
        for (size_t pos = 0; pos < m; ++pos) {
            int v = perms[i][pos];
            if (v < 1 || v > static_cast<int>(m)) throw std::invalid_argument("not a permutation");
            rank[i][v] = static_cast<int>(pos);
        }

    for (size_t a = 1; a <= m; ++a)
        for (size_t b = a + 1; b <= m; ++b)
            for (size_t c = b + 1; c <= m; ++c) {
                int orders = 0;  // bitmask over codes (a<b) | (b<c)<<1 | (a<c)<<2
                for (size_t i = 0; i < perms.size(); ++i) {
                    int ra = rank[i][a], rb = rank[i][b], rc = rank[i][c];
                    int code = int(ra < rb) | (int(rb < rc) << 1) | (int(ra < rc) << 2);
                    orders |= 1 << code;
                }
                // abc=7, bca=2, cab=1 form one cyclic triple; acb=5, cba=0,
                // bac=6 the other
                constexpr int fwd = (1 << 7) | (1 << 2) | (1 << 1);
                constexpr int bwd = (1 << 5) | (1 << 0) | (1 << 6);
                if ((orders & fwd) == fwd || (orders & bwd) == bwd) return false;
            }
    return true;
}

std::string render_network_ascii(const KernelNetwork& net) {
    int lo = net.trapeze[0].front() - 1;
    int hi = net.trapeze[0].back() + 1;
    int width = hi - lo + 1;
    std::ostringstream os;
    for (int g = net.n - 1; g >= 0; --g) {
        std::string row(width, ' ');
        for (int x : net.trapeze[g]) row[x - lo] = contains(net.kernel[g], x) ? '|' : ':';
        std::string line(width, '-');
        os << "  " << line << "\n"
           << (g + 1 < 10 ? " " : "") << (g + 1) << row << "\n";
    }
    std::string line(width, '-');
    os << "  " << line << "\n";
    return os.str();
}

}  // namespace cambrian
