#include "cambrian/coxeter.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cambrian {

namespace {

[[noreturn]] void bad_type(const std::string& why) {
    throw std::invalid_argument("invalid Coxeter type: " + why);
}

int family_mstar(const CoxeterType& t) {
    switch (t.family) {
        case Family::A:
        case Family::D:
        case Family::E: return 3;
        case Family::B:
        case Family::F: return 4;
        case Family::H: return 5;
        case Family::I2: return t.m_param;
    }
    return 3;
}

}  // namespace

CoxeterType CoxeterType::parse(const std::string& spec) {
    if (spec.empty()) bad_type("empty spec");
    CoxeterType t;
    if (spec.rfind("I2", 0) == 0) {
        t.family = Family::I2;
        t.rank = 2;
        if (spec.rfind("I2:m=", 0) != 0) bad_type(spec + " (expected I2:m=<int>)");
        try {
            size_t used = 0;
            t.m_param = std::stoi(spec.substr(5), &used);
            if (used != spec.size() - 5) bad_type(spec);
        } catch (const std::exception&) {
            bad_type(spec);
        }
        t.validate();
        return t;
    }
    switch (spec[0]) {
        case 'A': t.family = Family::A; break;
        case 'B': t.family = Family::B; break;
        case 'D': t.family = Family::D; break;
        case 'E': t.family = Family::E; break;
        case 'F': t.family = Family::F; break;
        case 'H': t.family = Family::H; break;
        default: bad_type(spec);
    }
    try {
        size_t used = 0;
        t.rank = std::stoi(spec.substr(1), &used);
        if (used != spec.size() - 1) bad_type(spec);
    } catch (const std::exception&) {
        bad_type(spec);
    }
    t.validate();
    return t;
}

std::string CoxeterType::str() const {
    std::ostringstream os;
    switch (family) {
        case Family::A: os << 'A' << rank; break;
        case Family::B: os << 'B' << rank; break;
        case Family::D: os << 'D' << rank; break;
        case Family::E: os << 'E' << rank; break;
        case Family::F: os << 'F' << rank; break;
        case Family::H: os << 'H' << rank; break;
        case Family::I2: os << "I2:m=" << m_param; break;
    }
    return os.str();
}

void CoxeterType::validate() const {
    switch (family) {
        case Family::A:
            if (rank < 1) bad_type("A requires rank >= 1");
            break;
        case Family::B:
            if (rank < 2) bad_type("B requires rank >= 2");
            break;
        case Family::D:
            if (rank < 4) bad_type("D requires rank >= 4");
            break;
        case Family::E:
            if (rank < 6 || rank > 8) bad_type("E requires rank in {6,7,8}");
            break;
        case Family::F:
            if (rank != 4) bad_type("F requires rank 4");
            break;
        case Family::H:
            if (rank != 3 && rank != 4) bad_type("H requires rank in {3,4}");
            break;
        case Family::I2:
            if (rank != 2) bad_type("I2 has rank 2");
            if (m_param < 3) bad_type("I2(m) requires m >= 3");
            break;
    }
}

int CoxeterType::coxeter_number() const {
    switch (family) {
        case Family::A: return rank + 1;
        case Family::B: return 2 * rank;
        case Family::D: return 2 * rank - 2;
        case Family::E: return rank == 6 ? 12 : rank == 7 ? 18 : 30;
        case Family::F: return 12;
        case Family::H: return rank == 3 ? 10 : 30;
        case Family::I2: return m_param;
    }
    return 0;
}

CoxeterSystem::CoxeterSystem(const CoxeterType& type)
    : type_(type),
      n_(type.rank),
      h_(type.coxeter_number()),
      ring_(family_mstar(type)) {
    type_.validate();
    build_graph();
    build_roots();
    build_longest();
}

void CoxeterSystem::build_graph() {
    matrix_.assign(n_, std::vector<int>(n_, 2));
    for (int i = 0; i < n_; ++i) matrix_[i][i] = 1;
    edges_.clear();

    switch (type_.family) {
        case Family::A:
        case Family::B:
        case Family::F:
        case Family::H:
        case Family::I2: {
            p_ = n_;
            branch_ = -1;
            for (int i = 0; i + 1 < n_; ++i) {
                int label = 3;
                if (type_.family == Family::B && i == n_ - 2) label = 4;
                if (type_.family == Family::F && i == 1) label = 4;
                if (type_.family == Family::H && i == 0) label = 5;
                if (type_.family == Family::I2) label = type_.m_param;
                edges_.push_back({i, i + 1, label});
            }
            break;
        }
        case Family::D:
        case Family::E: {
            p_ = n_ - 1;
            branch_ = (type_.family == Family::D) ? n_ - 3 : n_ - 4;
            for (int i = 0; i + 1 < p_; ++i) edges_.push_back({i, i + 1, 3});
            edges_.push_back({branch_, n_ - 1, 3});
            break;
        }
    }

    neighbors_.assign(n_, {});
    for (const GammaEdge& e : edges_) {
        matrix_[e.a][e.b] = matrix_[e.b][e.a] = e.label;
        neighbors_[e.a].push_back(e.b);
        neighbors_[e.b].push_back(e.a);
    }

    draw_y_.assign(n_, 0);
    for (int i = 0; i < p_; ++i) draw_y_[i] = i;
    if (branch_ >= 0) draw_y_[n_ - 1] = draw_y_[branch_];
}

void CoxeterSystem::build_roots() {
    const Ring& R = ring_;
    using Coords = std::vector<RingElement>;

    auto reflect = [&](int s, const Coords& v) {
        Coords w = v;
        RingElement acc = R.neg(v[s]);
        for (int j : neighbors_[s]) acc = R.add(acc, R.mul(R.two_cos(matrix_[s][j]), v[j]));
        w[s] = acc;
        return w;
    };

    std::map<Coords, int> index;
    std::vector<Coords> roots;
    for (int s = 0; s < n_; ++s) {
        Coords alpha(n_, R.zero());
        alpha[s] = R.one();
        index.emplace(alpha, s);
        roots.push_back(std::move(alpha));
    }
    for (size_t head = 0; head < roots.size(); ++head) {
        for (int s = 0; s < n_; ++s) {
            Coords img = reflect(s, roots[head]);
            if (!index.count(img)) {
                index.emplace(img, static_cast<int>(roots.size()));
                roots.push_back(std::move(img));
            }
        }
    }
    int total = static_cast<int>(roots.size());
    if (total != n_ * h_) throw std::logic_error("root count differs from n*h");

    root_sign_.assign(total, 0);
    for (int r = 0; r < total; ++r) {
        int pos = 0, neg = 0;
        for (int k = 0; k < n_; ++k) {
            int s = R.sign(roots[r][k]);
            if (s > 0) ++pos;
            if (s < 0) ++neg;
        }
        if (pos > 0 && neg > 0) throw std::logic_error("root with mixed coordinate signs");
        root_sign_[r] = pos > 0 ? 1 : -1;
    }
    int positives = static_cast<int>(std::count(root_sign_.begin(), root_sign_.end(), 1));
    if (positives != longest_length()) throw std::logic_error("positive root count differs from N");

    neg_root_.assign(total, -1);
    for (int r = 0; r < total; ++r) {
        Coords negated;
        negated.reserve(n_);
        for (const RingElement& c : roots[r]) negated.push_back(R.neg(c));
        auto it = index.find(negated);
        if (it == index.end()) throw std::logic_error("roots not closed under negation");
        neg_root_[r] = it->second;
    }

    simple_action_.assign(n_, std::vector<int32_t>(total, -1));
    for (int s = 0; s < n_; ++s)
        for (int r = 0; r < total; ++r) {
            auto it = index.find(reflect(s, roots[r]));
            if (it == index.end()) throw std::logic_error("roots not closed under reflection");
            simple_action_[s][r] = it->second;
        }
}

void CoxeterSystem::build_longest() {
    // multiply ascents greedily until none is left; the weak order has a
    // unique maximum, so any ascent path ends at w0
    RootPerm w = identity_perm();
    int steps = 0;
    for (;;) {
        int s = 0;
        for (; s < n_; ++s)
            if (is_ascent(w, s)) break;
        if (s == n_) break;
        apply_right(w, s);
        if (++steps > longest_length()) throw std::logic_error("ascent chain exceeded N");
    }
    if (steps != longest_length()) throw std::logic_error("longest element has wrong length");
    w0_ = std::move(w);

    psi_.assign(n_, -1);
    for (int s = 0; s < n_; ++s) {
        int img = neg_root_[w0_[s]];  // w0(alpha_s) = -alpha_{psi(s)}
        if (img >= n_) throw std::logic_error("w0 does not permute the simple roots up to sign");
        psi_[s] = img;
    }
}

CoxeterSystem::RootPerm CoxeterSystem::identity_perm() const {
    RootPerm w(num_roots());
    for (int r = 0; r < num_roots(); ++r) w[r] = r;
    return w;
}

void CoxeterSystem::apply_right(RootPerm& w, int gen) const {
    const std::vector<int32_t>& act = simple_action_[gen];
    RootPerm out(w.size());
    for (size_t r = 0; r < w.size(); ++r) out[r] = w[act[r]];
    w = std::move(out);
}

bool CoxeterSystem::is_ascent(const RootPerm& w, int gen) const {
    return root_sign_[w[gen]] > 0;
}

int CoxeterSystem::length(const RootPerm& w) const {
    int len = 0;
    for (int r = 0; r < num_roots(); ++r)
        if (root_sign_[r] > 0 && root_sign_[w[r]] < 0) ++len;
    return len;
}

CoxeterElement element_from_bits(const CoxeterSystem& sys, uint32_t bits) {
    const auto& edges = sys.edges();
    if (edges.size() >= 31)
        throw std::invalid_argument("element addressing supports rank <= 31");
    if (bits >> edges.size()) throw std::invalid_argument("element bits out of range");
    CoxeterElement c;
    c.bits = bits;

    // topological sort of the orientation, smallest generator index first
    int n = sys.rank();
    std::vector<int> indeg(n, 0);
    for (size_t k = 0; k < edges.size(); ++k) {
        bool rev = (bits >> k) & 1;
        ++indeg[rev ? edges[k].a : edges[k].b];
    }
    std::vector<bool> used(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!used[v] && indeg[v] == 0) {
                pick = v;
                break;
            }
        if (pick < 0) throw std::logic_error("orientation of a tree cannot be cyclic");
        used[pick] = true;
        c.word.push_back(pick);
        for (size_t k = 0; k < edges.size(); ++k) {
            bool rev = (bits >> k) & 1;
            int from = rev ? edges[k].b : edges[k].a;
            int to = rev ? edges[k].a : edges[k].b;
            if (from == pick && !used[to]) --indeg[to];
        }
    }
    return c;
}

CoxeterElement element_from_word(const CoxeterSystem& sys, const std::vector<int>& word) {
    if (word.size() != static_cast<size_t>(sys.rank()))
        throw std::invalid_argument("Coxeter element word must contain each generator once");
    std::vector<int> pos(sys.rank(), -1);
    for (size_t i = 0; i < word.size(); ++i) {
        if (word[i] < 0 || word[i] >= sys.rank() || pos[word[i]] >= 0)
            throw std::invalid_argument("Coxeter element word must contain each generator once");
        pos[word[i]] = static_cast<int>(i);
    }
    uint32_t bits = 0;
    const auto& edges = sys.edges();
    for (size_t k = 0; k < edges.size(); ++k)
        if (pos[edges[k].a] > pos[edges[k].b]) bits |= 1u << k;
    return element_from_bits(sys, bits);
}

std::vector<CoxeterElement> enumerate_coxeter_elements(const CoxeterSystem& sys) {
    std::vector<CoxeterElement> out;
    uint32_t count = 1u << sys.edges().size();
    out.reserve(count);
    for (uint32_t bits = 0; bits < count; ++bits) out.push_back(element_from_bits(sys, bits));
    return out;
}

CoxeterElement reverse_element(const CoxeterSystem& sys, const CoxeterElement& c) {
    uint32_t mask = (1u << sys.edges().size()) - 1;
    return element_from_bits(sys, ~c.bits & mask);
}

CoxeterElement bipartite_element(const CoxeterSystem& sys) {
    // 2-color the tree from s1 and orient every edge from color 0 to color 1
    int n = sys.rank();
    std::vector<int> color(n, -1);
    color[0] = 0;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : sys.neighbors(v))
            if (color[u] < 0) {
                color[u] = 1 - color[v];
                stack.push_back(u);
            }
    }
    uint32_t bits = 0;
    const auto& edges = sys.edges();
    for (size_t k = 0; k < edges.size(); ++k)
        if (color[edges[k].a] == 1) bits |= 1u << k;
    return element_from_bits(sys, bits);
}

bool edge_forward(const CoxeterSystem& sys, const CoxeterElement& c, int a, int b) {
    const auto& edges = sys.edges();
    for (size_t k = 0; k < edges.size(); ++k) {
        if (edges[k].a == std::min(a, b) && edges[k].b == std::max(a, b)) {
            bool rev = (c.bits >> k) & 1;
            bool a_is_min = (a < b);
            return a_is_min ? !rev : rev;
        }
    }
    throw std::invalid_argument("edge_forward: generators not adjacent");
}

std::string element_bitstring(const CoxeterSystem& sys, const CoxeterElement& c) {
    std::string s;
    for (size_t k = 0; k < sys.edges().size(); ++k) s += ((c.bits >> k) & 1) ? '1' : '0';
    return s;
}

CoxeterElement element_from_bitstring(const CoxeterSystem& sys, const std::string& bits) {
    if (bits.size() != sys.edges().size())
        throw std::invalid_argument("element bitstring must have one bit per edge of the graph");
    uint32_t b = 0;
    for (size_t k = 0; k < bits.size(); ++k) {
        if (bits[k] == '1')
            b |= 1u << k;
        else if (bits[k] != '0')
            throw std::invalid_argument("element bitstring must consist of 0s and 1s");
    }
    return element_from_bits(sys, b);
}

Word c_sorting_word(const CoxeterSystem& sys, const CoxeterElement& c) {
    Word out;
    int n = sys.rank();
    int target = sys.longest_length();
    CoxeterSystem::RootPerm state = sys.identity_perm();
    for (int copy = 0; copy < sys.coxeter_number(); ++copy) {
        for (int idx = 0; idx < n; ++idx) {
            int s = c.word[idx];
            if (sys.is_ascent(state, s)) {
                sys.apply_right(state, s);
                out.letters.push_back(s);
                out.positions.push_back(static_cast<long long>(copy) * n + idx);
            }
        }
        if (static_cast<int>(out.letters.size()) == target) break;
    }
    if (static_cast<int>(out.letters.size()) != target)
        throw std::logic_error("c-sorting word did not reach length N within h copies");
    if (state != sys.longest_element())
        throw std::logic_error("c-sorting word does not represent w0");
    return out;
}

std::vector<int> copy0_x(const CoxeterSystem& sys, const CoxeterElement& c) {
    std::vector<int> x(sys.rank(), 0);
    for (int j = 1; j < sys.path_length(); ++j)
        x[j] = x[j - 1] + (edge_forward(sys, c, j - 1, j) ? 1 : -1);
    if (sys.branch_vertex() >= 0) {
        int r = sys.branch_vertex();
        int sn = sys.rank() - 1;
        x[sn] = x[r] + (edge_forward(sys, c, r, sn) ? 1 : -1);
    }
    return x;
}

std::string word_str(const Word& w) {
    std::string s;
    for (size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += '.';
        s += "s" + std::to_string(w.letters[i] + 1);
    }
    return s;
}

}  // namespace cambrian
