#include "cosetlab/cosetposet.hpp"

#include "cosetlab/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace cosetlab {

CosetPoset CosetPoset::build(const Group& g, const Lattice& l, std::uint64_t cap) {
    CosetPoset p;
    p.g_ = &g;
    p.l_ = &l;
    // Lattice flats are already sorted by codim, so nodes come out sorted by
    // rank; within a flat, representatives ascend.
    p.by_flat_.resize(l.size());
    for (int x = 0; x < l.size(); ++x) {
        ReflMask m = l.flat(x).refl;
        for (Elem u = 0; u < g.order(); ++u) {
            if (g.right_inversions(u) & m) continue;  // not the minimal rep
            if (p.nodes_.size() >= cap)
                throw SizeCapError("coset poset larger than cap " + std::to_string(cap));
            p.by_flat_[x].emplace(u, static_cast<int>(p.nodes_.size()));
            p.nodes_.push_back(Coset{u, x});
        }
    }
    assert(p.nodes_.back().flat == l.top() && p.nodes_.back().rep == g.identity());

    p.above_.resize(p.nodes_.size());
    for (int a = 0; a < p.size(); ++a) {
        const Coset& c = p.nodes_[a];
        for (int y = 0; y < l.size(); ++y) {
            if (y == c.flat) continue;
            ReflMask my = l.flat(y).refl;
            if ((l.flat(c.flat).refl & ~my) != 0) continue;
            Elem rep = g.min_coset_rep_closed(c.rep, my);
            p.above_[a].push_back(p.by_flat_[y].at(rep));
        }
        std::sort(p.above_[a].begin(), p.above_[a].end());
    }
    return p;
}

int CosetPoset::index_of(Elem rep, int flat) const { return by_flat_[flat].at(rep); }

int CosetPoset::index_of_any(Elem w, int flat) const {
    return by_flat_[flat].at(g_->min_coset_rep_closed(w, l_->flat(flat).refl));
}

bool CosetPoset::leq(int a, int b) const {
    const Coset& ca = nodes_[a];
    const Coset& cb = nodes_[b];
    if (l_->flat(ca.flat).refl & ~l_->flat(cb.flat).refl) return false;
    return g_->min_coset_rep_closed(ca.rep, l_->flat(cb.flat).refl) == cb.rep;
}

std::optional<Coset> CosetPoset::meet(int a, int b) const {
    const Group& g = *g_;
    const Coset& ca = nodes_[a];
    const Coset& cb = nodes_[b];
    ReflMask mb = l_->flat(cb.flat).refl;
    // Intersection of the underlying sets; if nonempty it is a coset of
    // W_X and W_Y intersected, whose reflection set is the mask intersection.
    for (Elem h : g.parabolic_elements(l_->flat(ca.flat).refl)) {
        Elem x = g.mult(ca.rep, h);
        if (g.min_coset_rep_closed(x, mb) != cb.rep) continue;
        ReflMask mm = l_->flat(ca.flat).refl & mb;
        return Coset{g.min_coset_rep_closed(x, mm), l_->index_of(mm)};
    }
    return std::nullopt;
}

bool CosetPoset::fixed_by(Elem w, int node) const {
    const Coset& c = nodes_[node];
    ReflMask m = l_->flat(c.flat).refl;
    return g_->min_coset_rep_closed(g_->mult(w, c.rep), m) == c.rep;
}

Int CosetPoset::lefschetz(Elem w, SubsetMask ranks) const {
    const int n = g_->rank();
    std::vector<int> selected;
    std::vector<bool> in_sel(nodes_.size(), false);
    for (int i = 0; i < size(); ++i) {
        int r = rank(i);
        if (r > n || !(ranks & (SubsetMask(1) << (r - 1)))) continue;
        if (!fixed_by(w, i)) continue;
        selected.push_back(i);
        in_sel[i] = true;
    }
    // DFS over rank-increasing chains; the empty chain contributes -1.
    Int total = -1;
    auto dfs = [&](auto&& self, int v, int k) -> void {
        total += (k % 2) ? 1 : -1;
        for (int u : above_[v])
            if (in_sel[u]) self(self, u, k + 1);
    };
    for (int v : selected) dfs(dfs, v, 1);
    return total;
}

std::vector<Int> CosetPoset::betti_numbers(std::size_t chain_cap) const {
    const int n = g_->rank();
    // Enumerate all chains of the proper part, grouped by size.
    std::vector<std::vector<std::vector<int>>> chains(n + 1);
    std::size_t total = 0;
    std::vector<int> stack;
    auto dfs = [&](auto&& self, int v) -> void {
        stack.push_back(v);
        if (++total > chain_cap) throw SizeCapError("order complex exceeds chain cap");
        chains[stack.size()].push_back(stack);
        for (int u : above_[v])
            if (rank(u) <= n) self(self, u);
        stack.pop_back();
    };
    for (int v = 0; v < size(); ++v)
        if (rank(v) <= n) dfs(dfs, v);

    // Boundary ranks: simplices of dimension q are chains of size q+1.
    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const {
            std::size_t h = 1469598103934665603ull;
            for (int x : v) {
                h ^= static_cast<std::size_t>(x);
                h *= 1099511628211ull;
            }
            return h;
        }
    };
    std::vector<std::unordered_map<std::vector<int>, int, VecHash>> index(n + 1);
    for (int k = 1; k <= n; ++k)
        for (std::size_t i = 0; i < chains[k].size(); ++i)
            index[k].emplace(chains[k][i], static_cast<int>(i));

    std::vector<int> ranks(n + 2, 0);  // ranks[q] = rank of boundary_q
    ranks[0] = chains[1].empty() ? 0 : 1;  // augmentation
    for (int q = 1; q < n; ++q) {
        const auto& top = chains[q + 1];
        if (top.empty()) break;
        std::vector<std::vector<Int>> m(chains[q].size(), std::vector<Int>(top.size(), Int(0)));
        for (std::size_t col = 0; col < top.size(); ++col) {
            for (int drop = 0; drop <= q; ++drop) {
                std::vector<int> face;
                for (int i = 0; i <= q; ++i)
                    if (i != drop) face.push_back(top[col][i]);
                m[index[q].at(face)][col] = (drop % 2) ? -1 : 1;
            }
        }
        ranks[q] = integer_matrix_rank(std::move(m));
    }
    std::vector<Int> betti(n);
    for (int q = 0; q < n; ++q) {
        long nq = static_cast<long>(chains[q + 1].size());
        betti[q] = Int(nq) - ranks[q] - ranks[q + 1];
    }
    return betti;
}

Int CosetPoset::count_maximal_chains() const {
    const int n = g_->rank();
    std::vector<Int> cnt(size(), Int(0));
    for (int v = size() - 1; v >= 0; --v) {
        int r = rank(v);
        if (r > n) continue;
        if (r == n) {
            cnt[v] = 1;
            continue;
        }
        for (int u : above_[v])
            if (rank(u) == r + 1) cnt[v] += cnt[u];
    }
    Int total = 0;
    for (int v = 0; v < size(); ++v)
        if (rank(v) == 1) total += cnt[v];
    return total;
}

std::vector<Int> CosetPoset::flag_chain_counts() const {
    const int n = g_->rank();
    std::vector<Int> f(SubsetMask(1) << n, Int(0));
    std::vector<int> stack;
    SubsetMask mask = 0;
    auto dfs = [&](auto&& self, int v) -> void {
        SubsetMask bit = SubsetMask(1) << (rank(v) - 1);
        mask |= bit;
        f[mask] += 1;
        for (int u : above_[v])
            if (rank(u) <= n) self(self, u);
        mask &= ~bit;
    };
    for (int v = 0; v < size(); ++v)
        if (rank(v) <= n) dfs(dfs, v);
    f[0] = 1;  // the empty chain
    return f;
}

std::vector<Int> CosetPoset::flag_h(const std::vector<Int>& flag_f) const {
    std::vector<Int> h(flag_f.size(), Int(0));
    for (SubsetMask r = 0; r < flag_f.size(); ++r) {
        // Sum over subsets t of r.
        SubsetMask t = r;
        for (;;) {
            Int term = flag_f[t];
            if (std::popcount(r ^ t) % 2) term = -term;
            h[r] += term;
            if (t == 0) break;
            t = (t - 1) & r;
        }
    }
    return h;
}

std::vector<Int> CosetPoset::h_vector_from_chains() const {
    const int n = g_->rank();
    auto h = flag_h(flag_chain_counts());
    std::vector<Int> out(n + 1, Int(0));
    for (SubsetMask r = 0; r < h.size(); ++r) out[std::popcount(r)] += h[r];
    return out;
}

}  // namespace cosetlab
