#include "cosetlab/lattice.hpp"

#include "cosetlab/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <deque>

namespace cosetlab {

Lattice Lattice::build(const Group& g) {
    Lattice L;
    L.g_ = &g;
    const int nrefl = g.num_reflections();

    // Every flat is an intersection of reflecting hyperplanes: close the set
    // of reflection bitsets under adding one hyperplane at a time.
    std::deque<ReflMask> todo{0};
    L.index_.emplace(0, 0);
    std::vector<ReflMask> masks{0};
    while (!todo.empty()) {
        ReflMask m = todo.front();
        todo.pop_front();
        for (int t = 0; t < nrefl; ++t) {
            if (m & (ReflMask(1) << t)) continue;
            ReflMask c = g.parabolic_closure(m | (ReflMask(1) << t));
            if (L.index_.emplace(c, static_cast<int>(masks.size())).second) {
                masks.push_back(c);
                todo.push_back(c);
            }
        }
    }

    L.flats_.resize(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i)
        L.flats_[i] = Flat{masks[i], g.mask_codim(masks[i])};
    // Deterministic flat order: by codimension, then bitset-lexicographic.
    std::sort(L.flats_.begin(), L.flats_.end(), [](const Flat& a, const Flat& b) {
        if (a.codim != b.codim) return a.codim < b.codim;
        return mask_lex_less(a.refl, b.refl);
    });
    L.index_.clear();
    for (std::size_t i = 0; i < L.flats_.size(); ++i)
        L.index_.emplace(L.flats_[i].refl, static_cast<int>(i));
    const int n = g.rank();
    L.by_codim_.assign(n + 1, {});
    for (std::size_t i = 0; i < L.flats_.size(); ++i)
        L.by_codim_[L.flats_[i].codim].push_back(static_cast<int>(i));
    assert(L.by_codim_[0].size() == 1 && L.by_codim_[n].size() == 1);
    L.top_ = L.by_codim_[n][0];
    assert(L.flats_[L.top_].refl == g.full_refl_mask());

    // Moebius function to the top, top-down.
    const int sz = L.size();
    L.mobius_.assign(sz, Int(0));
    L.mobius_[L.top_] = 1;
    for (int c = n - 1; c >= 0; --c) {
        for (int x : L.by_codim_[c]) {
            Int s = 0;
            for (int y = 0; y < sz; ++y)
                if (L.flats_[y].codim > c && L.leq(x, y)) s += L.mobius_[y];
            L.mobius_[x] = -s;
        }
    }

    // Orbits under conjugation of reflection sets by the generators.
    L.orbit_of_flat_.assign(sz, -1);
    for (int x = 0; x < sz; ++x) {
        if (L.orbit_of_flat_[x] >= 0) continue;
        int o = static_cast<int>(L.orbit_label_.size());
        std::deque<int> q{x};
        L.orbit_of_flat_[x] = o;
        ReflMask label = L.flats_[x].refl;
        int count = 1;
        while (!q.empty()) {
            int y = q.front();
            q.pop_front();
            for (int i = 0; i < n; ++i) {
                Elem s = g.reflection(g.simple_root_index(i));
                ReflMask c = g.conj_mask(s, L.flats_[y].refl);
                int z = L.index_.at(c);
                if (L.orbit_of_flat_[z] < 0) {
                    L.orbit_of_flat_[z] = o;
                    q.push_back(z);
                    ++count;
                }
                if (mask_lex_less(c, label)) label = c;
            }
        }
        L.orbit_label_.push_back(label);
        L.orbit_size_.push_back(count);
    }
    L.orbit_rep_.resize(L.num_orbits());
    for (int o = 0; o < L.num_orbits(); ++o) L.orbit_rep_[o] = L.index_.at(L.orbit_label_[o]);

    // |W_X| per orbit (constant along the orbit): the group order divided by
    // the number of minimal coset representatives.
    L.par_order_.assign(L.num_orbits(), 0);
    for (int o = 0; o < L.num_orbits(); ++o) {
        ReflMask m = L.orbit_label_[o];
        std::size_t reps = 0;
        for (Elem w = 0; w < g.order(); ++w)
            if ((g.right_inversions(w) & m) == 0) ++reps;
        assert(reps > 0 && g.order() % reps == 0);
        L.par_order_[o] = g.order() / reps;
    }

    // Standard-parabolic realization of each orbit: the least subset mask I
    // whose W_I lands in the orbit.  Every parabolic is conjugate to a
    // standard one, so all orbits are hit.
    const SubsetMask total = SubsetMask(1) << n;
    L.subset_orbit_.assign(total, -1);
    L.subset_flat_.assign(total, -1);
    L.std_parabolic_.assign(L.num_orbits(), 0);
    std::vector<bool> have(L.num_orbits(), false);
    for (SubsetMask I = 0; I < total; ++I) {
        int f = L.index_.at(g.parabolic_closure(g.simple_subset_mask(I)));
        int o = L.orbit_of_flat_[f];
        L.subset_flat_[I] = f;
        L.subset_orbit_[I] = o;
        if (!have[o]) {
            have[o] = true;
            L.std_parabolic_[o] = I;
        }
    }
    for (std::size_t o = 0; o < have.size(); ++o) {
        assert(have[o] && "orbit without standard parabolic representative");
    }
    return L;
}

Int Lattice::mobius_between(int x, int y) const {
    if (x == y) return 1;
    if (!leq(x, y)) return 0;
    // Collect the interval and recurse on mu(z, y) by decreasing codim.
    std::vector<int> interval;
    for (int z = 0; z < size(); ++z)
        if (leq(x, z) && leq(z, y)) interval.push_back(z);
    std::sort(interval.begin(), interval.end(),
              [&](int a, int b) { return flats_[a].codim > flats_[b].codim; });
    std::unordered_map<int, Int> mu;
    for (int z : interval) {
        if (z == y) {
            mu[z] = 1;
            continue;
        }
        Int s = 0;
        for (int u : interval)
            if (u != z && leq(z, u)) s += mu.at(u);
        mu[z] = -s;
    }
    return mu.at(x);
}

std::vector<Vec> Lattice::subspace_basis(int x) const {
    const Group& g = *g_;
    // Constraints: the normals of the flat, plus the complement of the
    // essential span (so bases live inside the span of the roots).
    std::vector<Vec> rows;
    ReflMask m = flats_[x].refl;
    while (m) {
        int t = std::countr_zero(m);
        m &= m - 1;
        rows.push_back(g.positive_roots()[t]);
    }
    for (const Vec& v : nullspace(g.positive_roots(), g.ambient_dim())) rows.push_back(v);
    return nullspace(rows, g.ambient_dim());
}

Lattice::RankSelected Lattice::rank_selected(SubsetMask ranks) const {
    const int n = g_->rank();
    RankSelected out;
    for (int x = 0; x < size(); ++x) {
        int rk = 1 + flats_[x].codim;
        if (rk <= n && (ranks & (SubsetMask(1) << (rk - 1)))) out.flats.push_back(x);
    }
    // mu_R within L_R + {top}: the top has value 1; recurse by decreasing rank.
    out.mu.assign(out.flats.size(), Int(0));
    for (int i = static_cast<int>(out.flats.size()) - 1; i >= 0; --i) {
        Int s = 1;  // the adjoined top
        for (std::size_t j = i + 1; j < out.flats.size(); ++j)
            if (leq(out.flats[i], out.flats[j])) s += out.mu[j];
        out.mu[i] = -s;
    }
    return out;
}

}  // namespace cosetlab
