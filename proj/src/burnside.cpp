#include "cosetlab/burnside.hpp"

#include <bit>
#include <cassert>

namespace cosetlab {

BurnsideElement BurnsideRing::phi(int flat) const {
    BurnsideElement b;
    b.add(l_->orbit_of(flat), 1);
    return b;
}

BurnsideElement BurnsideRing::phi_subset(SubsetMask I) const {
    BurnsideElement b;
    b.add(l_->orbit_of_subset(I), 1);
    return b;
}

BurnsideElement BurnsideRing::top_homology_character() const {
    const int n = g_->rank();
    BurnsideElement b;
    for (int o = 0; o < l_->num_orbits(); ++o) {
        Int c = l_->mobius_to_top(l_->orbit_rep(o)) * l_->orbit_size(o);
        if (n % 2) c = -c;
        b.add(o, c);
    }
    return b;
}

BurnsideElement BurnsideRing::top_homology_character_all_flats() const {
    const int n = g_->rank();
    BurnsideElement b;
    for (int x = 0; x < l_->size(); ++x) {
        Int c = l_->mobius_to_top(x);
        if (n % 2) c = -c;
        b.add(l_->orbit_of(x), c);
    }
    return b;
}

BurnsideElement BurnsideRing::whitney_component(int k) const {
    const int n = g_->rank();
    BurnsideElement b;
    for (int x : l_->flats_of_codim(n - k)) {
        Int c = l_->mobius_to_top(x);
        if (k % 2) c = -c;
        b.add(l_->orbit_of(x), c);
    }
    return b;
}

void BurnsideRing::ensure_solomon() const {
    if (!solomon_.empty()) return;
    solomon_.resize(l_->num_orbits());
    for (int o = 0; o < l_->num_orbits(); ++o) {
        SubsetMask I = l_->standard_parabolic(o);
        std::map<int, Int>& row = solomon_[o];
        // Iterate over subsets J of I.
        SubsetMask J = I;
        for (;;) {
            Int sgn = (std::popcount(J) % 2) ? -1 : 1;
            row[l_->orbit_of_subset(J)] += sgn;
            if (J == 0) break;
            J = (J - 1) & I;
        }
        for (auto it = row.begin(); it != row.end();)
            it = it->second == 0 ? row.erase(it) : std::next(it);
    }
}

BurnsideElement BurnsideRing::tensor_sign(const BurnsideElement& b) const {
    ensure_solomon();
    BurnsideElement out;
    for (const auto& [o, c] : b.coeffs())
        for (const auto& [o2, m] : solomon_[o]) out.add(o2, c * m);
    return out;
}

void BurnsideRing::ensure_fix_table() const {
    if (!fix_.empty()) return;
    const Group& g = *g_;
    const int nc = g.num_classes();
    const int no = l_->num_orbits();
    fix_.assign(nc, std::vector<Int>(no, Int(0)));
    for (int o = 0; o < no; ++o) {
        ReflMask m = l_->orbit_label(o);
        std::vector<Elem> reps;
        for (Elem u = 0; u < g.order(); ++u)
            if ((g.right_inversions(u) & m) == 0) reps.push_back(u);
        for (int c = 0; c < nc; ++c) {
            Elem w = g.class_reps()[c];
            long cnt = 0;
            // The coset u W_X is fixed by w iff w u has the same minimal rep.
            for (Elem u : reps)
                if (g.min_coset_rep_closed(g.mult(w, u), m) == u) ++cnt;
            fix_[c][o] = cnt;
        }
    }
}

Int BurnsideRing::char_value(const BurnsideElement& b, Elem w) const {
    ensure_fix_table();
    const int c = g_->class_of(w);
    Int v = 0;
    for (const auto& [o, coeff] : b.coeffs()) v += coeff * fix_[c][o];
    return v;
}

ClassFunction BurnsideRing::class_function(const BurnsideElement& b) const {
    ClassFunction f(g_->num_classes());
    for (int c = 0; c < g_->num_classes(); ++c) f[c] = char_value(b, g_->class_reps()[c]);
    return f;
}

Int BurnsideRing::index_of_orbit(int o) const {
    return Int(static_cast<unsigned long>(g_->order())) /
           Int(static_cast<unsigned long>(l_->parabolic_order(o)));
}

Int BurnsideRing::dim(const BurnsideElement& b) const {
    Int d = 0;
    for (const auto& [o, coeff] : b.coeffs()) d += coeff * index_of_orbit(o);
    return d;
}

BurnsideElement BurnsideRing::rank_selected_character(SubsetMask ranks) const {
    auto rs = l_->rank_selected(ranks);
    BurnsideElement b;
    for (std::size_t i = 0; i < rs.flats.size(); ++i)
        b.add(l_->orbit_of(rs.flats[i]), rs.mu[i]);
    b.add(l_->orbit_of(l_->top()), 1);  // the adjoined top, mu = 1
    if (std::popcount(ranks) % 2) {
        BurnsideElement neg;
        neg -= b;
        return neg;
    }
    return b;
}

BurnsideElement BurnsideRing::equivariant_h(int i) const {
    const int n = g_->rank();
    BurnsideElement b;
    for (SubsetMask R = 0; R < (SubsetMask(1) << n); ++R)
        if (std::popcount(R) == i) b += rank_selected_character(R);
    return b;
}

std::vector<Int> BurnsideRing::h_vector() const {
    const int n = g_->rank();
    std::vector<Int> h(n + 1);
    for (int i = 0; i <= n; ++i) h[i] = dim(equivariant_h(i));
    return h;
}

}  // namespace cosetlab
