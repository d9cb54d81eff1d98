#include "cosetlab/chambers.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <random>
#include <set>

namespace cosetlab {

namespace {

// Evaluate the pairing of rho with every ray; returns false if any vanishes.
bool certify(const Group& g, GenericVector& v) {
    v.ray_signs.assign(g.rays().size(), 0);
    bool first = true;
    for (std::size_t r = 0; r < g.rays().size(); ++r) {
        Rat p = dot(v.rho, g.rays()[r]);
        if (p == 0) return false;
        v.ray_signs[r] = p > 0 ? 1 : -1;
        Rat a = abs(p);
        if (first || a < v.min_abs_pairing) {
            v.min_abs_pairing = a;
            first = false;
        }
    }
    return true;
}

GenericVector from_coeffs(const Group& g, std::vector<Rat> coeffs) {
    GenericVector v;
    v.coeffs = std::move(coeffs);
    v.rho = Vec(g.ambient_dim(), Rat(0));
    v.in_fundamental_chamber = true;
    for (int i = 0; i < g.rank(); ++i) {
        if (v.coeffs[i] <= 0) v.in_fundamental_chamber = false;
        v.rho = v.rho + v.coeffs[i] * g.fundamental_weights()[i];
    }
    return v;
}

}  // namespace

GenericVector choose_rho_seeded(const Group& g, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> draw(1, 65536);
    for (;;) {
        std::vector<Rat> c(g.rank());
        for (int i = 0; i < g.rank(); ++i) c[i] = frac(draw(rng), draw(rng));
        GenericVector v = from_coeffs(g, std::move(c));
        if (certify(g, v)) return v;
    }
}

std::vector<int> type_a_letter_permutation(const Group& g, Elem w) {
    assert(g.symbol().family == Family::A);
    const int m = g.ambient_dim();
    std::vector<int> img(m);
    for (int i = 0; i < m; ++i) img[i] = i;
    // Compose the word left to right; appending a letter j on the right
    // swaps the entries at positions j and j+1.  Afterwards w(e_i) = e_img[i].
    for (std::uint8_t j : g.word(w)) std::swap(img[j], img[j + 1]);
    return img;
}

GenericVector choose_rho_spread(const Group& g) {
    if (g.symbol().family != Family::A)
        throw UnsupportedTypeError("spread mode is defined for type A only");
    const int n = g.rank();
    for (Int m = 2;; m *= 2) {
        std::vector<Rat> c(n);
        Rat cur = 1;
        for (int i = n - 1; i >= 0; --i) {
            c[i] = cur;
            cur *= m;
        }
        GenericVector v = from_coeffs(g, std::move(c));
        if (!certify(g, v)) continue;
        // Accept once the positive chambers are exactly the elements fixing
        // the first letter.
        bool ok = true;
        for (Elem w = 0; w < g.order() && ok; ++w) {
            bool inside = true;
            for (int j = 0; j < n; ++j)
                if (v.ray_signs[g.ray_index(w, j)] < 0) { inside = false; break; }
            bool first_fixed = type_a_letter_permutation(g, w)[0] == 0;
            if (inside != first_fixed) ok = false;
        }
        if (ok) return v;
    }
}

GenericVector choose_rho_user(const Group& g, const std::vector<Rat>& omega_coeffs) {
    if (static_cast<int>(omega_coeffs.size()) != g.rank())
        throw NonGenericError("expected " + std::to_string(g.rank()) + " coefficients");
    GenericVector v = from_coeffs(g, omega_coeffs);
    if (!certify(g, v))
        throw NonGenericError("vector is orthogonal to a ray of the chamber fan");
    return v;
}

int PositiveComplex::span_flat_of(Elem rep, SubsetMask I) const {
    const Group& g = ring_->group();
    const Lattice& l = ring_->lattice();
    ReflMask m = l.flat(l.flat_of_subset(I)).refl;
    return l.index_of(g.conj_mask(rep, m));
}

PositiveComplex PositiveComplex::build(const BurnsideRing& ring, const GenericVector& rho) {
    PositiveComplex c;
    c.ring_ = &ring;
    c.rho_ = rho;
    const Group& g = ring.group();
    const int n = g.rank();
    const SubsetMask all = g.full_subset_mask();
    for (SubsetMask I = 0; I < all; ++I) {  // proper subsets only
        for (Elem w = 0; w < g.order(); ++w) {
            if (g.descent_mask(w) & I) continue;  // not the minimal coset rep
            bool inside = true;
            for (int j = 0; j < n && inside; ++j)
                if (!(I & (SubsetMask(1) << j)) && rho.ray_signs[g.ray_index(w, j)] < 0)
                    inside = false;
            if (!inside) continue;
            c.faces_.push_back(PositiveFace{w, I, c.span_flat_of(w, I)});
            if (I == 0) c.facets_.push_back(w);
        }
    }
    return c;
}

bool PositiveComplex::has_face(Elem w, SubsetMask I) const {
    const Group& g = ring_->group();
    Elem rep = g.min_coset_rep(w, g.parabolic_closure(g.simple_subset_mask(I)));
    for (const PositiveFace& f : faces_)
        if (f.I == I && f.rep == rep) return true;
    return false;
}

std::vector<Int> PositiveComplex::f_vector() const {
    const int n = ring_->group().rank();
    std::vector<Int> f(n + 1, Int(0));
    f[0] = 1;  // the empty face spans the origin
    for (const PositiveFace& face : faces_) f[n - std::popcount(face.I)] += 1;
    return f;
}

std::vector<Int> PositiveComplex::h_vector() const {
    const int n = ring_->group().rank();
    std::vector<Int> f = f_vector();
    std::vector<Int> h(n + 1, Int(0));
    for (int k = 0; k <= n; ++k)
        for (int i = 0; i <= k; ++i) {
            Int term = binomial(n - i, k - i) * f[i];
            if ((k - i) % 2) term = -term;
            h[k] += term;
        }
    return h;
}

BurnsideElement PositiveComplex::colored_f_character() const {
    const Group& g = ring_->group();
    const Lattice& l = ring_->lattice();
    const int n = g.rank();
    BurnsideElement b;
    // The empty face spans the origin and has dimension 0.
    b.add(l.orbit_of(l.top()), 1);
    for (const PositiveFace& face : faces_) {
        int dim = n - std::popcount(face.I);
        b.add(l.orbit_of(face.span_flat), (dim % 2) ? -1 : 1);
    }
    if (n % 2) {
        BurnsideElement neg;
        neg -= b;
        return neg;
    }
    return b;
}

std::vector<Elem> PositiveComplex::shelling_order() const {
    const Group& g = ring_->group();
    // The facet set is a weak-order ideal when rho lies in F; a linear
    // extension of it shells the subcomplex.
    std::vector<Elem> order = g.weak_order_linear_extension(facets_);
    std::set<Elem> earlier;
    const SubsetMask all = g.full_subset_mask();
    for (std::size_t j = 0; j < order.size(); ++j) {
        Elem w = order[j];
        if (j > 0) {
            // Shared panels: those whose opposite chamber precedes w.
            SubsetMask shared = 0;
            for (int i = 0; i < g.rank(); ++i)
                if (earlier.count(g.right(w, i))) shared |= SubsetMask(1) << i;
            if (!shared)
                throw ShellingViolationError("facet meets no earlier panel");
            // Every face of w's chamber lying in an earlier facet must be
            // inside a shared panel.
            for (SubsetMask I = 0; I < all; ++I) {
                bool in_earlier = false;
                for (Elem v : earlier) {
                    // w W_I = v W_I iff v in w W_I: compare minimal reps via
                    // descent-driven reduction inside the standard parabolic.
                    Elem a = w, b = v;
                    for (;;) {
                        SubsetMask d = g.descent_mask(a) & I;
                        if (!d) break;
                        a = g.right(a, std::countr_zero(d));
                    }
                    for (;;) {
                        SubsetMask d = g.descent_mask(b) & I;
                        if (!d) break;
                        b = g.right(b, std::countr_zero(d));
                    }
                    if (a == b) { in_earlier = true; break; }
                }
                if (in_earlier && !(I & shared))
                    throw ShellingViolationError("earlier-facet intersection not a panel union");
            }
        }
        earlier.insert(w);
    }
    return order;
}

std::vector<int> PositiveComplex::shelling_types(const std::vector<Elem>& order) const {
    const Group& g = ring_->group();
    const Lattice& l = ring_->lattice();
    std::set<Elem> earlier;
    std::vector<int> types;
    for (Elem w : order) {
        SubsetMask shared = 0;
        for (int i = 0; i < g.rank(); ++i)
            if (earlier.count(g.right(w, i))) shared |= SubsetMask(1) << i;
        SubsetMask fresh = g.full_subset_mask() & ~shared;
        // Intersection of the fresh panels is the face (w, fresh); with no
        // fresh panel it degenerates to the whole chamber, spanning V.
        ReflMask m = l.flat(l.flat_of_subset(fresh)).refl;
        types.push_back(l.index_of(g.conj_mask(w, m)));
        earlier.insert(w);
    }
    return types;
}

BurnsideElement PositiveComplex::shelling_type_character() const {
    const Lattice& l = ring_->lattice();
    BurnsideElement b;
    for (int flat : shelling_types(shelling_order())) b.add(l.orbit_of(flat), 1);
    return b;
}

BurnsideElement PositiveComplex::halfspace_h_character(Side side) const {
    const Group& g = ring_->group();
    const Lattice& l = ring_->lattice();
    const int n = g.rank();
    BurnsideElement b;
    for (Elem w = 0; w < g.order(); ++w) {
        bool want = true;
        for (int j = 0; j < n && want; ++j) {
            int s = rho_.ray_signs[g.ray_index(w, j)];
            if (side == Side::Positive ? s < 0 : s > 0) want = false;
        }
        if (!want) continue;
        SubsetMask I = side == Side::Positive ? g.ascent_mask(w) : g.descent_mask(w);
        b.add(l.orbit_of_subset(I), 1);
    }
    return b;
}

bool PositiveComplex::is_pseudomanifold_with_connected_dual() const {
    const Group& g = ring_->group();
    std::set<Elem> facet_set(facets_.begin(), facets_.end());
    // Panels: faces with |I| = 1.  Each must lie in one or two facets.
    for (const PositiveFace& f : faces_) {
        if (std::popcount(f.I) != 1) continue;
        int i = std::countr_zero(f.I);
        int cnt = static_cast<int>(facet_set.count(f.rep)) +
                  static_cast<int>(facet_set.count(g.right(f.rep, i)));
        if (cnt < 1 || cnt > 2) return false;
    }
    if (facets_.empty()) return false;
    // Gallery connectivity across shared panels.
    std::set<Elem> seen{facets_[0]};
    std::vector<Elem> todo{facets_[0]};
    while (!todo.empty()) {
        Elem w = todo.back();
        todo.pop_back();
        for (int i = 0; i < g.rank(); ++i) {
            Elem v = g.right(w, i);
            if (facet_set.count(v) && !seen.count(v)) {
                seen.insert(v);
                todo.push_back(v);
            }
        }
    }
    return seen.size() == facet_set.size();
}

}  // namespace cosetlab
