#pragma once

#include "cosetlab/lattice.hpp"

#include <map>
#include <vector>

namespace cosetlab {

// An integer combination of the induced-trivial characters, in the basis
// indexed by orbits of flats.  Zero coefficients are never stored.
class BurnsideElement {
public:
    BurnsideElement() = default;

    const std::map<int, Int>& coeffs() const { return c_; }
    Int coeff(int orbit) const {
        auto it = c_.find(orbit);
        return it == c_.end() ? Int(0) : it->second;
    }
    void add(int orbit, const Int& v) {
        if (v == 0) return;
        auto it = c_.emplace(orbit, 0).first;
        it->second += v;
        if (it->second == 0) c_.erase(it);
    }
    BurnsideElement& operator+=(const BurnsideElement& o) {
        for (const auto& [k, v] : o.c_) add(k, v);
        return *this;
    }
    BurnsideElement& operator-=(const BurnsideElement& o) {
        for (const auto& [k, v] : o.c_) add(k, -v);
        return *this;
    }
    friend BurnsideElement operator+(BurnsideElement a, const BurnsideElement& b) { return a += b; }
    friend BurnsideElement operator-(BurnsideElement a, const BurnsideElement& b) { return a -= b; }
    bool operator==(const BurnsideElement& o) const { return c_ == o.c_; }
    bool is_zero() const { return c_.empty(); }
    bool nonnegative() const {
        for (const auto& [k, v] : c_)
            if (v < 0) return false;
        return true;
    }
    Int coeff_sum() const {
        Int s = 0;
        for (const auto& [k, v] : c_) s += v;
        return s;
    }

private:
    std::map<int, Int> c_;
};

// Character-level view: one integer per conjugacy class.
using ClassFunction = std::vector<Int>;

// Additive operations of the parabolic Burnside ring over a fixed group and
// lattice: basis elements, the top-homology character of the coset poset,
// Whitney components, sign-tensoring, character values, dimensions, and
// rank-selected homology characters.
class BurnsideRing {
public:
    BurnsideRing(const Group& g, const Lattice& L) : g_(&g), l_(&L) {}

    const Group& group() const { return *g_; }
    const Lattice& lattice() const { return *l_; }

    BurnsideElement phi(int flat) const;
    BurnsideElement phi_subset(SubsetMask I) const;

    // Character of the group acting on the top reduced homology of the
    // proper coset poset: (-1)^n sum over orbit representatives of
    // mu(X) [W : N(W_X)] phi_X.
    BurnsideElement top_homology_character() const;
    // Same value computed as the sum over all flats (cross-check route).
    BurnsideElement top_homology_character_all_flats() const;

    // Flats of dimension k, weighted by (-1)^k mu(X).
    BurnsideElement whitney_component(int k) const;

    // Linear extension of phi_I (x) sign = sum over J subsets of I of
    // (-1)^|J| phi_J, through the standard-parabolic realization of orbits.
    BurnsideElement tensor_sign(const BurnsideElement& b) const;

    Int char_value(const BurnsideElement& b, Elem w) const;
    ClassFunction class_function(const BurnsideElement& b) const;
    Int dim(const BurnsideElement& b) const;
    Int index_of_orbit(int o) const;  // [W : W_X]

    Int mult_trivial(const BurnsideElement& b) const { return b.coeff_sum(); }
    Int mult_sign(const BurnsideElement& b) const { return tensor_sign(b).coeff_sum(); }

    // (-1)^|R| sum over L_R + {top} of mu_R(X) phi_X; homology character of
    // the rank-selected subposet.
    BurnsideElement rank_selected_character(SubsetMask ranks) const;
    BurnsideElement equivariant_h(int i) const;  // sum over |R| = i
    // Scalar h-vector of the order complex of the proper coset poset,
    // h_i = dim equivariant_h(i).
    std::vector<Int> h_vector() const;

private:
    const Group* g_;
    const Lattice* l_;
    // Fixed-point counts of class representatives on W/W_X, per orbit.
    mutable std::vector<std::vector<Int>> fix_;  // [class][orbit]
    void ensure_fix_table() const;
    mutable std::vector<std::map<int, Int>> solomon_;  // [orbit] -> expansion of phi_o (x) sign
    void ensure_solomon() const;
};

}  // namespace cosetlab
