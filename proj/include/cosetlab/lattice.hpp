#pragma once

#include "cosetlab/coxeter.hpp"

#include <unordered_map>
#include <vector>

namespace cosetlab {

// A flat of the reflection arrangement, identified by the set of reflections
// whose hyperplanes contain it.  The subspace itself is recovered on demand.
struct Flat {
    ReflMask refl = 0;  // parabolically closed
    int codim = 0;      // rank of the normals = n - dim(X)
};

// The intersection lattice of the arrangement: all flats, the containment
// order (X <= Y iff refl(X) is a subset of refl(Y)), the Moebius function to
// the top, and the orbit decomposition under the group action.  Immutable.
class Lattice {
public:
    static Lattice build(const Group& g);

    const Group& group() const { return *g_; }
    int size() const { return static_cast<int>(flats_.size()); }
    const Flat& flat(int x) const { return flats_[x]; }
    int bottom() const { return 0; }  // the whole space V
    int top() const { return top_; }  // the origin {0}
    int index_of(ReflMask m) const { return index_.at(m); }
    bool leq(int x, int y) const { return (flats_[x].refl & ~flats_[y].refl) == 0; }
    const std::vector<int>& flats_of_codim(int c) const { return by_codim_[c]; }

    // mu(X, {0}) by the standard top-down recursion.
    const Int& mobius_to_top(int x) const { return mobius_[x]; }
    // mu(x, y) computed on the interval [x, y]; test/oracle use.
    Int mobius_between(int x, int y) const;

    // Orbits of the group action w(X); labels are the lexicographically
    // least reflection bitsets and are the keys of Burnside coefficients.
    int num_orbits() const { return static_cast<int>(orbit_label_.size()); }
    int orbit_of(int x) const { return orbit_of_flat_[x]; }
    ReflMask orbit_label(int o) const { return orbit_label_[o]; }
    int orbit_rep(int o) const { return orbit_rep_[o]; }           // flat with label mask
    int orbit_size(int o) const { return orbit_size_[o]; }         // = [W : N(W_X)]
    std::size_t parabolic_order(int o) const { return par_order_[o]; }  // |W_X|
    // Lexicographically least I subset of S whose standard parabolic lies in
    // the orbit; exists for every orbit.
    SubsetMask standard_parabolic(int o) const { return std_parabolic_[o]; }
    int orbit_of_subset(SubsetMask I) const { return subset_orbit_[I]; }
    int flat_of_subset(SubsetMask I) const { return subset_flat_[I]; }

    // Exact rational basis of the subspace X (inside the essential span of
    // the roots), via nullspace of the stacked normals.
    std::vector<Vec> subspace_basis(int x) const;

    // Rank-selected sublattice L_R for R a subset of {1..n} (bit i-1 <-> rank
    // i), where rank(X) = 1 + codim(X).  The top {0} is always adjoined; it
    // is not listed (its Moebius value is 1).
    struct RankSelected {
        std::vector<int> flats;
        std::vector<Int> mu;  // mu_R(X, top) within L_R + {top}
    };
    RankSelected rank_selected(SubsetMask ranks) const;

private:
    const Group* g_ = nullptr;
    std::vector<Flat> flats_;
    std::unordered_map<ReflMask, int> index_;
    std::vector<std::vector<int>> by_codim_;
    int top_ = 0;
    std::vector<Int> mobius_;
    std::vector<int> orbit_of_flat_;
    std::vector<ReflMask> orbit_label_;
    std::vector<int> orbit_rep_;
    std::vector<int> orbit_size_;
    std::vector<std::size_t> par_order_;
    std::vector<SubsetMask> std_parabolic_;
    std::vector<int> subset_orbit_;  // indexed by subset mask I
    std::vector<int> subset_flat_;
};

}  // namespace cosetlab
