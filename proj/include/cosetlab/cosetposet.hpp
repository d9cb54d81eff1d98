#pragma once

#include "cosetlab/lattice.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace cosetlab {

// One parabolic coset w W_X, stored by its minimal-length representative and
// the flat X.
struct Coset {
    Elem rep = 0;
    int flat = 0;
    bool operator==(const Coset&) const = default;
};

// The poset of all parabolic cosets ordered by inclusion.  The maximum is the
// whole group (flat = top); the minimal elements are the singletons.  Ranks:
// rk(w W_X) = 1 + codim(X), so the proper part occupies ranks 1..n.
class CosetPoset {
public:
    static CosetPoset build(const Group& g, const Lattice& l, std::uint64_t cap = 2000000);

    const Group& group() const { return *g_; }
    const Lattice& lattice() const { return *l_; }
    int size() const { return static_cast<int>(nodes_.size()); }
    const Coset& node(int i) const { return nodes_[i]; }
    int rank(int i) const { return 1 + l_->flat(nodes_[i].flat).codim; }
    int max_node() const { return static_cast<int>(nodes_.size()) - 1; }
    int index_of(Elem rep, int flat) const;
    int index_of_any(Elem w, int flat) const;  // the coset w W_X

    // a <= b as sets: refl(X) subset of refl(Y) and b's coset contains a's rep.
    bool leq(int a, int b) const;
    // Set intersection of two cosets: another coset, or empty.
    std::optional<Coset> meet(int a, int b) const;

    // Nodes strictly above a node (all comparabilities, ascending rank).
    const std::vector<int>& above(int i) const { return above_[i]; }

    // Signed count over chains of the rank-selected proper part fixed by w:
    // sum over w-fixed chains c (the empty chain included) of (-1)^{|c|-1}.
    // With homology concentrated in degree |R|-1 this equals
    // (-1)^{|R|-1} times the character value of w on the top homology.
    Int lefschetz(Elem w, SubsetMask ranks) const;
    Int lefschetz_proper(Elem w) const {
        return lefschetz(w, (SubsetMask(1) << g_->rank()) - 1);
    }

    // Reduced Betti numbers of the order complex of the proper part, by exact
    // integer boundary ranks.  Guarded by a chain-count cap.
    std::vector<Int> betti_numbers(std::size_t chain_cap = 200000) const;

    // Number of maximal chains of the proper part.
    Int count_maximal_chains() const;

    // Chain counts of the proper part grouped by rank set (flag f-vector of
    // the order complex); index = rank subset mask.
    std::vector<Int> flag_chain_counts() const;
    // Flag h-vector by inclusion-exclusion over the flag f-vector, and the
    // scalar h-vector (independent chain-counting route).
    std::vector<Int> flag_h(const std::vector<Int>& flag_f) const;
    std::vector<Int> h_vector_from_chains() const;

private:
    const Group* g_ = nullptr;
    const Lattice* l_ = nullptr;
    std::vector<Coset> nodes_;  // sorted by (rank, rep)
    std::vector<std::vector<int>> above_;
    std::vector<std::unordered_map<Elem, int>> by_flat_;  // flat -> (rep -> node)

    bool fixed_by(Elem w, int node) const;
};

}  // namespace cosetlab
