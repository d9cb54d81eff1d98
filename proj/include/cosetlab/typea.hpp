#pragma once

#include "cosetlab/burnside.hpp"
#include "cosetlab/cosetposet.hpp"
#include "cosetlab/series.hpp"
#include "cosetlab/symfunc.hpp"

#include <vector>

namespace cosetlab {

// Set partition of {0..n-1} in restricted-growth form: block[i] is the index
// of the block containing i, blocks numbered by first appearance.
using SetPartition = std::vector<int>;

std::vector<SetPartition> all_set_partitions(int n);
int num_blocks(const SetPartition& p);
std::vector<std::vector<int>> blocks_of(const SetPartition& p);
Partition shape_of(const SetPartition& p);
// b coarser-or-equal than a (every block of a is inside a block of b).
bool refines(const SetPartition& a, const SetPartition& b);
SetPartition apply_permutation(const std::vector<int>& perm, const SetPartition& p);

// mu(pi, top) in the partition lattice, by the generic recursive Moebius
// computation over coarsenings (the ground truth for the closed form).
Int set_partition_mobius(const SetPartition& pi);
// mu of the whole lattice on k letters, same recursion.
Int partition_lattice_mobius(int k);

// Block shape of a type-A flat: letters i ~ j when the root e_i - e_j lies
// in the reflection set.
Partition type_a_shape(const Group& g, ReflMask m);
SetPartition type_a_partition(const Group& g, ReflMask m);
ReflMask type_a_mask(const Group& g, const SetPartition& p);

// A uniform block permutation: two set partitions with a size-preserving
// block bijection.  match[b] is the p2-block paired with p1-block b.
struct UniformBlockPermutation {
    SetPartition p1, p2;
    std::vector<int> match;
    bool operator==(const UniformBlockPermutation&) const = default;
    bool operator<(const UniformBlockPermutation& o) const {
        return std::tie(p1, p2, match) < std::tie(o.p1, o.p2, o.match);
    }
};

std::vector<UniformBlockPermutation> all_uniform_block_permutations(int n);
// (a >= b): coarsening with the quotient bijection compatible.
bool ubp_geq(const UniformBlockPermutation& a, const UniformBlockPermutation& b);

// The uniform block permutation attached to a coset of the (n-1)-rank
// type-A group: (pi, sigma(pi), induced bijection).
UniformBlockPermutation ubp_of_coset(const Group& g, const Lattice& l, const Coset& c);

// Explicit order isomorphism between the poset of uniform block
// permutations of size n and the coset poset: ubp[i] corresponds to poset
// node i.  Verified element-by-element in both directions; throws
// std::logic_error on any mismatch.
std::vector<UniformBlockPermutation> ubp_isomorphism(const CosetPoset& poset);

// Frobenius characteristic of a type-A Burnside element, in the H basis.
SymFunc frobenius(const BurnsideRing& ring, const BurnsideElement& b);

// Homology character symmetric functions for ranks 1..N, extracted from the
// log of the H-weighted exponential series.
std::vector<SymFunc> character_series(int N);

// Dimension sequences from the order-0 Bessel series: D_n = n!^2 [x^n]
// (-log J) and D'_n = n!^2 [x^n] (1/J), with the log relation verified.
struct BesselDims {
    std::vector<Int> d;        // D_1..D_N
    std::vector<Int> d_prime;  // D'_0..D'_N
};
BesselDims bessel_dims(int N);

// Number of pairs (sigma, tau) with des(sigma) inside des(tau); restricted
// additionally requires tau to fix the first letter.
Int descent_pair_count(int n, bool restricted);

}  // namespace cosetlab
