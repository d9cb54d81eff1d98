#pragma once

#include "cosetlab/errors.hpp"
#include "cosetlab/numeric.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace cosetlab {

enum class Family : std::uint8_t { A, B, D, G2, F4 };

// A finite crystallographic Coxeter group symbol.  Supported scope:
// A(n>=1), B(n>=2), D(n>=4), G2, F4.
struct GroupSymbol {
    Family family = Family::A;
    int rank = 1;

    static GroupSymbol parse(const std::string& text);  // "A3", "B2", "G2", "F4"
    std::string str() const;
    void validate() const;      // throws UnsupportedTypeError
    Int order() const;          // |W| by the classification formula
    int num_positive_roots() const;
};

// Element index inside the ambient group (deterministic order: by length,
// then lexicographic canonical word).
using Elem = std::uint32_t;
// Bitset over reflections, indexed by positive roots.
using ReflMask = std::uint64_t;
// Bitset over the simple generators s_1..s_n (bit i-1 <-> s_i).
using SubsetMask = std::uint32_t;

// Compares reflection bitsets as 0/1 strings read from bit 0: the smaller
// mask is the one missing the earliest reflection where they differ.
inline bool mask_lex_less(ReflMask a, ReflMask b) {
    ReflMask x = a ^ b;
    if (x == 0) return false;
    return (b & (x & (~x + 1))) != 0;
}

// Exact realization of a finite crystallographic Coxeter group: root system,
// fundamental weights, enumerated elements with their action on positive
// roots, Cayley graphs, inversion sets, canonical reduced words, rays of the
// chamber fan, and conjugacy classes.  Immutable after construction.
class Group {
public:
    static constexpr std::uint64_t kDefaultCap = 1000000;

    static Group build(const GroupSymbol& symbol, std::uint64_t cap = kDefaultCap);

    const GroupSymbol& symbol() const { return symbol_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return dim_; }
    std::size_t order() const { return tables_.size(); }
    int num_reflections() const { return num_roots_; }
    ReflMask full_refl_mask() const {
        return num_roots_ == 64 ? ~ReflMask(0) : ((ReflMask(1) << num_roots_) - 1);
    }
    SubsetMask full_subset_mask() const { return (SubsetMask(1) << rank_) - 1; }

    // --- root geometry (all exact) ---
    const std::vector<Vec>& positive_roots() const { return pos_roots_; }
    int simple_root_index(int i) const { return simple_idx_[i]; }
    const Vec& simple_root(int i) const { return pos_roots_[simple_idx_[i]]; }
    const Vec& simple_coroot(int i) const { return coroots_[i]; }
    const std::vector<Vec>& fundamental_weights() const { return weights_; }

    // --- elements ---
    Elem identity() const { return 0; }
    int length(Elem w) const { return lengths_[w]; }
    ReflMask inversions(Elem w) const { return inv_mask_[w]; }
    // { t : l(w t) < l(w) }; w is the minimal element of w W_X exactly when
    // this mask misses the reflection set of X.
    ReflMask right_inversions(Elem w) const { return inv_mask_[inv_elem_[w]]; }
    const std::vector<std::uint8_t>& word(Elem w) const { return words_[w]; }
    Elem longest_element() const { return longest_; }

    // Signed image of positive root t under w: returns +-(k+1), meaning
    // w(beta_t) = sign * beta_k.
    int root_image(Elem w, int t) const { return tables_[w][t]; }

    Elem mult(Elem a, Elem b) const;
    Elem inverse(Elem w) const { return inv_elem_[w]; }
    Elem right(Elem w, int i) const { return right_[w * rank_ + i]; }  // w * s_i
    Elem left(int i, Elem w) const { return left_[w * rank_ + i]; }    // s_i * w
    Elem reflection(int t) const { return refl_elem_[t]; }
    int det(Elem w) const { return lengths_[w] % 2 ? -1 : 1; }

    SubsetMask descent_mask(Elem w) const;  // { i : l(w s_i) < l(w) }
    SubsetMask ascent_mask(Elem w) const { return full_subset_mask() & ~descent_mask(w); }

    // Right weak order: v <= w iff Inv(v) is a subset of Inv(w).
    bool weak_leq(Elem v, Elem w) const { return (inv_mask_[v] & ~inv_mask_[w]) == 0; }

    // Sorts a weak-order ideal into a linear extension (length, then word).
    // Throws NotIdealError if the set is not downward closed.
    std::vector<Elem> weak_order_linear_extension(std::vector<Elem> subset) const;

    // --- exact action on vectors ---
    Vec apply(Elem w, Vec v) const;

    // Rays of the chamber fan: ray_index(w, j) identifies the vector w(omega_j).
    int ray_index(Elem w, int j) const { return ray_id_[w * rank_ + j]; }
    const std::vector<Vec>& rays() const { return rays_; }

    // --- parabolic machinery (reflection sets as bitmasks) ---
    ReflMask parabolic_closure(ReflMask m) const;
    bool is_parabolic(ReflMask m) const { return parabolic_closure(m) == m; }
    // Reflections of the simple generators in I.
    ReflMask simple_subset_mask(SubsetMask I) const;
    // Codimension of the flat fixed by the parabolic with (closed) mask m.
    int mask_codim(ReflMask m) const;
    // Membership in W_X: the minimal representative of w W_X is the identity.
    // (Inversion-set containment does not characterize membership for
    // non-standard parabolics.)
    bool in_parabolic(Elem w, ReflMask closed_mask) const;
    // Unique minimal-length element of w * W_m; throws NotParabolicError if
    // the mask is not closed.
    Elem min_coset_rep(Elem w, ReflMask m) const;
    // Same, for masks already known to be closed (lattice flats).
    Elem min_coset_rep_closed(Elem w, ReflMask closed_mask) const;
    std::vector<Elem> parabolic_elements(ReflMask closed_mask) const;

    // --- conjugation ---
    int conj_root(Elem w, int t) const {  // index of w t w^-1
        int v = tables_[w][t];
        return (v > 0 ? v : -v) - 1;
    }
    ReflMask conj_mask(Elem w, ReflMask m) const;
    Elem conjugate(Elem w, Elem x) const {  // w x w^-1
        return mult(mult(w, x), inv_elem_[w]);
    }

    int num_classes() const { return static_cast<int>(class_reps_.size()); }
    const std::vector<Elem>& class_reps() const { return class_reps_; }
    int class_of(Elem w) const { return class_of_[w]; }

private:
    Group() = default;

    using Table = std::vector<std::int16_t>;
    Table compose(const Table& a, const Table& b) const;  // (a . b)(x) = a(b(x))
    Elem lookup(const Table& t) const;
    ReflMask table_inversions(const Table& t) const;

    struct TableHash {
        std::size_t operator()(const Table& t) const {
            std::size_t h = 1469598103934665603ull;
            for (std::int16_t v : t) {
                h ^= static_cast<std::size_t>(static_cast<std::uint16_t>(v));
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    GroupSymbol symbol_;
    int rank_ = 0;       // n
    int dim_ = 0;        // ambient dimension (n, or n+1 for A, 3 for G2)
    int num_roots_ = 0;  // |T|

    std::vector<Vec> pos_roots_;
    std::vector<Vec> coroots_;  // simple coroots 2a/<a,a>
    std::vector<int> simple_idx_;
    std::vector<Vec> weights_;

    std::vector<Table> tables_;
    std::unordered_map<Table, Elem, TableHash> index_;
    std::vector<std::uint16_t> lengths_;
    std::vector<ReflMask> inv_mask_;
    std::vector<Elem> right_, left_;  // Cayley tables, row-major [w*rank + i]
    std::vector<Elem> inv_elem_;
    std::vector<std::vector<std::uint8_t>> words_;
    std::vector<Elem> refl_elem_;
    Elem longest_ = 0;

    std::vector<int> ray_id_;
    std::vector<Vec> rays_;

    std::vector<Elem> class_reps_;
    std::vector<int> class_of_;
};

}  // namespace cosetlab
