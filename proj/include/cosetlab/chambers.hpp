#pragma once

#include "cosetlab/burnside.hpp"

#include <string>
#include <vector>

namespace cosetlab {

enum class RhoMode { SeededRandomInF, Prop75Spread, User };

// A direction vector rho with an exact genericity certificate: its inner
// product with every ray of the chamber fan, none of which may vanish.
struct GenericVector {
    Vec rho;                     // ambient coordinates
    std::vector<Rat> coeffs;     // coordinates in the weight basis
    bool in_fundamental_chamber = false;
    std::vector<int> ray_signs;  // +-1 per ray id
    Rat min_abs_pairing;         // min over rays of |<rho, ray>|; certificate
};

// Generic direction choices.  Seeded mode draws positive rational weight
// coefficients (numerators/denominators up to 2^16) and resamples until
// generic; the spread mode picks geometrically decaying coefficients and
// doubles the base until the first-letter characterization of positive
// chambers holds (type A only).  User mode validates the given coefficients
// and throws NonGenericError if some ray pairing vanishes.
GenericVector choose_rho_seeded(const Group& g, std::uint64_t seed);
GenericVector choose_rho_spread(const Group& g);
GenericVector choose_rho_user(const Group& g, const std::vector<Rat>& omega_coeffs);

// Letter permutation of a type-A element: image[i] = w(i) on 0-based letters.
std::vector<int> type_a_letter_permutation(const Group& g, Elem w);

// A face of the chamber complex contained in the closed positive half-space:
// the coset (rep, I) spans the cone over the rays rep(omega_j), j not in I.
struct PositiveFace {
    Elem rep;       // minimal coset representative
    SubsetMask I;   // proper subset of S; dim of the face = n - |I|
    int span_flat;  // lattice flat spanned by the face
};

// The subcomplex of the chamber fan on the positive side of rho's hyperplane.
class PositiveComplex {
public:
    static PositiveComplex build(const BurnsideRing& ring, const GenericVector& rho);

    const BurnsideRing& ring() const { return *ring_; }
    const GenericVector& rho() const { return rho_; }
    const std::vector<PositiveFace>& faces() const { return faces_; }  // nonempty faces
    const std::vector<Elem>& facets() const { return facets_; }        // chambers, by element
    bool has_face(Elem w, SubsetMask I) const;

    // Face counts by linear-span dimension; index 0 counts the empty face.
    std::vector<Int> f_vector() const;
    // h-vector from the f-vector by the standard binomial transform.
    std::vector<Int> h_vector() const;

    // (-1)^n sum over faces (the empty face included) of (-1)^dim phi_span.
    BurnsideElement colored_f_character() const;

    // Facets ordered by the weak-order linear extension (length, then word),
    // with the panel-intersection shelling certificate verified; throws
    // ShellingViolationError on failure (which would indicate a bug).
    // Requires rho in the fundamental chamber.
    std::vector<Elem> shelling_order() const;
    // Per-facet type: the flat spanned by the intersection of the panels not
    // shared with earlier facets; and their phi sum.
    std::vector<int> shelling_types(const std::vector<Elem>& order) const;
    BurnsideElement shelling_type_character() const;

    // Sum of phi_{asc(w)} over chambers in the positive half-space, or of
    // phi_{des(w)} over chambers in the negative one; both equal the
    // sign-tensored homology character when rho is in F.
    enum class Side { Positive, Negative };
    BurnsideElement halfspace_h_character(Side side) const;

    // Every panel of the subcomplex lies in one or two of its facets, and
    // the facet adjacency graph is connected.
    bool is_pseudomanifold_with_connected_dual() const;

private:
    const BurnsideRing* ring_ = nullptr;
    GenericVector rho_;
    std::vector<PositiveFace> faces_;
    std::vector<Elem> facets_;
    int span_flat_of(Elem rep, SubsetMask I) const;
};

}  // namespace cosetlab
