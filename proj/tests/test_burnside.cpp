#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cosetlab/burnside.hpp"

#include <bit>
#include <map>
#include <random>
#include <set>
#include <vector>

using namespace cosetlab;

namespace {

struct Ctx {
    Group g;
    Lattice l;
    BurnsideRing ring;
    explicit Ctx(const char* name)
        : g(Group::build(GroupSymbol::parse(name))), l(Lattice::build(g)), ring(g, l) {}
};

// Type-A orbit lookup by partition shape.
int orbit_by_shape(const Ctx& c, std::vector<int> shape) {
    for (int o = 0; o < c.l.num_orbits(); ++o) {
        ReflMask m = c.l.orbit_label(o);
        const int n = c.g.ambient_dim();
        std::vector<int> parent(n);
        for (int i = 0; i < n; ++i) parent[i] = i;
        auto find = [&](int i) {
            while (parent[i] != i) i = parent[i] = parent[parent[i]];
            return i;
        };
        ReflMask mm = m;
        while (mm) {
            int t = std::countr_zero(mm);
            mm &= mm - 1;
            const Vec& r = c.g.positive_roots()[t];
            int a = -1, b = -1;
            for (int j = 0; j < n; ++j) {
                if (r[j] == 1) a = j;
                if (r[j] == -1) b = j;
            }
            parent[find(a)] = find(b);
        }
        std::map<int, int> size;
        for (int i = 0; i < n; ++i) ++size[find(i)];
        std::vector<int> s;
        for (auto& [k, v] : size) s.push_back(v);
        std::sort(s.rbegin(), s.rend());
        if (s == shape) return o;
    }
    REQUIRE(false);
    return -1;
}

// Brute-force fixed-coset count: enumerate the cosets of W_X as element
// sets and count those mapped to themselves by w.  Independent of the
// ring's fix-table path.
Int brute_fixed_cosets(const Ctx& c, int flat, Elem w) {
    ReflMask m = c.l.flat(flat).refl;
    std::vector<Elem> sub = c.g.parabolic_elements(m);
    std::set<Elem> reps;
    for (Elem u = 0; u < c.g.order(); ++u) reps.insert(c.g.min_coset_rep(u, m));
    Int count = 0;
    for (Elem r : reps) {
        std::set<Elem> coset;
        for (Elem h : sub) coset.insert(c.g.mult(r, h));
        std::set<Elem> image;
        for (Elem x : coset) image.insert(c.g.mult(w, x));
        if (image == coset) ++count;
    }
    return count;
}

BurnsideElement random_element(const Ctx& c, std::mt19937_64& rng) {
    BurnsideElement b;
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int o = 0; o < c.l.num_orbits(); ++o) b.add(o, coeff(rng));
    return b;
}

}  // namespace

TEST_CASE("phi basics") {
    Ctx c("A3");
    // phi at the origin is the trivial character.
    BurnsideElement triv = c.ring.phi(c.l.top());
    for (Elem w : c.g.class_reps()) CHECK(c.ring.char_value(triv, w) == 1);
    // phi at V is the regular character.
    BurnsideElement reg = c.ring.phi(c.l.bottom());
    CHECK(c.ring.char_value(reg, c.g.identity()) == Int(static_cast<unsigned long>(c.g.order())));
    for (Elem w : c.g.class_reps())
        if (w != c.g.identity()) CHECK(c.ring.char_value(reg, w) == 0);
    // Conjugate flats produce identical elements.
    for (int x = 0; x < c.l.size(); ++x)
        for (int i = 0; i < c.g.rank(); ++i) {
            Elem s = c.g.reflection(c.g.simple_root_index(i));
            int y = c.l.index_of(c.g.conj_mask(s, c.l.flat(x).refl));
            CHECK(c.ring.phi(x) == c.ring.phi(y));
        }
}

TEST_CASE("character values against brute-force coset counting") {
    for (const char* name : {"A3", "B3"}) {
        Ctx c(name);
        for (int x = 0; x < c.l.size(); ++x) {
            BurnsideElement b = c.ring.phi(x);
            for (Elem w : c.g.class_reps())
                CHECK(c.ring.char_value(b, w) == brute_fixed_cosets(c, x, w));
        }
        // Values depend only on the conjugacy class (spot check on non-reps).
        for (Elem w = 0; w < c.g.order(); w += 7) {
            Elem rep = c.g.class_reps()[c.g.class_of(w)];
            BurnsideElement b = c.ring.phi(c.l.bottom()) + c.ring.phi(c.l.top());
            CHECK(c.ring.char_value(b, w) == c.ring.char_value(b, rep));
        }
    }
}

TEST_CASE("top homology character") {
    // A1: the two-element lattice forces phi_V - phi_{0} (the sign character).
    {
        Ctx c("A1");
        BurnsideElement expect = c.ring.phi(c.l.bottom());
        expect -= c.ring.phi(c.l.top());
        CHECK(c.ring.top_homology_character() == expect);
    }
    // A3: 6 phi_{1^4} - 12 phi_{21^2} + 3 phi_{2^2} + 4 phi_{31} - phi_4, dim 33.
    {
        Ctx c("A3");
        BurnsideElement xi = c.ring.top_homology_character();
        CHECK(xi.coeff(orbit_by_shape(c, {1, 1, 1, 1})) == 6);
        CHECK(xi.coeff(orbit_by_shape(c, {2, 1, 1})) == -12);
        CHECK(xi.coeff(orbit_by_shape(c, {2, 2})) == 3);
        CHECK(xi.coeff(orbit_by_shape(c, {3, 1})) == 4);
        CHECK(xi.coeff(orbit_by_shape(c, {4})) == -1);
        CHECK(c.ring.dim(xi) == 33);
        CHECK(c.ring.char_value(xi, c.g.identity()) == 33);
    }
    for (const char* name : {"A1", "A2", "A3", "B2", "B3", "G2", "D4", "F4"}) {
        Ctx c(name);
        BurnsideElement xi = c.ring.top_homology_character();
        // Both computation routes agree exactly.
        CHECK(xi == c.ring.top_homology_character_all_flats());
        // The orbits of V and {0} are singletons, so those coefficients are
        // pinned directly by the orbit formula.
        int sgn = c.g.rank() % 2 ? -1 : 1;
        CHECK(xi.coeff(c.l.orbit_of(c.l.top())) == sgn);
        CHECK(xi.coeff(c.l.orbit_of(c.l.bottom())) == sgn * c.l.mobius_to_top(c.l.bottom()));
    }
}

TEST_CASE("Whitney components") {
    for (const char* name : {"A1", "A2", "A3", "B3", "G2"}) {
        Ctx c(name);
        const int n = c.g.rank();
        // k = 0 is exactly phi at the origin.
        CHECK(c.ring.whitney_component(0) == c.ring.phi(c.l.top()));
        // Alternating sum over all k recovers the homology character.
        BurnsideElement sum;
        for (int k = 0; k <= n; ++k) {
            BurnsideElement t = c.ring.whitney_component(k);
            if ((n + k) % 2) {
                BurnsideElement neg;
                neg -= t;
                t = neg;
            }
            sum += t;
        }
        CHECK(sum == c.ring.top_homology_character());
    }
    // A2, k = 1: three copies of the hyperplane orbit.
    Ctx c("A2");
    BurnsideElement wh1 = c.ring.whitney_component(1);
    int hyp_orbit = c.l.orbit_of(c.l.flats_of_codim(1)[0]);
    CHECK(wh1.coeff(hyp_orbit) == 3);
    CHECK(wh1.coeffs().size() == 1);
}

TEST_CASE("tensor sign") {
    // Solomon expansion of the trivial character.
    {
        Ctx c("A3");
        BurnsideElement sign = c.ring.tensor_sign(c.ring.phi(c.l.top()));
        BurnsideElement expect;
        for (SubsetMask J = 0; J < (SubsetMask(1) << 3); ++J)
            expect.add(c.l.orbit_of_subset(J), std::popcount(J) % 2 ? -1 : 1);
        CHECK(sign == expect);
        // As a class function this is the determinant character.
        for (Elem w : c.g.class_reps())
            CHECK(c.ring.char_value(sign, w) == c.g.det(w));
    }
    // Involution on random elements, and the class-function oracle
    // char(b (x) sign, w) = det(w) char(b, w).
    std::mt19937_64 rng(12345);
    for (const char* name : {"A3", "B3", "G2"}) {
        Ctx c(name);
        for (int trial = 0; trial < 100; ++trial) {
            BurnsideElement b = random_element(c, rng);
            BurnsideElement tb = c.ring.tensor_sign(b);
            CHECK(c.ring.tensor_sign(tb) == b);
            for (Elem w : c.g.class_reps())
                CHECK(c.ring.char_value(tb, w) == c.g.det(w) * c.ring.char_value(b, w));
        }
    }
    // A3: sign-tensored homology character has coefficients (0,1,2,2,1).
    {
        Ctx c("A3");
        BurnsideElement t = c.ring.tensor_sign(c.ring.top_homology_character());
        CHECK(t.coeff(orbit_by_shape(c, {1, 1, 1, 1})) == 0);
        CHECK(t.coeff(orbit_by_shape(c, {2, 1, 1})) == 1);
        CHECK(t.coeff(orbit_by_shape(c, {2, 2})) == 2);
        CHECK(t.coeff(orbit_by_shape(c, {3, 1})) == 2);
        CHECK(t.coeff(orbit_by_shape(c, {4})) == 1);
    }
}

TEST_CASE("multiplicities and dimensions") {
    for (const char* name : {"A1", "A2", "A3", "A4", "B2", "B3", "D4", "F4", "G2"}) {
        Ctx c(name);
        BurnsideElement xi = c.ring.top_homology_character();
        CHECK(c.ring.mult_trivial(xi) == 0);
        Int mu = c.l.mobius_to_top(c.l.bottom());
        if (c.g.rank() % 2) mu = -mu;
        CHECK(c.ring.mult_sign(xi) == mu);
        // Sign-tensored character is nonnegative with coefficient sum |mu(V)|.
        BurnsideElement t = c.ring.tensor_sign(xi);
        CHECK(t.nonnegative());
        CHECK(t.coeff_sum() == abs(c.l.mobius_to_top(c.l.bottom())));
        CHECK(c.ring.dim(c.ring.phi(c.l.top())) == 1);
        CHECK(c.ring.dim(xi) == c.ring.char_value(xi, c.g.identity()));
    }
}

TEST_CASE("rank-selected characters and the h-vector") {
    Ctx c("A3");
    const SubsetMask full = (SubsetMask(1) << 3) - 1;
    CHECK(c.ring.rank_selected_character(full) == c.ring.top_homology_character());
    CHECK(c.ring.rank_selected_character(0) == c.ring.phi(c.l.top()));
    // Flag h dims for the 4-letter symmetric group, frozen from the
    // Schur expansions (f^lambda = 1,3,2,3,1).
    auto d = [&](SubsetMask R) { return c.ring.dim(c.ring.rank_selected_character(R)); };
    CHECK(d(0b001) == 23);
    CHECK(d(0b010) == 71);
    CHECK(d(0b100) == 33);
    CHECK(d(0b011) == 49);
    CHECK(d(0b101) == 111);
    CHECK(d(0b110) == 111);
    CHECK(d(0b111) == 33);
    std::vector<Int> h = c.ring.h_vector();
    CHECK(h == std::vector<Int>{1, 127, 271, 33});
    Int total = 0;
    for (const Int& x : h) total += x;
    CHECK(total == 432);  // |W| * |W| n! / 2^n
}
