#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cosetlab/cosetposet.hpp"
#include "cosetlab/burnside.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <vector>

using namespace cosetlab;

namespace {

struct Ctx {
    Group g;
    Lattice l;
    CosetPoset p;
    explicit Ctx(const char* name)
        : g(Group::build(GroupSymbol::parse(name))), l(Lattice::build(g)), p(CosetPoset::build(g, l)) {}
};

// The coset as an explicit element set.
std::set<Elem> coset_set(const Ctx& c, const Coset& co) {
    std::set<Elem> out;
    for (Elem h : c.g.parabolic_elements(c.l.flat(co.flat).refl)) out.insert(c.g.mult(co.rep, h));
    return out;
}

}  // namespace

TEST_CASE("poset sizes") {
    CHECK(Ctx("A1").p.size() == 3);
    CHECK(Ctx("A2").p.size() == 16);
    CHECK(Ctx("A3").p.size() == 131);
    // Independent count: sum over flats of the subgroup index.
    Ctx b2("B2");
    int expect = 0;
    for (int x = 0; x < b2.l.size(); ++x)
        expect += static_cast<int>(b2.g.order() / b2.g.parabolic_elements(b2.l.flat(x).refl).size());
    CHECK(b2.p.size() == expect);
    CHECK_THROWS_AS(CosetPoset::build(b2.g, b2.l, 5), SizeCapError);
}

TEST_CASE("structure: maximum, minima, ranks, containment") {
    Ctx c("B2");
    const int maxn = c.p.max_node();
    CHECK(c.p.rank(maxn) == c.g.rank() + 1);
    for (int i = 0; i < c.p.size(); ++i) {
        CHECK(c.p.leq(i, maxn));
        // Containment agrees with the element-set oracle.
        for (int j = 0; j < c.p.size(); ++j) {
            auto a = coset_set(c, c.p.node(i));
            auto b = coset_set(c, c.p.node(j));
            CHECK(c.p.leq(i, j) == std::includes(b.begin(), b.end(), a.begin(), a.end()));
        }
    }
    // Minimal elements are the |W| singletons at rank 1.
    int singletons = 0;
    for (int i = 0; i < c.p.size(); ++i)
        if (c.p.rank(i) == 1) ++singletons;
    CHECK(singletons == static_cast<int>(c.g.order()));
}

TEST_CASE("interval above a singleton is the whole lattice") {
    for (const char* name : {"A2", "B2"}) {
        Ctx c(name);
        for (Elem w = 0; w < c.g.order(); ++w) {
            int s = c.p.index_of(w, c.l.bottom());
            // Nodes above {w}: exactly one per flat, and the order matches.
            std::map<int, int> per_flat;  // flat -> node
            per_flat[c.l.bottom()] = s;
            for (int u : c.p.above(s)) per_flat[c.p.node(u).flat] = u;
            CHECK(static_cast<int>(per_flat.size()) == c.l.size());
            for (auto& [fx, nx] : per_flat)
                for (auto& [fy, ny] : per_flat)
                    CHECK(c.l.leq(fx, fy) == c.p.leq(nx, ny));
        }
    }
}

TEST_CASE("order ideal below a coset looks like the coset poset of the subgroup") {
    Ctx c("A3");
    // Sample: standard parabolic cosets of each flat type.
    for (int x : {1, 7, 8, 14}) {
        if (x >= c.l.size()) continue;
        int node = c.p.index_of_any(c.g.identity(), x);
        // Collect the ideal below it.
        std::vector<int> ideal;
        for (int i = 0; i < c.p.size(); ++i)
            if (c.p.leq(i, node)) ideal.push_back(i);
        // Its size must be the coset-poset size of W_X: sum over subflats of
        // the index inside W_X.
        std::size_t wx = c.g.parabolic_elements(c.l.flat(x).refl).size();
        std::size_t expect = 0;
        for (int y = 0; y < c.l.size(); ++y) {
            if (!c.l.leq(y, x)) continue;
            expect += wx / c.g.parabolic_elements(c.l.flat(y).refl).size();
        }
        CHECK(ideal.size() == expect);
        // Graded with one top element.
        int tops = 0;
        for (int i : ideal)
            if (c.p.rank(i) == c.p.rank(node)) ++tops;
        CHECK(tops == 1);
    }
}

TEST_CASE("meets against brute-force set intersection, and joins exist") {
    for (const char* name : {"A2", "B2"}) {
        Ctx c(name);
        const int maxn = c.p.max_node();
        for (int a = 0; a < c.p.size(); ++a) {
            CHECK(c.p.meet(a, maxn).value() == c.p.node(a));
            for (int b = 0; b < c.p.size(); ++b) {
                auto m = c.p.meet(a, b);
                std::set<Elem> inter;
                auto sa = coset_set(c, c.p.node(a));
                auto sb = coset_set(c, c.p.node(b));
                std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                      std::inserter(inter, inter.begin()));
                if (inter.empty()) {
                    CHECK_FALSE(m.has_value());
                } else {
                    REQUIRE(m.has_value());
                    CHECK(coset_set(c, *m) == inter);
                }
                // Joins: the set of common upper bounds has a unique minimum.
                std::vector<int> ubs;
                for (int u = 0; u < c.p.size(); ++u)
                    if (c.p.leq(a, u) && c.p.leq(b, u)) ubs.push_back(u);
                REQUIRE(!ubs.empty());
                int least = -1;
                for (int u : ubs) {
                    bool below_all = true;
                    for (int v : ubs)
                        if (!c.p.leq(u, v)) below_all = false;
                    if (below_all) least = u;
                }
                CHECK(least >= 0);
            }
        }
        // Distinct singletons intersect trivially.
        int s0 = c.p.index_of(0, c.l.bottom());
        int s1 = c.p.index_of(1, c.l.bottom());
        CHECK_FALSE(c.p.meet(s0, s1).has_value());
    }
}

TEST_CASE("fixed-chain signed counts match the homology character") {
    for (const char* name : {"A1", "A2", "B2", "G2", "A3"}) {
        Ctx c(name);
        BurnsideRing ring(c.g, c.l);
        BurnsideElement xi = ring.top_homology_character();
        int sgn = (c.g.rank() - 1) % 2 ? -1 : 1;
        for (Elem w : c.g.class_reps())
            CHECK(sgn * c.p.lefschetz_proper(w) == ring.char_value(xi, w));
    }
    // Two-point case: the swap has reduced Lefschetz number -1.
    Ctx a1("A1");
    CHECK(a1.p.lefschetz_proper(a1.g.longest_element()) == -1);
    CHECK(a1.p.lefschetz_proper(a1.g.identity()) == 1);  // chi~ of two points
}

TEST_CASE("reduced Euler characteristic equals the Moebius invariant of the bounded poset") {
    for (const char* name : {"A2", "B2"}) {
        Ctx c(name);
        // mu(bottom, W) over P plus an adjoined minimum, by direct recursion.
        const int sz = c.p.size();
        std::vector<Int> mu(sz + 1, Int(0));  // index sz = the adjoined minimum
        // mu(x, W) for nodes x, processed by decreasing rank.
        std::vector<int> order(sz);
        for (int i = 0; i < sz; ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return c.p.rank(a) > c.p.rank(b); });
        for (int x : order) {
            if (x == c.p.max_node()) {
                mu[x] = 1;
                continue;
            }
            Int s = 0;
            for (int y = 0; y < sz; ++y)
                if (y != x && c.p.leq(x, y)) s += mu[y];
            mu[x] = -s;
        }
        Int s = 0;
        for (int y = 0; y < sz; ++y) s += mu[y];
        Int mu_hat = -s;
        CHECK(c.p.lefschetz_proper(c.g.identity()) == mu_hat);
    }
}

TEST_CASE("Betti numbers: homology concentrated on top with the right rank") {
    {
        Ctx c("A1");
        auto b = c.p.betti_numbers();
        CHECK(b == std::vector<Int>{1});
    }
    {
        Ctx c("A2");
        auto b = c.p.betti_numbers();
        CHECK(b == std::vector<Int>{0, 4});
    }
    {
        Ctx c("B2");
        auto b = c.p.betti_numbers();
        CHECK(b == std::vector<Int>{0, 9});
    }
    {
        Ctx c("G2");
        auto b = c.p.betti_numbers();
        CHECK(b == std::vector<Int>{0, 25});
    }
    {
        Ctx c("A3");
        auto b = c.p.betti_numbers();
        CHECK(b == std::vector<Int>{0, 0, 33});
    }
}

TEST_CASE("maximal chain counts") {
    auto count = [](const char* name) { return Ctx(name).p.count_maximal_chains(); };
    CHECK(count("A1") == 2);
    CHECK(count("A2") == 18);
    CHECK(count("B2") == 32);
    CHECK(count("G2") == 72);
    CHECK(count("A3") == 432);
    CHECK(count("B3") == 1728);
    // |W|^2 n! / 2^n in each case.
    for (const char* name : {"A2", "B2", "G2", "A3", "B3", "D4"}) {
        Ctx c(name);
        Int f = Int(static_cast<unsigned long>(c.g.order()));
        f = f * f * factorial(c.g.rank());
        for (int i = 0; i < c.g.rank(); ++i) f /= 2;
        CHECK(c.p.count_maximal_chains() == f);
    }
}

TEST_CASE("h-vector from chain counting matches the rank-selected character route") {
    for (const char* name : {"A2", "B2", "G2", "A3", "B3"}) {
        Ctx c(name);
        BurnsideRing ring(c.g, c.l);
        CHECK(c.p.h_vector_from_chains() == ring.h_vector());
    }
    Ctx a3("A3");
    CHECK(a3.p.h_vector_from_chains() == std::vector<Int>{1, 127, 271, 33});
}

TEST_CASE("rank-selected fixed-chain counts match rank-selected characters") {
    for (const char* name : {"A2", "B2", "A3"}) {
        Ctx c(name);
        BurnsideRing ring(c.g, c.l);
        for (SubsetMask R = 1; R < (SubsetMask(1) << c.g.rank()); ++R) {
            BurnsideElement hr = ring.rank_selected_character(R);
            int sgn = (std::popcount(R) - 1) % 2 ? -1 : 1;
            for (Elem w : c.g.class_reps())
                CHECK(sgn * c.p.lefschetz(w, R) == ring.char_value(hr, w));
        }
    }
}
