#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cosetlab/linalg.hpp"

using namespace cosetlab;

TEST_CASE("row space rank and membership") {
    RowSpace rs(3);
    CHECK(rs.insert({Rat(1), Rat(0), Rat(1)}));
    CHECK(rs.insert({Rat(0), Rat(1), Rat(1)}));
    CHECK_FALSE(rs.insert({Rat(1), Rat(1), Rat(2)}));
    CHECK(rs.rank() == 2);
    CHECK(rs.contains({Rat(2), Rat(-3), Rat(-1)}));
    CHECK_FALSE(rs.contains({Rat(1), Rat(1), Rat(1)}));
}

TEST_CASE("nullspace is orthogonal complement of the rows") {
    std::vector<Vec> rows = {{Rat(1), Rat(1), Rat(0), Rat(0)}, {Rat(0), Rat(1), Rat(1), Rat(0)}};
    auto ns = nullspace(rows, 4);
    CHECK(ns.size() == 2);
    for (const Vec& v : ns)
        for (const Vec& r : rows) CHECK(dot(v, r) == 0);
    CHECK(rank_of(ns, 4) == 2);
}

TEST_CASE("solve_square") {
    std::vector<Vec> a = {{Rat(2), Rat(1)}, {Rat(1), Rat(3)}};
    Vec x = solve_square(a, {Rat(5), Rat(10)});
    CHECK(x[0] == 1);
    CHECK(x[1] == 3);
}

TEST_CASE("integer matrix rank") {
    std::vector<std::vector<Int>> m = {
        {1, 2, 3},
        {2, 4, 6},
        {1, 0, 1},
    };
    CHECK(integer_matrix_rank(m) == 2);
    std::vector<std::vector<Int>> id(5, std::vector<Int>(5, 0));
    for (int i = 0; i < 5; ++i) id[i][i] = 1;
    CHECK(integer_matrix_rank(id) == 5);
    std::vector<std::vector<Int>> z(3, std::vector<Int>(4, 0));
    CHECK(integer_matrix_rank(z) == 0);
    // Rank must be computed over Q, not mod small primes: this matrix has
    // determinant 2, hence full rank 2 even though it drops rank mod 2.
    std::vector<std::vector<Int>> d2 = {{1, 1}, {1, -1}};
    CHECK(integer_matrix_rank(d2) == 2);
}
