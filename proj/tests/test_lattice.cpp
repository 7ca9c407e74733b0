#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "support.hpp"

using namespace galeq;

namespace {

std::vector<Int> combine(const std::vector<std::vector<Int>>& rows, const std::vector<Int>& c, std::size_t dim)
{
    std::vector<Int> s(dim, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dim; ++j)
            s[j] += c[i] * rows[i][j];
    return s;
}

}  // namespace

TEST_CASE("HNF of a small lattice")
{
    IntLattice L(3, {{2, 0, 0}, {0, 3, 0}, {2, 3, 0}});
    CHECK(L.rank() == 2);
    CHECK(L.contains({4, -6, 0}));
    CHECK_FALSE(L.contains({1, 0, 0}));
    CHECK_FALSE(L.contains({0, 0, 1}));
    auto r = L.reduce({5, 7, 1});
    CHECK_FALSE(r.member);
}

TEST_CASE("membership agrees with bounded coefficient search")
{
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<Int> e(-3, 3);
    for (int k = 0; k < 400; ++k) {
        const std::size_t dim = 3 + rng() % 2, nrows = 1 + rng() % 3;
        std::vector<std::vector<Int>> rows(nrows, std::vector<Int>(dim));
        for (auto& r : rows)
            for (auto& x : r)
                x = e(rng);
        IntLattice L(dim, rows);

        // a known member
        std::vector<Int> c(nrows);
        for (auto& x : c)
            x = e(rng);
        CHECK(L.contains(combine(rows, c, dim)));

        // an arbitrary vector: search success forces membership, and the
        // reported witness must reproduce v minus the residual exactly
        std::vector<Int> v(dim);
        for (auto& x : v)
            x = e(rng);
        auto red = L.reduce(v);
        if (fx::member_by_search(rows, v, 3))
            CHECK(red.member);
        auto back = combine(rows, red.coeffs, dim);
        for (std::size_t j = 0; j < dim; ++j)
            CHECK(back[j] + red.residual[j] == v[j]);
        CHECK(red.member == std::all_of(red.residual.begin(), red.residual.end(), [](Int x) { return x == 0; }));
    }
}
