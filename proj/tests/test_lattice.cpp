#include <doctest.h>

#include "oracles.hpp"

using namespace smashquot;

TEST_CASE("hnf basic shapes") {
    CHECK(hnf(IntMatrix::identity(2)) == SubgroupHNF::full(2));
    CHECK(hnf(IntMatrix(3, 2)).is_zero());

    // columns {(2,0),(1,1)}
    IntMatrix m = IntMatrix::from_columns(2, {{Int(2), Int(0)}, {Int(1), Int(1)}});
    SubgroupHNF h = hnf(m);
    CHECK(h.basis == oracles::naive_canonical_basis(m));
    // the canonical basis of this lattice is {(1,1),(0,2)}
    CHECK(h.basis == std::vector<std::vector<Int>>{{Int(1), Int(1)}, {Int(0), Int(2)}});
}

TEST_CASE("hnf canonicity under unimodular column changes") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 3;
        std::size_t m = 1 + rng() % 3;
        IntMatrix a = oracles::random_matrix(rng, n, m, 6);
        SubgroupHNF h1 = hnf(a);
        IntMatrix v = oracles::random_unimodular(rng, m);
        SubgroupHNF h2 = hnf(a * v);
        CHECK(h1 == h2);
        CHECK(h1.basis == oracles::naive_canonical_basis(a));
        for (const auto& col : h1.basis) CHECK(oracles::member(h1, col));
        for (std::size_t c = 0; c < a.cols(); ++c) CHECK(oracles::member(h1, a.column(c)));
    }
}

TEST_CASE("snf spec cases") {
    // [[3,0],[-2,1]] -> diag(1,3)
    IntMatrix m(2, 2);
    m.at(0, 0) = 3;
    m.at(0, 1) = 0;
    m.at(1, 0) = -2;
    m.at(1, 1) = 1;
    auto dec = snf(m);
    CHECK(dec.S.at(0, 0) == 1);
    CHECK(dec.S.at(1, 1) == 3);
    CHECK(dec.U * m * dec.V == dec.S);

    IntMatrix d(2, 2);
    d.at(0, 0) = 6;
    d.at(1, 1) = 4;
    auto dd = snf(d);
    CHECK(dd.S.at(0, 0) == 2);
    CHECK(dd.S.at(1, 1) == 12);

    auto id = snf(IntMatrix::identity(3));
    CHECK(id.S == IntMatrix::identity(3));
}

TEST_CASE("snf randomized: decomposition, unimodularity, divisibility") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + rng() % 3, m = 1 + rng() % 3;
        IntMatrix a = oracles::random_matrix(rng, n, m, 6);
        auto dec = snf(a);
        CHECK(dec.U * a * dec.V == dec.S);
        Int du = oracles::det_by_permutations(dec.U);
        Int dv = oracles::det_by_permutations(dec.V);
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));
        Int prev(0);
        for (std::size_t i = 0; i < std::min(n, m); ++i) {
            const Int& di = dec.S.at(i, i);
            CHECK(di >= 0);
            if (prev != 0 && di != 0) CHECK(di % prev == 0);
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) CHECK(dec.S.at(i, j) == 0);
            prev = di;
        }
    }
}

TEST_CASE("kernel of a unit-group map") {
    // R -> q^{-4R} into Z_12: kernel 3Z
    IntMatrix a(1, 1);
    a.at(0, 0) = -4;
    SubgroupHNF k = kernel_of_unit_map(a, {Int(12)});
    CHECK(k.basis == std::vector<std::vector<Int>>{{Int(3)}});
    for (long r = -12; r <= 12; ++r) {
        bool in = oracles::member(k, {Int(r)});
        bool one = mod_floor(Int(-4 * r), Int(12)) == 0;
        CHECK(in == one);
    }

    IntMatrix z(2, 1);
    CHECK(kernel_of_unit_map(z, {Int(7)}) == SubgroupHNF::full(2));

    IntMatrix f(1, 1);
    f.at(0, 0) = 1;
    CHECK(kernel_of_unit_map(f, {std::nullopt}).is_zero());
}

TEST_CASE("kernel against exhaustive unit evaluation, mixed targets") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t n = 1 + rng() % 2, g = 1 + rng() % 2;
        IntMatrix a = oracles::random_matrix(rng, n, g, 4);
        std::vector<std::optional<Int>> orders;
        for (std::size_t j = 0; j < g; ++j) {
            if (rng() % 3 == 0)
                orders.push_back(std::nullopt);
            else
                orders.push_back(Int(2 + (long)(rng() % 5)));
        }
        SubgroupHNF k = kernel_of_unit_map(a, orders);
        std::vector<long> R(n, -6);
        while (true) {
            std::vector<Int> RR(R.begin(), R.end());
            bool trivial = true;
            for (std::size_t j = 0; j < g; ++j) {
                Int img(0);
                for (std::size_t i = 0; i < n; ++i) img += RR[i] * a.at(i, j);
                if (orders[j]) img = mod_floor(img, *orders[j]);
                if (img != 0) trivial = false;
            }
            CHECK(oracles::member(k, RR) == trivial);
            std::size_t i = 0;
            while (i < R.size() && R[i] == 6) R[i++] = -6;
            if (i == R.size()) break;
            ++R[i];
        }
    }
}

TEST_CASE("lattice intersection") {
    SubgroupHNF two = hnf(IntMatrix::from_columns(1, {{Int(2)}}));
    SubgroupHNF three = hnf(IntMatrix::from_columns(1, {{Int(3)}}));
    SubgroupHNF six = hnf(IntMatrix::from_columns(1, {{Int(6)}}));
    CHECK(lattice_intersect({two, three}) == six);
    CHECK(lattice_intersect({SubgroupHNF::full(1), six}) == six);
    CHECK_THROWS_AS(lattice_intersect({}), std::invalid_argument);

    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a = oracles::random_matrix(rng, 2, 2, 5);
        IntMatrix b = oracles::random_matrix(rng, 2, 2, 5);
        SubgroupHNF la = hnf(a), lb = hnf(b);
        SubgroupHNF meet = lattice_intersect({la, lb});
        for (const auto& col : meet.basis) {
            CHECK(oracles::member(la, col));
            CHECK(oracles::member(lb, col));
        }
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y) {
                std::vector<Int> v{Int(x), Int(y)};
                CHECK((oracles::member(la, v) && oracles::member(lb, v)) ==
                      oracles::member(meet, v));
            }
    }
}

TEST_CASE("quotient structure spec cases") {
    // span{(m,0),(-2m/3, m/3)} at m = 3 gives Z_3
    SubgroupHNF s = hnf(IntMatrix::from_columns(2, {{Int(3), Int(0)}, {Int(-2), Int(1)}}));
    auto q = quotient_structure(2, s);
    CHECK(q.invariant_factors == std::vector<Int>{Int(3)});
    CHECK(q.free_rank == 0);
    CHECK(*q.index() == 3);

    auto q2 = quotient_structure(1, hnf(IntMatrix::from_columns(1, {{Int(3)}})));
    CHECK(q2.invariant_factors == std::vector<Int>{Int(3)});

    auto q3 = quotient_structure(2, SubgroupHNF::zero(2));
    CHECK(q3.invariant_factors.empty());
    CHECK(q3.free_rank == 2);
    CHECK(!q3.index());
}

TEST_CASE("quotient structure against exhaustive enumeration") {
    std::mt19937_64 rng(31);
    std::size_t done = 0;
    while (done < 25) {
        std::size_t n = 1 + rng() % 2;
        IntMatrix a = oracles::random_matrix(rng, n, n, 5);
        SubgroupHNF s = hnf(a);
        auto q = quotient_structure(n, s);
        if (!q.index() || *q.index() > 50) continue;
        ++done;
        auto en = oracles::enumerate_quotient(n, s, 60);
        REQUIRE(en.has_value());
        CHECK(Int((unsigned long)en->reps.size()) == *q.index());
        // order statistics determine a finite abelian group: compare the
        // number of k-torsion elements for every k up to the index
        std::vector<Int> ks;
        for (Int k(1); k <= *q.index(); ++k) ks.push_back(k);
        auto counts = en->annihilator_counts(s, ks);
        for (const Int& k : ks) {
            Int expect(1);
            for (const Int& d : q.invariant_factors) expect *= gcd(k, d);
            CHECK(counts[k] == to_size(expect));
        }
    }
}

TEST_CASE("determinant agrees with permutation expansion") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 4;
        IntMatrix a = oracles::random_matrix(rng, n, n, 6);
        CHECK(a.det() == oracles::det_by_permutations(a));
    }
}

TEST_CASE("reduce yields canonical coset representatives") {
    SubgroupHNF s = hnf(IntMatrix::from_columns(2, {{Int(3), Int(1)}, {Int(0), Int(4)}}));
    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Int> v{Int((long)(rng() % 30) - 15), Int((long)(rng() % 30) - 15)};
        auto r = s.reduce(v);
        std::vector<Int> diff{v[0] - r[0], v[1] - r[1]};
        CHECK(s.contains(diff));
        auto again = s.reduce(r);
        CHECK(again == r);
    }
}
