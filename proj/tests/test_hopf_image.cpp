#include <doctest.h>

#include <random>

#include "smashquot/hopf_image.hpp"
#include "smashquot/json_io.hpp"

using namespace smashquot;

namespace {

// (2,2) with Q = (1 1; 1 q), q of order m (0 = transcendental)
QSpec q22(long m) {
    QSpec q;
    q.M = q.N = 2;
    q.spec = m == 0 ? make_unit_group({{"q", std::nullopt}})
                    : make_unit_group({{"q", Int(m)}});
    UnitValue one = UnitValue::one(q.spec);
    q.Q = {{one, one}, {one, UnitValue::generator(q.spec, 0)}};
    return q;
}

// (3,2) with Q = (1 1; 1 p; 1 q)
QSpec q32(const UnitGroupRef& spec, const UnitValue& p, const UnitValue& qq) {
    QSpec q;
    q.M = 3;
    q.N = 2;
    q.spec = spec;
    UnitValue one = UnitValue::one(spec);
    q.Q = {{one, one}, {one, p}, {one, qq}};
    return q;
}

}  // namespace

TEST_CASE("theta matrices") {
    QSpec q = q22(12);
    ThetaMatrix t = theta_from_q(q);
    UnitValue qq = UnitValue::generator(q.spec, 0);
    CHECK(t.theta[0][0] == qq.inverse());
    CHECK(t.theta[0][1] == qq);
    CHECK(t.theta[1][0] == qq);
    CHECK(t.theta[1][1] == qq.inverse());

    auto spec = make_unit_group({{"p", Int(6)}, {"q", Int(10)}});
    UnitValue p = UnitValue::generator(spec, 0), r = UnitValue::generator(spec, 1);
    ThetaMatrix t32 = theta_from_q(q32(spec, p, r));
    CHECK(t32.theta[0][0] == r.inverse());
    CHECK(t32.theta[0][1] == r);
    CHECK(t32.theta[1][0] == p);
    CHECK(t32.theta[1][1] == p.inverse());
    CHECK(t32.theta[2][0] == r * p.inverse());
    CHECK(t32.theta[2][1] == p * r.inverse());

    // all-ones parameters give all-ones theta
    QSpec ones = q22(12);
    ones.Q[1][1] = UnitValue::one(ones.spec);
    ThetaMatrix t1 = theta_from_q(ones);
    for (const auto& row : t1.theta)
        for (const auto& v : row) CHECK(v.is_one());
}

TEST_CASE("rho on generators") {
    QSpec q = q22(12);
    UnitValue qq = UnitValue::generator(q.spec, 0);
    MonomialMatrix r0 = rho_on_generator(q, 0);
    CHECK(r0.row_of(0) == 1);  // epsilon_0 -> theta_00 epsilon_{-1}
    CHECK(r0.row_of(1) == 0);
    CHECK(r0.value(0) == qq.inverse());
    CHECK(r0.value(1) == qq);

    for (std::size_t M : {2, 3})
        for (std::size_t N : {2, 3}) {
            auto spec = make_unit_group({{"a", Int(6)}, {"b", Int(4)}, {"c", Int(5)},
                                         {"d", Int(7)}});
            QSpec qs;
            qs.M = M;
            qs.N = N;
            qs.spec = spec;
            qs.Q.assign(M, std::vector<UnitValue>(N, UnitValue::one(spec)));
            std::size_t t = 0;
            for (std::size_t i = 1; i < M; ++i)
                for (std::size_t c = 1; c < N; ++c)
                    qs.Q[i][c] = UnitValue::generator(spec, t++);
            for (std::size_t i = 0; i < M; ++i) {
                MonomialMatrix m = rho_on_generator(qs, i);
                // rho(g_i)^N = id is forced by the row-product identity
                CHECK(m.pow(Int((unsigned long)N)) == MonomialMatrix::identity(spec, N));
            }
        }
}

TEST_CASE("rho on elements") {
    QSpec q = q22(12);
    GammaContext ctx(2, 2);
    UnitValue qq = UnitValue::generator(q.spec, 0);
    MonomialMatrix m = rho_on_element(q, ctx.basis_element(1, 1));
    CHECK(m.is_diagonal());
    CHECK(m.value(0) == qq.pow(-2));
    CHECK(m.value(1) == qq.pow(2));

    // representation property on random pairs
    std::mt19937_64 rng(61);
    for (int t = 0; t < 100; ++t) {
        GammaMNElement x = ctx.identity(), y = ctx.identity();
        for (Int& e : x.tvec) e = (long)(rng() % 9) - 4;
        for (Int& e : y.tvec) e = (long)(rng() % 9) - 4;
        x.npart = (long)(rng() % 2);
        y.npart = (long)(rng() % 2);
        CHECK(rho_on_element(q, ctx.mul(x, y)) ==
              rho_on_element(q, x) * rho_on_element(q, y));
    }

    // (3,2): rho(a_11) = diag((pq)^{-1}, pq) by the normative generator formula
    auto spec = make_unit_group({{"p", Int(6)}, {"q", Int(10)}});
    UnitValue p = UnitValue::generator(spec, 0), r = UnitValue::generator(spec, 1);
    QSpec q3 = q32(spec, p, r);
    GammaContext c32(3, 2);
    MonomialMatrix a11 = rho_on_element(q3, c32.basis_element(1, 1));
    CHECK(a11.is_diagonal());
    CHECK(a11.value(0) == (p * r).inverse());
    CHECK(a11.value(1) == p * r);
    // composition oracle: rho(g_1) rho(g_0)^{-1}
    CHECK(a11 == rho_on_generator(q3, 1) * rho_on_generator(q3, 0).inverse());
}

TEST_CASE("alpha closed form") {
    QSpec q = q22(12);
    UnitValue qq = UnitValue::generator(q.spec, 0);
    CHECK(alpha(q, {Int(1)}, 0) == qq.pow(-2));  // S_11 = 2, theta_11^2
    CHECK(alpha(q, {Int(1)}, 1) == qq.pow(2));
    CHECK(alpha(q, {Int(0)}, 0).is_one());
    CHECK(alpha(q, {Int(0)}, 1).is_one());
}

TEST_CASE("alpha consistency with the representation diagonal") {
    std::mt19937_64 rng(67);
    std::vector<QSpec> specs;
    specs.push_back(q22(12));
    {
        auto spec = make_unit_group({{"p", Int(8)}, {"q", Int(5)}});
        specs.push_back(q32(spec, UnitValue::generator(spec, 0), UnitValue::generator(spec, 1)));
    }
    {
        auto spec = make_unit_group({{"a", Int(6)}, {"b", std::nullopt}});
        QSpec qs;
        qs.M = 2;
        qs.N = 3;
        qs.spec = spec;
        UnitValue one = UnitValue::one(spec);
        qs.Q = {{one, one, one},
                {one, UnitValue::generator(spec, 0), UnitValue::generator(spec, 1)}};
        specs.push_back(qs);
    }
    for (const QSpec& q : specs) {
        GammaContext ctx(q.M, q.N);
        ThetaMatrix t = theta_from_q(q);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Int> R(ctx.rank());
            for (Int& e : R) e = (long)(rng() % 9) - 4;
            std::size_t d = rng() % q.N;
            UnitValue a = alpha(q, R, d);
            // product formula over the basis entries
            UnitValue b = UnitValue::one(q.spec);
            for (std::size_t i = 1; i < q.M; ++i)
                for (std::size_t c = 1; c < q.N; ++c)
                    b = b * (t.at((long)i, (long)(c + d)) *
                             t.at(0, (long)(c + d)).inverse())
                                .pow(R[ctx.coord(i, c)]);
            CHECK(a == b);
            // the (d,d) entry of rho on tau(R)
            MonomialMatrix m = rho_on_element(q, ctx.from_tvec(R));
            REQUIRE(m.is_diagonal());
            CHECK(m.value(d) == a);
        }
    }
}

TEST_CASE("E_Q at (2,2) order twelve") {
    QSpec q = q22(12);
    EQResult eq = compute_EQ(q);
    CHECK(eq.EQ.basis == std::vector<std::vector<Int>>{{Int(3)}});
    CHECK(eq.IQ0.invariant_factors == std::vector<Int>{Int(3)});
    CHECK(eq.IQ0.free_rank == 0);
    // exhaustive oracle over R in [-12, 12]
    GammaContext ctx(2, 2);
    for (long r = -12; r <= 12; ++r) {
        bool scalar = true;
        for (std::size_t l = 0; l < 2; ++l) {
            std::vector<Int> lr = ctx.h_action_power(Int((unsigned long)l)).apply({Int(r)});
            if (!rho_on_element(q, ctx.from_tvec(lr)).is_scalar()) scalar = false;
        }
        CHECK(scalar == eq.EQ.contains({Int(r)}));
    }

    QSpec ones = q22(12);
    ones.Q[1][1] = UnitValue::one(ones.spec);
    CHECK(compute_EQ(ones).EQ == SubgroupHNF::full(1));

    QSpec trans = q22(0);
    EQResult eqt = compute_EQ(trans);
    CHECK(eqt.EQ.is_zero());
    CHECK(eqt.IQ0.free_rank > 0);
}

TEST_CASE("N_Q across the four (2,2) cases") {
    for (long m = 1; m <= 24; ++m) {
        QSpec q = q22(m);
        SubgroupHNF nq = compute_NQ(q);
        Int expect = m % 2 == 1 ? Int(m) : (m % 4 == 2 ? Int(m / 2) : Int(m / 4));
        CHECK(nq.basis == std::vector<std::vector<Int>>{{expect}});
    }
}

TEST_CASE("forced Phi and the descent") {
    // o(q) = 12: U = N_Q = 3Z and Phi(a^3)(h) = q^{-6} = -1, the character chi
    QSpec q = q22(12);
    auto d = construct_phi_and_descend(q, compute_NQ(q));
    CHECK(d.U.basis == std::vector<std::vector<Int>>{{Int(3)}});
    UnitValue qq = UnitValue::generator(q.spec, 0);
    CHECK(d.datum.phi[0][1] == qq.pow(-6));
    CHECK(*d.datum.phi[0][1].order() == 2);
    CHECK(is_char_valued(d.datum));

    // o(q) = 6: U = 3Z with trivial Phi
    QSpec q6 = q22(6);
    auto d6 = construct_phi_and_descend(q6, compute_NQ(q6));
    CHECK(d6.U.basis == std::vector<std::vector<Int>>{{Int(3)}});
    CHECK(d6.datum.phi_is_trivial());

    // transcendental: nothing to extend
    QSpec qt = q22(0);
    auto dt = construct_phi_and_descend(qt, compute_NQ(qt));
    CHECK(dt.U.is_zero());
    CHECK(dt.datum.phi.empty());
}

TEST_CASE("hopf_image at (2,2)") {
    QSpec q = q22(12);
    HopfImageResult r = hopf_image(q);
    REQUIRE(r.dimension.has_value());
    CHECK(*r.dimension == 12);  // 4 o(q^4)
    CHECK(r.classification.str() == "B(3)");
    CHECK(r.consistent());
    REQUIRE(r.build.has_value());
    CHECK(r.factorization_checked);
    CHECK(r.factorization_ok);
    CHECK(verify_hopf_axioms(r.build->hopf).ok());

    HopfImageResult rt = hopf_image(q22(0));
    CHECK(!rt.dimension.has_value());
    CHECK(rt.inner_faithful);
    CHECK(rt.classification.str() == "FULL");
    CHECK(rt.consistent());
}

TEST_CASE("hopf_image at (3,2), p^2 = q^2 of order three") {
    auto spec = make_unit_group({{"z", Int(6)}});
    UnitValue z = UnitValue::generator(spec, 0);
    QSpec q = q32(spec, z, z);
    HopfImageResult r = hopf_image(q);
    REQUIRE(r.dimension.has_value());
    CHECK(*r.dimension == 18);  // 3 * 2 * 3
    CHECK(r.quotient.invariant_factors == std::vector<Int>{Int(3)});
    CHECK(r.consistent());
    CHECK(r.factorization_ok);
    CHECK(verify_hopf_axioms(r.build->hopf).ok());
    CHECK(verify_exact_sequence(*r.build).ok);
}

TEST_CASE("hopf_image at (3,2), p^2 = q^2 of order four: axioms at dimension 96") {
    auto spec = make_unit_group({{"z", Int(8)}});
    UnitValue z = UnitValue::generator(spec, 0);
    QSpec q = q32(spec, z, z);
    HopfImageResult r = hopf_image(q);
    REQUIRE(r.dimension.has_value());
    CHECK(*r.dimension == 96);
    CHECK(r.quotient.invariant_factors == std::vector<Int>{Int(4), Int(4)});
    REQUIRE(r.build.has_value());
    CHECK(verify_hopf_axioms(r.build->hopf).ok());
    CHECK(verify_exact_sequence(*r.build).ok);
}

TEST_CASE("qspec and hopf dumps round-trip through JSON") {
    QSpec q = q22(12);
    QSpec back = qspec_from_json(qspec_to_json(q));
    CHECK(back.M == q.M);
    CHECK(back.N == q.N);
    CHECK(back.Q[1][1].exponents() == q.Q[1][1].exponents());

    HopfImageResult r = hopf_image(q);
    REQUIRE(r.build.has_value());
    HopfSC loaded = hopf_from_json(hopf_to_json(r.build->hopf));
    CHECK(loaded.structure_equal(r.build->hopf));
    CHECK(verify_hopf_axioms(loaded).ok());
}

TEST_CASE("small-index classification oracle") {
    CHECK(classify_small_index(q22(7)).str() == "A(7)");
    CHECK(classify_small_index(q22(10)).str() == "A(5)");
    CHECK(classify_small_index(q22(0)).str() == "FULL");
    {
        auto spec = make_unit_group({{"p", Int(8)}, {"q", Int(5)}});
        auto c = classify_small_index(
            q32(spec, UnitValue::generator(spec, 0), UnitValue::generator(spec, 1)));
        CHECK(c.quotient.invariant_factors == std::vector<Int>{Int(20), Int(20)});
    }
    CHECK_THROWS_AS(classify_small_index([] {
                        QSpec q;
                        q.M = 3;
                        q.N = 3;
                        q.spec = make_unit_group({{"q", Int(4)}});
                        UnitValue one = UnitValue::one(q.spec);
                        q.Q.assign(3, std::vector<UnitValue>(3, one));
                        return q;
                    }()),
                    std::invalid_argument);
}

TEST_CASE("hopf_image agrees with the classification oracle for m <= 24") {
    for (long m = 1; m <= 24; ++m) {
        QSpec q = q22(m);
        HopfImageResult r = hopf_image(q, {.max_hopf_dim = 0, .check_factorization = false});
        Classification oracle = classify_small_index(q);
        CHECK_MESSAGE(r.classification.str() == oracle.str(), "m = ", m);
        REQUIRE(r.dimension.has_value());
        // dim = 4 o(q^4)
        UnitValue q4 = UnitValue::generator(q.spec, 0, 4);
        CHECK(*r.dimension == 4 * *q4.order());
    }
}

TEST_CASE("maximality of the descended datum at desk scale") {
    for (long m : {4L, 8L, 12L}) {
        QSpec q = q22(m);
        SubgroupHNF nq = compute_NQ(q);
        auto d = construct_phi_and_descend(q, nq);
        auto rep = verify_maximality(q, nq, d.U, Int(8));
        CHECK_MESSAGE(rep.ok, "m = ", m);
        CHECK(rep.admissible >= 1);  // U itself is admissible
        CHECK(rep.tested >= 8);
    }
}

TEST_CASE("(3,2) membership conditions carve out N_Q") {
    // tau(a_11^a a_21^b) and its translates act by scalars exactly when
    // (p^2)^{-a+b} = (q^2)^{a+2b} and (p^2)^{2a+b} = (q^2)^{a-b}
    std::vector<QSpec> cases;
    {
        auto spec = make_unit_group({{"p", Int(6)}, {"q", Int(10)}});
        cases.push_back(q32(spec, UnitValue::generator(spec, 0), UnitValue::generator(spec, 1)));
    }
    {
        auto spec = make_unit_group({{"z", Int(8)}});
        cases.push_back(q32(spec, UnitValue::generator(spec, 0), UnitValue::generator(spec, 0)));
    }
    for (const QSpec& q : cases) {
        SubgroupHNF nq = compute_NQ(q);
        UnitValue p2 = q.Q[1][1].pow(2), q2 = q.Q[2][1].pow(2);
        for (long a = -8; a <= 8; ++a)
            for (long b = -8; b <= 8; ++b) {
                bool cond = (p2.pow(-a + b) == q2.pow(a + 2 * b)) &&
                            (p2.pow(2 * a + b) == q2.pow(a - b));
                CHECK(nq.contains({Int(a), Int(b)}) == cond);
            }
    }
}

TEST_CASE("an entry of infinite order forces an infinite image group") {
    // with one non-root-of-unity parameter the image group I_Q^0 is infinite
    QSpec q;
    q.M = 2;
    q.N = 3;
    q.spec = make_unit_group({{"t", std::nullopt}, {"w", Int(3)}});
    UnitValue one = UnitValue::one(q.spec);
    q.Q = {{one, one, one},
           {one, UnitValue::generator(q.spec, 0), UnitValue::generator(q.spec, 1)}};
    EQResult eq = compute_EQ(q);
    CHECK(eq.IQ0.free_rank > 0);
}

TEST_CASE("(3,3) with all parameters of order three") {
    auto spec = make_unit_group({{"w", Int(3)}});
    QSpec q;
    q.M = 3;
    q.N = 3;
    q.spec = spec;
    UnitValue one = UnitValue::one(spec), w = UnitValue::generator(spec, 0);
    q.Q.assign(3, std::vector<UnitValue>(3, one));
    q.Q[1][1] = q.Q[1][2] = q.Q[2][1] = q.Q[2][2] = w;
    HopfImageResult r = hopf_image(q);
    // by hand: rho(a_11) = diag(w,1,w^2), rho(a_12) = diag(1,w^2,w),
    // rho(a_21) = diag(w^2,1,w), rho(a_22) = diag(1,w,w^2); the scalar
    // condition for tau(R) collapses to R_1 + R_2 + 2 R_3 + 2 R_4 = 0 mod 3,
    // an index-3 sublattice stable under both actions
    GammaContext ctx(3, 3);
    MonomialMatrix a11 = rho_on_element(q, ctx.basis_element(1, 1));
    CHECK(a11.value(0) == w);
    CHECK(a11.value(1).is_one());
    CHECK(a11.value(2) == w.pow(2));
    for (long r1 : {-2L, 0L, 1L, 2L})
        for (long r2 : {-1L, 0L, 2L})
            for (long r3 : {0L, 1L})
                for (long r4 : {-2L, 0L, 1L}) {
                    bool in = mod_floor(Int(r1 + r2 + 2 * r3 + 2 * r4), Int(3)) == 0;
                    CHECK(r.eq.EQ.contains({Int(r1), Int(r2), Int(r3), Int(r4)}) == in);
                }
    REQUIRE(r.dimension.has_value());
    CHECK(*r.dimension == 27);  // 3 * 3 * [T:U] with [T:U] = 3
    CHECK(r.quotient.invariant_factors == std::vector<Int>{Int(3)});
    CHECK(r.consistent());
    CHECK(r.factorization_ok);
    REQUIRE(r.build.has_value());
    CHECK(verify_hopf_axioms(r.build->hopf).ok());
    CHECK(verify_exact_sequence(*r.build).ok);
    CHECK(validate_datum(ctx, r.datum).ok);
    CHECK(derived_consequences(ctx, r.datum).ok);
}

TEST_CASE("composite-index pipelines are internally consistent") {
    // (2,4): N composite, T of rank 3
    {
        auto spec = make_unit_group({{"q", Int(4)}});
        QSpec q;
        q.M = 2;
        q.N = 4;
        q.spec = spec;
        UnitValue one = UnitValue::one(spec);
        q.Q.assign(2, std::vector<UnitValue>(4, one));
        q.Q[1][1] = UnitValue::generator(spec, 0);
        q.Q[1][2] = UnitValue::generator(spec, 0, 2);
        q.Q[1][3] = UnitValue::generator(spec, 0, 3);
        HopfImageResult r = hopf_image(q);
        CHECK(r.consistent());
        REQUIRE(r.dimension.has_value());
        CHECK(r.factorization_ok);
        REQUIRE(r.build.has_value());
        CHECK(verify_hopf_axioms(r.build->hopf).ok());
        CHECK(verify_exact_sequence(*r.build).ok);

        // exhaustive membership on a box: N_Q is exactly the set of T-elements
        // whose translates all act by scalars
        GammaContext ctx(2, 4);
        std::vector<long> R(3, -3);
        while (true) {
            std::vector<Int> RR(R.begin(), R.end());
            bool scalar = true;
            for (std::size_t l = 0; l < 2 && scalar; ++l) {
                std::vector<Int> lr = ctx.h_action_power(Int((unsigned long)l)).apply(RR);
                if (!rho_on_element(q, ctx.from_tvec(lr)).is_scalar()) scalar = false;
            }
            CHECK(scalar == r.NQ.contains(RR));
            std::size_t i = 0;
            while (i < R.size() && R[i] == 3) R[i++] = -3;
            if (i == R.size()) break;
            ++R[i];
        }
    }
    // (4,2): M composite, so the periodicity morphism is not automatically
    // trivial on N_Q
    {
        auto spec = make_unit_group({{"q", Int(8)}});
        QSpec q;
        q.M = 4;
        q.N = 2;
        q.spec = spec;
        UnitValue one = UnitValue::one(spec);
        q.Q.assign(4, std::vector<UnitValue>(2, one));
        q.Q[1][1] = UnitValue::generator(spec, 0);
        q.Q[2][1] = UnitValue::generator(spec, 0, 3);
        q.Q[3][1] = UnitValue::generator(spec, 0, 5);
        HopfImageResult r = hopf_image(q);
        CHECK(r.consistent());
        REQUIRE(r.dimension.has_value());
        CHECK(r.factorization_ok);
        REQUIRE(r.build.has_value());
        CHECK(verify_hopf_axioms(r.build->hopf).ok());
        CHECK(verify_exact_sequence(*r.build).ok);
        CHECK(validate_datum(GammaContext(4, 2), r.datum).ok);
        auto max_rep = verify_maximality(q, r.NQ, r.U, Int(4));
        CHECK(max_rep.ok);
    }
}

TEST_CASE("randomized end-to-end consistency over small parameter matrices") {
    std::mt19937_64 rng(20260810);
    int done = 0;
    while (done < 12) {
        std::size_t M = 2 + rng() % 2, N = 2 + rng() % 2;
        long order = 2 + (long)(rng() % 11);
        auto spec = make_unit_group({{"z", Int(order)}});
        QSpec q;
        q.M = M;
        q.N = N;
        q.spec = spec;
        q.Q.assign(M, std::vector<UnitValue>(N, UnitValue::one(spec)));
        for (std::size_t i = 1; i < M; ++i)
            for (std::size_t c = 1; c < N; ++c)
                q.Q[i][c] = UnitValue::generator(spec, 0, (long)(rng() % order));
        HopfImageResult r = hopf_image(q, {.max_hopf_dim = 800, .check_factorization = true});
        CHECK(r.consistent());
        if (!r.dimension || !r.build) continue;
        ++done;
        CHECK(r.factorization_ok);
        GammaContext ctx(M, N);
        CHECK(validate_datum(ctx, r.datum).ok);
        CHECK(derived_consequences(ctx, r.datum, 99).ok);
        CHECK(verify_exact_sequence(*r.build).ok);
        if (r.build->hopf.dim() <= 120) CHECK(verify_hopf_axioms(r.build->hopf).ok());
        // spot-check N_Q membership against the scalar-action definition
        for (int t = 0; t < 20; ++t) {
            std::vector<Int> R(ctx.rank());
            for (Int& e : R) e = (long)(rng() % 9) - 4;
            bool scalar = true;
            for (std::size_t l = 0; l < M && scalar; ++l) {
                std::vector<Int> lr = ctx.h_action_power(Int((unsigned long)l)).apply(R);
                if (!rho_on_element(q, ctx.from_tvec(lr)).is_scalar()) scalar = false;
            }
            CHECK(scalar == r.NQ.contains(R));
        }
    }
}

TEST_CASE("inner faithfulness certificates") {
    // root independent at (3,3): all four parameters free
    QSpec q;
    q.M = 3;
    q.N = 3;
    q.spec = make_unit_group(
        {{"t1", std::nullopt}, {"t2", std::nullopt}, {"t3", std::nullopt}, {"t4", std::nullopt}});
    UnitValue one = UnitValue::one(q.spec);
    q.Q.assign(3, std::vector<UnitValue>(3, one));
    std::size_t t = 0;
    for (std::size_t i = 1; i < 3; ++i)
        for (std::size_t c = 1; c < 3; ++c) q.Q[i][c] = UnitValue::generator(q.spec, t++);
    HopfImageResult r = hopf_image(q);
    CHECK(r.eq.EQ.is_zero());
    CHECK(r.inner_faithful);
    CHECK(r.consistent());
    bool found = false;
    for (const auto& c : r.certificates)
        if (c.name == "root_independent") {
            CHECK(c.verdict);
            found = true;
        }
    CHECK(found);

    // (2,3) with one transcendental entry and one root of unity
    QSpec q23;
    q23.M = 2;
    q23.N = 3;
    q23.spec = make_unit_group({{"t", std::nullopt}, {"w", Int(3)}});
    UnitValue o23 = UnitValue::one(q23.spec);
    q23.Q = {{o23, o23, o23},
             {o23, UnitValue::generator(q23.spec, 0), UnitValue::generator(q23.spec, 1)}};
    HopfImageResult r23 = hopf_image(q23);
    CHECK(r23.inner_faithful);
    CHECK(!r23.dimension.has_value());
    CHECK(r23.consistent());
    for (const auto& c : r23.certificates)
        if (c.name == "non_root_of_unity") {
            CHECK(c.applicable);
            CHECK(c.verdict);
        }
}
