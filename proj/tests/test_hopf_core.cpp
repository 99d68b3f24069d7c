#include <doctest.h>

#include "smashquot/hopf.hpp"

using namespace smashquot;

namespace {

TwistedBuild build_family(const Int& m, bool twisted) {
    auto ctx = std::make_shared<const GammaContext>(2, 2);
    return build_twisted_quotient(ctx, dihedral_family_datum(*ctx, m, twisted));
}

FiniteGroupTable dihedral_table(long m) {
    GammaContext ctx(2, 2);
    return finite_quotient(ctx, hnf(IntMatrix::from_columns(1, {{Int(m)}})), true).table;
}

}  // namespace

TEST_CASE("group algebras") {
    HopfSC z2 = build_group_algebra(FiniteGroupTable::cyclic(2));
    CHECK(z2.dim() == 2);
    CHECK(z2.is_commutative());
    CHECK(z2.is_cocommutative());
    CHECK(verify_hopf_axioms(z2).ok());

    HopfSC s3 = build_group_algebra(dihedral_table(3));
    CHECK(s3.dim() == 6);
    CHECK(!s3.is_commutative());
    CHECK(s3.is_cocommutative());
    CHECK(verify_hopf_axioms(s3).ok());

    CHECK(build_group_algebra(FiniteGroupTable::trivial()).dim() == 1);
}

TEST_CASE("function algebras") {
    HopfSC z2 = build_function_algebra(FiniteGroupTable::cyclic(2));
    CHECK(z2.is_commutative());
    CHECK(z2.is_cocommutative());
    CHECK(verify_hopf_axioms(z2).ok());

    HopfSC d4 = build_function_algebra(dihedral_table(4));
    CHECK(d4.dim() == 8);
    CHECK(d4.is_commutative());
    CHECK(!d4.is_cocommutative());  // cocommutative iff the group is abelian
    CHECK(verify_hopf_axioms(d4).ok());

    HopfSC z4 = build_function_algebra(FiniteGroupTable::cyclic(4));
    CHECK(z4.dim() == 4);
    CHECK(z4.is_cocommutative());
}

TEST_CASE("smash coproducts") {
    GammaContext ctx(2, 2);
    auto fq = finite_quotient(ctx, hnf(IntMatrix::from_columns(1, {{Int(3)}})), true);
    HopfSC a3 = build_smash_coproduct(fq.table, FiniteGroupTable::cyclic(2), fq.h_action);
    CHECK(a3.dim() == 12);  // A(3), dimension 4m
    auto rep = verify_hopf_axioms(a3);
    CHECK(rep.ok());
    CHECK(!rep.commutative);
    CHECK(!rep.cocommutative);

    // trivial acting group reduces to the group algebra
    auto triv_action = GroupActionTable::trivial(FiniteGroupTable::trivial(), fq.table);
    HopfSC reduced = build_smash_coproduct(fq.table, FiniteGroupTable::trivial(), triv_action);
    CHECK(reduced.structure_equal(build_group_algebra(fq.table)));

    // trivial Gamma reduces to the function algebra
    auto z3 = FiniteGroupTable::cyclic(3);
    auto act = GroupActionTable::trivial(z3, FiniteGroupTable::trivial());
    HopfSC fun = build_smash_coproduct(FiniteGroupTable::trivial(), z3, act);
    CHECK(fun.structure_equal(build_function_algebra(z3)));

    // unverified action rejected
    GroupActionTable bad = fq.h_action;
    std::swap(bad.perm[1][0], bad.perm[1][1]);
    CHECK_THROWS_AS(build_smash_coproduct(fq.table, FiniteGroupTable::cyclic(2), bad),
                    std::invalid_argument);
}

TEST_CASE("twisted quotients: the A and B families") {
    TwistedBuild b1 = build_family(1, true);
    CHECK(b1.hopf.dim() == 4);
    CHECK(verify_hopf_axioms(b1.hopf).ok());

    for (long m = 1; m <= 4; ++m) {
        TwistedBuild a = build_family(m, false);
        CHECK(a.hopf.dim() == 4 * (std::size_t)m);  // [Gamma : N] |G|
        // A(m) has the same structure constants as the smash coproduct of D_m
        GammaContext ctx(2, 2);
        auto fq = finite_quotient(ctx, hnf(IntMatrix::from_columns(1, {{Int(m)}})), true);
        HopfSC smash = build_smash_coproduct(fq.table, FiniteGroupTable::cyclic(2), fq.h_action);
        CHECK(a.hopf.structure_equal(smash));
    }

    TwistedBuild b2 = build_family(2, true);
    auto rep = verify_hopf_axioms(b2.hopf);
    CHECK(rep.ok());
    CHECK(!rep.commutative);
    CHECK(!rep.cocommutative);

    // index-1 N: the quotient is the plain smash coproduct of Z_N = Gamma/T
    TwistedBuild deg = build_family(1, false);
    CHECK(deg.hopf.dim() == 4);
    CHECK(verify_hopf_axioms(deg.hopf).ok());
    CHECK(deg.hopf.is_commutative());
}

TEST_CASE("a corrupted antipode entry is caught with a witness") {
    TwistedBuild a3 = build_family(3, false);
    HopfSC broken = a3.hopf;
    auto s = broken.antipode_basis(5);
    REQUIRE(!s.empty());
    broken.set_antipode(5, s[0].first,
                        broken.pool_id(-HopfSC::Scalar::one(broken.cyclo_order(),
                                                            broken.laurent_rank())));
    auto rep = verify_hopf_axioms(broken);
    CHECK(!rep.antipode);
    CHECK(!rep.ok());
    CHECK(!rep.witnesses.empty());
}

TEST_CASE("section independence") {
    auto ctx = std::make_shared<const GammaContext>(2, 2);
    for (bool twisted : {false, true}) {
        QuotientDatum d = dihedral_family_datum(*ctx, Int(2), twisted);
        auto fq = finite_quotient(*ctx, d.N, false);
        auto rep = verify_section_independence(ctx, d, fq.section, shifted_section(*ctx, fq));
        CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures[0]));
        // identical sections give the identity comparison map
        auto same = verify_section_independence(ctx, d, fq.section, fq.section);
        CHECK(same.ok);
    }
}

TEST_CASE("exact sequences k -> k^G -> A -> k[Gamma/N] -> k") {
    TwistedBuild a2 = build_family(2, false);
    auto rep = verify_exact_sequence(a2);
    CHECK_MESSAGE(rep.ok, rep.str());
    CHECK(rep.dim_right_coinvariants == 2);  // = |Z_2|

    TwistedBuild b3 = build_family(3, true);
    auto rep3 = verify_exact_sequence(b3);
    CHECK_MESSAGE(rep3.ok, rep3.str());

    // degenerate index-1 case
    TwistedBuild b1 = build_family(1, true);
    CHECK(verify_exact_sequence(b1).ok);
}

TEST_CASE("quotient map compatibility from a finite model") {
    // B(2) received from the smash coproduct over Gamma/4Z (Phi is trivial on 4Z)
    TwistedBuild b2 = build_family(2, true);
    SubgroupHNF u4 = hnf(IntMatrix::from_columns(1, {{Int(4)}}));
    auto rep = verify_quotient_map(b2, u4);
    CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures[0]));

    TwistedBuild a3 = build_family(3, false);
    SubgroupHNF u6 = hnf(IntMatrix::from_columns(1, {{Int(6)}}));
    CHECK(verify_quotient_map(a3, u6).ok);

    // Phi nontrivial on U' is rejected
    SubgroupHNF u6b = hnf(IntMatrix::from_columns(1, {{Int(6)}}));
    CHECK_THROWS_AS(verify_quotient_map(b2, u6b), std::invalid_argument);
}

TEST_CASE("the map verifier rejects a broken map") {
    TwistedBuild b2 = build_family(2, true);
    const HopfSC& A = b2.hopf;
    std::vector<HopfSC::Element> ident(A.dim());
    for (std::size_t i = 0; i < A.dim(); ++i)
        ident[i] = {{static_cast<std::uint32_t>(i),
                     HopfSC::Scalar::one(A.cyclo_order(), A.laurent_rank())}};
    CHECK(verify_hopf_map(A, A, ident).ok);
    auto broken = ident;
    broken[3] = {{3, -HopfSC::Scalar::one(A.cyclo_order(), A.laurent_rank())}};
    CHECK(!verify_hopf_map(A, A, broken).ok);
}

TEST_CASE("character groups of the small identifications") {
    // A(1) = k^{Z_2 x Z_2}
    TwistedBuild a1 = build_family(1, false);
    FiniteGroupTable ga1 = compute_character_group(a1.hopf, 1);
    CHECK(ga1.order() == 4);
    CHECK(ga1.is_abelian());
    CHECK(ga1.exponent() == 2);

    // B(1) = k^{Z_4}
    TwistedBuild b1 = build_family(1, true);
    FiniteGroupTable gb1 = compute_character_group(b1.hopf, 4);
    CHECK(gb1.order() == 4);
    CHECK(gb1.isomorphic_to(FiniteGroupTable::cyclic(4)));

    // A(2) = k^{D_4}
    TwistedBuild a2 = build_family(2, false);
    FiniteGroupTable ga2 = compute_character_group(a2.hopf, 1);
    CHECK(ga2.order() == 8);
    CHECK(!ga2.is_abelian());
    CHECK(ga2.exponent() == 4);
    CHECK(ga2.isomorphic_to(dihedral_table(4)));

    for (const FiniteGroupTable* t : {&ga1, &gb1, &ga2}) CHECK(t->validate().ok);
}

TEST_CASE("characters of a function algebra recover the group") {
    for (auto make : {0, 1, 2, 3}) {
        FiniteGroupTable f = make == 0   ? FiniteGroupTable::cyclic(2)
                             : make == 1 ? FiniteGroupTable::cyclic(4)
                             : make == 2
                                 ? FiniteGroupTable::direct_product(FiniteGroupTable::cyclic(2),
                                                                    FiniteGroupTable::cyclic(2))
                                 : dihedral_table(3);
        FiniteGroupTable chars = compute_character_group(build_function_algebra(f), 1);
        CHECK(chars.isomorphic_to(f));
    }
}

TEST_CASE("character computation refuses an insufficient field") {
    // k[Z_3] has characters with values zeta_3, so Q cannot split it
    HopfSC z3 = build_group_algebra(FiniteGroupTable::cyclic(3));
    CHECK_THROWS_WITH_AS(compute_character_group(z3, 1), doctest::Contains("does not split"),
                         std::invalid_argument);
    CHECK(compute_character_group(z3, 3).isomorphic_to(FiniteGroupTable::cyclic(3)));
    CHECK_THROWS_AS(
        compute_character_group(build_group_algebra(dihedral_table(3)), 1),
        std::invalid_argument);  // not commutative
}
