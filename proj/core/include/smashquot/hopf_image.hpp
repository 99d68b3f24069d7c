#pragma once

#include <optional>

#include "smashquot/hopf.hpp"
#include "smashquot/monomial_matrix.hpp"

namespace smashquot {

// Parameter matrix Q in M_{M x N}(k^x) with Q_{0c} = 1 = Q_{i0}; indices are
// read modulo M and N throughout.
struct QSpec {
    std::size_t M = 2, N = 2;
    UnitGroupRef spec;
    std::vector<std::vector<UnitValue>> Q;  // M rows, N columns

    void validate() const;
    const UnitValue& at(long i, long c) const;  // cyclic indices
};

struct ThetaMatrix {
    std::size_t M = 2, N = 2;
    std::vector<std::vector<UnitValue>> theta;
    const UnitValue& at(long i, long c) const;
};

// theta_{ic} = Q_{i-1,c} Q_{i,c-1} / (Q_{ic} Q_{i-1,c-1}); the row and column
// product identities are asserted after construction
ThetaMatrix theta_from_q(const QSpec& q);

// rho_Q(g_i # 1): entry (c-1, c) = theta_{ic}
MonomialMatrix rho_on_generator(const QSpec& q, std::size_t i);
// extension through the T x| Z_N normal form; diagonal on T
MonomialMatrix rho_on_element(const QSpec& q, const GammaMNElement& x);

// alpha(R, d): the diagonal value of rho on tau(R) at epsilon_d, in the
// closed form prod_{j,c} theta_{j,c+d}^{S_{jc}} with S_{jc} = R_{jc} + sum_i R_{ic}
UnitValue alpha(const QSpec& q, const std::vector<Int>& R, std::size_t d);

struct EQResult {
    std::vector<SubgroupHNF> per_level;  // E_Q^l for l = 0..M-1
    SubgroupHNF EQ;                      // intersection
    AbelianGroupStructure IQ0;           // image group Z^n / E_Q^0
};

EQResult compute_EQ(const QSpec& q);

// N_Q as a sublattice of T; equals E_Q and is cross-validated against the
// scalar-matrix membership definition on the basis
SubgroupHNF compute_NQ(const QSpec& q);

struct PhiDescent {
    SubgroupHNF U;
    QuotientDatum datum;  // G = Z_M, N = U, Phi forced by lambda
};

// lambda(r) = forced scalar of rho(r#1); Phi(r)(h^l) = prod_{j<l} lambda(h^{-j}.r);
// U = N_Q meet ker(periodicity) meet ker(conjugation invariance)
PhiDescent construct_phi_and_descend(const QSpec& q, const SubgroupHNF& NQ);

struct Classification {
    enum class Kind { Full, FamilyA, FamilyB, GroupAlgebra, Custom };
    Kind kind = Kind::Custom;
    Int family_m = 0;  // for A(m) / B(m)
    AbelianGroupStructure quotient;
    std::string str() const;
};

struct Certificate {
    std::string name;
    bool verdict = false;
    bool applicable = true;
};

struct HopfImageOptions {
    std::size_t max_hopf_dim = 5000;  // materialize the HopfSC up to this size
    bool check_factorization = true;
};

struct HopfImageResult {
    QSpec q;
    ThetaMatrix theta;
    EQResult eq;
    SubgroupHNF NQ;
    SubgroupHNF U;
    QuotientDatum datum;
    AbelianGroupStructure quotient;          // T / U
    std::optional<Int> dimension;            // nullopt = infinite
    bool inner_faithful = false;
    Classification classification;
    std::vector<Certificate> certificates;
    std::vector<std::string> consistency_failures;  // certificate cross-checks

    std::optional<TwistedBuild> build;  // materialized when finite and small enough
    bool factorization_checked = false;
    bool factorization_ok = false;

    bool consistent() const { return consistency_failures.empty(); }
};

HopfImageResult hopf_image(const QSpec& q, const HopfImageOptions& opts = {});

// Independent oracle from the small-index classification tables
// ((M,N) = (2,2) and (3,2)); throws on parameters outside the tables.
Classification classify_small_index(const QSpec& q);

// Maximality at desk scale: every sublattice V of NQ with [NQ : V] <= max_index
// that admits the forced Psi with (V, Psi) in E(rho) satisfies V subset U.
struct MaximalityReport {
    bool ok = true;
    std::size_t admissible = 0, tested = 0;
    std::vector<std::string> failures;
};
MaximalityReport verify_maximality(const QSpec& q, const SubgroupHNF& NQ, const SubgroupHNF& U,
                                   const Int& max_index);

}  // namespace smashquot
