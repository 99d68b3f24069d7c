#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "smashquot/gamma.hpp"
#include "smashquot/group_table.hpp"
#include "smashquot/quotient_datum.hpp"
#include "smashquot/scalar.hpp"

namespace smashquot {

using GammaContextRef = std::shared_ptr<const GammaContext>;

// Finite-dimensional Hopf algebra as sparse structure constants over the
// exact scalar ring.  Every algebra this engine constructs is a smash
// coproduct k[Gamma] (x) k^G as an algebra, so a product of two basis
// elements is a scalar multiple of a single basis element; the antipode is
// basis-monomial as well.  Scalars are pooled and referenced by id.
class HopfSC {
  public:
    static constexpr std::uint32_t kZero = 0xffffffffu;

    using Scalar = CycloLaurentScalar;
    struct CoTerm {
        std::uint32_t left, right, scalar;
    };
    // sparse element: sorted (basis index, coefficient), no zero coefficients
    using Element = std::vector<std::pair<std::uint32_t, Scalar>>;

    HopfSC() : HopfSC(0, 1, 0) {}
    HopfSC(std::size_t dim, unsigned long cyclo_order, std::size_t laurent_rank);

    std::size_t dim() const { return dim_; }
    unsigned long cyclo_order() const { return order_; }
    std::size_t laurent_rank() const { return rank_; }

    const std::string& label(std::size_t i) const { return labels_[i]; }
    void set_label(std::size_t i, std::string s) { labels_[i] = std::move(s); }

    std::uint32_t pool_id(const Scalar& s);
    const Scalar& pooled(std::uint32_t id) const { return pool_[id]; }
    std::size_t pool_size() const { return pool_.size(); }

    void set_mult(std::size_t i, std::size_t j, std::uint32_t out, std::uint32_t scalar_id);
    void add_comult_term(std::size_t i, std::uint32_t l, std::uint32_t r, std::uint32_t sid);
    void set_counit(std::size_t i, std::uint32_t sid);
    void set_antipode(std::size_t i, std::uint32_t out, std::uint32_t sid);
    void add_unit_term(std::size_t i, std::uint32_t sid);
    void finalize();  // canonical comult term order

    // basis product as a (0- or 1-term) element
    Element mult_basis(std::size_t i, std::size_t j) const;
    Element multiply(const Element& a, const Element& b) const;
    const std::vector<CoTerm>& comult(std::size_t i) const { return comult_[i]; }
    const Scalar& counit(std::size_t i) const { return pool_[counit_[i]]; }
    Element antipode_basis(std::size_t i) const;
    const Element& unit() const { return unit_; }

    bool is_commutative() const;
    bool is_cocommutative() const;

    // entrywise comparison of all structure tensors, lifting scalar fields
    bool structure_equal(const HopfSC& o) const;

  private:
    std::size_t dim_;
    unsigned long order_;
    std::size_t rank_;
    std::vector<std::string> labels_;
    std::vector<Scalar> pool_;
    std::map<Scalar, std::uint32_t> pool_index_;
    struct MTerm {
        std::uint32_t out = kZero;
        std::uint32_t scalar = kZero;
    };
    std::vector<MTerm> mult_;                   // dim x dim, row-major
    std::vector<std::vector<CoTerm>> comult_;   // per basis element
    std::vector<std::uint32_t> counit_;         // pool ids
    std::vector<MTerm> antipode_;               // per basis element
    Element unit_;
};

// ---- constructions ----

HopfSC build_group_algebra(const FiniteGroupTable& G);
HopfSC build_function_algebra(const FiniteGroupTable& H);
// smash coproduct k[Gamma] x| k^H for a verified H-action on Gamma
HopfSC build_smash_coproduct(const FiniteGroupTable& Gamma, const FiniteGroupTable& H,
                             const GroupActionTable& action);

// Twisted quotient k[Gamma/N] x|_Phi k^G built from a validated datum and a
// finite quotient of Gamma_{M,N}; keeps the construction data needed by the
// structural verifiers.
struct TwistedBuild {
    GammaContextRef ctx;
    QuotientDatum datum;
    FiniteQuotientResult fq;
    std::vector<GammaMNElement> section;  // section(1) = 1
    FiniteGroupTable g_table;             // the subgroup G as a group
    HopfSC hopf;

    std::size_t basis_index(std::size_t gamma_idx, std::size_t g_pos) const {
        return gamma_idx * datum.G.size() + g_pos;
    }
};

TwistedBuild build_twisted_quotient(GammaContextRef ctx, const QuotientDatum& datum);
TwistedBuild build_twisted_quotient(GammaContextRef ctx, const QuotientDatum& datum,
                                    std::vector<GammaMNElement> section);

// The (2,2) quotient data behind the two classical families: N = mZ inside
// T = Z, with Phi trivial (family A) or Phi(a^m) = chi (family B).  The
// resulting twisted quotients have dimension 4m.
QuotientDatum dihedral_family_datum(const GammaContext& ctx, const Int& m, bool twisted);

// a valid non-canonical section for section-independence tests: shifts every
// non-identity coset representative by an N-element
std::vector<GammaMNElement> shifted_section(const GammaContext& ctx,
                                            const FiniteQuotientResult& fq);

// ---- verification ----

struct HopfAxiomReport {
    bool associativity = true, unit = true, coassociativity = true, counit = true;
    bool comult_multiplicative = true, counit_multiplicative = true, antipode = true;
    bool commutative = false, cocommutative = false;
    std::vector<std::string> witnesses;
    bool ok() const {
        return associativity && unit && coassociativity && counit && comult_multiplicative &&
               counit_multiplicative && antipode;
    }
    std::string str() const;
};

// exhaustive loops over all basis pairs/triples; exact equality
HopfAxiomReport verify_hopf_axioms(const HopfSC& A);

struct MapReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// F maps basis elements of A to elements of B; checks unit, counit,
// multiplicativity and comultiplicativity of the induced linear map
MapReport verify_hopf_map(const HopfSC& A, const HopfSC& B, const std::vector<HopfSC::Element>& F);

// builds both twisted quotients and the comparison map
// f(u(r)#d_h) = u(r)#d_h Phi(i(r)^{-1} j(r)); checks it is a Hopf isomorphism
MapReport verify_section_independence(GammaContextRef ctx, const QuotientDatum& datum,
                                      const std::vector<GammaMNElement>& section_j,
                                      const std::vector<GammaMNElement>& section_i);

struct ExactSequenceReport {
    bool ok = true;
    std::size_t dim_A = 0, dim_B = 0, dim_L = 0;
    std::size_t rank_p = 0, dim_ker_p = 0, dim_AiBplus = 0, dim_iBplusA = 0;
    std::size_t dim_right_coinvariants = 0, dim_left_coinvariants = 0;
    std::vector<std::string> failures;
    std::string str() const;
};

// k -> k^G -> A -> k[Gamma/N] -> k with i(f) = 1#f and p = id (x) eps:
// injectivity/surjectivity, p i = eps 1, ker p = A i(B)^+ = i(B)^+ A,
// and both coinvariant spaces equal i(B), all by exact linear algebra
ExactSequenceReport verify_exact_sequence(const TwistedBuild& tb);

// the factoring Hopf surjection q : k[Gamma/U'] x| k^{Z_M} -> twisted quotient,
// q(r#d_h) = u(r)#d_{h|G} Phi(r j(u(r))^{-1}); requires U' inside N with
// Phi trivial on U'
MapReport verify_quotient_map(const TwistedBuild& target, const SubgroupHNF& u_prime);

// All algebra maps A -> Q(zeta_L) of a commutative HopfSC via simultaneous
// eigenspace splitting of the left regular representation; group law is
// convolution.  Throws if Q(zeta_L) does not split A.
FiniteGroupTable compute_character_group(const HopfSC& A, unsigned long L);

}  // namespace smashquot
