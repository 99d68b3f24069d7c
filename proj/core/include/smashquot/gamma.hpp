#pragma once

#include <memory>
#include <vector>

#include "smashquot/group_table.hpp"
#include "smashquot/lattice.hpp"

namespace smashquot {

// Element of Gamma_{M,N} = T x| Z_N in normal form tau(tvec) * g_0^npart,
// where T = Z^{(M-1)(N-1)} with basis a_{ic}, 1 <= i <= M-1, 1 <= c <= N-1.
struct GammaMNElement {
    std::vector<Int> tvec;
    Int npart;  // canonically in [0, N)

    bool operator==(const GammaMNElement& o) const {
        return tvec == o.tvec && npart == o.npart;
    }
    bool operator!=(const GammaMNElement& o) const { return !(*this == o); }
    std::string str() const;
};

class GammaContext {
  public:
    GammaContext(std::size_t M, std::size_t N);

    std::size_t M() const { return M_; }
    std::size_t N() const { return N_; }
    std::size_t rank() const { return (M_ - 1) * (N_ - 1); }
    // flat index of the basis element a_{ic}, 1 <= i <= M-1, 1 <= c <= N-1
    std::size_t coord(std::size_t i, std::size_t c) const;

    // additive matrix of conjugation by g_0 on T  (t . a_{ic} = a_{i,c+1})
    const IntMatrix& t_action() const { return C_; }
    // additive matrix of the canonical h-action on T, derived from h.g_i = g_{i+1}
    const IntMatrix& h_action() const { return D_; }
    const IntMatrix& h_action_power(const Int& l) const;

    GammaMNElement identity() const;
    GammaMNElement generator(std::size_t i) const;               // g_i
    GammaMNElement basis_element(std::size_t i, std::size_t c) const;  // a_{ic}, c in [0, N)
    GammaMNElement from_tvec(std::vector<Int> v) const;          // element of T

    GammaMNElement mul(const GammaMNElement& x, const GammaMNElement& y) const;
    GammaMNElement inv(const GammaMNElement& x) const;
    GammaMNElement pow(const GammaMNElement& x, const Int& e) const;

    std::vector<Int> apply_t_power(const Int& k, const std::vector<Int>& v) const;

    // canonical Z_M-action h^l
    GammaMNElement zm_act(const Int& l, const GammaMNElement& x) const;

  private:
    std::size_t M_, N_;
    IntMatrix C_;
    std::vector<IntMatrix> C_pow_;  // C^0..C^(N-1)
    IntMatrix D_;
    std::vector<IntMatrix> D_pow_;  // D^0..D^(M-1)
};

// Action of Z_M = <h> on Gamma_{M,N} given by generator images h.g_i.
struct GammaAction {
    GammaAction() = default;
    // the derived-matrix cache must not survive a copy of mutable fields
    GammaAction(const GammaAction& o) : ctx(o.ctx), gen_images(o.gen_images) {}
    GammaAction& operator=(const GammaAction& o) {
        ctx = o.ctx;
        gen_images = o.gen_images;
        tmat_cache_.reset();
        return *this;
    }
    GammaAction(GammaAction&&) = default;
    GammaAction& operator=(GammaAction&&) = default;

    const GammaContext* ctx = nullptr;
    std::vector<GammaMNElement> gen_images;  // size M, image of g_i

    static GammaAction canonical(const GammaContext& ctx);  // h.g_i = g_{i+1}

    // additive matrix on T induced by the generator images; throws if the
    // images do not even map T into T
    IntMatrix t_matrix() const;
    const IntMatrix& t_matrix_cached() const;
    GammaMNElement apply(const GammaMNElement& x) const;

    struct Report {
        bool ok = true;
        std::vector<std::string> failures;
    };
    // automorphism property on random pairs and order-M of the action
    Report verify(unsigned seed = 1, std::size_t trials = 100) const;

  private:
    mutable std::shared_ptr<const IntMatrix> tmat_cache_;
};

// Borrows the GammaContext it was built from; keep the context alive for the
// lifetime of the result.
struct FiniteQuotientResult {
    FiniteGroupTable table;                 // (T/U) x| Z_N
    std::vector<GammaMNElement> section;    // HNF-least lift per element, section(1) = 1
    GroupActionTable h_action;              // pushed Z_M-action (empty if not requested)
    SubgroupHNF U;
    std::size_t t_index = 0;                // [T : U]

    // index of the coset of x in the table
    std::size_t index_of(const GammaMNElement& x) const;

  private:
    friend FiniteQuotientResult finite_quotient(const GammaContext&, const SubgroupHNF&, bool);
    const GammaContext* ctx_ = nullptr;
    std::vector<Int> strides_;
    std::vector<std::size_t> pivots_;

  public:
    const GammaContext& ctx() const { return *ctx_; }
};

// Quotient (T/U) x| Z_N for a full-rank sublattice U stable under the
// t-action (and under the h-action when with_h_action is set).  Throws on
// infinite index or instability, naming the violated generator.
FiniteQuotientResult finite_quotient(const GammaContext& ctx, const SubgroupHNF& U,
                                     bool with_h_action);

// the two companion-matrix shapes realized by the cyclic actions, for cross-checks:
// degree (p-1); "last column -1" shape and "first row -1" shape
IntMatrix companion_last_column(std::size_t p);
IntMatrix companion_first_row(std::size_t p);

}  // namespace smashquot
