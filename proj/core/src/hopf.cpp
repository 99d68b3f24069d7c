#include "smashquot/hopf.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace smashquot {

namespace {

// Embed a unit whose torsion part has order dividing L, without requiring L
// to be a multiple of every generator order of the ambient presentation: the
// torsion part is the root of unity zeta_{M0}^k with M0 the presentation's
// torsion lcm, and it lies in Q(zeta_L) exactly when M0 | k L.
CycloLaurentScalar embed_root(const UnitValue& v, unsigned long L) {
    const auto& spec = *v.spec();
    Int M0 = spec.torsion_lcm();
    Int k(0);
    std::vector<Int> laurent;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto& g = spec.gen(i);
        if (g.order)
            k += (M0 / *g.order) * v.exponents()[i];
        else
            laurent.push_back(v.exponents()[i]);
    }
    Int num = k * Int(L);
    if (num % M0 != 0)
        throw std::invalid_argument("embed_root: unit order does not divide " +
                                    std::to_string(L));
    return CycloLaurentScalar::monomial(L, std::move(laurent),
                                        CyclotomicNumber::zeta_pow(L, num / M0));
}

// move a scalar into a larger ring: cyclotomic order may grow by lifting,
// Laurent rank may only grow from zero (padding with constant exponents)
CycloLaurentScalar cast_scalar(const CycloLaurentScalar& s, unsigned long order,
                               std::size_t rank) {
    CycloLaurentScalar t = s;
    if (t.cyclo_order() != order) t = t.lift_to_order(order);
    if (t.laurent_rank() == rank) return t;
    if (t.laurent_rank() != 0)
        throw std::invalid_argument("cannot cast scalar between Laurent ranks");
    CycloLaurentScalar r(order, rank);
    for (const auto& [e, c] : t.terms()) {
        (void)e;
        r = r + CycloLaurentScalar::monomial(order, std::vector<Int>(rank, Int(0)), c);
    }
    return r;
}

}  // namespace

HopfSC::HopfSC(std::size_t dim, unsigned long cyclo_order, std::size_t laurent_rank)
    : dim_(dim),
      order_(cyclo_order),
      rank_(laurent_rank),
      labels_(dim),
      mult_(dim * dim),
      comult_(dim),
      counit_(dim, 0),
      antipode_(dim) {
    // pool id 0 is zero, id 1 is one
    pool_id(Scalar::zero(order_, rank_));
    pool_id(Scalar::one(order_, rank_));
    for (std::size_t i = 0; i < dim_; ++i) labels_[i] = "b" + std::to_string(i);
}

std::uint32_t HopfSC::pool_id(const Scalar& s) {
    if (s.cyclo_order() != order_ || s.laurent_rank() != rank_)
        throw std::invalid_argument("scalar from a different ring");
    auto it = pool_index_.find(s);
    if (it != pool_index_.end()) return it->second;
    std::uint32_t id = static_cast<std::uint32_t>(pool_.size());
    pool_.push_back(s);
    pool_index_.emplace(s, id);
    return id;
}

void HopfSC::set_mult(std::size_t i, std::size_t j, std::uint32_t out, std::uint32_t sid) {
    MTerm& t = mult_[i * dim_ + j];
    t.out = out;
    t.scalar = sid;
}

void HopfSC::add_comult_term(std::size_t i, std::uint32_t l, std::uint32_t r, std::uint32_t sid) {
    if (pool_[sid].is_zero()) return;
    comult_[i].push_back(CoTerm{l, r, sid});
}

void HopfSC::set_counit(std::size_t i, std::uint32_t sid) { counit_[i] = sid; }

void HopfSC::set_antipode(std::size_t i, std::uint32_t out, std::uint32_t sid) {
    antipode_[i] = MTerm{out, sid};
}

void HopfSC::add_unit_term(std::size_t i, std::uint32_t sid) {
    unit_.emplace_back(static_cast<std::uint32_t>(i), pool_[sid]);
}

void HopfSC::finalize() {
    for (auto& terms : comult_)
        std::sort(terms.begin(), terms.end(), [](const CoTerm& a, const CoTerm& b) {
            return a.left != b.left ? a.left < b.left : a.right < b.right;
        });
    std::sort(unit_.begin(), unit_.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
}

HopfSC::Element HopfSC::mult_basis(std::size_t i, std::size_t j) const {
    const MTerm& t = mult_[i * dim_ + j];
    if (t.out == kZero || pool_[t.scalar].is_zero()) return {};
    return Element{{t.out, pool_[t.scalar]}};
}

HopfSC::Element HopfSC::multiply(const Element& a, const Element& b) const {
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& [i, ca] : a)
        for (const auto& [j, cb] : b) {
            const MTerm& t = mult_[i * dim_ + j];
            if (t.out == kZero) continue;
            Scalar v = ca * cb * pool_[t.scalar];
            if (v.is_zero()) continue;
            auto [it, fresh] = acc.emplace(t.out, v);
            if (!fresh) {
                it->second = it->second + v;
                if (it->second.is_zero()) acc.erase(it);
            }
        }
    Element r;
    for (auto& [k, v] : acc) r.emplace_back(k, std::move(v));
    return r;
}

HopfSC::Element HopfSC::antipode_basis(std::size_t i) const {
    const MTerm& t = antipode_[i];
    if (t.out == kZero || pool_[t.scalar].is_zero()) return {};
    return Element{{t.out, pool_[t.scalar]}};
}

bool HopfSC::is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
        for (std::size_t j = i + 1; j < dim_; ++j) {
            const MTerm& a = mult_[i * dim_ + j];
            const MTerm& b = mult_[j * dim_ + i];
            bool za = a.out == kZero || pool_[a.scalar].is_zero();
            bool zb = b.out == kZero || pool_[b.scalar].is_zero();
            if (za != zb) return false;
            if (!za && (a.out != b.out || !(pool_[a.scalar] == pool_[b.scalar]))) return false;
        }
    return true;
}

bool HopfSC::is_cocommutative() const {
    for (std::size_t i = 0; i < dim_; ++i) {
        std::map<std::pair<std::uint32_t, std::uint32_t>, Scalar> m;
        for (const auto& t : comult_[i]) {
            auto key = std::make_pair(t.left, t.right);
            auto [it, fresh] = m.emplace(key, pool_[t.scalar]);
            if (!fresh) it->second = it->second + pool_[t.scalar];
        }
        for (const auto& [k, v] : m) {
            auto it = m.find({k.second, k.first});
            if (it == m.end() || !(it->second == v)) return false;
        }
    }
    return true;
}

bool HopfSC::structure_equal(const HopfSC& o) const {
    if (dim_ != o.dim_) return false;
    if (rank_ != o.rank_) return false;
    unsigned long L = static_cast<unsigned long>(
        to_size(lcm(Int(order_), Int(o.order_))));
    auto eq = [&](std::uint32_t a, std::uint32_t b) {
        return cast_scalar(pool_[a], L, rank_) == cast_scalar(o.pool_[b], L, rank_);
    };
    for (std::size_t k = 0; k < dim_ * dim_; ++k) {
        const MTerm &a = mult_[k], &b = o.mult_[k];
        bool za = a.out == kZero || pool_[a.scalar].is_zero();
        bool zb = b.out == kZero || o.pool_[b.scalar].is_zero();
        if (za != zb) return false;
        if (!za && (a.out != b.out || !eq(a.scalar, b.scalar))) return false;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        if (comult_[i].size() != o.comult_[i].size()) return false;
        for (std::size_t t = 0; t < comult_[i].size(); ++t) {
            const CoTerm &a = comult_[i][t], &b = o.comult_[i][t];
            if (a.left != b.left || a.right != b.right || !eq(a.scalar, b.scalar)) return false;
        }
        if (!eq(counit_[i], o.counit_[i])) return false;
        const MTerm &sa = antipode_[i], &sb = o.antipode_[i];
        bool za = sa.out == kZero || pool_[sa.scalar].is_zero();
        bool zb = sb.out == kZero || o.pool_[sb.scalar].is_zero();
        if (za != zb) return false;
        if (!za && (sa.out != sb.out || !eq(sa.scalar, sb.scalar))) return false;
    }
    if (unit_.size() != o.unit_.size()) return false;
    for (std::size_t t = 0; t < unit_.size(); ++t) {
        if (unit_[t].first != o.unit_[t].first) return false;
        if (!(cast_scalar(unit_[t].second, L, rank_) == cast_scalar(o.unit_[t].second, L, rank_)))
            return false;
    }
    return true;
}

// ---- plain constructions ----

HopfSC build_group_algebra(const FiniteGroupTable& G) {
    auto v = G.validate();
    if (!v.ok) throw std::invalid_argument("build_group_algebra: invalid table: " + v.failures[0]);
    std::size_t n = G.order();
    HopfSC A(n, 1, 0);
    std::uint32_t one = A.pool_id(HopfSC::Scalar::one(1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        A.set_label(i, "g" + std::to_string(i));
        for (std::size_t j = 0; j < n; ++j)
            A.set_mult(i, j, static_cast<std::uint32_t>(G.mul(i, j)), one);
        A.add_comult_term(i, static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(i), one);
        A.set_counit(i, one);
        A.set_antipode(i, static_cast<std::uint32_t>(G.inv(i)), one);
    }
    A.add_unit_term(G.identity(), one);
    A.finalize();
    return A;
}

HopfSC build_function_algebra(const FiniteGroupTable& H) {
    auto v = H.validate();
    if (!v.ok)
        throw std::invalid_argument("build_function_algebra: invalid table: " + v.failures[0]);
    std::size_t n = H.order();
    HopfSC A(n, 1, 0);
    std::uint32_t one = A.pool_id(HopfSC::Scalar::one(1, 0));
    std::uint32_t zero = A.pool_id(HopfSC::Scalar::zero(1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        A.set_label(i, "d(" + std::to_string(i) + ")");
        A.set_mult(i, i, static_cast<std::uint32_t>(i), one);
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                if (H.mul(a, b) == i)
                    A.add_comult_term(i, static_cast<std::uint32_t>(a),
                                      static_cast<std::uint32_t>(b), one);
        A.set_counit(i, i == H.identity() ? one : zero);
        A.set_antipode(i, static_cast<std::uint32_t>(H.inv(i)), one);
        A.add_unit_term(i, one);
    }
    A.finalize();
    return A;
}

HopfSC build_smash_coproduct(const FiniteGroupTable& Gamma, const FiniteGroupTable& H,
                             const GroupActionTable& action) {
    auto rep = action.verify(Gamma);
    if (!rep.ok)
        throw std::invalid_argument("build_smash_coproduct: action rejected: " + rep.failures[0]);
    if (!(action.acting == H))
        throw std::invalid_argument("build_smash_coproduct: action acting group mismatch");
    std::size_t R = Gamma.order(), Hn = H.order();
    std::size_t d = R * Hn;
    auto idx = [&](std::size_t r, std::size_t h) { return r * Hn + h; };
    HopfSC A(d, 1, 0);
    std::uint32_t one = A.pool_id(HopfSC::Scalar::one(1, 0));
    std::uint32_t zero = A.pool_id(HopfSC::Scalar::zero(1, 0));
    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t h = 0; h < Hn; ++h) {
            std::size_t b = idx(r, h);
            A.set_label(b, "u(" + std::to_string(r) + ")#d(" + std::to_string(h) + ")");
            // algebra: k[Gamma] (x) k^H
            for (std::size_t s = 0; s < R; ++s)
                A.set_mult(b, idx(s, h), static_cast<std::uint32_t>(idx(Gamma.mul(r, s), h)),
                           one);
            // Delta(r#d_h) = sum_l r#d_{l^{-1}} (x) l.r#d_{lh}
            for (std::size_t l = 0; l < Hn; ++l)
                A.add_comult_term(b, static_cast<std::uint32_t>(idx(r, H.inv(l))),
                                  static_cast<std::uint32_t>(idx(action.perm[l][r], H.mul(l, h))),
                                  one);
            A.set_counit(b, h == H.identity() ? one : zero);
            // S(r#d_h) = h^{-1}.r^{-1} # d_{h^{-1}}
            std::size_t hi = H.inv(h);
            A.set_antipode(b, static_cast<std::uint32_t>(idx(action.perm[hi][Gamma.inv(r)], hi)),
                           one);
        }
    for (std::size_t h = 0; h < Hn; ++h) A.add_unit_term(idx(Gamma.identity(), h), one);
    A.finalize();
    return A;
}

// ---- twisted quotient ----

TwistedBuild build_twisted_quotient(GammaContextRef ctx, const QuotientDatum& datum) {
    return build_twisted_quotient(std::move(ctx), datum, {});
}

TwistedBuild build_twisted_quotient(GammaContextRef ctx, const QuotientDatum& datum,
                                    std::vector<GammaMNElement> section) {
    if (!ctx) throw std::invalid_argument("build_twisted_quotient: null context");
    auto val = validate_datum(*ctx, datum);
    if (!val.ok)
        throw std::invalid_argument("build_twisted_quotient: invalid datum: " + val.str());

    TwistedBuild tb;
    tb.ctx = ctx;
    tb.datum = datum;
    tb.fq = finite_quotient(*ctx, datum.N, false);
    const std::size_t R = tb.fq.table.order();
    const std::size_t Gn = datum.G.size();
    const std::size_t M = ctx->M();

    if (section.empty()) {
        tb.section = tb.fq.section;
    } else {
        if (section.size() != R)
            throw std::invalid_argument("build_twisted_quotient: section has wrong size");
        for (std::size_t e = 0; e < R; ++e)
            if (tb.fq.index_of(section[e]) != e)
                throw std::invalid_argument("build_twisted_quotient: not a section of u");
        if (section[0] != ctx->identity())
            throw std::invalid_argument("build_twisted_quotient: section must fix the identity");
        tb.section = std::move(section);
    }

    // G as a group in its own right
    {
        std::vector<std::uint32_t> gm(Gn * Gn);
        for (std::size_t a = 0; a < Gn; ++a)
            for (std::size_t b = 0; b < Gn; ++b)
                gm[a * Gn + b] = static_cast<std::uint32_t>(
                    datum.g_position((datum.G[a] + datum.G[b]) % M));
        tb.g_table = FiniteGroupTable(Gn, std::move(gm), datum.g_position(0));
    }

    // the scalar field is the smallest cyclotomic field containing every
    // finite-order Phi value
    Int Lint(1);
    for (const auto& row : datum.phi)
        for (const auto& v : row)
            if (auto o = v.order()) Lint = lcm(Lint, *o);
    const unsigned long L = static_cast<unsigned long>(to_size(Lint));
    const std::size_t lrank = datum.value_spec->infinite_indices().size();
    HopfSC A(R * Gn, L, lrank);
    auto idx = [&](std::size_t r, std::size_t g) { return r * Gn + g; };

    // pushed action of the elements of G on the quotient
    std::vector<std::vector<std::uint32_t>> gperm(Gn, std::vector<std::uint32_t>(R));
    std::vector<std::vector<GammaMNElement>> gact(Gn, std::vector<GammaMNElement>(R));
    for (std::size_t k = 0; k < Gn; ++k)
        for (std::size_t e = 0; e < R; ++e) {
            gact[k][e] = ctx->zm_act(Int(static_cast<unsigned long>(datum.G[k])), tb.section[e]);
            gperm[k][e] = static_cast<std::uint32_t>(tb.fq.index_of(gact[k][e]));
        }

    // Phi composed with the scalar embedding, cached per argument
    std::map<std::vector<Int>, std::vector<std::uint32_t>> phi_cache;
    auto phi_ids = [&](const GammaMNElement& w) -> const std::vector<std::uint32_t>& {
        if (w.npart != 0)
            throw std::logic_error("twisted quotient: cocycle argument escaped T");
        auto it = phi_cache.find(w.tvec);
        if (it != phi_cache.end()) return it->second;
        auto vals = datum.phi_at(w.tvec);
        std::vector<std::uint32_t> ids(Gn);
        for (std::size_t k = 0; k < Gn; ++k) ids[k] = A.pool_id(embed_root(vals[k], L));
        return phi_cache.emplace(w.tvec, std::move(ids)).first->second;
    };

    // (u(r)#d_h)(u(s)#d_h) = Phi(j(r) j(s) j(rs)^{-1})(h) u(rs)#d_h
    for (std::size_t r = 0; r < R; ++r) {
        for (std::size_t s = 0; s < R; ++s) {
            GammaMNElement prod = ctx->mul(tb.section[r], tb.section[s]);
            std::size_t out = tb.fq.index_of(prod);
            GammaMNElement w = ctx->mul(prod, ctx->inv(tb.section[out]));
            const auto& ids = phi_ids(w);
            for (std::size_t k = 0; k < Gn; ++k)
                A.set_mult(idx(r, k), idx(s, k), static_cast<std::uint32_t>(idx(out, k)), ids[k]);
        }
    }

    std::uint32_t one = A.pool_id(HopfSC::Scalar::one(L, lrank));
    std::uint32_t zero = A.pool_id(HopfSC::Scalar::zero(L, lrank));
    std::size_t e_pos = datum.g_position(0);

    for (std::size_t r = 0; r < R; ++r) {
        // Delta(u(r)#d_h) = sum_l u(r)#d_{l^{-1}} (x)
        //                   Phi(l.j(r) j(l.r)^{-1})(lh) u(l.r)#d_{lh}
        std::vector<const std::vector<std::uint32_t>*> wl_ids(Gn);
        std::vector<std::uint32_t> lr(Gn);
        for (std::size_t k = 0; k < Gn; ++k) {
            lr[k] = gperm[k][r];
            GammaMNElement w = ctx->mul(gact[k][r], ctx->inv(tb.section[lr[k]]));
            wl_ids[k] = &phi_ids(w);
        }
        for (std::size_t h = 0; h < Gn; ++h) {
            std::size_t b = idx(r, h);
            A.set_label(b, "u(" + tb.section[r].str() + ")#d(h^" +
                               std::to_string(datum.G[h]) + ")");
            for (std::size_t k = 0; k < Gn; ++k) {
                std::size_t linv = datum.g_position((M - datum.G[k]) % M);
                std::size_t lh = tb.g_table.mul(k, h);
                A.add_comult_term(b, static_cast<std::uint32_t>(idx(r, linv)),
                                  static_cast<std::uint32_t>(idx(lr[k], lh)),
                                  (*wl_ids[k])[lh]);
            }
            A.set_counit(b, h == e_pos ? one : zero);

            // S(u(r)#d_h) = Phi(j(h^{-1}.r^{-1})^{-1} h^{-1}.j(r)^{-1})(h^{-1})
            //               u(h^{-1}.r^{-1}) # d_{h^{-1}}
            std::size_t hinv = tb.g_table.inv(h);
            std::size_t rp = gperm[hinv][tb.fq.table.inv(r)];
            GammaMNElement hjrinv = ctx->zm_act(Int(static_cast<unsigned long>(datum.G[hinv])),
                                                ctx->inv(tb.section[r]));
            GammaMNElement w = ctx->mul(ctx->inv(tb.section[rp]), hjrinv);
            A.set_antipode(b, static_cast<std::uint32_t>(idx(rp, hinv)), phi_ids(w)[hinv]);
        }
    }
    for (std::size_t h = 0; h < Gn; ++h) A.add_unit_term(idx(0, h), one);
    A.finalize();
    tb.hopf = std::move(A);
    return tb;
}

QuotientDatum dihedral_family_datum(const GammaContext& ctx, const Int& m, bool twisted) {
    if (ctx.M() != 2 || ctx.N() != 2)
        throw std::invalid_argument("dihedral_family_datum: requires Gamma_{2,2}");
    if (m < 1) throw std::invalid_argument("dihedral_family_datum: m >= 1 required");
    QuotientDatum d;
    d.M = 2;
    d.N_order = 2;
    d.G = {0, 1};
    d.value_spec = make_unit_group({{"chi", Int(2)}});
    d.N = hnf(IntMatrix::from_columns(1, {{m}}));
    d.phi.push_back({UnitValue::one(d.value_spec),
                     twisted ? UnitValue::generator(d.value_spec, 0)
                             : UnitValue::one(d.value_spec)});
    return d;
}

std::vector<GammaMNElement> shifted_section(const GammaContext& ctx,
                                            const FiniteQuotientResult& fq) {
    std::vector<GammaMNElement> s = fq.section;
    if (fq.U.rank() == 0) return s;
    for (std::size_t e = 1; e < s.size(); ++e) {
        GammaMNElement shift = ctx.from_tvec(fq.U.basis[e % fq.U.rank()]);
        s[e] = ctx.mul(shift, s[e]);
    }
    return s;
}

// ---- axiom verification ----

std::string HopfAxiomReport::str() const {
    std::ostringstream os;
    os << "assoc=" << associativity << " unit=" << unit << " coassoc=" << coassociativity
       << " counit=" << counit << " Delta-mult=" << comult_multiplicative
       << " eps-mult=" << counit_multiplicative << " antipode=" << antipode
       << " commutative=" << commutative << " cocommutative=" << cocommutative;
    for (const auto& w : witnesses) os << "\n  witness: " << w;
    return os.str();
}

namespace {

using PairKey = std::pair<std::uint32_t, std::uint32_t>;
using PairMap = std::map<PairKey, HopfSC::Scalar>;

void pair_add(PairMap& m, std::uint32_t a, std::uint32_t b, const HopfSC::Scalar& s) {
    if (s.is_zero()) return;
    auto [it, fresh] = m.emplace(PairKey{a, b}, s);
    if (!fresh) {
        it->second = it->second + s;
        if (it->second.is_zero()) m.erase(it);
    }
}

bool element_equal(const HopfSC::Element& a, const HopfSC::Element& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i].first != b[i].first || !(a[i].second == b[i].second)) return false;
    return true;
}

HopfSC::Element element_scale(const HopfSC::Element& a, const HopfSC::Scalar& s) {
    HopfSC::Element r;
    if (s.is_zero()) return r;
    for (const auto& [i, c] : a) {
        auto v = c * s;
        if (!v.is_zero()) r.emplace_back(i, v);
    }
    return r;
}

}  // namespace

HopfAxiomReport verify_hopf_axioms(const HopfSC& A) {
    HopfAxiomReport rep;
    std::size_t d = A.dim();
    auto witness = [&](const std::string& s) {
        if (rep.witnesses.size() < 8) rep.witnesses.push_back(s);
    };

    // associativity on all basis triples
    for (std::size_t i = 0; i < d && rep.associativity; ++i)
        for (std::size_t j = 0; j < d && rep.associativity; ++j) {
            auto ij = A.mult_basis(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                HopfSC::Element lhs =
                    ij.empty() ? HopfSC::Element{}
                               : element_scale(A.mult_basis(ij[0].first, k), ij[0].second);
                auto jk = A.mult_basis(j, k);
                HopfSC::Element rhs =
                    jk.empty() ? HopfSC::Element{}
                               : element_scale(A.mult_basis(i, jk[0].first), jk[0].second);
                if (!element_equal(lhs, rhs)) {
                    rep.associativity = false;
                    witness("associativity fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")");
                    break;
                }
            }
        }

    // unit
    for (std::size_t i = 0; i < d; ++i) {
        HopfSC::Element e{{static_cast<std::uint32_t>(i), HopfSC::Scalar::one(A.cyclo_order(),
                                                                              A.laurent_rank())}};
        if (!element_equal(A.multiply(A.unit(), e), e) ||
            !element_equal(A.multiply(e, A.unit()), e)) {
            rep.unit = false;
            witness("unit axiom fails at " + std::to_string(i));
            break;
        }
    }

    // coassociativity
    for (std::size_t i = 0; i < d; ++i) {
        std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, HopfSC::Scalar> lhs,
            rhs;
        for (const auto& t : A.comult(i)) {
            const auto& s = A.pooled(t.scalar);
            for (const auto& u : A.comult(t.left)) {
                auto key = std::make_tuple(u.left, u.right, t.right);
                auto v = s * A.pooled(u.scalar);
                auto [it, fresh] = lhs.emplace(key, v);
                if (!fresh) it->second = it->second + v;
            }
            for (const auto& u : A.comult(t.right)) {
                auto key = std::make_tuple(t.left, u.left, u.right);
                auto v = s * A.pooled(u.scalar);
                auto [it, fresh] = rhs.emplace(key, v);
                if (!fresh) it->second = it->second + v;
            }
        }
        for (auto m : {&lhs, &rhs})
            for (auto it = m->begin(); it != m->end();)
                it = it->second.is_zero() ? m->erase(it) : std::next(it);
        if (!(lhs == rhs)) {
            rep.coassociativity = false;
            witness("coassociativity fails at " + std::to_string(i));
            break;
        }
    }

    // counit axiom
    for (std::size_t i = 0; i < d; ++i) {
        std::map<std::uint32_t, HopfSC::Scalar> left, right;
        for (const auto& t : A.comult(i)) {
            const auto& s = A.pooled(t.scalar);
            auto vl = A.counit(t.left) * s;
            auto vr = A.counit(t.right) * s;
            if (!vl.is_zero()) {
                auto [it, fresh] = left.emplace(t.right, vl);
                if (!fresh) it->second = it->second + vl;
            }
            if (!vr.is_zero()) {
                auto [it, fresh] = right.emplace(t.left, vr);
                if (!fresh) it->second = it->second + vr;
            }
        }
        auto is_ei = [&](std::map<std::uint32_t, HopfSC::Scalar>& m) {
            for (auto it = m.begin(); it != m.end();)
                it = it->second.is_zero() ? m.erase(it) : std::next(it);
            return m.size() == 1 && m.begin()->first == i && m.begin()->second.is_one();
        };
        if (!is_ei(left) || !is_ei(right)) {
            rep.counit = false;
            witness("counit axiom fails at " + std::to_string(i));
            break;
        }
    }

    // Delta(ab) = Delta(a) Delta(b) and eps(ab) = eps(a) eps(b)
    for (std::size_t i = 0; i < d && rep.comult_multiplicative && rep.counit_multiplicative; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            auto prod = A.mult_basis(i, j);
            PairMap lhs;
            if (!prod.empty())
                for (const auto& t : A.comult(prod[0].first))
                    pair_add(lhs, t.left, t.right, A.pooled(t.scalar) * prod[0].second);
            PairMap rhs;
            for (const auto& t1 : A.comult(i))
                for (const auto& t2 : A.comult(j)) {
                    auto m1 = A.mult_basis(t1.left, t2.left);
                    if (m1.empty()) continue;
                    auto m2 = A.mult_basis(t1.right, t2.right);
                    if (m2.empty()) continue;
                    pair_add(rhs, m1[0].first, m2[0].first,
                             A.pooled(t1.scalar) * A.pooled(t2.scalar) * m1[0].second *
                                 m2[0].second);
                }
            if (!(lhs == rhs)) {
                rep.comult_multiplicative = false;
                witness("Delta not multiplicative at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
                break;
            }
            HopfSC::Scalar el = prod.empty()
                                    ? HopfSC::Scalar::zero(A.cyclo_order(), A.laurent_rank())
                                    : A.counit(prod[0].first) * prod[0].second;
            if (!(el == A.counit(i) * A.counit(j))) {
                rep.counit_multiplicative = false;
                witness("eps not multiplicative at (" + std::to_string(i) + "," +
                        std::to_string(j) + ")");
                break;
            }
        }

    // m(S (x) id)Delta = u eps = m(id (x) S)Delta
    for (std::size_t i = 0; i < d; ++i) {
        std::map<std::uint32_t, HopfSC::Scalar> left, right;
        for (const auto& t : A.comult(i)) {
            const auto& s = A.pooled(t.scalar);
            auto sl = A.antipode_basis(t.left);
            if (!sl.empty()) {
                auto prod = A.mult_basis(sl[0].first, t.right);
                if (!prod.empty()) {
                    auto v = s * sl[0].second * prod[0].second;
                    auto [it, fresh] = left.emplace(prod[0].first, v);
                    if (!fresh) it->second = it->second + v;
                }
            }
            auto sr = A.antipode_basis(t.right);
            if (!sr.empty()) {
                auto prod = A.mult_basis(t.left, sr[0].first);
                if (!prod.empty()) {
                    auto v = s * sr[0].second * prod[0].second;
                    auto [it, fresh] = right.emplace(prod[0].first, v);
                    if (!fresh) it->second = it->second + v;
                }
            }
        }
        HopfSC::Element expect = element_scale(A.unit(), A.counit(i));
        auto tidy = [](std::map<std::uint32_t, HopfSC::Scalar>& m) {
            HopfSC::Element e;
            for (auto& [k, v] : m)
                if (!v.is_zero()) e.emplace_back(k, v);
            return e;
        };
        if (!element_equal(tidy(left), expect) || !element_equal(tidy(right), expect)) {
            rep.antipode = false;
            witness("antipode axiom fails at " + std::to_string(i));
            break;
        }
    }

    rep.commutative = A.is_commutative();
    rep.cocommutative = A.is_cocommutative();
    return rep;
}

// ---- Hopf algebra maps ----

MapReport verify_hopf_map(const HopfSC& A, const HopfSC& B,
                          const std::vector<HopfSC::Element>& F) {
    MapReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 8) rep.failures.push_back(s);
    };
    if (F.size() != A.dim()) {
        fail("map has wrong number of columns");
        return rep;
    }
    // all comparisons happen in the join of the two scalar rings
    unsigned long L = static_cast<unsigned long>(
        to_size(lcm(Int(A.cyclo_order()), Int(B.cyclo_order()))));
    std::size_t rank = std::max(A.laurent_rank(), B.laurent_rank());
    if (A.laurent_rank() != B.laurent_rank() && A.laurent_rank() != 0 && B.laurent_rank() != 0) {
        fail("incompatible Laurent ranks");
        return rep;
    }
    auto cst = [&](const HopfSC::Scalar& s) { return cast_scalar(s, L, rank); };
    auto cast_elem = [&](const HopfSC::Element& e) {
        HopfSC::Element r;
        for (const auto& [k, v] : e) r.emplace_back(k, cst(v));
        return r;
    };
    auto apply = [&](const HopfSC::Element& a) {
        std::map<std::uint32_t, HopfSC::Scalar> acc;
        for (const auto& [i, c] : a)
            for (const auto& [k, v] : F[i]) {
                auto w = cst(c) * cst(v);
                if (w.is_zero()) continue;
                auto [it, fresh] = acc.emplace(k, w);
                if (!fresh) {
                    it->second = it->second + w;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        HopfSC::Element r;
        for (auto& [k, v] : acc) r.emplace_back(k, v);
        return r;
    };

    if (!element_equal(apply(A.unit()), cast_elem(B.unit())))
        fail("map does not preserve the unit");

    for (std::size_t i = 0; i < A.dim() && rep.ok; ++i) {
        // counit
        HopfSC::Scalar eps = HopfSC::Scalar::zero(L, rank);
        for (const auto& [k, v] : F[i]) eps = eps + cst(B.counit(k)) * cst(v);
        if (!(eps == cst(A.counit(i))))
            fail("map does not preserve the counit at basis " + std::to_string(i));
        // comultiplicativity
        PairMap lhs;
        for (const auto& [k, v] : F[i])
            for (const auto& t : B.comult(k))
                pair_add(lhs, t.left, t.right, cst(B.pooled(t.scalar)) * cst(v));
        PairMap rhs;
        for (const auto& t : A.comult(i)) {
            const auto s = cst(A.pooled(t.scalar));
            for (const auto& [k1, v1] : F[t.left])
                for (const auto& [k2, v2] : F[t.right]) pair_add(rhs, k1, k2, s * cst(v1) * cst(v2));
        }
        if (!(lhs == rhs)) fail("map not comultiplicative at basis " + std::to_string(i));
    }

    for (std::size_t i = 0; i < A.dim() && rep.ok; ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            auto prod = A.mult_basis(i, j);
            HopfSC::Element lhs = apply(prod);
            HopfSC::Element rhs = cast_elem(B.multiply(F[i], F[j]));
            if (!element_equal(lhs, rhs)) {
                fail("map not multiplicative at (" + std::to_string(i) + "," + std::to_string(j) +
                     ")");
                break;
            }
        }
    return rep;
}

MapReport verify_section_independence(GammaContextRef ctx, const QuotientDatum& datum,
                                      const std::vector<GammaMNElement>& section_j,
                                      const std::vector<GammaMNElement>& section_i) {
    TwistedBuild Aj = build_twisted_quotient(ctx, datum, section_j);
    TwistedBuild Ai = build_twisted_quotient(ctx, datum, section_i);
    const std::size_t R = Aj.fq.table.order(), Gn = datum.G.size();
    unsigned long L = Aj.hopf.cyclo_order();

    // f(u(r)#d_h) = Phi(i(r)^{-1} j(r))(h) u(r)#d_h
    std::vector<HopfSC::Element> F(R * Gn);
    for (std::size_t r = 0; r < R; ++r) {
        GammaMNElement w = ctx->mul(ctx->inv(section_i[r]), section_j[r]);
        if (w.npart != 0) throw std::logic_error("sections disagree beyond N");
        auto vals = datum.phi_at(w.tvec);
        for (std::size_t h = 0; h < Gn; ++h)
            F[r * Gn + h] = HopfSC::Element{
                {static_cast<std::uint32_t>(r * Gn + h), embed_root(vals[h], L)}};
    }
    MapReport rep = verify_hopf_map(Aj.hopf, Ai.hopf, F);
    // diagonal with unit entries, hence bijective; record a failure if not
    for (std::size_t b = 0; b < F.size(); ++b)
        if (F[b].size() != 1 || F[b][0].second.is_zero()) {
            rep.ok = false;
            rep.failures.push_back("comparison map is not bijective");
            break;
        }
    return rep;
}

// ---- exact sequence ----

namespace {

// sparse vector over a wide index space, sorted by index
using SV64 = std::vector<std::pair<std::uint64_t, HopfSC::Scalar>>;

SV64 sv_axpy(const SV64& a, const HopfSC::Scalar& c, const SV64& b) {
    // a - c*b
    SV64 r;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            r.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            auto v = -(c * b[j].second);
            if (!v.is_zero()) r.emplace_back(b[j].first, v);
            ++j;
        } else {
            auto v = a[i].second - c * b[j].second;
            if (!v.is_zero()) r.emplace_back(a[i].first, v);
            ++i;
            ++j;
        }
    }
    return r;
}

struct Echelon64 {
    std::map<std::uint64_t, SV64> rows;

    SV64 reduce(SV64 v) const {
        while (!v.empty()) {
            auto it = rows.find(v[0].first);
            if (it == rows.end()) break;
            v = sv_axpy(v, v[0].second, it->second);
        }
        return v;
    }
    // returns false if v reduced to zero
    bool insert(SV64 v) {
        v = reduce(std::move(v));
        if (v.empty()) return false;
        HopfSC::Scalar lead = v[0].second;
        auto inv = lead.inverse();
        for (auto& [k, c] : v) c = c * inv;
        rows.emplace(v[0].first, std::move(v));
        return true;
    }
    std::size_t rank() const { return rows.size(); }
};

}  // namespace

std::string ExactSequenceReport::str() const {
    std::ostringstream os;
    os << (ok ? "exact" : "NOT exact") << ": dim A=" << dim_A << " dim k^G=" << dim_B
       << " dim k[Gamma/N]=" << dim_L << " rank p=" << rank_p << " dim ker p=" << dim_ker_p
       << " dim A i(B)+=" << dim_AiBplus << " dim i(B)+ A=" << dim_iBplusA
       << " dim A^{co p}=" << dim_right_coinvariants
       << " dim ^{co p}A=" << dim_left_coinvariants;
    for (const auto& f : failures) os << "\n  " << f;
    return os.str();
}

ExactSequenceReport verify_exact_sequence(const TwistedBuild& tb) {
    ExactSequenceReport rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 8) rep.failures.push_back(s);
    };
    const HopfSC& A = tb.hopf;
    const std::size_t R = tb.fq.table.order(), Gn = tb.datum.G.size();
    const std::size_t d = A.dim();
    rep.dim_A = d;
    rep.dim_B = Gn;
    rep.dim_L = R;
    unsigned long L = A.cyclo_order();
    std::size_t rank = A.laurent_rank();
    auto one = HopfSC::Scalar::one(L, rank);

    HopfSC B = build_function_algebra(tb.g_table);
    HopfSC Lalg = build_group_algebra(tb.fq.table);
    std::size_t e_pos = tb.datum.g_position(0);

    // i(d_h) = u(1)#d_h
    std::vector<HopfSC::Element> imap(Gn);
    for (std::size_t h = 0; h < Gn; ++h)
        imap[h] = HopfSC::Element{{static_cast<std::uint32_t>(tb.basis_index(0, h)), one}};
    auto irep = verify_hopf_map(B, A, imap);
    if (!irep.ok) fail("i is not a Hopf algebra map: " + irep.failures[0]);

    // p = id (x) eps : u(r)#d_h -> [h = 1] u(r)
    std::vector<HopfSC::Element> pmap(d);
    for (std::size_t r = 0; r < R; ++r)
        pmap[tb.basis_index(r, e_pos)] =
            HopfSC::Element{{static_cast<std::uint32_t>(r), HopfSC::Scalar::one(1, 0)}};
    {
        auto prep = verify_hopf_map(A, Lalg, pmap);
        if (!prep.ok) fail("p is not a Hopf algebra map: " + prep.failures[0]);
    }

    // rank of p and of i
    {
        std::set<std::uint32_t> im;
        for (const auto& col : pmap)
            if (!col.empty()) im.insert(col[0].first);
        rep.rank_p = im.size();
        if (rep.rank_p != R) fail("p is not surjective");
        std::set<std::uint32_t> iim;
        for (const auto& col : imap) iim.insert(col[0].first);
        if (iim.size() != Gn) fail("i is not injective");
    }

    // p i = eps 1
    for (std::size_t h = 0; h < Gn; ++h) {
        const auto& col = pmap[imap[h][0].first];
        bool want = h == e_pos;  // eps_B(d_h) = [h = 1], times 1_L = group identity
        if (want) {
            if (col.size() != 1 || col[0].first != tb.fq.table.identity() ||
                !col[0].second.is_one())
                fail("p i != eps 1 at d_h, h = identity");
        } else if (!col.empty()) {
            fail("p i != eps 1 at nontrivial d_h");
        }
    }

    rep.dim_ker_p = d - rep.rank_p;

    // spans A i(B)^+ and i(B)^+ A; i(B)^+ has basis { u(1)#d_h : h != 1 }
    Echelon64 right_span, left_span;
    rep.dim_AiBplus = 0;
    rep.dim_iBplusA = 0;
    for (std::size_t b = 0; b < d; ++b)
        for (std::size_t h = 0; h < Gn; ++h) {
            if (h == e_pos) continue;
            std::size_t ib = tb.basis_index(0, h);
            auto pr = A.mult_basis(b, ib);
            if (!pr.empty()) {
                if (!pmap[pr[0].first].empty()) fail("A i(B)+ is not inside ker p");
                if (right_span.insert(SV64{{pr[0].first, pr[0].second}})) ++rep.dim_AiBplus;
            }
            auto pl = A.mult_basis(ib, b);
            if (!pl.empty()) {
                if (!pmap[pl[0].first].empty()) fail("i(B)+ A is not inside ker p");
                if (left_span.insert(SV64{{pl[0].first, pl[0].second}})) ++rep.dim_iBplusA;
            }
        }
    if (rep.dim_AiBplus != rep.dim_ker_p) fail("ker p != A i(B)+ (dimension mismatch)");
    if (rep.dim_iBplusA != rep.dim_ker_p) fail("ker p != i(B)+ A (dimension mismatch)");

    // right coinvariants: null space of a -> (id (x) p) Delta(a) - a (x) 1
    // and left coinvariants with (p (x) id) and 1 (x) a
    auto coinvariants = [&](bool right) {
        Echelon64 ech;  // rows over the pair space, augmented with column tags
        // augmented columns: pair index * (d+1) slots; tag space starts at 2^40
        const std::uint64_t TAG = std::uint64_t(1) << 40;
        std::vector<SV64> null_vectors;
        for (std::size_t b = 0; b < d; ++b) {
            std::map<std::uint64_t, HopfSC::Scalar> w;
            auto addw = [&](std::uint64_t k, const HopfSC::Scalar& s) {
                auto [it, fresh] = w.emplace(k, s);
                if (!fresh) {
                    it->second = it->second + s;
                    if (it->second.is_zero()) w.erase(it);
                }
            };
            for (const auto& t : A.comult(b)) {
                if (right) {
                    const auto& pcol = pmap[t.right];
                    if (pcol.empty()) continue;
                    addw(std::uint64_t(t.left) * R + pcol[0].first, A.pooled(t.scalar));
                } else {
                    const auto& pcol = pmap[t.left];
                    if (pcol.empty()) continue;
                    addw(std::uint64_t(pcol[0].first) * d + t.right, A.pooled(t.scalar));
                }
            }
            if (right)
                addw(std::uint64_t(b) * R + tb.fq.table.identity(), -one);
            else
                addw(std::uint64_t(tb.fq.table.identity()) * d + b, -one);
            SV64 v;
            for (auto& [k, s] : w) v.emplace_back(k, s);
            v.emplace_back(TAG + b, one);  // remember the combination
            v = ech.reduce(std::move(v));
            bool null = true;
            for (const auto& [k, s] : v)
                if (k < TAG && !s.is_zero()) {
                    null = false;
                    break;
                }
            if (null) {
                SV64 combo;
                for (const auto& [k, s] : v)
                    if (k >= TAG) combo.emplace_back(k - TAG, s);
                null_vectors.push_back(std::move(combo));
            } else {
                HopfSC::Scalar lead = v[0].second;
                auto inv = lead.inverse();
                for (auto& [k, c] : v) c = c * inv;
                ech.rows.emplace(v[0].first, std::move(v));
            }
        }
        return null_vectors;
    };

    auto right_null = coinvariants(true);
    auto left_null = coinvariants(false);
    rep.dim_right_coinvariants = right_null.size();
    rep.dim_left_coinvariants = left_null.size();
    if (right_null.size() != Gn) fail("A^{co p} does not have dimension |G|");
    if (left_null.size() != Gn) fail("^{co p}A does not have dimension |G|");

    // i(B) is contained in the coinvariants: the null space must span the
    // i(d_h); check by reducing each i(d_h) against the null span
    for (auto* null_set : {&right_null, &left_null}) {
        Echelon64 span;
        for (const auto& v : *null_set) span.insert(v);
        for (std::size_t h = 0; h < Gn; ++h) {
            SV64 v{{imap[h][0].first, one}};
            if (!span.reduce(v).empty()) {
                fail("i(B) is not contained in a coinvariant space");
                break;
            }
        }
    }
    return rep;
}

MapReport verify_quotient_map(const TwistedBuild& tb, const SubgroupHNF& u_prime) {
    const GammaContext& ctx = *tb.ctx;
    for (const auto& col : u_prime.basis) {
        if (!tb.datum.N.contains(col))
            throw std::invalid_argument("verify_quotient_map: U' is not contained in N");
        auto vals = tb.datum.phi_at(col);
        for (const auto& v : vals)
            if (!v.is_one())
                throw std::invalid_argument("verify_quotient_map: Phi must be trivial on U'");
    }
    FiniteQuotientResult model = finite_quotient(ctx, u_prime, true);
    HopfSC source =
        build_smash_coproduct(model.table, FiniteGroupTable::cyclic(ctx.M()), model.h_action);

    unsigned long L = tb.hopf.cyclo_order();
    std::vector<HopfSC::Element> F(source.dim());
    for (std::size_t r = 0; r < model.table.order(); ++r) {
        const GammaMNElement& lift = model.section[r];
        std::size_t u_idx = tb.fq.index_of(lift);
        GammaMNElement w = ctx.mul(lift, ctx.inv(tb.section[u_idx]));
        auto vals = tb.datum.phi_at(w.tvec);
        for (std::size_t h = 0; h < ctx.M(); ++h) {
            std::size_t src = r * ctx.M() + h;
            auto pos = std::find(tb.datum.G.begin(), tb.datum.G.end(), h);
            if (pos == tb.datum.G.end()) continue;  // d_h restricts to zero
            std::size_t k = static_cast<std::size_t>(pos - tb.datum.G.begin());
            F[src] = HopfSC::Element{
                {static_cast<std::uint32_t>(tb.basis_index(u_idx, k)), embed_root(vals[k], L)}};
        }
    }
    MapReport rep = verify_hopf_map(source, tb.hopf, F);
    // surjectivity
    std::set<std::uint32_t> hit;
    for (const auto& col : F)
        if (!col.empty()) hit.insert(col[0].first);
    if (hit.size() != tb.hopf.dim()) {
        rep.ok = false;
        rep.failures.push_back("quotient map is not surjective");
    }
    return rep;
}

// ---- character group ----

namespace {

using CN = CyclotomicNumber;
using CNVec = std::vector<CN>;

CN scalar_to_cn(const HopfSC::Scalar& s, unsigned long L) {
    if (s.laurent_rank() != 0)
        throw std::invalid_argument("character group needs a field scalar ring");
    auto t = s.lift_to_order(L);
    if (t.is_zero()) return CN::zero(L);
    return t.terms().begin()->second;
}

// kernel basis of a rows x cols matrix over Q(zeta_L)
std::vector<CNVec> cn_kernel(std::vector<CNVec> a, std::size_t rows, std::size_t cols,
                             unsigned long L) {
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot(cols, false);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        CN inv = a[r][c].inverse();
        for (std::size_t j = c; j < cols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            CN f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
        }
        pivot_col_of_row.push_back(c);
        is_pivot[c] = true;
        ++r;
    }
    std::vector<CNVec> kernel;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        CNVec v(cols, CN::zero(L));
        v[c] = CN::one(L);
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            v[pivot_col_of_row[i]] = -a[i][c];
        kernel.push_back(std::move(v));
    }
    return kernel;
}

}  // namespace

FiniteGroupTable compute_character_group(const HopfSC& A, unsigned long L) {
    if (!A.is_commutative())
        throw std::invalid_argument("compute_character_group: algebra is not commutative");
    if (L % A.cyclo_order() != 0)
        throw std::invalid_argument("compute_character_group: L must extend the scalar field");
    const std::size_t d = A.dim();

    // left regular representation over Q(zeta_L)
    std::vector<std::vector<CNVec>> mats(d);
    for (std::size_t i = 0; i < d; ++i) {
        mats[i].assign(d, CNVec(d, CN::zero(L)));
        for (std::size_t j = 0; j < d; ++j) {
            auto pr = A.mult_basis(i, j);
            if (!pr.empty()) mats[i][pr[0].first][j] = scalar_to_cn(pr[0].second, L);
        }
    }

    // candidate eigenvalues: 0 and the roots of unity of Q(zeta_L)
    std::vector<CN> candidates{CN::zero(L)};
    {
        std::set<CN> seen;
        for (unsigned long k = 0; k < L; ++k)
            for (int sign = 0; sign < 2; ++sign) {
                CN z = CN::zeta_pow(L, Int(k));
                if (sign) z = -z;
                if (seen.insert(z).second) candidates.push_back(z);
            }
    }

    auto mat_apply = [&](const std::vector<CNVec>& m, const CNVec& v) {
        CNVec r(d, CN::zero(L));
        for (std::size_t row = 0; row < d; ++row)
            for (std::size_t col = 0; col < d; ++col)
                if (!m[row][col].is_zero() && !v[col].is_zero())
                    r[row] = r[row] + m[row][col] * v[col];
        return r;
    };

    std::vector<std::vector<CNVec>> subspaces{{}};
    subspaces[0].resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        subspaces[0][i] = CNVec(d, CN::zero(L));
        subspaces[0][i][i] = CN::one(L);
    }

    for (std::size_t op = 0; op < d; ++op) {
        std::vector<std::vector<CNVec>> next;
        for (auto& W : subspaces) {
            if (W.size() == 1) {
                next.push_back(std::move(W));
                continue;
            }
            std::size_t rdim = W.size();
            std::vector<CNVec> images(rdim);
            for (std::size_t j = 0; j < rdim; ++j) images[j] = mat_apply(mats[op], W[j]);
            std::size_t found = 0;
            for (const CN& lam : candidates) {
                // kernel of (M - lam) restricted to W
                std::vector<CNVec> sys(d, CNVec(rdim, CN::zero(L)));
                for (std::size_t row = 0; row < d; ++row)
                    for (std::size_t j = 0; j < rdim; ++j)
                        sys[row][j] = images[j][row] - lam * W[j][row];
                auto ker = cn_kernel(std::move(sys), d, rdim, L);
                if (ker.empty()) continue;
                std::vector<CNVec> sub;
                for (const auto& y : ker) {
                    CNVec v(d, CN::zero(L));
                    for (std::size_t j = 0; j < rdim; ++j)
                        if (!y[j].is_zero())
                            for (std::size_t row = 0; row < d; ++row)
                                v[row] = v[row] + y[j] * W[j][row];
                    sub.push_back(std::move(v));
                }
                found += sub.size();
                next.push_back(std::move(sub));
                if (found == rdim) break;
            }
            if (found != rdim)
                throw std::invalid_argument(
                    "compute_character_group: Q(zeta_" + std::to_string(L) +
                    ") does not split the algebra; increase L");
        }
        subspaces = std::move(next);
    }

    // extract character value vectors
    std::vector<CNVec> chars;
    for (const auto& W : subspaces) {
        if (W.size() != 1)
            throw std::logic_error("character split left a subspace of dimension > 1");
        const CNVec& v = W[0];
        CNVec values(d, CN::zero(L));
        for (std::size_t i = 0; i < d; ++i) {
            CNVec im = mat_apply(mats[i], v);
            std::size_t t = 0;
            while (t < d && v[t].is_zero()) ++t;
            CN lam = im[t] * v[t].inverse();
            for (std::size_t row = 0; row < d; ++row)
                if (!(im[row] == lam * v[row]))
                    throw std::logic_error("character extraction: vector is not a joint eigenvector");
            values[i] = lam;
        }
        chars.push_back(std::move(values));
    }
    std::sort(chars.begin(), chars.end());
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    if (chars.size() != d)
        throw std::invalid_argument("compute_character_group: found " +
                                    std::to_string(chars.size()) + " characters, expected " +
                                    std::to_string(d));

    // identity = counit; convolution closes on the list
    CNVec eps(d);
    for (std::size_t i = 0; i < d; ++i) eps[i] = scalar_to_cn(A.counit(i), L);
    auto find_char = [&](const CNVec& v) -> std::size_t {
        auto it = std::lower_bound(chars.begin(), chars.end(), v);
        if (it == chars.end() || !(*it == v))
            throw std::logic_error("convolution left the character set");
        return static_cast<std::size_t>(it - chars.begin());
    };
    std::size_t e_idx = find_char(eps);

    std::vector<std::uint32_t> mult(d * d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            CNVec conv(d, CN::zero(L));
            for (std::size_t i = 0; i < d; ++i)
                for (const auto& t : A.comult(i))
                    conv[i] = conv[i] + scalar_to_cn(A.pooled(t.scalar), L) * chars[a][t.left] *
                                            chars[b][t.right];
            mult[a * d + b] = static_cast<std::uint32_t>(find_char(conv));
        }
    return FiniteGroupTable(d, std::move(mult), e_idx);
}

}  // namespace smashquot
