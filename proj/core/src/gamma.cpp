#include "smashquot/gamma.hpp"

#include <random>
#include <sstream>

namespace smashquot {

std::string GammaMNElement::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < tvec.size(); ++i) os << (i ? "," : "") << tvec[i].get_str();
    os << ";" << npart.get_str() << ")";
    return os.str();
}

GammaContext::GammaContext(std::size_t M, std::size_t N) : M_(M), N_(N) {
    if (M < 2 || N < 2) throw std::invalid_argument("Gamma_{M,N} requires M, N >= 2");
    std::size_t n = rank();

    // t . a_{ic} = a_{i,c+1}, with a_{i,0} = prod_c a_{ic}^{-1}; per i-block
    // this is the companion matrix of 1 + X + ... + X^{N-1}
    C_ = IntMatrix(n, n);
    for (std::size_t i = 1; i < M_; ++i)
        for (std::size_t c = 1; c < N_; ++c) {
            std::size_t src = coord(i, c);
            if (c + 1 < N_) {
                C_.at(coord(i, c + 1), src) = 1;
            } else {
                for (std::size_t cc = 1; cc < N_; ++cc) C_.at(coord(i, cc), src) = -1;
            }
        }
    C_pow_.push_back(IntMatrix::identity(n));
    for (std::size_t k = 1; k < N_; ++k) C_pow_.push_back(C_ * C_pow_.back());

    // h-action on T from first principles: column (i,c) is the normal form of
    // h.a_{ic} = (h.g_0)^{c-1} (h.g_i) (h.g_0)^{-c} with h.g_i = g_{i+1}
    D_ = IntMatrix(n, n);
    GammaMNElement g1 = generator(1 % M_);
    for (std::size_t i = 1; i < M_; ++i)
        for (std::size_t c = 1; c < N_; ++c) {
            GammaMNElement img = mul(mul(pow(g1, Int(static_cast<long>(c) - 1)),
                                         generator((i + 1) % M_)),
                                     pow(g1, -Int(static_cast<unsigned long>(c))));
            if (img.npart != 0) throw std::logic_error("h-action does not preserve T");
            for (std::size_t r = 0; r < n; ++r) D_.at(r, coord(i, c)) = img.tvec[r];
        }
    D_pow_.push_back(IntMatrix::identity(n));
    for (std::size_t k = 1; k < M_; ++k) D_pow_.push_back(D_ * D_pow_.back());
}

std::size_t GammaContext::coord(std::size_t i, std::size_t c) const {
    if (i < 1 || i >= M_ || c < 1 || c >= N_)
        throw std::invalid_argument("basis index (i,c) out of range");
    return (i - 1) * (N_ - 1) + (c - 1);
}

const IntMatrix& GammaContext::h_action_power(const Int& l) const {
    return D_pow_[to_size(mod_floor(l, Int(static_cast<unsigned long>(M_))))];
}

GammaMNElement GammaContext::identity() const {
    return GammaMNElement{std::vector<Int>(rank(), Int(0)), Int(0)};
}

GammaMNElement GammaContext::generator(std::size_t i) const {
    if (i >= M_) throw std::invalid_argument("generator index out of range");
    // a_{i1} = g_i g_0^{-1}, hence g_i = tau(e_{i1}) g_0 in normal form
    GammaMNElement g = identity();
    g.npart = 1;
    if (i >= 1) g.tvec[coord(i, 1)] = 1;
    return g;
}

GammaMNElement GammaContext::basis_element(std::size_t i, std::size_t c) const {
    if (i < 1 || i >= M_ || c >= N_) throw std::invalid_argument("a_{ic} index out of range");
    GammaMNElement g = identity();
    if (c == 0) {
        for (std::size_t cc = 1; cc < N_; ++cc) g.tvec[coord(i, cc)] = -1;
    } else {
        g.tvec[coord(i, c)] = 1;
    }
    return g;
}

GammaMNElement GammaContext::from_tvec(std::vector<Int> v) const {
    if (v.size() != rank()) throw std::invalid_argument("from_tvec: wrong rank");
    return GammaMNElement{std::move(v), Int(0)};
}

std::vector<Int> GammaContext::apply_t_power(const Int& k, const std::vector<Int>& v) const {
    std::size_t kk = to_size(mod_floor(k, Int(static_cast<unsigned long>(N_))));
    return C_pow_[kk].apply(v);
}

GammaMNElement GammaContext::mul(const GammaMNElement& x, const GammaMNElement& y) const {
    if (x.tvec.size() != rank() || y.tvec.size() != rank())
        throw std::invalid_argument("gamma mul: rank mismatch");
    // tau(v) g_0^a tau(w) g_0^b = tau(v + C^a w) g_0^{a+b}
    std::vector<Int> w = apply_t_power(x.npart, y.tvec);
    for (std::size_t r = 0; r < rank(); ++r) w[r] += x.tvec[r];
    return GammaMNElement{std::move(w),
                          mod_floor(x.npart + y.npart, Int(static_cast<unsigned long>(N_)))};
}

GammaMNElement GammaContext::inv(const GammaMNElement& x) const {
    std::vector<Int> w = apply_t_power(-x.npart, x.tvec);
    for (Int& e : w) e = -e;
    return GammaMNElement{std::move(w), mod_floor(-x.npart, Int(static_cast<unsigned long>(N_)))};
}

GammaMNElement GammaContext::pow(const GammaMNElement& x, const Int& e) const {
    GammaMNElement base = e < 0 ? inv(x) : x;
    Int k = e < 0 ? Int(-e) : e;
    GammaMNElement r = identity();
    // binary powering; npart wraps mod N automatically
    GammaMNElement sq = base;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, sq);
        k >>= 1;
        if (k > 0) sq = mul(sq, sq);
    }
    return r;
}

GammaMNElement GammaContext::zm_act(const Int& l, const GammaMNElement& x) const {
    // h^l (tau(v) g_0^a) = tau(D^l v) g_l^a
    std::size_t k = to_size(mod_floor(l, Int(static_cast<unsigned long>(M_))));
    GammaMNElement r = from_tvec(D_pow_[k].apply(x.tvec));
    return mul(r, pow(generator(k), x.npart));
}

GammaAction GammaAction::canonical(const GammaContext& ctx) {
    GammaAction a;
    a.ctx = &ctx;
    for (std::size_t i = 0; i < ctx.M(); ++i) a.gen_images.push_back(ctx.generator((i + 1) % ctx.M()));
    return a;
}

IntMatrix GammaAction::t_matrix() const {
    const GammaContext& g = *ctx;
    std::size_t n = g.rank();
    IntMatrix T(n, n);
    const GammaMNElement& img0 = gen_images.at(0);
    for (std::size_t i = 1; i < g.M(); ++i)
        for (std::size_t c = 1; c < g.N(); ++c) {
            GammaMNElement img = g.mul(
                g.mul(g.pow(img0, Int(static_cast<long>(c) - 1)), gen_images.at(i)),
                g.pow(img0, -Int(static_cast<unsigned long>(c))));
            if (img.npart != 0)
                throw std::invalid_argument("generator images do not map T into T");
            for (std::size_t r = 0; r < n; ++r) T.at(r, g.coord(i, c)) = img.tvec[r];
        }
    return T;
}

const IntMatrix& GammaAction::t_matrix_cached() const {
    if (!tmat_cache_) tmat_cache_ = std::make_shared<const IntMatrix>(t_matrix());
    return *tmat_cache_;
}

GammaMNElement GammaAction::apply(const GammaMNElement& x) const {
    const GammaContext& g = *ctx;
    GammaMNElement r = g.from_tvec(t_matrix_cached().apply(x.tvec));
    return g.mul(r, g.pow(gen_images.at(0), x.npart));
}

GammaAction::Report GammaAction::verify(unsigned seed, std::size_t trials) const {
    Report rep;
    auto fail = [&](const std::string& s) {
        rep.ok = false;
        if (rep.failures.size() < 8) rep.failures.push_back(s);
    };
    const GammaContext& g = *ctx;
    try {
        (void)t_matrix();
    } catch (const std::exception& e) {
        fail(e.what());
        return rep;
    }
    std::mt19937_64 rng(seed);
    auto random_element = [&]() {
        GammaMNElement x = g.identity();
        for (Int& e : x.tvec) e = static_cast<long>(rng() % 9) - 4;
        x.npart = static_cast<long>(rng() % g.N());
        return x;
    };
    for (std::size_t t = 0; t < trials; ++t) {
        GammaMNElement x = random_element(), y = random_element();
        if (apply(g.mul(x, y)) != g.mul(apply(x), apply(y))) {
            fail("not multiplicative, witness " + x.str() + " * " + y.str());
            break;
        }
    }
    for (std::size_t t = 0; t < trials; ++t) {
        GammaMNElement x = random_element();
        GammaMNElement y = x;
        for (std::size_t i = 0; i < g.M(); ++i) y = apply(y);
        if (y != x) {
            fail("M-th power of the action is not the identity, witness " + x.str());
            break;
        }
    }
    return rep;
}

std::size_t FiniteQuotientResult::index_of(const GammaMNElement& x) const {
    std::vector<Int> r = U.reduce(x.tvec);
    std::size_t t = 0;
    for (std::size_t j = 0; j < pivots_.size(); ++j)
        t += to_size(r[pivots_[j]] * strides_[j]);
    return t * ctx_->N() + to_size(x.npart);
}

FiniteQuotientResult finite_quotient(const GammaContext& ctx, const SubgroupHNF& U,
                                     bool with_h_action) {
    std::size_t n = ctx.rank();
    if (U.ambient != n) throw std::invalid_argument("finite_quotient: U has wrong ambient rank");
    if (U.rank() != n)
        throw std::invalid_argument("finite_quotient: infinite index (U not of full rank)");
    for (std::size_t j = 0; j < n; ++j) {
        if (!U.contains(ctx.t_action().apply(U.basis[j])))
            throw std::invalid_argument(
                "finite_quotient: U not stable under the t-action at basis column " +
                std::to_string(j));
        if (with_h_action && !U.contains(ctx.h_action().apply(U.basis[j])))
            throw std::invalid_argument(
                "finite_quotient: U not stable under the h-action at basis column " +
                std::to_string(j));
    }

    FiniteQuotientResult res;
    res.ctx_ = &ctx;
    res.U = U;
    res.pivots_ = U.pivot_rows();

    Int tindex(1);
    std::vector<Int> diag;
    for (std::size_t j = 0; j < n; ++j) {
        diag.push_back(U.basis[j][res.pivots_[j]]);
        tindex *= diag.back();
    }
    // the multiplication table is quadratic in the order
    if (tindex * Int(static_cast<unsigned long>(ctx.N())) > 3000)
        throw std::overflow_error("finite_quotient: quotient too large to tabulate");
    res.t_index = to_size(tindex);
    res.strides_.assign(n, Int(1));
    for (std::size_t j = 1; j < n; ++j) res.strides_[j] = res.strides_[j - 1] * diag[j - 1];

    std::size_t order = res.t_index * ctx.N();
    // sections: decode mixed-radix residue + Z_N part
    res.section.resize(order);
    for (std::size_t e = 0; e < order; ++e) {
        std::size_t t = e / ctx.N(), np = e % ctx.N();
        GammaMNElement x = ctx.identity();
        std::size_t rem = t;
        for (std::size_t j = n; j-- > 0;) {
            std::size_t s = to_size(res.strides_[j]);
            x.tvec[res.pivots_[j]] = static_cast<unsigned long>(rem / s);
            rem %= s;
        }
        // residues are stored at pivot rows only; HNF-reduce to the canonical
        // representative (no-op: entries already canonical by construction)
        x.npart = static_cast<unsigned long>(np);
        res.section[e] = std::move(x);
    }

    std::vector<std::uint32_t> mult(order * order);
    for (std::size_t a = 0; a < order; ++a)
        for (std::size_t b = 0; b < order; ++b)
            mult[a * order + b] =
                static_cast<std::uint32_t>(res.index_of(ctx.mul(res.section[a], res.section[b])));
    res.table = FiniteGroupTable(order, std::move(mult), 0);

    if (with_h_action) {
        res.h_action.acting = FiniteGroupTable::cyclic(ctx.M());
        std::vector<std::uint32_t> step(order);
        GammaAction h = GammaAction::canonical(ctx);
        for (std::size_t e = 0; e < order; ++e)
            step[e] = static_cast<std::uint32_t>(res.index_of(h.apply(res.section[e])));
        res.h_action.perm.assign(ctx.M(), {});
        res.h_action.perm[0].resize(order);
        for (std::size_t e = 0; e < order; ++e) res.h_action.perm[0][e] = static_cast<std::uint32_t>(e);
        for (std::size_t l = 1; l < ctx.M(); ++l) {
            res.h_action.perm[l].resize(order);
            for (std::size_t e = 0; e < order; ++e)
                res.h_action.perm[l][e] = step[res.h_action.perm[l - 1][e]];
        }
    }
    return res;
}

IntMatrix companion_last_column(std::size_t p) {
    std::size_t n = p - 1;
    IntMatrix m(n, n);
    for (std::size_t c = 0; c + 1 < n; ++c) m.at(c + 1, c) = 1;
    for (std::size_t r = 0; r < n; ++r) m.at(r, n - 1) = -1;
    return m;
}

IntMatrix companion_first_row(std::size_t p) {
    std::size_t n = p - 1;
    IntMatrix m(n, n);
    for (std::size_t c = 0; c + 1 < n; ++c) m.at(c + 1, c) = 1;
    for (std::size_t c = 0; c < n; ++c) m.at(0, c) = -1;
    return m;
}

}  // namespace smashquot
