#include "smashquot/quotient_datum.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace smashquot {

bool QuotientDatum::phi_is_trivial() const {
    for (const auto& row : phi)
        for (const auto& v : row)
            if (!v.is_one()) return false;
    return true;
}

std::size_t QuotientDatum::g_position(std::size_t h_exp) const {
    auto it = std::find(G.begin(), G.end(), h_exp % M);
    if (it == G.end()) throw std::invalid_argument("h-exponent not in G");
    return static_cast<std::size_t>(it - G.begin());
}

std::vector<UnitValue> QuotientDatum::phi_at(const std::vector<Int>& w) const {
    auto coords = N.coordinates(w);
    if (!coords) throw std::invalid_argument("phi_at: element not in N");
    std::vector<UnitValue> val(G.size(), UnitValue::one(value_spec));
    for (std::size_t b = 0; b < phi.size(); ++b) {
        if ((*coords)[b] == 0) continue;
        for (std::size_t k = 0; k < G.size(); ++k)
            val[k] = val[k] * phi[b][k].pow((*coords)[b]);
    }
    return val;
}

QuotientDatum QuotientDatum::trivial(const GammaContext& ctx, UnitGroupRef spec) {
    QuotientDatum d;
    d.M = ctx.M();
    d.N_order = ctx.N();
    for (std::size_t l = 0; l < ctx.M(); ++l) d.G.push_back(l);
    d.N = SubgroupHNF::zero(ctx.rank());
    d.value_spec = std::move(spec);
    return d;
}

std::string DatumReport::str() const {
    if (ok) return "ok";
    std::ostringstream os;
    for (std::size_t i = 0; i < failures.size(); ++i) os << (i ? "; " : "") << failures[i];
    return os.str();
}

namespace {

void report_fail(DatumReport& rep, const std::string& msg) {
    rep.ok = false;
    if (rep.failures.size() < 16) rep.failures.push_back(msg);
}

}  // namespace

DatumReport validate_datum(const GammaContext& ctx, const QuotientDatum& d) {
    DatumReport rep;
    if (d.M != ctx.M() || d.N_order != ctx.N()) {
        report_fail(rep, "datum ambient (M,N) does not match the context");
        return rep;
    }
    if (d.N.ambient != ctx.rank()) {
        report_fail(rep, "N has wrong ambient rank");
        return rep;
    }
    if (d.phi.size() != d.N.rank()) {
        report_fail(rep, "Phi must assign one value row per HNF basis vector of N");
        return rep;
    }
    for (const auto& row : d.phi)
        if (row.size() != d.G.size()) {
            report_fail(rep, "Phi row does not match |G|");
            return rep;
        }

    // (a) G is a subgroup of Z_M
    std::vector<bool> in(ctx.M(), false);
    for (auto g : d.G) {
        if (g >= ctx.M()) {
            report_fail(rep, "axiom (1): G contains an exponent out of range");
            return rep;
        }
        in[g] = true;
    }
    if (!in[0]) report_fail(rep, "axiom (1): G does not contain the identity");
    for (auto a : d.G)
        for (auto b : d.G)
            if (!in[(a + b) % ctx.M()]) {
                report_fail(rep, "axiom (1): G not closed under multiplication");
                a = b = ctx.M();  // bail
            }

    // (b) N normal in Gamma: for N inside T this is stability under the
    // t-conjugation matrix
    for (std::size_t j = 0; j < d.N.rank(); ++j)
        if (!d.N.contains(ctx.t_action().apply(d.N.basis[j]))) {
            std::ostringstream os;
            os << "axiom (2): N is not normal (t-conjugate of basis vector " << j
               << " leaves N)";
            report_fail(rep, os.str());
        }

    // (c) N G-stable
    for (auto l : d.G) {
        if (l == 0) continue;
        const IntMatrix& Dl = ctx.h_action_power(Int(static_cast<unsigned long>(l)));
        for (std::size_t j = 0; j < d.N.rank(); ++j)
            if (!d.N.contains(Dl.apply(d.N.basis[j]))) {
                std::ostringstream os;
                os << "axiom (2): N is not stable under h^" << l << " at basis vector " << j;
                report_fail(rep, os.str());
            }
    }
    if (!rep.ok) return rep;

    // (d) cocycle identity Phi(r)(lh) = Phi(l^{-1}.r)(h) Phi(r)(l)
    for (std::size_t j = 0; j < d.N.rank(); ++j) {
        const auto& r = d.N.basis[j];
        for (auto l : d.G) {
            std::vector<Int> linv_r =
                ctx.h_action_power(Int(static_cast<unsigned long>((ctx.M() - l) % ctx.M())))
                    .apply(r);
            std::vector<UnitValue> phi_linv_r = d.phi_at(linv_r);
            for (auto h : d.G) {
                const UnitValue& lhs = d.phi[j][d.g_position((l + h) % ctx.M())];
                UnitValue rhs = phi_linv_r[d.g_position(h)] * d.phi[j][d.g_position(l)];
                if (lhs != rhs) {
                    std::ostringstream os;
                    os << "axiom (3): cocycle identity fails at basis vector " << j << ", (l,h)=(h^"
                       << l << ",h^" << h << "): " << lhs.str() << " != " << rhs.str();
                    report_fail(rep, os.str());
                }
            }
        }
    }

    // (e) conjugation invariance Phi(t^a . r) = Phi(r); conjugation by any
    // element of Gamma = T x| <g_0> reduces to powers of t since T is abelian
    for (std::size_t j = 0; j < d.N.rank(); ++j) {
        for (std::size_t a = 1; a < ctx.N(); ++a) {
            std::vector<Int> tr = ctx.apply_t_power(Int(static_cast<unsigned long>(a)),
                                                    d.N.basis[j]);
            std::vector<UnitValue> phi_tr = d.phi_at(tr);
            for (std::size_t k = 0; k < d.G.size(); ++k)
                if (phi_tr[k] != d.phi[j][k]) {
                    std::ostringstream os;
                    os << "axiom (3): conjugation invariance fails at basis vector " << j
                       << " under t^" << a << " at h^" << d.G[k] << ": " << phi_tr[k].str()
                       << " != " << d.phi[j][k].str();
                    report_fail(rep, os.str());
                }
        }
    }
    return rep;
}

DatumReport derived_consequences(const GammaContext& ctx, const QuotientDatum& d, unsigned seed) {
    DatumReport rep;
    std::size_t e_pos = d.g_position(0);

    // Phi(r)(1) = 1 on the whole basis
    for (std::size_t j = 0; j < d.N.rank(); ++j)
        if (!d.phi[j][e_pos].is_one())
            report_fail(rep, "consequence Phi(r)(1)=1 fails at basis vector " +
                                 std::to_string(j));

    // Phi(h.r)(h) = Phi(r^{-1})(h^{-1}) for h in G
    for (std::size_t j = 0; j < d.N.rank(); ++j) {
        const auto& r = d.N.basis[j];
        for (auto l : d.G) {
            std::vector<Int> hr = ctx.h_action_power(Int(static_cast<unsigned long>(l))).apply(r);
            std::vector<Int> rinv(r.size());
            for (std::size_t t = 0; t < r.size(); ++t) rinv[t] = -r[t];
            UnitValue lhs = d.phi_at(hr)[d.g_position(l)];
            UnitValue rhs = d.phi_at(rinv)[d.g_position((ctx.M() - l) % ctx.M())];
            if (lhs != rhs) {
                std::ostringstream os;
                os << "consequence Phi(h.r)(h)=Phi(r^-1)(h^-1) fails at basis " << j << ", h^"
                   << l;
                report_fail(rep, os.str());
            }
        }
    }

    // rs in N  =>  sr in N and Phi(rs) = Phi(sr): with r = s^{-1} n for n in N
    // this reads  s^{-1} n s in N  and  Phi(s^{-1} n s) = Phi(n)
    std::mt19937_64 rng(seed);
    for (std::size_t trial = 0; trial < 25 && !d.N.basis.empty(); ++trial) {
        GammaMNElement s = ctx.identity();
        for (Int& e : s.tvec) e = static_cast<long>(rng() % 7) - 3;
        s.npart = static_cast<long>(rng() % ctx.N());
        const auto& n = d.N.basis[rng() % d.N.rank()];
        GammaMNElement conj = ctx.mul(ctx.mul(ctx.inv(s), ctx.from_tvec(n)), s);
        if (conj.npart != 0 || !d.N.contains(conj.tvec)) {
            report_fail(rep, "consequence: conjugate of N-element left N (normality bug)");
            continue;
        }
        auto lhs = d.phi_at(n);
        auto rhs = d.phi_at(conj.tvec);
        for (std::size_t k = 0; k < d.G.size(); ++k)
            if (lhs[k] != rhs[k])
                report_fail(rep, "consequence Phi(rs)=Phi(sr) fails on sampled conjugate");
    }
    return rep;
}

bool is_char_valued(const QuotientDatum& d) {
    for (std::size_t j = 0; j < d.phi.size(); ++j)
        for (auto a : d.G)
            for (auto b : d.G) {
                const UnitValue& prod = d.phi[j][d.g_position((a + b) % d.M)];
                if (prod != d.phi[j][d.g_position(a)] * d.phi[j][d.g_position(b)]) return false;
            }
    return true;
}

}  // namespace smashquot
