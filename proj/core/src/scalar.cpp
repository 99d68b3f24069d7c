#include "smashquot/scalar.hpp"

#include <sstream>

namespace smashquot {

CycloLaurentScalar::CycloLaurentScalar(unsigned long cyclo_order, std::size_t laurent_rank)
    : order_(cyclo_order), rank_(laurent_rank) {
    if (cyclo_order == 0) throw std::invalid_argument("scalar: cyclotomic order must be >= 1");
}

CycloLaurentScalar CycloLaurentScalar::zero(unsigned long order, std::size_t rank) {
    return CycloLaurentScalar(order, rank);
}

CycloLaurentScalar CycloLaurentScalar::one(unsigned long order, std::size_t rank) {
    return from_rational(order, rank, Rat(1));
}

CycloLaurentScalar CycloLaurentScalar::from_rational(unsigned long order, std::size_t rank,
                                                     const Rat& v) {
    CycloLaurentScalar s(order, rank);
    s.insert_term(std::vector<Int>(rank, Int(0)), CyclotomicNumber::rational(order, v));
    return s;
}

CycloLaurentScalar CycloLaurentScalar::monomial(unsigned long order, std::vector<Int> laurent_exps,
                                                CyclotomicNumber coeff) {
    CycloLaurentScalar s(order, laurent_exps.size());
    if (coeff.order() != order) throw std::invalid_argument("monomial: coefficient field mismatch");
    s.insert_term(std::move(laurent_exps), std::move(coeff));
    return s;
}

void CycloLaurentScalar::insert_term(std::vector<Int> exps, CyclotomicNumber c) {
    if (exps.size() != rank_) throw std::invalid_argument("scalar term: wrong Laurent rank");
    if (c.is_zero()) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(std::move(exps), std::move(c));
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

bool CycloLaurentScalar::is_one() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    for (const Int& x : e)
        if (x != 0) return false;
    return c.is_one();
}

void CycloLaurentScalar::check_same_ring(const CycloLaurentScalar& o) const {
    if (order_ != o.order_ || rank_ != o.rank_)
        throw std::invalid_argument("scalars from different rings");
}

CycloLaurentScalar CycloLaurentScalar::operator+(const CycloLaurentScalar& o) const {
    check_same_ring(o);
    CycloLaurentScalar r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, c);
    return r;
}

CycloLaurentScalar CycloLaurentScalar::operator-(const CycloLaurentScalar& o) const {
    check_same_ring(o);
    CycloLaurentScalar r = *this;
    for (const auto& [e, c] : o.terms_) r.insert_term(e, -c);
    return r;
}

CycloLaurentScalar CycloLaurentScalar::operator-() const {
    CycloLaurentScalar r(order_, rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

CycloLaurentScalar CycloLaurentScalar::operator*(const CycloLaurentScalar& o) const {
    check_same_ring(o);
    CycloLaurentScalar r(order_, rank_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            std::vector<Int> e(rank_);
            for (std::size_t i = 0; i < rank_; ++i) e[i] = e1[i] + e2[i];
            r.insert_term(std::move(e), c1 * c2);
        }
    }
    return r;
}

CycloLaurentScalar CycloLaurentScalar::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero scalar");
    if (terms_.size() == 1) {
        const auto& [e, c] = *terms_.begin();
        std::vector<Int> ie(rank_);
        for (std::size_t i = 0; i < rank_; ++i) ie[i] = -e[i];
        return monomial(order_, std::move(ie), c.inverse());
    }
    if (rank_ == 0) return monomial(order_, {}, terms_.begin()->second.inverse());
    throw std::invalid_argument("scalar not invertible in the Laurent ring");
}

bool CycloLaurentScalar::operator==(const CycloLaurentScalar& o) const {
    return order_ == o.order_ && rank_ == o.rank_ && terms_ == o.terms_;
}

bool CycloLaurentScalar::operator<(const CycloLaurentScalar& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    if (rank_ != o.rank_) return rank_ < o.rank_;
    auto it1 = terms_.begin(), it2 = o.terms_.begin();
    for (; it1 != terms_.end() && it2 != o.terms_.end(); ++it1, ++it2) {
        if (it1->first != it2->first) return it1->first < it2->first;
        if (it1->second != it2->second) return it1->second < it2->second;
    }
    return terms_.size() < o.terms_.size();
}

CycloLaurentScalar CycloLaurentScalar::lift_to_order(unsigned long new_order) const {
    if (new_order == order_) return *this;
    CycloLaurentScalar r(new_order, rank_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c.lift_to_order(new_order));
    return r;
}

std::string CycloLaurentScalar::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) os << "*t" << i << "^" << e[i].get_str();
    }
    return os.str();
}

CycloLaurentScalar embed(const UnitValue& a, unsigned long L) {
    const auto& spec = *a.spec();
    Int zexp(0);
    std::vector<Int> laurent;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        const auto& g = spec.gen(i);
        if (g.order) {
            Int m = *g.order;
            if (Int(static_cast<unsigned long>(L)) % m != 0)
                throw std::invalid_argument("embed: L is not a multiple of the order of " +
                                            g.name);
            zexp += (Int(static_cast<unsigned long>(L)) / m) * a.exponents()[i];
        } else {
            laurent.push_back(a.exponents()[i]);
        }
    }
    return CycloLaurentScalar::monomial(L, std::move(laurent),
                                        CyclotomicNumber::zeta_pow(L, zexp));
}

}  // namespace smashquot
