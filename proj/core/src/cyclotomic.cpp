#include "smashquot/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>

namespace smashquot {

namespace {

// dense little-endian polynomial helpers over Int / Rat

std::vector<Int> int_poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

// exact division of integer polynomials, divisor monic
std::vector<Int> int_poly_div_exact(std::vector<Int> num, const std::vector<Int>& den) {
    std::size_t dn = num.size() - 1, dd = den.size() - 1;
    std::vector<Int> q(dn - dd + 1, Int(0));
    for (std::size_t k = dn - dd + 1; k-- > 0;) {
        Int c = num[k + dd];
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const Int& c : num)
        if (c != 0) throw std::logic_error("cyclotomic division not exact");
    return q;
}

std::vector<Rat> rat_poly_trim(std::vector<Rat> p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
    return p;
}

// remainder of p modulo the monic integer polynomial m, over Q
std::vector<Rat> rat_poly_rem(std::vector<Rat> p, const std::vector<Int>& m) {
    std::size_t dm = m.size() - 1;
    while (p.size() > dm) {
        Rat c = p.back();
        std::size_t k = p.size() - 1 - dm;
        if (c != 0)
            for (std::size_t j = 0; j <= dm; ++j) p[k + j] -= c * Rat(m[j]);
        p.pop_back();
    }
    return p;
}

// polynomial division with remainder over Q, divisor nonzero
void rat_poly_divmod(const std::vector<Rat>& a, const std::vector<Rat>& b, std::vector<Rat>& q,
                     std::vector<Rat>& r) {
    r = a;
    q.assign(a.size() > b.size() ? a.size() - b.size() + 1 : 1, Rat(0));
    while (r.size() >= b.size() && !r.empty()) {
        Rat c = r.back() / b.back();
        std::size_t k = r.size() - b.size();
        q[k] = c;
        for (std::size_t j = 0; j < b.size(); ++j) r[k + j] -= c * b[j];
        r = rat_poly_trim(std::move(r));
        if (r.size() < b.size()) break;
    }
}

std::vector<Rat> rat_poly_mul(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Rat> r(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

std::vector<Rat> rat_poly_sub(std::vector<Rat> a, const std::vector<Rat>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rat(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    return rat_poly_trim(std::move(a));
}

}  // namespace

const std::vector<Int>& cyclotomic_poly(unsigned long L) {
    static std::map<unsigned long, std::vector<Int>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    if (L == 0) throw std::invalid_argument("cyclotomic_poly: L must be >= 1");
    auto it = cache.find(L);
    if (it != cache.end()) return it->second;

    // Phi_d = (X^d - 1) / prod_{e | d, e < d} Phi_e, filled for divisors of L
    // in increasing order so every proper divisor is already cached.
    for (unsigned long d = 1; d <= L; ++d) {
        if (L % d != 0 || cache.count(d)) continue;
        std::vector<Int> num(d + 1, Int(0));
        num[0] = -1;
        num[d] = 1;
        std::vector<Int> den{Int(1)};
        for (unsigned long e = 1; e < d; ++e)
            if (d % e == 0) den = int_poly_mul(den, cache.at(e));
        cache.emplace(d, int_poly_div_exact(std::move(num), den));
    }
    return cache.at(L);
}

unsigned long cyclotomic_degree(unsigned long L) {
    return static_cast<unsigned long>(cyclotomic_poly(L).size() - 1);
}

CyclotomicNumber::CyclotomicNumber(unsigned long order)
    : order_(order), coeffs_(cyclotomic_degree(order), Rat(0)) {}

CyclotomicNumber::CyclotomicNumber(unsigned long order, std::vector<Rat> reduced)
    : order_(order), coeffs_(std::move(reduced)) {
    std::size_t deg = cyclotomic_degree(order);
    if (coeffs_.size() > deg) coeffs_ = rat_poly_rem(std::move(coeffs_), cyclotomic_poly(order));
    coeffs_.resize(deg, Rat(0));
    for (Rat& c : coeffs_) c.canonicalize();
}

CyclotomicNumber CyclotomicNumber::one(unsigned long order) {
    return rational(order, Rat(1));
}

CyclotomicNumber CyclotomicNumber::rational(unsigned long order, const Rat& value) {
    CyclotomicNumber r(order);
    r.coeffs_[0] = value;
    r.coeffs_[0].canonicalize();
    // Phi_1 = X - 1 identifies X with 1, and the constant survives unchanged
    return r;
}

CyclotomicNumber CyclotomicNumber::zeta_pow(unsigned long order, const Int& k) {
    std::size_t e = to_size(mod_floor(k, Int(static_cast<unsigned long>(order))));
    std::vector<Rat> p(e + 1, Rat(0));
    p[e] = 1;
    return CyclotomicNumber(order, std::move(p));
}

bool CyclotomicNumber::is_zero() const {
    for (const Rat& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_one() const {
    if (coeffs_[0] != 1) return false;
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

std::optional<Rat> CyclotomicNumber::rational_value() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return std::nullopt;
    return coeffs_[0];
}

void CyclotomicNumber::check_same_field(const CyclotomicNumber& o) const {
    if (order_ != o.order_)
        throw std::invalid_argument("cyclotomic numbers live in different fields");
}

CyclotomicNumber CyclotomicNumber::operator+(const CyclotomicNumber& o) const {
    check_same_field(o);
    CyclotomicNumber r(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-(const CyclotomicNumber& o) const {
    check_same_field(o);
    CyclotomicNumber r(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r(order_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = -coeffs_[i];
    return r;
}

CyclotomicNumber CyclotomicNumber::operator*(const CyclotomicNumber& o) const {
    check_same_field(o);
    if (is_zero() || o.is_zero()) return CyclotomicNumber(order_);
    auto prod = rat_poly_mul(coeffs_, o.coeffs_);
    return CyclotomicNumber(order_, std::move(prod));
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    if (is_zero()) throw std::invalid_argument("inverse of zero cyclotomic number");
    // extended Euclid over Q[X]: u*f + v*Phi = gcd = nonzero constant
    const auto& phi_int = cyclotomic_poly(order_);
    std::vector<Rat> r0(phi_int.size());
    for (std::size_t i = 0; i < phi_int.size(); ++i) r0[i] = Rat(phi_int[i]);
    std::vector<Rat> r1 = rat_poly_trim(coeffs_);
    std::vector<Rat> s0{}, s1{Rat(1)};  // coefficients of f in the Bezout identity
    while (!r1.empty() && r1.size() > 1) {
        std::vector<Rat> q, rem;
        rat_poly_divmod(r0, r1, q, rem);
        std::vector<Rat> s2 = rat_poly_sub(s0, rat_poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r1.empty()) throw std::logic_error("cyclotomic polynomial not coprime with element");
    Rat c = r1[0];
    std::vector<Rat> inv = s1;
    for (Rat& x : inv) x /= c;
    return CyclotomicNumber(order_, std::move(inv));
}

bool CyclotomicNumber::operator==(const CyclotomicNumber& o) const {
    return order_ == o.order_ && coeffs_ == o.coeffs_;
}

bool CyclotomicNumber::operator<(const CyclotomicNumber& o) const {
    if (order_ != o.order_) return order_ < o.order_;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        int c = cmp(coeffs_[i], o.coeffs_[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

CyclotomicNumber CyclotomicNumber::lift_to_order(unsigned long new_order) const {
    if (new_order == order_) return *this;
    if (new_order % order_ != 0)
        throw std::invalid_argument("lift_to_order: target order not a multiple");
    unsigned long s = new_order / order_;
    std::vector<Rat> p(coeffs_.size() * s + 1, Rat(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) p[i * s] = coeffs_[i];
    return CyclotomicNumber(new_order, std::move(p));
}

std::string CyclotomicNumber::str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ",";
        os << coeffs_[i].get_str();
    }
    os << "]@" << order_;
    return os.str();
}

}  // namespace smashquot
