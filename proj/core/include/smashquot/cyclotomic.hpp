#pragma once

#include <optional>
#include <vector>

#include "smashquot/integers.hpp"

namespace smashquot {

// L-th cyclotomic polynomial, monic with integer coefficients,
// as a dense little-endian coefficient vector of degree phi(L).
const std::vector<Int>& cyclotomic_poly(unsigned long L);

unsigned long cyclotomic_degree(unsigned long L);

// Element of Q(zeta_L) = Q[X]/(Phi_L), stored as the canonical
// representative of degree < deg(Phi_L).  Equality of coefficient
// vectors is equality in the field.
class CyclotomicNumber {
  public:
    CyclotomicNumber() : order_(1), coeffs_(1, Rat(0)) {}
    explicit CyclotomicNumber(unsigned long order);  // zero
    CyclotomicNumber(unsigned long order, std::vector<Rat> reduced_coeffs);

    static CyclotomicNumber zero(unsigned long order) { return CyclotomicNumber(order); }
    static CyclotomicNumber one(unsigned long order);
    static CyclotomicNumber rational(unsigned long order, const Rat& value);
    // class of X^k, k taken modulo L
    static CyclotomicNumber zeta_pow(unsigned long order, const Int& k);

    unsigned long order() const { return order_; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    std::optional<Rat> rational_value() const;

    CyclotomicNumber operator+(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-(const CyclotomicNumber& o) const;
    CyclotomicNumber operator*(const CyclotomicNumber& o) const;
    CyclotomicNumber operator-() const;
    CyclotomicNumber inverse() const;

    bool operator==(const CyclotomicNumber& o) const;
    bool operator!=(const CyclotomicNumber& o) const { return !(*this == o); }
    // total order on canonical forms, for use as a map key
    bool operator<(const CyclotomicNumber& o) const;

    // image under Q(zeta_L) -> Q(zeta_L'), X -> X^(L'/L); requires L | L'
    CyclotomicNumber lift_to_order(unsigned long new_order) const;

    std::string str() const;

  private:
    void check_same_field(const CyclotomicNumber& o) const;

    unsigned long order_;
    std::vector<Rat> coeffs_;  // size == deg(Phi_order), canonical
};

}  // namespace smashquot
