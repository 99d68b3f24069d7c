#pragma once

#include <map>
#include <vector>

#include "smashquot/cyclotomic.hpp"
#include "smashquot/unit_group.hpp"

namespace smashquot {

// Element of Q(zeta_L)[t_1^{+-1}, ..., t_r^{+-1}]: a finite sum of Laurent
// monomials in the free directions with cyclotomic coefficients.  Zero
// coefficients are never stored, so equality is equality of term maps.
class CycloLaurentScalar {
  public:
    CycloLaurentScalar() : order_(1), rank_(0) {}
    CycloLaurentScalar(unsigned long cyclo_order, std::size_t laurent_rank);

    static CycloLaurentScalar zero(unsigned long order, std::size_t rank);
    static CycloLaurentScalar one(unsigned long order, std::size_t rank);
    static CycloLaurentScalar from_rational(unsigned long order, std::size_t rank, const Rat& v);
    static CycloLaurentScalar monomial(unsigned long order, std::vector<Int> laurent_exps,
                                       CyclotomicNumber coeff);

    unsigned long cyclo_order() const { return order_; }
    std::size_t laurent_rank() const { return rank_; }
    const std::map<std::vector<Int>, CyclotomicNumber>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1; }

    CycloLaurentScalar operator+(const CycloLaurentScalar& o) const;
    CycloLaurentScalar operator-(const CycloLaurentScalar& o) const;
    CycloLaurentScalar operator*(const CycloLaurentScalar& o) const;
    CycloLaurentScalar operator-() const;

    // Division is supported where this ring has it: any nonzero scalar with
    // laurent_rank 0 (a field element), or a single Laurent monomial.
    CycloLaurentScalar inverse() const;

    bool operator==(const CycloLaurentScalar& o) const;
    bool operator!=(const CycloLaurentScalar& o) const { return !(*this == o); }
    bool operator<(const CycloLaurentScalar& o) const;

    CycloLaurentScalar lift_to_order(unsigned long new_order) const;

    std::string str() const;

  private:
    void check_same_ring(const CycloLaurentScalar& o) const;
    void insert_term(std::vector<Int> exps, CyclotomicNumber c);

    unsigned long order_;
    std::size_t rank_;
    std::map<std::vector<Int>, CyclotomicNumber> terms_;
};

// Realize an abstract unit inside the concrete scalar ring: a finite-order-m
// generator maps to zeta_L^(L/m * e) and free generators map to Laurent
// variables.  L must be a common multiple of all finite generator orders.
CycloLaurentScalar embed(const UnitValue& a, unsigned long L);

}  // namespace smashquot
