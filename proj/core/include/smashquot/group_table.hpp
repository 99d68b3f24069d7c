#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "smashquot/integers.hpp"

namespace smashquot {

// Finite group given by its multiplication table.
class FiniteGroupTable {
  public:
    FiniteGroupTable() = default;
    FiniteGroupTable(std::size_t order, std::vector<std::uint32_t> mult, std::size_t identity);

    static FiniteGroupTable trivial();
    static FiniteGroupTable cyclic(std::size_t n);
    static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

    std::size_t order() const { return order_; }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a * order_ + b]; }
    std::size_t inv(std::size_t a) const { return inv_[a]; }
    std::size_t power(std::size_t a, const Int& e) const;

    struct ValidationReport {
        bool ok = true;
        std::vector<std::string> failures;
    };
    ValidationReport validate() const;  // associativity, identity, inverses

    bool is_abelian() const;
    Int element_order(std::size_t a) const;
    Int exponent() const;
    // multiset of element orders, sorted
    std::vector<Int> order_profile() const;

    // exhaustive generator-image search; intended for small orders
    bool isomorphic_to(const FiniteGroupTable& o) const;

    bool operator==(const FiniteGroupTable& o) const {
        return order_ == o.order_ && mult_ == o.mult_ && identity_ == o.identity_;
    }

  private:
    std::size_t order_ = 0;
    std::vector<std::uint32_t> mult_;
    std::size_t identity_ = 0;
    std::vector<std::uint32_t> inv_;
};

// Action of a finite group on a finite group, one permutation per acting
// element: perm[a][x] is the image of x under a.
struct GroupActionTable {
    FiniteGroupTable acting;
    std::vector<std::vector<std::uint32_t>> perm;

    struct Report {
        bool ok = true;
        std::vector<std::string> failures;
    };
    // automorphism property of every permutation, compatibility with the
    // acting group law, identity acts trivially; exhaustive
    Report verify(const FiniteGroupTable& target) const;

    static GroupActionTable trivial(const FiniteGroupTable& acting, const FiniteGroupTable& target);
};

}  // namespace smashquot
