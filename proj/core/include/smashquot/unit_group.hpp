#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "smashquot/integers.hpp"

namespace smashquot {

// One generator of a presented abelian group of field units.
// order == nullopt means a free (infinite-order) generator.
struct UnitGenerator {
    std::string name;
    std::optional<Int> order;
};

class UnitGroupSpec {
  public:
    explicit UnitGroupSpec(std::vector<UnitGenerator> generators);

    std::size_t size() const { return gens_.size(); }
    const UnitGenerator& gen(std::size_t i) const { return gens_.at(i); }
    const std::vector<UnitGenerator>& generators() const { return gens_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    // lcm of the finite generator orders (1 if none)
    Int torsion_lcm() const;
    std::vector<std::size_t> infinite_indices() const;

    bool operator==(const UnitGroupSpec& o) const;

  private:
    std::vector<UnitGenerator> gens_;
};

using UnitGroupRef = std::shared_ptr<const UnitGroupSpec>;

UnitGroupRef make_unit_group(std::vector<UnitGenerator> generators);

// Element of the presented group, stored as the canonical exponent vector:
// the exponent of a finite-order-m generator lies in [0, m).
class UnitValue {
  public:
    UnitValue() = default;  // detached placeholder; not usable in arithmetic
    UnitValue(UnitGroupRef spec, std::vector<Int> exponents);

    static UnitValue one(UnitGroupRef spec);
    static UnitValue generator(UnitGroupRef spec, std::size_t index, const Int& e = Int(1));

    const UnitGroupRef& spec() const { return spec_; }
    const std::vector<Int>& exponents() const { return exps_; }

    UnitValue operator*(const UnitValue& o) const;
    UnitValue inverse() const;
    UnitValue pow(const Int& e) const;
    bool is_one() const;

    // multiplicative order; nullopt means infinite
    std::optional<Int> order() const;

    bool operator==(const UnitValue& o) const;
    bool operator!=(const UnitValue& o) const { return !(*this == o); }
    bool operator<(const UnitValue& o) const;  // canonical-form key order

    std::string str() const;

  private:
    void canonicalize();
    void check_compatible(const UnitValue& o) const;

    UnitGroupRef spec_;
    std::vector<Int> exps_;
};

}  // namespace smashquot
