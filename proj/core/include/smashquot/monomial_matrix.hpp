#pragma once

#include <vector>

#include "smashquot/unit_group.hpp"

namespace smashquot {

// Invertible monomial matrix over a unit group: column c carries the single
// nonzero entry value(c) in row row_of(c).
class MonomialMatrix {
  public:
    MonomialMatrix() = default;
    MonomialMatrix(std::vector<std::size_t> row_of_col, std::vector<UnitValue> values)
        : row_(std::move(row_of_col)), val_(std::move(values)) {
        if (row_.size() != val_.size())
            throw std::invalid_argument("monomial matrix: shape mismatch");
        std::vector<bool> hit(row_.size(), false);
        for (auto r : row_) {
            if (r >= row_.size() || hit[r])
                throw std::invalid_argument("monomial matrix: not a permutation pattern");
            hit[r] = true;
        }
    }

    static MonomialMatrix identity(const UnitGroupRef& spec, std::size_t n);

    std::size_t size() const { return row_.size(); }
    std::size_t row_of(std::size_t c) const { return row_[c]; }
    const UnitValue& value(std::size_t c) const { return val_[c]; }

    MonomialMatrix operator*(const MonomialMatrix& o) const;
    MonomialMatrix inverse() const;
    MonomialMatrix pow(const Int& e) const;
    MonomialMatrix scaled(const UnitValue& s) const;

    bool is_diagonal() const;
    bool is_scalar() const;          // diagonal with all values equal
    UnitValue scalar_value() const;  // requires is_scalar()

    bool operator==(const MonomialMatrix& o) const { return row_ == o.row_ && val_ == o.val_; }
    bool operator!=(const MonomialMatrix& o) const { return !(*this == o); }

    std::string str() const;

  private:
    std::vector<std::size_t> row_;
    std::vector<UnitValue> val_;
};

}  // namespace smashquot
