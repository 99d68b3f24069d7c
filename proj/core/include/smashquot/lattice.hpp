#pragma once

#include <optional>
#include <vector>

#include "smashquot/integers.hpp"

namespace smashquot {

class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Int& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    std::vector<Int> column(std::size_t c) const;
    std::vector<Int> apply(const std::vector<Int>& v) const;  // matrix * column vector

    IntMatrix operator*(const IntMatrix& o) const;
    IntMatrix transpose() const;
    bool operator==(const IntMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    Int det() const;  // square matrices, expansion via fraction-free elimination

    std::string str() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Int> a_;
};

// Subgroup of Z^n in canonical column-style Hermite normal form.
// Basis columns have strictly increasing pivot rows, positive pivots, and
// every entry of a pivot row in the earlier columns reduced into [0, pivot).
// Two representations of the same subgroup have identical bases.
struct SubgroupHNF {
    std::size_t ambient = 0;
    std::vector<std::vector<Int>> basis;  // columns

    std::size_t rank() const { return basis.size(); }
    bool is_zero() const { return basis.empty(); }
    bool operator==(const SubgroupHNF& o) const { return ambient == o.ambient && basis == o.basis; }
    bool operator!=(const SubgroupHNF& o) const { return !(*this == o); }

    static SubgroupHNF zero(std::size_t ambient) { return SubgroupHNF{ambient, {}}; }
    static SubgroupHNF full(std::size_t ambient);

    IntMatrix basis_matrix() const;
    std::vector<std::size_t> pivot_rows() const;

    bool contains(const std::vector<Int>& v) const;
    // canonical coset representative: entries at pivot rows reduced into [0, pivot)
    std::vector<Int> reduce(std::vector<Int> v) const;
    // coordinates of v in the basis, if v lies in the subgroup
    std::optional<std::vector<Int>> coordinates(const std::vector<Int>& v) const;

    std::string str() const;
};

// invariant-factor decomposition of a quotient Z^n / S
struct AbelianGroupStructure {
    std::vector<Int> invariant_factors;  // each >= 2, d_i | d_{i+1}
    std::size_t free_rank = 0;

    bool is_finite() const { return free_rank == 0; }
    std::optional<Int> index() const;  // group order when finite
    bool operator==(const AbelianGroupStructure& o) const {
        return invariant_factors == o.invariant_factors && free_rank == o.free_rank;
    }
    std::string str() const;
};

struct SmithDecomposition {
    IntMatrix S;  // diagonal, d_1 | d_2 | ...
    IntMatrix U;  // unimodular, S = U * M * V
    IntMatrix V;  // unimodular
};

// canonical HNF basis of the column lattice of M
SubgroupHNF hnf(const IntMatrix& M);

// H = M * V with V unimodular and H in column echelon form (zero columns last)
struct HermiteDecomposition {
    IntMatrix H;
    IntMatrix V;
    std::size_t rank;
};
HermiteDecomposition hnf_with_transform(const IntMatrix& M);

SmithDecomposition snf(const IntMatrix& M);

// kernel lattice of x -> M x, a subgroup of Z^cols
SubgroupHNF kernel_lattice(const IntMatrix& M);

// Kernel of the homomorphism Z^n -> (unit-style target), where row i of A is
// the exponent vector of the image of the i-th basis vector and target_orders
// gives the order of each target coordinate (nullopt = free).  Torsion is
// handled by adjoining relation columns m_j * e_j and projecting.
SubgroupHNF kernel_of_unit_map(const IntMatrix& A,
                               const std::vector<std::optional<Int>>& target_orders);

SubgroupHNF lattice_intersect(const std::vector<SubgroupHNF>& lattices);

// one integer solution x of A x = v, if any
std::optional<std::vector<Int>> solve_columns(const IntMatrix& A, const std::vector<Int>& v);

AbelianGroupStructure quotient_structure(std::size_t ambient, const SubgroupHNF& S);

}  // namespace smashquot
