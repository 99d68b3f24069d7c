#include "smashquot/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace smashquot {

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Int>>& cols) {
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw std::invalid_argument("from_columns: ragged input");
        for (std::size_t r = 0; r < rows; ++r) m.at(r, c) = cols[c][r];
    }
    return m;
}

std::vector<Int> IntMatrix::column(std::size_t c) const {
    std::vector<Int> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
    return v;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix::apply: size mismatch");
    std::vector<Int> r(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r[i] += at(i, j) * v[j];
    return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("IntMatrix: product shape mismatch");
    IntMatrix r(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& x = at(i, k);
            if (x == 0) continue;
            for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += x * o.at(k, j);
        }
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

Int IntMatrix::det() const {
    if (rows_ != cols_) throw std::invalid_argument("det: matrix not square");
    std::size_t n = rows_;
    if (n == 0) return Int(1);
    // Bareiss fraction-free elimination
    IntMatrix a = *this;
    Int prev(1), sign(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return Int(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(k, j), a.at(p, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                a.at(i, j) = t / prev;
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

std::string IntMatrix::str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
    }
    os << "]";
    return os.str();
}

SubgroupHNF SubgroupHNF::full(std::size_t ambient) {
    SubgroupHNF s{ambient, {}};
    for (std::size_t i = 0; i < ambient; ++i) {
        std::vector<Int> e(ambient, Int(0));
        e[i] = 1;
        s.basis.push_back(std::move(e));
    }
    return s;
}

IntMatrix SubgroupHNF::basis_matrix() const { return IntMatrix::from_columns(ambient, basis); }

std::vector<std::size_t> SubgroupHNF::pivot_rows() const {
    std::vector<std::size_t> p;
    for (const auto& col : basis) {
        std::size_t r = 0;
        while (r < ambient && col[r] == 0) ++r;
        p.push_back(r);
    }
    return p;
}

std::vector<Int> SubgroupHNF::reduce(std::vector<Int> v) const {
    if (v.size() != ambient) throw std::invalid_argument("SubgroupHNF::reduce: wrong dimension");
    auto pivots = pivot_rows();
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::size_t p = pivots[j];
        Int q = floordiv(v[p], basis[j][p]);
        if (q == 0) continue;
        for (std::size_t r = p; r < ambient; ++r) v[r] -= q * basis[j][r];
    }
    return v;
}

bool SubgroupHNF::contains(const std::vector<Int>& v) const {
    auto r = reduce(v);
    return std::all_of(r.begin(), r.end(), [](const Int& x) { return x == 0; });
}

std::optional<std::vector<Int>> SubgroupHNF::coordinates(const std::vector<Int>& v) const {
    if (v.size() != ambient) throw std::invalid_argument("coordinates: wrong dimension");
    auto pivots = pivot_rows();
    std::vector<Int> w = v, coords(basis.size(), Int(0));
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::size_t p = pivots[j];
        Int q = w[p] / basis[j][p];
        if (w[p] % basis[j][p] != 0) return std::nullopt;
        coords[j] = q;
        for (std::size_t r = p; r < ambient; ++r) w[r] -= q * basis[j][r];
    }
    for (const Int& x : w)
        if (x != 0) return std::nullopt;
    return coords;
}

std::string SubgroupHNF::str() const {
    std::ostringstream os;
    os << "<";
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j) os << ", ";
        os << "(";
        for (std::size_t r = 0; r < ambient; ++r) os << (r ? "," : "") << basis[j][r].get_str();
        os << ")";
    }
    os << ">";
    return os.str();
}

std::optional<Int> AbelianGroupStructure::index() const {
    if (free_rank > 0) return std::nullopt;
    Int n(1);
    for (const Int& d : invariant_factors) n *= d;
    return n;
}

std::string AbelianGroupStructure::str() const {
    std::ostringstream os;
    bool first = true;
    for (const Int& d : invariant_factors) {
        os << (first ? "" : " x ") << "Z_" << d.get_str();
        first = false;
    }
    for (std::size_t i = 0; i < free_rank; ++i) {
        os << (first ? "" : " x ") << "Z";
        first = false;
    }
    if (first) os << "1";
    return os.str();
}

namespace {

void col_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m.at(r, a), m.at(r, b));
}

void col_negate(IntMatrix& m, std::size_t c) {
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, c) = -m.at(r, c);
}

// col_a -= q * col_b
void col_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m.at(r, a) -= q * m.at(r, b);
}

}  // namespace

HermiteDecomposition hnf_with_transform(const IntMatrix& M) {
    IntMatrix H = M;
    IntMatrix V = IntMatrix::identity(M.cols());
    std::size_t n = M.rows(), m = M.cols();
    std::size_t c = 0;  // next pivot column slot
    std::vector<std::size_t> pivot_row_of;

    for (std::size_t row = 0; row < n && c < m; ++row) {
        // Euclidean elimination across columns c..m-1 at this row
        while (true) {
            std::size_t best = m;
            for (std::size_t j = c; j < m; ++j) {
                if (H.at(row, j) == 0) continue;
                if (best == m || mpz_cmpabs(H.at(row, j).get_mpz_t(), H.at(row, best).get_mpz_t()) < 0)
                    best = j;
            }
            if (best == m) break;  // row is zero on the working columns
            if (best != c) {
                col_swap(H, c, best);
                col_swap(V, c, best);
            }
            bool cleared = true;
            for (std::size_t j = c + 1; j < m; ++j) {
                if (H.at(row, j) == 0) continue;
                Int q = floordiv(H.at(row, j), H.at(row, c));
                col_axpy(H, j, c, q);
                col_axpy(V, j, c, q);
                if (H.at(row, j) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (H.at(row, c) == 0) continue;
        if (H.at(row, c) < 0) {
            col_negate(H, c);
            col_negate(V, c);
        }
        // reduce this pivot row in all earlier pivot columns into [0, pivot)
        for (std::size_t j = 0; j < c; ++j) {
            Int q = floordiv(H.at(row, j), H.at(row, c));
            col_axpy(H, j, c, q);
            col_axpy(V, j, c, q);
        }
        pivot_row_of.push_back(row);
        ++c;
    }
    return HermiteDecomposition{std::move(H), std::move(V), c};
}

SubgroupHNF hnf(const IntMatrix& M) {
    auto dec = hnf_with_transform(M);
    SubgroupHNF s{M.rows(), {}};
    for (std::size_t j = 0; j < dec.rank; ++j) s.basis.push_back(dec.H.column(j));
    return s;
}

SubgroupHNF kernel_lattice(const IntMatrix& M) {
    auto dec = hnf_with_transform(M);
    std::vector<std::vector<Int>> ker;
    for (std::size_t j = dec.rank; j < M.cols(); ++j) ker.push_back(dec.V.column(j));
    return hnf(IntMatrix::from_columns(M.cols(), ker));
}

namespace {

void row_swap(IntMatrix& m, std::size_t a, std::size_t b) {
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(a, c), m.at(b, c));
}

void row_negate(IntMatrix& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = -m.at(r, c);
}

// row_a -= q * row_b
void row_axpy(IntMatrix& m, std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(a, c) -= q * m.at(b, c);
}

}  // namespace

SmithDecomposition snf(const IntMatrix& M) {
    std::size_t n = M.rows(), m = M.cols();
    IntMatrix S = M;
    IntMatrix U = IntMatrix::identity(n);
    IntMatrix V = IntMatrix::identity(m);

    std::size_t t = 0;
    while (true) {
        // locate a nonzero entry in the trailing block
        std::size_t pi = n, pj = m;
        for (std::size_t i = t; i < n; ++i)
            for (std::size_t j = t; j < m; ++j)
                if (S.at(i, j) != 0 &&
                    (pi == n || mpz_cmpabs(S.at(i, j).get_mpz_t(), S.at(pi, pj).get_mpz_t()) < 0)) {
                    pi = i;
                    pj = j;
                }
        if (pi == n) break;
        if (pi != t) {
            row_swap(S, t, pi);
            row_swap(U, t, pi);
        }
        if (pj != t) {
            col_swap(S, t, pj);
            col_swap(V, t, pj);
        }

        bool dirty = false;
        for (std::size_t i = t + 1; i < n; ++i) {
            Int q = floordiv(S.at(i, t), S.at(t, t));
            row_axpy(S, i, t, q);
            row_axpy(U, i, t, q);
            if (S.at(i, t) != 0) dirty = true;
        }
        for (std::size_t j = t + 1; j < m; ++j) {
            Int q = floordiv(S.at(t, j), S.at(t, t));
            col_axpy(S, j, t, q);
            col_axpy(V, j, t, q);
            if (S.at(t, j) != 0) dirty = true;
        }
        if (dirty) continue;  // smaller remainders appeared, repeat

        // divisibility: pivot must divide the whole trailing block
        bool fixed = true;
        for (std::size_t i = t + 1; i < n && fixed; ++i)
            for (std::size_t j = t + 1; j < m && fixed; ++j)
                if (S.at(i, j) % S.at(t, t) != 0) {
                    row_axpy(S, t, i, Int(-1));  // row_t += row_i
                    row_axpy(U, t, i, Int(-1));
                    fixed = false;
                }
        if (!fixed) continue;

        if (S.at(t, t) < 0) {
            row_negate(S, t);
            row_negate(U, t);
        }
        ++t;
        if (t == n || t == m) break;
    }
    return SmithDecomposition{std::move(S), std::move(U), std::move(V)};
}

SubgroupHNF kernel_of_unit_map(const IntMatrix& A,
                               const std::vector<std::optional<Int>>& target_orders) {
    std::size_t n = A.rows(), g = A.cols();
    if (target_orders.size() != g)
        throw std::invalid_argument("kernel_of_unit_map: order list does not match target");
    std::size_t f = 0;
    for (const auto& o : target_orders)
        if (o) ++f;
    // relation matrix: columns are the images of e_1..e_n followed by the
    // torsion relations m_j e_j
    IntMatrix C(g, n + f);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < g; ++j) C.at(j, i) = A.at(i, j);
    std::size_t k = n;
    for (std::size_t j = 0; j < g; ++j)
        if (target_orders[j]) C.at(j, k++) = *target_orders[j];

    SubgroupHNF ker = kernel_lattice(C);
    std::vector<std::vector<Int>> proj;
    for (const auto& col : ker.basis) proj.emplace_back(col.begin(), col.begin() + n);
    return hnf(IntMatrix::from_columns(n, proj));
}

SubgroupHNF lattice_intersect(const std::vector<SubgroupHNF>& lattices) {
    if (lattices.empty()) throw std::invalid_argument("lattice_intersect: empty list");
    SubgroupHNF acc = lattices[0];
    for (std::size_t i = 1; i < lattices.size(); ++i) {
        const SubgroupHNF& other = lattices[i];
        if (other.ambient != acc.ambient)
            throw std::invalid_argument("lattice_intersect: ambient rank mismatch");
        std::size_t k1 = acc.rank(), k2 = other.rank();
        IntMatrix both(acc.ambient, k1 + k2);
        for (std::size_t j = 0; j < k1; ++j)
            for (std::size_t r = 0; r < acc.ambient; ++r) both.at(r, j) = acc.basis[j][r];
        for (std::size_t j = 0; j < k2; ++j)
            for (std::size_t r = 0; r < acc.ambient; ++r) both.at(r, k1 + j) = other.basis[j][r];
        SubgroupHNF ker = kernel_lattice(both);
        std::vector<std::vector<Int>> meet;
        IntMatrix B1 = acc.basis_matrix();
        for (const auto& col : ker.basis)
            meet.push_back(B1.apply(std::vector<Int>(col.begin(), col.begin() + k1)));
        acc = hnf(IntMatrix::from_columns(acc.ambient, meet));
    }
    return acc;
}

std::optional<std::vector<Int>> solve_columns(const IntMatrix& A, const std::vector<Int>& v) {
    if (v.size() != A.rows()) throw std::invalid_argument("solve_columns: size mismatch");
    auto dec = hnf_with_transform(A);
    std::vector<Int> w = v, y(A.cols(), Int(0));
    for (std::size_t j = 0; j < dec.rank; ++j) {
        std::size_t p = 0;
        while (p < A.rows() && dec.H.at(p, j) == 0) ++p;
        if (w[p] % dec.H.at(p, j) != 0) return std::nullopt;
        y[j] = w[p] / dec.H.at(p, j);
        for (std::size_t r = p; r < A.rows(); ++r) w[r] -= y[j] * dec.H.at(r, j);
    }
    for (const Int& x : w)
        if (x != 0) return std::nullopt;
    return dec.V.apply(y);
}

AbelianGroupStructure quotient_structure(std::size_t ambient, const SubgroupHNF& S) {
    if (S.ambient != ambient) throw std::invalid_argument("quotient_structure: ambient mismatch");
    AbelianGroupStructure q;
    if (S.rank() == 0) {
        q.free_rank = ambient;
        return q;
    }
    auto dec = snf(S.basis_matrix());
    std::size_t r = 0;
    for (std::size_t i = 0; i < std::min(dec.S.rows(), dec.S.cols()); ++i) {
        const Int& d = dec.S.at(i, i);
        if (d == 0) break;
        ++r;
        if (d >= 2) q.invariant_factors.push_back(d);
    }
    q.free_rank = ambient - r;
    return q;
}

}  // namespace smashquot
