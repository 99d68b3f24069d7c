// Test-only oracles, independent of the library's normal-form code: rational
// row reduction for lattice membership, a plain repeated-subtraction
// canonicalizer, permutation-expansion determinants, and exhaustive quotient
// enumeration.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "smashquot/lattice.hpp"

namespace oracles {

using smashquot::Int;
using smashquot::IntMatrix;
using smashquot::Rat;
using smashquot::SubgroupHNF;

// unique rational solution of B x = v for independent columns; nullopt if
// inconsistent
inline std::optional<std::vector<Rat>> solve_rational(const std::vector<std::vector<Int>>& cols,
                                                      const std::vector<Int>& v) {
    std::size_t n = v.size(), m = cols.size();
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(m + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) a[i][j] = Rat(cols[j][i]);
        a[i][m] = Rat(v[i]);
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(m, n);
    for (std::size_t c = 0; c < m && row < n; ++c) {
        std::size_t p = row;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(a[p], a[row]);
        Rat inv = 1 / a[row][c];
        for (std::size_t j = c; j <= m; ++j) a[row][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j <= m; ++j) a[i][j] -= f * a[row][j];
        }
        pivot_of_col[c] = row;
        ++row;
    }
    for (std::size_t i = row; i < n; ++i)
        if (a[i][m] != 0) return std::nullopt;
    std::vector<Rat> x(m, Rat(0));
    for (std::size_t c = 0; c < m; ++c)
        if (pivot_of_col[c] < n) x[c] = a[pivot_of_col[c]][m];
    return x;
}

// membership in the lattice spanned by INDEPENDENT columns
inline bool member(const std::vector<std::vector<Int>>& basis, const std::vector<Int>& v) {
    if (basis.empty()) {
        for (const Int& x : v)
            if (x != 0) return false;
        return true;
    }
    auto x = solve_rational(basis, v);
    if (!x) return false;
    for (const Rat& q : *x)
        if (q.get_den() != 1) return false;
    return true;
}

inline bool member(const SubgroupHNF& s, const std::vector<Int>& v) { return member(s.basis, v); }

// brute-force canonicalization: repeated subtraction until echelon, then
// positive pivots and reduction of the pivot rows
inline std::vector<std::vector<Int>> naive_canonical_basis(const IntMatrix& M) {
    std::size_t n = M.rows();
    std::vector<std::vector<Int>> vecs;
    for (std::size_t c = 0; c < M.cols(); ++c) vecs.push_back(M.column(c));
    std::vector<std::vector<Int>> basis;
    for (std::size_t r = 0; r < n; ++r) {
        while (true) {
            std::vector<std::size_t> live;
            for (std::size_t i = 0; i < vecs.size(); ++i)
                if (vecs[i][r] != 0) live.push_back(i);
            if (live.size() <= 1) break;
            // subtract the smaller from the larger, plain Euclid
            std::size_t ia = live[0], ib = live[1];
            for (std::size_t t : live)
                if (abs(vecs[t][r]) < abs(vecs[ia][r])) ia = t;
            ib = live[0] == ia ? live[1] : live[0];
            for (std::size_t t : live)
                if (t != ia && abs(vecs[t][r]) < abs(vecs[ib][r])) ib = t;
            Int q = vecs[ib][r] / vecs[ia][r];
            if (q == 0) q = (vecs[ib][r] > 0) == (vecs[ia][r] > 0) ? 1 : -1;
            for (std::size_t i = 0; i < n; ++i) vecs[ib][i] -= q * vecs[ia][i];
        }
        std::size_t who = vecs.size();
        for (std::size_t i = 0; i < vecs.size(); ++i)
            if (vecs[i][r] != 0) who = i;
        if (who == vecs.size()) continue;
        std::vector<Int> piv = vecs[who];
        vecs.erase(vecs.begin() + who);
        if (piv[r] < 0)
            for (auto& x : piv) x = -x;
        basis.push_back(std::move(piv));
    }
    // reduce entries of each pivot row in the earlier basis vectors
    for (std::size_t j = 0; j < basis.size(); ++j) {
        std::size_t r = 0;
        while (basis[j][r] == 0) ++r;
        for (std::size_t i = 0; i < j; ++i) {
            Int q = smashquot::floordiv(basis[i][r], basis[j][r]);
            for (std::size_t t = 0; t < n; ++t) basis[i][t] -= q * basis[j][t];
        }
    }
    return basis;
}

inline Int det_by_permutations(const IntMatrix& m) {
    std::size_t n = m.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    Int det(0);
    do {
        int sign = 1;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) sign = -sign;
        Int term(sign);
        for (std::size_t i = 0; i < n; ++i) term *= m.at(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// all points of the coefficient box C*[-c,c]^cols, as ambient vectors
inline std::vector<std::vector<Int>> coefficient_box_points(const IntMatrix& M, long c) {
    std::vector<std::vector<Int>> pts;
    std::vector<long> k(M.cols(), -c);
    if (M.cols() == 0) return {std::vector<Int>(M.rows(), Int(0))};
    while (true) {
        std::vector<Int> kk(k.begin(), k.end());
        pts.push_back(M.apply(kk));
        std::size_t i = 0;
        while (i < k.size() && k[i] == c) k[i++] = -c;
        if (i == k.size()) break;
        ++k[i];
    }
    return pts;
}

// exhaustive quotient Z^n / S: coset representatives found by closing the
// unit-vector steps, membership decided by rational solves
struct EnumeratedQuotient {
    std::vector<std::vector<Int>> reps;
    // order statistics: for each k, the number of elements x with k*x = 0
    std::map<Int, std::size_t> annihilator_counts(const SubgroupHNF& S,
                                                  const std::vector<Int>& ks) const {
        std::map<Int, std::size_t> c;
        for (const Int& k : ks) {
            std::size_t cnt = 0;
            for (const auto& r : reps) {
                std::vector<Int> kr(r.size());
                for (std::size_t i = 0; i < r.size(); ++i) kr[i] = k * r[i];
                if (member(S, kr)) ++cnt;
            }
            c[k] = cnt;
        }
        return c;
    }
};

inline std::optional<EnumeratedQuotient> enumerate_quotient(std::size_t n, const SubgroupHNF& S,
                                                            std::size_t max_size) {
    EnumeratedQuotient q;
    q.reps.push_back(std::vector<Int>(n, Int(0)));
    std::size_t head = 0;
    while (head < q.reps.size()) {
        auto base = q.reps[head++];
        for (std::size_t dir = 0; dir < n; ++dir)
            for (long step : {1L, -1L}) {
                auto next = base;
                next[dir] += step;
                bool fresh = true;
                for (const auto& r : q.reps) {
                    std::vector<Int> diff(n);
                    for (std::size_t i = 0; i < n; ++i) diff[i] = next[i] - r[i];
                    if (member(S, diff)) {
                        fresh = false;
                        break;
                    }
                }
                if (fresh) {
                    q.reps.push_back(std::move(next));
                    if (q.reps.size() > max_size) return std::nullopt;  // infinite or too big
                }
            }
    }
    return q;
}

inline std::size_t rank_rational(const IntMatrix& m) {
    std::vector<std::vector<Rat>> a(m.rows(), std::vector<Rat>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = Rat(m.at(i, j));
    std::size_t rank = 0;
    for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
        std::size_t p = rank;
        while (p < m.rows() && a[p][c] == 0) ++p;
        if (p == m.rows()) continue;
        std::swap(a[p], a[rank]);
        for (std::size_t i = rank + 1; i < m.rows(); ++i) {
            if (a[i][c] == 0) continue;
            Rat f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long bound) {
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = static_cast<long>(rng() % (2 * bound + 1)) - bound;
    return m;
}

inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int ops = 12) {
    IntMatrix m = IntMatrix::identity(n);
    for (int t = 0; t < ops; ++t) {
        std::size_t a = rng() % n, b = rng() % n;
        if (a == b) continue;
        Int q = static_cast<long>(rng() % 5) - 2;
        for (std::size_t r = 0; r < n; ++r) m.at(r, a) += q * m.at(r, b);
    }
    return m;
}

}  // namespace oracles
