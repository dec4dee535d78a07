#pragma once

#include <algorithm>
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genwt/budget.hpp"
#include "genwt/gf.hpp"

namespace genwt {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix over a GF instance. The field is referenced, not
/// owned; callers keep the GF alive for the matrix lifetime.
struct Mat {
    const GF* F = nullptr;
    int rows = 0;
    int cols = 0;
    std::vector<int> a;

    Mat() = default;
    Mat(const GF& field, int r, int c)
        : F(&field), rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    Mat(const GF& field, const std::vector<std::vector<int>>& rws) : F(&field) {
        rows = static_cast<int>(rws.size());
        cols = rows ? static_cast<int>(rws[0].size()) : 0;
        a.reserve(static_cast<std::size_t>(rows) * cols);
        for (const auto& r : rws) {
            if (static_cast<int>(r.size()) != cols) throw std::invalid_argument("Mat: ragged rows");
            a.insert(a.end(), r.begin(), r.end());
        }
    }

    int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    [[nodiscard]] int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }

    [[nodiscard]] std::vector<int> row(int i) const {
        return {a.begin() + static_cast<std::size_t>(i) * cols,
                a.begin() + static_cast<std::size_t>(i + 1) * cols};
    }

    bool operator==(const Mat& o) const {
        return rows == o.rows && cols == o.cols && a == o.a &&
               (F == o.F || (F && o.F && *F == *o.F));
    }
    bool operator!=(const Mat& o) const { return !(*this == o); }
    bool operator<(const Mat& o) const {
        if (rows != o.rows) return rows < o.rows;
        if (cols != o.cols) return cols < o.cols;
        return a < o.a;
    }
};

inline Mat identity_mat(const GF& F, int n) {
    Mat m(F, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

inline Mat transpose(const Mat& m) {
    Mat t(*m.F, m.cols, m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
    return t;
}

inline Mat stack_rows(const Mat& top, const Mat& bottom) {
    if (top.cols != bottom.cols) throw std::invalid_argument("stack_rows: column mismatch");
    Mat s(*top.F, top.rows + bottom.rows, top.cols);
    std::copy(top.a.begin(), top.a.end(), s.a.begin());
    std::copy(bottom.a.begin(), bottom.a.end(), s.a.begin() + top.a.size());
    return s;
}

inline Mat mat_mul(const Mat& A, const Mat& B) {
    if (A.cols != B.rows) throw std::invalid_argument("mat_mul: shape mismatch");
    const GF& F = *A.F;
    Mat C(F, A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            int v = A.at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < B.cols; ++j)
                C.at(i, j) = F.add(C.at(i, j), F.mul(v, B.at(k, j)));
        }
    return C;
}

struct RrefResult {
    Mat m;
    int rank = 0;
    std::vector<int> pivots;
};

/// Gauss–Jordan reduced row echelon form; row space preserved.
inline RrefResult rref(Mat m) {
    const GF& F = *m.F;
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pr = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
        int inv = F.inv(m.at(r, c));
        for (int j = c; j < m.cols; ++j) m.at(r, j) = F.mul(inv, m.at(r, j));
        for (int i = 0; i < m.rows; ++i) {
            if (i == r) continue;
            int f = m.at(i, c);
            if (f == 0) continue;
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), r, std::move(pivots)};
}

inline int rank_of(const Mat& m) { return rref(m).rank; }

/// Canonical subspace: basis held in RREF with no zero rows, so equality is
/// plain matrix comparison.
struct Subspace {
    Mat basis;

    [[nodiscard]] int ambient() const { return basis.cols; }
    [[nodiscard]] int dim() const { return basis.rows; }
    [[nodiscard]] const GF& field() const { return *basis.F; }

    bool operator==(const Subspace& o) const { return basis == o.basis; }
    bool operator!=(const Subspace& o) const { return !(*this == o); }
    bool operator<(const Subspace& o) const { return basis < o.basis; }
};

/// Row space of m as a canonical Subspace.
inline Subspace span(const Mat& m) {
    RrefResult r = rref(m);
    Mat b(*m.F, r.rank, m.cols);
    std::copy(r.m.a.begin(), r.m.a.begin() + static_cast<std::size_t>(r.rank) * m.cols,
              b.a.begin());
    return {std::move(b)};
}

inline Subspace zero_subspace(const GF& F, int ambient) { return {Mat(F, 0, ambient)}; }

inline Subspace full_space(const GF& F, int ambient) { return {identity_mat(F, ambient)}; }

/// Right kernel {v : M v^T = 0} as a canonical Subspace.
inline Subspace kernel(const Mat& m) {
    const GF& F = *m.F;
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : r.pivots) is_pivot[c] = true;
    Mat basis(F, m.cols - r.rank, m.cols);
    int row = 0;
    for (int c = 0; c < m.cols; ++c) {
        if (is_pivot[c]) continue;
        basis.at(row, c) = 1;
        for (int i = 0; i < r.rank; ++i)
            basis.at(row, r.pivots[i]) = F.neg(r.m.at(i, c));
        ++row;
    }
    return span(basis);
}

inline bool member(const Subspace& A, std::vector<int> v) {
    const GF& F = A.field();
    if (static_cast<int>(v.size()) != A.ambient())
        throw std::invalid_argument("member: length mismatch");
    for (int i = 0, pc = 0; i < A.dim(); ++i, ++pc) {
        while (pc < A.ambient() && A.basis.at(i, pc) == 0) ++pc;  // basis is RREF
        int c = F.neg(v[pc]);
        if (c == 0) continue;
        for (int j = pc; j < A.ambient(); ++j)
            v[j] = F.add(v[j], F.mul(c, A.basis.at(i, j)));
    }
    return std::all_of(v.begin(), v.end(), [](int x) { return x == 0; });
}

inline bool contains(const Subspace& A, const Subspace& B) {
    if (A.ambient() != B.ambient()) throw std::invalid_argument("contains: ambient mismatch");
    if (B.dim() > A.dim()) return false;
    for (int i = 0; i < B.dim(); ++i)
        if (!member(A, B.basis.row(i))) return false;
    return true;
}

inline Subspace subspace_sum(const Subspace& A, const Subspace& B) {
    if (A.ambient() != B.ambient()) throw std::invalid_argument("sum: ambient mismatch");
    return span(stack_rows(A.basis, B.basis));
}

/// dim(A ∩ B) without materializing the intersection (one rref).
inline int dim_intersection(const Subspace& A, const Subspace& B) {
    if (A.ambient() != B.ambient()) throw std::invalid_argument("dim_intersection: ambient mismatch");
    return A.dim() + B.dim() - rank_of(stack_rows(A.basis, B.basis));
}

inline Subspace intersect(const Subspace& A, const Subspace& B) {
    if (A.ambient() != B.ambient()) throw std::invalid_argument("intersect: ambient mismatch");
    Subspace dualA = kernel(A.basis), dualB = kernel(B.basis);
    Subspace result = kernel(stack_rows(dualA.basis, dualB.basis));
    assert(A.dim() + B.dim() ==
           subspace_sum(A, B).dim() + result.dim());  // modular dimension law
    return result;
}

/// Gaussian binomial coefficient: number of k-dim subspaces of GF(q)^n.
inline BigInt gaussian_binomial(int n, int k, int q) {
    if (k < 0 || k > n) throw std::invalid_argument("gaussian_binomial: need 0 <= k <= n");
    BigInt num = 1, den = 1, Q = q;
    for (int i = 0; i < k; ++i) {
        BigInt qn = 1, qi = 1;
        for (int t = 0; t < n - i; ++t) qn *= Q;
        for (int t = 0; t < i + 1; ++t) qi *= Q;
        num *= qn - 1;
        den *= qi - 1;
    }
    return num / den;
}

namespace detail {
/// Advances a sorted r-subset of {0..n-1} to its colex successor.
/// Returns false when s was the last subset ({n-r..n-1}).
inline bool next_colex_subset(std::vector<int>& s, int n) {
    const int r = static_cast<int>(s.size());
    for (int i = 0; i < r; ++i) {
        int next = i + 1 < r ? s[i + 1] : n;
        if (s[i] + 1 < next) {
            ++s[i];
            for (int j = 0; j < i; ++j) s[j] = j;
            return true;
        }
    }
    return false;
}
}  // namespace detail

/// Visits every r-dim subspace of GF(q)^ν exactly once, in lexicographic order
/// of (pivot-column set in colex order, free entries as a base-q counter).
/// Coordinate subspaces appear first in each pivot class. The visitor returns
/// false to stop early; the function returns true iff the scan completed.
/// Each visit charges one unit against the global budget.
template <typename Visitor>
bool enumerate_subspaces(int nu, int r, const GF& F, Visitor&& visit) {
    if (r < 0 || r > nu) throw std::invalid_argument("enumerate_subspaces: need 0 <= r <= nu");
    if (r == 0) {
        budget_charge();
        return visit(zero_subspace(F, nu));
    }
    const int q = F.q();
    std::vector<int> piv(r);
    for (int i = 0; i < r; ++i) piv[i] = i;
    while (true) {
        // free positions in row-major order for this pivot set
        std::vector<bool> is_pivot(nu, false);
        for (int c : piv) is_pivot[c] = true;
        std::vector<std::pair<int, int>> free_pos;
        for (int i = 0; i < r; ++i)
            for (int c = piv[i] + 1; c < nu; ++c)
                if (!is_pivot[c]) free_pos.emplace_back(i, c);

        Mat basis(F, r, nu);
        for (int i = 0; i < r; ++i) basis.at(i, piv[i]) = 1;
        std::vector<int> digits(free_pos.size(), 0);
        while (true) {
            budget_charge();
            if (!visit(Subspace{basis})) return false;
            std::size_t t = 0;
            for (; t < digits.size(); ++t) {
                int d = digits[t] + 1;
                if (d < q) {
                    digits[t] = d;
                    basis.at(free_pos[t].first, free_pos[t].second) = d;
                    break;
                }
                digits[t] = 0;
                basis.at(free_pos[t].first, free_pos[t].second) = 0;
            }
            if (t == digits.size()) break;
        }

        if (!detail::next_colex_subset(piv, nu)) break;
    }
    return true;
}

inline std::vector<Subspace> all_subspaces(int nu, int r, const GF& F) {
    std::vector<Subspace> out;
    enumerate_subspaces(nu, r, F, [&](const Subspace& S) {
        out.push_back(S);
        return true;
    });
    return out;
}

}  // namespace genwt
