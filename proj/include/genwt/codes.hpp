#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "genwt/budget.hpp"
#include "genwt/gf.hpp"
#include "genwt/linalg.hpp"
#include "genwt/spaces.hpp"

namespace genwt {

/// Linear code = canonical subspace plus its ambient metric space. The field
/// is reachable through the basis matrix and must outlive the code.
struct LinearCode {
    Space space;
    Subspace sub;

    [[nodiscard]] const GF& field() const { return sub.field(); }
    [[nodiscard]] int k() const { return sub.dim(); }
    [[nodiscard]] int nu() const { return space.nu(); }
    [[nodiscard]] const Mat& generator() const { return sub.basis; }

    bool operator==(const LinearCode& o) const { return space == o.space && sub == o.sub; }
    bool operator!=(const LinearCode& o) const { return !(*this == o); }
    bool operator<(const LinearCode& o) const { return sub < o.sub; }
};

inline LinearCode make_code(const Space& space, const GF& F, const Mat& generators) {
    if (generators.cols != space.nu())
        throw std::invalid_argument("make_code: generator length != nu");
    if (generators.F == nullptr || *generators.F != F)
        throw std::invalid_argument("make_code: field mismatch");
    return {space, span(generators)};
}

inline LinearCode make_code(const Space& space, const Subspace& sub) {
    if (sub.ambient() != space.nu()) throw std::invalid_argument("make_code: ambient != nu");
    return {space, sub};
}

inline LinearCode dual(const LinearCode& C) {
    return {C.space, dual_space_of(C.sub, C.space)};
}

/// Visits one representative per projective codeword class (first nonzero
/// message coordinate normalized to 1), (q^k-1)/(q-1) words in all. Visitor
/// returns false to stop; function returns true iff the scan completed.
template <typename Visitor>
bool for_each_projective_codeword(const LinearCode& C, Visitor&& visit) {
    const GF& F = C.field();
    const int k = C.k(), nu = C.nu(), q = F.q();
    const Mat& G = C.generator();
    std::vector<int> word(nu), u(k);
    for (int lead = k - 1; lead >= 0; --lead) {
        std::fill(u.begin(), u.end(), 0);
        u[lead] = 1;
        while (true) {
            budget_charge();
            for (int j = 0; j < nu; ++j) {
                int s = 0;
                for (int i = lead; i < k; ++i)
                    if (u[i] != 0) s = F.add(s, F.mul(u[i], G.at(i, j)));
                word[j] = s;
            }
            if (!visit(word)) return false;
            int t = lead + 1;
            for (; t < k; ++t) {
                if (u[t] + 1 < q) { ++u[t]; break; }
                u[t] = 0;
            }
            if (t == k) break;
        }
    }
    return true;
}

inline int min_distance(const LinearCode& C) {
    if (C.k() == 0) throw std::invalid_argument("min_distance: zero code");
    int best = C.nu() + 1;
    for_each_projective_codeword(C, [&](const std::vector<int>& w) {
        best = std::min(best, weight(C.space, C.field(), w));
        return best > 1;
    });
    return best;
}

inline int max_weight(const LinearCode& C) {
    if (C.k() == 0) throw std::invalid_argument("max_weight: zero code");
    int best = 0;
    for_each_projective_codeword(C, [&](const std::vector<int>& w) {
        best = std::max(best, weight(C.space, C.field(), w));
        return true;
    });
    return best;
}

inline int max_weighted_rank(const LinearCode& C) {
    if (C.k() == 0) throw std::invalid_argument("max_weighted_rank: zero code");
    int best = 0;
    for_each_projective_codeword(C, [&](const std::vector<int>& w) {
        best = std::max(best, weighted_rank_sum(C.space, C.field(), w));
        return true;
    });
    return best;
}

/// Singleton-bound equality. Early exit: MDS iff no nonzero word has Hamming
/// weight below n+1-k.
inline bool is_mds(const LinearCode& C) {
    if (C.space.kind() != Metric::hamming) throw std::invalid_argument("is_mds: Hamming only");
    if (C.k() == 0) return true;
    const int floor = C.nu() + 1 - C.k();
    bool ok = true;
    for_each_projective_codeword(C, [&](const std::vector<int>& w) {
        if (weight(C.space, C.field(), w) < floor) { ok = false; return false; }
        return true;
    });
    return ok;
}

/// Rank Singleton equality k = m(n-d+1); requires m | k, then MRD iff no
/// nonzero word has rank below n+1-k/m.
inline bool is_mrd(const LinearCode& C) {
    if (C.space.kind() != Metric::rank) throw std::invalid_argument("is_mrd: rank only");
    if (C.k() == 0) return true;
    const int m = C.space.m();
    if (C.k() % m != 0) return false;
    const int floor = C.space.n() + 1 - C.k() / m;
    bool ok = true;
    for_each_projective_codeword(C, [&](const std::vector<int>& w) {
        if (weight(C.space, C.field(), w) < floor) { ok = false; return false; }
        return true;
    });
    return ok;
}

/// Anticode-bound equality: k = max_weight (Hamming), m·max_weight (rank),
/// max_weighted_rank (sum-rank).
inline bool is_optimal_anticode(const LinearCode& C) {
    if (C.k() == 0) return true;
    switch (C.space.kind()) {
        case Metric::hamming: return C.k() == max_weight(C);
        case Metric::rank: return C.k() == C.space.m() * max_weight(C);
        case Metric::sumrank: return C.k() == max_weighted_rank(C);
    }
    return false;
}

inline std::set<int> hamming_support(const LinearCode& C) {
    if (C.space.kind() != Metric::hamming)
        throw std::invalid_argument("hamming_support: Hamming only");
    std::set<int> supp;
    for (int i = 0; i < C.k(); ++i)
        for (int j = 0; j < C.nu(); ++j)
            if (C.generator().at(i, j) != 0) supp.insert(j);
    return supp;
}

/// Projection onto a coordinate subset, reinterpreted in the given space.
inline LinearCode project(const LinearCode& C, const std::vector<int>& coords,
                          const Space& target) {
    if (static_cast<int>(coords.size()) != target.nu())
        throw std::invalid_argument("project: coordinate count != target nu");
    Mat P(C.field(), C.k(), target.nu());
    for (int i = 0; i < C.k(); ++i)
        for (std::size_t j = 0; j < coords.size(); ++j)
            P.at(i, static_cast<int>(j)) = C.generator().at(i, coords[j]);
    return make_code(target, C.field(), P);
}

namespace detail {
inline std::vector<int> block_coords(const Space& S, int bi) {
    auto [n, m] = S.matrix_blocks()[bi];
    std::vector<int> c(n * m);
    int off = S.block_offset(bi);
    for (int j = 0; j < n * m; ++j) c[j] = off + j;
    return c;
}

inline std::vector<int> tail_coords(const Space& S) {
    std::vector<int> c(S.tail());
    for (int j = 0; j < S.tail(); ++j) c[j] = S.tail_offset() + j;
    return c;
}
}  // namespace detail

/// Standard-position SOA test. Hamming: dim equals support size. Rank: same
/// as the anticode bound (every rank OA is an SOA). Sum-rank: the code must
/// equal the product of its block projections (dimension count), each matrix
/// block projection must be a rank OA, and the tail projection a Hamming SOA.
inline bool is_soa(const LinearCode& C) {
    switch (C.space.kind()) {
        case Metric::hamming:
            return C.k() == static_cast<int>(hamming_support(C).size());
        case Metric::rank:
            return is_optimal_anticode(C);
        case Metric::sumrank: {
            int dim_sum = 0;
            for (std::size_t bi = 0; bi < C.space.matrix_blocks().size(); ++bi) {
                auto [n, m] = C.space.matrix_blocks()[bi];
                LinearCode proj = project(C, detail::block_coords(C.space, static_cast<int>(bi)),
                                          Space::rank(n, m));
                if (!is_optimal_anticode(proj)) return false;
                dim_sum += proj.k();
            }
            if (C.space.tail() > 0) {
                LinearCode proj =
                    project(C, detail::tail_coords(C.space), Space::hamming(C.space.tail()));
                if (proj.k() != static_cast<int>(hamming_support(proj).size())) return false;
                dim_sum += proj.k();
            }
            return dim_sum == C.k();
        }
    }
    return false;
}

/// Max over cosets of the minimum coset weight, via one pass over all q^n
/// vectors bucketed by syndrome (memory: q^(n-k) bytes). Charges q^n visits
/// against the global budget up front.
inline int covering_radius(const LinearCode& C) {
    if (C.space.kind() != Metric::hamming)
        throw std::invalid_argument("covering_radius: Hamming only");
    const GF& F = C.field();
    const int n = C.nu(), k = C.k(), q = F.q();
    if (k == n) return 0;

    std::uint64_t total = 1, buckets = 1;
    for (int i = 0; i < n; ++i) total *= q;
    for (int i = 0; i < n - k; ++i) buckets *= q;
    budget_charge(total);

    const Mat H = dual(C).generator();  // (n-k) x n parity check
    const int s = n - k;
    std::vector<std::uint8_t> minw(buckets, 0xff);
    std::vector<std::uint64_t> qpow(s);
    for (int t = 0, p = 1; t < s; ++t, p *= q) qpow[t] = static_cast<std::uint64_t>(p);

    std::vector<int> digit(n, 0), sigma(s, 0);
    std::uint64_t idx = 0;
    int w = 0;
    minw[0] = 0;
    // Each odometer digit change (increment or q-1 -> 0 wrap) adds column j of
    // H to the syndrome, since -(q-1) = 1 in GF(q).
    auto apply_column = [&](int j) {
        for (int t = 0; t < s; ++t) {
            int old = sigma[t];
            sigma[t] = F.add(old, H.at(t, j));
            idx += (static_cast<std::uint64_t>(sigma[t]) - old) * qpow[t];
        }
    };
    for (std::uint64_t step = 1; step < total; ++step) {
        int j = 0;
        while (digit[j] == q - 1) {
            digit[j] = 0;
            --w;
            apply_column(j);
            ++j;
        }
        if (digit[j] == 0) ++w;
        ++digit[j];
        apply_column(j);
        if (w < minw[idx]) minw[idx] = static_cast<std::uint8_t>(w);
    }
    int radius = 0;
    for (std::uint64_t b = 0; b < buckets; ++b) radius = std::max(radius, static_cast<int>(minw[b]));
    return radius;
}

/// Streams all r-dim subcodes as canonical codes, in the enumeration order of
/// the message-space subspaces mapped through the generator.
template <typename Visitor>
bool subcodes(const LinearCode& C, int r, Visitor&& visit) {
    if (r < 0 || r > C.k()) throw std::invalid_argument("subcodes: need 0 <= r <= k");
    return enumerate_subspaces(C.k(), r, C.field(), [&](const Subspace& U) {
        return visit(make_code(C.space, span(mat_mul(U.basis, C.generator()))));
    });
}

inline std::vector<LinearCode> all_subcodes(const LinearCode& C, int r) {
    std::vector<LinearCode> out;
    subcodes(C, r, [&](const LinearCode& D) {
        out.push_back(D);
        return true;
    });
    return out;
}

/// Streams all j-dim supercodes of C exactly once. Every supercode splits
/// uniquely as C ⊕ W with W supported on the non-pivot coordinates of C's
/// RREF basis, so the stream maps enumerate_subspaces(ν-k, j-k) through that
/// embedding.
template <typename Visitor>
bool supercodes(const LinearCode& C, int j, Visitor&& visit) {
    const int k = C.k(), nu = C.nu();
    if (j < k || j > nu) throw std::invalid_argument("supercodes: need k <= j <= nu");
    const GF& F = C.field();
    std::vector<bool> is_pivot(nu, false);
    for (int i = 0, pc = 0; i < k; ++i, ++pc) {
        while (C.generator().at(i, pc) == 0) ++pc;
        is_pivot[pc] = true;
    }
    std::vector<int> free_cols;
    for (int c = 0; c < nu; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    return enumerate_subspaces(nu - k, j - k, F, [&](const Subspace& U) {
        Mat stacked(F, j, nu);
        std::copy(C.generator().a.begin(), C.generator().a.end(), stacked.a.begin());
        for (int i = 0; i < U.dim(); ++i)
            for (int c = 0; c < nu - k; ++c)
                stacked.at(k + i, free_cols[c]) = U.basis.at(i, c);
        return visit(make_code(C.space, span(stacked)));
    });
}

}  // namespace genwt
