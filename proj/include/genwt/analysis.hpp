#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "genwt/codes.hpp"
#include "genwt/families.hpp"
#include "genwt/linalg.hpp"

namespace genwt {

/// A binary OA split into parity-check blocks and a trailing SOA segment.
/// `perm[p]` is the original coordinate sitting at position p after the
/// permutation: first the blocks in order, then the f leftover coordinates
/// (SOA support first, then coordinates identically zero on the code).
struct BinaryOADecomposition {
    std::vector<int> perm;
    std::vector<int> block_lengths;  // each odd, >= 3
    int f = 0;                       // coordinates outside all blocks
    int soa_dim = 0;                 // dimension of the trailing support part
};

/// The standard-position product code a decomposition describes: one
/// even-weight code per block, then soa_dim unit vectors.
inline LinearCode reconstruct_binary_oa(const BinaryOADecomposition& D, const GF& F) {
    int n = 0, k = 0;
    for (int len : D.block_lengths) {
        n += len;
        k += len - 1;
    }
    n += D.f;
    k += D.soa_dim;
    Mat b(F, k, n);
    int row = 0, off = 0;
    for (int len : D.block_lengths) {
        for (int i = 0; i < len - 1; ++i, ++row) {
            b.at(row, off + i) = 1;
            b.at(row, off + len - 1) = 1;
        }
        off += len;
    }
    for (int i = 0; i < D.soa_dim; ++i, ++row) b.at(row, off + i) = 1;
    return make_code(Space::hamming(n), F, b);
}

/// Decomposes a binary Hamming OA as a product of even-weight blocks and an
/// SOA, reading the structure off the RREF generator: rows carry at most one
/// nonzero outside the pivot columns, nonzero non-pivot columns have even
/// weight, and each such column spans a block together with the pivots of its
/// rows. The round trip through reconstruct_binary_oa is verified before
/// returning.
inline BinaryOADecomposition classify_binary_oa(const LinearCode& A) {
    if (A.space.kind() != Metric::hamming)
        throw std::invalid_argument("classify_binary_oa: Hamming space required");
    if (A.field().q() != 2) throw std::invalid_argument("classify_binary_oa: binary codes only");
    if (!is_optimal_anticode(A))
        throw std::invalid_argument("classify_binary_oa: input is not an optimal anticode");

    const Mat& G = A.generator();
    const int k = A.k(), n = A.nu();
    std::vector<int> pivot(k);
    std::vector<bool> is_pivot(n, false);
    for (int i = 0, c = 0; i < k; ++i, ++c) {
        while (G.at(i, c) == 0) ++c;
        pivot[i] = c;
        is_pivot[c] = true;
    }
    std::vector<int> row_extra(k, 0);  // nonzeros outside the pivot columns
    for (int i = 0; i < k; ++i)
        for (int c = 0; c < n; ++c)
            if (!is_pivot[c] && G.at(i, c) != 0) ++row_extra[i];

    BinaryOADecomposition D;
    std::vector<bool> placed(n, false);
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<int> rows;
        for (int i = 0; i < k; ++i)
            if (G.at(i, c) != 0) rows.push_back(i);
        if (rows.empty()) continue;
        if (rows.size() % 2 != 0)
            throw std::logic_error("classify_binary_oa: odd column weight in an OA");
        for (int i : rows) {
            if (row_extra[i] != 1)
                throw std::logic_error("classify_binary_oa: row meets two blocks in an OA");
            D.perm.push_back(pivot[i]);
            placed[pivot[i]] = true;
        }
        D.perm.push_back(c);
        placed[c] = true;
        D.block_lengths.push_back(static_cast<int>(rows.size()) + 1);
    }
    for (int i = 0; i < k; ++i)
        if (row_extra[i] == 0) {
            D.perm.push_back(pivot[i]);
            placed[pivot[i]] = true;
            ++D.soa_dim;
        }
    for (int c = 0; c < n; ++c)
        if (!placed[c]) D.perm.push_back(c);  // identically-zero coordinates
    D.f = n;
    for (int len : D.block_lengths) D.f -= len;

    LinearCode permuted = project(A, D.perm, Space::hamming(n));
    if (permuted.sub != reconstruct_binary_oa(D, A.field()).sub)
        throw std::logic_error("classify_binary_oa: decomposition failed the round trip");
    return D;
}

/// Outcome of the MDS chain search. On failure `stuck_dim` is the chain
/// dimension that could not be realized by any MDS code compatible with the
/// links already fixed.
struct MdsChainSearchResult {
    std::optional<CodeChain> chain;
    int stuck_dim = -1;
    std::string note;

    [[nodiscard]] bool found() const { return chain.has_value(); }
};

namespace detail {

/// Depth-first search for a full flag of MDS codes below `top`, descending
/// one dimension at a time through the deterministic subcode stream. Dead
/// subspaces are memoized. Fills `links` from dimension top..0 downward,
/// tracks the lowest dimension any partial chain reached.
inline bool mds_descend(const LinearCode& top, std::vector<Subspace>& links,
                        std::set<Subspace>& dead, int& lowest) {
    lowest = std::min(lowest, top.k());
    links.push_back(top.sub);
    if (top.k() == 0) return true;
    bool done = false;
    subcodes(top, top.k() - 1, [&](const LinearCode& D) {
        if (dead.count(D.sub)) return true;
        if ((D.k() > 0 && !is_mds(D)) || !mds_descend(D, links, dead, lowest)) {
            dead.insert(D.sub);
            return true;
        }
        done = true;
        return false;
    });
    if (!done) links.pop_back();
    return done;
}

}  // namespace detail

/// Searches for a chain 0 = M_0 < M_1 < ... < M_n = V of MDS codes with M at
/// position k: the lower half by descending from M, the upper half by
/// descending from the dual and dualizing the result.
inline MdsChainSearchResult mds_chain_search(const LinearCode& M) {
    if (M.space.kind() != Metric::hamming)
        throw std::invalid_argument("mds_chain_search: Hamming space required");
    if (!is_mds(M)) throw std::invalid_argument("mds_chain_search: input is not MDS");
    const int n = M.nu(), k = M.k();
    MdsChainSearchResult res;

    std::vector<Subspace> down;
    std::set<Subspace> dead;
    int lowest = k;
    if (!detail::mds_descend(M, down, dead, lowest)) {
        res.stuck_dim = lowest - 1;
        res.note = "no MDS chain below the code: every descent stalls at dimension " +
                   std::to_string(lowest);
        return res;
    }

    LinearCode Md = dual(M);
    std::vector<Subspace> up;
    dead.clear();
    lowest = n - k;
    if (!detail::mds_descend(Md, up, dead, lowest)) {
        res.stuck_dim = n - lowest + 1;
        res.note = "no MDS chain above the code: every descent from the dual stalls at "
                   "dual dimension " +
                   std::to_string(lowest);
        return res;
    }

    std::vector<Subspace> links(down.rbegin(), down.rend());  // dims 0..k
    for (int j = k + 1; j <= n; ++j)
        links.push_back(dual_space_of(up[j - k], M.space));  // dual of the dim n-j link
    res.chain = make_chain(std::move(links));
    return res;
}

/// Punctured-ball count Σ_{i=1..r} C(n,i)(q-1)^i: nonzero vectors of Hamming
/// weight at most r in GF(q)^n.
inline BigInt hamming_ball_size(int n, int r, int q) {
    if (n < 0 || r < 0 || r > n || q < 2) throw std::invalid_argument("hamming_ball_size");
    BigInt total = 0, binom = 1;
    for (int i = 1; i <= r; ++i) {
        binom = binom * (n - i + 1) / i;
        BigInt pw = 1;
        for (int j = 0; j < i; ++j) pw *= q - 1;
        total += binom * pw;
    }
    return total;
}

struct QThresholdRow {
    int q = 0;
    BigInt ball;  // |B*_{d-1}|
    BigInt lhs;   // |B*_{d-1}| * (q^(n-d+1) - q^k)
    BigInt rhs;   // (q-1) * (q^n - q^k)
    bool holds = false;
};

struct QThresholdReport {
    int n = 0, k = 0, d = 0;
    std::vector<QThresholdRow> rows;
    int minimal_q = 0;
};

namespace detail {

inline bool is_prime_power(int q) {
    if (q < 2) return false;
    for (int p = 2; p * p <= q; ++p) {
        if (q % p != 0) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;  // q itself is prime
}

}  // namespace detail

/// Evaluates, over ascending prime powers q, the exact counting condition
/// |B*_{d-1}| * (q^(n-d+1) - q^k) < (q-1) * (q^n - q^k), which guarantees an
/// MDS code of dimension n-d+1 through every k-dimensional code. Returns one
/// row per q up to and including the first q where it holds.
inline QThresholdReport q_threshold_report(int n, int k, int d) {
    if (k < 1 || d < 1 || k >= n - d + 1 || n < 1)
        throw std::invalid_argument("q_threshold_report: need 1 <= k < n-d+1 <= n");
    QThresholdReport rep;
    rep.n = n;
    rep.k = k;
    rep.d = d;
    for (int q = 2; q <= (1 << 20); ++q) {
        if (!detail::is_prime_power(q)) continue;
        QThresholdRow row;
        row.q = q;
        row.ball = hamming_ball_size(n, d - 1, q);
        BigInt qn = 1, qk = 1, qcod = 1;
        for (int i = 0; i < n; ++i) qn *= q;
        for (int i = 0; i < k; ++i) qk *= q;
        for (int i = 0; i < n - d + 1; ++i) qcod *= q;
        row.lhs = row.ball * (qcod - qk);
        row.rhs = BigInt(q - 1) * (qn - qk);
        row.holds = row.lhs < row.rhs;
        rep.rows.push_back(row);
        if (row.holds) {
            rep.minimal_q = q;
            return rep;
        }
    }
    throw std::runtime_error("q_threshold_report: no prime power below 2^20 satisfies the bound");
}

}  // namespace genwt
