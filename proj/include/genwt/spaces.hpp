#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "genwt/gf.hpp"
#include "genwt/linalg.hpp"

namespace genwt {

enum class Metric { hamming, rank, sumrank };

/// Ambient metric space. Vectors are flattened length-ν coordinate arrays:
/// row-major within each matrix block, blocks in order, 1x1 tail last. With
/// this convention the Gram matrix of the trace form is the identity for all
/// three kinds, so duals are plain kernels.
class Space {
  public:
    static Space hamming(int n) {
        if (n < 1) throw std::invalid_argument("Space: n must be >= 1");
        Space s;
        s.kind_ = Metric::hamming;
        s.tail_ = n;
        s.nu_ = n;
        return s;
    }

    static Space rank(int n, int m) {
        if (n < 1 || m < 1) throw std::invalid_argument("Space: n, m must be >= 1");
        if (n > m) throw std::invalid_argument("Space: rank metric requires n <= m");
        Space s;
        s.kind_ = Metric::rank;
        s.blocks_ = {{n, m}};
        s.nu_ = n * m;
        return s;
    }

    /// blocks = matrix blocks (n_i, m_i); tail = count of 1x1 blocks.
    /// Blocks with m_i = 1 are folded into the tail; the rest are sorted into
    /// normal form (m_i weakly decreasing, then n_i decreasing).
    static Space sumrank(std::vector<std::pair<int, int>> blocks, int tail) {
        if (tail < 0) throw std::invalid_argument("Space: tail must be >= 0");
        Space s;
        s.kind_ = Metric::sumrank;
        for (auto [n, m] : blocks) {
            if (n < 1 || m < 1) throw std::invalid_argument("Space: block dims must be >= 1");
            if (n > m) throw std::invalid_argument("Space: block requires n_i <= m_i");
            if (m == 1)
                ++tail;
            else
                s.blocks_.push_back({n, m});
        }
        std::stable_sort(s.blocks_.begin(), s.blocks_.end(), [](auto a, auto b) {
            return a.second != b.second ? a.second > b.second : a.first > b.first;
        });
        s.tail_ = tail;
        s.nu_ = tail;
        for (auto [n, m] : s.blocks_) s.nu_ += n * m;
        if (s.nu_ < 1) throw std::invalid_argument("Space: empty sum-rank space");
        return s;
    }

    [[nodiscard]] Metric kind() const { return kind_; }
    [[nodiscard]] int nu() const { return nu_; }
    [[nodiscard]] const std::vector<std::pair<int, int>>& matrix_blocks() const { return blocks_; }
    [[nodiscard]] int tail() const { return tail_; }

    /// Total block count, 1x1 tail blocks included.
    [[nodiscard]] int t() const { return static_cast<int>(blocks_.size()) + tail_; }
    /// Count of blocks with m_i > 1.
    [[nodiscard]] int u() const {
        int c = 0;
        for (auto [n, m] : blocks_)
            if (m > 1) ++c;
        return c;
    }

    [[nodiscard]] int n() const {
        switch (kind_) {
            case Metric::hamming: return tail_;
            case Metric::rank: return blocks_[0].first;
            case Metric::sumrank: break;
        }
        throw std::logic_error("Space::n: sum-rank has per-block n_i");
    }

    [[nodiscard]] int m() const {
        if (kind_ != Metric::rank) throw std::logic_error("Space::m: rank spaces only");
        return blocks_[0].second;
    }

    /// Flattened start offset of matrix block i.
    [[nodiscard]] int block_offset(int i) const {
        int off = 0;
        for (int j = 0; j < i; ++j) off += blocks_[j].first * blocks_[j].second;
        return off;
    }

    [[nodiscard]] int tail_offset() const { return nu_ - tail_; }

    [[nodiscard]] std::string to_string() const {
        switch (kind_) {
            case Metric::hamming: return "hamming:" + std::to_string(tail_);
            case Metric::rank:
                return "rank:" + std::to_string(blocks_[0].first) + "x" +
                       std::to_string(blocks_[0].second);
            case Metric::sumrank: {
                std::string s = "srk:";
                for (std::size_t i = 0; i < blocks_.size(); ++i) {
                    if (i) s += ",";
                    s += std::to_string(blocks_[i].first) + "x" + std::to_string(blocks_[i].second);
                }
                if (tail_ > 0) {
                    if (!blocks_.empty()) s += "+";
                    s += std::to_string(tail_);
                }
                return s;
            }
        }
        return {};
    }

    bool operator==(const Space& o) const {
        return kind_ == o.kind_ && blocks_ == o.blocks_ && tail_ == o.tail_;
    }
    bool operator!=(const Space& o) const { return !(*this == o); }

  private:
    Space() = default;
    Metric kind_ = Metric::hamming;
    std::vector<std::pair<int, int>> blocks_;
    int tail_ = 0;
    int nu_ = 0;
};

namespace detail {
inline Mat block_as_matrix(const Space& S, const GF& F, const std::vector<int>& v, int bi) {
    auto [n, m] = S.matrix_blocks()[bi];
    Mat X(F, n, m);
    int off = S.block_offset(bi);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) X.at(i, j) = v[off + i * m + j];
    return X;
}
}  // namespace detail

/// Metric weight: Hamming count, matrix rank, or sum of block ranks plus the
/// Hamming weight of the tail.
inline int weight(const Space& S, const GF& F, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != S.nu()) throw std::invalid_argument("weight: length mismatch");
    int w = 0;
    for (std::size_t bi = 0; bi < S.matrix_blocks().size(); ++bi)
        w += rank_of(detail::block_as_matrix(S, F, v, static_cast<int>(bi)));
    for (int j = S.tail_offset(); j < S.nu(); ++j)
        if (v[j] != 0) ++w;
    return w;
}

/// Σ m_i · rk(X_i), tail coordinates contributing m_i = 1 each. Reduces to
/// weight for Hamming and to m · weight for rank spaces.
inline int weighted_rank_sum(const Space& S, const GF& F, const std::vector<int>& v) {
    if (static_cast<int>(v.size()) != S.nu())
        throw std::invalid_argument("weighted_rank_sum: length mismatch");
    int w = 0;
    for (std::size_t bi = 0; bi < S.matrix_blocks().size(); ++bi)
        w += S.matrix_blocks()[bi].second *
             rank_of(detail::block_as_matrix(S, F, v, static_cast<int>(bi)));
    for (int j = S.tail_offset(); j < S.nu(); ++j)
        if (v[j] != 0) ++w;
    return w;
}

/// Trace form in flattened coordinates: the standard inner product.
inline int bilinear_form(const GF& F, const std::vector<int>& x, const std::vector<int>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("bilinear_form: length mismatch");
    int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s = F.add(s, F.mul(x[i], y[i]));
    return s;
}

/// Orthogonal complement under the trace form; kernel of the basis matrix.
inline Subspace dual_space_of(const Subspace& S, const Space& space) {
    if (S.ambient() != space.nu()) throw std::invalid_argument("dual_space_of: ambient mismatch");
    if (S.dim() == 0) return full_space(S.field(), space.nu());
    return kernel(S.basis);
}

/// Product of two ambient spaces with coordinate embeddings. Matrix blocks
/// from both factors are merged and re-sorted into normal form; the result is
/// Hamming iff both factors are, sum-rank otherwise. map1[i] / map2[i] give
/// the product coordinate of factor coordinate i.
struct ProductSpace {
    Space space;
    std::vector<int> map1, map2;
};

inline ProductSpace product_space(const Space& A, const Space& B) {
    struct Seg {
        int src;   // 0 = A, 1 = B
        int idx;   // block index within source
        int n, m;
    };
    std::vector<Seg> segs;
    for (std::size_t i = 0; i < A.matrix_blocks().size(); ++i)
        segs.push_back({0, static_cast<int>(i), A.matrix_blocks()[i].first, A.matrix_blocks()[i].second});
    for (std::size_t i = 0; i < B.matrix_blocks().size(); ++i)
        segs.push_back({1, static_cast<int>(i), B.matrix_blocks()[i].first, B.matrix_blocks()[i].second});
    std::stable_sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) {
        return a.m != b.m ? a.m > b.m : a.n > b.n;
    });

    auto make_product = [&]() -> Space {
        if (A.kind() == Metric::hamming && B.kind() == Metric::hamming)
            return Space::hamming(A.nu() + B.nu());
        std::vector<std::pair<int, int>> blocks;
        for (const Seg& s : segs) blocks.push_back({s.n, s.m});
        return Space::sumrank(blocks, A.tail() + B.tail());
    };
    ProductSpace P{make_product(), {}, {}};

    P.map1.assign(A.nu(), -1);
    P.map2.assign(B.nu(), -1);
    int off = 0;
    for (const Seg& s : segs) {
        const Space& src = s.src == 0 ? A : B;
        std::vector<int>& map = s.src == 0 ? P.map1 : P.map2;
        int from = src.block_offset(s.idx);
        for (int c = 0; c < s.n * s.m; ++c) map[from + c] = off + c;
        off += s.n * s.m;
    }
    for (int c = 0; c < A.tail(); ++c) P.map1[A.tail_offset() + c] = off + c;
    off += A.tail();
    for (int c = 0; c < B.tail(); ++c) P.map2[B.tail_offset() + c] = off + c;
    return P;
}

}  // namespace genwt
