#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace genwt {

namespace detail {

inline bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Polynomials over GF(p) as coefficient vectors, constant term first.
// Used only at field-construction time, so clarity beats speed here.

inline void poly_trim(std::vector<int>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::vector<int> poly_mul(const std::vector<int>& a, const std::vector<int>& b, int p) {
    if (a.empty() || b.empty()) return {};
    std::vector<int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    poly_trim(c);
    return c;
}

// Remainder of a modulo the monic polynomial m.
inline std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& m, int p) {
    poly_trim(a);
    assert(!m.empty() && m.back() == 1);
    while (a.size() >= m.size()) {
        int lead = a.back();
        std::size_t shift = a.size() - m.size();
        if (lead != 0)
            for (std::size_t i = 0; i < m.size(); ++i)
                a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// Trial division by every monic polynomial of degree 1..deg/2.
inline bool poly_irreducible(const std::vector<int>& f, int p) {
    int deg = static_cast<int>(f.size()) - 1;
    if (deg < 1 || f.back() != 1) return false;
    if (deg == 1) return true;
    for (int d = 1; 2 * d <= deg; ++d) {
        // all monic divisor candidates of degree d, low coefficients as a base-p counter
        long long count = 1;
        for (int i = 0; i < d; ++i) count *= p;
        for (long long v = 0; v < count; ++v) {
            std::vector<int> g(d + 1, 0);
            long long t = v;
            for (int i = 0; i < d; ++i) { g[i] = static_cast<int>(t % p); t /= p; }
            g[d] = 1;
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

/// Returns the canonical modulus for GF(p^e): the monic irreducible of degree e
/// whose coefficient vector encodes the smallest base-p integer. Constant term first.
inline std::vector<int> find_irreducible(int p, int e) {
    if (!detail::is_prime(p)) throw std::invalid_argument("find_irreducible: p must be prime");
    if (e < 2) throw std::invalid_argument("find_irreducible: e must be >= 2");
    long long count = 1;
    for (int i = 0; i < e; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
        std::vector<int> f(e + 1, 0);
        long long t = v;
        for (int i = 0; i < e; ++i) { f[i] = static_cast<int>(t % p); t /= p; }
        f[e] = 1;
        if (detail::poly_irreducible(f, p)) return f;
    }
    throw std::logic_error("find_irreducible: no irreducible found");  // unreachable
}

/// GF(p^e) with exact arithmetic. Elements are integers in [0, q) encoding the
/// residue polynomial in base p, least-significant digit = constant term.
/// Immutable after construction; all operation tables are built eagerly for
/// small q, so concurrent reads are safe.
class GF {
  public:
    explicit GF(int p) : GF(p, 1) {}

    GF(int p, int e) : GF(p, e, e > 1 ? find_irreducible(p, e) : std::vector<int>{}) {}

    GF(int p, int e, std::vector<int> modulus) : p_(p), e_(e), modulus_(std::move(modulus)) {
        if (!detail::is_prime(p_)) throw std::invalid_argument("GF: p must be prime");
        if (e_ < 1) throw std::invalid_argument("GF: e must be >= 1");
        long long q = 1;
        for (int i = 0; i < e_; ++i) {
            q *= p_;
            if (q > (1LL << 30)) throw std::invalid_argument("GF: q too large");
        }
        q_ = static_cast<int>(q);
        if (e_ == 1) {
            if (!modulus_.empty()) throw std::invalid_argument("GF: prime field takes no modulus");
        } else {
            if (static_cast<int>(modulus_.size()) != e_ + 1 || modulus_.back() != 1)
                throw std::invalid_argument("GF: modulus must be monic of degree e");
            for (int c : modulus_)
                if (c < 0 || c >= p_) throw std::invalid_argument("GF: modulus coefficient out of range");
            if (!detail::poly_irreducible(modulus_, p_))
                throw std::invalid_argument("GF: modulus is reducible");
        }
        base_pow_.resize(e_);
        for (int i = 0, b = 1; i < e_; ++i, b *= p_) base_pow_[i] = b;
        if (q_ <= kTableMax) build_tables();
    }

    [[nodiscard]] int p() const { return p_; }
    [[nodiscard]] int e() const { return e_; }
    [[nodiscard]] int q() const { return q_; }
    [[nodiscard]] const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const {
        if (!add_.empty()) return add_[a * q_ + b];
        return add_slow(a, b);
    }

    int neg(int a) const {
        if (!neg_.empty()) return neg_[a];
        return neg_slow(a);
    }

    int sub(int a, int b) const { return add(a, neg(b)); }

    int mul(int a, int b) const {
        if (!mul_.empty()) return mul_[a * q_ + b];
        return mul_slow(a, b);
    }

    int inv(int a) const {
        if (a == 0) throw std::domain_error("GF: division by zero");
        if (!inv_.empty()) return inv_[a];
        return pow(a, q_ - 2);
    }

    int div(int a, int b) const { return mul(a, inv(b)); }

    int pow(int a, long long n) const {
        assert(n >= 0);
        int r = 1, base = a;
        while (n > 0) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

    /// a^(p^s); frobenius(a, e) == a for all a.
    int frobenius(int a, int s) const {
        int steps = e_ > 0 ? s % e_ : 0;
        int r = a;
        for (int i = 0; i < steps; ++i) r = pow(r, p_);
        return r;
    }

    bool operator==(const GF& o) const { return p_ == o.p_ && e_ == o.e_ && modulus_ == o.modulus_; }
    bool operator!=(const GF& o) const { return !(*this == o); }

  private:
    static constexpr int kTableMax = 256;

    int add_slow(int a, int b) const {
        if (e_ == 1) { int s = a + b; return s >= p_ ? s - p_ : s; }
        int r = 0;
        for (int i = 0; i < e_; ++i) {
            int da = (a / base_pow_[i]) % p_, db = (b / base_pow_[i]) % p_;
            int s = da + db;
            if (s >= p_) s -= p_;
            r += s * base_pow_[i];
        }
        return r;
    }

    int neg_slow(int a) const {
        if (e_ == 1) return a == 0 ? 0 : p_ - a;
        int r = 0;
        for (int i = 0; i < e_; ++i) {
            int d = (a / base_pow_[i]) % p_;
            r += (d == 0 ? 0 : p_ - d) * base_pow_[i];
        }
        return r;
    }

    int mul_slow(int a, int b) const {
        if (e_ == 1) return static_cast<int>((static_cast<long long>(a) * b) % p_);
        std::vector<int> pa = decode(a), pb = decode(b);
        return encode(detail::poly_mod(detail::poly_mul(pa, pb, p_), modulus_, p_));
    }

    std::vector<int> decode(int a) const {
        std::vector<int> c(e_);
        for (int i = 0; i < e_; ++i) { c[i] = a % p_; a /= p_; }
        return c;
    }

    int encode(const std::vector<int>& c) const {
        int r = 0;
        for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) r = r * p_ + c[i];
        return r;
    }

    void build_tables() {
        add_.resize(static_cast<std::size_t>(q_) * q_);
        mul_.resize(static_cast<std::size_t>(q_) * q_);
        neg_.resize(q_);
        for (int a = 0; a < q_; ++a) {
            neg_[a] = neg_slow(a);
            for (int b = 0; b < q_; ++b) {
                add_[a * q_ + b] = add_slow(a, b);
                mul_[a * q_ + b] = mul_slow(a, b);
            }
        }
        inv_.assign(q_, 0);
        for (int a = 1; a < q_; ++a)
            for (int b = 1; b < q_; ++b)
                if (mul_[a * q_ + b] == 1) { inv_[a] = b; break; }
    }

    int p_, e_, q_;
    std::vector<int> modulus_;
    std::vector<int> base_pow_;
    std::vector<int> add_, mul_, neg_, inv_;
};

enum class FieldOp { add, sub, mul, div };

/// Dispatch wrapper mirroring the serialized operation names.
inline int field_arith(const GF& F, int a, int b, FieldOp op) {
    switch (op) {
        case FieldOp::add: return F.add(a, b);
        case FieldOp::sub: return F.sub(a, b);
        case FieldOp::mul: return F.mul(a, b);
        case FieldOp::div: return F.div(a, b);
    }
    throw std::logic_error("field_arith: bad op");
}

}  // namespace genwt
