#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "grbasis/errors.hpp"

namespace grbasis {

// Modulus p^r of the coefficient ring Z_{p^r}.  p is checked for primality,
// p^r must fit comfortably in 64-bit arithmetic (p^r <= 2^31).
class ZrModulus {
public:
    ZrModulus(std::int64_t p, std::int64_t r);

    std::int64_t p() const { return p_; }
    std::int64_t r() const { return r_; }
    std::int64_t value() const { return q_; }  // p^r

    friend bool operator==(const ZrModulus& a, const ZrModulus& b) {
        return a.p_ == b.p_ && a.r_ == b.r_;
    }
    friend bool operator!=(const ZrModulus& a, const ZrModulus& b) { return !(a == b); }

private:
    std::int64_t p_;
    std::int64_t r_;
    std::int64_t q_;
};

// Residue in Z_{p^r}, stored as the least non-negative representative.
class ZrElem {
public:
    ZrElem(ZrModulus mod, std::int64_t value) : mod_(mod), v_(reduce(value, mod.value())) {}

    std::int64_t value() const { return v_; }
    const ZrModulus& modulus() const { return mod_; }

    bool is_zero() const { return v_ == 0; }
    bool is_unit() const { return v_ % mod_.p() != 0; }

    // Multiplicative inverse via extended Euclid; throws NotAUnit.
    ZrElem inverse() const;
    ZrElem pow(std::uint64_t e) const;

    friend ZrElem operator+(const ZrElem& a, const ZrElem& b) {
        a.require_same(b);
        return ZrElem(a.mod_, a.v_ + b.v_);
    }
    friend ZrElem operator-(const ZrElem& a, const ZrElem& b) {
        a.require_same(b);
        return ZrElem(a.mod_, a.v_ - b.v_);
    }
    friend ZrElem operator*(const ZrElem& a, const ZrElem& b) {
        a.require_same(b);
        return ZrElem(a.mod_, a.v_ * b.v_);
    }
    ZrElem operator-() const { return ZrElem(mod_, -v_); }
    friend bool operator==(const ZrElem& a, const ZrElem& b) {
        return a.mod_ == b.mod_ && a.v_ == b.v_;
    }
    friend bool operator!=(const ZrElem& a, const ZrElem& b) { return !(a == b); }

    std::string str() const { return std::to_string(v_); }

private:
    static std::int64_t reduce(std::int64_t v, std::int64_t q) {
        std::int64_t t = v % q;
        return t < 0 ? t + q : t;
    }
    void require_same(const ZrElem& o) const {
        if (mod_ != o.mod_) throw RingMismatch("ZrElem operands have different moduli");
    }

    ZrModulus mod_;
    std::int64_t v_;
};

inline std::ostream& operator<<(std::ostream& os, const ZrElem& a) { return os << a.value(); }

namespace detail {

// Division-free determinant by Laplace expansion with memoization over column
// subsets.  Works over any commutative ring; `entry(i, j)` supplies the matrix.
template <class T>
T expansion_det(int n, const T& one, const T& zero, const std::function<T(int, int)>& entry) {
    if (n == 0) return one;
    if (n > 16) throw TooLarge("determinant expansion supports dimension <= 16");
    std::vector<T> dp(std::size_t(1) << n, zero);
    dp[0] = one;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        int k = __builtin_popcount(mask);
        int row = k - 1;
        T acc = zero;
        int idx = 0;
        for (int j = 0; j < n; ++j) {
            if (!(mask & (std::uint32_t(1) << j))) continue;
            T term = entry(row, j) * dp[mask ^ (std::uint32_t(1) << j)];
            if ((row + idx) % 2 == 0)
                acc = acc + term;
            else
                acc = acc - term;
            ++idx;
        }
        dp[mask] = acc;
    }
    return dp[(std::size_t(1) << n) - 1];
}

}  // namespace detail

// Dense matrix over Z_{p^r}.  Mutable while being filled via at(); all
// operations are pure and return new values.
class ZrMatrix {
public:
    ZrMatrix(ZrModulus mod, int rows, int cols);
    ZrMatrix(ZrModulus mod, const std::vector<std::vector<std::int64_t>>& entries);

    static ZrMatrix identity(ZrModulus mod, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    const ZrModulus& modulus() const { return mod_; }

    ZrElem at(int i, int j) const;
    void set(int i, int j, const ZrElem& v);
    void set(int i, int j, std::int64_t v);

    // Determinant by division-free expansion (square only).
    ZrElem det() const;
    // Transposed cofactor matrix, so M * adjugate(M) = det(M) * I.
    ZrMatrix adjugate() const;
    // det(M)^{-1} * adjugate(M); throws Singular when det is not a unit.
    ZrMatrix inverse() const;
    ZrMatrix transpose() const;

    friend ZrMatrix operator*(const ZrMatrix& a, const ZrMatrix& b);
    friend bool operator==(const ZrMatrix& a, const ZrMatrix& b);
    friend bool operator!=(const ZrMatrix& a, const ZrMatrix& b) { return !(a == b); }

    bool is_identity() const;
    std::string str() const;  // matrix literal: rows ';', entries ','

private:
    void require_square(const char* what) const;
    std::int64_t raw(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

    ZrModulus mod_;
    int rows_;
    int cols_;
    std::vector<std::int64_t> data_;
};

// Row vector times matrix over Z_{p^r}.
std::vector<ZrElem> mul_row(const std::vector<ZrElem>& row, const ZrMatrix& m);

}  // namespace grbasis
