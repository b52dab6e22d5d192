#include "grbasis/modring.hpp"

#include <sstream>

namespace grbasis {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

ZrModulus::ZrModulus(std::int64_t p, std::int64_t r) : p_(p), r_(r) {
    if (!is_prime(p)) throw BadArgument("modulus base " + std::to_string(p) + " is not prime");
    if (r < 1) throw BadArgument("modulus exponent must be >= 1");
    constexpr std::int64_t kMax = std::int64_t(1) << 31;
    __int128 q = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        q *= p;
        if (q > kMax) throw TooLarge("p^r exceeds 2^31");
    }
    q_ = static_cast<std::int64_t>(q);
}

ZrElem ZrElem::inverse() const {
    if (!is_unit()) throw NotAUnit(std::to_string(v_) + " is not a unit mod " +
                                   std::to_string(mod_.value()));
    // Extended Euclid on (v, q); gcd is 1 because p does not divide v.
    std::int64_t a = v_, b = mod_.value();
    std::int64_t x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t t = a / b;
        a -= t * b;
        std::swap(a, b);
        x0 -= t * x1;
        std::swap(x0, x1);
    }
    if (a != 1) throw InternalCheckFailure("gcd of a unit with the modulus is not 1");
    return ZrElem(mod_, x0);
}

ZrElem ZrElem::pow(std::uint64_t e) const {
    ZrElem acc(mod_, 1), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

ZrMatrix::ZrMatrix(ZrModulus mod, int rows, int cols)
    : mod_(mod), rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw BadArgument("negative matrix dimension");
}

ZrMatrix::ZrMatrix(ZrModulus mod, const std::vector<std::vector<std::int64_t>>& entries)
    : ZrMatrix(mod, static_cast<int>(entries.size()),
               entries.empty() ? 0 : static_cast<int>(entries.front().size())) {
    for (int i = 0; i < rows_; ++i) {
        if (static_cast<int>(entries[i].size()) != cols_)
            throw BadArgument("ragged matrix rows");
        for (int j = 0; j < cols_; ++j) set(i, j, entries[i][j]);
    }
}

ZrMatrix ZrMatrix::identity(ZrModulus mod, int n) {
    ZrMatrix m(mod, n, n);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

ZrElem ZrMatrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw BadArgument("matrix index out of range");
    return ZrElem(mod_, raw(i, j));
}

void ZrMatrix::set(int i, int j, const ZrElem& v) {
    if (v.modulus() != mod_) throw RingMismatch("matrix entry has a different modulus");
    set(i, j, v.value());
}

void ZrMatrix::set(int i, int j, std::int64_t v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw BadArgument("matrix index out of range");
    std::int64_t q = mod_.value();
    std::int64_t t = v % q;
    data_[std::size_t(i) * cols_ + j] = t < 0 ? t + q : t;
}

void ZrMatrix::require_square(const char* what) const {
    if (!is_square()) throw BadArgument(std::string(what) + " requires a square matrix");
}

ZrElem ZrMatrix::det() const {
    require_square("determinant");
    ZrElem one(mod_, 1), zero(mod_, 0);
    return detail::expansion_det<ZrElem>(rows_, one, zero,
                                         [this](int i, int j) { return at(i, j); });
}

ZrMatrix ZrMatrix::adjugate() const {
    require_square("adjugate");
    int n = rows_;
    ZrMatrix adj(mod_, n, n);
    if (n == 0) return adj;
    if (n > 12) throw TooLarge("adjugate supports dimension <= 12");
    ZrElem one(mod_, 1), zero(mod_, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            // Minor with row i and column j removed.
            auto entry = [&](int a, int b) {
                return at(a >= i ? a + 1 : a, b >= j ? b + 1 : b);
            };
            ZrElem minor_det = detail::expansion_det<ZrElem>(n - 1, one, zero, entry);
            adj.set(j, i, ((i + j) % 2 == 0) ? minor_det : -minor_det);
        }
    }
    return adj;
}

ZrMatrix ZrMatrix::inverse() const {
    require_square("inverse");
    ZrElem d = det();
    if (!d.is_unit())
        throw Singular("matrix determinant " + d.str() + " is not a unit mod " +
                       std::to_string(mod_.value()));
    ZrElem dinv = d.inverse();
    ZrMatrix adj = adjugate();
    ZrMatrix out(mod_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(i, j, adj.at(i, j) * dinv);
    return out;
}

ZrMatrix ZrMatrix::transpose() const {
    ZrMatrix out(mod_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out.set(j, i, raw(i, j));
    return out;
}

ZrMatrix operator*(const ZrMatrix& a, const ZrMatrix& b) {
    if (a.mod_ != b.mod_) throw RingMismatch("matrix product over different moduli");
    if (a.cols_ != b.rows_) throw BadArgument("matrix product dimension mismatch");
    ZrMatrix out(a.mod_, a.rows_, b.cols_);
    std::int64_t q = a.mod_.value();
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < b.cols_; ++j) {
            std::int64_t acc = 0;
            for (int k = 0; k < a.cols_; ++k) acc = (acc + a.raw(i, k) * b.raw(k, j)) % q;
            out.set(i, j, acc);
        }
    }
    return out;
}

bool operator==(const ZrMatrix& a, const ZrMatrix& b) {
    return a.mod_ == b.mod_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool ZrMatrix::is_identity() const {
    if (!is_square()) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j)
            if (raw(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

std::string ZrMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
        if (i) os << ';';
        for (int j = 0; j < cols_; ++j) {
            if (j) os << ',';
            os << raw(i, j);
        }
    }
    return os.str();
}

std::vector<ZrElem> mul_row(const std::vector<ZrElem>& row, const ZrMatrix& m) {
    if (static_cast<int>(row.size()) != m.rows())
        throw BadArgument("row vector length does not match matrix rows");
    std::vector<ZrElem> out;
    out.reserve(m.cols());
    for (int j = 0; j < m.cols(); ++j) {
        ZrElem acc(m.modulus(), 0);
        for (int i = 0; i < m.rows(); ++i) acc = acc + row[i] * m.at(i, j);
        out.push_back(acc);
    }
    return out;
}

}  // namespace grbasis
