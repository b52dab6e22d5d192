#include "grbasis/galois.hpp"

#include <algorithm>
#include <sstream>

#include "grbasis/rational.hpp"

namespace grbasis {

namespace {
constexpr std::int64_t kMaxResidueSize = std::int64_t(1) << 20;
constexpr std::int64_t kMaxRingBits = 62;
}  // namespace

// ---------------------------------------------------------------------------
// GaloisRing

GaloisRing::GaloisRing(ZrModulus zr, std::int64_t m, Poly h)
    : zr_(zr), m_(m), h_(std::move(h)) {}

GaloisRingPtr GaloisRing::make(std::int64_t p, std::int64_t r, std::int64_t m) {
    return make(p, r, m, find_basic_primitive(p, r, m));
}

GaloisRingPtr GaloisRing::make(std::int64_t p, std::int64_t r, std::int64_t m,
                               const Poly& modulus) {
    ZrModulus zr(p, r);
    if (m < 1) throw BadArgument("extension degree must be >= 1");
    if (modulus.modulus() != zr)
        throw RingMismatch("ring modulus polynomial lives over the wrong Z_{p^r}");
    if (modulus.degree() != m)
        throw BadArgument("ring modulus degree does not match m");
    auto ring = std::shared_ptr<GaloisRing>(new GaloisRing(zr, m, modulus));
    ring->build_tables();
    return ring;
}

void GaloisRing::build_tables() {
    residue_size_ = checked_pow_i64(zr_.p(), m_);
    if (residue_size_ > kMaxResidueSize)
        throw TooLarge("residue field size p^m above the supported desk scale");
    __int128 sz = 1;
    for (std::int64_t i = 0; i < zr_.r() * m_; ++i) {
        sz *= zr_.p();
        if (sz > (__int128(1) << kMaxRingBits)) throw TooLarge("ring size p^{rm} above 2^62");
    }
    size_ = static_cast<std::int64_t>(sz);
    unit_count_ = (residue_size_ - 1) * (size_ / residue_size_);

    if (classify(h_) != PolyClass::BasicPrimitive)
        throw BadArgument("ring modulus must be monic basic primitive (reduction mod p primitive)");
    std::int64_t order = residue_size_ - 1;
    if (order >= 1 && !Poly::x_power_minus_one(zr_, order).mod(h_).is_zero())
        throw BadArgument(
            "ring modulus does not divide x^(p^m-1)-1 over Z_{p^r}; "
            "the residue of x would not be a Teichmuller generator (use the Hensel lift)");

    // Reduction rows for w^m .. w^{2m-2}.
    red_rows_.clear();
    for (std::int64_t k = 0; k + 1 < m_; ++k) {
        Poly red = Poly::monomial(zr_, static_cast<int>(m_ + k)).mod(h_);
        std::vector<std::int64_t> row(std::size_t(m_), 0);
        for (std::int64_t i = 0; i < m_; ++i) row[std::size_t(i)] = red.coeff(static_cast<int>(i));
        red_rows_.push_back(std::move(row));
    }

    // Teichmuller set as consecutive powers of w, preceded by 0.
    teich_coeffs_.assign(std::size_t(residue_size_) * m_, 0);
    std::vector<std::int64_t> omega_c(std::size_t(m_), 0);
    {
        Poly om = Poly::monomial(zr_, 1).mod(h_);
        for (std::int64_t i = 0; i < m_; ++i) omega_c[std::size_t(i)] = om.coeff(static_cast<int>(i));
    }
    std::vector<std::int64_t> cur(std::size_t(m_), 0);
    cur[0] = 1;
    for (std::int64_t i = 0; i < order; ++i) {
        std::copy(cur.begin(), cur.end(), teich_coeffs_.begin() + (1 + i) * m_);
        cur = mul_coeffs(cur, omega_c);
    }
    bool back_to_one = cur[0] == 1;
    for (std::int64_t i = 1; i < m_; ++i) back_to_one = back_to_one && cur[std::size_t(i)] == 0;
    if (!back_to_one) throw InternalCheckFailure("w^(p^m-1) is not 1 despite a primitive modulus");

    // Residue-index lookup; the fill must be a bijection.
    teich_lookup_.assign(std::size_t(residue_size_), -1);
    for (std::int64_t s = 0; s < residue_size_; ++s) {
        const std::int64_t* row = teich_row(s);
        std::int64_t idx = 0, pw = 1;
        for (std::int64_t i = 0; i < m_; ++i) {
            idx += (row[i] % zr_.p()) * pw;
            pw *= zr_.p();
        }
        if (teich_lookup_[std::size_t(idx)] != -1)
            throw InternalCheckFailure("Teichmuller representatives collide in the residue field");
        teich_lookup_[std::size_t(idx)] = static_cast<std::int32_t>(s);
    }

    // Frobenius as a matrix: column j holds the coefficients of w^{jp}.
    // Slot 1 + e of the Teichmuller table is w^e for 0 <= e < p^m - 1.
    frob_.assign(std::size_t(m_) * m_, 0);
    for (std::int64_t j = 0; j < m_; ++j) {
        std::int64_t e = (j * zr_.p()) % order;
        const std::int64_t* img = teich_row(1 + e);
        for (std::int64_t i = 0; i < m_; ++i) frob_[std::size_t(i) * m_ + j] = img[i];
    }
}

GrElem GaloisRing::teichmuller_lift_slot(std::int64_t slot) const {
    const std::int64_t* row = teich_row(slot);
    return GrElem(shared_from_this(), std::vector<std::int64_t>(row, row + m_));
}

std::vector<std::int64_t> GaloisRing::mul_coeffs(const std::vector<std::int64_t>& a,
                                                 const std::vector<std::int64_t>& b) const {
    std::int64_t q = zr_.value();
    std::vector<std::int64_t> buf(std::size_t(2 * m_ - 1), 0);
    for (std::int64_t i = 0; i < m_; ++i) {
        if (a[std::size_t(i)] == 0) continue;
        for (std::int64_t j = 0; j < m_; ++j)
            buf[std::size_t(i + j)] = (buf[std::size_t(i + j)] + a[std::size_t(i)] * b[std::size_t(j)]) % q;
    }
    for (std::int64_t k = 2 * m_ - 2; k >= m_; --k) {
        std::int64_t c = buf[std::size_t(k)];
        if (c == 0) continue;
        const auto& row = red_rows_[std::size_t(k - m_)];
        for (std::int64_t i = 0; i < m_; ++i)
            buf[std::size_t(i)] = (buf[std::size_t(i)] + c * row[std::size_t(i)]) % q;
        buf[std::size_t(k)] = 0;
    }
    buf.resize(std::size_t(m_));
    return buf;
}

std::vector<std::int64_t> GaloisRing::ideal_sizes() const {
    std::vector<std::int64_t> out;
    std::int64_t s = size_;
    for (std::int64_t i = 0; i <= zr_.r(); ++i) {
        out.push_back(s);
        if (i < zr_.r()) s /= residue_size_;
    }
    return out;
}

GrElem GaloisRing::zero() const { return element({}); }
GrElem GaloisRing::one() const { return element({1}); }

GrElem GaloisRing::omega() const {
    if (m_ >= 2) return monomial(1);
    // For m = 1 the residue of x is the scalar root of h.
    return from_scalar(-h_.coeff(0));
}

GrElem GaloisRing::monomial(int j) const {
    if (j < 0 || j >= m_) throw BadArgument("monomial exponent out of range");
    std::vector<std::int64_t> c(std::size_t(m_), 0);
    c[std::size_t(j)] = 1;
    return GrElem(shared_from_this(), std::move(c));
}

GrElem GaloisRing::element(std::vector<std::int64_t> coeffs) const {
    if (static_cast<std::int64_t>(coeffs.size()) > m_)
        throw BadArgument("element has more coefficients than the extension degree");
    coeffs.resize(std::size_t(m_), 0);
    return GrElem(shared_from_this(), std::move(coeffs));
}

GrElem GaloisRing::from_scalar(std::int64_t v) const { return element({v}); }

GrElem GaloisRing::from_scalar(const ZrElem& v) const {
    if (v.modulus() != zr_) throw RingMismatch("scalar has the wrong modulus");
    return element({v.value()});
}

GrElem GaloisRing::element_at(std::int64_t index) const {
    if (index < 0 || index >= size_) throw BadArgument("element index out of range");
    std::vector<std::int64_t> c(std::size_t(m_), 0);
    std::int64_t q = zr_.value();
    for (std::int64_t i = 0; i < m_; ++i) {
        c[std::size_t(i)] = index % q;
        index /= q;
    }
    return GrElem(shared_from_this(), std::move(c));
}

std::int64_t GaloisRing::index_of(const GrElem& z) const {
    if (*z.ring() != *this) throw RingMismatch("element belongs to a different ring");
    std::int64_t idx = 0, pw = 1;
    for (std::int64_t i = 0; i < m_; ++i) {
        idx += z.coeffs()[std::size_t(i)] * pw;
        pw *= zr_.value();
    }
    return idx;
}

std::vector<GrElem> GaloisRing::teichmuller_set() const {
    std::vector<GrElem> out;
    out.reserve(std::size_t(residue_size_));
    for (std::int64_t s = 0; s < residue_size_; ++s) out.push_back(teichmuller_lift_slot(s));
    return out;
}

GrElem GaloisRing::teichmuller_lift(std::int64_t residue_index) const {
    if (residue_index < 0 || residue_index >= residue_size_)
        throw BadArgument("residue index out of range");
    return teichmuller_lift_slot(teich_lookup_[std::size_t(residue_index)]);
}

GrElem GaloisRing::from_padic_digits(const std::vector<GrElem>& digits) const {
    if (static_cast<std::int64_t>(digits.size()) != zr_.r())
        throw BadArgument("expected exactly r Teichmuller digits");
    std::vector<std::int64_t> acc(std::size_t(m_), 0);
    std::int64_t pk = 1, q = zr_.value();
    for (std::int64_t i = 0; i < zr_.r(); ++i) {
        const GrElem& d = digits[std::size_t(i)];
        if (*d.ring() != *this) throw RingMismatch("digit belongs to a different ring");
        if (d != teichmuller_lift(d.residue_index()))
            throw BadArgument("digit " + d.str() + " is not a Teichmuller representative");
        for (std::int64_t j = 0; j < m_; ++j)
            acc[std::size_t(j)] = (acc[std::size_t(j)] + pk * d.coeffs()[std::size_t(j)]) % q;
        pk *= zr_.p();
    }
    return GrElem(shared_from_this(), std::move(acc));
}

std::string GaloisRing::spec_string() const {
    std::ostringstream os;
    os << "GR(p=" << p() << ",r=" << r() << ",m=" << m() << ";h=" << h_.literal() << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// GrElem

GrElem::GrElem(GaloisRingPtr ring, std::vector<std::int64_t> coeffs)
    : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
    if (!ring_) throw BadArgument("element needs a ring");
    if (static_cast<std::int64_t>(coeffs_.size()) != ring_->m())
        throw BadArgument("element coefficient count does not match the extension degree");
    std::int64_t q = ring_->zr().value();
    for (auto& c : coeffs_) {
        c %= q;
        if (c < 0) c += q;
    }
}

ZrElem GrElem::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) throw BadArgument("coefficient index out of range");
    return ZrElem(ring_->zr(), coeffs_[std::size_t(i)]);
}

bool GrElem::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

bool GrElem::is_one() const {
    if (coeffs_[0] != 1) return false;
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

bool GrElem::is_unit() const {
    std::int64_t p = ring_->p();
    return std::any_of(coeffs_.begin(), coeffs_.end(), [p](std::int64_t c) { return c % p != 0; });
}

bool same_ring(const GrElem& a, const GrElem& b) {
    return a.ring().get() == b.ring().get() || *a.ring() == *b.ring();
}

namespace {
void require_same(const GrElem& a, const GrElem& b) {
    if (!same_ring(a, b)) throw RingMismatch("elements of different Galois rings");
}
}  // namespace

GrElem operator+(const GrElem& a, const GrElem& b) {
    require_same(a, b);
    std::vector<std::int64_t> c(a.coeffs());
    std::int64_t q = a.ring()->zr().value();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] + b.coeffs()[i]) % q;
    return GrElem(a.ring(), std::move(c));
}

GrElem operator-(const GrElem& a, const GrElem& b) {
    require_same(a, b);
    std::vector<std::int64_t> c(a.coeffs());
    std::int64_t q = a.ring()->zr().value();
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (c[i] - b.coeffs()[i] % q + q) % q;
    return GrElem(a.ring(), std::move(c));
}

GrElem operator*(const GrElem& a, const GrElem& b) {
    require_same(a, b);
    return GrElem(a.ring(), a.ring()->mul_coeffs(a.coeffs(), b.coeffs()));
}

GrElem GrElem::operator-() const {
    std::vector<std::int64_t> c(coeffs_);
    std::int64_t q = ring_->zr().value();
    for (auto& x : c) x = (q - x) % q;
    return GrElem(ring_, std::move(c));
}

GrElem GrElem::scaled(std::int64_t c) const {
    std::int64_t q = ring_->zr().value();
    std::int64_t cr = c % q;
    if (cr < 0) cr += q;
    std::vector<std::int64_t> v(coeffs_);
    for (auto& x : v) x = x * cr % q;
    return GrElem(ring_, std::move(v));
}

GrElem GrElem::scaled(const ZrElem& c) const {
    if (c.modulus() != ring_->zr()) throw RingMismatch("scalar has the wrong modulus");
    return scaled(c.value());
}

GrElem GrElem::pow(std::uint64_t e) const {
    GrElem acc = ring_->one(), base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

GrElem GrElem::inverse() const {
    if (!is_unit()) throw NotAUnit("element " + str() + " is a zero divisor");
    int m = static_cast<int>(ring_->m());
    ZrMatrix mul(ring_->zr(), m, m);
    for (int j = 0; j < m; ++j) {
        GrElem col = *this * ring_->monomial(j);
        for (int i = 0; i < m; ++i) mul.set(i, j, col.coeffs()[std::size_t(i)]);
    }
    ZrMatrix inv = mul.inverse();
    std::vector<std::int64_t> c(std::size_t(m), 0);
    for (int i = 0; i < m; ++i) c[std::size_t(i)] = inv.at(i, 0).value();
    GrElem result(ring_, std::move(c));
    if (!(result * *this).is_one())
        throw InternalCheckFailure("inverse computation failed verification");
    return result;
}

GrElem GrElem::frobenius() const {
    std::int64_t m = ring_->m(), q = ring_->zr().value();
    std::vector<std::int64_t> out(std::size_t(m), 0);
    for (std::int64_t i = 0; i < m; ++i) {
        std::int64_t acc = 0;
        for (std::int64_t j = 0; j < m; ++j)
            acc = (acc + ring_->frob_[std::size_t(i) * m + j] * coeffs_[std::size_t(j)]) % q;
        out[std::size_t(i)] = acc;
    }
    return GrElem(ring_, std::move(out));
}

GrElem GrElem::frobenius_iter(std::int64_t k) const {
    if (k < 0) throw BadArgument("Frobenius iteration count must be >= 0");
    k %= ring_->m();
    GrElem z = *this;
    for (std::int64_t i = 0; i < k; ++i) z = z.frobenius();
    return z;
}

ZrElem GrElem::trace() const {
    GrElem acc = *this, cur = *this;
    for (std::int64_t i = 1; i < ring_->m(); ++i) {
        cur = cur.frobenius();
        acc = acc + cur;
    }
    for (std::int64_t i = 1; i < ring_->m(); ++i)
        if (acc.coeffs()[std::size_t(i)] != 0)
            throw InternalCheckFailure("trace result is not a scalar");
    return ZrElem(ring_->zr(), acc.coeffs()[0]);
}

std::int64_t GrElem::residue_index() const {
    std::int64_t idx = 0, pw = 1, p = ring_->p();
    for (std::int64_t i = 0; i < ring_->m(); ++i) {
        idx += (coeffs_[std::size_t(i)] % p) * pw;
        pw *= p;
    }
    return idx;
}

std::vector<GrElem> GrElem::padic_digits() const {
    std::int64_t p = ring_->p(), r = ring_->r(), m = ring_->m();
    std::vector<GrElem> digits;
    digits.reserve(std::size_t(r));
    // y holds (z - sum of peeled digits) / p^i, canonical mod p^{r-i}.
    std::vector<std::int64_t> y = coeffs_;
    std::int64_t qi = ring_->zr().value();
    for (std::int64_t i = 0; i < r; ++i) {
        std::int64_t idx = 0, pw = 1;
        for (std::int64_t j = 0; j < m; ++j) {
            idx += (y[std::size_t(j)] % p) * pw;
            pw *= p;
        }
        GrElem t = ring_->teichmuller_lift(idx);
        for (std::int64_t j = 0; j < m; ++j) {
            std::int64_t d = ((y[std::size_t(j)] - t.coeffs()[std::size_t(j)]) % qi + qi) % qi;
            if (d % p != 0)
                throw InternalCheckFailure("p-adic digit subtraction left a non-divisible coefficient");
            y[std::size_t(j)] = d / p;
        }
        qi /= p;
        digits.push_back(std::move(t));
    }
    for (std::int64_t j = 0; j < m; ++j)
        if (y[std::size_t(j)] != 0)
            throw InternalCheckFailure("p-adic digits do not exhaust the element");
    return digits;
}

bool operator==(const GrElem& a, const GrElem& b) {
    return same_ring(a, b) && a.coeffs() == b.coeffs();
}

std::string GrElem::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        std::int64_t c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << " + ";
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::string GrElem::literal() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ',';
        os << coeffs_[i];
    }
    return os.str();
}

}  // namespace grbasis
