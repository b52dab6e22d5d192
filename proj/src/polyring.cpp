#include "grbasis/polyring.hpp"

#include <algorithm>
#include <sstream>

#include "grbasis/rational.hpp"

namespace grbasis {

namespace {

constexpr std::int64_t kMaxResidueOrder = std::int64_t(1) << 20;  // bound on p^m - 1

std::int64_t mod_reduce(std::int64_t v, std::int64_t q) {
    std::int64_t t = v % q;
    return t < 0 ? t + q : t;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Extended Euclid over F_p[x]: returns (g, s, t) with s*a + t*b = g, g monic.
struct PolyEgcd {
    Poly g, s, t;
};

PolyEgcd poly_egcd(const Poly& a, const Poly& b) {
    if (a.modulus().r() != 1) throw BadArgument("polynomial gcd requires a prime modulus");
    ZrModulus mod = a.modulus();
    Poly r0 = a, r1 = b;
    Poly s0(mod, {1}), s1(mod);
    Poly t0(mod), t1(mod, {1});
    while (!r1.is_zero()) {
        auto [q, r2] = r0.divmod(r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
        t0 = t1; t1 = t2;
    }
    if (!r0.is_zero() && r0.leading_coeff() != 1) {
        std::int64_t inv = ZrElem(mod, r0.leading_coeff()).inverse().value();
        r0 = r0.scaled(inv);
        s0 = s0.scaled(inv);
        t0 = t0.scaled(inv);
    }
    return {r0, s0, t0};
}

// Monic polynomial of degree m over F_p whose lower coefficients are the
// base-p digits of `index`; ascending index matches counting order.
Poly monic_by_index(ZrModulus fp, std::int64_t m, std::int64_t index) {
    std::vector<std::int64_t> c(std::size_t(m) + 1, 0);
    for (std::int64_t i = 0; i < m; ++i) {
        c[std::size_t(i)] = index % fp.p();
        index /= fp.p();
    }
    c[std::size_t(m)] = 1;
    return Poly(fp, c);
}

}  // namespace

Poly::Poly(ZrModulus mod, std::vector<std::int64_t> coeffs) : mod_(mod), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c = mod_reduce(c, mod_.value());
    trim();
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::monomial(ZrModulus mod, int deg, std::int64_t c) {
    if (deg < 0) throw BadArgument("monomial degree must be >= 0");
    std::vector<std::int64_t> v(std::size_t(deg) + 1, 0);
    v.back() = c;
    return Poly(mod, v);
}

Poly Poly::x_power_minus_one(ZrModulus mod, std::int64_t n) {
    if (n < 1) throw BadArgument("x^n - 1 needs n >= 1");
    std::vector<std::int64_t> v(std::size_t(n) + 1, 0);
    v.front() = -1;
    v.back() = 1;
    return Poly(mod, v);
}

Poly operator+(const Poly& a, const Poly& b) {
    a.require_same(b);
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(a.mod_, c);
}

Poly operator-(const Poly& a, const Poly& b) {
    a.require_same(b);
    std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(a.mod_, c);
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_same(b);
    if (a.is_zero() || b.is_zero()) return Poly(a.mod_);
    std::int64_t q = a.mod_.value();
    std::vector<std::int64_t> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] = (c[i + j] + a.coeffs_[i] * b.coeffs_[j]) % q;
    return Poly(a.mod_, c);
}

Poly Poly::scaled(std::int64_t c) const {
    std::vector<std::int64_t> v = coeffs_;
    std::int64_t cr = mod_reduce(c, mod_.value());
    for (auto& x : v) x = x * cr % mod_.value();
    return Poly(mod_, v);
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw BadArgument("negative shift");
    if (is_zero()) return *this;
    std::vector<std::int64_t> v(coeffs_.size() + std::size_t(k), 0);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + k);
    return Poly(mod_, v);
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
    require_same(divisor);
    if (divisor.is_zero()) throw BadArgument("polynomial division by zero");
    ZrElem lc(mod_, divisor.leading_coeff());
    if (!lc.is_unit())
        throw BadArgument("polynomial division needs a unit leading coefficient");
    std::int64_t lcinv = lc.inverse().value();
    std::int64_t q = mod_.value();
    std::vector<std::int64_t> rem = coeffs_;
    int dd = divisor.degree();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < dd) return {Poly(mod_), *this};
    std::vector<std::int64_t> quot(std::size_t(dr - dd) + 1, 0);
    for (int k = dr; k >= dd; --k) {
        std::int64_t c = rem[std::size_t(k)] % q;
        if (c == 0) continue;
        std::int64_t f = c * lcinv % q;
        quot[std::size_t(k - dd)] = f;
        for (int i = 0; i <= dd; ++i) {
            std::size_t idx = std::size_t(k - dd + i);
            rem[idx] = mod_reduce(rem[idx] - f * divisor.coeff(i), q);
        }
    }
    return {Poly(mod_, quot), Poly(mod_, rem)};
}

Poly Poly::pow_mod(std::uint64_t e, const Poly& modpoly) const {
    require_same(modpoly);
    Poly acc(mod_, {1});
    Poly base = this->mod(modpoly);
    while (e > 0) {
        if (e & 1) acc = (acc * base).mod(modpoly);
        base = (base * base).mod(modpoly);
        e >>= 1;
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
        std::int64_t c = coeff(i);
        if (c == 0) continue;
        if (!first) os << " + ";
        if (i == 0) {
            os << c;
        } else {
            if (c != 1) os << c << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::string Poly::literal() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (int i = 0; i <= degree(); ++i) {
        if (i) os << ',';
        os << coeff(i);
    }
    return os.str();
}

Poly reduce_mod_p(const Poly& f) {
    ZrModulus fp(f.modulus().p(), 1);
    return Poly(fp, f.coeffs());
}

bool is_irreducible_mod_p(const Poly& f) {
    if (f.modulus().r() != 1) throw BadArgument("irreducibility test works over F_p");
    if (!f.is_monic()) throw BadArgument("irreducibility test needs a monic polynomial of degree >= 1");
    std::int64_t p = f.modulus().p();
    int half = f.degree() / 2;
    for (int d = 1; d <= half; ++d) {
        std::int64_t count = checked_pow_i64(p, d);
        for (std::int64_t idx = 0; idx < count; ++idx) {
            Poly g = monic_by_index(f.modulus(), d, idx);
            if (f.mod(g).is_zero()) return false;
        }
    }
    return true;
}

bool is_primitive_mod_p(const Poly& f) {
    if (!is_irreducible_mod_p(f)) throw BadArgument("primitivity test needs an irreducible polynomial");
    std::int64_t p = f.modulus().p();
    if (f.coeff(0) == 0) return false;  // x itself: residue of x is 0, no order
    std::int64_t order = checked_pow_i64(p, f.degree()) - 1;
    if (order > kMaxResidueOrder) throw TooLarge("p^m - 1 above the supported range");
    Poly x = Poly::monomial(f.modulus(), 1);
    Poly one(f.modulus(), {1});
    if (x.pow_mod(std::uint64_t(order), f) != one) return false;
    for (std::int64_t ell : prime_factors(order))
        if (x.pow_mod(std::uint64_t(order / ell), f) == one) return false;
    return true;
}

std::string to_string(PolyClass c) {
    switch (c) {
        case PolyClass::NotMonic: return "NotMonic";
        case PolyClass::Reducible: return "Reducible";
        case PolyClass::BasicIrreducible: return "BasicIrreducible";
        case PolyClass::BasicPrimitive: return "BasicPrimitive";
    }
    return "?";
}

PolyClass classify(const Poly& g) {
    if (!g.is_monic()) return PolyClass::NotMonic;
    Poly mu = reduce_mod_p(g);
    if (!is_irreducible_mod_p(mu)) return PolyClass::Reducible;
    return is_primitive_mod_p(mu) ? PolyClass::BasicPrimitive : PolyClass::BasicIrreducible;
}

Poly hensel_lift_primitive(const Poly& pi, std::int64_t r) {
    if (pi.modulus().r() != 1) throw BadArgument("the polynomial to lift must live over F_p");
    if (!is_primitive_mod_p(pi)) throw BadArgument("hensel lift needs a primitive polynomial");
    if (r < 1) throw BadArgument("lift exponent must be >= 1");
    std::int64_t p = pi.modulus().p();
    std::int64_t m = pi.degree();
    std::int64_t order = checked_pow_i64(p, m) - 1;

    ZrModulus target(p, r);
    Poly f = Poly::x_power_minus_one(target, order);
    Poly h(target, pi.coeffs());
    if (r > 1) {
        // Bezout data over F_p for the factor pair (cofactor, pi).
        Poly fp_f = Poly::x_power_minus_one(pi.modulus(), order);
        auto [cof, cof_rem] = fp_f.divmod(pi);
        if (!cof_rem.is_zero())
            throw InternalCheckFailure("primitive polynomial does not divide x^(p^m-1)-1 mod p");
        PolyEgcd eg = poly_egcd(cof, pi);
        if (eg.g.degree() != 0)
            throw InternalCheckFailure("factor pair of x^(p^m-1)-1 is not coprime mod p");

        std::int64_t pk = 1;
        for (std::int64_t k = 1; k < r; ++k) {
            pk *= p;
            auto [quot, rem] = f.divmod(h);
            (void)quot;
            // rem vanishes mod p^k; peel one digit and correct h by p^k * b
            // with b = (s * rem/p^k) mod pi over F_p.
            std::vector<std::int64_t> eps(std::size_t(rem.degree() + 1), 0);
            for (int i = 0; i <= rem.degree(); ++i) {
                std::int64_t c = rem.coeff(i);
                if (c % pk != 0)
                    throw InternalCheckFailure("factor refinement lost divisibility by p^k");
                eps[std::size_t(i)] = (c / pk) % p;
            }
            Poly e(pi.modulus(), eps);
            Poly b = (eg.s * e).mod(pi);
            Poly corr(target, b.coeffs());
            h = h + corr.scaled(pk);
        }
    }

    // Exact verification of the lift.
    if (!h.is_monic() || reduce_mod_p(h) != pi)
        throw InternalCheckFailure("lifted polynomial lost monicity or its reduction");
    if (!f.mod(h).is_zero())
        throw InternalCheckFailure("lifted polynomial does not divide x^(p^m-1)-1");
    if (classify(h) != PolyClass::BasicPrimitive)
        throw InternalCheckFailure("lifted polynomial is not basic primitive");
    return h;
}

Poly find_basic_primitive(std::int64_t p, std::int64_t r, std::int64_t m) {
    ZrModulus fp(p, 1);
    if (m < 1) throw BadArgument("degree must be >= 1");
    std::int64_t count = checked_pow_i64(p, m);
    if (count - 1 > kMaxResidueOrder) throw TooLarge("p^m - 1 above the supported range");
    for (std::int64_t idx = 0; idx < count; ++idx) {
        Poly cand = monic_by_index(fp, m, idx);
        if (!is_irreducible_mod_p(cand)) continue;
        if (is_primitive_mod_p(cand))
            return r == 1 ? cand : hensel_lift_primitive(cand, r);
    }
    throw InternalCheckFailure("no primitive polynomial of the requested degree");
}

}  // namespace grbasis
