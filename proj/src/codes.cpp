#include "grbasis/codes.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

namespace grbasis {

Rational gamma_value(const GaloisRingPtr& ring) {
    Rational pm1(ring->residue_size() - 1);
    return pm1 * Rational::pow(ring->p(), ring->m() * (ring->r() - 2));
}

Rational gamma_value(const ZrModulus& mod) {
    return Rational(mod.p() - 1) * Rational::pow(mod.p(), mod.r() - 2);
}

namespace {

bool in_minimal_ideal(const GrElem& z) {
    std::int64_t pr1 = z.ring()->characteristic() / z.ring()->p();  // p^{r-1}
    for (std::int64_t c : z.coeffs())
        if (c % pr1 != 0) return false;
    return true;
}

}  // namespace

Rational homogeneous_weight(const GrElem& z) {
    const auto& ring = z.ring();
    if (z.is_zero()) return Rational(0);
    if (in_minimal_ideal(z)) return Rational::pow(ring->p(), ring->m() * (ring->r() - 1));
    Rational w = Rational(ring->residue_size() - 1) *
                 Rational::pow(ring->p(), ring->m() * (ring->r() - 2));
    if (!w.is_integer()) throw InternalCheckFailure("non-integer weight outside the r=1 case");
    return w;
}

Rational homogeneous_weight(const ZrElem& a) {
    const ZrModulus& mod = a.modulus();
    if (a.value() == 0) return Rational(0);
    std::int64_t pr1 = mod.value() / mod.p();
    if (a.value() % pr1 == 0) return Rational::pow(mod.p(), mod.r() - 1);
    Rational w = Rational(mod.p() - 1) * Rational::pow(mod.p(), mod.r() - 2);
    if (!w.is_integer()) throw InternalCheckFailure("non-integer weight outside the r=1 case");
    return w;
}

Rational homogeneous_weight(const std::vector<ZrElem>& word) {
    Rational sum(0);
    for (const auto& a : word) sum += homogeneous_weight(a);
    return sum;
}

Rational homogeneous_weight(const std::vector<GrElem>& word) {
    Rational sum(0);
    for (const auto& z : word) sum += homogeneous_weight(z);
    return sum;
}

HomWeightParams HomWeightParams::make(const GaloisRingPtr& ring, bool normalized) {
    return HomWeightParams{ring, gamma_value(ring), normalized};
}

Rational HomWeightParams::weight(const GrElem& z) const {
    if (*z.ring() != *ring) throw RingMismatch("element belongs to a different ring");
    Rational w = homogeneous_weight(z);
    return normalized ? w / gamma : w;
}

double homogeneous_weight_by_character(const GrElem& z, std::int64_t guard) {
    const auto& ring = z.ring();
    if (ring->size() > guard)
        throw TooLarge("unit-group enumeration over " + std::to_string(ring->size()) +
                       " elements exceeds the guard " + std::to_string(guard));
    const double two_pi_over_q =
        2.0 * std::numbers::pi / static_cast<double>(ring->characteristic());
    std::complex<double> sum = 0.0;
    std::int64_t units = 0;
    std::size_t last = std::size_t(ring->m()) - 1;
    for (std::int64_t idx = 0; idx < ring->size(); ++idx) {
        GrElem u = ring->element_at(idx);
        if (!u.is_unit()) continue;
        ++units;
        double b = static_cast<double>((z * u).coeffs()[last]);
        sum += std::polar(1.0, two_pi_over_q * b);
    }
    double gamma = gamma_value(ring).to_double();
    return gamma * (1.0 - sum.real() / static_cast<double>(units));
}

bool homogeneity_check(const GaloisRingPtr& ring, std::int64_t guard) {
    if (ring->size() > guard)
        throw TooLarge("ring has " + std::to_string(ring->size()) +
                       " elements, above the enumeration guard " + std::to_string(guard));
    Rational gamma = gamma_value(ring);
    // Group the nonzero elements by the principal ideal they generate.
    std::map<std::vector<std::int64_t>, std::vector<std::int64_t>> by_ideal;
    for (std::int64_t xi = 1; xi < ring->size(); ++xi) {
        GrElem x = ring->element_at(xi);
        std::vector<std::int64_t> ideal;
        ideal.reserve(std::size_t(ring->size()));
        for (std::int64_t si = 0; si < ring->size(); ++si)
            ideal.push_back(ring->index_of(ring->element_at(si) * x));
        std::sort(ideal.begin(), ideal.end());
        ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
        by_ideal[std::move(ideal)].push_back(xi);
    }
    for (const auto& [ideal, generators] : by_ideal) {
        Rational w0 = homogeneous_weight(ring->element_at(generators.front()));
        for (std::int64_t g : generators)
            if (homogeneous_weight(ring->element_at(g)) != w0) return false;
        Rational total(0);
        for (std::int64_t yi : ideal) total += homogeneous_weight(ring->element_at(yi));
        if (total != gamma * Rational(static_cast<std::int64_t>(ideal.size()))) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Codes

LinearCode::LinearCode(GrMatrix gen) : generator(std::move(gen)) {
    if (generator.rows() == 0 || generator.cols() == 0)
        throw BadArgument("generator matrix must be nonempty");
}

namespace {

std::vector<std::int64_t> word_key(const GaloisRingPtr& ring, const std::vector<GrElem>& word) {
    std::vector<std::int64_t> key;
    key.reserve(word.size());
    for (const auto& s : word) key.push_back(ring->index_of(s));
    return key;
}

}  // namespace

std::vector<std::vector<GrElem>> code_enumerate(const LinearCode& code, std::int64_t guard) {
    const GaloisRingPtr& ring = code.ring();
    std::int64_t messages = 1;
    for (int i = 0; i < code.k(); ++i) {
        if (messages > guard / ring->size())
            throw TooLarge("code enumeration exceeds the guard of " + std::to_string(guard) +
                           " messages");
        messages *= ring->size();
    }
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<GrElem>>> seen;
    std::vector<GrElem> msg(std::size_t(code.k()), ring->zero());
    for (std::int64_t t = 0; t < messages; ++t) {
        std::int64_t rem = t;
        for (int i = 0; i < code.k(); ++i) {
            msg[std::size_t(i)] = ring->element_at(rem % ring->size());
            rem /= ring->size();
        }
        std::vector<GrElem> word(std::size_t(code.n()), ring->zero());
        for (int j = 0; j < code.n(); ++j) {
            GrElem acc = ring->zero();
            for (int i = 0; i < code.k(); ++i)
                acc = acc + msg[std::size_t(i)] * code.generator.at(i, j);
            word[std::size_t(j)] = acc;
        }
        seen.emplace_back(word_key(ring, word), std::move(word));
    }
    std::sort(seen.begin(), seen.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<GrElem>> out;
    for (auto& [key, word] : seen) {
        if (!out.empty() && word_key(ring, out.back()) == key) continue;
        out.push_back(std::move(word));
    }
    return out;
}

std::vector<ZrElem> tau_image(const std::vector<GrElem>& word, const Basis& basis) {
    std::vector<ZrElem> out;
    out.reserve(word.size() * std::size_t(basis.size()));
    for (const auto& symbol : word) {
        std::vector<ZrElem> coords = basis.coordinates(symbol);
        out.insert(out.end(), coords.begin(), coords.end());
    }
    return out;
}

namespace {

std::vector<std::int64_t> zr_word_key(const std::vector<ZrElem>& word) {
    std::vector<std::int64_t> key;
    key.reserve(word.size());
    for (const auto& a : word) key.push_back(a.value());
    return key;
}

ZrCode dedup_sorted(ZrModulus mod, std::int64_t length,
                    std::vector<std::vector<ZrElem>> words) {
    std::vector<std::pair<std::vector<std::int64_t>, std::vector<ZrElem>>> keyed;
    keyed.reserve(words.size());
    for (auto& w : words) keyed.emplace_back(zr_word_key(w), std::move(w));
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    ZrCode out{mod, length, {}};
    for (auto& [key, word] : keyed) {
        if (!out.words.empty() && zr_word_key(out.words.back()) == key) continue;
        out.words.push_back(std::move(word));
    }
    return out;
}

}  // namespace

ZrCode zr_code_from_generator(const ZrMatrix& gen, std::int64_t guard) {
    if (gen.rows() == 0 || gen.cols() == 0) throw BadArgument("generator matrix must be nonempty");
    const ZrModulus& mod = gen.modulus();
    std::int64_t q = mod.value();
    std::int64_t messages = 1;
    for (int i = 0; i < gen.rows(); ++i) {
        if (messages > guard / q)
            throw TooLarge("code enumeration exceeds the guard of " + std::to_string(guard) +
                           " messages");
        messages *= q;
    }
    std::vector<std::vector<ZrElem>> words;
    words.reserve(std::size_t(messages));
    for (std::int64_t t = 0; t < messages; ++t) {
        std::int64_t rem = t;
        std::vector<ZrElem> word(std::size_t(gen.cols()), ZrElem(mod, 0));
        for (int i = 0; i < gen.rows(); ++i) {
            ZrElem mi(mod, rem % q);
            rem /= q;
            for (int j = 0; j < gen.cols(); ++j)
                word[std::size_t(j)] = word[std::size_t(j)] + mi * gen.at(i, j);
        }
        words.push_back(std::move(word));
    }
    return dedup_sorted(mod, gen.cols(), std::move(words));
}

ZrCode image_code(const LinearCode& code, const Basis& basis, std::int64_t guard) {
    if (*code.ring() != *basis.ring())
        throw RingMismatch("code and basis belong to different rings");
    std::vector<std::vector<ZrElem>> words;
    for (const auto& word : code_enumerate(code, guard)) words.push_back(tau_image(word, basis));
    return dedup_sorted(code.ring()->zr(), code.n() * basis.ring()->m(), std::move(words));
}

AverageWeightIdentity lemma3_check(const ZrCode& code) {
    if (code.words.empty()) throw BadArgument("code has no words");
    Rational total(0);
    std::vector<bool> support(std::size_t(code.length), false);
    for (const auto& word : code.words) {
        total += homogeneous_weight(word);
        for (std::size_t i = 0; i < word.size(); ++i)
            if (word[i].value() != 0) support[i] = true;
    }
    std::int64_t support_size = std::count(support.begin(), support.end(), true);
    AverageWeightIdentity out;
    out.lhs = total / Rational(static_cast<std::int64_t>(code.words.size()));
    out.rhs = gamma_value(code.mod) * Rational(support_size);
    out.ok = (out.lhs == out.rhs);
    return out;
}

WeightSumCheck proposition_sum(const GaloisRingPtr& ring, const Basis& basis,
                               std::int64_t guard) {
    if (*ring != *basis.ring()) throw RingMismatch("basis belongs to a different ring");
    if (ring->size() > guard)
        throw TooLarge("ring has " + std::to_string(ring->size()) +
                       " elements, above the enumeration guard " + std::to_string(guard));
    Rational total(0);
    for (std::int64_t idx = 0; idx < ring->size(); ++idx)
        total += homogeneous_weight(tau_image({ring->element_at(idx)}, basis));
    WeightSumCheck out;
    if (!total.is_integer()) throw InternalCheckFailure("weight sum is not an integer");
    out.computed = total.num();
    // m(p-1)p^{rm+r-2}; the r = 1 case reduces to m(p-1)p^{m-1}.
    std::int64_t exponent = ring->r() * ring->m() + ring->r() - 2;
    out.expected = ring->m() * (ring->p() - 1) * checked_pow_i64(ring->p(), exponent);
    out.ok = (out.computed == out.expected);
    return out;
}

namespace {

WeightStats stats_from_weights(const std::vector<Rational>& weights) {
    WeightStats out;
    for (const Rational& w : weights) {
        if (!w.is_integer()) throw InternalCheckFailure("non-integer codeword weight");
        std::int64_t v = w.num();
        out.sum += v;
        out.distribution[v] += 1;
        if (v > 0 && (!out.min_nonzero || v < *out.min_nonzero)) out.min_nonzero = v;
    }
    return out;
}

}  // namespace

WeightStats code_weight_stats(const ZrCode& code) {
    std::vector<Rational> weights;
    weights.reserve(code.words.size());
    for (const auto& word : code.words) weights.push_back(homogeneous_weight(word));
    return stats_from_weights(weights);
}

WeightStats code_weight_stats(const LinearCode& code, const Basis& basis, std::int64_t guard) {
    return code_weight_stats(image_code(code, basis, guard));
}

}  // namespace grbasis
