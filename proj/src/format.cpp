#include "grbasis/format.hpp"

#include <algorithm>
#include <cctype>

namespace grbasis {

namespace {

std::string trim(const std::string& s) {
    auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
    auto begin = std::find_if_not(s.begin(), s.end(), is_space);
    auto end = std::find_if_not(s.rbegin(), s.rend(), is_space).base();
    return begin < end ? std::string(begin, end) : std::string();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            out.push_back(s.substr(start));
            return out;
        }
        out.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

}  // namespace

std::int64_t parse_i64(const std::string& s) {
    std::string t = trim(s);
    if (t.empty()) throw ParseError("expected an integer, got an empty string");
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception&) {
        throw ParseError("not an integer: '" + t + "'");
    }
    if (used != t.size()) throw ParseError("trailing characters after integer: '" + t + "'");
    return v;
}

std::vector<std::int64_t> parse_int_list(const std::string& s) {
    std::vector<std::int64_t> out;
    for (const std::string& part : split(s, ',')) out.push_back(parse_i64(part));
    return out;
}

Poly parse_poly(const ZrModulus& mod, const std::string& s) {
    return Poly(mod, parse_int_list(s));
}

GaloisRingPtr parse_ring_spec(const std::string& spec, const std::string& modulus_override) {
    std::string t = trim(spec);
    if (t.size() < 4 || t.substr(0, 3) != "GR(" || t.back() != ')')
        throw ParseError("ring spec must look like GR(p=2,r=2,m=3[;h=...]): '" + spec + "'");
    std::string inner = t.substr(3, t.size() - 4);
    std::vector<std::string> segments = split(inner, ';');
    if (segments.empty() || segments.size() > 2)
        throw ParseError("ring spec has too many ';' segments: '" + spec + "'");

    std::int64_t p = -1, r = -1, m = -1;
    for (const std::string& field : split(segments[0], ',')) {
        std::vector<std::string> kv = split(field, '=');
        if (kv.size() != 2) throw ParseError("expected key=value in ring spec, got '" + field + "'");
        std::string key = trim(kv[0]);
        std::int64_t value = parse_i64(kv[1]);
        if (key == "p") p = value;
        else if (key == "r") r = value;
        else if (key == "m") m = value;
        else throw ParseError("unknown ring spec key '" + key + "'");
    }
    if (p < 0 || r < 0 || m < 0)
        throw ParseError("ring spec must set p, r and m: '" + spec + "'");

    std::string h_literal;
    if (segments.size() == 2) {
        std::vector<std::string> kv = split(segments[1], '=');
        if (kv.size() != 2 || trim(kv[0]) != "h")
            throw ParseError("second ring spec segment must be h=...: '" + spec + "'");
        h_literal = kv[1];
    }
    if (!modulus_override.empty()) h_literal = modulus_override;

    try {
        if (h_literal.empty()) return GaloisRing::make(p, r, m);
        ZrModulus mod(p, r);
        return GaloisRing::make(p, r, m, parse_poly(mod, h_literal));
    } catch (const ParseError&) {
        throw;
    } catch (const Error& e) {
        throw ParseError("invalid ring spec '" + spec + "': " + e.what());
    }
}

GrElem parse_element(const GaloisRingPtr& ring, const std::string& s) {
    std::vector<std::int64_t> coeffs = parse_int_list(s);
    if (static_cast<std::int64_t>(coeffs.size()) > ring->m())
        throw ParseError("element literal has " + std::to_string(coeffs.size()) +
                         " coefficients, ring degree is " + std::to_string(ring->m()));
    return ring->element(coeffs);
}

std::vector<GrElem> parse_basis_elements(const GaloisRingPtr& ring, const std::string& s) {
    std::vector<GrElem> out;
    for (const std::string& part : split(s, ';')) out.push_back(parse_element(ring, part));
    return out;
}

GrMatrix parse_gr_matrix(const GaloisRingPtr& ring, const std::string& s) {
    std::vector<std::string> row_strs = split(s, '|');
    std::vector<std::vector<GrElem>> rows;
    for (const std::string& row : row_strs) {
        std::vector<GrElem> entries;
        for (const std::string& entry : split(row, ';'))
            entries.push_back(parse_element(ring, entry));
        if (!rows.empty() && entries.size() != rows.front().size())
            throw ParseError("matrix rows have unequal lengths");
        rows.push_back(std::move(entries));
    }
    GrMatrix out(ring, static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j)
            out.set(static_cast<int>(i), static_cast<int>(j), rows[i][j]);
    return out;
}

}  // namespace grbasis
