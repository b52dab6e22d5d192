// grtool: command-line front end for Galois-ring basis and weight computations.
//
// Subcommands: ring info|trace-table|teichmuller, basis check|dual|report|
// normal-search|self-dual-search, weight table|prop-check|homogeneity-check,
// code image|stats|lemma3.
//
// Exit codes: 0 success, 1 usage/parse error, 2 mathematical negative
// (non-basis input, failed identity check, guard exceeded, ...).

#include <iostream>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "grbasis/bases.hpp"
#include "grbasis/codes.hpp"
#include "grbasis/format.hpp"

using json = nlohmann::ordered_json;
using namespace grbasis;

namespace {

struct Options {
    std::string ring_spec;
    std::string modulus_poly;
    std::string basis_literal;
    std::string gen_literal;
    bool as_json = false;
    std::int64_t guard = kDefaultEnumerationGuard;
    std::int64_t seed = 0;
    std::int64_t limit = 0;
    std::int64_t random_bases = 0;
};

void add_ring_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("--ring", opt.ring_spec, "Ring spec, e.g. GR(p=2,r=2,m=2) or GR(...;h=1,1,1)")
        ->required();
    cmd->add_option("--modulus-poly", opt.modulus_poly,
                    "Modulus polynomial coefficients (ascending), overrides h from --ring");
    cmd->add_flag("--json", opt.as_json, "Emit a JSON report");
}

GaloisRingPtr make_ring(const Options& opt) {
    return parse_ring_spec(opt.ring_spec, opt.modulus_poly);
}

Basis make_basis(const GaloisRingPtr& ring, const Options& opt) {
    if (opt.basis_literal.empty()) return Basis::polynomial(ring);
    return Basis::from_elements(parse_basis_elements(ring, opt.basis_literal));
}

json elems_to_json(const std::vector<GrElem>& elems) {
    json arr = json::array();
    for (const auto& e : elems) {
        json coeffs = json::array();
        for (std::int64_t c : e.coeffs()) coeffs.push_back(c);
        arr.push_back(std::move(coeffs));
    }
    return arr;
}

std::string elems_literal(const std::vector<GrElem>& elems) {
    std::string out;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        if (i) out += ';';
        out += elems[i].literal();
    }
    return out;
}

void emit(const Options& opt, const json& report, const std::string& text) {
    if (opt.as_json) {
        json with_schema;
        with_schema["schema"] = 1;
        for (const auto& [key, value] : report.items()) with_schema[key] = value;
        std::cout << with_schema.dump() << "\n";
    } else {
        std::cout << text;
    }
}

// ---------------------------------------------------------------------------

int cmd_ring_info(const Options& opt) {
    auto ring = make_ring(opt);
    json j;
    j["ring"] = ring->spec_string();
    j["p"] = ring->p();
    j["r"] = ring->r();
    j["m"] = ring->m();
    j["h"] = ring->modulus().literal();
    j["h_pretty"] = ring->modulus().str();
    j["characteristic"] = ring->characteristic();
    j["size"] = ring->size();
    j["units"] = ring->unit_count();
    json ideals = json::array();
    for (std::int64_t s : ring->ideal_sizes()) ideals.push_back(s);
    j["ideal_sizes"] = ideals;
    auto teich = ring->teichmuller_set();
    json tj = json::array();
    for (const auto& t : teich) tj.push_back(t.literal());
    j["teichmuller"] = tj;

    std::string text;
    text += "ring: " + ring->spec_string() + "\n";
    text += "p: " + std::to_string(ring->p()) + "\n";
    text += "r: " + std::to_string(ring->r()) + "\n";
    text += "m: " + std::to_string(ring->m()) + "\n";
    text += "h: " + ring->modulus().literal() + " (" + ring->modulus().str() + ")\n";
    text += "characteristic: " + std::to_string(ring->characteristic()) + "\n";
    text += "size: " + std::to_string(ring->size()) + "\n";
    text += "units: " + std::to_string(ring->unit_count()) + "\n";
    text += "ideal sizes:";
    for (std::int64_t s : ring->ideal_sizes()) text += " " + std::to_string(s);
    text += "\nteichmuller: " + elems_literal(teich) + "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_trace_table(const Options& opt) {
    auto ring = make_ring(opt);
    json entries = json::array();
    std::string text;
    for (std::int64_t i = 0; i < ring->size(); ++i) {
        GrElem z = ring->element_at(i);
        std::int64_t t = z.trace().value();
        entries.push_back(json{{"element", z.literal()}, {"trace", t}});
        text += z.literal() + " -> " + std::to_string(t) + "\n";
    }
    json j;
    j["ring"] = ring->spec_string();
    j["entries"] = entries;
    emit(opt, j, text);
    return 0;
}

int cmd_teichmuller(const Options& opt) {
    auto ring = make_ring(opt);
    auto teich = ring->teichmuller_set();
    json j;
    j["ring"] = ring->spec_string();
    json tj = json::array();
    std::string text;
    for (const auto& t : teich) {
        tj.push_back(t.literal());
        text += t.literal() + "\n";
    }
    j["teichmuller"] = tj;
    emit(opt, j, text);
    return 0;
}

int cmd_basis_check(const Options& opt) {
    auto ring = make_ring(opt);
    if (opt.basis_literal.empty()) throw BadArgument("--basis is required for basis check");
    bool ok = true;
    try {
        Basis::from_elements(parse_basis_elements(ring, opt.basis_literal));
    } catch (const NotABasis&) {
        ok = false;
    }
    json j;
    j["ring"] = ring->spec_string();
    j["is_basis"] = ok;
    emit(opt, j, std::string("basis: ") + (ok ? "true" : "false") + "\n");
    return ok ? 0 : 2;
}

int cmd_basis_dual(const Options& opt) {
    auto ring = make_ring(opt);
    Basis b = make_basis(ring, opt);
    Basis dual = dual_basis(b);
    json j;
    j["ring"] = ring->spec_string();
    j["basis"] = elems_to_json(b.elements());
    j["dual"] = elems_to_json(dual.elements());
    j["dual_literal"] = dual.literal();
    emit(opt, j, elems_to_json(dual.elements()).dump() + "\n");
    return 0;
}

int cmd_basis_report(const Options& opt) {
    auto ring = make_ring(opt);
    std::vector<GrElem> candidates = opt.basis_literal.empty()
                                         ? Basis::polynomial(ring).elements()
                                         : parse_basis_elements(ring, opt.basis_literal);
    BasisReport rep = basis_report(candidates);
    json j;
    j["ring"] = ring->spec_string();
    j["is_basis"] = rep.is_basis;
    std::string text = std::string("is_basis: ") + (rep.is_basis ? "true" : "false") + "\n";
    if (rep.is_basis) {
        j["det_b"] = rep.det_b->literal();
        j["det_b_squared"] = rep.det_b_squared->value();
        j["self_dual"] = *rep.self_dual;
        j["normal"] = *rep.normal;
        j["dual"] = elems_to_json(rep.dual->elements());
        j["dual_literal"] = rep.dual->literal();
        text += "det_b: " + rep.det_b->literal() + " (" + rep.det_b->str() + ")\n";
        text += "det_b_squared: " + std::to_string(rep.det_b_squared->value()) + "\n";
        text += std::string("self_dual: ") + (*rep.self_dual ? "true" : "false") + "\n";
        text += std::string("normal: ") + (*rep.normal ? "true" : "false") + "\n";
        text += "dual: " + rep.dual->literal() + "\n";
    }
    emit(opt, j, text);
    return rep.is_basis ? 0 : 2;
}

int cmd_normal_search(const Options& opt) {
    auto ring = make_ring(opt);
    auto gens = normal_basis_generators(ring, opt.limit, opt.guard);
    json j;
    j["ring"] = ring->spec_string();
    json arr = json::array();
    std::string text;
    for (const auto& g : gens) {
        arr.push_back(g.literal());
        text += g.literal() + "\n";
    }
    j["generators"] = arr;
    j["count"] = gens.size();
    text += "count: " + std::to_string(gens.size()) + "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_self_dual_search(const Options& opt) {
    auto ring = make_ring(opt);
    auto bases = self_dual_bases(ring, opt.guard);
    json j;
    j["ring"] = ring->spec_string();
    json arr = json::array();
    std::string text;
    for (const auto& b : bases) {
        arr.push_back(elems_to_json(b.elements()));
        text += b.literal() + "\n";
    }
    j["bases"] = arr;
    j["count"] = bases.size();
    text += "count: " + std::to_string(bases.size()) + "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_weight_table(const Options& opt) {
    auto ring = make_ring(opt);
    json j;
    j["ring"] = ring->spec_string();
    j["gamma"] = gamma_value(ring).str();
    json entries = json::array();
    std::string text;
    for (std::int64_t i = 0; i < ring->size(); ++i) {
        GrElem z = ring->element_at(i);
        Rational w = homogeneous_weight(z);
        entries.push_back(json{{"element", z.literal()}, {"weight", w.str()}});
        text += z.literal() + " -> " + w.str() + "\n";
    }
    j["entries"] = entries;
    emit(opt, j, text);
    return 0;
}

int cmd_prop_check(const Options& opt) {
    auto ring = make_ring(opt);
    Basis b = make_basis(ring, opt);
    WeightSumCheck check = proposition_sum(ring, b, opt.guard);
    bool all_ok = check.ok;
    std::int64_t bases_checked = 1;
    if (opt.random_bases > 0) {
        std::mt19937_64 rng(static_cast<std::uint64_t>(opt.seed));
        for (std::int64_t i = 0; i < opt.random_bases; ++i) {
            Basis rb = random_basis(ring, rng);
            WeightSumCheck c2 = proposition_sum(ring, rb, opt.guard);
            all_ok = all_ok && c2.ok && c2.computed == check.computed;
            ++bases_checked;
        }
    }
    json j;
    j["computed"] = check.computed;
    j["expected"] = check.expected;
    j["ok"] = all_ok;
    if (opt.random_bases > 0) j["bases_checked"] = bases_checked;
    emit(opt, j, j.dump() + "\n");
    return all_ok ? 0 : 2;
}

int cmd_homogeneity_check(const Options& opt) {
    auto ring = make_ring(opt);
    bool ok = homogeneity_check(ring, opt.guard);
    json j;
    j["ring"] = ring->spec_string();
    j["gamma"] = gamma_value(ring).str();
    j["ok"] = ok;
    std::string text = std::string("ok: ") + (ok ? "true" : "false") + "\n" +
                       "gamma: " + gamma_value(ring).str() + "\n";
    emit(opt, j, text);
    return ok ? 0 : 2;
}

LinearCode make_code(const GaloisRingPtr& ring, const Options& opt) {
    if (opt.gen_literal.empty()) throw BadArgument("--gen is required for code subcommands");
    return LinearCode(parse_gr_matrix(ring, opt.gen_literal));
}

int cmd_code_image(const Options& opt) {
    auto ring = make_ring(opt);
    Basis b = make_basis(ring, opt);
    ZrCode img = image_code(make_code(ring, opt), b, opt.guard);
    json j;
    j["ring"] = ring->spec_string();
    j["basis"] = b.literal();
    j["length"] = img.length;
    j["count"] = img.words.size();
    json words = json::array();
    std::string text;
    for (const auto& word : img.words) {
        json wj = json::array();
        std::string line;
        for (std::size_t i = 0; i < word.size(); ++i) {
            wj.push_back(word[i].value());
            if (i) line += ',';
            line += std::to_string(word[i].value());
        }
        words.push_back(std::move(wj));
        text += line + "\n";
    }
    j["words"] = words;
    emit(opt, j, text);
    return 0;
}

int cmd_code_stats(const Options& opt) {
    auto ring = make_ring(opt);
    Basis b = make_basis(ring, opt);
    WeightStats stats = code_weight_stats(make_code(ring, opt), b, opt.guard);
    json j;
    j["ring"] = ring->spec_string();
    j["basis"] = b.literal();
    j["sum"] = stats.sum;
    if (stats.min_nonzero) j["min_nonzero"] = *stats.min_nonzero;
    json dist;
    for (const auto& [w, count] : stats.distribution) dist[std::to_string(w)] = count;
    j["distribution"] = dist;
    std::string text = "sum: " + std::to_string(stats.sum) + "\n";
    if (stats.min_nonzero) text += "min_nonzero: " + std::to_string(*stats.min_nonzero) + "\n";
    text += "distribution:";
    for (const auto& [w, count] : stats.distribution)
        text += " " + std::to_string(w) + ":" + std::to_string(count);
    text += "\n";
    emit(opt, j, text);
    return 0;
}

int cmd_code_lemma3(const Options& opt) {
    auto ring = make_ring(opt);
    Basis b = make_basis(ring, opt);
    AverageWeightIdentity res = lemma3_check(image_code(make_code(ring, opt), b, opt.guard));
    json j;
    j["lhs"] = res.lhs.str();
    j["rhs"] = res.rhs.str();
    j["ok"] = res.ok;
    emit(opt, j, j.dump() + "\n");
    return res.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Galois ring GR(p^r, m) bases, duals, homogeneous weights and code images"};
    app.require_subcommand(1);
    Options opt;
    int rc = 0;
    auto wire = [&](CLI::App* cmd, int (*fn)(const Options&)) {
        cmd->callback([&, fn] { rc = fn(opt); });
    };

    CLI::App* ring = app.add_subcommand("ring", "Ring structure");
    ring->require_subcommand(1);
    {
        CLI::App* c = ring->add_subcommand("info", "Structure constants and Teichmuller set");
        add_ring_flags(c, opt);
        wire(c, cmd_ring_info);
        c = ring->add_subcommand("trace-table", "Trace of every ring element");
        add_ring_flags(c, opt);
        wire(c, cmd_trace_table);
        c = ring->add_subcommand("teichmuller", "List the Teichmuller representatives");
        add_ring_flags(c, opt);
        wire(c, cmd_teichmuller);
    }

    CLI::App* basis = app.add_subcommand("basis", "Basis checks, duals and searches");
    basis->require_subcommand(1);
    {
        CLI::App* c = basis->add_subcommand("check", "Is the given element list a basis?");
        add_ring_flags(c, opt);
        c->add_option("--basis", opt.basis_literal, "Basis literal, e.g. 1,0;0,1")->required();
        wire(c, cmd_basis_check);

        c = basis->add_subcommand("dual", "Trace-dual basis (defaults to the polynomial basis)");
        add_ring_flags(c, opt);
        c->add_option("--basis", opt.basis_literal, "Basis literal, e.g. 1,0;0,1");
        wire(c, cmd_basis_dual);

        c = basis->add_subcommand("report", "Determinant, self-dual/normal flags and dual");
        add_ring_flags(c, opt);
        c->add_option("--basis", opt.basis_literal, "Basis literal, e.g. 1,0;0,1");
        wire(c, cmd_basis_report);

        c = basis->add_subcommand("normal-search", "Find normal basis generators");
        add_ring_flags(c, opt);
        c->add_option("--limit", opt.limit, "Stop after this many generators (0 = all)");
        c->add_option("--guard", opt.guard, "Enumeration guard override");
        wire(c, cmd_normal_search);

        c = basis->add_subcommand("self-dual-search", "Find all self-dual bases");
        add_ring_flags(c, opt);
        c->add_option("--guard", opt.guard, "Search step guard override");
        wire(c, cmd_self_dual_search);
    }

    CLI::App* weight = app.add_subcommand("weight", "Homogeneous weight");
    weight->require_subcommand(1);
    {
        CLI::App* c = weight->add_subcommand("table", "Weight of every ring element");
        add_ring_flags(c, opt);
        wire(c, cmd_weight_table);

        c = weight->add_subcommand("prop-check",
                                   "Weight sum of the full single-symbol image vs m(p-1)p^{rm+r-2}");
        add_ring_flags(c, opt);
        c->add_option("--basis", opt.basis_literal, "Basis literal (default: polynomial basis)");
        c->add_option("--random-bases", opt.random_bases, "Additionally check N random bases");
        c->add_option("--seed", opt.seed, "Seed for --random-bases");
        c->add_option("--guard", opt.guard, "Enumeration guard override");
        wire(c, cmd_prop_check);

        c = weight->add_subcommand("homogeneity-check", "Verify both homogeneity axioms");
        add_ring_flags(c, opt);
        c->add_option("--guard", opt.guard, "Enumeration guard override");
        wire(c, cmd_homogeneity_check);
    }

    CLI::App* code = app.add_subcommand("code", "Linear codes over the ring");
    code->require_subcommand(1);
    {
        CLI::App* c = code->add_subcommand("image", "Coordinate image of the code");
        add_ring_flags(c, opt);
        c->add_option("--gen", opt.gen_literal, "Generator matrix, e.g. 1,0;0,1|0,1;1,1")
            ->required();
        c->add_option("--basis", opt.basis_literal, "Basis literal (default: polynomial basis)");
        c->add_option("--guard", opt.guard, "Enumeration guard override");
        wire(c, cmd_code_image);

        c = code->add_subcommand("stats", "Weight statistics of the image code");
        add_ring_flags(c, opt);
        c->add_option("--gen", opt.gen_literal, "Generator matrix")->required();
        c->add_option("--basis", opt.basis_literal, "Basis literal (default: polynomial basis)");
        c->add_option("--guard", opt.guard, "Enumeration guard override");
        wire(c, cmd_code_stats);

        c = code->add_subcommand("lemma3", "Average weight vs Gamma * support size for the image");
        add_ring_flags(c, opt);
        c->add_option("--gen", opt.gen_literal, "Generator matrix")->required();
        c->add_option("--basis", opt.basis_literal, "Basis literal (default: polynomial basis)");
        c->add_option("--guard", opt.guard, "Enumeration guard override");
        wire(c, cmd_code_lemma3);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const BadArgument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
