/*
   Copyright 2026 The addix Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "addix/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "addix/additive_index.hpp"
#include "addix/analysis.hpp"
#include "addix/charsum.hpp"
#include "addix/error.hpp"
#include "addix/parallel.hpp"
#include "addix/sampling.hpp"
#include "addix/verify.hpp"

namespace addix::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSweepSchema = "# addix charsum sweep v1";

struct Common {
    std::string field;
    std::string format = "json";
    unsigned threads = 0;
};

std::uint64_t env_cap() {
    const char* v = std::getenv("ADDIX_MAX_Q");
    if (!v || !*v) return Field::kMaxOrder;
    std::uint64_t cap = 0;
    std::string s(v);
    std::size_t used = 0;
    try {
        cap = std::stoull(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != s.size() || cap == 0) throw ParseError("ADDIX_MAX_Q must be a positive integer");
    return std::min<std::uint64_t>(cap, Field::kMaxOrder);
}

FieldPtr load_field(const std::string& spec) { return Field::parse(spec, env_cap()); }

std::vector<std::uint32_t> parse_codes(const std::string& text) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        const auto b = tok.find_first_not_of(" \t");
        const auto e = tok.find_last_not_of(" \t");
        if (b == std::string::npos) throw ParseError("empty entry in code list '" + text + "'");
        tok = tok.substr(b, e - b + 1);
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || tok[0] == '-') throw ParseError("invalid element code '" + tok + "'");
        out.push_back(static_cast<std::uint32_t>(v));
    }
    return out;
}

Elt parse_elt(const Field& F, const std::string& text) {
    const auto c = parse_codes(text);
    if (c.size() != 1) throw ParseError("expected a single element code, got '" + text + "'");
    return F.element(c[0]);
}

LinearizedPoly parse_linearized(const FieldPtr& F, const std::string& text) {
    auto L = is_linearized(parse_poly(F, text));
    if (!L) throw PreconditionError("'" + text + "' is not a p-linearized polynomial");
    return *L;
}

std::vector<std::uint32_t> elt_codes(const std::vector<Elt>& v) { return codes(v); }

json witness_json(const std::optional<std::pair<Elt, Elt>>& w) {
    if (!w) return nullptr;
    return json::array({w->first.code, w->second.code});
}

json cycles_json(const CycleStructure& cs) {
    json j = json::object();
    for (auto [len, count] : cs) j[std::to_string(len)] = count;
    return j;
}

json decomposition_json(const AdditiveDecomposition& D) {
    json j;
    j["index"] = D.index_k;
    j["L"] = to_string(D.L.to_poly());
    j["M"] = to_string(D.M.to_poly());
    j["f"] = to_string(D.f);
    j["L_lin_coeffs"] = elt_codes(D.L.coeffs());
    j["M_lin_coeffs"] = elt_codes(D.M.coeffs());
    j["kernel_basis"] = elt_codes(D.kernel_V.basis());
    j["kernel_size"] = D.kernel_V.size();
    return j;
}

void note_reduction(const Poly& P, json& j, std::ostream& err) {
    if (P.degree() >= static_cast<int>(P.F().order())) {
        j["warning"] = "degree >= q; results refer to the remainder modulo x^q - x";
        err << "addix: warning: input reduced modulo x^q - x\n";
    }
}

std::string csv_cell(const json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

void emit(const json& j, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << j.dump(2) << '\n';
    } else if (format == "text") {
        for (auto& [k, v] : j.items()) out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
    } else {
        std::string header, row;
        for (auto& [k, v] : j.items()) {
            header += (header.empty() ? "" : ",") + csv_cell(k);
            row += (row.empty() ? "" : ",") + csv_cell(v);
        }
        out << header << '\n' << row << '\n';
    }
}

json error_json(const char* kind, const std::string& message) {
    json j;
    j["error"] = kind;
    j["message"] = message;
    return j;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Additive index analysis of polynomials over finite fields", "addix"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "addix 1.0.0");

    Common common;
    std::string poly_text, method, L_text, f_text, suite = "all", kind = "general";
    std::string g_text, U_text, M_text, h_text, gamma_text = "1", b_text = "0";
    std::uint64_t fixed = 0, char_j = 0, count = 100, seed = 1, max_q = Field::kMaxOrder;
    unsigned frob_i = 0;
    bool sweep = false;
    std::function<int()> action;

    auto add_common = [&](CLI::App* sub, bool needs_field) {
        auto* opt = sub->add_option("--field", common.field, "field spec: p, p^n or p^n/c0,...,cn");
        if (needs_field) opt->required();
        sub->add_option("--format", common.format, "output format")
            ->check(CLI::IsMember({"json", "text", "csv"}));
        sub->add_option("--threads", common.threads, "worker thread cap (0 = all cores)");
    };
    auto add_poly = [&](CLI::App* sub) { return sub->add_option("--poly", poly_text, "polynomial")->required(); };

    // Each verb stores the work to run after parsing; results are emitted by the verb.
    auto* index = app.add_subcommand("index", "additive index and maximal subspace polynomial");
    add_common(index, true);
    add_poly(index);
    index->add_option("--method", method, "kernel method")->check(CLI::IsMember({"gcd", "brute"}));
    index->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            const Poly P = parse_poly(F, poly_text);
            const auto D = maximal_decomposition(P);
            json j;
            j["field"] = F->spec();
            j["poly"] = to_string(P);
            if (method == "brute") {
                const auto V = additive_kernel(P, KernelMethod::Brute);
                if (!(V == D.kernel_V)) {
                    throw InvariantViolation("gcd and brute-force kernels differ", to_string(P) + " over " + F->spec());
                }
            }
            j["method"] = method.empty() ? "gcd" : method;
            j.update(decomposition_json(D));
            note_reduction(P, j, err);
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* decompose = app.add_subcommand("decompose", "decomposition f(L(x)) + M(x)");
    add_common(decompose, true);
    add_poly(decompose);
    decompose->add_option("--L", L_text, "subspace polynomial to decompose with (default: the maximal one)");
    decompose->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            const Poly P = parse_poly(F, poly_text);
            json j;
            j["field"] = F->spec();
            j["poly"] = to_string(P);
            if (L_text.empty()) {
                const auto D = maximal_decomposition(P);
                j.update(decomposition_json(D));
                j["multiplicative_index"] = multiplicative_index(D.P);
                if (!(D.recompose() == D.P)) {
                    throw InvariantViolation("f(L(x)) + M(x) differs from P", to_string(P) + " over " + F->spec());
                }
            } else {
                const auto L = parse_linearized(F, L_text);
                const auto r = decompose_with(P, L);
                j["L"] = to_string(L.to_poly());
                j["decomposable"] = r.decomposition.has_value();
                j["remainder"] = to_string(r.remainder);
                if (r.decomposition) {
                    j["f"] = to_string(r.decomposition->f);
                    j["M"] = to_string(r.decomposition->M.to_poly());
                }
            }
            note_reduction(P, j, err);
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* valueset = app.add_subcommand("valueset", "value set size");
    add_common(valueset, true);
    add_poly(valueset);
    valueset->add_option("--method", method, "theorem, brute or both")
        ->check(CLI::IsMember({"theorem", "brute", "both"}));
    valueset->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            const Poly P = parse_poly(F, poly_text);
            json j;
            j["field"] = F->spec();
            j["poly"] = to_string(P);
            const std::string m = method.empty() ? "both" : method;
            std::optional<ValueSetResult> th, br;
            if (m != "brute") th = value_set_size(P, ValueSetMethod::Theorem);
            if (m != "theorem") br = value_set_size(P, ValueSetMethod::Brute);
            j["size"] = th ? th->size : br->size;
            if (th) {
                j["size_theorem"] = th->size;
                j["cosets"] = *th->cosets;
            }
            if (br) j["size_brute"] = br->size;
            if (th && br && th->size != br->size) {
                throw InvariantViolation("value set size differs between methods",
                                         to_string(P) + " over " + F->spec() + ": " + std::to_string(th->size) +
                                             " vs " + std::to_string(br->size));
            }
            const auto t = value_set_pp_threshold(P);
            j["index"] = t.index_k;
            j["gcd_LM_degree"] = t.gcd_LM_degree;
            j["is_pp"] = t.is_pp;
            j["threshold"] = t.threshold;
            j["threshold_implication_holds"] = t.implication_holds;
            j["degree"] = t.degree;
            j["multiplicative_index"] = t.multiplicative_index;
            j["wan_bound"] = t.wan_bound;
            j["mww_bound"] = t.mww_bound;
            if (!t.implication_holds) {
                throw InvariantViolation("non-permutation with gcd(L, M) = x exceeds p^n - p^(n-k)",
                                         to_string(P) + " over " + F->spec());
            }
            note_reduction(P, j, err);
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* pptest = app.add_subcommand("pp-test", "permutation test");
    add_common(pptest, true);
    add_poly(pptest);
    pptest->add_option("--method", method, "certificate, brute or both")
        ->check(CLI::IsMember({"certificate", "brute", "both"}));
    pptest->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            const Poly P = parse_poly(F, poly_text);
            json j;
            j["field"] = F->spec();
            j["poly"] = to_string(P);
            const std::string m = method.empty() ? "both" : method;
            std::optional<PPCertificate> c, b;
            if (m != "brute") c = is_permutation(P, PPMethod::Certificate);
            if (m != "certificate") b = is_permutation(P, PPMethod::Brute);
            j["is_pp"] = c ? c->is_pp : b->is_pp;
            if (c) {
                j["certificate"] = {{"is_pp", c->is_pp},
                                    {"gcd_LM_degree", c->gcd_LM_degree},
                                    {"quotient_bijection", c->quotient_bijection},
                                    {"witness", witness_json(c->witness)}};
            }
            if (b) j["brute"] = {{"is_pp", b->is_pp}, {"witness", witness_json(b->witness)}};
            if (c && b && c->is_pp != b->is_pp) {
                throw InvariantViolation("permutation certificate disagrees with brute force",
                                         to_string(P) + " over " + F->spec());
            }
            note_reduction(P, j, err);
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* invert = app.add_subcommand("invert", "compositional inverse of a permutation polynomial");
    add_common(invert, true);
    add_poly(invert);
    invert->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            const Poly P = parse_poly(F, poly_text);
            const auto inv = inverse_pp(P);
            const int k = additive_index(P), k0 = additive_index(inv.P0);
            if (k != k0) {
                throw InvariantViolation("additive index of the inverse differs",
                                         "P = " + to_string(P) + ", P0 = " + to_string(inv.P0));
            }
            json j;
            j["field"] = F->spec();
            j["poly"] = to_string(P);
            j["P0"] = to_string(inv.P0);
            j["f0"] = to_string(inv.f0);
            j["L0"] = to_string(inv.L0.to_poly());
            j["M0"] = to_string(inv.M0.to_poly());
            j["index"] = k;
            j["index_inverse"] = k0;
            note_reduction(P, j, err);
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* cyc = app.add_subcommand("cycles", "cycle structure of a permutation");
    add_common(cyc, true);
    auto* cyc_poly = cyc->add_option("--poly", poly_text, "permutation polynomial");
    auto* cyc_L = cyc->add_option("--L", L_text, "subspace polynomial for P = f(L(x)) + x");
    auto* cyc_f = cyc->add_option("--f", f_text, "f for P = f(L(x)) + x");
    cyc_L->needs(cyc_f);
    cyc_f->needs(cyc_L);
    cyc_poly->excludes(cyc_L);
    cyc->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            json j;
            j["field"] = F->spec();
            if (!L_text.empty()) {
                const auto tp = translation_pp(parse_linearized(F, L_text), parse_poly(F, f_text));
                const auto measured = cycle_structure(tp.P);
                j["poly"] = to_string(tp.P);
                j["t"] = tp.t;
                j["predicted"] = cycles_json(tp.predicted);
                j["cycles"] = cycles_json(measured);
                if (measured != tp.predicted) {
                    throw InvariantViolation("measured cycle structure differs from the prediction",
                                             to_string(tp.P) + " over " + F->spec());
                }
            } else {
                if (poly_text.empty()) throw ParseError("cycles needs --poly or --L with --f");
                const Poly P = parse_poly(F, poly_text);
                j["poly"] = to_string(P);
                j["cycles"] = cycles_json(cycle_structure(P));
            }
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* construct = app.add_subcommand("construct-cycles", "permutation with s fixed points and p-cycles");
    add_common(construct, true);
    construct->add_option("--fixed", fixed, "number of fixed points s (divisible by p)")->required();
    construct->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            const auto r = construct_prescribed_cycles(F, fixed);
            json j;
            j["field"] = F->spec();
            j["s"] = fixed;
            j["P"] = to_string(r.P);
            j["L"] = to_string(r.L.to_poly());
            j["f"] = to_string(r.f);
            j["cycles"] = cycles_json(r.structure);
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* invol = app.add_subcommand("involution", "involution test");
    add_common(invol, true);
    add_poly(invol);
    invol->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            const Poly P = parse_poly(F, poly_text);
            const auto c = is_involution(P, InvolutionMethod::Certificate);
            const auto b = is_involution(P, InvolutionMethod::Brute);
            json j;
            j["field"] = F->spec();
            j["poly"] = to_string(P);
            j["is_involution"] = b.is_involution;
            j["certificate"] = {{"is_involution", c.is_involution},
                                {"m_condition", c.m_condition},
                                {"reps_condition", c.reps_condition}};
            j["brute"] = b.is_involution;
            if (c.is_involution != b.is_involution) {
                throw InvariantViolation("involution certificate disagrees with brute force",
                                         to_string(P) + " over " + F->spec());
            }
            note_reduction(P, j, err);
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* trans = app.add_subcommand("translator", "linear translator permutations x + h(g(x))");
    trans->set_help_flag("--help", "Print this help message and exit");
    add_common(trans, true);
    trans->add_option("--g", g_text, "translator g as a polynomial")->required();
    trans->add_option("--U", U_text, "comma-separated element codes spanning U")->required();
    trans->add_option("--M", M_text, "p-linearized M (derived from gamma, b, i for the special kinds)");
    trans->add_option("--h", h_text, "polynomial h with h(U) in U")->required();
    trans->add_option("--kind", kind, "translator kind")
        ->check(CLI::IsMember({"general", "b-linear", "frobenius"}));
    trans->add_option("--gamma", gamma_text, "gamma as an element code");
    trans->add_option("--b", b_text, "b as an element code");
    trans->add_option("--i", frob_i, "Frobenius exponent i");
    trans->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            std::vector<Elt> gens;
            for (auto c : parse_codes(U_text)) gens.push_back(F->element(c));
            TranslatorSpec spec{parse_poly(F, g_text), Subspace::span(F, gens), LinearizedPoly(F)};
            spec.gamma = parse_elt(*F, gamma_text);
            spec.b = parse_elt(*F, b_text);
            spec.frobenius_i = frob_i;
            spec.kind = kind == "b-linear"    ? TranslatorKind::BLinear
                        : kind == "frobenius" ? TranslatorKind::Frobenius
                                              : TranslatorKind::General;
            if (!M_text.empty()) {
                spec.M = parse_linearized(F, M_text);
            } else if (spec.kind == TranslatorKind::General) {
                throw ParseError("--M is required for general translators");
            } else {
                if (spec.gamma.code == 0) throw PreconditionError("gamma must be nonzero");
                const unsigned i = spec.kind == TranslatorKind::BLinear ? 0 : frob_i % F->degree();
                std::vector<Elt> c(i + 1, Elt{0});
                c[i] = F->mul(F->inv(F->pow(spec.gamma, ipow(F->characteristic(), i))), spec.b);
                spec.M = LinearizedPoly(F, std::move(c));
            }
            const Poly h = parse_poly(F, h_text);
            const auto chk = is_linear_translator(spec);
            const auto r = translator_pp(spec, h);
            json j;
            j["field"] = F->spec();
            j["g"] = to_string(spec.g);
            j["U_basis"] = elt_codes(spec.U.basis());
            j["M"] = to_string(spec.M.to_poly());
            j["h"] = to_string(h);
            j["identity_holds"] = chk.identity_holds;
            j["m_form_holds"] = chk.m_form_holds;
            j["onto_U"] = chk.onto_U;
            j["small_side"] = r.small_side;
            j["is_pp"] = r.is_pp;
            j["is_complete"] = r.is_complete;
            j["complete_mapping_violation"] = r.complete_claim_violated();
            if (!r.equivalence_holds()) {
                throw InvariantViolation("u + M(h(u)) on U and x + h(g(x)) on F_q disagree",
                                         "g = " + to_string(spec.g) + ", h = " + to_string(h));
            }
            emit(j, common.format, out);
            if (r.complete_claim_violated()) {
                err << "addix: x + h(g(x)) permutes F_q but is not a complete mapping\n";
                return kInvariantViolation;
            }
            return kOk;
        };
    });

    auto* chars = app.add_subcommand("charsum", "multiplicative character sums and bounds");
    add_common(chars, true);
    auto* cs_poly = chars->add_option("--poly", poly_text, "polynomial");
    auto* cs_char = chars->add_option("--char", char_j, "character index j in [1, q-2]");
    auto* cs_sweep = chars->add_flag("--sweep", sweep, "CSV sweep over sampled decomposable polynomials");
    chars->add_option("--count", count, "number of sampled polynomials for --sweep");
    chars->add_option("--seed", seed, "sampler seed for --sweep");
    cs_sweep->excludes(cs_poly);
    chars->callback([&] {
        action = [&] {
            const auto F = load_field(common.field);
            if (sweep) {
                Rng rng(seed);
                std::vector<MultChar> list;
                if (cs_char->count()) {
                    list.emplace_back(F, char_j);
                } else {
                    for (std::uint64_t j = 1; j + 1 < F->order(); ++j) list.emplace_back(F, j);
                }
                out << kSweepSchema << '\n'
                    << "poly_id,poly,j,abs_sum,additive_bound,weil_bound,weil_applicable,trivial_bound,e,k\n";
                const unsigned n = F->degree();
                for (std::uint64_t i = 0; i < count; ++i) {
                    const auto s = random_decomposable(F, 1 + i % n, std::uniform_int_distribution<int>(1, 4)(rng), rng);
                    for (const auto& chi : list) {
                        const auto r = bound_report(s.P, chi);
                        out << i << ',' << csv_cell(to_string(s.P)) << ',' << chi.index() << ',' << r.abs << ','
                            << r.additive_bound << ',' << r.weil_bound << ',' << (r.weil_applicable ? 1 : 0) << ','
                            << r.trivial_bound << ',' << r.e << ',' << r.index_k << '\n';
                    }
                }
                return kOk;
            }
            if (poly_text.empty() || !cs_char->count()) throw ParseError("charsum needs --poly and --char, or --sweep");
            const Poly P = parse_poly(F, poly_text);
            const auto r = bound_report(P, MultChar(F, char_j));
            json j;
            j["field"] = F->spec();
            j["poly"] = to_string(P);
            j["j"] = char_j;
            j["sum_re"] = r.sum.real();
            j["sum_im"] = r.sum.imag();
            j["abs"] = r.abs;
            j["index"] = r.index_k;
            j["e"] = r.e;
            j["s"] = r.s;
            j["additive_bound"] = r.additive_bound;
            j["weil_bound"] = r.weil_bound;
            j["weil_applicable"] = r.weil_applicable;
            j["power_r"] = r.power_r ? json(*r.power_r) : json(nullptr);
            j["trivial_bound"] = r.trivial_bound;
            j["sharp_regime"] = r.sharp_regime;
            note_reduction(P, j, err);
            emit(j, common.format, out);
            return kOk;
        };
    });

    auto* ver = app.add_subcommand("verify", "run the acceptance suites");
    add_common(ver, false);
    ver->add_option("--suite", suite, "'all' or comma-separated criterion numbers");
    ver->add_option("--max-q", max_q, "skip fields larger than this");
    ver->add_option("--seed", seed, "sampler seed")->default_val(verify::Options{}.seed);
    ver->callback([&] {
        action = [&] {
            verify::Options opts;
            opts.seed = seed;
            opts.max_q = std::min(max_q, env_cap());
            const auto results = verify::run_suite(suite, opts);
            bool all = true;
            json list = json::array();
            for (const auto& r : results) {
                all = all && r.passed;
                list.push_back({{"id", r.id},
                                {"name", r.name},
                                {"passed", r.passed},
                                {"cases", r.cases},
                                {"seconds", r.seconds},
                                {"detail", r.detail},
                                {"events", r.events}});
            }
            if (common.format == "json") {
                json j;
                j["passed"] = all;
                j["seed"] = opts.seed;
                j["max_q"] = opts.max_q;
                j["criteria"] = list;
                out << j.dump(2) << '\n';
            } else if (common.format == "csv") {
                out << "id,name,passed,cases,seconds,detail\n";
                for (const auto& r : results) {
                    out << r.id << ',' << csv_cell(r.name) << ',' << (r.passed ? 1 : 0) << ',' << r.cases << ','
                        << r.seconds << ',' << csv_cell(r.detail) << '\n';
                }
            } else {
                for (const auto& r : results) {
                    out << "criterion " << r.id << ' ' << (r.passed ? "PASS" : "FAIL") << ' ' << r.name << ": "
                        << r.detail << '\n';
                    for (const auto& e : r.events) out << "  event: " << e << '\n';
                }
            }
            return all ? kOk : kInvariantViolation;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion&) {
        out << "addix 1.0.0\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "addix: " << e.what() << '\n';
        out << error_json("parse", e.what()).dump(2) << '\n';
        return kParseError;
    }

    try {
        set_max_threads(common.threads);
        return action ? action() : kParseError;
    } catch (const ParseError& e) {
        err << "addix: " << e.what() << '\n';
        out << error_json("parse", e.what()).dump(2) << '\n';
        return kParseError;
    } catch (const PreconditionError& e) {
        err << "addix: " << e.what() << '\n';
        out << error_json("precondition", e.what()).dump(2) << '\n';
        return kPreconditionError;
    } catch (const InvariantViolation& e) {
        err << "addix: invariant violated: " << e.what() << "\ncounterexample: " << e.counterexample() << '\n';
        auto j = error_json("invariant", e.what());
        j["counterexample"] = e.counterexample();
        out << j.dump(2) << '\n';
        return kInvariantViolation;
    } catch (const std::exception& e) {
        err << "addix: internal error: " << e.what() << '\n';
        out << error_json("internal", e.what()).dump(2) << '\n';
        return kInvariantViolation;
    }
}

}  // namespace addix::cli
