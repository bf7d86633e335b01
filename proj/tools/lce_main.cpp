#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <random>

#include "lce/conjugacy.hpp"
#include "lce/grammar.hpp"
#include "lce/growth.hpp"
#include "lce/membership.hpp"
#include "lce/morphisms.hpp"
#include "lce/structure.hpp"
#include "lce/thurston.hpp"

using namespace lce;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitUndecided = 2;

BaseGroup group_from_name(const std::string& name) {
    if (name == "zI") return BaseGroup::integers();
    if (name == "f2I" || name == "wreath-f2") return BaseGroup::free_group(2);
    if (name == "f3I") return BaseGroup::free_group(3);
    throw CLI::ValidationError("--group", "unknown group context: " + name);
}

GenSet gen_set_by_name(const BaseGroup& base, const std::string& name) {
    if (name == "Sprime" || name == "S'") return gen_set_sprime(base);
    if (name == "S") return gen_set_s(base);
    if (name == "T") return gen_set_t(base);
    throw CLI::ValidationError("--gens", "unknown generating set: " + name);
}

SymmetricSet require_set(const BaseGroup& base, const std::string& desc) {
    if (desc.empty()) throw std::invalid_argument("--set-desc is required for this command");
    try {
        return parse_symmetric_set(base, desc);
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("cannot parse descriptor '" + desc + "': " + e.what());
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("number out of range in descriptor '" + desc + "'");
    }
}

/// Parses "g0 g1 G0 ..." into a generator word (G = inverse).
GenWord parse_gen_word(const std::string& text, size_t genCount) {
    GenWord out;
    std::istringstream ss(text);
    std::string tok;
    while (ss >> tok) {
        if (tok.size() < 2 || (tok[0] != 'g' && tok[0] != 'G'))
            throw std::invalid_argument("generator-word tokens look like g0, G2: " + tok);
        int idx = std::stoi(tok.substr(1));
        if (idx < 0 || size_t(idx) >= genCount)
            throw std::invalid_argument("generator index out of range: " + tok);
        out.emplace_back(idx, tok[0] == 'g' ? 1 : -1);
    }
    return out;
}

std::string format_gen_word(const GenWord& w) {
    if (w.empty()) return "e";
    std::string s;
    for (auto [idx, exp] : w) {
        if (!s.empty()) s += " ";
        s += (exp > 0 ? "g" : "G") + std::to_string(idx);
    }
    return s;
}

struct Output {
    std::string format = "text";

    void emit(const std::vector<std::pair<std::string, json>>& fields) const {
        if (format == "jsonl") {
            json j;
            j["schema"] = 1;
            for (auto& [k, v] : fields) j[k] = v;
            std::cout << j.dump() << "\n";
            return;
        }
        for (auto& [k, v] : fields) {
            if (format == "csv")
                std::cout << k << "," << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            else
                std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
                          << "\n";
        }
    }
};

int run_selftest(std::uint64_t seed) {
    std::mt19937 rng(static_cast<std::mt19937::result_type>(seed));
    BaseGroup Z = BaseGroup::integers();
    SymmetricSet I = SymmetricSet::periodic(2, {1});
    GenSet sp = gen_set_sprime(Z);
    int failures = 0;
    auto report = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    // group laws on random S'-words
    bool lawsOk = true;
    auto randomWord = [&](int maxLen) {
        Word w;
        int len = std::uniform_int_distribution<int>(0, maxLen)(rng);
        for (int i = 0; i < len; ++i)
            w.push_back(int(std::uniform_int_distribution<size_t>(0, sp.size() - 1)(rng)));
        return w;
    };
    for (int trial = 0; trial < 500; ++trial) {
        GElement x = evaluate_word(sp, randomWord(6), I);
        GElement y = evaluate_word(sp, randomWord(6), I);
        GElement w = evaluate_word(sp, randomWord(6), I);
        lawsOk = lawsOk && g_mul(g_mul(x, y, I), w, I) == g_mul(x, g_mul(y, w, I), I);
        lawsOk = lawsOk && g_is_identity(g_mul(x, g_inv(x, I), I));
    }
    report("group laws (500 random triples)", lawsOk);

    // knapsack identity
    bool knapsackOk = true;
    for (int n = 1; n <= 12; ++n) {
        Word w;
        for (int rep = 0; rep < 2; ++rep) {
            w.push_back(0);
            w.insert(w.end(), size_t(n), 2);
            w.push_back(0);
            w.insert(w.end(), size_t(n), 3);
        }
        knapsackOk =
            knapsackOk && (is_identity_word(sp, w, I) == !I.contains(Z.from_int(n)));
    }
    report("knapsack identity n <= 12", knapsackOk);

    // growth series vs BFS at small radius
    GroupCtx ctx{Z, I};
    LabelledBall ball = bfs_ball_wreath(gen_set_t(Z), 6);
    RationalSeries series = series_c2wrz();
    bool seriesOk = true;
    for (int n = 0; n <= 6; ++n)
        seriesOk = seriesOk && series.coefficient(n) == ball.beta[size_t(n)];
    report("growth series coefficients 0..6", seriesOk);

    // grammar vs oracle at length 4
    Grammar gr = build_conjgeo_grammar(2);
    auto lang = enumerate_with_counts(gr, 4);
    auto oracle = conjgeo_oracle(4, 2);
    bool grammarOk = lang.size() == oracle.size();
    for (auto& w : oracle) grammarOk = grammarOk && lang.count(w) && lang.at(w) == 1;
    report("conjugacy-geodesic grammar vs oracle (n <= 4)", grammarOk);

    return failures == 0 ? kExitOk : kExitUndecided;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"central extensions of lamplighter groups: decision procedures and enumerators"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text, csv, jsonl")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    int limitOverride = -1;
    app.add_option("--limit", limitOverride, "override the enumeration/radius caps");

    std::string groupName = "zI", setDesc, wordText, gensName = "Sprime";

    // wp
    auto* wp = app.add_subcommand("wp", "word problem: is the word the identity of G(H,I)?");
    wp->add_option("--group", groupName);
    wp->add_option("--set-desc,--set", setDesc)->required();
    wp->add_option("--word", wordText)->required();
    wp->add_option("--gens", gensName);

    // normal-form
    auto* nf = app.add_subcommand("normal-form", "canonical form of a word's value");
    nf->add_option("--group", groupName);
    nf->add_option("--set-desc,--set", setDesc)->required();
    nf->add_option("--word", wordText)->required();
    nf->add_option("--gens", gensName);

    // conj
    std::string gText, hText;
    auto* conj = app.add_subcommand("conj", "conjugacy decision in G_I over Z");
    conj->set_help_flag("--help", "print help");  // frees -h for the element option
    conj->add_option("--set-desc,--set", setDesc)->required();
    conj->add_option("--g", gText)->required();
    conj->add_option("--h", hText)->required();

    // conj-min
    int rank = 2;
    auto* cmin = app.add_subcommand("conj-min", "conjugacy minimality in C2 wr F_r");
    cmin->add_option("--rank", rank)->check(CLI::Range(1, 2));
    cmin->add_option("--g", gText)->required();

    // conj-geo
    auto* cgeo = app.add_subcommand("conj-geo", "is the word a conjugacy geodesic of C2 wr F_r?");
    cgeo->add_option("--rank", rank)->check(CLI::Range(1, 2));
    cgeo->add_option("--word", wordText)->required();

    // grammar
    auto* grammar = app.add_subcommand("grammar", "the ConjGeo(C2 wr F_r, T) grammar");
    bool schematic = false, lifted = false, exactTranscription = false;
    int enumLen = -1;
    auto* gemit = grammar->add_subcommand("emit", "print the instantiated grammar");
    gemit->add_option("--rank", rank)->check(CLI::Range(1, 4));
    gemit->add_flag("--schematic", schematic, "compact pool form instead of full expansion");
    gemit->add_flag("--exact-transcription", exactTranscription,
                    "disable the documented amendments");
    auto* gcheck = grammar->add_subcommand("check", "recognize a word");
    gcheck->add_option("--rank", rank)->check(CLI::Range(1, 4));
    gcheck->add_option("--word", wordText)->required();
    gcheck->add_flag("--lifted", lifted, "use the G(F_r, I) lift (alphabet with z-cosets)");
    gcheck->add_flag("--exact-transcription", exactTranscription);
    auto* genum = grammar->add_subcommand("enumerate", "list the language up to a length");
    genum->add_option("--rank", rank)->check(CLI::Range(1, 4));
    genum->add_option("--max-length", enumLen)->required();
    genum->add_flag("--lifted", lifted);
    genum->add_flag("--exact-transcription", exactTranscription);

    // growth
    auto* growth = app.add_subcommand("growth", "Cayley ball sizes and growth series");
    int radius = 6;
    std::string whichSeries = "c2wrz";
    int coeffs = 10, rmax = 3;
    std::string betaFrom;
    growth->add_option("--group", groupName);
    growth->add_option("--set-desc,--set", setDesc);
    growth->add_option("--gens", gensName);
    growth->add_option("--radius", radius);
    growth->add_option("--emit", format, "alias of --format")
        ->check(CLI::IsMember({"text", "csv", "jsonl"}));
    auto* gseries = growth->add_subcommand("series", "exact rational-series coefficients");
    gseries->add_option("--which", whichSeries)
        ->check(CLI::IsMember({"c2wrz", "c2wrz-sphere-printed", "gi-s"}));
    gseries->add_option("--coeffs", coeffs);
    auto* grec = growth->add_subcommand("reconstruct", "recover I from ball sizes");
    grec->add_option("--beta-from", betaFrom)->required();
    grec->add_option("--rmax", rmax);

    // member
    auto* member = app.add_subcommand("member", "subgroup / submonoid membership in G_I");
    std::string subText, zStatusText = "auto", monoidText;
    member->add_option("--set-desc,--set", setDesc)->required();
    member->add_option("--sub", subText, "semicolon-separated generator words over S'");
    member->add_option("--monoid", monoidText, "semicolon-separated monoid generator words");
    member->add_option("--z-status", zStatusText, "auto | in:<generator word> | out");
    member->add_option("--word", wordText)->required();

    // rf / iso / periodicity / quotient
    auto* rf = app.add_subcommand("rf", "residual finiteness of G_I");
    rf->add_option("--set-desc,--set", setDesc)->required();
    std::string leftDesc, rightDesc;
    auto* iso = app.add_subcommand("iso", "isomorphism G_I ~ G_J");
    iso->add_option("--left", leftDesc)->required();
    iso->add_option("--right", rightDesc)->required();
    auto* periodicity = app.add_subcommand("periodicity", "periodicity classification of I");
    periodicity->add_option("--set-desc,--set", setDesc)->required();
    auto* quotient = app.add_subcommand("quotient", "finite quotient experiment");
    quotient->add_option("--set-desc,--set", setDesc)->required();

    // thurston demo
    auto* demo = app.add_subcommand("wp-demo", "word problem from the growth series (Thurston)");
    std::string uText, vText;
    demo->add_option("--set-desc,--set", setDesc)->required();
    demo->add_option("--u", uText)->required();
    demo->add_option("--v", vText)->required();

    // selftest
    auto* selftest = app.add_subcommand("selftest", "built-in randomized property checks");
    std::uint64_t seed = 1;
    selftest->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);
    Output out{format};

    try {
        if (*wp || *nf) {
            BaseGroup base = group_from_name(groupName);
            SymmetricSet I = require_set(base, setDesc);
            GenSet gens = gen_set_by_name(base, gensName);
            Word w = parse_word(gens, wordText);
            if (*wp)
                out.emit({{"identity", is_identity_word(gens, w, I)}});
            else
                out.emit({{"normal-form", normal_form(gens, w, I)}});
            return kExitOk;
        }
        if (*conj) {
            BaseGroup Z = BaseGroup::integers();
            SymmetricSet I = require_set(Z, setDesc);
            GenSet gens = gen_set_sprime(Z);
            GElement g = evaluate_word(gens, parse_word(gens, gText), I);
            GElement h = evaluate_word(gens, parse_word(gens, hText), I);
            auto cert = conjugate_decide_GI(g, h, I);
            if (cert)
                out.emit({{"conjugate", "yes"},
                          {"certificate", g_format(cert->conjugator, Z)}});
            else
                out.emit({{"conjugate", "no"}});
            return kExitOk;
        }
        if (*cmin) {
            BaseGroup f = BaseGroup::free_group(rank);
            GenSet gens = gen_set_t(f);
            WreathElement g = evaluate_word_wreath(gens, parse_word(gens, gText));
            out.emit({{"minimal", is_conjugacy_minimal_Fr(g) ? "yes" : "no"}});
            return kExitOk;
        }
        if (*cgeo) {
            Grammar gr = build_conjgeo_grammar(rank);
            std::vector<int> toks = parse_tokens(gr, wordText);
            WreathElement e = evaluate_tokens_wreath(toks, rank);
            bool geodesic = std::int64_t(toks.size()) == wreath_conj_min_length_Fr(e);
            ParseResult parsed = recognize(gr, toks);
            out.emit({{"conjugacy-geodesic", geodesic ? "yes" : "no"},
                      {"grammar-accepts", parsed.accepted ? "yes" : "no"}});
            return kExitOk;
        }
        if (*grammar) {
            GrammarOptions opts;
            if (exactTranscription) opts = {false, false};
            Grammar base = build_conjgeo_grammar(rank, opts);
            Grammar gr = lifted ? lift_grammar(base, 2) : base;
            if (*gemit) {
                emit_grammar(gr, std::cout, schematic);
                return kExitOk;
            }
            if (*gcheck) {
                ParseResult r = recognize(gr, parse_tokens(gr, wordText));
                std::vector<std::pair<std::string, json>> fields = {
                    {"accepted", r.accepted ? "yes" : "no"},
                    {"derivations", r.derivations}};
                if (r.accepted) fields.emplace_back("derivation", json(r.derivation));
                out.emit(fields);
                return kExitOk;
            }
            if (*genum) {
                for (auto& [w, c] : enumerate_with_counts(gr, enumLen, limitOverride))
                    std::cout << format_tokens(gr, w) << "\n";
                return kExitOk;
            }
            std::cerr << "grammar needs a subcommand: emit | check | enumerate\n";
            return kExitBadInput;
        }
        if (*growth) {
            if (*gseries) {
                RationalSeries s = whichSeries == "c2wrz" ? series_c2wrz()
                                   : whichSeries == "gi-s" ? series_GI_S()
                                                           : series_c2wrz_sphere_printed();
                auto v = s.coefficients(coeffs);
                if (format == "jsonl") {
                    out.emit({{"series", whichSeries}, {"coefficients", json(v)}});
                } else {
                    std::string line;
                    for (size_t i = 0; i < v.size(); ++i)
                        line += (i ? "," : "") + std::to_string(v[size_t(i)]);
                    std::cout << line << "\n";
                }
                return kExitOk;
            }
            if (*grec) {
                BaseGroup Z = BaseGroup::integers();
                SymmetricSet I = require_set(Z, betaFrom);
                auto window = reconstruct_I_from_beta(beta_oracle_sprime(I), rmax);
                std::string line = "{";
                for (size_t i = 0; i < window.size(); ++i)
                    line += (i ? "," : "") + std::to_string(window[i]);
                line += "}";
                out.emit({{"window", line}, {"rmax", rmax}});
                return kExitOk;
            }
            // plain ball counts
            if (groupName == "c2wrz") {
                LabelledBall b = bfs_ball_wreath(gen_set_t(BaseGroup::integers()), radius,
                                                 limitOverride);
                if (format == "csv") std::cout << "n,beta\n";
                for (int n = 0; n <= radius; ++n)
                    std::cout << n << "," << b.beta[size_t(n)] << "\n";
                return kExitOk;
            }
            BaseGroup base = group_from_name(groupName);
            SymmetricSet I = require_set(base, setDesc);
            GroupCtx ctx{base, I};
            LabelledBall b = bfs_ball(ctx, gen_set_by_name(base, gensName), radius,
                                      limitOverride);
            if (format == "csv") std::cout << "n,beta\n";
            for (int n = 0; n <= radius; ++n) std::cout << n << "," << b.beta[size_t(n)] << "\n";
            return kExitOk;
        }
        if (*member) {
            BaseGroup Z = BaseGroup::integers();
            SymmetricSet I = require_set(Z, setDesc);
            GenSet sp = gen_set_sprime(Z);
            GElement target = evaluate_word(sp, parse_word(sp, wordText), I);
            auto parseGens = [&](const std::string& text) {
                std::vector<GElement> gens;
                std::istringstream ss(text);
                std::string item;
                while (std::getline(ss, item, ';'))
                    if (!item.empty()) gens.push_back(evaluate_word(sp, parse_word(sp, item), I));
                return gens;
            };
            if (!monoidText.empty()) {
                auto gens = parseGens(monoidText);
                auto ans = submonoid_membership(target, gens, I);
                out.emit({{"member", ans.member ? "yes" : "no"},
                          {"witness", ans.member ? format_gen_word(ans.witness) : ""}});
                return kExitOk;
            }
            auto gens = parseGens(subText);
            if (gens.empty()) {
                std::cerr << "--sub or --monoid is required\n";
                return kExitBadInput;
            }
            SubgroupHandle sub;
            sub.generators = gens;
            if (zStatusText == "auto") {
                sub.z_status = resolve_z_status(gens, I);
            } else if (zStatusText == "out") {
                sub.z_status = {ZStatusKind::NotContainsZ, {}, "asserted by the caller"};
            } else if (zStatusText.rfind("in:", 0) == 0) {
                GenWord witness = parse_gen_word(zStatusText.substr(3), gens.size());
                if (!(evaluate_gen_word_G(gens, witness, I) == g_center(Z)))
                    throw std::invalid_argument("z witness does not evaluate to z");
                sub.z_status = {ZStatusKind::ContainsZ, witness, "witness supplied"};
            } else {
                throw std::invalid_argument("--z-status must be auto, out, or in:<word>");
            }
            if (sub.z_status.kind == ZStatusKind::Unknown) {
                out.emit({{"status", "unknown"}, {"reason", sub.z_status.reason}});
                return kExitUndecided;
            }
            auto ans = subgroup_membership_GI(target, sub, I);
            std::vector<std::pair<std::string, json>> fields = {
                {"member", ans.member ? "yes" : "no"}};
            if (ans.member) fields.emplace_back("witness", format_gen_word(ans.witness));
            out.emit(fields);
            return kExitOk;
        }
        if (*rf) {
            BaseGroup Z = BaseGroup::integers();
            SymmetricSet I = require_set(Z, setDesc);
            auto r = is_residually_finite_GI(I);
            std::vector<std::pair<std::string, json>> fields = {
                {"residually-finite", r.residually_finite ? "yes" : "no"}};
            if (r.residually_finite) {
                fields.emplace_back("witness-modulus", r.witness_modulus);
                if (r.witness) {
                    fields.emplace_back("witness-order", r.witness->elements.size());
                    BaseGroup c = BaseGroup::cyclic(int(r.witness->modulus));
                    fields.emplace_back("z-image",
                                        g_format(r.witness->elements[size_t(
                                                     r.witness->index_of(g_center(c)))],
                                                 c));
                }
            }
            out.emit(fields);
            return kExitOk;
        }
        if (*iso) {
            BaseGroup Z = BaseGroup::integers();
            bool same = iso_GI(require_set(Z, leftDesc), require_set(Z, rightDesc));
            out.emit({{"isomorphic", same ? "yes" : "no"}});
            return kExitOk;
        }
        if (*periodicity) {
            BaseGroup Z = BaseGroup::integers();
            PeriodicityClass p = eventual_periodicity(require_set(Z, setDesc));
            if (p.periodic)
                out.emit({{"class", "periodic"}, {"period", p.period}});
            else
                out.emit({{"class", "eventually-periodic"},
                          {"period", p.period},
                          {"threshold", p.threshold}});
            return kExitOk;
        }
        if (*quotient) {
            BaseGroup Z = BaseGroup::integers();
            SymmetricSet I = require_set(Z, setDesc);
            auto r = is_residually_finite_GI(I);
            if (!r.residually_finite || !r.witness) {
                out.emit({{"status", r.residually_finite ? "witness too large" : "not residually finite"}});
                return kExitUndecided;
            }
            auto rows = quotient_experiment(*r.witness);
            std::cout << "normal subgroups avoiding z in G(Z/" << r.witness->modulus
                      << ", J), |G| = " << r.witness->elements.size() << "\n";
            if (format == "csv") std::cout << "subgroup_order,quotient_order\n";
            for (auto& row : rows)
                std::cout << row.subgroup_order << "," << row.quotient_order << "\n";
            return kExitOk;
        }
        if (*demo) {
            BaseGroup Z = BaseGroup::integers();
            SymmetricSet I = require_set(Z, setDesc);
            GenSet sp = gen_set_sprime(Z);
            auto res = wp_from_growth_demo(sp, parse_word(sp, uText), parse_word(sp, vText), I,
                                           beta_oracle_sprime(I));
            out.emit({{"equal", res.equal ? "yes" : "no"},
                      {"classes", res.classes},
                      {"rewriting-bound", res.rewriting_bound}});
            return kExitOk;
        }
        if (*selftest) return run_selftest(seed);
    } catch (const limit_error& e) {
        std::cerr << "limit: " << e.what() << "\n";
        return kExitUndecided;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
