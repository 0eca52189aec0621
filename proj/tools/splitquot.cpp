// Command-line front end: every library operation is reachable from one
// subcommand, all structured output is JSON with stable key order, and
// verification subcommands exit nonzero on counterexamples.

#include <chrono>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitquot/bwb.hpp"
#include "splitquot/hankel.hpp"
#include "splitquot/lr.hpp"
#include "splitquot/partition.hpp"
#include "splitquot/precondition.hpp"
#include "splitquot/quot.hpp"
#include "splitquot/splitting.hpp"

using json = nlohmann::ordered_json;
using namespace splitquot;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        try {
            std::size_t used = 0;
            int value = std::stoi(item, &used);
            require(used == item.size(), "trailing characters in integer");
            out.push_back(value);
        } catch (const std::exception&) {
            throw precondition_error("cannot parse '" + item +
                                     "' as an integer");
        }
        pos = comma + 1;
        if (comma == text.size())
            break;
    }
    return out;
}

SplittingType parse_splitting(const std::string& text) {
    return SplittingType(parse_int_list(text)); // rejects non-monotone input
}

Partition parse_partition(const std::string& text) {
    return Partition(parse_int_list(text)); // rejects increasing input
}

Rational parse_rational(const std::string& text) {
    const std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos)
            return Rational(BigInt(text));
        return Rational(BigInt(text.substr(0, slash)),
                        BigInt(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw precondition_error("cannot parse '" + text + "' as a rational");
    }
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    if (text.empty())
        return out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos)
            comma = text.size();
        out.push_back(parse_rational(text.substr(pos, comma - pos)));
        pos = comma + 1;
        if (comma == text.size())
            break;
    }
    return out;
}

json to_json(const SplittingType& e) { return json(e.entries()); }
json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const Rational& r) {
    if (r.denominator() == 1)
        return json(r.numerator().str());
    return json(r.numerator().str() + "/" + r.denominator().str());
}

std::string plain_list(const std::vector<int>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(v[i]);
    }
    return out;
}

json witness_json(const VanishingWitness& w) {
    json out;
    out["mu"] = to_json(w.mu);
    out["alpha"] = to_json(w.alpha);
    out["beta"] = to_json(w.beta);
    out["degree"] = w.degree;
    out["bound"] = w.bound;
    return out;
}

struct Emitter {
    const bool* timing = nullptr; // report timing only when asked: the
                                  // default output is byte-stable
    std::chrono::steady_clock::time_point start =
        std::chrono::steady_clock::now();

    int emit(const std::string& command, json inputs, json outputs,
             json counterexamples = json::array()) const {
        json report;
        report["command"] = command;
        report["inputs"] = std::move(inputs);
        report["outputs"] = std::move(outputs);
        report["counterexamples"] = counterexamples;
        if (timing && *timing)
            report["elapsed_ms"] =
                std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
        std::cout << report.dump(2) << "\n";
        return counterexamples.empty() ? 0 : 1;
    }
};

// Operation -> subcommand map, used by the coverage test; every public
// library operation must appear exactly once.
const std::vector<std::pair<std::string, std::string>> kOpsTable = {
    {"conjugate", "vcoh"},
    {"lr_coefficient", "vcoh"},
    {"tensor_schur", "vcoh"},
    {"schur_of_double", "vcoh"},
    {"cauchy_wedge", "verify-vanishing"},
    {"schur_complex_terms", "vcoh"},
    {"h0_h1", "u"},
    {"u", "u"},
    {"hom_ext1", "stratum-dim"},
    {"dominates", "dominance"},
    {"dominates_via_h1", "dominance"},
    {"dominates_via_flag", "dominance"},
    {"is_balanced", "tame"},
    {"is_perfectly_balanced", "tame"},
    {"is_tame", "tame"},
    {"hn_data", "hn"},
    {"admissible_sets", "admissible"},
    {"admits_subsheaf", "eb"},
    {"eb", "eb"},
    {"gap", "stratum-dim"},
    {"flag_stratum_dim", "fiber-dim"},
    {"stratum_codim", "stratum-dim"},
    {"tangent_check", "tangent"},
    {"gp_type", "gp-type"},
    {"bwb_mixed", "bwb"},
    {"bwb_quot_dual", "bwb"},
    {"bwb_indices", "bwb"},
    {"stromme_embedding", "embedding"},
    {"taut_rank", "embedding"},
    {"v_cohomology", "vcoh"},
    {"koszul_summands", "verify-vanishing"},
    {"verify_vanishing", "verify-vanishing"},
    {"summand_size_bound", "vcoh"},
    {"hankel", "hankel"},
    {"hankel_rank", "splitting-from-point"},
    {"splitting_from_point", "splitting-from-point"},
    {"secant_point", "splitting-from-point"},
    {"fitting_generators", "fitting"},
};

int run(int argc, char** argv) {
    CLI::App app{"exact calculus for splitting loci of bundles on P^1"};
    app.require_subcommand(0, 1);

    bool timing = false;
    bool ops_table = false;
    app.add_flag("--timing", timing, "include elapsed_ms in the report");
    app.add_flag("--ops-table", ops_table,
                 "print the operation -> subcommand coverage map");

    // Shared option storage; each subcommand binds the strings it needs.
    std::string e_str, f_str, a_str, ep_str, i_str;
    std::string mu_str, alpha_str, beta_str, nu_str, lam_str, chain_str;
    std::string point_str, nodes_str, weights_str, method = "all";
    int r = 0, N = 0, m = 0, k = 0, n = 0, g = 0, kk = 0;
    long d = 0, c = 0;
    int D = 0, mu_cap = 0, jobs = 1, t = -1, e_int = 0;
    std::optional<long> rk_f, rk_g;
    std::optional<long> twist;
    bool plain = false, detail = false;

    int exit_code = 0;
    Emitter emitter;
    emitter.timing = &timing;
    app.fallthrough();

    auto* dominance = app.add_subcommand("dominance",
                                         "dominance order between two types");
    dominance->add_option("--e", e_str)->required();
    dominance->add_option("--f", f_str)->required();
    dominance->add_option("--method", method,
                          "all | partial-sums | h1 | flag");
    dominance->add_flag("--plain", plain);
    dominance->callback([&] {
        const SplittingType e = parse_splitting(e_str);
        const SplittingType f = parse_splitting(f_str);
        json outputs, counterexamples = json::array();
        bool result = false;
        if (method == "partial-sums") {
            result = dominates(e, f);
        } else if (method == "h1") {
            result = dominates_via_h1(e, f);
        } else if (method == "flag") {
            result = dominates_via_flag(e, f);
        } else if (method == "all") {
            const bool a = dominates(e, f);
            const bool b = dominates_via_h1(e, f);
            const bool cc = dominates_via_flag(e, f);
            outputs["methods"] = {{"partial_sums", a}, {"h1", b}, {"flag", cc}};
            if (a != b || a != cc)
                counterexamples.push_back(
                    {{"e", to_json(e)}, {"f", to_json(f)}});
            result = a;
        } else {
            throw precondition_error("unknown dominance method");
        }
        outputs["dominates"] = result;
        if (plain) {
            std::cout << (result ? "true" : "false") << "\n";
            exit_code = 0;
            return;
        }
        exit_code = emitter.emit(
            "dominance", {{"e", to_json(e)}, {"f", to_json(f)}}, outputs,
            counterexamples);
    });

    auto* usub = app.add_subcommand("u", "expected codimension h1 End O(e)");
    usub->add_option("--e", e_str)->required();
    long twist_value = 0;
    auto* twist_opt = usub->add_option("--twist", twist_value,
                                       "also report h0/h1 of O(e)(twist)");
    usub->add_flag("--plain", plain);
    usub->callback([&] {
        const SplittingType e = parse_splitting(e_str);
        if (twist_opt->count())
            twist = twist_value;
        if (plain) {
            std::cout << u(e) << "\n";
            return;
        }
        json outputs;
        outputs["u"] = u(e);
        if (twist) {
            outputs["twist"] = *twist;
            outputs["h0"] = h0(e, *twist);
            outputs["h1"] = h1(e, *twist);
        }
        exit_code = emitter.emit("u", {{"e", to_json(e)}}, outputs);
    });

    auto* ebsub = app.add_subcommand(
        "eb", "maximal type of given rank/degree admitting an O(a)-subsheaf");
    ebsub->add_option("--r", r)->required();
    ebsub->add_option("--d", d)->required();
    ebsub->add_option("--a", a_str, "subsheaf type; may be empty");
    ebsub->add_flag("--plain", plain);
    ebsub->callback([&] {
        const SplittingType a = parse_splitting(a_str);
        const SplittingType result = eb(r, d, a);
        if (plain) {
            std::cout << plain_list(result.entries()) << "\n";
            return;
        }
        json outputs;
        outputs["eb"] = to_json(result);
        outputs["admits_subsheaf"] = admits_subsheaf(a, result);
        exit_code = emitter.emit(
            "eb", {{"r", r}, {"d", d}, {"a", to_json(a)}}, outputs);
    });

    auto* adm = app.add_subcommand("admissible",
                                   "index sets with balanced subquotients");
    adm->add_option("--e", e_str)->required();
    adm->callback([&] {
        const SplittingType e = parse_splitting(e_str);
        json outputs;
        outputs["m"] = hn_data(e).steps();
        outputs["sets"] = json::array();
        for (const auto& s : admissible_sets(e))
            outputs["sets"].push_back(s);
        exit_code = emitter.emit("admissible", {{"e", to_json(e)}}, outputs);
    });

    auto* tame = app.add_subcommand("tame", "balancedness classification");
    tame->add_option("--e", e_str)->required();
    tame->add_flag("--plain", plain);
    tame->callback([&] {
        const SplittingType e = parse_splitting(e_str);
        if (plain) {
            std::cout << (is_tame(e) ? "true" : "false") << "\n";
            return;
        }
        json outputs;
        outputs["balanced"] = is_balanced(e);
        outputs["perfectly_balanced"] = is_perfectly_balanced(e);
        outputs["tame"] = is_tame(e);
        exit_code = emitter.emit("tame", {{"e", to_json(e)}}, outputs);
    });

    auto* hnsub = app.add_subcommand("hn", "Harder-Narasimhan flag data");
    hnsub->add_option("--e", e_str)->required();
    hnsub->callback([&] {
        const SplittingType e = parse_splitting(e_str);
        const HNData hn = hn_data(e);
        json outputs;
        outputs["m"] = hn.steps();
        outputs["flag"] = json::array();
        for (const auto& sub : hn.flag)
            outputs["flag"].push_back(to_json(sub));
        outputs["quotient_ranks"] = hn.quotient_ranks;
        outputs["quotient_degrees"] = hn.quotient_degrees;
        exit_code = emitter.emit("hn", {{"e", to_json(e)}}, outputs);
    });

    auto* strat = app.add_subcommand(
        "stratum-dim", "codimension of a subsheaf stratum in the ambient Quot");
    strat->add_option("--a", a_str)->required();
    strat->add_option("--e", e_str)->required();
    strat->add_option("--c", c)->required();
    long rk_f_value = 0, rk_g_value = 0;
    auto* rkf_opt = strat->add_option("--rk-f", rk_f_value);
    auto* rkg_opt = strat->add_option("--rk-g", rk_g_value);
    strat->add_flag("--plain", plain);
    strat->callback([&] {
        const SplittingType a = parse_splitting(a_str);
        const SplittingType e = parse_splitting(e_str);
        if (rkf_opt->count())
            rk_f = rk_f_value;
        if (rkg_opt->count())
            rk_g = rk_g_value;
        const long rf = rk_f.value_or(e.rank() * (c + 1) - e.degree());
        const long rg = rk_g.value_or(e.rank() * c - e.degree());
        const StratumCodim sc = stratum_codim(a, e, c, rf, rg);
        if (plain) {
            std::cout << sc.codim << "\n";
            return;
        }
        json outputs;
        outputs["codim"] = sc.codim;
        outputs["rk_f"] = sc.rk_f;
        outputs["rk_g"] = sc.rk_g;
        outputs["hom_term"] = sc.hom_term;
        outputs["u_a"] = u(a);
        outputs["u_e"] = u(e);
        outputs["hom_a_e"] = hom(a, e);
        outputs["ext1_a_e"] = ext1(a, e);
        outputs["gap"] = gap(a, e);
        exit_code = emitter.emit(
            "stratum-dim",
            {{"a", to_json(a)}, {"e", to_json(e)}, {"c", c}}, outputs);
    });

    auto* fiber = app.add_subcommand("fiber-dim",
                                     "dimension of a flag stratum in a fiber");
    fiber->add_option("--chain", chain_str,
                      "semicolon-separated splitting types, small to large")
        ->required();
    fiber->add_flag("--plain", plain);
    fiber->callback([&] {
        FlagChain chain;
        std::size_t pos = 0;
        while (pos <= chain_str.size()) {
            std::size_t semi = chain_str.find(';', pos);
            if (semi == std::string::npos)
                semi = chain_str.size();
            chain.types.push_back(
                parse_splitting(chain_str.substr(pos, semi - pos)));
            pos = semi + 1;
            if (semi == chain_str.size())
                break;
        }
        const long dim = flag_stratum_dim(chain);
        if (plain) {
            std::cout << dim << "\n";
            return;
        }
        json inputs;
        inputs["chain"] = json::array();
        for (const auto& tpe : chain.types)
            inputs["chain"].push_back(to_json(tpe));
        exit_code = emitter.emit("fiber-dim", inputs, {{"dim", dim}});
    });

    auto* tan = app.add_subcommand("tangent",
                                   "tangent-dimension identity at a flag");
    tan->add_option("--e", e_str)->required();
    tan->add_option("--i", i_str, "admissible index set, e.g. 1,2; may be empty");
    tan->add_option("--ep", ep_str)->required();
    tan->callback([&] {
        const SplittingType e = parse_splitting(e_str);
        const SplittingType ep = parse_splitting(ep_str);
        const std::vector<int> I = parse_int_list(i_str);
        const TangentCheck tc = tangent_check(e, I, ep);
        json outputs;
        outputs["lhs"] = tc.lhs;
        outputs["rhs"] = tc.rhs;
        outputs["equal"] = tc.lhs == tc.rhs;
        json counterexamples = json::array();
        if (tc.lhs != tc.rhs)
            counterexamples.push_back(outputs);
        exit_code = emitter.emit(
            "tangent",
            {{"e", to_json(e)}, {"i", I}, {"ep", to_json(ep)}}, outputs,
            counterexamples);
    });

    auto* bwbsub = app.add_subcommand("bwb",
                                      "Borel-Weil-Bott on a Grassmannian");
    bwbsub->add_option("--k", k)->required();
    bwbsub->add_option("--n", n)->required();
    auto* mu_opt = bwbsub->add_option("--mu", mu_str);
    auto* alpha_opt = bwbsub->add_option("--alpha", alpha_str);
    auto* nu_opt = bwbsub->add_option("--nu", nu_str);
    bwbsub->add_flag("--plain", plain);
    bwbsub->callback([&] {
        json outputs;
        std::optional<long> degree;
        json inputs = {{"k", k}, {"n", n}};
        if (nu_opt->count()) {
            require(!mu_opt->count() && !alpha_opt->count(),
                    "--nu excludes --mu/--alpha");
            const Partition nu = parse_partition(nu_str);
            inputs["nu"] = to_json(nu);
            const QuotDualOutcome out = bwb_quot_dual(k, n, nu);
            outputs["vanishes"] = out.vanishes();
            if (!out.vanishes()) {
                outputs["degree"] = *out.degree;
                degree = *out.degree;
                if (out.witness_j)
                    outputs["witness_j"] = *out.witness_j;
            }
        } else {
            const Partition mu = parse_partition(mu_str);
            const Partition alpha = parse_partition(alpha_str);
            inputs["mu"] = to_json(mu);
            inputs["alpha"] = to_json(alpha);
            const BWBOutcome out = bwb_mixed(k, n, mu, alpha);
            outputs["vanishes"] = out.vanishes();
            if (!out.vanishes()) {
                outputs["degree"] = *out.degree;
                degree = *out.degree;
                const BWBIndices idx = bwb_indices(k, n, mu, alpha);
                outputs["indices"] = idx.i;
                outputs["d1"] = idx.d1;
            }
        }
        if (plain) {
            if (degree)
                std::cout << *degree << "\n";
            else
                std::cout << "vanishes\n";
            return;
        }
        exit_code = emitter.emit("bwb", inputs, outputs);
    });

    auto* embsub = app.add_subcommand(
        "embedding", "Grassmannian-product parameters of the Quot embedding");
    embsub->add_option("--r", r)->required();
    embsub->add_option("--d", d)->required();
    embsub->add_option("--N", N)->required();
    embsub->add_option("--m", m)->required();
    embsub->callback([&] {
        const QuotEmbedding emb = stromme_embedding(r, d, N, m);
        json outputs;
        outputs["k1"] = emb.k1;
        outputs["n1"] = emb.n1;
        outputs["k2"] = emb.k2;
        outputs["n2"] = emb.n2;
        outputs["taut_rank_m_minus_1"] = taut_rank(r, d, m - 1);
        outputs["taut_rank_m"] = taut_rank(r, d, m);
        exit_code = emitter.emit(
            "embedding", {{"r", r}, {"d", d}, {"N", N}, {"m", m}}, outputs);
    });

    auto* vcoh = app.add_subcommand(
        "vcoh", "cohomology of a Koszul summand on the Grassmannian product");
    auto* vc_r = vcoh->add_option("--r", r);
    auto* vc_d = vcoh->add_option("--d", d);
    auto* vc_N = vcoh->add_option("--N", N);
    auto* vc_m = vcoh->add_option("--m", m);
    vcoh->add_option("--mu", mu_str);
    vcoh->add_option("--alpha", alpha_str);
    vcoh->add_option("--beta", beta_str);
    auto* schur_opt = vcoh->add_option(
        "--schur-complex", lam_str,
        "instead report the Schur complex terms of this partition");
    vcoh->add_option("--t", t, "term index for --schur-complex");
    vcoh->add_flag("--detail", detail, "per-summand second-factor data");
    vcoh->callback([&] {
        if (schur_opt->count()) {
            const Partition lam = parse_partition(lam_str);
            require(t >= 0, "--schur-complex requires --t");
            json outputs;
            outputs["terms"] = json::array();
            for (const auto& [pair, mult] : schur_complex_terms(lam, t))
                outputs["terms"].push_back({{"source", to_json(pair.first)},
                                            {"target", to_json(pair.second)},
                                            {"multiplicity", mult}});
            exit_code = emitter.emit(
                "vcoh", {{"schur_complex", to_json(lam)}, {"t", t}}, outputs);
            return;
        }
        require(vc_r->count() && vc_d->count() && vc_N->count() &&
                    vc_m->count(),
                "--r, --d, --N, --m are required unless --schur-complex is "
                "given");
        const QuotEmbedding emb = stromme_embedding(r, d, N, m);
        const Partition mu = parse_partition(mu_str);
        const Partition alpha = parse_partition(alpha_str);
        const Partition beta = parse_partition(beta_str);
        const VCohomologyDetail det = v_cohomology_detail(emb, mu, alpha, beta);
        json outputs;
        outputs["report"] = json::object();
        for (const auto& [deg, mult] : det.report)
            outputs["report"][std::to_string(deg)] = mult;
        outputs["factor1_vanishes"] = det.factor1.vanishes();
        if (!det.factor1.vanishes())
            outputs["d1"] = *det.factor1.degree;
        if (detail) {
            outputs["terms"] = json::array();
            for (const VFactorTerm& term : det.terms) {
                json tj;
                tj["nu"] = to_json(term.nu);
                tj["multiplicity"] = term.multiplicity;
                tj["vanishes"] = term.outcome.vanishes();
                if (!term.outcome.vanishes()) {
                    tj["d2"] = *term.outcome.degree;
                    if (term.outcome.witness_j)
                        tj["j"] = *term.outcome.witness_j;
                    if (!mu.empty() && term.outcome.witness_j) {
                        const SizeBoundCheck pc =
                            summand_size_bound(emb, mu, alpha, beta, term.nu);
                        tj["size_bound"] = {{"lhs", pc.lhs},
                                            {"rhs", pc.rhs},
                                            {"i1", pc.i1},
                                            {"j", pc.j}};
                    }
                }
                outputs["terms"].push_back(std::move(tj));
            }
        }
        exit_code = emitter.emit("vcoh",
                                 {{"r", r},
                                  {"d", d},
                                  {"N", N},
                                  {"m", m},
                                  {"mu", to_json(mu)},
                                  {"alpha", to_json(alpha)},
                                  {"beta", to_json(beta)}},
                                 outputs);
    });

    auto* verify = app.add_subcommand(
        "verify-vanishing", "sweep the cohomology degree bound; exits 1 on "
                            "any counterexample");
    verify->add_option("--r", r)->required();
    verify->add_option("--d", d)->required();
    verify->add_option("--N", N)->required();
    verify->add_option("--m", m)->required();
    verify->add_option("--D", D, "total size |alpha| + |beta|")->required();
    verify->add_option("--mu-cap", mu_cap)->required();
    verify->add_option("--jobs", jobs);
    verify->callback([&] {
        const QuotEmbedding emb = stromme_embedding(r, d, N, m);
        const VanishingReport rep = jobs > 1
                                        ? verify_vanishing(emb, D, mu_cap, jobs)
                                        : verify_vanishing_serial(emb, D, mu_cap);
        json outputs;
        outputs["tuples_checked"] = rep.tuples_checked;
        outputs["koszul_mu_count"] = [&] {
            long total = 0;
            for (int kk2 = 0; kk2 <= mu_cap; ++kk2)
                total += static_cast<long>(koszul_summands(emb, kk2).size());
            return total;
        }();
        outputs["counterexample_count"] = rep.counterexamples.size();
        outputs["sharp"] = json::array();
        for (const auto& w : rep.sharp)
            outputs["sharp"].push_back(witness_json(w));
        json counterexamples = json::array();
        for (const auto& w : rep.counterexamples)
            counterexamples.push_back(witness_json(w));
        exit_code = emitter.emit("verify-vanishing",
                                 {{"r", r},
                                  {"d", d},
                                  {"N", N},
                                  {"m", m},
                                  {"D", D},
                                  {"mu_cap", mu_cap},
                                  {"jobs", jobs}},
                                 outputs, counterexamples);
    });

    auto* hank = app.add_subcommand("hankel", "symbolic Hankel matrix");
    hank->add_option("--k", k)->required();
    hank->add_option("--d", d)->required();
    hank->callback([&] {
        const HankelMatrix mat = hankel(k, static_cast<int>(d));
        json outputs;
        outputs["rows"] = mat.rows();
        outputs["cols"] = mat.cols();
        outputs["entries"] = json::array();
        for (int i = 1; i <= mat.rows(); ++i) {
            json row = json::array();
            for (int j = 1; j <= mat.cols(); ++j)
                row.push_back("a_" + std::to_string(mat.var_index(i, j)));
            outputs["entries"].push_back(std::move(row));
        }
        exit_code = emitter.emit("hankel", {{"k", k}, {"d", d}}, outputs);
    });

    auto* fit = app.add_subcommand("fitting",
                                   "maximal-minor generators of a stratum ideal");
    fit->add_option("--d", d)->required();
    fit->add_option("--e", e_int)->required();
    fit->add_flag("--plain", plain, "one generator per line");
    fit->callback([&] {
        const auto gens = fitting_generators(static_cast<int>(d), e_int);
        if (plain) {
            for (const auto& gpoly : gens)
                std::cout << gpoly.to_string() << "\n";
            return;
        }
        json outputs;
        outputs["count"] = gens.size();
        outputs["generators"] = json::array();
        for (const auto& gpoly : gens)
            outputs["generators"].push_back(gpoly.to_string());
        exit_code =
            emitter.emit("fitting", {{"d", d}, {"e", e_int}}, outputs);
    });

    auto* sfp = app.add_subcommand(
        "splitting-from-point",
        "splitting type of the extension at a point of Ext^1(O(d), O)");
    sfp->add_option("--d", d)->required();
    auto* point_opt = sfp->add_option("--point", point_str,
                                      "comma-separated rationals, length d-1");
    auto* nodes_opt = sfp->add_option("--secant-nodes", nodes_str);
    auto* weights_opt = sfp->add_option("--secant-weights", weights_str);
    sfp->add_flag("--plain", plain);
    sfp->callback([&] {
        HankelPoint pt;
        pt.d = static_cast<int>(d);
        if (point_opt->count()) {
            require(!nodes_opt->count() && !weights_opt->count(),
                    "--point excludes --secant-nodes/--secant-weights");
            pt.coords = parse_rational_list(point_str);
        } else {
            require(nodes_opt->count() && weights_opt->count(),
                    "need --point or both --secant-nodes and --secant-weights");
            const auto nodes = parse_rational_list(nodes_str);
            const auto weights = parse_rational_list(weights_str);
            pt = secant_point(pt.d, static_cast<int>(nodes.size()), nodes,
                              weights);
        }
        const SplittingType split = splitting_from_point(pt);
        if (plain) {
            std::cout << plain_list(split.entries()) << "\n";
            return;
        }
        json outputs;
        outputs["splitting"] = to_json(split);
        outputs["point"] = json::array();
        for (const auto& coord : pt.coords)
            outputs["point"].push_back(to_json(coord));
        outputs["hankel_ranks"] = json::array();
        for (int kk2 = 1; kk2 <= pt.d - 1; ++kk2)
            outputs["hankel_ranks"].push_back(
                hankel_rank(hankel(kk2, pt.d), pt));
        exit_code = emitter.emit("splitting-from-point", {{"d", d}}, outputs);
    });

    auto* gp = app.add_subcommand("gp-type",
                                  "maximal splitting type of Brill-Noether data");
    gp->add_option("--g", g)->required();
    gp->add_option("--d", d)->required();
    gp->add_option("--r", r)->required();
    gp->add_option("--k", kk)->required();
    gp->add_flag("--plain", plain);
    gp->callback([&] {
        const SplittingType result = gp_type(g, d, r, kk);
        if (plain) {
            std::cout << plain_list(result.entries()) << "\n";
            return;
        }
        exit_code = emitter.emit(
            "gp-type", {{"g", g}, {"d", d}, {"r", r}, {"k", kk}},
            {{"type", to_json(result)}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (ops_table) {
        json table;
        for (const auto& [op, sub] : kOpsTable)
            table[op] = sub;
        std::cout << table.dump(2) << "\n";
        return 0;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return 2;
    }
    return exit_code;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const precondition_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
