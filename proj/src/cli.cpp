#include "argshift/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "argshift/corpus.hpp"
#include "argshift/errors.hpp"
#include "argshift/formal_invariant.hpp"
#include "argshift/io.hpp"
#include "argshift/pencil.hpp"
#include "argshift/shift_algebra.hpp"

namespace argshift::cli {

namespace {

using nlohmann::json;

struct Options {
    std::string algebra;
    std::string point;
    std::string x;
    std::string shift;
    std::string invariants;
    std::string corpus = "corpus";
    int order = 3;
    std::uint64_t seed = kDefaultSeed;
    bool json_output = false;
};

LieAlgebra load_validated(const std::string& path) {
    LieAlgebra alg = load_algebra_file(path);
    if (const auto violations = validate(alg); !violations.empty())
        throw InputError("'" + path + "' fails validation: " + violations.front().describe(alg) +
                         (violations.size() > 1 ? " (+" + std::to_string(violations.size() - 1) + " more)" : ""));
    return alg;
}

// A point argument is either a file (containing a "point ..." line) or an
// inline comma-separated list "v1,v2,...".
DualPoint load_point(const std::string& spec, const LieAlgebra& alg) {
    if (spec.find(',') == std::string::npos) return load_point_file(spec, alg.dim());
    std::string line = "point " + spec;
    std::replace(line.begin(), line.end(), ',', ' ');
    return parse_point_line(line, alg.dim());
}

void enforce_order_guardrail(const LieAlgebra& alg, int order) {
    if (order < 1) throw InputError("--order must be at least 1");
    // unknowns at the top level: C(n + order - 1, order)
    mpz_class unknowns;
    mpz_bin_uiui(unknowns.get_mpz_t(), static_cast<unsigned long>(alg.dim() + order - 1),
                 static_cast<unsigned long>(order));
    if (unknowns > 100000)
        throw InputError("order " + std::to_string(order) + " needs " + unknowns.get_str() +
                         " unknowns per level (limit 100000); lower --order");
}

void emit(std::ostream& out, bool as_json, const json& j,
          const std::vector<std::string>& text_lines) {
    if (as_json) {
        out << j.dump() << "\n";
    } else {
        for (const auto& line : text_lines) out << line << "\n";
    }
}

int verb_validate(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_algebra_file(opt.algebra);
    const auto violations = validate(alg);
    json j{{"valid", violations.empty()}};
    std::vector<std::string> lines{std::string("valid=") + (violations.empty() ? "true" : "false")};
    j["violations"] = json::array();
    for (const auto& v : violations) {
        j["violations"].push_back(v.describe(alg));
        lines.push_back("violation=" + v.describe(alg));
    }
    emit(out, opt.json_output, j, lines);
    return violations.empty() ? kExitOk : kExitMathFailure;
}

int verb_index(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    json j{{"index", est.index}, {"probabilistic", true}, {"samples", est.samples}, {"seed", est.seed}};
    j["witness"] = json::array();
    for (const auto& c : est.witness.coords) j["witness"].push_back(format_rational(c));
    emit(out, opt.json_output, j, {"index=" + std::to_string(est.index) + " (probabilistic)"});
    return kExitOk;
}

int verb_ann(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    const Mat basis = annihilator(alg, a);
    json j{{"dim", basis.rows()}};
    j["basis"] = json::array();
    std::string list;
    for (int i = 0; i < basis.rows(); ++i) {
        const std::string p = format_poly(Poly::linear_form(basis.row(i)), alg.labels());
        j["basis"].push_back(p);
        if (!list.empty()) list += "; ";
        list += p;
    }
    emit(out, opt.json_output, j, {"dim=" + std::to_string(basis.rows()), "basis=" + list});
    return kExitOk;
}

int verb_regular(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const bool reg = is_regular(alg, a, est.index);
    json j{{"regular", reg}, {"index", est.index}, {"seed", est.seed}};
    emit(out, opt.json_output, j, {std::string("regular=") + (reg ? "true" : "false")});
    return kExitOk;
}

int verb_shift_basis(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    enforce_order_guardrail(alg, opt.order);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const InvariantBasis basis = build_basis(alg, a, opt.order, est.index);
    json j{{"order", opt.order}, {"members", json::array()}};
    std::vector<std::string> lines;
    for (int i = 0; i < basis.size(); ++i) {
        json member = json::array();
        for (int k = 1; k <= opt.order; ++k) {
            const std::string p = format_poly(basis.members[static_cast<size_t>(i)].term(k), alg.labels());
            member.push_back(p);
            lines.push_back("f[" + std::to_string(i + 1) + "][" + std::to_string(k) + "]=" + p);
        }
        j["members"].push_back(member);
    }
    emit(out, opt.json_output, j, lines);
    return kExitOk;
}

GeneratorSet build_requested_set(const Options& opt, const LieAlgebra& alg, const DualPoint& a,
                                 int ind) {
    if (!opt.invariants.empty())
        return build_Ya(alg, a, load_invariants_file(opt.invariants, alg.labels()));
    enforce_order_guardrail(alg, opt.order);
    return build_Fa(alg, a, opt.order, ind);
}

int emit_generator_set(const Options& opt, const LieAlgebra& alg, const GeneratorSet& set,
                       std::ostream& out) {
    json j{{"kind", set.kind == ShiftKind::F ? "F" : "Y"}, {"count", set.size()}};
    j["generators"] = json::array();
    j["sources"] = json::array();
    std::vector<std::string> lines{"count=" + std::to_string(set.size())};
    for (int t = 0; t < set.size(); ++t) {
        const std::string p = format_poly(set.generators[static_cast<size_t>(t)], alg.labels());
        j["generators"].push_back(p);
        j["sources"].push_back({set.sources[static_cast<size_t>(t)].invariant, set.sources[static_cast<size_t>(t)].level});
        lines.push_back("gen[" + std::to_string(t) + "]=" + p);
    }
    emit(out, opt.json_output, j, lines);
    return kExitOk;
}

int verb_build_fa(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    enforce_order_guardrail(alg, opt.order);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    return emit_generator_set(opt, alg, build_Fa(alg, a, opt.order, est.index), out);
}

int verb_build_ya(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    const auto invariants = load_invariants_file(opt.invariants, alg.labels());
    return emit_generator_set(opt, alg, build_Ya(alg, a, invariants), out);
}

int verb_commute(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const GeneratorSet set = build_requested_set(opt, alg, a, est.index);
    const CommutativityReport report = commutativity_check(alg, a, set);
    json j{{"ok", report.ok()}, {"pairs", set.size() * (set.size() - 1) / 2}};
    std::vector<std::string> lines{std::string("commute=") + (report.ok() ? "ok" : "fail")};
    if (report.standard) {
        j["standard_pair"] = {report.standard->i, report.standard->j};
        lines.push_back("standard_pair=(" + std::to_string(report.standard->i) + "," +
                        std::to_string(report.standard->j) + ")");
    }
    if (report.frozen) {
        j["frozen_pair"] = {report.frozen->i, report.frozen->j};
        lines.push_back("frozen_pair=(" + std::to_string(report.frozen->i) + "," +
                        std::to_string(report.frozen->j) + ")");
    }
    emit(out, opt.json_output, j, lines);
    return report.ok() ? kExitOk : kExitMathFailure;
}

int verb_trdeg(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const GeneratorSet set = build_requested_set(opt, alg, a, est.index);
    const int deg = trdeg(alg, set, opt.seed);
    json j{{"trdeg", deg}, {"probabilistic", true}, {"seed", opt.seed}};
    emit(out, opt.json_output, j, {"trdeg=" + std::to_string(deg) + " (probabilistic)"});
    return kExitOk;
}

int verb_compare(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    const DualPoint x = load_point(opt.x, alg);
    const auto invariants = load_invariants_file(opt.invariants, alg.labels());
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const SpanCompareReport report = span_compare(alg, est.index, a, invariants, x);
    json j{{"dim_dya", report.dim_dya},
           {"dim_dfa", report.dim_dfa},
           {"inclusion", report.inclusion},
           {"equal", report.equal}};
    std::vector<std::string> lines{"dim_dya=" + std::to_string(report.dim_dya),
                                   "dim_dfa=" + std::to_string(report.dim_dfa),
                                   std::string("inclusion=") + (report.inclusion ? "true" : "false"),
                                   std::string("equal=") + (report.equal ? "true" : "false")};
    if (report.prop5_agrees) {
        j["prop5"] = *report.prop5_agrees ? "agree" : "disagree";
        lines.push_back(std::string("prop5=") + (*report.prop5_agrees ? "agree" : "disagree"));
    } else {
        j["prop5"] = "skipped";
        lines.push_back("prop5=skipped");
    }
    emit(out, opt.json_output, j, lines);
    return (report.prop5_agrees && !*report.prop5_agrees) ? kExitMathFailure : kExitOk;
}

int verb_crit(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint y = load_point(opt.point, alg);
    const auto invariants = load_invariants_file(opt.invariants, alg.labels());
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const bool crit = crit_test(alg, est.index, invariants, y);
    json j{{"crit", crit}};
    emit(out, opt.json_output, j, {std::string("crit=") + (crit ? "true" : "false")});
    return kExitOk;
}

int verb_prop1(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    const auto invariants = load_invariants_file(opt.invariants, alg.labels());
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const Prop1Report report = prop1_test(alg, est.index, a, invariants, opt.seed);
    json j{{"cond1", report.differentials_generate_ann},
           {"cond2_proxy", report.spans_agree_proxy},
           {"agree", report.agree}};
    emit(out, opt.json_output, j,
         {std::string("cond1=") + (report.differentials_generate_ann ? "true" : "false"),
          std::string("cond2_proxy=") + (report.spans_agree_proxy ? "true" : "false"),
          std::string("agree=") + (report.agree ? "true" : "false")});
    return kExitOk;
}

int verb_semiinv(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const DegreeEstimate deg = semiinvariant_degree(alg, est.index, opt.seed);
    json j{{"semiinv_degree", deg.degree}, {"probabilistic", true}, {"samples", deg.samples}, {"seed", deg.seed}};
    emit(out, opt.json_output, j, {"semiinv_degree=" + std::to_string(deg.degree) + " (probabilistic)"});
    return kExitOk;
}

int verb_complete(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const bool complete = completeness_test(alg, est.index, opt.seed);
    json j{{"complete", complete}, {"seed", opt.seed}};
    emit(out, opt.json_output, j, {std::string("complete=") + (complete ? "true" : "false")});
    return kExitOk;
}

int verb_dim_dfa(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint x = load_point(opt.point, alg);
    const DualPoint a = load_point(opt.shift, alg);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const int dim = dim_dFa(alg, est.index, x, a);
    if (opt.json_output) {
        const LineGcdReport report = line_gcd(alg, est.index, x, a);
        json j{{"dim_dfa", dim},
               {"gcd", format_unipoly(report.gcd, "lambda")},
               {"gcd_degree", report.degree},
               {"minor_count", report.minor_count},
               {"rank", report.rank}};
        j["sampled_lambdas"] = json::array();
        for (const auto& l : report.sampled_lambdas) j["sampled_lambdas"].push_back(format_rational(l));
        out << j.dump() << "\n";
    } else {
        out << "dim_dfa=" << dim << "\n";
    }
    return kExitOk;
}

int verb_sing1(const Options& opt, std::ostream& out) {
    const LieAlgebra alg = load_validated(opt.algebra);
    const DualPoint a = load_point(opt.point, alg);
    const IndexEstimate est = estimate_index(alg, opt.seed);
    const DegreeEstimate deg = semiinvariant_degree(alg, est.index, opt.seed);
    const Sing1Result result = sing1_test(alg, est.index, a, deg.degree, opt.seed);
    json j{{"in_sing1", result.in_sing1}, {"samples", result.samples}, {"seed", result.seed}};
    std::string line = std::string("in_sing1=") + (result.in_sing1 ? "true (probabilistic)" : "false (certified)");
    if (result.certificate) {
        j["certificate"] = json::array();
        for (const auto& c : result.certificate->coords) j["certificate"].push_back(format_rational(c));
    }
    emit(out, opt.json_output, j, {line});
    return kExitOk;
}

int verb_verify_corpus(const Options& opt, std::ostream& out) {
    const auto entries = load_corpus(opt.corpus);
    std::ostringstream report;
    const int failures = verify_corpus(entries, report, opt.seed);
    if (opt.json_output) {
        json j{{"ok", failures == 0}, {"failures", failures}, {"entries", entries.size()}};
        out << j.dump() << "\n";
    } else {
        out << report.str();
        out << (failures == 0 ? "corpus=ok" : "corpus=fail failures=" + std::to_string(failures)) << "\n";
    }
    return failures == 0 ? kExitOk : kExitMathFailure;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact argument-shift computations in Lie-Poisson algebras"};
    app.require_subcommand(1);

    std::function<int(const Options&, std::ostream&)> handler;

    auto add_common = [&](CLI::App* sub, bool needs_algebra = true) {
        if (needs_algebra) sub->add_option("--algebra", opt.algebra, "structure-constant file")->required();
        sub->add_option("--seed", opt.seed, "seed for randomized operations");
        sub->add_flag("--json", opt.json_output, "emit JSON instead of key=value text");
    };
    auto set_handler = [&](CLI::App* sub, int (*fn)(const Options&, std::ostream&)) {
        sub->callback([&handler, fn] { handler = fn; });
    };

    {
        auto* sub = app.add_subcommand("validate", "check antisymmetry and the Jacobi identity");
        add_common(sub);
        set_handler(sub, verb_validate);
    }
    {
        auto* sub = app.add_subcommand("index", "index of the algebra (probabilistic)");
        add_common(sub);
        set_handler(sub, verb_index);
    }
    {
        auto* sub = app.add_subcommand("ann", "annihilator basis of a point");
        add_common(sub);
        sub->add_option("--point", opt.point, "point file or inline v1,v2,...")->required();
        set_handler(sub, verb_ann);
    }
    {
        auto* sub = app.add_subcommand("regular", "is the point regular?");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        set_handler(sub, verb_regular);
    }
    {
        auto* sub = app.add_subcommand("shift-basis", "truncated formal invariants at a regular point");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        sub->add_option("--order", opt.order, "truncation order (default 3)");
        set_handler(sub, verb_shift_basis);
    }
    {
        auto* sub = app.add_subcommand("build-fa", "generators of the polynomial-shift algebra F_a");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        sub->add_option("--order", opt.order);
        set_handler(sub, verb_build_fa);
    }
    {
        auto* sub = app.add_subcommand("build-ya", "generators of the shift algebra Y_a from invariants");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        sub->add_option("--invariants", opt.invariants, "file with one invariant per line")->required();
        set_handler(sub, verb_build_ya);
    }
    {
        auto* sub = app.add_subcommand("commute", "pairwise commutativity in both brackets");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        sub->add_option("--order", opt.order);
        sub->add_option("--invariants", opt.invariants, "check Y_a instead of F_a");
        set_handler(sub, verb_commute);
    }
    {
        auto* sub = app.add_subcommand("trdeg", "transcendence degree of the generator set");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        sub->add_option("--order", opt.order);
        sub->add_option("--invariants", opt.invariants, "use Y_a instead of F_a");
        set_handler(sub, verb_trdeg);
    }
    {
        auto* sub = app.add_subcommand("compare", "compare dY_a(x) with dF_a(x)");
        add_common(sub);
        sub->add_option("--point", opt.point, "the shift point a")->required();
        sub->add_option("--x", opt.x, "the evaluation point x")->required();
        sub->add_option("--invariants", opt.invariants)->required();
        set_handler(sub, verb_compare);
    }
    {
        auto* sub = app.add_subcommand("crit", "is the point critical for the invariant map?");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        sub->add_option("--invariants", opt.invariants)->required();
        set_handler(sub, verb_crit);
    }
    {
        auto* sub = app.add_subcommand("prop1", "do invariant differentials generate Ann(a)?");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        sub->add_option("--invariants", opt.invariants)->required();
        set_handler(sub, verb_prop1);
    }
    {
        auto* sub = app.add_subcommand("semiinv-degree", "degree of the fundamental semi-invariant");
        add_common(sub);
        set_handler(sub, verb_semiinv);
    }
    {
        auto* sub = app.add_subcommand("complete", "completeness of F_a (deg p_g = 0)");
        add_common(sub);
        set_handler(sub, verb_complete);
    }
    {
        auto* sub = app.add_subcommand("dim-dfa", "dim dF_a(x) via the pencil formula");
        add_common(sub);
        sub->add_option("--point", opt.point, "the evaluation point x")->required();
        sub->add_option("--shift", opt.shift, "the shift point a")->required();
        set_handler(sub, verb_dim_dfa);
    }
    {
        auto* sub = app.add_subcommand("sing1", "Sing_1 membership (one-sided Monte Carlo)");
        add_common(sub);
        sub->add_option("--point", opt.point)->required();
        set_handler(sub, verb_sing1);
    }
    {
        auto* sub = app.add_subcommand("verify-corpus", "recompute and diff every recorded corpus fact");
        add_common(sub, /*needs_algebra=*/false);
        sub->add_option("--corpus", opt.corpus, "corpus directory (default ./corpus)");
        set_handler(sub, verb_verify_corpus);
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        return handler(opt, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitMathFailure;
    } catch (const std::exception& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    }
}

} // namespace argshift::cli
