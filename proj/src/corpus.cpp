#include "argshift/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "argshift/errors.hpp"
#include "argshift/formal_invariant.hpp"
#include "argshift/io.hpp"
#include "argshift/pencil.hpp"
#include "argshift/shift_algebra.hpp"

namespace argshift {

namespace {

std::string strip_comment(const std::string& line) {
    const size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> words;
    std::string w;
    while (is >> w) words.push_back(w);
    return words;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    size_t pos = 0;
    while (pos <= value.size()) {
        const size_t next = value.find(';', pos);
        const std::string item = trim(value.substr(pos, next == std::string::npos ? next : next - pos));
        if (!item.empty()) items.push_back(item);
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return items;
}

bool parse_bool(const std::string& s) {
    if (s == "true") return true;
    if (s == "false") return false;
    throw InputError("expected true/false, got '" + s + "'");
}

// Verification state shared across the facts of one entry.
struct EntryContext {
    const CorpusEntry& entry;
    std::uint64_t seed;
    int ind;
    std::map<std::pair<std::string, int>, InvariantBasis> bases;

    EntryContext(const CorpusEntry& e, std::uint64_t s)
        : entry(e), seed(s), ind(estimate_index(e.algebra, s).index) {}

    const DualPoint& point(const std::string& name) const {
        auto it = entry.points.find(name);
        if (it == entry.points.end()) throw InputError("unknown point '" + name + "'");
        return it->second;
    }

    const InvariantBasis& basis(const std::string& point_name, int order) {
        auto key = std::make_pair(point_name, order);
        auto it = bases.find(key);
        if (it == bases.end())
            it = bases.emplace(key, build_basis(entry.algebra, point(point_name), order, ind)).first;
        return it->second;
    }
};

std::string poly_list_string(const std::vector<Poly>& polys, std::span<const std::string> vars) {
    std::string out;
    for (const auto& p : polys) {
        if (!out.empty()) out += "; ";
        out += format_poly(p, vars);
    }
    return out.empty() ? "(empty)" : out;
}

std::vector<Poly> rows_as_linear_polys(const Mat& m) {
    std::vector<Poly> out;
    for (int i = 0; i < m.rows(); ++i) out.push_back(Poly::linear_form(m.row(i)));
    return out;
}

// One fact check; returns an error string on mismatch, empty on pass.
std::string check_fact(EntryContext& ctx, const CorpusFact& fact) {
    const LieAlgebra& alg = ctx.entry.algebra;
    const auto& labels = alg.labels();
    const auto need_args = [&](size_t n) {
        if (fact.args.size() != n)
            throw InputError("fact '" + fact.kind + "' expects " + std::to_string(n) + " arguments");
    };

    if (fact.kind == "index") {
        need_args(0);
        const int expected = std::stoi(fact.value);
        const int got = ctx.ind;
        if (got != expected) return "expected " + std::to_string(expected) + ", got " + std::to_string(got);
        return "";
    }
    if (fact.kind == "regular") {
        need_args(1);
        const bool expected = parse_bool(fact.value);
        const bool got = is_regular(alg, ctx.point(fact.args[0]), ctx.ind);
        if (got != expected) return std::string("expected ") + fact.value;
        return "";
    }
    if (fact.kind == "ann") {
        need_args(1);
        const Mat got = annihilator(alg, ctx.point(fact.args[0]));
        const auto items = split_list(fact.value);
        Mat exp_mat(static_cast<int>(items.size()), alg.dim());
        for (size_t r = 0; r < items.size(); ++r) {
            const Poly p = parse_poly(items[r], labels);
            if (!p.is_zero() && p.degree() != 1) throw InputError("ann basis entries must be linear");
            for (int c = 0; c < alg.dim(); ++c) {
                Monomial m{std::vector<std::uint32_t>(static_cast<size_t>(alg.dim()), 0)};
                m.exp[static_cast<size_t>(c)] = 1;
                exp_mat.at(static_cast<int>(r), c) = p.coefficient(m);
            }
        }
        if (!(got == exp_mat))
            return "expected [" + poly_list_string(rows_as_linear_polys(exp_mat), labels) + "], got [" +
                   poly_list_string(rows_as_linear_polys(got), labels) + "]";
        return "";
    }
    if (fact.kind == "shift-term") {
        need_args(3);
        const int member = std::stoi(fact.args[1]);
        const int level = std::stoi(fact.args[2]);
        const InvariantBasis& basis = ctx.basis(fact.args[0], level);
        if (member < 1 || member > basis.size()) throw InputError("invariant index out of range");
        const Poly got = basis.members[static_cast<size_t>(member - 1)].term(level);
        const Poly expected = parse_poly(fact.value, labels);
        if (!(got == expected))
            return "expected " + format_poly(expected, labels) + ", got " + format_poly(got, labels);
        return "";
    }
    if (fact.kind == "fa-linear" || fact.kind == "ya-linear") {
        const bool is_fa = fact.kind == "fa-linear";
        need_args(is_fa ? 2 : 1);
        GeneratorSet set = is_fa ? build_Fa(alg, ctx.point(fact.args[0]), std::stoi(fact.args[1]), ctx.ind)
                                 : build_Ya(alg, ctx.point(fact.args[0]), ctx.entry.invariants);
        std::vector<Poly> got;
        for (const auto& g : set.generators)
            if (g.degree() == 1) got.push_back(g);
        std::vector<Poly> expected;
        for (const auto& item : split_list(fact.value)) expected.push_back(parse_poly(item, labels));
        if (got != expected)
            return "expected [" + poly_list_string(expected, labels) + "], got [" + poly_list_string(got, labels) + "]";
        return "";
    }
    if (fact.kind == "trdeg-fa") {
        need_args(2);
        const int expected = std::stoi(fact.value);
        const GeneratorSet set = build_Fa(alg, ctx.point(fact.args[0]), std::stoi(fact.args[1]), ctx.ind);
        const int got = trdeg(alg, set, ctx.seed);
        if (got != expected) return "expected " + std::to_string(expected) + ", got " + std::to_string(got);
        return "";
    }
    if (fact.kind == "semiinv-degree") {
        need_args(0);
        const int expected = std::stoi(fact.value);
        const int got = semiinvariant_degree(alg, ctx.ind, ctx.seed).degree;
        if (got != expected) return "expected " + std::to_string(expected) + ", got " + std::to_string(got);
        return "";
    }
    if (fact.kind == "complete") {
        need_args(0);
        const bool expected = parse_bool(fact.value);
        const bool got = completeness_test(alg, ctx.ind, ctx.seed);
        if (got != expected) return std::string("expected ") + fact.value;
        return "";
    }
    if (fact.kind == "invariants-ok") {
        need_args(0);
        const bool expected = parse_bool(fact.value);
        bool got = true;
        for (const auto& inv : ctx.entry.invariants)
            if (invariance_check(alg, inv)) {
                got = false;
                break;
            }
        if (got != expected) return std::string("expected ") + fact.value;
        return "";
    }
    if (fact.kind == "relation") {
        need_args(0);
        std::vector<std::string> symbols;
        for (size_t i = 0; i < ctx.entry.invariants.size(); ++i) symbols.push_back("I" + std::to_string(i + 1));
        const Poly combo = parse_poly(fact.value, symbols);
        Poly composed(alg.dim());
        for (const auto& [mon, coeff] : combo.terms()) {
            Poly term = Poly::constant(alg.dim(), coeff);
            for (size_t i = 0; i < mon.exp.size(); ++i)
                for (std::uint32_t e = 0; e < mon.exp[i]; ++e) term = term * ctx.entry.invariants[i];
            composed += term;
        }
        if (!composed.is_zero()) return "relation does not vanish: " + format_poly(composed, labels);
        return "";
    }
    if (fact.kind == "crit") {
        need_args(1);
        const bool expected = parse_bool(fact.value);
        const bool got = crit_test(alg, ctx.ind, ctx.entry.invariants, ctx.point(fact.args[0]));
        if (got != expected) return std::string("expected ") + fact.value;
        return "";
    }
    if (fact.kind == "prop1-cond1") {
        need_args(1);
        const bool expected = parse_bool(fact.value);
        const bool got =
            prop1_test(alg, ctx.ind, ctx.point(fact.args[0]), ctx.entry.invariants, ctx.seed).differentials_generate_ann;
        if (got != expected) return std::string("expected ") + fact.value;
        return "";
    }
    if (fact.kind == "dim-dfa") {
        need_args(2);
        const int expected = std::stoi(fact.value);
        const int got = dim_dFa(alg, ctx.ind, ctx.point(fact.args[0]), ctx.point(fact.args[1]));
        if (got != expected) return "expected " + std::to_string(expected) + ", got " + std::to_string(got);
        return "";
    }
    throw InputError("unknown fact kind '" + fact.kind + "'");
}

} // namespace

CorpusEntry load_corpus_entry(const std::string& dir, const std::string& name) {
    namespace fs = std::filesystem;
    const std::string facts_path = (fs::path(dir) / (name + ".facts")).string();
    std::ifstream in(facts_path);
    if (!in) throw InputError("cannot open '" + facts_path + "'");

    std::string algebra_file;
    std::string invariants_file;
    std::vector<std::pair<std::string, std::string>> point_lines; // name -> value text
    std::vector<CorpusFact> facts;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const std::string body = trim(strip_comment(raw));
        if (body.empty()) continue;
        const std::string at = facts_path + ":" + std::to_string(lineno);

        const size_t eq = body.find('=');
        const std::string left = trim(eq == std::string::npos ? body : body.substr(0, eq));
        const std::string value = eq == std::string::npos ? "" : trim(body.substr(eq + 1));
        const auto words = split_words(left);
        if (words.empty()) throw InputError(at + ": malformed line");

        if (words[0] == "algebra") {
            if (words.size() != 2 || eq != std::string::npos) throw InputError(at + ": expected 'algebra FILE'");
            algebra_file = words[1];
        } else if (words[0] == "invariants") {
            if (words.size() != 2 || eq != std::string::npos) throw InputError(at + ": expected 'invariants FILE'");
            invariants_file = words[1];
        } else if (words[0] == "point") {
            if (words.size() != 2 || eq == std::string::npos) throw InputError(at + ": expected 'point NAME = v1 ... vn'");
            point_lines.emplace_back(words[1], value);
        } else if (words[0] == "fact") {
            if (words.size() < 3 || eq == std::string::npos)
                throw InputError(at + ": expected 'fact [TAG] kind args = value'");
            CorpusFact fact;
            fact.tag = words[1];
            if (fact.tag.size() < 3 || fact.tag.front() != '[' || fact.tag.back() != ']')
                throw InputError(at + ": facts must carry a provenance tag like [PAPER]");
            fact.kind = words[2];
            fact.args.assign(words.begin() + 3, words.end());
            fact.value = value;
            fact.line = lineno;
            facts.push_back(std::move(fact));
        } else {
            throw InputError(at + ": unknown directive '" + words[0] + "'");
        }
    }
    if (algebra_file.empty()) throw InputError(facts_path + ": missing 'algebra FILE' line");

    LieAlgebra alg = load_algebra_file((fs::path(dir) / algebra_file).string());
    if (const auto violations = validate(alg); !violations.empty())
        throw InputError(facts_path + ": algebra fails validation: " + violations.front().describe(alg));

    CorpusEntry entry{name, std::move(alg), {}, {}, std::move(facts)};
    for (const auto& [pname, pvalue] : point_lines) {
        std::istringstream ps("point " + pvalue);
        std::string line;
        std::getline(ps, line);
        entry.points.emplace(pname, parse_point_line(line, entry.algebra.dim()));
    }
    if (!invariants_file.empty())
        entry.invariants = load_invariants_file((fs::path(dir) / invariants_file).string(), entry.algebra.labels());
    return entry;
}

std::vector<CorpusEntry> load_corpus(const std::string& dir) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) throw InputError("corpus directory '" + dir + "' does not exist");
    std::vector<std::string> names;
    for (const auto& e : fs::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".facts") names.push_back(e.path().stem().string());
    std::sort(names.begin(), names.end());
    std::vector<CorpusEntry> entries;
    for (const auto& n : names) entries.push_back(load_corpus_entry(dir, n));
    return entries;
}

int verify_corpus(const std::vector<CorpusEntry>& entries, std::ostream& out, std::uint64_t seed) {
    if (entries.empty()) {
        out << "warning: empty corpus, nothing to verify\n";
        return 0;
    }
    int failures = 0;
    for (const auto& entry : entries) {
        EntryContext ctx(entry, seed);
        for (const auto& fact : entry.facts) {
            std::string label = fact.kind;
            for (const auto& a : fact.args) label += " " + a;
            std::string error;
            try {
                error = check_fact(ctx, fact);
            } catch (const std::exception& e) {
                error = e.what();
            }
            if (error.empty()) {
                out << "[PASS] " << entry.name << ": " << label << " " << fact.tag << "\n";
            } else {
                out << "[FAIL] " << entry.name << ": " << label << " " << fact.tag << " -- " << error << "\n";
                ++failures;
            }
        }
    }
    return failures;
}

} // namespace argshift
