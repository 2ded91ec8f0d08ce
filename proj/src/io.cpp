#include "argshift/io.hpp"

#include <fstream>
#include <sstream>

#include "argshift/errors.hpp"

namespace argshift {

namespace {

std::string strip_comment(const std::string& line) {
    const size_t hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

std::vector<std::string> split_words(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> words;
    std::string w;
    while (is >> w) words.push_back(w);
    return words;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return in;
}

} // namespace

LieAlgebra parse_algebra(std::istream& in, std::string_view source_name) {
    const std::string where(source_name);
    int dim = -1;
    std::vector<std::string> labels;
    LieAlgebra::StructureMap structure;

    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto words = split_words(strip_comment(raw));
        if (words.empty()) continue;
        const std::string at = where + ":" + std::to_string(lineno);
        if (words[0] == "dim") {
            if (dim >= 0) throw InputError(at + ": duplicate dim line");
            if (words.size() != 2) throw InputError(at + ": expected 'dim n'");
            try {
                dim = std::stoi(words[1]);
            } catch (const std::exception&) {
                throw InputError(at + ": bad dimension '" + words[1] + "'");
            }
            if (dim < 1) throw InputError(at + ": dimension must be positive");
            continue;
        }
        if (words[0] == "labels") {
            if (dim < 0) throw InputError(at + ": labels before dim");
            if (static_cast<int>(words.size()) != dim + 1) throw InputError(at + ": expected " + std::to_string(dim) + " labels");
            labels.assign(words.begin() + 1, words.end());
            continue;
        }
        if (dim < 0) throw InputError(at + ": bracket line before dim");
        if (words.size() != 4) throw InputError(at + ": expected 'i j k coeff'");
        int i, j, k;
        try {
            i = std::stoi(words[0]);
            j = std::stoi(words[1]);
            k = std::stoi(words[2]);
        } catch (const std::exception&) {
            throw InputError(at + ": bad bracket indices");
        }
        if (i < 1 || j < 1 || k < 1 || i > dim || j > dim || k > dim)
            throw InputError(at + ": bracket index out of range (1-based, dim " + std::to_string(dim) + ")");
        if (i >= j) throw InputError(at + ": bracket lines require i < j");
        const Rat c = parse_rational(words[3]);
        if (c == 0) throw InputError(at + ": zero structure constant");
        const std::array<int, 3> key{i - 1, j - 1, k - 1};
        if (structure.contains(key)) throw InputError(at + ": duplicate bracket entry");
        structure.emplace(key, c);
    }
    if (dim < 0) throw InputError(where + ": missing 'dim n' header");
    return LieAlgebra(dim, std::move(labels), std::move(structure));
}

LieAlgebra load_algebra_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_algebra(in, path);
}

DualPoint parse_point_line(std::string_view line, int dim) {
    const auto words = split_words(strip_comment(std::string(line)));
    if (words.empty() || words[0] != "point") throw InputError("expected 'point v1 ... vn'");
    if (static_cast<int>(words.size()) != dim + 1)
        throw InputError("point has " + std::to_string(words.size() - 1) + " entries, expected " + std::to_string(dim));
    DualPoint p;
    p.coords.reserve(static_cast<size_t>(dim));
    for (size_t i = 1; i < words.size(); ++i) p.coords.push_back(parse_rational(words[i]));
    return p;
}

DualPoint load_point_file(const std::string& path, int dim) {
    auto in = open_or_throw(path);
    std::string raw;
    while (std::getline(in, raw)) {
        if (split_words(strip_comment(raw)).empty()) continue;
        return parse_point_line(raw, dim);
    }
    throw InputError("no point line in '" + path + "'");
}

std::string format_point(const DualPoint& p) {
    std::string out = "point";
    for (const auto& c : p.coords) out += " " + format_rational(c);
    return out;
}

std::vector<Poly> parse_invariants(std::istream& in, std::span<const std::string> vars) {
    std::vector<Poly> out;
    std::string raw;
    while (std::getline(in, raw)) {
        const std::string body = strip_comment(raw);
        if (split_words(body).empty()) continue;
        out.push_back(parse_poly(body, vars));
    }
    return out;
}

std::vector<Poly> load_invariants_file(const std::string& path, std::span<const std::string> vars) {
    auto in = open_or_throw(path);
    return parse_invariants(in, vars);
}

} // namespace argshift
