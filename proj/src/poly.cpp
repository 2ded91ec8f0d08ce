#include "argshift/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "argshift/errors.hpp"

namespace argshift {

namespace {

Rat binomial(unsigned n, unsigned k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rat(b);
}

void check_same_nvars(const Poly& a, const Poly& b) {
    if (a.nvars() != b.nvars()) throw InputError("polynomial variable-count mismatch");
}

} // namespace

int Monomial::degree() const {
    int d = 0;
    for (auto e : exp) d += static_cast<int>(e);
    return d;
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
    const int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    // Same degree: the monomial with the larger exponent on the earliest
    // differing variable is the larger one (x1 > x2 > ... > xn).
    for (size_t i = 0; i < a.exp.size(); ++i)
        if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i];
    return false;
}

Poly Poly::constant(int nvars, const Rat& c) {
    Poly p(nvars);
    p.add_term(Monomial{std::vector<std::uint32_t>(static_cast<size_t>(nvars), 0)}, c);
    return p;
}

Poly Poly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw InputError("variable index out of range");
    Poly p(nvars);
    Monomial m{std::vector<std::uint32_t>(static_cast<size_t>(nvars), 0)};
    m.exp[static_cast<size_t>(index)] = 1;
    p.add_term(m, Rat(1));
    return p;
}

Poly Poly::linear_form(std::span<const Rat> coeffs) {
    Poly p(static_cast<int>(coeffs.size()));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        Monomial m{std::vector<std::uint32_t>(coeffs.size(), 0)};
        m.exp[i] = 1;
        p.add_term(m, coeffs[i]);
    }
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.rbegin()->first.degree();
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    const int d = terms_.begin()->first.degree();
    return terms_.rbegin()->first.degree() == d;
}

Rat Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    if (static_cast<int>(m.exp.size()) != nvars_) throw InputError("monomial size mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::homogeneous_component(int d) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == d) out.add_term(m, c);
    return out;
}

Poly Poly::derivative(int var) const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) {
        const auto e = m.exp[static_cast<size_t>(var)];
        if (e == 0) continue;
        Monomial dm = m;
        dm.exp[static_cast<size_t>(var)] = e - 1;
        out.add_term(dm, c * static_cast<long>(e));
    }
    return out;
}

std::vector<Poly> Poly::differential() const {
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) out.push_back(derivative(i));
    return out;
}

Rat Poly::eval(std::span<const Rat> point) const {
    if (static_cast<int>(point.size()) != nvars_) throw InputError("eval: point size mismatch");
    Rat sum = 0;
    for (const auto& [m, c] : terms_) {
        Rat term = c;
        for (size_t i = 0; i < m.exp.size(); ++i)
            for (std::uint32_t e = 0; e < m.exp[i]; ++e) term *= point[i];
        sum += term;
    }
    return sum;
}

std::vector<Rat> Poly::gradient_at(std::span<const Rat> point) const {
    std::vector<Rat> g;
    g.reserve(static_cast<size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) g.push_back(derivative(i).eval(point));
    return g;
}

const Rat& Poly::leading_coefficient() const {
    if (terms_.empty()) throw InputError("zero polynomial has no leading coefficient");
    return terms_.rbegin()->second;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(1 / Rat(leading_coefficient()));
}

Poly Poly::operator-() const {
    Poly out(nvars_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    check_same_nvars(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    check_same_nvars(*this, rhs);
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    check_same_nvars(lhs, rhs);
    Poly out(lhs.nvars());
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m = ma;
            for (size_t i = 0; i < m.exp.size(); ++i) m.exp[i] += mb.exp[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

Poly Poly::scaled(const Rat& c) const {
    Poly out(nvars_);
    if (c == 0) return out;
    for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
    return out;
}

UniPoly::UniPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) { return UniPoly(std::vector<Rat>{c}); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
    return coeffs_[static_cast<size_t>(k)];
}

const Rat& UniPoly::leading() const {
    if (coeffs_.empty()) throw InputError("zero polynomial has no leading coefficient");
    return coeffs_.back();
}

Rat UniPoly::eval(const Rat& t) const {
    Rat v = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) v = v * t + *it;
    return v;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rat> c = coeffs_;
    const Rat inv = 1 / Rat(coeffs_.back());
    for (auto& v : c) v *= inv;
    return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> c = coeffs_;
    for (auto& v : c) v = -v;
    return UniPoly(std::move(c));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rat> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly();
    std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c));
}

UniPoly unipoly_rem(UniPoly u, const UniPoly& v) {
    if (v.is_zero()) throw InputError("division by the zero polynomial");
    while (!u.is_zero() && u.degree() >= v.degree()) {
        const Rat factor = u.leading() / v.leading();
        const int shift = u.degree() - v.degree();
        std::vector<Rat> c = u.coeffs();
        for (int i = 0; i <= v.degree(); ++i)
            c[static_cast<size_t>(i + shift)] -= factor * v.coeff(i);
        u = UniPoly(std::move(c));
    }
    return u;
}

UniPoly unipoly_gcd(UniPoly u, UniPoly v) {
    if (u.is_zero() && v.is_zero()) throw InputError("gcd(0, 0) is undefined");
    while (!v.is_zero()) {
        UniPoly r = unipoly_rem(u, v);
        u = v;
        v = r;
    }
    return u.monic();
}

Poly poisson_bracket(const LieAlgebra& alg, const Poly& p, const Poly& q) {
    if (p.nvars() != alg.dim() || q.nvars() != alg.dim()) throw InputError("bracket: dimension mismatch");
    const auto dp = p.differential();
    const auto dq = q.differential();
    Poly out(alg.dim());
    for (const auto& [key, c] : alg.brackets()) {
        const auto [i, j, k] = key;
        Poly cross = dp[static_cast<size_t>(i)] * dq[static_cast<size_t>(j)] -
                     dp[static_cast<size_t>(j)] * dq[static_cast<size_t>(i)];
        if (cross.is_zero()) continue;
        out += (cross * Poly::variable(alg.dim(), k)).scaled(c);
    }
    return out;
}

Poly frozen_bracket(const LieAlgebra& alg, const DualPoint& a, const Poly& p, const Poly& q) {
    if (p.nvars() != alg.dim() || q.nvars() != alg.dim() || a.size() != alg.dim())
        throw InputError("bracket: dimension mismatch");
    const auto dp = p.differential();
    const auto dq = q.differential();
    Poly out(alg.dim());
    for (const auto& [key, c] : alg.brackets()) {
        const auto [i, j, k] = key;
        const Rat weight = c * a.coords[static_cast<size_t>(k)];
        if (weight == 0) continue;
        Poly cross = dp[static_cast<size_t>(i)] * dq[static_cast<size_t>(j)] -
                     dp[static_cast<size_t>(j)] * dq[static_cast<size_t>(i)];
        if (cross.is_zero()) continue;
        out += cross.scaled(weight);
    }
    return out;
}

std::vector<Poly> taylor_components(const Poly& p, const DualPoint& a) {
    if (p.nvars() != a.size()) throw InputError("taylor: dimension mismatch");
    const int n = p.nvars();
    const int d = std::max(p.degree(), 0);
    std::vector<Poly> out(static_cast<size_t>(d) + 1, Poly(n));

    // Expand every term of p(a + x) by the binomial theorem, variable by
    // variable; sub-exponents below e_i contribute only where a_i != 0.
    for (const auto& [mon, coeff] : p.terms()) {
        std::vector<std::uint32_t> sub(mon.exp.size(), 0);
        std::vector<size_t> active; // variables where the sub-exponent may vary
        for (size_t i = 0; i < mon.exp.size(); ++i) {
            if (mon.exp[i] == 0) continue;
            if (a.coords[i] == 0)
                sub[i] = mon.exp[i];
            else
                active.push_back(i);
        }
        while (true) {
            Rat c = coeff;
            for (size_t i : active) {
                c *= binomial(mon.exp[i], sub[i]);
                for (std::uint32_t e = sub[i]; e < mon.exp[i]; ++e) c *= a.coords[i];
            }
            Monomial m{sub};
            out[static_cast<size_t>(m.degree())].add_term(m, c);

            // odometer over the active sub-exponents
            size_t pos = 0;
            while (pos < active.size() && sub[active[pos]] == mon.exp[active[pos]]) {
                sub[active[pos]] = 0;
                ++pos;
            }
            if (pos == active.size()) break;
            ++sub[active[pos]];
        }
    }
    return out;
}

std::vector<Poly> shift_expansion(const Poly& p, const DualPoint& a) {
    if (p.nvars() != a.size()) throw InputError("shift: dimension mismatch");
    const int n = p.nvars();
    const int d = std::max(p.degree(), 0);
    std::vector<Poly> out;
    out.reserve(static_cast<size_t>(d) + 1);
    out.push_back(p);
    Poly current = p;
    for (int m = 1; m <= d; ++m) {
        Poly next(n);
        for (int i = 0; i < n; ++i) {
            if (a.coords[static_cast<size_t>(i)] == 0) continue;
            next += current.derivative(i).scaled(a.coords[static_cast<size_t>(i)]);
        }
        current = next.scaled(Rat(1, m));
        out.push_back(current);
    }
    if (p.is_homogeneous() && !p.is_zero()) {
        // Independent route: shifts of a homogeneous p are its Taylor
        // components at a read backwards.
        const auto taylor = taylor_components(p, a);
        for (int m = 0; m <= d; ++m)
            if (out[static_cast<size_t>(m)] != taylor[static_cast<size_t>(d - m)])
                throw InternalError("shift/taylor duality violated");
    }
    return out;
}

UniPoly restrict_to_line(const Poly& p, const DualPoint& x, const DualPoint& a) {
    if (p.nvars() != x.size() || p.nvars() != a.size()) throw InputError("restrict: dimension mismatch");
    UniPoly out;
    for (const auto& [mon, coeff] : p.terms()) {
        UniPoly term = UniPoly::constant(coeff);
        for (size_t i = 0; i < mon.exp.size(); ++i) {
            if (mon.exp[i] == 0) continue;
            const UniPoly factor({x.coords[i], a.coords[i]});
            for (std::uint32_t e = 0; e < mon.exp[i]; ++e) term = term * factor;
        }
        out = out + term;
    }
    return out;
}

std::vector<Monomial> homogeneous_monomials(int nvars, int k) {
    std::vector<Monomial> out;
    Monomial current{std::vector<std::uint32_t>(static_cast<size_t>(nvars), 0)};
    // Enumerate exponent vectors of total degree k recursively.
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            current.exp[static_cast<size_t>(var)] = static_cast<std::uint32_t>(remaining);
            out.push_back(current);
            current.exp[static_cast<size_t>(var)] = 0;
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            current.exp[static_cast<size_t>(var)] = static_cast<std::uint32_t>(e);
            self(self, var + 1, remaining - e);
        }
        current.exp[static_cast<size_t>(var)] = 0;
    };
    rec(rec, 0, k);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return GrlexLess{}(a, b); });
    return out;
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool looks_numeric(std::string_view s) {
    return !s.empty() && (std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '-');
}

} // namespace

Poly parse_poly(std::string_view text, std::span<const std::string> vars) {
    const int n = static_cast<int>(vars.size());
    Poly out(n);
    text = trim(text);
    if (text.empty()) throw InputError("empty polynomial");

    size_t pos = 0;
    while (pos < text.size()) {
        int sign = 1;
        // leading signs of this term
        while (pos < text.size()) {
            const char ch = text[pos];
            if (ch == '+' || std::isspace(static_cast<unsigned char>(ch))) {
                ++pos;
            } else if (ch == '-') {
                sign = -sign;
                ++pos;
            } else {
                break;
            }
        }
        if (pos >= text.size()) throw InputError("dangling sign in polynomial");
        const size_t start = pos;
        while (pos < text.size() && text[pos] != '+' && text[pos] != '-') ++pos;
        std::string_view term = trim(text.substr(start, pos - start));
        if (term.empty()) throw InputError("empty term in polynomial");

        Rat coeff(sign);
        Monomial mon{std::vector<std::uint32_t>(static_cast<size_t>(n), 0)};
        size_t fpos = 0;
        while (fpos <= term.size()) {
            const size_t next = term.find('*', fpos);
            std::string_view factor = trim(term.substr(fpos, next == std::string_view::npos ? next : next - fpos));
            if (factor.empty()) throw InputError("empty factor in term '" + std::string(term) + "'");
            if (looks_numeric(factor)) {
                coeff *= parse_rational(factor);
            } else {
                const size_t caret = factor.find('^');
                std::string_view name = trim(factor.substr(0, caret));
                long exp = 1;
                if (caret != std::string_view::npos) {
                    std::string_view es = trim(factor.substr(caret + 1));
                    try {
                        size_t used = 0;
                        exp = std::stol(std::string(es), &used);
                        if (used != es.size()) throw std::invalid_argument("");
                    } catch (const std::exception&) {
                        throw InputError("bad exponent in factor '" + std::string(factor) + "'");
                    }
                    if (exp < 0) throw InputError("negative exponent in '" + std::string(factor) + "'");
                }
                int index = -1;
                for (int i = 0; i < n; ++i)
                    if (vars[static_cast<size_t>(i)] == name) {
                        index = i;
                        break;
                    }
                if (index < 0) throw InputError("unknown variable '" + std::string(name) + "'");
                mon.exp[static_cast<size_t>(index)] += static_cast<std::uint32_t>(exp);
            }
            if (next == std::string_view::npos) break;
            fpos = next + 1;
        }
        out.add_term(mon, coeff);
    }
    return out;
}

std::string format_poly(const Poly& p, std::span<const std::string> vars) {
    if (static_cast<int>(vars.size()) != p.nvars()) throw InputError("format_poly: name count mismatch");
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // grlex-descending: leading term first
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [mon, coeff] = *it;
        const bool negative = coeff < 0;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const Rat mag = negative ? Rat(-coeff) : coeff;
        std::string vars_part;
        for (size_t i = 0; i < mon.exp.size(); ++i) {
            if (mon.exp[i] == 0) continue;
            if (!vars_part.empty()) vars_part += '*';
            vars_part += vars[i];
            if (mon.exp[i] > 1) vars_part += '^' + std::to_string(mon.exp[i]);
        }
        if (vars_part.empty()) {
            os << format_rational(mag);
        } else if (mag == 1) {
            os << vars_part;
        } else {
            os << format_rational(mag) << '*' << vars_part;
        }
    }
    return os.str();
}

std::string format_unipoly(const UniPoly& p, std::string_view var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const Rat c = p.coeff(k);
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        const Rat mag = negative ? Rat(-c) : c;
        if (k == 0) {
            os << format_rational(mag);
        } else {
            if (mag != 1) os << format_rational(mag) << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

} // namespace argshift
