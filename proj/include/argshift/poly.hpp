#ifndef ARGSHIFT_POLY_HPP
#define ARGSHIFT_POLY_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "argshift/lie_algebra.hpp"
#include "argshift/rational.hpp"

namespace argshift {

// Exponent vector of a monomial in n variables.
struct Monomial {
    std::vector<std::uint32_t> exp;

    int degree() const;
    bool is_constant() const { return degree() == 0; }

    friend bool operator==(const Monomial& a, const Monomial& b) = default;
};

// Graded lexicographic order with x1 > x2 > ... > xn.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

// Sparse multivariate polynomial over Q in the coordinates of g*.
// Terms are kept canonical: no zero coefficients, grlex-ordered storage.
class Poly {
  public:
    using TermMap = std::map<Monomial, Rat, GrlexLess>;

    explicit Poly(int nvars) : nvars_(nvars) {}

    static Poly constant(int nvars, const Rat& c);
    static Poly variable(int nvars, int index);
    // Linear form sum_i coeffs[i] * x_i.
    static Poly linear_form(std::span<const Rat> coeffs);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;

    Rat coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rat& c);

    Poly homogeneous_component(int d) const;

    Poly derivative(int var) const;
    // All n partial derivatives (the differential as a g-valued map).
    std::vector<Poly> differential() const;

    Rat eval(std::span<const Rat> point) const;
    std::vector<Rat> gradient_at(std::span<const Rat> point) const;

    // Grlex-leading coefficient (zero polynomial has none; throws).
    const Rat& leading_coefficient() const;
    Poly monic() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    Poly scaled(const Rat& c) const;

    friend bool operator==(const Poly& a, const Poly& b) = default;

  private:
    int nvars_;
    TermMap terms_;
};

// Dense univariate polynomial over Q, lowest degree first, no trailing zeros.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; } // -1 if zero
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    Rat coeff(int k) const;
    const Rat& leading() const;

    Rat eval(const Rat& t) const;
    UniPoly monic() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  private:
    void trim();
    std::vector<Rat> coeffs_;
};

// Remainder of u modulo v (v nonzero), by exact long division.
UniPoly unipoly_rem(UniPoly u, const UniPoly& v);

// Monic gcd by Euclid; gcd(u, 0) = monic(u); both zero is an input error.
UniPoly unipoly_gcd(UniPoly u, UniPoly v);

// {p, q}(x) = <x, [dp(x), dq(x)]> expanded through the structure constants.
Poly poisson_bracket(const LieAlgebra& alg, const Poly& p, const Poly& q);

// {p, q}_a = <a, [dp(x), dq(x)]>: same formula with x_k frozen to a_k.
Poly frozen_bracket(const LieAlgebra& alg, const DualPoint& a, const Poly& p, const Poly& q);

// Homogeneous components of p(a + x): entry m is the degree-m part.
// Computed by binomial substitution (independent of shift_expansion's route).
std::vector<Poly> taylor_components(const Poly& p, const DualPoint& a);

// Coefficients of t^m in p(x + t a), computed via iterated directional
// derivatives f_{a,m} = (D_a^m p) / m!.  For homogeneous p of degree d the
// identity f_{a,m} = taylor_components(p,a)[d-m] is asserted as a cross-check.
std::vector<Poly> shift_expansion(const Poly& p, const DualPoint& a);

// The univariate polynomial lambda -> p(x + lambda a).
UniPoly restrict_to_line(const Poly& p, const DualPoint& x, const DualPoint& a);

// Text syntax: sum of terms "c*xi^e*..." with rational c as "num/den".
// Parser and printer round-trip exactly; `vars` supplies the variable names.
Poly parse_poly(std::string_view text, std::span<const std::string> vars);
std::string format_poly(const Poly& p, std::span<const std::string> vars);
std::string format_unipoly(const UniPoly& p, std::string_view var);

// All degree-k monomials in n variables, grlex-ascending.
std::vector<Monomial> homogeneous_monomials(int nvars, int k);

} // namespace argshift

#endif
