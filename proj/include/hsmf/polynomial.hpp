#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsmf/rational.hpp"
#include "hsmf/varsystem.hpp"

namespace hsmf {

/// Exponent vector; one entry per variable of the ambient system.
using Monomial = std::vector<int>;

int weighted_degree(const Monomial& m, const VarSystem& vars);

/// Canonical term order: weighted degree first, then lexicographic with
/// earlier variables more significant.
bool monomial_less(const Monomial& a, const Monomial& b, const VarSystem& vars);

/// Multivariate polynomial with exact rational coefficients. Zero terms are
/// never stored; the zero polynomial has an empty term map. Values are
/// immutable in spirit: every operation returns a fresh polynomial.
class Polynomial {
  public:
    Polynomial() = default;

    static Polynomial term(Monomial m, Rat c) {
        Polynomial p;
        p.add_term(m, c);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<Monomial, Rat>& terms() const { return terms_; }

    void add_term(const Monomial& m, const Rat& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Rat& c);
    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial p, const Rat& c) { return p *= c; }
    Polynomial operator-() const;
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

  private:
    std::map<Monomial, Rat> terms_;
};

/// Weighted degree of a nonzero quasi-homogeneous polynomial. Throws
/// ZeroPolynomial, or NotQuasiHomogeneous naming two offending terms.
int weighted_degree(const Polynomial& p, const VarSystem& vars);

bool is_quasi_homogeneous(const Polynomial& p, const VarSystem& vars);

/// Drops every monomial that involves a variable outside `keep`. The result
/// stays in the ambient variable system.
Polynomial restrict_to(const Polynomial& p, const std::vector<int>& keep);

/// Re-expresses a polynomial supported on `keep` (ascending indices) in the
/// coordinates of the corresponding subsystem.
Polynomial project(const Polynomial& p, const std::vector<int>& keep);

Polynomial derivative(const Polynomial& p, int var);

/// Canonical printer; parse_poly(render(p)) == p.
std::string render(const Polynomial& p, const VarSystem& vars);
std::string render_monomial(const Monomial& m, const VarSystem& vars);

/// All exponent vectors of the given weighted degree, in descending canonical
/// order. Empty for e < 0; the constant monomial alone for e == 0.
std::vector<Monomial> monomials_of_weighted_degree(const VarSystem& vars, int e);

}  // namespace hsmf
