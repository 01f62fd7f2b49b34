#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hsmf {

class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed polynomial text or input file; carries the byte offset.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t offset)
        : Error(msg + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}
    std::size_t offset() const { return offset_; }

  private:
    std::size_t offset_ = 0;
};

/// Raised where an operation needs a nonzero polynomial.
class ZeroPolynomial : public Error {
  public:
    ZeroPolynomial() : Error("zero polynomial has no weighted degree") {}
};

/// A polynomial whose monomials do not share a single weighted degree.
/// Carries two offending terms as rendered monomials.
class NotQuasiHomogeneous : public Error {
  public:
    NotQuasiHomogeneous(const std::string& term_a, int deg_a, const std::string& term_b, int deg_b)
        : Error("not quasi-homogeneous: " + term_a + " has weighted degree " +
                std::to_string(deg_a) + " but " + term_b + " has weighted degree " +
                std::to_string(deg_b)),
          term_a_(term_a), term_b_(term_b) {}
    const std::string& term_a() const { return term_a_; }
    const std::string& term_b() const { return term_b_; }

  private:
    std::string term_a_, term_b_;
};

/// The Hilbert-series product does not reduce to a polynomial
/// (some weight is >= the quasi-homogeneity degree, or the division
/// leaves a remainder).
class NonPolynomialSeries : public Error {
  public:
    explicit NonPolynomialSeries(const std::string& msg) : Error(msg) {}
};

/// A Jacobian ring failed the finite-dimensionality certificate.
class NonIsolatedSingularity : public Error {
  public:
    NonIsolatedSingularity(const std::string& msg, int witness_degree)
        : Error(msg), witness_degree_(witness_degree) {}
    int witness_degree() const { return witness_degree_; }

  private:
    int witness_degree_ = 0;
};

/// One composition term the multiplication rules could not evaluate:
/// left sector acting on right sector, landing in a nonzero target summand.
struct IndeterminateTerm {
    int left_sector = 0;
    int right_sector = 0;
    int target_sector = 0;
    int target_degree = 0;
    int target_dim = 0;
};

/// A sector composition with no defined value. The term list is exhaustive;
/// nothing is ever silently guessed.
class IndeterminateComposition : public Error {
  public:
    IndeterminateComposition(const std::string& msg, std::vector<IndeterminateTerm> terms)
        : Error(msg), terms_(std::move(terms)) {}
    const std::vector<IndeterminateTerm>& terms() const { return terms_; }

  private:
    std::vector<IndeterminateTerm> terms_;
};

}  // namespace hsmf
