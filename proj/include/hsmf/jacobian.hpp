#pragma once

#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

#include "hsmf/polynomial.hpp"
#include "hsmf/qmatrix.hpp"

namespace hsmf {

/// One weighted degree of a Jacobian ring quotient: the monomial basis of the
/// quotient piece plus reduction data expressing every monomial of that
/// degree in the basis.
struct GradedPiece {
    int degree = 0;
    std::vector<Monomial> columns;  // all monomials of this degree, canonical order
    std::vector<Monomial> basis;    // monomials spanning the quotient
    std::vector<int> col_to_basis;  // column -> basis index, -1 on ideal pivots
    QMatrix reduction;              // columns.size() x basis.size(): class of each monomial
    std::map<Monomial, int> column_index;

    int dim() const { return static_cast<int>(basis.size()); }
};

/// The graded Jacobian ring k[x]/(dw/dx_0, ..., dw/dx_n) of a
/// quasi-homogeneous polynomial, computed degree by degree through linear
/// algebra. Graded pieces are cached; the cache is write-once per degree and
/// safe to fill from several threads.
class JacobianRing {
  public:
    JacobianRing(Polynomial omega, VarSystem vars);

    JacobianRing(const JacobianRing&) = delete;
    JacobianRing& operator=(const JacobianRing&) = delete;

    const VarSystem& vars() const { return vars_; }
    const Polynomial& omega() const { return omega_; }
    const std::vector<Polynomial>& partials() const { return partials_; }

    /// Top degree of the quotient when the singularity is isolated:
    /// sum of (d - 2*a_i).
    int socle_degree() const { return socle_; }

    const GradedPiece& piece(int e) const;

    /// Span of { m * dw/dx_i } in degree e as a dense matrix over the degree-e
    /// monomial columns. The piece computation row-reduces exactly this.
    QMatrix ideal_generator_matrix(int e) const;

    /// Total dimension of the quotient. Finiteness is certified by checking
    /// that every degree in (socle, socle + max weight] vanishes; any monomial
    /// of higher degree then factors through that window. Throws
    /// NonIsolatedSingularity when the certificate fails.
    long long milnor_number() const;

    /// Coordinates of the class of a nonzero quasi-homogeneous polynomial in
    /// the basis of its degree piece.
    std::vector<Rat> normal_form(const Polynomial& p) const;

    /// Independent dimension oracle: coefficients of
    /// prod_i (1 - t^(d - a_i)) / (1 - t^(a_i)), valid whenever the partials
    /// form a regular sequence. Computed by exact power-series arithmetic,
    /// never through the row-reduction path it cross-checks.
    static std::vector<long long> hilbert_series(const VarSystem& vars);

  private:
    GradedPiece compute_piece(int e) const;

    VarSystem vars_;
    Polynomial omega_;
    std::vector<Polynomial> partials_;
    int socle_ = 0;

    mutable std::shared_mutex mutex_;
    mutable std::map<int, GradedPiece> pieces_;
};

/// Matrix of the multiplication pairing Jac_e1 x Jac_e2 -> Jac_(e1+e2),
/// flattened to a linear map Jac_e1 -> Hom(Jac_e2, Jac_(e1+e2)): rows indexed
/// by (e2 basis, e1+e2 basis) pairs, columns by the e1 basis. Returns the
/// matrix together with its rank over Q.
std::pair<QMatrix, int> pairing_rank(const JacobianRing& jac, int e1, int e2);

}  // namespace hsmf
