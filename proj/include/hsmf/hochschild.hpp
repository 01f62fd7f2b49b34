#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "hsmf/jacobian.hpp"

namespace hsmf {

/// Arithmetic of one sector g = zeta^j of mu_d acting on the weighted affine
/// space: the coordinates it fixes, the number it moves (rk W_g) and minus
/// the weight sum over the moved coordinates (k_g, the character of det W_g).
struct SectorShape {
    int j = 0;
    std::vector<int> fixed;  // ascending variable indices with j*a_i = 0 mod d
    int rank_moved = 0;
    int character = 0;

    friend bool operator==(const SectorShape&, const SectorShape&) = default;
};

/// All d sector shapes, j = 0..d-1. Depends only on the weights and d.
std::vector<SectorShape> sector_shapes(const VarSystem& vars);

/// A sector together with the Jacobian ring of the restricted polynomial on
/// its fixed locus, expressed in the fixed-variable subsystem.
struct SectorData {
    SectorShape shape;
    VarSystem sub;
    Polynomial omega_g;
    std::unique_ptr<JacobianRing> jac;
};

/// Serre functor data of the matrix factorization category: twist by
/// O(-sum a_j) composed with the shift [n+1].
struct SerreData {
    int twist = 0;
    int shift = 0;
};

struct HomSummand {
    int sector = 0;
    int degree = 0;  // graded piece of the sector's Jacobian ring
    int dim = 0;
    int offset = 0;  // position of this summand in the concatenated basis

    friend bool operator==(const HomSummand&, const HomSummand&) = default;
};

/// Hom(Delta, Delta(m)[t]) as a list of sector summands. A sector enters iff
/// t - rk W_g is even; its degree is m - k_g + d*(t - rk W_g)/2.
/// Zero-dimensional summands are kept so vanishing arguments stay visible.
struct HomSpace {
    int m = 0, t = 0;
    std::vector<HomSummand> summands;
    int total_dim = 0;

    const HomSummand* find(int sector) const;
};

/// Element of a HomSpace: one rational coordinate vector per summand, in the
/// basis of the summand's graded piece.
struct HSElement {
    HomSpace home;
    std::vector<std::vector<Rat>> coords;

    bool is_zero() const;
};

HSElement zero_element(HomSpace home);
HSElement basis_element(HomSpace home, int flat_index);
std::vector<Rat> flatten(const HSElement& e);

/// Audit record for one family of composition terms and how it was resolved.
struct ResolvedTerm {
    enum class Rule {
        product,      // untwisted times untwisted: multiplication in Jac(omega)
        zero_target,  // target summand has dimension zero (or fails parity)
        restriction,  // opt-in: untwisted left factor restricted to the fixed locus
    };
    int left_sector = 0;
    int right_sector = 0;
    int target_sector = 0;
    std::optional<int> target_degree;  // empty when the target sector fails parity
    Rule rule = Rule::zero_target;
    long long count = 1;

    friend bool operator==(const ResolvedTerm&, const ResolvedTerm&) = default;
};

struct MulTrace {
    std::vector<ResolvedTerm> terms;
};

/// Merges equal (sectors, rule) entries and orders them deterministically.
std::vector<ResolvedTerm> aggregate_trace(const MulTrace& trace);

/// Result of assembling gamma: HH^2 -> Hom(HH_-1, HH_1) column by column.
struct GammaReport {
    HomSpace hh2, hh_minus1, hh_plus1;
    QMatrix matrix;  // (dim HH_-1 * dim HH_1) rows, dim HH^2 columns
    int rank = 0;
    int kernel_dim = 0;
    std::vector<HSElement> kernel_basis;
    std::vector<ResolvedTerm> resolved;      // aggregated audit of nonzero-factor terms
    std::optional<int> modular_prediction;   // set when a modular pre-pass ran
};

/// The bigraded Hochschild-Serre algebra of the graded matrix factorization
/// category attached to (vars, omega). Construction builds all d sectors and
/// certifies that every restricted polynomial has a finite Jacobian ring.
class HSAlgebra {
  public:
    struct Options {
        /// Evaluate untwisted-by-twisted terms by restricting the untwisted
        /// factor to the sector's fixed locus. Off by default: this goes
        /// beyond what the composition rules pin down.
        bool assume_restriction_action = false;
        /// Optional modular pre-pass for rank computations, always verified
        /// against the exact answer.
        std::optional<std::uint64_t> modulus;
    };

    HSAlgebra(VarSystem vars, Polynomial omega);
    HSAlgebra(VarSystem vars, Polynomial omega, Options options);

    const VarSystem& vars() const { return vars_; }
    const Polynomial& omega() const { return omega_; }
    const Options& options() const { return options_; }
    const std::vector<SectorData>& sectors() const { return sectors_; }
    const JacobianRing& untwisted() const { return *sectors_[0].jac; }
    SerreData serre() const;

    HomSpace hom_space(int m, int t) const;
    HomSpace cohomology(int k) const;  // HH^k = Hom(Delta, Delta[k])
    HomSpace homology(int k) const;    // HH_k via the Serre twist and shift

    /// True iff raising m by d and raising t by 2 produce summand-for-summand
    /// identical Hom spaces.
    bool periodicity_check(int m, int t) const;

    /// Sector-wise composition. Each term is resolved by the first applicable
    /// rule: untwisted*untwisted is multiplication in Jac(omega) followed by
    /// normal-form reduction; terms into zero-dimensional summands vanish;
    /// terms with a zero factor vanish. Anything else raises
    /// IndeterminateComposition listing every unresolved term.
    HSElement multiply(const HSElement& a, const HSElement& b, MulTrace* trace = nullptr) const;

    GammaReport gamma() const;

  private:
    Polynomial summand_representative(const HomSummand& s,
                                      const std::vector<Rat>& coords) const;

    VarSystem vars_;
    Polynomial omega_;
    Options options_;
    std::vector<SectorData> sectors_;
};

}  // namespace hsmf
