#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hsmf/rational.hpp"

namespace hsmf {

/// Dense matrix over Q, row-major.
class QMatrix {
  public:
    QMatrix() = default;
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          a_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static QMatrix identity(int n);

    struct Triplet {
        int row = 0;
        int col = 0;
        Rat value;
    };
    static QMatrix from_triplets(int rows, int cols, const std::vector<Triplet>& entries);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rat& at(int r, int c) {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    const Rat& at(int r, int c) const {
        return a_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
                  static_cast<std::size_t>(c)];
    }
    QMatrix transposed() const;

    friend bool operator==(const QMatrix&, const QMatrix&) = default;

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rat> a_;
};

std::vector<Rat> apply(const QMatrix& m, const std::vector<Rat>& v);

struct EchelonForm {
    QMatrix mat;              // reduced row echelon form
    std::vector<int> pivots;  // pivot column of each pivot row, strictly increasing
};

/// Rank over Q via fraction-free (Bareiss) elimination on the
/// denominator-cleared integer matrix. Pivoting is deterministic: first
/// nonzero entry in column order. Row updates run under OpenMP when enabled;
/// the *_serial variants are the reference kernels kept for testing.
int rank(const QMatrix& m);
int rank_serial(const QMatrix& m);

/// Reduced row echelon form over Q with the same deterministic pivot rule.
EchelonForm row_reduce(const QMatrix& m);
EchelonForm row_reduce_serial(const QMatrix& m);

/// Basis of the right kernel in echelon-normal form: one vector per free
/// column, with canonical unit values on the free coordinates.
std::vector<std::vector<Rat>> nullspace_basis(const QMatrix& m);

/// Rank over GF(p) for prime p; empty when p divides a denominator.
/// Always a lower bound for the rank over Q.
std::optional<int> rank_mod(const QMatrix& m, std::uint64_t p);

/// Exact rank, optionally preceded by a modular prediction that is then
/// verified against the exact answer. The exact result always wins; a
/// disagreement (the prime divides a pivot minor) is reported through
/// `prediction` so callers can surface it.
int rank_verified(const QMatrix& m, std::optional<std::uint64_t> modulus,
                  std::optional<int>* prediction = nullptr);

}  // namespace hsmf
