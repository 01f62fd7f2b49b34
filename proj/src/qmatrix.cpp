#include "hsmf/qmatrix.hpp"

#include <utility>

#include "hsmf/errors.hpp"

namespace hsmf {

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::from_triplets(int rows, int cols, const std::vector<Triplet>& entries) {
    QMatrix m(rows, cols);
    for (const auto& t : entries) {
        if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
            throw Error("triplet index out of range");
        m.at(t.row, t.col) += t.value;
    }
    return m;
}

QMatrix QMatrix::transposed() const {
    QMatrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

std::vector<Rat> apply(const QMatrix& m, const std::vector<Rat>& v) {
    std::vector<Rat> out(static_cast<std::size_t>(m.rows()));
    for (int r = 0; r < m.rows(); ++r) {
        Rat acc = 0;
        for (int c = 0; c < m.cols(); ++c) acc += m.at(r, c) * v[static_cast<std::size_t>(c)];
        out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
}

namespace {

// Integer matrix with per-row storage, used by the fraction-free kernel.
struct ZRows {
    int rows = 0, cols = 0;
    std::vector<std::vector<Int>> a;
};

// Clears denominators row by row; scaling rows leaves the rank unchanged.
ZRows clear_denominators(const QMatrix& m) {
    ZRows z;
    z.rows = m.rows();
    z.cols = m.cols();
    z.a.assign(static_cast<std::size_t>(z.rows), {});
    for (int r = 0; r < z.rows; ++r) {
        Int lcm = 1;
        for (int c = 0; c < z.cols; ++c) {
            const Rat& q = m.at(r, c);
            Int den = q.get_den();
            Int g;
            mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
            lcm = lcm / g * den;
        }
        auto& row = z.a[static_cast<std::size_t>(r)];
        row.resize(static_cast<std::size_t>(z.cols));
        for (int c = 0; c < z.cols; ++c) {
            const Rat& q = m.at(r, c);
            row[static_cast<std::size_t>(c)] = q.get_num() * (lcm / q.get_den());
        }
    }
    return z;
}

// One-step fraction-free elimination. All intermediate entries are minors of
// the input, so every division is exact; column skipping for rank-deficient
// input preserves that property.
int bareiss_rank(ZRows z, bool parallel) {
    int pr = 0;
    Int prev = 1;
    for (int c = 0; c < z.cols && pr < z.rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < z.rows; ++r) {
            if (z.a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(z.a[static_cast<std::size_t>(pr)], z.a[static_cast<std::size_t>(pivot)]);
        const auto& prow = z.a[static_cast<std::size_t>(pr)];
        const Int& pv = prow[static_cast<std::size_t>(c)];
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int r = pr + 1; r < z.rows; ++r) {
            auto& row = z.a[static_cast<std::size_t>(r)];
            Int f = row[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < z.cols; ++j) {
                Int t = pv * row[static_cast<std::size_t>(j)] -
                        f * prow[static_cast<std::size_t>(j)];
                mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(), t.get_mpz_t(),
                             prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pv;
        ++pr;
    }
    return pr;
}

EchelonForm rref(QMatrix m, bool parallel) {
    EchelonForm out;
    int rows = m.rows(), cols = m.cols();
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r) {
            if (m.at(r, c) != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        if (pivot != pr)
            for (int j = 0; j < cols; ++j) std::swap(m.at(pr, j), m.at(pivot, j));
        Rat pv = m.at(pr, c);
        for (int j = c; j < cols; ++j) m.at(pr, j) /= pv;
#pragma omp parallel for schedule(dynamic) if (parallel)
        for (int r = 0; r < rows; ++r) {
            if (r == pr || m.at(r, c) == 0) continue;
            Rat f = m.at(r, c);
            for (int j = c; j < cols; ++j) m.at(r, j) -= f * m.at(pr, j);
        }
        out.pivots.push_back(c);
        ++pr;
    }
    out.mat = std::move(m);
    return out;
}

}  // namespace

int rank(const QMatrix& m) { return bareiss_rank(clear_denominators(m), true); }
int rank_serial(const QMatrix& m) { return bareiss_rank(clear_denominators(m), false); }

EchelonForm row_reduce(const QMatrix& m) { return rref(m, true); }
EchelonForm row_reduce_serial(const QMatrix& m) { return rref(m, false); }

std::vector<std::vector<Rat>> nullspace_basis(const QMatrix& m) {
    EchelonForm ef = row_reduce(m);
    int cols = m.cols();
    std::vector<int> pivot_of_col(static_cast<std::size_t>(cols), -1);
    for (std::size_t r = 0; r < ef.pivots.size(); ++r)
        pivot_of_col[static_cast<std::size_t>(ef.pivots[r])] = static_cast<int>(r);

    std::vector<std::vector<Rat>> basis;
    for (int f = 0; f < cols; ++f) {
        if (pivot_of_col[static_cast<std::size_t>(f)] >= 0) continue;
        std::vector<Rat> v(static_cast<std::size_t>(cols));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < ef.pivots.size(); ++r)
            v[static_cast<std::size_t>(ef.pivots[r])] = -ef.mat.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        static_cast<unsigned __int128>(a) * static_cast<unsigned __int128>(b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::optional<std::uint64_t> reduce_mod(const Rat& q, std::uint64_t p) {
    Int num = q.get_num(), den = q.get_den();
    Int pz = Int(static_cast<unsigned long>(p));
    Int dm = den % pz;
    if (dm == 0) return std::nullopt;
    Int nm = num % pz;
    if (nm < 0) nm += pz;
    std::uint64_t n = nm.get_ui();
    std::uint64_t d = dm.get_ui();
    return mulmod(n, invmod(d, p), p);
}

}  // namespace

std::optional<int> rank_mod(const QMatrix& m, std::uint64_t p) {
    int rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            auto v = reduce_mod(m.at(r, c), p);
            if (!v) return std::nullopt;
            a[static_cast<std::size_t>(r) * cols + c] = *v;
        }
    }
    auto at = [&](int r, int c) -> std::uint64_t& {
        return a[static_cast<std::size_t>(r) * cols + c];
    };
    int pr = 0;
    for (int c = 0; c < cols && pr < rows; ++c) {
        int pivot = -1;
        for (int r = pr; r < rows; ++r)
            if (at(r, c) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        if (pivot != pr)
            for (int j = c; j < cols; ++j) std::swap(at(pr, j), at(pivot, j));
        std::uint64_t inv = invmod(at(pr, c), p);
        for (int r = pr + 1; r < rows; ++r) {
            if (at(r, c) == 0) continue;
            std::uint64_t f = mulmod(at(r, c), inv, p);
            for (int j = c; j < cols; ++j) {
                std::uint64_t sub = mulmod(f, at(pr, j), p);
                at(r, j) = (at(r, j) + p - sub) % p;
            }
        }
        ++pr;
    }
    return pr;
}

int rank_verified(const QMatrix& m, std::optional<std::uint64_t> modulus,
                  std::optional<int>* prediction) {
    if (prediction) prediction->reset();
    if (modulus) {
        auto predicted = rank_mod(m, *modulus);
        if (prediction && predicted) *prediction = *predicted;
    }
    return rank(m);
}

}  // namespace hsmf
