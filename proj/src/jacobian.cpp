#include "hsmf/jacobian.hpp"

#include <algorithm>
#include <mutex>

#include "hsmf/errors.hpp"

namespace hsmf {

namespace {

// Sparse row over Q, entries sorted by column.
using SparseRow = std::vector<std::pair<int, Rat>>;

// a - f*b
SparseRow sub_scaled(const SparseRow& a, const Rat& f, const SparseRow& b) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i]);
            ++i;
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, Rat(-f * b[j].second));
            ++j;
        } else {
            Rat v = a[i].second - f * b[j].second;
            if (v != 0) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    return out;
}

// Incremental sparse Gaussian elimination. The set of leading columns after
// inserting every generator equals the pivot-column set of the dense reduced
// echelon form (first-nonzero pivoting), so the quotient basis below matches
// the dense route exactly.
struct SparseEchelon {
    std::map<int, SparseRow> rows;  // keyed by leading column, leading coefficient 1

    void insert(SparseRow row) {
        while (!row.empty()) {
            int lead = row.front().first;
            auto it = rows.find(lead);
            if (it == rows.end()) {
                Rat inv = row.front().second;
                for (auto& [c, v] : row) v /= inv;
                rows.emplace(lead, std::move(row));
                return;
            }
            row = sub_scaled(row, row.front().second, it->second);
        }
    }

    // Clears pivot columns from every other row; one pass in decreasing lead
    // order suffices since rows with larger leads are already clean.
    void back_reduce() {
        for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
            SparseRow& row = it->second;
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (const auto& [c, v] : row) {
                    if (c == it->first) continue;
                    auto p = rows.find(c);
                    if (p != rows.end()) {
                        row = sub_scaled(row, v, p->second);
                        dirty = true;
                        break;
                    }
                }
            }
        }
    }
};

}  // namespace

JacobianRing::JacobianRing(Polynomial omega, VarSystem vars)
    : vars_(std::move(vars)), omega_(std::move(omega)) {
    if (!omega_.is_zero()) {
        int e = weighted_degree(omega_, vars_);
        if (e != vars_.degree)
            throw Error("polynomial has weighted degree " + std::to_string(e) +
                        ", expected " + std::to_string(vars_.degree));
    }
    for (int i = 0; i < vars_.count(); ++i) partials_.push_back(derivative(omega_, i));
    socle_ = 0;
    for (int w : vars_.weights) socle_ += vars_.degree - 2 * w;
}

const GradedPiece& JacobianRing::piece(int e) const {
    {
        std::shared_lock lock(mutex_);
        auto it = pieces_.find(e);
        if (it != pieces_.end()) return it->second;
    }
    GradedPiece gp = compute_piece(e);
    std::unique_lock lock(mutex_);
    auto [it, inserted] = pieces_.emplace(e, std::move(gp));
    return it->second;
}

GradedPiece JacobianRing::compute_piece(int e) const {
    GradedPiece gp;
    gp.degree = e;
    gp.columns = monomials_of_weighted_degree(vars_, e);
    for (std::size_t c = 0; c < gp.columns.size(); ++c)
        gp.column_index.emplace(gp.columns[c], static_cast<int>(c));

    SparseEchelon ech;
    for (int i = 0; i < vars_.count(); ++i) {
        const Polynomial& g = partials_[static_cast<std::size_t>(i)];
        if (g.is_zero()) continue;
        int gdeg = vars_.degree - vars_.weights[static_cast<std::size_t>(i)];
        for (const Monomial& m : monomials_of_weighted_degree(vars_, e - gdeg)) {
            SparseRow row;
            Polynomial gen = Polynomial::term(m, 1) * g;
            row.reserve(gen.term_count());
            for (const auto& [mono, coeff] : gen.terms())
                row.emplace_back(gp.column_index.at(mono), coeff);
            std::sort(row.begin(), row.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first; });
            ech.insert(std::move(row));
        }
    }
    ech.back_reduce();

    gp.col_to_basis.assign(gp.columns.size(), -1);
    for (std::size_t c = 0; c < gp.columns.size(); ++c) {
        if (ech.rows.count(static_cast<int>(c))) continue;
        gp.col_to_basis[c] = static_cast<int>(gp.basis.size());
        gp.basis.push_back(gp.columns[c]);
    }
    gp.reduction = QMatrix(static_cast<int>(gp.columns.size()), gp.dim());
    for (std::size_t c = 0; c < gp.columns.size(); ++c) {
        int b = gp.col_to_basis[c];
        if (b >= 0) {
            gp.reduction.at(static_cast<int>(c), b) = 1;
            continue;
        }
        for (const auto& [col, v] : ech.rows.at(static_cast<int>(c))) {
            if (col == static_cast<int>(c)) continue;
            gp.reduction.at(static_cast<int>(c), gp.col_to_basis[static_cast<std::size_t>(col)]) =
                -v;
        }
    }
    return gp;
}

QMatrix JacobianRing::ideal_generator_matrix(int e) const {
    std::vector<Monomial> columns = monomials_of_weighted_degree(vars_, e);
    std::map<Monomial, int> index;
    for (std::size_t c = 0; c < columns.size(); ++c)
        index.emplace(columns[c], static_cast<int>(c));

    std::vector<QMatrix::Triplet> entries;
    int row = 0;
    for (int i = 0; i < vars_.count(); ++i) {
        const Polynomial& g = partials_[static_cast<std::size_t>(i)];
        if (g.is_zero()) continue;
        int gdeg = vars_.degree - vars_.weights[static_cast<std::size_t>(i)];
        for (const Monomial& m : monomials_of_weighted_degree(vars_, e - gdeg)) {
            Polynomial gen = Polynomial::term(m, 1) * g;
            for (const auto& [mono, coeff] : gen.terms())
                entries.push_back({row, index.at(mono), coeff});
            ++row;
        }
    }
    return QMatrix::from_triplets(row, static_cast<int>(columns.size()), entries);
}

long long JacobianRing::milnor_number() const {
    int maxw = vars_.max_weight();
    for (int e = socle_ + 1; e <= socle_ + maxw; ++e) {
        int dim = piece(e).dim();
        if (dim != 0)
            throw NonIsolatedSingularity(
                "Jacobian ring is not finite dimensional: degree " + std::to_string(e) +
                    " piece has dimension " + std::to_string(dim) +
                    " beyond the socle degree " + std::to_string(socle_),
                e);
    }
    long long total = 0;
    for (int e = 0; e <= socle_; ++e) total += piece(e).dim();
    return total;
}

std::vector<Rat> JacobianRing::normal_form(const Polynomial& p) const {
    int e = weighted_degree(p, vars_);  // throws on zero / inhomogeneous input
    const GradedPiece& gp = piece(e);
    std::vector<Rat> out(static_cast<std::size_t>(gp.dim()));
    for (const auto& [mono, coeff] : p.terms()) {
        int c = gp.column_index.at(mono);
        for (int b = 0; b < gp.dim(); ++b)
            out[static_cast<std::size_t>(b)] += coeff * gp.reduction.at(c, b);
    }
    return out;
}

namespace {

// multiply by (1 - t^k)
std::vector<Int> times_one_minus_tk(const std::vector<Int>& p, int k) {
    std::vector<Int> out(p.size() + static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i] += p[i];
        out[i + static_cast<std::size_t>(k)] -= p[i];
    }
    return out;
}

// exact division by (1 - t^k); empty result signals a remainder
std::optional<std::vector<Int>> divide_one_minus_tk(const std::vector<Int>& p, int k) {
    if (p.empty()) return std::vector<Int>{};
    std::vector<Int> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) {
        q[i] = p[i];
        if (i >= static_cast<std::size_t>(k)) q[i] += q[i - static_cast<std::size_t>(k)];
    }
    if (p.size() < static_cast<std::size_t>(k)) {
        for (const Int& c : q)
            if (c != 0) return std::nullopt;
        return std::vector<Int>{};
    }
    for (std::size_t i = p.size() - static_cast<std::size_t>(k); i < p.size(); ++i)
        if (q[i] != 0) return std::nullopt;
    q.resize(p.size() - static_cast<std::size_t>(k));
    return q;
}

}  // namespace

std::vector<long long> JacobianRing::hilbert_series(const VarSystem& vars) {
    std::vector<Int> num{1};
    for (int a : vars.weights) {
        if (a >= vars.degree)
            throw NonPolynomialSeries("weight " + std::to_string(a) +
                                      " >= degree " + std::to_string(vars.degree) +
                                      ": series is not a polynomial");
        num = times_one_minus_tk(num, vars.degree - a);
    }
    for (int a : vars.weights) {
        auto q = divide_one_minus_tk(num, a);
        if (!q)
            throw NonPolynomialSeries("series is not a polynomial for the given weights");
        num = std::move(*q);
    }
    while (!num.empty() && num.back() == 0) num.pop_back();
    std::vector<long long> out;
    out.reserve(num.size());
    for (const Int& c : num) out.push_back(c.get_si());
    return out;
}

std::pair<QMatrix, int> pairing_rank(const JacobianRing& jac, int e1, int e2) {
    const GradedPiece& p1 = jac.piece(e1);
    const GradedPiece& p2 = jac.piece(e2);
    const GradedPiece& p3 = jac.piece(e1 + e2);
    QMatrix m(p2.dim() * p3.dim(), p1.dim());
    for (int col = 0; col < p1.dim(); ++col) {
        for (int r2 = 0; r2 < p2.dim(); ++r2) {
            Polynomial prod = Polynomial::term(p1.basis[static_cast<std::size_t>(col)], 1) *
                              Polynomial::term(p2.basis[static_cast<std::size_t>(r2)], 1);
            std::vector<Rat> nf = jac.normal_form(prod);
            for (int r3 = 0; r3 < p3.dim(); ++r3)
                m.at(r2 * p3.dim() + r3, col) = nf[static_cast<std::size_t>(r3)];
        }
    }
    return {m, rank(m)};
}

}  // namespace hsmf
