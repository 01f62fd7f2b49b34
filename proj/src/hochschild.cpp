#include "hsmf/hochschild.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <sstream>
#include <tuple>

#include "hsmf/errors.hpp"

namespace hsmf {

std::vector<SectorShape> sector_shapes(const VarSystem& vars) {
    std::vector<SectorShape> out;
    const int d = vars.degree;
    for (int j = 0; j < d; ++j) {
        SectorShape s;
        s.j = j;
        for (int i = 0; i < vars.count(); ++i) {
            int w = vars.weights[static_cast<std::size_t>(i)];
            if ((j * w) % d == 0) {
                s.fixed.push_back(i);
            } else {
                ++s.rank_moved;
                s.character -= w;
            }
        }
        out.push_back(std::move(s));
    }
    return out;
}

const HomSummand* HomSpace::find(int sector) const {
    for (const HomSummand& s : summands)
        if (s.sector == sector) return &s;
    return nullptr;
}

bool HSElement::is_zero() const {
    for (const auto& v : coords)
        for (const Rat& x : v)
            if (x != 0) return false;
    return true;
}

HSElement zero_element(HomSpace home) {
    HSElement e;
    e.coords.resize(home.summands.size());
    for (std::size_t i = 0; i < home.summands.size(); ++i)
        e.coords[i].assign(static_cast<std::size_t>(home.summands[i].dim), Rat(0));
    e.home = std::move(home);
    return e;
}

HSElement basis_element(HomSpace home, int flat_index) {
    HSElement e = zero_element(std::move(home));
    for (std::size_t i = 0; i < e.home.summands.size(); ++i) {
        const HomSummand& s = e.home.summands[i];
        if (flat_index >= s.offset && flat_index < s.offset + s.dim) {
            e.coords[i][static_cast<std::size_t>(flat_index - s.offset)] = 1;
            return e;
        }
    }
    throw Error("basis index " + std::to_string(flat_index) + " out of range");
}

std::vector<Rat> flatten(const HSElement& e) {
    std::vector<Rat> out(static_cast<std::size_t>(e.home.total_dim));
    for (std::size_t i = 0; i < e.home.summands.size(); ++i) {
        const HomSummand& s = e.home.summands[i];
        for (int k = 0; k < s.dim; ++k)
            out[static_cast<std::size_t>(s.offset + k)] = e.coords[i][static_cast<std::size_t>(k)];
    }
    return out;
}

std::vector<ResolvedTerm> aggregate_trace(const MulTrace& trace) {
    using Key = std::tuple<int, int, int, int, int>;
    std::map<Key, long long> counts;
    for (const ResolvedTerm& t : trace.terms) {
        Key key{t.left_sector, t.right_sector, t.target_sector,
                static_cast<int>(t.rule), t.target_degree.value_or(INT_MIN)};
        counts[key] += t.count;
    }
    std::vector<ResolvedTerm> out;
    for (const auto& [key, count] : counts) {
        ResolvedTerm t;
        t.left_sector = std::get<0>(key);
        t.right_sector = std::get<1>(key);
        t.target_sector = std::get<2>(key);
        t.rule = static_cast<ResolvedTerm::Rule>(std::get<3>(key));
        if (std::get<4>(key) != INT_MIN) t.target_degree = std::get<4>(key);
        t.count = count;
        out.push_back(t);
    }
    return out;
}

HSAlgebra::HSAlgebra(VarSystem vars, Polynomial omega)
    : HSAlgebra(std::move(vars), std::move(omega), Options{}) {}

HSAlgebra::HSAlgebra(VarSystem vars, Polynomial omega, Options options)
    : vars_(std::move(vars)), omega_(std::move(omega)), options_(options) {
    for (SectorShape& sh : sector_shapes(vars_)) {
        SectorData s;
        s.sub = vars_.subsystem(sh.fixed);
        s.omega_g = project(restrict_to(omega_, sh.fixed), sh.fixed);
        s.shape = std::move(sh);
        s.jac = std::make_unique<JacobianRing>(s.omega_g, s.sub);
        try {
            s.jac->milnor_number();
        } catch (const NonIsolatedSingularity& e) {
            throw NonIsolatedSingularity(
                "sector j=" + std::to_string(s.shape.j) + ": " + e.what(),
                e.witness_degree());
        }
        sectors_.push_back(std::move(s));
    }
}

SerreData HSAlgebra::serre() const {
    return SerreData{-vars_.weight_sum(), vars_.count()};
}

HomSpace HSAlgebra::hom_space(int m, int t) const {
    HomSpace h;
    h.m = m;
    h.t = t;
    for (const SectorData& s : sectors_) {
        int tr = t - s.shape.rank_moved;
        if (((tr % 2) + 2) % 2 != 0) continue;
        int degree = m - s.shape.character + vars_.degree * (tr / 2);
        int dim = s.jac->piece(degree).dim();
        h.summands.push_back({s.shape.j, degree, dim, h.total_dim});
        h.total_dim += dim;
    }
    return h;
}

HomSpace HSAlgebra::cohomology(int k) const { return hom_space(0, k); }

HomSpace HSAlgebra::homology(int k) const {
    SerreData sd = serre();
    return hom_space(sd.twist, sd.shift + k);
}

bool HSAlgebra::periodicity_check(int m, int t) const {
    HomSpace a = hom_space(m + vars_.degree, t);
    HomSpace b = hom_space(m, t + 2);
    return a.summands == b.summands;
}

Polynomial HSAlgebra::summand_representative(const HomSummand& s,
                                             const std::vector<Rat>& coords) const {
    const SectorData& sec = sectors_[static_cast<std::size_t>(s.sector)];
    const GradedPiece& gp = sec.jac->piece(s.degree);
    Polynomial p;
    for (int i = 0; i < gp.dim(); ++i) {
        const Rat& c = coords[static_cast<std::size_t>(i)];
        if (c != 0) p += Polynomial::term(gp.basis[static_cast<std::size_t>(i)], c);
    }
    return p;
}

HSElement HSAlgebra::multiply(const HSElement& a, const HSElement& b, MulTrace* trace) const {
    const int d = vars_.degree;
    HSElement out = zero_element(hom_space(a.home.m + b.home.m, a.home.t + b.home.t));
    std::vector<IndeterminateTerm> unresolved;

    std::map<int, std::size_t> target_pos;
    for (std::size_t i = 0; i < out.home.summands.size(); ++i)
        target_pos.emplace(out.home.summands[i].sector, i);

    auto locate = [](const HSElement& e, int sector)
        -> std::pair<const HomSummand*, const std::vector<Rat>*> {
        for (std::size_t i = 0; i < e.home.summands.size(); ++i)
            if (e.home.summands[i].sector == sector)
                return {&e.home.summands[i], &e.coords[i]};
        return {nullptr, nullptr};
    };
    auto nonzero = [](const std::vector<Rat>* v) {
        if (!v) return false;
        for (const Rat& x : *v)
            if (x != 0) return true;
        return false;
    };
    auto record = [&](int lj, int rj, int tj, std::optional<int> deg, ResolvedTerm::Rule rule) {
        if (!trace) return;
        ResolvedTerm t;
        t.left_sector = lj;
        t.right_sector = rj;
        t.target_sector = tj;
        t.target_degree = deg;
        t.rule = rule;
        trace->terms.push_back(t);
    };

    // The sector-k component of a*b collects f_j composed with the
    // (zeta^j, 1)-translate of g_(k-j), over all j.
    for (int k = 0; k < d; ++k) {
        auto tp = target_pos.find(k);
        const HomSummand* target =
            tp == target_pos.end() ? nullptr : &out.home.summands[tp->second];
        for (int j = 0; j < d; ++j) {
            int l = ((k - j) % d + d) % d;
            auto [fs, fc] = locate(a, j);
            auto [gs, gc] = locate(b, l);
            bool fnz = nonzero(fc);
            bool gnz = nonzero(gc);

            if (j == 0 && k == 0) {
                // both factors untwisted: multiplication of functions in Jac(omega)
                if (fnz && gnz) {
                    if (!target) throw Error("internal: untwisted target summand missing");
                    if (fs->degree + gs->degree != target->degree)
                        throw Error("internal: degree mismatch in untwisted product");
                    Polynomial prod = summand_representative(*fs, *fc) *
                                      summand_representative(*gs, *gc);
                    std::vector<Rat> nf = untwisted().normal_form(prod);
                    auto& acc = out.coords[tp->second];
                    for (std::size_t i = 0; i < nf.size(); ++i) acc[i] += nf[i];
                    record(0, 0, 0, target->degree, ResolvedTerm::Rule::product);
                }
                continue;
            }
            if (!target || target->dim == 0) {
                // the whole term lands in a zero space
                if (fnz && gnz)
                    record(j, l, k,
                           target ? std::optional<int>(target->degree) : std::nullopt,
                           ResolvedTerm::Rule::zero_target);
                continue;
            }
            if (!fnz || !gnz) continue;
            if (j == 0 && options_.assume_restriction_action) {
                // opt-in: untwisted factor acts on the twisted summand through
                // restriction to the sector's fixed locus
                const SectorData& sec = sectors_[static_cast<std::size_t>(k)];
                Polynomial left = project(
                    restrict_to(summand_representative(*fs, *fc), sec.shape.fixed),
                    sec.shape.fixed);
                if (fs->degree + gs->degree != target->degree)
                    throw Error("internal: degree mismatch in restriction product");
                if (!left.is_zero()) {
                    Polynomial prod = left * summand_representative(*gs, *gc);
                    if (!prod.is_zero()) {
                        std::vector<Rat> nf = sec.jac->normal_form(prod);
                        auto& acc = out.coords[tp->second];
                        for (std::size_t i = 0; i < nf.size(); ++i) acc[i] += nf[i];
                    }
                }
                record(0, l, k, target->degree, ResolvedTerm::Rule::restriction);
                continue;
            }
            unresolved.push_back({j, l, k, target->degree, target->dim});
        }
    }

    if (!unresolved.empty()) {
        std::ostringstream msg;
        msg << "indeterminate composition:";
        for (const IndeterminateTerm& t : unresolved)
            msg << " [f(j=" << t.left_sector << ") o g(j=" << t.right_sector
                << ") -> sector " << t.target_sector << ", degree " << t.target_degree
                << ", dim " << t.target_dim << "]";
        throw IndeterminateComposition(msg.str(), std::move(unresolved));
    }
    return out;
}

GammaReport HSAlgebra::gamma() const {
    GammaReport rep;
    rep.hh2 = cohomology(2);
    rep.hh_minus1 = homology(-1);
    rep.hh_plus1 = homology(1);
    const int na = rep.hh2.total_dim;
    const int nb = rep.hh_minus1.total_dim;
    const int nc = rep.hh_plus1.total_dim;
    rep.matrix = QMatrix(nb * nc, na);

    MulTrace trace;
    std::vector<IndeterminateTerm> unresolved;

#pragma omp parallel
    {
        MulTrace local;
        std::vector<IndeterminateTerm> local_unresolved;
#pragma omp for schedule(dynamic)
        for (int col = 0; col < na; ++col) {
            HSElement ea = basis_element(rep.hh2, col);
            for (int i = 0; i < nb; ++i) {
                HSElement eb = basis_element(rep.hh_minus1, i);
                try {
                    HSElement prod = multiply(ea, eb, &local);
                    std::vector<Rat> flat = flatten(prod);
                    for (int k = 0; k < nc; ++k)
                        rep.matrix.at(i * nc + k, col) = flat[static_cast<std::size_t>(k)];
                } catch (const IndeterminateComposition& e) {
                    local_unresolved.insert(local_unresolved.end(), e.terms().begin(),
                                            e.terms().end());
                }
            }
        }
#pragma omp critical
        {
            trace.terms.insert(trace.terms.end(), local.terms.begin(), local.terms.end());
            unresolved.insert(unresolved.end(), local_unresolved.begin(),
                              local_unresolved.end());
        }
    }

    if (!unresolved.empty()) {
        auto key = [](const IndeterminateTerm& t) {
            return std::tuple{t.left_sector, t.right_sector, t.target_sector,
                              t.target_degree, t.target_dim};
        };
        std::sort(unresolved.begin(), unresolved.end(),
                  [&](const auto& x, const auto& y) { return key(x) < key(y); });
        unresolved.erase(std::unique(unresolved.begin(), unresolved.end(),
                                     [&](const auto& x, const auto& y) {
                                         return key(x) == key(y);
                                     }),
                         unresolved.end());
        std::ostringstream msg;
        msg << "gamma is not determined:";
        for (const IndeterminateTerm& t : unresolved)
            msg << " [f(j=" << t.left_sector << ") o g(j=" << t.right_sector
                << ") -> sector " << t.target_sector << ", degree " << t.target_degree
                << ", dim " << t.target_dim << "]";
        throw IndeterminateComposition(msg.str(), std::move(unresolved));
    }

    rep.resolved = aggregate_trace(trace);
    std::optional<int> prediction;
    rep.rank = rank_verified(rep.matrix, options_.modulus, &prediction);
    rep.modular_prediction = prediction;
    rep.kernel_dim = na - rep.rank;
    for (const std::vector<Rat>& v : nullspace_basis(rep.matrix)) {
        HSElement e = zero_element(rep.hh2);
        for (std::size_t i = 0; i < e.home.summands.size(); ++i) {
            const HomSummand& s = e.home.summands[i];
            for (int k = 0; k < s.dim; ++k)
                e.coords[i][static_cast<std::size_t>(k)] =
                    v[static_cast<std::size_t>(s.offset + k)];
        }
        rep.kernel_basis.push_back(std::move(e));
    }
    return rep;
}

}  // namespace hsmf
