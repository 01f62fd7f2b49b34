#include "hsmf/polynomial.hpp"

#include <algorithm>

namespace hsmf {

int weighted_degree(const Monomial& m, const VarSystem& vars) {
    int e = 0;
    for (std::size_t i = 0; i < m.size(); ++i) e += m[i] * vars.weights[i];
    return e;
}

bool monomial_less(const Monomial& a, const Monomial& b, const VarSystem& vars) {
    int da = weighted_degree(a, vars);
    int db = weighted_degree(b, vars);
    if (da != db) return da < db;
    return a < b;  // lexicographic, earlier variables more significant
}

void Polynomial::add_term(const Monomial& m, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, Rat(-c));
    return *this;
}

Polynomial& Polynomial::operator*=(const Rat& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out.add_term(m, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Rat(-c));
    return out;
}

int weighted_degree(const Polynomial& p, const VarSystem& vars) {
    if (p.is_zero()) throw ZeroPolynomial();
    int e = 0;
    const Monomial* first = nullptr;
    for (const auto& [m, c] : p.terms()) {
        int d = weighted_degree(m, vars);
        if (!first) {
            first = &m;
            e = d;
        } else if (d != e) {
            throw NotQuasiHomogeneous(render_monomial(*first, vars), e,
                                      render_monomial(m, vars), d);
        }
    }
    return e;
}

bool is_quasi_homogeneous(const Polynomial& p, const VarSystem& vars) {
    if (p.is_zero()) return true;
    try {
        weighted_degree(p, vars);
        return true;
    } catch (const NotQuasiHomogeneous&) {
        return false;
    }
}

Polynomial restrict_to(const Polynomial& p, const std::vector<int>& keep) {
    std::vector<char> kept;
    for (int i : keep) {
        if (i >= static_cast<int>(kept.size())) kept.resize(static_cast<std::size_t>(i) + 1, 0);
        kept[static_cast<std::size_t>(i)] = 1;
    }
    auto in_keep = [&](std::size_t i) { return i < kept.size() && kept[i]; };
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        bool drop = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] > 0 && !in_keep(i)) {
                drop = true;
                break;
            }
        }
        if (!drop) out.add_term(m, c);
    }
    return out;
}

Polynomial project(const Polynomial& p, const std::vector<int>& keep) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        Monomial sub(keep.size());
        for (std::size_t k = 0; k < keep.size(); ++k)
            sub[k] = m[static_cast<std::size_t>(keep[k])];
        out.add_term(sub, c);
    }
    return out;
}

Polynomial derivative(const Polynomial& p, int var) {
    Polynomial out;
    for (const auto& [m, c] : p.terms()) {
        int e = m[static_cast<std::size_t>(var)];
        if (e == 0) continue;
        Monomial d = m;
        d[static_cast<std::size_t>(var)] = e - 1;
        out.add_term(d, c * e);
    }
    return out;
}

std::string render_monomial(const Monomial& m, const VarSystem& vars) {
    std::string s;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += vars.names[i];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    if (s.empty()) s = "1";
    return s;
}

std::string render(const Polynomial& p, const VarSystem& vars) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rat>*> terms;
    for (const auto& t : p.terms()) terms.push_back(&t);
    std::sort(terms.begin(), terms.end(), [&](const auto* a, const auto* b) {
        return monomial_less(b->first, a->first, vars);  // descending
    });

    std::string s;
    for (std::size_t k = 0; k < terms.size(); ++k) {
        const auto& [m, c] = *terms[k];
        Rat a = abs(c);
        bool constant = true;
        for (int e : m) constant = constant && e == 0;
        if (k == 0) {
            if (c < 0) s += "-";
        } else {
            s += c < 0 ? " - " : " + ";
        }
        if (constant) {
            s += a.get_str();
        } else if (a == 1) {
            // a bare leading '-' is not valid input syntax, so spell out -1*
            if (k == 0 && c < 0) s += "1*";
            s += render_monomial(m, vars);
        } else {
            s += a.get_str() + "*" + render_monomial(m, vars);
        }
    }
    return s;
}

namespace {

void enumerate_monomials(const VarSystem& vars, std::size_t i, int remaining, Monomial& cur,
                         std::vector<Monomial>& out) {
    if (i + 1 == cur.size()) {
        int w = vars.weights[i];
        if (remaining % w == 0) {
            cur[i] = remaining / w;
            out.push_back(cur);
            cur[i] = 0;
        }
        return;
    }
    int w = vars.weights[i];
    for (int e = 0; e * w <= remaining; ++e) {
        cur[i] = e;
        enumerate_monomials(vars, i + 1, remaining - e * w, cur, out);
    }
    cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_weighted_degree(const VarSystem& vars, int e) {
    std::vector<Monomial> out;
    if (e < 0) return out;
    if (vars.count() == 0) {
        if (e == 0) out.push_back(Monomial{});
        return out;
    }
    Monomial cur(static_cast<std::size_t>(vars.count()), 0);
    enumerate_monomials(vars, 0, e, cur, out);
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return monomial_less(b, a, vars); });
    return out;
}

}  // namespace hsmf
