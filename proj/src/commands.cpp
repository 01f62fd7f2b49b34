#include "hsmf/commands.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "hsmf/errors.hpp"
#include "hsmf/hochschild.hpp"

namespace hsmf {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start)
        .count();
}

HSAlgebra::Options algebra_options(const InputSpec& spec) {
    HSAlgebra::Options opt;
    opt.assume_restriction_action = spec.options.assume_restriction_action;
    opt.modulus = spec.options.modulus;
    return opt;
}

json input_json(const InputSpec& spec) {
    json j;
    j["vars"] = spec.vars.names;
    j["weights"] = spec.vars.weights;
    j["degree"] = spec.vars.degree;
    j["omega"] = spec.omega_text;
    return j;
}

std::string envelope(const InputSpec& spec, const std::string& command, json result) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["schema"] = kSchemaVersion;
    doc["command"] = command;
    doc["input"] = input_json(spec);
    doc["result"] = std::move(result);
    return doc.dump(2) + "\n";
}

json summand_json(const HomSummand& s) {
    json j;
    j["sector"] = s.sector;
    j["degree"] = s.degree;
    j["dim"] = s.dim;
    return j;
}

json homspace_json(const HomSpace& h) {
    json j;
    j["m"] = h.m;
    j["t"] = h.t;
    j["dim"] = h.total_dim;
    j["summands"] = json::array();
    for (const HomSummand& s : h.summands) j["summands"].push_back(summand_json(s));
    return j;
}

json coords_json(const std::vector<Rat>& v) {
    json j = json::array();
    for (const Rat& x : v) j.push_back(x.get_str());
    return j;
}

const char* rule_name(ResolvedTerm::Rule r) {
    switch (r) {
        case ResolvedTerm::Rule::product: return "product";
        case ResolvedTerm::Rule::zero_target: return "zero_target";
        case ResolvedTerm::Rule::restriction: return "restriction";
    }
    return "?";
}

json resolved_json(const std::vector<ResolvedTerm>& terms) {
    json arr = json::array();
    for (const ResolvedTerm& t : terms) {
        json j;
        j["left"] = t.left_sector;
        j["right"] = t.right_sector;
        j["target"] = t.target_sector;
        if (t.target_degree) j["target_degree"] = *t.target_degree;
        j["rule"] = rule_name(t.rule);
        j["count"] = t.count;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string summand_text(const HomSpace& h) {
    std::ostringstream os;
    bool first = true;
    for (const HomSummand& s : h.summands) {
        if (!first) os << "  +  ";
        first = false;
        os << "j=" << s.sector << ": deg " << s.degree << " (dim " << s.dim << ")";
    }
    if (first) os << "(no summands)";
    return os.str();
}

std::string fixed_names(const VarSystem& vars, const std::vector<int>& fixed) {
    if (fixed.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (i) s += ",";
        s += vars.names[static_cast<std::size_t>(fixed[i])];
    }
    return s;
}

void append_fano_warning(std::ostringstream& os, const VarSystem& vars) {
    int index = vars.weight_sum() - vars.degree;
    if (index < 1)
        os << "warning: weight sum - degree = " << index
           << " < 1; the exceptional-collection complement reading needs a positive index\n";
}

std::vector<long long> piece_dims(const JacobianRing& jac) {
    std::vector<long long> dims;
    for (int e = 0; e <= std::max(jac.socle_degree(), 0); ++e)
        dims.push_back(jac.piece(e).dim());
    return dims;
}

}  // namespace

Report run_analyze(const InputSpec& spec) {
    auto start = Clock::now();
    Polynomial omega = parse_omega(spec);
    HSAlgebra algebra(spec.vars, omega, algebra_options(spec));
    const JacobianRing& jac = algebra.untwisted();

    long long milnor = jac.milnor_number();
    int socle = jac.socle_degree();
    std::vector<long long> dims = piece_dims(jac);

    bool have_oracle = !spec.options.no_oracle;
    std::vector<long long> oracle;
    bool oracle_match = true;
    if (have_oracle) {
        oracle = JacobianRing::hilbert_series(spec.vars);
        oracle_match = oracle == dims;
    }

    SerreData sd = algebra.serre();

    json result;
    result["degree"] = weighted_degree(omega, spec.vars);
    result["milnor"] = milnor;
    result["socle"] = socle;
    result["fano_index"] = spec.vars.weight_sum() - spec.vars.degree;
    result["hilbert"]["dims"] = dims;
    if (have_oracle) {
        result["hilbert"]["oracle"] = oracle;
        result["hilbert"]["match"] = oracle_match;
    }
    result["serre"]["twist"] = sd.twist;
    result["serre"]["shift"] = sd.shift;
    result["sectors"] = json::array();
    for (const SectorData& s : algebra.sectors()) {
        json js;
        js["j"] = s.shape.j;
        js["fixed"] = json::array();
        for (int i : s.shape.fixed)
            js["fixed"].push_back(spec.vars.names[static_cast<std::size_t>(i)]);
        js["rank_moved"] = s.shape.rank_moved;
        js["character"] = s.shape.character;
        js["jacobian_dims"] = piece_dims(*s.jac);
        result["sectors"].push_back(std::move(js));
    }

    std::ostringstream os;
    os << "analyze: omega = " << render(omega, spec.vars) << "\n";
    append_fano_warning(os, spec.vars);
    os << "quasi-homogeneous of weighted degree " << spec.vars.degree << "\n";
    os << "milnor number  " << milnor << "\n";
    os << "socle degree   " << socle << "\n";
    os << "hilbert dims   ";
    for (long long v : dims) os << v << " ";
    os << "\n";
    if (have_oracle) {
        os << "series oracle  ";
        for (long long v : oracle) os << v << " ";
        os << (oracle_match ? " [match]" : " [MISMATCH]") << "\n";
    }
    os << "serre functor  twist " << sd.twist << ", shift [" << sd.shift << "]\n";
    os << "sectors (d = " << spec.vars.degree << "):\n";
    os << "  " << std::setw(4) << "j" << std::setw(18) << "fixed" << std::setw(8) << "rkW"
       << std::setw(8) << "k_g" << "  jac dims\n";
    for (const SectorData& s : algebra.sectors()) {
        os << "  " << std::setw(4) << s.shape.j << std::setw(18)
           << fixed_names(spec.vars, s.shape.fixed) << std::setw(8) << s.shape.rank_moved
           << std::setw(8) << s.shape.character << "  ";
        for (long long v : piece_dims(*s.jac)) os << v << " ";
        os << "\n";
    }
    os << "elapsed: " << ms_since(start) << " ms\n";

    return {"analyze", os.str(), envelope(spec, "analyze", std::move(result))};
}

Report run_hh(const InputSpec& spec, int kmin, int kmax) {
    auto start = Clock::now();
    Polynomial omega = parse_omega(spec);
    HSAlgebra algebra(spec.vars, omega, algebra_options(spec));

    json rows = json::array();
    std::ostringstream os;
    os << "hochschild cohomology / homology, k = " << kmin << " .. " << kmax << "\n";
    append_fano_warning(os, spec.vars);
    for (int k = kmin; k <= kmax; ++k) {
        HomSpace up = algebra.cohomology(k);
        HomSpace down = algebra.homology(k);
        json row;
        row["k"] = k;
        row["cohomology"] = homspace_json(up);
        row["homology"] = homspace_json(down);
        rows.push_back(std::move(row));
        os << "  HH^" << k << "  dim " << std::setw(4) << up.total_dim << "   "
           << summand_text(up) << "\n";
        os << "  HH_" << k << "  dim " << std::setw(4) << down.total_dim << "   "
           << summand_text(down) << "\n";
    }
    json result;
    result["kmin"] = kmin;
    result["kmax"] = kmax;
    result["rows"] = std::move(rows);
    os << "elapsed: " << ms_since(start) << " ms\n";
    return {"hh", os.str(), envelope(spec, "hh", std::move(result))};
}

Report run_hom(const InputSpec& spec, int m, int t) {
    auto start = Clock::now();
    Polynomial omega = parse_omega(spec);
    HSAlgebra algebra(spec.vars, omega, algebra_options(spec));
    HomSpace h = algebra.hom_space(m, t);

    std::ostringstream os;
    os << "Hom(Delta, Delta(" << m << ")[" << t << "])  dim " << h.total_dim << "\n";
    append_fano_warning(os, spec.vars);
    os << "  " << summand_text(h) << "\n";
    os << "elapsed: " << ms_since(start) << " ms\n";
    return {"hom", os.str(), envelope(spec, "hom", homspace_json(h))};
}

Report run_gamma(const InputSpec& spec) {
    auto start = Clock::now();
    Polynomial omega = parse_omega(spec);
    HSAlgebra algebra(spec.vars, omega, algebra_options(spec));
    GammaReport rep = algebra.gamma();

    json result;
    result["dims"]["hh2"] = rep.hh2.total_dim;
    result["dims"]["hh_minus1"] = rep.hh_minus1.total_dim;
    result["dims"]["hh_plus1"] = rep.hh_plus1.total_dim;
    result["hh2"] = homspace_json(rep.hh2);
    result["hh_minus1"] = homspace_json(rep.hh_minus1);
    result["hh_plus1"] = homspace_json(rep.hh_plus1);
    result["rank"] = rep.rank;
    result["kernel_dim"] = rep.kernel_dim;
    result["kernel_basis"] = json::array();
    for (const HSElement& e : rep.kernel_basis) {
        json je;
        je["summands"] = json::array();
        for (std::size_t i = 0; i < e.home.summands.size(); ++i) {
            json js = summand_json(e.home.summands[i]);
            js["coords"] = coords_json(e.coords[i]);
            je["summands"].push_back(std::move(js));
        }
        result["kernel_basis"].push_back(std::move(je));
    }
    result["resolved"] = resolved_json(rep.resolved);
    if (spec.options.modulus) {
        json jm;
        jm["prime"] = *spec.options.modulus;
        if (rep.modular_prediction) {
            jm["prediction"] = *rep.modular_prediction;
            jm["agrees"] = *rep.modular_prediction == rep.rank;
        } else {
            jm["prediction"] = nullptr;
            jm["agrees"] = false;
        }
        result["modular"] = std::move(jm);
    }

    std::ostringstream os;
    os << "gamma: HH^2 -> Hom(HH_-1, HH_1)\n";
    append_fano_warning(os, spec.vars);
    os << "  dim HH^2  = " << rep.hh2.total_dim << "   [" << summand_text(rep.hh2) << "]\n";
    os << "  dim HH_-1 = " << rep.hh_minus1.total_dim << "   [" << summand_text(rep.hh_minus1)
       << "]\n";
    os << "  dim HH_1  = " << rep.hh_plus1.total_dim << "   [" << summand_text(rep.hh_plus1)
       << "]\n";
    os << "  rank       " << rep.rank << "\n";
    if (spec.options.modulus) {
        os << "  modular    prime " << *spec.options.modulus << " predicted ";
        if (rep.modular_prediction)
            os << *rep.modular_prediction
               << (rep.modular_prediction == rep.rank ? " [verified]" : " [OVERRIDDEN by exact]");
        else
            os << "n/a (prime divides a denominator)";
        os << "\n";
    }
    os << "  kernel dim " << rep.kernel_dim << "\n";
    for (std::size_t b = 0; b < rep.kernel_basis.size(); ++b) {
        const HSElement& e = rep.kernel_basis[b];
        os << "  kernel[" << b << "]:";
        for (std::size_t i = 0; i < e.home.summands.size(); ++i) {
            os << "  j=" << e.home.summands[i].sector << " (";
            for (std::size_t k = 0; k < e.coords[i].size(); ++k) {
                if (k) os << ",";
                os << e.coords[i][k].get_str();
            }
            os << ")";
        }
        os << "\n";
    }
    os << "  resolved terms:\n";
    for (const ResolvedTerm& t : rep.resolved) {
        os << "    f(j=" << t.left_sector << ") o g(j=" << t.right_sector << ") -> j="
           << t.target_sector;
        if (t.target_degree)
            os << " deg " << *t.target_degree;
        else
            os << " (parity-excluded)";
        os << "  [" << rule_name(t.rule) << "] x" << t.count << "\n";
    }
    os << "elapsed: " << ms_since(start) << " ms\n";
    return {"gamma", os.str(), envelope(spec, "gamma", std::move(result))};
}

Report run_pairing(const InputSpec& spec, int e1, int e2, bool include_matrix) {
    auto start = Clock::now();
    Polynomial omega = parse_omega(spec);
    JacobianRing jac(omega, spec.vars);
    jac.milnor_number();  // smoothness certificate

    auto [matrix, rk] = pairing_rank(jac, e1, e2);
    std::optional<int> prediction;
    if (spec.options.modulus) prediction = rank_mod(matrix, *spec.options.modulus);

    json result;
    result["e1"] = e1;
    result["e2"] = e2;
    result["dim_e1"] = jac.piece(e1).dim();
    result["dim_e2"] = jac.piece(e2).dim();
    result["dim_target"] = jac.piece(e1 + e2).dim();
    result["rank"] = rk;
    if (spec.options.modulus) {
        result["modular"]["prime"] = *spec.options.modulus;
        if (prediction) {
            result["modular"]["prediction"] = *prediction;
            result["modular"]["agrees"] = *prediction == rk;
        } else {
            result["modular"]["prediction"] = nullptr;
            result["modular"]["agrees"] = false;
        }
    }
    if (include_matrix) {
        json rows = json::array();
        for (int r = 0; r < matrix.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < matrix.cols(); ++c) row.push_back(matrix.at(r, c).get_str());
            rows.push_back(std::move(row));
        }
        result["matrix"] = std::move(rows);
    }

    std::ostringstream os;
    os << "pairing Jac_" << e1 << " x Jac_" << e2 << " -> Jac_" << e1 + e2 << "\n";
    os << "  dims " << jac.piece(e1).dim() << " x " << jac.piece(e2).dim() << " -> "
       << jac.piece(e1 + e2).dim() << "\n";
    os << "  rank of Jac_" << e1 << " -> Hom(Jac_" << e2 << ", Jac_" << e1 + e2
       << "): " << rk << "\n";
    if (include_matrix) {
        os << "  matrix (" << matrix.rows() << " x " << matrix.cols() << "):\n";
        for (int r = 0; r < matrix.rows(); ++r) {
            os << "   ";
            for (int c = 0; c < matrix.cols(); ++c) os << " " << matrix.at(r, c).get_str();
            os << "\n";
        }
    }
    os << "elapsed: " << ms_since(start) << " ms\n";
    return {"pairing", os.str(), envelope(spec, "pairing", std::move(result))};
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const IndeterminateComposition*>(&e)) return 4;
    if (dynamic_cast<const NonIsolatedSingularity*>(&e)) return 3;
    if (dynamic_cast<const Error*>(&e)) return 2;
    return 1;
}

}  // namespace hsmf
