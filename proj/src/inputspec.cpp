#include "hsmf/inputspec.hpp"

#include <fstream>
#include <sstream>

#include "hsmf/errors.hpp"

namespace hsmf {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

int parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw Error("trailing characters");
        return v;
    } catch (const std::exception&) {
        throw Error("invalid " + what + ": '" + s + "'");
    }
}

}  // namespace

InputSpec parse_input_text(const std::string& text) {
    InputSpec spec;
    bool saw_vars = false, saw_weights = false, saw_degree = false, saw_omega = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw Error("line " + std::to_string(lineno) + ": expected 'key = value'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "vars") {
            spec.vars.names = split_list(value);
            saw_vars = true;
        } else if (key == "weights") {
            spec.vars.weights.clear();
            for (const std::string& w : split_list(value))
                spec.vars.weights.push_back(parse_int(w, "weight"));
            saw_weights = true;
        } else if (key == "degree") {
            spec.vars.degree = parse_int(value, "degree");
            saw_degree = true;
        } else if (key == "omega") {
            spec.omega_text = value;
            saw_omega = true;
        } else if (key == "options") {
            for (const std::string& opt : split_list(value)) {
                if (opt == "json") {
                    spec.options.json = true;
                } else if (opt == "no-oracle") {
                    spec.options.no_oracle = true;
                } else if (opt == "assume-restriction-action") {
                    spec.options.assume_restriction_action = true;
                } else if (opt.rfind("modulus=", 0) == 0) {
                    spec.options.modulus =
                        static_cast<std::uint64_t>(std::stoull(opt.substr(8)));
                } else {
                    throw Error("unknown option '" + opt + "'");
                }
            }
        } else {
            throw Error("unknown key '" + key + "' on line " + std::to_string(lineno));
        }
    }
    if (!saw_vars) throw Error("missing key: vars");
    if (!saw_weights) throw Error("missing key: weights");
    if (!saw_degree) throw Error("missing key: degree");
    if (!saw_omega) throw Error("missing key: omega");
    spec.vars.validate();
    return spec;
}

InputSpec load_input_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open input file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_input_text(buf.str());
}

Polynomial parse_omega(const InputSpec& spec) {
    Polynomial omega = parse_poly(spec.omega_text, spec.vars);
    if (omega.is_zero()) throw Error("omega is the zero polynomial");
    int e = weighted_degree(omega, spec.vars);  // throws NotQuasiHomogeneous
    if (e != spec.vars.degree)
        throw Error("omega has weighted degree " + std::to_string(e) +
                    " but the declared degree is " + std::to_string(spec.vars.degree));
    return omega;
}

}  // namespace hsmf
