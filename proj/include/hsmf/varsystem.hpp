#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "hsmf/errors.hpp"

namespace hsmf {

/// Weighted variable context: ordered names, positive integer weights and the
/// quasi-homogeneity degree d shared by every polynomial in play.
struct VarSystem {
    std::vector<std::string> names;
    std::vector<int> weights;
    int degree = 0;  // d

    int count() const { return static_cast<int>(names.size()); }

    int max_weight() const {
        int m = 0;
        for (int w : weights) m = std::max(m, w);
        return m;
    }

    int weight_sum() const {
        int s = 0;
        for (int w : weights) s += w;
        return s;
    }

    /// User-facing validity: matching list lengths, weights >= 1, gcd of
    /// weights 1, d >= 2, distinct names. Subsystems obtained by restricting
    /// to a fixed locus keep the original weights and may fail the gcd rule;
    /// they are not run through this check.
    void validate() const {
        if (names.size() != weights.size())
            throw Error("variable/weight count mismatch: " + std::to_string(names.size()) +
                        " names vs " + std::to_string(weights.size()) + " weights");
        if (names.empty()) throw Error("empty variable list");
        if (degree < 2) throw Error("degree must be >= 2, got " + std::to_string(degree));
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (weights[i] < 1)
                throw Error("weight of " + names[i] + " must be positive");
            for (std::size_t k = i + 1; k < names.size(); ++k)
                if (names[i] == names[k]) throw Error("duplicate variable name " + names[i]);
        }
        int g = 0;
        for (int w : weights) g = std::gcd(g, w);
        if (g != 1) throw Error("weights must have gcd 1, got gcd " + std::to_string(g));
    }

    /// Subsystem on a subset of variables (ascending indices), keeping the
    /// original weights and degree.
    VarSystem subsystem(const std::vector<int>& keep) const {
        VarSystem sub;
        sub.degree = degree;
        for (int i : keep) {
            sub.names.push_back(names.at(static_cast<std::size_t>(i)));
            sub.weights.push_back(weights.at(static_cast<std::size_t>(i)));
        }
        return sub;
    }

    friend bool operator==(const VarSystem&, const VarSystem&) = default;
};

}  // namespace hsmf
