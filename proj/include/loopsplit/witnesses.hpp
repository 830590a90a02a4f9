#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "catalog.hpp"
#include "characters.hpp"

namespace loopsplit {

/**** Extendability witnesses for the isotropy representations ****/

// Restriction along a homomorphism is recorded by what it does to torus
// coordinates: source coordinate i maps to the target monomial with exponent
// row substitution[i] (true exponents, not doubled).
struct RestrictionMap {
    GroupTag source, target;
    std::vector<std::vector<int>> substitution;
};

inline Character restrict_character(const Character& c, const RestrictionMap& m) {
    if (!(c.tag() == m.source))
        throw std::invalid_argument("character is not defined on the source group");
    const size_t src = static_cast<size_t>(tag_rank(m.source));
    const size_t tgt = static_cast<size_t>(tag_rank(m.target));
    if (m.substitution.size() != src)
        throw std::invalid_argument("substitution must have one row per source coordinate");
    for (const auto& row : m.substitution)
        if (row.size() != tgt)
            throw std::invalid_argument("substitution row of the wrong width");
    TermMap out;
    for (const auto& [e, mult] : c.terms()) {
        ExponentVector f(tgt, 0);
        for (size_t i = 0; i < src; ++i)
            for (size_t j = 0; j < tgt; ++j) f[j] += e[i] * m.substitution[i][j];
        out[f] += mult;
    }
    return Character(m.target, out);
}

// The claim a witness certifies: the named representation of the small group
// becomes, after adding `slack` trivial summands, the restriction of a single
// representation of the big group.
struct WitnessCheck {
    std::string name;
    Character target;   // over map.target
    Character witness;  // over map.source
    RestrictionMap map;
    long long slack;
};

struct WitnessVerdict {
    std::string name;
    bool pass;
    std::string detail;
};

inline WitnessVerdict run_witness_check(const WitnessCheck& c) {
    TermMap expected = c.target.terms();
    if (c.slack > 0)
        expected[ExponentVector(static_cast<size_t>(tag_rank(c.map.target)), 0)] += c.slack;
    const Character want(c.map.target, expected);
    const Character got = restrict_character(c.witness, c.map);
    if (got == want) {
        std::string detail = "restriction of the " + std::to_string(c.witness.dim()) +
                             "-dim representation of " + tag_to_string(c.map.source) +
                             " matches";
        if (c.slack > 0) detail += " with " + std::to_string(c.slack) + " trivial summand(s)";
        return {c.name, true, detail};
    }
    std::string diff;
    int shown = 0;
    for (const auto& [e, k] : want.terms()) {
        auto it = got.terms().find(e);
        long long g = it == got.terms().end() ? 0 : it->second;
        if (g != k && shown++ < 3)
            diff += " [want " + std::to_string(k) + ", got " + std::to_string(g) + "]";
    }
    for (const auto& [e, g] : got.terms())
        if (!want.terms().count(e) && shown++ < 3)
            diff += " [unexpected weight, mult " + std::to_string(g) + "]";
    return {c.name, false, "restriction disagrees:" + diff};
}

// The checks backing each family's bundle identifications. Every negative
// bundle is built from the two isotropy quotients W1 = T(K1/H) and
// W2 = T(K2/H); these verify that the representations the construction needs
// really do extend from H to K2.
inline std::vector<WitnessCheck> witness_checks_for(const SymmetricSpaceEntry& e) {
    std::vector<WitnessCheck> out;
    const int n = e.n;
    switch (e.family) {
        case SpaceFamily::cpn: {
            const GroupFactor big{GroupFamily::unitary, n};
            const GroupFactor small{GroupFamily::unitary, n - 1};
            std::vector<std::vector<int>> rows;
            for (int i = 0; i < n; ++i) {
                std::vector<int> row(static_cast<size_t>(n - 1), 0);
                if (i < n - 1) row[static_cast<size_t>(i)] = 1;
                rows.push_back(std::move(row));
            }
            RestrictionMap map{{big}, {small}, std::move(rows)};
            out.push_back({"w1_extends", trivial_character({small}),
                           trivial_character({big}), map, 0});
            out.push_back({"w1_plus_w2_extends",
                           named_character(small, "standard") +
                               trivial_character({small}) + trivial_character({small}),
                           named_character(big, "standard"), map, 0});
            break;
        }
        case SpaceFamily::hpn: {
            const GroupFactor sp_n{GroupFamily::symplectic, n};
            const GroupFactor sp_n1{GroupFamily::symplectic, n - 1};
            const GroupFactor sp_1{GroupFamily::symplectic, 1};
            const GroupTag big{sp_n, sp_1};
            const GroupTag small{sp_n1, sp_1};
            // z_i -> z_i for i < n; the last Sp(n) coordinate and the Sp(1)
            // coordinate both land on the small Sp(1) coordinate
            std::vector<std::vector<int>> rows;
            for (int i = 0; i < n + 1; ++i) {
                std::vector<int> row(static_cast<size_t>(n), 0);
                row[static_cast<size_t>(std::min(i, n - 1))] = 1;
                rows.push_back(std::move(row));
            }
            RestrictionMap map{big, small, std::move(rows)};
            const Character adj_small = external_product(
                trivial_character({sp_n1}), named_character(sp_1, "adjoint_sp1"));
            const Character adj_big = external_product(
                trivial_character({sp_n}), named_character(sp_1, "adjoint_sp1"));
            out.push_back({"w1_extends", adj_small, adj_big, map, 0});
            out.push_back({"w2_plus_trivial_extends",
                           external_product(named_character(sp_n1, "standard"),
                                            named_character(sp_1, "standard")) +
                               adj_small + trivial_character(small),
                           external_product(named_character(sp_n, "standard"),
                                            named_character(sp_1, "standard")),
                           map, 0});
            break;
        }
        case SpaceFamily::op2: {
            const GroupFactor big{GroupFamily::spin_odd, 4};
            const GroupFactor small{GroupFamily::spin_even, 4};
            std::vector<std::vector<int>> rows;
            for (int i = 0; i < 4; ++i) {
                std::vector<int> row(4, 0);
                row[static_cast<size_t>(i)] = 1;
                rows.push_back(std::move(row));
            }
            RestrictionMap map{{big}, {small}, std::move(rows)};
            out.push_back({"vector_rep_restricts", named_character(small, "vector_spin"),
                           named_character(big, "vector_spin"), map, 1});
            out.push_back({"spinor_splits_into_half_spinors",
                           named_character(small, "half_spinor_plus") +
                               named_character(small, "half_spinor_minus"),
                           named_character(big, "spinor_spin9"), map, 0});
            break;
        }
    }
    return out;
}

inline std::vector<WitnessVerdict> run_witnesses(const SymmetricSpaceEntry& e) {
    std::vector<WitnessVerdict> out;
    for (const auto& c : witness_checks_for(e)) out.push_back(run_witness_check(c));
    return out;
}

}  // namespace loopsplit
