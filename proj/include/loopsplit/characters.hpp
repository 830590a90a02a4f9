#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace loopsplit {

/**** Characters of compact-group representations, as torus weight data ****/

enum class GroupFamily { unitary, symplectic, spin_odd, spin_even };

struct GroupFactor {
    GroupFamily family;
    int rank;  // torus coordinates of this factor

    bool operator==(const GroupFactor&) const = default;

    std::string to_string() const {
        switch (family) {
            case GroupFamily::unitary: return "U(" + std::to_string(rank) + ")";
            case GroupFamily::symplectic: return "Sp(" + std::to_string(rank) + ")";
            case GroupFamily::spin_odd: return "Spin(" + std::to_string(2 * rank + 1) + ")";
            default: return "Spin(" + std::to_string(2 * rank) + ")";
        }
    }
};

using GroupTag = std::vector<GroupFactor>;

inline int tag_rank(const GroupTag& tag) {
    int r = 0;
    for (const auto& f : tag) r += f.rank;
    return r;
}

inline std::string tag_to_string(const GroupTag& tag) {
    std::string out;
    for (const auto& f : tag) {
        if (!out.empty()) out += " x ";
        out += f.to_string();
    }
    return out.empty() ? "1" : out;
}

// Weights are stored with every exponent doubled, so that spinor weights
// (half-integral in the usual coordinates) remain integers.
using ExponentVector = std::vector<int>;
using TermMap = std::map<ExponentVector, long long>;

namespace detail {

struct WeylGen {
    enum Kind { swap2, flip1, flip2 } kind;
    int a, b;
};

// Generators block by block: adjacent transpositions everywhere; one sign
// flip for Sp(k) and Spin(2k+1); sign flips only in pairs for Spin(2k).
inline std::vector<WeylGen> weyl_generators(const GroupTag& tag) {
    std::vector<WeylGen> gens;
    int off = 0;
    for (const auto& f : tag) {
        for (int i = 0; i + 1 < f.rank; ++i)
            gens.push_back({WeylGen::swap2, off + i, off + i + 1});
        if (f.family == GroupFamily::symplectic || f.family == GroupFamily::spin_odd)
            gens.push_back({WeylGen::flip1, off + f.rank - 1, 0});
        else if (f.family == GroupFamily::spin_even && f.rank >= 2)
            gens.push_back({WeylGen::flip2, off + f.rank - 2, off + f.rank - 1});
        off += f.rank;
    }
    return gens;
}

inline ExponentVector apply_gen(const WeylGen& g, ExponentVector e) {
    auto at = [&e](int i) -> int& { return e[static_cast<size_t>(i)]; };
    switch (g.kind) {
        case WeylGen::swap2: std::swap(at(g.a), at(g.b)); break;
        case WeylGen::flip1: at(g.a) = -at(g.a); break;
        case WeylGen::flip2:
            at(g.a) = -at(g.a);
            at(g.b) = -at(g.b);
            break;
    }
    return e;
}

}  // namespace detail

inline bool weyl_invariant(const GroupTag& tag, const TermMap& terms) {
    for (const auto& g : detail::weyl_generators(tag))
        for (const auto& [e, c] : terms) {
            auto it = terms.find(detail::apply_gen(g, e));
            if (it == terms.end() || it->second != c) return false;
        }
    return true;
}

class Character {
public:
    Character(GroupTag tag, const TermMap& terms) : tag_(std::move(tag)) {
        const size_t width = static_cast<size_t>(tag_rank(tag_));
        for (const auto& [e, c] : terms) {
            if (e.size() != width)
                throw std::invalid_argument("weight length does not match the torus rank");
            if (c < 0) throw std::invalid_argument("negative multiplicity");
            if (c > 0) terms_.emplace(e, c);
        }
        if (!weyl_invariant(tag_, terms_))
            throw std::runtime_error("weights are not invariant under the Weyl action of " +
                                     tag_to_string(tag_));
    }

    const GroupTag& tag() const { return tag_; }
    const TermMap& terms() const { return terms_; }

    long long dim() const {
        long long d = 0;
        for (const auto& [e, c] : terms_) d += c;
        return d;
    }

    friend Character operator+(const Character& a, const Character& b) {
        require_same_tag(a, b);
        TermMap sum = a.terms_;
        for (const auto& [e, c] : b.terms_) sum[e] += c;
        return Character(a.tag_, sum);
    }

    friend Character tensor(const Character& a, const Character& b) {
        require_same_tag(a, b);
        TermMap prod;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExponentVector e = ea;
                for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                prod[e] += ca * cb;
            }
        return Character(a.tag_, prod);
    }

    bool operator==(const Character& o) const {
        return tag_ == o.tag_ && terms_ == o.terms_;
    }

    // Exponents reduced into [0, k): the exact footprint of the character on
    // the k-torsion points of the (doubled) torus.
    TermMap fold(int k) const {
        if (k < 1) throw std::invalid_argument("fold modulus must be >= 1");
        TermMap out;
        for (const auto& [e, c] : terms_) {
            ExponentVector f = e;
            for (int& x : f) x = ((x % k) + k) % k;
            out[f] += c;
        }
        return out;
    }

private:
    GroupTag tag_;
    TermMap terms_;

    static void require_same_tag(const Character& a, const Character& b) {
        if (!(a.tag_ == b.tag_)) throw std::invalid_argument("group mismatch");
    }
};

inline Character external_product(const Character& a, const Character& b) {
    GroupTag tag = a.tag();
    tag.insert(tag.end(), b.tag().begin(), b.tag().end());
    TermMap prod;
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            ExponentVector e = ea;
            e.insert(e.end(), eb.begin(), eb.end());
            prod[e] += ca * cb;
        }
    return Character(std::move(tag), prod);
}

inline Character trivial_character(const GroupTag& tag) {
    return Character(tag, {{ExponentVector(static_cast<size_t>(tag_rank(tag)), 0), 1}});
}

// Stock characters of a single factor, by name. Doubled exponents throughout:
// a weight e_i of the standard torus appears as +-2, a spinor weight as +-1.
inline Character named_character(const GroupFactor& f, const std::string& name) {
    const GroupTag tag{f};
    const size_t k = static_cast<size_t>(f.rank);
    auto axis = [&](size_t i, int v) {
        ExponentVector e(k, 0);
        e[i] = v;
        return e;
    };
    TermMap terms;
    if (name == "trivial") {
        return trivial_character(tag);
    }
    if (name == "standard" &&
        (f.family == GroupFamily::unitary || f.family == GroupFamily::symplectic)) {
        // the underlying real module of the defining representation
        for (size_t i = 0; i < k; ++i) {
            terms[axis(i, 2)] += 1;
            terms[axis(i, -2)] += 1;
        }
        return Character(tag, terms);
    }
    if (name == "adjoint_sp1" && f.family == GroupFamily::symplectic && f.rank == 1) {
        terms[axis(0, 4)] = 1;
        terms[axis(0, -4)] = 1;
        terms[ExponentVector(k, 0)] = 1;
        return Character(tag, terms);
    }
    if (name == "vector_spin" &&
        (f.family == GroupFamily::spin_odd || f.family == GroupFamily::spin_even)) {
        for (size_t i = 0; i < k; ++i) {
            terms[axis(i, 2)] += 1;
            terms[axis(i, -2)] += 1;
        }
        if (f.family == GroupFamily::spin_odd) terms[ExponentVector(k, 0)] = 1;
        return Character(tag, terms);
    }
    if (name == "spinor_spin9" && f.family == GroupFamily::spin_odd && f.rank == 4) {
        for (unsigned s = 0; s < (1u << k); ++s) {
            ExponentVector e(k, 1);
            for (size_t i = 0; i < k; ++i)
                if ((s >> i) & 1u) e[i] = -1;
            terms[e] = 1;
        }
        return Character(tag, terms);
    }
    if ((name == "half_spinor_plus" || name == "half_spinor_minus") &&
        f.family == GroupFamily::spin_even) {
        const bool odd_signs = name == "half_spinor_minus";
        for (unsigned s = 0; s < (1u << k); ++s) {
            ExponentVector e(k, 1);
            int flips = 0;
            for (size_t i = 0; i < k; ++i)
                if ((s >> i) & 1u) {
                    e[i] = -1;
                    ++flips;
                }
            if ((flips % 2 == 1) == odd_signs) terms[e] = 1;
        }
        return Character(tag, terms);
    }
    throw std::invalid_argument("no character named '" + name + "' for " + f.to_string());
}

}  // namespace loopsplit
