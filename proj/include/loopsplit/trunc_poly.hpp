#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace loopsplit {

/**** Truncated polynomial rings over F2 ****/

// F2[x]/(x^h) with deg x = r. Elements are dense bit vectors, so h <= 64.
class TruncPolyRing {
public:
    TruncPolyRing(int generator_degree, int height, std::string symbol = "x")
        : r_(generator_degree), h_(height), symbol_(std::move(symbol)) {
        if (r_ <= 0) throw std::invalid_argument("generator degree must be positive");
        if (h_ < 1 || h_ > 64) throw std::invalid_argument("height must be in [1, 64]");
    }

    int generator_degree() const { return r_; }
    int height() const { return h_; }
    const std::string& symbol() const { return symbol_; }
    std::uint64_t mask() const { return h_ == 64 ? ~0ull : ((1ull << h_) - 1); }

    bool operator==(const TruncPolyRing& o) const { return r_ == o.r_ && h_ == o.h_; }

private:
    int r_, h_;
    std::string symbol_;
};

inline std::string monomial_label(const TruncPolyRing& ring, int j) {
    if (j == 0) return "1";
    if (j == 1) return ring.symbol();
    return ring.symbol() + "^" + std::to_string(j);
}

class RingElement {
public:
    RingElement(const TruncPolyRing& ring, std::uint64_t bits)
        : ring_(&ring), bits_(bits & ring.mask()) {}

    static RingElement zero(const TruncPolyRing& ring) { return {ring, 0}; }
    static RingElement one(const TruncPolyRing& ring) { return {ring, 1}; }
    static RingElement monomial(const TruncPolyRing& ring, int j) {
        if (j < 0) throw std::invalid_argument("negative exponent");
        return {ring, j < ring.height() ? (1ull << j) : 0};
    }

    const TruncPolyRing& ring() const { return *ring_; }
    std::uint64_t bits() const { return bits_; }
    bool is_zero() const { return bits_ == 0; }
    bool coeff(int j) const {
        return j >= 0 && j < ring_->height() && ((bits_ >> j) & 1u);
    }

    // homogeneous part in cohomology degree i (zero unless r | i)
    RingElement homogeneous_part(int i) const {
        if (i < 0 || i % ring_->generator_degree() != 0) return zero(*ring_);
        const int j = i / ring_->generator_degree();
        return coeff(j) ? monomial(*ring_, j) : zero(*ring_);
    }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        require_same(a, b);
        return {*a.ring_, a.bits_ ^ b.bits_};
    }

    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        require_same(a, b);
        std::uint64_t acc = 0;
        for (int i = 0; i < a.ring_->height(); ++i)
            if ((a.bits_ >> i) & 1u) acc ^= (b.bits_ << i);
        return {*a.ring_, acc};
    }

    RingElement pow(long long e) const {
        if (e < 0) throw std::invalid_argument("negative power");
        RingElement out = one(*ring_);
        RingElement base = *this;
        while (e) {
            if (e & 1) out = out * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return out;
    }

    bool operator==(const RingElement& o) const {
        return *ring_ == *o.ring_ && bits_ == o.bits_;
    }

    std::string to_string() const {
        std::string out;
        for (int j = 0; j < ring_->height(); ++j) {
            if (!coeff(j)) continue;
            if (!out.empty()) out += " + ";
            out += monomial_label(*ring_, j);
        }
        return out.empty() ? "0" : out;
    }

private:
    const TruncPolyRing* ring_;
    std::uint64_t bits_;

    static void require_same(const RingElement& a, const RingElement& b) {
        if (!(*a.ring_ == *b.ring_)) throw std::invalid_argument("ring mismatch");
    }
};

// (1 + x)^k reduced mod 2 and mod x^h; coefficient of x^j is C(k, j) mod 2.
inline RingElement binom_expand(long long k, const TruncPolyRing& ring) {
    if (k < 0) throw std::invalid_argument("negative exponent");
    return (RingElement::one(ring) + RingElement::monomial(ring, 1)).pow(k);
}

// C(a, b) mod 2: odd exactly when the binary digits of b sit inside those of a.
inline bool odd_binom(long long a, long long b) {
    if (b < 0 || b > a) return false;
    return (b & (a - b)) == 0;
}

}  // namespace loopsplit
