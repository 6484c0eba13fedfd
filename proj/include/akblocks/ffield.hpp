#pragma once

#include <cstdint>

#include "akblocks/errors.hpp"

namespace akblocks {

// Arithmetic context for the prime field F_p.  Residues are plain
// uint32_t values in [0, p); p is restricted to < 2^31 so that a
// product of two residues fits in a uint64_t.
class Fp {
public:
    explicit Fp(uint32_t p);

    uint32_t modulus() const noexcept { return p_; }

    uint32_t add(uint32_t a, uint32_t b) const noexcept {
        uint32_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint32_t sub(uint32_t a, uint32_t b) const noexcept {
        return a >= b ? a - b : a + p_ - b;
    }
    uint32_t neg(uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
    uint32_t mul(uint32_t a, uint32_t b) const noexcept {
        return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
    }

    // Multiplicative inverse by the extended Euclidean algorithm.
    uint32_t inv(uint32_t a) const;

    uint32_t pow(uint32_t a, uint64_t k) const noexcept;

    bool operator==(const Fp& o) const noexcept { return p_ == o.p_; }
    bool operator!=(const Fp& o) const noexcept { return p_ != o.p_; }

private:
    uint32_t p_;
};

// A residue tagged with its modulus.  This is the checked public
// surface; the linear-algebra kernels work on raw residues instead.
struct FpElement {
    uint32_t value = 0;
    uint32_t p = 0;

    FpElement() = default;
    FpElement(uint32_t v, const Fp& field) : value(v % field.modulus()), p(field.modulus()) {}

    bool operator==(const FpElement&) const = default;
};

FpElement operator+(const FpElement& x, const FpElement& y);
FpElement operator-(const FpElement& x, const FpElement& y);
FpElement operator*(const FpElement& x, const FpElement& y);
FpElement operator-(const FpElement& x);
FpElement inverse(const FpElement& x);

// Minimal e >= 1 with 1 + q + ... + q^(e-1) = 0 in F_p.  For q != 1
// this is the multiplicative order of q; for q = 1 it is p itself.
uint32_t quantum_characteristic(const Fp& field, uint32_t q);

// Field together with a choice of q of quantum characteristic e >= 2.
// q = 0 and q = 1 are rejected.
struct FieldContext {
    Fp field;
    uint32_t q;
    uint32_t e;

    FieldContext(uint32_t p, uint32_t q_value);
};

// Smallest element of F_p with multiplicative order exactly e, or a
// precondition error when none exists (i.e. e does not divide p-1).
uint32_t smallest_element_of_order(const Fp& field, uint32_t e);

}  // namespace akblocks
