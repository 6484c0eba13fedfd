#include "akblocks/ffield.hpp"

#include <string>

namespace akblocks {

namespace {

bool is_prime(uint32_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

void check_same_context(const FpElement& x, const FpElement& y) {
    if (x.p != y.p) {
        throw context_mismatch_error("field elements with moduli " + std::to_string(x.p) +
                                     " and " + std::to_string(y.p));
    }
}

}  // namespace

Fp::Fp(uint32_t p) : p_(p) {
    if (p >= (1u << 31)) {
        throw precondition_error("modulus " + std::to_string(p) + " exceeds 2^31");
    }
    if (!is_prime(p)) {
        throw precondition_error("modulus " + std::to_string(p) + " is not prime");
    }
}

uint32_t Fp::inv(uint32_t a) const {
    if (a == 0) throw division_by_zero_error("inverse of 0 in F_" + std::to_string(p_));
    int64_t r0 = p_, r1 = a % p_;
    int64_t x0 = 0, x1 = 1;
    while (r1 != 0) {
        int64_t quot = r0 / r1;
        r0 -= quot * r1;
        std::swap(r0, r1);
        x0 -= quot * x1;
        std::swap(x0, x1);
    }
    // r0 = gcd = 1 since p is prime and a != 0
    if (x0 < 0) x0 += p_;
    return static_cast<uint32_t>(x0);
}

uint32_t Fp::pow(uint32_t a, uint64_t k) const noexcept {
    uint64_t base = a % p_, acc = 1;
    while (k > 0) {
        if (k & 1) acc = acc * base % p_;
        base = base * base % p_;
        k >>= 1;
    }
    return static_cast<uint32_t>(acc);
}

FpElement operator+(const FpElement& x, const FpElement& y) {
    check_same_context(x, y);
    Fp f(x.p);
    return {f.add(x.value, y.value), f};
}

FpElement operator-(const FpElement& x, const FpElement& y) {
    check_same_context(x, y);
    Fp f(x.p);
    return {f.sub(x.value, y.value), f};
}

FpElement operator*(const FpElement& x, const FpElement& y) {
    check_same_context(x, y);
    Fp f(x.p);
    return {f.mul(x.value, y.value), f};
}

FpElement operator-(const FpElement& x) {
    Fp f(x.p);
    return {f.neg(x.value), f};
}

FpElement inverse(const FpElement& x) {
    Fp f(x.p);
    return {f.inv(x.value), f};
}

uint32_t quantum_characteristic(const Fp& field, uint32_t q) {
    if (q % field.modulus() == 0) {
        throw precondition_error("quantum characteristic of q = 0 is undefined");
    }
    q %= field.modulus();
    // 1 + q + ... + q^(e-1), stopping at the first zero partial sum.
    // The sum vanishes at e = ord(q) for q != 1 and at e = p for q = 1,
    // so the loop bound p is never exceeded.
    uint32_t sum = 0, power = 1;
    for (uint32_t e = 1; e <= field.modulus(); ++e) {
        sum = field.add(sum, power);
        if (sum == 0) return e;
        power = field.mul(power, q);
    }
    throw internal_error("geometric sum never vanished mod " + std::to_string(field.modulus()));
}

FieldContext::FieldContext(uint32_t p, uint32_t q_value) : field(p), q(q_value % p), e(0) {
    if (q == 0) throw precondition_error("q = 0 is not allowed");
    if (q == 1) throw precondition_error("q = 1 is not allowed (quantum characteristic would be p)");
    e = quantum_characteristic(field, q);
    if (field.pow(q, e) != 1) {
        throw internal_error("q^e != 1 for q of quantum characteristic e");
    }
}

uint32_t smallest_element_of_order(const Fp& field, uint32_t e) {
    if (e < 1 || (field.modulus() - 1) % e != 0) {
        throw precondition_error("no element of order " + std::to_string(e) + " in F_" +
                                 std::to_string(field.modulus()) +
                                 " (e must divide p-1)");
    }
    for (uint32_t q = 1; q < field.modulus(); ++q) {
        if (field.pow(q, e) != 1) continue;
        bool minimal = true;
        for (uint32_t d = 1; d < e; ++d) {
            if (e % d == 0 && field.pow(q, d) == 1) {
                minimal = false;
                break;
            }
        }
        if (minimal) return q;
    }
    throw internal_error("order search exhausted F_" + std::to_string(field.modulus()));
}

}  // namespace akblocks
