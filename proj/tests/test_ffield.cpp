#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "akblocks/ffield.hpp"

using namespace akblocks;

TEST_CASE("prime field arithmetic") {
    Fp f7(7);
    CHECK(f7.add(3, 5) == 1);
    CHECK(f7.mul(2, 4) == 1);
    Fp f5(5);
    CHECK(f5.neg(0) == 0);
    CHECK(f5.sub(1, 3) == 3);
}

TEST_CASE("non-prime and oversized moduli are rejected") {
    CHECK_THROWS_AS(Fp(6), precondition_error);
    CHECK_THROWS_AS(Fp(1), precondition_error);
    CHECK_THROWS_AS(Fp(1u << 31), precondition_error);
    CHECK_NOTHROW(Fp(2147483647));  // 2^31 - 1 is prime
}

TEST_CASE("inverses") {
    CHECK(Fp(7).inv(2) == 4);
    CHECK(Fp(5).inv(1) == 1);
    CHECK(Fp(11).inv(3) == 4);
    CHECK_THROWS_AS(Fp(7).inv(0), division_by_zero_error);
}

TEST_CASE("random inverses multiply back to one") {
    std::mt19937 rng(42);
    for (uint32_t p : {5u, 7u, 97u, 2147483647u}) {
        Fp f(p);
        for (int i = 0; i < 1000; ++i) {
            uint32_t x = 1 + rng() % (p - 1);
            CHECK(f.mul(x, f.inv(x)) == 1);
        }
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(43);
    Fp f(101);
    for (int i = 0; i < 1000; ++i) {
        uint32_t a = rng() % 101, b = rng() % 101, c = rng() % 101;
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
    }
}

TEST_CASE("checked element surface") {
    Fp f7(7);
    FpElement x(3, f7), y(5, f7);
    CHECK((x + y).value == 1);
    CHECK((x * y).value == 1);
    CHECK((-FpElement(0, Fp(5))).value == 0);
    CHECK(inverse(FpElement(2, f7)).value == 4);
    FpElement z(1, Fp(5));
    CHECK_THROWS_AS((void)(x + z), context_mismatch_error);
    CHECK_THROWS_AS(inverse(FpElement(0, f7)), division_by_zero_error);
}

TEST_CASE("quantum characteristic") {
    CHECK(quantum_characteristic(Fp(5), 2) == 4);
    CHECK(quantum_characteristic(Fp(7), 6) == 2);  // 6 = -1 mod 7
    CHECK(quantum_characteristic(Fp(7), 2) == 3);
    CHECK(quantum_characteristic(Fp(5), 1) == 5);  // q = 1 degenerates to p
    CHECK_THROWS_AS(quantum_characteristic(Fp(5), 0), precondition_error);
}

TEST_CASE("quantum characteristic divides p - 1 for q != 1") {
    std::mt19937 rng(44);
    for (uint32_t p : {5u, 7u, 13u, 101u}) {
        Fp f(p);
        for (int i = 0; i < 200; ++i) {
            uint32_t q = 2 + rng() % (p - 2);
            uint32_t e = quantum_characteristic(f, q);
            CHECK((p - 1) % e == 0);
            CHECK(f.pow(q, e) == 1);
        }
    }
}

TEST_CASE("field context") {
    FieldContext fc(7, 2);
    CHECK(fc.e == 3);
    CHECK_THROWS_AS(FieldContext(7, 0), precondition_error);
    CHECK_THROWS_AS(FieldContext(7, 1), precondition_error);
    CHECK_THROWS_AS(FieldContext(7, 8), precondition_error);  // reduces to 1
}

TEST_CASE("smallest element of a given order") {
    CHECK(smallest_element_of_order(Fp(7), 3) == 2);
    CHECK(smallest_element_of_order(Fp(5), 2) == 4);
    CHECK(smallest_element_of_order(Fp(13), 3) == 3);
    CHECK_THROWS_AS(smallest_element_of_order(Fp(7), 4), precondition_error);
}
