#include <doctest.h>

#include <cmath>
#include <numeric>

#include "cambrian/ring.hpp"

using namespace cambrian;

namespace {

// brute-force oracle: expand prod (x - 2cos(pi k/m)) over k coprime to 2m
// in floating point and round the coefficients
std::vector<long> minpoly_by_expansion(int m) {
    std::vector<double> poly{1.0};
    for (int k = 1; k < m; ++k) {
        if (std::gcd(k, 2 * m) != 1) continue;
        double root = 2.0 * std::cos(M_PI * k / m);
        std::vector<double> next(poly.size() + 1, 0.0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= root * poly[i];
        }
        poly = std::move(next);
    }
    std::vector<long> out;
    for (double c : poly) out.push_back(std::lround(c));
    return out;
}

}  // namespace

TEST_CASE("minimal polynomial of 2cos(pi/m) matches brute-force expansion") {
    for (int m : {3, 4, 5, 7, 9, 12, 30}) {
        std::vector<BigInt> psi = two_cos_minimal_polynomial(m);
        std::vector<long> oracle = minpoly_by_expansion(m);
        REQUIRE(psi.size() == oracle.size());
        for (size_t i = 0; i < psi.size(); ++i) CHECK(psi[i] == BigInt(oracle[i]));
    }
}

TEST_CASE("known small minimal polynomials") {
    CHECK(two_cos_minimal_polynomial(3) == std::vector<BigInt>{-1, 1});
    CHECK(two_cos_minimal_polynomial(4) == std::vector<BigInt>{-2, 0, 1});
    CHECK(two_cos_minimal_polynomial(5) == std::vector<BigInt>{-1, -1, 1});
    CHECK(two_cos_minimal_polynomial(7) == std::vector<BigInt>{1, -2, -1, 1});
}

TEST_CASE("ring arithmetic is exact") {
    Ring R(5);  // golden ratio ring
    RingElement l = R.lambda();
    // lambda^2 = lambda + 1
    CHECK(R.mul(l, l) == R.add(l, R.one()));
    CHECK(R.is_zero(R.sub(R.mul(l, l), R.add(l, R.one()))));

    Ring R4(4);  // sqrt(2)
    CHECK(R4.is_zero(R4.sub(R4.mul(R4.lambda(), R4.lambda()), R4.integer(2))));
}

TEST_CASE("sign test separates lambda from rationals") {
    for (int m : {4, 5, 7, 12, 31, 64}) {
        Ring R(m);
        CHECK(R.sign(R.sub(R.lambda(), R.one())) == 1);       // lambda > 1
        CHECK(R.sign(R.sub(R.lambda(), R.integer(2))) == -1);  // lambda < 2
        CHECK(R.sign(R.zero()) == 0);
        CHECK(R.sign(R.neg(R.lambda())) == -1);
    }
}

TEST_CASE("ring multiplication is commutative and associative") {
    Ring R(12);
    RingElement a = R.add(R.mul(R.lambda(), R.lambda()), R.integer(-3));
    RingElement b = R.sub(R.lambda(), R.integer(2));
    RingElement c = R.add(R.lambda(), R.integer(5));
    CHECK(R.mul(a, b) == R.mul(b, a));
    CHECK(R.mul(R.mul(a, b), c) == R.mul(a, R.mul(b, c)));
}
