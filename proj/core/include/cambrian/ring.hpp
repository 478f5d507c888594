#pragma once

#include <gmpxx.h>

#include <vector>

namespace cambrian {

using BigInt = mpz_class;
using Rational = mpq_class;

/*
  Element of Z[lambda] reduced modulo the minimal polynomial of
  lambda = 2*cos(pi/mstar).  Coefficients are stored lowest degree first
  and the vector always has length Ring::degree().  For mstar = 3 the
  minimal polynomial is y - 1, the ring collapses to Z and every element
  is a single integer.
*/
struct RingElement {
    std::vector<BigInt> coeffs;

    bool operator==(const RingElement& o) const { return coeffs == o.coeffs; }
    bool operator<(const RingElement& o) const { return coeffs < o.coeffs; }
};

class Ring {
  public:
    explicit Ring(int mstar);

    int mstar() const { return mstar_; }
    int degree() const { return degree_; }

    // monic minimal polynomial of lambda, length degree()+1
    const std::vector<BigInt>& modulus() const { return psi_; }

    RingElement zero() const;
    RingElement one() const;
    RingElement integer(long v) const;
    RingElement lambda() const;

    // 2*cos(pi/label) for an edge label of this system; label is 2, 3 or mstar
    RingElement two_cos(int label) const;

    RingElement add(const RingElement& a, const RingElement& b) const;
    RingElement sub(const RingElement& a, const RingElement& b) const;
    RingElement neg(const RingElement& a) const;
    RingElement mul(const RingElement& a, const RingElement& b) const;

    bool is_zero(const RingElement& a) const;

    // exact sign of the real number a(lambda); refines the cached enclosure
    // of lambda until the interval evaluation is conclusive
    int sign(const RingElement& a) const;

  private:
    void init_enclosure();
    void refine_enclosure() const;

    int mstar_;
    int degree_;
    std::vector<BigInt> psi_;
    mutable Rational lo_, hi_;  // isolating interval for lambda, lo_ >= 0
};

// minimal polynomial of 2*cos(pi/m) over Z, monic, lowest degree first
std::vector<BigInt> two_cos_minimal_polynomial(int m);

}  // namespace cambrian
