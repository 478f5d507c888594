#include "cambrian/ring.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace cambrian {

namespace {

// quotient of monic polynomial division, asserts the division is exact
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    assert(!den.empty() && den.back() == 1);
    int dn = static_cast<int>(num.size()) - 1;
    int dd = static_cast<int>(den.size()) - 1;
    assert(dn >= dd);
    std::vector<BigInt> quot(dn - dd + 1, BigInt(0));
    for (int k = dn - dd; k >= 0; --k) {
        BigInt c = num[k + dd];
        quot[k] = c;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    for (const BigInt& c : num) assert(c == 0);
    return quot;
}

// n-th cyclotomic polynomial; computed from scratch (cheap at these sizes)
// so that concurrent Ring constructions stay thread safe
std::vector<BigInt> cyclotomic(int n) {
    std::vector<BigInt> poly(n + 1, BigInt(0));  // x^n - 1
    poly[0] = -1;
    poly[n] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) poly = divide_exact(poly, cyclotomic(d));
    return poly;
}

// evaluate an integer polynomial on [lo, hi] with 0 <= lo <= hi; returns the
// exact image interval
std::pair<Rational, Rational> interval_eval(const std::vector<BigInt>& p, const Rational& lo,
                                            const Rational& hi) {
    Rational out_lo(0), out_hi(0);
    Rational plo(1), phi(1);
    for (size_t k = 0; k < p.size(); ++k) {
        if (k > 0) {
            plo *= lo;
            phi *= hi;
        }
        if (p[k] >= 0) {
            out_lo += p[k] * plo;
            out_hi += p[k] * phi;
        } else {
            out_lo += p[k] * phi;
            out_hi += p[k] * plo;
        }
    }
    return {out_lo, out_hi};
}

Rational eval_at(const std::vector<BigInt>& p, const Rational& x) {
    Rational acc(0);
    for (size_t k = p.size(); k-- > 0;) acc = acc * x + Rational(p[k]);
    return acc;
}

}  // namespace

std::vector<BigInt> two_cos_minimal_polynomial(int m) {
    if (m < 3) throw std::invalid_argument("two_cos_minimal_polynomial: m >= 3 required");
    // 2cos(pi/m) = z + 1/z for z a primitive 2m-th root of unity.  The
    // cyclotomic polynomial Phi_{2m} is palindromic of even degree D; writing
    // Phi_{2m}(z)/z^{D/2} in the basis p_j(y) = z^j + z^{-j} with y = z + 1/z
    // yields the monic minimal polynomial of degree D/2.
    const std::vector<BigInt> phi = cyclotomic(2 * m);
    int D = static_cast<int>(phi.size()) - 1;
    assert(D % 2 == 0);
    int d = D / 2;
    for (int j = 0; j <= D; ++j) assert(phi[j] == phi[D - j]);

    std::vector<BigInt> result(d + 1, BigInt(0));
    std::vector<BigInt> pjm1{BigInt(2)};           // p_0 = 2
    std::vector<BigInt> pj{BigInt(0), BigInt(1)};  // p_1 = y
    result[0] += phi[d];
    for (int j = 1; j <= d; ++j) {
        for (size_t k = 0; k < pj.size(); ++k) result[k] += phi[d + j] * pj[k];
        if (j < d) {
            // p_{j+1} = y*p_j - p_{j-1}
            std::vector<BigInt> next(pj.size() + 1, BigInt(0));
            for (size_t k = 0; k < pj.size(); ++k) next[k + 1] = pj[k];
            for (size_t k = 0; k < pjm1.size(); ++k) next[k] -= pjm1[k];
            pjm1 = std::move(pj);
            pj = std::move(next);
        }
    }
    assert(result[d] == 1);
    return result;
}

Ring::Ring(int mstar) : mstar_(mstar) {
    if (mstar < 3) throw std::invalid_argument("Ring: largest edge label must be >= 3");
    psi_ = two_cos_minimal_polynomial(mstar);
    degree_ = static_cast<int>(psi_.size()) - 1;
    init_enclosure();
}

void Ring::init_enclosure() {
    // lambda is the largest real root of psi; between it and the second
    // largest root psi is negative, above it psi is positive and increasing.
    double approx = 2.0 * std::cos(M_PI / mstar_);
    double eps = 1e-9;
    for (int attempt = 0; attempt < 40; ++attempt) {
        Rational lo(approx - eps), hi(approx + eps);
        if (hi > 2) hi = 2;
        if (!(lo < hi)) {
            eps *= 2;
            continue;
        }
        if (eval_at(psi_, lo) < 0 && eval_at(psi_, hi) > 0) {
            // monotonicity of psi on [lo, hi] certifies a unique root inside
            std::vector<BigInt> dpsi(degree_, BigInt(0));
            for (int k = 1; k <= degree_; ++k) dpsi[k - 1] = psi_[k] * k;
            auto image = interval_eval(dpsi, lo, hi);
            if (image.first > 0) {
                lo_ = lo;
                hi_ = hi;
                return;
            }
        }
        eps /= 4;
    }
    throw std::logic_error("Ring: failed to isolate lambda");
}

void Ring::refine_enclosure() const {
    Rational mid = (lo_ + hi_) / 2;
    mid.canonicalize();
    Rational v = eval_at(psi_, mid);
    if (v < 0)
        lo_ = mid;
    else if (v > 0)
        hi_ = mid;
    else
        throw std::logic_error("Ring: lambda unexpectedly rational");
}

RingElement Ring::zero() const { return RingElement{std::vector<BigInt>(degree_, BigInt(0))}; }

RingElement Ring::one() const { return integer(1); }

RingElement Ring::integer(long v) const {
    RingElement e = zero();
    e.coeffs[0] = v;
    return e;
}

RingElement Ring::lambda() const {
    if (degree_ == 1) {
        // psi = y - 1, lambda reduces to the integer 1
        return one();
    }
    RingElement e = zero();
    e.coeffs[1] = 1;
    return e;
}

RingElement Ring::two_cos(int label) const {
    if (label == 2) return zero();
    if (label == 3) return one();
    if (label == mstar_) return lambda();
    throw std::invalid_argument("Ring::two_cos: label not realizable in this ring");
}

RingElement Ring::add(const RingElement& a, const RingElement& b) const {
    RingElement r = a;
    for (int k = 0; k < degree_; ++k) r.coeffs[k] += b.coeffs[k];
    return r;
}

RingElement Ring::sub(const RingElement& a, const RingElement& b) const {
    RingElement r = a;
    for (int k = 0; k < degree_; ++k) r.coeffs[k] -= b.coeffs[k];
    return r;
}

RingElement Ring::neg(const RingElement& a) const {
    RingElement r = a;
    for (int k = 0; k < degree_; ++k) r.coeffs[k] = -r.coeffs[k];
    return r;
}

RingElement Ring::mul(const RingElement& a, const RingElement& b) const {
    std::vector<BigInt> prod(2 * degree_ - 1, BigInt(0));
    for (int i = 0; i < degree_; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (int j = 0; j < degree_; ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    // reduce modulo monic psi
    for (int k = 2 * degree_ - 2; k >= degree_; --k) {
        if (prod[k] == 0) continue;
        BigInt c = prod[k];
        for (int j = 0; j <= degree_; ++j) prod[k - degree_ + j] -= c * psi_[j];
    }
    RingElement r = zero();
    for (int k = 0; k < degree_; ++k) r.coeffs[k] = prod[k];
    return r;
}

bool Ring::is_zero(const RingElement& a) const {
    for (const BigInt& c : a.coeffs)
        if (c != 0) return false;
    return true;
}

int Ring::sign(const RingElement& a) const {
    if (is_zero(a)) return 0;
    if (degree_ == 1) return sgn(a.coeffs[0]);
    for (int iter = 0; iter < 4096; ++iter) {
        auto image = interval_eval(a.coeffs, lo_, hi_);
        if (image.first > 0) return 1;
        if (image.second < 0) return -1;
        refine_enclosure();
    }
    throw std::logic_error("Ring::sign: enclosure refinement did not converge");
}

}  // namespace cambrian
