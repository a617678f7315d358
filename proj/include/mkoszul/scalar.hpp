#ifndef MKOSZUL_SCALAR_HPP
#define MKOSZUL_SCALAR_HPP

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace mkoszul {

// Exact scalars. Integers back the main pipeline (monic bases keep every
// reduction integral), rationals back the oracles, and F_ell the torsion
// computations.
using Int = mpz_class;
using Rat = mpq_class;

/// Prime-field element with a runtime modulus (ell < 2^31). Elements carry
/// their modulus; mixing moduli is a logic error.
class Fp {
public:
    Fp() : v_(0), p_(0) {}
    Fp(int64_t v, int64_t p) : p_(p) {
        if (p < 2 || p >= (int64_t(1) << 31)) throw std::invalid_argument("modulus out of range");
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    int64_t value() const { return v_; }
    int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator+(const Fp& o) const { return Fp(v_ + o.v_, same(o)); }
    Fp operator-(const Fp& o) const { return Fp(v_ - o.v_, same(o)); }
    Fp operator*(const Fp& o) const { return Fp(v_ * o.v_, same(o)); }
    Fp operator-() const { return Fp(-v_, p_); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    Fp inverse() const {
        if (v_ == 0) throw std::domain_error("inverse of zero");
        // extended Euclid
        int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b) {
            int64_t q = a / b;
            a -= q * b;
            std::swap(a, b);
            x0 -= q * x1;
            std::swap(x0, x1);
        }
        return Fp(x0, p_);
    }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    bool operator==(const Fp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator==(int64_t x) const { return Fp(x, p_ ? p_ : 2).v_ == v_; }

private:
    int64_t same(const Fp& o) const {
        if (p_ != o.p_) throw std::invalid_argument("mixed moduli");
        return p_;
    }
    int64_t v_;
    int64_t p_;
};

inline bool scalar_is_zero(const Int& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Rat& x) { return sgn(x) == 0; }
inline bool scalar_is_zero(const Fp& x) { return x.is_zero(); }

inline bool scalar_is_one(const Int& x) { return x == 1; }
inline bool scalar_is_one(const Rat& x) { return x == 1; }
inline bool scalar_is_one(const Fp& x) { return x.value() == 1; }

inline std::string scalar_str(const Int& x) { return x.get_str(); }
inline std::string scalar_str(const Rat& x) { return x.get_str(); }
inline std::string scalar_str(const Fp& x) { return std::to_string(x.value()); }

inline Rat to_rat(const Int& x) { return Rat(x); }

}  // namespace mkoszul

#endif
