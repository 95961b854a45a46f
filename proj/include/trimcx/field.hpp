#pragma once

#include <cstdint>
#include <iosfwd>

namespace trimcx {

// Elements of the prime field F_p. The modulus is process-wide (NTL's zz_p
// style) and must be set before any parallel region touches scalars.
class Scalar {
public:
    using rep = std::uint32_t;

    static constexpr rep default_characteristic = 32003;

    Scalar() = default;
    Scalar(std::int64_t v);

    static Scalar from_rep(rep v) {
        Scalar s;
        s.v_ = v;
        return s;
    }

    rep value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    /// Representative in (-p/2, p/2], used for printing.
    std::int64_t signed_value() const;

    Scalar inverse() const;

    Scalar operator-() const { return from_rep(v_ == 0 ? 0 : modulus_ - v_); }
    Scalar& operator+=(Scalar o) {
        v_ += o.v_;
        if (v_ >= modulus_) v_ -= modulus_;
        return *this;
    }
    Scalar& operator-=(Scalar o) {
        v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + modulus_ - o.v_;
        return *this;
    }
    Scalar& operator*=(Scalar o) {
        v_ = static_cast<rep>(static_cast<std::uint64_t>(v_) * o.v_ % modulus_);
        return *this;
    }
    Scalar& operator/=(Scalar o) { return *this *= o.inverse(); }

    friend Scalar operator+(Scalar a, Scalar b) { return a += b; }
    friend Scalar operator-(Scalar a, Scalar b) { return a -= b; }
    friend Scalar operator*(Scalar a, Scalar b) { return a *= b; }
    friend Scalar operator/(Scalar a, Scalar b) { return a /= b; }
    friend bool operator==(Scalar a, Scalar b) { return a.v_ == b.v_; }

    static rep characteristic() { return modulus_; }
    /// Throws PreconditionError unless p is a prime in [3, 2^31).
    static void set_characteristic(rep p);

private:
    rep v_ = 0;
    static inline rep modulus_ = default_characteristic;
};

std::ostream& operator<<(std::ostream& os, Scalar s);

bool is_prime(std::uint64_t n);

/// Restores the previous characteristic on scope exit.
class CharacteristicGuard {
public:
    explicit CharacteristicGuard(Scalar::rep p) : saved_(Scalar::characteristic()) {
        Scalar::set_characteristic(p);
    }
    ~CharacteristicGuard() { Scalar::set_characteristic(saved_); }
    CharacteristicGuard(const CharacteristicGuard&) = delete;
    CharacteristicGuard& operator=(const CharacteristicGuard&) = delete;

private:
    Scalar::rep saved_;
};

/// Throws PreconditionError if char k <= bound (divided powers need p > all degrees).
void require_characteristic_above(int bound);

} // namespace trimcx
