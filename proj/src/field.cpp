#include "trimcx/field.hpp"

#include "trimcx/errors.hpp"

#include <ostream>
#include <string>

namespace trimcx {

Scalar::Scalar(std::int64_t v) {
    std::int64_t r = v % static_cast<std::int64_t>(modulus_);
    if (r < 0) r += modulus_;
    v_ = static_cast<rep>(r);
}

std::int64_t Scalar::signed_value() const {
    if (v_ > modulus_ / 2) return static_cast<std::int64_t>(v_) - modulus_;
    return v_;
}

Scalar Scalar::inverse() const {
    if (v_ == 0) throw PreconditionError("division by zero in F_p");
    // extended Euclid on (v, p)
    std::int64_t a = v_, b = modulus_, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return Scalar(x0);
}

void Scalar::set_characteristic(rep p) {
    if (p < 3 || p >= (rep{1} << 31) || !is_prime(p))
        throw PreconditionError("characteristic must be an odd prime below 2^31, got " +
                                std::to_string(p));
    modulus_ = p;
}

std::ostream& operator<<(std::ostream& os, Scalar s) { return os << s.signed_value(); }

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

void require_characteristic_above(int bound) {
    if (static_cast<std::int64_t>(Scalar::characteristic()) <= bound)
        throw PreconditionError("characteristic " + std::to_string(Scalar::characteristic()) +
                                " too small; need p > " + std::to_string(bound));
}

} // namespace trimcx
