#pragma once

#include <gmpxx.h>

#include "polynet/errors.hpp"

namespace polynet::algebra {

// Arithmetic context for Q with arbitrary-precision mpq elements. Stateless;
// exists so that matrix / polynomial code can be written once against the
// same field interface as PrimeField.
class RationalField {
public:
    using Elem = mpq_class;

    Elem zero() const { return Elem(0); }
    Elem one() const { return Elem(1); }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }

    Elem from_int(std::int64_t v) const {
        static_assert(sizeof(long) >= sizeof(std::int64_t), "LP64 assumed");
        return Elem(static_cast<long>(v));
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }

    Elem inv(const Elem& a) const {
        if (sgn(a) == 0) throw SingularMatrixError("division by zero in Q");
        return Elem(1) / a;
    }

    Elem div(const Elem& a, const Elem& b) const {
        if (sgn(b) == 0) throw SingularMatrixError("division by zero in Q");
        return a / b;
    }

    Elem pow(Elem a, std::uint64_t e) const {
        Elem r(1);
        while (e) {
            if (e & 1) r *= a;
            a *= a;
            e >>= 1;
        }
        return r;
    }

    bool operator==(const RationalField&) const { return true; }

    static constexpr bool is_finite_field = false;
};

} // namespace polynet::algebra
