#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "exacthh/errors.hpp"

namespace exacthh {

using Scalar = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/* Ground field: the rationals (characteristic 0) or a prime field F_p.
 * Scalars are stored as exact rationals in both cases; over F_p every value is
 * kept normalized to an integer in [0, p).  All arithmetic goes through this
 * struct so a matrix can never mix fields by accident. */
struct FieldSpec {
    std::uint64_t characteristic = 0;

    FieldSpec() = default;
    explicit FieldSpec(std::uint64_t ch);

    bool is_rational() const { return characteristic == 0; }
    bool operator==(const FieldSpec&) const = default;

    Scalar normalize(const Scalar& x) const;
    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
    bool is_zero(const Scalar& x) const;

    Scalar from_int(long long v) const;
    /* Accepts "7", "-3", "2/5".  Over F_p the denominator is inverted mod p. */
    Scalar parse(const std::string& text) const;
    std::string format(const Scalar& x) const;
};

bool is_prime(std::uint64_t p);

} // namespace exacthh
