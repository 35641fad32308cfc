#include "exacthh/field.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace exacthh {

namespace {

BigInt mod_reduce(const BigInt& v, const BigInt& p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return r;
}

/* extended Euclid; a assumed in [1, p) with p prime */
BigInt mod_inverse(const BigInt& a, const BigInt& p) {
    BigInt old_r = a, r = p;
    BigInt old_s = 1, s = 0;
    while (r != 0) {
        BigInt q = old_r / r;
        BigInt tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1)
        throw InputError("element not invertible mod " + p.str());
    return mod_reduce(old_s, p);
}

} // namespace

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d <= p / d; d += 2)
        if (p % d == 0) return false;
    return true;
}

FieldSpec::FieldSpec(std::uint64_t ch) : characteristic(ch) {
    if (ch != 0 && !is_prime(ch))
        throw InputError("field characteristic must be 0 or a prime, got " + std::to_string(ch));
}

Scalar FieldSpec::normalize(const Scalar& x) const {
    if (is_rational()) return x;
    BigInt p(characteristic);
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt dm = mod_reduce(den, p);
    if (dm == 0)
        throw InputError("denominator divisible by field characteristic " + std::to_string(characteristic));
    BigInt v = mod_reduce(mod_reduce(num, p) * mod_inverse(dm, p), p);
    return Scalar(v);
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
    Scalar r = a + b;
    return is_rational() ? r : normalize(r);
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
    Scalar r = a - b;
    return is_rational() ? r : normalize(r);
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
    Scalar r = a * b;
    return is_rational() ? r : normalize(r);
}

Scalar FieldSpec::neg(const Scalar& a) const {
    Scalar r = -a;
    return is_rational() ? r : normalize(r);
}

Scalar FieldSpec::inv(const Scalar& a) const {
    if (is_zero(a)) throw InternalError("division by zero");
    if (is_rational()) return Scalar(1) / a;
    BigInt p(characteristic);
    BigInt v = boost::multiprecision::numerator(normalize(a));
    return Scalar(mod_inverse(v, p));
}

bool FieldSpec::is_zero(const Scalar& x) const {
    // member is_zero is a numerator sign test; comparing against an int
    // literal would go through full rational comparisons
    if (is_rational()) return x.is_zero();
    if (x.is_zero()) return true;
    return normalize(x).is_zero();
}

Scalar FieldSpec::from_int(long long v) const { return normalize(Scalar(v)); }

Scalar FieldSpec::parse(const std::string& text) const {
    try {
        Scalar raw(text);
        return normalize(raw);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception&) {
        throw InputError("cannot parse scalar '" + text + "'");
    }
}

std::string FieldSpec::format(const Scalar& x) const {
    Scalar v = normalize(x);
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

} // namespace exacthh
