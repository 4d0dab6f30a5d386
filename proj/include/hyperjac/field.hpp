#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>

#include "hyperjac/errors.hpp"

namespace hyperjac {

namespace detail {

using u128 = unsigned __int128;

inline std::uint64_t addmod(std::uint64_t a, std::uint64_t b, std::uint64_t r) {
    // a, b < r < 2^63, so the sum cannot wrap.
    const std::uint64_t s = a + b;
    return s >= r ? s - r : s;
}

inline std::uint64_t submod(std::uint64_t a, std::uint64_t b, std::uint64_t r) {
    return a >= b ? a - b : a + (r - b);
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t r) {
    return static_cast<std::uint64_t>(u128(a) * u128(b) % r);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t r) {
    std::uint64_t acc = 1 % r;
    a %= r;
    while (e != 0) {
        if (e & 1) acc = mulmod(acc, a, r);
        a = mulmod(a, a, r);
        e >>= 1;
    }
    return acc;
}

// Miller-Rabin with the first twelve primes as bases, which is a proven
// deterministic test for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
    constexpr std::uint64_t bases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    if (n < 2) return false;
    for (std::uint64_t p : bases) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : bases) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace detail

class FieldElement;

// Validated odd prime modulus r, 3 <= r < 2^63. The bound keeps every
// product of two canonical residues inside a 128-bit intermediate, which
// gives exact arithmetic without a big-integer dependency. Copies are
// trivial; the primality test runs once, in the explicit constructor.
class FieldModulus {
  public:
    explicit FieldModulus(std::uint64_t r) : r_(r) {
        if (r < 3 || r >= (std::uint64_t(1) << 63))
            throw InvalidModulus("modulus must satisfy 3 <= r < 2^63, got " + std::to_string(r));
        if ((r & 1) == 0)
            throw InvalidModulus("modulus must be odd, got " + std::to_string(r));
        if (!detail::is_prime_u64(r))
            throw InvalidModulus("modulus must be prime, got " + std::to_string(r));
    }

    // Internal fast path: r must have been validated before. Containers use
    // it to rebuild a modulus from a stored raw value without re-running the
    // primality check.
    static FieldModulus trusted(std::uint64_t r) { return FieldModulus(r, TrustedTag{}); }

    std::uint64_t value() const { return r_; }

    FieldElement operator()(std::uint64_t v) const;
    FieldElement from_signed(std::int64_t v) const;

    friend bool operator==(FieldModulus a, FieldModulus b) { return a.r_ == b.r_; }
    friend bool operator!=(FieldModulus a, FieldModulus b) { return a.r_ != b.r_; }

  private:
    struct TrustedTag {};
    FieldModulus(std::uint64_t r, TrustedTag) : r_(r) {}

    std::uint64_t r_;
};

// Canonical residue in [0, r). Every operation returns a canonical value,
// and binary operations demand matching moduli.
class FieldElement {
  public:
    FieldElement(FieldModulus m, std::uint64_t v) : v_(v % m.value()), r_(m.value()) {}

    // Internal fast path: v must already be canonical and r already
    // validated. Containers in this library use it to avoid re-running the
    // primality check on every coefficient.
    static FieldElement raw(std::uint64_t v, std::uint64_t r) { return FieldElement(v, r, RawTag{}); }

    std::uint64_t value() const { return v_; }
    std::uint64_t modulus() const { return r_; }
    bool is_zero() const { return v_ == 0; }

    friend FieldElement operator+(FieldElement a, FieldElement b) {
        a.check(b);
        return raw(detail::addmod(a.v_, b.v_, a.r_), a.r_);
    }
    friend FieldElement operator-(FieldElement a, FieldElement b) {
        a.check(b);
        return raw(detail::submod(a.v_, b.v_, a.r_), a.r_);
    }
    friend FieldElement operator*(FieldElement a, FieldElement b) {
        a.check(b);
        return raw(detail::mulmod(a.v_, b.v_, a.r_), a.r_);
    }
    FieldElement operator-() const { return raw(v_ == 0 ? 0 : r_ - v_, r_); }

    FieldElement& operator+=(FieldElement o) { return *this = *this + o; }
    FieldElement& operator-=(FieldElement o) { return *this = *this - o; }
    FieldElement& operator*=(FieldElement o) { return *this = *this * o; }

    friend bool operator==(FieldElement a, FieldElement b) { return a.v_ == b.v_ && a.r_ == b.r_; }
    friend bool operator!=(FieldElement a, FieldElement b) { return !(a == b); }

  private:
    struct RawTag {};
    FieldElement(std::uint64_t v, std::uint64_t r, RawTag) : v_(v), r_(r) {}

    void check(FieldElement o) const {
        if (r_ != o.r_)
            throw ModulusMismatch("operands live in different fields: " + std::to_string(r_) +
                                  " vs " + std::to_string(o.r_));
    }

    std::uint64_t v_;
    std::uint64_t r_;
};

inline FieldElement FieldModulus::operator()(std::uint64_t v) const { return FieldElement(*this, v); }

inline FieldElement FieldModulus::from_signed(std::int64_t v) const {
    if (v >= 0) return (*this)(static_cast<std::uint64_t>(v));
    const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
    return -(*this)(mag);
}

inline FieldElement pow(FieldElement a, std::uint64_t e) {
    return FieldElement::raw(detail::powmod(a.value(), e, a.modulus()), a.modulus());
}

inline FieldElement inv(FieldElement a) {
    if (a.is_zero()) throw ZeroInverse("0 has no inverse mod " + std::to_string(a.modulus()));
    // Fermat: a^(r-2). The modulus is prime by construction.
    return pow(a, a.modulus() - 2);
}

inline FieldElement operator/(FieldElement a, FieldElement b) { return a * inv(b); }

inline bool is_square(FieldElement a) {
    if (a.is_zero()) return true;
    return detail::powmod(a.value(), (a.modulus() - 1) / 2, a.modulus()) == 1;
}

// Square root of a quadratic residue: the smaller of the two canonical
// roots, 0 for input 0, empty for a non-residue. Tonelli-Shanks in the
// general case, the exponent shortcut when r = 3 (mod 4). The required
// non-residue is found by sequential search from 2.
inline std::optional<FieldElement> sqrt(FieldElement a) {
    const std::uint64_t r = a.modulus();
    if (a.is_zero()) return a;
    if (!is_square(a)) return std::nullopt;

    std::uint64_t s;
    if (r % 4 == 3) {
        s = detail::powmod(a.value(), (r + 1) / 4, r);
    } else {
        std::uint64_t q = r - 1;
        std::uint64_t m = 0;
        while ((q & 1) == 0) {
            q >>= 1;
            ++m;
        }
        std::uint64_t z = 2;
        while (detail::powmod(z, (r - 1) / 2, r) != r - 1) ++z;

        std::uint64_t c = detail::powmod(z, q, r);
        std::uint64_t t = detail::powmod(a.value(), q, r);
        std::uint64_t x = detail::powmod(a.value(), (q + 1) / 2, r);
        while (t != 1) {
            std::uint64_t i = 0;
            for (std::uint64_t tt = t; tt != 1; tt = detail::mulmod(tt, tt, r)) ++i;
            std::uint64_t b = c;
            for (std::uint64_t j = 0; j + i + 1 < m; ++j) b = detail::mulmod(b, b, r);
            m = i;
            c = detail::mulmod(b, b, r);
            t = detail::mulmod(t, c, r);
            x = detail::mulmod(x, b, r);
        }
        s = x;
    }
    s = std::min(s, r - s);
    return FieldElement::raw(s, r);
}

}  // namespace hyperjac
