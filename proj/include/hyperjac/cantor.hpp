#pragma once

#include <utility>
#include <variant>

#include "hyperjac/errors.hpp"
#include "hyperjac/mumford.hpp"
#include "hyperjac/poly.hpp"

namespace hyperjac::cantor {

// A reduced class of weight below g: valid output of composition-reduction
// that the weight-g chart cannot represent (it lies on the theta locus).
// u = 1, v = 0 is the identity class. This is an outcome, not an error.
struct SubgenericResult {
    Polynomial u;
    Polynomial v;
    int weight;  // deg u < g
};

using Sum = std::variant<MumfordDivisor, SubgenericResult>;

// Classical composition-then-reduction addition of Mumford pairs. Total on
// the chart: shared roots, conjugate points and doubling all flow through
// the three-way extended gcd, which is exactly why this serves as the
// differential oracle for the explicit formulas.
inline Sum cantor_add(const MumfordDivisor& dv, const MumfordDivisor& ev) {
    if (*dv.curve() != *ev.curve()) throw CurveMismatch("cantor_add across different curves");
    const Curve& c = *dv.curve();
    const Polynomial& f = c.f();
    const int g = c.genus();

    const Polynomial &u1 = dv.u(), &v1 = dv.v();
    const Polynomial &u2 = ev.u(), &v2 = ev.v();

    // d = gcd(u1, u2, v1 + v2) = s1 u1 + s2 u2 + s3 (v1 + v2).
    const XGcd step1 = xgcd(u1, u2);
    const XGcd step2 = xgcd(step1.g, v1 + v2);
    const Polynomial s1 = step2.s * step1.s;
    const Polynomial s2 = step2.s * step1.t;
    const Polynomial& s3 = step2.t;
    const Polynomial& d = step2.g;

    auto [u, ur] = divrem(u1 * u2, d * d);
    detail::require(ur.is_zero(), "d^2 divides u1 u2");
    auto [t, tr] = divrem(s1 * u1 * v2 + s2 * u2 * v1 + s3 * (v1 * v2 + f), d);
    detail::require(tr.is_zero(), "d divides the composed v numerator");
    Polynomial v = t % u;

    // Reduce u <- (f - v^2)/u, v <- (-v) mod u until the weight drops to g.
    while (u.degree() > g) {
        auto [next_u, rem] = divrem(f - v * v, u);
        detail::require(rem.is_zero(), "u divides f - v^2 during reduction");
        v = (-v) % next_u;
        u = std::move(next_u);
    }
    u = monic(u);
    if (u.degree() == g) return MumfordDivisor::from_pair(dv.curve(), std::move(u), std::move(v));
    const int weight = u.degree();
    return SubgenericResult{std::move(u), std::move(v), weight};
}

inline bool agrees(const Sum& sum, const MumfordDivisor& dv) {
    const MumfordDivisor* full = std::get_if<MumfordDivisor>(&sum);
    return full != nullptr && equals(*full, dv);
}

}  // namespace hyperjac::cantor
