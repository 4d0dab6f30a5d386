#pragma once

// Independent oracles for the test suites. Everything here is computed
// through routes disjoint from the code paths under test: the classical
// one-point chord/tangent formulas and plain reduction-based linear algebra.

#include <optional>
#include <utility>
#include <vector>

#include "hyperjac/curve.hpp"
#include "hyperjac/field.hpp"
#include "hyperjac/grouplaw.hpp"
#include "hyperjac/linalg.hpp"
#include "hyperjac/poly.hpp"

namespace testor {

using namespace hyperjac;

// Genus-1 chord law in (u0, v0) coordinates, valid for distinct-x inputs:
//   lambda = (v0' - v0) / (u0 - u0'),
//   u0'' = -lambda^2 + f2 - u0 - u0',
//   v0'' = -lambda u0 + lambda u0'' - v0.
inline std::pair<FieldElement, FieldElement> chord_add(const Curve& c, FieldElement u0,
                                                       FieldElement v0, FieldElement u0p,
                                                       FieldElement v0p) {
    const FieldElement lam = (v0p - v0) / (u0 - u0p);
    const FieldElement u0s = -(lam * lam) + c.f().coeff(2) - u0 - u0p;
    const FieldElement v0s = -(lam * u0) + lam * u0s - v0;
    return {u0s, v0s};
}

// Genus-1 tangent law at (x1, y1), y1 != 0, returned as (u0'', v0'').
inline std::pair<FieldElement, FieldElement> tangent_double(const Curve& c, FieldElement x1,
                                                            FieldElement y1) {
    const FieldModulus m = c.field();
    const FieldElement lam =
        (m(3) * x1 * x1 + m(2) * c.f().coeff(2) * x1 + c.f().coeff(1)) / (m(2) * y1);
    const FieldElement x3 = lam * lam - c.f().coeff(2) - x1 - x1;
    return {-x3, lam * (x1 - x3) - y1};
}

// The condition p + q v'' = 0 mod u'' written as a plain linear system via
// polynomial division: column j is (q x^j) mod u''. This shares no code
// with the banded-matrix assembly it cross-checks.
struct DirectVSystem {
    SquareMatrix mat;
    std::vector<FieldElement> rhs;
};

inline DirectVSystem direct_v_system(const Curve& c, const grouplaw::Interpolant& ip,
                                     const Polynomial& usum) {
    const int g = c.genus();
    const FieldModulus m = c.field();
    DirectVSystem sys{SquareMatrix(m, g), {}};
    for (int j = 0; j < g; ++j) {
        const Polynomial col = (ip.q * Polynomial::monomial(m, j, m(1))) % usum;
        for (int i = 0; i < g; ++i) sys.mat.set(i, j, col.coeff(i));
    }
    const Polynomial target = (-ip.p) % usum;
    for (int i = 0; i < g; ++i) sys.rhs.push_back(target.coeff(i));
    return sys;
}

inline std::optional<Polynomial> direct_v_solve(const Curve& c, const grouplaw::Interpolant& ip,
                                                const Polynomial& usum) {
    DirectVSystem sys = direct_v_system(c, ip, usum);
    auto sol = solve(sys.mat, sys.rhs);
    if (!sol) return std::nullopt;
    std::vector<std::uint64_t> cs;
    for (FieldElement e : *sol) cs.push_back(e.value());
    return Polynomial::from_coeffs(c.field(), std::move(cs));
}

}  // namespace testor
