#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperjac/curve.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/rng.hpp"

namespace hyperjac {

// Result of the chart-membership test: on_z says whether u divides f - v^2
// exactly; w is the cofactor (f - v^2) / u, meaningful only when on_z holds,
// in which case it is monic of degree g+1.
struct ZMembership {
    bool on_z;
    Polynomial w;
};

// Membership in the dense affine chart: u monic of degree exactly g,
// deg v <= g-1, and u | f - v^2. Shape violations throw; a clean shape that
// fails the divisibility yields on_z = false. When membership holds, all
// 2g+2 coefficient identities
//   f_i - sum_j v_j v_{i-j} = sum_j u_j w_{i-j}
// are re-verified index by index as a redundant self-check.
inline ZMembership is_on_Z(const Curve& c, const Polynomial& u, const Polynomial& v) {
    u.check(v);
    if (u.modulus() != c.modulus()) throw ModulusMismatch("divisor field vs curve field");
    const int g = c.genus();
    if (u.degree() != g)
        throw ShapeError("u must have degree " + std::to_string(g) + ", got " +
                         std::to_string(u.degree()));
    if (!u.is_monic()) throw ShapeError("u must be monic");
    if (v.degree() > g - 1)
        throw ShapeError("v must have degree <= " + std::to_string(g - 1) + ", got " +
                         std::to_string(v.degree()));

    auto [w, rem] = divrem(c.f() - v * v, u);
    if (!rem.is_zero()) return {false, std::move(w)};

    detail::require(w.degree() == g + 1 && w.is_monic(), "cofactor shape");
    for (int i = 0; i <= 2 * g + 1; ++i) {
        FieldElement lhs = c.f().coeff(i);
        FieldElement rhs = FieldElement::raw(0, c.modulus());
        for (int j = 0; j <= i; ++j) {
            lhs -= v.coeff(j) * v.coeff(i - j);
            rhs += u.coeff(j) * w.coeff(i - j);
        }
        detail::require(lhs == rhs, "chart coefficient identity");
    }
    return {true, std::move(w)};
}

// Weight-g divisor class in coordinates (u, v): u monic of degree g whose
// roots are the x-coordinates of the supporting points, v the polynomial of
// degree <= g-1 matching y there, with u | f - v^2. Immutable once built;
// every constructor path validates chart membership.
class MumfordDivisor {
  public:
    static MumfordDivisor from_pair(CurvePtr curve, Polynomial u, Polynomial v) {
        detail::require(curve != nullptr, "null curve");
        if (!is_on_Z(*curve, u, v).on_z)
            throw NotOnZ("u does not divide f - v^2");
        return MumfordDivisor(std::move(curve), std::move(u), std::move(v));
    }

    // u = prod (x - x_i), v = the Lagrange interpolant. Only the separable
    // case is constructible this way: repeated x-coordinates (which would
    // need higher-order matching of y) and conjugate pairs are rejected.
    // Divisors with repeated points can still be fed in via from_pair.
    static MumfordDivisor from_points(CurvePtr curve, const std::vector<AffinePoint>& pts) {
        detail::require(curve != nullptr, "null curve");
        const int g = curve->genus();
        if (static_cast<int>(pts.size()) != g)
            throw ShapeError("need exactly " + std::to_string(g) + " points, got " +
                             std::to_string(pts.size()));
        for (const AffinePoint& p : pts)
            if (!on_curve(*curve, p))
                throw PointOffCurve("(" + std::to_string(p.x.value()) + ", " +
                                    std::to_string(p.y.value()) + ") is not on the curve");
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j)
                if (pts[i].x == pts[j].x)
                    throw DuplicateX("two points share x = " + std::to_string(pts[i].x.value()));

        const FieldModulus m = curve->field();
        Polynomial u = Polynomial::constant(m(1));
        std::vector<std::pair<FieldElement, FieldElement>> nodes;
        for (const AffinePoint& p : pts) {
            u = u * Polynomial::from_coeffs(m, {(-p.x).value(), 1});
            nodes.emplace_back(p.x, p.y);
        }
        Polynomial v = interpolate_distinct(m, nodes);
        detail::require(is_on_Z(*curve, u, v).on_z, "constructed pair is on the chart");
        return MumfordDivisor(std::move(curve), std::move(u), std::move(v));
    }

    const Polynomial& u() const { return u_; }
    const Polynomial& v() const { return v_; }
    const CurvePtr& curve() const { return curve_; }
    int genus() const { return curve_->genus(); }

  private:
    MumfordDivisor(CurvePtr curve, Polynomial u, Polynomial v)
        : curve_(std::move(curve)), u_(std::move(u)), v_(std::move(v)) {}

    CurvePtr curve_;
    Polynomial u_;
    Polynomial v_;
};

// Coefficient-wise equality; canonical forms make this the class equality.
inline bool equals(const MumfordDivisor& a, const MumfordDivisor& b) {
    if (*a.curve() != *b.curve())
        throw CurveMismatch("divisors live on different curves");
    return a.u() == b.u() && a.v() == b.v();
}

// g points with pairwise distinct x-coordinates and y != 0, optionally
// avoiding x = 0. Deterministic per stream/seed; the result always passes
// the chart test by construction.
inline MumfordDivisor random_divisor(const CurvePtr& curve, SplitMix64& rng,
                                     bool require_nonzero_x = true) {
    detail::require(curve != nullptr, "null curve");
    const int g = curve->genus();
    std::vector<AffinePoint> pts;
    pts.reserve(static_cast<std::size_t>(g));
    for (int attempt = 0; attempt < kSamplingBudget && static_cast<int>(pts.size()) < g;
         ++attempt) {
        AffinePoint p = sample_point(*curve, rng, require_nonzero_x, /*require_nonzero_y=*/true);
        bool fresh = true;
        for (const AffinePoint& q : pts)
            if (q.x == p.x) {
                fresh = false;
                break;
            }
        if (fresh) pts.push_back(p);
    }
    if (static_cast<int>(pts.size()) < g)
        throw SamplingExhausted("could not collect " + std::to_string(g) +
                                " distinct x-coordinates");
    return MumfordDivisor::from_points(curve, pts);
}

inline MumfordDivisor random_divisor(const CurvePtr& curve, std::uint64_t seed,
                                     bool require_nonzero_x = true) {
    SplitMix64 rng(seed);
    return random_divisor(curve, rng, require_nonzero_x);
}

// --- textual form: `u=[u0,...,1]; v=[v0,...]` with ascending decimal
// coefficients; v is padded with zeros to length g. ---

inline std::string to_text(const MumfordDivisor& d) {
    return "u=" + to_text(d.u()) + "; v=" +
           to_text_padded(d.v(), static_cast<std::size_t>(d.genus()));
}

namespace detail {
// "u=[...]" with optional whitespace around the '='; returns the bracketed
// part. Used for both halves of a divisor literal.
inline std::string_view keyed_poly(std::string_view part, char key) {
    part = strip(part);
    if (part.empty() || part.front() != key)
        throw ParseError(std::string("expected `") + key + "=[...]`, got '" + std::string(part) +
                         "'");
    part = strip(part.substr(1));
    if (part.empty() || part.front() != '=')
        throw ParseError(std::string("expected `") + key + "=[...]`, got '" + std::string(part) +
                         "'");
    return strip(part.substr(1));
}
}  // namespace detail

// `u=[...]; v=[...]`, whitespace-tolerant.
inline std::pair<Polynomial, Polynomial> parse_divisor_pair(const FieldModulus& m,
                                                            std::string_view text) {
    const std::size_t semi = text.find(';');
    if (semi == std::string_view::npos)
        throw ParseError("divisor literal must look like `u=[...]; v=[...]`");
    Polynomial u = parse_poly(m, detail::keyed_poly(text.substr(0, semi), 'u'));
    Polynomial v = parse_poly(m, detail::keyed_poly(text.substr(semi + 1), 'v'));
    return {std::move(u), std::move(v)};
}

inline MumfordDivisor parse_divisor(const CurvePtr& curve, std::string_view text) {
    detail::require(curve != nullptr, "null curve");
    auto [u, v] = parse_divisor_pair(curve->field(), text);
    return MumfordDivisor::from_pair(curve, std::move(u), std::move(v));
}

}  // namespace hyperjac
