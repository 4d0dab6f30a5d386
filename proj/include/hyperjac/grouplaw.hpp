#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "hyperjac/curve.hpp"
#include "hyperjac/errors.hpp"
#include "hyperjac/field.hpp"
#include "hyperjac/kernels.hpp"
#include "hyperjac/linalg.hpp"
#include "hyperjac/mumford.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/rng.hpp"

namespace hyperjac::grouplaw {

// Degree layout of the interpolating rational function p/q for a given
// genus: deg p <= a, deg q <= b, with eps the parity of g and d = a - g.
// a + b + 2 = 2g + 1, so the pair has one projective degree of freedom more
// than the 2g interpolation conditions.
struct GenusProfile {
    int g;
    int eps;
    int a;
    int b;
    int d;

    static GenusProfile for_genus(int g) {
        if (g < 1) throw WrongDegree("genus must be >= 1");
        GenusProfile p;
        p.g = g;
        p.eps = g % 2;
        p.a = (3 * g - p.eps) / 2;
        p.b = (g - 2 + p.eps) / 2;
        p.d = (g - p.eps) / 2;
        detail::require(p.a + p.b + 2 == 2 * g + 1 && p.d == p.a - g, "profile identities");
        return p;
    }
};

// The pair (p, q) representing the interpolant p/q. Meaningful only up to a
// common nonzero scalar; q is never zero.
struct Interpolant {
    Polynomial p;
    Polynomial q;
};

enum class SolveMethod {
    Elimination,          // Gaussian elimination, normalized to q0 = 1
    CramerDeterminants,   // the literal determinant formulas, q0 = det M
};

namespace detail_g {

// kappa_{i,l} = sum_{l <= m <= d} u_{i-d+m} * S_{m-l}(u), where S_t(u) is
// the alternating composition sum over the top coefficients of u. The sums
// depend only on t, not on i, so they are computed once per polynomial and
// shared across rows (and reused for u'' when recovering v).
class KappaTable {
  public:
    KappaTable(const Polynomial& u, const GenusProfile& pr)
        : u_(&u), d_(pr.d), sums_(kernels::alternating_sums(u, pr.g, pr.d)) {}

    FieldElement at(long long i, int l) const {
        detail::require(0 <= l && l <= d_, "kappa column index");
        FieldElement acc = FieldElement::raw(0, u_->modulus());
        for (int m = l; m <= d_; ++m)
            acc += u_->coeff(i - d_ + m) * sums_[static_cast<std::size_t>(m - l)];
        return acc;
    }

  private:
    const Polynomial* u_;
    int d_;
    std::vector<FieldElement> sums_;
};

// lambda_{i,j} = -v_{i-j} + sum_{0 <= l <= d} v_{(a-j)-l} kappa_{i,l}.
inline FieldElement lambda_at(const Polynomial& v, const GenusProfile& pr, const KappaTable& kap,
                              long long i, int j) {
    FieldElement acc = -v.coeff(i - j);
    for (int l = 0; l <= pr.d; ++l) acc += v.coeff((pr.a - j) - l) * kap.at(i, l);
    return acc;
}

}  // namespace detail_g

inline FieldElement kappa(const Polynomial& u, const GenusProfile& pr, long long i, int l) {
    return detail_g::KappaTable(u, pr).at(i, l);
}

inline FieldElement lambda_coeff(const Polynomial& u, const Polynomial& v, const GenusProfile& pr,
                                 long long i, int j) {
    detail::require(0 <= j && j <= pr.b, "lambda column index");
    return detail_g::lambda_at(v, pr, detail_g::KappaTable(u, pr), i, j);
}

// Interpolant through both divisors: the g x g system in the unknowns
// (p_g..p_a, q_1..q_b) over q_0, solved either by elimination (q_0
// normalized to 1) or by the literal Cramer determinants (q_0 = det M).
// The two routes differ by the projective scale only. Raises SharedSupport
// when u and u' share a root and SingularM when the system is rank
// deficient, which in particular happens for every attempt with D = D'.
inline Interpolant interpolate(const MumfordDivisor& dv, const MumfordDivisor& ev,
                               SolveMethod method = SolveMethod::Elimination) {
    if (*dv.curve() != *ev.curve()) throw CurveMismatch("interpolate across different curves");
    const FieldModulus m = dv.curve()->field();
    const GenusProfile pr = GenusProfile::for_genus(dv.genus());
    const Polynomial &u = dv.u(), &v = dv.v();
    const Polynomial &u2 = ev.u(), &v2 = ev.v();

    // Equal divisors fall through to the (identically zero) matrix: the
    // relations are dependent for every doubling attempt, and that must
    // surface as SingularM rather than as a support check.
    const bool same = (u == u2 && v == v2);
    if (!same && gcd(u, u2).degree() > 0)
        throw DegeneracyError(DegeneracyKind::SharedSupport, "gcd(u, u') != 1");

    const detail_g::KappaTable kap(u, pr), kap2(u2, pr);
    SquareMatrix mat(m, pr.g);
    std::vector<FieldElement> rhs;
    rhs.reserve(static_cast<std::size_t>(pr.g));
    for (int i = 0; i < pr.g; ++i) {
        for (int c = 0; c <= pr.d; ++c)
            mat.set(i, c, kap.at(i, pr.d - c) - kap2.at(i, pr.d - c));
        for (int j = 1; j <= pr.b; ++j)
            mat.set(i, pr.d + j,
                    detail_g::lambda_at(v2, pr, kap2, i, j) - detail_g::lambda_at(v, pr, kap, i, j));
        rhs.push_back(detail_g::lambda_at(v, pr, kap, i, 0) -
                      detail_g::lambda_at(v2, pr, kap2, i, 0));
    }

    FieldElement q0 = m(1);
    std::vector<FieldElement> high;
    if (method == SolveMethod::Elimination) {
        auto sol = solve(mat, rhs);
        if (!sol) throw DegeneracyError(DegeneracyKind::SingularM, "rank(M) < g");
        high = std::move(*sol);
    } else {
        q0 = determinant(mat);
        if (q0.is_zero()) throw DegeneracyError(DegeneracyKind::SingularM, "det M = 0");
        high.reserve(static_cast<std::size_t>(pr.g));
        for (int j = 0; j < pr.g; ++j) high.push_back(determinant(mat.with_column(j, rhs)));
    }

    std::vector<std::uint64_t> pc(static_cast<std::size_t>(pr.a) + 1, 0);
    std::vector<std::uint64_t> qc(static_cast<std::size_t>(pr.b) + 1, 0);
    qc[0] = q0.value();
    for (int c = 0; c <= pr.d; ++c)
        pc[static_cast<std::size_t>(pr.g + c)] = high[static_cast<std::size_t>(c)].value();
    for (int j = 1; j <= pr.b; ++j)
        qc[static_cast<std::size_t>(j)] = high[static_cast<std::size_t>(pr.d + j)].value();

    // Low coefficients: p_i = sum_l p_{a-l} kappa_{i,l} - sum_{j>=1} q_j
    // lambda_{i,j} - q_0 lambda_{i,0}.
    for (int i = 0; i < pr.g; ++i) {
        FieldElement acc = FieldElement::raw(0, m.value());
        for (int l = 0; l <= pr.d; ++l)
            acc += FieldElement::raw(pc[static_cast<std::size_t>(pr.a - l)], m.value()) *
                   kap.at(i, l);
        for (int j = 1; j <= pr.b; ++j)
            acc -= FieldElement::raw(qc[static_cast<std::size_t>(j)], m.value()) *
                   detail_g::lambda_at(v, pr, kap, i, j);
        acc -= q0 * detail_g::lambda_at(v, pr, kap, i, 0);
        pc[static_cast<std::size_t>(i)] = acc.value();
    }

    Interpolant out{Polynomial::from_coeffs(m, std::move(pc)),
                    Polynomial::from_coeffs(m, std::move(qc))};

    // The defining property, rechecked through plain polynomial division.
    detail::require((out.p - out.q * v) % u == Polynomial(m), "interpolant reduces to v mod u");
    detail::require((out.p - out.q * v2) % u2 == Polynomial(m), "interpolant reduces to v' mod u'");
    return out;
}

// Monic degree-g u'' with p^2 - f q^2 = rho u u' u''. The coefficients come
// from the series-inversion closed form applied to eta/rho against
// omega = u u'; the polynomial identity is then re-verified exactly.
inline Polynomial compose_u(const Curve& c, const MumfordDivisor& dv, const MumfordDivisor& ev,
                            const Interpolant& ip) {
    const GenusProfile pr = GenusProfile::for_genus(c.genus());
    const FieldModulus m = c.field();

    const Polynomial omega = dv.u() * ev.u();
    if (omega.coeff(0).is_zero())
        throw DegeneracyError(DegeneracyKind::ZeroOmega, "a supporting point has x = 0");

    // rho = p_a^2 (1 - eps) - f_{2g+1} q_b^2 eps: the degree-3g coefficient
    // of p^2 - f q^2, branch-free in the genus parity.
    const FieldElement pa = ip.p.coeff(pr.a);
    const FieldElement qb = ip.q.coeff(pr.b);
    const FieldElement rho = pa * pa * m(static_cast<std::uint64_t>(1 - pr.eps)) -
                             c.f().coeff(2 * pr.g + 1) * qb * qb *
                                 m(static_cast<std::uint64_t>(pr.eps));
    if (rho.is_zero())
        throw DegeneracyError(DegeneracyKind::ZeroRho, "leading coefficient of p^2 - f q^2 is 0");

    // eta_k = sum_j (p_j p_{k-j} - f_{k-j} sum_i q_i q_{j-i}), written out
    // as stated; the polynomial-arithmetic route below serves as the
    // independent check.
    std::vector<FieldElement> eta;
    eta.reserve(static_cast<std::size_t>(pr.g) + 1);
    for (int k = 0; k <= pr.g; ++k) {
        FieldElement acc = FieldElement::raw(0, m.value());
        for (int j = 0; j <= k; ++j) {
            FieldElement qq = FieldElement::raw(0, m.value());
            for (int i = 0; i <= j; ++i) qq += ip.q.coeff(i) * ip.q.coeff(j - i);
            acc += ip.p.coeff(j) * ip.p.coeff(k - j) - c.f().coeff(k - j) * qq;
        }
        eta.push_back(acc);
    }

    const auto sums = kernels::inversion_sums(omega, pr.g);
    const FieldElement scale = inv(rho * omega.coeff(0));
    std::vector<std::uint64_t> uc(static_cast<std::size_t>(pr.g) + 1, 0);
    for (int j = 0; j <= pr.g; ++j) {
        FieldElement acc = FieldElement::raw(0, m.value());
        for (int i = 0; i <= j; ++i)
            acc += eta[static_cast<std::size_t>(i)] * scale * sums[static_cast<std::size_t>(j - i)];
        uc[static_cast<std::size_t>(j)] = acc.value();
    }
    Polynomial usum = Polynomial::from_coeffs(m, std::move(uc));

    detail::require(usum.degree() == pr.g && usum.is_monic(), "u'' monic of degree g");
    const Polynomial lhs = ip.p * ip.p - c.f() * ip.q * ip.q;
    detail::require(lhs.degree() == 3 * pr.g && lhs.leading() == rho,
                    "p^2 - f q^2 has degree 3g with leading coefficient rho");
    detail::require(lhs == rho * (omega * usum), "p^2 - f q^2 = rho u u' u''");
    return usum;
}

// v'' of degree <= g-1 with p + q v'' = 0 mod u'': the banded q-convolution
// matrix plus the tau correction columns, solved exactly. Raises SingularQT
// when the system degenerates (typically u'' inseparable or sharing roots
// with q) or when the solved v'' fails the defining reduction, which marks
// a sum that leaves the dense chart.
inline Polynomial compose_v(const Curve& c, const Interpolant& ip, const Polynomial& usum) {
    const GenusProfile pr = GenusProfile::for_genus(c.genus());
    const FieldModulus m = c.field();
    const detail_g::KappaTable kap(usum, pr);

    SquareMatrix qt(m, pr.g);
    for (int i = 0; i < pr.g; ++i)
        for (int j = 0; j < pr.g; ++j) qt.set(i, j, ip.q.coeff(i - j));
    for (int s = pr.d + 1; s <= pr.g - 1; ++s) {
        for (int i = 0; i < pr.g; ++i) {
            FieldElement tau = FieldElement::raw(0, m.value());
            for (int mm = pr.g + 1 - pr.eps; mm <= pr.d + s; ++mm)
                tau -= ip.q.coeff(pr.a - mm) * kap.at(i, mm - s);
            qt.set(i, s, qt.at(i, s) + tau);
        }
    }

    std::vector<FieldElement> mu;
    mu.reserve(static_cast<std::size_t>(pr.g));
    for (int i = 0; i < pr.g; ++i) {
        FieldElement acc = -ip.p.coeff(i);
        for (int l = 0; l <= pr.d; ++l) acc += ip.p.coeff(pr.a - l) * kap.at(i, l);
        mu.push_back(acc);
    }

    auto sol = solve(qt, mu);
    if (!sol) throw DegeneracyError(DegeneracyKind::SingularQT, "det(Q+T) = 0");
    std::vector<std::uint64_t> vc;
    vc.reserve(sol->size());
    for (FieldElement e : *sol) vc.push_back(e.value());
    Polynomial vsum = Polynomial::from_coeffs(m, std::move(vc));

    if ((ip.p + ip.q * vsum) % usum != Polynomial(m))
        throw DegeneracyError(DegeneracyKind::SingularQT, "p + q v'' is not divisible by u''");
    return vsum;
}

// Intermediates of a successful addition, for audits and invariance tests.
struct AddTrace {
    Interpolant interp;
    Polynomial u_out;
    Polynomial v_out;
    FieldElement rho;
};

// [D - g*inf] + [D' - g*inf] by interpolate / compose_u / compose_v.
// Partial: raises DegeneracyError on the loci where the formulas do not
// apply, and never repairs silently; the retry strategies live in
// add_translated and dbl.
inline MumfordDivisor add(const MumfordDivisor& dv, const MumfordDivisor& ev,
                          SolveMethod method = SolveMethod::Elimination,
                          std::optional<AddTrace>* trace = nullptr) {
    if (*dv.curve() != *ev.curve()) throw CurveMismatch("add across different curves");
    const Curve& c = *dv.curve();
    const GenusProfile pr = GenusProfile::for_genus(c.genus());

    Interpolant ip = interpolate(dv, ev, method);
    Polynomial usum = compose_u(c, dv, ev, ip);
    Polynomial vsum = compose_v(c, ip, usum);

    if (trace) {
        const FieldElement pa = ip.p.coeff(pr.a), qb = ip.q.coeff(pr.b);
        const FieldElement rho = pa * pa * c.field()(static_cast<std::uint64_t>(1 - pr.eps)) -
                                 c.f().coeff(2 * pr.g + 1) * qb * qb *
                                     c.field()(static_cast<std::uint64_t>(pr.eps));
        *trace = AddTrace{std::move(ip), usum, vsum, rho};
    }
    try {
        return MumfordDivisor::from_pair(dv.curve(), std::move(usum), std::move(vsum));
    } catch (const NotOnZ&) {
        throw DegeneracyError(DegeneracyKind::SingularQT, "sum has no representative on the chart");
    }
}

// The inverse class: (u, -v).
inline MumfordDivisor negate(const MumfordDivisor& dv) {
    return MumfordDivisor::from_pair(dv.curve(), dv.u(), -dv.v());
}

// add, but on the x = 0 degeneracy the whole picture is moved by a random
// substitution x -> x + c (an isomorphism fixing infinity), re-added, and
// moved back. Non-ZeroOmega degeneracies pass through untouched, since a
// translation cannot remove them.
inline MumfordDivisor add_translated(const MumfordDivisor& dv, const MumfordDivisor& ev,
                                     int max_retries, std::uint64_t seed) {
    try {
        return add(dv, ev);
    } catch (const DegeneracyError& err) {
        if (err.kind() != DegeneracyKind::ZeroOmega) throw;
    }
    const CurvePtr base = dv.curve();
    const std::uint64_t r = base->modulus();
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < max_retries; ++attempt) {
        const FieldElement c = FieldElement::raw(1 + rng.below(r - 1), r);
        CurvePtr moved = translate_curve(*base, c);
        MumfordDivisor dt =
            MumfordDivisor::from_pair(moved, shift_x(dv.u(), c), shift_x(dv.v(), c));
        MumfordDivisor et =
            MumfordDivisor::from_pair(moved, shift_x(ev.u(), c), shift_x(ev.v(), c));
        try {
            MumfordDivisor sum = add(dt, et);
            return MumfordDivisor::from_pair(base, shift_x(sum.u(), -c), shift_x(sum.v(), -c));
        } catch (const DegeneracyError& err) {
            if (err.kind() != DegeneracyKind::ZeroOmega) throw;
        }
    }
    throw RetriesExhausted("translation retry budget exhausted (" + std::to_string(max_retries) +
                           ")");
}

// Doubling via a random dummy class E: 2[D] = (([D] + [E]) + [D]) - [E].
// The direct interpolation relations are always dependent when D = D', so
// a fresh E is drawn (at most 16 times) whenever any link of the chain
// degenerates. The result does not depend on which E succeeds.
inline MumfordDivisor dbl(const MumfordDivisor& dv, std::uint64_t dummy_seed) {
    constexpr int kAttempts = 16;
    SplitMix64 rng(dummy_seed);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        try {
            MumfordDivisor dummy = random_divisor(dv.curve(), rng, /*require_nonzero_x=*/true);
            return add(add(add(dv, dummy), dv), negate(dummy));
        } catch (const DegeneracyError&) {
        } catch (const SamplingExhausted&) {
        }
    }
    throw RetriesExhausted("no dummy divisor made the doubling chain succeed in 16 attempts");
}

}  // namespace hyperjac::grouplaw
