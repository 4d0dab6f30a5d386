#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "hyperjac/errors.hpp"
#include "hyperjac/field.hpp"
#include "hyperjac/poly.hpp"

namespace hyperjac::kernels {

// Ordered sequence of positive integers. compositions(n) enumerates all of
// them with sum n; there are 2^(n-1) for n >= 1 and exactly one (empty)
// for n = 0.
using Composition = std::vector<int>;

// Enumeration cap: the table for n holds 2^(n-1) entries, so anything much
// beyond this stops being a desk-scale computation.
inline constexpr int kMaxCompositionN = 24;

namespace detail_k {
inline void build_compositions(int remaining, Composition& cur, std::vector<Composition>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = 1; part <= remaining; ++part) {
        cur.push_back(part);
        build_compositions(remaining - part, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail_k

// All compositions of n in lexicographic order by parts. Each table is
// built once under a lock and is read-only afterwards, so the returned
// reference may be shared freely across threads.
inline const std::vector<Composition>& compositions(int n) {
    if (n < 0 || n > kMaxCompositionN)
        throw NOutOfRange("compositions(n) supports 0 <= n <= " +
                          std::to_string(kMaxCompositionN) + ", got " + std::to_string(n));
    static std::mutex mu;
    static std::array<std::unique_ptr<const std::vector<Composition>>, kMaxCompositionN + 1> table;
    std::scoped_lock lock(mu);
    auto& slot = table[static_cast<std::size_t>(n)];
    if (!slot) {
        auto built = std::make_unique<std::vector<Composition>>();
        built->reserve(n == 0 ? 1 : std::size_t(1) << (n - 1));
        Composition cur;
        detail_k::build_compositions(n, cur, *built);
        slot = std::move(built);
    }
    return *slot;
}

// c_t = sum over compositions sigma of t of (-1)^|sigma| * prod_r
// beta[base - sigma_r], for t = 0..t_max. These inner sums do not depend on
// the row index of the formulas that consume them, so computing them once
// per polynomial turns an exponential-per-entry cost into
// exponential-per-row.
inline std::vector<FieldElement> alternating_sums(const Polynomial& beta, long long base,
                                                  int t_max) {
    const std::uint64_t r = beta.modulus();
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(t_max) + 1);
    for (int t = 0; t <= t_max; ++t) {
        std::uint64_t acc = 0;
        for (const Composition& sigma : compositions(t)) {
            std::uint64_t prod = 1;
            for (int part : sigma) {
                prod = detail::mulmod(prod, beta.coeff(base - part).value(), r);
                if (prod == 0) break;
            }
            acc = (sigma.size() & 1) ? detail::submod(acc, prod, r)
                                     : detail::addmod(acc, prod, r);
        }
        out.push_back(FieldElement::raw(acc, r));
    }
    return out;
}

// e_t = sum over compositions sigma of t of (-1)^|sigma| * gamma_0^(-|sigma|)
// * prod_r gamma[sigma_r], for t = 0..t_max. These are the series-inversion
// sums used to divide by a power series with invertible constant term.
inline std::vector<FieldElement> inversion_sums(const Polynomial& gamma, int t_max) {
    if (gamma.coeff(0).is_zero())
        throw ZeroConstantTerm("series inversion requires a nonzero constant term");
    const std::uint64_t r = gamma.modulus();
    const std::uint64_t ig0 = inv(gamma.coeff(0)).value();
    std::vector<FieldElement> out;
    out.reserve(static_cast<std::size_t>(t_max) + 1);
    for (int t = 0; t <= t_max; ++t) {
        std::uint64_t acc = 0;
        for (const Composition& sigma : compositions(t)) {
            std::uint64_t prod = 1;
            for (int part : sigma) {
                prod = detail::mulmod(prod, detail::mulmod(gamma.coeff(part).value(), ig0, r), r);
                if (prod == 0) break;
            }
            acc = (sigma.size() & 1) ? detail::submod(acc, prod, r)
                                     : detail::addmod(acc, prod, r);
        }
        out.push_back(FieldElement::raw(acc, r));
    }
    return out;
}

// Closed form for coefficient i of the nth iterate of the dth order
// reduction of alpha by beta at index k:
//   [A_n]_i = alpha_i - sum_{0 <= l <= m <= n} alpha_{k-l} beta_{i-d+m}
//             * sum over sigma in S_{m-l} of (-1)^|sigma| prod beta_{k-d-sigma_r}.
// n = -1 returns alpha_i. All index reads follow the zero-extension
// convention, so any integer arguments are accepted.
inline FieldElement reduction_coefficient(const Polynomial& alpha, const Polynomial& beta,
                                          long long d, long long k, long long n, long long i) {
    alpha.check(beta);
    const std::uint64_t r = alpha.modulus();
    std::uint64_t acc = alpha.coeff(i).value();
    if (n >= 0) {
        if (n > kMaxCompositionN)
            throw NOutOfRange("reduction iterate count " + std::to_string(n) + " exceeds " +
                              std::to_string(kMaxCompositionN));
        const auto sums = alternating_sums(beta, k - d, static_cast<int>(n));
        for (long long l = 0; l <= n; ++l) {
            const std::uint64_t al = alpha.coeff(k - l).value();
            if (al == 0) continue;
            for (long long m = l; m <= n; ++m) {
                const std::uint64_t term = detail::mulmod(
                    al,
                    detail::mulmod(beta.coeff(i - d + m).value(),
                                   sums[static_cast<std::size_t>(m - l)].value(), r),
                    r);
                acc = detail::submod(acc, term, r);
            }
        }
    }
    return FieldElement::raw(acc, r);
}

// Finitely supported coefficient sequence indexed by all of Z. This is the
// natural value of the reduction recurrence, whose intermediate steps can
// multiply by negative powers of x.
class LaurentSeries {
  public:
    explicit LaurentSeries(const Polynomial& p) : r_(p.modulus()) {
        for (int i = 0; i <= p.degree(); ++i) {
            const std::uint64_t c = p.coeff(i).value();
            if (c != 0) cs_[i] = c;
        }
    }

    std::uint64_t modulus() const { return r_; }

    FieldElement coeff(long long i) const {
        const auto it = cs_.find(i);
        return FieldElement::raw(it == cs_.end() ? 0 : it->second, r_);
    }

    // *this -= x^shift * c * beta
    void submul(long long shift, FieldElement c, const Polynomial& beta) {
        detail::require(c.modulus() == r_ && beta.modulus() == r_, "laurent operand field");
        if (c.is_zero()) return;
        for (int j = 0; j <= beta.degree(); ++j) {
            const std::uint64_t t = detail::mulmod(c.value(), beta.coeff(j).value(), r_);
            if (t == 0) continue;
            const long long at = shift + j;
            const std::uint64_t now = detail::submod(coeff(at).value(), t, r_);
            if (now == 0)
                cs_.erase(at);
            else
                cs_[at] = now;
        }
    }

    bool negative_part_is_zero() const {
        return cs_.empty() || cs_.begin()->first >= 0;
    }

    // Non-negative part as a polynomial; requires the negative part to be
    // zero so no information is dropped.
    Polynomial to_polynomial(FieldModulus m) const {
        detail::require(m.value() == r_, "laurent field");
        detail::require(negative_part_is_zero(), "laurent series has negative support");
        std::vector<std::uint64_t> out;
        if (!cs_.empty()) {
            out.assign(static_cast<std::size_t>(cs_.rbegin()->first) + 1, 0);
            for (const auto& [i, c] : cs_) out[static_cast<std::size_t>(i)] = c;
        }
        return Polynomial::from_coeffs(m, std::move(out));
    }

  private:
    std::uint64_t r_;
    std::map<long long, std::uint64_t> cs_;  // nonzero coefficients only
};

// The reduction recurrence itself, kept as the independent oracle for the
// closed form above:
//   A_{-1} = alpha,   A_s = A_{s-1} - x^(d-s) [A_{s-1}]_{k-s} beta.
inline LaurentSeries reduction_iterates(const Polynomial& alpha, const Polynomial& beta,
                                        long long d, long long k, long long n) {
    alpha.check(beta);
    LaurentSeries acc(alpha);
    for (long long s = 0; s <= n; ++s) {
        const FieldElement top = acc.coeff(k - s);
        if (!top.is_zero()) acc.submul(d - s, top, beta);
    }
    return acc;
}

inline Polynomial reduction_iterative(const Polynomial& alpha, const Polynomial& beta,
                                      long long d, long long k, long long n) {
    const LaurentSeries acc = reduction_iterates(alpha, beta, d, k, n);
    if (!acc.negative_part_is_zero())
        throw NegativeExponentResidue("reduction iterate keeps a negative power of x");
    return acc.to_polynomial(alpha.field());
}

// Coefficient k of beta where alpha = beta * gamma and gamma_0 != 0:
//   beta_k = sum_{j=0}^{k} (alpha_j / gamma_0)
//            * sum over sigma in S_{k-j} of (-1)^|sigma| gamma_0^(-|sigma|)
//              prod gamma_{sigma_r}.
inline FieldElement product_inversion(const Polynomial& alpha, const Polynomial& gamma,
                                      long long k) {
    alpha.check(gamma);
    const std::uint64_t r = alpha.modulus();
    if (gamma.coeff(0).is_zero())
        throw ZeroConstantTerm("product inversion requires gamma(0) != 0");
    if (k < 0) return FieldElement::raw(0, r);
    if (k > kMaxCompositionN)
        throw NOutOfRange("product inversion index " + std::to_string(k) + " exceeds " +
                          std::to_string(kMaxCompositionN));
    const auto sums = inversion_sums(gamma, static_cast<int>(k));
    const std::uint64_t ig0 = inv(gamma.coeff(0)).value();
    std::uint64_t acc = 0;
    for (long long j = 0; j <= k; ++j) {
        const std::uint64_t aj = alpha.coeff(j).value();
        if (aj == 0) continue;
        acc = detail::addmod(
            acc,
            detail::mulmod(detail::mulmod(aj, ig0, r),
                           sums[static_cast<std::size_t>(k - j)].value(), r),
            r);
    }
    return FieldElement::raw(acc, r);
}

}  // namespace hyperjac::kernels
