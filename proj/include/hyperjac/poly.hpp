#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperjac/errors.hpp"
#include "hyperjac/field.hpp"

namespace hyperjac {

// Dense univariate polynomial over F_r, coefficients stored ascending and
// trimmed: the highest stored coefficient is nonzero, the zero polynomial
// stores nothing. coeff(i) is defined for every integer index and reads 0
// outside the stored range (negative indices included), so formulas can
// treat polynomials as doubly infinite coefficient sequences.
class Polynomial {
  public:
    explicit Polynomial(FieldModulus m) : mod_(m) {}  // zero polynomial

    static Polynomial from_coeffs(FieldModulus m, std::vector<std::uint64_t> ascending) {
        Polynomial p(m);
        p.cs_ = std::move(ascending);
        for (auto& c : p.cs_) c %= m.value();
        p.trim();
        return p;
    }

    static Polynomial constant(FieldElement c) {
        Polynomial p(FieldModulus::trusted(c.modulus()));
        if (!c.is_zero()) p.cs_.push_back(c.value());
        return p;
    }

    static Polynomial monomial(FieldModulus m, int exponent, FieldElement c) {
        Polynomial p(m);
        if (c.modulus() != m.value()) throw ModulusMismatch("monomial coefficient field");
        if (exponent < 0) throw Error("monomial exponent must be non-negative");
        if (!c.is_zero()) {
            p.cs_.assign(static_cast<std::size_t>(exponent) + 1, 0);
            p.cs_.back() = c.value();
        }
        return p;
    }

    static Polynomial x(FieldModulus m) { return monomial(m, 1, m(1)); }

    FieldModulus field() const { return mod_; }
    std::uint64_t modulus() const { return mod_.value(); }

    bool is_zero() const { return cs_.empty(); }

    // Degree, with -1 as the sentinel for the zero polynomial (strictly
    // below every true degree, standing in for "-infinity").
    int degree() const { return static_cast<int>(cs_.size()) - 1; }

    FieldElement coeff(long long i) const {
        if (i < 0 || i >= static_cast<long long>(cs_.size()))
            return FieldElement::raw(0, mod_.value());
        return FieldElement::raw(cs_[static_cast<std::size_t>(i)], mod_.value());
    }

    FieldElement leading() const {
        if (is_zero()) throw Error("leading coefficient of the zero polynomial");
        return FieldElement::raw(cs_.back(), mod_.value());
    }

    bool is_monic() const { return !cs_.empty() && cs_.back() == 1; }
    bool is_one() const { return cs_.size() == 1 && cs_[0] == 1; }

    // Horner evaluation.
    FieldElement operator()(FieldElement at) const {
        if (at.modulus() != mod_.value()) throw ModulusMismatch("evaluation point field");
        const std::uint64_t r = mod_.value();
        std::uint64_t acc = 0;
        for (auto it = cs_.rbegin(); it != cs_.rend(); ++it)
            acc = detail::addmod(detail::mulmod(acc, at.value(), r), *it, r);
        return FieldElement::raw(acc, r);
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        const std::uint64_t r = a.modulus();
        Polynomial out(a.mod_);
        out.cs_.resize(std::max(a.cs_.size(), b.cs_.size()), 0);
        for (std::size_t i = 0; i < out.cs_.size(); ++i)
            out.cs_[i] = detail::addmod(i < a.cs_.size() ? a.cs_[i] : 0,
                                        i < b.cs_.size() ? b.cs_[i] : 0, r);
        out.trim();
        return out;
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        const std::uint64_t r = a.modulus();
        Polynomial out(a.mod_);
        out.cs_.resize(std::max(a.cs_.size(), b.cs_.size()), 0);
        for (std::size_t i = 0; i < out.cs_.size(); ++i)
            out.cs_[i] = detail::submod(i < a.cs_.size() ? a.cs_[i] : 0,
                                        i < b.cs_.size() ? b.cs_[i] : 0, r);
        out.trim();
        return out;
    }

    Polynomial operator-() const {
        Polynomial out(mod_);
        out.cs_.reserve(cs_.size());
        for (std::uint64_t c : cs_) out.cs_.push_back(c == 0 ? 0 : modulus() - c);
        return out;
    }

    // Schoolbook product; degrees in this library stay small enough that
    // nothing faster pays for itself.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check(b);
        Polynomial out(a.mod_);
        if (a.is_zero() || b.is_zero()) return out;
        const std::uint64_t r = a.modulus();
        out.cs_.assign(a.cs_.size() + b.cs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.cs_.size(); ++i) {
            if (a.cs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.cs_.size(); ++j)
                out.cs_[i + j] =
                    detail::addmod(out.cs_[i + j], detail::mulmod(a.cs_[i], b.cs_[j], r), r);
        }
        out.trim();
        return out;
    }

    friend Polynomial operator*(const Polynomial& a, FieldElement c) { return a.scaled(c); }
    friend Polynomial operator*(FieldElement c, const Polynomial& a) { return a.scaled(c); }

    Polynomial scaled(FieldElement c) const {
        if (c.modulus() != modulus()) throw ModulusMismatch("scalar field");
        Polynomial out(mod_);
        if (c.is_zero() || is_zero()) return out;
        const std::uint64_t r = modulus();
        out.cs_.reserve(cs_.size());
        for (std::uint64_t v : cs_) out.cs_.push_back(detail::mulmod(v, c.value(), r));
        out.trim();
        return out;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.modulus() == b.modulus() && a.cs_ == b.cs_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    void check(const Polynomial& o) const {
        if (modulus() != o.modulus())
            throw ModulusMismatch("polynomials live in different fields: " +
                                  std::to_string(modulus()) + " vs " + std::to_string(o.modulus()));
    }

  private:
    void trim() {
        while (!cs_.empty() && cs_.back() == 0) cs_.pop_back();
    }

    FieldModulus mod_;
    std::vector<std::uint64_t> cs_;
};

struct DivRem {
    Polynomial quotient;
    Polynomial remainder;
};

inline DivRem divrem(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    if (b.is_zero()) throw DivisionByZeroPoly("polynomial division by zero");
    const std::uint64_t r = a.modulus();
    if (a.degree() < b.degree()) return {Polynomial(a.field()), a};

    const int db = b.degree();
    std::vector<std::uint64_t> rem(static_cast<std::size_t>(a.degree()) + 1);
    for (int i = 0; i <= a.degree(); ++i) rem[static_cast<std::size_t>(i)] = a.coeff(i).value();
    std::vector<std::uint64_t> quot(static_cast<std::size_t>(a.degree() - db) + 1, 0);

    const std::uint64_t ilead = inv(b.leading()).value();
    for (int d = a.degree() - db; d >= 0; --d) {
        const std::uint64_t c = detail::mulmod(rem[static_cast<std::size_t>(d + db)], ilead, r);
        if (c == 0) continue;
        quot[static_cast<std::size_t>(d)] = c;
        for (int i = 0; i <= db; ++i)
            rem[static_cast<std::size_t>(d + i)] = detail::submod(
                rem[static_cast<std::size_t>(d + i)], detail::mulmod(c, b.coeff(i).value(), r), r);
    }
    rem.resize(static_cast<std::size_t>(db > 0 ? db : 0));
    return {Polynomial::from_coeffs(a.field(), std::move(quot)),
            Polynomial::from_coeffs(a.field(), std::move(rem))};
}

inline Polynomial operator%(const Polynomial& a, const Polynomial& b) {
    return divrem(a, b).remainder;
}

inline Polynomial monic(const Polynomial& a) {
    if (a.is_zero()) throw Error("cannot normalize the zero polynomial");
    return a.is_monic() ? a : a.scaled(inv(a.leading()));
}

inline Polynomial gcd(Polynomial a, Polynomial b) {
    a.check(b);
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Polynomial rem = a % b;
        a = std::move(b);
        b = std::move(rem);
    }
    return monic(a);
}

struct XGcd {
    Polynomial g;  // monic gcd
    Polynomial s;  // s*a + t*b = g
    Polynomial t;
};

inline XGcd xgcd(const Polynomial& a, const Polynomial& b) {
    a.check(b);
    if (a.is_zero() && b.is_zero()) throw BothZero("xgcd(0, 0) is undefined");
    Polynomial r0 = a, r1 = b;
    Polynomial s0 = Polynomial::constant(a.field()(1)), s1 = Polynomial(a.field());
    Polynomial t0 = Polynomial(a.field()), t1 = Polynomial::constant(a.field()(1));
    while (!r1.is_zero()) {
        auto [q, rem] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(rem);
        Polynomial s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        Polynomial t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    const FieldElement c = inv(r0.leading());
    return {r0.scaled(c), s0.scaled(c), t0.scaled(c)};
}

inline Polynomial derivative(const Polynomial& p) {
    std::vector<std::uint64_t> out;
    const std::uint64_t r = p.modulus();
    for (int i = 1; i <= p.degree(); ++i)
        out.push_back(detail::mulmod(p.coeff(i).value(), static_cast<std::uint64_t>(i) % r, r));
    return Polynomial::from_coeffs(p.field(), std::move(out));
}

// Lagrange interpolation through points with pairwise distinct abscissas.
inline Polynomial interpolate_distinct(FieldModulus m,
                                       const std::vector<std::pair<FieldElement, FieldElement>>& pts) {
    if (pts.empty()) throw Error("interpolation needs at least one point");
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].first == pts[j].first)
                throw DuplicateAbscissa("repeated x-coordinate " +
                                        std::to_string(pts[i].first.value()));
    Polynomial acc(m);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        Polynomial basis = Polynomial::constant(m(1));
        FieldElement denom = m(1);
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i == j) continue;
            basis = basis * Polynomial::from_coeffs(
                                m, {(-pts[j].first).value(), 1});  // x - x_j
            denom *= pts[i].first - pts[j].first;
        }
        acc = acc + basis.scaled(pts[i].second / denom);
    }
    return acc;
}

// p(x + c), by in-place Horner shift.
inline Polynomial shift_x(const Polynomial& p, FieldElement c) {
    if (c.modulus() != p.modulus()) throw ModulusMismatch("shift amount field");
    if (p.is_zero() || c.is_zero()) return p;
    const std::uint64_t r = p.modulus();
    const int n = p.degree();
    std::vector<std::uint64_t> a(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) a[static_cast<std::size_t>(i)] = p.coeff(i).value();
    for (int k = 0; k <= n; ++k)
        for (int j = n - 1; j >= k; --j)
            a[static_cast<std::size_t>(j)] =
                detail::addmod(a[static_cast<std::size_t>(j)],
                               detail::mulmod(c.value(), a[static_cast<std::size_t>(j) + 1], r), r);
    return Polynomial::from_coeffs(p.field(), std::move(a));
}

// Resultant via the Euclidean remainder sequence. Only its (non)vanishing
// is consumed by callers, but the value itself is the standard one.
inline FieldElement resultant(Polynomial a, Polynomial b) {
    const FieldModulus m = a.field();
    a.check(b);
    if (a.is_zero() || b.is_zero()) return m(0);
    FieldElement acc = m(1);
    if (a.degree() < b.degree()) {
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        std::swap(a, b);
    }
    while (true) {
        if (b.degree() == 0) return acc * pow(b.leading(), static_cast<std::uint64_t>(a.degree()));
        Polynomial rem = a % b;
        if (rem.is_zero()) return m(0);
        acc *= pow(b.leading(), static_cast<std::uint64_t>(a.degree() - rem.degree()));
        if ((a.degree() & 1) && (b.degree() & 1)) acc = -acc;
        a = std::move(b);
        b = std::move(rem);
    }
}

// --- textual form: comma-separated ascending decimal coefficients in
// brackets, e.g. "[6,0,0,1]" for x^3 + 6. The zero polynomial prints as
// "[0]"; "[]" is accepted on input. ---

inline std::string to_text(const Polynomial& p) {
    if (p.is_zero()) return "[0]";
    std::string out = "[";
    for (int i = 0; i <= p.degree(); ++i) {
        if (i) out += ',';
        out += std::to_string(p.coeff(i).value());
    }
    out += ']';
    return out;
}

// Exactly `len` coefficients, padding with zeros above the degree.
inline std::string to_text_padded(const Polynomial& p, std::size_t len) {
    detail::require(static_cast<std::size_t>(p.degree() + 1) <= len, "padded width too small");
    std::string out = "[";
    for (std::size_t i = 0; i < len; ++i) {
        if (i) out += ',';
        out += std::to_string(p.coeff(static_cast<long long>(i)).value());
    }
    out += ']';
    return out;
}

namespace detail {
inline std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline std::uint64_t parse_u64(std::string_view tok) {
    tok = strip(tok);
    if (tok.empty()) throw ParseError("empty integer token");
    std::uint64_t v = 0;
    for (char ch : tok) {
        if (ch < '0' || ch > '9') throw ParseError("bad integer token '" + std::string(tok) + "'");
        const std::uint64_t d = static_cast<std::uint64_t>(ch - '0');
        if (v > (UINT64_MAX - d) / 10) throw ParseError("integer token overflows 64 bits");
        v = v * 10 + d;
    }
    return v;
}
}  // namespace detail

inline Polynomial parse_poly(FieldModulus m, std::string_view text) {
    text = detail::strip(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw ParseError("polynomial literal must look like [c0,c1,...], got '" +
                         std::string(text) + "'");
    text.remove_prefix(1);
    text.remove_suffix(1);
    text = detail::strip(text);
    std::vector<std::uint64_t> cs;
    if (!text.empty()) {
        std::size_t start = 0;
        while (true) {
            const std::size_t comma = text.find(',', start);
            cs.push_back(detail::parse_u64(text.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
    }
    return Polynomial::from_coeffs(m, std::move(cs));
}

}  // namespace hyperjac
