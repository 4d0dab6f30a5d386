#pragma once

#include <cstdint>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperjac/errors.hpp"
#include "hyperjac/field.hpp"
#include "hyperjac/poly.hpp"
#include "hyperjac/rng.hpp"

namespace hyperjac {

// Affine model y^2 = f(x) with f monic, squarefree, of degree 2g+1 over an
// odd prime field. The single point at infinity is never materialized as a
// coordinate value; it exists only in divisor-class semantics.
class Curve {
  public:
    Curve(int genus, Polynomial f) : g_(genus), f_(std::move(f)), disc_(f_.field()(0)) {
        if (genus < 1) throw WrongDegree("genus must be >= 1, got " + std::to_string(genus));
        if (f_.degree() != 2 * genus + 1)
            throw WrongDegree("f must have degree " + std::to_string(2 * genus + 1) + ", got " +
                              std::to_string(f_.degree()));
        if (!f_.is_monic()) throw NotMonic("f must be monic");
        disc_ = discriminant_of(f_);
        if (disc_.is_zero()) throw SingularCurve("f has a repeated root (discriminant 0)");
    }

    int genus() const { return g_; }
    const Polynomial& f() const { return f_; }
    FieldModulus field() const { return f_.field(); }
    std::uint64_t modulus() const { return f_.modulus(); }
    FieldElement discriminant() const { return disc_; }

    friend bool operator==(const Curve& a, const Curve& b) {
        return a.g_ == b.g_ && a.f_ == b.f_;
    }
    friend bool operator!=(const Curve& a, const Curve& b) { return !(a == b); }

    // disc(f) = (-1)^(n(n-1)/2) res(f, f') / lc(f). Only the (non)vanishing
    // is consumed downstream, but the normalization matches the classical
    // one (f = x^3 + 1 gives -27).
    static FieldElement discriminant_of(const Polynomial& f) {
        FieldElement res = resultant(f, derivative(f)) / f.leading();
        const long long n = f.degree();
        if ((n * (n - 1) / 2) & 1) res = -res;
        return res;
    }

  private:
    int g_;
    Polynomial f_;
    FieldElement disc_;
};

using CurvePtr = std::shared_ptr<const Curve>;

inline CurvePtr make_curve(int genus, Polynomial f) {
    return std::make_shared<const Curve>(genus, std::move(f));
}

struct AffinePoint {
    FieldElement x;
    FieldElement y;

    friend bool operator==(const AffinePoint& a, const AffinePoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

// The hyperelliptic involution (x, y) -> (x, -y). Fixed points are exactly
// the branch points y = 0.
inline AffinePoint involution(const AffinePoint& p) { return {p.x, -p.y}; }

inline bool on_curve(const Curve& c, const AffinePoint& p) { return p.y * p.y == c.f()(p.x); }

inline constexpr int kSamplingBudget = 10000;

// Uniform affine point: draw x until f(x) is a square, pick a root with a
// random sign. The flags reject x = 0 and the branch points y = 0.
// Deterministic for a fixed stream.
inline AffinePoint sample_point(const Curve& c, SplitMix64& rng, bool require_nonzero_x = true,
                                bool require_nonzero_y = true) {
    const std::uint64_t r = c.modulus();
    for (int attempt = 0; attempt < kSamplingBudget; ++attempt) {
        const std::uint64_t xv = rng.below(r);
        if (require_nonzero_x && xv == 0) continue;
        const FieldElement x = FieldElement::raw(xv, r);
        const FieldElement fx = c.f()(x);
        if (fx.is_zero()) {
            if (require_nonzero_y) continue;
            return {x, FieldElement::raw(0, r)};
        }
        const auto root = sqrt(fx);
        if (!root) continue;
        return {x, rng.coin() ? -*root : *root};
    }
    throw SamplingExhausted("no curve point found in " + std::to_string(kSamplingBudget) +
                            " attempts");
}

inline AffinePoint sample_point(const Curve& c, std::uint64_t seed, bool require_nonzero_x = true,
                                bool require_nonzero_y = true) {
    SplitMix64 rng(seed);
    return sample_point(c, rng, require_nonzero_x, require_nonzero_y);
}

// Random valid curve of the given genus: monic f with uniform lower
// coefficients, rejecting the (rare) singular draws.
inline CurvePtr sample_curve(FieldModulus m, int genus, SplitMix64& rng) {
    for (int attempt = 0; attempt < kSamplingBudget; ++attempt) {
        std::vector<std::uint64_t> cs(static_cast<std::size_t>(2 * genus + 2));
        for (std::size_t i = 0; i + 1 < cs.size(); ++i) cs[i] = rng.below(m.value());
        cs.back() = 1;
        try {
            return make_curve(genus, Polynomial::from_coeffs(m, std::move(cs)));
        } catch (const SingularCurve&) {
            continue;
        }
    }
    throw SamplingExhausted("no squarefree f found");
}

// x -> x + c is an isomorphism fixing infinity; the image curve keeps the
// genus, monicity and squarefreeness of f.
inline CurvePtr translate_curve(const Curve& c, FieldElement shift) {
    return make_curve(c.genus(), shift_x(c.f(), shift));
}

// --- curve file: UTF-8 text, one `key = value` per line. Keys: p (odd
// prime), g (genus), f (bracketed ascending coefficients, monic). Blank
// lines and lines starting with '#' are ignored. ---

inline CurvePtr parse_curve_text(std::string_view text) {
    std::string p_str, g_str, f_str;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        line = detail::strip(line);
        if (line.empty() || line.front() == '#') continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ParseError("curve file line is not `key = value`: '" + std::string(line) + "'");
        const std::string_view key = detail::strip(line.substr(0, eq));
        const std::string_view val = detail::strip(line.substr(eq + 1));
        if (key == "p")
            p_str = val;
        else if (key == "g")
            g_str = val;
        else if (key == "f")
            f_str = val;
        else
            throw ParseError("unknown curve file key '" + std::string(key) + "'");
    }
    if (p_str.empty() || g_str.empty() || f_str.empty())
        throw ParseError("curve file needs keys p, g and f");
    const FieldModulus m(detail::parse_u64(p_str));
    const std::uint64_t genus = detail::parse_u64(g_str);
    if (genus < 1 || genus > 1000) throw ParseError("unreasonable genus " + g_str);
    return make_curve(static_cast<int>(genus), parse_poly(m, f_str));
}

inline CurvePtr read_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open curve file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_curve_text(buf.str());
}

inline std::string to_text(const Curve& c) {
    std::string out;
    out += "p = " + std::to_string(c.modulus()) + "\n";
    out += "g = " + std::to_string(c.genus()) + "\n";
    out += "f = " + to_text(c.f()) + "\n";
    return out;
}

}  // namespace hyperjac
