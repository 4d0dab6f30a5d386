#pragma once

#include <stdexcept>
#include <string>

namespace hyperjac {

// Base class for every error raised by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// --- field ---
class InvalidModulus : public Error { public: using Error::Error; };
class ModulusMismatch : public Error { public: using Error::Error; };
class ZeroInverse : public Error { public: using Error::Error; };

// --- poly ---
class DivisionByZeroPoly : public Error { public: using Error::Error; };
class DuplicateAbscissa : public Error { public: using Error::Error; };
class BothZero : public Error { public: using Error::Error; };

// --- text formats ---
class ParseError : public Error { public: using Error::Error; };

// --- kernels ---
class NOutOfRange : public Error { public: using Error::Error; };
class NegativeExponentResidue : public Error { public: using Error::Error; };
class ZeroConstantTerm : public Error { public: using Error::Error; };

// --- curve ---
class NotMonic : public Error { public: using Error::Error; };
class WrongDegree : public Error { public: using Error::Error; };
class SingularCurve : public Error { public: using Error::Error; };
class SamplingExhausted : public Error { public: using Error::Error; };

// --- mumford ---
class DuplicateX : public Error { public: using Error::Error; };
class PointOffCurve : public Error { public: using Error::Error; };
class ShapeError : public Error { public: using Error::Error; };
class CurveMismatch : public Error { public: using Error::Error; };
class NotOnZ : public Error { public: using Error::Error; };

// --- grouplaw ---
// Inputs on which the explicit formulas are undefined. These are expected
// runtime outcomes, not bugs: callers classify them by kind for retry
// strategies and statistics.
enum class DegeneracyKind {
    SharedSupport,  // gcd(u, u') != 1
    SingularM,      // interpolation matrix has rank < g
    ZeroOmega,      // u(0) * u'(0) = 0
    ZeroRho,        // leading coefficient of p^2 - f q^2 vanishes
    SingularQT,     // v'' system unsolvable or sum leaves the dense chart
};

constexpr const char* kind_name(DegeneracyKind k) {
    switch (k) {
        case DegeneracyKind::SharedSupport: return "SharedSupport";
        case DegeneracyKind::SingularM: return "SingularM";
        case DegeneracyKind::ZeroOmega: return "ZeroOmega";
        case DegeneracyKind::ZeroRho: return "ZeroRho";
        case DegeneracyKind::SingularQT: return "SingularQT";
    }
    return "?";
}

constexpr const char* kind_stage(DegeneracyKind k) {
    switch (k) {
        case DegeneracyKind::SharedSupport:
        case DegeneracyKind::SingularM: return "interpolate";
        case DegeneracyKind::ZeroOmega:
        case DegeneracyKind::ZeroRho: return "compose_u";
        case DegeneracyKind::SingularQT: return "compose_v";
    }
    return "?";
}

class DegeneracyError : public Error {
  public:
    DegeneracyError(DegeneracyKind kind, const std::string& detail)
        : Error(std::string(kind_name(kind)) + " [" + kind_stage(kind) + "]" +
                (detail.empty() ? "" : ": " + detail)),
          kind_(kind) {}

    DegeneracyKind kind() const noexcept { return kind_; }
    const char* stage() const noexcept { return kind_stage(kind_); }

  private:
    DegeneracyKind kind_;
};

class RetriesExhausted : public Error { public: using Error::Error; };

namespace detail {
// Always-on internal consistency check. Failures indicate a bug in this
// library, not bad input.
inline void require(bool cond, const char* what) {
    if (!cond) throw Error(std::string("internal invariant violated: ") + what);
}
}  // namespace detail

}  // namespace hyperjac
