#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hyperjac/errors.hpp"
#include "hyperjac/field.hpp"

namespace hyperjac {

// Dense square matrix over F_r. Everything here runs at genus scale
// (n <= ~24), so plain Gauss-Jordan with first-nonzero pivoting is exact
// and fast enough.
class SquareMatrix {
  public:
    SquareMatrix(FieldModulus m, int n)
        : mod_(m), n_(n), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {
        detail::require(n >= 0, "matrix size");
    }

    int size() const { return n_; }
    FieldModulus field() const { return mod_; }

    FieldElement at(int i, int j) const { return FieldElement::raw(a_[idx(i, j)], mod_.value()); }
    void set(int i, int j, FieldElement v) {
        detail::require(v.modulus() == mod_.value(), "matrix entry field");
        a_[idx(i, j)] = v.value();
    }

    SquareMatrix with_column(int j, const std::vector<FieldElement>& col) const {
        detail::require(static_cast<int>(col.size()) == n_, "replacement column length");
        SquareMatrix out = *this;
        for (int i = 0; i < n_; ++i) out.set(i, j, col[static_cast<std::size_t>(i)]);
        return out;
    }

  private:
    std::size_t idx(int i, int j) const {
        detail::require(0 <= i && i < n_ && 0 <= j && j < n_, "matrix index");
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(j);
    }

    FieldModulus mod_;
    int n_;
    std::vector<std::uint64_t> a_;
};

// Solve M x = rhs exactly; empty result when M is singular.
inline std::optional<std::vector<FieldElement>> solve(SquareMatrix m, std::vector<FieldElement> rhs) {
    const int n = m.size();
    detail::require(static_cast<int>(rhs.size()) == n, "rhs length");
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row) {
            if (!m.at(row, col).is_zero()) {
                piv = row;
                break;
            }
        }
        if (piv < 0) return std::nullopt;
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                FieldElement t = m.at(col, j);
                m.set(col, j, m.at(piv, j));
                m.set(piv, j, t);
            }
            std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(piv)]);
        }
        const FieldElement ip = inv(m.at(col, col));
        for (int j = col; j < n; ++j) m.set(col, j, m.at(col, j) * ip);
        rhs[static_cast<std::size_t>(col)] *= ip;
        for (int row = 0; row < n; ++row) {
            if (row == col) continue;
            const FieldElement f = m.at(row, col);
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j) m.set(row, j, m.at(row, j) - f * m.at(col, j));
            rhs[static_cast<std::size_t>(row)] -= f * rhs[static_cast<std::size_t>(col)];
        }
    }
    return rhs;
}

inline FieldElement determinant(SquareMatrix m) {
    const int n = m.size();
    FieldElement det = m.field()(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row) {
            if (!m.at(row, col).is_zero()) {
                piv = row;
                break;
            }
        }
        if (piv < 0) return m.field()(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) {
                FieldElement t = m.at(col, j);
                m.set(col, j, m.at(piv, j));
                m.set(piv, j, t);
            }
            det = -det;
        }
        det *= m.at(col, col);
        const FieldElement ip = inv(m.at(col, col));
        for (int row = col + 1; row < n; ++row) {
            const FieldElement f = m.at(row, col) * ip;
            if (f.is_zero()) continue;
            for (int j = col; j < n; ++j) m.set(row, j, m.at(row, j) - f * m.at(col, j));
        }
    }
    return det;
}

}  // namespace hyperjac
