#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "polynomial.hpp"
#include "rational.hpp"
#include "roots.hpp"

namespace hlab {

// Gaussian rationals Q(i).
struct ComplexRational {
    Rational real;
    Rational imag;

    ComplexRational() = default;
    ComplexRational(const Rational& re) : real(re) {} // NOLINT(google-explicit-constructor)
    ComplexRational(long re) : real(re) {}            // NOLINT(google-explicit-constructor)
    ComplexRational(const Rational& re, const Rational& im) : real(re), imag(im) {}

    static ComplexRational i() { return {0, 1}; }

    [[nodiscard]] bool is_zero() const { return real == 0 && imag == 0; }
    [[nodiscard]] bool is_real() const { return imag == 0; }
    [[nodiscard]] ComplexRational conj() const { return {real, -imag}; }
    [[nodiscard]] Rational norm2() const { return real * real + imag * imag; }

    ComplexRational& operator+=(const ComplexRational& o)
    {
        real += o.real;
        imag += o.imag;
        return *this;
    }
    ComplexRational& operator-=(const ComplexRational& o)
    {
        real -= o.real;
        imag -= o.imag;
        return *this;
    }
    ComplexRational& operator*=(const ComplexRational& o)
    {
        Rational re = real * o.real - imag * o.imag;
        imag = real * o.imag + imag * o.real;
        real = std::move(re);
        return *this;
    }
    ComplexRational& operator/=(const ComplexRational& o)
    {
        const Rational d = o.norm2();
        if (d == 0) {
            throw error("division by zero in Q(i)");
        }
        *this *= o.conj();
        real /= d;
        imag /= d;
        return *this;
    }

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    friend ComplexRational operator-(const ComplexRational& a) { return {-a.real, -a.imag}; }
    friend bool operator==(const ComplexRational& a, const ComplexRational& b) { return a.real == b.real && a.imag == b.imag; }

    [[nodiscard]] std::string to_string() const
    {
        if (imag == 0) {
            return real.get_str();
        }
        const std::string im = abs(imag) == 1 ? "i" : Rational(abs(imag)).get_str() + "*i";
        if (real == 0) {
            return (imag < 0 ? "-" : "") + im;
        }
        return real.get_str() + (imag < 0 ? " - " : " + ") + im;
    }
};

using ComplexMatrix = std::vector<std::vector<ComplexRational>>;

inline ComplexMatrix zero_matrix(std::size_t rows, std::size_t cols)
{
    return ComplexMatrix(rows, std::vector<ComplexRational>(cols));
}

inline ComplexMatrix conjugate_transpose(const ComplexMatrix& a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    ComplexMatrix t = zero_matrix(cols, rows);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            t[j][i] = a[i][j].conj();
        }
    }
    return t;
}

inline ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b)
{
    const std::size_t rows = a.size();
    const std::size_t inner = b.size();
    const std::size_t cols = inner == 0 ? 0 : b[0].size();
    ComplexMatrix c = zero_matrix(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k].is_zero()) {
                continue;
            }
            for (std::size_t j = 0; j < cols; ++j) {
                if (!b[k][j].is_zero()) {
                    c[i][j] += a[i][k] * b[k][j];
                }
            }
        }
    }
    return c;
}

// Exact rank by Gaussian elimination.
inline std::size_t matrix_rank(ComplexMatrix a)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c].is_zero()) {
            ++pivot;
        }
        if (pivot == rows) {
            continue;
        }
        std::swap(a[pivot], a[rank]);
        for (std::size_t i = rank + 1; i < rows; ++i) {
            if (a[i][c].is_zero()) {
                continue;
            }
            const ComplexRational f = a[i][c] / a[rank][c];
            for (std::size_t j = c; j < cols; ++j) {
                if (!a[rank][j].is_zero()) {
                    a[i][j] -= f * a[rank][j];
                }
            }
        }
        ++rank;
    }
    return rank;
}

// det(x*I - A), ascending coefficients, via similarity reduction to upper
// Hessenberg form followed by the standard three-term recurrence.
inline std::vector<ComplexRational> characteristic_polynomial(ComplexMatrix h)
{
    const std::size_t n = h.size();
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t piv = m;
        while (piv < n && h[piv][m - 1].is_zero()) {
            ++piv;
        }
        if (piv == n) {
            continue;
        }
        if (piv != m) {
            std::swap(h[piv], h[m]);
            for (std::size_t r = 0; r < n; ++r) {
                std::swap(h[r][piv], h[r][m]);
            }
        }
        for (std::size_t i = m + 1; i < n; ++i) {
            if (h[i][m - 1].is_zero()) {
                continue;
            }
            const ComplexRational u = h[i][m - 1] / h[m][m - 1];
            for (std::size_t j = 0; j < n; ++j) {
                if (!h[m][j].is_zero()) {
                    h[i][j] -= u * h[m][j];
                }
            }
            for (std::size_t r = 0; r < n; ++r) {
                if (!h[r][i].is_zero()) {
                    h[r][m] += u * h[r][i];
                }
            }
        }
    }

    // p[k] is the characteristic polynomial of the leading k x k block.
    std::vector<std::vector<ComplexRational>> p(n + 1);
    p[0] = {ComplexRational(1)};
    for (std::size_t m = 1; m <= n; ++m) {
        std::vector<ComplexRational> next(m + 1);
        for (std::size_t d = 0; d < p[m - 1].size(); ++d) {
            next[d + 1] += p[m - 1][d];
            next[d] -= h[m - 1][m - 1] * p[m - 1][d];
        }
        ComplexRational t = 1;
        for (std::size_t i = m - 1; i-- > 0;) {
            t *= h[i + 1][i];
            if (t.is_zero()) {
                break;
            }
            const ComplexRational f = h[i][m - 1] * t;
            if (f.is_zero()) {
                continue;
            }
            for (std::size_t d = 0; d < p[i].size(); ++d) {
                next[d] -= f * p[i][d];
            }
        }
        p[m] = std::move(next);
    }
    return p[n];
}

// The characteristic polynomial of a Hermitian matrix has rational
// coefficients; anything else is a caller error.
inline XPolynomial hermitian_characteristic_polynomial(const ComplexMatrix& h)
{
    const auto cp = characteristic_polynomial(h);
    std::vector<Rational> real;
    for (const auto& c : cp) {
        if (!c.is_real()) {
            throw error("characteristic polynomial has a non-real coefficient; matrix is not Hermitian");
        }
        real.push_back(c.real);
    }
    return XPolynomial(std::move(real));
}

inline bool is_hermitian(const ComplexMatrix& a)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) {
            return false;
        }
        for (std::size_t j = 0; j <= i; ++j) {
            if (!(a[i][j] == a[j][i].conj())) {
                return false;
            }
        }
    }
    return true;
}

// Isolating intervals of the distinct eigenvalues of a Hermitian matrix,
// ascending, each no wider than max_width.
inline std::vector<RootInterval> hermitian_eigenvalues(const ComplexMatrix& h, const Rational& max_width)
{
    if (!is_hermitian(h)) {
        throw error("matrix is not Hermitian");
    }
    if (h.empty()) {
        return {};
    }
    return isolate_real_roots(hermitian_characteristic_polynomial(h), max_width);
}

} // namespace hlab
