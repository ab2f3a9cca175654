// Exact scalars, dense rational linear algebra and univariate polynomials.
//
// Scalars are GMP integers and rationals. gmpxx canonicalizes the result of
// every arithmetic operation, so a BigRational is always in lowest terms with
// a positive denominator; the only way to obtain a non-canonical value is to
// build one from a raw numerator/denominator pair, which make_rational guards.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpb {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::invalid_argument("make_rational: zero denominator");
    BigRational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

inline BigInt binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline BigInt factorial(long n)
{
    if (n < 0)
        throw std::invalid_argument("factorial: negative argument");
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

// Decimal form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

using RationalVector = std::vector<BigRational>;

// Dense row-major rational matrix.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    RationalMatrix(std::initializer_list<std::initializer_list<BigRational>> init)
    {
        rows_ = init.size();
        cols_ = rows_ ? init.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_)
                throw std::invalid_argument("RationalMatrix: ragged initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static RationalMatrix identity(std::size_t n)
    {
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    BigRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const BigRational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<BigRational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const BigRational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void swap_rows(std::size_t a, std::size_t b)
    {
        if (a == b)
            return;
        std::swap_ranges(row(a).begin(), row(a).end(), row(b).begin());
    }

    RationalVector operator*(std::span<const BigRational> x) const
    {
        if (x.size() != cols_)
            throw std::invalid_argument("RationalMatrix::operator*: dimension mismatch");
        RationalVector y(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                if (sgn((*this)(r, c)) != 0)
                    y[r] += (*this)(r, c) * x[c];
        return y;
    }

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<BigRational> data_;
};

struct RowEchelon {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_columns;
};

// Gauss-Jordan elimination to reduced row echelon form. Pivots are taken in
// column order; every pivot entry is 1 and its column is otherwise zero.
inline RowEchelon reduced_row_echelon(RationalMatrix m)
{
    RowEchelon out;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && sgn(m(found, col)) == 0)
            ++found;
        if (found == m.rows())
            continue;
        m.swap_rows(found, pivot_row);

        const BigRational inv = 1 / m(pivot_row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            if (sgn(m(pivot_row, c)) != 0)
                m(pivot_row, c) *= inv;

        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == pivot_row || sgn(m(r, col)) == 0)
                continue;
            const BigRational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(pivot_row, c)) != 0)
                    m(r, c) -= factor * m(pivot_row, c);
        }
        out.pivot_columns.push_back(col);
        ++pivot_row;
    }
    out.reduced = std::move(m);
    return out;
}

inline std::size_t rank(const RationalMatrix& m) { return reduced_row_echelon(m).pivot_columns.size(); }

// Null-space basis read off the reduced echelon form: one vector per free
// column f, with entry 1 at f, zero at the other free columns, and the negated
// reduced entries at the pivot columns. For [1 1] this gives (-1, 1).
inline std::vector<RationalVector> kernel_basis(const RationalMatrix& a)
{
    const RowEchelon rre = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : rre.pivot_columns)
        is_pivot[c] = true;

    std::vector<RationalVector> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free])
            continue;
        RationalVector v(a.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < rre.pivot_columns.size(); ++i)
            v[rre.pivot_columns[i]] = -rre.reduced(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

enum class SolveStatus { unique, underdetermined, inconsistent };

struct LinearSolution {
    SolveStatus status = SolveStatus::inconsistent;
    // Present for unique and underdetermined systems; for the latter it is
    // the particular solution with every free variable set to zero.
    std::optional<RationalVector> x;
};

inline LinearSolution solve_linear(const RationalMatrix& a, std::span<const BigRational> b)
{
    if (b.size() != a.rows())
        throw std::invalid_argument("solve_linear: right-hand side has " + std::to_string(b.size()) +
                                    " entries, matrix has " + std::to_string(a.rows()) + " rows");
    RationalMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            aug(r, c) = a(r, c);
        aug(r, a.cols()) = b[r];
    }
    const RowEchelon rre = reduced_row_echelon(std::move(aug));

    LinearSolution out;
    if (!rre.pivot_columns.empty() && rre.pivot_columns.back() == a.cols())
        return out;

    RationalVector x(a.cols());
    for (std::size_t i = 0; i < rre.pivot_columns.size(); ++i)
        x[rre.pivot_columns[i]] = rre.reduced(i, a.cols());
    out.status = rre.pivot_columns.size() == a.cols() ? SolveStatus::unique : SolveStatus::underdetermined;
    out.x = std::move(x);
    return out;
}

// Dense univariate polynomial in the indeterminate d; coeffs[i] multiplies d^i.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<BigRational> coeffs) : coeffs_(coeffs) { trim(); }

    static UniPoly constant(const BigRational& c) { return UniPoly({c}); }
    // d - root
    static UniPoly linear_factor(const BigRational& root) { return UniPoly({-root, BigRational(1)}); }

    // -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    BigRational coefficient(std::size_t power) const
    {
        return power < coeffs_.size() ? coeffs_[power] : BigRational(0);
    }

    BigRational leading_coefficient() const { return coeffs_.empty() ? BigRational(0) : coeffs_.back(); }

    BigRational operator()(const BigRational& x) const
    {
        BigRational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

    UniPoly& operator+=(const UniPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator-=(const UniPoly& o)
    {
        if (o.coeffs_.size() > coeffs_.size())
            coeffs_.resize(o.coeffs_.size());
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
            coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    UniPoly& operator*=(const BigRational& s)
    {
        for (auto& c : coeffs_)
            c *= s;
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const BigRational& s) { return a *= s; }
    friend UniPoly operator*(const BigRational& s, UniPoly a) { return a *= s; }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<BigRational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(std::move(out));
    }

    friend bool operator==(const UniPoly&, const UniPoly&) = default;

    // Human-readable form, highest power first, e.g. "1/162*d^9 + 1/9*d^8 - 3".
    std::string to_string(const std::string& var = "d") const
    {
        if (is_zero())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (long p = degree(); p >= 0; --p) {
            const BigRational& c = coeffs_[static_cast<std::size_t>(p)];
            if (sgn(c) == 0)
                continue;
            BigRational mag = abs(c);
            if (first)
                os << (sgn(c) < 0 ? "-" : "");
            else
                os << (sgn(c) < 0 ? " - " : " + ");
            first = false;
            if (p == 0) {
                os << mag.get_str();
                continue;
            }
            if (mag != 1)
                os << mag.get_str() << "*";
            os << var;
            if (p > 1)
                os << "^" << p;
        }
        return os.str();
    }

private:
    void trim()
    {
        while (!coeffs_.empty() && sgn(coeffs_.back()) == 0)
            coeffs_.pop_back();
    }

    std::vector<BigRational> coeffs_;
};

using InterpolationPoint = std::pair<BigRational, BigRational>;

// Unique polynomial of degree < points.size() through all points, built in
// Newton form from divided differences and then expanded.
inline UniPoly lagrange_interpolate(std::span<const InterpolationPoint> points)
{
    if (points.empty())
        throw std::invalid_argument("lagrange_interpolate: no points");
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (points[i].first == points[j].first)
                throw std::invalid_argument("lagrange_interpolate: repeated abscissa " + points[i].first.get_str());

    std::vector<BigRational> dd(n);
    for (std::size_t i = 0; i < n; ++i)
        dd[i] = points[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / (points[i].first - points[i - level].first);

    // Horner over the Newton basis.
    UniPoly result = UniPoly::constant(dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;)
        result = result * UniPoly::linear_factor(points[i].first) + UniPoly::constant(dd[i]);
    return result;
}

inline UniPoly lagrange_interpolate(std::initializer_list<InterpolationPoint> points)
{
    return lagrange_interpolate(std::span<const InterpolationPoint>(points.begin(), points.size()));
}

} // namespace lpb
