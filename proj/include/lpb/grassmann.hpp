// Chow ring of the Grassmannian G(k, m) of k-planes in C^m, modelled as
// symmetric polynomials in the Chern roots x_1..x_k of the dual tautological
// subbundle, and integration of top-degree classes.
#pragma once

#include "lpb/exact.hpp"
#include "lpb/polyring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpb {

class GrassContext {
public:
    GrassContext(int k, int m) : k_(k), m_(m)
    {
        if (k < 1 || m <= k)
            throw std::invalid_argument("GrassContext: need m > k >= 1, got k=" + std::to_string(k) +
                                        " m=" + std::to_string(m));
    }

    // G(3, n+1): linear projections from P^n onto P^2, up to change of basis.
    static GrassContext for_projections(int n) { return GrassContext(3, n + 1); }

    int k() const { return k_; }
    int m() const { return m_; }
    int dimension() const { return k_ * (m_ - k_); }
    // k rows of length m - k.
    std::vector<int> box() const { return std::vector<int>(static_cast<std::size_t>(k_), m_ - k_); }

    // Exponent of x^(box + staircase): (m-1, m-2, ..., m-k).
    Exponent point_alternant_exponent() const
    {
        Exponent e(static_cast<std::size_t>(k_));
        for (int i = 0; i < k_; ++i)
            e[static_cast<std::size_t>(i)] = m_ - 1 - i;
        return e;
    }

    friend bool operator==(const GrassContext&, const GrassContext&) = default;

private:
    int k_;
    int m_;
};

// Vandermonde prod_{i<j} (x_i - x_j) as a polynomial with the given cap.
inline TruncatedPoly vandermonde(int nvars, int cap)
{
    TruncatedPoly v = TruncatedPoly::one(nvars, cap);
    for (int i = 0; i < nvars; ++i)
        for (int j = i + 1; j < nvars; ++j) {
            LinearForm f = LinearForm::variable(nvars, i) + LinearForm::variable(nvars, j, -1);
            v = v.times_linear(f);
        }
    return v;
}

// Integral over G of a homogeneous symmetric class of degree dim G: the
// coefficient of the full-box Schur polynomial, read off as the coefficient
// of x^(box + staircase) in cls * Vandermonde. Expanding the Vandermonde as
// sum over permutations sigma of sgn(sigma) x^sigma(staircase), that
// coefficient is a signed sum of k! coefficients of cls.
inline BigRational integrate(const GrassContext& ctx, const TruncatedPoly& cls)
{
    if (cls.nvars() != ctx.k())
        throw std::invalid_argument("integrate: class has " + std::to_string(cls.nvars()) +
                                    " variables, Grassmannian needs " + std::to_string(ctx.k()));
    if (!cls.is_homogeneous(ctx.dimension()))
        throw std::invalid_argument("integrate: class is not homogeneous of degree " +
                                    std::to_string(ctx.dimension()));
    if (!cls.is_symmetric())
        throw std::invalid_argument("integrate: class is not symmetric");

    const int k = ctx.k();
    const Exponent target = ctx.point_alternant_exponent();
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);

    BigRational total = 0;
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        // Vandermonde monomial: x_i^{k-1-perm(i)}.
        Exponent e(static_cast<std::size_t>(k));
        bool valid = true;
        for (int i = 0; i < k; ++i) {
            e[static_cast<std::size_t>(i)] = target[static_cast<std::size_t>(i)] - (k - 1 - perm[static_cast<std::size_t>(i)]);
            valid = valid && e[static_cast<std::size_t>(i)] >= 0;
        }
        if (valid) {
            const BigRational c = cls.coefficient(e);
            if (inversions % 2 == 0)
                total += c;
            else
                total -= c;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Degree of G under the Plucker embedding: integral of c_1^dim.
inline BigInt plucker_degree(const GrassContext& ctx)
{
    const int g = ctx.dimension();
    const TruncatedPoly e1 = elementary(ctx.k(), g, 1);
    const BigRational value = integrate(ctx, power(e1, g));
    if (!is_integer(value))
        throw std::logic_error("plucker_degree: non-integral value " + value.get_str());
    return value.get_num();
}

} // namespace lpb
