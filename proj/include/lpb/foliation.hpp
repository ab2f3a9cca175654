// Degrees and dimensions of the linear pullback components LPB(d, n) of the
// space of codimension-one foliations of degree d on P^n.
//
// Over G = G(3, n+1) the bundle E_d sits in
//     0 -> E_d -> Sym^{d+1} T (x) T -> Sym^{d+2} T -> 0
// and deg LPB(d, n) is the integral over G of the Segre class s_g(E_d),
// g = dim G = 3(n-2). Two independent routes evaluate that class:
//   chern_quotient  s(E_d) = c(Sym^{d+2} T) / c(Sym^{d+1} T (x) T)
//   ch_partition    s_g(E_d) = sum_{|lambda|=g} w_lambda ch_lambda(E_d^dual)
// They share only the enumeration of Chern roots.
#pragma once

#include "lpb/bundles.hpp"
#include "lpb/errors.hpp"
#include "lpb/exact.hpp"
#include "lpb/grassmann.hpp"
#include "lpb/polyring.hpp"
#include "lpb/symfunc.hpp"

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpb {

struct LpbInvariants {
    int d = 0;
    int n = 0;
    long rank_ed = 0;
    long dim_lpb = 0;
    long g = 0;

    friend bool operator==(const LpbInvariants&, const LpbInvariants&) = default;
};

enum class DegreeMethod { chern_quotient, ch_partition, both };

inline std::string to_string(DegreeMethod m)
{
    switch (m) {
    case DegreeMethod::chern_quotient: return "quotient";
    case DegreeMethod::ch_partition: return "chchar";
    case DegreeMethod::both: return "both";
    }
    return "?";
}

struct DegreeOptions {
    // Fault injection: adds 1 to the ch_partition result so that the
    // cross-check in DegreeMethod::both can be exercised.
    bool perturb_character_path = false;
};

namespace detail {

inline void check_degree_args(int d, int n, const char* where)
{
    if (d < 0)
        throw std::invalid_argument(std::string(where) + ": negative foliation degree " + std::to_string(d));
    if (n < 3)
        throw std::invalid_argument(std::string(where) + ": ambient dimension must be at least 3, got " +
                                    std::to_string(n));
}

} // namespace detail

// E_d = Sym^{d+1} T (x) T - Sym^{d+2} T.
inline VirtualBundleExpr ed_class(int d)
{
    if (d < 0)
        throw std::invalid_argument("ed_class: negative foliation degree " + std::to_string(d));
    const auto t = VirtualBundleExpr::tautological();
    return minus(tensor(sym(d + 1, t), t), sym(d + 2, t));
}

// Degrees d < 2 are outside the geometric range; the integral is still defined.
inline bool is_formal(int d) { return d < 2; }

inline LpbInvariants lpb_invariants(int d, int n)
{
    detail::check_degree_args(d, n, "lpb_invariants");
    LpbInvariants inv;
    inv.d = d;
    inv.n = n;
    inv.rank_ed = static_cast<long>(d + 1) * (d + 3);
    inv.g = 3L * (n - 2);
    inv.dim_lpb = inv.g + inv.rank_ed - 1;
    return inv;
}

inline BigRational segre_integral_chern_quotient(int d, int n)
{
    detail::check_degree_args(d, n, "segre_integral_chern_quotient");
    const GrassContext ctx = GrassContext::for_projections(n);
    const int g = ctx.dimension();
    const TruncatedPoly s = total_segre(chern_roots(ed_class(d), ctx), g);
    return integrate(ctx, graded_part(s, g));
}

inline BigRational segre_integral_characters(int d, int n)
{
    detail::check_degree_args(d, n, "segre_integral_characters");
    const GrassContext ctx = GrassContext::for_projections(n);
    const int g = ctx.dimension();
    const std::vector<TruncatedPoly> ch = chern_character(chern_roots(ed_class(d), ctx).dual(), g);
    return integrate(ctx, segre_via_characters(ch, g));
}

inline BigInt degree_lpb(int d, int n, DegreeMethod method = DegreeMethod::chern_quotient,
                         const DegreeOptions& options = {})
{
    detail::check_degree_args(d, n, "degree_lpb");
    const std::string where = "deg LPB(" + std::to_string(d) + ", " + std::to_string(n) + ")";

    std::optional<BigRational> quotient;
    std::optional<BigRational> characters;
    if (method != DegreeMethod::ch_partition)
        quotient = segre_integral_chern_quotient(d, n);
    if (method != DegreeMethod::chern_quotient) {
        characters = segre_integral_characters(d, n);
        if (options.perturb_character_path)
            *characters += 1;
    }

    if (quotient && characters && *quotient != *characters)
        throw InconsistencyError(where + ": chern_quotient gives " + quotient->get_str() + ", ch_partition gives " +
                                 characters->get_str());
    const BigRational& value = quotient ? *quotient : *characters;
    if (!is_integer(value))
        throw InconsistencyError(where + ": non-integral Segre integral " + value.get_str());
    return value.get_num();
}

// Degree values at the interpolation nodes; lets callers plug in a cache.
using DegreeProvider = std::function<BigInt(int d)>;
using NodeLogger = std::function<void(int d, const BigInt& degree)>;

// deg LPB(d, n) as a polynomial in d of degree 3g: interpolated through the
// 3g+1 nodes d = 2..3g+2 and checked at the held-out node d = 3g+3.
inline UniPoly closed_form(int n, const DegreeProvider& provider = {}, const NodeLogger& log = {})
{
    if (n < 3)
        throw std::invalid_argument("closed_form: ambient dimension must be at least 3, got " + std::to_string(n));
    const int g = 3 * (n - 2);
    auto degree_at = [&](int d) {
        BigInt v = provider ? provider(d) : degree_lpb(d, n);
        if (log)
            log(d, v);
        return v;
    };

    std::vector<InterpolationPoint> points;
    for (int d = 2; d <= 3 * g + 2; ++d)
        points.emplace_back(BigRational(d), BigRational(degree_at(d)));
    UniPoly p = lagrange_interpolate(std::span<const InterpolationPoint>(points));

    const int check = 3 * g + 3;
    const BigInt expected = degree_at(check);
    const BigRational predicted = p(BigRational(check));
    if (predicted != BigRational(expected))
        throw InconsistencyError("closed_form(" + std::to_string(n) + "): held-out node d=" + std::to_string(check) +
                                 " predicts " + predicted.get_str() + " but direct computation gives " +
                                 expected.get_str());
    return p;
}

namespace detail {

// d (d+1) ... (d+4) = (d+4)! / (d-1)!
inline UniPoly rising_five()
{
    UniPoly p = UniPoly::constant(1);
    for (int i = 0; i <= 4; ++i)
        p = p * UniPoly::linear_factor(BigRational(-i));
    return p;
}

inline const std::vector<long>& n4_factor_coefficients()
{
    // Highest power (d^12) first.
    static const std::vector<long> c = {8,      192,     2176,    15360,   75090,   267552, 711859,
                                        1423716, 2119892, 2279136, 1662291, 730188, 125388};
    return c;
}

} // namespace detail

// The published closed forms for n = 3 and n = 4, expanded symbolically:
//   n = 3: 20/27 C(d+4,5) (d^2+6d+11)(d^2+2d+3)
//   n = 4: 1/839808 (d+4)!/(d-1)! P_12(d) (d+2)
inline UniPoly reference_polynomial(int n)
{
    if (n == 3) {
        UniPoly p = detail::rising_five() * make_rational(20, 27 * 120);
        p = p * UniPoly({11, 6, 1});
        p = p * UniPoly({3, 2, 1});
        return p;
    }
    if (n == 4) {
        const auto& c = detail::n4_factor_coefficients();
        std::vector<BigRational> asc(c.rbegin(), c.rend());
        UniPoly p = detail::rising_five() * make_rational(1, 839808);
        p = p * UniPoly(std::move(asc));
        p = p * UniPoly({2, 1});
        return p;
    }
    throw std::invalid_argument("reference_polynomial: only n = 3 and n = 4 are published, got n=" +
                                std::to_string(n));
}

// Direct evaluation of the published formula at one d, with the binomial and
// factorial quotient taken literally.
inline BigInt reference_formula(int n, int d)
{
    if (n != 3 && n != 4)
        throw std::invalid_argument("reference_formula: only n = 3 and n = 4 are published, got n=" +
                                    std::to_string(n));
    if (d < 0 || (n == 4 && d < 1))
        throw std::invalid_argument("reference_formula: d=" + std::to_string(d) + " outside the formula's domain");
    const BigInt dd = d;
    BigRational value;
    if (n == 3) {
        value = make_rational(20, 27) * BigRational(binomial(d + 4, 5)) * BigRational(dd * dd + 6 * dd + 11) *
                BigRational(dd * dd + 2 * dd + 3);
    } else {
        BigInt poly = 0;
        for (long c : detail::n4_factor_coefficients())
            poly = poly * dd + c;
        value = make_rational(factorial(d + 4), factorial(d - 1)) * make_rational(poly * (2 + dd), 839808);
    }
    if (!is_integer(value))
        throw InconsistencyError("reference_formula(" + std::to_string(n) + ", " + std::to_string(d) +
                                 "): non-integral value " + value.get_str());
    return value.get_num();
}

struct CoefficientMismatch {
    long power = 0;
    BigRational computed;
    BigRational reference;
};

inline std::vector<CoefficientMismatch> compare_coefficients(const UniPoly& computed, const UniPoly& reference)
{
    std::vector<CoefficientMismatch> out;
    const long top = std::max(computed.degree(), reference.degree());
    for (long p = 0; p <= top; ++p) {
        const auto a = computed.coefficient(static_cast<std::size_t>(p));
        const auto b = reference.coefficient(static_cast<std::size_t>(p));
        if (a != b)
            out.push_back({p, a, b});
    }
    return out;
}

} // namespace lpb
