// Projective 1-forms on P^n: omega = A_0 dZ_0 + ... + A_n dZ_n with A_i
// homogeneous of degree d+1. omega is a twisted form (an element of V_d^n)
// when its contraction with the radial field, sum A_i Z_i, vanishes, and it
// defines a foliation when omega ^ d omega = 0.
#pragma once

#include "lpb/exact.hpp"
#include "lpb/multipoly.hpp"
#include "lpb/polyring.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpb {

// Coordinates of a form: the coefficient of Z^m in A_i sits at index
// i * |monomials| + (position of m in graded-lex order).
class ProjectiveOneForm {
public:
    ProjectiveOneForm(int n, int d, std::vector<Poly> coeffs) : n_(n), d_(d), coeffs_(std::move(coeffs))
    {
        if (n < 1 || d < 0)
            throw std::invalid_argument("ProjectiveOneForm: need n >= 1 and d >= 0");
        if (coeffs_.size() != static_cast<std::size_t>(n) + 1)
            throw std::invalid_argument("ProjectiveOneForm: expected " + std::to_string(n + 1) + " coefficients, got " +
                                        std::to_string(coeffs_.size()));
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].nvars() != n + 1)
                throw std::invalid_argument("ProjectiveOneForm: coefficient A_" + std::to_string(i) +
                                            " is not a polynomial in Z_0..Z_n");
            if (!coeffs_[i].is_homogeneous(d + 1))
                throw std::invalid_argument("ProjectiveOneForm: coefficient A_" + std::to_string(i) +
                                            " is not homogeneous of degree " + std::to_string(d + 1));
        }
    }

    static ProjectiveOneForm from_coordinates(int n, int d, std::span<const BigRational> coords)
    {
        const auto mons = monomials_of_degree(n + 1, d + 1);
        if (coords.size() != mons.size() * static_cast<std::size_t>(n + 1))
            throw std::invalid_argument("ProjectiveOneForm::from_coordinates: wrong coordinate count");
        std::vector<Poly> coeffs(static_cast<std::size_t>(n) + 1, Poly(n + 1));
        for (std::size_t i = 0; i < coeffs.size(); ++i)
            for (std::size_t m = 0; m < mons.size(); ++m)
                coeffs[i].add_term(mons[m], coords[i * mons.size() + m]);
        return ProjectiveOneForm(n, d, std::move(coeffs));
    }

    int n() const { return n_; }
    int d() const { return d_; }
    const std::vector<Poly>& coefficients() const { return coeffs_; }
    const Poly& operator[](std::size_t i) const { return coeffs_.at(i); }

    RationalVector coordinates() const
    {
        const auto mons = monomials_of_degree(n_ + 1, d_ + 1);
        RationalVector v;
        v.reserve(mons.size() * coeffs_.size());
        for (const auto& a : coeffs_)
            for (const auto& m : mons)
                v.push_back(a.coefficient(m));
        return v;
    }

    bool is_zero() const
    {
        for (const auto& a : coeffs_)
            if (!a.is_zero())
                return false;
        return true;
    }

    friend bool operator==(const ProjectiveOneForm&, const ProjectiveOneForm&) = default;

    std::string to_string() const
    {
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i].is_zero())
                continue;
            os << (first ? "" : " + ") << "(" << coeffs_[i].to_string() << ") dZ" << i;
            first = false;
        }
        return first ? "0" : os.str();
    }

private:
    int n_;
    int d_;
    std::vector<Poly> coeffs_;
};

// A linear map P^n --> P^2 given by three independent linear forms F_0, F_1, F_2.
class LinearProjection {
public:
    explicit LinearProjection(RationalMatrix rows) : rows_(std::move(rows))
    {
        if (rows_.rows() != 3 || rows_.cols() < 3)
            throw std::invalid_argument("LinearProjection: need a 3 x (n+1) matrix with n >= 2");
        if (rank(rows_) != 3)
            throw std::invalid_argument("LinearProjection: rows are linearly dependent");
    }

    // [Z_0 : Z_1 : Z_2] on P^n.
    static LinearProjection coordinate(int n)
    {
        RationalMatrix m(3, static_cast<std::size_t>(n) + 1);
        for (std::size_t i = 0; i < 3; ++i)
            m(i, i) = 1;
        return LinearProjection(std::move(m));
    }

    int ambient_n() const { return static_cast<int>(rows_.cols()) - 1; }
    const RationalMatrix& matrix() const { return rows_; }

    Poly component(std::size_t i) const { return Poly::linear(rows_.row(i)); }

    std::vector<Poly> components() const { return {component(0), component(1), component(2)}; }

private:
    RationalMatrix rows_;
};

// iota_R(omega) = sum_i A_i Z_i.
inline Poly contract_radial(const ProjectiveOneForm& omega)
{
    const int nv = omega.n() + 1;
    Poly r(nv);
    for (int i = 0; i < nv; ++i)
        r += omega[static_cast<std::size_t>(i)] * Poly::variable(nv, i);
    return r;
}

inline bool is_twisted_form(const ProjectiveOneForm& omega) { return contract_radial(omega).is_zero(); }

struct IntegrabilityDefect {
    int i = 0;
    int j = 0;
    int k = 0;
    Poly value;
};

// For each i < j < k:
//   A_i (d_j A_k - d_k A_j) + A_j (d_k A_i - d_i A_k) + A_k (d_i A_j - d_j A_i),
// the (i, j, k) coefficient of omega ^ d omega.
inline std::vector<IntegrabilityDefect> integrability_defect(const ProjectiveOneForm& omega)
{
    const int nv = omega.n() + 1;
    // partial[a][b] = d A_a / d Z_b
    std::vector<std::vector<Poly>> partial(static_cast<std::size_t>(nv));
    for (int a = 0; a < nv; ++a)
        for (int b = 0; b < nv; ++b)
            partial[static_cast<std::size_t>(a)].push_back(omega[static_cast<std::size_t>(a)].derivative(b));
    auto D = [&](int a, int b) -> const Poly& { return partial[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; };
    auto A = [&](int a) -> const Poly& { return omega[static_cast<std::size_t>(a)]; };

    std::vector<IntegrabilityDefect> out;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            for (int k = j + 1; k < nv; ++k) {
                Poly v = A(i) * (D(k, j) - D(j, k)) + A(j) * (D(i, k) - D(k, i)) + A(k) * (D(j, i) - D(i, j));
                out.push_back({i, j, k, std::move(v)});
            }
    return out;
}

inline bool is_integrable(const ProjectiveOneForm& omega)
{
    for (const auto& defect : integrability_defect(omega))
        if (!defect.value.is_zero())
            return false;
    return true;
}

// F^* omega = sum_i B_i(F) dF_i, so the coefficient of dZ_j is sum_i F_ij B_i(F).
inline ProjectiveOneForm pullback_linear(const LinearProjection& f, const ProjectiveOneForm& omega)
{
    if (omega.n() != 2)
        throw std::invalid_argument("pullback_linear: omega must be a form on P^2");
    const int n = f.ambient_n();
    const std::vector<Poly> comps = f.components();
    std::vector<Poly> composed;
    for (std::size_t i = 0; i < 3; ++i)
        composed.push_back(omega[i].compose(comps));

    std::vector<Poly> coeffs(static_cast<std::size_t>(n) + 1, Poly(n + 1));
    for (std::size_t j = 0; j < coeffs.size(); ++j)
        for (std::size_t i = 0; i < 3; ++i)
            if (sgn(f.matrix()(i, j)) != 0)
                coeffs[j] += composed[i] * f.matrix()(i, j);
    return ProjectiveOneForm(n, omega.d(), std::move(coeffs));
}

// Matrix of the radial contraction S_{d+1} (x) S_1 -> S_{d+2} in the
// coordinates of ProjectiveOneForm (columns) and graded-lex monomials of
// degree d+2 (rows).
inline RationalMatrix contraction_matrix(int n, int d)
{
    const int nv = n + 1;
    const auto src = monomials_of_degree(nv, d + 1);
    const auto dst = monomials_of_degree(nv, d + 2);
    std::map<Exponent, std::size_t, GradedLexLess> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r)
        row_of.emplace(dst[r], r);

    RationalMatrix m(dst.size(), src.size() * static_cast<std::size_t>(nv));
    for (int i = 0; i < nv; ++i)
        for (std::size_t s = 0; s < src.size(); ++s) {
            Exponent e = src[s];
            ++e[static_cast<std::size_t>(i)];
            m(row_of.at(e), static_cast<std::size_t>(i) * src.size() + s) = 1;
        }
    return m;
}

// dim V_d^n = (n+1) C(n+d+1, n) - C(n+d+2, n), by exactness of
// 0 -> V_d^n -> S_{d+1} (x) S_1 -> S_{d+2} -> 0.
inline std::int64_t dimension_vdn(int n, int d)
{
    if (n < 1 || d < 0)
        throw std::invalid_argument("dimension_vdn: need n >= 1 and d >= 0");
    const BigInt v = BigInt(n + 1) * binomial(n + d + 1, n) - binomial(n + d + 2, n);
    if (!v.fits_slong_p())
        throw std::overflow_error("dimension_vdn: value exceeds 64 bits");
    return v.get_si();
}

namespace detail {

// Integer in [-bound, bound].
inline long small_int(std::mt19937_64& gen, long bound)
{
    return static_cast<long>(gen() % static_cast<std::uint64_t>(2 * bound + 1)) - bound;
}

} // namespace detail

// A deterministic element of V_d^n: a combination of the kernel basis of the
// contraction map with coefficients in [-9, 9].
inline ProjectiveOneForm random_form(int n, int d, std::uint64_t seed)
{
    if (n < 2 || d < 0)
        throw std::invalid_argument("random_form: need n >= 2 and d >= 0");
    std::mt19937_64 gen(seed);
    const auto basis = kernel_basis(contraction_matrix(n, d));
    RationalVector v(basis.empty() ? 0 : basis.front().size());
    if (basis.empty())
        v.resize(static_cast<std::size_t>(n + 1) * monomials_of_degree(n + 1, d + 1).size());
    for (const auto& b : basis) {
        const long c = detail::small_int(gen, 9);
        if (c == 0)
            continue;
        for (std::size_t i = 0; i < v.size(); ++i)
            if (sgn(b[i]) != 0)
                v[i] += c * b[i];
    }
    return ProjectiveOneForm::from_coordinates(n, d, v);
}

// A deterministic full-rank projection with entries in [-9, 9].
inline LinearProjection random_projection(int n, std::uint64_t seed)
{
    if (n < 2)
        throw std::invalid_argument("random_projection: need n >= 2");
    std::mt19937_64 gen(seed);
    while (true) {
        RationalMatrix m(3, static_cast<std::size_t>(n) + 1);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t c = 0; c < m.cols(); ++c)
                m(r, c) = detail::small_int(gen, 9);
        if (rank(m) == 3)
            return LinearProjection(std::move(m));
    }
}

// Matrix of omega |-> F^* omega from S_{d+1}(X_0..X_2)^3 to the form
// coordinates on P^n.
inline RationalMatrix pullback_matrix(const LinearProjection& f, int d)
{
    const int n = f.ambient_n();
    const auto src = monomials_of_degree(3, d + 1);
    const std::size_t rows = static_cast<std::size_t>(n + 1) * monomials_of_degree(n + 1, d + 1).size();
    RationalMatrix m(rows, 3 * src.size());
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t s = 0; s < src.size(); ++s) {
            std::vector<Poly> coeffs(3, Poly(3));
            coeffs[i] = Poly::monomial(src[s]);
            const auto image = pullback_linear(f, ProjectiveOneForm(2, d, std::move(coeffs))).coordinates();
            for (std::size_t r = 0; r < rows; ++r)
                m(r, i * src.size() + s) = image[r];
        }
    return m;
}

// The unique omega in V_d^2 with F^* omega = mu, or nullopt when mu is not a
// pullback along F. Solved as one exact linear system: pullback equations
// stacked on the radial-contraction equations for omega.
inline std::optional<ProjectiveOneForm> recover(const LinearProjection& f, const ProjectiveOneForm& mu)
{
    if (mu.n() != f.ambient_n())
        throw std::invalid_argument("recover: form lives on P^" + std::to_string(mu.n()) + ", projection on P^" +
                                    std::to_string(f.ambient_n()));
    const int d = mu.d();
    const RationalMatrix pull = pullback_matrix(f, d);
    const RationalMatrix contraction = contraction_matrix(2, d);

    RationalMatrix system(pull.rows() + contraction.rows(), pull.cols());
    for (std::size_t r = 0; r < pull.rows(); ++r)
        for (std::size_t c = 0; c < pull.cols(); ++c)
            system(r, c) = pull(r, c);
    for (std::size_t r = 0; r < contraction.rows(); ++r)
        for (std::size_t c = 0; c < contraction.cols(); ++c)
            system(pull.rows() + r, c) = contraction(r, c);

    RationalVector rhs = mu.coordinates();
    rhs.resize(system.rows());

    const LinearSolution sol = solve_linear(system, rhs);
    if (sol.status == SolveStatus::inconsistent)
        return std::nullopt;
    if (sol.status == SolveStatus::underdetermined)
        throw std::logic_error("recover: pullback along a full-rank projection is not injective");
    return ProjectiveOneForm::from_coordinates(2, d, *sol.x);
}

} // namespace lpb
