// Truncated multivariate polynomials over Q in a handful of variables.
//
// A TruncatedPoly lives in the ring Q[x_1..x_k] / (monomials of total degree
// > cap). Terms are stored sparsely in graded lexicographic order, so the
// graded pieces are contiguous and iteration order is deterministic.
#pragma once

#include "lpb/exact.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpb {

using Exponent = std::vector<int>;

inline int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

// Total degree first, then lexicographic with x_1 most significant.
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const
    {
        const int da = total_degree(a);
        const int db = total_degree(b);
        if (da != db)
            return da < db;
        return a < b;
    }
};

// All exponent vectors of nvars entries summing to degree, in graded-lex order.
inline std::vector<Exponent> monomials_of_degree(int nvars, int degree)
{
    std::vector<Exponent> out;
    if (nvars <= 0 || degree < 0)
        return out;
    Exponent e(static_cast<std::size_t>(nvars), 0);
    std::function<void(int, int)> rec = [&](int var, int left) {
        if (var == nvars - 1) {
            e[static_cast<std::size_t>(var)] = left;
            out.push_back(e);
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[static_cast<std::size_t>(var)] = a;
            rec(var + 1, left - a);
        }
    };
    rec(0, degree);
    return out;
}

// Integer linear form a_1 x_1 + ... + a_k x_k; a Chern root under the
// splitting principle.
struct LinearForm {
    std::vector<long> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::vector<long> c) : coeffs(std::move(c)) {}
    LinearForm(std::initializer_list<long> c) : coeffs(c) {}

    static LinearForm zero(int nvars) { return LinearForm(std::vector<long>(static_cast<std::size_t>(nvars), 0)); }
    static LinearForm variable(int nvars, int i, long scale = 1)
    {
        LinearForm f = zero(nvars);
        f.coeffs.at(static_cast<std::size_t>(i)) = scale;
        return f;
    }

    int nvars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const
    {
        return std::all_of(coeffs.begin(), coeffs.end(), [](long c) { return c == 0; });
    }

    LinearForm operator-() const
    {
        LinearForm r = *this;
        for (auto& c : r.coeffs)
            c = -c;
        return r;
    }

    friend LinearForm operator+(const LinearForm& a, const LinearForm& b)
    {
        if (a.nvars() != b.nvars())
            throw std::invalid_argument("LinearForm: variable count mismatch");
        LinearForm r = a;
        for (std::size_t i = 0; i < r.coeffs.size(); ++i)
            r.coeffs[i] += b.coeffs[i];
        return r;
    }

    friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
    friend bool operator==(const LinearForm&, const LinearForm&) = default;
};

class TruncatedPoly {
public:
    using TermMap = std::map<Exponent, BigRational, GradedLexLess>;

    TruncatedPoly(int nvars, int cap) : nvars_(nvars), cap_(cap)
    {
        if (nvars < 1)
            throw std::invalid_argument("TruncatedPoly: need at least one variable");
        if (cap < 0)
            throw std::invalid_argument("TruncatedPoly: negative cap");
    }

    static TruncatedPoly constant(int nvars, int cap, const BigRational& c)
    {
        TruncatedPoly p(nvars, cap);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static TruncatedPoly one(int nvars, int cap) { return constant(nvars, cap, 1); }

    static TruncatedPoly variable(int nvars, int cap, int i)
    {
        TruncatedPoly p(nvars, cap);
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(i)) = 1;
        p.add_term(e, 1);
        return p;
    }

    static TruncatedPoly from_linear(const LinearForm& f, int cap)
    {
        TruncatedPoly p(f.nvars(), cap);
        for (int i = 0; i < f.nvars(); ++i) {
            Exponent e(static_cast<std::size_t>(f.nvars()), 0);
            e[static_cast<std::size_t>(i)] = 1;
            p.add_term(e, f.coeffs[static_cast<std::size_t>(i)]);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    int cap() const { return cap_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // Adds c * x^e; terms above the cap are dropped, zero sums are erased.
    void add_term(const Exponent& e, const BigRational& c)
    {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("TruncatedPoly::add_term: exponent length mismatch");
        if (std::any_of(e.begin(), e.end(), [](int a) { return a < 0; }))
            throw std::invalid_argument("TruncatedPoly::add_term: negative exponent");
        if (sgn(c) == 0 || total_degree(e) > cap_)
            return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    BigRational coefficient(const Exponent& e) const
    {
        auto it = terms_.find(e);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    BigRational constant_term() const { return coefficient(Exponent(static_cast<std::size_t>(nvars_), 0)); }

    // -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

    bool is_homogeneous(int k) const
    {
        return std::all_of(terms_.begin(), terms_.end(), [k](const auto& t) { return total_degree(t.first) == k; });
    }

    // Same terms under a different cap (terms above a lowered cap are dropped).
    TruncatedPoly with_cap(int cap) const
    {
        TruncatedPoly r(nvars_, cap);
        for (const auto& [e, c] : terms_)
            r.add_term(e, c);
        return r;
    }

    TruncatedPoly permuted(const std::vector<int>& perm) const
    {
        TruncatedPoly r(nvars_, cap_);
        for (const auto& [e, c] : terms_) {
            Exponent f(e.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                f[static_cast<std::size_t>(perm[i])] = e[i];
            r.terms_.emplace(std::move(f), c);
        }
        return r;
    }

    // Invariance under every adjacent transposition, hence under S_k.
    bool is_symmetric() const
    {
        for (int i = 0; i + 1 < nvars_; ++i) {
            std::vector<int> perm(static_cast<std::size_t>(nvars_));
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
            if (permuted(perm) != *this)
                return false;
        }
        return true;
    }

    TruncatedPoly& operator+=(const TruncatedPoly& o)
    {
        check_compatible(o, "operator+=");
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    TruncatedPoly& operator-=(const TruncatedPoly& o)
    {
        check_compatible(o, "operator-=");
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    TruncatedPoly& operator*=(const BigRational& s)
    {
        if (sgn(s) == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    TruncatedPoly operator-() const
    {
        TruncatedPoly r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    friend TruncatedPoly operator+(TruncatedPoly a, const TruncatedPoly& b) { return a += b; }
    friend TruncatedPoly operator-(TruncatedPoly a, const TruncatedPoly& b) { return a -= b; }
    friend TruncatedPoly operator*(TruncatedPoly a, const BigRational& s) { return a *= s; }
    friend TruncatedPoly operator*(const BigRational& s, TruncatedPoly a) { return a *= s; }
    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) { return mul(a, b); }
    TruncatedPoly& operator*=(const TruncatedPoly& o) { return *this = mul(*this, o); }

    friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b)
    {
        return a.nvars_ == b.nvars_ && a.cap_ == b.cap_ && a.terms_ == b.terms_;
    }

    // Product with every term of total degree above the cap discarded.
    friend TruncatedPoly mul(const TruncatedPoly& p, const TruncatedPoly& q)
    {
        p.check_compatible(q, "mul");
        TruncatedPoly r(p.nvars_, p.cap_);
        Exponent e(static_cast<std::size_t>(p.nvars_));
        for (const auto& [ea, ca] : p.terms_) {
            const int da = total_degree(ea);
            for (const auto& [eb, cb] : q.terms_) {
                // q is graded, so once the degree overflows it stays overflowed.
                if (da + total_degree(eb) > p.cap_)
                    break;
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    // this * (1 + f)^times, truncated; the hot loop of every Chern class.
    void multiply_shifted_linear(const LinearForm& f, long times = 1)
    {
        if (f.nvars() != nvars_)
            throw std::invalid_argument("multiply_shifted_linear: variable count mismatch");
        if (f.is_zero())
            return;
        for (long t = 0; t < times; ++t) {
            TruncatedPoly prod(nvars_, cap_);
            for (const auto& [e, c] : terms_) {
                if (total_degree(e) >= cap_)
                    break;
                Exponent g = e;
                for (std::size_t i = 0; i < g.size(); ++i) {
                    if (f.coeffs[i] == 0)
                        continue;
                    ++g[i];
                    prod.add_term(g, c * f.coeffs[i]);
                    --g[i];
                }
            }
            *this += prod;
        }
    }

    // this * f, truncated.
    TruncatedPoly times_linear(const LinearForm& f) const
    {
        TruncatedPoly prod(nvars_, cap_);
        for (const auto& [e, c] : terms_) {
            if (total_degree(e) >= cap_)
                break;
            Exponent g = e;
            for (std::size_t i = 0; i < g.size(); ++i) {
                if (f.coeffs[i] == 0)
                    continue;
                ++g[i];
                prod.add_term(g, c * f.coeffs[i]);
                --g[i];
            }
        }
        return prod;
    }

    // Terms listed highest degree first, variables named x1..xk.
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            BigRational mag = abs(c);
            os << (first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + "));
            first = false;
            const bool constant = total_degree(e) == 0;
            if (constant || mag != 1)
                os << mag.get_str() << (constant ? "" : "*");
            bool first_var = true;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0)
                    continue;
                os << (first_var ? "" : "*") << "x" << (i + 1);
                if (e[i] > 1)
                    os << "^" << e[i];
                first_var = false;
            }
        }
        return os.str();
    }

private:
    void check_compatible(const TruncatedPoly& o, const char* where) const
    {
        if (o.nvars_ != nvars_ || o.cap_ != cap_)
            throw std::invalid_argument(std::string(where) + ": operands differ in variable count or cap");
    }

    int nvars_;
    int cap_;
    TermMap terms_;
};

inline TruncatedPoly product_shifted_linear(std::span<const LinearForm> factors, int nvars, int cap)
{
    TruncatedPoly p = TruncatedPoly::one(nvars, cap);
    for (const auto& f : factors)
        p.multiply_shifted_linear(f);
    return p;
}

inline TruncatedPoly product_shifted_linear(const std::vector<LinearForm>& factors, int nvars, int cap)
{
    return product_shifted_linear(std::span<const LinearForm>(factors), nvars, cap);
}

// q with p*q = 1 modulo the cap. Solved degree by degree:
// q_0 = 1, q_k = -sum_{j=1..k} p_j q_{k-j}.
inline TruncatedPoly inverse_unit_series(const TruncatedPoly& p)
{
    if (p.constant_term() != 1)
        throw std::invalid_argument("inverse_unit_series: constant term is " + p.constant_term().get_str() +
                                    ", expected 1");
    const int cap = p.cap();
    std::vector<TruncatedPoly> pg(static_cast<std::size_t>(cap) + 1, TruncatedPoly(p.nvars(), cap));
    for (const auto& [e, c] : p.terms())
        pg[static_cast<std::size_t>(total_degree(e))].add_term(e, c);

    std::vector<TruncatedPoly> qg;
    qg.reserve(static_cast<std::size_t>(cap) + 1);
    qg.push_back(TruncatedPoly::one(p.nvars(), cap));
    for (int k = 1; k <= cap; ++k) {
        TruncatedPoly acc(p.nvars(), cap);
        for (int j = 1; j <= k; ++j)
            if (!pg[static_cast<std::size_t>(j)].is_zero())
                acc -= mul(pg[static_cast<std::size_t>(j)], qg[static_cast<std::size_t>(k - j)]);
        qg.push_back(std::move(acc));
    }
    TruncatedPoly q(p.nvars(), cap);
    for (const auto& piece : qg)
        q += piece;
    return q;
}

inline TruncatedPoly graded_part(const TruncatedPoly& p, int k)
{
    if (k < 0 || k > p.cap())
        throw std::out_of_range("graded_part: degree " + std::to_string(k) + " outside [0, " +
                                std::to_string(p.cap()) + "]");
    TruncatedPoly r(p.nvars(), p.cap());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == k)
            r.add_term(e, c);
    return r;
}

inline BigRational coefficient(const TruncatedPoly& p, const Exponent& e) { return p.coefficient(e); }

// Elementary symmetric polynomial e_i(x_1..x_k); e_0 = 1.
inline TruncatedPoly elementary(int nvars, int cap, int i)
{
    TruncatedPoly r(nvars, cap);
    if (i < 0 || i > nvars)
        return r;
    std::vector<int> pick(static_cast<std::size_t>(nvars), 0);
    std::fill(pick.end() - i, pick.end(), 1);
    do {
        r.add_term(pick, 1);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return r;
}

inline TruncatedPoly power(const TruncatedPoly& p, int k)
{
    TruncatedPoly r = TruncatedPoly::one(p.nvars(), p.cap());
    for (int i = 0; i < k; ++i)
        r = mul(r, p);
    return r;
}

// Polynomial in e_1..e_k. An exponent b stands for e_1^b_1 ... e_k^b_k, whose
// degree in the x variables is sum_i i*b_i.
class ElementaryPoly {
public:
    using TermMap = std::map<Exponent, BigRational, GradedLexLess>;

    explicit ElementaryPoly(int nvars) : nvars_(nvars) {}

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    void add_term(const Exponent& b, const BigRational& c)
    {
        if (static_cast<int>(b.size()) != nvars_)
            throw std::invalid_argument("ElementaryPoly::add_term: exponent length mismatch");
        if (sgn(c) == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(b, c);
        if (!inserted) {
            it->second += c;
            if (sgn(it->second) == 0)
                terms_.erase(it);
        }
    }

    BigRational coefficient(const Exponent& b) const
    {
        auto it = terms_.find(b);
        return it == terms_.end() ? BigRational(0) : it->second;
    }

    static int weighted_degree(const Exponent& b)
    {
        int w = 0;
        for (std::size_t i = 0; i < b.size(); ++i)
            w += static_cast<int>(i + 1) * b[i];
        return w;
    }

    // Product keeping only terms of x-degree <= cap.
    ElementaryPoly times(const ElementaryPoly& o, int cap) const
    {
        ElementaryPoly r(nvars_);
        Exponent s(static_cast<std::size_t>(nvars_));
        for (const auto& [a, ca] : terms_)
            for (const auto& [b, cb] : o.terms_) {
                for (std::size_t i = 0; i < s.size(); ++i)
                    s[i] = a[i] + b[i];
                if (weighted_degree(s) <= cap)
                    r.add_term(s, ca * cb);
            }
        return r;
    }

    // Back to the x variables.
    TruncatedPoly expand(int cap) const
    {
        std::vector<TruncatedPoly> e;
        for (int i = 1; i <= nvars_; ++i)
            e.push_back(elementary(nvars_, cap, i));
        TruncatedPoly r(nvars_, cap);
        for (const auto& [b, c] : terms_) {
            if (weighted_degree(b) > cap)
                continue;
            TruncatedPoly m = TruncatedPoly::constant(nvars_, cap, c);
            for (int i = 0; i < nvars_; ++i)
                m = mul(m, power(e[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
            r += m;
        }
        return r;
    }

    friend bool operator==(const ElementaryPoly&, const ElementaryPoly&) = default;

    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [b, c] : terms_) {
            os << (first ? "" : " + ") << "(" << c.get_str() << ")";
            first = false;
            for (std::size_t i = 0; i < b.size(); ++i)
                if (b[i] > 0)
                    os << "*e" << (i + 1) << (b[i] > 1 ? "^" + std::to_string(b[i]) : "");
        }
        return os.str();
    }

private:
    int nvars_;
    TermMap terms_;
};

// Rewrites a symmetric polynomial in the elementary basis by peeling off the
// lex-leading monomial x^a (a is a partition) with e_1^{a1-a2} ... e_k^{ak}.
inline ElementaryPoly to_elementary(const TruncatedPoly& p)
{
    if (!p.is_symmetric())
        throw std::invalid_argument("to_elementary: polynomial is not symmetric");
    const int k = p.nvars();
    const int cap = p.cap();
    std::vector<TruncatedPoly> e;
    for (int i = 1; i <= k; ++i)
        e.push_back(elementary(k, cap, i));

    ElementaryPoly out(k);
    TruncatedPoly rest = p;
    while (!rest.is_zero()) {
        // Lex-largest exponent among the top-degree terms.
        const int top = rest.degree();
        const Exponent* lead = nullptr;
        for (const auto& [ex, c] : rest.terms())
            if (total_degree(ex) == top)
                lead = &ex;
        const Exponent a = *lead;
        const BigRational c = rest.coefficient(a);

        Exponent b(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            b[static_cast<std::size_t>(i)] =
                a[static_cast<std::size_t>(i)] - (i + 1 < k ? a[static_cast<std::size_t>(i) + 1] : 0);
        if (std::any_of(b.begin(), b.end(), [](int v) { return v < 0; }))
            throw std::logic_error("to_elementary: leading exponent is not a partition");

        TruncatedPoly m = TruncatedPoly::constant(k, cap, c);
        for (int i = 0; i < k; ++i)
            m = mul(m, power(e[static_cast<std::size_t>(i)], b[static_cast<std::size_t>(i)]));
        rest -= m;
        out.add_term(b, c);
    }
    return out;
}

} // namespace lpb
