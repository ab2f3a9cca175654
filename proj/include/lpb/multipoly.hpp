// Untruncated sparse polynomials over Q in variables Z_0..Z_{nvars-1}.
#pragma once

#include "lpb/exact.hpp"
#include "lpb/polyring.hpp"

#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpb {

class Poly {
public:
    using TermMap = std::map<Exponent, BigRational, GradedLexLess>;

    explicit Poly(int nvars) : nvars_(nvars)
    {
        if (nvars < 1)
            throw std::invalid_argument("Poly: need at least one variable");
    }

    static Poly constant(int nvars, const BigRational& c)
    {
        Poly p(nvars);
        p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }

    static Poly variable(int nvars, int i)
    {
        Poly p(nvars);
        Exponent e(static_cast<std::size_t>(nvars), 0);
        e.at(static_cast<std::size_t>(i)) = 1;
        p.add_term(e, 1);
        return p;
    }

    static Poly monomial(const Exponent& e, const BigRational& c = 1)
    {
        Poly p(static_cast<int>(e.size()));
        p.add_term(e, c);
        return p;
    }

    // sum_j coeffs[j] Z_j
    static Poly linear(std::span<const BigRational> coeffs)
    {
        Poly p(static_cast<int>(coeffs.size()));
        for (std::size_t j = 0; j < coeffs.size(); ++j) {
            Exponent e(coeffs.size(), 0);
            e[j] = 1;
            p.add_term(e, coeffs[j]);
        }
        return p;
    }

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }

    void add_term(const Exponent& e, const BigRational& c)
    {
        if (static_cast<int>(e.size()) != nvars_)
            throw std::invalid_argument("Poly::add_term: exponent length mismatch");
        if (sgn(c) == 0)
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

    // Zero counts as homogeneous of every degree.
    bool is_homogeneous(int k) const
    {
        for (const auto& [e, c] : terms_)
            if (total_degree(e) != k)
                return false;
        return true;
    }

    Poly derivative(int i) const
    {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) {
            const int a = e.at(static_cast<std::size_t>(i));
            if (a == 0)
                continue;
            Exponent f = e;
            --f[static_cast<std::size_t>(i)];
            r.add_term(f, c * a);
        }
        return r;
    }

    // Substitutes the i-th variable by images[i]; images share a target ring.
    Poly compose(const std::vector<Poly>& images) const
    {
        if (static_cast<int>(images.size()) != nvars_)
            throw std::invalid_argument("Poly::compose: need one image per variable");
        if (images.empty())
            throw std::invalid_argument("Poly::compose: no images");
        const int target = images[0].nvars();
        // powers[i][a] = images[i]^a, filled lazily.
        std::vector<std::vector<Poly>> powers(images.size());
        auto pw = [&](std::size_t i, int a) -> const Poly& {
            auto& cache = powers[i];
            if (cache.empty())
                cache.push_back(Poly::constant(target, 1));
            while (static_cast<int>(cache.size()) <= a)
                cache.push_back(cache.back() * images[i]);
            return cache[static_cast<std::size_t>(a)];
        };
        Poly r(target);
        for (const auto& [e, c] : terms_) {
            Poly m = Poly::constant(target, c);
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] > 0)
                    m = m * pw(i, e[i]);
            r += m;
        }
        return r;
    }

    Poly& operator+=(const Poly& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    Poly& operator-=(const Poly& o)
    {
        check(o);
        for (const auto& [e, c] : o.terms_)
            add_term(e, -c);
        return *this;
    }

    Poly& operator*=(const BigRational& s)
    {
        if (sgn(s) == 0)
            terms_.clear();
        for (auto& [e, c] : terms_)
            c *= s;
        return *this;
    }

    Poly operator-() const
    {
        Poly r = *this;
        for (auto& [e, c] : r.terms_)
            c = -c;
        return r;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const BigRational& s) { return a *= s; }
    friend Poly operator*(const BigRational& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b)
    {
        a.check(b);
        Poly r(a.nvars_);
        Exponent e(static_cast<std::size_t>(a.nvars_));
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i)
                    e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    friend bool operator==(const Poly&, const Poly&) = default;

    std::string to_string(const std::string& var = "Z") const
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
                os << (first_var ? "" : "*") << var << i;
                if (e[i] > 1)
                    os << "^" << e[i];
                first_var = false;
            }
        }
        return os.str();
    }

private:
    void check(const Poly& o) const
    {
        if (o.nvars_ != nvars_)
            throw std::invalid_argument("Poly: operands live in different rings");
    }

    int nvars_;
    TermMap terms_;
};

} // namespace lpb
