// Virtual bundles built from the tautological subbundle T of a Grassmannian,
// and their Chern, Segre and Chern-character classes via Chern roots.
//
// The polynomial variables x_1..x_k are the Chern roots of T^dual, so T has
// roots -x_1..-x_k, e_i = c_i(T^dual), and e_1 is the Plucker hyperplane class.
#pragma once

#include "lpb/exact.hpp"
#include "lpb/grassmann.hpp"
#include "lpb/polyring.hpp"

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lpb {

// Immutable expression tree; copies share structure.
class VirtualBundleExpr {
public:
    enum class Kind { tautological, dual, sym, tensor, plus, minus };

    static VirtualBundleExpr tautological() { return VirtualBundleExpr(Kind::tautological, 0, {}); }

    Kind kind() const { return node_->kind; }
    // Symmetric power exponent; meaningful for Kind::sym only.
    int sym_power() const { return node_->power; }
    const std::vector<VirtualBundleExpr>& children() const { return node_->children; }

    std::string to_string() const
    {
        const auto& c = node_->children;
        switch (node_->kind) {
        case Kind::tautological: return "T";
        case Kind::dual: return "dual(" + c[0].to_string() + ")";
        case Kind::sym: return "sym(" + std::to_string(node_->power) + ", " + c[0].to_string() + ")";
        case Kind::tensor: return "tensor(" + c[0].to_string() + ", " + c[1].to_string() + ")";
        case Kind::plus: return "plus(" + c[0].to_string() + ", " + c[1].to_string() + ")";
        case Kind::minus: return "minus(" + c[0].to_string() + ", " + c[1].to_string() + ")";
        }
        return "?";
    }

    static VirtualBundleExpr make(Kind kind, int power, std::vector<VirtualBundleExpr> children)
    {
        return VirtualBundleExpr(kind, power, std::move(children));
    }

private:
    struct Node {
        Kind kind;
        int power;
        std::vector<VirtualBundleExpr> children;
    };

    VirtualBundleExpr(Kind kind, int power, std::vector<VirtualBundleExpr> children)
        : node_(std::make_shared<const Node>(Node{kind, power, std::move(children)}))
    {}

    std::shared_ptr<const Node> node_;
};

inline VirtualBundleExpr dual(const VirtualBundleExpr& a)
{
    return VirtualBundleExpr::make(VirtualBundleExpr::Kind::dual, 0, {a});
}

inline VirtualBundleExpr sym(int m, const VirtualBundleExpr& a)
{
    if (m < 0)
        throw std::invalid_argument("sym: negative exponent " + std::to_string(m));
    return VirtualBundleExpr::make(VirtualBundleExpr::Kind::sym, m, {a});
}

inline VirtualBundleExpr tensor(const VirtualBundleExpr& a, const VirtualBundleExpr& b)
{
    return VirtualBundleExpr::make(VirtualBundleExpr::Kind::tensor, 0, {a, b});
}

inline VirtualBundleExpr plus(const VirtualBundleExpr& a, const VirtualBundleExpr& b)
{
    return VirtualBundleExpr::make(VirtualBundleExpr::Kind::plus, 0, {a, b});
}

inline VirtualBundleExpr minus(const VirtualBundleExpr& a, const VirtualBundleExpr& b)
{
    return VirtualBundleExpr::make(VirtualBundleExpr::Kind::minus, 0, {a, b});
}

// Multiset of Chern roots of a virtual bundle: positive minus negative.
class RootSet {
public:
    using Multiset = std::map<LinearForm, long>;

    explicit RootSet(int nvars) : nvars_(nvars) {}

    static RootSet of(int nvars, const std::vector<LinearForm>& positive, const std::vector<LinearForm>& negative = {})
    {
        RootSet r(nvars);
        for (const auto& f : positive)
            r.add_positive(f);
        for (const auto& f : negative)
            r.add_negative(f);
        r.cancel();
        return r;
    }

    int nvars() const { return nvars_; }
    const Multiset& positive() const { return positive_; }
    const Multiset& negative() const { return negative_; }

    void add_positive(const LinearForm& f, long mult = 1) { add(positive_, f, mult); }
    void add_negative(const LinearForm& f, long mult = 1) { add(negative_, f, mult); }

    long virtual_rank() const { return count(positive_) - count(negative_); }
    bool is_actual() const { return negative_.empty(); }

    // Roots of the positive part, listed with multiplicity.
    std::vector<LinearForm> positive_list() const { return expand(positive_); }
    std::vector<LinearForm> negative_list() const { return expand(negative_); }

    RootSet dual() const
    {
        RootSet r(nvars_);
        for (const auto& [f, m] : positive_)
            r.add_positive(-f, m);
        for (const auto& [f, m] : negative_)
            r.add_negative(-f, m);
        return r;
    }

    RootSet negated() const
    {
        RootSet r(nvars_);
        r.positive_ = negative_;
        r.negative_ = positive_;
        return r;
    }

    // Identical forms on both sides cancel.
    void cancel()
    {
        for (auto it = positive_.begin(); it != positive_.end();) {
            auto jt = negative_.find(it->first);
            if (jt == negative_.end()) {
                ++it;
                continue;
            }
            const long common = std::min(it->second, jt->second);
            it->second -= common;
            jt->second -= common;
            if (jt->second == 0)
                negative_.erase(jt);
            if (it->second == 0)
                it = positive_.erase(it);
            else
                ++it;
        }
    }

    friend bool operator==(const RootSet&, const RootSet&) = default;

private:
    static void add(Multiset& s, const LinearForm& f, long mult)
    {
        if (mult <= 0)
            return;
        s[f] += mult;
    }
    static long count(const Multiset& s)
    {
        long n = 0;
        for (const auto& [f, m] : s)
            n += m;
        return n;
    }
    static std::vector<LinearForm> expand(const Multiset& s)
    {
        std::vector<LinearForm> out;
        for (const auto& [f, m] : s)
            out.insert(out.end(), static_cast<std::size_t>(m), f);
        return out;
    }

    int nvars_;
    Multiset positive_;
    Multiset negative_;
};

namespace detail {

// Sums over all size-m multisets drawn from the (distinct-index) root list.
inline void sym_roots(const std::vector<LinearForm>& base, int m, int nvars, RootSet& out)
{
    if (m == 0) {
        out.add_positive(LinearForm::zero(nvars));
        return;
    }
    if (base.empty())
        return;
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    while (true) {
        LinearForm f = LinearForm::zero(nvars);
        for (auto i : idx)
            f = f + base[i];
        out.add_positive(f);
        // Next non-decreasing index tuple.
        int pos = m - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == base.size() - 1)
            --pos;
        if (pos < 0)
            break;
        const std::size_t v = idx[static_cast<std::size_t>(pos)] + 1;
        for (int j = pos; j < m; ++j)
            idx[static_cast<std::size_t>(j)] = v;
    }
}

inline void cross(const RootSet::Multiset& a, const RootSet::Multiset& b, RootSet& out, bool positive)
{
    for (const auto& [fa, ma] : a)
        for (const auto& [fb, mb] : b) {
            if (positive)
                out.add_positive(fa + fb, ma * mb);
            else
                out.add_negative(fa + fb, ma * mb);
        }
}

} // namespace detail

inline RootSet chern_roots(const VirtualBundleExpr& expr, const GrassContext& ctx)
{
    using Kind = VirtualBundleExpr::Kind;
    const int k = ctx.k();
    const auto& c = expr.children();
    switch (expr.kind()) {
    case Kind::tautological: {
        RootSet r(k);
        for (int i = 0; i < k; ++i)
            r.add_positive(LinearForm::variable(k, i, -1));
        return r;
    }
    case Kind::dual:
        return chern_roots(c[0], ctx).dual();
    case Kind::sym: {
        const RootSet base = chern_roots(c[0], ctx);
        if (!base.is_actual())
            throw std::invalid_argument("chern_roots: symmetric power of a virtual bundle is not supported");
        RootSet r(k);
        detail::sym_roots(base.positive_list(), expr.sym_power(), k, r);
        return r;
    }
    case Kind::tensor: {
        const RootSet a = chern_roots(c[0], ctx);
        const RootSet b = chern_roots(c[1], ctx);
        RootSet r(k);
        detail::cross(a.positive(), b.positive(), r, true);
        detail::cross(a.negative(), b.negative(), r, true);
        detail::cross(a.positive(), b.negative(), r, false);
        detail::cross(a.negative(), b.positive(), r, false);
        r.cancel();
        return r;
    }
    case Kind::plus:
    case Kind::minus: {
        const RootSet a = chern_roots(c[0], ctx);
        const RootSet b = expr.kind() == Kind::plus ? chern_roots(c[1], ctx) : chern_roots(c[1], ctx).negated();
        RootSet r = a;
        for (const auto& [f, m] : b.positive())
            r.add_positive(f, m);
        for (const auto& [f, m] : b.negative())
            r.add_negative(f, m);
        r.cancel();
        return r;
    }
    }
    throw std::logic_error("chern_roots: unknown node");
}

// c = prod (1 + positive roots) * [prod (1 + negative roots)]^{-1}.
inline TruncatedPoly total_chern(const RootSet& roots, int cap)
{
    TruncatedPoly pos = TruncatedPoly::one(roots.nvars(), cap);
    for (const auto& [f, m] : roots.positive())
        pos.multiply_shifted_linear(f, m);
    if (roots.negative().empty())
        return pos;
    TruncatedPoly neg = TruncatedPoly::one(roots.nvars(), cap);
    for (const auto& [f, m] : roots.negative())
        neg.multiply_shifted_linear(f, m);
    return mul(pos, inverse_unit_series(neg));
}

// s = c^{-1}, evaluated as the total Chern class of the negated bundle.
inline TruncatedPoly total_segre(const RootSet& roots, int cap) { return total_chern(roots.negated(), cap); }

inline TruncatedPoly total_chern(const VirtualBundleExpr& expr, const GrassContext& ctx, int cap)
{
    return total_chern(chern_roots(expr, ctx), cap);
}

inline TruncatedPoly total_segre(const VirtualBundleExpr& expr, const GrassContext& ctx, int cap)
{
    return total_segre(chern_roots(expr, ctx), cap);
}

// ch_0..ch_cap, with ch_j = (sum_pos r^j - sum_neg r^j) / j!.
inline std::vector<TruncatedPoly> chern_character(const RootSet& roots, int cap)
{
    const int k = roots.nvars();
    std::vector<TruncatedPoly> ch(static_cast<std::size_t>(cap) + 1, TruncatedPoly(k, cap));
    ch[0] = TruncatedPoly::constant(k, cap, roots.virtual_rank());

    auto accumulate = [&](const RootSet::Multiset& s, long sign) {
        for (const auto& [f, m] : s) {
            TruncatedPoly pw = TruncatedPoly::one(k, cap);
            for (int j = 1; j <= cap; ++j) {
                pw = pw.times_linear(f);
                if (pw.is_zero())
                    break;
                ch[static_cast<std::size_t>(j)] += pw * BigRational(sign * m);
            }
        }
    };
    accumulate(roots.positive(), 1);
    accumulate(roots.negative(), -1);
    for (int j = 2; j <= cap; ++j)
        ch[static_cast<std::size_t>(j)] *= BigRational(1) / BigRational(factorial(j));
    return ch;
}

inline TruncatedPoly chern_character_graded(const VirtualBundleExpr& expr, const GrassContext& ctx, int j, int cap)
{
    if (j < 0 || j > cap)
        throw std::out_of_range("chern_character_graded: degree " + std::to_string(j) + " outside [0, " +
                                std::to_string(cap) + "]");
    return chern_character(chern_roots(expr, ctx), cap)[static_cast<std::size_t>(j)];
}

} // namespace lpb
