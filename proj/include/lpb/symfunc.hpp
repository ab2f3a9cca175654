// Integer partitions and the change of basis from Chern characters to Segre
// classes: s_k(F) = sum over |lambda| = k of w_lambda * ch_lambda(F^dual).
#pragma once

#include "lpb/exact.hpp"
#include "lpb/polyring.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lpb {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        if (std::any_of(parts_.begin(), parts_.end(), [](int p) { return p < 1; }))
            throw std::invalid_argument("Partition: parts must be positive");
        if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    int weight() const
    {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }

    // m_i = number of parts equal to i.
    std::map<int, int> multiplicities() const
    {
        std::map<int, int> m;
        for (int p : parts_)
            ++m[p];
        return m;
    }

    std::string to_string() const
    {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i)
            s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// All partitions of k in reverse lexicographic order: (k), (k-1,1), ..., (1^k).
inline std::vector<Partition> partitions(int k)
{
    if (k < 0)
        throw std::invalid_argument("partitions: negative weight");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(left, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(k, k);
    return out;
}

// z_lambda = prod_i i^{m_i} m_i!, the centralizer order.
inline BigInt centralizer_order(const Partition& lambda)
{
    BigInt z = 1;
    for (const auto& [i, m] : lambda.multiplicities()) {
        BigInt ipow;
        mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
        z *= ipow * factorial(m);
    }
    return z;
}

// w_lambda = prod_i (i!)^{m_i} / (i^{m_i} m_i!). Comes from
// h_k = sum p_lambda / z_lambda together with p_j = j! ch_j.
inline BigRational weight_w(const Partition& lambda)
{
    BigRational w = 1;
    for (const auto& [i, m] : lambda.multiplicities()) {
        BigInt num;
        BigInt fi = factorial(i);
        mpz_pow_ui(num.get_mpz_t(), fi.get_mpz_t(), static_cast<unsigned long>(m));
        BigInt ipow;
        mpz_ui_pow_ui(ipow.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(m));
        w *= make_rational(num, ipow * factorial(m));
    }
    return w;
}

// Degree-k Segre class of F from the graded Chern characters ch[0..] of F^dual.
// ch[j] must be homogeneous of degree j for 1 <= j <= k.
inline TruncatedPoly segre_via_characters(std::span<const TruncatedPoly> ch, int k)
{
    if (k < 0)
        throw std::invalid_argument("segre_via_characters: negative degree");
    if (ch.size() <= static_cast<std::size_t>(k))
        throw std::invalid_argument("segre_via_characters: missing graded piece ch_" + std::to_string(ch.size()) +
                                    " (need up to ch_" + std::to_string(k) + ")");
    if (ch.empty())
        throw std::invalid_argument("segre_via_characters: no graded pieces");
    const int nvars = ch[0].nvars();
    const int cap = ch[0].cap();
    if (k > cap)
        throw std::invalid_argument("segre_via_characters: degree exceeds cap");
    for (int j = 1; j <= k; ++j)
        if (!ch[static_cast<std::size_t>(j)].is_homogeneous(j))
            throw std::invalid_argument("segre_via_characters: ch_" + std::to_string(j) + " is not of pure degree");

    TruncatedPoly s(nvars, cap);
    for (const auto& lambda : partitions(k)) {
        TruncatedPoly term = TruncatedPoly::constant(nvars, cap, weight_w(lambda));
        for (int part : lambda.parts())
            term = mul(term, ch[static_cast<std::size_t>(part)]);
        s += term;
    }
    return s;
}

inline TruncatedPoly segre_via_characters(const std::vector<TruncatedPoly>& ch, int k)
{
    return segre_via_characters(std::span<const TruncatedPoly>(ch), k);
}

} // namespace lpb
