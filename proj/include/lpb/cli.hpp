// Command-line front end. Exit codes: 0 success, 1 usage error,
// 2 verification mismatch, 3 internal inconsistency.
#pragma once

#include "lpb/cache.hpp"
#include "lpb/errors.hpp"
#include "lpb/foliation.hpp"
#include "lpb/forms.hpp"
#include "lpb/grassmann.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace lpb::cli {

enum ExitCode : int { ok = 0, usage = 1, mismatch = 2, inconsistent = 3 };

inline std::string latex_coefficient(const BigRational& c)
{
    if (c.get_den() == 1)
        return c.get_num().get_str();
    return "\\frac{" + c.get_num().get_str() + "}{" + c.get_den().get_str() + "}";
}

// Highest power first; rational coefficients as \frac{p}{q}.
inline std::string latex_polynomial(const UniPoly& p, const std::string& var = "d")
{
    if (p.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (long k = p.degree(); k >= 0; --k) {
        const BigRational c = p.coefficient(static_cast<std::size_t>(k));
        if (sgn(c) == 0)
            continue;
        const BigRational mag = abs(c);
        out += first ? (sgn(c) < 0 ? "-" : "") : (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || mag != 1)
            out += latex_coefficient(mag) + (k == 0 ? "" : " ");
        if (k == 1)
            out += var;
        else if (k > 1)
            out += var + "^{" + std::to_string(k) + "}";
    }
    return out;
}

namespace detail {

struct Session {
    std::ostream& out;
    std::ostream& err;
    bool use_cache = true;
    bool verbose = false;
    std::unique_ptr<DegreeCache> cache;

    DegreeCache* degree_cache()
    {
        if (!use_cache)
            return nullptr;
        if (!cache)
            cache = std::make_unique<DegreeCache>(DegreeCache::default_path());
        return cache.get();
    }

    BigInt degree(int n, int d, DegreeMethod method = DegreeMethod::chern_quotient, const DegreeOptions& opts = {})
    {
        DegreeCache* c = degree_cache();
        if (c && method == DegreeMethod::chern_quotient)
            if (auto hit = c->lookup(n, d))
                return *hit;
        BigInt v = degree_lpb(d, n, method, opts);
        if (sgn(v) < 0)
            throw InconsistencyError("deg LPB(" + std::to_string(d) + ", " + std::to_string(n) + ") is negative: " +
                                     v.get_str());
        if (c)
            c->store(n, d, v);
        return v;
    }

    UniPoly closed_form(int n)
    {
        NodeLogger log;
        if (verbose)
            log = [this, n](int d, const BigInt& v) { err << "node n=" << n << " d=" << d << " degree=" << v << "\n"; };
        return lpb::closed_form(n, [this, n](int d) { return degree(n, d); }, log);
    }
};

inline DegreeMethod parse_method(const std::string& s)
{
    if (s == "quotient")
        return DegreeMethod::chern_quotient;
    if (s == "chchar")
        return DegreeMethod::ch_partition;
    return DegreeMethod::both;
}

inline int cmd_degree(Session& s, int n, int d, const std::string& method, const std::string& fault)
{
    DegreeOptions opts;
    opts.perturb_character_path = fault == "chchar";
    const BigInt v = s.degree(n, d, parse_method(method), opts);
    s.out << v << (is_formal(d) ? " (formal)" : "") << "\n";
    return ok;
}

inline int cmd_table(Session& s, int n, int dmin, int dmax, const std::string& format)
{
    if (dmin > dmax)
        throw std::invalid_argument("table: --d-min exceeds --d-max");
    std::vector<std::pair<int, BigInt>> rows;
    for (int d = dmin; d <= dmax; ++d)
        rows.emplace_back(d, s.degree(n, d));

    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [d, v] : rows)
            arr.push_back({{"n", n}, {"d", d}, {"degree", v.get_str()}, {"formal", is_formal(d)}});
        s.out << arr.dump(2) << "\n";
    } else if (format == "csv") {
        s.out << "n,d,degree,formal\n";
        for (const auto& [d, v] : rows)
            s.out << n << "," << d << "," << v << "," << (is_formal(d) ? "true" : "false") << "\n";
    } else if (format == "latex") {
        s.out << "\\begin{tabular}{rr}\n$d$ & $\\deg LPB(d," << n << ")$ \\\\\n\\hline\n";
        for (const auto& [d, v] : rows)
            s.out << d << " & " << v << (is_formal(d) ? "^{*}" : "") << " \\\\\n";
        s.out << "\\end{tabular}\n";
    } else {
        for (const auto& [d, v] : rows)
            s.out << "n=" << n << " d=" << d << " degree=" << v << (is_formal(d) ? " (formal)" : "") << "\n";
    }
    return ok;
}

inline int cmd_closed_form(Session& s, int n, const std::string& format)
{
    const UniPoly p = s.closed_form(n);
    if (format == "json") {
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : p.coefficients())
            coeffs.push_back(c.get_str());
        s.out << nlohmann::json{{"n", n}, {"degree", p.degree()}, {"coefficients", coeffs}}.dump(2) << "\n";
    } else if (format == "latex") {
        s.out << "\\deg LPB(d," << n << ") = " << latex_polynomial(p) << "\n";
    } else {
        s.out << p.to_string() << "\n";
    }
    return ok;
}

inline int cmd_verify_paper(Session& s, int n)
{
    if (n != 3 && n != 4)
        throw std::invalid_argument("verify-paper: published closed forms exist for n = 3 and n = 4 only");
    const UniPoly computed = s.closed_form(n);
    const UniPoly reference = reference_polynomial(n);
    const auto diff = compare_coefficients(computed, reference);
    if (diff.empty()) {
        s.out << "PASS\n";
        return ok;
    }
    s.out << "MISMATCH n=" << n << "\n";
    s.out << "computed:  " << computed.to_string() << "\n";
    s.out << "reference: " << reference.to_string() << "\n";
    for (const auto& m : diff)
        s.out << "d^" << m.power << ": computed " << m.computed << ", reference " << m.reference << "\n";
    return mismatch;
}

inline int cmd_check_pullback(Session& s, int n, int d, int trials, std::uint64_t seed)
{
    if (n < 2 || d < 0 || trials < 1)
        throw std::invalid_argument("check-pullback: need n >= 2, d >= 0, trials >= 1");
    std::mt19937_64 seeds(seed);
    int contraction_ok = 0;
    int integrable_ok = 0;
    int recover_ok = 0;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t form_seed = seeds();
        const std::uint64_t map_seed = seeds();
        const ProjectiveOneForm omega = random_form(2, d, form_seed);
        const LinearProjection f = random_projection(n, map_seed);
        const ProjectiveOneForm mu = pullback_linear(f, omega);
        const bool c = contract_radial(mu).is_zero();
        const bool i = is_integrable(mu);
        const auto back = recover(f, mu);
        const bool r = back && *back == omega;
        contraction_ok += c;
        integrable_ok += i;
        recover_ok += r;
        if (s.verbose || !(c && i && r))
            s.err << "trial " << t << ": contraction " << (c ? "ok" : "FAIL") << ", integrability "
                  << (i ? "ok" : "FAIL") << ", recover " << (r ? "ok" : "FAIL") << "\n";
    }
    s.out << "contract_radial zero: " << contraction_ok << "/" << trials << "\n";
    s.out << "integrability_defect zero: " << integrable_ok << "/" << trials << "\n";
    s.out << "recover exact: " << recover_ok << "/" << trials << "\n";
    const bool pass = contraction_ok == trials && integrable_ok == trials && recover_ok == trials;
    s.out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? ok : mismatch;
}

inline int cmd_selftest(Session& s)
{
    bool all = true;
    auto check = [&](const std::string& name, bool passed) {
        s.out << (passed ? "PASS " : "FAIL ") << name << "\n";
        all = all && passed;
    };

    const std::vector<long> plucker = {1, 5, 42};
    for (int n = 3; n <= 5; ++n) {
        const BigInt v = plucker_degree(GrassContext::for_projections(n));
        check("plucker G(3," + std::to_string(n + 1) + ") = " + v.get_str(),
              v == plucker[static_cast<std::size_t>(n - 3)]);
    }
    for (int n = 3; n <= 4; ++n)
        for (int d = 0; d <= 4; ++d) {
            const BigInt q = degree_lpb(d, n, DegreeMethod::chern_quotient);
            const BigInt c = degree_lpb(d, n, DegreeMethod::ch_partition);
            check("methods agree at (d=" + std::to_string(d) + ", n=" + std::to_string(n) + "): " + q.get_str(),
                  q == c);
        }
    for (int d = 0; d <= 6; ++d) {
        const long rank = lpb_invariants(d, 3).rank_ed;
        const long virt = chern_roots(ed_class(d), GrassContext::for_projections(3)).virtual_rank();
        const long vdn = static_cast<long>(dimension_vdn(2, d));
        check("rank E_" + std::to_string(d) + " = " + std::to_string(rank), rank == virt && rank == vdn);
    }
    check("dim LPB(2,3) = 17", lpb_invariants(2, 3).dim_lpb == 17);
    for (int d = 2; d <= 5; ++d)
        check("published n=3 formula at d=" + std::to_string(d),
              degree_lpb(d, 3) == reference_formula(3, d));
    check("published n=4 formula at d=2", degree_lpb(2, 4) == reference_formula(4, 2));
    s.out << (all ? "selftest PASS" : "selftest FAIL") << "\n";
    return all ? ok : mismatch;
}

} // namespace detail

// Runs one command line (without the program name).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Degrees of linear pullback components of codimension-one foliations"};
    app.name("lpb");
    app.require_subcommand(1);

    detail::Session session{out, err};
    bool no_cache = false;
    app.add_flag("--no-cache", no_cache, "Neither read nor write the degree cache ($LPB_CACHE)");
    app.add_flag("-v,--verbose", session.verbose, "Log each interpolation node or trial to stderr");

    int n = 3;
    int d = 2;
    std::string method = "quotient";
    std::string fault;
    auto* degree = app.add_subcommand("degree", "Degree of LPB(d, n)");
    degree->add_option("--n", n, "Ambient dimension (>= 3)")->required();
    degree->add_option("--d", d, "Foliation degree (>= 0)")->required();
    degree->add_option("--method", method, "Evaluation path")
        ->check(CLI::IsMember({"quotient", "chchar", "both"}))
        ->capture_default_str();
    degree->add_option("--inject-fault", fault)->check(CLI::IsMember({"chchar"}))->group("");

    int dmin = 2;
    int dmax = 10;
    std::string table_format = "plain";
    auto* table = app.add_subcommand("table", "Degrees for a range of d");
    table->add_option("--n", n, "Ambient dimension (>= 3)")->required();
    table->add_option("--d-min", dmin, "First degree")->required();
    table->add_option("--d-max", dmax, "Last degree")->required();
    table->add_option("--format", table_format)
        ->check(CLI::IsMember({"plain", "json", "csv", "latex"}))
        ->capture_default_str();

    std::string cf_format = "plain";
    auto* closed = app.add_subcommand("closed-form", "deg LPB(d, n) as a polynomial in d");
    closed->add_option("--n", n, "Ambient dimension (>= 3)")->required();
    closed->add_option("--format", cf_format)->check(CLI::IsMember({"plain", "json", "latex"}))->capture_default_str();

    auto* verify = app.add_subcommand("verify-paper", "Compare the interpolated closed form with the published one");
    verify->add_option("--n", n, "3 or 4")->required();

    int trials = 100;
    std::uint64_t seed = 1;
    auto* forms = app.add_subcommand("forms", "Projective 1-form checks");
    forms->require_subcommand(1);
    auto* pullback = forms->add_subcommand("check-pullback", "Pull back random forms and check the identities");
    pullback->add_option("--n", n, "Ambient dimension")->required();
    pullback->add_option("--d", d, "Foliation degree")->required();
    pullback->add_option("--trials", trials, "Number of random trials")->capture_default_str();
    pullback->add_option("--seed", seed, "Seed")->capture_default_str();

    auto* selftest = app.add_subcommand("selftest", "Built-in consistency checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage;
    }
    session.use_cache = !no_cache;

    try {
        if (degree->parsed())
            return detail::cmd_degree(session, n, d, method, fault);
        if (table->parsed())
            return detail::cmd_table(session, n, dmin, dmax, table_format);
        if (closed->parsed())
            return detail::cmd_closed_form(session, n, cf_format);
        if (verify->parsed())
            return detail::cmd_verify_paper(session, n);
        if (pullback->parsed())
            return detail::cmd_check_pullback(session, n, d, trials, seed);
        if (selftest->parsed())
            return detail::cmd_selftest(session);
    } catch (const InconsistencyError& e) {
        err << "internal inconsistency: " << e.what() << "\n";
        return inconsistent;
    } catch (const VerificationError& e) {
        err << "verification failed: " << e.what() << "\n";
        return mismatch;
    } catch (const std::invalid_argument& e) {
        err << "usage: " << e.what() << "\n";
        return usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return inconsistent;
    }
    err << app.help();
    return usage;
}

} // namespace lpb::cli
