/// Command-line front end: expand basis elements and verify the identity
/// catalogue over deterministic parameter sweeps.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "macqk/cache.hpp"
#include "macqk/macdonald.hpp"
#include "macqk/operators.hpp"
#include "macqk/report.hpp"
#include "macqk/symfunc.hpp"

namespace {

using namespace macqk;

Partition parse_partition(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw CLI::ValidationError("partition", "unbalanced brackets in " + text);
        s = s.substr(1, s.size() - 2);
    }
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        parts.push_back(std::stoi(item));
    }
    return Partition(parts);
}

Basis parse_basis(const std::string& name, int k) {
    if (name == "m" || name == "monomial") return Basis::m();
    if (name == "e" || name == "elementary") return Basis::e();
    if (name == "h" || name == "complete") return Basis::h();
    if (name == "p" || name == "powersum") return Basis::p();
    if (name == "s" || name == "schur") return Basis::s();
    if (name == "P" || name == "macdonaldP") return Basis::P(k);
    if (name == "Q" || name == "macdonaldQ") return Basis::Q(k);
    throw CLI::ValidationError("basis", "unknown basis " + name);
}

std::string render_symfunc(const SymFunc& f, const std::string& format) {
    if (format == "json") return f.to_json_string();
    if (format == "latex") return f.to_latex();
    return f.to_string();
}

std::string render_laurent(const LaurentPoly& p, const std::string& format) {
    if (format == "json") {
        nlohmann::json j;
        j["nvars"] = p.nvars();
        j["value"] = p.to_string();
        return j.dump();
    }
    return p.to_string();
}

struct VerifyOptions {
    int max_weight = -1;  // -1: identity default
    int weight = -1;      // exact-weight restriction when >= 0
    int n = 0;            // 0: identity default grid
    int k = 0;
    int degree = -1;
    int jobs = 1;
};

std::vector<Partition> sweep_partitions(const VerifyOptions& opt, int default_max, int max_length = -1) {
    std::vector<Partition> out;
    int lo = 0, hi = opt.max_weight >= 0 ? opt.max_weight : default_max;
    if (opt.weight >= 0) lo = hi = opt.weight;
    for (int d = lo; d <= hi; ++d)
        for (const Partition& lam : partitions_of(d, max_length)) out.push_back(lam);
    return out;
}

std::vector<std::pair<int, int>> sweep_nk(const VerifyOptions& opt, std::vector<int> ns, std::vector<int> ks) {
    if (opt.n > 0) ns = {opt.n};
    if (opt.k > 0) ks = {opt.k};
    std::vector<std::pair<int, int>> out;
    for (int n : ns)
        for (int k : ks) out.emplace_back(n, k);
    return out;
}

using Job = std::function<VerificationReport()>;

std::vector<Job> jobs_for(const std::string& identity, const VerifyOptions& opt) {
    std::vector<Job> jobs;
    if (identity == "orthogonality") {
        int hi = opt.degree >= 0 ? opt.degree : (opt.max_weight >= 0 ? opt.max_weight : 6);
        int lo = opt.weight >= 0 ? (hi = opt.weight, opt.weight) : 0;
        for (int d = lo; d <= hi; ++d) jobs.push_back([d] { return verify_orthogonality(d); });
    } else if (identity == "branching") {
        std::vector<std::pair<int, int>> splits = {{1, 1}, {1, 2}, {2, 1}, {2, 2}};
        if (opt.n > 0) splits = {{opt.n, opt.k > 0 ? opt.k : opt.n}};
        for (const Partition& lam : sweep_partitions(opt, 4))
            for (auto [a, b] : splits)
                jobs.push_back([lam, a, b] { return verify_branching(lam, a, b); });
    } else if (identity == "kernel") {
        int n = opt.n > 0 ? opt.n : 3;
        int m = opt.k > 0 ? opt.k : n;  // second alphabet size rides the k slot
        int dmax = opt.degree >= 0 ? opt.degree : 3;
        dmax = std::min(dmax, std::min(n, m));
        for (KernelKind which : {KernelKind::Kqt, KernelKind::lambda1})
            for (int d = 1; d <= dmax; ++d)
                jobs.push_back([d, n, m, which] { return verify_kernel(d, n, m, which); });
    } else if (identity == "skew-kernel") {
        int dmax = opt.degree >= 0 ? opt.degree : 2;
        std::vector<Partition> shapes = sweep_partitions(opt, 2);
        for (SkewKernelKind which : {SkewKernelKind::skeqKqt, SkewKernelKind::skewlambdaQ})
            for (const Partition& lam : shapes)
                for (const Partition& mu : shapes)
                    for (int d = 1; d <= dmax; ++d)
                        jobs.push_back([lam, mu, d, which] { return verify_skew_kernel(lam, mu, d, which); });
    } else if (identity == "param-swap") {
        for (const Partition& lam : sweep_partitions(opt, 5))
            jobs.push_back([lam] { return verify_lemma_parameter_swap(lam); });
    } else if (identity == "tqsjt" || identity == "dual-tqsjt") {
        bool dual = identity == "dual-tqsjt";
        for (auto [n, k] : sweep_nk(opt, {2, 3}, {2, 3}))
            for (const Partition& lam : sweep_partitions(opt, 4, n))
                for (int dm = 0; dm <= lam.weight(); ++dm)
                    for (const Partition& mu : partitions_of(dm, n)) {
                        if (!lam.contains(mu)) continue;
                        jobs.push_back([lam, mu, n, k, dual] {
                            return dual ? verify_dual_substitution(lam, mu, n, k)
                                        : verify_tq_substitution(lam, mu, n, k);
                        });
                    }
    } else if (identity == "thX") {
        for (auto [n, k] : sweep_nk(opt, {2, 3}, {2, 3}))
            for (const Partition& lam : sweep_partitions(opt, 4, n))
                jobs.push_back([lam, n, k] { return verify_theorem_thX(lam, n, k); });
    } else if (identity == "rect") {
        const bool explicit_grid = opt.n > 0 || opt.k > 0 || opt.max_weight >= 0 || opt.weight >= 0;
        for (auto [n, k] : sweep_nk(opt, {2, 3}, {2, 3}))
            for (const Partition& mu : sweep_partitions(opt, 2, n)) {
                if (!explicit_grid && !rect_in_default_sweep(mu, n, k)) continue;
                jobs.push_back([mu, n, k] { return verify_corollary_rect(mu, n, k); });
            }
    } else if (identity == "dyson") {
        for (auto [n, k] : sweep_nk(opt, {1, 2, 3}, {1, 2, 3}))
            jobs.push_back([n = n, k = k] { return verify_dyson(n, k); });
    } else if (identity == "eigen") {
        for (auto [n, k] : sweep_nk(opt, {2, 3}, {2, 3}))
            for (const Partition& mu : sweep_partitions(opt, 3, n))
                jobs.push_back([mu, n, k] { return verify_eigen_equation(mu, n, k); });
    } else if (identity == "eigen-distinct") {
        int hi = opt.max_weight >= 0 ? opt.max_weight : 4;
        int lo = opt.weight >= 0 ? (hi = opt.weight, opt.weight) : 0;
        for (auto [n, k] : sweep_nk(opt, {2, 3, 4, 5}, {2, 3}))
            for (int d = lo; d <= hi; ++d)
                jobs.push_back([d, n = n, k = k] { return verify_eigen_distinct(d, n, k); });
    } else if (identity == "cherednik") {
        for (auto [n, k] : sweep_nk(opt, {2, 3}, {2, 3}))
            for (const Partition& mu : sweep_partitions(opt, 3, n))
                jobs.push_back([mu, n, k] { return verify_cherednik(mu, n, k); });
    } else {
        throw CLI::ValidationError("identity", "unknown identity " + identity);
    }
    return jobs;
}

const std::vector<std::string> kIdentities = {
    "orthogonality", "branching", "kernel",  "skew-kernel", "param-swap",     "tqsjt",    "dual-tqsjt",
    "thX",           "rect",      "dyson",   "eigen",       "eigen-distinct", "cherednik"};

int run_verify(const std::string& identity, const VerifyOptions& opt, const std::string& format,
               bool stable_timing) {
    std::vector<Job> jobs;
    if (identity == "all") {
        for (const std::string& id : kIdentities) {
            std::vector<Job> part = jobs_for(id, opt);
            jobs.insert(jobs.end(), part.begin(), part.end());
        }
    } else {
        jobs = jobs_for(identity, opt);
    }
    std::vector<VerificationReport> reports = run_parallel(jobs, opt.jobs);
    std::size_t passed = 0;
    for (const VerificationReport& r : reports)
        if (r.pass) ++passed;
    if (format == "json") {
        std::cout << "[\n";
        for (std::size_t i = 0; i < reports.size(); ++i)
            std::cout << reports[i].to_json_string(stable_timing) << (i + 1 < reports.size() ? ",\n" : "\n");
        std::cout << "]\n";
    } else {
        for (const VerificationReport& r : reports) std::cout << r.to_plain_string(stable_timing) << "\n";
        std::cout << "ok: " << passed << "/" << reports.size() << " checks passed\n";
    }
    return passed == reports.size() ? 0 : 1;
}

int run_expand(const std::string& what, const std::string& lambda_text, const std::string& mu_text, int n,
               int nvars, int k, const std::string& basis_name, const std::string& transform_name,
               const std::string& format) {
    Partition lambda = parse_partition(lambda_text);
    Partition mu = parse_partition(mu_text);
    if (what == "beta") {
        if (n < 1 || k < 1) throw CLI::ValidationError("beta", "expand beta needs --n and --k");
        BetaValue b = beta(lambda, n, k);
        if (format == "json") {
            nlohmann::json j;
            j["factors"] = b.factors_string();
            j["value"] = b.value.to_string();
            std::cout << j.dump() << "\n";
        } else {
            std::cout << b.factors_string() << " = " << b.value.to_string() << "\n";
        }
        return 0;
    }
    if (what == "H") {
        if (n < 1 || k < 1) throw CLI::ValidationError("H", "expand H needs --n and --k");
        AlphabetTransform tr = AlphabetTransform::identity;
        if (transform_name == "tq") tr = AlphabetTransform::tq_scale;
        else if (transform_name == "negate-bar") tr = AlphabetTransform::negate_bar;
        else if (transform_name != "identity" && !transform_name.empty())
            throw CLI::ValidationError("transform", "unknown transform " + transform_name);
        SymFunc h = H_poly(lambda, mu, n, k, tr);
        Basis target = basis_name.empty() ? Basis::m() : parse_basis(basis_name, k);
        std::cout << render_symfunc(convert(h, target), format) << "\n";
        return 0;
    }
    SymFunc f(Basis::m());
    if (what == "P") f = macdonald_P(lambda, k);
    else if (what == "Q") f = macdonald_Q(lambda, k);
    else if (what == "skewQ") f = skew_Q(lambda, mu, k);
    else throw CLI::ValidationError("expand", "unknown object " + what);
    if (nvars > 0) {
        LaurentPoly p = expand_finite(f, nvars);
        if (basis_name == "s" || basis_name == "schur") {
            std::cout << render_symfunc(schur_peel(p, nvars), format) << "\n";
        } else if (basis_name.empty()) {
            std::cout << render_laurent(p, format) << "\n";
        } else {
            std::cout << render_symfunc(convert(symfunc_from_laurent(p, nvars, f.degree()), parse_basis(basis_name, k)),
                                        format)
                      << "\n";
        }
        return 0;
    }
    if (!basis_name.empty()) f = convert(f, parse_basis(basis_name, k));
    std::cout << render_symfunc(f, format) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symmetric-function kernel for the two-parameter orthogonal basis at t = q^k"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "plain";
    std::string cache_dir;
    bool stable_timing = false;
    bool allow_over_budget = false;
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "latex"}));
    app.add_option("--cache-dir", cache_dir, "Directory for the on-disk table cache");
    app.add_flag("--stable-timing", stable_timing, "Zero out timing fields for byte-stable reports");
    app.add_flag("--allow-over-budget", allow_over_budget, "Lift the default degree budget");

    auto* expand = app.add_subcommand("expand", "Print a basis element or derived polynomial");
    std::string what, lambda_text = "[]", mu_text = "[]", basis_name, transform_name = "identity";
    int n = 0, nvars = 0, k = 0;
    expand->add_option("what", what, "One of P, Q, skewQ, beta, H")->required();
    expand->add_option("--lambda", lambda_text, "Partition, e.g. [3,2] or []");
    expand->add_option("--mu", mu_text, "Second partition for skew / two-shape objects");
    expand->add_option("--n", n, "Alphabet size for beta / H");
    expand->add_option("--nvars", nvars, "Expand into this many variables");
    expand->add_option("--k", k, "Specialization t = q^k (0 = generic parameters)");
    expand->add_option("--basis", basis_name, "Target basis: m e h p s P Q");
    expand->add_option("--transform", transform_name, "Alphabet transform for H: identity, tq, negate-bar");

    auto* verify = app.add_subcommand("verify", "Check an identity over its sweep grid");
    std::string identity;
    VerifyOptions vopt;
    std::vector<std::string> choices = kIdentities;
    choices.push_back("all");
    verify->add_option("identity", identity, "Identity name or 'all'")
        ->required()
        ->check(CLI::IsMember(choices));
    verify->add_option("--max-weight", vopt.max_weight, "Cap the partition-weight sweep");
    verify->add_option("--weight", vopt.weight, "Restrict to one partition weight");
    verify->add_option("--n", vopt.n, "Restrict the alphabet-size grid");
    verify->add_option("--k", vopt.k, "Restrict the specialization grid");
    verify->add_option("--degree", vopt.degree, "Degree bound where the identity has one");
    verify->add_option("--jobs", vopt.jobs, "Worker threads");

    auto* cache = app.add_subcommand("cache", "Warm the transition tables and report cache status");
    int cache_degree = 4;
    cache->add_option("--degree", cache_degree, "Precompute tables for all degrees up to this");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!cache_dir.empty()) macqk::DiskCache::instance().set_directory(cache_dir);
        else macqk::DiskCache::instance().configure_from_environment();
        if (allow_over_budget) macqk::TransitionCache::instance().set_degree_cap(64);
        macqk::load_macdonald_module();

        if (expand->parsed())
            return run_expand(what, lambda_text, mu_text, n, nvars, k, basis_name, transform_name, format);
        if (verify->parsed()) return run_verify(identity, vopt, format, stable_timing);
        if (cache->parsed()) {
            macqk::warm_caches(cache_degree);
            macqk::DiskCache::Status st = macqk::DiskCache::instance().status();
            if (macqk::DiskCache::instance().enabled())
                std::cout << "cache at " << macqk::DiskCache::instance().directory() << ": " << st.files
                          << " files, " << st.bytes << " bytes\n";
            else
                std::cout << "cache disabled (no --cache-dir and no MACQK_CACHE_DIR); tables warmed in memory\n";
            return 0;
        }
    } catch (const macqk::DegreeCapExceeded& e) {
        std::cerr << "error: " << e.what() << " (rerun with --allow-over-budget)\n";
        return 3;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
