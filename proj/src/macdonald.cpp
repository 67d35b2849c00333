#include "macqk/macdonald.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "macqk/cache.hpp"

namespace macqk {

namespace {

struct Entry {
    SymFunc m_form{Basis::m()};
    SymFunc p_form{Basis::p()};
    RationalFunction norm;
};
using Table = std::map<Partition, Entry>;

SymFunc row_to_symfunc(const std::map<Partition, RationalFunction>& row, Basis b) {
    SymFunc f(b);
    for (const auto& [mu, c] : row) f.add_term(mu, c);
    return f;
}

bool strictly_dominated(const Partition& mu, const Partition& lambda) {
    if (mu == lambda) return false;
    return dominance_leq(mu, lambda).value_or(false);
}

/// Triangular orthogonalization against the (q,t) scalar product, ascending
/// through a linear extension of dominance (reverse of the enumeration
/// order). Projections are taken only against strictly dominated partitions;
/// full orthogonality of the result is a checked property, not an input.
Table build_generic(int d) {
    Table out;
    auto parts = partitions_of(d);
    const auto& m2p = TransitionCache::instance().from_monomial(Basis::p(), d);
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        const Partition& lambda = *it;
        SymFunc m_in_p = row_to_symfunc(m2p.at(lambda), Basis::p());
        SymFunc u_p = m_in_p;
        SymFunc u_m = SymFunc::element(Basis::m(), lambda);
        for (const auto& [mu, entry] : out) {
            if (!strictly_dominated(mu, lambda)) continue;
            RationalFunction c = scalar_qt(m_in_p, entry.p_form) / entry.norm;
            if (c.is_zero()) continue;
            u_p -= entry.p_form.scaled(c);
            u_m -= entry.m_form.scaled(c);
        }
        Entry e;
        e.norm = scalar_qt(u_p, u_p);
        e.m_form = std::move(u_m);
        e.p_form = std::move(u_p);
        out.emplace(lambda, std::move(e));
    }
    return out;
}

Table entries_from_m_rows(const TransitionCache::Matrix& rows) {
    Table out;
    for (const auto& [lambda, row] : rows) {
        Entry e;
        e.m_form = row_to_symfunc(row, Basis::m());
        e.p_form = convert(e.m_form, Basis::p());
        e.norm = scalar_qt(e.p_form, e.p_form);
        out.emplace(lambda, std::move(e));
    }
    return out;
}

Table specialize_table(const Table& generic, int k) {
    Table out;
    auto spec = [k](const RationalFunction& c) { return c.specialize_t(k); };
    for (const auto& [lambda, e] : generic) {
        Entry s;
        s.m_form = e.m_form.map_coefficients(spec);
        s.p_form = e.p_form.map_coefficients(spec);
        s.norm = e.norm.specialize_t(k);
        out.emplace(lambda, std::move(s));
    }
    return out;
}

/// Shared per-(degree, k) tables. Building happens outside the lock so a
/// thread already inside TransitionCache can request a table without a lock
/// order inversion; a lost race rebuilds identical data and discards it.
std::shared_ptr<const Table> table(int d, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::shared_ptr<const Table>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find({d, k});
        if (it != cache.end()) return it->second;
    }
    std::shared_ptr<const Table> built;
    if (k == 0) {
        std::string key = "macdonald_generic_d" + std::to_string(d);
        bool loaded = false;
        if (auto payload = DiskCache::instance().load(key)) {
            TransitionCache::Matrix rows = matrix_from_json(*payload);
            if (rows.size() == partitions_of(d).size()) {
                built = std::make_shared<const Table>(entries_from_m_rows(rows));
                loaded = true;
            }
        }
        if (!loaded) {
            auto t = build_generic(d);
            TransitionCache::Matrix rows;
            for (const auto& [lambda, e] : t) {
                auto& row = rows[lambda];
                for (const auto& [mu, c] : e.m_form.terms()) row[mu] = c;
            }
            DiskCache::instance().store(key, matrix_to_json(rows));
            built = std::make_shared<const Table>(std::move(t));
        }
    } else {
        auto generic = table(d, 0);
        built = std::make_shared<const Table>(specialize_table(*generic, k));
    }
    std::lock_guard<std::mutex> lock(mu);
    auto [pos, inserted] = cache.emplace(std::make_pair(d, k), built);
    (void)inserted;
    return pos->second;
}

RationalFunction one_minus(int qexp, int texp) {
    return RationalFunction(BiPoly(1) - BiPoly::monomial(qexp, texp, BigRational(1)));
}

}  // namespace

void load_macdonald_module() {
    static std::once_flag flag;
    std::call_once(flag, [] {
        TransitionCache::MacdonaldProvider provider;
        provider.p_rows = [](int degree, int k) {
            auto t = table(degree, k);
            TransitionCache::Matrix m;
            for (const auto& [lambda, e] : *t) {
                auto& row = m[lambda];
                for (const auto& [mu, c] : e.m_form.terms()) row[mu] = c;
            }
            return m;
        };
        provider.q_scale = [](const Partition& lambda, int k) { return b_lambda(lambda, k); };
        TransitionCache::instance().register_macdonald_provider(std::move(provider));
    });
}

SymFunc macdonald_P(const Partition& lambda, int k) {
    load_macdonald_module();
    auto t = table(static_cast<int>(lambda.weight()), k);
    return t->at(lambda).m_form;
}

RationalFunction b_lambda(const Partition& lambda, int k) {
    RationalFunction out(1);
    Partition conj = lambda.conjugate();
    for (const Cell& c : cells(lambda)) {
        int arm = lambda.part(c.row) - c.column;
        int leg = conj.part(c.column) - c.row;
        out *= one_minus(arm, leg + 1) / one_minus(arm + 1, leg);
    }
    return k > 0 ? out.specialize_t(k) : out;
}

SymFunc macdonald_Q(const Partition& lambda, int k) {
    return macdonald_P(lambda, k).scaled(b_lambda(lambda, k));
}

RationalFunction macdonald_norm(const Partition& lambda, int k) {
    load_macdonald_module();
    auto t = table(static_cast<int>(lambda.weight()), k);
    return t->at(lambda).norm;
}

SymFunc skew_Q(const Partition& lambda, const Partition& mu, int k) {
    load_macdonald_module();
    SymFunc out(Basis::Q(k));
    if (!lambda.contains(mu)) return out;
    int d = static_cast<int>(lambda.weight() - mu.weight());
    auto tl = table(static_cast<int>(lambda.weight()), 0);
    auto tm = table(static_cast<int>(mu.weight()), 0);
    auto tn = table(d, 0);
    SymFunc q_lambda_p = tl->at(lambda).p_form.scaled(b_lambda(lambda));
    const SymFunc& p_mu = tm->at(mu).p_form;
    for (const auto& [nu, entry] : *tn) {
        RationalFunction c = scalar_qt(q_lambda_p, multiply(p_mu, entry.p_form));
        if (k > 0) c = c.specialize_t(k);
        out.add_term(nu, c);
    }
    return out;
}

SymFunc skew_P(const Partition& lambda, const Partition& mu, int k) {
    return skew_Q(lambda, mu, k).scaled(b_lambda(mu, k) / b_lambda(lambda, k));
}

// ---------------------------------------------------------------------------
// Kernels

namespace {

LaurentPoly power_sum_window(int nvars, int first, int count, int r) {
    LaurentPoly out(nvars);
    for (int i = first + 1; i <= first + count; ++i) {
        std::vector<int> e(static_cast<std::size_t>(nvars), 0);
        e[static_cast<std::size_t>(i - 1)] = r;
        out += LaurentPoly::monomial(e, RationalFunction(1));
    }
    return out;
}

/// P_lambda expanded in the x-window (n vars) times Q_lambda (or the stated
/// partner) in the y-window, inside the combined n + m variable ring.
LaurentPoly paired_term(const SymFunc& xf, const SymFunc& yf, int n, int m) {
    LaurentPoly px = expand_finite(xf, n);
    LaurentPoly py = expand_finite(yf, m);
    if (px.is_zero() || py.is_zero()) return LaurentPoly(n + m);
    return px.embed(n + m, 0) * py.embed(n + m, n);
}

SymFunc swap_params(const SymFunc& f) {
    return f.map_coefficients([](const RationalFunction& c) { return c.swap_qt(); });
}

}  // namespace

std::pair<LaurentPoly, LaurentPoly> kernel_truncated(int d, int n, int m, KernelKind which) {
    load_macdonald_module();
    if (d > std::min(n, m)) throw std::invalid_argument("kernel_truncated: need d <= min(n, m)");
    int N = n + m;
    LaurentPoly product(N);
    LaurentPoly sum(N);
    if (which == KernelKind::Kqt) {
        // Newton recurrence for the complete functions of the alphabet
        // (1-t)/(1-q) X Y; the degree-r power sum of that alphabet is
        // (1-t^r)/(1-q^r) p_r(X) p_r(Y).
        std::vector<LaurentPoly> pr(static_cast<std::size_t>(d) + 1, LaurentPoly(N));
        for (int r = 1; r <= d; ++r) {
            RationalFunction ratio = RationalFunction(BiPoly(1) - BiPoly::t_pow(r)) /
                                     RationalFunction(BiPoly(1) - BiPoly::q_pow(r));
            pr[static_cast<std::size_t>(r)] =
                (power_sum_window(N, 0, n, r) * power_sum_window(N, n, m, r)).scaled(ratio);
        }
        std::vector<LaurentPoly> h(static_cast<std::size_t>(d) + 1, LaurentPoly(N));
        h[0] = LaurentPoly::constant(N, RationalFunction(1));
        for (int deg = 1; deg <= d; ++deg) {
            LaurentPoly acc(N);
            for (int r = 1; r <= deg; ++r) acc += pr[static_cast<std::size_t>(r)] * h[static_cast<std::size_t>(deg - r)];
            h[static_cast<std::size_t>(deg)] = acc.scaled(RationalFunction(BigRational(1, deg)));
        }
        for (int deg = 0; deg <= d; ++deg) product += h[static_cast<std::size_t>(deg)];
        for (int w = 0; w <= d; ++w)
            for (const auto& lambda : partitions_of(w))
                sum += paired_term(macdonald_P(lambda), macdonald_Q(lambda), n, m);
    } else {
        product = LaurentPoly::constant(N, RationalFunction(1));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= m; ++j) {
                std::vector<int> e(static_cast<std::size_t>(N), 0);
                e[static_cast<std::size_t>(i - 1)] = 1;
                e[static_cast<std::size_t>(n + j - 1)] = 1;
                LaurentPoly factor = LaurentPoly::constant(N, RationalFunction(1)) +
                                     LaurentPoly::monomial(e, RationalFunction(1));
                product = (product * factor).truncate_partial_degree(0, n, d);
            }
        }
        for (int w = 0; w <= d; ++w)
            for (const auto& lambda : partitions_of(w))
                sum += paired_term(swap_params(macdonald_P(lambda.conjugate())), macdonald_P(lambda), n, m);
    }
    return {product, sum};
}

// ---------------------------------------------------------------------------
// Verifications

std::string poly_digest(const LaurentPoly& p) {
    std::string s = p.to_string();
    std::ostringstream os;
    os << "fnv1a:" << std::hex << fnv1a64(s) << std::dec << " (" << p.term_count() << " terms)";
    return os.str();
}

VerificationReport verify_kernel(int d, int n, int m, KernelKind which) {
    Stopwatch sw;
    VerificationReport r;
    r.identity = "kernel";
    r.add_param("which", which == KernelKind::Kqt ? "Kqt" : "lambda1");
    r.add_param("d", std::to_string(d));
    r.add_param("n", std::to_string(n));
    r.add_param("m", std::to_string(m));
    auto [product, sum] = kernel_truncated(d, n, m, which);
    r.pass = product == sum;
    r.lhs = poly_digest(product);
    r.rhs = poly_digest(sum);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

VerificationReport verify_skew_kernel(const Partition& lambda, const Partition& mu, int d,
                                      SkewKernelKind which) {
    Stopwatch sw;
    load_macdonald_module();
    VerificationReport r;
    r.identity = "skew-kernel";
    r.add_param("which", which == SkewKernelKind::skeqKqt ? "skeqKqt" : "skewlambdaQ");
    r.add_param("lambda", lambda.to_string());
    r.add_param("mu", mu.to_string());
    r.add_param("d", std::to_string(d));

    int n = d + 2;
    int m = d + 2;
    int N = n + m;
    int wl = static_cast<int>(lambda.weight());
    int wm = static_cast<int>(mu.weight());

    auto expand_skew_x = [&](const Partition& top, const Partition& bottom, bool p_normalized,
                             bool swapped) {
        SymFunc f = p_normalized ? skew_P(top, bottom) : skew_Q(top, bottom);
        SymFunc in_m = convert(f, Basis::m());
        if (swapped) in_m = swap_params(in_m);
        return in_m;
    };

    LaurentPoly lhs(N);
    int rho_max = d + std::min(wl, wm);
    for (int w = 0; w <= rho_max; ++w) {
        for (const auto& rho : partitions_of(w)) {
            if (!rho.contains(lambda) || !rho.contains(mu)) continue;
            if (w - wl > d || w - wm > d) continue;
            SymFunc xf, yf;
            if (which == SkewKernelKind::skeqKqt) {
                xf = expand_skew_x(rho, lambda, /*p_normalized=*/true, /*swapped=*/false);
                yf = convert(skew_Q(rho, mu), Basis::m());
            } else {
                xf = expand_skew_x(rho.conjugate(), lambda.conjugate(), false, true);
                yf = convert(skew_Q(rho, mu), Basis::m());
            }
            lhs += paired_term(xf, yf, n, m);
        }
    }

    LaurentPoly kernel_part(N);
    if (which == SkewKernelKind::skeqKqt) {
        kernel_part = kernel_truncated(d, n, m, KernelKind::Kqt).first;
    } else {
        kernel_part = kernel_truncated(d, n, m, KernelKind::lambda1).first;
    }
    LaurentPoly rhs_sum(N);
    for (int w = 0; w <= std::min(wl, wm); ++w) {
        for (const auto& rho : partitions_of(w)) {
            if (!lambda.contains(rho) || !mu.contains(rho)) continue;
            SymFunc xf, yf;
            if (which == SkewKernelKind::skeqKqt) {
                xf = expand_skew_x(mu, rho, true, false);
                yf = convert(skew_Q(lambda, rho), Basis::m());
            } else {
                xf = expand_skew_x(mu.conjugate(), rho.conjugate(), false, true);
                yf = convert(skew_Q(lambda, rho), Basis::m());
            }
            rhs_sum += paired_term(xf, yf, n, m);
        }
    }
    LaurentPoly rhs = kernel_part * rhs_sum;

    lhs = lhs.truncate_partial_degree(0, n, d).truncate_partial_degree(n, m, d);
    rhs = rhs.truncate_partial_degree(0, n, d).truncate_partial_degree(n, m, d);

    r.pass = lhs == rhs;
    r.lhs = poly_digest(lhs);
    r.rhs = poly_digest(rhs);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

VerificationReport verify_lemma_parameter_swap(const Partition& lambda) {
    Stopwatch sw;
    load_macdonald_module();
    VerificationReport r;
    r.identity = "param-swap";
    r.add_param("lambda", lambda.to_string());
    SymFunc lhs = alphabet_negate_bar(swap_params(macdonald_Q(lambda)));
    SymFunc rhs = plethysm_scale(macdonald_P(lambda.conjugate()), ScaleRule::ratio_qt());
    r.pass = lhs == rhs;
    r.lhs = lhs.to_string();
    r.rhs = rhs.to_string();
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

VerificationReport verify_orthogonality(int d) {
    Stopwatch sw;
    load_macdonald_module();
    VerificationReport r;
    r.identity = "orthogonality";
    r.add_param("degree", std::to_string(d));
    auto t = table(d, 0);
    int checks = 0;
    int fails = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++fails;
    };
    for (const auto& [lambda, e] : *t) {
        // duality <P, Q> = b <P, P> = 1
        expect((e.norm * b_lambda(lambda)).is_one());
        // unitriangularity in dominance order
        expect(e.m_form.coefficient(lambda).is_one());
        for (const auto& [mu, c] : e.m_form.terms())
            expect(mu == lambda || strictly_dominated(mu, lambda));
        // the t = q specialization is the Schur element
        SymFunc at_tq = e.m_form.map_coefficients([](const RationalFunction& c) { return c.specialize_t(1); });
        expect(at_tq == convert(SymFunc::element(Basis::s(), lambda), Basis::m()));
        // pairwise orthogonality
        for (const auto& [mu, e2] : *t) {
            if (!(lambda < mu)) continue;
            expect(scalar_qt(e.p_form, e2.p_form).is_zero());
        }
    }
    r.pass = fails == 0;
    r.lhs = std::to_string(checks - fails) + "/" + std::to_string(checks) + " checks";
    r.rhs = std::to_string(checks) + "/" + std::to_string(checks) + " checks";
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

VerificationReport verify_branching(const Partition& lambda, int a, int b) {
    Stopwatch sw;
    load_macdonald_module();
    VerificationReport r;
    r.identity = "branching";
    r.add_param("lambda", lambda.to_string());
    r.add_param("a", std::to_string(a));
    r.add_param("b", std::to_string(b));
    int n = a + b;
    LaurentPoly lhs = expand_finite(macdonald_P(lambda), n);
    LaurentPoly rhs(n);
    for (int w = 0; w <= lambda.weight(); ++w) {
        for (const auto& mu : partitions_of(w)) {
            if (!lambda.contains(mu)) continue;
            LaurentPoly x = expand_finite(macdonald_P(mu), a);
            if (x.is_zero()) continue;
            LaurentPoly y = expand_finite(convert(skew_P(lambda, mu), Basis::m()), b);
            if (y.is_zero()) continue;
            rhs += x.embed(n, 0) * y.embed(n, a);
        }
    }
    r.pass = lhs == rhs;
    r.lhs = poly_digest(lhs);
    r.rhs = poly_digest(rhs);
    r.elapsed_ms = sw.elapsed_ms();
    return r;
}

void warm_caches(int d) {
    load_macdonald_module();
    for (int w = 0; w <= d; ++w) {
        for (BasisTag tag : {BasisTag::Elementary, BasisTag::Complete, BasisTag::PowerSum, BasisTag::Schur})
            TransitionCache::instance().to_monomial(Basis(tag), w);
        table(w, 0);
    }
}

}  // namespace macqk
