#include "macqk/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "json.hpp"
#include "macqk/cache.hpp"

namespace macqk {

namespace {

std::vector<int> padded(const Partition& lambda, int n) {
    std::vector<int> v = lambda.parts();
    v.resize(static_cast<std::size_t>(n), 0);
    return v;
}

LaurentPoly power_sum_nvars(int n, int r) {
    LaurentPoly out(n);
    for (int i = 1; i <= n; ++i) {
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i - 1)] = r;
        out += LaurentPoly::monomial(e, RationalFunction(1));
    }
    return out;
}

/// Sum of the distinct permutations of lambda's exponent vector.
LaurentPoly monomial_sym(const Partition& lambda, int n) {
    LaurentPoly out(n);
    if (lambda.length() > n) return out;
    std::vector<int> e = padded(lambda, n);
    std::sort(e.begin(), e.end());
    do {
        out += LaurentPoly::monomial(e, RationalFunction(1));
    } while (std::next_permutation(e.begin(), e.end()));
    return out;
}

std::vector<LaurentPoly> elementary_table(int n, int maxdeg) {
    std::vector<LaurentPoly> e(static_cast<std::size_t>(maxdeg) + 1, LaurentPoly(n));
    e[0] = LaurentPoly::constant(n, RationalFunction(1));
    for (int v = 1; v <= n; ++v) {
        LaurentPoly xv = LaurentPoly::variable(n, v);
        for (int m = std::min(maxdeg, v); m >= 1; --m) e[static_cast<std::size_t>(m)] += e[static_cast<std::size_t>(m - 1)] * xv;
    }
    return e;
}

RationalFunction one_minus_q_pow(int r) { return RationalFunction(BiPoly(1) - BiPoly::q_pow(r)); }
RationalFunction one_minus_t_pow(int r) { return RationalFunction(BiPoly(1) - BiPoly::t_pow(r)); }

/// z_lambda prod_i (1 - q^{lambda_i}) / (1 - t^{lambda_i}).
RationalFunction power_sum_norm_qt(const Partition& lambda) {
    RationalFunction v{BigRational(z_lambda(lambda))};
    for (int r : lambda.parts()) v *= one_minus_q_pow(r) / one_minus_t_pow(r);
    return v;
}

int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

bool lex_greater_parts(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

void require_symmetric(const LaurentPoly& p, int n) {
    for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> perm(static_cast<std::size_t>(n));
        for (int j = 0; j < n; ++j) perm[static_cast<std::size_t>(j)] = j;
        std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
        if (p.permute(perm) != p) throw std::domain_error("symfunc: polynomial is not symmetric");
    }
}

}  // namespace

// ---------------------------------------------------------------------------
// Basis

std::string Basis::tag_string() const {
    switch (tag) {
        case BasisTag::Monomial: return "Monomial";
        case BasisTag::Elementary: return "Elementary";
        case BasisTag::Complete: return "Complete";
        case BasisTag::PowerSum: return "PowerSum";
        case BasisTag::Schur: return "Schur";
        case BasisTag::MacdonaldP: return "MacdonaldP";
        case BasisTag::MacdonaldQ: return "MacdonaldQ";
    }
    return "?";
}

std::string Basis::to_string() const {
    std::string s = tag_string();
    if (is_macdonald() && k > 0) s += "[k=" + std::to_string(k) + "]";
    return s;
}

char Basis::symbol() const {
    switch (tag) {
        case BasisTag::Monomial: return 'm';
        case BasisTag::Elementary: return 'e';
        case BasisTag::Complete: return 'h';
        case BasisTag::PowerSum: return 'p';
        case BasisTag::Schur: return 'S';
        case BasisTag::MacdonaldP: return 'P';
        case BasisTag::MacdonaldQ: return 'Q';
    }
    return '?';
}

namespace {

Basis basis_from_tag_string(const std::string& s, int k) {
    if (s == "Monomial") return Basis::m();
    if (s == "Elementary") return Basis::e();
    if (s == "Complete") return Basis::h();
    if (s == "PowerSum") return Basis::p();
    if (s == "Schur") return Basis::s();
    if (s == "MacdonaldP") return Basis::P(k);
    if (s == "MacdonaldQ") return Basis::Q(k);
    throw std::invalid_argument("unknown basis tag: " + s);
}

}  // namespace

// ---------------------------------------------------------------------------
// SymFunc

SymFunc SymFunc::one(Basis b) {
    SymFunc f(b);
    f.add_term(Partition(), RationalFunction(1));
    return f;
}

SymFunc SymFunc::element(Basis b, const Partition& lambda) {
    SymFunc f(b);
    f.add_term(lambda, RationalFunction(1));
    return f;
}

RationalFunction SymFunc::coefficient(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void SymFunc::add_term(const Partition& lambda, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(lambda);
    if (it == terms_.end()) {
        terms_.emplace(lambda, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

int SymFunc::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.weight());
}

SymFunc SymFunc::homogeneous_component(int d) const {
    SymFunc out(basis_);
    for (const auto& [lambda, c] : terms_)
        if (lambda.weight() == d) out.terms_.emplace(lambda, c);
    return out;
}

std::vector<int> SymFunc::weights() const {
    std::vector<int> out;
    for (const auto& [lambda, c] : terms_) {
        int w = static_cast<int>(lambda.weight());
        if (out.empty() || out.back() != w) out.push_back(w);
    }
    return out;
}

SymFunc SymFunc::operator-() const {
    SymFunc out(basis_);
    for (const auto& [lambda, c] : terms_) out.terms_.emplace(lambda, -c);
    return out;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("SymFunc: mixed bases in addition");
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, c);
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    if (basis_ != other.basis_) throw std::invalid_argument("SymFunc: mixed bases in subtraction");
    for (const auto& [lambda, c] : other.terms_) add_term(lambda, -c);
    return *this;
}

SymFunc SymFunc::scaled(const RationalFunction& c) const {
    SymFunc out(basis_);
    if (c.is_zero()) return out;
    for (const auto& [lambda, v] : terms_) out.terms_.emplace(lambda, v * c);
    return out;
}

SymFunc SymFunc::map_coefficients(const std::function<RationalFunction(const RationalFunction&)>& f) const {
    SymFunc out(basis_);
    for (const auto& [lambda, v] : terms_) out.add_term(lambda, f(v));
    return out;
}

namespace {

std::vector<std::pair<Partition, RationalFunction>> display_sorted(
    const std::map<Partition, RationalFunction>& terms) {
    std::vector<std::pair<Partition, RationalFunction>> v(terms.begin(), terms.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        if (a.first.weight() != b.first.weight()) return a.first.weight() > b.first.weight();
        return lex_greater_parts(a.first.parts(), b.first.parts());
    });
    return v;
}

}  // namespace

std::string SymFunc::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, c] : display_sorted(terms_)) {
        if (!first) out << " + ";
        first = false;
        if (lambda.is_empty()) {
            // The empty-indexed element is the unit; render the bare coefficient.
            std::string cs = c.to_string();
            bool bare = cs.find(' ') == std::string::npos;
            out << (bare ? cs : "(" + cs + ")");
            continue;
        }
        std::string elem = std::string(1, basis_.symbol()) + lambda.to_string();
        if (c.is_one()) {
            out << elem;
        } else if (c == RationalFunction(-1)) {
            out << "-" << elem;
        } else {
            std::string cs = c.to_string();
            bool bare = cs.find(' ') == std::string::npos;
            out << (bare ? cs : "(" + cs + ")") << "*" << elem;
        }
    }
    return out.str();
}

namespace {

std::string latex_exponents(const std::string& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '^') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j - i - 1 >= 2) {
                out += "^{" + s.substr(i + 1, j - i - 1) + "}";
                i = j - 1;
                continue;
            }
        }
        out += s[i];
    }
    return out;
}

std::string latex_poly(const BiPoly& p) {
    std::string s = p.to_string();
    std::string no_star;
    for (char c : s) no_star += (c == '*') ? ' ' : c;
    return latex_exponents(no_star);
}

std::string latex_coeff(const RationalFunction& c) {
    if (c.is_polynomial()) {
        std::string s = latex_poly(c.numerator());
        if (s.find(' ') != std::string::npos) return "\\left(" + s + "\\right)";
        return s;
    }
    return "\\frac{" + latex_poly(c.numerator()) + "}{" + latex_poly(c.denominator()) + "}";
}

}  // namespace

std::string SymFunc::to_latex() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [lambda, c] : display_sorted(terms_)) {
        if (!first) out << " + ";
        first = false;
        std::ostringstream elem;
        elem << basis_.symbol() << "_{";
        const auto& parts = lambda.parts();
        for (std::size_t i = 0; i < parts.size(); ++i) elem << (i ? "," : "") << parts[i];
        elem << "}";
        if (c.is_one()) {
            out << elem.str();
        } else if (c == RationalFunction(-1)) {
            out << "-" << elem.str();
        } else {
            out << latex_coeff(c) << "\\," << elem.str();
        }
    }
    return out.str();
}

std::string SymFunc::to_json_string() const {
    nlohmann::ordered_json j;
    j["basis"] = basis_.tag_string();
    if (basis_.k > 0) j["k"] = basis_.k;
    std::vector<std::pair<Partition, RationalFunction>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return lex_greater_parts(a.first.parts(), b.first.parts()); });
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [lambda, c] : v) {
        nlohmann::ordered_json term;
        term["partition"] = lambda.parts();
        term["coeff"] = c.to_string();
        arr.push_back(term);
    }
    j["terms"] = arr;
    return j.dump();
}

SymFunc SymFunc::from_json_string(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    int k = j.contains("k") ? j["k"].get<int>() : 0;
    SymFunc f(basis_from_tag_string(j["basis"].get<std::string>(), k));
    for (const auto& term : j["terms"]) {
        Partition lambda(term["partition"].get<std::vector<int>>());
        f.add_term(lambda, RationalFunction::parse(term["coeff"].get<std::string>()));
    }
    return f;
}

// ---------------------------------------------------------------------------
// TransitionCache

struct TransitionCache::Impl {
    std::recursive_mutex mu;
    struct Key {
        int tag;
        int k;
        int degree;
        bool operator<(const Key& o) const {
            return std::tie(tag, k, degree) < std::tie(o.tag, o.k, o.degree);
        }
    };
    std::map<Key, std::unique_ptr<Matrix>> to_m;
    std::map<Key, std::unique_ptr<Matrix>> from_m;
    std::optional<MacdonaldProvider> provider;
    int cap = 8;
};

TransitionCache::TransitionCache() : impl_(new Impl) {}

TransitionCache& TransitionCache::instance() {
    static TransitionCache cache;
    return cache;
}

void TransitionCache::register_macdonald_provider(MacdonaldProvider provider) {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    impl_->provider = std::move(provider);
}

bool TransitionCache::has_macdonald_provider() const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    return impl_->provider.has_value();
}

void TransitionCache::set_degree_cap(int cap) {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    impl_->cap = cap;
}

int TransitionCache::degree_cap() const {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    return impl_->cap;
}

namespace {

TransitionCache::Matrix build_classical_to_m(BasisTag tag, int d) {
    TransitionCache::Matrix out;
    auto parts = partitions_of(d);
    if (d == 0) {
        out[Partition()][Partition()] = RationalFunction(1);
        return out;
    }
    if (tag == BasisTag::Monomial) {
        for (const auto& lambda : parts) out[lambda][lambda] = RationalFunction(1);
        return out;
    }
    int nv = d;
    std::vector<LaurentPoly> h, e;
    std::vector<LaurentPoly> psum(static_cast<std::size_t>(d) + 1, LaurentPoly(nv));
    if (tag == BasisTag::Complete) {
        std::vector<Letter> letters;
        for (int i = 1; i <= nv; ++i) letters.push_back({i, RationalFunction(1)});
        h = complete_functions(nv, d, letters);
    } else if (tag == BasisTag::Elementary) {
        e = elementary_table(nv, d);
    } else if (tag == BasisTag::PowerSum) {
        for (int r = 1; r <= d; ++r) psum[static_cast<std::size_t>(r)] = power_sum_nvars(nv, r);
    }
    for (const auto& lambda : parts) {
        LaurentPoly L(nv);
        switch (tag) {
            case BasisTag::PowerSum:
            case BasisTag::Complete:
            case BasisTag::Elementary: {
                const auto& table = (tag == BasisTag::PowerSum) ? psum : (tag == BasisTag::Complete ? h : e);
                L = LaurentPoly::constant(nv, RationalFunction(1));
                for (int r : lambda.parts()) L *= table[static_cast<std::size_t>(r)];
                break;
            }
            case BasisTag::Schur:
                L = s_tilde(padded(lambda, nv));
                break;
            default:
                break;
        }
        auto& row = out[lambda];
        for (const auto& mu : parts) {
            RationalFunction c = L.coefficient(padded(mu, nv));
            if (!c.is_zero()) row[mu] = c;
        }
    }
    return out;
}

TransitionCache::Matrix invert_rows(const TransitionCache::Matrix& rows, int d) {
    auto idx = partitions_of(d);
    std::size_t n = idx.size();
    std::vector<std::vector<RationalFunction>> a(n, std::vector<RationalFunction>(n));
    std::vector<std::vector<RationalFunction>> b(n, std::vector<RationalFunction>(n));
    for (std::size_t i = 0; i < n; ++i) {
        b[i][i] = RationalFunction(1);
        auto rit = rows.find(idx[i]);
        if (rit == rows.end()) throw std::logic_error("transition matrix: missing row");
        for (std::size_t j = 0; j < n; ++j) {
            auto cit = rit->second.find(idx[j]);
            if (cit != rit->second.end()) a[i][j] = cit->second;
        }
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw std::logic_error("transition matrix: singular");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        RationalFunction inv = a[col][col].inverse();
        if (!inv.is_one()) {
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[col][j].is_zero()) a[col][j] *= inv;
                if (!b[col][j].is_zero()) b[col][j] *= inv;
            }
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            RationalFunction f = a[r][col];
            for (std::size_t j = 0; j < n; ++j) {
                if (!a[col][j].is_zero()) a[r][j] -= f * a[col][j];
                if (!b[col][j].is_zero()) b[r][j] -= f * b[col][j];
            }
        }
    }
    TransitionCache::Matrix out;
    for (std::size_t i = 0; i < n; ++i) {
        auto& row = out[idx[i]];
        for (std::size_t j = 0; j < n; ++j)
            if (!b[i][j].is_zero()) row[idx[j]] = b[i][j];
    }
    return out;
}

}  // namespace

const TransitionCache::Matrix& TransitionCache::to_monomial(const Basis& b, int degree) {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    if (impl_->cap > 0 && degree > impl_->cap) throw DegreeCapExceeded(degree, impl_->cap);
    int k = b.is_macdonald() ? b.k : 0;
    Impl::Key key{static_cast<int>(b.tag), k, degree};
    auto it = impl_->to_m.find(key);
    if (it != impl_->to_m.end()) return *it->second;

    Matrix m;
    if (!b.is_macdonald()) {
        bool cacheable = b.tag != BasisTag::Monomial && degree > 0;
        std::string cache_key = "trans_" + b.tag_string() + "_d" + std::to_string(degree);
        bool loaded = false;
        if (cacheable) {
            if (auto payload = DiskCache::instance().load(cache_key)) {
                m = matrix_from_json(*payload);
                loaded = m.size() == partitions_of(degree).size();
                if (!loaded) m.clear();
            }
        }
        if (!loaded) {
            m = build_classical_to_m(b.tag, degree);
            if (cacheable) DiskCache::instance().store(cache_key, matrix_to_json(m));
        }
    } else if (b.tag == BasisTag::MacdonaldP) {
        if (!impl_->provider)
            throw std::domain_error("Macdonald basis requested but the Macdonald module is not loaded");
        m = impl_->provider->p_rows(degree, k);
    } else {
        const Matrix& prows = to_monomial(Basis::P(b.k), degree);
        for (const auto& [lambda, row] : prows) {
            RationalFunction s = impl_->provider->q_scale(lambda, b.k);
            auto& qrow = m[lambda];
            for (const auto& [mu, c] : row) qrow[mu] = c * s;
        }
    }
    auto [pos, inserted] = impl_->to_m.emplace(key, std::make_unique<Matrix>(std::move(m)));
    (void)inserted;
    return *pos->second;
}

const TransitionCache::Matrix& TransitionCache::from_monomial(const Basis& b, int degree) {
    std::lock_guard<std::recursive_mutex> lock(impl_->mu);
    if (impl_->cap > 0 && degree > impl_->cap) throw DegreeCapExceeded(degree, impl_->cap);
    int k = b.is_macdonald() ? b.k : 0;
    Impl::Key key{static_cast<int>(b.tag), k, degree};
    auto it = impl_->from_m.find(key);
    if (it != impl_->from_m.end()) return *it->second;
    Matrix inv;
    if (b.tag == BasisTag::Monomial) {
        for (const auto& lambda : partitions_of(degree)) inv[lambda][lambda] = RationalFunction(1);
    } else {
        inv = invert_rows(to_monomial(b, degree), degree);
    }
    auto [pos, inserted] = impl_->from_m.emplace(key, std::make_unique<Matrix>(std::move(inv)));
    (void)inserted;
    return *pos->second;
}

std::string matrix_to_json(const TransitionCache::Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& [lambda, row] : m) {
        nlohmann::ordered_json r;
        r["index"] = lambda.parts();
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [mu, c] : row) {
            nlohmann::ordered_json term;
            term["partition"] = mu.parts();
            term["coeff"] = c.to_string();
            terms.push_back(term);
        }
        r["terms"] = terms;
        rows.push_back(r);
    }
    nlohmann::ordered_json j;
    j["rows"] = rows;
    return j.dump();
}

TransitionCache::Matrix matrix_from_json(const std::string& text) {
    TransitionCache::Matrix out;
    nlohmann::json j = nlohmann::json::parse(text);
    for (const auto& r : j["rows"]) {
        Partition lambda(r["index"].get<std::vector<int>>());
        auto& row = out[lambda];
        for (const auto& term : r["terms"]) {
            Partition mu(term["partition"].get<std::vector<int>>());
            row[mu] = RationalFunction::parse(term["coeff"].get<std::string>());
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Conversions and products

SymFunc convert(const SymFunc& f, const Basis& target) {
    if (f.basis() == target) return f;
    SymFunc out(target);
    auto& cache = TransitionCache::instance();
    for (int d : f.weights()) {
        // Expand this weight component in the monomial basis.
        std::map<Partition, RationalFunction> in_m;
        if (f.basis().tag == BasisTag::Monomial) {
            for (const auto& [lambda, c] : f.terms())
                if (lambda.weight() == d) in_m[lambda] = c;
        } else {
            const auto& rows = cache.to_monomial(f.basis(), d);
            for (const auto& [lambda, c] : f.terms()) {
                if (lambda.weight() != d) continue;
                auto rit = rows.find(lambda);
                if (rit == rows.end()) throw std::logic_error("convert: missing transition row");
                for (const auto& [mu, rc] : rit->second) {
                    auto& acc = in_m[mu];
                    acc += c * rc;
                    if (acc.is_zero()) in_m.erase(mu);
                }
            }
        }
        if (target.tag == BasisTag::Monomial) {
            for (const auto& [mu, c] : in_m) out.add_term(mu, c);
        } else {
            const auto& inv = cache.from_monomial(target, d);
            for (const auto& [mu, c] : in_m) {
                auto rit = inv.find(mu);
                if (rit == inv.end()) throw std::logic_error("convert: missing inverse row");
                for (const auto& [lambda, rc] : rit->second) out.add_term(lambda, c * rc);
            }
        }
    }
    return out;
}

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
    if (f.is_zero() || g.is_zero()) return SymFunc::zero(f.basis());
    SymFunc fp = convert(f, Basis::p());
    SymFunc gp = convert(g, Basis::p());
    SymFunc prod(Basis::p());
    for (const auto& [lambda, a] : fp.terms()) {
        for (const auto& [mu, b] : gp.terms()) {
            std::vector<int> parts = lambda.parts();
            const auto& mp = mu.parts();
            parts.insert(parts.end(), mp.begin(), mp.end());
            std::sort(parts.begin(), parts.end(), std::greater<int>());
            prod.add_term(Partition(parts), a * b);
        }
    }
    return convert(prod, f.basis());
}

RationalFunction scalar_qt(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::p());
    SymFunc gp = convert(g, Basis::p());
    RationalFunction out;
    for (const auto& [lambda, a] : fp.terms()) {
        RationalFunction b = gp.coefficient(lambda);
        if (b.is_zero()) continue;
        out += a * b * power_sum_norm_qt(lambda);
    }
    return out;
}

RationalFunction scalar_classical(const SymFunc& f, const SymFunc& g) {
    SymFunc fp = convert(f, Basis::p());
    SymFunc gp = convert(g, Basis::p());
    RationalFunction out;
    for (const auto& [lambda, a] : fp.terms()) {
        RationalFunction b = gp.coefficient(lambda);
        if (b.is_zero()) continue;
        out += a * b * RationalFunction(BigRational(z_lambda(lambda)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Alphabet rescalings

ScaleRule ScaleRule::numeric(const RationalFunction& a) {
    ScaleRule r;
    r.kind = Kind::Numeric;
    r.alpha = a;
    return r;
}

ScaleRule ScaleRule::ratio_qt() {
    ScaleRule r;
    r.kind = Kind::RatioQT;
    return r;
}

ScaleRule ScaleRule::ratio_tq() {
    ScaleRule r;
    r.kind = Kind::RatioTQ;
    return r;
}

ScaleRule ScaleRule::q_integer(int k) {
    ScaleRule r;
    r.kind = Kind::QIntegerK;
    r.k = k;
    return r;
}

ScaleRule ScaleRule::q_integer_inverse(int k) {
    ScaleRule r;
    r.kind = Kind::QIntegerKInv;
    r.k = k;
    return r;
}

RationalFunction ScaleRule::factor(int r) const {
    switch (kind) {
        case Kind::Numeric: return alpha;
        case Kind::RatioQT: return one_minus_q_pow(r) / one_minus_t_pow(r);
        case Kind::RatioTQ: return one_minus_t_pow(r) / one_minus_q_pow(r);
        case Kind::QIntegerK: return one_minus_q_pow(k * r) / one_minus_q_pow(r);
        case Kind::QIntegerKInv: return one_minus_q_pow(r) / one_minus_q_pow(k * r);
    }
    return RationalFunction(1);
}

ScaleRule ScaleRule::inverse() const {
    switch (kind) {
        case Kind::Numeric: return numeric(alpha.inverse());
        case Kind::RatioQT: return ratio_tq();
        case Kind::RatioTQ: return ratio_qt();
        case Kind::QIntegerK: return q_integer_inverse(k);
        case Kind::QIntegerKInv: return q_integer(k);
    }
    return *this;
}

SymFunc plethysm_scale(const SymFunc& f, const ScaleRule& c) {
    SymFunc fp = convert(f, Basis::p());
    SymFunc out(Basis::p());
    for (const auto& [lambda, a] : fp.terms()) {
        RationalFunction v = a;
        for (int r : lambda.parts()) v *= c.factor(r);
        out.add_term(lambda, v);
    }
    return convert(out, f.basis());
}

SymFunc alphabet_negate_bar(const SymFunc& f) {
    SymFunc fp = convert(f, Basis::p());
    SymFunc out(Basis::p());
    for (const auto& [lambda, a] : fp.terms()) {
        long s = lambda.weight() + lambda.length();
        out.add_term(lambda, (s % 2 == 0) ? a : -a);
    }
    return convert(out, f.basis());
}

// ---------------------------------------------------------------------------
// Finite alphabets

LaurentPoly expand_finite(const SymFunc& f, int n) {
    if (n < 1) throw std::domain_error("expand_finite: need at least one variable");
    switch (f.basis().tag) {
        case BasisTag::MacdonaldP:
        case BasisTag::MacdonaldQ:
            return expand_finite(convert(f, Basis::m()), n);
        default:
            break;
    }
    LaurentPoly out(n);
    if (f.is_zero()) return out;
    int maxpart = 0;
    for (const auto& [lambda, c] : f.terms())
        if (!lambda.is_empty()) maxpart = std::max(maxpart, lambda.part(1));
    switch (f.basis().tag) {
        case BasisTag::Monomial:
            for (const auto& [lambda, c] : f.terms()) out += monomial_sym(lambda, n).scaled(c);
            break;
        case BasisTag::Schur:
            for (const auto& [lambda, c] : f.terms()) {
                if (lambda.length() > n) continue;
                out += s_tilde(padded(lambda, n)).scaled(c);
            }
            break;
        case BasisTag::PowerSum: {
            std::vector<LaurentPoly> psum(static_cast<std::size_t>(maxpart) + 1, LaurentPoly(n));
            for (int r = 1; r <= maxpart; ++r) psum[static_cast<std::size_t>(r)] = power_sum_nvars(n, r);
            for (const auto& [lambda, c] : f.terms()) {
                LaurentPoly L = LaurentPoly::constant(n, RationalFunction(1));
                for (int r : lambda.parts()) L *= psum[static_cast<std::size_t>(r)];
                out += L.scaled(c);
            }
            break;
        }
        case BasisTag::Complete: {
            auto h = complete_table(n, maxpart);
            for (const auto& [lambda, c] : f.terms()) {
                LaurentPoly L = LaurentPoly::constant(n, RationalFunction(1));
                for (int r : lambda.parts()) L *= (*h)[static_cast<std::size_t>(r)];
                out += L.scaled(c);
            }
            break;
        }
        case BasisTag::Elementary: {
            auto e = elementary_table(n, maxpart);
            for (const auto& [lambda, c] : f.terms()) {
                LaurentPoly L = LaurentPoly::constant(n, RationalFunction(1));
                for (int r : lambda.parts()) L *= e[static_cast<std::size_t>(r)];
                out += L.scaled(c);
            }
            break;
        }
        default:
            break;
    }
    return out;
}

SymFunc symfunc_from_laurent(const LaurentPoly& p, int n, int degree_bound) {
    if (p.nvars() != n) throw std::invalid_argument("symfunc_from_laurent: variable count mismatch");
    if (degree_bound > n)
        throw std::domain_error("symfunc_from_laurent: faithful range requires degree_bound <= nvars");
    if (p.min_exponent() < 0) throw std::domain_error("symfunc_from_laurent: negative exponents");
    if (p.total_degree() > degree_bound)
        throw std::domain_error("symfunc_from_laurent: degree exceeds the faithful range");
    require_symmetric(p, n);
    SymFunc out(Basis::m());
    for (const auto& [e, c] : p.terms()) {
        bool sorted = true;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1]) {
                sorted = false;
                break;
            }
        if (!sorted) continue;
        out.add_term(Partition(e), c);
    }
    return out;
}

SymFunc schur_via_jacobi_trudi(const std::vector<int>& v) {
    SymFunc out(Basis::h());
    std::size_t l = v.size();
    if (l == 0) return SymFunc::one(Basis::h());
    std::vector<int> perm(l);
    for (std::size_t i = 0; i < l; ++i) perm[i] = static_cast<int>(i);
    do {
        std::vector<int> parts;
        bool ok = true;
        for (std::size_t i = 0; i < l; ++i) {
            int deg = v[i] - static_cast<int>(i) + perm[i];
            if (deg < 0) {
                ok = false;
                break;
            }
            if (deg > 0) parts.push_back(deg);
        }
        if (!ok) continue;
        std::sort(parts.begin(), parts.end(), std::greater<int>());
        out.add_term(Partition(parts), RationalFunction(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

SymFunc schur_peel(const LaurentPoly& p, int n) {
    if (p.nvars() != n) throw std::invalid_argument("schur_peel: variable count mismatch");
    SymFunc out(Basis::s());
    if (p.is_zero()) return out;
    if (p.min_exponent() < 0) throw std::domain_error("schur_peel: negative exponents");
    require_symmetric(p, n);
    auto h = complete_table(n, std::max(p.total_degree(), 0));
    LaurentPoly work = p;
    while (!work.is_zero()) {
        std::vector<int> e = work.terms().rbegin()->first;
        RationalFunction c = work.terms().rbegin()->second;
        for (std::size_t i = 0; i + 1 < e.size(); ++i)
            if (e[i] < e[i + 1]) throw std::logic_error("schur_peel: leading exponent not dominant");
        Partition lambda(e);
        out.add_term(lambda, c);
        work -= jt_det(lambda.parts(), *h).scaled(c);
    }
    return out;
}

std::shared_ptr<const std::vector<LaurentPoly>> complete_table(int n, int maxdeg) {
    static std::mutex mu;
    static std::map<int, std::shared_ptr<const std::vector<LaurentPoly>>> tables;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = tables[n];
    if (!slot || static_cast<int>(slot->size()) <= maxdeg) {
        std::vector<Letter> letters;
        for (int i = 1; i <= n; ++i) letters.push_back({i, RationalFunction(1)});
        slot = std::make_shared<const std::vector<LaurentPoly>>(complete_functions(n, maxdeg, letters));
    }
    return slot;
}

}  // namespace macqk
