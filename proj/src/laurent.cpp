#include "macqk/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace macqk {

LaurentPoly LaurentPoly::constant(int nvars, const RationalFunction& c) {
    return monomial(Exps(static_cast<std::size_t>(nvars), 0), c);
}

LaurentPoly LaurentPoly::monomial(Exps exps, const RationalFunction& c) {
    LaurentPoly p(static_cast<int>(exps.size()));
    if (!c.is_zero()) p.terms_.emplace(std::move(exps), c);
    return p;
}

LaurentPoly LaurentPoly::variable(int nvars, int i) {
    if (i < 1 || i > nvars) throw std::domain_error("LaurentPoly::variable: index out of range");
    Exps e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    return monomial(std::move(e), RationalFunction(1));
}

RationalFunction LaurentPoly::coefficient(const Exps& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? RationalFunction() : it->second;
}

void LaurentPoly::add_term_(const Exps& e, const RationalFunction& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw std::domain_error("LaurentPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term_(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (nvars_ != o.nvars_) throw std::domain_error("LaurentPoly: variable count mismatch");
    for (const auto& [e, c] : o.terms_) add_term_(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars_ != b.nvars_) throw std::domain_error("LaurentPoly: variable count mismatch");
    LaurentPoly r(a.nvars_);
    LaurentPoly::Exps e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t v = 0; v < e.size(); ++v) e[v] = ea[v] + eb[v];
            r.add_term_(e, ca * cb);
        }
    return r;
}

LaurentPoly LaurentPoly::scaled(const RationalFunction& c) const {
    LaurentPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly r = constant(nvars_, RationalFunction(1));
    LaurentPoly base(*this);
    while (e) {
        if (e & 1u) r *= base;
        base = (e >>= 1u) ? base * base : LaurentPoly(nvars_);
    }
    return r;
}

LaurentPoly LaurentPoly::substitute_inverse() const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exps ne(e);
        for (int& x : ne) x = -x;
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

LaurentPoly LaurentPoly::scale_vars(const std::vector<RationalFunction>& c) const {
    if (static_cast<int>(c.size()) != nvars_)
        throw std::domain_error("scale_vars: wrong number of scalars");
    LaurentPoly r(nvars_);
    for (const auto& [e, v] : terms_) {
        RationalFunction f = v;
        for (std::size_t i = 0; i < c.size(); ++i)
            if (e[i] != 0) f *= c[i].pow(e[i]);
        r.add_term_(e, f);
    }
    return r;
}

LaurentPoly LaurentPoly::permute(const std::vector<int>& perm) const {
    LaurentPoly r(nvars_);
    Exps ne(static_cast<std::size_t>(nvars_));
    for (const auto& [e, c] : terms_) {
        for (std::size_t i = 0; i < ne.size(); ++i) ne[static_cast<std::size_t>(perm[i])] = e[i];
        r.add_term_(ne, c);
    }
    return r;
}

LaurentPoly LaurentPoly::embed(int new_nvars, int offset) const {
    if (offset < 0 || offset + nvars_ > new_nvars)
        throw std::domain_error("embed: target range out of bounds");
    LaurentPoly r(new_nvars);
    for (const auto& [e, c] : terms_) {
        Exps ne(static_cast<std::size_t>(new_nvars), 0);
        std::copy(e.begin(), e.end(), ne.begin() + offset);
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

LaurentPoly LaurentPoly::truncate_partial_degree(int first, int count, int maxdeg) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v = first; v < first + count; ++v) d += e[static_cast<std::size_t>(v)];
        if (d <= maxdeg) r.terms_.emplace(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::shift_all(int s) const {
    LaurentPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        Exps ne(e);
        for (int& x : ne) x += s;
        r.terms_.emplace(std::move(ne), c);
    }
    return r;
}

int LaurentPoly::min_exponent() const {
    int m = 0;
    for (const auto& [e, c] : terms_)
        for (int x : e) m = std::min(m, x);
    return m;
}

int LaurentPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

LaurentPoly LaurentPoly::divide_exact_linear(int i, int j) const {
    if (is_zero()) return *this;
    if (i < 1 || j < 1 || i > nvars_ || j > nvars_ || i == j)
        throw std::domain_error("divide_exact_linear: bad variable indices");
    const int s = -min_exponent();
    const std::size_t ii = static_cast<std::size_t>(i - 1), jj = static_cast<std::size_t>(j - 1);

    // Ordinary-polynomial division by (x_i - x_j), leading term taken in the
    // order (exponent of x_i, then lex); each peel strictly lowers it.
    auto cmp = [ii](const Exps& a, const Exps& b) {
        if (a[ii] != b[ii]) return a[ii] < b[ii];
        return a < b;
    };
    std::map<Exps, RationalFunction, decltype(cmp)> work(cmp);
    for (const auto& [e, c] : terms_) {
        Exps ne(e);
        for (int& x : ne) x += s;
        work.emplace(std::move(ne), c);
    }

    LaurentPoly quot(nvars_);
    while (!work.empty()) {
        auto it = std::prev(work.end());
        const Exps e = it->first;
        const RationalFunction c = it->second;
        work.erase(it);
        if (e[ii] == 0) throw std::domain_error("divide_exact_linear: not divisible");
        Exps qe(e);
        --qe[ii];
        quot.add_term_(qe, c);
        Exps back(qe);
        ++back[jj];
        auto [bit, inserted] = work.emplace(std::move(back), c);
        if (!inserted) {
            bit->second += c;
            if (bit->second.is_zero()) work.erase(bit);
        }
    }
    return s == 0 ? quot : quot.shift_all(-s);
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.to_string() << ')';
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            os << "*x" << (v + 1);
            if (e[v] != 1) os << '^' << e[v];
        }
    }
    return os.str();
}

namespace {

int permutation_sign(const std::vector<int>& p) {
    int inv = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
        for (std::size_t b = a + 1; b < p.size(); ++b)
            if (p[a] > p[b]) ++inv;
    return (inv % 2 == 0) ? 1 : -1;
}

}  // namespace

LaurentPoly s_tilde(const std::vector<int>& v) {
    const int n = static_cast<int>(v.size());
    if (n == 0) return LaurentPoly::constant(0, RationalFunction(1));
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    LaurentPoly alt(n);
    do {
        LaurentPoly::Exps e(static_cast<std::size_t>(n));
        // row i gets column sigma(i): exponent v_{sigma(i)} + n - (sigma(i)+1)
        for (int i = 0; i < n; ++i) {
            const int col = perm[static_cast<std::size_t>(i)];
            e[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(col)] + n - col - 1;
        }
        alt += LaurentPoly::monomial(std::move(e), RationalFunction(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (alt.is_zero()) return alt;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) alt = alt.divide_exact_linear(i, j);
    return alt;
}

std::vector<LaurentPoly> complete_functions(int nvars, int maxdeg, const std::vector<Letter>& letters) {
    std::vector<LaurentPoly> h(static_cast<std::size_t>(maxdeg) + 1, LaurentPoly(nvars));
    h[0] = LaurentPoly::constant(nvars, RationalFunction(1));
    for (const auto& l : letters) {
        const LaurentPoly lx = LaurentPoly::variable(nvars, l.var).scaled(l.coeff);
        for (int m = 1; m <= maxdeg; ++m)
            h[static_cast<std::size_t>(m)] += lx * h[static_cast<std::size_t>(m - 1)];
    }
    return h;
}

namespace {

// det over rows r.. of the columns still present in mask, by Laplace expansion.
LaurentPoly jt_minor(const std::vector<int>& v, const std::vector<LaurentPoly>& h, int nvars,
                     std::size_t r, unsigned mask, std::map<unsigned, LaurentPoly>& memo) {
    const std::size_t l = v.size();
    if (r == l) return LaurentPoly::constant(nvars, RationalFunction(1));
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    LaurentPoly det(nvars);
    int sign = 1;
    for (std::size_t j = 0; j < l; ++j) {
        if (!(mask & (1u << j))) continue;
        const int idx = v[r] - static_cast<int>(r + 1) + static_cast<int>(j + 1);
        if (idx >= 0) {
            if (idx >= static_cast<int>(h.size()))
                throw std::domain_error("jt_det: h table too short");
            const LaurentPoly& entry = h[static_cast<std::size_t>(idx)];
            if (!entry.is_zero()) {
                LaurentPoly sub = jt_minor(v, h, nvars, r + 1, mask & ~(1u << j), memo);
                if (sign < 0) sub = -sub;
                det += entry * sub;
            }
        }
        sign = -sign;
    }
    memo.emplace(mask, det);
    return det;
}

}  // namespace

LaurentPoly jt_det(const std::vector<int>& v, const std::vector<LaurentPoly>& h) {
    if (h.empty()) throw std::domain_error("jt_det: empty h table");
    const int nvars = h[0].nvars();
    if (v.empty()) return LaurentPoly::constant(nvars, RationalFunction(1));
    if (v.size() > 31) throw std::domain_error("jt_det: index too long");
    std::map<unsigned, LaurentPoly> memo;
    return jt_minor(v, h, nvars, 0, (1u << v.size()) - 1u, memo);
}

}  // namespace macqk
