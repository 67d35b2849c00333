#include "macqk/bipoly.hpp"

#include <sstream>
#include <stdexcept>

namespace macqk {

BigRational BiPoly::constant_value() const {
    auto it = terms_.find(Key{0, 0});
    return it == terms_.end() ? BigRational(0) : it->second;
}

int BiPoly::deg_q() const {
    int d = -1;
    for (const auto& [k, c] : terms_)
        if (k.second > d) d = k.second;
    return d;
}

int BiPoly::deg_t() const {
    // Map order is (deg_t, deg_q) ascending, so the last key carries deg_t.
    return terms_.empty() ? -1 : terms_.rbegin()->first.first;
}

BigRational BiPoly::coefficient(int dq, int dt) const {
    auto it = terms_.find(Key{dt, dq});
    return it == terms_.end() ? BigRational(0) : it->second;
}

BiPoly BiPoly::operator-() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_[k] = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [k, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(k, -c);
        if (!inserted) {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

BiPoly BiPoly::scaled(const BigRational& c) const {
    BiPoly r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
    return r;
}

BiPoly BiPoly::pow(unsigned e) const {
    BiPoly r(1), base(*this);
    while (e) {
        if (e & 1u) r *= base;
        base = (e >>= 1u) ? base * base : BiPoly();
    }
    return r;
}

BiPoly BiPoly::specialize_t(int k) const {
    if (k < 0) throw std::domain_error("specialize_t: k must be >= 0");
    BiPoly r;
    for (const auto& [key, c] : terms_) {
        Key nk{0, key.second + k * key.first};
        auto [it, inserted] = r.terms_.emplace(nk, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

BiPoly BiPoly::swap_qt() const {
    BiPoly r;
    for (const auto& [k, c] : terms_) r.terms_[Key{k.second, k.first}] = c;
    return r;
}

BigRational BiPoly::evaluate(const BigRational& qv, const BigRational& tv) const {
    BigRational acc(0);
    for (const auto& [k, c] : terms_)
        acc += c * tv.pow(static_cast<unsigned>(k.first)) * qv.pow(static_cast<unsigned>(k.second));
    return acc;
}

BiPoly BiPoly::lc_t() const {
    return terms_.empty() ? BiPoly() : t_coefficient(deg_t());
}

BiPoly BiPoly::t_coefficient(int j) const {
    BiPoly r;
    auto lo = terms_.lower_bound(Key{j, 0});
    auto hi = terms_.lower_bound(Key{j + 1, 0});
    for (auto it = lo; it != hi; ++it) r.terms_[{0, it->first.second}] = it->second;
    return r;
}

std::string BiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        const bool neg = c.sign() < 0;
        if (first) {
            if (neg) os << '-';
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        const BigRational a = c.abs();
        std::vector<std::string> factors;
        const bool has_var = k.first > 0 || k.second > 0;
        if (!a.is_one() || !has_var) factors.push_back(a.to_string());
        if (k.second == 1) factors.push_back("q");
        else if (k.second > 1) factors.push_back("q^" + std::to_string(k.second));
        if (k.first == 1) factors.push_back("t");
        else if (k.first > 1) factors.push_back("t^" + std::to_string(k.first));
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << '*';
            os << factors[i];
        }
    }
    return os.str();
}

namespace {

// One factor of a '*'-joined term: a variable power or a rational literal.
void apply_factor(const std::string& f, BigRational& coeff, int& dq, int& dt) {
    if (f.empty()) throw std::invalid_argument("BiPoly::parse: empty factor");
    if (f[0] == 'q' || f[0] == 't') {
        int e = 1;
        if (f.size() > 1) {
            if (f[1] != '^') throw std::invalid_argument("BiPoly::parse: bad factor '" + f + "'");
            std::size_t pos = 0;
            e = std::stoi(f.substr(2), &pos);
            if (pos != f.size() - 2 || e < 0)
                throw std::invalid_argument("BiPoly::parse: bad exponent in '" + f + "'");
        }
        (f[0] == 'q' ? dq : dt) += e;
    } else {
        coeff *= BigRational::parse(f);
    }
}

}  // namespace

BiPoly BiPoly::parse(const std::string& s) {
    std::string str = s;
    // Strip outer whitespace only; interior spacing is significant.
    while (!str.empty() && (str.front() == ' ' || str.front() == '\t')) str.erase(str.begin());
    while (!str.empty() && (str.back() == ' ' || str.back() == '\t')) str.pop_back();
    if (str.empty()) throw std::invalid_argument("BiPoly::parse: empty input");
    if (str == "0") return BiPoly();

    BiPoly result;
    std::size_t pos = 0;
    int sign = 1;
    if (str[0] == '-') { sign = -1; pos = 1; }
    else if (str[0] == '+') { pos = 1; }
    while (pos < str.size()) {
        std::size_t next = std::string::npos;
        int next_sign = 1;
        for (std::size_t i = pos; i + 2 < str.size(); ++i) {
            if (str[i] == ' ' && (str[i + 1] == '+' || str[i + 1] == '-') && str[i + 2] == ' ') {
                next = i;
                next_sign = str[i + 1] == '+' ? 1 : -1;
                break;
            }
        }
        const std::string term = str.substr(pos, next == std::string::npos ? next : next - pos);
        if (term.empty()) throw std::invalid_argument("BiPoly::parse: empty term");
        BigRational coeff(sign);
        int dq = 0, dt = 0;
        std::size_t fpos = 0;
        while (fpos <= term.size()) {
            std::size_t star = term.find('*', fpos);
            if (star == std::string::npos) star = term.size();
            apply_factor(term.substr(fpos, star - fpos), coeff, dq, dt);
            fpos = star + 1;
            if (star == term.size()) break;
        }
        result += monomial(dq, dt, coeff);
        if (next == std::string::npos) break;
        pos = next + 3;
        sign = next_sign;
    }
    return result;
}

// ---------------------------------------------------------------------------
// gcd machinery

BiPoly make_integer_primitive(const BiPoly& p, BigRational* factor_out) {
    if (p.is_zero()) {
        if (factor_out) *factor_out = BigRational(1);
        return p;
    }
    mpz_class den_lcm(1), num_gcd(0);
    for (const auto& [k, c] : p.terms()) {
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.denominator().get_mpz_t());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.numerator().get_mpz_t());
    }
    BigRational s{mpq_class(den_lcm, num_gcd)};
    if (factor_out) *factor_out = s;
    return p.scaled(s);
}

namespace {

BigRational lowest_coeff(const BiPoly& p) {
    return p.terms().begin()->second;
}

BiPoly fix_sign_lowest(BiPoly p) {
    if (!p.is_zero() && lowest_coeff(p).sign() < 0) p = -p;
    return p;
}

// q-polynomials as dense integer coefficient vectors.
std::vector<mpz_class> to_qvec(const BiPoly& p) {
    std::vector<mpz_class> v(static_cast<std::size_t>(p.deg_q() + 1));
    for (const auto& [k, c] : p.terms()) v[static_cast<std::size_t>(k.second)] = c.numerator();
    return v;
}

BiPoly from_qvec(const std::vector<mpz_class>& v) {
    BiPoly p;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) p += BiPoly::monomial(static_cast<int>(i), 0, BigRational(v[i]));
    return p;
}

void strip_qvec(std::vector<mpz_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

mpz_class qvec_content(const std::vector<mpz_class>& v) {
    mpz_class g(0);
    for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

void qvec_primitive(std::vector<mpz_class>& v) {
    strip_qvec(v);
    if (v.empty()) return;
    mpz_class g = qvec_content(v);
    if (v.back() < 0) g = -g;
    for (auto& c : v) c /= g;
}

// Pseudo-remainder of integer q-polynomials, b != 0.
std::vector<mpz_class> qvec_prem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        const mpz_class la = a.back();
        for (auto& c : a) c *= lb;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        strip_qvec(a);
    }
    return a;
}

// ---------------------------------------------------------------------------
// Dense integer bivariate arithmetic. Row j of a matrix holds the integer
// q-coefficient vector of t^j; rows are stripped of trailing zeros, a zero
// row is an empty vector, and a stripped matrix has a nonempty last row.

using QRow = std::vector<mpz_class>;
using TMat = std::vector<QRow>;

bool integer_coeffs(const BiPoly& p) {
    for (const auto& [k, c] : p.terms())
        if (c.denominator() != 1) return false;
    return true;
}

// Requires integer coefficients.
TMat to_tmat(const BiPoly& p) {
    TMat m(static_cast<std::size_t>(p.deg_t() + 1));
    for (const auto& [k, c] : p.terms()) {
        QRow& row = m[static_cast<std::size_t>(k.first)];
        const auto dq = static_cast<std::size_t>(k.second);
        if (row.size() <= dq) row.resize(dq + 1);
        row[dq] = c.numerator();
    }
    return m;
}

BiPoly from_tmat(const TMat& m) {
    BiPoly p;
    for (std::size_t j = 0; j < m.size(); ++j)
        for (std::size_t i = 0; i < m[j].size(); ++i)
            if (m[j][i] != 0)
                p += BiPoly::monomial(static_cast<int>(i), static_cast<int>(j), BigRational(m[j][i]));
    return p;
}

void strip_tmat(TMat& m) {
    while (!m.empty() && m.back().empty()) m.pop_back();
}

// r += a * b, growing r as needed.
void row_addmul(QRow& r, const QRow& a, const QRow& b) {
    if (a.empty() || b.empty()) return;
    if (r.size() < a.size() + b.size() - 1) r.resize(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

// r -= a * b, growing r as needed.
void row_submul(QRow& r, const QRow& a, const QRow& b) {
    if (a.empty() || b.empty()) return;
    if (r.size() < a.size() + b.size() - 1) r.resize(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            mpz_submul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
}

bool qrow_divexact(const QRow& a, const QRow& b, QRow& quot);

mpz_class qrow_height(const QRow& a) {
    mpz_class h(0);
    for (const auto& c : a)
        if (mpz_cmpabs(c.get_mpz_t(), h.get_mpz_t()) > 0) {
            h = c;
            mpz_abs(h.get_mpz_t(), h.get_mpz_t());
        }
    return h;
}

mpz_class qrow_eval(const QRow& a, const mpz_class& x) {
    mpz_class acc(0);
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc *= x;
        acc += *it;
    }
    return acc;
}

// Balanced base-x digit expansion (digits in (-x/2, x/2]), little-endian;
// false when more than cap digits would be needed.
bool balanced_digits(mpz_class v, const mpz_class& x, std::size_t cap, QRow& out) {
    out.clear();
    mpz_class digit;
    while (v != 0) {
        if (out.size() == cap) return false;
        mpz_fdiv_r(digit.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
        if (digit * 2 > x) digit -= x;
        v -= digit;
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), x.get_mpz_t());
        out.push_back(digit);
    }
    return true;
}

void grow_eval_point(mpz_class& xi) {
    // An irrational-looking ratio keeps successive points algebraically
    // unrelated, so a retry rarely fails the same way twice.
    xi *= 73794;
    xi /= 27011;
    xi += 1;
}

// Heuristic gcd of primitive nonzero rows: evaluate at a large integer,
// gcd the values, read the digits back. A success is certified by the two
// exact divisions, so a wrong guess can only cause a retry, never a wrong
// result.
bool qrow_gcd_heu(const QRow& a, const QRow& b, QRow& g) {
    const std::size_t cap = std::min(a.size(), b.size());
    const mpz_class ha = qrow_height(a), hb = qrow_height(b);
    mpz_class xi = 2 * std::max(ha, hb) + 2;
    for (int attempt = 0; attempt < 5; ++attempt) {
        const mpz_class ea = qrow_eval(a, xi), eb = qrow_eval(b, xi);
        mpz_class ig;
        mpz_gcd(ig.get_mpz_t(), ea.get_mpz_t(), eb.get_mpz_t());
        QRow cand;
        if (balanced_digits(std::move(ig), xi, cap, cand)) {
            strip_qvec(cand);
            if (!cand.empty()) {
                qvec_primitive(cand);
                QRow q1, q2;
                if (qrow_divexact(a, cand, q1) && qrow_divexact(b, cand, q2)) {
                    g = std::move(cand);
                    return true;
                }
            }
        }
        grow_eval_point(xi);
    }
    return false;
}

// Full gcd in Z[q] — integer content included — with positive leading
// coefficient. Zero inputs act as gcd identities.
QRow qrow_gcd(QRow a, QRow b) {
    strip_qvec(a);
    strip_qvec(b);
    if (a.empty()) {
        if (!b.empty() && b.back() < 0)
            for (auto& c : b) c = -c;
        return b;
    }
    if (b.empty()) {
        if (a.back() < 0)
            for (auto& c : a) c = -c;
        return a;
    }
    mpz_class cont;
    mpz_gcd(cont.get_mpz_t(), qvec_content(a).get_mpz_t(), qvec_content(b).get_mpz_t());
    qvec_primitive(a);
    qvec_primitive(b);
    QRow g;
    if (a.size() == 1 || b.size() == 1) {
        g.assign(1, mpz_class(1));
    } else if (!qrow_gcd_heu(a, b, g)) {
        if (a.size() < b.size()) a.swap(b);
        while (!b.empty()) {
            auto r = qvec_prem(a, b);
            qvec_primitive(r);
            a.swap(b);
            b.swap(r);
        }
        g = std::move(a);
    }
    for (auto& c : g) c *= cont;
    return g;
}

// Exact division in Z[q]. Returns false — leaving quot unspecified — when a
// is not divisible by b over the integers.
bool qrow_divexact(const QRow& a, const QRow& b, QRow& quot) {
    quot.clear();
    if (b.empty()) return false;
    if (a.empty()) return true;
    if (a.size() < b.size()) return false;
    QRow r = a;
    quot.assign(a.size() - b.size() + 1, mpz_class(0));
    const mpz_class& lb = b.back();
    for (std::ptrdiff_t pos = static_cast<std::ptrdiff_t>(r.size()) - 1;
         pos >= static_cast<std::ptrdiff_t>(b.size()) - 1; --pos) {
        mpz_class& rc = r[static_cast<std::size_t>(pos)];
        if (rc == 0) continue;
        if (!mpz_divisible_p(rc.get_mpz_t(), lb.get_mpz_t())) return false;
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rc.get_mpz_t(), lb.get_mpz_t());
        const std::size_t shift = static_cast<std::size_t>(pos) - (b.size() - 1);
        for (std::size_t i = 0; i < b.size(); ++i)
            mpz_submul(r[shift + i].get_mpz_t(), c.get_mpz_t(), b[i].get_mpz_t());
        quot[shift] = std::move(c);
    }
    for (const auto& c : r)
        if (c != 0) return false;
    return true;
}

// gcd of all rows; {1} means the matrix is primitive.
QRow tmat_content(const TMat& m) {
    QRow g;
    for (const auto& row : m) {
        g = qrow_gcd(std::move(g), row);
        if (g.size() == 1 && g[0] == 1) break;
    }
    return g;
}

// Divides every row by g; g must divide the matrix row-wise.
void tmat_div_row(TMat& m, const QRow& g) {
    if (g.size() == 1 && g[0] == 1) return;
    for (auto& row : m) {
        if (row.empty()) continue;
        QRow q;
        if (!qrow_divexact(row, g, q))
            throw std::domain_error("bipoly_gcd: content division failed");
        row = std::move(q);
    }
}

void tmat_primitive(TMat& m) {
    strip_tmat(m);
    if (m.empty()) return;
    tmat_div_row(m, tmat_content(m));
}

// Pseudo-remainder in t: repeated leading-row elimination, b nonzero and
// stripped. The eliminated top row cancels exactly, so it is popped first.
TMat tmat_prem(TMat a, const TMat& b) {
    const QRow& lb = b.back();
    const std::size_t db = b.size() - 1;
    strip_tmat(a);
    while (a.size() >= db + 1) {
        const QRow la = std::move(a.back());
        a.pop_back();
        const std::size_t d = a.size() - db;
        for (std::size_t j = 0; j < a.size(); ++j) {
            QRow nr;
            row_addmul(nr, lb, a[j]);
            if (j >= d) row_submul(nr, la, b[j - d]);
            strip_qvec(nr);
            a[j] = std::move(nr);
        }
        strip_tmat(a);
    }
    return a;
}

// Exact division over Z[q][t]. Returns false when the quotient is not an
// integer polynomial (it may still exist with rational coefficients).
bool tmat_divexact(const TMat& a, const TMat& b, TMat& quot) {
    quot.clear();
    TMat r = a;
    strip_tmat(r);
    if (r.empty()) return true;
    if (r.size() < b.size()) return false;
    quot.assign(r.size() - b.size() + 1, QRow{});
    while (r.size() >= b.size()) {
        const std::size_t d = r.size() - b.size();
        QRow c;
        if (!qrow_divexact(r.back(), b.back(), c)) return false;
        for (std::size_t i = 0; i < b.size(); ++i) {
            row_submul(r[d + i], c, b[i]);
            strip_qvec(r[d + i]);
        }
        strip_tmat(r);
        quot[d] = std::move(c);
    }
    for (const auto& row : r)
        if (!row.empty()) return false;
    return true;
}

mpz_class tmat_height(const TMat& m) {
    mpz_class h(0);
    for (const auto& row : m) {
        mpz_class hr = qrow_height(row);
        if (hr > h) h = std::move(hr);
    }
    return h;
}

// Substitutes the integer x for t, collapsing the matrix to one q-row.
QRow tmat_eval_t(const TMat& m, const mpz_class& x) {
    QRow acc;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        for (auto& c : acc) c *= x;
        if (it->size() > acc.size()) acc.resize(it->size());
        for (std::size_t i = 0; i < it->size(); ++i) acc[i] += (*it)[i];
    }
    strip_qvec(acc);
    return acc;
}

// Heuristic gcd of primitive nonzero matrices: collapse t at a large integer,
// take the one-variable gcd, read the t-digits back per q-coefficient.
// Verified by the two exact divisions, exactly as in the one-variable case.
bool tmat_gcd_heu(const TMat& a, const TMat& b, TMat& g) {
    const std::size_t cap = std::min(a.size(), b.size());
    const mpz_class ha = tmat_height(a), hb = tmat_height(b);
    mpz_class xi = 2 * std::max(ha, hb) + 2;
    for (int attempt = 0; attempt < 5; ++attempt) {
        QRow gq = qrow_gcd(tmat_eval_t(a, xi), tmat_eval_t(b, xi));
        TMat cand(cap);
        bool decoded = true;
        for (std::size_t i = 0; i < gq.size() && decoded; ++i) {
            QRow digs;
            decoded = balanced_digits(gq[i], xi, cap, digs);
            for (std::size_t j = 0; j < digs.size(); ++j) {
                if (digs[j] == 0) continue;
                QRow& row = cand[j];
                if (row.size() <= i) row.resize(i + 1);
                row[i] = digs[j];
            }
        }
        if (decoded) {
            strip_tmat(cand);
            if (!cand.empty()) {
                tmat_primitive(cand);
                TMat q1, q2;
                if (tmat_divexact(a, cand, q1) && tmat_divexact(b, cand, q2)) {
                    g = std::move(cand);
                    return true;
                }
            }
        }
        grow_eval_point(xi);
    }
    return false;
}

}  // namespace

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    if (a.terms_.empty() || b.terms_.empty()) return r;
    if (integer_coeffs(a) && integer_coeffs(b)) {
        const TMat ma = to_tmat(a), mb = to_tmat(b);
        TMat out(ma.size() + mb.size() - 1);
        for (std::size_t i = 0; i < ma.size(); ++i) {
            if (ma[i].empty()) continue;
            for (std::size_t j = 0; j < mb.size(); ++j)
                row_addmul(out[i + j], ma[i], mb[j]);
        }
        return from_tmat(out);
    }
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            auto [it, inserted] =
                r.terms_.try_emplace(BiPoly::Key{ka.first + kb.first, ka.second + kb.second});
            it->second += ca * cb;
        }
    for (auto it = r.terms_.begin(); it != r.terms_.end();)
        it = it->second.is_zero() ? r.terms_.erase(it) : std::next(it);
    return r;
}

BiPoly qpoly_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.deg_t() > 0 || b.deg_t() > 0)
        throw std::domain_error("qpoly_gcd: inputs must be free of t");
    auto va = to_qvec(make_integer_primitive(a));
    auto vb = to_qvec(make_integer_primitive(b));
    qvec_primitive(va);
    qvec_primitive(vb);
    if (va.empty()) return from_qvec(vb);
    if (vb.empty()) return from_qvec(va);
    if (va.size() < vb.size()) va.swap(vb);
    while (!vb.empty()) {
        auto r = qvec_prem(va, vb);
        qvec_primitive(r);
        va.swap(vb);
        vb.swap(r);
    }
    qvec_primitive(va);
    return from_qvec(va);
}

BiPoly content_in_t(const BiPoly& p) {
    BiPoly g;
    const int dt = p.deg_t();
    for (int j = 0; j <= dt; ++j) {
        const BiPoly cj = p.t_coefficient(j);
        if (!cj.is_zero()) g = qpoly_gcd(g, cj);
        if (g.is_constant() && !g.is_zero()) return BiPoly(1);
    }
    return g;
}

BiPoly bipoly_divexact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero()) throw std::domain_error("bipoly_divexact: division by zero");
    if (!a.is_zero() && integer_coeffs(a) && integer_coeffs(b)) {
        TMat q;
        if (tmat_divexact(to_tmat(a), to_tmat(b), q)) return from_tmat(q);
        // Fall through: any quotient has rational coefficients.
    }
    BiPoly r = a, quot;
    const auto& bl = *b.terms().rbegin();  // leading (deg_t, deg_q) term of b
    while (!r.is_zero()) {
        const auto& rl = *r.terms().rbegin();
        const int dt = rl.first.first - bl.first.first;
        const int dq = rl.first.second - bl.first.second;
        if (dt < 0 || dq < 0) throw std::domain_error("bipoly_divexact: not divisible");
        const BiPoly m = BiPoly::monomial(dq, dt, rl.second / bl.second);
        quot += m;
        r -= m * b;
    }
    return quot;
}

BiPoly bipoly_gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero()) return fix_sign_lowest(make_integer_primitive(b));
    if (b.is_zero()) return fix_sign_lowest(make_integer_primitive(a));
    // Primitive pseudo-remainder sequence on dense integer matrices, every
    // remainder stripped to its full (integer and q-polynomial) content.
    TMat pa = to_tmat(make_integer_primitive(a));
    TMat pb = to_tmat(make_integer_primitive(b));
    strip_tmat(pa);
    strip_tmat(pb);
    const QRow ca = tmat_content(pa);
    const QRow cb = tmat_content(pb);
    const QRow cg = qrow_gcd(ca, cb);
    tmat_div_row(pa, ca);
    tmat_div_row(pb, cb);
    // A primitive single-row matrix is the unit, so only the mixed case needs
    // a real computation: heuristic first, pseudo-remainder sequence after.
    if (pa.size() > 1 && pb.size() > 1) {
        TMat gm;
        if (tmat_gcd_heu(pa, pb, gm)) {
            pa = std::move(gm);
        } else {
            if (pa.size() < pb.size()) pa.swap(pb);
            while (!pb.empty()) {
                TMat r = tmat_prem(pa, pb);
                tmat_primitive(r);
                pa = std::move(pb);
                pb = std::move(r);
            }
        }
    } else {
        pa.assign(1, QRow{mpz_class(1)});
    }
    BiPoly g;
    if (pa.size() <= 1) {
        // The t-parts are coprime; only the content gcd survives.
        g = from_qvec(cg);
    } else {
        TMat out(pa.size());
        for (std::size_t j = 0; j < pa.size(); ++j) row_addmul(out[j], cg, pa[j]);
        g = from_tmat(out);
    }
    return fix_sign_lowest(make_integer_primitive(g));
}

}  // namespace macqk
