// Acceptance gate: one line per criterion, exact comparisons throughout.
// Timed criteria carry their budget in the line; everything else is
// zero-tolerance symbolic equality.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "macqk/macdonald.hpp"
#include "macqk/operators.hpp"

using namespace macqk;

namespace {

const RationalFunction Q = RationalFunction::q();
const RationalFunction T = RationalFunction::t();
const RationalFunction one(1);

int g_failures = 0;

void criterion(const std::string& id, const std::string& desc, const std::function<bool(std::string&)>& body) {
    std::string note;
    bool ok = false;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS " : "FAIL ") << id << " \xe2\x80\x94 " << desc;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << std::endl;
    if (!ok) ++g_failures;
}

double seconds_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(1);
    os << std::fixed << s << " s";
    return os.str();
}

SymFunc s_elem(std::vector<int> parts) { return SymFunc::element(Basis::s(), Partition(std::move(parts))); }

bool run_command(const std::string& cmd, int& code, std::string& out) {
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return false;
    out.clear();
    std::array<char, 8192> buf;
    while (std::size_t got = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
    int status = pclose(pipe);
    code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return true;
}

// --- pinned three-variable displays -----------------------------------------

SymFunc pinned_p32_schur() {
    SymFunc e(Basis::s());
    e.add_term(Partition({3, 2}), one);
    e.add_term(Partition({3, 1, 1}), (T - Q) / (Q * T - one));
    e.add_term(Partition({2, 2, 1}),
               (Q + one) * (Q * T.pow(2) - one) * (T - Q) / ((Q * T - one).pow(2) * (Q * T + one)));
    return e;
}

SymFunc pinned_a1p32_schur() {
    SymFunc e(Basis::s());
    e.add_term(Partition({2}), (T - Q) / (Q * T - one));
    e.add_term(Partition({1, 1}),
               (Q + one) * (Q * T.pow(2) - one) * (T - Q) / ((Q * T - one).pow(2) * (Q * T + one)));
    return e;
}

SymFunc pinned_a1p32_macdonald() {
    SymFunc e(Basis::P(0));
    e.add_term(Partition({2}), (T - Q) / (Q * T - one));
    e.add_term(Partition({1, 1}),
               (T - Q) * (T + one) * (Q.pow(2) * T - one) / ((Q * T - one).pow(2) * (Q * T + one)));
    return e;
}

SymFunc pinned_clothed_32_expansion() {
    SymFunc e(Basis::s());
    e.add_term(Partition({6, 2}), -Q.pow(3));
    e.add_term(Partition({6, 1, 1}), Q.pow(2) * (Q.pow(3) - one) / (Q - one));
    e.add_term(Partition({5, 3}), Q.pow(2) * (Q.pow(5) - one) / (Q.pow(3) - one));
    e.add_term(Partition({5, 2, 1}), -Q * (Q.pow(2) + one) * (Q.pow(5) - one) / (Q.pow(3) - one));
    e.add_term(Partition({4, 3, 1}), -Q * (Q.pow(7) - one) / (Q.pow(3) - one));
    e.add_term(Partition({4, 2, 2}), (Q.pow(7) - one) / (Q - one));
    return e;
}

SymFunc pinned_clothed_23_expansion() {
    SymFunc e(Basis::s());
    e.add_term(Partition({9, 2}), Q.pow(3));
    e.add_term(Partition({7, 4}), (one - Q.pow(7)) * (one + Q.pow(4)) / (one - Q.pow(5)));
    // Cross-checked against the closed-form two-variable expansion; the
    // leading q is genuine.
    e.add_term(Partition({8, 3}),
               -Q * (one - Q.pow(2)) * (one + Q) * (one + Q.pow(2)) * (one + Q.pow(4)) / (one - Q.pow(5)));
    return e;
}

// Five-row eigenvalue tops as affine functions of k; bottoms are all k-1.
struct TableRow {
    Partition mu;
    std::array<std::pair<int, int>, 5> tops;  // top = first*k + second
};

const std::vector<TableRow> kWeightFourTable = {
    {Partition({4}), {{{5, -5}, {6, -5}, {7, -5}, {8, -5}, {9, -1}}}},
    {Partition({3, 1}), {{{5, -5}, {6, -5}, {7, -5}, {8, -4}, {9, -2}}}},
    {Partition({2, 2}), {{{5, -5}, {6, -5}, {7, -5}, {8, -3}, {9, -3}}}},
    {Partition({2, 1, 1}), {{{5, -5}, {6, -5}, {7, -4}, {8, -4}, {9, -3}}}},
    {Partition({1, 1, 1, 1}), {{{5, -5}, {6, -4}, {7, -4}, {8, -4}, {9, -4}}}},
};

}  // namespace

int main() {
    criterion("1a", "three-variable Schur display of the two-row degree-5 element, budget 10 s", [](std::string& note) {
        auto t0 = std::chrono::steady_clock::now();
        SymFunc got = schur_peel(expand_finite(macdonald_P(Partition({3, 2})), 3), 3);
        double el = seconds_since(t0);
        note = fmt_seconds(el) + " < 10 s";
        return got == pinned_p32_schur() && el < 10.0;
    });

    criterion("1b", "part-shift image of the degree-5 element in Schur and two-parameter bases", [](std::string&) {
        SymFunc img = convert(A_m(expand_finite(macdonald_P(Partition({3, 2})), 3), 1, 3), Basis::s());
        if (img != pinned_a1p32_schur()) return false;
        return convert(img, Basis::P(0)) == pinned_a1p32_macdonald();
    });

    criterion("1c", "negated-bar substitution value at [3,2], three rows, k=2", [](std::string&) {
        SymFunc lhs = convert(H_poly(Partition({3, 2}), Partition(), 3, 2, AlphabetTransform::negate_bar), Basis::m());
        RationalFunction coeff =
            (one - Q.pow(5)) * (one - Q.pow(8)) / ((one - Q) * (one - Q));
        SymFunc rhs = convert(macdonald_Q(Partition({2, 2, 1})), Basis::m())
                          .map_coefficients([](const RationalFunction& c) { return c.swap_qt().specialize_t(2); })
                          .scaled(coeff);
        return lhs == rhs;
    });

    criterion("1d", "five-factor diagonal coefficient at [4,1]/[3], two rows, k=3", [](std::string&) {
        RationalFunction star = (one - T) * (one - T.pow(2)) * (one - Q * T.pow(2)) * (one - Q.pow(2) * T.pow(2)) *
                                (one - Q.pow(3) * T.pow(2));
        star = star /
               ((one - Q) * (one - Q * T) * (one - Q.pow(2) * T) * (one - Q.pow(3) * T) * (one - Q.pow(4) * T));
        RationalFunction lhs =
            pqprime_coefficient(Partition({4, 1}), 2, 3) * RationalFunction(2) / constant_term(delta_qk(2, 3));
        if (lhs != star.specialize_t(3)) return false;
        return verify_dual_substitution(Partition({4, 1}), Partition({3}), 2, 3).pass;
    });

    criterion("1e", "n=3, k=2 chain for [2]: clothed expansion, shifted image, eigenvalue factors", [](std::string&) {
        LaurentPoly clothed = clothed_product(macdonald_P(Partition({2}), 2), 3, 2);
        if (schur_peel(clothed, 3) != pinned_clothed_32_expansion()) return false;
        SymFunc shifted = convert(A_m(clothed, 2, 3), Basis::s());
        if (shifted != s_elem({2}).scaled(RationalFunction(QInteger(7).value))) return false;
        return beta(Partition({2}), 3, 2).factors ==
               std::vector<std::pair<long, long>>{{1, 1}, {3, 1}, {7, 1}};
    });

    criterion("1f", "n=2, k=3 chain for [5,2]: clothed expansion and eigenvalue factors", [](std::string&) {
        LaurentPoly clothed = clothed_product(macdonald_P(Partition({5, 2}), 3), 2, 3);
        if (schur_peel(clothed, 2) != pinned_clothed_23_expansion()) return false;
        return beta(Partition({5, 2}), 2, 3).factors == std::vector<std::pair<long, long>>{{4, 2}, {10, 2}};
    });

    criterion("1g", "five-row eigenvalue table for weight-4 shapes at k in {2,3}", [](std::string&) {
        for (const TableRow& row : kWeightFourTable)
            for (int k : {2, 3}) {
                Partition big = add_rectangle(row.mu, 4 * (k - 1), 5);
                std::vector<std::pair<long, long>> expect;
                for (const auto& [a, b] : row.tops) expect.emplace_back(long(a) * k + b, k - 1);
                if (beta(big, 5, k).factors != expect) return false;
            }
        return true;
    });

    criterion("2a", "orthogonality, unitriangularity, Schur specialization to weight 6, warm budget 5 min",
              [](std::string& note) {
                  warm_caches(6);
                  auto t0 = std::chrono::steady_clock::now();
                  bool ok = true;
                  for (int d = 0; d <= 6; ++d) ok = ok && verify_orthogonality(d).pass;
                  double el = seconds_since(t0);
                  note = fmt_seconds(el) + " < 300 s";
                  return ok && el < 300.0;
              });

    criterion("2b", "reproducing kernels truncated to degree 3 in 3+3 variables", [](std::string&) {
        for (int d = 1; d <= 3; ++d)
            for (KernelKind which : {KernelKind::Kqt, KernelKind::lambda1})
                if (!verify_kernel(d, 3, 3, which).pass) return false;
        return true;
    });

    criterion("2c", "skew kernels for shapes of weight at most 2, degree at most 2", [](std::string&) {
        std::vector<Partition> shapes;
        for (int w = 0; w <= 2; ++w)
            for (const Partition& p : partitions_of(w)) shapes.push_back(p);
        for (const Partition& lam : shapes)
            for (const Partition& mu : shapes)
                for (int d = 1; d <= 2; ++d)
                    for (SkewKernelKind which : {SkewKernelKind::skeqKqt, SkewKernelKind::skewlambdaQ})
                        if (!verify_skew_kernel(lam, mu, d, which).pass) return false;
        return true;
    });

    criterion("2d", "parameter-swap lemma for all shapes of weight at most 5", [](std::string&) {
        for (int w = 0; w <= 5; ++w)
            for (const Partition& lam : partitions_of(w))
                if (!verify_lemma_parameter_swap(lam).pass) return false;
        return true;
    });

    criterion("2e", "scaled and negated-bar substitution sweeps, weight 4, n and k in {2,3}", [](std::string&) {
        for (int n : {2, 3})
            for (int k : {2, 3})
                for (int w = 0; w <= 4; ++w)
                    for (const Partition& lam : partitions_of(w, n))
                        for (int wm = 0; wm <= w; ++wm)
                            for (const Partition& mu : partitions_of(wm, n)) {
                                if (!lam.contains(mu)) continue;
                                if (!verify_tq_substitution(lam, mu, n, k).pass) return false;
                                if (!verify_dual_substitution(lam, mu, n, k).pass) return false;
                            }
        return true;
    });

    criterion("2f", "torus constant-term evaluations for n and k at most 3", [](std::string&) {
        for (int n = 1; n <= 3; ++n)
            for (int k = 1; k <= 3; ++k)
                if (!verify_dyson(n, k).pass) return false;
        return true;
    });

    criterion("2g", "shifted-clothing theorem and rectangle corollary sweeps", [](std::string&) {
        for (int n : {2, 3})
            for (int k : {2, 3}) {
                for (int w = 0; w <= 4; ++w)
                    for (const Partition& lam : partitions_of(w, n))
                        if (!verify_theorem_thX(lam, n, k).pass) return false;
                for (int w = 0; w <= 2; ++w)
                    for (const Partition& mu : partitions_of(w, n))
                        if (rect_in_default_sweep(mu, n, k) && !verify_corollary_rect(mu, n, k).pass)
                            return false;
            }
        return true;
    });

    criterion("2h", "eigen-equation, eigenvalue distinctness, and spectral product identity", [](std::string&) {
        for (int n : {2, 3})
            for (int k : {2, 3})
                for (int w = 0; w <= 3; ++w)
                    for (const Partition& mu : partitions_of(w, n)) {
                        if (!verify_eigen_equation(mu, n, k).pass) return false;
                        if (!verify_cherednik(mu, n, k).pass) return false;
                    }
        for (int n = 2; n <= 5; ++n)
            for (int k : {2, 3})
                for (int d = 0; d <= 4; ++d)
                    if (!verify_eigen_distinct(d, n, k).pass) return false;
        return true;
    });

    criterion("3", "geometric-alphabet projector agrees with the alternating-sum oracle", [](std::string&) {
        for (int n = 1; n <= 6; ++n)
            for (int k = 1; n * k <= 6; ++k)
                for (int w = 0; w <= 3; ++w)
                    for (const Partition& lam : partitions_of(w, n))
                        if (!verify_pi_tq_oracle(lam, n, k).pass) return false;
        return true;
    });

    criterion("4", "two full verification runs emit byte-identical reports", [](std::string& note) {
        const char* bin = std::getenv("MACQK_CLI");
        if (!bin) {
            note = "MACQK_CLI not set";
            return false;
        }
        auto dir = std::filesystem::temp_directory_path() /
                   ("macqk-accept-" + std::to_string(::getpid()));
        std::filesystem::create_directories(dir);
        std::string cmd = "MACQK_CACHE_DIR=" + dir.string() + " " + std::string(bin) +
                          " verify all --stable-timing --format json --jobs 4 2>/dev/null";
        int code1 = -1, code2 = -1;
        std::string out1, out2;
        bool ran = run_command(cmd, code1, out1) && run_command(cmd, code2, out2);
        std::filesystem::remove_all(dir);
        if (!ran) {
            note = "could not launch the binary";
            return false;
        }
        if (code1 != 0 || code2 != 0) {
            note = "exit codes " + std::to_string(code1) + ", " + std::to_string(code2);
            return false;
        }
        if (out1 != out2) {
            note = "reports differ";
            return false;
        }
        note = std::to_string(out1.size()) + " identical bytes";
        return true;
    });

    std::cout << (g_failures == 0 ? "acceptance: all criteria passed" : "acceptance: FAILURES present") << std::endl;
    return g_failures == 0 ? 0 : 1;
}
