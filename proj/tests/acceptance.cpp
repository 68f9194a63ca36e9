// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "hhcalc/cohomology.hpp"
#include "hhcalc/parse.hpp"
#include "oracles.hpp"

using namespace hhcalc;

namespace {

template <ExactField K>
Cohomology<K> make(const K& field, int T, const char* q) {
    return Cohomology<K>(Algebra<K>(T, FieldSpec<K>(field, parse_q(field, q))));
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return "(" + s + ")";
}

std::vector<long> hh_column(const CohomologyReport& rep) {
    std::vector<long> out;
    for (const auto& d : rep.degrees) out.push_back(d.hh);
    return out;
}

struct Result {
    bool pass = true;
    std::string detail;
    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Result hh_case(const std::function<CohomologyReport()>& compute, const std::vector<long>& want, double limit) {
    Result r;
    const auto t0 = Clock::now();
    const auto rep = compute();
    const double secs = seconds_since(t0);
    const auto got = hh_column(rep);
    if (got != want) r.fail("got " + join(got) + ", want " + join(want));
    if (!rep.all_match) r.fail("closed-form comparison reported a mismatch");
    if (secs >= limit) r.fail("took " + std::to_string(secs) + " s, limit " + std::to_string(limit) + " s");
    if (r.pass) {
        std::ostringstream os;
        os << join(got) << " in " << secs << " s";
        r.detail = os.str();
    }
    return r;
}

Result criterion1() {
    auto r = hh_case([] { return make(RationalField{}, 0, "2,1,1,1").hh_dimensions(12); },
                     {1, 2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, 10.0);
    const auto C = make(RationalField{}, 0, "2,1,1,1");
    if (C.algebra().dim() != 16) r.fail("dim A != 16");
    if (C.algebra().hom_space_basis(0, 0).size() + C.algebra().hom_space_basis(0, 1).size() +
            C.algebra().hom_space_basis(0, 2).size() + C.algebra().hom_space_basis(0, 3).size() !=
        4)
        r.fail("e_0 A is not 4-dimensional");
    return r;
}

Result criterion2() {
    return hh_case([] { return make(RationalField{}, 1, "2,1,1,1").hh_dimensions(9); }, {3, 4, 3, 2, 2, 2, 2, 2, 2, 2},
                   60.0);
}

Result criterion3() {
    return hh_case([] { return make(RatFuncField(3), 1, "t,1,1,1").hh_dimensions(9); }, {3, 5, 4, 2, 2, 4, 4, 2, 2, 4},
                   120.0);
}

template <ExactField K>
void complex_case(Result& r, const K& field, int T, const char* q, int& runs) {
    const auto C = make(field, T, q);
    const auto rep = C.resolution().verify_complex(13);
    ++runs;
    if (!rep.ok())
        r.fail(std::string(K::name()) + " T=" + std::to_string(T) + " q=" + q + ": nonzero at n=" +
               std::to_string(rep.failures.front().n));
}

Result criterion4() {
    Result r;
    int runs = 0;
    for (int T = 0; T <= 2; ++T) {
        complex_case(r, RationalField{}, T, "2,1,1,1", runs);
        complex_case(r, RationalField{}, T, "1/2,-3,5,7", runs);
        complex_case(r, RatFuncField(3), T, "t,1,1,1", runs);
        complex_case(r, RatFuncField(5), T, "t,t+1,2,(t+2)/t", runs);
    }
    if (r.pass) r.detail = std::to_string(runs) + " runs, d^n d^(n+1) = 0 for n <= 12";
    return r;
}

Result criterion5() {
    Result r;
    for (int T = 0; T <= 2; ++T) {
        const auto C = make(RationalField{}, T, "2,1,1,1");
        for (int n = 0; n <= 12; ++n) {
            const long got = static_cast<long>(C.hom_basis(n).size());
            if (got != hom_dim_formula(n, T))
                r.fail("T=" + std::to_string(T) + " n=" + std::to_string(n) + ": " + std::to_string(got));
        }
        for (int n = 0; n <= 4; ++n)
            if (C.delta_matrix(n).matrix.cols() != C.hom_basis(n).size()) r.fail("delta column count");
    }
    if (make(RationalField{}, 1, "2,1,1,1").hom_basis(5).size() != 96) r.fail("n=5, T=1 is not 96");
    if (r.pass) r.detail = "n <= 12, T in {0,1,2}";
    return r;
}

template <ExactField K>
void kernel_dims_case(Result& r, const Cohomology<K>& C, const std::string& label) {
    const auto rep = C.hh_dimensions(10);
    for (const auto& d : rep.degrees)
        if (d.ker_dim != d.ker_oracle)
            r.fail(label + " m=" + std::to_string(d.n) + ": " + std::to_string(d.ker_dim) + " vs " +
                   std::to_string(d.ker_oracle));
}

Result criterion6() {
    Result r;
    const auto t0 = make(RationalField{}, 0, "2,1,1,1");
    const auto rep = t0.hh_dimensions(4);
    std::vector<long> first;
    for (const auto& d : rep.degrees) first.push_back(d.ker_dim);
    if (first != std::vector<long>{1, 5, 12, 0, 0}) r.fail("T=0 kernels " + join(first));
    kernel_dims_case(r, t0, "Q T=0");
    kernel_dims_case(r, make(RationalField{}, 1, "2,3,5,7"), "Q T=1");
    kernel_dims_case(r, make(RatFuncField(3), 0, "t,1,1,1"), "F3 T=0");
    kernel_dims_case(r, make(RatFuncField(3), 1, "t,1,1,1"), "F3 T=1 (char | 3)");
    kernel_dims_case(r, make(RatFuncField(5), 1, "t,1,1,1"), "F5 T=1");
    if (r.pass) r.detail = "m <= 10, T in {0,1}, char | 2T+1 and char does not divide 2T+1";
    return r;
}

template <ExactField K>
void kernel_basis_case(Result& r, const Cohomology<K>& C, const std::string& label) {
    for (int n = 0; n <= 8; ++n) {
        const auto c = C.kernel_basis_check(n);
        if (!c.ok())
            r.fail(label + " n=" + std::to_string(n) + ": in_kernel=" + std::to_string(c.in_kernel) +
                   " independent=" + std::to_string(c.independent) + " count=" + std::to_string(c.count) +
                   " kernel=" + std::to_string(c.kernel_dim));
    }
}

Result criterion7() {
    Result r;
    kernel_basis_case(r, make(RationalField{}, 0, "2,1,1,1"), "Q T=0");
    kernel_basis_case(r, make(RationalField{}, 1, "2,3,5,7"), "Q T=1");
    kernel_basis_case(r, make(RatFuncField(3), 0, "t,1,1,1"), "F3 T=0");
    kernel_basis_case(r, make(RatFuncField(3), 1, "t,1,1,1"), "F3 T=1");
    kernel_basis_case(r, make(RatFuncField(5), 1, "t,t+1,2,(t+2)/t"), "F5 T=1");
    if (r.pass) r.detail = "n <= 8, both branches";
    return r;
}

Result criterion8() {
    Result r;
    const RationalField Q;
    for (int T = 0; T <= 2; ++T) {
        const auto A = make(Q, T, "2,3,5,7").algebra();
        const std::size_t want = static_cast<std::size_t>(32 * T + 16);
        if (A.dim() != want) r.fail("dim A at T=" + std::to_string(T));
        if (oracle::brute_force_dim(T, A.spec()) != want) r.fail("brute-force dim at T=" + std::to_string(T));
        for (const char* q : {"2,1,1,1", "2,3,5,7", "1/2,-1,3,4"})
            if (make(Q, T, q).algebra().center_dimension() != static_cast<std::size_t>(2 * T + 1))
                r.fail(std::string("center at q=") + q);
        const int s = 4 * T + 2;
        for (int i = 0; i < 4; ++i) {
            Word mixed = Word::power(i, 0, 1);
            mixed.append(1, 1);
            Word mixed2 = Word::power(i, 1, 1);
            mixed2.append(0, 1);
            auto rel = A.normalize(Word::power(i, i, s)).scaled(A.spec().q_at(i));
            rel += A.normalize(Word::power(i, i + 1, s));
            if (!A.normalize(mixed).is_zero() || !A.normalize(mixed2).is_zero() || !rel.is_zero())
                r.fail("ideal generator at vertex " + std::to_string(i));
        }
        const auto b = A.basis();
        for (const auto& x : b)
            for (const auto& y : b)
                for (const auto& z : b) {
                    AlgebraElement<RationalField> ex, ey, ez;
                    ex.add(x, Rational(1));
                    ey.add(y, Rational(1));
                    ez.add(z, Rational(1));
                    if (!(A.multiply(A.multiply(ex, ey), ez) == A.multiply(ex, A.multiply(ey, ez))))
                        r.fail("associativity at T=" + std::to_string(T));
                }
    }
    if (r.pass) r.detail = "T in {0,1,2}";
    return r;
}

Result criterion9() {
    Result r;
    const auto a = oracle::check_s_identities(RationalField{}, oracle::random_rational, 1000, 101);
    const auto b = oracle::check_s_identities(
        RatFuncField(3), [](std::mt19937& g) { return oracle::random_ratfunc(g, 3); }, 1000, 103);
    if (a.failures) r.fail("rational: " + a.first_failure);
    if (b.failures) r.fail("ratfunc: " + b.first_failure);
    if (r.pass) r.detail = std::to_string(a.instances) + " + " + std::to_string(b.instances) + " instances";
    return r;
}

Result criterion10() {
    Result r;
    if (!make(RationalField{}, 0, "2,1,1,1").resolution().linearity_check(12)) r.fail("T=0 not linear");
    if (!make(RatFuncField(3), 0, "t,1,1,1").resolution().linearity_check(12)) r.fail("T=0 over F3(t) not linear");
    for (int T = 0; T <= 2; ++T) {
        if (!make(RationalField{}, T, "2,1,1,1").resolution().minimality_check(12)) r.fail("not minimal, Q");
        if (!make(RatFuncField(3), T, "t,1,1,1").resolution().minimality_check(12)) r.fail("not minimal, F3");
    }
    if (r.pass) r.detail = "linear at T=0 for n <= 12; minimal for T <= 2, n <= 12";
    return r;
}

int exit_status(const std::string& command) {
    const int raw = std::system(command.c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

Result criterion11() {
    Result r;
    const std::string exe = HHCALC_CLI_PATH;
    const std::vector<std::string> rejected = {
        "dims --q 1,1,1,1",
        "dims --T 1 --q 1,1,1,1",
        "dims --field ratfunc --p 3 --q t,1/t,1,1",
        "dims --field ratfunc --p 5 --q t,2/t,1,1",
        "oracle-check --field ratfunc --p 7 --q 3,1,1,1",
    };
    for (const auto& args : rejected) {
        const int code = exit_status(exe + " " + args + " > /dev/null 2>&1");
        if (code != 2) r.fail("'" + args + "' exited " + std::to_string(code));
    }
    const int ok = exit_status(exe + " dims --field ratfunc --p 3 --q t,1,1,1 --max-n 2 > /dev/null 2>&1");
    if (ok != 0) r.fail("valid parameters exited " + std::to_string(ok));
    if (r.pass) r.detail = std::to_string(rejected.size()) + " rejected with exit 2";
    return r;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
        {"AC1  T=0 Q q=(2,1,1,1): HH^0..12 = (1,2,1,0,...)", criterion1},
        {"AC2  T=1 Q q=(2,1,1,1): HH^0..9", criterion2},
        {"AC3  T=1 F_3(t) q=(t,1,1,1): HH^0..9", criterion3},
        {"AC4  d^n d^(n+1) = 0 on both backends", criterion4},
        {"AC5  hom-space dimensions", criterion5},
        {"AC6  kernel dimensions at shifted index", criterion6},
        {"AC7  closed-form kernel bases", criterion7},
        {"AC8  algebra: dimension, center, ideal, associativity", criterion8},
        {"AC9  S-product identities (randomized)", criterion9},
        {"AC10 linearity at T=0 and minimality", criterion10},
        {"AC11 root-of-unity configuration guard", criterion11},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Result r;
        try {
            r = run();
        } catch (const std::exception& e) {
            r.fail(std::string("exception: ") + e.what());
        }
        if (!r.pass) ++failed;
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << name << "  -- " << r.detail << std::endl;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed"
              << std::endl;
    return failed == 0 ? 0 : 1;
}
