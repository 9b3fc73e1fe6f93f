// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "ginvlab/cli.hpp"
#include "ginvlab/rankcalc.hpp"
#include "support.hpp"

using namespace ginvlab;
using ginvlab::testing::pick_rank;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int id, bool pass, const std::string& what, const std::string& detail, Clock::time_point start) {
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    std::printf("criterion %2d: %s  %s  (%s; %.1f s)\n", id, pass ? "PASS" : "FAIL", what.c_str(), detail.c_str(), secs);
    std::fflush(stdout);
    failures += !pass;
}

template <class... T>
std::string cat(const T&... xs) {
    std::ostringstream os;
    (os << ... << xs);
    return os.str();
}

bool penrose(const Matrix& a, const Matrix& g, int eq) {
    switch (eq) {
        case 1: return a * g * a == a;
        case 2: return g * a * g == g;
        case 3: return ctranspose(a * g) == a * g;
        default: return ctranspose(g * a) == g * a;
    }
}

void criterion1() {
    auto start = Clock::now();
    Rng rng(1001);
    int bad = 0;
    for (int t = 0; t < 500; ++t) {
        Matrix a = ginvlab::testing::random_shape(rng, 5, 5, t % 2 == 1);
        Matrix g = pinv(a);
        for (int eq = 1; eq <= 4; ++eq) bad += !penrose(a, g, eq);
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    report(1, bad == 0 && secs < 30, "pinv satisfies the four Penrose equations on 500 matrices up to 5x5",
           cat(bad, " failed equations, target < 30 s"), start);
}

void criterion2() {
    auto start = Clock::now();
    Rng rng(1002);
    int disagreements = 0, non_members = 0, total = 0;
    for (auto cls : kAllClasses) {
        if (cls == GInvClass::MP) continue;
        for (int t = 0; t < 100; ++t) {
            Matrix a = ginvlab::testing::random_shape(rng, 4, 4, t % 3 == 0);
            Family fam(a);
            Matrix g = fam.make(cls, fam.sample_params(rng.next()));
            bool by_equations = true;
            for (int eq = 1; eq <= 4; ++eq)
                if (class_requires(cls, eq)) by_equations &= penrose(a, g, eq);
            ++total;
            try {
                bool by_test = MemberTest(a).contains(g, cls);
                disagreements += by_test != by_equations;
                non_members += !by_test;
            } catch (const CharacterizationMismatch&) {
                ++disagreements;
            }
            non_members += !by_equations;
        }
    }
    report(2, disagreements == 0 && non_members == 0, "family members pass both membership tests (7 classes x 100)",
           cat(total, " members, ", non_members, " rejected, ", disagreements, " disagreements"), start);
}

void criterion3() {
    auto start = Clock::now();
    Rng rng(1003);
    int identity_failures = 0, checks = 0;
    for (int t = 0; t < 100; ++t) {
        bool complex = t % 4 == 3;
        std::size_t m = rng.uniform(1, 4), n = rng.uniform(1, 4), k = rng.uniform(1, 4), l = rng.uniform(1, 4);
        Matrix a = rng.matrix_of_rank(m, n, pick_rank(rng, m, n), complex);
        Matrix b = rng.matrix_of_rank(m, k, pick_rank(rng, m, k), complex);
        Matrix c = rng.matrix_of_rank(l, n, pick_rank(rng, l, n), complex);
        Matrix p = rng.matrix_of_rank(n, k, pick_rank(rng, n, k), complex);
        Matrix q = rng.matrix_of_rank(k, l, pick_rank(rng, k, l), complex);
        for (std::uint64_t s = 0; s < 20; ++s) {
            std::uint64_t s1 = derive_seed(t, {s, 1}), s2 = derive_seed(t, {s, 2});
            checks += 4;
            identity_failures += !rank_rowblock_identity(a, b, s1);
            identity_failures += !rank_colblock_identity(a, c, s1);
            try {
                identity_failures += rank_product(a, p, s1, s2) != rank(a * p);
            } catch (const IdentityViolated&) {
                ++identity_failures;
            }
            try {
                identity_failures += rank_triple_product(a, p, q, s1, s2) != rank(a * p * q);
            } catch (const IdentityViolated&) {
                ++identity_failures;
            }
        }
    }

    // extremes over {1,2}-inverses; 50 instances x 10 samples for each formula
    int out_of_range = 0, max_missed = 0, min_missed = 0, min_by_grid = 0, sampled = 0, instances = 0;
    for (int t = 0; t < 50; ++t) {
        std::size_t m = rng.uniform(1, 3), n = rng.uniform(1, 3), k = rng.uniform(1, 3), l = rng.uniform(1, 3);
        Matrix a = rng.matrix_of_rank(m, n, pick_rank(rng, m, n));
        Matrix b = rng.matrix_of_rank(m, k, pick_rank(rng, m, k));
        Matrix c = rng.matrix_of_rank(l, n, pick_rank(rng, l, n));
        Matrix d = rng.matrix_of_rank(l, k, pick_rank(rng, l, k));
        Family fam(a);
        auto e = extremal_rank_schur(a, b, c, d);
        bool hit_max = false;
        for (std::uint64_t s = 0; s < 110 && !(s >= 10 && hit_max); ++s) {
            std::size_t rk = rank(d - c * fam.sample(GInvClass::G12, derive_seed(t, {3, s})) * b);
            if (s < 10) {
                ++sampled;
                out_of_range += rk > e.max_value || rk < e.min_value;
            }
            hit_max |= rk == e.max_value;
        }
        max_missed += !hit_max;
        bool hit_min = false;
        ginvlab::testing::for_each_grid_point(2, n, m, 20000, t, [&](const std::vector<Matrix>& p) {
            if (hit_min) return;
            std::size_t rk = rank(d - c * fam.make(GInvClass::G12, {{}, p[0], p[1]}) * b);
            out_of_range += rk < e.min_value;
            hit_min |= rk == e.min_value;
        });
        min_by_grid += hit_min;
        for (std::uint64_t s = 0; s < 8 && !hit_min; ++s) {
            GInvParams p0 = s == 0 ? GInvParams{{}, Matrix::zero(n, m), Matrix::zero(n, m)} : fam.sample_params(s);
            std::size_t rk = ginvlab::testing::schur_descent(fam, b, c, d, p0.u1, p0.u2);
            out_of_range += rk < e.min_value;
            hit_min |= rk == e.min_value;
        }
        min_missed += !hit_min;
        ++instances;
    }
    for (int t = 0; t < 50; ++t) {
        std::size_t m = rng.uniform(1, 3), n = rng.uniform(1, 3), q = rng.uniform(1, 3), p = rng.uniform(1, 3);
        Matrix a = rng.matrix_of_rank(m, n, pick_rank(rng, m, n));
        Matrix b = rng.matrix_of_rank(m, q, pick_rank(rng, m, q));
        Matrix c = rng.matrix_of_rank(p, q, pick_rank(rng, p, q));
        Family fa(a), fc(c);
        auto e = extremal_rank_sandwich(a, b, c);
        auto value = [&](const Matrix& ga, const Matrix& gc) { return rank(ga * b * gc); };
        bool hit_max = false;
        for (std::uint64_t s = 0; s < 110 && !(s >= 10 && hit_max); ++s) {
            std::size_t rk = value(fa.sample(GInvClass::G12, derive_seed(t, {4, s})),
                                   fc.sample(GInvClass::G12, derive_seed(t, {5, s})));
            if (s < 10) {
                ++sampled;
                out_of_range += rk > e.max_value || rk < e.min_value;
            }
            hit_max |= rk == e.max_value;
        }
        max_missed += !hit_max;
        bool hit_min = false;
        Rng grid(derive_seed(t, {6}));
        for (int g = 0; g < 20000 && !hit_min; ++g) {
            auto draw = [&](std::size_t r, std::size_t cc) {
                Matrix x(r, cc);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < cc; ++j) x(i, j) = g == 0 ? 0 : grid.uniform(-1, 1);
                return x;
            };
            std::size_t rk = value(fa.make(GInvClass::G12, {{}, draw(n, m), draw(n, m)}),
                                   fc.make(GInvClass::G12, {{}, draw(q, p), draw(q, p)}));
            out_of_range += rk < e.min_value;
            hit_min |= rk == e.min_value;
        }
        min_by_grid += hit_min;
        for (std::uint64_t s = 0; s < 8 && !hit_min; ++s) {
            std::vector<Matrix> u{Matrix::zero(n, m), Matrix::zero(n, m), Matrix::zero(q, p), Matrix::zero(q, p)};
            if (s > 0) {
                Rng pr(s);
                u = {pr.matrix(n, m), pr.matrix(n, m), pr.matrix(q, p), pr.matrix(q, p)};
            }
            std::size_t rk = ginvlab::testing::sandwich_descent(fa, b, fc, u);
            out_of_range += rk < e.min_value;
            hit_min |= rk == e.min_value;
        }
        min_missed += !hit_min;
        ++instances;
    }
    bool pass = identity_failures == 0 && out_of_range == 0 && max_missed == 0 && min_missed == 0;
    report(3, pass, "rank formulas exact; extremal ranks bounded and attained",
           cat(checks, " identity checks with ", identity_failures, " failures; ", sampled, " sampled ranks, ",
               out_of_range, " out of range; max missed on ", max_missed, " of ", instances, "; min reached on ",
               instances - min_missed, " of ", instances, " (", min_by_grid, " by the grid alone, the rest by descent)"),
           start);
}

void criterion4() {
    auto start = Clock::now();
    Rng rng(1004);
    int disagreements = 0, predicate_false = 0, inconclusive = 0, predicate_true = 0;
    for (int t = 0; t < 100; ++t) {
        auto inst = ginvlab::testing::four_block_instance(rng, t % 10, t % 3 == 0);
        Family fam(inst.a);
        auto v = solvability_g1(inst.a, inst.b, inst.c, inst.d);
        disagreements += v.exists_some != ginvlab::testing::exists_g1_solution(inst.a, inst.b, inst.c, inst.d);
        for (auto cls : kAllClasses) {
            bool predicate =
                cls == GInvClass::G1 ? v.holds_for_all : forall_identity(cls, inst.a, inst.b, inst.c, inst.d);
            bool counterexample = false;
            for (std::uint64_t s = 0; s < 500 && !counterexample; ++s)
                counterexample =
                    inst.c * fam.sample(cls, derive_seed(t, {static_cast<std::uint64_t>(cls), s})) * inst.b != inst.d;
            if (predicate) {
                ++predicate_true;
                disagreements += counterexample;
            } else {
                ++predicate_false;
                inconclusive += !counterexample;
            }
        }
    }
    bool pass = disagreements == 0 && inconclusive * 20 < predicate_false;
    report(4, pass, "C G B = D predicates agree with 500-member sampling (100 instances x 8 classes)",
           cat(predicate_true, " true, ", predicate_false, " false, ", disagreements, " disagreements, ",
               inconclusive, " inconclusive"),
           start);
}

void criterion5() {
    auto start = Clock::now();
    Rng rng(1005);
    const GInvClass classes[] = {GInvClass::G1, GInvClass::G12};
    int failures5 = 0, checks = 0;
    for (int t = 0; t < 50; ++t) {
        bool complex = t % 5 == 4;
        std::size_t m = rng.uniform(1, 4), n = rng.uniform(1, 4), p = rng.uniform(1, 4), q = rng.uniform(1, 4);
        Matrix a = rng.matrix_of_rank(m, n, pick_rank(rng, m, n), complex);
        Matrix b = rng.matrix_of_rank(n, p, pick_rank(rng, n, p), complex);
        Matrix c = rng.matrix_of_rank(p, q, pick_rank(rng, p, q), complex);
        Matrix ab = a * b, abc = ab * c;
        for (std::uint64_t s = 0; s < 10; ++s) {
            std::uint64_t seed = derive_seed(t, {s});
            for (auto cls : classes) {
                for (const auto& x : mixed_rol_candidates_two(a, b, cls, seed)) {
                    ++checks;
                    failures5 += !is_member(x.value, ab, cls);
                }
                for (const auto& x : mixed_rol_candidates_three(a, b, c, cls, seed)) {
                    ++checks;
                    failures5 += !is_member(x.value, abc, cls);
                }
            }
            checks += 2;
            failures5 += !huang_construction_two(a, b, GInvClass::G1, seed).member;
            failures5 += !huang_construction_three(a, b, c, GInvClass::G1, seed).member;
        }
    }
    report(5, failures5 == 0, "unconditional constructions are members (50 instances x 10 seeds)",
           cat(checks, " membership checks, ", failures5, " failures"), start);
}

struct SweepResult {
    int code;
    nlohmann::ordered_json j;
};

SweepResult sweep(bool sampling_only) {
    std::vector<std::string> args{"ginvlab", "sweep", "--count", "100", "--budget", "64", "--max-m", "4",
                                  "--max-n", "3",     "--complex", "--seed", "6"};
    if (sampling_only) args.push_back("--sampling-only");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, code == 1 ? nlohmann::ordered_json{} : nlohmann::ordered_json::parse(out.str())};
}

void criterion6() {
    auto start = Clock::now();
    auto exact = sweep(false);
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    auto sampled = sweep(true);
    std::string cells;
    if (exact.code != 1)
        for (const auto& c : exact.j["cells"])
            if (c["violations"].get<std::size_t>() > 0)
                cells += cat(" ", c["case_id"].get<std::string>(), "(", c["violations"].get<std::size_t>(), ")");
    auto count = [](const SweepResult& r) {
        return r.code == 1 ? std::string("input error") : std::to_string(r.j["total_violations"].get<std::size_t>());
    };
    std::string detail = cat("exit code ", exact.code, ", ", count(exact), " violations with the exact intersection solver",
                             cells.empty() ? "" : ":" + cells, "; without it (empty searches Inconclusive) exit code ",
                             sampled.code, ", ", count(sampled), " violations; exact run ",
                             static_cast<int>(secs), " s, target < 300 s");
    report(6, exact.code == 0 && secs < 300, "table survey over 100 stratified instances, budget 64", detail, start);
}

void criterion7() {
    auto start = Clock::now();
    int mismatches = 0, holds = 0;
    for (std::uint64_t t = 0; t < 200; ++t) {
        Rng rng(derive_seed(1007, {t}));
        std::size_t m = rng.uniform(1, 4), n = rng.uniform(1, 3);
        bool complex = t % 2 == 1;
        Matrix b = rng.matrix_of_rank(m, n, pick_rank(rng, m, n), complex);
        // a quarter of the triples use unitary outer factors, where the law always holds
        Matrix a = t % 4 == 0 ? rng.unitary(m, complex) : rng.nonsingular(m, complex);
        Matrix c = t % 4 == 0 ? rng.unitary(n, complex) : rng.nonsingular(n, complex);
        auto h = hartwig_characterizations(TripleInstance(a, b, c));
        mismatches += !h.consistent();
        holds += h.dagger_rol;
    }
    report(7, mismatches == 0, "dagger law of ABC agrees with its four characterizations on 200 triples",
           cat(holds, " triples where the law holds, ", mismatches, " mismatches"), start);
}

void criterion8() {
    auto start = Clock::now();
    int bad = 0;
    for (std::uint64_t t = 0; t < 50; ++t) {
        Rng rng(derive_seed(1008, {t}));
        std::size_t n = rng.uniform(1, 4);
        Matrix a = rng.unitary(n, t % 2 == 1);
        Matrix b = rng.matrix_of_rank(n, n, pick_rank(rng, n, n), t % 3 == 0);
        bad += pinv(a * b * ctranspose(a)) != a * pinv(b) * ctranspose(a);
    }
    report(8, bad == 0, "(A B A*)^+ = A B^+ A* for 50 unitary A", cat(bad, " mismatches"), start);
}

void criterion9() {
    auto start = Clock::now();
    Rng rng(1009);
    int bad = 0;
    for (int t = 0; t < 200; ++t) {
        std::size_t m = rng.uniform(1, 4), n = rng.uniform(1, 4);
        bool complex = t % 3 == 0;
        Matrix a = rng.matrix_of_rank(m, n, pick_rank(rng, m, n), complex);
        Matrix b = rng.matrix_of_rank(m, n, pick_rank(rng, m, n), complex);
        try {
            bad += sum_pinv_via_block(a, b) != pinv(a + b);
        } catch (const IdentityViolated&) {
            ++bad;
        }
    }
    report(9, bad == 0, "(A + B)^+ through the 2x2 block matrix on 200 pairs", cat(bad, " mismatches"), start);
}

void criterion10() {
    auto start = Clock::now();
    Rng rng(1010);
    const GaussianRational scalars[5][2] = {{1, 1}, {2, 3}, {GaussianRational(1, 2), -3},
                                           {GaussianRational(-1, 3), GaussianRational(5, 2)},
                                           {GaussianRational(mpq_class(1), mpq_class(1)), 4}};
    SurveyOptions opt;
    opt.budget = 4;
    int bad = 0, minus_holds = 0, total = 0;
    for (int t = 0; t < 100; ++t) {
        std::size_t n = rng.uniform(1, 4);
        Matrix a = rng.idempotent(n, rng.uniform(0, static_cast<long>(n)));
        Matrix b = rng.idempotent(n, rng.uniform(0, static_cast<long>(n)));
        for (const auto& ab : scalars) {
            auto r = idempotent_rol(a, b, ab[0], ab[1], opt);
            ++total;
            bad += !r.factorization;
            minus_holds += r.factorization_minus;
        }
    }
    report(10, bad == 0, "I + aA + bB factorization for 100 idempotent pairs x 5 scalar pairs",
           cat(bad, " of ", total, " failed with lambda = ab/((1+a)(1+b)); lambda = ab/((1-a)(1-b)) held on ",
               minus_holds),
           start);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    std::printf("%d of 10 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
