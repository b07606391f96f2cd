// Acceptance suite: exact reproduction of both worked fixtures plus the
// exhaustive law checks over randomly generated systems. Prints one
// pass/fail line per criterion; exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "holarb/market_spec.hpp"
#include "holarb/strategy.hpp"
#include "oracles.hpp"

using namespace holarb;

namespace {

struct Checker {
    long checks = 0;
    std::vector<std::string> failures;

    void expect(bool condition, const std::string& what) {
        ++checks;
        if (!condition && failures.size() < 8) failures.push_back(what);
        if (!condition && failures.size() == 8) failures.push_back("...");
    }
    bool ok() const { return failures.empty(); }
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds; // 0 = no budget
    Checker checker;
    double elapsed = 0;

    bool passed() const {
        return checker.ok() && (budget_seconds == 0 || elapsed <= budget_seconds);
    }
};

std::string rv(const std::vector<Rat>& values) {
    std::string out = "(";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ", ";
        out += to_string(values[i]);
    }
    return out + ")";
}

bool values_equal(const RandomVariable& v, const std::vector<Rat>& expected) {
    return v.values == expected;
}

} // namespace

int main() {
    std::vector<Criterion> criteria;
    criteria.push_back({1, "simple fixture reproduction (exact)", 1.0, {}, 0});
    criteria.push_back({2, "stronger fixture reproduction (exact)", 1.0, {}, 0});
    criteria.push_back({3, "cocycle law over 500 random systems", 30.0, {}, 0});
    criteria.push_back({4, "trivial holonomy over 200 measure-preserving systems", 30.0, {}, 0});
    criteria.push_back({5, "conditional expectation defining identity, full power set", 30.0, {}, 0});
    criteria.push_back({6, "AB wealth floor and expectations", 0, {}, 0});
    criteria.push_back({7, "self-financing trace terminal value", 0, {}, 0});
    criteria.push_back({8, "holonomy recursion vs unrolled oracle", 0, {}, 0});

    Checker& c1 = criteria[0].checker;
    Checker& c2 = criteria[1].checker;
    Checker& c3 = criteria[2].checker;
    Checker& c4 = criteria[3].checker;
    Checker& c5 = criteria[4].checker;
    Checker& c6 = criteria[5].checker;
    Checker& c7 = criteria[6].checker;
    Checker& c8 = criteria[7].checker;

    auto timed = [&](Criterion& criterion, auto&& body) {
        auto start = std::chrono::steady_clock::now();
        body();
        criterion.elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    };

    // criteria 6 and 7 run over every holonomy produced by criteria 1-4
    auto visit_instance = [&](const Filtration& filtration, const Loop& loop,
                              const RandomVariable& hol) {
        const FinProbSpace& base = filtration.space_of(loop.base());
        StrategyReport report = ab_wealth(base, hol);
        for (std::size_t x = 0; x < base.size(); ++x) {
            if (base.weights[x] == 0) continue;
            c6.expect(report.wealth.values[x] >= 1, "V < 1 at a positive-weight point");
            c6.expect((report.wealth.values[x] > 1) == (hol.values[x] > 1),
                      "strict gain set differs from {Hol > 1}");
        }
        auto trace = self_financing_wealth_trace(filtration, loop);
        c7.expect(strict_equal(trace.back(), hol), "terminal trace value != holonomy");
        c7.expect(ae_equal(base, trace.back(), hol), "terminal trace value != holonomy (a.e.)");
    };

    // ---- criterion 1: the simple worked example, exactly ----
    timed(criteria[0], [&] {
        Filtration f = build_validated_filtration(simple_fixture());
        c1.expect(values_equal(f.distortion("i1"), {Rat(0), Rat(2)}),
                  "dF(i1) = " + rv(f.distortion("i1").values) + ", expected (0, 2)");
        c1.expect(values_equal(f.distortion("i2"), {Rat(1)}), "dF(i2) != 1");
        c1.expect(values_equal(f.distortion("i3"), {Rat(2), Rat(2, 3)}),
                  "dF(i3) = " + rv(f.distortion("i3").values) + ", expected (2, 2/3)");
        std::vector<std::string> ids{"i1", "i2", "i3"};
        Loop loop = make_loop(f.category(), ids);
        HolonomyReport report = classify_loop(f, loop, Rat(0));
        c1.expect(values_equal(report.hol, {Rat(0), Rat(4)}),
                  "Hol = " + rv(report.hol.values) + ", expected (0, 4)");
        c1.expect(report.p_gt_1 == Rat(1, 2), "mu(Hol > 1) != 1/2");
        c1.expect(report.classification == LoopClass::strong, "classification != strong");
        visit_instance(f, loop, report.hol);

        // fixture expectation for criterion 6: E[V] = 5/2
        StrategyReport wealth = ab_wealth(f.space_of("t0"), report.hol);
        c6.expect(wealth.expected_wealth == Rat(5, 2), "simple fixture E[V] != 5/2");
        c6.expect(wealth.p_strict_gain == Rat(1, 2), "simple fixture p(V>1) != 1/2");
    });

    // ---- criterion 2: the stronger worked example, exactly ----
    timed(criteria[1], [&] {
        Filtration f = build_validated_filtration(stronger_fixture());
        c2.expect(values_equal(f.distortion("i1"), {Rat(1), Rat(1)}), "dF(i1) != 1");
        c2.expect(values_equal(f.distortion("i2"), {Rat(1), Rat(2), Rat(1, 2)}),
                  "dF(i2) = " + rv(f.distortion("i2").values) + ", expected (1, 2, 1/2)");
        c2.expect(values_equal(f.distortion("i3"), {Rat(1), Rat(0), Rat(3, 2)}),
                  "dF(i3) = " + rv(f.distortion("i3").values) + ", expected (1, 0, 3/2)");
        std::vector<std::string> ids{"i1", "i2", "i3"};
        Loop loop = make_loop(f.category(), ids);
        HolonomyTrace trace = holonomy(f, loop);
        const Arrow& i2 = f.category().arrow("i2");
        RandomVariable moved =
            cond_exp(f.map_of("i2"), f.map_domain(i2), f.map_codomain(i2), trace.h[2]);
        c2.expect(values_equal(moved, {Rat(1), Rat(3), Rat(0)}),
                  "E(F(i2))(h_3) = " + rv(moved.values) + ", expected (1, 3, 0)");
        c2.expect(values_equal(trace.h[1], {Rat(1), Rat(6), Rat(0)}),
                  "h_2 = " + rv(trace.h[1].values) + ", expected (1, 6, 0)");
        c2.expect(values_equal(trace.hol, {Rat(1), Rat(2)}),
                  "Hol = " + rv(trace.hol.values) + ", expected (1, 2)");
        HolonomyReport report = classify_loop(f, loop, Rat(0));
        c2.expect(report.p_ge_1 == 1, "mu(Hol >= 1) != 1");
        c2.expect(report.p_gt_1 == Rat(3, 4), "mu(Hol > 1) != 3/4");
        visit_instance(f, loop, trace.hol);

        StrategyReport wealth = ab_wealth(f.space_of("t0"), trace.hol);
        c6.expect(wealth.expected_wealth == Rat(7, 4), "stronger fixture E[V] != 7/4");
    });

    // ---- criterion 3: cocycle law, seeds 0..499 ----
    timed(criteria[2], [&] {
        long pairs = 0;
        for (std::uint64_t seed = 0; seed < 500; ++seed) {
            MarketSpec spec = generate_random_system(
                oracles::options_for_seed(seed, false, seed % 7 == 0));
            Filtration f = build_filtration(spec);
            for (const auto& i : f.category().arrows)
                for (const auto& j : f.category().arrows) {
                    if (i.dst != j.src) continue;
                    ++pairs;
                    CocycleReport report = check_cocycle(f, i.id, j.id);
                    c3.expect(report.ok, "nonzero residual for (" + i.id + ", " + j.id +
                                             ") at seed " + std::to_string(seed));
                }
        }
        c3.expect(pairs >= 500, "fewer composable pairs than systems");
    });

    // ---- criterion 4: trivial distortion => trivial holonomy (mp systems) ----
    timed(criteria[3], [&] {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            MarketSpec spec = generate_random_system(oracles::options_for_seed(seed, true));
            Filtration f = build_filtration(spec);
            for (const auto& arrow : f.category().arrows) {
                const FinProbSpace& here = f.map_codomain(arrow);
                c4.expect(ae_equal(here, f.distortion(arrow.id), constant_variable(here, 1)),
                          "non-trivial distortion at seed " + std::to_string(seed));
            }
            for (const auto& object : f.category().objects) {
                const FinProbSpace& base = f.space_of(object);
                for (const auto& loop :
                     enumerate_based_loops(f.category(), object, 4, true, 100000)) {
                    RandomVariable hol = holonomy(f, loop).hol;
                    c4.expect(ae_equal(base, hol, constant_variable(base, 1)),
                              "non-trivial holonomy at seed " + std::to_string(seed));
                    visit_instance(f, loop, hol);
                }
            }
        }
    });

    // ---- criterion 5: defining identity over the full power set ----
    timed(criteria[4], [&] {
        std::mt19937_64 rng(424242);
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            MarketSpec spec = generate_random_system(
                oracles::options_for_seed(seed, false, seed % 2 == 0));
            Filtration f = build_filtration(spec);
            for (const auto& arrow : f.category().arrows) {
                const BackwardMap& map = f.map_of(arrow.id);
                const FinProbSpace& domain = f.map_domain(arrow);
                const FinProbSpace& codomain = f.map_codomain(arrow);
                for (int rep = 0; rep < 10; ++rep) {
                    RandomVariable g = oracles::random_variable(rng, domain);
                    c5.expect(oracles::defining_identity_holds(map, domain, codomain, g),
                              "identity violated at seed " + std::to_string(seed) + ", arrow " +
                                  arrow.id);
                }
            }
        }
    });

    // ---- criterion 8: recursion vs unrolled oracle ----
    timed(criteria[7], [&] {
        for (std::uint64_t seed = 0; seed < 100; ++seed) {
            MarketSpec spec = generate_random_system(oracles::options_for_seed(seed));
            Filtration f = build_filtration(spec);
            for (const auto& object : f.category().objects)
                for (const auto& loop :
                     enumerate_based_loops(f.category(), object, 4, true, 100000)) {
                    c8.expect(strict_equal(holonomy(f, loop).hol,
                                           oracles::unrolled_holonomy(f, loop)),
                              "recursion disagrees with oracle at seed " + std::to_string(seed));
                }
        }
    });

    // ---- report ----
    int failed = 0;
    for (const auto& criterion : criteria) {
        const bool pass = criterion.passed();
        if (!pass) ++failed;
        std::printf("%s  %d  %-55s [%ld checks, %.2fs]\n", pass ? "PASS" : "FAIL", criterion.id,
                    criterion.name.c_str(), criterion.checker.checks, criterion.elapsed);
        for (const auto& failure : criterion.checker.failures)
            std::printf("        - %s\n", failure.c_str());
        if (criterion.budget_seconds != 0 && criterion.elapsed > criterion.budget_seconds)
            std::printf("        - over time budget of %.0fs\n", criterion.budget_seconds);
    }
    std::printf("%zu criteria, %d failed\n", criteria.size(), failed);
    return failed == 0 ? 0 : 1;
}
