// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "comodule/codec.hpp"
#include "comodule/demos.hpp"
#include "comodule/lawcheck.hpp"
#include "comodule/mendler.hpp"

using namespace comodule;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void suites(Outcome& o, const std::vector<std::string>& names) {
    for (const auto& n : names) {
        auto t0 = Clock::now();
        SuiteReport r = run_suite(n);
        double s = seconds_since(t0);
        bool good = r.ok() && r.run > 0 && r.skipped == 0;
        o.ok = o.ok && good;
        o.detail << "  " << n << ": " << r.passed << "/" << r.run << " passed, " << r.skipped << " skipped, "
                 << std::fixed << std::setprecision(1) << s << " s" << (good ? "" : "  <-- FAIL") << "\n";
        for (const auto& c : r.counterexamples) o.detail << "    " << c.law << ": " << c.detail.to_string() << "\n";
    }
}

void time_limit(Outcome& o, Clock::time_point t0, double limit) {
    double s = seconds_since(t0);
    bool good = s < limit;
    o.ok = o.ok && good;
    o.detail << "  total " << std::fixed << std::setprecision(1) << s << " s (limit " << limit << " s)"
             << (good ? "" : "  <-- FAIL") << "\n";
}

Outcome c1() {
    Outcome o;
    auto t0 = Clock::now();
    suites(o, {"monad-laws:tree"});
    time_limit(o, t0, 60);
    return o;
}

Outcome c2() {
    Outcome o;
    suites(o, {"comodule-laws:tree", "comodule-laws:tree-exception", "comodule-laws:tree-state"});
    return o;
}

Outcome c3() {
    Outcome o;
    suites(o, {"representation", "container-category"});
    return o;
}

Outcome c4() {
    Outcome o;
    suites(o, {"algebra-translation"});
    return o;
}

Outcome c5() {
    Outcome o;
    suites(o, {"mendler-coherence:finite-powerset", "monad-laws:finite-powerset", "mendler-coherence:identity",
               "monad-laws:identity", "mendler-coherence:trivial", "monad-laws:trivial", "mendler-coherence:exception",
               "monad-laws:exception", "mendler-coherence:io", "monad-laws:io", "monad-laws:io-tree"});
    return o;
}

Outcome c6() {
    Outcome o;
    suites(o, {"finite-support", "comodule-laws:finite-powerset"});
    std::size_t reps = 0;
    for (const auto& stem : demo_files()) {
        Document d = demo_document(stem);
        if (!d.representation || d.representation->monad != "finite-powerset") continue;
        ++reps;
        Representation r = d.build_representation();
        auto hs = cointerpret_assignments(r.domain);
        std::size_t triples = 0, bad = 0;
        for (const auto& b : enumerate(r.codomain.shapes()))
            for (const auto& h1 : hs)
                for (const auto& h2 : hs) {
                    ++triples;
                    if (!check_finite_support(r, h1, h2, b)) ++bad;
                }
        o.ok = o.ok && bad == 0 && triples > 0;
        o.detail << "  demo " << stem << ": " << triples << " (h, h', b) triples, " << bad << " failures\n";
    }
    o.ok = o.ok && reps > 0;
    return o;
}

Outcome c7() {
    Outcome o;
    auto t0 = Clock::now();
    suites(o, {"io-kleisli", "io-rho", "comodule-laws:io-state", "comodule-laws:io-tree-state", "effect-squares"});
    time_limit(o, t0, 300);
    return o;
}

Outcome c8() {
    Outcome o;
    suites(o, {"pcont-heyting", "pcont-kleisli", "monad-laws:inhabited-powerset", "mendler-coherence:inhabited-powerset",
               "comodule-laws:inhabited-powerset"});
    return o;
}

Outcome c9() {
    Outcome o;
    auto fs = mutation_fixtures();
    o.ok = fs.size() >= 5;
    for (const auto& f : fs) {
        SuiteReport r = f.run(SuiteParams{});
        bool caught = r.failed > 0 && !r.counterexamples.empty();
        o.ok = o.ok && caught;
        o.detail << "  " << f.name << " (" << f.suite << "): " << (caught ? "caught" : "MISSED  <-- FAIL") << "\n";
        if (caught) o.detail << "    " << r.counterexamples.front().law << ": " << r.counterexamples.front().detail.to_string() << "\n";
    }
    return o;
}

Outcome c10() {
    Outcome o;
    DemoResult baire = run_demo("baire");
    bool two = baire.ok && baire.text.find("F(succ) = 2\n") != std::string::npos;
    o.detail << "  demo baire prints 2: " << (two ? "yes" : "no  <-- FAIL") << "\n";
    DemoResult ex = run_demo("exceptional");
    auto raise = ex.text.find("(raises)");
    bool indep = ex.ok && raise != std::string::npos && ex.text.find("independent of h", raise) != std::string::npos;
    o.detail << "  demo exceptional, inr branch independent of h: " << (indep ? "yes" : "no  <-- FAIL") << "\n";
    bool trips = true;
    for (const auto& stem : demo_files()) {
        Json j = Json::parse(demo_file_text(stem));
        bool same = emit_document(parse_document(j)) == j;
        trips = trips && same;
        if (!same) o.detail << "  " << stem << ".json does not round-trip  <-- FAIL\n";
    }
    o.detail << "  " << demo_files().size() << " demo files round-trip: " << (trips ? "yes" : "no") << "\n";
    o.ok = two && indep && trips;
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"tree monad laws", c1},
        {"tree comodule laws", c2},
        {"representation soundness, composition and products", c3},
        {"algebra translation round trips", c4},
        {"Mendler coherence and induced monad laws", c5},
        {"finite support", c6},
        {"effects: IO, runners, stateful comodules, squares", c7},
        {"propositional containers", c8},
        {"seeded bugs are caught", c9},
        {"demos and demo files", c10},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "  exception: " << e.what() << "\n";
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << "\n"
                  << o.detail.str() << std::flush;
        if (!o.ok) ++failures;
    }
    std::cout << (failures ? "FAILED " : "ALL PASSED ") << (criteria.size() - failures) << "/" << criteria.size() << "\n";
    return failures ? 1 : 0;
}
