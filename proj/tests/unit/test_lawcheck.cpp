#include "support.hpp"

#include <cstdlib>

#include "json.hpp"

#include "comodule/lawcheck.hpp"

using namespace comodule;

TEST_CASE("stride picks evenly spaced indices") {
    CHECK(stride(5, 10) == std::vector<std::size_t>{0, 1, 2, 3, 4});
    auto s = stride(100, 4);
    REQUIRE(s.size() == 4);
    CHECK(s.front() == 0);
    for (std::size_t i = 1; i < s.size(); ++i) CHECK(s[i] > s[i - 1]);
    CHECK(s.back() < 100);
    CHECK(stride(0, 3).empty());
}

TEST_CASE("catalog sizes") {
    // per shape code: Empty 1 container, Unit 3, Bool 9 (two position choices)
    CHECK(default_catalog(1).size() == 4);
    CHECK(default_catalog(2).size() == 13);
    // positions Empty or Unit only: 1 + 2 + 4
    CHECK(prop_catalog(2).size() == 7);
}

TEST_CASE("the harness counts outcomes and skips over budget") {
    SuiteReport r;
    Harness h(r, 3);
    for (int i = 0; i < 5; ++i) {
        if (h.exhausted()) {
            h.skip(1);
            continue;
        }
        h.check("law", [i]() -> std::optional<Mismatch> {
            if (i == 1) return Mismatch{"i = 1", "a", "b"};
            if (i == 2) throw std::runtime_error("boom");
            return std::nullopt;
        });
    }
    CHECK(r.run == 3);
    CHECK(r.passed == 1);
    CHECK(r.failed == 2);
    CHECK(r.skipped == 2);
    CHECK_FALSE(r.ok());
    REQUIRE(r.counterexamples.size() == 1);  // first per law
    CHECK(r.counterexamples[0].detail.where == "i = 1");
}

TEST_CASE("reports merge and serialize") {
    SuiteReport a, b;
    a.suite = "x";
    a.run = a.passed = 2;
    a.sampled("pairs", 4, 10);
    b.run = 1;
    b.failed = 1;
    b.counterexamples.push_back({"unit", {"here", "l", "r"}});
    b.sampled("pairs", 1, 5);
    a.merge(b);
    CHECK(a.run == 3);
    CHECK(a.failed == 1);
    CHECK(a.sampling.at("pairs") == std::pair<std::size_t, std::size_t>{5, 15});
    auto j = nlohmann::json::parse(a.json());
    CHECK(j["suite"] == "x");
    CHECK(j["failed"] == 1);
    CHECK(j["sampling"]["pairs"]["used"] == 5);
    CHECK(a.text().find("here") != std::string::npos);
}

TEST_CASE("budget zero skips everything") {
    SuiteParams p;
    p.budget = 0;
    auto r = run_suite("monad-laws:identity", p);
    CHECK(r.run == 0);
    CHECK(r.skipped > 0);
    CHECK(r.ok());
}

TEST_CASE("unknown suites throw") { CHECK_THROWS_AS(run_suite("no-such-suite"), UnknownSuite); }

TEST_CASE("every listed suite name resolves") {
    auto names = list_suites();
    CHECK(names.size() >= 30);
    SuiteParams p;
    p.budget = 0;
    for (const auto& n : names) {
        CAPTURE(n);
        CHECK_NOTHROW(run_suite(n, p));
    }
}

TEST_CASE("seeded bugs are caught with counterexamples") {
    auto fs = mutation_fixtures();
    CHECK(fs.size() >= 5);
    SuiteParams p;
    p.max_shapes = 1;
    for (const auto& f : fs) {
        CAPTURE(f.name);
        auto r = f.run(p);
        CHECK(r.failed > 0);
        CHECK_FALSE(r.counterexamples.empty());
    }
}
