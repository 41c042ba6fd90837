#include "support.hpp"

#include "comodule/demos.hpp"

using namespace comodule;

TEST_CASE("demos run and report") {
    for (const auto& n : demo_names()) {
        CAPTURE(n);
        DemoResult r = run_demo(n);
        CHECK(r.ok);
        CHECK_FALSE(r.text.empty());
    }
    CHECK_THROWS_AS(run_demo("nope"), UnknownDemo);
}

TEST_CASE("baire demo prints two") {
    DemoResult r = run_demo("baire");
    CHECK(r.text.find("F(succ) = 2\n") != std::string::npos);
}

TEST_CASE("exceptional demo: the raising branch ignores h") {
    DemoResult r = run_demo("exceptional");
    auto raise = r.text.find("(raises)");
    REQUIRE(raise != std::string::npos);
    auto verdict = r.text.find("independent of h", raise);
    CHECK(verdict != std::string::npos);
    // the querying branch does depend on h
    CHECK(r.text.find("depends on h") != std::string::npos);
}
