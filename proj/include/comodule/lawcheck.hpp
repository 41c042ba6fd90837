#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "comodule/effects.hpp"
#include "comodule/pcont.hpp"

namespace comodule {

struct UnknownSuite : std::runtime_error {
    explicit UnknownSuite(const std::string& n) : std::runtime_error("unknown suite: " + n) {}
};

// COMODULE_BUDGET when set, otherwise a budget large enough for every suite.
std::size_t default_budget();

struct SuiteParams {
    std::size_t budget = default_budget();  // maximum number of cases; the rest are skipped
    int max_shapes = 2;                     // catalog shape-count bound
    int max_depth = 2;                      // tree/computation depth for probe shapes
    std::size_t sweep = 64;                 // strided sample size for oversized sweeps
};

// Containers with shapes in {Empty, Unit, Bool} and per-shape positions in
// {Empty, Unit, Bool}.
std::vector<Container> default_catalog(int max_shapes = 2);
// The catalog entries whose positions are all Empty or Unit.
std::vector<Container> prop_catalog(int max_shapes = 2);

struct Counterexample {
    std::string law;
    Mismatch detail;
};

struct SuiteReport {
    std::string suite;
    std::size_t run = 0, passed = 0, failed = 0, skipped = 0;
    std::vector<Counterexample> counterexamples;  // first per law
    std::vector<std::string> notes;
    // label ↦ (cases used, cases available) for strided sweeps
    std::map<std::string, std::pair<std::size_t, std::size_t>> sampling;

    void sampled(const std::string& what, std::size_t used, std::size_t total);
    bool ok() const { return failed == 0; }
    void merge(const SuiteReport& other);
    std::string text() const;
    std::string json() const;
};

// Runs cases under a budget and records outcomes. An exception inside a case
// counts as a failure.
class Harness {
public:
    Harness(SuiteReport& report, std::size_t budget) : report_(report), budget_(budget) {}
    void check(const std::string& law, const std::function<std::optional<Mismatch>()>& body);
    void skip(std::size_t n) { report_.skipped += n; }
    bool exhausted() const { return report_.run >= budget_; }
    SuiteReport& report() { return report_; }

private:
    SuiteReport& report_;
    std::size_t budget_;
};

// Up to `cap` evenly spaced indices into [0, n).
std::vector<std::size_t> stride(std::size_t n, std::size_t cap);

// ------------------------------------------------------------ suites

struct MonadSuiteConfig {
    std::vector<Container> catalog;
    int kleisli_depth = 1;  // Kleisli maps into T D use shapes of this depth
    int probe_depth = 2;    // T C shapes on which morphisms are compared
    bool exhaustive = true; // sweep all Kleisli pairs; otherwise strided
};

SuiteReport monad_laws(const std::string& name, const ContainerMonad& t, const MonadSuiteConfig& cfg,
                       const SuiteParams& params);

struct ComoduleSuiteConfig {
    std::vector<Container> catalog;
    int probe_depth = 2;
    // Shapes of T(T C) for the multiplication square.
    std::function<std::vector<Value>(const Container& tc)> nested_probe;
    bool exhaustive = true;
};

SuiteReport comodule_laws(const std::string& name, const Comodule& m, const ComoduleSuiteConfig& cfg,
                          const SuiteParams& params);

// Fibers of the probe families; empty means {Empty, Unit, Bool}.
SuiteReport mendler_coherence(const std::string& name, const WeakMendlerAlgebra& alg, const SuiteParams& params,
                              const std::vector<TypeCode>& fibers = {});

SuiteReport container_category_suite(const SuiteParams& params);
SuiteReport representation_suite(const SuiteParams& params);
SuiteReport algebra_translation_suite(const SuiteParams& params);
SuiteReport finite_support_suite(const Comodule& m, const SuiteParams& params);
SuiteReport io_kleisli_suite(const SuiteParams& params);
SuiteReport io_rho_suite(const SuiteParams& params);
SuiteReport effect_squares_suite(const SuiteParams& params);
SuiteReport pcont_heyting_suite(const SuiteParams& params);
SuiteReport pcont_kleisli_suite(const SuiteParams& params);

// Runners used for the stateful comodule suites.
std::vector<Runner> sample_runners(const IoSignature& sig);

std::vector<std::string> list_suites();
// Throws UnknownSuite.
SuiteReport run_suite(const std::string& name, const SuiteParams& params = {});

// ------------------------------------------------------------ mutation fixtures

struct MutationFixture {
    std::string name;
    std::string description;
    std::string suite;
    std::function<SuiteReport(const SuiteParams&)> run;
};

std::vector<MutationFixture> mutation_fixtures();

}  // namespace comodule
