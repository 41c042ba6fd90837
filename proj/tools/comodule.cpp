// comodule: law checking, evaluation, reduction search and demos from the
// command line. Exit codes: 0 pass, 1 law failure, 2 usage or schema error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "comodule/codec.hpp"
#include "comodule/demos.hpp"
#include "comodule/lawcheck.hpp"

using namespace comodule;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

int cmd_check_laws(const std::string& suite, const std::string& fixture, int max_shapes, int max_depth,
                   std::optional<std::size_t> budget, const std::string& format) {
    SuiteParams p;
    p.max_shapes = max_shapes;
    p.max_depth = max_depth;
    if (budget) p.budget = *budget;
    if (p.budget == 0) std::cerr << "warning: budget 0, every case is skipped\n";
    SuiteReport r;
    if (!fixture.empty()) {
        bool found = false;
        for (const auto& f : mutation_fixtures())
            if (f.name == fixture) {
                r = f.run(p);
                found = true;
            }
        if (!found) {
            std::cerr << "unknown fixture: " << fixture << "\n";
            return kUsage;
        }
    } else {
        r = run_suite(suite, p);
    }
    std::cout << (format == "json" ? r.json() + "\n" : r.text());
    return r.ok() ? kPass : kFail;
}

int cmd_eval(const std::string& rep_file, const std::string& arg_file, const std::string& at,
             const std::optional<std::string>& state) {
    Document rd = load_document(rep_file);
    Document ad = arg_file == rep_file ? rd : load_document(arg_file);
    if (!rd.representation) throw SchemaError(rep_file + " has no representation");
    if (!ad.argument) throw SchemaError(arg_file + " has no argument");
    Representation r = rd.build_representation();
    Assignment h = ad.argument->build();
    Value b = parse_value_text(at);
    if (!check(r.codomain.shapes(), b))
        throw TypeMismatch("--at " + b.to_string() + " is not a shape of " + r.codomain.shapes().to_string());
    if (rd.representation->stateful()) {
        if (!state) {
            std::cerr << "error: a stateful representation needs --state INIT\n";
            return kUsage;
        }
        Value r0 = parse_value_text(*state);
        if (!check(rd.io->runner.state, r0))
            throw TypeMismatch("--state " + r0.to_string() + " is not a state of " + rd.io->runner.state.to_string());
        auto [fin, v] = evaluate_rep_s(r, h, b, r0);
        std::cout << "(" << show(fin) << ", " << show(v) << ")\n";
        return kPass;
    }
    if (state) std::cerr << "warning: --state ignored for a stateless representation\n";
    std::cout << show(evaluate_rep(r, h, b)) << "\n";
    return kPass;
}

int cmd_reduce(const std::string& from, const std::string& to, bool functional) {
    Document fd = load_document(from), td = load_document(to);
    if (!fd.prop) throw SchemaError(from + " has no prop");
    if (!td.prop) throw SchemaError(to + " has no prop");
    if (functional) {
        auto t = functional_instance_reduce(*fd.prop, *td.prop);
        std::cout << (t ? t->to_string() : "irreducible") << "\n";
        return kPass;
    }
    auto rep = kleisli_reducibility_equiv(*fd.prop, *td.prop);
    if (!rep.instance_reducible) {
        std::cout << "irreducible\n";
        return kPass;
    }
    std::cout << "reducible\n";
    if (rep.kleisli) std::cout << "witness sets: " << rep.kleisli->to_string() << "\n";
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Comodule representations of second-order functionals over containers"};
    app.require_subcommand(1);

    auto* check_cmd = app.add_subcommand("check-laws", "run a law suite");
    std::string suite, fixture, format = "text";
    int max_shapes = 2, max_depth = 2;
    std::optional<std::size_t> budget;
    auto* suite_opt = check_cmd->add_option("--suite", suite, "suite name (see list-suites)");
    auto* fixture_opt = check_cmd->add_option("--fixture", fixture, "run a seeded-bug fixture instead");
    suite_opt->excludes(fixture_opt);
    check_cmd->add_option("--max-shapes", max_shapes, "catalog shape-count bound")->check(CLI::Range(0, 3));
    check_cmd->add_option("--max-depth", max_depth, "probe depth")->check(CLI::Range(0, 3));
    check_cmd->add_option("--budget", budget, "maximum number of cases (default: COMODULE_BUDGET or unlimited)");
    check_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a representation at an argument");
    std::string rep_file, arg_file, at;
    std::optional<std::string> state;
    eval_cmd->add_option("--rep", rep_file, "document with a representation")->required();
    eval_cmd->add_option("--arg", arg_file, "document with an argument")->required();
    eval_cmd->add_option("--at", at, "codomain shape as JSON")->required();
    eval_cmd->add_option("--state", state, "initial runner state as JSON (stateful monads)");

    auto* reduce_cmd = app.add_subcommand("reduce", "search an instance reduction between prop containers");
    std::string from, to;
    bool functional = false;
    reduce_cmd->add_option("--from", from, "document with the source prop")->required();
    reduce_cmd->add_option("--to", to, "document with the target prop")->required();
    reduce_cmd->add_flag("--functional", functional, "look for a single map t : B -> A");

    auto* demo_cmd = app.add_subcommand("demo", "run a demo walkthrough");
    std::string demo;
    demo_cmd->add_option("name", demo, "baire, finite-support, exceptional, io-interactive, instance-zorn-shape")
        ->required();

    auto* list_cmd = app.add_subcommand("list-suites", "list suites and seeded-bug fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*check_cmd) {
            if (suite.empty() && fixture.empty()) {
                std::cerr << "error: check-laws needs --suite or --fixture\n";
                return kUsage;
            }
            return cmd_check_laws(suite, fixture, max_shapes, max_depth, budget, format);
        }
        if (*eval_cmd) return cmd_eval(rep_file, arg_file, at, state);
        if (*reduce_cmd) return cmd_reduce(from, to, functional);
        if (*demo_cmd) {
            DemoResult r = run_demo(demo);
            std::cout << r.text;
            return r.ok ? kPass : kFail;
        }
        if (*list_cmd) {
            for (const auto& s : list_suites()) std::cout << s << "\n";
            for (const auto& f : mutation_fixtures())
                std::cout << "fixture " << f.name << " (" << f.suite << "): " << f.description << "\n";
            return kPass;
        }
    } catch (const UnknownSuite& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UnknownDemo& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const TypeMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
