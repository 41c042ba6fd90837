#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "comodule/effects.hpp"
#include "comodule/pcont.hpp"
#include "comodule/representation.hpp"

namespace comodule {

using Json = nlohmann::json;

struct SchemaError : std::runtime_error {
    explicit SchemaError(const std::string& what) : std::runtime_error("schema error: " + what) {}
};

// Opaque codes known to the codec; "nat" gets a sampler 0..4·depth.
TypeCode opaque_code(const std::string& name);
Value nat(std::int64_t n);
// to_string, with naturals printed as plain numbers.
std::string show(const Value& v);

TypeCode parse_code(const Json& j);
Json emit_code(const TypeCode& c);
Value parse_value(const Json& j);
Json emit_value(const Value& v);
// A JSON value given on the command line.
Value parse_value_text(const std::string& text);

// Closures written as `\x y. body`. Bound names applied to arguments are
// calls. Builtins: succ, add, fst, snd, pair, inl, inr, not, and, or, xor,
// set, arg(e, k) and a lazy if(c, a, b). Any other name(...) builds a
// constructor and a free bare name is a nullary constructor. Integer literals
// are naturals, #k is a Fin index, * is unit.
Value compile_lambda(const std::string& source);

struct ContainerSpec {
    TypeCode shapes;
    std::optional<TypeCode> constant;                  // same positions everywhere
    std::vector<std::pair<Value, TypeCode>> table;     // otherwise, per shape
    Container build() const;
};
ContainerSpec parse_container(const Json& j);
Json emit_container(const ContainerSpec& c);

struct IoScenario {
    IoSignature sig;
    Runner runner;
};

struct RepresentationSpec {
    std::string monad;  // tree, identity, finite-powerset, trivial, exception, io-state, io-tree-state
    ContainerSpec domain, codomain;
    Value shape;     // b ↦ T(domain) shape
    Value position;  // b ↦ (q ↦ Q b position), curried
    bool stateful() const { return monad == "io-state" || monad == "io-tree-state"; }
    // Stateful monads need the scenario's signature and runner.
    Representation build(const std::optional<IoScenario>& io = std::nullopt) const;
};

struct AssignmentSpec {
    ContainerSpec container;
    Value fn;
    Assignment build() const { return Assignment(container.build(), fn); }
};

// Top-level document; every member is optional.
struct Document {
    std::optional<std::string> description;
    std::optional<IoScenario> io;  // keys I, O, runner
    std::optional<RepresentationSpec> representation;
    std::optional<AssignmentSpec> argument;
    std::optional<Value> computation;
    std::optional<PropContainer> prop;

    // Throws SchemaError when a stateful representation has no scenario.
    Representation build_representation() const;
};

Document parse_document(const Json& j);
Json emit_document(const Document& d);
Document load_document(const std::string& path);

}  // namespace comodule
