#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "comodule/codec.hpp"
#include "comodule/demos.hpp"

using namespace comodule;

#ifndef COMODULE_SOURCE_DIR
#define COMODULE_SOURCE_DIR "."
#endif

TEST_CASE("every shipped demo file round-trips") {
    auto stems = demo_files();
    CHECK(stems.size() >= 8);
    for (const auto& s : stems) {
        CAPTURE(s);
        Json j = Json::parse(demo_file_text(s));
        Json back = emit_document(parse_document(j));
        CHECK(back == j);
        CHECK(emit_document(parse_document(back)) == back);
    }
}

TEST_CASE("embedded demo texts match the files on disk") {
    namespace fs = std::filesystem;
    fs::path dir = fs::path(COMODULE_SOURCE_DIR) / "data" / "demos";
    REQUIRE(fs::is_directory(dir));
    std::size_t n = 0;
    for (const auto& e : fs::directory_iterator(dir)) {
        if (e.path().extension() != ".json") continue;
        std::ifstream in(e.path());
        std::stringstream ss;
        ss << in.rdbuf();
        CHECK(Json::parse(ss.str()) == Json::parse(demo_file_text(e.path().stem().string())));
        ++n;
    }
    CHECK(n == demo_files().size());
}

TEST_CASE("codes round-trip") {
    std::vector<TypeCode> codes{TypeCode::empty(), TypeCode::unit(), TypeCode::boolean(), TypeCode::fin(5),
                                TypeCode::sum(TypeCode::boolean(), TypeCode::unit()),
                                TypeCode::prod(TypeCode::fin(2), TypeCode::boolean()),
                                TypeCode::fun(TypeCode::boolean(), TypeCode::fin(3)), opaque_code("nat")};
    for (const auto& c : codes) {
        CAPTURE(c);
        CHECK(parse_code(emit_code(c)) == c);
    }
    CHECK(parse_code(Json::parse(R"({"fin": 3})")) == TypeCode::fin(3));
    CHECK(parse_code(Json("bool")) == TypeCode::boolean());
}

TEST_CASE("values round-trip") {
    std::vector<Value> vs{Value::unit(),
                          Value::boolean(true),
                          Value::fin(4),
                          Value::pair(Value::fin(1), Value::boolean(false)),
                          Value::inl(Value::unit()),
                          Value::inr(Value::fin(2)),
                          Value::table({{Value::boolean(false), Value::fin(0)}, {Value::boolean(true), Value::fin(1)}}),
                          nat(7),
                          Value::ctor("node", {Value::fin(0), Value::ctor("leaf")})};
    for (const auto& v : vs) {
        CAPTURE(v);
        CHECK(parse_value(emit_value(v)) == v);
    }
    CHECK(parse_value_text("{\"pair\": [true, 2]}") == Value::pair(Value::boolean(true), Value::fin(2)));
    CHECK(show(nat(3)) == "3");
}

TEST_CASE("lambda language") {
    auto call = [](const char* src, const Value& x) { return compile_lambda(src).apply(x); };
    CHECK(call("\\n. succ(succ(n))", nat(3)) == nat(5));
    CHECK(call("\\n. add(n, 4)", nat(3)) == nat(7));
    CHECK(call("\\p. fst(p)", Value::pair(Value::fin(1), Value::unit())) == Value::fin(1));
    CHECK(call("\\p. snd(p)", Value::pair(Value::fin(1), Value::unit())) == Value::unit());
    CHECK(call("\\b. not(b)", Value::boolean(true)) == Value::boolean(false));
    CHECK(call("\\b. xor(b, true)", Value::boolean(true)) == Value::boolean(false));
    CHECK(call("\\b. and(b, or(b, false))", Value::boolean(true)) == Value::boolean(true));
    CHECK(call("\\b. if(b, #1, #0)", Value::boolean(true)) == Value::fin(1));
    CHECK(call("\\x. inl(x)", Value::unit()) == Value::inl(Value::unit()));
    CHECK(call("\\x. *", Value::boolean(true)) == Value::unit());
    CHECK(call("\\x. leaf", Value::unit()) == Value::ctor("leaf"));
    CHECK(call("\\x. node(x, leaf)", nat(0)) == Value::ctor("node", {nat(0), Value::ctor("leaf")}));
    CHECK(call("\\t. arg(t, 1)", Value::ctor("step", {Value::fin(0), Value::fin(2)})) == Value::fin(2));
    CHECK(call("\\b. set(#0, #1, #0)", Value::unit()) == Value::ctor("set", {Value::fin(0), Value::fin(1)}));
    // curried, and bound names apply as calls
    Value k = compile_lambda("\\x y. x");
    CHECK(k.apply(Value::fin(1)).apply(Value::fin(2)) == Value::fin(1));
    CHECK(call("\\f. f(#2)", compile_lambda("\\x. pair(x, x)")) == Value::pair(Value::fin(2), Value::fin(2)));
    // lazy if: the other branch would fail
    CHECK(call("\\b. if(b, *, fst(b))", Value::boolean(true)) == Value::unit());
    CHECK(compile_lambda("\\n. succ(n)").source() == "\\n. succ(n)");
    CHECK(compile_lambda("λn. succ(n)").apply(nat(0)) == nat(1));
}

TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_document(Json::parse(R"({"bogus": 1})")), SchemaError);
    CHECK_THROWS_AS(parse_code(Json::parse(R"({"fin": "x"})")), SchemaError);
    CHECK_THROWS_AS(parse_value(Json::parse(R"({"wat": 1})")), SchemaError);
    CHECK_THROWS_AS(compile_lambda("\\x. ("), SchemaError);
    CHECK_THROWS_AS(compile_lambda("x"), SchemaError);
    // a stateful representation needs the runner
    Json j = Json::parse(demo_file_text("io-interactive"));
    j.erase("runner");
    j.erase("I");
    j.erase("O");
    CHECK_THROWS_AS(parse_document(j).build_representation(), SchemaError);
    CHECK_THROWS_AS(demo_document("no-such-file"), UnknownDemo);
}
