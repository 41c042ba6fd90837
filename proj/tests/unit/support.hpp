#pragma once

#include "doctest.h"

#include "comodule/universe.hpp"

namespace doctest {
template <>
struct StringMaker<comodule::Value> {
    static String convert(const comodule::Value& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<comodule::TypeCode> {
    static String convert(const comodule::TypeCode& c) { return c.to_string().c_str(); }
};
}  // namespace doctest
