#pragma once

#include <string>
#include <vector>

#include "comodule/codec.hpp"

namespace comodule {

struct UnknownDemo : std::runtime_error {
    explicit UnknownDemo(const std::string& n) : std::runtime_error("unknown demo: " + n) {}
};

// baire, finite-support, exceptional, io-interactive, instance-zorn-shape
std::vector<std::string> demo_names();

struct DemoResult {
    std::string text;
    bool ok = true;  // every check and law-suite verdict passed
};
// Throws UnknownDemo.
DemoResult run_demo(const std::string& name);

// The shipped data/demos files, compiled in; stems without ".json".
std::vector<std::string> demo_files();
const std::string& demo_file_text(const std::string& stem);
Document demo_document(const std::string& stem);

}  // namespace comodule
