#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#ifndef CITESWING_FIXTURE_DIR
#error "CITESWING_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace citeswing::testdata {

inline std::string fixture_path(const std::string& name) {
    return std::string(CITESWING_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(fixture_path(name), std::ios::binary);
    if (!in) throw std::runtime_error("missing fixture " + name);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace citeswing::testdata
