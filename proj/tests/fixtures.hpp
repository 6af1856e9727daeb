// Shared helpers for the test suites.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "qgentle/quiver.hpp"

inline std::string read_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
    REQUIRE(in.good());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

inline qgentle::BoundQuiver load_fixture(const std::string& name) {
    return qgentle::parse_bound_quiver(read_fixture(name));
}

inline qgentle::BoundQuiver kronecker() {
    return qgentle::parse_bound_quiver(
        "quiver kronecker\nvertex v1 v2\narrow alpha v1 v2\narrow beta v1 v2\n");
}

inline qgentle::BoundQuiver single_vertex() {
    return qgentle::parse_bound_quiver("quiver point\nvertex v1\n");
}
