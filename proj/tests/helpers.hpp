#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

inline std::string read_fixture(const std::string& rel) {
    std::string path = std::string(FIXTURES_DIR) + "/" + rel;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("missing fixture: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string fixture_path(const std::string& rel) {
    return std::string(FIXTURES_DIR) + "/" + rel;
}
