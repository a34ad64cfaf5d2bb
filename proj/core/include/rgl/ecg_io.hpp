#pragma once

#include "rgl/graph.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>

namespace rgl {

// Text format, one graph per stream:
//
//   ecg 1
//   n 7
//   class 0 star 0 1 0 2
//   class 1 single 3 4
//
// Classes in ascending color order, each edge written "min max", edges of a
// class sorted.  Blank lines and lines starting with '#' are ignored.

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

EdgeColoredGraph parse_ecg(std::istream& in);
EdgeColoredGraph parse_ecg_string(const std::string& text);
EdgeColoredGraph load_ecg_file(const std::string& path);

void serialize_ecg(const EdgeColoredGraph& g, std::ostream& out);
std::string serialize_ecg_string(const EdgeColoredGraph& g);
void save_ecg_file(const EdgeColoredGraph& g, const std::string& path);

} // namespace rgl
