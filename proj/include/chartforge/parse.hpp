#pragma once

#include <stdexcept>
#include <string>

#include "chartforge/chart.hpp"

namespace chartforge {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error(m) {}
};

// An id was used but never declared.
struct DanglingReference : ParseError {
    explicit DanglingReference(const std::string& m) : ParseError(m) {}
};

// Builds a chart from the line-oriented chart text. Does not validate chart
// conditions; structural references must resolve.
Chart build_chart(const std::string& text);

Chart load_chart_file(const std::string& path);

// Canonical serialization: vertices and edges sorted by name, placements and
// infinity explicit. build_chart(render_text(c)) reproduces c.
std::string render_text(const Chart& chart);

}  // namespace chartforge
