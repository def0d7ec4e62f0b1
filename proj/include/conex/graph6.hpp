#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "conex/graph.hpp"

namespace conex {

/// Malformed graph6 input. `offset` is the byte position of the defect.
struct G6ParseError : std::runtime_error {
  size_t offset;
  G6ParseError(const std::string& msg, size_t off)
      : std::runtime_error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view s);

/// One graph per non-empty line.
std::vector<Graph> graph6_decode_lines(std::string_view text);

std::string to_dot(const Graph& g);

}  // namespace conex
