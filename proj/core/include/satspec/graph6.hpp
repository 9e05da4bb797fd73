#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "satspec/graph.hpp"

namespace satspec {

struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& what, size_t byte_pos)
      : std::runtime_error(what + " (byte " + std::to_string(byte_pos) + ")"),
        byte_pos(byte_pos) {}
  size_t byte_pos;
};

// Standard graph6 line for n <= 62 (single size byte, no header, no newline).
// Bit order is the upper triangle read column by column, 6 bits per byte,
// MSB first, bytes offset by 63; padding bits must be zero.
SimpleGraph parse_graph6(std::string_view line);
std::string emit_graph6(const SimpleGraph& g);

}  // namespace satspec
