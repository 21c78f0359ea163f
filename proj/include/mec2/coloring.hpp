#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mec2/graph.hpp"

namespace mec2 {

inline constexpr std::uint8_t kUncolored = 0;

/// Subset of {0,1,2} as a 3-bit mask; color c is bit c.
class ColorSet {
 public:
  constexpr ColorSet() = default;
  static constexpr ColorSet from_bits(unsigned bits) { return ColorSet(bits & 7u); }
  static constexpr ColorSet of(int color) { return ColorSet(1u << color); }
  static constexpr ColorSet all() { return ColorSet(7u); }

  constexpr bool contains(int color) const { return (bits_ >> color) & 1u; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned bits() const { return bits_; }
  constexpr ColorSet with(int color) const { return ColorSet(bits_ | (1u << color)); }
  constexpr ColorSet without(int color) const { return ColorSet(bits_ & ~(1u << color)); }
  constexpr ColorSet operator|(ColorSet o) const { return ColorSet(bits_ | o.bits_); }
  constexpr ColorSet operator&(ColorSet o) const { return ColorSet(bits_ & o.bits_); }
  constexpr bool subset_of(ColorSet o) const { return (bits_ & ~o.bits_) == 0; }
  // Two incidence sets can coexist at a vertex iff they share no true color.
  constexpr bool true_disjoint(ColorSet o) const { return (bits_ & o.bits_ & 6u) == 0; }

  constexpr bool operator==(const ColorSet&) const = default;

 private:
  constexpr explicit ColorSet(unsigned bits) : bits_(static_cast<std::uint8_t>(bits)) {}
  std::uint8_t bits_ = 0;
};

/// Per-edge color in {0,1,2}; 0 marks an edge left out of the subgraph.
struct EdgeColoring {
  std::vector<std::uint8_t> colors;

  EdgeColoring() = default;
  explicit EdgeColoring(std::size_t edge_count) : colors(edge_count, kUncolored) {}

  std::size_t size() const { return colors.size(); }
  int value() const;

  bool operator==(const EdgeColoring&) const = default;
};

struct Solution {
  int value = 0;
  EdgeColoring coloring;
};

/// First place where a coloring stops being proper.
struct Violation {
  enum class Kind { bad_color, repeated_color } kind;
  int vertex = -1;  // repeated_color only
  int color = 0;
  int first_edge = -1;
  int second_edge = -1;

  std::string describe() const;
};

/// Scans vertices in ascending order and reports the first violation.
/// Throws InputError when the coloring length differs from m.
std::optional<Violation> find_violation(const Graph& g, const EdgeColoring& c);

bool validate_coloring(const Graph& g, const EdgeColoring& c);

/// Colors every kept edge with 1 or 2 so the result is proper, or returns
/// nullopt if the kept subgraph is not 2-edge-colorable. Colors alternate along
/// each trail starting with 1. An empty `keep` keeps every edge.
std::optional<EdgeColoring> two_edge_color(const Graph& g, std::span<const char> keep = {});

}  // namespace mec2
