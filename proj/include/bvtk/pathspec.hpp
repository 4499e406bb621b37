// pathspec.hpp -- finite encodings of lazily extended paths.
//
// A PathSpec is an explicit prefix plus a suffix rule that must pick a unique
// edge at every extension level; failure to do so is a ResolutionError, never
// a silent choice.
//
// Text syntax: "prefix=<step>,...;suffix=<rule>" where a step is either a
// bare ordinal "o" (must match exactly one out-edge of the current vertex)
// or "o@name" (the ordinal-o edge into the named vertex). Rules:
//   const:<c>        every further edge has ordinal c
//   per:<w1w2...>    ordinals cycle through the word (digits, or comma list)
//   min | max        every further edge minimal (ordinal 1) / maximal
//   track:col:<i1,i2,...>  cycle of 1-based vertex positions at successive
//                    levels; takes the lowest-ordinal edge into that vertex
// The prefix part may be empty or omitted.
#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bvtk/diagram.hpp"

namespace bvtk {

struct ResolutionError : std::runtime_error {
  explicit ResolutionError(const std::string& what) : std::runtime_error(what) {}
};

enum class SuffixKind { ConstantOrdinal, PeriodicOrdinals, AllMinimal, AllMaximal, VertexTrack };

struct SuffixRule {
  SuffixKind kind = SuffixKind::AllMinimal;
  std::vector<int> ordinals;  // ConstantOrdinal (size 1) / PeriodicOrdinals
  std::vector<int> track;     // VertexTrack: 1-based vertex positions

  friend bool operator==(const SuffixRule&, const SuffixRule&) = default;
};

struct PathSpec {
  FinitePath prefix;
  SuffixRule suffix;

  friend bool operator==(const PathSpec&, const PathSpec&) = default;
};

PathSpec parse_pathspec(const std::string& text, const Diagram& d);
std::string format_pathspec(const PathSpec& x, const Diagram& d);

// Unique truncation of x to level n <= d.depth(); extends the prefix with the
// suffix rule. Throws ResolutionError when a step is ambiguous or impossible.
FinitePath resolve(const PathSpec& x, int n, const Diagram& d);

PathSpec spec_from_path(const FinitePath& p, SuffixRule suffix = {});

}  // namespace bvtk
