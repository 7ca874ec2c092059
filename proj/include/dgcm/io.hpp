#pragma once

// Input files and deterministic text rendering.
//
// Input is a JSON object with fixed field names, 1-based indices:
//   cartan        row-major integer matrix (required)
//   symmetrizer   positive integers, one per vertex
//   orientation   list of ordered pairs [i, j]
//   height        integer per vertex
//   quiver_edges  list of [source, target]
//   word_prefix   whitespace-separated letters, e.g. "1 2"
//   word_period   whitespace-separated letters

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "dgcm/braid.hpp"
#include "dgcm/cartan.hpp"
#include "dgcm/kp.hpp"
#include "dgcm/matrix.hpp"

namespace dgcm {

struct InputSpec {
  IntMatrix cartan;
  std::optional<std::vector<int>> symmetrizer;
  std::optional<Orientation> orientation;  // 0-based
  std::optional<HeightFunction> height;
  std::optional<std::vector<QuiverEdge>> quiver_edges;  // 0-based
  std::optional<PeriodicWord> word;                     // 0-based
};

InputSpec parse_input(const std::string& text);
InputSpec read_input_file(const std::string& path);

// Build the validated Gcm described by the input.
Gcm make_gcm(const InputSpec& spec);

// "1 2 1" -> {0, 1, 0}; throws ParseError on anything but positive integers.
std::vector<int> parse_word(const std::string& text);

// Rendering of a truncated series: canonical polynomial plus "+ O(t^{N+1})".
std::string render_series(const TruncatedSeries& s);

// One line per (i, j, monomial, coefficient), 1-based, tab separated.
void write_records(std::ostream& os, const PolyMatrix& m);
void write_records(std::ostream& os, const Matrix<TruncatedSeries>& m);

}  // namespace dgcm
