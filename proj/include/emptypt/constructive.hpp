#pragma once

// Constructive existence procedures for point sets whose convex hull is a
// triangle. Each procedure follows a fixed case analysis: every candidate
// polygon is validated exactly before it is used, the first valid candidate
// wins, and its case tag is recorded in the trace. A descent step always
// lowers the number of interior points. If no case applies the procedure
// falls back to the search oracle and records a diagnostic.

#include <string>
#include <vector>

#include "emptypt/geom.hpp"
#include "emptypt/pseudo.hpp"
#include "emptypt/search.hpp"

namespace emptypt {

struct TraceStep {
  std::string tag;
  PseudoTriangle pt;
  std::size_t interior = 0;  // points of S strictly inside pt
};

struct DescentTrace {
  std::vector<TraceStep> steps;

  bool strictly_decreasing() const;
};

struct Diagnostic {
  std::string op;
  std::string message;
  std::vector<Point> configuration;
};

struct Construction {
  PTWitness witness;
  DescentTrace trace;
  std::vector<Diagnostic> diagnostics;
  bool oracle_fallback = false;
};

/// Empty 5-pseudo-triangle; needs at least 2 interior points. `b_index`
/// selects which hull vertex (in counter-clockwise hull order) plays b.
Construction empty_5pt_triangular(const PointSet& s, std::size_t b_index = 0);

/// Empty STANDARD 6-pseudo-triangle; needs at least 3 interior points.
Construction empty_6pt_triangular(const PointSet& s);

/// A standard 7-pseudo-triangle, not necessarily empty; needs at least 5
/// interior points. witness.empty reports emptiness in S.
Construction standard_7pt_triangular(const PointSet& s);

/// Empty 7-pseudo-triangle; needs at least 5 interior points.
Construction empty_7pt_triangular(const PointSet& s);

/// Every pseudo-triangle whose vertex set is exactly `vertices`.
std::vector<PseudoTriangle> pseudo_triangles_on(const std::vector<Point>& vertices);

}  // namespace emptypt
