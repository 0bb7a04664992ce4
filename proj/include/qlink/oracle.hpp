#pragma once

#include "qlink/algebra.hpp"
#include "qlink/tangle.hpp"

#include <array>
#include <string>
#include <vector>

namespace qlink {

struct MalformedPD : std::runtime_error {
  explicit MalformedPD(const std::string& what) : std::runtime_error(what) {}
};

struct InconsistentEdges : std::runtime_error {
  explicit InconsistentEdges(const std::string& what) : std::runtime_error(what) {}
};

struct RecursionLimit : std::runtime_error {
  explicit RecursionLimit(const std::string& what) : std::runtime_error(what) {}
};

// One 4-valent crossing.  legs[] are edge ids in counterclockwise order
// starting at an under-strand leg, so legs[0]-legs[2] is the under strand and
// legs[1]-legs[3] the over strand.
struct Crossing {
  std::array<int, 4> legs;
};

struct PlanarDiagram {
  std::vector<Crossing> crossings;
  int free_loops = 0;  // crossingless circles

  int components() const;  // strand cycles plus free loops
  std::string to_pd_text() const;
};

// JSON list of 4-integer lists, or {"crossings":[...],"components":k} with a
// loop-count hint; a bare empty list means one marked loop.
PlanarDiagram parse_pd(const std::string& json_text);

// PD code of the braid's trace closure; positive letters give writhe +1
// crossings.
PlanarDiagram braid_to_pd(const BraidWord& braid);

struct Simplified {
  PlanarDiagram diagram;
  int alpha_exponent = 0;  // each removed curl contributes +-1
};

// R1 curl removals (each emits one alpha^{+-1} factor) and value-preserving R2
// reductions, iterated to a fixed point.
Simplified simplify(PlanarDiagram d);

struct SkeinParams {
  Laurent alpha;
  Laurent z;
  Laurent delta;

  static SkeinParams from_spec(const AlgebraSpec& spec);
  // delta * z == alpha - alpha^{-1} + z
  void validate() const;
};

struct OracleOptions {
  bool memoize = true;
  // 0 = switch the first non-descending crossing, 1 = the last; both must
  // agree, which the tests use as a determinism check.
  int strategy = 0;
  int crossing_limit = 16;
};

// Regular-isotopy Kauffman polynomial by the switching/smoothing recursion
// toward descending diagrams.  Throws RecursionLimit past crossing_limit.
Laurent kauffman_poly(const PlanarDiagram& diagram, const SkeinParams& params,
                      const OracleOptions& options = {});

}  // namespace qlink
