#pragma once

#include "qlink/braiding.hpp"

#include <string>
#include <vector>

namespace qlink {

struct GeneratorOutOfRange : std::runtime_error {
  explicit GeneratorOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidTape : std::runtime_error {
  explicit InvalidTape(const std::string& what) : std::runtime_error(what) {}
};

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // j > 0 for sigma_j, j < 0 for its inverse
};

// Whitespace-separated nonzero integers; |j| < strands.
BraidWord parse_braid(const std::string& word, int strands);

struct MorseEvent {
  enum Kind { Cup, Cap, Pos, Neg };
  Kind kind;
  int pos;

  bool operator==(const MorseEvent& o) const { return kind == o.kind && pos == o.pos; }
};

struct Tape {
  std::vector<MorseEvent> events;

  // Strand counts between events (length events.size()+1, starts and ends at
  // 0); throws InvalidTape when an event is out of range or counts go bad.
  std::vector<int> strand_profile() const;

  std::string render() const;                     // one `cup i|cap i|pos i|neg i` per line
  static Tape parse(const std::string& text);     // throws ParseError
};

// Trace closure of a braid: nested cups, the word, matching caps.  The nested
// closure geometry mirrors crossing handedness, so positive letters emit Neg
// events (and vice versa); this keeps raw values on the curl axiom
// <closure(sigma_j)> = alpha * delta.
Tape closure_tape(const BraidWord& braid);

// <K> by sparse state-vector contraction: Cup inserts sum M^{ab}, Cap
// contracts M_{ab}, Pos/Neg apply B/B^{-1}.
Laurent evaluate_tape(const MatrixSet& ms, const Tape& tape);

int writhe(const BraidWord& braid);  // exponent sum
Laurent normalized_invariant(const MatrixSet& ms, const BraidWord& braid);

}  // namespace qlink
