#include "qlink/tangle.hpp"

#include <sstream>
#include <unordered_map>

namespace qlink {

BraidWord parse_braid(const std::string& word, int strands) {
  if (strands < 1) throw GeneratorOutOfRange("strands must be >= 1");
  BraidWord w;
  w.strands = strands;
  std::istringstream in(word);
  std::string tok;
  while (in >> tok) {
    size_t used = 0;
    int j = 0;
    try {
      j = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + tok + "'", 0);
    }
    if (used != tok.size()) throw ParseError("bad braid letter '" + tok + "'", 0);
    if (j == 0) throw ParseError("braid letters are nonzero integers", 0);
    if (std::abs(j) >= strands)
      throw GeneratorOutOfRange("generator " + std::to_string(j) + " needs at least " +
                                std::to_string(std::abs(j) + 1) + " strands");
    w.letters.push_back(j);
  }
  return w;
}

std::vector<int> Tape::strand_profile() const {
  std::vector<int> profile;
  profile.push_back(0);
  int count = 0;
  for (const auto& ev : events) {
    if (ev.pos < 0) throw InvalidTape("negative position");
    switch (ev.kind) {
      case MorseEvent::Cup:
        if (ev.pos > count) throw InvalidTape("cup position out of range");
        count += 2;
        break;
      case MorseEvent::Cap:
        if (ev.pos + 1 >= count) throw InvalidTape("cap position out of range");
        count -= 2;
        break;
      case MorseEvent::Pos:
      case MorseEvent::Neg:
        if (ev.pos + 1 >= count) throw InvalidTape("crossing position out of range");
        break;
    }
    profile.push_back(count);
  }
  if (count != 0) throw InvalidTape("tape does not end with zero strands");
  return profile;
}

std::string Tape::render() const {
  static const char* names[] = {"cup", "cap", "pos", "neg"};
  std::ostringstream out;
  for (const auto& ev : events) out << names[ev.kind] << " " << ev.pos << "\n";
  return out.str();
}

Tape Tape::parse(const std::string& text) {
  Tape t;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string kind;
    if (!(ls >> kind)) continue;  // blank line
    int pos;
    if (!(ls >> pos)) throw ParseError("missing position on line " + std::to_string(lineno), lineno);
    std::string extra;
    if (ls >> extra) throw ParseError("trailing junk on line " + std::to_string(lineno), lineno);
    MorseEvent ev{};
    if (kind == "cup")
      ev.kind = MorseEvent::Cup;
    else if (kind == "cap")
      ev.kind = MorseEvent::Cap;
    else if (kind == "pos")
      ev.kind = MorseEvent::Pos;
    else if (kind == "neg")
      ev.kind = MorseEvent::Neg;
    else
      throw ParseError("unknown event '" + kind + "' on line " + std::to_string(lineno), lineno);
    ev.pos = pos;
    t.events.push_back(ev);
  }
  return t;
}

Tape closure_tape(const BraidWord& braid) {
  Tape t;
  const int k = braid.strands;
  for (int i = 0; i < k; ++i) t.events.push_back({MorseEvent::Cup, i});
  for (int j : braid.letters) {
    int pos = std::abs(j) - 1;
    t.events.push_back({j > 0 ? MorseEvent::Neg : MorseEvent::Pos, pos});
  }
  for (int i = k - 1; i >= 0; --i) t.events.push_back({MorseEvent::Cap, i});
  return t;
}

namespace {

// Label tuples packed 4 bits per strand; enough for dim <= 16 and width <= 16.
constexpr int kMaxWidth = 16;

uint64_t set_slot(uint64_t key, int slot, int label) {
  uint64_t mask = 0xFULL << (4 * slot);
  return (key & ~mask) | (static_cast<uint64_t>(label) << (4 * slot));
}

int get_slot(uint64_t key, int slot) { return static_cast<int>((key >> (4 * slot)) & 0xF); }

uint64_t insert_slots(uint64_t key, int at) {
  // shift slots [at, ...) up by two
  uint64_t low_mask = at == 0 ? 0 : ((1ULL << (4 * at)) - 1);
  uint64_t low = key & low_mask;
  uint64_t high = key & ~low_mask;
  return low | (high << 8);
}

uint64_t remove_slots(uint64_t key, int at) {
  // drop slots at, at+1
  uint64_t low_mask = at == 0 ? 0 : ((1ULL << (4 * at)) - 1);
  uint64_t low = key & low_mask;
  uint64_t high = key >> (4 * (at + 2));
  return low | (high << (4 * at));
}

using SparseState = std::unordered_map<uint64_t, Laurent>;

void accum(SparseState& s, uint64_t k, const Laurent& v) {
  if (v.is_zero()) return;
  auto it = s.find(k);
  if (it == s.end()) {
    s.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) s.erase(it);
  }
}

}  // namespace

Laurent evaluate_tape(const MatrixSet& ms, const Tape& tape) {
  std::vector<int> profile = tape.strand_profile();
  for (int c : profile)
    if (c > kMaxWidth) throw InvalidTape("more than 16 open strands");
  const int m = ms.spec.m();
  if (m + 1 > 16) throw InvalidTape("representation dimension above packed-key limit");

  SparseState state;
  state.emplace(0, Laurent::one());
  int width = 0;
  for (const auto& ev : tape.events) {
    SparseState next;
    switch (ev.kind) {
      case MorseEvent::Cup:
        for (const auto& [key, amp] : state) {
          uint64_t shifted = insert_slots(key, ev.pos);
          for (int a = 0; a <= m; ++a) {
            uint64_t k2 = set_slot(set_slot(shifted, ev.pos, a), ev.pos + 1, m - a);
            accum(next, k2, amp * ms.fusion.zeta_inv[a]);
          }
        }
        width += 2;
        break;
      case MorseEvent::Cap:
        for (const auto& [key, amp] : state) {
          int a = get_slot(key, ev.pos), b = get_slot(key, ev.pos + 1);
          if (a + b != m) continue;
          accum(next, remove_slots(key, ev.pos), amp * ms.fusion.zeta[a]);
        }
        width -= 2;
        break;
      case MorseEvent::Pos:
      case MorseEvent::Neg: {
        const BraidMatrix& B = ev.kind == MorseEvent::Pos ? ms.braid : ms.braid_inv;
        for (const auto& [key, amp] : state) {
          int a = get_slot(key, ev.pos), b = get_slot(key, ev.pos + 1);
          for (const auto& [dst, coeff] : B.row(B.key(a, b))) {
            auto [c, d] = B.unkey(dst);
            accum(next, set_slot(set_slot(key, ev.pos, c), ev.pos + 1, d), amp * coeff);
          }
        }
        break;
      }
    }
    state = std::move(next);
  }
  auto it = state.find(0);
  return it == state.end() ? Laurent::zero() : it->second;
}

int writhe(const BraidWord& braid) {
  int w = 0;
  for (int j : braid.letters) w += j > 0 ? 1 : -1;
  return w;
}

Laurent normalized_invariant(const MatrixSet& ms, const BraidWord& braid) {
  Laurent raw = evaluate_tape(ms, closure_tape(braid));
  return ms.spec.alpha().pow(-writhe(braid)) * raw;
}

}  // namespace qlink
