#include "qlink/oracle.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "json.hpp"

namespace qlink {

namespace {

void rename_edge(PlanarDiagram& d, int from, int to) {
  if (from == to) return;
  for (auto& cr : d.crossings)
    for (int& e : cr.legs)
      if (e == from) e = to;
}

// Delete crossing ci, joining the strands named by `pairs` (leg-index pairs).
// A pair whose two legs carry the same edge closes into a free loop; legs in
// no pair (a curl's loop edge) just vanish with the crossing.
void remove_crossing(PlanarDiagram& d, size_t ci,
                     const std::vector<std::pair<int, int>>& pairs) {
  std::vector<std::pair<int, int>> joins;  // edge-id pairs
  for (auto [i, j] : pairs) joins.emplace_back(d.crossings[ci].legs[i], d.crossings[ci].legs[j]);
  d.crossings.erase(d.crossings.begin() + ci);
  for (size_t k = 0; k < joins.size(); ++k) {
    auto [e1, e2] = joins[k];
    if (e1 == e2) {
      d.free_loops += 1;
      continue;
    }
    rename_edge(d, e2, e1);
    for (size_t k2 = k + 1; k2 < joins.size(); ++k2) {
      if (joins[k2].first == e2) joins[k2].first = e1;
      if (joins[k2].second == e2) joins[k2].second = e1;
    }
  }
}

// Remove an R2 bigon: crossings ci, cj joined by edges f (position pf_i/pf_j)
// and g; the two strands continue straight through.
void remove_bigon(PlanarDiagram& d, size_t ci, size_t cj, int pf_i, int pf_j, int pg_i,
                  int pg_j) {
  std::vector<std::pair<int, int>> joins = {
      {d.crossings[ci].legs[(pf_i + 2) % 4], d.crossings[cj].legs[(pf_j + 2) % 4]},
      {d.crossings[ci].legs[(pg_i + 2) % 4], d.crossings[cj].legs[(pg_j + 2) % 4]}};
  size_t hi = std::max(ci, cj), lo = std::min(ci, cj);
  d.crossings.erase(d.crossings.begin() + hi);
  d.crossings.erase(d.crossings.begin() + lo);
  for (size_t k = 0; k < joins.size(); ++k) {
    auto [e1, e2] = joins[k];
    if (e1 == e2) {
      d.free_loops += 1;
      continue;
    }
    rename_edge(d, e2, e1);
    for (size_t k2 = k + 1; k2 < joins.size(); ++k2) {
      if (joins[k2].first == e2) joins[k2].first = e1;
      if (joins[k2].second == e2) joins[k2].second = e1;
    }
  }
}

// one R1 pass; returns curl sign and true if something was removed
bool pop_curl(PlanarDiagram& d, int& sign) {
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    const auto& legs = d.crossings[ci].legs;
    for (int p = 0; p < 4; ++p) {
      if (legs[p] == legs[(p + 1) % 4]) {
        sign = (p == 0 || p == 2) ? 1 : -1;
        remove_crossing(d, ci, {{(p + 2) % 4, (p + 3) % 4}});
        return true;
      }
    }
  }
  return false;
}

bool pop_bigon(PlanarDiagram& d) {
  for (size_t ci = 0; ci < d.crossings.size(); ++ci) {
    for (size_t cj = ci + 1; cj < d.crossings.size(); ++cj) {
      const auto& a = d.crossings[ci].legs;
      const auto& b = d.crossings[cj].legs;
      for (int pi = 0; pi < 4; ++pi) {
        int f = a[pi], g = a[(pi + 1) % 4];
        if (f == g) continue;  // curl, not a bigon
        for (int pj = 0; pj < 4; ++pj) {
          // f,g adjacent at cj as well, in either rotational order
          if (b[pj] == f && b[(pj + 1) % 4] == g) {
            // same strand over at both crossings?
            if (pi % 2 == pj % 2) {
              remove_bigon(d, ci, cj, pi, pj, (pi + 1) % 4, (pj + 1) % 4);
              return true;
            }
          } else if (b[pj] == g && b[(pj + 1) % 4] == f) {
            if (pi % 2 == (pj + 1) % 2) {
              remove_bigon(d, ci, cj, pi, (pj + 1) % 4, (pi + 1) % 4, pj);
              return true;
            }
          }
        }
      }
    }
  }
  return false;
}

struct TraversalInfo {
  int components = 0;
  int writhe = 0;
  bool descending = true;
  int first_bad = -1;        // crossing index of the first under-first crossing
  int last_bad = -1;
  std::vector<int> order;    // crossings in first-visit order
};

// Dart id = 4*crossing + leg.  Walking exits dart d, arrives at its edge
// partner p, passes through to dart (p+2)%4 of the same crossing.
TraversalInfo traverse(const PlanarDiagram& d) {
  TraversalInfo info;
  const size_t nc = d.crossings.size();
  std::vector<int> partner(4 * nc, -1);
  {
    std::map<int, std::vector<int>> by_edge;
    for (size_t ci = 0; ci < nc; ++ci)
      for (int l = 0; l < 4; ++l) by_edge[d.crossings[ci].legs[l]].push_back(4 * ci + l);
    for (const auto& [e, darts] : by_edge) {
      if (darts.size() != 2)
        throw InconsistentEdges("edge " + std::to_string(e) + " appears " +
                                std::to_string(darts.size()) + " times");
      partner[darts[0]] = darts[1];
      partner[darts[1]] = darts[0];
    }
  }

  std::vector<bool> dart_seen(4 * nc, false);
  std::vector<int> first_leg(nc, -1);    // first arrival leg per crossing
  std::vector<int> under_in(nc, -1), over_in(nc, -1);
  std::vector<int> visit_rank(nc, -1);
  int rank = 0;

  for (size_t start = 0; start < 4 * nc; ++start) {
    if (dart_seen[start]) continue;
    info.components += 1;
    size_t dart = start;
    do {
      dart_seen[dart] = true;
      int p = partner[dart];
      dart_seen[p] = true;
      int ci = p / 4, leg = p % 4;
      if (visit_rank[ci] < 0) {
        visit_rank[ci] = rank++;
        info.order.push_back(ci);
        first_leg[ci] = leg;
      }
      if (leg % 2 == 0)
        under_in[ci] = leg;
      else
        over_in[ci] = leg;
      dart = 4 * ci + (leg + 2) % 4;
    } while (dart != start);
  }

  for (size_t ci = 0; ci < nc; ++ci) {
    if (under_in[ci] < 0 || over_in[ci] < 0)
      throw InconsistentEdges("crossing " + std::to_string(ci) + " not fully traversed");
    info.writhe += over_in[ci] == (under_in[ci] + 3) % 4 ? 1 : -1;
  }
  for (int ci : info.order) {
    if (first_leg[ci] % 2 == 0) {
      info.descending = false;
      if (info.first_bad < 0) info.first_bad = ci;
      info.last_bad = ci;
    }
  }
  info.components += d.free_loops;
  return info;
}

// components of the crossing-adjacency graph (shared edge = adjacent)
std::vector<PlanarDiagram> split_crossing_components(const PlanarDiagram& d) {
  const size_t nc = d.crossings.size();
  std::vector<int> comp(nc, -1);
  std::map<int, std::vector<size_t>> by_edge;
  for (size_t ci = 0; ci < nc; ++ci)
    for (int l = 0; l < 4; ++l) by_edge[d.crossings[ci].legs[l]].push_back(ci);
  int ncomp = 0;
  for (size_t seed = 0; seed < nc; ++seed) {
    if (comp[seed] >= 0) continue;
    std::vector<size_t> stack{seed};
    comp[seed] = ncomp;
    while (!stack.empty()) {
      size_t ci = stack.back();
      stack.pop_back();
      for (int l = 0; l < 4; ++l)
        for (size_t cj : by_edge[d.crossings[ci].legs[l]])
          if (comp[cj] < 0) {
            comp[cj] = ncomp;
            stack.push_back(cj);
          }
    }
    ++ncomp;
  }
  std::vector<PlanarDiagram> out(ncomp);
  for (size_t ci = 0; ci < nc; ++ci) out[comp[ci]].crossings.push_back(d.crossings[ci]);
  return out;
}

// Canonical key: minimum over all start darts of the edge-relabeled crossing
// list in first-visit order, each crossing rotated by 0 or 2 to the smaller
// form.  Assumes a crossing-connected diagram.
std::vector<int> canonical_key(const PlanarDiagram& d) {
  const size_t nc = d.crossings.size();
  std::vector<int> partner(4 * nc, -1);
  {
    std::map<int, std::vector<int>> by_edge;
    for (size_t ci = 0; ci < nc; ++ci)
      for (int l = 0; l < 4; ++l) by_edge[d.crossings[ci].legs[l]].push_back(4 * ci + l);
    for (const auto& [e, darts] : by_edge) {
      partner[darts[0]] = darts[1];
      partner[darts[1]] = darts[0];
    }
  }

  std::vector<int> best;
  for (size_t start = 0; start < 4 * nc; ++start) {
    std::map<int, int> relabel;  // old edge id -> new
    auto newid = [&relabel](int e) {
      auto it = relabel.find(e);
      if (it != relabel.end()) return it->second;
      int id = static_cast<int>(relabel.size());
      relabel.emplace(e, id);
      return id;
    };
    std::vector<int> visit_rank(nc, -1);
    std::vector<int> order;
    std::vector<bool> dart_seen(4 * nc, false);
    size_t cursor = start;
    // walk strands; when one closes, restart from the lowest-ranked crossing
    // with unvisited darts
    while (true) {
      size_t dart = cursor;
      do {
        dart_seen[dart] = true;
        newid(d.crossings[dart / 4].legs[dart % 4]);
        int p = partner[dart];
        dart_seen[p] = true;
        int ci = p / 4, leg = p % 4;
        if (visit_rank[ci] < 0) {
          visit_rank[ci] = static_cast<int>(order.size());
          order.push_back(ci);
        }
        dart = 4 * ci + (leg + 2) % 4;
      } while (dart != cursor);
      // next unvisited dart, lowest crossing rank then leg
      int bi = -1, bl = 5;
      for (size_t ci = 0; ci < nc; ++ci) {
        if (visit_rank[ci] < 0) continue;
        for (int l = 0; l < 4; ++l)
          if (!dart_seen[4 * ci + l] &&
              (bi < 0 || visit_rank[ci] < visit_rank[bi] || (visit_rank[ci] == visit_rank[bi] && l < bl))) {
            bi = static_cast<int>(ci);
            bl = l;
          }
      }
      if (bi < 0) break;
      cursor = 4 * bi + bl;
    }
    std::vector<int> enc;
    enc.reserve(4 * nc);
    for (int ci : order) {
      const auto& legs = d.crossings[ci].legs;
      std::array<int, 4> r0{}, r2{};
      for (int l = 0; l < 4; ++l) {
        r0[l] = relabel.at(legs[l]);
        r2[l] = relabel.at(legs[(l + 2) % 4]);
      }
      const auto& pick = r2 < r0 ? r2 : r0;
      enc.insert(enc.end(), pick.begin(), pick.end());
    }
    if (best.empty() || enc < best) best = std::move(enc);
  }
  return best;
}

Laurent kauffman_core(PlanarDiagram d, const SkeinParams& params, const OracleOptions& opt,
                      std::map<std::vector<int>, Laurent>* memo);

// value of a crossing-connected, reduced diagram
Laurent kauffman_connected(const PlanarDiagram& d, const SkeinParams& params,
                           const OracleOptions& opt,
                           std::map<std::vector<int>, Laurent>* memo) {
  std::vector<int> key;
  if (memo) {
    key = canonical_key(d);
    auto it = memo->find(key);
    if (it != memo->end()) return it->second;
  }

  TraversalInfo info = traverse(d);
  Laurent value;
  if (info.descending) {
    // descending diagrams split; each component is a curled unknot
    value = params.delta.pow(info.components) * params.alpha.pow(info.writhe);
  } else {
    int bad = opt.strategy == 0 ? info.first_bad : info.last_bad;
    PlanarDiagram switched = d;
    auto& legs = switched.crossings[bad].legs;
    legs = {legs[1], legs[2], legs[3], legs[0]};
    PlanarDiagram smooth_plus = d;
    remove_crossing(smooth_plus, bad, {{0, 1}, {2, 3}});
    PlanarDiagram smooth_minus = d;
    remove_crossing(smooth_minus, bad, {{0, 3}, {1, 2}});
    value = kauffman_core(std::move(switched), params, opt, memo) +
            params.z * kauffman_core(std::move(smooth_plus), params, opt, memo) -
            params.z * kauffman_core(std::move(smooth_minus), params, opt, memo);
  }
  if (memo) memo->emplace(std::move(key), value);
  return value;
}

Laurent kauffman_core(PlanarDiagram d, const SkeinParams& params, const OracleOptions& opt,
                      std::map<std::vector<int>, Laurent>* memo) {
  // reduce first: curls give alpha factors, bigons are free
  int alpha_exp = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    int sign = 0;
    while (pop_curl(d, sign)) {
      alpha_exp += sign;
      changed = true;
    }
    while (pop_bigon(d)) changed = true;
  }
  Laurent value = params.delta.pow(d.free_loops) * params.alpha.pow(alpha_exp);
  if (d.crossings.empty()) return value;
  d.free_loops = 0;
  for (const auto& comp : split_crossing_components(d))
    value = value * kauffman_connected(comp, params, opt, memo);
  return value;
}

}  // namespace

int PlanarDiagram::components() const { return traverse(*this).components; }

std::string PlanarDiagram::to_pd_text() const {
  std::ostringstream out;
  out << "[";
  for (size_t i = 0; i < crossings.size(); ++i) {
    if (i) out << ",";
    out << "[" << crossings[i].legs[0] << "," << crossings[i].legs[1] << ","
        << crossings[i].legs[2] << "," << crossings[i].legs[3] << "]";
  }
  out << "]";
  return out.str();
}

PlanarDiagram parse_pd(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedPD(std::string("bad json: ") + e.what());
  }
  PlanarDiagram d;
  nlohmann::json crossings;
  if (j.is_array()) {
    crossings = j;
    if (crossings.empty()) d.free_loops = 1;  // bare [] marks a single loop
  } else if (j.is_object() && j.contains("crossings")) {
    crossings = j["crossings"];
    if (j.contains("components")) {
      if (!j["components"].is_number_integer() || j["components"].get<int>() < 0)
        throw MalformedPD("components hint must be a nonnegative integer");
      d.free_loops = j["components"].get<int>();
    }
  } else {
    throw MalformedPD("expected a list of crossings or {\"crossings\":...}");
  }
  for (const auto& c : crossings) {
    if (!c.is_array() || c.size() != 4) throw MalformedPD("crossing must be a 4-integer list");
    Crossing cr{};
    for (int l = 0; l < 4; ++l) {
      if (!c[l].is_number_integer()) throw MalformedPD("edge labels must be integers");
      cr.legs[l] = c[l].get<int>();
    }
    if (cr.legs[0] == cr.legs[2] || cr.legs[1] == cr.legs[3])
      throw InconsistentEdges("strand crosses itself through a single edge");
    d.crossings.push_back(cr);
  }
  // validate edge incidences and closed traversal
  traverse(d);
  return d;
}

PlanarDiagram braid_to_pd(const BraidWord& braid) {
  PlanarDiagram d;
  const int k = braid.strands;
  int next_id = 0;
  std::vector<int> bottom(k), current(k);
  for (int i = 0; i < k; ++i) bottom[i] = current[i] = next_id++;
  for (int j : braid.letters) {
    int p = std::abs(j) - 1;
    int L = current[p], R = current[p + 1];
    int Lc = next_id++, Rc = next_id++;  // continuations of L and R
    if (j > 0)
      d.crossings.push_back({{R, Lc, Rc, L}});  // left strand over
    else
      d.crossings.push_back({{L, R, Lc, Rc}});  // right strand over
    current[p] = Rc;
    current[p + 1] = Lc;
  }
  // trace closure: join each top back to its bottom
  std::vector<std::pair<int, int>> joins;
  for (int i = 0; i < k; ++i) joins.emplace_back(current[i], bottom[i]);
  for (size_t t = 0; t < joins.size(); ++t) {
    auto [e1, e2] = joins[t];
    if (e1 == e2) {
      d.free_loops += 1;
      continue;
    }
    rename_edge(d, e2, e1);
    for (size_t t2 = t + 1; t2 < joins.size(); ++t2) {
      if (joins[t2].first == e2) joins[t2].first = e1;
      if (joins[t2].second == e2) joins[t2].second = e1;
    }
  }
  return d;
}

Simplified simplify(PlanarDiagram d) {
  Simplified s;
  bool changed = true;
  while (changed) {
    changed = false;
    int sign = 0;
    while (pop_curl(d, sign)) {
      s.alpha_exponent += sign;
      changed = true;
    }
    while (pop_bigon(d)) changed = true;
  }
  s.diagram = std::move(d);
  return s;
}

SkeinParams SkeinParams::from_spec(const AlgebraSpec& spec) {
  SkeinParams p{spec.alpha(), spec.z(), spec.delta()};
  p.validate();
  return p;
}

void SkeinParams::validate() const {
  if (delta * z != alpha - alpha.inverse() + z)
    throw std::invalid_argument("skein params violate delta*z = alpha - alpha^{-1} + z");
}

Laurent kauffman_poly(const PlanarDiagram& diagram, const SkeinParams& params,
                      const OracleOptions& options) {
  if (static_cast<int>(diagram.crossings.size()) > options.crossing_limit)
    throw RecursionLimit("diagram has " + std::to_string(diagram.crossings.size()) +
                         " crossings, limit " + std::to_string(options.crossing_limit));
  std::map<std::vector<int>, Laurent> memo;
  return kauffman_core(diagram, params, options,
                       options.memoize ? &memo : nullptr);
}

}  // namespace qlink
