#include "qlink/braiding.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace qlink {

Laurent FusionMatrix::annihilate(int a, int b) const {
  if (a + b != m) return Laurent::zero();
  return zeta[a];
}

Laurent FusionMatrix::create(int a, int b) const {
  if (a + b != m) return Laurent::zero();
  return zeta_inv[a];
}

void BraidMatrix::add(int src_key, int dst_key, const Laurent& coeff) {
  if (coeff.is_zero()) return;
  auto& row = rows_[src_key];
  for (auto& [dst, c] : row) {
    if (dst == dst_key) {
      c += coeff;
      if (c.is_zero()) {
        row.erase(std::find_if(row.begin(), row.end(),
                               [&](const auto& p) { return p.first == dst_key; }));
      }
      return;
    }
  }
  row.emplace_back(dst_key, coeff);
}

Laurent BraidMatrix::entry(int src_key, int dst_key) const {
  for (const auto& [dst, c] : rows_[src_key])
    if (dst == dst_key) return c;
  return Laurent::zero();
}

void BraidMatrix::set_entry(int src_key, int dst_key, const Laurent& coeff) {
  auto& row = rows_[src_key];
  for (auto it = row.begin(); it != row.end(); ++it) {
    if (it->first == dst_key) {
      if (coeff.is_zero())
        row.erase(it);
      else
        it->second = coeff;
      return;
    }
  }
  if (!coeff.is_zero()) row.emplace_back(dst_key, coeff);
}

std::string BraidMatrix::dump(const AlgebraSpec& spec) const {
  std::vector<std::string> lines;
  for (int src = 0; src < dim(); ++src) {
    auto [a, b] = unkey(src);
    for (const auto& [dst, c] : rows_[src]) {
      auto [cc, dd] = unkey(dst);
      std::ostringstream line;
      line << spec.label(a).name() << "," << spec.label(b).name() << " -> "
           << spec.label(cc).name() << "," << spec.label(dd).name() << " : " << c.render();
      lines.push_back(line.str());
    }
  }
  std::sort(lines.begin(), lines.end());
  std::ostringstream out;
  for (const auto& l : lines) out << l << "\n";
  return out.str();
}

FusionMatrix build_fusion(const AlgebraSpec& spec) {
  FusionMatrix f;
  f.m = spec.m();
  int n = spec.rank();
  f.zeta.reserve(f.m + 1);
  for (int a = 0; a <= f.m; ++a) {
    switch (spec.family()) {
      case Family::B:
        // M_{a,2n-a} = q^{(2n-2a-1)/4} below the middle, 1 at a=n, and
        // q^{(2n-2a+1)/4} above
        if (a < n)
          f.zeta.push_back(Laurent::monomial(GaussInt(1), 2 * n - 2 * a - 1));
        else if (a == n)
          f.zeta.push_back(Laurent::one());
        else
          f.zeta.push_back(Laurent::monomial(GaussInt(1), 2 * n - 2 * a + 1));
        break;
      case Family::C:
        // -i q^{(n-a)/4} for a <= n-1, i q^{(n-1-a)/4} for a >= n
        if (a <= n - 1)
          f.zeta.push_back(Laurent::monomial(GaussInt(BigInt(0), BigInt(-1)), n - a));
        else
          f.zeta.push_back(Laurent::monomial(GaussInt(BigInt(0), BigInt(1)), n - 1 - a));
        break;
      case Family::D:
        // q^{(n-1-o)/2} for o <= n-1, q^{(n-o)/2} for o >= n
        if (a <= n - 1)
          f.zeta.push_back(Laurent::monomial(GaussInt(1), 2 * (n - 1 - a)));
        else
          f.zeta.push_back(Laurent::monomial(GaussInt(1), 2 * (n - a)));
        break;
    }
  }
  // Creation entries from the normalization M_{ab} M_{ba} = 1, i.e. M^{ab} = M_{ab}.
  f.zeta_inv = f.zeta;
  return f;
}

Laurent beta_diagonal(const AlgebraSpec& spec, int order) {
  const Laurent& g = spec.gamma();
  const Laurent& gi = spec.gamma_inv();
  int m = spec.m();
  Laurent gpow = g.pow(2 * order - m + 1);
  if (m % 2 == 0) {
    // (gamma - gamma^{-1})(1 - gamma^{2a-m+1})
    return (g - gi) * (Laurent::one() - gpow);
  }
  // gamma - gamma^{-1} + (gamma^{-1} - x^{-2} gamma) gamma^{2a-m+1}
  // with x = M_{[m/2]+1,[m/2]} M^{[m/2]+1,[m/2]}.
  Laurent x = spec.family() == Family::C
                  ? Laurent::monomial(GaussInt(-1), -2)  // -q^{-1/2}
                  : Laurent::one();
  Laurent xi2 = x.inverse() * x.inverse();
  return (g - gi) + (gi - xi2 * g) * gpow;
}

Laurent beta_offdiag(const AlgebraSpec& spec, int u, int v) {
  const Laurent& g = spec.gamma();
  const Laurent& gi = spec.gamma_inv();
  int n = spec.rank();
  int m = spec.m();
  Laurent zpos = gi - g;  // q^{1/2}-q^{-1/2} (B,D) or q^{1/4}-q^{-1/4} (C)
  bool delta_hits = (u == m - v);
  switch (spec.family()) {
    case Family::B: {
      int su = u - n, sv = v - n;
      if (su * sv > 0) return zpos * Laurent::q_power(-(u - v) * 2, 4);
      if (su * sv == 0) return zpos * Laurent::q_power(-(2 * (u - v) + 1), 4);
      Laurent r = zpos * Laurent::q_power(-(u - v + 1) * 2, 4);
      if (delta_hits) r += g - gi;
      return r;
    }
    case Family::C: {
      // sign of (a-n+1/2)(b-n+1/2), never zero
      bool same_side = (2 * u - 2 * n + 1 > 0) == (2 * v - 2 * n + 1 > 0);
      if (same_side) return zpos * Laurent::q_power(-(u - v), 4);
      Laurent r = (g - gi) * Laurent::q_power(-(u - v - 1), 4);
      if (delta_hits) r += g - gi;
      return r;
    }
    case Family::D: {
      bool same_side = (2 * u - 2 * n + 1 > 0) == (2 * v - 2 * n + 1 > 0);
      if (same_side) return zpos * Laurent::q_power(-(u - v) * 2, 4);
      Laurent r = zpos * Laurent::q_power(-(u - v + 1) * 2, 4);
      if (delta_hits) r += g - gi;
      return r;
    }
  }
  return Laurent::zero();
}

BraidMatrix build_braiding(const AlgebraSpec& spec, const FusionMatrix&) {
  const int m = spec.m();
  const int side = m + 1;
  BraidMatrix B(side);

  // Group basis pairs by the total simple-root multiset; braiding only mixes
  // pairs within a class (conservation law of wall-crossing).
  std::map<std::vector<int>, std::vector<std::pair<int, int>>> classes;
  for (int a = 0; a <= m; ++a) {
    std::vector<int> ra = spec.root_counts(a);
    for (int b = 0; b <= m; ++b) {
      std::vector<int> key = ra;
      std::vector<int> rb = spec.root_counts(b);
      for (size_t i = 0; i < key.size(); ++i) key[i] += rb[i];
      classes[std::move(key)].emplace_back(a, b);
    }
  }

  std::vector<int> vacuum_key_counts = spec.root_counts(0);
  {
    std::vector<int> top = spec.root_counts(m);
    for (size_t i = 0; i < vacuum_key_counts.size(); ++i) vacuum_key_counts[i] += top[i];
  }

  const Laurent wct = spec.gamma() - spec.gamma_inv();  // gamma - gamma^{-1}

  for (const auto& [key, pairs] : classes) {
    bool vacuum = key == vacuum_key_counts;
    if (!vacuum) {
      // Off-critical blocks: gamma on equal pairs, otherwise the 2x2
      // [[0,1],[1,gamma-gamma^{-1}]] in the (higher, lower) order basis.
      for (auto [a, b] : pairs) {
        if (a == b) {
          B.add(B.key(a, b), B.key(a, b), spec.gamma());
        } else if (a > b) {
          B.add(B.key(a, b), B.key(b, a), Laurent::one());
        } else {
          B.add(B.key(a, b), B.key(b, a), Laurent::one());
          B.add(B.key(a, b), B.key(a, b), wct);
        }
      }
      continue;
    }
    for (auto [a, b] : pairs) {
      // Every vacuum-class pair is fused: b == comp(a).  Skew entry is
      // gamma^{-1}, or 1 at the B_n center pair (n,n).
      if (a + b != m) throw std::logic_error("vacuum class contains non-fused pair");
      int src = B.key(a, b);
      if (2 * a == m)
        B.add(src, B.key(b, a), Laurent::one());
      else
        B.add(src, B.key(b, a), spec.gamma_inv());
      // wall-crossing terms toward targets (comp(v), v) with o(v) > o(a)
      for (int v = a + 1; v <= m; ++v) {
        int d = m - v;
        if (v == b) {
          Laurent diag = beta_diagonal(spec, a);
          B.add(src, B.key(a, b), diag);
        } else {
          B.add(src, B.key(d, v), beta_offdiag(spec, a, v));
        }
      }
    }
  }
  return B;
}

BraidMatrix build_braiding_inverse(const BraidMatrix& braiding, const FusionMatrix& fusion,
                                   const AlgebraSpec& spec) {
  const int m = spec.m();
  BraidMatrix Binv(m + 1);
  // B^{-1} = B - z(E - I), E_{ab}^{cd} = M_{ab} M^{cd}
  for (int a = 0; a <= m; ++a) {
    for (int b = 0; b <= m; ++b) {
      int src = Binv.key(a, b);
      for (const auto& [dst, c] : braiding.row(src)) Binv.add(src, dst, c);
      Binv.add(src, src, spec.z());
      if (a + b == m) {
        const Laurent mab = fusion.zeta[a];
        for (int c2 = 0; c2 <= m; ++c2)
          Binv.add(src, Binv.key(c2, m - c2), -(spec.z() * mab * fusion.zeta_inv[c2]));
      }
    }
  }
  // mandatory exactness check: B * B^{-1} = I
  for (int src = 0; src < braiding.dim(); ++src) {
    std::map<int, Laurent> acc;
    for (const auto& [mid, c1] : braiding.row(src))
      for (const auto& [dst, c2] : Binv.row(mid)) {
        auto it = acc.find(dst);
        if (it == acc.end())
          acc.emplace(dst, c1 * c2);
        else
          it->second += c1 * c2;
      }
    for (const auto& [dst, c] : acc) {
      bool want_one = dst == src;
      if (want_one ? (c != Laurent::one()) : !c.is_zero())
        throw InverseCheckFailed("B*B^{-1} != I at source " + std::to_string(src) +
                                 ", target " + std::to_string(dst));
    }
    if (acc.find(src) == acc.end()) throw InverseCheckFailed("missing diagonal at " + std::to_string(src));
  }
  return Binv;
}

MatrixSet build_matrices(Family family, int rank) {
  AlgebraSpec spec = AlgebraSpec::make(family, rank);
  FusionMatrix fusion = build_fusion(spec);
  BraidMatrix braid = build_braiding(spec, fusion);
  BraidMatrix braid_inv = build_braiding_inverse(braid, fusion, spec);
  return MatrixSet{std::move(spec), std::move(fusion), std::move(braid), std::move(braid_inv)};
}

}  // namespace qlink
