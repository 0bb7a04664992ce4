#pragma once

#include "qlink/algebra.hpp"

#include <utility>
#include <vector>

namespace qlink {

struct InverseCheckFailed : std::runtime_error {
  explicit InverseCheckFailed(const std::string& what) : std::runtime_error(what) {}
};

// Fusion matrix M and its inverse on V (x) V.  Both are antidiagonal in the
// weight basis: M_{ab} is nonzero only for b = complement(a).  zeta holds the
// antidiagonal, indexed by the order value of the first label.
struct FusionMatrix {
  int m = 0;
  std::vector<Laurent> zeta;      // M_{a, comp(a)}
  std::vector<Laurent> zeta_inv;  // M^{a, comp(a)}

  // M_{ab} / M^{ab}; zero unless a+b == m in order units.
  Laurent annihilate(int a, int b) const;
  Laurent create(int a, int b) const;
};

// Sparse operator on V (x) V.  Source and target pairs are encoded as
// a*(m+1)+b in order units; each row lists (target, coefficient).
class BraidMatrix {
 public:
  explicit BraidMatrix(int side) : side_(side), rows_(side * side) {}

  int side() const { return side_; }
  int dim() const { return side_ * side_; }
  int key(int a, int b) const { return a * side_ + b; }
  std::pair<int, int> unkey(int k) const { return {k / side_, k % side_}; }

  const std::vector<std::pair<int, Laurent>>& row(int src_key) const { return rows_[src_key]; }
  void add(int src_key, int dst_key, const Laurent& coeff);
  Laurent entry(int src_key, int dst_key) const;
  void set_entry(int src_key, int dst_key, const Laurent& coeff);  // test/tamper hook

  // Debug dump: lines `a,b -> c,d : <poly>` sorted lexicographically.
  std::string dump(const AlgebraSpec& spec) const;

 private:
  int side_;
  std::vector<std::vector<std::pair<int, Laurent>>> rows_;
};

FusionMatrix build_fusion(const AlgebraSpec& spec);
BraidMatrix build_braiding(const AlgebraSpec& spec, const FusionMatrix& fusion);
// B^{-1} = B - z(E - I) with E_{ab}^{cd} = M_{ab} M^{cd}; verified against
// B*B^{-1} = I before returning.
BraidMatrix build_braiding_inverse(const BraidMatrix& braiding, const FusionMatrix& fusion,
                                   const AlgebraSpec& spec);

// Everything needed to evaluate invariants for one algebra.
struct MatrixSet {
  AlgebraSpec spec;
  FusionMatrix fusion;
  BraidMatrix braid;
  BraidMatrix braid_inv;
};

MatrixSet build_matrices(Family family, int rank);

// Diagonal wall-crossing coefficient beta_{a,m-a}^{a,m-a} from the constraint
// lemma; `order` is o(a) < m/2.
Laurent beta_diagonal(const AlgebraSpec& spec, int order);
// Off-skew wall-crossing coefficient for source (a, comp(a)) -> target
// (comp(b), b), in order units u = o(a) < v = o(b).
Laurent beta_offdiag(const AlgebraSpec& spec, int u, int v);

}  // namespace qlink
