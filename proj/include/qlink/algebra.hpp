#pragma once

#include "qlink/laurent.hpp"

#include <string>
#include <vector>

namespace qlink {

enum class Family { B, C, D };

char family_char(Family f);
Family family_from_char(char c);  // throws std::invalid_argument

struct UnsupportedRank : std::runtime_error {
  explicit UnsupportedRank(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidLabel : std::runtime_error {
  explicit InvalidLabel(const std::string& what) : std::runtime_error(what) {}
};

// A weight of the fundamental representation.  For B and C the labels are the
// indices 0..m.  D_n has the extra label (n-1)' sitting between n-1 and n in
// the total order; `prime` marks it.
struct WeightLabel {
  int index = 0;
  bool prime = false;

  bool operator==(const WeightLabel& o) const { return index == o.index && prime == o.prime; }
  std::string name() const { return std::to_string(index) + (prime ? "p" : ""); }
};

// Weight data and scalar constants for one fundamental representation.
// Internally all per-weight tables are indexed by the order value o(a), which
// runs 0..m and is a bijection onto the labels.
class AlgebraSpec {
 public:
  static AlgebraSpec make(Family family, int rank);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  int m() const { return dim_ - 1; }

  const WeightLabel& label(int order) const;
  int order(const WeightLabel& l) const;  // throws InvalidLabel
  WeightLabel complement(const WeightLabel& l) const;
  int complement_order(int order) const { return m() - order; }

  // 2*(lambda^s, lambda^t); half-integers kept exact as integers in units of
  // 1/2.  Arguments are order values.
  int inner2(int s, int t) const;

  // Multiplicity of each simple root in lambda - lambda^a, indexed 0..rank-1.
  // The pairwise sums of these vectors drive the wall-crossing conservation
  // law that fixes the braiding block structure.
  std::vector<int> root_counts(int order) const;

  const Laurent& gamma() const { return gamma_; }
  const Laurent& gamma_inv() const { return gamma_inv_; }
  const Laurent& z() const { return z_; }
  const Laurent& alpha() const { return alpha_; }
  const Laurent& alpha_inv() const { return alpha_inv_; }
  const Laurent& delta() const { return delta_; }

  std::string id() const { return std::string(1, family_char(family_)) + std::to_string(rank_); }

 private:
  AlgebraSpec() = default;

  Family family_ = Family::B;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<WeightLabel> labels_;
  Laurent gamma_, gamma_inv_, z_, alpha_, alpha_inv_, delta_;

  void check_order(int order) const;
};

}  // namespace qlink
