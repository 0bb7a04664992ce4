#include "qlink/algebra.hpp"

namespace qlink {

char family_char(Family f) {
  switch (f) {
    case Family::B: return 'B';
    case Family::C: return 'C';
    case Family::D: return 'D';
  }
  return '?';
}

Family family_from_char(char c) {
  switch (c) {
    case 'B': case 'b': return Family::B;
    case 'C': case 'c': return Family::C;
    case 'D': case 'd': return Family::D;
  }
  throw std::invalid_argument(std::string("unknown family '") + c + "'");
}

AlgebraSpec AlgebraSpec::make(Family family, int rank) {
  int min_rank = family == Family::D ? 2 : 1;
  if (rank < min_rank)
    throw UnsupportedRank(std::string(1, family_char(family)) + std::to_string(rank) +
                          ": rank must be >= " + std::to_string(min_rank));

  AlgebraSpec s;
  s.family_ = family;
  s.rank_ = rank;
  s.dim_ = family == Family::B ? 2 * rank + 1 : 2 * rank;

  s.labels_.reserve(s.dim_);
  for (int i = 0; i < s.dim_; ++i) {
    if (family == Family::D) {
      if (i == rank) {
        s.labels_.push_back({rank - 1, true});
        continue;
      }
      s.labels_.push_back({i < rank ? i : i - 1, false});
    } else {
      s.labels_.push_back({i, false});
    }
  }

  // gamma = q^{-1/2} for B and D, q^{-1/4} for C
  int g = family == Family::C ? -1 : -2;
  s.gamma_ = Laurent::monomial(GaussInt(1), g);
  s.gamma_inv_ = Laurent::monomial(GaussInt(1), -g);
  s.z_ = s.gamma_inv_ - s.gamma_;

  switch (family) {
    case Family::B:
      s.alpha_ = Laurent::monomial(GaussInt(1), 4 * rank);  // q^n
      break;
    case Family::C:
      s.alpha_ = Laurent::monomial(GaussInt(-1), 2 * rank + 1);  // -q^{(2n+1)/4}
      break;
    case Family::D:
      s.alpha_ = Laurent::monomial(GaussInt(1), 2 * (2 * rank - 1));  // q^{(2n-1)/2}
      break;
  }
  s.alpha_inv_ = s.alpha_.inverse();
  s.delta_ = exact_div(s.alpha_ - s.alpha_inv_, s.z_) + Laurent::one();
  return s;
}

void AlgebraSpec::check_order(int order) const {
  if (order < 0 || order > m()) throw InvalidLabel("order " + std::to_string(order) + " out of range");
}

const WeightLabel& AlgebraSpec::label(int order) const {
  check_order(order);
  return labels_[order];
}

int AlgebraSpec::order(const WeightLabel& l) const {
  if (l.prime) {
    if (family_ != Family::D || l.index != rank_ - 1) throw InvalidLabel("label " + l.name());
    return rank_;
  }
  if (l.index < 0 || l.index >= dim_ - (family_ == Family::D ? 1 : 0))
    throw InvalidLabel("label " + l.name());
  if (family_ == Family::D && l.index >= rank_) return l.index + 1;
  return l.index;
}

WeightLabel AlgebraSpec::complement(const WeightLabel& l) const {
  return labels_[complement_order(order(l))];
}

int AlgebraSpec::inner2(int s, int t) const {
  check_order(s);
  check_order(t);
  // Case tables of the three inner-product lemmas, in order units; the values
  // are rank-independent.
  switch (family_) {
    case Family::B:
      if (s + t != m()) return s == t ? 2 : 0;
      return s == t ? 0 : -2;
    case Family::C:
      if (s == t) return 1;
      return s + t == m() ? -1 : 0;
    case Family::D:
      if (s + t == m()) return -2;  // complementary pairs, s == t impossible (m odd)
      return s == t ? 2 : 0;
  }
  return 0;
}

std::vector<int> AlgebraSpec::root_counts(int order) const {
  check_order(order);
  std::vector<int> counts(rank_, 0);
  int n = rank_;
  switch (family_) {
    case Family::B:
      // lambda^a subtracts alpha_1..alpha_a, then doubles alpha_n downward
      for (int i = 0; i < n; ++i) counts[i] = (i < order ? 1 : 0) + (i >= 2 * n - order ? 1 : 0);
      break;
    case Family::C:
      // past the middle the chain turns at alpha_n and doubles alpha_{n-1} down
      for (int i = 0; i < n; ++i) {
        counts[i] = i < order ? 1 : 0;
        if (order > n && i >= 2 * n - 1 - order && i < n - 1) counts[i] += 1;
      }
      break;
    case Family::D: {
      if (order <= n - 1) {
        for (int i = 0; i < order; ++i) counts[i] = 1;
      } else if (order == n) {  // the primed label: alpha_1..alpha_{n-2}, alpha_n
        for (int i = 0; i < n - 2; ++i) counts[i] = 1;
        counts[n - 1] = 1;
      } else {
        for (int i = 0; i < n; ++i) counts[i] = 1;
        for (int i = 2 * n - 1 - order; i < n - 2; ++i) counts[i] += 1;
      }
      break;
    }
  }
  return counts;
}

}  // namespace qlink
