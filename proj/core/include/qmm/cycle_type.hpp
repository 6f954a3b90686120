#pragma once

#include <compare>
#include <vector>

#include "qmm/rational.hpp"

namespace qmm {

// An integer partition: weakly decreasing positive parts. Doubles as the
// cycle type of a permutation and as the shape index of an irreducible
// character.
class CycleType {
 public:
  CycleType() = default;  // the empty partition of 0
  explicit CycleType(std::vector<int> parts);

  int degree() const { return degree_; }
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  auto operator<=>(const CycleType&) const = default;

  std::string to_string() const;  // "2,1" ; "" for the empty partition

 private:
  std::vector<int> parts_;
  int degree_ = 0;
};

// All partitions of d in a fixed order: descending lexicographic, so (d)
// first and (1,...,1) last. partitions_of(0) is { {} }.
const std::vector<CycleType>& partitions_of(int d);

// Index of a partition within partitions_of(d).
int partition_index(const CycleType& type);

// Centralizer order z = prod_j j^{m_j} m_j!, so the conjugacy class has
// d!/z elements.
BigInt centralizer_order(const CycleType& type);
BigInt conjugacy_class_size(const CycleType& type);

BigInt factorial(int d);

}  // namespace qmm
