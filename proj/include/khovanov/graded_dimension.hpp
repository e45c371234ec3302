#pragma once

#include <cstdint>
#include <map>

#include "khovanov/laurent.hpp"

namespace kh {

/// qdim of a graded vector space: q-degree -> dimension. Zero entries are
/// not stored.
class GradedDimension {
 public:
  GradedDimension() = default;

  /// qdim V = q + q^-1 for the two-dimensional space spanned by v+ and v-.
  static GradedDimension v_space();

  std::int64_t operator[](int degree) const;
  void add(int degree, std::int64_t dim);
  const std::map<int, std::int64_t>& entries() const { return dims_; }
  bool empty() const { return dims_.empty(); }
  std::int64_t total() const;

  /// The q-polynomial sum_m dim_m q^m.
  LaurentPoly2 to_poly() const;

  friend bool operator==(const GradedDimension&, const GradedDimension&) = default;

 private:
  std::map<int, std::int64_t> dims_;
};

/// W{l}: every degree translated by l.
GradedDimension qdim_shift(const GradedDimension& g, int l);

/// qdim(W1 (x) W2).
GradedDimension tensor(const GradedDimension& a, const GradedDimension& b);

}  // namespace kh
