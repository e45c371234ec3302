#include "khovanov/graded_dimension.hpp"

namespace kh {

GradedDimension GradedDimension::v_space() {
  GradedDimension g;
  g.add(-1, 1);
  g.add(1, 1);
  return g;
}

std::int64_t GradedDimension::operator[](int degree) const {
  auto it = dims_.find(degree);
  return it == dims_.end() ? 0 : it->second;
}

void GradedDimension::add(int degree, std::int64_t dim) {
  if (dim == 0) return;
  auto& slot = dims_[degree];
  slot += dim;
  if (slot == 0) dims_.erase(degree);
}

std::int64_t GradedDimension::total() const {
  std::int64_t s = 0;
  for (const auto& [m, d] : dims_) s += d;
  return s;
}

LaurentPoly2 GradedDimension::to_poly() const {
  LaurentPoly2 p;
  for (const auto& [m, d] : dims_) p.add_term(0, m, d);
  return p;
}

GradedDimension qdim_shift(const GradedDimension& g, int l) {
  GradedDimension out;
  for (const auto& [m, d] : g.entries()) out.add(m + l, d);
  return out;
}

GradedDimension tensor(const GradedDimension& a, const GradedDimension& b) {
  GradedDimension out;
  for (const auto& [ma, da] : a.entries())
    for (const auto& [mb, db] : b.entries()) out.add(ma + mb, da * db);
  return out;
}

}  // namespace kh
