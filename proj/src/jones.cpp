#include "khovanov/jones.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "khovanov/cube.hpp"

namespace kh {

BracketPoly kauffman_bracket(const LinkDiagram& d, std::size_t max_crossings) {
  const std::size_t n = d.size();
  if (n > max_crossings || n > kMaxCubeDimension)
    throw CrossingLimitExceeded("diagram has " + std::to_string(n) + " crossings; the bracket state sum is limited to " +
                                std::to_string(std::min(max_crossings, kMaxCubeDimension)));
  // Tally states by (height, cycle count) first; the polynomial work is then
  // independent of 2^n.
  std::vector<std::vector<std::int64_t>> tally(n + 1);
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    const VertexKey v{b};
    const auto k = static_cast<std::size_t>(cycle_count(d, v));
    auto& row = tally[static_cast<std::size_t>(v.height())];
    if (row.size() <= k) row.resize(k + 1, 0);
    ++row[k];
  }
  const BracketPoly circle = BracketPoly::q(1) + BracketPoly::q(-1);
  BracketPoly out;
  for (std::size_t h = 0; h <= n; ++h)
    for (std::size_t k = 0; k < tally[h].size(); ++k) {
      if (tally[h][k] == 0) continue;
      const std::int64_t sign = (h % 2) ? -1 : 1;
      out += pow(circle, static_cast<unsigned>(k)).shifted(0, static_cast<int>(h)) * (sign * tally[h][k]);
    }
  return out;
}

BracketPoly unnormalized_jones(const LinkDiagram& d, std::size_t max_crossings) {
  const std::int64_t sign = (d.n_minus() % 2) ? -1 : 1;
  return kauffman_bracket(d, max_crossings).shifted(0, d.n_plus() - 2 * d.n_minus()) * sign;
}

BracketPoly jones(const LinkDiagram& d, std::size_t max_crossings) {
  const auto hat = unnormalized_jones(d, max_crossings);
  auto quotient = divide(hat, BracketPoly::q(1) + BracketPoly::q(-1));
  if (!quotient) throw std::logic_error("unnormalized Jones polynomial " + to_string(hat) + " is not divisible by q + q^-1");
  return *quotient;
}

}  // namespace kh
