#pragma once

#include <cstddef>
#include <stdexcept>

#include "khovanov/laurent.hpp"
#include "khovanov/pd_code.hpp"

namespace kh {

/// The state sum enumerates 2^n smoothings; larger diagrams are refused.
inline constexpr std::size_t kDefaultJonesCrossingLimit = 16;

class CrossingLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// <L> = sum over states alpha of (-1)^|alpha| q^|alpha| (q + q^-1)^k(alpha).
BracketPoly kauffman_bracket(const LinkDiagram& d, std::size_t max_crossings = kDefaultJonesCrossingLimit);

/// (-1)^{n_-} q^{n_+ - 2n_-} <L>.
BracketPoly unnormalized_jones(const LinkDiagram& d, std::size_t max_crossings = kDefaultJonesCrossingLimit);

/// Unnormalized Jones divided by q + q^-1. Throws std::logic_error when the
/// division is inexact, which cannot happen for a valid diagram.
BracketPoly jones(const LinkDiagram& d, std::size_t max_crossings = kDefaultJonesCrossingLimit);

}  // namespace kh
