#pragma once

#include <cstdint>
#include <stdexcept>

#include <Eigen/SparseCore>

namespace kh {

/// Coefficient field selector: 0 means the rationals, otherwise a prime p
/// selecting F_p.
class Modulus {
 public:
  constexpr Modulus() = default;

  static constexpr Modulus rationals() { return Modulus{}; }
  /// Throws std::invalid_argument unless `value` is 0 or a prime below 2^31.
  static Modulus from_int(long long value);

  constexpr std::uint32_t value() const { return p_; }
  constexpr bool is_rational() const { return p_ == 0; }

  friend constexpr bool operator==(Modulus, Modulus) = default;

 private:
  constexpr explicit Modulus(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(long long n);

/// Differential blocks: integer entries (in {-1, 0, 1} as built from the
/// cube), interpreted in whichever field the rank is taken over.
using SparseMatrix = Eigen::SparseMatrix<int, Eigen::RowMajor, int>;

struct RankNullity {
  Eigen::Index rank = 0;
  Eigen::Index nullity = 0;
};

/// Exact rank of `m` over Q or F_p, and nullity = cols - rank.
///
/// Over Q the elimination is fraction free: rows stay integral and are
/// divided by their content after each update. Machine integers are tried
/// first; on overflow the block is redone with GMP integers. Pivots are
/// chosen from the shortest remaining row, preferring unit entries and then
/// the sparsest column; ties go to the lowest (row, col), so results and
/// work are reproducible.
RankNullity rank_kernel(const SparseMatrix& m, Modulus modulus);

}  // namespace kh
