#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "khovanov/cube.hpp"
#include "khovanov/graded_dimension.hpp"
#include "khovanov/laurent.hpp"
#include "khovanov/pd_code.hpp"
#include "khovanov/sparse_rank.hpp"

namespace kh {

/// (homological height r, q-degree m), both after the [-n_-]{n_+ - 2n_-}
/// shift.
struct Bigrading {
  int r = 0;
  int m = 0;
  friend auto operator<=>(const Bigrading&, const Bigrading&) = default;
};

using BigradedTable = std::map<Bigrading, std::int64_t>;

/// One summand C^r_m of the complex. Basis vectors are ordered by vertex
/// (lexicographic within the height) and then by marking.
struct ChainBlock {
  Bigrading grading;
  std::vector<BasisVector> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// C(L) = [[L]][-n_-]{n_+ - 2n_-} with its differential split by q-degree.
class ChainComplex {
 public:
  int height_shift() const { return height_shift_; }
  int degree_shift() const { return degree_shift_; }

  const std::map<Bigrading, ChainBlock>& blocks() const { return blocks_; }
  std::size_t dim(Bigrading g) const;

  /// d^r_m : C^r_m -> C^{r+1}_m as a (dim C^{r+1}_m) x (dim C^r_m) matrix.
  /// Absent blocks give an empty matrix of the right shape.
  SparseMatrix differential(Bigrading g) const;
  const std::map<Bigrading, SparseMatrix>& differentials() const { return differentials_; }

  /// Shifted q-degree of a basis vector.
  int q_degree(const BasisVector& b) const;

 private:
  friend ChainComplex build_complex(const LinkDiagram& d);
  friend std::size_t degree_violations(const ChainComplex& c);
  int height_shift_ = 0;
  int degree_shift_ = 0;
  std::vector<int> k_by_vertex_;
  std::size_t dropped_images_ = 0;
  std::map<Bigrading, ChainBlock> blocks_;
  std::map<Bigrading, SparseMatrix> differentials_;
};

/// Materializes every block and differential matrix.
ChainComplex build_complex(const LinkDiagram& d);

struct ComputeOptions {
  /// Worker threads for block ranks; 0 picks hardware concurrency.
  unsigned threads = 1;
};

struct KhResult {
  Modulus modulus;
  /// dim H^r_m; zero entries omitted.
  BigradedTable betti;
  /// dim C^r_m; empty blocks omitted.
  BigradedTable chain_dims;
  LaurentPoly2 kh;

  std::int64_t betti_at(int r, int m) const;
  std::int64_t chain_dim_at(int r, int m) const;
};

/// Khovanov homology over Q (modulus 0) or F_p, computed blockwise with
/// betti = dim C - rank d^r - rank d^(r-1). Heights are processed in turn
/// so only two layers of the cube are resident at a time.
KhResult compute_kh(const LinkDiagram& d, Modulus modulus = {}, const ComputeOptions& opts = {});

/// qdim H^r for one shifted height r; empty outside [-n_-, n_+].
GradedDimension qbetti(const LinkDiagram& d, int r, Modulus modulus = {}, const ComputeOptions& opts = {});

/// dim C^r_m for every nonempty block, from cycle counts alone.
BigradedTable chain_dimensions(const LinkDiagram& d);

/// sum_r (-1)^r qdim C^r(L), as a polynomial in q.
LaurentPoly2 euler_characteristic(const LinkDiagram& d);

/// Rebuilds Kh from a Betti table.
LaurentPoly2 poincare_polynomial(const BigradedTable& betti);

/// Blocks where d^{r+1} d^r is not the zero matrix.
std::vector<Bigrading> d_squared_failures(const ChainComplex& c);

/// Matrix entries joining basis vectors whose q-degrees differ from the
/// block's m (there should be none).
std::size_t degree_violations(const ChainComplex& c);

/// {"modulus":p,"kh":"...","betti":[[r,m,dim],...],"chain_dims":[[r,m,dim],...]}
std::string to_json(const KhResult& result);
KhResult kh_result_from_json(std::string_view json);

/// An m-by-r grid in the style of a Betti table: rows by descending m,
/// columns by ascending r, cells "h/c" wherever dim C^r_m > 0.
std::string render_grid(const KhResult& result);

}  // namespace kh
