#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "khovanov/pd_code.hpp"

namespace kh {

/// Largest crossing count the cube machinery accepts (vertex keys are
/// 32-bit masks).
inline constexpr std::size_t kMaxCubeDimension = 30;

/// A vertex alpha of the cube {0,1}^n. Bit c is the smoothing chosen at
/// crossing c (0-smoothing joins (i,j),(k,l); 1-smoothing joins (i,l),(j,k)).
struct VertexKey {
  std::uint32_t bits = 0;

  int height() const { return std::popcount(bits); }
  bool test(std::size_t c) const { return (bits >> c) & 1u; }
  friend bool operator==(VertexKey, VertexKey) = default;
};

/// Written crossing 0 first, e.g. "011".
std::string to_string(VertexKey v, std::size_t n);
VertexKey parse_vertex(std::string_view text, std::size_t n);

/// Lexicographic order of the written form.
bool vertex_less(VertexKey a, VertexKey b, std::size_t n);

/// A complete smoothing S_alpha. Cycles are sorted by their label, the
/// minimal edge they contain.
struct SmoothingVertex {
  VertexKey key;
  std::vector<std::vector<int>> cycles;
  /// Dense edge index (see LinkDiagram::label_index) -> cycle index.
  std::vector<int> cycle_of_edge;

  std::size_t k() const { return cycles.size(); }
  int label(std::size_t cycle) const { return cycles[cycle].front(); }
  std::vector<int> labels() const;
  int cycle_with_label(int label) const;
};

SmoothingVertex smooth(const LinkDiagram& d, VertexKey alpha);

/// Number of cycles of S_alpha without materializing them.
int cycle_count(const LinkDiagram& d, VertexKey alpha);

/// An edge xi of the cube: its tail vertex plus the star coordinate.
struct EdgeKey {
  VertexKey tail;
  std::size_t star = 0;

  VertexKey head() const { return {tail.bits | (1u << star)}; }
  friend bool operator==(EdgeKey, EdgeKey) = default;
};

/// Written like "0*1".
std::string to_string(EdgeKey e, std::size_t n);
EdgeKey parse_edge(std::string_view text, std::size_t n);

/// (-1)^xi = (-1)^(number of 1s before the star).
int edge_sign(EdgeKey e);

enum class EdgeKind { Merge, Split };

/// d_xi in cycle-label terms. Merge: tail cycles a, b fuse into head cycle
/// min(a, b). Split: tail cycle min(a, b) divides into head cycles a and b.
/// Here a < b always.
struct CubeEdgeMap {
  EdgeKey key;
  EdgeKind kind = EdgeKind::Merge;
  int label_a = 0;
  int label_b = 0;
  int sign = 1;
};

/// Throws std::logic_error if tail and head differ by anything other than
/// one merge or one split.
CubeEdgeMap edge_map(const LinkDiagram& d, EdgeKey xi);

enum class Mark : unsigned char { Minus = 0, Plus = 1 };

/// A marked smoothing: every cycle label carries v+ or v-.
using LabeledTensor = std::map<int, Mark>;

struct TensorTerm {
  int coeff = 1;
  LabeledTensor tensor;
  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

/// m on the factors labeled a and b, written on min(a, b):
/// ++ -> +, +- -> -, -+ -> -, -- -> 0. Other factors pass through.
std::vector<TensorTerm> apply_m(const LabeledTensor& x, int a, int b);

/// Delta on the factor labeled min(a, b), producing factors a and b:
/// + -> (+a -b) + (-a +b), - -> (-a -b).
std::vector<TensorTerm> apply_delta(const LabeledTensor& x, int a, int b);

/// The unsigned edge map d_xi.
std::vector<TensorTerm> apply_edge(const CubeEdgeMap& e, const LabeledTensor& x);

/// A basis element of V_alpha. The marking stores the cycle with index i
/// (label order) at bit (k - 1 - i), so ascending masks enumerate markings
/// lexicographically with v- < v+.
struct BasisVector {
  VertexKey vertex;
  std::uint32_t marking = 0;
  friend bool operator==(BasisVector, BasisVector) = default;
};

inline bool marking_plus(std::uint32_t marking, std::size_t k, std::size_t cycle) {
  return (marking >> (k - 1 - cycle)) & 1u;
}

/// #v+ - #v-, before any shift.
inline int intrinsic_degree(std::uint32_t marking, std::size_t k) {
  return 2 * std::popcount(marking) - static_cast<int>(k);
}

LabeledTensor to_tensor(const SmoothingVertex& v, std::uint32_t marking);
std::uint32_t to_marking(const SmoothingVertex& v, const LabeledTensor& x);

/// Bit-level form of an edge map used when assembling differentials.
struct EdgeTransfer {
  EdgeKind kind = EdgeKind::Merge;
  int sign = 1;
  std::size_t tail_k = 0, head_k = 0;
  /// Merge: tail bits (a, b) -> head bit c. Split: tail bit c -> head bits (a, b).
  int tail_a = 0, tail_b = 0, head_a = 0, head_b = 0;
  /// (tail bit, head bit) for cycles the edge leaves alone.
  std::vector<std::pair<int, int>> passthrough;

  /// Images of `marking` as (head marking, coefficient) pairs, signed by
  /// (-1)^xi. At most two terms.
  int apply(std::uint32_t marking, std::uint32_t* out_marking, int* out_coeff) const;
};

EdgeTransfer make_transfer(const LinkDiagram& d, EdgeKey xi, const SmoothingVertex& tail, const SmoothingVertex& head);

/// "c[1]*c[3]".
std::string render_cycles(const SmoothingVertex& v);
/// "c[1] -> c[1]*c[3]".
std::string render_edge(const LinkDiagram& d, EdgeKey xi);

/// One line per vertex (`alpha: {edges} {edges}`) then one per edge
/// (`xi: merge|split +1|-1`).
std::string dump_cube(const LinkDiagram& d);

struct FaceReport {
  std::size_t faces = 0;
  /// Faces whose four edge signs do not multiply to -1.
  std::size_t sign_failures = 0;
  /// Faces whose two unsigned composites differ on some basis vector.
  std::size_t commutativity_failures = 0;
  bool ok() const { return sign_failures == 0 && commutativity_failures == 0; }
};

/// Checks every square face of the cube.
FaceReport check_faces(const LinkDiagram& d);

}  // namespace kh
