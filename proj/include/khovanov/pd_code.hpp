#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace kh {

/// X[i,j,k,l]: the four edge labels around a crossing, counterclockwise
/// starting from the incoming under-strand. The under-strand runs i -> k;
/// the over-strand joins j and l.
struct Crossing {
  std::array<int, 4> edges{};

  int operator[](std::size_t slot) const { return edges[slot]; }
  friend bool operator==(const Crossing&, const Crossing&) = default;
};

/// Syntax errors carry the byte offset and line/column of the failure.
class PdSyntaxError : public std::runtime_error {
 public:
  PdSyntaxError(const std::string& what, std::size_t offset, int line, int column);
  std::size_t offset() const { return offset_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  std::size_t offset_;
  int line_, column_;
};

/// Structurally invalid diagrams: label multiplicity, broken succession,
/// numbering that violates the per-component ascending convention.
class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class NumberingCheck {
  /// Labels must ascend along each component; overlapping label intervals
  /// between components are reported as warnings.
  Lenient,
  /// Additionally require each component to occupy its own contiguous
  /// interval of labels.
  Strict,
};

/// A validated, immutable planar-diagram link projection.
///
/// Crossing order is the input order and fixes the cube coordinates.
/// Orientation of each strand is read off the under-crossings (i -> k);
/// strands that only ever pass over are oriented so that labels ascend.
class LinkDiagram {
 public:
  static LinkDiagram from_crossings(std::vector<Crossing> crossings, NumberingCheck check = NumberingCheck::Lenient);

  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(std::size_t c) const { return crossings_.at(c); }
  std::size_t size() const { return crossings_.size(); }
  std::size_t edge_count() const { return labels_.size(); }

  /// Sorted distinct edge labels.
  const std::vector<int>& labels() const { return labels_; }
  /// Dense index of a label in labels(); throws for unknown labels.
  int label_index(int label) const;

  /// Each component as its cyclic edge sequence, starting from its minimal
  /// label. Components are ordered by that minimal label.
  const std::vector<std::vector<int>>& components() const { return components_; }
  /// Successor of an edge along its component.
  int successor(int label) const;

  /// +1 when the over-strand runs l -> j, -1 when it runs j -> l.
  int sign(std::size_t c) const { return signs_.at(c); }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return n_minus_; }
  int writhe() const { return n_plus_ - n_minus_; }

  /// Non-fatal numbering remarks collected in lenient mode.
  const std::vector<std::string>& warnings() const { return warnings_; }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) { return a.crossings_ == b.crossings_; }

 private:
  std::vector<Crossing> crossings_;
  std::vector<int> labels_;
  std::vector<int> successor_;  // by dense label index
  std::vector<int> signs_;
  std::vector<std::vector<int>> components_;
  std::vector<std::string> warnings_;
  int n_plus_ = 0, n_minus_ = 0;
};

/// Accepts `Link[X[..], X[..], ...]` or whitespace-separated `X[..]` terms;
/// `#` starts a line comment.
LinkDiagram parse_pd(std::string_view text, NumberingCheck check = NumberingCheck::Lenient);

/// Whitespace-separated form, e.g. `X[1,5,2,4] X[5,3,6,2] X[3,1,4,6]`.
std::string render_pd(const LinkDiagram& d);

int crossing_sign(const LinkDiagram& d, std::size_t c);

/// The mirror image: each tuple rotated one step so that the old
/// over-strand's incoming edge becomes the incoming under-strand.
LinkDiagram mirror(const LinkDiagram& d);

inline const std::vector<std::vector<int>>& components(const LinkDiagram& d) { return d.components(); }

}  // namespace kh
