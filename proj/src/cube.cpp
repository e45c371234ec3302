#include "khovanov/cube.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace kh {

namespace {

std::vector<std::array<int, 4>> dense_crossings(const LinkDiagram& d) {
  std::vector<std::array<int, 4>> out(d.size());
  for (std::size_t c = 0; c < d.size(); ++c)
    for (std::size_t s = 0; s < 4; ++s) out[c][s] = d.label_index(d.crossing(c)[s]);
  return out;
}

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }
  std::vector<int> parent;
};

void join_smoothing(UnionFind& uf, const std::array<int, 4>& x, bool one) {
  if (one) {
    uf.unite(x[0], x[3]);
    uf.unite(x[1], x[2]);
  } else {
    uf.unite(x[0], x[1]);
    uf.unite(x[2], x[3]);
  }
}

void check_dimension(const LinkDiagram& d) {
  if (d.size() > kMaxCubeDimension)
    throw std::invalid_argument("diagram has " + std::to_string(d.size()) + " crossings; the cube supports at most " +
                                std::to_string(kMaxCubeDimension));
}

}  // namespace

std::string to_string(VertexKey v, std::size_t n) {
  std::string s(n, '0');
  for (std::size_t c = 0; c < n; ++c)
    if (v.test(c)) s[c] = '1';
  return s;
}

VertexKey parse_vertex(std::string_view text, std::size_t n) {
  if (text.size() != n) throw std::invalid_argument("vertex '" + std::string(text) + "' must have " + std::to_string(n) + " digits");
  VertexKey v;
  for (std::size_t c = 0; c < n; ++c) {
    if (text[c] == '1')
      v.bits |= 1u << c;
    else if (text[c] != '0')
      throw std::invalid_argument("vertex '" + std::string(text) + "' may only contain 0 and 1");
  }
  return v;
}

bool vertex_less(VertexKey a, VertexKey b, std::size_t n) {
  for (std::size_t c = 0; c < n; ++c)
    if (a.test(c) != b.test(c)) return b.test(c);
  return false;
}

std::vector<int> SmoothingVertex::labels() const {
  std::vector<int> out;
  out.reserve(cycles.size());
  for (const auto& c : cycles) out.push_back(c.front());
  return out;
}

int SmoothingVertex::cycle_with_label(int label) const {
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (cycles[i].front() == label) return static_cast<int>(i);
  throw std::out_of_range("no cycle labeled " + std::to_string(label));
}

SmoothingVertex smooth(const LinkDiagram& d, VertexKey alpha) {
  check_dimension(d);
  const auto xs = dense_crossings(d);
  UnionFind uf(d.edge_count());
  for (std::size_t c = 0; c < xs.size(); ++c) join_smoothing(uf, xs[c], alpha.test(c));

  SmoothingVertex v;
  v.key = alpha;
  v.cycle_of_edge.assign(d.edge_count(), -1);
  // Labels are sorted, so visiting edges in order meets each cycle first at
  // its minimal edge.
  std::vector<int> root_to_cycle(d.edge_count(), -1);
  for (std::size_t e = 0; e < d.edge_count(); ++e) {
    const int root = uf.find(static_cast<int>(e));
    int& cyc = root_to_cycle[static_cast<std::size_t>(root)];
    if (cyc < 0) {
      cyc = static_cast<int>(v.cycles.size());
      v.cycles.emplace_back();
    }
    v.cycles[static_cast<std::size_t>(cyc)].push_back(d.labels()[e]);
    v.cycle_of_edge[e] = cyc;
  }
  return v;
}

int cycle_count(const LinkDiagram& d, VertexKey alpha) {
  check_dimension(d);
  const auto xs = dense_crossings(d);
  UnionFind uf(d.edge_count());
  int k = static_cast<int>(d.edge_count());
  for (std::size_t c = 0; c < xs.size(); ++c) {
    const bool one = alpha.test(c);
    const auto& x = xs[c];
    k -= uf.unite(x[0], one ? x[3] : x[1]) ? 1 : 0;
    k -= uf.unite(x[2], one ? x[1] : x[3]) ? 1 : 0;
  }
  return k;
}

std::string to_string(EdgeKey e, std::size_t n) {
  std::string s = to_string(e.tail, n);
  s[e.star] = '*';
  return s;
}

EdgeKey parse_edge(std::string_view text, std::size_t n) {
  if (std::count(text.begin(), text.end(), '*') != 1)
    throw std::invalid_argument("edge '" + std::string(text) + "' must contain exactly one '*'");
  std::string s(text);
  const auto star = s.find('*');
  s[star] = '0';
  return {parse_vertex(s, n), star};
}

int edge_sign(EdgeKey e) {
  const std::uint32_t below = e.tail.bits & ((1u << e.star) - 1u);
  return (std::popcount(below) & 1) ? -1 : 1;
}

namespace {

struct EdgeCycles {
  EdgeKind kind;
  int tail_a, tail_b;  // tail cycle indices (merge: two, split: tail_a == tail_b)
  int head_a, head_b;  // head cycle indices (merge: head_a == head_b)
};

EdgeCycles participating(const LinkDiagram& d, EdgeKey xi, const SmoothingVertex& tail, const SmoothingVertex& head) {
  const auto& x = d.crossing(xi.star);
  const auto i = static_cast<std::size_t>(d.label_index(x[0]));
  const auto k = static_cast<std::size_t>(d.label_index(x[2]));
  // Tail arcs at the star crossing are {i,j} and {k,l}; head arcs {i,l} and {j,k}.
  EdgeCycles ec{};
  ec.tail_a = tail.cycle_of_edge[i];
  ec.tail_b = tail.cycle_of_edge[k];
  ec.head_a = head.cycle_of_edge[i];
  ec.head_b = head.cycle_of_edge[k];
  const bool merge = ec.tail_a != ec.tail_b;
  ec.kind = merge ? EdgeKind::Merge : EdgeKind::Split;
  const bool ok = merge ? (ec.head_a == ec.head_b && head.k() + 1 == tail.k())
                        : (ec.head_a != ec.head_b && head.k() == tail.k() + 1);
  if (!ok)
    throw std::logic_error("cube edge " + to_string(xi, d.size()) + " is neither a single merge nor a single split");
  return ec;
}

}  // namespace

CubeEdgeMap edge_map(const LinkDiagram& d, EdgeKey xi) {
  if (xi.tail.test(xi.star)) throw std::invalid_argument("edge tail must have 0 at the star position");
  const auto tail = smooth(d, xi.tail);
  const auto head = smooth(d, xi.head());
  const auto ec = participating(d, xi, tail, head);
  CubeEdgeMap e;
  e.key = xi;
  e.kind = ec.kind;
  e.sign = edge_sign(xi);
  int a, b;
  if (ec.kind == EdgeKind::Merge) {
    a = tail.label(static_cast<std::size_t>(ec.tail_a));
    b = tail.label(static_cast<std::size_t>(ec.tail_b));
  } else {
    a = head.label(static_cast<std::size_t>(ec.head_a));
    b = head.label(static_cast<std::size_t>(ec.head_b));
  }
  e.label_a = std::min(a, b);
  e.label_b = std::max(a, b);
  return e;
}

std::vector<TensorTerm> apply_m(const LabeledTensor& x, int a, int b) {
  const int lo = std::min(a, b), hi = std::max(a, b);
  const Mark ma = x.at(lo), mb = x.at(hi);
  if (ma == Mark::Minus && mb == Mark::Minus) return {};
  LabeledTensor out = x;
  out.erase(hi);
  out[lo] = (ma == Mark::Plus && mb == Mark::Plus) ? Mark::Plus : Mark::Minus;
  return {{1, std::move(out)}};
}

std::vector<TensorTerm> apply_delta(const LabeledTensor& x, int a, int b) {
  const int lo = std::min(a, b), hi = std::max(a, b);
  const Mark m = x.at(lo);
  LabeledTensor base = x;
  if (m == Mark::Minus) {
    base[lo] = Mark::Minus;
    base[hi] = Mark::Minus;
    return {{1, std::move(base)}};
  }
  LabeledTensor first = base, second = base;
  first[lo] = Mark::Plus;
  first[hi] = Mark::Minus;
  second[lo] = Mark::Minus;
  second[hi] = Mark::Plus;
  return {{1, std::move(first)}, {1, std::move(second)}};
}

std::vector<TensorTerm> apply_edge(const CubeEdgeMap& e, const LabeledTensor& x) {
  return e.kind == EdgeKind::Merge ? apply_m(x, e.label_a, e.label_b) : apply_delta(x, e.label_a, e.label_b);
}

LabeledTensor to_tensor(const SmoothingVertex& v, std::uint32_t marking) {
  LabeledTensor t;
  for (std::size_t i = 0; i < v.k(); ++i) t[v.label(i)] = marking_plus(marking, v.k(), i) ? Mark::Plus : Mark::Minus;
  return t;
}

std::uint32_t to_marking(const SmoothingVertex& v, const LabeledTensor& x) {
  std::uint32_t m = 0;
  for (std::size_t i = 0; i < v.k(); ++i)
    if (x.at(v.label(i)) == Mark::Plus) m |= 1u << (v.k() - 1 - i);
  return m;
}

int EdgeTransfer::apply(std::uint32_t marking, std::uint32_t* out_marking, int* out_coeff) const {
  std::uint32_t rest = 0;
  for (const auto& [from, to] : passthrough) rest |= ((marking >> from) & 1u) << to;
  if (kind == EdgeKind::Merge) {
    const bool pa = (marking >> tail_a) & 1u, pb = (marking >> tail_b) & 1u;
    if (!pa && !pb) return 0;
    out_marking[0] = rest | ((pa && pb) ? (1u << head_a) : 0u);
    out_coeff[0] = sign;
    return 1;
  }
  if ((marking >> tail_a) & 1u) {
    out_marking[0] = rest | (1u << head_a);
    out_marking[1] = rest | (1u << head_b);
    out_coeff[0] = out_coeff[1] = sign;
    return 2;
  }
  out_marking[0] = rest;
  out_coeff[0] = sign;
  return 1;
}

EdgeTransfer make_transfer(const LinkDiagram& d, EdgeKey xi, const SmoothingVertex& tail, const SmoothingVertex& head) {
  const auto ec = participating(d, xi, tail, head);
  const int tk = static_cast<int>(tail.k()), hk = static_cast<int>(head.k());
  EdgeTransfer t;
  t.kind = ec.kind;
  t.sign = edge_sign(xi);
  t.tail_k = tail.k();
  t.head_k = head.k();
  t.tail_a = tk - 1 - ec.tail_a;
  t.tail_b = tk - 1 - ec.tail_b;
  t.head_a = hk - 1 - ec.head_a;
  t.head_b = hk - 1 - ec.head_b;
  for (std::size_t c = 0; c < tail.k(); ++c) {
    const int ci = static_cast<int>(c);
    if (ci == ec.tail_a || ci == ec.tail_b) continue;
    const int edge = tail.cycles[c].front();
    const int hc = head.cycle_of_edge[static_cast<std::size_t>(d.label_index(edge))];
    t.passthrough.emplace_back(tk - 1 - ci, hk - 1 - hc);
  }
  return t;
}

std::string render_cycles(const SmoothingVertex& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.k(); ++i) os << (i ? "*" : "") << "c[" << v.label(i) << ']';
  return os.str();
}

std::string render_edge(const LinkDiagram& d, EdgeKey xi) {
  edge_map(d, xi);  // validates the edge
  const auto tail = smooth(d, xi.tail);
  const auto head = smooth(d, xi.head());
  return render_cycles(tail) + " -> " + render_cycles(head);
}

std::string dump_cube(const LinkDiagram& d) {
  const std::size_t n = d.size();
  check_dimension(d);
  std::vector<VertexKey> vertices;
  for (std::uint32_t b = 0; b < (1u << n); ++b) vertices.push_back({b});
  std::stable_sort(vertices.begin(), vertices.end(), [n](VertexKey a, VertexKey b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return vertex_less(a, b, n);
  });
  std::ostringstream os;
  for (const auto v : vertices) {
    const auto s = smooth(d, v);
    os << to_string(v, n) << ':';
    for (const auto& cyc : s.cycles) {
      os << " {";
      for (std::size_t i = 0; i < cyc.size(); ++i) os << (i ? "," : "") << cyc[i];
      os << '}';
    }
    os << '\n';
  }
  for (const auto v : vertices)
    for (std::size_t c = 0; c < n; ++c) {
      if (v.test(c)) continue;
      const auto e = edge_map(d, {v, c});
      os << to_string(e.key, n) << ": " << (e.kind == EdgeKind::Merge ? "merge" : "split") << ' '
         << (e.sign > 0 ? "+1" : "-1") << '\n';
    }
  return os.str();
}

FaceReport check_faces(const LinkDiagram& d) {
  const std::size_t n = d.size();
  check_dimension(d);
  std::vector<SmoothingVertex> vs;
  vs.reserve(std::size_t{1} << n);
  for (std::uint32_t b = 0; b < (1u << n); ++b) vs.push_back(smooth(d, {b}));

  FaceReport report;
  std::map<std::uint32_t, int> lhs, rhs;
  auto compose = [&](VertexKey alpha, std::size_t first, std::size_t second, std::uint32_t marking,
                     std::map<std::uint32_t, int>& acc) {
    const VertexKey mid{alpha.bits | (1u << first)};
    const VertexKey end{mid.bits | (1u << second)};
    const auto t1 = make_transfer(d, {alpha, first}, vs[alpha.bits], vs[mid.bits]);
    const auto t2 = make_transfer(d, {mid, second}, vs[mid.bits], vs[end.bits]);
    std::uint32_t m1[2], m2[2];
    int c1[2], c2[2];
    const int n1 = t1.apply(marking, m1, c1);
    for (int a = 0; a < n1; ++a) {
      const int n2 = t2.apply(m1[a], m2, c2);
      // Undo the edge signs: compare the unsigned maps.
      for (int b = 0; b < n2; ++b) acc[m2[b]] += (c1[a] * t1.sign) * (c2[b] * t2.sign);
    }
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  };

  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    const VertexKey alpha{b};
    for (std::size_t i = 0; i < n; ++i) {
      if (alpha.test(i)) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        if (alpha.test(j)) continue;
        ++report.faces;
        const VertexKey ai{b | (1u << i)}, aj{b | (1u << j)};
        const int product = edge_sign({alpha, i}) * edge_sign({ai, j}) * edge_sign({alpha, j}) * edge_sign({aj, i});
        if (product != -1) ++report.sign_failures;
        const std::size_t k = vs[b].k();
        for (std::uint32_t m = 0; m < (1u << k); ++m) {
          lhs.clear();
          rhs.clear();
          compose(alpha, i, j, m, lhs);
          compose(alpha, j, i, m, rhs);
          if (lhs != rhs) {
            ++report.commutativity_failures;
            break;
          }
        }
      }
    }
  }
  return report;
}

}  // namespace kh
