#include "khovanov/homology.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include <json.hpp>

namespace kh {

namespace {

// Position of each k-bit mask among the masks of equal popcount, in
// ascending order. Computed once per k.
class MarkingRanks {
 public:
  const std::vector<std::uint32_t>& table(std::size_t k) {
    auto& t = cache_[k];
    if (t.empty()) {
      t.resize(std::size_t{1} << k);
      std::vector<std::uint32_t> next(k + 1, 0);
      for (std::uint32_t m = 0; m < (1u << k); ++m) t[m] = next[static_cast<std::size_t>(std::popcount(m))]++;
    }
    return t;
  }

 private:
  // A map keeps earlier tables in place while new ones are added.
  std::map<std::size_t, std::vector<std::uint32_t>> cache_;
};

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// All vertices of one height, in lexicographic order of their written form.
std::vector<VertexKey> vertices_of_height(std::size_t n, int h) {
  std::vector<VertexKey> out;
  // Walk combinations so that crossing 0 choosing '0' comes first.
  auto rec = [&](auto&& self, std::size_t c, int left, std::uint32_t bits) -> void {
    if (static_cast<int>(n - c) < left) return;
    if (c == n) {
      out.push_back({bits});
      return;
    }
    self(self, c + 1, left, bits);
    if (left > 0) self(self, c + 1, left - 1, bits | (1u << c));
  };
  rec(rec, 0, h, 0);
  return out;
}

struct Layer {
  int height = 0;  // unshifted
  std::vector<SmoothingVertex> vertices;
  std::unordered_map<std::uint32_t, std::size_t> index;
  // offsets[v][p]: first position of vertex v's popcount-p markings within
  // the block of the corresponding q-degree.
  std::vector<std::vector<std::int64_t>> offsets;
  std::map<int, std::int64_t> dims;  // shifted m -> dim
};

class Builder {
 public:
  explicit Builder(const LinkDiagram& d) : d_(d), n_(d.size()) {
    if (n_ > kMaxCubeDimension)
      throw std::invalid_argument("diagram has " + std::to_string(n_) + " crossings; the cube supports at most " +
                                  std::to_string(kMaxCubeDimension));
    shift_ = d.n_plus() - 2 * d.n_minus();
  }

  int degree(int h, std::size_t k, int p) const { return 2 * p - static_cast<int>(k) + h + shift_; }

  Layer layer(int h) const {
    Layer L;
    L.height = h;
    if (h < 0 || h > static_cast<int>(n_)) return L;
    for (const auto v : vertices_of_height(n_, h)) {
      L.index.emplace(v.bits, L.vertices.size());
      L.vertices.push_back(smooth(d_, v));
    }
    L.offsets.resize(L.vertices.size());
    for (std::size_t i = 0; i < L.vertices.size(); ++i) {
      const auto k = L.vertices[i].k();
      auto& off = L.offsets[i];
      off.resize(k + 1);
      for (std::size_t p = 0; p <= k; ++p) {
        auto& running = L.dims[degree(h, k, static_cast<int>(p))];
        off[p] = running;
        running += binomial(static_cast<int>(k), static_cast<int>(p));
      }
    }
    return L;
  }

  // Differential from `tail` (height h) to `head` (height h+1), one matrix
  // per q-degree. Entries whose image degree disagrees are counted in
  // `violations` and dropped.
  std::map<int, SparseMatrix> maps(const Layer& tail, const Layer& head, std::size_t* violations = nullptr) {
    std::map<int, std::vector<Eigen::Triplet<int>>> triplets;
    std::uint32_t out_m[2];
    int out_c[2];
    for (std::size_t vi = 0; vi < tail.vertices.size(); ++vi) {
      const auto& sv = tail.vertices[vi];
      const auto& tail_rank = ranks_.table(sv.k());
      for (std::size_t c = 0; c < n_; ++c) {
        if (sv.key.test(c)) continue;
        const EdgeKey xi{sv.key, c};
        const std::size_t hi = head.index.at(xi.head().bits);
        const auto& hv = head.vertices[hi];
        const auto& head_rank = ranks_.table(hv.k());
        const auto t = make_transfer(d_, xi, sv, hv);
        for (std::uint32_t mk = 0; mk < (1u << sv.k()); ++mk) {
          const int p = std::popcount(mk);
          const int m = degree(tail.height, sv.k(), p);
          const auto col = tail.offsets[vi][static_cast<std::size_t>(p)] + tail_rank[mk];
          const int terms = t.apply(mk, out_m, out_c);
          for (int a = 0; a < terms; ++a) {
            const int hp = std::popcount(out_m[a]);
            if (degree(head.height, hv.k(), hp) != m) {
              if (violations) ++*violations;
              continue;
            }
            const auto row = head.offsets[hi][static_cast<std::size_t>(hp)] + head_rank[out_m[a]];
            triplets[m].emplace_back(static_cast<int>(row), static_cast<int>(col), out_c[a]);
          }
        }
      }
    }
    std::map<int, SparseMatrix> out;
    for (const auto& [m, cols] : tail.dims) {
      auto it = head.dims.find(m);
      const auto rows = it == head.dims.end() ? 0 : it->second;
      SparseMatrix mat(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
      auto tr = triplets.find(m);
      if (tr != triplets.end()) mat.setFromTriplets(tr->second.begin(), tr->second.end());
      mat.makeCompressed();
      out.emplace(m, std::move(mat));
    }
    return out;
  }

  int shift() const { return shift_; }

 private:
  const LinkDiagram& d_;
  std::size_t n_;
  int shift_ = 0;
  MarkingRanks ranks_;
};

// Ranks of a set of blocks, spread over worker threads.
std::map<int, Eigen::Index> block_ranks(const std::map<int, SparseMatrix>& maps, Modulus modulus, unsigned threads) {
  std::vector<std::pair<int, const SparseMatrix*>> jobs;
  for (const auto& [m, mat] : maps)
    if (mat.nonZeros() > 0) jobs.emplace_back(m, &mat);
  // Largest first, for better balance.
  std::sort(jobs.begin(), jobs.end(),
            [](const auto& a, const auto& b) { return a.second->nonZeros() > b.second->nonZeros(); });
  std::vector<Eigen::Index> result(jobs.size(), 0);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(jobs.size(), 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < jobs.size();) {
      try {
        result[i] = rank_kernel(*jobs[i].second, modulus).rank;
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
  std::map<int, Eigen::Index> out;
  for (std::size_t i = 0; i < jobs.size(); ++i) out[jobs[i].first] = result[i];
  return out;
}

Eigen::Index lookup(const std::map<int, Eigen::Index>& ranks, int m) {
  auto it = ranks.find(m);
  return it == ranks.end() ? 0 : it->second;
}

}  // namespace

std::size_t ChainComplex::dim(Bigrading g) const {
  auto it = blocks_.find(g);
  return it == blocks_.end() ? 0 : it->second.dimension();
}

SparseMatrix ChainComplex::differential(Bigrading g) const {
  auto it = differentials_.find(g);
  if (it != differentials_.end()) return it->second;
  return SparseMatrix(static_cast<Eigen::Index>(dim({g.r + 1, g.m})), static_cast<Eigen::Index>(dim(g)));
}

int ChainComplex::q_degree(const BasisVector& b) const {
  const auto k = static_cast<std::size_t>(k_by_vertex_.at(b.vertex.bits));
  return intrinsic_degree(b.marking, k) + b.vertex.height() + degree_shift_;
}

ChainComplex build_complex(const LinkDiagram& d) {
  Builder builder(d);
  ChainComplex c;
  c.height_shift_ = -d.n_minus();
  c.degree_shift_ = builder.shift();
  c.k_by_vertex_.assign(std::size_t{1} << d.size(), 0);

  std::vector<Layer> layers;
  for (int h = 0; h <= static_cast<int>(d.size()); ++h) layers.push_back(builder.layer(h));

  for (const auto& L : layers) {
    const int r = L.height + c.height_shift_;
    for (const auto& [m, dim] : L.dims) c.blocks_[{r, m}].grading = {r, m};
    for (const auto& sv : L.vertices) {
      c.k_by_vertex_[sv.key.bits] = static_cast<int>(sv.k());
      const auto k = sv.k();
      for (std::uint32_t mk = 0; mk < (1u << k); ++mk) {
        const int m = builder.degree(L.height, k, std::popcount(mk));
        c.blocks_[{r, m}].basis.push_back({sv.key, mk});
      }
    }
  }
  // Within a block, basis vectors must follow vertex order then ascending
  // marking; the loop above already produces exactly that order.
  for (std::size_t h = 0; h + 1 < layers.size(); ++h) {
    const int r = layers[h].height + c.height_shift_;
    for (auto& [m, mat] : builder.maps(layers[h], layers[h + 1], &c.dropped_images_)) c.differentials_.emplace(Bigrading{r, m}, std::move(mat));
  }
  return c;
}

std::int64_t KhResult::betti_at(int r, int m) const {
  auto it = betti.find({r, m});
  return it == betti.end() ? 0 : it->second;
}

std::int64_t KhResult::chain_dim_at(int r, int m) const {
  auto it = chain_dims.find({r, m});
  return it == chain_dims.end() ? 0 : it->second;
}

KhResult compute_kh(const LinkDiagram& d, Modulus modulus, const ComputeOptions& opts) {
  Builder builder(d);
  KhResult out;
  out.modulus = modulus;
  const int n = static_cast<int>(d.size());
  const int shift_r = -d.n_minus();

  Layer current = builder.layer(0);
  std::map<int, Eigen::Index> incoming;  // ranks of d^{h-1}
  for (int h = 0; h <= n; ++h) {
    Layer next = builder.layer(h + 1);
    std::map<int, Eigen::Index> outgoing;
    if (h < n) outgoing = block_ranks(builder.maps(current, next), modulus, opts.threads);
    const int r = h + shift_r;
    for (const auto& [m, dim] : current.dims) {
      out.chain_dims[{r, m}] = dim;
      const auto b = dim - lookup(outgoing, m) - lookup(incoming, m);
      if (b < 0) throw std::logic_error("negative Betti number; the differential is inconsistent");
      if (b > 0) out.betti[{r, m}] = b;
    }
    incoming = std::move(outgoing);
    current = std::move(next);
  }
  out.kh = poincare_polynomial(out.betti);
  return out;
}

GradedDimension qbetti(const LinkDiagram& d, int r, Modulus modulus, const ComputeOptions& opts) {
  Builder builder(d);
  GradedDimension g;
  const int h = r + d.n_minus();
  if (h < 0 || h > static_cast<int>(d.size())) return g;
  const Layer prev = builder.layer(h - 1);
  const Layer cur = builder.layer(h);
  const Layer next = builder.layer(h + 1);
  std::map<int, Eigen::Index> in, out;
  if (h > 0) in = block_ranks(builder.maps(prev, cur), modulus, opts.threads);
  if (h < static_cast<int>(d.size())) out = block_ranks(builder.maps(cur, next), modulus, opts.threads);
  for (const auto& [m, dim] : cur.dims) {
    const auto b = dim - lookup(in, m) - lookup(out, m);
    if (b > 0) g.add(m, b);
  }
  return g;
}

BigradedTable chain_dimensions(const LinkDiagram& d) {
  const std::size_t n = d.size();
  if (n > kMaxCubeDimension)
    throw std::invalid_argument("diagram has " + std::to_string(n) + " crossings; the cube supports at most " +
                                std::to_string(kMaxCubeDimension));
  const int shift = d.n_plus() - 2 * d.n_minus();
  BigradedTable out;
  for (std::uint32_t b = 0; b < (1u << n); ++b) {
    const VertexKey v{b};
    const int k = cycle_count(d, v);
    const int r = v.height() - d.n_minus();
    for (int p = 0; p <= k; ++p) out[{r, 2 * p - k + v.height() + shift}] += binomial(k, p);
  }
  return out;
}

LaurentPoly2 euler_characteristic(const LinkDiagram& d) {
  LaurentPoly2 chi;
  for (const auto& [g, dim] : chain_dimensions(d)) chi.add_term(0, g.m, (g.r % 2 == 0) ? dim : -dim);
  return chi;
}

LaurentPoly2 poincare_polynomial(const BigradedTable& betti) {
  LaurentPoly2 p;
  for (const auto& [g, dim] : betti) p.add_term(g.r, g.m, dim);
  return p;
}

std::vector<Bigrading> d_squared_failures(const ChainComplex& c) {
  std::vector<Bigrading> out;
  for (const auto& [g, first] : c.differentials()) {
    auto it = c.differentials().find({g.r + 1, g.m});
    if (it == c.differentials().end()) continue;
    const SparseMatrix prod = (it->second * first).pruned();
    if (prod.nonZeros() > 0) out.push_back(g);
  }
  return out;
}

std::size_t degree_violations(const ChainComplex& c) {
  std::size_t bad = 0;
  for (const auto& [g, mat] : c.differentials()) {
    const auto& src = c.blocks().at(g).basis;
    const auto tgt_it = c.blocks().find({g.r + 1, g.m});
    for (Eigen::Index row = 0; row < mat.outerSize(); ++row)
      for (SparseMatrix::InnerIterator it(mat, row); it; ++it) {
        if (it.value() == 0) continue;
        if (c.q_degree(src[static_cast<std::size_t>(it.col())]) != g.m) ++bad;
        if (tgt_it == c.blocks().end() || c.q_degree(tgt_it->second.basis[static_cast<std::size_t>(row)]) != g.m) ++bad;
      }
  }
  // Edge images landing in another q-degree never reach a block matrix;
  // assembly counted them instead.
  return bad + c.dropped_images_;
}

std::string to_json(const KhResult& result) {
  nlohmann::ordered_json j;
  j["modulus"] = result.modulus.value();
  j["kh"] = to_string(result.kh);
  auto table = [](const BigradedTable& t) {
    auto arr = nlohmann::json::array();
    for (const auto& [g, dim] : t) arr.push_back({g.r, g.m, dim});
    return arr;
  };
  j["betti"] = table(result.betti);
  j["chain_dims"] = table(result.chain_dims);
  return j.dump();
}

KhResult kh_result_from_json(std::string_view text) {
  KhResult out;
  try {
    const auto j = nlohmann::json::parse(text);
    out.modulus = Modulus::from_int(j.at("modulus").get<long long>());
    auto table = [](const nlohmann::json& arr) {
      BigradedTable t;
      for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 3) throw std::invalid_argument("table rows must be [r, m, dim]");
        t[{row[0].get<int>(), row[1].get<int>()}] = row[2].get<std::int64_t>();
      }
      return t;
    };
    out.betti = table(j.at("betti"));
    out.chain_dims = table(j.at("chain_dims"));
    out.kh = parse_poly(j.at("kh").get<std::string>());
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed result JSON: ") + e.what());
  }
  if (out.kh != poincare_polynomial(out.betti))
    throw std::invalid_argument("result JSON: kh does not match the betti table");
  return out;
}

std::string render_grid(const KhResult& result) {
  if (result.chain_dims.empty()) return "";
  int rmin = result.chain_dims.begin()->first.r, rmax = rmin;
  int mmin = result.chain_dims.begin()->first.m, mmax = mmin;
  for (const auto& [g, dim] : result.chain_dims) {
    rmin = std::min(rmin, g.r);
    rmax = std::max(rmax, g.r);
    mmin = std::min(mmin, g.m);
    mmax = std::max(mmax, g.m);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{"m\\r"};
  for (int r = rmin; r <= rmax; ++r) header.push_back(std::to_string(r));
  cells.push_back(header);
  for (int m = mmax; m >= mmin; m -= 2) {
    std::vector<std::string> row{std::to_string(m)};
    for (int r = rmin; r <= rmax; ++r) {
      const auto c = result.chain_dim_at(r, m);
      row.push_back(c > 0 ? std::to_string(result.betti_at(r, m)) + "/" + std::to_string(c) : "");
    }
    cells.push_back(row);
  }
  std::vector<std::size_t> width(cells.front().size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::ostringstream os;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::ostringstream cell;
      cell << std::setw(static_cast<int>(width[i])) << row[i];
      line += (i ? "  " : "") + cell.str();
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

}  // namespace kh
