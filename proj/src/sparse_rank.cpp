#include "khovanov/sparse_rank.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include <gmpxx.h>

namespace kh {

bool is_prime(long long n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (long long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Modulus Modulus::from_int(long long value) {
  if (value == 0) return Modulus{};
  if (value < 0 || value >= (1LL << 31) || !is_prime(value))
    throw std::invalid_argument("modulus must be 0 (rationals) or a prime below 2^31, got " + std::to_string(value));
  return Modulus{static_cast<std::uint32_t>(value)};
}

namespace {

struct Overflow {};

/// Integers with overflow trapping; the Q-rank path restarts with GMP when
/// this fires.
struct CheckedInt64Ops {
  using Element = std::int64_t;
  static constexpr bool kNormalizeContent = true;

  Element from_int(int v) const { return v; }
  bool is_unit(Element v) const { return v == 1 || v == -1; }

  /// Coefficients (a, b) with a*target + b*pivot vanishing in the pivot column.
  std::pair<Element, Element> combination(Element pivot, Element target) const {
    Element g = std::gcd(pivot, target);
    return {pivot / g, -(target / g)};
  }
  Element mul_add(Element a, Element x, Element b, Element y) const {
    Element ax, by, s;
    if (__builtin_mul_overflow(a, x, &ax) || __builtin_mul_overflow(b, y, &by) || __builtin_add_overflow(ax, by, &s))
      throw Overflow{};
    return s;
  }
  Element mul(Element a, Element x) const {
    Element r;
    if (__builtin_mul_overflow(a, x, &r)) throw Overflow{};
    return r;
  }
  Element gcd(Element a, Element b) const { return std::gcd(a, b); }
  Element div_exact(Element a, Element g) const { return a / g; }
  bool is_zero(Element v) const { return v == 0; }
};

struct BigIntOps {
  using Element = mpz_class;
  static constexpr bool kNormalizeContent = true;

  Element from_int(int v) const { return Element(v); }
  bool is_unit(const Element& v) const { return v == 1 || v == -1; }
  std::pair<Element, Element> combination(const Element& pivot, const Element& target) const {
    Element g;
    mpz_gcd(g.get_mpz_t(), pivot.get_mpz_t(), target.get_mpz_t());
    return {Element(pivot / g), Element(-(target / g))};
  }
  Element mul_add(const Element& a, const Element& x, const Element& b, const Element& y) const {
    return Element(a * x + b * y);
  }
  Element mul(const Element& a, const Element& x) const { return Element(a * x); }
  Element gcd(const Element& a, const Element& b) const {
    Element g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
  Element div_exact(const Element& a, const Element& g) const {
    Element r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
    return r;
  }
  bool is_zero(const Element& v) const { return v == 0; }
};

struct PrimeFieldOps {
  using Element = std::uint32_t;
  static constexpr bool kNormalizeContent = false;

  std::uint64_t p;

  Element from_int(int v) const {
    long long r = v % static_cast<long long>(p);
    return static_cast<Element>(r < 0 ? r + static_cast<long long>(p) : r);
  }
  bool is_unit(Element v) const { return v != 0; }
  Element inverse(Element a) const {
    // Fermat: a^(p-2).
    std::uint64_t result = 1, base = a, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<Element>(result);
  }
  std::pair<Element, Element> combination(Element pivot, Element target) const {
    std::uint64_t f = static_cast<std::uint64_t>(target) * inverse(pivot) % p;
    return {1, static_cast<Element>((p - f) % p)};
  }
  Element mul_add(Element a, Element x, Element b, Element y) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * x % p + static_cast<std::uint64_t>(b) * y % p) % p);
  }
  Element mul(Element a, Element x) const { return static_cast<Element>(static_cast<std::uint64_t>(a) * x % p); }
  Element gcd(Element, Element) const { return 1; }
  Element div_exact(Element a, Element) const { return a; }
  bool is_zero(Element v) const { return v == 0; }
};

template <class Ops>
class Eliminator {
 public:
  using Element = typename Ops::Element;
  struct Entry {
    int col;
    Element val;
  };
  using Row = std::vector<Entry>;

  Eliminator(const SparseMatrix& m, Ops ops)
      : ops_(std::move(ops)), rows_(static_cast<std::size_t>(m.rows())), col_rows_(static_cast<std::size_t>(m.cols())),
        col_count_(static_cast<std::size_t>(m.cols()), 0), active_(static_cast<std::size_t>(m.rows()), 1) {
    for (int r = 0; r < m.outerSize(); ++r) {
      Row& row = rows_[static_cast<std::size_t>(r)];
      for (SparseMatrix::InnerIterator it(m, r); it; ++it) {
        Element v = ops_.from_int(it.value());
        if (ops_.is_zero(v)) continue;
        row.push_back({static_cast<int>(it.col()), std::move(v)});
      }
      std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
      for (const auto& e : row) {
        col_rows_[static_cast<std::size_t>(e.col)].push_back(r);
        ++col_count_[static_cast<std::size_t>(e.col)];
      }
      if (row.empty()) active_[static_cast<std::size_t>(r)] = 0;
    }
    stamp_.assign(rows_.size(), 0);
  }

  Eigen::Index run() {
    Eigen::Index rank = 0;
    std::vector<int> live;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      if (active_[r]) live.push_back(static_cast<int>(r));

    while (true) {
      // Shortest live row; live is kept in ascending order so ties go low.
      int prow = -1;
      std::size_t best_len = 0;
      std::size_t keep = 0;
      for (int r : live) {
        const auto& row = rows_[static_cast<std::size_t>(r)];
        if (!active_[static_cast<std::size_t>(r)] || row.empty()) {
          active_[static_cast<std::size_t>(r)] = 0;
          continue;
        }
        live[keep++] = r;
        if (prow < 0 || row.size() < best_len) {
          prow = r;
          best_len = row.size();
        }
      }
      live.resize(keep);
      if (prow < 0) break;

      const Row& prow_entries = rows_[static_cast<std::size_t>(prow)];
      std::size_t pick = 0;
      auto key = [&](const Entry& e) {
        return std::tuple(ops_.is_unit(e.val) ? 0 : 1, col_count_[static_cast<std::size_t>(e.col)], e.col);
      };
      for (std::size_t i = 1; i < prow_entries.size(); ++i)
        if (key(prow_entries[i]) < key(prow_entries[pick])) pick = i;
      const int pcol = prow_entries[pick].col;
      const Element pval = prow_entries[pick].val;

      active_[static_cast<std::size_t>(prow)] = 0;
      for (const auto& e : prow_entries) --col_count_[static_cast<std::size_t>(e.col)];
      ++rank;

      ++epoch_;
      auto& candidates = col_rows_[static_cast<std::size_t>(pcol)];
      std::vector<int> targets;
      targets.swap(candidates);
      for (int r : targets) {
        auto ur = static_cast<std::size_t>(r);
        if (!active_[ur] || stamp_[ur] == epoch_) continue;
        stamp_[ur] = epoch_;
        const Row& row = rows_[ur];
        auto it = std::lower_bound(row.begin(), row.end(), pcol, [](const Entry& e, int c) { return e.col < c; });
        if (it == row.end() || it->col != pcol) continue;
        eliminate(r, it->val, prow, pval);
      }
      if (rank == static_cast<Eigen::Index>(col_rows_.size())) break;
    }
    return rank;
  }

 private:
  void eliminate(int target, Element tval, int pivot, const Element& pval) {
    auto [a, b] = ops_.combination(pval, tval);
    const Row& trow = rows_[static_cast<std::size_t>(target)];
    const Row& prow = rows_[static_cast<std::size_t>(pivot)];
    scratch_.clear();
    scratch_.reserve(trow.size() + prow.size());
    std::size_t i = 0, j = 0;
    while (i < trow.size() || j < prow.size()) {
      if (j == prow.size() || (i < trow.size() && trow[i].col < prow[j].col)) {
        scratch_.push_back({trow[i].col, ops_.mul(a, trow[i].val)});
        ++i;
      } else if (i == trow.size() || prow[j].col < trow[i].col) {
        const int c = prow[j].col;
        scratch_.push_back({c, ops_.mul(b, prow[j].val)});
        ++col_count_[static_cast<std::size_t>(c)];
        col_rows_[static_cast<std::size_t>(c)].push_back(target);
        ++j;
      } else {
        Element v = ops_.mul_add(a, trow[i].val, b, prow[j].val);
        if (ops_.is_zero(v)) {
          --col_count_[static_cast<std::size_t>(trow[i].col)];
        } else {
          scratch_.push_back({trow[i].col, std::move(v)});
        }
        ++i;
        ++j;
      }
    }
    if constexpr (Ops::kNormalizeContent) {
      if (!scratch_.empty()) {
        Element g = scratch_.front().val;
        for (const auto& e : scratch_) {
          g = ops_.gcd(g, e.val);
          if (ops_.is_unit(g)) break;
        }
        if (g < 0) g = -g;
        if (!ops_.is_unit(g))
          for (auto& e : scratch_) e.val = ops_.div_exact(e.val, g);
      }
    }
    rows_[static_cast<std::size_t>(target)].swap(scratch_);
  }

  Ops ops_;
  std::vector<Row> rows_;
  std::vector<std::vector<int>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::vector<char> active_;
  std::vector<unsigned> stamp_;
  unsigned epoch_ = 0;
  Row scratch_;
};

}  // namespace

RankNullity rank_kernel(const SparseMatrix& m, Modulus modulus) {
  Eigen::Index rank = 0;
  if (m.nonZeros() > 0) {
    if (modulus.is_rational()) {
      try {
        rank = Eliminator<CheckedInt64Ops>(m, {}).run();
      } catch (const Overflow&) {
        rank = Eliminator<BigIntOps>(m, {}).run();
      }
    } else {
      rank = Eliminator<PrimeFieldOps>(m, PrimeFieldOps{modulus.value()}).run();
    }
  }
  return {rank, m.cols() - rank};
}

}  // namespace kh
