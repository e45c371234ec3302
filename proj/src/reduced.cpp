#include "khovanov/reduced.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace kh {

LaurentPoly2 reconstruct(int s, const LaurentPoly2& kh_prime) {
  const auto one_plus_tq4 = LaurentPoly2::constant(1) + LaurentPoly2::monomial(1, 1, 4);
  return (LaurentPoly2::constant(1) + LaurentPoly2::q(2) + one_plus_tq4 * kh_prime).shifted(0, s - 1);
}

std::optional<ReducedForm> extract_reduced(const LaurentPoly2& kh, std::optional<int> sigma, Modulus source) {
  if (kh.is_zero() || !kh.all_coefficients_nonnegative()) return std::nullopt;
  std::vector<std::pair<int, LaurentPoly2>> found;
  int lo = kh.min_q() + 1, hi = kh.max_q() + 1;
  if (lo % 2 != 0) ++lo;
  for (int s = lo; s <= hi; s += 2) {
    const auto rest = kh - (LaurentPoly2::constant(1) + LaurentPoly2::q(2)).shifted(0, s - 1);
    if (!rest.all_coefficients_nonnegative()) continue;
    const auto divisor = (LaurentPoly2::constant(1) + LaurentPoly2::monomial(1, 1, 4)).shifted(0, s - 1);
    auto quotient = divide(rest, divisor);
    if (!quotient || !quotient->all_coefficients_nonnegative()) continue;
    found.emplace_back(s, std::move(*quotient));
  }
  if (found.empty()) return std::nullopt;

  ReducedForm rf;
  rf.source_modulus = source;
  for (const auto& [s, p] : found) rf.candidates.push_back(s);
  rf.ambiguous = found.size() > 1;
  std::size_t pick = 0;
  if (sigma)
    for (std::size_t i = 0; i < found.size(); ++i)
      if (found[i].first == *sigma) {
        pick = i;
        rf.chosen_by_sigma = rf.ambiguous;
        break;
      }
  rf.s = found[pick].first;
  rf.kh_prime = found[pick].second;
  return rf;
}

bool check_f2_form(const LaurentPoly2& kh2, const ReducedForm& rf) {
  const auto one_plus_tq2 = LaurentPoly2::constant(1) + LaurentPoly2::monomial(1, 1, 2);
  const auto base = (LaurentPoly2::constant(1) + LaurentPoly2::q(2)).shifted(0, rf.s - 1);
  return kh2 == base * (LaurentPoly2::constant(1) + one_plus_tq2 * rf.kh_prime);
}

ThinnessReport check_thin(const ReducedForm& rf, std::optional<int> sigma, SigmaComparison mode) {
  ThinnessReport rep;
  for (const auto& [e, c] : rf.kh_prime.terms())
    if (e.second != 2 * e.first) rep.offending_monomials.push_back(e);
  rep.is_thin = rep.offending_monomials.empty();
  if (sigma) rep.s_equals_sigma = mode == SigmaComparison::Exact ? rf.s == *sigma : std::abs(rf.s) == std::abs(*sigma);
  return rep;
}

std::vector<Bigrading> off_diagonal_entries(const BigradedTable& betti, int s) {
  std::vector<Bigrading> out;
  for (const auto& [g, dim] : betti) {
    const int diag = g.m - 2 * g.r;
    if (dim != 0 && diag != s - 1 && diag != s + 1) out.push_back(g);
  }
  return out;
}

std::string render_compressed(const LaurentPoly2& p) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << ' ';
    first = false;
    os << c << '^' << e.first << '_' << e.second;
  }
  return os.str();
}

LaurentPoly2 parse_compressed(const std::string& text) {
  std::istringstream in(text);
  std::string tok;
  LaurentPoly2 p;
  while (in >> tok) {
    long long c = 0;
    int r = 0, m = 0;
    char hat = 0, under = 0;
    std::istringstream t(tok);
    if (!(t >> c >> hat >> r >> under >> m) || hat != '^' || under != '_' || t.peek() != EOF)
      throw PolyParseError("malformed compressed token '" + tok + "'");
    p.add_term(r, m, c);
  }
  return p;
}

std::vector<std::pair<std::string, std::string>> find_separations(const std::vector<SeparationEntry>& entries) {
  std::vector<std::pair<std::string, std::string>> out;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = i + 1; j < entries.size(); ++j)
      if (entries[i].jones_hat == entries[j].jones_hat && entries[i].kh != entries[j].kh)
        out.emplace_back(entries[i].name, entries[j].name);
  return out;
}

}  // namespace kh
