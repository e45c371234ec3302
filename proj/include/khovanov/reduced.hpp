#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khovanov/homology.hpp"
#include "khovanov/laurent.hpp"
#include "khovanov/sparse_rank.hpp"

namespace kh {

/// Kh_Q = q^(s-1) (1 + q^2 + (1 + t q^4) Kh') with s even and Kh' having
/// nonnegative coefficients.
struct ReducedForm {
  int s = 0;
  LaurentPoly2 kh_prime;
  Modulus source_modulus;
  /// Every even s that admits such a factorization, ascending.
  std::vector<int> candidates;
  /// More than one candidate existed; `s` was picked by the signature when
  /// one was supplied and matched, otherwise as the smallest.
  bool ambiguous = false;
  bool chosen_by_sigma = false;
};

/// q^(s-1) (1 + q^2 + (1 + t q^4) kh_prime).
LaurentPoly2 reconstruct(int s, const LaurentPoly2& kh_prime);

/// nullopt means `kh` is not of the conjectured form.
std::optional<ReducedForm> extract_reduced(const LaurentPoly2& kh, std::optional<int> sigma = std::nullopt,
                                           Modulus source = {});

/// kh2 == q^(s-1) (1 + q^2) (1 + (1 + t q^2) Kh').
bool check_f2_form(const LaurentPoly2& kh2, const ReducedForm& rf);

enum class SigmaComparison {
  Exact,
  /// Compare |s| with |sigma|, for tables whose signature sign convention
  /// is not known.
  AbsoluteValue,
};

struct ThinnessReport {
  bool is_thin = true;
  std::optional<bool> s_equals_sigma;
  /// Monomials of Kh' that are not powers of t q^2, as (r, m).
  std::vector<std::pair<int, int>> offending_monomials;
};

ThinnessReport check_thin(const ReducedForm& rf, std::optional<int> sigma = std::nullopt,
                          SigmaComparison mode = SigmaComparison::Exact);

/// Betti entries with m - 2r outside {s - 1, s + 1}.
std::vector<Bigrading> off_diagonal_entries(const BigradedTable& betti, int s);

/// `coef^r_m` tokens in (r, m) order separated by single spaces; the zero
/// polynomial gives an empty string.
std::string render_compressed(const LaurentPoly2& p);
LaurentPoly2 parse_compressed(const std::string& text);

struct SeparationEntry {
  std::string name;
  LaurentPoly2 kh;
  LaurentPoly2 jones_hat;
};

/// Unordered pairs (in input order) with equal unnormalized Jones
/// polynomials but different Khovanov polynomials.
std::vector<std::pair<std::string, std::string>> find_separations(const std::vector<SeparationEntry>& entries);

}  // namespace kh
