#include "khovanov/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

namespace kh {

LaurentPoly2 LaurentPoly2::monomial(Coeff c, int r, int m) {
  LaurentPoly2 p;
  p.add_term(r, m, c);
  return p;
}

LaurentPoly2::Coeff LaurentPoly2::coeff(int r, int m) const {
  auto it = terms_.find({r, m});
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly2::add_term(int r, int m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({r, m}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool LaurentPoly2::all_coefficients_nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.second > 0; });
}

bool LaurentPoly2::is_t_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.first == 0; });
}

int LaurentPoly2::min_t() const { return terms_.empty() ? 0 : terms_.begin()->first.first; }
int LaurentPoly2::max_t() const { return terms_.empty() ? 0 : terms_.rbegin()->first.first; }

int LaurentPoly2::min_q() const {
  int lo = std::numeric_limits<int>::max();
  for (const auto& [e, c] : terms_) lo = std::min(lo, e.second);
  return terms_.empty() ? 0 : lo;
}

int LaurentPoly2::max_q() const {
  int hi = std::numeric_limits<int>::min();
  for (const auto& [e, c] : terms_) hi = std::max(hi, e.second);
  return terms_.empty() ? 0 : hi;
}

LaurentPoly2 LaurentPoly2::shifted(int dr, int dm) const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), Exponents{e.first + dr, e.second + dm}, c);
  return out;
}

LaurentPoly2 LaurentPoly2::eval_t(int t0) const {
  if (t0 != 1 && t0 != -1) throw std::invalid_argument("eval_t: t0 must be +1 or -1");
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.add_term(0, e.second, (t0 == -1 && (e.first & 1)) ? -c : c);
  return out;
}

LaurentPoly2 LaurentPoly2::inverted() const {
  LaurentPoly2 out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exponents{-e.first, -e.second}, c);
  return out;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentPoly2& LaurentPoly2::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& kv : terms_) kv.second *= c;
  }
  return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
  LaurentPoly2 out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

LaurentPoly2 pow(const LaurentPoly2& base, unsigned exponent) {
  LaurentPoly2 result = LaurentPoly2::constant(1);
  LaurentPoly2 b = base;
  while (exponent) {
    if (exponent & 1u) result = result * b;
    exponent >>= 1;
    if (exponent) b = b * b;
  }
  return result;
}

std::optional<LaurentPoly2> divide(const LaurentPoly2& dividend, const LaurentPoly2& divisor) {
  if (divisor.is_zero()) throw std::invalid_argument("divide: zero divisor");
  if (dividend.is_zero()) return LaurentPoly2{};

  // Degrees in each variable are additive under multiplication, so every
  // quotient term lies in this box.
  const int r_lo = dividend.min_t() - divisor.min_t();
  const int r_hi = dividend.max_t() - divisor.max_t();
  const int m_lo = dividend.min_q() - divisor.min_q();
  const int m_hi = dividend.max_q() - divisor.max_q();
  if (r_lo > r_hi || m_lo > m_hi) return std::nullopt;

  const auto& [lead_e, lead_c] = *divisor.terms().rbegin();
  LaurentPoly2 remainder = dividend;
  LaurentPoly2 quotient;
  while (!remainder.is_zero()) {
    const auto& [e, c] = *remainder.terms().rbegin();
    if (c % lead_c != 0) return std::nullopt;
    const int r = e.first - lead_e.first;
    const int m = e.second - lead_e.second;
    if (r < r_lo || r > r_hi || m < m_lo || m > m_hi) return std::nullopt;
    const auto step = LaurentPoly2::monomial(c / lead_c, r, m);
    quotient += step;
    remainder -= step * divisor;
  }
  return quotient;
}

namespace {

void append_power(std::ostringstream& os, char var, int e, bool& wrote_factor) {
  if (e == 0) return;
  if (wrote_factor) os << '*';
  os << var;
  if (e != 1) os << '^' << e;
  wrote_factor = true;
}

}  // namespace

std::string to_string(const LaurentPoly2& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const auto [r, m] = e;
    LaurentPoly2::Coeff mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || (r == 0 && m == 0)) {
      os << mag;
      wrote = true;
    }
    append_power(os, 'q', m, wrote);
    append_power(os, 't', r, wrote);
  }
  return os.str();
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  LaurentPoly2 parse() {
    skip_ws();
    if (at_end()) fail("empty polynomial");
    LaurentPoly2 out;
    bool first = true;
    while (true) {
      skip_ws();
      if (at_end()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      parse_term(out, sign);
    }
    return out;
  }

 private:
  void parse_term(LaurentPoly2& out, int sign) {
    LaurentPoly2::Coeff coeff = 1;
    int r = 0, m = 0;
    bool any = false;
    while (true) {
      skip_ws();
      if (at_end()) break;
      char ch = peek();
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        coeff *= read_uint();
      } else if (ch == 'q' || ch == 't') {
        ++pos_;
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          e = read_exponent();
        }
        (ch == 'q' ? m : r) += e;
      } else {
        fail(std::string("unexpected character '") + ch + "'");
      }
      any = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!any) fail("empty term");
    out.add_term(r, m, sign * coeff);
  }

  int read_exponent() {
    skip_ws();
    bool paren = !at_end() && peek() == '(';
    if (paren) ++pos_;
    skip_ws();
    int sign = 1;
    if (!at_end() && peek() == '-') {
      sign = -1;
      ++pos_;
    }
    int v = static_cast<int>(read_uint());
    if (paren) {
      skip_ws();
      if (at_end() || peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return sign * v;
  }

  LaurentPoly2::Coeff read_uint() {
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
    LaurentPoly2::Coeff v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw PolyParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly2 parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace kh
