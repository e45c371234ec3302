#include "khovanov/linkdata.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace kh {

TableError::TableError(const std::string& what, int line)
    : std::runtime_error("table line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto bar = line.find('|', start);
    out.push_back(trim(line.substr(start, bar == std::string_view::npos ? std::string_view::npos : bar - start)));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return out;
}

void parse_origin(const std::string& field, LinkRecord& r) {
  std::string f = field;
  const auto tilde = f.find("~mirror");
  if (tilde != std::string::npos) {
    r.up_to_mirror = true;
    f = trim(std::string_view(f).substr(0, tilde));
  }
  const auto colon = f.find(':');
  const std::string kind = trim(std::string_view(f).substr(0, colon));
  if (colon != std::string::npos) r.origin_note = trim(std::string_view(f).substr(colon + 1));
  if (kind.empty() || kind == "external")
    r.origin = Origin::External;
  else if (kind == "published")
    r.origin = Origin::Published;
  else if (kind == "derived")
    r.origin = Origin::Derived;
  else
    throw std::invalid_argument("unknown origin '" + kind + "'");
}

std::string origin_text(const LinkRecord& r) {
  std::string s = r.origin == Origin::Published ? "published" : r.origin == Origin::Derived ? "derived" : "external";
  if (!r.origin_note.empty()) s += ": " + r.origin_note;
  if (r.up_to_mirror) s += " ~mirror";
  return s;
}

}  // namespace

TableLoad parse_table(std::string_view text, const TableOptions& opts) {
  TableLoad out;
  std::set<std::string> names;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    const std::string line = trim(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const auto f = split_fields(line);
    if (f.size() < 2 || f[0].empty() || f[1].empty()) throw TableError("expected at least 'name | pd'", lineno);
    if (f.size() > 8) throw TableError("too many fields", lineno);
    LinkRecord r;
    r.name = f[0];
    r.pd = f[1];
    auto field = [&](std::size_t i) -> const std::string* { return i < f.size() && !f[i].empty() ? &f[i] : nullptr; };
    try {
      if (auto s = field(2)) {
        std::size_t used = 0;
        r.sigma = std::stoi(*s, &used);
        if (used != s->size()) throw std::invalid_argument("signature '" + *s + "' is not an integer");
      }
      if (auto s = field(3)) r.expected.kh_q = parse_poly(*s);
      if (auto s = field(4)) r.expected.kh_f2 = parse_poly(*s);
      if (auto s = field(5)) r.expected.jones_hat = parse_poly(*s);
      if (auto s = field(6)) parse_origin(*s, r);
      if (auto s = field(7)) r.numbering = *s;
    } catch (const std::exception& e) {
      throw TableError(e.what(), lineno);
    }
    if (!names.insert(r.name).second) throw TableError("duplicate name '" + r.name + "'", lineno);
    try {
      (void)r.diagram();
    } catch (const std::exception& e) {
      if (!opts.lenient) throw TableError(r.name + ": " + e.what(), lineno);
      out.skipped.push_back("line " + std::to_string(lineno) + ": " + r.name + ": " + e.what());
      continue;
    }
    out.records.push_back(std::move(r));
  }
  return out;
}

TableLoad load_table(const std::string& path, const TableOptions& opts) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_table(ss.str(), opts);
}

std::string render_record(const LinkRecord& r) {
  auto poly = [](const std::optional<LaurentPoly2>& p) { return p ? to_string(*p) : std::string(); };
  std::string s = r.name + " | " + r.pd + " | " + (r.sigma ? std::to_string(*r.sigma) : "") + " | " +
                  poly(r.expected.kh_q) + " | " + poly(r.expected.kh_f2) + " | " + poly(r.expected.jones_hat) + " | " +
                  origin_text(r);
  if (!r.numbering.empty()) s += " | " + r.numbering;
  return s;
}

namespace {

constexpr std::string_view kCorpus = R"(
# name | pd | sigma | kh_q | kh_f2 | jones_hat | origin | numbering
3_1 | X[1,5,2,4] X[5,3,6,2] X[3,1,4,6] | 2 | q + q^3 + q^5*t^2 + q^9*t^3 | q + q^3 + q^5*t^2 + q^7*t^2 + q^7*t^3 + q^9*t^3 | q + q^3 + q^5 - q^9 | published | rolfsen
6bar_2 | X[3,10,4,11] X[9,4,10,5] X[5,3,6,2] X[11,7,12,6] X[1,9,2,8] X[7,1,8,12] | | | | | published: Miller Institute knot | rolfsen
MillettUnknot | X[1,10,2,11] X[9,2,10,3] X[3,7,4,6] X[15,5,16,4] X[5,17,6,16] X[7,14,8,15] X[8,18,9,17] X[11,18,12,19] X[19,12,20,13] X[13,20,14,1] | 0 | q^-1 + q | | q^-1 + q | published: Millett's hard unknot |
# Diagrams below are braid closures; each was checked against printed data
# before being added.
5_1 | X[1,6,2,7] X[7,2,8,3] X[3,8,4,9] X[9,4,10,5] X[5,10,6,1] | -4 | q^-5 + q^-3 + q^-15*t^-5 + q^-11*t^-4 + q^-11*t^-3 + q^-7*t^-2 | | q^-3 + q^-5 + q^-7 - q^-15 | derived: closure of sigma_1^-5 | rolfsen
7_7 | X[8,2,9,1] X[2,13,3,14] X[14,10,1,9] X[10,3,11,4] X[6,12,7,11] X[4,7,5,8] X[12,6,13,5] | 0 | q^-7*t^-3 + 2*q^-5*t^-2 + q^-3*t^-2 + q^-3*t^-1 + 2*q^-1*t^-1 + 3*q^-1 + 2*q + 2*q*t + 2*q^3*t + q^3*t^2 + 2*q^5*t^2 + q^5*t^3 + q^7*t^3 + q^9*t^4 | | | derived: closure of s1 s2^-1 s1 s2^-1 s3 s2^-1 s3 | rolfsen
9_42 | X[14,2,15,1] X[2,16,3,15] X[16,4,17,3] X[4,7,5,8] X[17,8,18,9] X[9,18,10,1] X[12,6,13,5] X[10,13,11,14] X[6,12,7,11] | | | | q^-7 + q^7 | derived: closure of s1^3 s2^-1 s1^-2 s3 s2^-1 s3 | rolfsen
10_100 | X[16,2,17,1] X[2,9,3,10] X[10,3,11,4] X[4,18,5,17] X[18,11,19,12] X[12,19,13,20] X[20,6,1,5] X[6,13,7,14] X[14,7,15,8] X[8,15,9,16] | -4 | q^3*t^3 + 2*q*t^2 + 3*q^-1*t + q^-1*t^2 + 5*q^-3 + 2*q^-3*t + 5*q^-5*t^-1 + 4*q^-5 + 6*q^-7*t^-2 + 4*q^-7*t^-1 + 4*q^-9*t^-3 + 5*q^-9*t^-2 + 4*q^-11*t^-4 + 6*q^-11*t^-3 + 2*q^-13*t^-5 + 4*q^-13*t^-4 + q^-15*t^-6 + 4*q^-15*t^-5 + 2*q^-17*t^-6 + q^-19*t^-7 | | | derived: closure of s1 s2^-2 s1 s2^-2 s1 s2^-3 | rolfsen
10_125 | X[8,2,9,1] X[2,10,3,9] X[10,4,11,3] X[4,12,5,11] X[12,6,13,5] X[6,17,7,18] X[13,18,14,19] X[19,14,20,15] X[15,20,16,1] X[16,7,17,8] | | | | -q^-9 + q^-3 + q^-1 + q + q^3 - q^9 | derived: closure of s1^5 s2^-1 s1^-3 s2^-1 | rolfsen
10_132 | X[8,4,9,3] X[4,10,5,9] X[10,6,11,5] X[16,11,17,12] X[12,2,13,1] X[17,6,18,7] X[7,18,8,19] X[2,19,3,20] X[13,20,14,21] X[21,14,22,15] X[15,22,16,1] | | q^-3 + q^-1 + q^-15*t^-7 + q^-11*t^-6 + q^-11*t^-5 + q^-9*t^-4 + q^-7*t^-4 + q^-9*t^-3 + q^-5*t^-3 + 2*q^-5*t^-2 + q^-1*t^-1 | | q^-3 + q^-5 + q^-7 - q^-15 | derived: closure of s3^3 s2^-1 s1 s3^-2 s2^-1 s1^-3, 11 crossings | rolfsen
L2a1 | X[3,2,4,1] X[2,3,1,4] | | 1 + q^2 + q^4*t^2 + q^6*t^2 | 1 + q^2 + q^4*t^2 + q^6*t^2 | 1 + q^2 + q^4 + q^6 | derived: positive Hopf link, closure of sigma_1^2 | thistlethwaite
4^2_1 | X[1,5,2,6] X[6,2,7,3] X[3,7,4,8] X[8,4,5,1] | | q^-12*t^-4 + q^-10*t^-4 + q^-10*t^-3 + q^-6*t^-2 + q^-4 + q^-2 | | | derived: closure of sigma_1^-4 | rolfsen
)";

}  // namespace

const std::vector<LinkRecord>& builtin_corpus() {
  static const std::vector<LinkRecord> corpus = parse_table(kCorpus).records;
  return corpus;
}

const LinkRecord* find_builtin(std::string_view name) {
  for (const auto& r : builtin_corpus())
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace kh
