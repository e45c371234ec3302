#include "khovanov/pd_code.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <optional>
#include <sstream>

namespace kh {

PdSyntaxError::PdSyntaxError(const std::string& what, std::size_t offset, int line, int column)
    : std::runtime_error("PD syntax error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + what),
      offset_(offset), line_(line), column_(column) {}

namespace {

enum class OverDir : signed char { Unknown = 0, LToJ = 1, JToL = -1 };

struct Slot {
  int crossing;
  int position;  // 0..3 for i, j, k, l
};

// Whether the edge at `slot` enters its crossing, given the crossing's
// over-strand direction. Unknown for over slots of undetermined crossings.
std::optional<bool> enters(const Slot& s, const std::vector<OverDir>& dir) {
  switch (s.position) {
    case 0: return true;
    case 2: return false;
    case 1:
      if (dir[static_cast<std::size_t>(s.crossing)] == OverDir::Unknown) return std::nullopt;
      return dir[static_cast<std::size_t>(s.crossing)] == OverDir::JToL;
    default:
      if (dir[static_cast<std::size_t>(s.crossing)] == OverDir::Unknown) return std::nullopt;
      return dir[static_cast<std::size_t>(s.crossing)] == OverDir::LToJ;
  }
}

}  // namespace

LinkDiagram LinkDiagram::from_crossings(std::vector<Crossing> crossings, NumberingCheck check) {
  if (crossings.empty()) throw DiagramError("diagram has no crossings");
  LinkDiagram d;
  d.crossings_ = std::move(crossings);
  const auto n = d.crossings_.size();

  std::map<int, int> multiplicity;
  for (const auto& x : d.crossings_)
    for (int e : x.edges) {
      if (e < 1) throw DiagramError("edge label " + std::to_string(e) + " is not positive");
      ++multiplicity[e];
    }
  for (const auto& [label, count] : multiplicity) {
    if (count != 2)
      throw DiagramError("edge " + std::to_string(label) + " appears " + std::to_string(count) +
                         " times (expected exactly 2)");
    d.labels_.push_back(label);
  }

  const auto edges = d.labels_.size();
  std::vector<std::vector<Slot>> slots(edges);
  for (std::size_t c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p)
      slots[static_cast<std::size_t>(d.label_index(d.crossings_[c][static_cast<std::size_t>(p)]))].push_back(
          {static_cast<int>(c), p});

  // Orient over-strands: every edge has exactly one end where it enters a
  // crossing. Under-strand slots are fixed; propagate along over-strands.
  std::vector<OverDir> dir(n, OverDir::Unknown);
  std::deque<std::size_t> work;
  auto settle = [&](std::size_t e) {
    const Slot& a = slots[e][0];
    const Slot& b = slots[e][1];
    auto ea = enters(a, dir);
    auto eb = enters(b, dir);
    if (ea && eb) {
      if (*ea == *eb)
        throw DiagramError("edge " + std::to_string(d.labels_[e]) + " has inconsistent orientation at crossings " +
                           std::to_string(a.crossing + 1) + " and " + std::to_string(b.crossing + 1));
      return;
    }
    if (!ea && !eb) return;
    const Slot& open = ea ? b : a;
    const bool open_enters = !(ea ? *ea : *eb);
    // open is an over slot (j = 1 or l = 3) of an undetermined crossing.
    const bool l_to_j = (open.position == 3) == open_enters;
    dir[static_cast<std::size_t>(open.crossing)] = l_to_j ? OverDir::LToJ : OverDir::JToL;
    work.push_back(static_cast<std::size_t>(open.crossing));
  };
  auto drain = [&] {
    while (!work.empty()) {
      const std::size_t c = work.front();
      work.pop_front();
      for (int p : {1, 3}) settle(static_cast<std::size_t>(d.label_index(d.crossings_[c][static_cast<std::size_t>(p)])));
    }
  };
  for (std::size_t e = 0; e < edges; ++e) settle(e);
  drain();
  for (std::size_t c = 0; c < n; ++c) {
    if (dir[c] != OverDir::Unknown) continue;
    // A strand that only passes over: orient it so labels ascend.
    const int j = d.crossings_[c][1], l = d.crossings_[c][3];
    bool l_to_j = (j == l + 1) || (l != j + 1 && l > j);
    dir[c] = l_to_j ? OverDir::LToJ : OverDir::JToL;
    work.push_back(c);
    drain();
  }
  for (std::size_t e = 0; e < edges; ++e) settle(e);

  d.signs_.resize(n);
  for (std::size_t c = 0; c < n; ++c) {
    d.signs_[c] = dir[c] == OverDir::LToJ ? 1 : -1;
    (d.signs_[c] > 0 ? d.n_plus_ : d.n_minus_) += 1;
  }

  d.successor_.assign(edges, -1);
  std::vector<int> predecessor_count(edges, 0);
  for (std::size_t e = 0; e < edges; ++e) {
    for (const Slot& s : slots[e]) {
      if (!*enters(s, dir)) continue;
      static constexpr int kContinue[4] = {2, 3, 0, 1};
      const int next = d.crossings_[static_cast<std::size_t>(s.crossing)][static_cast<std::size_t>(kContinue[s.position])];
      d.successor_[e] = d.label_index(next);
      ++predecessor_count[static_cast<std::size_t>(d.successor_[e])];
    }
  }
  for (std::size_t e = 0; e < edges; ++e)
    if (d.successor_[e] < 0 || predecessor_count[e] != 1)
      throw DiagramError("edge succession is not a union of cycles near edge " + std::to_string(d.labels_[e]));

  std::vector<char> seen(edges, 0);
  for (std::size_t start = 0; start < edges; ++start) {
    if (seen[start]) continue;
    std::vector<int> comp;
    for (auto e = start; !seen[e]; e = static_cast<std::size_t>(d.successor_[e])) {
      seen[e] = 1;
      comp.push_back(d.labels_[e]);
    }
    d.components_.push_back(std::move(comp));
  }

  for (const auto& comp : d.components_) {
    for (std::size_t i = 1; i < comp.size(); ++i)
      if (comp[i] <= comp[i - 1]) {
        std::ostringstream os;
        os << "component starting at edge " << comp.front() << " is not numbered in ascending order (edge "
           << comp[i - 1] << " is followed by " << comp[i] << ")";
        throw DiagramError(os.str());
      }
    const bool contiguous = comp.back() - comp.front() + 1 == static_cast<int>(comp.size());
    if (!contiguous) {
      const std::string msg =
          "component starting at edge " + std::to_string(comp.front()) + " does not occupy a contiguous label interval";
      if (check == NumberingCheck::Strict) throw DiagramError(msg);
      d.warnings_.push_back(msg);
    }
  }
  for (std::size_t a = 0; a < d.components_.size(); ++a)
    for (std::size_t b = a + 1; b < d.components_.size(); ++b) {
      const auto& x = d.components_[a];
      const auto& y = d.components_[b];
      if (x.front() <= y.back() && y.front() <= x.back()) {
        const std::string msg = "label intervals of components starting at edges " + std::to_string(x.front()) +
                                " and " + std::to_string(y.front()) + " overlap";
        if (check == NumberingCheck::Strict) throw DiagramError(msg);
        d.warnings_.push_back(msg);
      }
    }
  return d;
}

int LinkDiagram::label_index(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) throw DiagramError("unknown edge label " + std::to_string(label));
  return static_cast<int>(it - labels_.begin());
}

int LinkDiagram::successor(int label) const {
  return labels_[static_cast<std::size_t>(successor_[static_cast<std::size_t>(label_index(label))])];
}

namespace {

class PdParser {
 public:
  explicit PdParser(std::string_view s) : s_(s) {}

  std::vector<Crossing> parse() {
    skip();
    if (at_end()) fail("empty input");
    std::vector<Crossing> out;
    if (s_.substr(pos_, 4) == "Link") {
      pos_ += 4;
      skip();
      expect('[');
      out.push_back(x_term());
      skip();
      while (!at_end() && peek() == ',') {
        ++pos_;
        out.push_back(x_term());
        skip();
      }
      expect(']');
      skip();
      if (!at_end()) fail("unexpected trailing input");
      return out;
    }
    out.push_back(x_term());
    while (true) {
      const std::size_t before = pos_;
      skip();
      if (at_end()) break;
      if (pos_ == before) fail("expected whitespace between X terms");
      out.push_back(x_term());
    }
    return out;
  }

 private:
  Crossing x_term() {
    skip();
    if (at_end() || peek() != 'X') fail("expected 'X['");
    ++pos_;
    skip();
    expect('[');
    Crossing x;
    for (int slot = 0; slot < 4; ++slot) {
      if (slot) expect(',');
      x.edges[static_cast<std::size_t>(slot)] = integer();
    }
    expect(']');
    return x;
  }

  int integer() {
    skip();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a positive integer edge label");
    const std::size_t start = pos_;
    long long v = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (peek() - '0');
      if (v > 1'000'000'000) fail("edge label too large");
      ++pos_;
    }
    if (v == 0) {
      pos_ = start;
      fail("edge labels must be positive");
    }
    return static_cast<int>(v);
  }

  void expect(char ch) {
    skip();
    if (at_end() || peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  void skip() {
    while (!at_end()) {
      if (std::isspace(static_cast<unsigned char>(peek()))) {
        ++pos_;
      } else if (peek() == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw PdSyntaxError(what, pos_, line, col);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

LinkDiagram parse_pd(std::string_view text, NumberingCheck check) {
  return LinkDiagram::from_crossings(PdParser(text).parse(), check);
}

std::string render_pd(const LinkDiagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : d.crossings()) {
    if (!first) os << ' ';
    first = false;
    os << "X[" << x[0] << ',' << x[1] << ',' << x[2] << ',' << x[3] << ']';
  }
  return os.str();
}

int crossing_sign(const LinkDiagram& d, std::size_t c) { return d.sign(c); }

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Crossing> out;
  out.reserve(d.size());
  for (std::size_t c = 0; c < d.size(); ++c) {
    const auto& x = d.crossing(c);
    if (d.sign(c) > 0)
      out.push_back({{x[3], x[0], x[1], x[2]}});
    else
      out.push_back({{x[1], x[2], x[3], x[0]}});
  }
  return LinkDiagram::from_crossings(std::move(out), NumberingCheck::Lenient);
}

}  // namespace kh
