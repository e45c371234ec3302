#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "khovanov/laurent.hpp"
#include "khovanov/pd_code.hpp"

namespace kh {

/// Where a record's PD code and expected values come from.
enum class Origin {
  /// Printed in the literature the tool reproduces.
  Published,
  /// Constructed here and confirmed against published invariants.
  Derived,
  /// Taken from an outside knot table; `origin_note` says which.
  External,
};

struct ExpectedValues {
  std::optional<LaurentPoly2> kh_q;
  std::optional<LaurentPoly2> kh_f2;
  std::optional<LaurentPoly2> jones_hat;
};

struct LinkRecord {
  std::string name;
  std::string pd;
  std::optional<int> sigma;
  ExpectedValues expected;
  Origin origin = Origin::External;
  std::string origin_note;
  /// Knot-table numbering the name refers to, e.g. "rolfsen".
  std::string numbering;
  /// Expected values are only known up to mirror image.
  bool up_to_mirror = false;

  LinkDiagram diagram() const { return parse_pd(pd); }
};

class TableError : public std::runtime_error {
 public:
  TableError(const std::string& what, int line);
  int line() const { return line_; }

 private:
  int line_;
};

struct TableOptions {
  /// Skip records whose PD code fails validation instead of failing the load.
  bool lenient = false;
};

struct TableLoad {
  std::vector<LinkRecord> records;
  /// "line N: reason" for every record skipped in lenient mode.
  std::vector<std::string> skipped;
};

/// Lines of `name | pd | sigma | kh_q | kh_f2 | jones_hat | origin | numbering`.
/// Fields after pd may be empty or omitted; `#` starts a comment. The origin
/// field is `published`, `derived`, `external` or `external: note`, with an
/// optional trailing `~mirror` marking mirror-ambiguous expectations.
TableLoad parse_table(std::string_view text, const TableOptions& opts = {});
TableLoad load_table(const std::string& path, const TableOptions& opts = {});

std::string render_record(const LinkRecord& r);

/// Links shipped with the tool, with their expected invariants.
const std::vector<LinkRecord>& builtin_corpus();
const LinkRecord* find_builtin(std::string_view name);

}  // namespace kh
