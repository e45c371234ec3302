// khcalc: Khovanov homology, Jones polynomials and cube dumps for PD codes.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "khovanov/cube.hpp"
#include "khovanov/homology.hpp"
#include "khovanov/jones.hpp"
#include "khovanov/linkdata.hpp"
#include "khovanov/reduced.hpp"

namespace {

using namespace kh;

constexpr int kExitUsage = 1;
constexpr int kExitVerification = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string pd, file, name;
};

struct Settings {
  Input input;
  long long modulus = 0;
  std::string format = "text";
  std::optional<int> sigma;
  bool abs_sigma = false;
  unsigned threads = 0;
  std::size_t max_crossings = 0;  // 0: the subcommand's default
  std::string edge, vertex;
  bool mirror_check = false;
};

void add_input(CLI::App* sub, Input& in) {
  auto* pd = sub->add_option("--pd", in.pd, "PD code, e.g. \"X[1,5,2,4] X[5,3,6,2] X[3,1,4,6]\"");
  auto* file = sub->add_option("--file", in.file, "file holding a PD code");
  auto* name = sub->add_option("--name", in.name, "name from the built-in corpus");
  pd->excludes(file)->excludes(name);
  file->excludes(name);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

struct Loaded {
  LinkDiagram diagram;
  const LinkRecord* record = nullptr;
};

Loaded load(const Input& in) {
  if (!in.name.empty()) {
    const auto* r = find_builtin(in.name);
    if (!r) throw UsageError("no corpus entry named '" + in.name + "'");
    return {r->diagram(), r};
  }
  if (!in.file.empty()) return {parse_pd(read_file(in.file)), nullptr};
  if (!in.pd.empty()) return {parse_pd(in.pd), nullptr};
  throw UsageError("one of --pd, --file or --name is required");
}

Modulus modulus_of(const Settings& s) {
  try {
    return Modulus::from_int(s.modulus);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void check_size(const LinkDiagram& d, std::size_t limit) {
  if (d.size() > limit)
    throw UsageError("diagram has " + std::to_string(d.size()) + " crossings, above the limit of " +
                     std::to_string(limit) + " (see --max-crossings)");
}

std::size_t cube_limit(const Settings& s) { return s.max_crossings ? s.max_crossings : kMaxCubeDimension; }
std::size_t jones_limit(const Settings& s) { return s.max_crossings ? s.max_crossings : kDefaultJonesCrossingLimit; }

void warn(const LinkDiagram& d) {
  for (const auto& w : d.warnings()) std::cerr << "warning: " << w << '\n';
}

int run_kh(const Settings& s) {
  const auto [d, rec] = load(s.input);
  warn(d);
  check_size(d, cube_limit(s));
  const auto result = compute_kh(d, modulus_of(s), {s.threads});
  if (s.format == "json")
    std::cout << to_json(result) << '\n';
  else if (s.format == "compressed")
    std::cout << render_compressed(result.kh) << '\n';
  else if (s.format == "grid")
    std::cout << render_grid(result);
  else
    std::cout << to_string(result.kh) << '\n';
  return 0;
}

int run_jones(const Settings& s) {
  const auto [d, rec] = load(s.input);
  warn(d);
  const auto limit = jones_limit(s);
  const auto bracket = kauffman_bracket(d, limit);
  const auto hat = unnormalized_jones(d, limit);
  const auto j = jones(d, limit);
  if (s.format == "json") {
    nlohmann::ordered_json out;
    out["bracket"] = to_string(bracket);
    out["jones_hat"] = to_string(hat);
    out["jones"] = to_string(j);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "bracket: " << to_string(bracket) << '\n'
              << "jones_hat: " << to_string(hat) << '\n'
              << "jones: " << to_string(j) << '\n';
  }
  return 0;
}

int run_cube(const Settings& s) {
  const auto [d, rec] = load(s.input);
  warn(d);
  check_size(d, s.max_crossings ? s.max_crossings : kDefaultJonesCrossingLimit);
  try {
    if (!s.edge.empty()) {
      std::cout << render_edge(d, parse_edge(s.edge, d.size())) << '\n';
    } else if (!s.vertex.empty()) {
      std::cout << render_cycles(smooth(d, parse_vertex(s.vertex, d.size()))) << '\n';
    } else {
      std::cout << dump_cube(d);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return 0;
}

int run_reduced(const Settings& s) {
  const auto [d, rec] = load(s.input);
  warn(d);
  check_size(d, cube_limit(s));
  auto sigma = s.sigma;
  if (!sigma && rec) sigma = rec->sigma;
  const auto kh_q = compute_kh(d, Modulus::rationals(), {s.threads});
  const auto rf = extract_reduced(kh_q.kh, sigma, Modulus::rationals());

  nlohmann::ordered_json out;
  out["kh"] = to_string(kh_q.kh);
  bool holds = rf.has_value();
  if (rf) {
    const auto f2 = compute_kh(d, Modulus::from_int(2), {s.threads});
    const bool f2_ok = check_f2_form(f2.kh, *rf);
    const auto thin = check_thin(*rf, sigma, s.abs_sigma ? SigmaComparison::AbsoluteValue : SigmaComparison::Exact);
    const auto off = off_diagonal_entries(kh_q.betti, rf->s);
    out["s"] = rf->s;
    out["candidates"] = rf->candidates;
    out["ambiguous"] = rf->ambiguous;
    if (rf->ambiguous) out["chosen_by"] = rf->chosen_by_sigma ? "sigma" : "smallest";
    out["kh_prime"] = to_string(rf->kh_prime);
    out["kh_prime_compressed"] = render_compressed(rf->kh_prime);
    out["f2_form"] = f2_ok;
    out["thin"] = thin.is_thin;
    auto bad = nlohmann::json::array();
    for (const auto& [r, m] : thin.offending_monomials) bad.push_back({r, m});
    out["offending_monomials"] = bad;
    out["two_diagonal"] = off.empty();
    if (thin.s_equals_sigma) out["s_equals_sigma"] = *thin.s_equals_sigma;
    holds = holds && f2_ok;
  }
  out["conjecture_holds"] = holds;

  if (s.format == "json") {
    std::cout << out.dump() << '\n';
    return 0;
  }
  for (const auto& [key, value] : out.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  return 0;
}

int run_verify(const Settings& s) {
  const auto [d, rec] = load(s.input);
  warn(d);
  check_size(d, cube_limit(s));
  const auto mod = modulus_of(s);
  bool all_ok = true;
  auto report = [&](const std::string& what, bool ok, const std::string& detail = {}) {
    std::cout << (ok ? "PASS " : "FAIL ") << what;
    if (!detail.empty()) std::cout << " (" << detail << ')';
    std::cout << '\n';
    all_ok = all_ok && ok;
  };

  const auto complex = build_complex(d);
  const auto d2 = d_squared_failures(complex);
  report("d*d = 0", d2.empty(), d2.empty() ? "" : std::to_string(d2.size()) + " blocks");
  const auto deg = degree_violations(complex);
  report("differential preserves q-degree", deg == 0, deg ? std::to_string(deg) + " entries" : "");
  const auto faces = check_faces(d);
  report("face signs multiply to -1", faces.sign_failures == 0);
  report("faces commute", faces.commutativity_failures == 0);

  const auto result = compute_kh(d, mod, {s.threads});
  const auto chi = euler_characteristic(d);
  report("Kh(t=-1) equals the Euler characteristic", result.kh.eval_t(-1) == chi);
  if (d.size() <= jones_limit(s)) {
    const auto hat = unnormalized_jones(d, jones_limit(s));
    report("Euler characteristic equals the bracket Jones polynomial", chi == hat);
  }
  if (s.mirror_check) {
    const auto mk = compute_kh(mirror(d), mod, {s.threads});
    report("Kh(mirror) equals Kh(t^-1, q^-1)", mk.kh == result.kh.inverted());
  }
  if (rec) {
    auto compare = [&](const char* label, const std::optional<LaurentPoly2>& expected, const LaurentPoly2& got) {
      if (!expected) return;
      if (got == *expected) {
        report(std::string(label) + " matches the corpus value", true);
      } else if (rec->up_to_mirror && got.inverted() == *expected) {
        report(std::string(label) + " matches the corpus value", true, "as the mirror image");
      } else {
        report(std::string(label) + " matches the corpus value", false, "expected " + to_string(*expected));
      }
    };
    if (mod.is_rational()) compare("Kh over Q", rec->expected.kh_q, result.kh);
    if (mod.value() == 2) compare("Kh over F2", rec->expected.kh_f2, result.kh);
    compare("unnormalized Jones", rec->expected.jones_hat, chi);
  }
  std::cout << "kh: " << to_string(result.kh) << '\n';
  return all_ok ? 0 : kExitVerification;
}

std::vector<LinkRecord> table_records(const Input& in) {
  if (!in.pd.empty() || !in.name.empty()) throw UsageError("separations reads a table file (--file) or the corpus");
  if (in.file.empty()) return builtin_corpus();
  return load_table(in.file).records;
}

int run_separations(const Settings& s) {
  const auto mod = modulus_of(s);
  std::vector<SeparationEntry> entries;
  for (const auto& r : table_records(s.input)) {
    const auto d = r.diagram();
    if (d.size() > cube_limit(s) || d.size() > jones_limit(s)) {
      std::cerr << "skipping " << r.name << ": " << d.size() << " crossings\n";
      continue;
    }
    const auto k = compute_kh(d, mod, {s.threads}).kh;
    const auto hat = unnormalized_jones(d, jones_limit(s));
    entries.push_back({r.name, k, hat});
    // Mirror images have Kh(t^-1, q^-1) and Jhat(q^-1).
    entries.push_back({"mirror(" + r.name + ")", k.inverted(), hat.inverted()});
  }
  for (const auto& [a, b] : find_separations(entries)) std::cout << a << ' ' << b << '\n';
  return 0;
}

int run_table(const Settings& s) {
  const auto [d, rec] = load(s.input);
  warn(d);
  check_size(d, cube_limit(s));
  std::cout << render_grid(compute_kh(d, modulus_of(s), {s.threads}));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Khovanov homology of links given as PD codes"};
  app.require_subcommand(1);
  Settings s;

  auto common = [&](CLI::App* sub, bool with_input = true) {
    if (with_input) add_input(sub, s.input);
    sub->add_option("--modulus", s.modulus, "0 for the rationals, or a prime")->capture_default_str();
    sub->add_option("--threads", s.threads, "worker threads for block ranks (0: all cores)")->capture_default_str();
    sub->add_option("--max-crossings", s.max_crossings, "refuse larger diagrams");
  };

  auto* kh_cmd = app.add_subcommand("kh", "Khovanov polynomial");
  common(kh_cmd);
  kh_cmd->add_option("--format", s.format)->check(CLI::IsMember({"text", "json", "compressed", "grid"}));

  auto* jones_cmd = app.add_subcommand("jones", "Kauffman bracket, unnormalized and normalized Jones polynomial");
  add_input(jones_cmd, s.input);
  jones_cmd->add_option("--max-crossings", s.max_crossings, "state-sum limit (default 16)");
  jones_cmd->add_option("--format", s.format)->check(CLI::IsMember({"text", "json"}));

  auto* cube_cmd = app.add_subcommand("cube", "smoothings and edge maps of the cube");
  add_input(cube_cmd, s.input);
  cube_cmd->add_option("--max-crossings", s.max_crossings);
  auto* edge_opt = cube_cmd->add_option("--edge", s.edge, "edge such as 0*1");
  cube_cmd->add_option("--vertex", s.vertex, "vertex such as 011")->excludes(edge_opt);

  auto* reduced_cmd = app.add_subcommand("reduced", "s, Kh' and thinness");
  add_input(reduced_cmd, s.input);
  reduced_cmd->add_option("--threads", s.threads);
  reduced_cmd->add_option("--max-crossings", s.max_crossings);
  reduced_cmd->add_option("--sigma", s.sigma, "signature to compare s against");
  reduced_cmd->add_flag("--abs-sigma", s.abs_sigma, "compare |s| with |sigma|");
  reduced_cmd->add_option("--format", s.format)->check(CLI::IsMember({"text", "json"}));

  auto* verify_cmd = app.add_subcommand("verify", "internal consistency checks");
  common(verify_cmd);
  verify_cmd->add_flag("--mirror", s.mirror_check, "also check mirror duality");

  auto* sep_cmd = app.add_subcommand("separations", "pairs with equal Jones but different Kh");
  common(sep_cmd);

  auto* table_cmd = app.add_subcommand("table", "dim H / dim C grid");
  common(table_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (kh_cmd->parsed()) return run_kh(s);
    if (jones_cmd->parsed()) return run_jones(s);
    if (cube_cmd->parsed()) return run_cube(s);
    if (reduced_cmd->parsed()) return run_reduced(s);
    if (verify_cmd->parsed()) return run_verify(s);
    if (sep_cmd->parsed()) return run_separations(s);
    if (table_cmd->parsed()) return run_table(s);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PdSyntaxError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DiagramError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TableError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CrossingLimitExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitVerification;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
