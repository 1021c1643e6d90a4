#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "diamonds/dyck.hpp"
#include "diamonds/enumerator.hpp"
#include "diamonds/error.hpp"
#include "diamonds/gfd.hpp"
#include "diamonds/oeis.hpp"
#include "diamonds/packing.hpp"
#include "diamonds/system_json.hpp"

namespace diamonds::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct UsageError : Error {
  using Error::Error;
};

struct Globals {
  std::string format = "text";
  int bound = 16;
  std::uint64_t max_avoiders = SearchLimits{}.max_avoiders;
  unsigned parallel = 1;

  SearchLimits limits() const {
    SearchLimits l;
    l.max_labels = bound;
    l.max_avoiders = max_avoiders;
    l.workers = parallel;
    return l;
  }
};

struct ShapeArgs {
  int v = 4;
  int d = 1;
  int j = 0;
  std::string avoid;
};

ordered_json json_int(const BigInt& n) {
  if (n >= 0 && n <= std::numeric_limits<std::uint64_t>::max()) {
    return n.convert_to<std::uint64_t>();
  }
  return n.str();
}

ordered_json json_coeffs(const DescentPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coeffs()) out.push_back(json_int(c));
  return out;
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// Shapes with a trailing partial diamond are only covered by the alpha and
// beta tables (as cells with d+1 diamonds) or by brute force.
FamilyResult evaluate(const ShapeArgs& a, const std::string& method, const Globals& g) {
  const PatternSet avoid = PatternSet::parse(a.avoid);
  const SearchLimits limits = g.limits();
  auto brute = [&](const SystemShape& shape) {
    FamilyResult r;
    r.poly = descent_poly_brute(shape, avoid, limits);
    r.count = r.poly->eval_one();
    r.method = Method::brute_force;
    return r;
  };
  if (a.j) {
    const SystemShape shape = SystemShape::make(a.v, a.d, a.j);
    if (method != "brute" && a.v >= 4) {
      FamilyResult r;
      r.method = Method::recursion;
      if (avoid == PatternSet::parse("231")) {
        r.poly = default_gfd_table().alpha(a.v, a.j, a.d + 1);
      } else if (avoid == PatternSet::parse("231:321")) {
        r.poly = default_gfd_table().beta(a.v, a.j, a.d + 1);
      }
      if (r.poly) {
        r.count = r.poly->eval_one();
        return r;
      }
    }
    if (method == "formula") throw Error("no formula for " + avoid.to_string() + " on " + shape.to_string());
    return brute(shape);
  }
  if (a.d < 1) throw UsageError("--d must be at least 1");
  if (method == "brute") return brute(SystemShape::make(a.v, a.d));
  FamilyResult r = dispatch(a.v, a.d, avoid, limits);
  if (method == "formula" && r.method == Method::brute_force) {
    throw Error("no formula for " + avoid.to_string() + " at v=" + std::to_string(a.v) +
                "; use --method brute");
  }
  return r;
}

void add_shape_options(CLI::App* cmd, ShapeArgs& a, bool allow_partial = true) {
  cmd->add_option("--v", a.v, "vertices per diamond")->required()->check(CLI::Range(3, 64));
  cmd->add_option("--d", a.d, "number of full diamonds")->required()->check(CLI::Range(0, 64));
  if (allow_partial) {
    cmd->add_option("--j", a.j, "size of a trailing partial diamond")->check(CLI::Range(1, 63));
  }
  cmd->add_option("--avoid", a.avoid, "patterns to avoid, e.g. 231:321");
}

void check_shape(const ShapeArgs& a) {
  if (a.j && a.j >= a.v) throw UsageError("--j must be below --v");
  if (!a.j && a.d < 1) throw UsageError("--d must be at least 1 without --j");
}

int cmd_count(const ShapeArgs& a, const std::string& method, const Globals& g,
              std::ostream& out) {
  check_shape(a);
  const FamilyResult r = evaluate(a, method, g);
  if (g.format == "json") {
    ordered_json j;
    j["v"] = a.v;
    j["d"] = a.d;
    if (a.j) j["j"] = a.j;
    j["avoid"] = PatternSet::parse(a.avoid).to_string();
    j["count"] = json_int(r.count);
    j["method"] = to_string(r.method);
    out << j.dump() << '\n';
  } else if (g.format == "csv") {
    out << "count,method\n" << r.count.str() << ',' << to_string(r.method) << '\n';
  } else {
    out << r.count.str() << " (" << to_string(r.method) << ")\n";
  }
  return 0;
}

int cmd_gfd(const ShapeArgs& a, const std::string& method, const Globals& g,
            std::ostream& out) {
  check_shape(a);
  FamilyResult r = evaluate(a, method, g);
  if (!r.poly) {
    if (method == "formula") throw Error("no closed descent polynomial for this pattern set");
    const SystemShape shape = a.j ? SystemShape::make(a.v, a.d, a.j) : SystemShape::make(a.v, a.d);
    r.poly = descent_poly_brute(shape, PatternSet::parse(a.avoid), g.limits());
    r.method = Method::brute_force;
  }
  if (g.format == "json") {
    ordered_json j;
    j["v"] = a.v;
    j["d"] = a.d;
    if (a.j) j["j"] = a.j;
    j["avoid"] = PatternSet::parse(a.avoid).to_string();
    j["poly"] = r.poly->to_string();
    j["coeffs"] = json_coeffs(*r.poly);
    j["method"] = to_string(r.method);
    out << j.dump() << '\n';
  } else if (g.format == "csv") {
    out << "poly,method\n" << csv_quote(r.poly->to_string()) << ',' << to_string(r.method) << '\n';
  } else {
    out << r.poly->to_string() << '\n';
  }
  return 0;
}

int cmd_enumerate(const ShapeArgs& a, const Globals& g, std::ostream& out) {
  check_shape(a);
  const SystemShape shape = a.j ? SystemShape::make(a.v, a.d, a.j) : SystemShape::make(a.v, a.d);
  const PatternSet avoid = PatternSet::parse(a.avoid);
  if (g.format == "json") {
    generate_avoiders(
        shape, avoid, [&](const LabelledSystem& s) { out << system_to_json(s) << '\n'; },
        g.limits());
  } else {
    for_each_avoider(
        shape, avoid,
        [&](std::span<const int> p) {
          for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
          out << '\n';
        },
        g.limits());
  }
  return 0;
}

const std::vector<std::string>& table_rows() {
  static const std::vector<std::string> rows{
      "none",    "123",     "132",     "213",         "231",        "312",
      "321",     "132:213", "132:312", "213:231",     "132:321",    "213:321",
      "231:312", "231:321", "312:321", "132:213:321", "231:312:321"};
  return rows;
}

int cmd_table(int v, int dmax, bool polys, const Globals& g, std::ostream& out) {
  if (dmax < 1) throw UsageError("--dmax must be at least 1");
  ordered_json rows_json = ordered_json::array();
  if (g.format == "csv") {
    out << "patterns";
    for (int d = 1; d <= dmax; ++d) out << ",d" << d;
    out << '\n';
  }
  for (const auto& row : table_rows()) {
    const PatternSet avoid = PatternSet::parse(row);
    std::vector<std::string> cells;
    ordered_json cells_json = ordered_json::array();
    bool bounded = false;
    for (int d = 1; d <= dmax; ++d) {
      std::optional<FamilyResult> r;
      // Counts only grow with d, so a row that hit the bound stays there.
      if (!bounded) {
        try {
          r = dispatch(v, d, avoid, g.limits());
          if (polys && !r->poly) {
            r->poly = descent_poly_brute(SystemShape::make(v, d), avoid, g.limits());
          }
        } catch (const BoundExceeded&) {
          bounded = true;
        }
      }
      if (!r) {
        cells.push_back("bound");
        cells_json.push_back(nullptr);
        continue;
      }
      if (polys) {
        cells.push_back(r->poly->to_string());
        cells_json.push_back(r->poly->to_string());
      } else {
        cells.push_back(r->count.str());
        cells_json.push_back(json_int(r->count));
      }
    }
    if (g.format == "csv") {
      out << row;
      for (const auto& c : cells) out << ',' << (polys ? csv_quote(c) : c);
      out << '\n';
    } else if (g.format == "json") {
      ordered_json j;
      j["patterns"] = row;
      j[polys ? "polys" : "counts"] = cells_json;
      rows_json.push_back(std::move(j));
    } else {
      out << row << ':';
      for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? ", " : " ") << cells[i];
      out << '\n';
    }
  }
  if (g.format == "json") {
    ordered_json doc;
    doc["v"] = v;
    doc["rows"] = std::move(rows_json);
    out << doc.dump() << '\n';
  }
  return 0;
}

int cmd_dyck(int v, int d, bool map, const Globals& g, std::ostream& out) {
  if (d < 1) throw UsageError("--d must be at least 1");
  enumerate_paths(v, d, [&](const LatticePath& p) {
    const PathStats s = path_statistics(p, v, d);
    if (g.format == "json") {
      ordered_json j;
      j["path"] = p.steps();
      j["touchpoints"] = s.touchpoints;
      j["corners"] = s.corners;
      j["height"] = s.height;
      if (map) j["permutation"] = associated_permutation(phi_map(p, v, d)).values();
      out << j.dump() << '\n';
    } else if (g.format == "csv") {
      out << p.steps() << ',' << s.touchpoints << ',' << s.corners << ',' << s.height;
      if (map) out << ',' << csv_quote(associated_permutation(phi_map(p, v, d)).to_string());
      out << '\n';
    } else {
      out << p.steps() << " touchpoints=" << s.touchpoints << " corners=" << s.corners
          << " height=" << s.height;
      if (map) out << " -> " << associated_permutation(phi_map(p, v, d)).to_string();
      out << '\n';
    }
  });
  return 0;
}

int cmd_packing(const std::string& file, const Globals& g, std::ostream& out) {
  std::ifstream in(file);
  if (!in) throw UsageError("cannot read schedule " + file);
  std::stringstream buf;
  buf << in.rdbuf();
  PackingVerdict verdict;
  try {
    verdict = check_packing(PackingSchedule::from_json(buf.str()));
  } catch (const ScheduleError& e) {
    throw UsageError(e.what());
  }
  if (g.format == "json") {
    ordered_json j;
    j["verdict"] = verdict.safe ? "safe" : "unsafe";
    j["permutation"] = verdict.permutation.values();
    if (verdict.witness) {
      j["witness"] = {{"pattern", verdict.witness->pattern.compact()},
                      {"positions", verdict.witness->positions},
                      {"labels", verdict.witness->labels}};
    }
    out << j.dump() << '\n';
    return 0;
  }
  out << "permutation: " << verdict.permutation.to_string() << '\n';
  if (verdict.safe) {
    out << "safe: avoids 231 and 321, so no two heavier objects land on a lighter one\n";
  } else {
    const auto& w = *verdict.witness;
    out << "unsafe: contains " << w.pattern.compact() << " at positions " << w.positions[0]
        << ',' << w.positions[1] << ',' << w.positions[2] << " (labels " << w.labels[0] << ','
        << w.labels[1] << ',' << w.labels[2]
        << "); avoiding 231 and 321 is sufficient, not necessary, for safe packing\n";
  }
  return 0;
}

std::filesystem::path default_cache_path() {
  if (const char* env = std::getenv("DIAMONDS_OEIS_CACHE")) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME")) {
    return std::filesystem::path(xdg) / "diamonds" / "oeis.json";
  }
  if (const char* home = std::getenv("HOME")) {
    return std::filesystem::path(home) / ".cache" / "diamonds" / "oeis.json";
  }
  return "oeis_cache.json";
}

int cmd_oeis(const std::string& id, const std::string& terms, const std::string& cache_path,
             const std::string& endpoint, const Globals& g, std::ostream& out) {
  if (id.empty() == terms.empty()) throw UsageError("give exactly one of --id or --terms");
  std::string query;
  try {
    query = id.empty() ? normalize_terms_query(terms) : normalize_id_query(id);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  OeisCache cache(cache_path.empty() ? default_cache_path() : std::filesystem::path(cache_path));
  OeisClient client(endpoint, &cache);
  const auto records = client.lookup(query);
  constexpr std::size_t kShownTerms = 10;
  if (g.format == "json") {
    ordered_json arr = ordered_json::array();
    for (const auto& r : records) {
      ordered_json t = ordered_json::array();
      for (std::size_t i = 0; i < std::min(kShownTerms, r.terms.size()); ++i) {
        t.push_back(json_int(r.terms[i]));
      }
      arr.push_back({{"id", r.id}, {"name", r.name}, {"terms", t}});
    }
    out << arr.dump() << '\n';
    return 0;
  }
  for (const auto& r : records) {
    out << r.id << ' ';
    for (std::size_t i = 0; i < std::min(kShownTerms, r.terms.size()); ++i) {
      out << (i ? "," : "") << r.terms[i].str();
    }
    out << ' ' << r.name << '\n';
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Pattern-avoiding diamond posets: counts, descent polynomials, Dyck paths"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_option("--bound", g.bound, "largest label count for unpruned generation");
  app.add_option("--max-avoiders", g.max_avoiders, "stop pruned searches past this many avoiders");
  app.add_option("--parallel", g.parallel, "worker threads for brute-force counting (0 = all)");

  ShapeArgs count_args;
  std::string count_method = "auto";
  auto* count = app.add_subcommand("count", "number of avoiders");
  add_shape_options(count, count_args);
  count->add_option("--method", count_method)->check(CLI::IsMember({"auto", "brute", "formula"}));

  ShapeArgs gfd_args;
  std::string gfd_method = "auto";
  auto* gfd = app.add_subcommand("gfd", "descent generating polynomial");
  add_shape_options(gfd, gfd_args);
  gfd->add_option("--method", gfd_method)->check(CLI::IsMember({"auto", "brute", "formula"}));

  ShapeArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "list avoiders");
  add_shape_options(enumerate, enum_args);

  int table_v = 4;
  int table_dmax = 4;
  bool table_polys = false;
  auto* table = app.add_subcommand("table", "counts for the standard pattern families");
  table->add_option("--v", table_v)->check(CLI::Range(3, 64));
  table->add_option("--dmax", table_dmax)->check(CLI::Range(1, 64));
  table->add_flag("--gfd", table_polys, "descent polynomials instead of counts");

  int dyck_v = 4;
  int dyck_d = 1;
  bool dyck_map = false;
  auto* dyck = app.add_subcommand("dyck", "generalized Dyck paths and their statistics");
  dyck->add_option("--v", dyck_v)->required()->check(CLI::Range(1, 64));
  dyck->add_option("--d", dyck_d)->required()->check(CLI::Range(1, 64));
  dyck->add_flag("--map", dyck_map, "show the matching 132-avoiding permutation");

  std::string schedule_file;
  auto* packing = app.add_subcommand("packing-check", "check a robot packing schedule");
  packing->add_option("schedule", schedule_file)->required();

  std::string oeis_id;
  std::string oeis_terms;
  std::string oeis_cache;
  std::string oeis_endpoint = "https://oeis.org";
  auto* oeis = app.add_subcommand("oeis", "look up a sequence in the OEIS");
  oeis->add_option("--id", oeis_id);
  oeis->add_option("--terms", oeis_terms);
  oeis->add_option("--cache", oeis_cache, "cache file (default ~/.cache/diamonds/oeis.json)");
  oeis->add_option("--endpoint", oeis_endpoint);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*count) return cmd_count(count_args, count_method, g, out);
    if (*gfd) return cmd_gfd(gfd_args, gfd_method, g, out);
    if (*enumerate) return cmd_enumerate(enum_args, g, out);
    if (*table) return cmd_table(table_v, table_dmax, table_polys, g, out);
    if (*dyck) return cmd_dyck(dyck_v, dyck_d, dyck_map, g, out);
    if (*packing) return cmd_packing(schedule_file, g, out);
    if (*oeis) return cmd_oeis(oeis_id, oeis_terms, oeis_cache, oeis_endpoint, g, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InvalidShape& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace diamonds::cli
