#include "lozenge/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>

#include "lozenge/closed_forms.hpp"
#include "lozenge/errors.hpp"
#include "lozenge/identities.hpp"
#include "lozenge/region_json.hpp"
#include "lozenge/render.hpp"

namespace lozenge::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RegionArgs {
  std::string family;
  int a = 0, b = 0, c = 0;
  std::string region_file;

  void attach(CLI::App* cmd) {
    cmd->add_option("--family", family, "hexagon, P, Pprime, S, Sprime or STDH");
    cmd->add_option("--a", a, "first parameter");
    cmd->add_option("--b", b, "second parameter");
    cmd->add_option("--c", c, "third parameter");
    cmd->add_option("--region", region_file, "region JSON file (custom region)");
  }

  bool custom() const { return !region_file.empty(); }

  RegionSpec spec() const {
    if (custom()) {
      if (!family.empty()) throw UsageError("--family and --region are mutually exclusive");
      return {Family::Custom, 0, 0, 0};
    }
    if (family.empty()) throw UsageError("one of --family or --region is required");
    const auto f = parse_family(family);
    if (!f || *f == Family::Custom) throw UsageError("unknown family '" + family + "'");
    RegionSpec s{*f, a, b, c};
    validate(s);
    return s;
  }

  Region region() const { return custom() ? load_region_file(region_file) : build(spec()); }
};

struct Range {
  int lo = 0, hi = 0;
};

std::map<char, Range> parse_ranges(const std::string& text) {
  static const std::regex item(R"(\s*([abc])\s*=\s*(-?\d+)(?:\.\.(-?\d+))?\s*)");
  std::map<char, Range> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    std::smatch m;
    if (!std::regex_match(part, m, item)) throw UsageError("bad range item '" + part + "'");
    Range r{std::stoi(m[2]), m[3].matched ? std::stoi(m[3]) : std::stoi(m[2])};
    if (r.lo > r.hi) throw UsageError("empty range '" + part + "'");
    if (!out.emplace(m[1].str()[0], r).second) throw UsageError("range for " + m[1].str() + " given twice");
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

CheckMode parse_mode(const std::string& s) {
  if (s == "engine") return CheckMode::Engine;
  if (s == "formula") return CheckMode::Formula;
  return CheckMode::Both;
}

std::string limit_hint(const LimitExceeded& e) {
  return std::string("resource limit: ") + e.what();
}

int cmd_count(const RegionArgs& ra, const std::string& engine, const std::string& output, std::ostream& out) {
  const RegionSpec spec = ra.spec();
  if (engine == "formula" && spec.family == Family::Custom)
    throw UsageError("the formula engine needs a named family");
  const auto t0 = std::chrono::steady_clock::now();
  Rational value;
  if (engine == "formula") {
    value = formula_value(spec);
  } else {
    const Region r = ra.region();
    value = engine == "brute" ? count_bruteforce(r) : count_dp(r);
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  if (output == "json") {
    nlohmann::json j = {{"family", family_name(spec.family)}, {"engine", engine}, {"value", value.to_string()},
                        {"elapsed_ms", ms}};
    if (spec.family == Family::Custom)
      j["region"] = ra.region_file;
    else
      j["params"] = {{"a", spec.a}, {"b", spec.b}, {"c", spec.c}};
    out << j.dump() << '\n';
  } else {
    out << value.to_string() << '\n';
  }
  return kOk;
}

// Tuples of a --range box outside this set are skipped rather than reported.
bool in_domain(const std::string& id, const Triple& t) {
  if (t.a < 0 || t.b < 0 || t.c < 0) return false;
  if (id == "macmahon") return true;
  if (id == "kuo" || id == "recurrence" || id == "bigrec") return t.a >= 1 && t.b >= 2 && t.a <= t.b;
  if (id == "factorization") return t.b >= 1 && t.a <= t.b;
  return t.a <= t.b + 1;
}

bool needs_geometry(const std::string& id) { return id == "kuo" || id == "splitting" || id == "factorization"; }

std::vector<CheckReport> splitting_reports(const std::vector<Triple>& tuples, bool corrupt) {
  std::vector<CheckReport> out;
  for (const Triple& t : tuples) {
    const Region g = build_S(1, 1, t.c);
    SplitCut cut = s11_top_rows_cut(t.c);
    if (corrupt) {
      // Pull one Down cell of the third strip into H; its Up neighbours stay outside.
      const TriCell moved = down_cell(2, 1);
      cut = make_cut(g, [&] {
        auto h = cut.h;
        h.push_back(g.contains(moved) ? moved : cut.complement.front());
        return h;
      }(), cut.v1);
    }
    CheckReport r;
    try {
      r = check_graph_splitting(g, cut);
    } catch (const DomainError& e) {
      r.identity = "splitting";
      r.pass = false;
      r.detail = e.what();
    }
    r.a = 1;
    r.b = 1;
    r.c = t.c;
    out.push_back(std::move(r));
  }
  return out;
}

int cmd_verify(const std::string& id, const std::string& range_text, const std::string& mode_text,
               unsigned threads, bool corrupt, std::ostream& out, std::ostream& err) {
  static const std::set<std::string> known{"kuo",           "recurrence",    "bigrec", "splitting",
                                           "factorization", "base-cases",    "theorem-main",
                                           "theorem-weighted", "proctor",    "ciucu",  "macmahon"};
  if (!known.count(id)) throw UsageError("unknown identity '" + id + "'");
  std::string mode_name = mode_text;
  if (mode_name.empty()) mode_name = needs_geometry(id) ? "engine" : "formula";
  if (mode_name == "formula" && needs_geometry(id))
    throw UsageError("identity '" + id + "' needs region geometry; use --mode engine");
  const CheckMode mode = parse_mode(mode_name);
  if (corrupt && id != "splitting") throw UsageError("--corrupt-fixture applies to splitting only");

  const auto ranges = range_text.empty() ? std::map<char, Range>{} : parse_ranges(range_text);
  auto axis = [&](char k, Range fallback, bool required) {
    auto it = ranges.find(k);
    if (it != ranges.end()) return it->second;
    if (required) throw UsageError(std::string("--range needs a value for ") + k);
    return fallback;
  };
  const bool fixed = id == "splitting" || id == "base-cases";
  const Range ra = axis('a', {0, 6}, !fixed), rb = axis('b', {0, 6}, !fixed), rc = axis('c', {0, 6}, !fixed);
  const auto tuples =
      grid(ra.lo, ra.hi, rb.lo, rb.hi, rc.lo, rc.hi, [&](const Triple& t) { return in_domain(id, t); });

  std::vector<CheckReport> reports;
  if (id == "splitting") {
    reports = splitting_reports(grid(0, 0, 0, 0, rc.lo, std::min(rc.hi, 6)), corrupt);
  } else if (id == "base-cases") {
    for (CheckReport& r : check_base_cases(6))
      if (r.a >= ra.lo && r.a <= ra.hi && r.b >= rb.lo && r.b <= rb.hi && r.c >= rc.lo && r.c <= rc.hi)
        reports.push_back(std::move(r));
  } else {
    std::function<CheckReport(const Triple&)> check;
    if (id == "kuo") {
      check = [](const Triple& t) {
        CheckReport r = check_kuo(build_kuo_host(t.a, t.b, t.c), kuo_quadruple(t.a, t.b, t.c));
        r.a = t.a;
        r.b = t.b;
        r.c = t.c;
        return r;
      };
    } else if (id == "recurrence") {
      check = [mode](const Triple& t) { return check_recurrence(t.a, t.b, t.c, mode); };
    } else if (id == "bigrec") {
      if (mode == CheckMode::Engine) throw UsageError("bigrec is a closed-form identity; use --mode formula");
      check = [](const Triple& t) { return check_bigrec(t.a, t.b, t.c); };
    } else if (id == "factorization") {
      check = [](const Triple& t) { return check_factorization(t.a, t.b, t.c); };
    } else {
      static const std::map<std::string, Family> fam{{"theorem-main", Family::S},
                                                     {"theorem-weighted", Family::SPrime},
                                                     {"proctor", Family::P},
                                                     {"ciucu", Family::PPrime},
                                                     {"macmahon", Family::Hexagon}};
      const Family f = fam.at(id);
      check = [f, mode](const Triple& t) { return check_family(f, t.a, t.b, t.c, mode); };
    }
    reports = run_grid(tuples, check, id, threads);
  }

  if (reports.empty()) throw UsageError("no parameter tuples selected");
  bool all = true;
  for (const CheckReport& r : reports) {
    out << r.to_json().dump() << '\n';
    all = all && r.pass;
  }
  if (!all) err << "verification failed\n";
  return all ? kOk : kVerifyFailed;
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

int cmd_render(const RegionArgs& ra, std::optional<std::size_t> index, std::size_t max_tilings,
               const std::string& path, std::ostream& out) {
  const Region r = ra.region();
  std::optional<Tiling> tiling;
  if (index) {
    auto all = enumerate_tilings(r, max_tilings);
    if (*index >= all.size())
      throw UsageError("tiling index " + std::to_string(*index) + " out of range (" + std::to_string(all.size()) +
                       " tilings)");
    tiling = std::move(all[*index]);
  }
  write_text(path, render_svg(r, tiling), out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lozenge tilings of dented hexagons: exact counts and identity checks", "lozenge"};
  app.require_subcommand(1);

  RegionArgs count_args;
  std::string engine = "dp", output = "plain";
  auto* count = app.add_subcommand("count", "Count tilings (weighted) of a region");
  count_args.attach(count);
  count->add_option("--engine", engine)->check(CLI::IsMember({"brute", "dp", "formula"}));
  count->add_option("--output", output)->check(CLI::IsMember({"plain", "json"}));

  std::string identity, range, mode;
  unsigned threads = 0;
  bool corrupt = false;
  auto* verify = app.add_subcommand("verify", "Check an identity over a parameter grid");
  verify->add_option("--identity", identity)->required();
  verify->add_option("--range", range, "e.g. a=0..3,b=0..3,c=0..3");
  verify->add_option("--mode", mode)->check(CLI::IsMember({"engine", "formula", "both"}));
  verify->add_option("--threads", threads, "worker threads (0 = all cores)");
  verify->add_flag("--corrupt-fixture", corrupt, "use a cut that violates the separating condition");

  RegionArgs render_args;
  std::optional<std::size_t> tiling_index;
  std::size_t max_tilings = 100000;
  std::string render_out;
  auto* render = app.add_subcommand("render", "Draw a region as SVG");
  render_args.attach(render);
  render->add_option("--tiling", tiling_index, "draw the tiling with this index");
  render->add_option("--max-tilings", max_tilings, "enumeration limit for --tiling");
  render->add_option("--out", render_out, "output file (default stdout)");

  RegionArgs export_args;
  std::string export_out;
  auto* exp = app.add_subcommand("export", "Write a region as JSON");
  export_args.attach(exp);
  exp->add_option("--out", export_out, "output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*count) return cmd_count(count_args, engine, output, out);
    if (*verify) return cmd_verify(identity, range, mode, threads, corrupt, out, err);
    if (*render) return cmd_render(render_args, tiling_index, max_tilings, render_out, out);
    write_text(export_out, dump_region(export_args.region()) + "\n", out);
    return kOk;
  } catch (const LimitExceeded& e) {
    err << limit_hint(e) << '\n';
    return kLimit;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return kUsage;
  } catch (const FormatError& e) {
    err << "bad region file: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace lozenge::cli
