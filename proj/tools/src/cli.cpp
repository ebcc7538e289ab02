#include "trivdiag/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "trivdiag/harmonics.hpp"
#include "trivdiag/nabla3.hpp"
#include "trivdiag/parking.hpp"
#include "trivdiag/schur_q3.hpp"
#include "trivdiag/serialize.hpp"
#include "trivdiag/tamari.hpp"

namespace trivdiag::cli {

using nlohmann::json;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  unsigned jobs = 1;
  std::string cache_dir;

  Format output_format() const { return format == "json" ? Format::json : Format::text; }

  std::optional<std::filesystem::path> cache() const {
    if (!cache_dir.empty()) return std::filesystem::path(cache_dir);
    if (const char* env = std::getenv("TAMARI_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    return std::nullopt;
  }
};

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

// Rows of cells, each column padded to its widest cell; the last column is
// left unpadded so lines carry no trailing blanks.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (widths.size() < row.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += i + 1 == row.size() ? row[i] : pad(row[i], widths[i]) + "  ";
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string join(const std::vector<int>& values, const std::string& sep = "") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) out += (i ? sep : "") + std::to_string(values[i]);
  return out;
}

std::string params_text(const json& params) {
  std::string out;
  for (const auto& [key, value] : params.items()) {
    out += (out.empty() ? "" : " ") + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
  }
  return out;
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json schur_json(const std::map<symcore::Partition, Integer>& coeffs) {
  json out = json::object();
  for (const auto& [lambda, c] : coeffs) {
    std::string label = serialize::schur_label(lambda);
    label[0] = 's';
    out[lambda.empty() ? "1" : label] = c.get_str();
  }
  return out;
}

std::string dimensions_text(const harmonics::GradedSpace& space) {
  std::vector<std::vector<std::string>> rows = {{"degree", "dimension"}};
  for (const auto& [d, c] : space.components) {
    if (c.dimension == 0) continue;
    rows.push_back({"(" + std::to_string(d[0]) + "," + std::to_string(d[1]) + "," + std::to_string(d[2]) + ")",
                    std::to_string(c.dimension)});
  }
  return table(rows);
}

json dimensions_json(const harmonics::GradedSpace& space) {
  json out = json::array();
  for (const auto& [d, c] : space.components) {
    if (c.dimension == 0) continue;
    out.push_back({{"degree", d}, {"dimension", c.dimension}});
  }
  return out;
}

// ---- subcommands ----------------------------------------------------------

int run_paths(int n, int r, bool count_only, const Globals& g, std::ostream& out) {
  const auto paths = tamari::enumerate_paths(n, r);
  if (count_only) {
    if (g.output_format() == Format::json) {
      out << dump({{"n", n}, {"r", r}, {"count", paths.size()}});
    } else {
      out << paths.size() << "\n";
    }
    return kExitOk;
  }
  if (g.output_format() == Format::json) {
    json rows = json::array();
    for (const auto& p : paths) {
      rows.push_back({{"path", p.to_string()}, {"area", tamari::area(p)}, {"co", serialize::to_json(tamari::co_path(p))}});
    }
    out << dump({{"n", n}, {"r", r}, {"paths", rows}});
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows = {{"path", "area", "co"}};
  for (const auto& p : paths) rows.push_back({p.to_string(), std::to_string(tamari::area(p)), tamari::co_path(p).to_string()});
  out << table(rows);
  return kExitOk;
}

int run_tamari(int n, int r, const std::vector<std::string>& pair, const Globals& g, std::ostream& out) {
  const auto poset = tamari::build_or_load(n, r, g.cache());
  if (!pair.empty()) {
    auto lookup = [&](const std::string& text) {
      const auto index = poset.index_of(tamari::DyckPath::parse(r, text));
      if (!index) throw UsageError("path " + text + " is not in the poset");
      return *index;
    };
    const std::size_t lower = lookup(pair[0]);
    const std::size_t upper = lookup(pair[1]);
    const bool leq = poset.leq(lower, upper);
    json doc = {{"lower", pair[0]}, {"upper", pair[1]}, {"leq", leq}, {"distance", nullptr}};
    if (leq) doc["distance"] = poset.longest_chain_length(lower, upper);
    if (g.output_format() == Format::json) {
      out << dump(doc);
    } else if (leq) {
      out << pair[0] << " <= " << pair[1] << ", longest chain " << doc["distance"].get<int>() << "\n";
    } else {
      out << pair[0] << " and " << pair[1] << " are not comparable in this order\n";
    }
    return kExitOk;
  }
  const auto polys = poset.all_interval_polys(g.jobs);
  std::size_t total = 0;
  for (std::size_t i = 0; i < poset.size(); ++i) total += poset.interval_count(i);
  auto cover_names = [&](std::size_t i) {
    std::vector<std::string> names;
    for (std::size_t j : poset.up_covers(i)) names.push_back(poset.element(j).to_string());
    return names;
  };
  if (g.output_format() == Format::json) {
    json elements = json::array();
    for (std::size_t i = 0; i < poset.size(); ++i) {
      elements.push_back({{"path", poset.element(i).to_string()},
                          {"interval_count", poset.interval_count(i)},
                          {"interval_poly", polys[i].coeffs},
                          {"up_covers", cover_names(i)}});
    }
    out << dump({{"n", n},
                 {"r", r},
                 {"size", poset.size()},
                 {"top", poset.element(poset.top()).to_string()},
                 {"bottom", poset.element(poset.bottom()).to_string()},
                 {"interval_total", total},
                 {"elements", elements}});
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows = {{"path", "i", "i(q)", "up covers"}};
  for (std::size_t i = 0; i < poset.size(); ++i) {
    std::string covers;
    for (const auto& name : cover_names(i)) covers += (covers.empty() ? "" : " ") + name;
    rows.push_back({poset.element(i).to_string(), std::to_string(poset.interval_count(i)), polys[i].to_string(),
                    covers.empty() ? "-" : covers});
  }
  out << table(rows);
  out << "elements " << poset.size() << ", intervals " << total << "\n";
  return kExitOk;
}

int run_parking(int n, int r, const std::string& shape, bool count_only, const std::string& reading, const Globals& g,
                std::ostream& out) {
  const auto order = reading == "diagonals" ? parking::ReadingOrder::diagonals : parking::ReadingOrder::rows;
  const auto functions =
      shape.empty() ? parking::all_parking(n, r) : parking::pf_of_shape(tamari::DyckPath::parse(r, shape));
  if (count_only) {
    if (g.output_format() == Format::json) {
      json doc = {{"r", r}, {"count", functions.size()}};
      if (shape.empty()) {
        doc["n"] = n;
      } else {
        doc["shape"] = shape;
      }
      out << dump(doc);
    } else {
      out << functions.size() << "\n";
    }
    return kExitOk;
  }
  if (g.output_format() == Format::json) {
    json rows = json::array();
    for (const auto& f : functions) {
      auto row = serialize::parking_row(f);
      row["reading_co"] = serialize::to_json(f.reading_composition(order));
      rows.push_back(std::move(row));
    }
    out << dump({{"r", r}, {"reading", reading}, {"functions", rows}});
    return kExitOk;
  }
  std::vector<std::vector<std::string>> rows = {{"f", "shape", "co", "reading co", "dinv"}};
  for (const auto& f : functions) {
    rows.push_back({join(f.values()), join(f.beta()), f.descent_composition().to_string(),
                    f.reading_composition(order).to_string(), std::to_string(f.dinv())});
  }
  out << table(rows);
  return kExitOk;
}

struct HarmonicsArgs {
  int n = 0;
  bool hilbert = false;
  bool frobenius = false;
  bool closure = false;
  int higher = 0;
  int cutoff = -1;
};

int run_harmonics(const HarmonicsArgs& a, const Globals& g, std::ostream& out) {
  const bool json_out = g.output_format() == Format::json;
  if (a.higher > 0) {
    const int cutoff = a.cutoff >= 0 ? a.cutoff : a.higher * a.n * (a.n - 1) / 2 + 1;
    const auto h = harmonics::higher_space(a.n, a.higher, cutoff);
    const auto hilbert = harmonics::hilbert_series(h.space);
    const auto schur = symcore::schur_decompose_q3(hilbert);
    if (json_out) {
      out << dump({{"n", a.n},
                   {"r", a.higher},
                   {"cutoff", cutoff},
                   {"degrees", dimensions_json(h.space)},
                   {"hilbert", serialize::to_json(hilbert)},
                   {"schur", schur_json(schur)},
                   {"total_dimension", h.space.total_dimension()},
                   {"invariant_dim", h.twisted_invariant_dim},
                   {"alternant_dim", h.twisted_alternant_dim},
                   {"top_degree_certified", h.top_degree_certified},
                   {"warning", h.warning}});
    } else {
      out << dimensions_text(h.space);
      out << "Hilbert series: " << hilbert.to_string() << "\n";
      out << "Schur: " << symcore::schur_q3_string(schur) << "\n";
      out << "total " << h.space.total_dimension() << ", invariant " << h.twisted_invariant_dim << ", alternant "
          << h.twisted_alternant_dim << "\n";
      if (!h.warning.empty()) out << "warning: " << h.warning << "\n";
    }
    return kExitOk;
  }
  harmonics::GradedSpace space;
  if (a.closure) {
    space = harmonics::closure_space(a.n);
  } else {
    harmonics::KernelOptions options;
    options.jobs = g.jobs;
    options.keep_basis = false;
    options.compute_traces = a.frobenius;
    space = harmonics::kernel_space(a.n, options);
  }
  const auto hilbert = harmonics::hilbert_series(space);
  const auto schur = symcore::schur_decompose_q3(hilbert);
  json doc = {{"n", a.n},
              {"space", a.closure ? "closure" : "kernel"},
              {"degrees", dimensions_json(space)},
              {"hilbert", serialize::to_json(hilbert)},
              {"schur", schur_json(schur)},
              {"total_dimension", space.total_dimension()}};
  std::string text = dimensions_text(space);
  text += "Hilbert series: " + hilbert.to_string() + "\n";
  text += "Schur: " + symcore::schur_q3_string(schur) + "\n";
  text += "total " + std::to_string(space.total_dimension()) + "\n";
  if (a.frobenius) {
    json frob = json::object();
    std::vector<std::vector<std::string>> rows;
    for (const auto& [lambda, q] : harmonics::graded_frobenius(space)) {
      const auto decomposition = symcore::schur_decompose_q3(q);
      frob[serialize::schur_label(lambda)] = schur_json(decomposition);
      rows.push_back({serialize::schur_label(lambda), symcore::schur_q3_string(decomposition)});
    }
    // partitions sort ascending; list from (n) down to (1^n)
    std::reverse(rows.begin(), rows.end());
    doc["frobenius"] = frob;
    text += "Frobenius:\n" + table(rows);
  }
  out << (json_out ? dump(doc) : text);
  return kExitOk;
}

int run_nabla3(int r, bool at_q111, const Globals& g, std::ostream& out) {
  const auto h = nabla3::h3(r);
  if (at_q111) {
    const auto values = nabla3::specialize_q111(h);
    if (g.output_format() == Format::json) {
      out << dump({{"r", r}, {"S3", values[0].get_str()}, {"S21", values[1].get_str()}, {"S111", values[2].get_str()}});
    } else {
      out << "(" << values[0] << ", " << values[1] << ", " << values[2] << ")\n";
    }
    return kExitOk;
  }
  if (g.output_format() == Format::json) {
    json doc = serialize::to_json(h);
    doc["r"] = r;
    out << dump(doc);
  } else {
    out << serialize::frob_string(h) << "\n";
  }
  return kExitOk;
}

struct VerifyArgs {
  std::vector<std::string> names;
  std::optional<int> n;
  std::optional<int> r;
  std::optional<std::string> a;
  std::optional<int> b;
  std::optional<int> order;
  bool list = false;
  bool timing = false;
};

int run_verify(const VerifyArgs& v, const Globals& g, std::ostream& out) {
  if (v.list) {
    for (const auto& name : verify::identity_names()) out << name << "\n";
    return kExitOk;
  }
  if (v.names.empty()) throw UsageError("verify needs an identity name or 'all'");
  std::vector<verify::VerificationReport> reports;
  const bool series_params = v.a || v.b || v.order;
  if (series_params) {
    if (v.names != std::vector<std::string>{"gen-series"}) throw UsageError("--a, --b and --order apply to gen-series only");
    Rational a;
    try {
      a = parse_rational(v.a.value_or("1"));
    } catch (const std::exception&) {
      throw UsageError("--a expects a rational number");
    }
    reports.push_back(verify::gen_series_identity(a, v.b.value_or(2), v.order.value_or(12)));
  } else {
    verify::RunConfig config;
    config.names = v.names;
    config.n = v.n;
    config.r = v.r;
    config.jobs = g.jobs;
    config.cache_dir = g.cache();
    try {
      reports = verify::run_all(config);
    } catch (const verify::UnknownIdentity& e) {
      throw UsageError(e.what());
    }
  }
  if (v.timing && g.output_format() == Format::json) {
    json doc = json::array();
    for (const auto& report : reports) doc.push_back(serialize::to_json(report, true));
    out << dump(doc);
  } else {
    out << render(reports, g.output_format());
  }
  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& report) { return report.pass; });
  return all_pass ? kExitOk : kExitFailed;
}

}  // namespace

std::string render(const std::vector<verify::VerificationReport>& reports, Format format) {
  if (format == Format::json) {
    json doc = json::array();
    for (const auto& report : reports) doc.push_back(serialize::to_json(report));
    return dump(doc);
  }
  std::vector<std::vector<std::string>> rows;
  std::size_t failed = 0;
  for (const auto& report : reports) {
    if (!report.pass) ++failed;
    std::string relation;
    if (report.kind == "erratum") {
      relation = report.lhs + " vs " + report.rhs + (report.pass ? " (disagreement reproduced)" : "");
    } else {
      relation = report.lhs + (report.pass ? " = " : " != ") + report.rhs;
    }
    if (!report.witness.empty()) relation += "  [" + report.witness + "]";
    if (!report.convention.empty()) relation += "  {" + report.convention + "}";
    rows.push_back({report.pass ? "PASS" : "FAIL", report.name, params_text(report.params), relation});
  }
  std::string out = table(rows);
  out += std::to_string(reports.size() - failed) + " passed, " + std::to_string(failed) + " failed\n";
  return out;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tamari intervals, parking functions and diagonal harmonics", "trivdiag"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--jobs", g.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", g.cache_dir, "Poset cache directory (default: $TAMARI_CACHE_DIR)");

  int n = 0;
  int r = 1;
  bool count_only = false;

  auto* paths = app.add_subcommand("paths", "List r-Dyck paths");
  paths->add_option("--n", n, "Height")->required()->check(CLI::PositiveNumber);
  paths->add_option("--r", r, "Slope parameter")->check(CLI::PositiveNumber);
  paths->add_flag("--count", count_only, "Print the number of paths only");

  std::vector<std::string> pair;
  auto* tamari_cmd = app.add_subcommand("tamari", "Tamari order, interval counts and interval polynomials");
  tamari_cmd->add_option("--n", n, "Height")->required()->check(CLI::PositiveNumber);
  tamari_cmd->add_option("--r", r, "Slope parameter")->check(CLI::PositiveNumber);
  tamari_cmd->add_option("--compare", pair, "LOWER UPPER: comparability and longest chain")->expected(2);

  std::string shape;
  std::string reading = "rows";
  auto* parking_cmd = app.add_subcommand("parking", "List r-parking functions with their statistics");
  parking_cmd->add_option("--n", n, "Length")->check(CLI::PositiveNumber);
  parking_cmd->add_option("--r", r, "Slope parameter")->check(CLI::PositiveNumber);
  parking_cmd->add_option("--shape", shape, "Restrict to one shape, e.g. 0012");
  parking_cmd->add_option("--reading", reading, "Reading order for the reading composition")
      ->check(CLI::IsMember({"rows", "diagonals"}));
  parking_cmd->add_flag("--count", count_only, "Print the number of functions only");

  HarmonicsArgs h;
  auto* harmonics_cmd = app.add_subcommand("harmonics", "Trivariate diagonal harmonics");
  harmonics_cmd->add_option("--n", h.n, "Number of variables per set")->required()->check(CLI::Range(1, 6));
  auto* hilbert_flag = harmonics_cmd->add_flag("--hilbert", h.hilbert, "Hilbert series of the kernel (default)");
  auto* frob_flag = harmonics_cmd->add_flag("--frobenius", h.frobenius, "Graded Frobenius characteristic");
  auto* closure_flag = harmonics_cmd->add_flag("--closure", h.closure, "Operator closure of the Vandermonde");
  auto* higher_opt = harmonics_cmd->add_option("--higher", h.higher, "Higher space for this r")->check(CLI::PositiveNumber);
  harmonics_cmd->add_option("--cutoff", h.cutoff, "Largest total degree for --higher")->check(CLI::NonNegativeNumber);
  hilbert_flag->excludes(frob_flag)->excludes(closure_flag)->excludes(higher_opt);
  frob_flag->excludes(closure_flag)->excludes(higher_opt);
  closure_flag->excludes(higher_opt);

  bool at_q111 = false;
  auto* nabla_cmd = app.add_subcommand("nabla3", "Iterated nabla on degree-3 Schur functions");
  nabla_cmd->add_option("--r", r, "Power of nabla applied to e_3")->check(CLI::PositiveNumber);
  nabla_cmd->add_flag("--at-q111", at_q111, "Specialize q1 = q2 = q3 = 1");

  VerifyArgs v;
  std::string a_text;
  auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
  verify_cmd->add_option("names", v.names, "Identity names or 'all'");
  auto* n_opt = verify_cmd->add_option("--n", n, "Fix n")->check(CLI::PositiveNumber);
  auto* r_opt = verify_cmd->add_option("--r", r, "Fix r")->check(CLI::PositiveNumber);
  auto* a_opt = verify_cmd->add_option("--a", a_text, "gen-series parameter a (rational)");
  int b = 2;
  int order = 12;
  auto* b_opt = verify_cmd->add_option("--b", b, "gen-series parameter b")->check(CLI::Range(1, 64));
  auto* order_opt = verify_cmd->add_option("--order", order, "gen-series truncation order")->check(CLI::Range(1, 64));
  verify_cmd->add_flag("--list", v.list, "List identity names");
  verify_cmd->add_flag("--timing", v.timing, "Include runtimes in JSON output");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (paths->parsed()) return run_paths(n, r, count_only, g, out);
    if (tamari_cmd->parsed()) return run_tamari(n, r, pair, g, out);
    if (parking_cmd->parsed()) {
      if (shape.empty() && n < 1) throw UsageError("parking needs --n or --shape");
      return run_parking(n, r, shape, count_only, reading, g, out);
    }
    if (harmonics_cmd->parsed()) return run_harmonics(h, g, out);
    if (nabla_cmd->parsed()) return run_nabla3(r, at_q111, g, out);
    if (verify_cmd->parsed()) {
      if (*n_opt) v.n = n;
      if (*r_opt) v.r = r;
      if (*a_opt) v.a = a_text;
      if (*b_opt) v.b = b;
      if (*order_opt) v.order = order;
      return run_verify(v, g, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace trivdiag::cli
