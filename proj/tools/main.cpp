// Command-line front end: enumerate / stat / shift / orbit / syt / verify.
//
// Exit codes: 0 success, 1 domain failure (invalid path text, wrong shape,
// failed verification, ...), 2 usage error. Payload goes to stdout,
// diagnostics to stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "motzcyc/motzcyc.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace motzcyc;

constexpr const char* kCeilingEnvVar = "MOTZCYC_VERIFY_CEILING";
constexpr int kDefaultCeiling = 12;

// Text display of a possibly-empty set ("-" keeps columns visible).
std::string display(const std::string& serialized) {
  return serialized.empty() ? "-" : serialized;
}

std::string display_path(const MotzkinPath& m) {
  return m.empty() ? "(empty)" : m.str();
}

StepOrder parse_order_arg(const std::string& text) {
  const auto order = order_from_string(text);
  if (!order) throw Error("unknown step order \"" + text + "\"");
  return *order;
}

json members_json(const std::vector<int>& members) {
  return json(members);
}

// Compact cDes rendering for orbit summaries: digit concatenation while every
// member is a single digit, brace-delimited sets otherwise.
std::string compact_cdes(const CyclicDescentSet& cd) {
  if (cd.n() <= 9) {
    std::string out;
    for (int v : cd.members()) out += std::to_string(v);
    return out;
  }
  return "{" + cd.str() + "}";
}

void emit(const std::string& format, const std::string& text, const json& doc) {
  if (format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

struct EnumerateOptions {
  int n = 0;
  std::optional<int> horizontal;
  std::string order = "UDL";
  std::string format = "text";
  bool ascii = false;
};

void run_enumerate(const EnumerateOptions& opt) {
  const StepOrder order = parse_order_arg(opt.order);
  const auto paths = opt.horizontal
                         ? enumerate_paths_fixed_horizontal(opt.n, *opt.horizontal)
                         : enumerate_paths(opt.n);
  std::string text;
  json items = json::array();
  for (const auto& m : paths) {
    const DescentSet des = descent_set(m, order);
    std::optional<CyclicDescentSet> cdes;
    if (!m.all_level()) cdes = cyclic_descent_set(m, order);

    if (opt.ascii && !m.empty()) text += render_ascii(m) + "\n";
    text += display_path(m) + "  des " + display(des.str()) + "  cdes " +
            (cdes ? display(cdes->str()) : "n/a (all-level path)") + "\n";

    json item;
    item["path"] = m.str();
    item["des"] = members_json(des.members());
    item["cdes"] = cdes ? members_json(cdes->members()) : json(nullptr);
    item["all_level"] = m.all_level();
    if (opt.ascii) item["ascii"] = render_ascii(m);
    items.push_back(std::move(item));
  }
  text += "count " + std::to_string(paths.size()) + "\n";

  json doc;
  doc["command"] = "enumerate";
  doc["n"] = opt.n;
  doc["horizontal"] = opt.horizontal ? json(*opt.horizontal) : json(nullptr);
  doc["order"] = to_string(order);
  doc["count"] = paths.size();
  doc["paths"] = std::move(items);
  emit(opt.format, text, doc);
}

struct StatOptions {
  std::string path;
  std::string order = "UDL";
  bool want_des = false;
  bool want_cdes = false;
  std::string format = "text";
  bool ascii = false;
};

void run_stat(const StatOptions& opt) {
  const StepOrder order = parse_order_arg(opt.order);
  const MotzkinPath m = MotzkinPath::parse(opt.path);
  std::string serialized;
  std::vector<int> members;
  if (opt.want_cdes) {
    const CyclicDescentSet cd = cyclic_descent_set(m, order);
    serialized = cd.str();
    members = cd.members();
  } else {
    const DescentSet d = descent_set(m, order);
    serialized = d.str();
    members = d.members();
  }

  std::string text;
  if (opt.ascii && !m.empty()) text += render_ascii(m) + "\n";
  text += display(serialized) + "\n";

  json doc;
  doc["command"] = "stat";
  doc["path"] = m.str();
  doc["n"] = m.size();
  doc["order"] = to_string(order);
  doc["statistic"] = opt.want_cdes ? "cdes" : "des";
  doc["members"] = members_json(members);
  if (opt.ascii) doc["ascii"] = render_ascii(m);
  emit(opt.format, text, doc);
}

struct ShiftOptions {
  std::string path;
  std::string order = "UDL";
  int times = 1;
  bool inverse = false;
  std::string format = "text";
  bool ascii = false;
};

void run_shift(const ShiftOptions& opt) {
  const StepOrder order = parse_order_arg(opt.order);
  const MotzkinPath input = MotzkinPath::parse(opt.path);
  MotzkinPath result = input;
  for (int i = 0; i < opt.times; ++i)
    result = opt.inverse ? shift_inverse(result, order) : shift(result, order);
  const CyclicDescentSet before = cyclic_descent_set(input, order);
  const CyclicDescentSet after = cyclic_descent_set(result, order);

  std::string text;
  if (opt.ascii && !result.empty()) text += render_ascii(result) + "\n";
  text += result.str() + "\n";
  text += "cdes " + display_path(input) + " = " + display(before.str()) + "\n";
  text += "cdes " + display_path(result) + " = " + display(after.str()) + "\n";

  json doc;
  doc["command"] = "shift";
  doc["order"] = to_string(order);
  doc["times"] = opt.times;
  doc["inverse"] = opt.inverse;
  doc["input"] = input.str();
  doc["output"] = result.str();
  doc["cdes_before"] = members_json(before.members());
  doc["cdes_after"] = members_json(after.members());
  emit(opt.format, text, doc);
}

struct OrbitOptions {
  std::string path;
  std::string syt;
  bool promotion = false;
  std::string order = "UDL";
  std::string format = "text";
};

void run_orbit(const OrbitOptions& opt) {
  std::string text;
  json elements = json::array();
  int length = 0;
  std::string start;
  std::vector<CyclicDescentSet> sequence;

  if (!opt.syt.empty()) {
    const SkewTableau t = SkewTableau::parse(opt.syt, ShapeHint::Strip);
    const auto family_size = enumerate_syt(t.shape()).size();
    const auto rec = orbit(
        t, [](const SkewTableau& x) { return promotion(x); },
        [](const SkewTableau& x) { return cyclic_descent_set_3row(x); },
        static_cast<long long>(family_size));
    start = t.str();
    length = rec.length();
    sequence = rec.cdes_sequence;
    for (int i = 0; i < rec.length(); ++i) {
      const auto& e = rec.elements[static_cast<std::size_t>(i)];
      text += e.str() + "  cdes " +
              display(rec.cdes_sequence[static_cast<std::size_t>(i)].str()) + "\n";
      json item;
      item["element"] = e.str();
      item["cdes"] =
          members_json(rec.cdes_sequence[static_cast<std::size_t>(i)].members());
      elements.push_back(std::move(item));
    }
  } else {
    const StepOrder order = parse_order_arg(opt.order);
    const MotzkinPath m = MotzkinPath::parse(opt.path);
    const auto rec = orbit(
        m, [order](const MotzkinPath& x) { return shift(x, order); },
        [order](const MotzkinPath& x) { return cyclic_descent_set(x, order); },
        static_cast<long long>(motzkin_number(m.size())));
    start = m.str();
    length = rec.length();
    sequence = rec.cdes_sequence;
    for (int i = 0; i < rec.length(); ++i) {
      const auto& e = rec.elements[static_cast<std::size_t>(i)];
      text += e.str() + "  cdes " +
              display(rec.cdes_sequence[static_cast<std::size_t>(i)].str()) + "\n";
      json item;
      item["element"] = e.str();
      item["cdes"] =
          members_json(rec.cdes_sequence[static_cast<std::size_t>(i)].members());
      elements.push_back(std::move(item));
    }
  }

  text += "length " + std::to_string(length) + "\n";
  std::string compact;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i) compact.push_back(',');
    compact += compact_cdes(sequence[i]);
  }
  text += "cdes sequence " + compact + "\n";

  json doc;
  doc["command"] = "orbit";
  doc["kind"] = opt.syt.empty() ? "path" : "tableau";
  doc["start"] = start;
  if (opt.syt.empty()) doc["order"] = opt.order;
  doc["length"] = length;
  doc["elements"] = std::move(elements);
  emit(opt.format, text, doc);
}

struct SytOptions {
  std::string action;
  std::string argument;
  std::string format = "text";
};

void run_syt(const SytOptions& opt) {
  json doc;
  doc["command"] = "syt";
  doc["action"] = opt.action;
  doc["input"] = opt.argument;
  std::string text;

  if (opt.action == "gamma") {
    const MotzkinPath m = MotzkinPath::parse(opt.argument);
    const SkewTableau t = gamma(m);
    const DescentSet des = descent_set_syt(t);
    text = t.str() + "\ndes " + display(des.str()) + "\n";
    doc["output"] = t.str();
    doc["shape"] = t.shape().str();
    doc["des"] = members_json(des.members());
  } else if (opt.action == "ungamma") {
    const SkewTableau t = SkewTableau::parse(opt.argument, ShapeHint::Strip);
    const MotzkinPath m = gamma_inverse(t);
    text = display_path(m) + "\n";
    doc["output"] = m.str();
  } else if (opt.action == "rectify") {
    const SkewTableau t = SkewTableau::parse(opt.argument);
    const SkewTableau flat = rectify(t);
    text = flat.str() + "\n";
    doc["output"] = flat.str();
    doc["shape"] = flat.shape().str();
  } else if (opt.action == "promote") {
    const SkewTableau t = SkewTableau::parse(opt.argument);
    const SkewTableau next = promotion(t);
    text = next.str() + "\n";
    doc["output"] = next.str();
    doc["shape"] = next.shape().str();
  } else {
    throw Error("unknown syt action \"" + opt.action + "\"");
  }
  emit(opt.format, text, doc);
}

struct VerifyOptions {
  std::string suite = "all";
  int n_min = 3;
  int n_max = 10;
  std::string report_path;
  std::string format = "text";
};

json report_json(const VerificationReport& rep) {
  json r;
  r["suite"] = rep.suite;
  r["params"] = rep.params;
  r["cases_checked"] = rep.cases_checked;
  r["passed"] = rep.passed();
  r["expected_failure"] = rep.expected_failure;
  r["elapsed_seconds"] = rep.elapsed_seconds;
  json failures = json::array();
  for (const auto& f : rep.failures) {
    json fj;
    fj["witness"] = f.witness;
    fj["check"] = f.check;
    fj["expected"] = f.expected;
    fj["actual"] = f.actual;
    failures.push_back(std::move(fj));
  }
  r["failures"] = std::move(failures);
  return r;
}

int run_verify(const VerifyOptions& opt) {
  const auto reports = run_suites(opt.suite, opt.n_min, opt.n_max);

  std::string text;
  long long passed = 0, expected = 0, failed = 0;
  for (const auto& rep : reports) {
    const char* tag = rep.passed() ? "[PASS]"
                                   : (rep.expected_failure ? "[XFAIL]" : "[FAIL]");
    if (rep.passed()) ++passed;
    else if (rep.expected_failure) ++expected;
    else ++failed;
    text += std::string(tag) + " " + rep.suite + " " + rep.params + "  cases " +
            std::to_string(rep.cases_checked) + "\n";
    if (!rep.passed()) {
      const std::size_t shown = std::min<std::size_t>(rep.failures.size(), 5);
      for (std::size_t i = 0; i < shown; ++i) {
        const auto& f = rep.failures[i];
        text += "  witness " + f.witness + ": " + f.check + " expected " +
                display(f.expected) + " got " + display(f.actual) + "\n";
      }
      if (rep.failures.size() > shown)
        text += "  ... and " + std::to_string(rep.failures.size() - shown) +
                " more\n";
      if (rep.expected_failure)
        text += "  expected failure: no non-Escher extension exists at n=2\n";
    }
  }
  text += "suites " + std::to_string(reports.size()) + "  passed " +
          std::to_string(passed) + "  expected-fail " + std::to_string(expected) +
          "  failed " + std::to_string(failed) + "\n";

  json doc;
  doc["command"] = "verify";
  doc["suite"] = opt.suite;
  doc["n_min"] = opt.n_min;
  doc["n_max"] = opt.n_max;
  doc["passed"] = all_acceptable(reports);
  doc["expected_failures"] = expected;
  json rj = json::array();
  for (const auto& rep : reports) rj.push_back(report_json(rep));
  doc["reports"] = std::move(rj);

  if (!opt.report_path.empty()) {
    std::ofstream out(opt.report_path);
    if (!out) throw Error("cannot write report to " + opt.report_path);
    out << doc.dump(2) << "\n";
  }
  emit(opt.format, text, doc);
  return all_acceptable(reports) ? 0 : 1;
}

int verify_ceiling() {
  if (const char* raw = std::getenv(kCeilingEnvVar)) {
    try {
      const int v = std::stoi(raw);
      if (v >= 0) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring bad " << kCeilingEnvVar << "=\"" << raw
              << "\"\n";
  }
  return kDefaultCeiling;
}

void add_format_option(CLI::App* cmd, std::string& target) {
  cmd->add_option("--format", target, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Cyclic descent statistics and shift bijections on Motzkin paths and "
      "three-row strip standard Young tableaux"};
  app.require_subcommand(1);
  int rc = 0;

  EnumerateOptions enum_opt;
  auto* cmd_enumerate =
      app.add_subcommand("enumerate", "List Motzkin paths with statistics");
  cmd_enumerate->add_option("--n", enum_opt.n, "Number of steps")
      ->required()
      ->check(CLI::Range(0, 64));
  cmd_enumerate
      ->add_option("--horizontal", enum_opt.horizontal,
                   "Restrict to exactly this many level steps")
      ->check(CLI::Range(0, 64));
  cmd_enumerate->add_option("--order", enum_opt.order, "Step order")
      ->check(CLI::IsMember({"UDL", "ULD", "LUD"}))
      ->capture_default_str();
  add_format_option(cmd_enumerate, enum_opt.format);
  cmd_enumerate->add_flag("--ascii", enum_opt.ascii, "Draw each path");
  cmd_enumerate->callback([&] { run_enumerate(enum_opt); });

  StatOptions stat_opt;
  auto* cmd_stat =
      app.add_subcommand("stat", "Descent statistics of one path");
  cmd_stat->add_option("path", stat_opt.path, "Path text over U/D/L")
      ->required();
  cmd_stat->add_option("--order", stat_opt.order, "Step order")
      ->check(CLI::IsMember({"UDL", "ULD", "LUD"}))
      ->capture_default_str();
  auto* des_flag = cmd_stat->add_flag("--des", stat_opt.want_des,
                                      "Linear descent set");
  cmd_stat->add_flag("--cdes", stat_opt.want_cdes, "Cyclic descent set")
      ->excludes(des_flag);
  add_format_option(cmd_stat, stat_opt.format);
  cmd_stat->add_flag("--ascii", stat_opt.ascii, "Draw the path");
  cmd_stat->callback([&] {
    if (!stat_opt.want_des && !stat_opt.want_cdes)
      throw CLI::ValidationError("stat", "pass exactly one of --des / --cdes");
    run_stat(stat_opt);
  });

  ShiftOptions shift_opt;
  auto* cmd_shift =
      app.add_subcommand("shift", "Apply the cyclic shift bijection");
  cmd_shift->add_option("path", shift_opt.path, "Path text over U/D/L")
      ->required();
  cmd_shift->add_option("--order", shift_opt.order, "Step order")
      ->check(CLI::IsMember({"UDL", "ULD", "LUD"}))
      ->capture_default_str();
  cmd_shift->add_option("--times", shift_opt.times, "Iterations")
      ->check(CLI::Range(1, 1 << 20))
      ->capture_default_str();
  cmd_shift->add_flag("--inverse", shift_opt.inverse, "Apply the inverse shift");
  add_format_option(cmd_shift, shift_opt.format);
  cmd_shift->add_flag("--ascii", shift_opt.ascii, "Draw the result");
  cmd_shift->callback([&] { run_shift(shift_opt); });

  OrbitOptions orbit_opt;
  auto* cmd_orbit =
      app.add_subcommand("orbit", "Walk a full shift or promotion orbit");
  auto* orbit_path =
      cmd_orbit->add_option("path", orbit_opt.path, "Path text over U/D/L");
  auto* orbit_syt = cmd_orbit
                        ->add_option("--syt", orbit_opt.syt,
                                     "Three-row strip tableau instead of a path")
                        ->excludes(orbit_path);
  auto* orbit_pro = cmd_orbit->add_flag("--promotion", orbit_opt.promotion,
                                        "Use promotion (tableau orbits)");
  orbit_syt->needs(orbit_pro);
  orbit_pro->needs(orbit_syt);
  cmd_orbit->add_option("--order", orbit_opt.order, "Step order (path orbits)")
      ->check(CLI::IsMember({"UDL", "ULD", "LUD"}))
      ->capture_default_str();
  add_format_option(cmd_orbit, orbit_opt.format);
  cmd_orbit->callback([&] {
    if (orbit_opt.path.empty() && orbit_opt.syt.empty())
      throw CLI::ValidationError("orbit", "pass a path or --syt TABLEAU");
    run_orbit(orbit_opt);
  });

  SytOptions syt_opt;
  auto* cmd_syt = app.add_subcommand(
      "syt", "Tableau operations: gamma | ungamma | rectify | promote");
  cmd_syt->add_option("action", syt_opt.action, "Operation")
      ->required()
      ->check(CLI::IsMember({"gamma", "ungamma", "rectify", "promote"}));
  cmd_syt->add_option("argument", syt_opt.argument,
                      "Path text (gamma) or tableau text (others)")
      ->required();
  add_format_option(cmd_syt, syt_opt.format);
  cmd_syt->callback([&] { run_syt(syt_opt); });

  VerifyOptions verify_opt;
  auto* cmd_verify = app.add_subcommand(
      "verify", "Exhaustively verify the theorems over a range of n");
  cmd_verify->add_option("--suite", verify_opt.suite, "Which suite")
      ->check(CLI::IsMember({"axioms", "equidist", "commutation", "counts", "all"}))
      ->capture_default_str();
  cmd_verify->add_option("--n-min", verify_opt.n_min, "Smallest n")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  cmd_verify->add_option("--n-max", verify_opt.n_max, "Largest n")
      ->check(CLI::Range(0, 64))
      ->capture_default_str();
  cmd_verify->add_option("--report", verify_opt.report_path,
                         "Also write the JSON report document to this file");
  add_format_option(cmd_verify, verify_opt.format);
  cmd_verify->callback([&] {
    const int ceiling = verify_ceiling();
    if (verify_opt.n_min > verify_opt.n_max)
      throw CLI::ValidationError("verify", "--n-min exceeds --n-max");
    if (verify_opt.n_max > ceiling)
      throw CLI::ValidationError(
          "verify", "--n-max " + std::to_string(verify_opt.n_max) +
                        " exceeds the ceiling " + std::to_string(ceiling) +
                        " (raise " + std::string(kCeilingEnvVar) + " to allow)");
    rc = run_verify(verify_opt);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
