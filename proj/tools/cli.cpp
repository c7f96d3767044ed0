#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string_view>

#include <CLI11.hpp>

#include "minkowski/minkowski.h"

namespace minkowski::cli {

namespace {

using nlohmann::json;

struct CommandError {
  int code;
  std::string message;
};

int exit_code_for(mk_status s) { return s == MK_ERR_INTERNAL ? kExitInternal : kExitInput; }

void check(mk_status s) {
  if (s != MK_OK) throw CommandError{exit_code_for(s), std::string(mk_status_name(s)) + ": " + mk_last_error()};
}

struct NormHandle {
  mk_norm* ptr = nullptr;
  NormHandle() = default;
  NormHandle(const NormHandle&) = delete;
  NormHandle& operator=(const NormHandle&) = delete;
  ~NormHandle() { mk_norm_free(ptr); }
};

/// Takes ownership of a string returned by the C API.
std::string take(char* s) {
  std::string out = s == nullptr ? std::string() : std::string(s);
  mk_free_string(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CommandError{kExitInput, "cannot read '" + path + "'"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream o(path);
  if (!o) throw CommandError{kExitInput, "cannot write '" + path + "'"};
  o << content << '\n';
}

bool looks_rational(const std::string& s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  bool digit = false, slash = false;
  for (; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      digit = true;
    } else if (s[i] == '/' && !slash && digit && i + 1 < s.size()) {
      slash = true;
    } else {
      return false;
    }
  }
  return digit;
}

/// Display-only conversion of rational strings to decimals.
json to_float(const json& j) {
  if (j.is_object()) {
    json out = json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = to_float(it.value());
    return out;
  }
  if (j.is_array()) {
    json out = json::array();
    for (const auto& x : j) out.push_back(to_float(x));
    return out;
  }
  if (j.is_string() && looks_rational(j.get<std::string>())) {
    const auto s = j.get<std::string>();
    auto slash = s.find('/');
    if (slash == std::string::npos) return std::stod(s);
    return std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
  }
  return j;
}

struct BallSource {
  std::string file;
  std::string hanner;
  int rhombic = 0;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--ball", file, "Ball JSON file");
    auto* h = cmd->add_option("--hanner", hanner, "Hanner expression, e.g. \"((R +1 R) +inf R)\"");
    auto* r = cmd->add_option("--rhombic", rhombic, "Projected (d+1)-cube ball of dimension d");
    f->excludes(h)->excludes(r);
    h->excludes(r);
  }

  void load(NormHandle& n) const {
    const int given = !file.empty() + !hanner.empty() + (rhombic != 0);
    if (given != 1) throw CommandError{kExitInput, "exactly one of --ball, --hanner, --rhombic is required"};
    if (!file.empty()) {
      check(mk_norm_from_ball_json(read_file(file).c_str(), &n.ptr));
    } else if (!hanner.empty()) {
      check(mk_norm_from_hanner(hanner.c_str(), &n.ptr));
    } else {
      check(mk_norm_rhombic(rhombic, &n.ptr));
    }
  }
};

unsigned default_jobs() {
  if (const char* env = std::getenv("MINKOWSKI_JOBS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int main(const std::vector<std::string>& args) {
    CLI::App app{"Exact geometry of polytopal normed spaces"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--float", float_, "Render rationals as decimals on stdout");
    jobs_ = default_jobs();
    app.add_option("--jobs", jobs_, "Worker threads (default: $MINKOWSKI_JOBS or 1)");

    int code = kExitOk;
    std::function<void()> action;

    auto* ball = app.add_subcommand("ball", "Normalize a ball: irredundant vertices, facets, face counts");
    ball_src_.attach(ball);
    ball->add_flag("--facets", facets_, "Include the H-representation");
    ball->add_flag("--faces", faces_, "Include face-lattice counts");
    ball->add_option("--out", out_file_, "Also write the ball JSON here");
    ball->callback([&] { action = [&] { cmd_ball(false); }; });

    auto* dual = app.add_subcommand("dual", "Polar dual ball");
    ball_src_.attach(dual);
    dual->add_flag("--facets", facets_, "Include the H-representation");
    dual->add_option("--out", out_file_, "Also write the ball JSON here");
    dual->callback([&] { action = [&] { cmd_ball(true); }; });

    auto* absorbing = app.add_subcommand("absorbing", "Decide whether the angle a o b is absorbing");
    ball_src_.attach(absorbing);
    absorbing->add_option("--a", vec_a_, "First leg, e.g. 1,-1/2")->required();
    absorbing->add_option("--b", vec_b_, "Second leg")->required();
    absorbing->callback([&] { action = [&] { cmd_absorbing(); }; });

    auto* sa = app.add_subcommand("steiner-antipodal", "Scan disjoint dual faces for distance <= 1");
    ball_src_.attach(sa);
    sa->callback([&] { action = [&] { cmd_steiner_antipodal(); }; });

    auto* cl = app.add_subcommand("cl-check", "Check B = conv(F u -F) for every facet F");
    ball_src_.attach(cl);
    cl->callback([&] { action = [&] { cmd_cl(); }; });

    auto* hanner = app.add_subcommand("hanner", "Build Hanner or projected-cube balls");
    hanner->require_subcommand(1);
    auto* hb = hanner->add_subcommand("build", "Ball of a Hanner expression");
    hb->add_option("expr", hanner_expr_, "e.g. \"((R +1 R) +inf R)\"")->required();
    hb->add_option("--out", out_file_, "Write the ball JSON here");
    hb->callback([&] { action = [&] { cmd_hanner_build(); }; });
    auto* hr = hanner->add_subcommand("rhombic", "Projection of the (d+1)-cube along its diagonal");
    hr->add_option("--d", dim_, "Dimension (2..5)")->required();
    hr->add_option("--out", out_file_, "Write the ball JSON here");
    hr->callback([&] { action = [&] { cmd_hanner_rhombic(); }; });

    auto* smt = app.add_subcommand("smt", "Steiner minimal tree of a terminal set");
    ball_src_.attach(smt);
    smt->add_option("--terminals", points_file_, "Points JSON file")->required();
    auto* ex = smt->add_flag("--exact", exact_, "Enumerate all full topologies (default, <= 7 terminals)");
    auto* he = smt->add_flag("--heuristic", heuristic_, "Local search from the minimum spanning tree");
    ex->excludes(he);
    smt->add_option("--seed", seed_, "Heuristic seed");
    smt->add_option("--iterations", iterations_, "Heuristic iteration budget");
    smt->add_flag("--csv", csv_, "Print a CSV summary line instead of JSON");
    smt->add_option("--out", out_file_, "Also write the result JSON here");
    smt->callback([&] { action = [&] { cmd_smt(); }; });

    auto* verify = app.add_subcommand("verify", "Check the star theorems on concrete points");
    verify->add_option("mode", verify_mode_, "chain | plane")->required()->check(CLI::IsMember({"chain", "plane"}));
    ball_src_.attach(verify);
    verify->add_option("--points", points_file_, "Points JSON file")->required();
    verify->callback([&] { action = [&] { code = cmd_verify(); }; });

    auto* ce = app.add_subcommand("counterexample", "Star over the projected-cube vertices and a shorter tree");
    ce->add_option("family", family_, "rhombic")->required()->check(CLI::IsMember({"rhombic"}));
    ce->add_option("--d", dim_, "Dimension")->required();
    ce->add_option("--seed", seed_, "Local-search seed");
    ce->add_option("--iterations", iterations_, "Local-search iteration budget");
    ce->add_option("--out", out_file_, "Also write the result JSON here");
    ce->callback([&] { action = [&] { cmd_counterexample(); }; });

    auto* sc = app.add_subcommand("scenario", "Run scenario files and compare expected outcomes");
    sc->add_option("file", scenario_file_, "Scenario JSON (object or array)")->required();
    sc->callback([&] { action = [&] { code = cmd_scenario(); }; });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
      out_ << app.help();
      return kExitOk;
    } catch (const CLI::ParseError& e) {
      err_ << "error: " << e.what() << '\n';
      return kExitInput;
    }

    try {
      if (action) action();
    } catch (const CommandError& e) {
      err_ << "error: " << e.message << '\n';
      return e.code;
    } catch (const json::exception& e) {
      err_ << "error: JSON: " << e.what() << '\n';
      return kExitInput;
    }
    return code;
  }

 private:
  void print(const json& j) { out_ << (float_ ? to_float(j) : j).dump(2) << '\n'; }

  void cmd_ball(bool dual) {
    NormHandle n;
    ball_src_.load(n);
    NormHandle d;
    const mk_norm* target = n.ptr;
    if (dual) {
      check(mk_norm_dual(n.ptr, &d.ptr));
      target = d.ptr;
    }
    char* s = nullptr;
    check(mk_ball_json(target, facets_ ? 1 : 0, faces_ ? 1 : 0, &s));
    json j = json::parse(take(s));
    if (!out_file_.empty()) write_file(out_file_, j.dump(2));
    print(j);
  }

  void cmd_absorbing() {
    NormHandle n;
    ball_src_.load(n);
    char* s = nullptr;
    check(mk_absorbing(n.ptr, vec_a_.c_str(), vec_b_.c_str(), &s));
    print(json::parse(take(s)));
  }

  void cmd_steiner_antipodal() {
    NormHandle n;
    ball_src_.load(n);
    char* s = nullptr;
    check(mk_steiner_antipodal(n.ptr, static_cast<int>(jobs_), &s));
    print(json::parse(take(s)));
  }

  void cmd_cl() {
    NormHandle n;
    ball_src_.load(n);
    char* s = nullptr;
    check(mk_cl_check(n.ptr, &s));
    print(json::parse(take(s)));
  }

  void emit_ball(NormHandle& n) {
    char* s = nullptr;
    check(mk_ball_json(n.ptr, 0, 0, &s));
    json j = json::parse(take(s));
    if (!out_file_.empty()) write_file(out_file_, j.dump(2));
    print(j);
  }

  void cmd_hanner_build() {
    NormHandle n;
    check(mk_norm_from_hanner(hanner_expr_.c_str(), &n.ptr));
    emit_ball(n);
  }

  void cmd_hanner_rhombic() {
    NormHandle n;
    check(mk_norm_rhombic(dim_, &n.ptr));
    emit_ball(n);
  }

  void cmd_smt() {
    NormHandle n;
    ball_src_.load(n);
    char* s = nullptr;
    const mk_smt_mode mode = heuristic_ ? MK_SMT_HEURISTIC : MK_SMT_EXACT;
    check(mk_smt(n.ptr, read_file(points_file_).c_str(), mode, seed_, iterations_, static_cast<int>(jobs_), &s));
    json j = json::parse(take(s));
    if (!out_file_.empty()) write_file(out_file_, j.dump(2));
    if (csv_) {
      out_ << "level,terminals,steinerPoints,length\n"
           << j["level"].get<std::string>() << ',' << j["terminals"].size() << ',' << j["steinerPoints"].size()
           << ',' << (float_ ? to_float(j["length"]).dump() : j["length"].get<std::string>()) << '\n';
    } else {
      print(j);
    }
  }

  int cmd_verify() {
    NormHandle n;
    ball_src_.load(n);
    char* s = nullptr;
    int holds = 0;
    const std::string pts = read_file(points_file_);
    if (verify_mode_ == "chain") {
      check(mk_verify_chain(n.ptr, pts.c_str(), static_cast<int>(jobs_), &holds, &s));
    } else {
      check(mk_verify_plane(n.ptr, pts.c_str(), static_cast<int>(jobs_), &holds, &s));
    }
    print(json::parse(take(s)));
    return holds ? kExitOk : kExitViolated;
  }

  void cmd_counterexample() {
    char* s = nullptr;
    check(mk_counterexample_rhombic(dim_, seed_, iterations_, static_cast<int>(jobs_), &s));
    json j = json::parse(take(s));
    if (!out_file_.empty()) write_file(out_file_, j.dump(2));
    print(j);
  }

  int cmd_scenario() {
    json doc = json::parse(read_file(scenario_file_));
    const std::string base = std::filesystem::path(scenario_file_).parent_path().string();
    json list = doc.is_array() ? doc : json::array({doc});
    json report = json::array();
    bool all = true;
    for (const auto& entry : list) {
      Scenario sc;
      try {
        sc = scenario_from_json(entry, base);
      } catch (const std::exception& e) {
        throw CommandError{kExitInput, std::string("scenario: ") + e.what()};
      }
      ScenarioOutcome o = run_scenario(sc);
      all = all && o.matches;
      report.push_back({{"name", sc.name}, {"exitCode", o.exit_code}, {"matches", o.matches}});
    }
    print(report);
    return all ? kExitOk : kExitViolated;
  }

  std::ostream& out_;
  std::ostream& err_;
  BallSource ball_src_;
  bool float_ = false, facets_ = false, faces_ = false, exact_ = false, heuristic_ = false, csv_ = false;
  unsigned jobs_ = 1;
  std::string out_file_, vec_a_, vec_b_, hanner_expr_, points_file_, verify_mode_, family_, scenario_file_;
  int dim_ = 0;
  std::uint64_t seed_ = 1;
  int iterations_ = -1;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).main(args);
}

Scenario scenario_from_json(const nlohmann::json& j, const std::string& base_dir) {
  Scenario s;
  s.name = j.value("name", std::string("unnamed"));
  s.operation = j.at("operation").get<std::string>();
  const auto& ball = j.at("ball");
  if (!ball.is_object() || ball.size() != 1) throw std::invalid_argument("a scenario needs exactly one ball source");
  if (ball.contains("file")) {
    s.ball_flag = "--ball";
    std::filesystem::path p = ball.at("file").get<std::string>();
    s.ball_value = (p.is_relative() && !base_dir.empty() ? std::filesystem::path(base_dir) / p : p).string();
  } else if (ball.contains("hanner")) {
    s.ball_flag = "--hanner";
    s.ball_value = ball.at("hanner").get<std::string>();
  } else if (ball.contains("rhombic")) {
    s.ball_flag = "--rhombic";
    s.ball_value = std::to_string(ball.at("rhombic").get<int>());
  } else {
    throw std::invalid_argument("unknown ball source " + ball.dump());
  }
  static const std::vector<std::string> commands = {"ball", "dual", "absorbing", "steiner-antipodal", "cl-check",
                                                    "hanner", "smt", "verify", "counterexample"};
  if (std::find(commands.begin(), commands.end(), s.operation) == commands.end())
    throw std::invalid_argument("unknown operation '" + s.operation + "'");
  if (j.contains("params")) s.params = j.at("params");
  for (const char* key : {"terminals", "points"}) {
    if (s.params.contains(key)) {
      std::filesystem::path p = s.params[key].get<std::string>();
      if (p.is_relative() && !base_dir.empty()) s.params[key] = (std::filesystem::path(base_dir) / p).string();
    }
  }
  if (j.contains("expected")) s.expected = j.at("expected");
  s.expected_exit = j.value("exitCode", 0);
  return s;
}

std::vector<std::string> scenario_argv(const Scenario& s) {
  std::vector<std::string> argv{"minkowski", s.operation};
  if (s.operation == "hanner") {
    if (s.ball_flag == "--hanner") {
      argv.insert(argv.end(), {"build", s.ball_value});
    } else if (s.ball_flag == "--rhombic") {
      argv.insert(argv.end(), {"rhombic", "--d", s.ball_value});
    } else {
      throw std::invalid_argument("hanner scenarios take a hanner or rhombic ball source");
    }
  } else if (s.operation == "counterexample") {
    if (s.ball_flag != "--rhombic") throw std::invalid_argument("counterexample scenarios take a rhombic ball source");
    argv.insert(argv.end(), {"rhombic", "--d", s.ball_value});
  } else {
    if (s.operation == "verify") argv.push_back(s.params.value("mode", std::string("chain")));
    argv.insert(argv.end(), {s.ball_flag, s.ball_value});
  }
  for (auto it = s.params.begin(); it != s.params.end(); ++it) {
    if (it.key() == "mode") continue;
    if (it.value().is_boolean()) {
      if (it.value().get<bool>()) argv.push_back("--" + it.key());
    } else {
      argv.push_back("--" + it.key());
      argv.push_back(it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
    }
  }
  return argv;
}

ScenarioOutcome run_scenario(const Scenario& s) {
  std::ostringstream out, err;
  ScenarioOutcome o;
  o.exit_code = run(scenario_argv(s), out, err);
  try {
    o.output = json::parse(out.str());
  } catch (const json::exception&) {
    o.output = nullptr;
  }
  o.matches = o.exit_code == s.expected_exit && (s.expected.is_null() || json_subset(s.expected, o.output));
  return o;
}

bool json_subset(const nlohmann::json& expected, const nlohmann::json& actual) {
  if (expected.is_object()) {
    if (!actual.is_object()) return false;
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      if (!actual.contains(it.key()) || !json_subset(it.value(), actual.at(it.key()))) return false;
    }
    return true;
  }
  if (expected.is_array()) {
    if (!actual.is_array() || actual.size() != expected.size()) return false;
    for (std::size_t i = 0; i < expected.size(); ++i)
      if (!json_subset(expected[i], actual[i])) return false;
    return true;
  }
  return expected == actual;
}

}  // namespace minkowski::cli
