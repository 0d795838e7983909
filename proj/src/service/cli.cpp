#include "msa/service/cli.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "msa/dialogue/simulate.hpp"
#include "msa/gcode/config.hpp"
#include "msa/gcode/directives.hpp"
#include "msa/scoring/scorecard.hpp"
#include "msa/scoring/stats.hpp"
#include "msa/service/api.hpp"
#include "msa/service/fixtures.hpp"
#include "msa/service/server.hpp"
#include "msa/service/settings.hpp"
#include "msa/text.hpp"

namespace msa::service {

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// "@file" reads the file; anything else is the literal argument.
std::string argument_text(const std::string& arg) { return arg.size() > 1 && arg[0] == '@' ? read_text(arg.substr(1)) : arg; }

gcode::SpeakerModuleConfig config_from_argument(const std::string& arg) {
  const std::string body = argument_text(arg);
  const auto trimmed = text::trim(body);
  if (!trimmed.empty() && (trimmed.front() == '{' || trimmed.front() == '[')) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(trimmed);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::MalformedJson, "speaker module is not valid JSON", e.what());
    }
    if (j.is_object() && j.contains("speaker_module")) {
      if (j.size() != 1) throw Error(ErrorCode::UnknownKey, "only 'speaker_module' may wrap a speaker module");
      return gcode::parse_speaker_module(j["speaker_module"]);
    }
    return gcode::parse_speaker_module(j);
  }
  std::string spaced(trimmed);
  for (auto& c : spaced)
    if (c == ',') c = ' ';
  return gcode::parse_tag_list(text::split_whitespace(spaced));
}

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y%m%dT%H%M%SZ");
  return os.str();
}

std::string fixed(double v, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << v;
  return os.str();
}

struct RuntimeOptions {
  std::string config_path;
  SettingsLayer cli;
};

void add_runtime_options(CLI::App* cmd, RuntimeOptions& o) {
  cmd->add_option("--config", o.config_path, "JSON settings file (also MSA_CONFIG)");
  cmd->add_option("--llm", o.cli.llm, "stub or remote");
  cmd->add_option("--llm-base-url", o.cli.llm_base_url, "remote endpoint, http://host:port");
  cmd->add_option("--llm-model", o.cli.llm_model, "remote model name");
  cmd->add_option("--llm-timeout-ms", o.cli.llm_timeout_ms, "remote read timeout");
  cmd->add_option("--llm-retries", o.cli.llm_retries, "additional attempts after a failure");
  cmd->add_option("--rubric-rules", o.cli.rubric_rules, "RubricRuleSet JSON file");
  cmd->add_option("--inference-rules", o.cli.inference_rules, "inference rule JSON file");
}

Settings settings_for(const RuntimeOptions& o, const std::map<std::string, std::string>& env) {
  std::string path = o.config_path;
  if (path.empty())
    if (auto it = env.find("MSA_CONFIG"); it != env.end()) path = it->second;
  const SettingsLayer file = path.empty() ? SettingsLayer{} : layer_from_file(path);
  return resolve_settings(o.cli, layer_from_env(env), file);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::map<std::string, std::string>& env) {
  CLI::App app{"Speaker-module toolkit: G-code tags, responsibility graphs, transcript scoring."};
  app.name(args.empty() ? "msa" : args[0]);
  app.require_subcommand(1);

  std::string input;
  std::string form = "object";
  auto* parse = app.add_subcommand("parse", "Parse tags or a JSON speaker module; print the canonical config");
  parse->add_option("input", input, "tags ('#T_SOFTASSERT #P_SELFREF'), JSON, or @file")->required();
  parse->add_option("--form", form, "output form")->check(CLI::IsMember({"object", "list"}));

  auto* compile = app.add_subcommand("compile", "Compile a speaker module to the directive string");
  compile->add_option("input", input, "tags, JSON, or @file")->required();

  std::string path;
  bool table = false;
  RuntimeOptions annotate_opts;
  auto* annotate = app.add_subcommand("annotate", "Heuristic scorecard for a JSONL transcript");
  annotate->add_option("transcript", path, "transcript file (JSONL or JSON)")->required();
  annotate->add_option("--rubric-rules", annotate_opts.cli.rubric_rules, "RubricRuleSet JSON file");
  annotate->add_flag("--table", table, "print the text table instead of JSON");

  auto* graph = app.add_subcommand("graph", "Closed loops and drift nodes of a responsibility graph");
  graph->add_option("graph", path, "graph JSON file")->required();

  RuntimeOptions sim_opts;
  std::size_t turns = 6;
  std::uint64_t seed = 0;
  std::string timestamp;
  auto* simulate = app.add_subcommand("simulate", "Generate a multi-speaker dialogue into the output directory");
  simulate->add_option("task", path, "multi-speaker task JSON")->required();
  simulate->add_option("--turns", turns, "generated turns")->capture_default_str();
  simulate->add_option("--seed", seed, "RNG seed")->capture_default_str();
  simulate->add_option("--timestamp", timestamp, "file-name timestamp (default: current UTC time)");
  simulate->add_option("--out-dir", sim_opts.cli.output_dir, "output directory (also MSA_OUTPUT_DIR)");
  add_runtime_options(simulate, sim_opts);

  std::vector<std::string> case_files;
  bool as_json = false;
  auto* score_case = app.add_subcommand("score-case", "Totals and shift rate from annotated sub-scores");
  score_case->add_option("files", case_files, "sub-score JSON files")->required();
  score_case->add_flag("--json", as_json, "print JSON instead of the table");

  std::string a_text, b_text;
  bool welch = false;
  double level = 0.95;
  std::optional<double> reported_t;
  auto* stats = app.add_subcommand("stats", "Two-sample t and confidence intervals from summary statistics");
  stats->add_option("--a", a_text, "group A as n,mean,sd")->required();
  stats->add_option("--b", b_text, "group B as n,mean,sd")->required();
  stats->add_flag("--welch", welch, "unequal-variance t instead of pooled");
  stats->add_option("--level", level, "confidence level")->capture_default_str();
  stats->add_option("--reported-t", reported_t, "published t to compare against");

  std::string fixture_dir;
  bool rehash = false;
  auto* fixtures = app.add_subcommand("fixtures", "Verify the fixture corpus against its manifest");
  fixtures->add_option("dir", fixture_dir, "fixture directory")->required();
  fixtures->add_flag("--rehash", rehash, "rewrite MANIFEST.json from the current files first");

  RuntimeOptions serve_opts;
  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--host", serve_opts.cli.host, "bind address (also MSA_HOST)");
  serve_cmd->add_option("--port", serve_opts.cli.port, "port (also MSA_PORT)");
  add_runtime_options(serve_cmd, serve_opts);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*parse) {
      const auto cfg = config_from_argument(input);
      out << (form == "list" ? gcode::to_tag_list_json(cfg) : gcode::to_object_json(cfg)).dump(2) << '\n';
    } else if (*compile) {
      out << gcode::build_prompt_directives(config_from_argument(input)).text << '\n';
    } else if (*annotate) {
      const auto settings = resolve_settings(annotate_opts.cli, layer_from_env(env), {});
      const auto rules = Engine::from_settings(settings).pipeline.rubric;
      const auto body = read_text(path);
      if (table) {
        const auto card = scoring::score_transcript(parse_transcript_any(body), rules);
        out << scoring::render_table(card, path);
      } else {
        out << annotate_document(body, rules);
      }
    } else if (*graph) {
      out << analyze_graph_document(read_text(path));
    } else if (*simulate) {
      const auto settings = settings_for(sim_opts, env);
      const auto engine = Engine::from_settings(settings);
      const auto task = dialogue::MultiSpeakerTask::load(path);
      const auto transcript = dialogue::simulate_dialogue(task, turns, seed, *engine.llm, engine.pipeline);
      if (timestamp.empty()) timestamp = utc_timestamp();
      std::filesystem::create_directories(settings.output_dir);
      const auto file = std::filesystem::path(settings.output_dir) / (task.task_id + "." + timestamp + ".jsonl");
      std::ofstream os(file, std::ios::binary);
      if (!os) throw Error(ErrorCode::Io, "cannot write " + file.string());
      write_transcript_jsonl(os, transcript);
      out << file.string() << '\n';
    } else if (*score_case) {
      nlohmann::ordered_json all = nlohmann::ordered_json::array();
      for (const auto& f : case_files) {
        const auto card = scoring::score_case(scoring::CaseScores::load(f));
        if (as_json) all.push_back(scoring::scorecard_to_json(card));
        else out << scoring::render_table(card, card.case_id.empty() ? f : card.case_id) << '\n';
      }
      if (as_json) out << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
    } else if (*stats) {
      const auto a = scoring::GroupStats::parse(a_text);
      const auto b = scoring::GroupStats::parse(b_text);
      const auto variant = welch ? scoring::TTestVariant::Welch : scoring::TTestVariant::Pooled;
      const auto r = scoring::two_sample_t(a, b, variant);
      const auto ca = scoring::mean_confidence_interval(a, level);
      const auto cb = scoring::mean_confidence_interval(b, level);
      const std::string pct = fixed(level * 100.0, level * 100.0 == std::floor(level * 100.0) ? 0 : 1) + "%";
      out << "t = " << fixed(r.t, 4) << "  df = " << (welch ? fixed(r.df, 2) : fixed(r.df, 0)) << "  ("
          << (welch ? "welch" : "pooled") << ")  p = " << std::scientific << std::setprecision(3) << r.p_two_tailed
          << std::defaultfloat << '\n';
      out << "A: n=" << a.n << " mean=" << a.mean << " sd=" << a.std_dev << "  " << pct << " CI [" << fixed(ca.lo, 2)
          << ", " << fixed(ca.hi, 2) << "]\n";
      out << "B: n=" << b.n << " mean=" << b.mean << " sd=" << b.std_dev << "  " << pct << " CI [" << fixed(cb.lo, 2)
          << ", " << fixed(cb.hi, 2) << "]\n";
      if (reported_t) {
        const double delta = r.t - *reported_t;
        out << "reported t = " << fixed(*reported_t, 2) << "  delta = " << (delta >= 0 ? "+" : "") << fixed(delta, 4)
            << (std::fabs(delta) > 0.005 ? "  [MISMATCH]" : "") << '\n';
      }
    } else if (*fixtures) {
      if (rehash) write_fixture_manifest(fixture_dir);
      for (const auto& c : load_fixtures(fixture_dir)) {
        const auto totals = scoring::totals_of(c.scores.subscores);
        out << c.id << ": " << c.transcript.size() << " turns, totals " << totals.pragmatic_consistency << '/'
            << totals.responsibility_chain << '/' << totals.context_stability << '\n';
      }
    } else if (*serve_cmd) {
      return serve(settings_for(serve_opts, env), err);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what();
    if (!e.detail().empty()) err << " (" << e.detail() << ')';
    err << '\n';
    return is_validation_error(e.code()) ? 2 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return run_cli(args, out, err, process_env());
}

}  // namespace msa::service
