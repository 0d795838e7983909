#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <gtest/gtest.h>
#include <httplib.h>

#include "msa/error.hpp"
#include "msa/service/api.hpp"
#include "msa/service/cli.hpp"
#include "msa/service/fixtures.hpp"
#include "msa/service/server.hpp"
#include "msa/service/settings.hpp"

using namespace msa;
using namespace msa::service;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = MSA_FIXTURE_DIR;
const std::string kData = MSA_DATA_DIR;

const char* kD4Body = R"({
  "prompt": "Please analyze the impact of 'emotional restraint' in American cultural social interactions.",
  "speaker_module": ["#T_SOFTASSERT", "#P_SELFREF", "#C_LOOP",
                     "#CTX_MERGE", "#L_CASCADE", "#E_TIGHT"]
})";

const char* kD5Profile = R"({
  "speaker_module": {
    "tone": "SOFTASSERT",
    "position": "SELFREF",
    "closure": "LOOP",
    "context_alignment": "MERGE",
    "logical_flow": "CASCADE",
    "affective_tension": "TIGHT"
  }
})";

const char* kD5Response = R"({
  "output": "Based on my own observations of social behavior, emotional restraint in American culture often reflects a preference for maintaining social morality, likely rooted in conservative values. However, this tendency can also generate underlying psychological tension."
})";

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::Io;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args, const std::map<std::string, std::string>& env = {}) {
  args.insert(args.begin(), "msa");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err, env);
  return {code, out.str(), err.str()};
}

fs::path scratch_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("msa_test_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TestServer {
  Engine engine;
  httplib::Server server;
  std::thread thread;
  int port = 0;

  explicit TestServer(Settings settings = {}) : engine(Engine::from_settings(settings)) {
    mount_routes(server, engine);
    port = server.bind_to_any_port("127.0.0.1");
    thread = std::thread([this] { server.listen_after_bind(); });
    server.wait_until_ready();
  }
  ~TestServer() {
    server.stop();
    thread.join();
  }
  httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

}  // namespace

TEST(Fixtures, LoadsFourVerifiedCases) {
  const auto cases = load_fixtures(kFixtures);
  ASSERT_EQ(cases.size(), 4u);
  EXPECT_EQ(cases[0].id, "case1");
  EXPECT_EQ(cases[0].transcript.size(), 9u);
  std::set<std::string> speakers;
  for (const auto& t : cases[0].transcript.turns) speakers.insert(t.speaker.value);
  EXPECT_EQ(speakers, (std::set<std::string>{"Speaker", "LLM"}));
  EXPECT_EQ(cases[0].transcript.turns[0].text, "I care for him, but not because I love him.");
  EXPECT_EQ(cases[3].id, "case4");
  EXPECT_EQ(scoring::total_metric(cases[3].scores.subscores, scoring::Metric::ResponsibilityChain), 3);
  EXPECT_EQ(cases[0].transcript.metadata.at("case_id"), "case1");
}

TEST(Fixtures, TamperedFileIsRejected) {
  const auto dir = scratch_dir("tamper");
  fs::copy(kFixtures, dir, fs::copy_options::recursive);
  {
    std::ofstream f(dir / "case2.jsonl", std::ios::app);
    f << " ";
  }
  EXPECT_EQ(code_of([&] { load_fixtures(dir.string()); }), ErrorCode::CorruptFixture);
  fs::remove(dir / "case2.jsonl");
  EXPECT_EQ(code_of([&] { load_fixtures(dir.string()); }), ErrorCode::CorruptFixture);
  fs::remove_all(dir);
}

TEST(Fixtures, RehashRoundTrip) {
  const auto dir = scratch_dir("rehash");
  fs::copy(kFixtures, dir, fs::copy_options::recursive);
  write_fixture_manifest(dir.string());
  EXPECT_EQ(load_fixtures(dir.string()).size(), 4u);
  EXPECT_EQ(nlohmann::json::parse(slurp(dir / "MANIFEST.json")), nlohmann::json::parse(slurp(fs::path(kFixtures) / "MANIFEST.json")));
  fs::remove_all(dir);
}

TEST(Sha256, KnownVectors) {
  EXPECT_EQ(sha256_hex(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

TEST(Settings, PrecedenceCliEnvFileDefault) {
  SettingsLayer cli, env, file;
  EXPECT_EQ(resolve_settings(cli, env, file).port, 8080);
  file.port = 1000;
  EXPECT_EQ(resolve_settings(cli, env, file).port, 1000);
  env.port = 2000;
  EXPECT_EQ(resolve_settings(cli, env, file).port, 2000);
  cli.port = 3000;
  EXPECT_EQ(resolve_settings(cli, env, file).port, 3000);

  file.llm = "remote";
  file.llm_base_url = "http://file:1";
  env.llm_base_url = "http://env:2";
  const auto s = resolve_settings(cli, env, file);
  EXPECT_EQ(s.llm, dialogue::LlmKind::Remote);
  EXPECT_EQ(s.remote.base_url, "http://env:2");
  EXPECT_EQ(s.output_dir, "output");
}

TEST(Settings, EnvAndFileParsing) {
  const auto env = layer_from_env({{"MSA_PORT", "9000"}, {"MSA_LLM", "stub"}, {"MSA_OUTPUT_DIR", "out2"}});
  EXPECT_EQ(env.port, 9000);
  EXPECT_EQ(env.output_dir, std::optional<std::string>("out2"));
  EXPECT_EQ(code_of([] { layer_from_env({{"MSA_PORT", "nine"}}); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([] { resolve_settings({.llm = "gpt"}, {}, {}); }), ErrorCode::InvalidArgument);

  const auto dir = scratch_dir("settings");
  std::ofstream(dir / "ok.json") << R"({"port": 7000, "llm": "stub", "output_dir": "x"})";
  std::ofstream(dir / "bad.json") << R"({"prot": 7000})";
  EXPECT_EQ(layer_from_file((dir / "ok.json").string()).port, 7000);
  EXPECT_EQ(code_of([&] { layer_from_file((dir / "bad.json").string()); }), ErrorCode::UnknownKey);
  fs::remove_all(dir);
}

TEST(GenerateRequest, LiteralBodiesRoundTrip) {
  const auto d4 = nlohmann::json::parse(kD4Body);
  const auto req = GenerateRequest::from_json(d4);
  EXPECT_EQ(req.form, GenerateRequest::Form::List);
  EXPECT_EQ(req.speaker_module.size(), 6u);
  EXPECT_EQ(nlohmann::json(req.to_json()), d4);

  const auto d5 = nlohmann::json::parse(kD5Profile);
  auto with_prompt = d5;
  with_prompt["prompt"] = "x";
  const auto obj = GenerateRequest::from_json(with_prompt);
  EXPECT_EQ(obj.form, GenerateRequest::Form::Object);
  EXPECT_EQ(nlohmann::json(obj.to_json()), with_prompt);
  EXPECT_EQ(obj.speaker_module, req.speaker_module) << "both forms give the same config";

  const auto resp = nlohmann::json::parse(kD5Response);
  EXPECT_EQ(nlohmann::json(GenerateResponse::from_json(resp).to_json()), resp);
}

TEST(GenerateRequest, Validation) {
  auto parse = [](const char* body) { GenerateRequest::from_json(nlohmann::json::parse(body)); };
  EXPECT_EQ(code_of([&] { parse(R"({"prompt":"x","speaker_module":["#T_BANANA"]})"); }), ErrorCode::UnknownValue);
  EXPECT_EQ(code_of([&] { parse(R"({"prompt":"x","speaker_module":["#T_NEUTRAL","#T_FLAT"]})"); }),
            ErrorCode::UnknownValue);
  EXPECT_EQ(code_of([&] { parse(R"({"prompt":"x","speaker_module":["#T_NEUTRAL","#T_ASSERTIVE"]})"); }),
            ErrorCode::DuplicateDimension);
  EXPECT_EQ(code_of([&] { parse(R"({"prompt":"x","speaker_module":{"mood":"FLAT"}})"); }), ErrorCode::UnknownKey);
  EXPECT_EQ(code_of([&] { parse(R"({"prompt":"x","speaker_module":[],"extra":1})"); }), ErrorCode::UnknownKey);
  EXPECT_EQ(code_of([&] { parse(R"({"prompt":"","speaker_module":[]})"); }), ErrorCode::MalformedJson);
  EXPECT_EQ(code_of([&] { parse(R"({"speaker_module":[]})"); }), ErrorCode::MalformedJson);
}

TEST(Service, D4BodyEchoesDirectives) {
  TestServer ts;
  auto cli = ts.client();
  auto res = cli.Post("/generate_with_speaker_module", kD4Body, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  const auto body = nlohmann::json::parse(res->body);
  const auto output = body.at("output").get<std::string>();
  EXPECT_NE(output.find("[TONE=SOFTASSERT]"), std::string::npos);
  EXPECT_NE(output.find("[TONE=SOFTASSERT] [POSITION=SELFREF] [CLOSURE=LOOP] [CONTEXT_ALIGNMENT=MERGE] "
                        "[LOGICAL_FLOW=CASCADE] [AFFECTIVE_TENSION=TIGHT]"),
            std::string::npos);
  EXPECT_EQ(body.size(), 1u);
}

TEST(Service, ValidationErrorsAre4xx) {
  TestServer ts;
  auto cli = ts.client();
  const std::pair<const char*, const char*> cases[] = {
      {R"({"prompt":"x","speaker_module":["#T_BANANA"]})", "UnknownValue"},
      {R"({"prompt":"x","speaker_module":["#T_NEUTRAL","#T_ASSERTIVE"]})", "DuplicateDimension"},
      {R"({"prompt":"x","speaker_module":{"mood":"FLAT"}})", "UnknownKey"},
      {R"({"prompt":"x", )", "MalformedJson"},
  };
  for (const auto& [body, code] : cases) {
    auto res = cli.Post("/generate_with_speaker_module", body, "application/json");
    ASSERT_TRUE(res);
    EXPECT_GE(res->status, 400);
    EXPECT_LT(res->status, 500);
    const auto j = nlohmann::json::parse(res->body);
    EXPECT_EQ(j.at("code"), code);
    EXPECT_TRUE(j.at("message").is_string());
  }
}

TEST(Service, Health) {
  TestServer ts;
  auto res = ts.client().Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(nlohmann::json::parse(res->body), nlohmann::json::parse(R"({"status":"ok"})"));
}

TEST(Service, AnnotateMatchesCliByteForByte) {
  TestServer ts;
  auto cli_client = ts.client();
  for (const char* name : {"case1", "case2", "case3", "case4"}) {
    const auto file = kFixtures + "/" + name + ".jsonl";
    const auto via_cli = cli({"annotate", file});
    ASSERT_EQ(via_cli.code, 0) << via_cli.err;
    auto res = cli_client.Post("/annotate", slurp(file), "application/x-ndjson");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200);
    EXPECT_EQ(res->body, via_cli.out) << name;
  }
}

TEST(Service, AnnotateAcceptsJsonArrays) {
  TestServer ts;
  auto res = ts.client().Post("/annotate", R"([{"speaker":"u","text":"hello there friend","turn_role":"user"}])",
                              "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  auto bad = ts.client().Post("/annotate", "not json at all", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
}

TEST(Service, AnalyzeGraph) {
  TestServer ts;
  auto res = ts.client().Post("/analyze_graph",
                              R"({"edges":[{"from":"a","to":"b"},{"from":"b","to":"a"},{"from":"c","to":"a"}]})",
                              "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  const auto j = nlohmann::json::parse(res->body);
  EXPECT_EQ(j["loops"], nlohmann::json::parse(R"([["a","b"]])"));
  EXPECT_EQ(j["drift_nodes"], nlohmann::json::array());
  auto bad = ts.client().Post("/analyze_graph", R"({"edges":[{"from":"a"}]})", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);
}

TEST(Service, UnreachableProviderIs502) {
  Settings s;
  s.llm = dialogue::LlmKind::Remote;
  s.remote.base_url = "http://127.0.0.1:1";
  s.remote.retries = 0;
  TestServer ts(s);
  auto res = ts.client().Post("/generate_with_speaker_module", kD4Body, "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 502);
  EXPECT_EQ(nlohmann::json::parse(res->body).at("code"), "LlmUnavailable");
}

TEST(Service, ConcurrentRequestsAreIsolated) {
  TestServer ts;
  std::vector<std::thread> threads;
  std::atomic<int> ok{0};
  for (int i = 0; i < 8; ++i) {
    threads.emplace_back([&, i] {
      auto c = ts.client();
      const std::string body = R"({"prompt":"request )" + std::to_string(i) + R"(","speaker_module":["#T_NEUTRAL"]})";
      auto res = c.Post("/generate_with_speaker_module", body, "application/json");
      if (res && res->status == 200 &&
          nlohmann::json::parse(res->body)["output"].get<std::string>().find("request " + std::to_string(i)) !=
              std::string::npos)
        ++ok;
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 8);
}

TEST(Cli, ParseAndCompile) {
  auto r = cli({"parse", "#T_SOFTASSERT #P_SELFREF"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse(R"({"tone":"SOFTASSERT","position":"SELFREF"})"));
  EXPECT_LT(r.out.find("tone"), r.out.find("position")) << "canonical dimension order";

  r = cli({"parse", "--form", "list", R"({"position":"SELFREF","tone":"SOFTASSERT"})"});
  EXPECT_EQ(nlohmann::json::parse(r.out), nlohmann::json::parse(R"(["#T_SOFTASSERT","#P_SELFREF"])"));

  r = cli({"compile", kD5Profile});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "[TONE=SOFTASSERT] [POSITION=SELFREF] [CLOSURE=LOOP] [CONTEXT_ALIGNMENT=MERGE] [LOGICAL_FLOW=CASCADE] "
            "[AFFECTIVE_TENSION=TIGHT]\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"parse", "#T_BANANA"}).code, 2);
  EXPECT_NE(cli({"parse", "#T_BANANA"}).err.find("UnknownValue"), std::string::npos);
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"stats", "--a", "1102,7.8,0.57"}).code, 2);
  EXPECT_EQ(cli({"annotate", "/nonexistent/file.jsonl"}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, ScoreCaseTable) {
  const auto r = cli({"score-case", kFixtures + "/case1.subscores.json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("9/9"), std::string::npos);
  EXPECT_NE(r.out.find("Responsibility Chain    R1=2 R2=2 R3=1 R4=3         8/9"), std::string::npos);
  EXPECT_NE(r.out.find("Context Stability       C1=2 C2=2 C3=1 C4=3         8/9"), std::string::npos);
  EXPECT_NE(r.out.find("0% (0/4)"), std::string::npos);

  const auto j = cli({"score-case", "--json", kFixtures + "/case3.subscores.json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["totals"]["responsibility_chain"], 6);
  EXPECT_EQ(doc["shift_rate"]["percent"], 33);
}

TEST(Cli, Stats) {
  const auto r = cli({"stats", "--a", "1102,7.8,0.57", "--b", "373,6.4,0.24", "--reported-t", "44.64"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("t = 46.0657"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("df = 1473"), std::string::npos);
  EXPECT_NE(r.out.find("CI [7.77, 7.83]"), std::string::npos);
  EXPECT_NE(r.out.find("CI [6.38, 6.42]"), std::string::npos);
  EXPECT_NE(r.out.find("delta = +1.4257"), std::string::npos);
  EXPECT_EQ(cli({"stats", "--a", "1,7.8,0.57", "--b", "373,6.4,0.24"}).code, 2);
  EXPECT_EQ(cli({"stats", "--a", "3,1,0", "--b", "3,2,0"}).code, 2);
}

TEST(Cli, GraphCommand) {
  const auto dir = scratch_dir("graph");
  std::ofstream(dir / "g.json") << R"({"nodes":["a","b","c"],"edges":[{"from":"a","to":"b"},{"from":"b","to":"a"}]})";
  const auto r = cli({"graph", (dir / "g.json").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["loops"], nlohmann::json::parse(R"([["a","b"]])"));
  EXPECT_EQ(j["drift_nodes"], nlohmann::json::parse(R"(["c"])"));
  fs::remove_all(dir);
}

TEST(Cli, SimulateIsReproducible) {
  const auto dir = scratch_dir("simulate");
  std::vector<std::string> outputs;
  for (int run = 0; run < 3; ++run) {
    const auto out_dir = dir / ("run" + std::to_string(run));
    const auto r = cli({"simulate", kData + "/debate.json", "--turns", "5", "--seed", "7", "--timestamp",
                        "20260101T000000Z", "--out-dir", out_dir.string()});
    ASSERT_EQ(r.code, 0) << r.err;
    const fs::path file = out_dir / "debate-exams.20260101T000000Z.jsonl";
    EXPECT_EQ(r.out, file.string() + "\n");
    outputs.push_back(slurp(file));
  }
  EXPECT_EQ(outputs[0], outputs[1]);
  EXPECT_EQ(outputs[1], outputs[2]);
  const auto t = parse_transcript_jsonl(outputs[0]);
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(t.metadata.at("seed"), "7");
  fs::remove_all(dir);
}

TEST(Cli, SimulateHonoursEnvOutputDir) {
  const auto dir = scratch_dir("simenv");
  const auto r = cli({"simulate", kData + "/debate.json", "--turns", "2", "--timestamp", "t0"},
                     {{"MSA_OUTPUT_DIR", dir.string()}});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(fs::exists(dir / "debate-exams.t0.jsonl"));
  fs::remove_all(dir);
}

TEST(Cli, FixturesCommand) {
  const auto r = cli({"fixtures", kFixtures});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("case4: 6 turns, totals 4/3/2"), std::string::npos) << r.out;
}
