#include "msa/service/fixtures.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "msa/error.hpp"

namespace msa::service {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error(ErrorCode::CorruptFixture, "fixture file missing", p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

constexpr const char* kManifest = "MANIFEST.json";

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::Io, "SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xF]);
  }
  return out;
}

std::vector<FixtureCase> load_fixtures(const std::string& dir) {
  const fs::path root(dir);
  nlohmann::json manifest;
  try {
    manifest = nlohmann::json::parse(read_file(root / kManifest));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::CorruptFixture, "fixture manifest is not valid JSON", e.what());
  }
  if (!manifest.is_object() || manifest.value("algorithm", "") != "sha256" || !manifest.contains("files") ||
      !manifest["files"].is_object())
    throw Error(ErrorCode::CorruptFixture, "fixture manifest has an unexpected shape");

  std::map<std::string, std::string> contents;
  for (const auto& [name, digest] : manifest["files"].items()) {
    if (!digest.is_string()) throw Error(ErrorCode::CorruptFixture, "manifest digest must be a string", name);
    auto bytes = read_file(root / name);
    if (sha256_hex(bytes) != digest.get<std::string>())
      throw Error(ErrorCode::CorruptFixture, "fixture hash mismatch", name);
    contents.emplace(name, std::move(bytes));
  }

  std::vector<FixtureCase> cases;
  for (const auto& [name, bytes] : contents) {
    constexpr std::string_view ext = ".jsonl";
    if (name.size() <= ext.size() || name.compare(name.size() - ext.size(), ext.size(), ext) != 0) continue;
    FixtureCase c;
    c.id = name.substr(0, name.size() - ext.size());
    const auto scores = contents.find(c.id + ".subscores.json");
    if (scores == contents.end()) throw Error(ErrorCode::CorruptFixture, "no sub-score file for fixture", c.id);
    try {
      c.transcript = parse_transcript_jsonl(bytes);
      c.scores = scoring::CaseScores::from_json(nlohmann::json::parse(scores->second));
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::CorruptFixture, "fixture does not parse", c.id + ": " + e.what());
    } catch (const Error& e) {
      throw Error(ErrorCode::CorruptFixture, "fixture does not parse", c.id + ": " + e.what());
    }
    if (c.scores.case_id.empty()) c.scores.case_id = c.id;
    cases.push_back(std::move(c));
  }
  return cases;
}

void write_fixture_manifest(const std::string& dir) {
  nlohmann::ordered_json files;
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    const auto ext = entry.path().extension().string();
    if (entry.is_regular_file() && name != kManifest && (ext == ".jsonl" || ext == ".json")) paths.push_back(entry.path());
  }
  std::sort(paths.begin(), paths.end());
  for (const auto& p : paths) files[p.filename().string()] = sha256_hex(read_file(p));
  nlohmann::ordered_json manifest;
  manifest["algorithm"] = "sha256";
  manifest["files"] = files;
  std::ofstream out(fs::path(dir) / kManifest, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write manifest in " + dir);
  out << manifest.dump(2) << '\n';
}

}  // namespace msa::service
