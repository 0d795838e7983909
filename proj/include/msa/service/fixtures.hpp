#pragma once

#include <string>
#include <vector>

#include "msa/scoring/scorecard.hpp"
#include "msa/transcript.hpp"

namespace msa::service {

struct FixtureCase {
  std::string id;
  Transcript transcript;
  scoring::CaseScores scores;
};

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view bytes);

/// Loads caseN.jsonl / caseN.subscores.json pairs listed in <dir>/MANIFEST.json
/// ({"algorithm": "sha256", "files": {"name": "hex", ...}}), verifying every
/// listed file. Errors: CorruptFixture on a missing file, hash mismatch or
/// malformed manifest.
std::vector<FixtureCase> load_fixtures(const std::string& dir);

/// Writes MANIFEST.json covering every *.jsonl and *.json file in `dir`.
void write_fixture_manifest(const std::string& dir);

}  // namespace msa::service
