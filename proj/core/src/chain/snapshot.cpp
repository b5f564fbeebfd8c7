// Copyright 2026 The qchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qchain/chain/snapshot.hpp"

#include <cmath>

#include "json.hpp"

#include "qchain/decimal.hpp"
#include "qchain/errors.hpp"

namespace qchain::chain {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_snapshot(const ChainState& chain) {
  ordered_json doc;
  doc["format"] = kSnapshotFormat;
  doc["mode"] = to_string(chain.mode());
  doc["theta1"] = chain.schedule().theta1();
  doc["n"] = chain.schedule().ratio();
  doc["block_count"] = chain.block_count();
  ordered_json strings = ordered_json::array();
  for (const auto& s : chain.strings()) strings.push_back(s.str());
  doc["strings"] = std::move(strings);
  doc["cumulative_phase"] = round_significant(chain.cumulative_phase());
  doc["branch0"] = quantum::format_bits(chain.branch0_label());
  doc["absorbed_count"] = chain.absorbed_count();
  doc["timestamps"] = chain.timestamps();
  doc["tampered"] = chain.tampered();
  doc["obfuscated"] = chain.obfuscated();
  if (chain.explicit_state()) {
    ordered_json amps = ordered_json::array();
    for (const auto& a : chain.explicit_state()->amplitudes()) {
      amps.push_back({round_significant(a.real()), round_significant(a.imag())});
    }
    doc["state"] = std::move(amps);
  }
  return doc.dump();
}

namespace {

template <typename T>
T required(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ConfigError(std::string("snapshot: missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("snapshot: field \"") + key + "\" has the wrong type");
  }
}

}  // namespace

ChainState from_snapshot(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("snapshot: ") + e.what());
  }
  if (!doc.is_object() || required<std::string>(doc, "format") != kSnapshotFormat) {
    throw ConfigError("snapshot: expected format tag \"" + std::string(kSnapshotFormat) + "\"");
  }

  ChainMode mode;
  std::vector<block::BitPair> strings;
  try {
    mode = parse_chain_mode(required<std::string>(doc, "mode"));
    for (const auto& s : required<std::vector<std::string>>(doc, "strings")) strings.push_back(block::BitPair::parse(s));
  } catch (const ContractViolation& e) {
    throw ConfigError(std::string("snapshot: ") + e.what());
  }
  const block::PhaseSchedule schedule(required<double>(doc, "theta1"), required<std::int64_t>(doc, "n"));
  if (strings.empty()) throw ConfigError("snapshot: chain has no blocks");
  ChainState chain = reconstruct(schedule, strings, mode);

  const double theta = required<double>(doc, "cumulative_phase");
  if (std::abs(theta - chain.cumulative_phase()) > 1e-9) {
    throw ConfigError("snapshot: cumulative_phase disagrees with the schedule and strings");
  }
  if (required<std::string>(doc, "branch0") != quantum::format_bits(chain.branch0_label())) {
    throw ConfigError("snapshot: branch0 label disagrees with the strings");
  }
  if (required<std::size_t>(doc, "absorbed_count") != chain.absorbed_count()) {
    throw ConfigError("snapshot: absorbed_count disagrees with mode and length");
  }

  const bool tampered = required<bool>(doc, "tampered");
  const bool obfuscated = required<bool>(doc, "obfuscated");
  if (!doc.contains("state")) {
    if (tampered || obfuscated) throw ConfigError("snapshot: tampered/obfuscated chain without a state");
    return chain;
  }
  const auto& raw = doc.at("state");
  if (!raw.is_array()) throw ConfigError("snapshot: state must be an array of [re, im] pairs");
  std::vector<quantum::Complex> amps;
  amps.reserve(raw.size());
  for (const auto& pair : raw) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
      throw ConfigError("snapshot: state entries must be [re, im] number pairs");
    }
    amps.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  const std::size_t qubits = mode == ChainMode::Temporal ? 1 : chain.qubit_count();
  if (amps.size() != (std::size_t{1} << qubits)) throw ConfigError("snapshot: state has the wrong length");
  double norm2 = 0.0;
  for (const auto& a : amps) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-9) throw ConfigError("snapshot: state is not normalized");
  return with_explicit_state(chain, quantum::StateVector::normalized(qubits, std::move(amps)), tampered, obfuscated);
}

}  // namespace qchain::chain
