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

#include "qchain/block/codec.hpp"

#include <algorithm>
#include <string>

#include "json.hpp"

#include "qchain/errors.hpp"

namespace qchain::block {

namespace {
constexpr const char* kCodecFormat = "qchain-codec/1";
}

BlockPayload BlockPayload::parse(std::string_view text) {
  if (text.empty()) throw ContractViolation("payload must contain at least one bit");
  return BlockPayload{quantum::parse_bits(text)};
}

std::string BlockPayload::str() const { return quantum::format_bits(bits); }

BlockCodec BlockCodec::identity(std::int64_t max_index) {
  BlockCodec codec;
  for (std::int64_t i = 1; i <= max_index; ++i) codec.set(i, {0, 1, 2, 3});
  return codec;
}

BlockCodec BlockCodec::random(std::int64_t max_index, quantum::RandomSource& rng) {
  BlockCodec codec;
  for (std::int64_t i = 1; i <= max_index; ++i) {
    Permutation p{0, 1, 2, 3};
    if (i == 1) {
      // Genesis payloads 00 and 01 must stay on r1 = 0.
      if (rng.uniform_index(2)) std::swap(p[0], p[1]);
      if (rng.uniform_index(2)) std::swap(p[2], p[3]);
    } else {
      // Fisher-Yates with the platform-independent index draw.
      for (std::size_t k = p.size() - 1; k > 0; --k) {
        std::swap(p[k], p[rng.uniform_index(k + 1)]);
      }
    }
    codec.set(i, p);
  }
  return codec;
}

void BlockCodec::set(std::int64_t index, Permutation table) {
  if (index < 1) throw ContractViolation("codec index must be >= 1");
  Permutation sorted = table;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Permutation{0, 1, 2, 3}) {
    throw ContractViolation("codec table for index " + std::to_string(index) + " is not a permutation");
  }
  tables_[index] = table;
}

const Permutation& BlockCodec::table(std::int64_t index) const {
  auto it = tables_.find(index);
  if (it == tables_.end()) {
    throw UnknownIndexError("codec has no bijection for block index " + std::to_string(index));
  }
  return it->second;
}

BitPair BlockCodec::forward(std::int64_t index, BitPair payload) const {
  return BitPair::from_value(table(index)[payload.value()]);
}

BitPair BlockCodec::inverse(std::int64_t index, BitPair encoded) const {
  const Permutation& t = table(index);
  const auto it = std::find(t.begin(), t.end(), encoded.value());
  return BitPair::from_value(static_cast<unsigned>(it - t.begin()));
}

std::string BlockCodec::serialize() const {
  nlohmann::ordered_json tables = nlohmann::ordered_json::object();
  for (const auto& [index, t] : tables_) {
    tables[std::to_string(index)] = std::vector<int>(t.begin(), t.end());
  }
  nlohmann::ordered_json doc;
  doc["format"] = kCodecFormat;
  doc["tables"] = std::move(tables);
  return doc.dump();
}

BlockCodec BlockCodec::deserialize(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("codec: ") + e.what());
  }
  if (!doc.is_object() || doc.value("format", "") != kCodecFormat) {
    throw ConfigError(std::string("codec: expected format tag \"") + kCodecFormat + "\"");
  }
  if (!doc.contains("tables") || !doc["tables"].is_object()) {
    throw ConfigError("codec: missing \"tables\" object");
  }
  BlockCodec codec;
  for (const auto& [key, value] : doc["tables"].items()) {
    std::int64_t index = 0;
    try {
      index = std::stoll(key);
    } catch (const std::exception&) {
      throw ConfigError("codec: table key \"" + key + "\" is not an integer index");
    }
    if (!value.is_array() || value.size() != 4) {
      throw ConfigError("codec: table " + key + " must list 4 entries");
    }
    Permutation p{};
    for (std::size_t k = 0; k < 4; ++k) {
      if (!value[k].is_number_integer()) throw ConfigError("codec: table " + key + " has a non-integer entry");
      const int v = value[k].get<int>();
      if (v < 0 || v > 3) throw ConfigError("codec: table " + key + " entry out of range");
      p[k] = static_cast<std::uint8_t>(v);
    }
    try {
      codec.set(index, p);
    } catch (const ContractViolation& e) {
      throw ConfigError(std::string("codec: ") + e.what());
    }
  }
  return codec;
}

BlockEncoding encode_block(const BlockCodec& codec, const PhaseSchedule& schedule,
                           const BlockPayload& payload, std::int64_t index) {
  if (payload.bits.empty()) throw ContractViolation("block payload must be nonempty");
  if (payload.bits.size() > kBlockCapacityBits) {
    throw CapacityError("payload \"" + payload.str() + "\" exceeds the block capacity of " +
                        std::to_string(kBlockCapacityBits) + " bits");
  }
  unsigned value = 0;
  for (std::uint8_t b : payload.bits) value = (value << 1) | b;
  const BitPair encoded = codec.forward(index, BitPair::from_value(value));
  if (index == 1 && encoded.r1 != 0) {
    throw GenesisConstraintError("genesis payload \"" + payload.str() + "\" maps to " + encoded.str() +
                                 "; the genesis string must be 00 or 01");
  }
  return BlockEncoding(index, encoded, schedule.phase_at(index));
}

BlockPayload decode_block(const BlockCodec& codec, const BlockEncoding& enc) {
  const BitPair p = codec.inverse(enc.index(), enc.bits());
  return BlockPayload{{p.r1, p.r2}};
}

}  // namespace qchain::block
