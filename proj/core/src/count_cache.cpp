// Copyright 2026 The mompoly Authors
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

#include "mompoly/count_cache.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace mompoly {

namespace {

constexpr std::string_view kHeaderPrefix = "#mompoly-count-cache";

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string payload(const FamilySpec& spec, std::int64_t n, bool strict, const std::string& count) {
  std::ostringstream os;
  os << to_string(spec.group()) << '|' << spec.k() << '|' << spec.q() << '|' << n << '|'
     << (strict ? 1 : 0) << '|' << count << '|' << kEngineVersion;
  return os.str();
}

}  // namespace

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string CountCache::header_line() {
  std::string body = "format=1 engine=" + std::string(kEngineVersion);
  return std::string(kHeaderPrefix) + " " + body + " checksum=" + hex(fnv1a(body));
}

std::string CountCache::record_line(const FamilySpec& spec, std::int64_t dilation,
                                    Strictness strictness, const BigInt& count) {
  const std::string c = count.get_str();
  nlohmann::ordered_json j;
  j["group"] = std::string(to_string(spec.group()));
  j["k"] = spec.k();
  j["q"] = spec.q();
  j["N"] = dilation;
  j["strict"] = is_strict(strictness);
  j["count"] = c;
  j["engine"] = std::string(kEngineVersion);
  j["crc"] = hex(fnv1a(payload(spec, dilation, is_strict(strictness), c)));
  return j.dump();
}

CountCache::CountCache(std::filesystem::path path) : path_(std::move(path)) { load(); }

void CountCache::load() {
  std::ifstream in(path_);
  if (!in) return;
  exists_ = true;
  std::string line;
  if (!std::getline(in, line)) {
    // An empty file is adopted; the header is written with the first record.
    exists_ = false;
    return;
  }
  if (line != header_line()) {
    trusted_ = false;
    warnings_.push_back("cache " + path_.string() +
                        ": header does not match this engine version; ignoring file");
    return;
  }
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const std::string where = "cache " + path_.string() + ":" + std::to_string(lineno);
    try {
      const auto j = nlohmann::json::parse(line);
      const FamilySpec spec(parse_group(j.at("group").get<std::string>()), j.at("k").get<int>(),
                            j.at("q").get<int>());
      const auto n = j.at("N").get<std::int64_t>();
      const bool strict = j.at("strict").get<bool>();
      const auto count = j.at("count").get<std::string>();
      if (j.at("engine").get<std::string>() != kEngineVersion ||
          j.at("crc").get<std::string>() != hex(fnv1a(payload(spec, n, strict, count)))) {
        warnings_.push_back(where + ": checksum mismatch; record ignored");
        continue;
      }
      BigInt value;
      if (n < 0 || count.empty() || value.set_str(count, 10) != 0 || value < 0) {
        warnings_.push_back(where + ": malformed count; record ignored");
        continue;
      }
      const Key key{spec.group(), spec.k(), spec.q(), n, strict};
      auto [it, inserted] = records_.emplace(key, value);
      if (!inserted && it->second != value) {
        warnings_.push_back(where + ": conflicting duplicate record; keeping the first");
      }
    } catch (const std::exception& e) {
      warnings_.push_back(where + ": unreadable record ignored (" + e.what() + ")");
    }
  }
}

std::optional<BigInt> CountCache::lookup(const FamilySpec& spec, std::int64_t dilation,
                                         Strictness strictness) const {
  if (!trusted_) return std::nullopt;
  auto it = records_.find(Key{spec.group(), spec.k(), spec.q(), dilation, is_strict(strictness)});
  if (it == records_.end()) return std::nullopt;
  return it->second;
}

void CountCache::store(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
                       const BigInt& count) {
  if (!trusted_) return;
  const Key key{spec.group(), spec.k(), spec.q(), dilation, is_strict(strictness)};
  if (records_.count(key) != 0) return;
  std::ofstream out(path_, exists_ ? std::ios::app : std::ios::trunc);
  if (!out) {
    warnings_.push_back("cache " + path_.string() + ": cannot open for writing");
    trusted_ = false;
    return;
  }
  if (!exists_) {
    out << header_line() << '\n';
    exists_ = true;
  }
  out << record_line(spec, dilation, strictness, count) << '\n';
  records_.emplace(key, count);
}

}  // namespace mompoly
