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

#ifndef MOMPOLY_COUNT_CACHE_HPP_
#define MOMPOLY_COUNT_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "mompoly/types.hpp"

namespace mompoly {

// Bumped whenever a counting engine change could alter stored values.
inline constexpr std::string_view kEngineVersion = "dp-3";

std::uint64_t fnv1a(std::string_view data);

// Append-only count cache, one JSON record per line after a header line
//
//   #mompoly-count-cache format=1 engine=<version> checksum=<hex>
//
// A file whose header does not match this build is left untouched and
// ignored. Records whose own checksum does not match are skipped.
class CountCache {
 public:
  explicit CountCache(std::filesystem::path path);

  const std::filesystem::path& path() const { return path_; }
  bool trusted() const { return trusted_; }
  std::size_t size() const { return records_.size(); }
  const std::vector<std::string>& warnings() const { return warnings_; }

  std::optional<BigInt> lookup(const FamilySpec& spec, std::int64_t dilation,
                               Strictness strictness) const;
  // No-op for untrusted files and for keys already present.
  void store(const FamilySpec& spec, std::int64_t dilation, Strictness strictness,
             const BigInt& count);

  static std::string header_line();
  static std::string record_line(const FamilySpec& spec, std::int64_t dilation,
                                 Strictness strictness, const BigInt& count);

 private:
  using Key = std::tuple<Group, int, int, std::int64_t, bool>;

  void load();

  std::filesystem::path path_;
  bool trusted_ = true;
  bool exists_ = false;
  std::map<Key, BigInt> records_;
  std::vector<std::string> warnings_;
};

}  // namespace mompoly

#endif  // MOMPOLY_COUNT_CACHE_HPP_
