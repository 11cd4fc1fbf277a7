// Copyright 2026 The primefrac Authors
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

// On-disk quotient cache. One ASCII file per family and bound:
//
//   # primefrac-cache v1
//   family: twin
//   bound: 10000
//   count: 410
//   sha256: <hex digest of the body>
//   3
//   5
//   ...
//
// The body is every quotient in decimal followed by '\n'; the digest covers
// exactly those bytes.

#ifndef PRIMEFRAC_CLI_CACHE_HPP_
#define PRIMEFRAC_CLI_CACHE_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "primefrac/primes.hpp"

namespace primefrac::cli {

inline constexpr int kCacheVersion = 1;

struct CacheManifest {
  int version = kCacheVersion;
  std::string family;
  std::string bound;
  std::uint64_t count = 0;
  std::string sha256;
  std::filesystem::path path;
};

class CorruptCacheError : public std::runtime_error {
 public:
  CorruptCacheError(const std::string& message, std::filesystem::path path)
      : std::runtime_error(message), path_(std::move(path)) {}
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

std::string sha256_hex(std::string_view bytes);

// <dir>/<descriptor>_<bound>.pfc with unsafe characters replaced.
std::filesystem::path cache_path(const PrimeFamily& family, const std::filesystem::path& dir);

// Atomic write (temp file, then rename). Creates `dir` if needed.
CacheManifest write_cache(const QuotientStream& stream, const std::filesystem::path& dir);

// nullopt when the file is missing or carries another format version.
// Throws CorruptCacheError on a malformed header, a family/bound mismatch,
// a count mismatch or a checksum mismatch.
std::optional<QuotientStream> read_cache(const PrimeFamily& family,
                                         const std::filesystem::path& dir,
                                         CacheManifest* manifest = nullptr);

// Writes, reads back and checks elementwise equality.
CacheManifest cache_roundtrip(const QuotientStream& stream, const std::filesystem::path& dir);

// Cached stream when present and valid, else generated (and stored when a
// directory is given). `refresh` skips the read.
QuotientStream load_or_generate(const PrimeFamily& family,
                                const std::optional<std::filesystem::path>& dir, bool refresh,
                                const ResourceLimits& limits = {});

// PRIMEFRAC_CACHE, else $XDG_CACHE_HOME/primefrac, else $HOME/.cache/primefrac.
std::optional<std::filesystem::path> default_cache_dir();

}  // namespace primefrac::cli

#endif  // PRIMEFRAC_CLI_CACHE_HPP_
