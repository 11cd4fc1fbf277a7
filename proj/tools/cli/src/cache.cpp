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

#include "primefrac/cli/cache.hpp"

#include <openssl/evp.h>
#include <unistd.h>

#include <array>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <sstream>

namespace primefrac::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kMagic = "# primefrac-cache v";

std::string body_of(const QuotientStream& stream) {
  std::string body;
  for (const auto& q : stream.quotients) {
    body += q.get_str();
    body += '\n';
  }
  return body;
}

// "key: value" header line.
std::string header_value(std::istream& in, std::string_view key, const fs::path& path) {
  std::string line;
  if (!std::getline(in, line) || line.rfind(std::string(key) + ": ", 0) != 0) {
    throw CorruptCacheError("cache header is missing '" + std::string(key) + "'", path);
  }
  return line.substr(key.size() + 2);
}

}  // namespace

std::string sha256_hex(std::string_view bytes) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx.get(), bytes.data(), bytes.size()) != 1 ||
      EVP_DigestFinal_ex(ctx.get(), md.data(), &len) != 1) {
    throw std::runtime_error("sha256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[md[i] >> 4];
    out += kHex[md[i] & 15];
  }
  return out;
}

fs::path cache_path(const PrimeFamily& family, const fs::path& dir) {
  std::string name = family.descriptor() + "_" + family.bound_text();
  for (char& c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                    c == '-' || c == '_';
    if (!ok) c = '_';
  }
  return dir / (name + ".pfc");
}

CacheManifest write_cache(const QuotientStream& stream, const fs::path& dir) {
  fs::create_directories(dir);
  CacheManifest m;
  m.family = stream.family.descriptor();
  m.bound = stream.family.bound_text();
  m.count = stream.quotients.size();
  const std::string body = body_of(stream);
  m.sha256 = sha256_hex(body);
  m.path = cache_path(stream.family, dir);

  fs::path tmp = m.path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out << kMagic << kCacheVersion << '\n'
        << "family: " << m.family << '\n'
        << "bound: " << m.bound << '\n'
        << "count: " << m.count << '\n'
        << "sha256: " << m.sha256 << '\n'
        << body;
    out.flush();
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, m.path);
  return m;
}

std::optional<QuotientStream> read_cache(const PrimeFamily& family, const fs::path& dir,
                                         CacheManifest* manifest) {
  const fs::path path = cache_path(family, dir);
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;

  std::string line;
  if (!std::getline(in, line) || line.rfind(kMagic, 0) != 0) {
    throw CorruptCacheError("not a primefrac cache file", path);
  }
  if (line.substr(kMagic.size()) != std::to_string(kCacheVersion)) return std::nullopt;

  CacheManifest m;
  m.path = path;
  m.family = header_value(in, "family", path);
  m.bound = header_value(in, "bound", path);
  const std::string count = header_value(in, "count", path);
  m.sha256 = header_value(in, "sha256", path);
  if (m.family != family.descriptor() || m.bound != family.bound_text()) {
    throw CorruptCacheError("cache header names another family or bound", path);
  }
  try {
    std::size_t used = 0;
    m.count = std::stoull(count, &used);
    if (used != count.size()) throw std::invalid_argument(count);
  } catch (const std::exception&) {
    throw CorruptCacheError("cache count is not a number", path);
  }

  std::ostringstream rest;
  rest << in.rdbuf();
  const std::string body = rest.str();
  if (sha256_hex(body) != m.sha256) throw CorruptCacheError("cache checksum mismatch", path);

  QuotientStream stream;
  stream.family = family;
  stream.provenance = family_provenance(family);
  stream.quotients.reserve(m.count);
  std::size_t start = 0;
  while (start < body.size()) {
    const auto end = body.find('\n', start);
    if (end == std::string::npos) throw CorruptCacheError("cache body is truncated", path);
    WholeNumber q;
    if (end == start || q.set_str(body.substr(start, end - start), 10) != 0) {
      throw CorruptCacheError("cache body holds a non-numeric line", path);
    }
    stream.quotients.push_back(std::move(q));
    start = end + 1;
  }
  if (stream.quotients.size() != m.count) throw CorruptCacheError("cache count mismatch", path);
  if (manifest) *manifest = m;
  return stream;
}

CacheManifest cache_roundtrip(const QuotientStream& stream, const fs::path& dir) {
  const CacheManifest written = write_cache(stream, dir);
  CacheManifest read;
  const auto back = read_cache(stream.family, dir, &read);
  if (!back || back->quotients != stream.quotients) {
    throw CorruptCacheError("cache round trip changed the stream", written.path);
  }
  return read;
}

QuotientStream load_or_generate(const PrimeFamily& family, const std::optional<fs::path>& dir,
                                bool refresh, const ResourceLimits& limits) {
  if (dir && !refresh) {
    if (auto cached = read_cache(family, *dir)) return std::move(*cached);
  }
  QuotientStream stream = family_quotients(family, limits);
  if (dir) write_cache(stream, *dir);
  return stream;
}

std::optional<fs::path> default_cache_dir() {
  if (const char* env = std::getenv("PRIMEFRAC_CACHE"); env && *env) return fs::path(env);
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
    return fs::path(xdg) / "primefrac";
  }
  if (const char* home = std::getenv("HOME"); home && *home) {
    return fs::path(home) / ".cache" / "primefrac";
  }
  return std::nullopt;
}

}  // namespace primefrac::cli
