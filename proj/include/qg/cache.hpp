#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "qg/rewrite.hpp"

namespace qg {

inline constexpr int kCacheSchemaVersion = 2;

std::string sha256_hex(const std::string& data);

// Content hash of (relations, order, bound); names the cache file.
std::string cache_key(const std::vector<NCPoly>& relations, const MonomialOrder& order, int degree_bound);

// Canonical text: identical systems serialize to identical bytes.
std::string serialize_system(const RewriteSystem& rs, const std::string& key);
// Throws CacheCorrupt on a hash mismatch or malformed body, VersionMismatch on schema drift.
RewriteSystem deserialize_system(const std::string& text, std::string* key = nullptr);

std::filesystem::path save_cache(const RewriteSystem& rs, const std::string& key, const std::filesystem::path& dir);
RewriteSystem load_cache(const std::filesystem::path& file, const std::string& expected_key = "");

// Writes the system to dir and reads it back.
RewriteSystem cache_roundtrip(const RewriteSystem& rs, const std::filesystem::path& dir);

// Loads dir/<key>.json when present and valid, otherwise completes and stores.
// An empty dir disables caching. *hit reports whether the cache was used.
RewriteSystem complete_cached(const std::vector<NCPoly>& relations, const MonomialOrder& order, int degree_bound,
                              const std::filesystem::path& dir, bool* hit = nullptr);

}  // namespace qg
