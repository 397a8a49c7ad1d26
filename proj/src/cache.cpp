#include "qg/cache.hpp"

#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "qg/errors.hpp"

namespace qg {

namespace {

using json = nlohmann::ordered_json;

json word_json(const Word& w) {
  json a = json::array();
  for (std::size_t i = 0; i < w.size(); ++i) a.push_back(static_cast<int>(gen_at(w, i)));
  return a;
}

Word word_from_json(const json& a, std::size_t num_gens) {
  if (!a.is_array()) throw Error(ErrorCode::CacheCorrupt, "word is not an array");
  Word w;
  for (const auto& g : a) {
    if (!g.is_number_integer()) throw Error(ErrorCode::CacheCorrupt, "generator index is not an integer");
    const int v = g.get<int>();
    if (v < 0 || static_cast<std::size_t>(v) >= num_gens) throw Error(ErrorCode::CacheCorrupt, "generator out of range");
    w.push_back(static_cast<char>(v));
  }
  return w;
}

json poly_json(const NCPoly& p, const MonomialOrder& order) {
  json a = json::array();
  for (const auto& [w, c] : p.sorted(order)) a.push_back(json{{"word", word_json(w)}, {"coeff", to_string(c)}});
  return a;
}

json order_json(const MonomialOrder& order) {
  json refs = json::array();
  for (const auto& r : order.refinements())
    refs.push_back(json{{"kind", r.kind == OrderRefinement::Kind::Weight ? "weight" : "lex"}, {"values", r.values}});
  return json{{"weights", order.weights()}, {"precedence", order.precedence()}, {"refinements", refs}};
}

MonomialOrder order_from_json(const json& j) {
  std::vector<OrderRefinement> refs;
  for (const auto& r : j.at("refinements")) {
    OrderRefinement o;
    const std::string kind = r.at("kind").get<std::string>();
    if (kind == "weight") o.kind = OrderRefinement::Kind::Weight;
    else if (kind == "lex") o.kind = OrderRefinement::Kind::Lex;
    else throw Error(ErrorCode::CacheCorrupt, "unknown refinement kind " + kind);
    o.values = r.at("values").get<std::vector<int>>();
    refs.push_back(std::move(o));
  }
  return MonomialOrder(j.at("weights").get<std::vector<int>>(), j.at("precedence").get<std::vector<int>>(),
                       std::move(refs));
}

json body_json(const RewriteSystem& rs) {
  json rules = json::array();
  for (const auto& r : rs.rules()) rules.push_back(json{{"lead", word_json(r.lead)}, {"tail", poly_json(r.tail, rs.order())}});
  return json{{"order", order_json(rs.order())},
              {"certified_degree", rs.certified_degree()},
              {"complete", rs.complete()},
              {"unit_collapse", rs.unit_collapse()},
              {"rules", rules}};
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorCode::Io, "sha256 failed");
  std::ostringstream os;
  for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return os.str();
}

std::string cache_key(const std::vector<NCPoly>& relations, const MonomialOrder& order, int degree_bound) {
  json rels = json::array();
  for (const auto& r : relations) rels.push_back(poly_json(r, order));
  json j{{"schema", kCacheSchemaVersion}, {"order", order_json(order)}, {"bound", degree_bound}, {"relations", rels}};
  return sha256_hex(j.dump());
}

std::string serialize_system(const RewriteSystem& rs, const std::string& key) {
  json body = body_json(rs);
  json j{{"format", "qg-rewrite-cache"},
         {"version", kCacheSchemaVersion},
         {"key", key},
         {"content_hash", sha256_hex(body.dump())},
         {"system", body}};
  return j.dump(1) + "\n";
}

RewriteSystem deserialize_system(const std::string& text, std::string* key) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, std::string("cache is not valid JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || j.value("format", "") != "qg-rewrite-cache")
      throw Error(ErrorCode::CacheCorrupt, "not a rewrite cache file");
    const int version = j.at("version").get<int>();
    if (version != kCacheSchemaVersion)
      throw Error(ErrorCode::VersionMismatch, "cache schema version " + std::to_string(version) + ", expected " +
                                                  std::to_string(kCacheSchemaVersion));
    const json& body = j.at("system");
    if (sha256_hex(body.dump()) != j.at("content_hash").get<std::string>())
      throw Error(ErrorCode::CacheCorrupt, "content hash mismatch");
    MonomialOrder order = order_from_json(body.at("order"));
    std::vector<RewriteRule> rules;
    for (const auto& r : body.at("rules")) {
      RewriteRule rule;
      rule.lead = word_from_json(r.at("lead"), order.num_gens());
      for (const auto& t : r.at("tail"))
        rule.tail.add_term(word_from_json(t.at("word"), order.num_gens()), parse_scalar(t.at("coeff").get<std::string>()));
      rules.push_back(std::move(rule));
    }
    if (key) *key = j.at("key").get<std::string>();
    return RewriteSystem(std::move(order), std::move(rules), body.at("certified_degree").get<int>(),
                         body.at("complete").get<bool>(), body.at("unit_collapse").get<bool>());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::CacheCorrupt, std::string("malformed cache: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::VersionMismatch || e.code() == ErrorCode::CacheCorrupt) throw;
    throw Error(ErrorCode::CacheCorrupt, std::string("malformed cache: ") + e.what());
  }
}

std::filesystem::path save_cache(const RewriteSystem& rs, const std::string& key, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot create cache directory " + dir.string() + ": " + ec.message());
  const auto file = dir / (key + ".json");
  const auto tmp = dir / (key + ".json.tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
    out << serialize_system(rs, key);
    if (!out) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw Error(ErrorCode::Io, "cannot rename cache file: " + ec.message());
  return file;
}

RewriteSystem load_cache(const std::filesystem::path& file, const std::string& expected_key) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + file.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  std::string key;
  RewriteSystem rs = deserialize_system(ss.str(), &key);
  if (!expected_key.empty() && key != expected_key) throw Error(ErrorCode::CacheCorrupt, "cache key mismatch");
  return rs;
}

RewriteSystem cache_roundtrip(const RewriteSystem& rs, const std::filesystem::path& dir) {
  const std::string key = sha256_hex(serialize_system(rs, ""));
  return load_cache(save_cache(rs, key, dir), key);
}

RewriteSystem complete_cached(const std::vector<NCPoly>& relations, const MonomialOrder& order, int degree_bound,
                              const std::filesystem::path& dir, bool* hit) {
  if (hit) *hit = false;
  if (dir.empty()) return complete_truncated(relations, order, degree_bound);
  const std::string key = cache_key(relations, order, degree_bound);
  const auto file = dir / (key + ".json");
  if (std::filesystem::exists(file)) {
    try {
      RewriteSystem rs = load_cache(file, key);
      if (rs.order() == order && rs.certified_degree() == degree_bound) {
        if (hit) *hit = true;
        return rs;
      }
    } catch (const Error&) {
      // Stale or damaged entries are rebuilt below.
    }
  }
  RewriteSystem rs = complete_truncated(relations, order, degree_bound);
  save_cache(rs, key, dir);
  return rs;
}

}  // namespace qg
