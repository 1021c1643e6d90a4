#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "diamonds/polynomial.hpp"

namespace diamonds {

struct OeisRecord {
  std::string id;  // "A" followed by six digits
  std::vector<BigInt> terms;
  std::string name;
};

bool is_oeis_id(const std::string& id);

// Accepts the current search response (a bare array, or null for no
// match) and the older {"results": [...]} envelope. Only number/id, name
// and data are read.
std::vector<OeisRecord> parse_oeis_response(const std::string& body);

// "id:A002294" or "terms:1,5,35". Throws ParseError on bad input.
std::string normalize_id_query(const std::string& id);
std::string normalize_terms_query(const std::string& terms);

// Single JSON file mapping normalized query -> {"body", "fetched_at"}.
// Writes go through a temporary file and a rename, so the file on disk is
// always a complete JSON document.
class OeisCache {
 public:
  explicit OeisCache(std::filesystem::path path);

  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& body);
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

// Fetches `path_and_query` from the endpoint and returns the response
// body; throws NetworkError.
using HttpGet = std::function<std::string(const std::string& endpoint,
                                          const std::string& path_and_query)>;

std::string default_http_get(const std::string& endpoint, const std::string& path_and_query);

class OeisClient {
 public:
  OeisClient(std::string endpoint, OeisCache* cache, HttpGet get = default_http_get);

  // normalized query -> records; the cache is consulted before the network.
  std::vector<OeisRecord> lookup(const std::string& normalized_query);

  bool last_from_cache() const { return last_from_cache_; }

 private:
  std::string endpoint_;
  OeisCache* cache_;
  HttpGet get_;
  bool last_from_cache_ = false;
};

}  // namespace diamonds
