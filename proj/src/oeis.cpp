#include "diamonds/oeis.hpp"

#include <chrono>
#include <fstream>
#include <regex>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "diamonds/error.hpp"

namespace diamonds {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<BigInt> parse_terms(const std::string& csv) {
  std::vector<BigInt> out;
  std::stringstream in(csv);
  std::string tok;
  static const std::regex integer("-?[0-9]+");
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (!std::regex_match(tok, integer)) throw ParseError("bad sequence term '" + tok + "'");
    out.emplace_back(tok);
  }
  return out;
}

std::string url_encode(const std::string& s) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c) || c == '-' || c == '_' || c == '.' || c == '~') {
      out += static_cast<char>(c);
    } else {
      out += '%';
      out += hex[c >> 4];
      out += hex[c & 15];
    }
  }
  return out;
}

std::string now_utc() {
  const auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace

bool is_oeis_id(const std::string& id) {
  static const std::regex re("A[0-9]{6}");
  return std::regex_match(id, re);
}

std::vector<OeisRecord> parse_oeis_response(const std::string& body) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("OEIS response is not JSON: ") + e.what());
  }
  const nlohmann::json* results = &doc;
  if (doc.is_object()) {
    if (!doc.contains("results")) throw ParseError("OEIS response lacks results");
    results = &doc["results"];
  }
  std::vector<OeisRecord> out;
  if (results->is_null()) return out;
  if (!results->is_array()) throw ParseError("OEIS results are not a list");
  for (const auto& item : *results) {
    OeisRecord rec;
    if (item.contains("number") && item["number"].is_number_integer()) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "A%06lld", item["number"].get<long long>());
      rec.id = buf;
    } else if (item.contains("id") && item["id"].is_string()) {
      rec.id = item["id"].get<std::string>();
    }
    if (!is_oeis_id(rec.id)) throw ParseError("OEIS record without a valid A-number");
    rec.name = item.value("name", "");
    rec.terms = parse_terms(item.value("data", ""));
    out.push_back(std::move(rec));
  }
  return out;
}

std::string normalize_id_query(const std::string& id) {
  std::string t = trim(id);
  if (!t.empty() && (t[0] == 'a')) t[0] = 'A';
  if (!t.empty() && t[0] != 'A') t = "A" + t;
  if (t.size() > 1 && t.size() < 7) t.insert(1, 7 - t.size(), '0');
  if (!is_oeis_id(t)) throw ParseError("not an OEIS id: '" + id + "'");
  return "id:" + t;
}

std::string normalize_terms_query(const std::string& terms) {
  const auto parsed = parse_terms(terms);
  if (parsed.empty()) throw ParseError("no terms given");
  std::string out = "terms:";
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    if (i) out += ',';
    out += parsed[i].str();
  }
  return out;
}

OeisCache::OeisCache(std::filesystem::path path) : path_(std::move(path)) {}

namespace {

nlohmann::json load_cache(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return nlohmann::json::object();
  try {
    auto doc = nlohmann::json::parse(in);
    if (doc.is_object()) return doc;
  } catch (const nlohmann::json::exception&) {
  }
  throw Error("OEIS cache " + path.string() + " is not a JSON object");
}

}  // namespace

std::optional<std::string> OeisCache::get(const std::string& key) const {
  const auto doc = load_cache(path_);
  if (auto it = doc.find(key); it != doc.end() && it->contains("body")) {
    return (*it)["body"].get<std::string>();
  }
  return std::nullopt;
}

void OeisCache::put(const std::string& key, const std::string& body) {
  auto doc = load_cache(path_);
  doc[key] = {{"body", body}, {"fetched_at", now_utc()}};
  if (path_.has_parent_path()) std::filesystem::create_directories(path_.parent_path());
  auto tmp = path_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << doc.dump(2) << '\n';
    if (!out) throw Error("cannot write OEIS cache " + tmp.string());
  }
  std::filesystem::rename(tmp, path_);
}

std::string default_http_get(const std::string& endpoint, const std::string& path_and_query) {
  httplib::Client client(endpoint);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  auto res = client.Get(path_and_query);
  if (!res) {
    throw NetworkError("GET " + endpoint + path_and_query + " failed: " +
                       httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw NetworkError("GET " + endpoint + path_and_query + " returned HTTP " +
                       std::to_string(res->status));
  }
  return res->body;
}

OeisClient::OeisClient(std::string endpoint, OeisCache* cache, HttpGet get)
    : endpoint_(std::move(endpoint)), cache_(cache), get_(std::move(get)) {}

std::vector<OeisRecord> OeisClient::lookup(const std::string& normalized_query) {
  if (cache_) {
    if (auto body = cache_->get(normalized_query)) {
      last_from_cache_ = true;
      return parse_oeis_response(*body);
    }
  }
  last_from_cache_ = false;
  const auto colon = normalized_query.find(':');
  const std::string kind = normalized_query.substr(0, colon);
  const std::string value = normalized_query.substr(colon + 1);
  const std::string q = kind == "id" ? "id:" + value : value;
  const std::string body = get_(endpoint_, "/search?q=" + url_encode(q) + "&fmt=json");
  auto records = parse_oeis_response(body);
  if (cache_) cache_->put(normalized_query, body);
  return records;
}

}  // namespace diamonds
