#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <httplib.h>
#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = diamonds::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p.string();
}

}  // namespace

TEST(Cli, Count) {
  auto r = run({"count", "--v", "4", "--d", "3", "--avoid", "321"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5976 (brute_force)\n");
  r = run({"count", "--v", "4", "--d", "4", "--avoid", "231:321"});
  EXPECT_EQ(r.out, "686 (recursion)\n");
  r = run({"count", "--v", "4", "--d", "1", "--avoid", "123"});
  EXPECT_EQ(r.out, "0 (zero_rule)\n");
  r = run({"--format", "json", "count", "--v", "4", "--d", "2"});
  EXPECT_EQ(nlohmann::json::parse(r.out)["count"], 280);
}

TEST(Cli, CountPartialShapes) {
  EXPECT_EQ(run({"count", "--v", "5", "--d", "1", "--j", "1", "--avoid", "231"}).out,
            "10 (recursion)\n");
  EXPECT_EQ(run({"count", "--v", "5", "--d", "1", "--j", "1", "--avoid", "231", "--method",
                 "brute"}).out,
            "10 (brute_force)\n");
  EXPECT_EQ(run({"count", "--v", "5", "--d", "1", "--j", "2", "--avoid", "321"}).code, 0);
}

TEST(Cli, MethodSelection) {
  EXPECT_EQ(run({"count", "--v", "4", "--d", "2", "--avoid", "231", "--method", "brute"}).out,
            "18 (brute_force)\n");
  EXPECT_EQ(run({"count", "--v", "4", "--d", "2", "--avoid", "321", "--method", "formula"}).code,
            1);
}

TEST(Cli, Gfd) {
  EXPECT_EQ(run({"gfd", "--v", "5", "--d", "2", "--avoid", "231"}).out,
            "1+11x+37x^2+47x^3+21x^4+3x^5\n");
  EXPECT_EQ(run({"gfd", "--v", "4", "--d", "3", "--avoid", "321"}).out,
            "1+991x+2747x^2+1765x^3+430x^4+42x^5\n");
  EXPECT_EQ(run({"gfd", "--v", "4", "--d", "1", "--avoid", "132:213"}).out, "1\n");
  // no closed polynomial for the empty set: falls back to brute force
  EXPECT_EQ(run({"gfd", "--v", "4", "--d", "2"}).out,
            run({"gfd", "--v", "4", "--d", "2", "--method", "brute"}).out);
  const auto csv = run({"--format", "csv", "gfd", "--v", "4", "--d", "2", "--avoid", "213"});
  EXPECT_EQ(csv.out, "poly,method\n\"1+4x\",closed_form\n");
  const auto j = nlohmann::json::parse(run({"--format", "json", "gfd", "--v", "4", "--d", "2",
                                           "--avoid", "321"}).out);
  EXPECT_EQ(j["coeffs"], nlohmann::json::parse("[1,71,29,5]"));
}

TEST(Cli, TableCsvGolden) {
  const auto r = run({"--format", "csv", "table", "--v", "4", "--dmax", "3"});
  ASSERT_EQ(r.code, 0);
  const std::vector<std::string> want{
      "patterns,d1,d2,d3",  "none,2,280,277200", "123,0,0,0",          "132,1,5,35",
      "213,1,5,35",         "231,2,18,226",      "312,2,18,226",       "321,2,106,5976",
      "132:213,1,2,4",      "132:312,1,2,4",     "213:231,1,2,4",      "132:321,1,5,13",
      "213:321,1,5,13",     "231:312,2,8,32",    "231:321,2,14,98",    "312:321,2,14,98",
      "132:213:321,1,2,3",  "231:312:321,2,8,32"};
  EXPECT_EQ(lines(r.out), want);
}

TEST(Cli, TableBoundMarker) {
  const auto r = run({"--format", "csv", "--max-avoiders", "1000", "table", "--v", "4", "--dmax",
                      "4"});
  EXPECT_EQ(r.code, 0);
  const auto rows = lines(r.out);
  EXPECT_EQ(rows[7], "321,2,106,bound,bound");
  EXPECT_EQ(rows[5], "231,2,18,226,3298");
}

TEST(Cli, TableText) {
  const auto r = run({"table", "--v", "4", "--dmax", "3"});
  const auto rows = lines(r.out);
  EXPECT_EQ(rows[2], "132: 1, 5, 35");
  EXPECT_EQ(rows.back(), "231:312:321: 2, 8, 32");
  EXPECT_EQ(rows[1], "123: 0, 0, 0");
}

TEST(Cli, TableGfdJson) {
  const auto r = run({"--format", "json", "table", "--v", "5", "--dmax", "2", "--gfd"});
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["rows"][4]["patterns"], "231");
  EXPECT_EQ(doc["rows"][4]["polys"][1], "1+11x+37x^2+47x^3+21x^4+3x^5");
}

TEST(Cli, Dyck) {
  auto r = run({"dyck", "--v", "4", "--d", "1"});
  EXPECT_EQ(lines(r.out).size(), 1u);
  EXPECT_EQ(r.out.substr(0, 6), "ENNNN ");
  EXPECT_EQ(lines(run({"dyck", "--v", "4", "--d", "2"}).out).size(), 5u);
  r = run({"dyck", "--v", "4", "--d", "4", "--map"});
  EXPECT_NE(r.out.find("ENNNNENENNNNNNNENNNN touchpoints=3 corners=3 height=7 -> "
                       "13 14 15 16 6 7 8 9 5 10 11 12 1 2 3 4\n"),
            std::string::npos);
}

TEST(Cli, Enumerate) {
  const auto r = run({"enumerate", "--v", "4", "--d", "2", "--avoid", "213"});
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"1 2 3 4 5 6 7 8", "1 2 3 8 4 5 6 7",
                                                    "1 2 7 8 3 4 5 6", "1 6 7 8 2 3 4 5",
                                                    "5 6 7 8 1 2 3 4"}));
  const auto j = run({"--format", "json", "enumerate", "--v", "4", "--d", "1"});
  EXPECT_EQ(lines(j.out).front(), R"({"v":4,"diamonds":[{"bottom":1,"middles":[2,3],"top":4}]})");
}

TEST(Cli, PackingCheck) {
  const auto robot = write_temp(
      "diamonds_robot.json",
      R"({"objects":[{"weight":3,"task_times":[2,10,5,11]},{"weight":2,"task_times":[4,6,8,12]},)"
      R"({"weight":1,"task_times":[1,7,3,9]}]})");
  auto r = run({"packing-check", robot});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("unsafe: contains 231 at positions 1,2,9"), std::string::npos);

  const auto identity = write_temp(
      "diamonds_identity.json",
      R"({"objects":[{"weight":2,"task_times":[1,2,3,4]},{"weight":1,"task_times":[5,6,7,8]}]})");
  r = run({"--format", "json", "packing-check", identity});
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "safe");

  const auto broken = write_temp(
      "diamonds_broken.json", R"({"objects":[{"weight":1,"task_times":[1,2,3,9]}]})");
  EXPECT_EQ(run({"packing-check", broken}).code, 2);
  EXPECT_EQ(run({"packing-check", "/nonexistent/schedule.json"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"count", "--v", "4"}).code, 2);
  EXPECT_EQ(run({"count", "--v", "4", "--d", "1", "--avoid", "12x"}).code, 2);
  EXPECT_EQ(run({"count", "--v", "4", "--d", "1", "--j", "4"}).code, 2);
  EXPECT_EQ(run({"--format", "xml", "count", "--v", "4", "--d", "1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, BoundExceededExitsOne) {
  const auto r = run({"--max-avoiders", "10", "count", "--v", "4", "--d", "3", "--avoid", "321"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, OeisWithCacheReplay) {
  httplib::Server server;
  int hits = 0;
  server.Get("/search", [&](const httplib::Request& req, httplib::Response& res) {
    ++hits;
    const std::string q = req.get_param_value("q");
    if (q == "id:A109808") {
      res.set_content(R"([{"number":109808,"data":"2,14,98,686,4802","name":"pair row"}])",
                      "application/json");
    } else if (q == "1,5,35,285,2530") {
      res.set_content(R"([{"number":2294,"data":"1,5,35,285,2530,23751","name":"132 row"}])",
                      "application/json");
    } else {
      res.set_content("null", "application/json");
    }
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread worker([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  const std::string endpoint = "http://127.0.0.1:" + std::to_string(port);
  const auto cache = (std::filesystem::temp_directory_path() / "diamonds_cli_cache.json").string();
  std::filesystem::remove(cache);

  const auto by_id = run({"oeis", "--id", "A109808", "--cache", cache, "--endpoint", endpoint});
  EXPECT_EQ(by_id.code, 0);
  EXPECT_EQ(by_id.out, "A109808 2,14,98,686,4802 pair row\n");
  const auto by_terms =
      run({"oeis", "--terms", "1,5,35,285,2530", "--cache", cache, "--endpoint", endpoint});
  EXPECT_NE(by_terms.out.find("A002294"), std::string::npos);
  EXPECT_EQ(run({"oeis", "--terms", "7,7,7", "--cache", cache, "--endpoint", endpoint}).out, "");
  EXPECT_EQ(hits, 3);

  server.stop();
  worker.join();
  // offline now: cached queries replay byte for byte, others fail with 1
  EXPECT_EQ(run({"oeis", "--id", "A109808", "--cache", cache, "--endpoint", endpoint}).out,
            by_id.out);
  EXPECT_EQ(run({"oeis", "--id", "A000045", "--cache", cache, "--endpoint", endpoint}).code, 1);
  std::ifstream in(cache);
  EXPECT_NO_THROW(nlohmann::json::parse(in));
  EXPECT_EQ(run({"oeis", "--cache", cache}).code, 2);
  EXPECT_EQ(run({"oeis", "--id", "xyz", "--cache", cache}).code, 2);
}
