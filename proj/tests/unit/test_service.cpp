#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <thread>
#include <vector>

#include "aifp/io.hpp"
#include "aifp/service.hpp"
#include "httplib.h"
#include "json.hpp"

using namespace aifp;
using nlohmann::json;

namespace {

const Service& service() {
  static const Service s(default_inputs());
  return s;
}

HttpResponse get(const std::string& path, std::map<std::string, std::string> q = {}) {
  return service().handle("GET", path, q, "");
}
HttpResponse post(const std::string& path, const std::string& body) { return service().handle("POST", path, {}, body); }

json body(const HttpResponse& r) { return json::parse(r.body); }

}  // namespace

TEST(Api, Clusters) {
  const auto r = get("/v1/clusters");
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.content_type, "application/json");
  EXPECT_EQ(r.body, render_clusters(cluster_matrix(default_inputs()), Format::Json));
}

TEST(Api, ScenariosListsFivePresetsWithParameters) {
  const auto j = body(get("/v1/scenarios"));
  ASSERT_EQ(j.at("scenarios").size(), 5u);
  EXPECT_TRUE(j["scenarios"][0].contains("hardware_efficiency_factor"));
}

TEST(Api, PortfolioMatchesCliRendering) {
  const auto in = default_inputs();
  const std::string cli = render_footprint(aggregate_portfolio(in.portfolio, in.catalog, in.factors), Format::Json);
  EXPECT_EQ(post("/v1/portfolio", dump_portfolio(in.portfolio)).body, cli);
  EXPECT_EQ(post("/v1/portfolio", "").body, cli);
}

TEST(Api, PortfolioValidationIs400WithField) {
  auto j = json::parse(dump_portfolio(default_inputs().portfolio));
  j["genai_share"] = 1.3;
  const auto r = post("/v1/portfolio", j.dump());
  EXPECT_EQ(r.status, 400);
  EXPECT_EQ(body(r)["error"]["field"], "genai_share");
}

TEST(Api, ProjectIntermediate) {
  const auto r = post("/v1/project", R"({"scenario": "intermediate"})");
  ASSERT_EQ(r.status, 200);
  const double e = body(r)["results"][0]["index"]["final_energy"];
  EXPECT_NEAR(e, 755.0, 0.2 * 755.0);
}

TEST(Api, ProjectWithCustomPortfolioAndOverrides) {
  const auto in = default_inputs();
  json req = {{"scenario", {{"base", "high"}, {"pue", 1.1}}}, {"portfolio", json::parse(dump_portfolio(in.portfolio))}};
  const auto r = post("/v1/project", req.dump());
  ASSERT_EQ(r.status, 200) << r.body;
  req["scenario"]["pue"] = 0.2;
  const auto bad = post("/v1/project", req.dump());
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(body(bad)["error"]["field"], "scenario.pue");
}

TEST(Api, SweepWithRangeAndValues) {
  const auto a = post("/v1/sweep", R"({"scenario": "intermediate", "param": "agents_cagr", "range": "0.25:0.65:0.1"})");
  ASSERT_EQ(a.status, 200) << a.body;
  const auto j = body(a);
  EXPECT_EQ(j["points"].size(), 5u);
  EXPECT_EQ(j["energy_fit"].size(), 3u);
  const auto b =
      post("/v1/sweep", R"({"scenario": "intermediate", "param": "agents_cagr", "values": [0.25, 0.35, 0.45, 0.55, 0.65]})");
  EXPECT_EQ(body(b)["points"], j["points"]);
  EXPECT_EQ(post("/v1/sweep", R"({"scenario": "intermediate", "param": "speed", "values": [1]})").status, 400);
  EXPECT_EQ(post("/v1/sweep", R"({"scenario": "intermediate", "param": "agents_cagr"})").status, 400);
  EXPECT_EQ(post("/v1/sweep", R"({"scenario": "intermediate", "param": "model_size_factor", "values": [-1]})").status,
            400);
}

TEST(Api, OffsetSolvesAndReportsUnreachableAs422) {
  const auto r = post("/v1/offset", R"({"scenario": "intermediate", "target": 0.9})");
  ASSERT_EQ(r.status, 200) << r.body;
  EXPECT_GT(body(r)["hardware_efficiency_factor"].get<double>(), 1.0);
  const auto u = post("/v1/offset", R"({"scenario": "high", "target": 0.9999999})");
  EXPECT_EQ(u.status, 422) << u.body;
  EXPECT_EQ(post("/v1/offset", R"({"scenario": "high", "target": 1.5})").status, 400);
}

TEST(Api, Score) {
  const auto r = get("/v1/score", {{"kwh", "3.46e-8"}});
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(body(r)["grade"], "B");
  EXPECT_EQ(get("/v1/score").status, 400);
  EXPECT_EQ(get("/v1/score", {{"kwh", "abc"}}).status, 400);
  EXPECT_EQ(get("/v1/score", {{"kwh", "-1"}}).status, 400);
  EXPECT_EQ(get("/v1/score", {{"kwh", "1e-3x"}}).status, 400);
}

TEST(Api, RoutingErrors) {
  EXPECT_EQ(get("/v1/nothing").status, 404);
  EXPECT_EQ(get("/v1/portfolio").status, 405);
  EXPECT_EQ(post("/v1/clusters", "").status, 405);
}

TEST(Api, MalformedInputNeverGives500) {
  const std::vector<std::string> bodies{
      "",  "{",  "[]", "null", "42", "\"x\"", "{\"scenario\": 3}", "{\"scenario\": {}}", "{\"scenario\": null}",
      "{\"scenario\": \"high\", \"target\": \"a\"}", "{\"scenario\": \"high\", \"values\": {}}",
      "{\"scenario\": \"high\", \"param\": \"agents_cagr\", \"range\": \"1:0:1\"}",
      "{\"portfolio\": [], \"scenario\": \"high\"}", "{\"n_use_cases\": -1}", "\xff\xfe",
      R"({"scenario": {"base": "high", "cagr": {"agents": "fast"}}})"};
  for (const char* path : {"/v1/portfolio", "/v1/project", "/v1/sweep", "/v1/offset"}) {
    for (const auto& b : bodies) {
      const auto r = post(path, b);
      EXPECT_GE(r.status, 200) << path << " " << b;
      EXPECT_LT(r.status, 500) << path << " " << b << " -> " << r.body;
      EXPECT_NO_THROW(json::parse(r.body));
    }
  }
}

TEST(Api, ConcurrentIdenticalRequestsGiveIdenticalBodies) {
  const std::string req = R"({"scenario": "tech"})";
  const std::string want = post("/v1/project", req).body;
  std::vector<std::string> got(8);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < got.size(); ++i) {
    pool.emplace_back([&, i] { got[i] = post("/v1/project", req).body; });
  }
  for (auto& t : pool) t.join();
  for (const auto& g : got) EXPECT_EQ(g, want);
}

TEST(Http, EndpointsStaticFilesAndCors) {
  const auto dir = std::filesystem::temp_directory_path() / "aifp_static_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "index.html") << "<html>explorer</html>";

  ServeOptions opt;
  opt.port = 0;
  opt.static_dir = dir.string();
  HttpServer server(service(), opt);
  const int port = server.bind();
  ASSERT_GT(port, 0);
  std::thread loop([&] { server.listen(); });

  httplib::Client cli("127.0.0.1", port);
  auto score = cli.Get("/v1/score?kwh=3.46e-8");
  ASSERT_TRUE(score);
  EXPECT_EQ(score->status, 200);
  EXPECT_EQ(json::parse(score->body)["grade"], "B");
  EXPECT_EQ(score->get_header_value("Access-Control-Allow-Origin"), "*");

  auto portfolio = cli.Post("/v1/portfolio", "", "application/json");
  ASSERT_TRUE(portfolio);
  EXPECT_EQ(portfolio->body, post("/v1/portfolio", "").body);

  auto bad = cli.Post("/v1/project", "{", "application/json");
  ASSERT_TRUE(bad);
  EXPECT_EQ(bad->status, 400);

  auto pre = cli.Options("/v1/project");
  ASSERT_TRUE(pre);
  EXPECT_EQ(pre->status, 204);
  EXPECT_NE(pre->get_header_value("Access-Control-Allow-Methods").find("POST"), std::string::npos);

  auto page = cli.Get("/index.html");
  ASSERT_TRUE(page);
  EXPECT_EQ(page->status, 200);
  EXPECT_EQ(page->body, "<html>explorer</html>");

  server.stop();
  loop.join();
  std::filesystem::remove_all(dir);
}

TEST(Http, MissingStaticDirRejected) {
  ServeOptions opt;
  opt.static_dir = "/nonexistent/aifp/static";
  EXPECT_THROW(HttpServer(service(), opt), std::invalid_argument);
}
