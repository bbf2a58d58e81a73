#include <gtest/gtest.h>

#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "service.hpp"

using nlohmann::json;
using spmut::Response;
using spmut::Service;

namespace {

const char* kTriangleMatrix = R"({"n":3,"d":[1,1,2],"rows":[[0,1,-2],[-1,0,2],[1,-1,0]]})";

json body(const Response& r) { return json::parse(r.body); }

std::string create(Service& svc, const std::string& doc) {
  const Response r = svc.create(doc);
  EXPECT_EQ(r.status, 201) << r.body;
  return body(r).at("id").get<std::string>();
}

// A species document with S = u w t on the triangle.
std::string triangle_species_doc() {
  json doc = {{"tower", {{"p", 3}, {"weights", {1, 1, 2}}}},
              {"quiver",
               {{"weights", {1, 1, 2}},
                {"arrows",
                 {{{"id", "u"}, {"from", 2}, {"to", 1}},
                  {{"id", "w"}, {"from", 3}, {"to", 2}},
                  {{"id", "t"}, {"from", 1}, {"to", 3}}}}}},
              {"potential", {{"terms", {{{"coeff", 1}, {"omegas", {0, 0, 0, 0}}, {"arrows", {"u", "w", "t"}}}}}}}};
  return doc.dump();
}

}  // namespace

TEST(Service, CreateFromMatrixConvertsToQuiver) {
  Service svc;
  const Response r = svc.create(kTriangleMatrix);
  ASSERT_EQ(r.status, 201);
  const json s = body(r);
  EXPECT_EQ(s.at("kind"), "quiver");
  EXPECT_EQ(s.at("p"), 3);
  EXPECT_EQ(s.at("arrow_count"), 3);
  EXPECT_TRUE(s.at("two_acyclic"));
  EXPECT_EQ(s.at("matrix").at("rows"), json::parse(kTriangleMatrix).at("rows"));
  EXPECT_FALSE(s.at("can_undo"));
  EXPECT_EQ(s.at("history_depth"), 0);
  EXPECT_TRUE(s.at("sequence").empty());
}

TEST(Service, MutateMatchesMatrixMutationAndUndoRestoresBytes) {
  Service svc;
  const std::string id = create(svc, kTriangleMatrix);
  const std::string before = svc.get(id).body;

  const Response m = svc.mutate(id, R"({"vertex":3})");
  ASSERT_EQ(m.status, 200) << m.body;
  const json after = body(m);
  EXPECT_EQ(after.at("matrix").at("rows"), json::parse("[[0,-1,2],[1,0,-2],[-1,1,0]]"));
  EXPECT_EQ(after.at("sequence"), json::parse("[3]"));
  EXPECT_TRUE(after.at("can_undo"));

  const Response u = svc.undo(id);
  ASSERT_EQ(u.status, 200);
  EXPECT_EQ(u.body, before);
  EXPECT_EQ(svc.get(id).body, before);
}

TEST(Service, DoubleMutationRestoresMultiplicities) {
  Service svc;
  const std::string id = create(svc, kTriangleMatrix);
  const json start = body(svc.get(id));
  svc.mutate(id, R"({"vertex":2})");
  const json twice = body(svc.mutate(id, R"({"vertex":2})"));
  EXPECT_EQ(twice.at("multiplicities"), start.at("multiplicities"));
  EXPECT_EQ(twice.at("history_depth"), 2);
}

TEST(Service, SpeciesSessionFollowsWorkedExample) {
  Service svc;
  const std::string id = create(svc, triangle_species_doc());
  const json m = body(svc.mutate(id, R"({"vertex":3})"));
  EXPECT_EQ(m.at("kind"), "species");
  EXPECT_TRUE(m.at("two_acyclic"));
  EXPECT_TRUE(m.at("residual_2cycles").empty());
  EXPECT_EQ(m.at("arrow_count"), 3);
  EXPECT_EQ(m.at("potential").at("term_count"), 1);

  Service plain;
  const std::string qid = create(plain, kTriangleMatrix);
  const json q = body(plain.mutate(qid, R"({"vertex":3})"));
  EXPECT_EQ(m.at("multiplicities"), q.at("multiplicities"));
}

TEST(Service, DegenerateMutationReportsResidual) {
  json doc = json::parse(triangle_species_doc());
  doc.erase("potential");
  Service svc;
  const std::string id = create(svc, doc.dump());
  const json m = body(svc.mutate(id, R"({"vertex":3})"));
  EXPECT_FALSE(m.at("two_acyclic"));
  ASSERT_EQ(m.at("residual_2cycles").size(), 1u);
  EXPECT_EQ(m.at("residual_2cycles")[0].at("count"), 1);

  // The degenerate state cannot be mutated further.
  const Response again = svc.mutate(id, R"({"vertex":1})");
  EXPECT_EQ(again.status, 409);
  EXPECT_EQ(body(again).at("code"), "not_two_acyclic");
}

TEST(Service, SearchSetsBadgeAndUndoClearsIt) {
  Service svc;
  const std::string id = create(svc, kTriangleMatrix);
  const std::string before = svc.get(id).body;
  const Response r = svc.search(id, R"({"seq":[3,1,2]})");
  ASSERT_EQ(r.status, 200) << r.body;
  const json out = body(r);
  ASSERT_TRUE(out.at("found"));
  EXPECT_EQ(out.at("state").at("kind"), "species");
  EXPECT_TRUE(out.at("state").at("search").at("found"));
  EXPECT_EQ(out.at("state").at("search").at("seq"), json::parse("[3,1,2]"));

  // Mutating along the searched sequence stays 2-acyclic.
  for (int k : {3, 1, 2}) {
    const json step = body(svc.mutate(id, json{{"vertex", k}}.dump()));
    EXPECT_TRUE(step.at("two_acyclic")) << k;
    EXPECT_TRUE(step.at("search").is_null());
  }
  for (int i = 0; i < 3; ++i) svc.undo(id);
  EXPECT_FALSE(body(svc.get(id)).at("search").is_null());

  const Response u = svc.undo(id);
  ASSERT_EQ(u.status, 200);
  EXPECT_TRUE(body(u).at("search").is_null());
  EXPECT_EQ(u.body, before);
}

TEST(Service, ErrorsCarryCodesAndStatuses) {
  Service svc;
  EXPECT_EQ(svc.get("nope").status, 404);
  EXPECT_EQ(body(svc.get("nope")).at("code"), "not_found");

  const Response bad = svc.create("{not json");
  EXPECT_EQ(bad.status, 400);
  EXPECT_EQ(body(bad).at("code"), "parse_error");

  const Response weights = svc.create(R"({"weights":[0,1],"arrows":[]})");
  EXPECT_EQ(weights.status, 400);
  EXPECT_EQ(body(weights).at("code"), "invalid_argument");

  const Response species =
      svc.create(R"({"tower":{"p":5,"weights":[2,4]},"quiver":{"weights":[2,4],"arrows":[]}})");
  EXPECT_EQ(species.status, 400);
  EXPECT_EQ(body(species).at("code"), "not_strongly_primitive");

  const std::string id = create(svc, kTriangleMatrix);
  const Response empty = svc.undo(id);
  EXPECT_EQ(empty.status, 409);
  EXPECT_EQ(body(empty).at("code"), "empty_history");

  const Response missing = svc.mutate(id, "{}");
  EXPECT_EQ(missing.status, 400);
  const Response range = svc.mutate(id, R"({"vertex":7})");
  EXPECT_EQ(range.status, 400);
  EXPECT_EQ(body(range).at("code"), "unknown_vertex");

  const Response step = svc.search(id, R"({"seq":[1,9]})");
  EXPECT_EQ(step.status, 400);
  EXPECT_EQ(body(step).at("step"), 2);
}

TEST(Service, DispatchRoutes) {
  Service svc;
  const Response created = svc.dispatch("POST", "/api/session", kTriangleMatrix);
  ASSERT_EQ(created.status, 201);
  const std::string id = body(created).at("id");
  EXPECT_EQ(svc.dispatch("GET", "/api/session/" + id, "").status, 200);
  EXPECT_EQ(svc.dispatch("POST", "/api/session/" + id + "/mutate", R"({"vertex":1})").status, 200);
  EXPECT_EQ(svc.dispatch("POST", "/api/session/" + id + "/undo", "").status, 200);
  EXPECT_EQ(svc.dispatch("GET", "/api/other", "").status, 404);
  EXPECT_EQ(svc.dispatch("DELETE", "/api/session/" + id, "").status, 405);
}

TEST(Service, HistoryIsBounded) {
  Service svc(2);
  const std::string id = create(svc, kTriangleMatrix);
  for (int i = 0; i < 5; ++i) svc.mutate(id, R"({"vertex":1})");
  EXPECT_EQ(body(svc.get(id)).at("history_depth"), 2);
  EXPECT_EQ(svc.undo(id).status, 200);
  EXPECT_EQ(svc.undo(id).status, 200);
  EXPECT_EQ(svc.undo(id).status, 409);
}

TEST(Service, SessionsAreIndependentUnderConcurrency) {
  Service svc;
  std::vector<std::string> ids;
  for (int i = 0; i < 4; ++i) ids.push_back(create(svc, kTriangleMatrix));
  const std::string initial = svc.get(ids[0]).body;
  std::vector<std::thread> workers;
  for (const auto& id : ids) {
    workers.emplace_back([&svc, id] {
      for (int k = 0; k < 10; ++k) svc.mutate(id, json{{"vertex", 1 + k % 3}}.dump());
      for (int k = 0; k < 10; ++k) svc.undo(id);
    });
  }
  for (auto& w : workers) w.join();
  for (const auto& id : ids) {
    json s = body(svc.get(id));
    json expected = json::parse(initial);
    expected["id"] = id;
    EXPECT_EQ(s, expected);
  }
}
