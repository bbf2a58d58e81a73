#include "service.hpp"

#include <deque>
#include <optional>
#include <regex>
#include <vector>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "spm/spm.h"

namespace spmut {

using Json = nlohmann::json;

namespace {

struct QuiverFree {
  void operator()(spm_quiver* q) const { spm_quiver_free(q); }
};
struct SpeciesFree {
  void operator()(spm_species* s) const { spm_species_free(s); }
};
using QuiverPtr = std::unique_ptr<spm_quiver, QuiverFree>;
using SpeciesPtr = std::unique_ptr<spm_species, SpeciesFree>;

struct Failure {
  int status;
  Json body;
};

Failure failure(int status, const std::string& code, const std::string& message,
                std::optional<std::size_t> step = std::nullopt) {
  Json body = {{"code", code}, {"message", message}};
  if (step) body["step"] = *step;
  return {status, std::move(body)};
}

int http_status(spm_status s) {
  switch (s) {
    case SPM_ERR_NOT_TWO_ACYCLIC:
      return 409;
    case SPM_ERR_INTERNAL:
      return 500;
    default:
      return 400;
  }
}

void check(spm_status s, std::optional<std::size_t> step = std::nullopt) {
  if (s != SPM_OK) throw failure(http_status(s), spm_status_name(s), spm_last_error(), step);
}

std::string take(char* s) {
  std::string out(s);
  spm_free_string(s);
  return out;
}

Json parse_body(const std::string& body) {
  if (body.empty()) return Json::object();
  try {
    Json j = Json::parse(body);
    if (!j.is_object()) throw failure(400, "parse_error", "request body must be a JSON object");
    return j;
  } catch (const Json::exception& e) {
    throw failure(400, "parse_error", e.what());
  }
}

}  // namespace

struct Snapshot {
  QuiverPtr quiver;
  SpeciesPtr species;
  Json residual = Json::array();
  Json search = nullptr;
  std::vector<std::size_t> sequence;

  Snapshot() = default;
  Snapshot(const Snapshot& o)
      : quiver(spm_quiver_clone(o.quiver.get())),
        species(o.species ? spm_species_clone(o.species.get()) : nullptr),
        residual(o.residual),
        search(o.search),
        sequence(o.sequence) {}
  Snapshot(Snapshot&&) = default;
  Snapshot& operator=(Snapshot&&) = default;
};

struct Session {
  std::string id;
  std::uint32_t p = 0;
  std::mutex mutex;
  Snapshot current;
  std::deque<Snapshot> history;
};

namespace {

Json potential_summary(const Json& potential) {
  std::map<std::size_t, std::size_t> by_length;
  for (const Json& t : potential.at("terms")) ++by_length[t.at("arrows").size()];
  Json lengths = Json::array();
  for (const auto& [len, count] : by_length) lengths.push_back({{"length", len}, {"terms", count}});
  return {{"truncation", potential.at("truncation")},
          {"term_count", potential.at("terms").size()},
          {"by_length", std::move(lengths)},
          {"terms", potential.at("terms")}};
}

Json state_json(const Session& s) {
  const Snapshot& cur = s.current;
  char* text = nullptr;
  check(spm_quiver_to_json(cur.quiver.get(), &text));
  const Json quiver = Json::parse(take(text));
  const std::size_t n = spm_quiver_vertex_count(cur.quiver.get());
  Json multiplicities = Json::array();
  for (std::size_t i = 1; i <= n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t m = 0;
      check(spm_quiver_multiplicity(cur.quiver.get(), i, j, &m));
      row.push_back(m);
    }
    multiplicities.push_back(std::move(row));
  }
  Json matrix = nullptr;
  if (spm_quiver_matrix_json(cur.quiver.get(), &text) == SPM_OK) matrix = Json::parse(take(text));
  Json potential = nullptr;
  Json tower = nullptr;
  if (cur.species) {
    check(spm_species_to_json(cur.species.get(), &text));
    const Json sp = Json::parse(take(text));
    potential = potential_summary(sp.at("potential"));
    tower = sp.at("tower");
  }
  Json seq = Json::array();
  for (std::size_t k : cur.sequence) seq.push_back(k);
  return {{"id", s.id},
          {"kind", cur.species ? "species" : "quiver"},
          {"p", s.p},
          {"quiver", quiver},
          {"matrix", std::move(matrix)},
          {"multiplicities", std::move(multiplicities)},
          {"arrow_count", spm_quiver_arrow_count(cur.quiver.get())},
          {"two_acyclic", spm_quiver_is_2_acyclic(cur.quiver.get()) == 1},
          {"residual_2cycles", cur.residual},
          {"tower", std::move(tower)},
          {"potential", std::move(potential)},
          {"sequence", std::move(seq)},
          {"history_depth", s.history.size()},
          {"can_undo", !s.history.empty()},
          {"search", cur.search}};
}

template <class F>
Response respond(F&& body) {
  try {
    auto [status, j] = body();
    return {status, j.dump()};
  } catch (const Failure& f) {
    return {f.status, f.body.dump()};
  } catch (const std::exception& e) {
    return {500, Json{{"code", "internal"}, {"message", e.what()}}.dump()};
  }
}

std::size_t vertex_arg(const Json& j, const char* key, std::optional<std::size_t> step = std::nullopt) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw failure(400, "invalid_argument", std::string(key) + " must be a positive vertex number", step);
  }
  return j.get<std::size_t>();
}

}  // namespace

Service::Service(std::size_t history_limit) : history_limit_(history_limit) {}
Service::~Service() = default;

std::shared_ptr<Session> Service::find(const std::string& id) {
  std::lock_guard<std::mutex> lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw failure(404, "not_found", "no session " + id);
  return it->second;
}

Response Service::create(const std::string& body) {
  return respond([&] {
    const Json doc = parse_body(body);
    auto session = std::make_shared<Session>();
    spm_quiver* q = nullptr;
    if (doc.contains("tower")) {
      spm_species* sp = nullptr;
      check(spm_species_from_json(doc.dump().c_str(), &sp));
      session->current.species.reset(sp);
      check(spm_species_quiver(sp, &q));
      session->current.quiver.reset(q);
      session->p = doc.at("tower").at("p").get<std::uint32_t>();
    } else {
      check(spm_quiver_from_json(doc.dump().c_str(), &q));
      session->current.quiver.reset(q);
      if (doc.contains("p")) {
        session->p = doc.at("p").get<std::uint32_t>();
      } else if (spm_quiver_default_prime(q, &session->p) != SPM_OK) {
        session->p = 0;
      }
    }
    {
      std::lock_guard<std::mutex> lock(mutex_);
      session->id = std::to_string(next_id_++);
      sessions_.emplace(session->id, session);
    }
    std::lock_guard<std::mutex> lock(session->mutex);
    return std::pair{201, state_json(*session)};
  });
}

Response Service::get(const std::string& id) {
  return respond([&] {
    auto s = find(id);
    std::lock_guard<std::mutex> lock(s->mutex);
    return std::pair{200, state_json(*s)};
  });
}

Response Service::mutate(const std::string& id, const std::string& body) {
  return respond([&] {
    auto s = find(id);
    const Json req = parse_body(body);
    if (!req.contains("vertex")) throw failure(400, "invalid_argument", "missing vertex");
    const std::size_t k = vertex_arg(req.at("vertex"), "vertex");
    std::lock_guard<std::mutex> lock(s->mutex);
    Snapshot next(s->current);
    if (next.species) {
      char* report = nullptr;
      check(spm_species_mutate(next.species.get(), k, &report));
      next.residual = Json::parse(take(report)).at("residual_2cycles");
      spm_quiver* q = nullptr;
      check(spm_species_quiver(next.species.get(), &q));
      next.quiver.reset(q);
    } else {
      check(spm_quiver_mutate(next.quiver.get(), k));
    }
    next.search = nullptr;
    next.sequence.push_back(k);
    s->history.push_back(std::move(s->current));
    if (s->history.size() > history_limit_) s->history.pop_front();
    s->current = std::move(next);
    return std::pair{200, state_json(*s)};
  });
}

Response Service::undo(const std::string& id) {
  return respond([&] {
    auto s = find(id);
    std::lock_guard<std::mutex> lock(s->mutex);
    if (s->history.empty()) throw failure(409, "empty_history", "nothing to undo");
    s->current = std::move(s->history.back());
    s->history.pop_back();
    return std::pair{200, state_json(*s)};
  });
}

Response Service::search(const std::string& id, const std::string& body) {
  return respond([&] {
    auto s = find(id);
    const Json req = parse_body(body);
    std::lock_guard<std::mutex> lock(s->mutex);
    const std::size_t n = spm_quiver_vertex_count(s->current.quiver.get());
    std::vector<std::size_t> seq;
    if (req.contains("seq")) {
      if (!req.at("seq").is_array()) throw failure(400, "invalid_argument", "seq must be an array");
      for (std::size_t step = 0; step < req.at("seq").size(); ++step) {
        const std::size_t k = vertex_arg(req.at("seq")[step], "seq entry", step + 1);
        if (k > n) throw failure(400, "unknown_vertex", "vertex " + std::to_string(k) + " out of range", step + 1);
        seq.push_back(k);
      }
    }
    spm_search_options options;
    spm_search_options_init(&options);
    options.budget = req.value("budget", options.budget);
    options.max_r = req.value("max_r", options.max_r);
    options.seed = req.value("seed", options.seed);
    const std::uint32_t p = req.value("p", s->p);
    int found = 0;
    spm_species* witness = nullptr;
    char* result = nullptr;
    check(spm_search(s->current.quiver.get(), p, seq.data(), seq.size(), &options, &found, &witness, &result));
    Json out = {{"result", Json::parse(take(result))}};
    out["found"] = found == 1;
    if (found == 1) {
      Snapshot next(s->current);
      next.species.reset(witness);
      next.residual = Json::array();
      const Json& w = out["result"]["witness"];
      next.search = {{"found", true},
                     {"seq", req.value("seq", Json::array())},
                     {"extension_degree", w.at("extension_degree")},
                     {"attempts", w.at("attempts")},
                     {"seed", w.at("seed")}};
      s->history.push_back(std::move(s->current));
      if (s->history.size() > history_limit_) s->history.pop_front();
      s->current = std::move(next);
      s->p = p;
    }
    out["state"] = state_json(*s);
    return std::pair{200, std::move(out)};
  });
}

Response Service::dispatch(const std::string& method, const std::string& path, const std::string& body) {
  static const std::regex route(R"(^/api/session(?:/([^/]+)(?:/(mutate|undo|search))?)?/?$)");
  std::smatch m;
  if (!std::regex_match(path, m, route)) {
    return {404, Json{{"code", "not_found"}, {"message", "no route " + path}}.dump()};
  }
  const std::string id = m[1].matched ? m[1].str() : "";
  const std::string action = m[2].matched ? m[2].str() : "";
  if (method == "POST" && id.empty()) return create(body);
  if (method == "GET" && !id.empty() && action.empty()) return get(id);
  if (method == "POST" && action == "mutate") return mutate(id, body);
  if (method == "POST" && action == "undo") return undo(id);
  if (method == "POST" && action == "search") return search(id, body);
  return {405, Json{{"code", "method_not_allowed"}, {"message", method + " " + path}}.dump()};
}

bool serve(Service& service, const std::string& host, int port) {
  httplib::Server server;
  auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
    const Response r = service.dispatch(req.method, req.path, req.body);
    res.status = r.status;
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_content(r.body, "application/json");
  };
  server.Get(R"(/api/.*)", handler);
  server.Post(R"(/api/.*)", handler);
  server.Options(R"(/api/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.status = 204;
  });
  return server.listen(host, port);
}

}  // namespace spmut
