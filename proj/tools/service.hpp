#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <string>

namespace spmut {

struct Response {
  int status = 200;
  std::string body;
};

struct Session;

/// In-memory mutation sessions behind the JSON API. Requests on one session
/// are serialized; distinct sessions proceed independently.
class Service {
 public:
  explicit Service(std::size_t history_limit = 256);
  ~Service();

  Response create(const std::string& body);
  Response get(const std::string& id);
  Response mutate(const std::string& id, const std::string& body);
  Response undo(const std::string& id);
  Response search(const std::string& id, const std::string& body);

  /// Routes "METHOD /api/session[/id[/action]]".
  Response dispatch(const std::string& method, const std::string& path, const std::string& body);

 private:
  std::shared_ptr<Session> find(const std::string& id);

  std::size_t history_limit_;
  std::mutex mutex_;
  std::size_t next_id_ = 1;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
};

/// Blocks serving the API on host:port until the process is stopped.
bool serve(Service& service, const std::string& host, int port);

}  // namespace spmut
