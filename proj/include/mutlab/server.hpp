#pragma once

// In-memory mutation sessions behind a small JSON-over-HTTP API:
//
//   POST /sessions                 {matrix JSON}  -> {"id", "state"}
//   GET  /sessions/{id}                           -> state
//   POST /sessions/{id}/mutate     {"k": int}     -> state
//   POST /sessions/{id}/undo                      -> state
//   GET  /sessions/{id}/dot                       -> DOT text
//
// state = {B, c, A, D, n, positive_edges, admissible, conditions, word, indexing}

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include <json.hpp>

#include "mutlab/companion.hpp"
#include "mutlab/mutation.hpp"
#include "mutlab/roots.hpp"

namespace httplib {
class Server;
}

namespace mutlab::api {

using json = nlohmann::json;

/// Carries the HTTP status the error should map to.
class ApiError : public std::runtime_error {
 public:
  ApiError(int status, const std::string& message) : std::runtime_error(message), status_(status) {}
  int status() const noexcept { return status_; }

 private:
  int status_;
};

class SessionStore {
 public:
  /// Body is a matrix document. Companion tracking (the default) requires an
  /// initial seed with an acyclic diagram; {"track_companion": false} lifts
  /// that and reports the explicit-formula companion instead.
  json create(const std::string& body);
  json state(const std::string& id) const;
  json mutate(const std::string& id, const std::string& body);
  json undo(const std::string& id);
  std::string dot(const std::string& id) const;

 private:
  struct Session {
    Session(YSeed seed, std::optional<CartanMatrix> a0, Companion a)
        : initial(seed), cartan(std::move(a0)), current(std::move(seed)), companion(std::move(a)) {}

    mutable std::mutex mutex;
    YSeed initial;
    std::optional<CartanMatrix> cartan;
    MutationWord word;
    YSeed current;
    Companion companion;
  };

  std::shared_ptr<Session> find(const std::string& id) const;
  static Companion companion_for(const Session& s, const YSeed& seed);
  static json render(const Session& s);

  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  unsigned long long counter_ = 0;
};

/// Registers the routes on `server`; the store must outlive it.
void install_routes(httplib::Server& server, SessionStore& store);

/// Blocks serving on host:port. Returns false if the socket could not bind.
bool serve(const std::string& host, int port);

}  // namespace mutlab::api
