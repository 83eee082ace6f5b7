/*
  Copyright 2026 The zhime Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

// Local HTTP front end. Each session lives server-side and is driven one
// keystroke per request; see docs/api.md for the endpoint schema.

#ifndef ZHIME_SERVICE_HPP_
#define ZHIME_SERVICE_HPP_

#include <chrono>
#include <cstdio>
#include <ctime>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "httplib.h"
#include "json.hpp"
#include "zhime/bpmf.hpp"
#include "zhime/lexicon.hpp"
#include "zhime/session.hpp"
#include "zhime/wire.hpp"

namespace zhime {

inline constexpr int kDefaultPort = 8765;

struct ServiceOptions {
  std::chrono::seconds idle_timeout = std::chrono::minutes(30);
  std::string static_dir;
};

struct SessionHandle {
  std::string id;
  std::string created_at;  // ISO 8601, UTC
  Mode mode = Mode::Phonetic;
  Layout layout = Layout::PinyinQwerty;
};

// Live sessions keyed by id. Keystrokes for one session are serialized by a
// per-session mutex; different sessions proceed in parallel.
class SessionRegistry {
 public:
  using Clock = std::chrono::steady_clock;
  using NowFn = std::function<Clock::time_point()>;

  SessionRegistry(std::shared_ptr<const Lexicon> lex,
                  std::shared_ptr<const BpmfLayout> bpmf,
                  std::chrono::seconds idle_timeout, NowFn now = Clock::now)
      : lex_(std::move(lex)),
        bpmf_(std::move(bpmf)),
        idle_timeout_(idle_timeout),
        now_(std::move(now)),
        rng_(std::random_device{}()) {}

  // Throws std::invalid_argument for a BPMF session without a layout.
  SessionHandle create(Mode mode, Layout layout) {
    auto entry = std::make_shared<Entry>(InputSession(*lex_, mode, layout, bpmf_.get()));
    std::lock_guard lock(mu_);
    expire_locked();
    std::string id;
    do {
      id = random_id();
    } while (sessions_.contains(id));
    entry->last_used = now_();
    entry->handle = {id, utc_now(), mode, layout};
    sessions_.emplace(id, entry);
    return entry->handle;
  }

  // Runs fn on the session under its lock. nullopt when the id is unknown.
  template <typename Fn>
  auto with_session(const std::string& id, Fn&& fn)
      -> std::optional<std::invoke_result_t<Fn, InputSession&>> {
    std::shared_ptr<Entry> entry;
    {
      std::lock_guard lock(mu_);
      expire_locked();
      auto it = sessions_.find(id);
      if (it == sessions_.end()) return std::nullopt;
      entry = it->second;
      entry->last_used = now_();
    }
    std::lock_guard lock(entry->mu);
    return std::forward<Fn>(fn)(entry->session);
  }

  bool erase(const std::string& id) {
    std::lock_guard lock(mu_);
    return sessions_.erase(id) > 0;
  }

  std::size_t size() {
    std::lock_guard lock(mu_);
    expire_locked();
    return sessions_.size();
  }

  bool has_bpmf() const { return bpmf_ != nullptr; }

 private:
  struct Entry {
    explicit Entry(InputSession s) : session(std::move(s)) {}
    std::mutex mu;
    InputSession session;
    SessionHandle handle;
    Clock::time_point last_used;
  };

  void expire_locked() {
    const auto now = now_();
    std::erase_if(sessions_, [&](const auto& kv) {
      return now - kv.second->last_used > idle_timeout_;
    });
  }

  std::string random_id() {
    std::uniform_int_distribution<std::uint64_t> dist;
    char buf[33];
    std::snprintf(buf, sizeof buf, "%016llx%016llx",
                  static_cast<unsigned long long>(dist(rng_)),
                  static_cast<unsigned long long>(dist(rng_)));
    return buf;
  }

  static std::string utc_now() {
    const std::time_t t = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
  }

  std::shared_ptr<const Lexicon> lex_;
  std::shared_ptr<const BpmfLayout> bpmf_;
  std::chrono::seconds idle_timeout_;
  NowFn now_;
  std::mt19937_64 rng_;
  std::mutex mu_;
  std::unordered_map<std::string, std::shared_ptr<Entry>> sessions_;
};

class Service {
 public:
  Service(std::shared_ptr<const Lexicon> lex,
          std::shared_ptr<const BpmfLayout> bpmf, ServiceOptions options = {},
          SessionRegistry::NowFn now = SessionRegistry::Clock::now)
      : registry_(std::move(lex), std::move(bpmf), options.idle_timeout,
                  std::move(now)) {
    if (!options.static_dir.empty() &&
        !server_.set_mount_point("/", options.static_dir)) {
      throw std::runtime_error("static directory not found: " +
                               options.static_dir);
    }
    // Plain SO_REUSEADDR: a second server on a busy port must fail to bind.
    server_.set_socket_options([](socket_t sock) {
      int yes = 1;
      setsockopt(sock, SOL_SOCKET, SO_REUSEADDR, &yes, sizeof yes);
    });
    install_routes();
  }

  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  bool bind(const std::string& host, int port) {
    return server_.bind_to_port(host, port);
  }
  // Binds an ephemeral port and returns it, or -1.
  int bind_any(const std::string& host) { return server_.bind_to_any_port(host); }
  // Blocks until stop().
  bool serve() { return server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  void wait_until_ready() const { server_.wait_until_ready(); }

  SessionRegistry& sessions() { return registry_; }
  httplib::Server& http() { return server_; }

 private:
  using json = nlohmann::json;

  static void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json; charset=utf-8");
  }

  static void error(httplib::Response& res, int status, const std::string& msg) {
    reply(res, status, json{{"error", msg}});
  }

  void install_routes() {
    server_.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      res.set_content("ok", "text/plain");
    });

    server_.Post("/sessions", [this](const httplib::Request& req,
                                     httplib::Response& res) {
      json body = json::object();
      if (!req.body.empty()) {
        body = json::parse(req.body, nullptr, false);
        if (body.is_discarded() || !body.is_object()) {
          return error(res, 400, "body must be a JSON object");
        }
      }
      auto mode = parse_field(body, "mode", "phonetic", wire::parse_mode);
      auto layout = parse_field(body, "layout", "pinyin", wire::parse_layout);
      if (!mode) return error(res, 400, "mode must be \"phonetic\" or \"stroke\"");
      if (!layout) return error(res, 400, "layout must be \"pinyin\" or \"bpmf\"");
      if (*layout == Layout::Bpmf && *mode == Mode::Phonetic &&
          !registry_.has_bpmf()) {
        return error(res, 400, "no bpmf layout loaded");
      }
      const auto h = registry_.create(*mode, *layout);
      reply(res, 201,
            json{{"id", h.id},
                 {"mode", wire::to_string(h.mode)},
                 {"layout", wire::to_string(h.layout)},
                 {"created_at", h.created_at}});
    });

    server_.Post("/sessions/:id/keys", [this](const httplib::Request& req,
                                              httplib::Response& res) {
      std::optional<KeyInput> key;
      auto body = json::parse(req.body, nullptr, false);
      if (!body.is_discarded()) key = wire::parse_key(body);
      auto result = registry_.with_session(
          req.path_params.at("id"),
          [&](InputSession& s) -> std::optional<json> {
            if (!key) return std::nullopt;
            return wire::to_json(s.process_key(*key));
          });
      if (!result) return error(res, 404, "no such session");
      if (!*result) return error(res, 400, "malformed key");
      reply(res, 200, **result);
    });

    server_.Get("/sessions/:id", [this](const httplib::Request& req,
                                        httplib::Response& res) {
      const auto& id = req.path_params.at("id");
      auto snap = registry_.with_session(
          id, [&](InputSession& s) { return wire::snapshot_json(id, s); });
      if (!snap) return error(res, 404, "no such session");
      reply(res, 200, *snap);
    });

    server_.Delete("/sessions/:id", [this](const httplib::Request& req,
                                           httplib::Response& res) {
      if (!registry_.erase(req.path_params.at("id"))) {
        return error(res, 404, "no such session");
      }
      res.status = 204;
    });
  }

  template <typename Parse>
  static auto parse_field(const json& body, const char* name,
                          const char* fallback, Parse parse)
      -> decltype(parse(std::string_view{})) {
    auto it = body.find(name);
    if (it == body.end()) return parse(fallback);
    if (!it->is_string()) return std::nullopt;
    return parse(it->get<std::string>());
  }

  SessionRegistry registry_;
  httplib::Server server_;
};

}  // namespace zhime

#endif  // ZHIME_SERVICE_HPP_
