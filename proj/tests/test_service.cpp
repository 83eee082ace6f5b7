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

#include <atomic>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "test_paths.hpp"
#include "zhime/service.hpp"

namespace zhime {
namespace {

using json = nlohmann::json;
using testing_paths::data;

std::shared_ptr<const Lexicon> shared_lexicon() {
  static const auto lex =
      std::make_shared<const Lexicon>(testing_paths::bundled_lexicon());
  return lex;
}

std::shared_ptr<const BpmfLayout> shared_layout() {
  static const auto l =
      std::make_shared<const BpmfLayout>(load_bpmf_layout(data("bpmf.tsv")));
  return l;
}

// A service on an ephemeral port, run on a background thread.
class Running {
 public:
  explicit Running(SessionRegistry::NowFn now = SessionRegistry::Clock::now,
                   std::chrono::seconds idle = std::chrono::minutes(30))
      : service_(shared_lexicon(), shared_layout(), ServiceOptions{idle, {}},
                 std::move(now)) {
    port_ = service_.bind_any("127.0.0.1");
    if (port_ <= 0) throw std::runtime_error("bind failed");
    thread_ = std::thread([this] { service_.serve(); });
    service_.wait_until_ready();
  }
  ~Running() {
    service_.stop();
    thread_.join();
  }

  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(10, 0);
    return c;
  }
  Service& service() { return service_; }

 private:
  Service service_;
  int port_ = -1;
  std::thread thread_;
};

std::string create(httplib::Client& c, const std::string& body = "{}") {
  auto res = c.Post("/sessions", body, "application/json");
  if (!res || res->status != 201) return {};
  return json::parse(res->body).at("id").get<std::string>();
}

json send(httplib::Client& c, const std::string& id, const json& key,
          int expect = 200) {
  auto res = c.Post("/sessions/" + id + "/keys", key.dump(), "application/json");
  EXPECT_TRUE(res);
  if (!res) return {};
  EXPECT_EQ(res->status, expect) << res->body;
  return json::parse(res->body, nullptr, false);
}

const json kM = {{"kind", "letter"}, {"value", "m"}};
const json kA = {{"kind", "letter"}, {"value", "a"}};
const json kTone1 = {{"kind", "tone"}, {"value", 1}};
const json kSpace = {{"kind", "delimiter"}};

TEST(Service, Health) {
  Running r;
  auto c = r.client();
  auto res = c.Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->body, "ok");
}

TEST(Service, CreateSessions) {
  Running r;
  auto c = r.client();
  auto res = c.Post("/sessions", R"({"mode":"phonetic","layout":"pinyin"})",
                    "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 201);
  const auto body = json::parse(res->body);
  EXPECT_EQ(body.at("id").get<std::string>().size(), 32u);
  EXPECT_EQ(body.at("mode"), "phonetic");
  EXPECT_EQ(body.at("layout"), "pinyin");
  EXPECT_TRUE(body.contains("created_at"));

  std::set<std::string> ids;
  for (int i = 0; i < 20; ++i) ids.insert(create(c));
  EXPECT_EQ(ids.size(), 20u);
  EXPECT_FALSE(ids.contains(""));

  EXPECT_FALSE(create(c, R"({"mode":"stroke","layout":"bpmf"})").empty());
  EXPECT_FALSE(create(c, R"({"layout":"bpmf"})").empty());
  EXPECT_FALSE(create(c, "").empty());
  for (const char* bad : {R"({"mode":"handwriting"})", R"({"layout":3})", "[1]",
                          "not json"}) {
    res = c.Post("/sessions", bad, "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 400) << bad;
    EXPECT_TRUE(json::parse(res->body).contains("error"));
  }
}

TEST(Service, KeysDriveTheSession) {
  Running r;
  auto c = r.client();
  const auto id = create(c);
  auto e = send(c, id, kM);
  EXPECT_EQ(e.at("accepted"), true);
  EXPECT_EQ(e.at("buffer"), "m");
  EXPECT_EQ(e.at("validation"), "valid");  // m is itself a syllable
  send(c, id, kA);
  e = send(c, id, kTone1);
  EXPECT_EQ(e.at("phonetic_portion").size(), 1u);
  EXPECT_EQ(e.at("phonetic_portion")[0].at("display"), "mā");
  e = send(c, id, kSpace);
  EXPECT_EQ(e.at("committed_delta"), convert_text(*shared_lexicon(), "ma1"));

  e = send(c, id, {{"kind", "letter"}, {"value", "q"}});
  e = send(c, id, {{"kind", "letter"}, {"value", "x"}});
  EXPECT_EQ(e.at("accepted"), false);
  EXPECT_EQ(e.at("buffer"), "q");
}

TEST(Service, MalformedKeysAndUnknownSessions) {
  Running r;
  auto c = r.client();
  const auto id = create(c);
  send(c, id, {{"kind", "letter"}, {"value", "ß"}}, 400);
  send(c, id, {{"kind", "tone"}, {"value", 9}}, 400);
  send(c, id, {{"kind", "select"}, {"index", -1}}, 400);
  send(c, id, {{"kind", "jump"}}, 400);
  auto res = c.Post("/sessions/" + id + "/keys", "{", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  send(c, "0123456789abcdef0123456789abcdef", kM, 404);
}

TEST(Service, SnapshotAndDelete) {
  Running r;
  auto c = r.client();
  const auto id = create(c);
  auto res = c.Get("/sessions/" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  auto snap = json::parse(res->body);
  EXPECT_EQ(snap.at("id"), id);
  EXPECT_EQ(snap.at("buffer"), "");
  EXPECT_EQ(snap.at("output"), "");

  for (const auto& k : {kM, kA, kTone1, kSpace, kM}) send(c, id, k);
  snap = json::parse(c.Get("/sessions/" + id)->body);
  EXPECT_EQ(snap.at("buffer"), "m");
  EXPECT_EQ(snap.at("output"), "妈");
  EXPECT_EQ(snap.at("mode"), "phonetic");
  EXPECT_EQ(snap.at("candidates"), json::array());

  res = c.Delete("/sessions/" + id);
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 204);
  EXPECT_EQ(c.Get("/sessions/" + id)->status, 404);
  EXPECT_EQ(c.Delete("/sessions/" + id)->status, 404);
  send(c, id, kM, 404);
}

TEST(Service, IdleSessionsExpire) {
  auto now = std::make_shared<std::atomic<std::int64_t>>(0);
  Running r(
      [now] {
        return SessionRegistry::Clock::time_point(std::chrono::seconds(now->load()));
      },
      std::chrono::seconds(60));
  auto c = r.client();
  const auto idle = create(c);
  const auto busy = create(c);
  *now = 50;
  send(c, busy, kM);
  *now = 100;  // idle unused for 100 s, busy for 50 s
  EXPECT_EQ(c.Get("/sessions/" + idle)->status, 404);
  EXPECT_EQ(c.Get("/sessions/" + busy)->status, 200);
  EXPECT_EQ(r.service().sessions().size(), 1u);
}

TEST(Service, ReplayMatchesInProcessSession) {
  Running r;
  auto c = r.client();
  const auto id = create(c);
  auto local = new_session(*shared_lexicon(), Mode::Phonetic, Layout::PinyinQwerty);
  std::mt19937 rng(11);
  const std::string letters = "shimangixaoeu";
  std::uniform_int_distribution<int> kind(0, 9), letter(0, 12), tone(1, 5),
      idx(0, 3);
  for (int i = 0; i < 300; ++i) {
    KeyInput k;
    switch (kind(rng)) {
      case 0: k = key::tone(tone(rng)); break;
      case 1: k = key::delimiter(); break;
      case 2: k = key::backspace(); break;
      case 3: k = key::select(idx(rng)); break;
      case 4: k = key::next(); break;
      default: k = key::letter(letters[letter(rng)]);
    }
    const auto remote = send(c, id, wire::to_json(k));
    ASSERT_EQ(remote, wire::to_json(local.process_key(k))) << i;
  }
  EXPECT_EQ(json::parse(c.Get("/sessions/" + id)->body), wire::snapshot_json(id, local));
}

TEST(Service, ConcurrentKeysOnOneSessionAreSerialized) {
  Running r;
  const auto id = [&] {
    auto c = r.client();
    return create(c);
  }();
  // Each thread sends "m a tone1 delimiter" patterns. Interleavings may
  // reject keys, but no commit may be lost or torn.
  constexpr int kThreads = 4;
  std::vector<std::string> deltas(kThreads);
  std::vector<std::thread> threads;
  for (int t = 0; t < kThreads; ++t) {
    threads.emplace_back([&, t] {
      auto c = r.client();
      for (int i = 0; i < 25; ++i) {
        for (const auto& k : {kM, kA, kTone1, kSpace}) {
          auto res = c.Post("/sessions/" + id + "/keys", k.dump(), "application/json");
          if (!res || res->status != 200) continue;
          deltas[t] += json::parse(res->body).at("committed_delta").get<std::string>();
        }
      }
    });
  }
  for (auto& th : threads) th.join();

  auto c = r.client();
  const auto snap = json::parse(c.Get("/sessions/" + id)->body);
  const auto output = snap.at("output").get<std::string>();
  std::size_t total = 0;
  for (const auto& d : deltas) total += d.size();
  EXPECT_EQ(output.size(), total);
  EXPECT_GT(total, 0u);
  EXPECT_TRUE(decode_utf8(output));
}

TEST(Registry, InProcessUse) {
  SessionRegistry reg(shared_lexicon(), nullptr, std::chrono::seconds(60));
  const auto h = reg.create(Mode::Stroke, Layout::PinyinQwerty);
  EXPECT_EQ(h.mode, Mode::Stroke);
  EXPECT_FALSE(reg.has_bpmf());
  EXPECT_THROW(reg.create(Mode::Phonetic, Layout::Bpmf), std::invalid_argument);
  auto out = reg.with_session(h.id, [](InputSession& s) {
    s.process_key(key::letter('k'));
    return s.buffer();
  });
  ASSERT_TRUE(out);
  EXPECT_EQ(*out, "k");
  EXPECT_FALSE(reg.with_session("nope", [](InputSession&) { return 0; }));
  EXPECT_TRUE(reg.erase(h.id));
  EXPECT_EQ(reg.size(), 0u);
}

}  // namespace
}  // namespace zhime
