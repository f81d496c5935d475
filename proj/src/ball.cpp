#include "grouprho/ball.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <fstream>
#include <istream>
#include <ostream>

#include "grouprho/error.hpp"

namespace grouprho {

std::size_t BallGraph::ball_size(std::size_t n) const {
  if (n > radius) throw PreconditionError("ball_size beyond the ball radius");
  return static_cast<std::size_t>(
      std::upper_bound(dist.begin(), dist.end(), static_cast<std::uint32_t>(n)) - dist.begin());
}

BallGraph build_ball(GroupOracle& oracle, std::size_t radius, const BallOptions& options) {
  BallGraph ball;
  ball.radius = radius;
  ball.letter_count = oracle.letter_count();
  std::vector<std::int32_t> vertex_of;
  auto lookup = [&](ElementId id) -> std::int32_t {
    return id < vertex_of.size() ? vertex_of[id] : BallGraph::kNoEdge;
  };
  auto add = [&](ElementId id, Word rep, std::uint32_t d) {
    if (ball.vertices.size() >= options.vertex_cap) {
      throw ResourceLimit("ball exceeds the vertex cap of " + std::to_string(options.vertex_cap));
    }
    if (id >= vertex_of.size()) vertex_of.resize(std::max<std::size_t>(id + 1, 2 * vertex_of.size()), -1);
    vertex_of[id] = static_cast<std::int32_t>(ball.vertices.size());
    ball.vertices.push_back(std::move(rep));
    ball.dist.push_back(d);
    ball.elements.push_back(id);
    ball.edges.resize(ball.edges.size() + ball.letter_count, BallGraph::kNoEdge);
  };
  add(oracle.identity(), Word{}, 0);
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    std::uint32_t d = ball.dist[v];
    for (std::size_t code = 0; code < ball.letter_count; ++code) {
      Letter l = Letter::from_code(static_cast<std::uint8_t>(code));
      std::int32_t target;
      if (d < radius) {
        ElementId e = oracle.step(ball.elements[v], l);
        target = lookup(e);
        if (target == BallGraph::kNoEdge) {
          Word rep = ball.vertices[v];
          rep.push_back(l);
          target = static_cast<std::int32_t>(ball.vertices.size());
          add(e, std::move(rep), d + 1);
        }
      } else {
        std::optional<ElementId> e = oracle.step_inward(ball.elements[v], l);
        target = e ? lookup(*e) : BallGraph::kNoEdge;
      }
      ball.edges[v * ball.letter_count + code] = target;
    }
  }
  return ball;
}

BallGraph build_ball(const WordProblemStrategy& s, std::size_t radius, const BallOptions& options) {
  std::unique_ptr<GroupOracle> oracle = make_oracle(s);
  return build_ball(*oracle, radius, options);
}

BallGraph build_ball_naive(const WordProblemStrategy& s, std::size_t radius) {
  BallGraph ball;
  ball.radius = radius;
  ball.letter_count = s.letter_count();
  std::vector<std::size_t> level_start{0};
  ball.vertices.push_back(Word{});
  ball.dist.push_back(0);
  // Finds the vertex equal to w among levels [lo, hi] that exist so far.
  auto find = [&](const Word& w, std::size_t lo, std::size_t hi) -> std::int32_t {
    for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
      if (ball.dist[v] < lo || ball.dist[v] > hi) continue;
      if (are_equal(w, ball.vertices[v], s)) return static_cast<std::int32_t>(v);
    }
    return BallGraph::kNoEdge;
  };
  for (std::size_t d = 0; d < radius; ++d) {
    std::size_t end = ball.vertices.size();
    for (std::size_t v = level_start[d]; v < end; ++v) {
      for (std::size_t code = 0; code < ball.letter_count; ++code) {
        Word w = ball.vertices[v];
        w.push_back(Letter::from_code(static_cast<std::uint8_t>(code)));
        if (find(w, d == 0 ? 0 : d - 1, d + 1) == BallGraph::kNoEdge) {
          ball.vertices.push_back(w);
          ball.dist.push_back(static_cast<std::uint32_t>(d + 1));
        }
      }
    }
    level_start.push_back(end);
  }
  ball.edges.assign(ball.vertices.size() * ball.letter_count, BallGraph::kNoEdge);
  for (std::size_t v = 0; v < ball.vertices.size(); ++v) {
    std::size_t d = ball.dist[v];
    for (std::size_t code = 0; code < ball.letter_count; ++code) {
      Word w = ball.vertices[v];
      w.push_back(Letter::from_code(static_cast<std::uint8_t>(code)));
      ball.edges[v * ball.letter_count + code] = find(w, d == 0 ? 0 : d - 1, d + 1);
    }
  }
  return ball;
}

namespace {

std::vector<std::int64_t> bfs_distances(const BallGraph& ball, std::uint32_t source) {
  std::vector<std::int64_t> dist(ball.size(), -1);
  std::deque<std::uint32_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    std::uint32_t v = queue.front();
    queue.pop_front();
    for (std::size_t code = 0; code < ball.letter_count; ++code) {
      std::int32_t w = ball.edges[v * ball.letter_count + code];
      if (w >= 0 && dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(static_cast<std::uint32_t>(w));
      }
    }
  }
  return dist;
}

}  // namespace

std::vector<std::uint32_t> shortlex_geodesic(const BallGraph& ball, std::uint32_t x,
                                             std::uint32_t y) {
  if (x >= ball.size() || y >= ball.size()) throw PreconditionError("vertex outside the ball");
  // Edges of a Cayley ball come in inverse pairs, so distances to y can be
  // computed by BFS from y.
  std::vector<std::int64_t> to_y = bfs_distances(ball, y);
  if (to_y[x] < 0) throw Error("vertices are not connected within the ball");
  std::vector<std::uint32_t> path{x};
  std::uint32_t cur = x;
  while (cur != y) {
    for (std::size_t code = 0; code < ball.letter_count; ++code) {
      std::int32_t w = ball.edges[cur * ball.letter_count + code];
      if (w >= 0 && to_y[w] == to_y[cur] - 1) {
        cur = static_cast<std::uint32_t>(w);
        break;
      }
    }
    path.push_back(cur);
  }
  return path;
}

bool same_labeled_ball(const BallGraph& a, const BallGraph& b) {
  return a.radius == b.radius && a.letter_count == b.letter_count && a.vertices == b.vertices &&
         a.dist == b.dist && a.edges == b.edges;
}

namespace {

constexpr std::uint8_t kCacheVersion = 1;

template <typename T>
void put(std::ostream& out, T value) {
  unsigned char buf[sizeof(T)];
  for (std::size_t i = 0; i < sizeof(T); ++i) buf[i] = static_cast<unsigned char>(value >> (8 * i));
  out.write(reinterpret_cast<const char*>(buf), sizeof(T));
}

template <typename T>
T get(std::istream& in) {
  unsigned char buf[sizeof(T)];
  if (!in.read(reinterpret_cast<char*>(buf), sizeof(T))) throw Error("truncated ball cache");
  T value = 0;
  for (std::size_t i = 0; i < sizeof(T); ++i) value |= static_cast<T>(static_cast<T>(buf[i]) << (8 * i));
  return value;
}

}  // namespace

void save_ball(const BallGraph& ball, std::uint64_t key, std::ostream& out) {
  put<std::uint8_t>(out, kCacheVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(ball.size()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(ball.letter_count));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(ball.radius));
  put<std::uint64_t>(out, key);
  std::uint32_t offset = 0;
  put<std::uint32_t>(out, 0);
  for (std::size_t v = 0; v < ball.size(); ++v) {
    for (std::size_t c = 0; c < ball.letter_count; ++c) offset += ball.edges[v * ball.letter_count + c] >= 0;
    put<std::uint32_t>(out, offset);
  }
  for (std::size_t v = 0; v < ball.size(); ++v) {
    for (std::size_t c = 0; c < ball.letter_count; ++c) {
      std::int32_t w = ball.edges[v * ball.letter_count + c];
      if (w < 0) continue;
      put<std::uint32_t>(out, static_cast<std::uint32_t>(w));
      put<std::uint8_t>(out, static_cast<std::uint8_t>(c));
    }
  }
}

BallGraph load_ball(std::istream& in, std::uint64_t expected_key) {
  if (get<std::uint8_t>(in) != kCacheVersion) throw Error("unsupported ball cache version");
  BallGraph ball;
  std::uint32_t n = get<std::uint32_t>(in);
  ball.letter_count = get<std::uint32_t>(in);
  ball.radius = get<std::uint32_t>(in);
  if (get<std::uint64_t>(in) != expected_key) throw Error("ball cache key mismatch");
  std::vector<std::uint32_t> offsets(n + 1);
  for (auto& o : offsets) o = get<std::uint32_t>(in);
  ball.edges.assign(static_cast<std::size_t>(n) * ball.letter_count, BallGraph::kNoEdge);
  for (std::uint32_t v = 0; v < n; ++v) {
    for (std::uint32_t e = offsets[v]; e < offsets[v + 1]; ++e) {
      std::uint32_t w = get<std::uint32_t>(in);
      std::uint8_t c = get<std::uint8_t>(in);
      if (w >= n || c >= ball.letter_count) throw Error("corrupt ball cache");
      ball.edges[static_cast<std::size_t>(v) * ball.letter_count + c] = static_cast<std::int32_t>(w);
    }
  }
  // Rebuild representatives: scanning vertices in stored order and letters
  // in order rediscovers each vertex first through its ShortLex-least spelling.
  ball.vertices.assign(n, Word{});
  ball.dist.assign(n, 0);
  std::vector<bool> seen(n, false);
  if (n > 0) seen[0] = true;
  std::uint32_t next = 1;
  for (std::uint32_t v = 0; v < n; ++v) {
    if (!seen[v]) throw Error("corrupt ball cache: vertex order");
    for (std::size_t c = 0; c < ball.letter_count; ++c) {
      std::int32_t w = ball.edges[static_cast<std::size_t>(v) * ball.letter_count + c];
      if (w < 0 || seen[w]) continue;
      if (static_cast<std::uint32_t>(w) != next) throw Error("corrupt ball cache: vertex order");
      seen[w] = true;
      ++next;
      ball.dist[w] = ball.dist[v] + 1;
      ball.vertices[w] = ball.vertices[v];
      ball.vertices[w].push_back(Letter::from_code(static_cast<std::uint8_t>(c)));
    }
  }
  return ball;
}

std::filesystem::path BallCache::path_for(std::uint64_t key, std::size_t radius) const {
  char name[64];
  std::snprintf(name, sizeof name, "%016llx_r%zu.ball", static_cast<unsigned long long>(key), radius);
  return _directory / name;
}

std::optional<BallGraph> BallCache::find(std::uint64_t key, std::size_t radius) const {
  std::ifstream in(path_for(key, radius), std::ios::binary);
  if (!in) return std::nullopt;
  return load_ball(in, key);
}

void BallCache::store(std::uint64_t key, const BallGraph& ball) const {
  std::filesystem::create_directories(_directory);
  std::ofstream out(path_for(key, ball.radius), std::ios::binary);
  if (!out) throw Error("cannot write ball cache in " + _directory.string());
  save_ball(ball, key, out);
}

}  // namespace grouprho
