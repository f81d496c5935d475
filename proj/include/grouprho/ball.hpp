#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include "grouprho/cayley_graph.hpp"
#include "grouprho/dehn.hpp"
#include "grouprho/words.hpp"

namespace grouprho {

// Cayley ball B(e, radius). Vertices are listed level by level in ShortLex
// order of their representatives (the ShortLex-least geodesic spellings);
// vertex 0 is the identity.
struct BallGraph {
  static constexpr std::int32_t kNoEdge = -1;

  std::size_t radius = 0;
  std::size_t letter_count = 0;
  std::vector<Word> vertices;
  std::vector<std::uint32_t> dist;
  std::vector<std::int32_t> edges;  // vertex * letter_count + letter code
  // Oracle ids when built from an oracle (empty after loading from a cache).
  std::vector<ElementId> elements;

  std::size_t size() const { return vertices.size(); }
  std::int32_t edge(std::size_t v, Letter l) const {
    return edges[v * letter_count + l.code()];
  }
  // Number of vertices at distance <= n, for n <= radius.
  std::size_t ball_size(std::size_t n) const;
};

struct BallOptions {
  std::size_t vertex_cap = 50'000'000;
};

BallGraph build_ball(GroupOracle& oracle, std::size_t radius, const BallOptions& options = {});
BallGraph build_ball(const WordProblemStrategy& s, std::size_t radius,
                     const BallOptions& options = {});

// Reference construction that only uses pairwise equality tests through the
// strategy; quadratic, meant for cross-checking small balls.
BallGraph build_ball_naive(const WordProblemStrategy& s, std::size_t radius);

// Vertex path of the ShortLex-least geodesic from x to y inside the ball.
// Throws Error if y is unreachable from x within the ball.
std::vector<std::uint32_t> shortlex_geodesic(const BallGraph& ball, std::uint32_t x,
                                             std::uint32_t y);

// Labeled-graph isomorphism for balls built with the same vertex ordering:
// true iff sizes, distances and edges coincide.
bool same_labeled_ball(const BallGraph& a, const BallGraph& b);

// Binary format: u8 version, u32 vertex count, u32 letter count, u32 radius,
// u64 key, u32 offsets[vertex count + 1], then per edge u32 target and u8
// label. All little-endian. Representatives and distances are rebuilt by BFS
// on load.
void save_ball(const BallGraph& ball, std::uint64_t key, std::ostream& out);
BallGraph load_ball(std::istream& in, std::uint64_t expected_key);

// Directory of cached balls keyed by (presentation fingerprint, radius).
class BallCache {
 public:
  explicit BallCache(std::filesystem::path directory) : _directory(std::move(directory)) {}

  std::optional<BallGraph> find(std::uint64_t key, std::size_t radius) const;
  void store(std::uint64_t key, const BallGraph& ball) const;

 private:
  std::filesystem::path path_for(std::uint64_t key, std::size_t radius) const;
  std::filesystem::path _directory;
};

}  // namespace grouprho
