#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rank2sg/atomic_reps.hpp"

namespace rank2sg {

struct GraphEdge {
  int src = 0;
  int dst = 0;
  Color color = Color::Blue;
  int label = 1;
  RationalAngle phase;

  friend bool operator==(const GraphEdge&, const GraphEdge&) = default;
};

// Two-colored labeled graph of an atomic representation. Vertex ids are
// positions in `names`.
class RepGraph {
 public:
  int m = 0;
  int n = 0;
  std::vector<std::string> names;
  std::vector<bool> original;
  std::vector<bool> frontier;
  std::vector<GraphEdge> edges;

  int size() const { return static_cast<int>(names.size()); }
  int add_vertex(std::string name, bool is_original = true);
  void add_edge(int src, int dst, Color c, int label, RationalAngle phase = {});
  std::optional<int> find(const std::string& name) const;

  // Adjacency, rebuilt lazily after edits.
  const std::vector<int>& out_edges(int v) const;
  const std::vector<int>& in_edges(int v) const;
  std::optional<int> in_edge(int v, Color c) const;           // first one
  std::optional<int> out_edge(int v, Color c, int label) const;

  friend bool operator==(const RepGraph& a, const RepGraph& b) {
    return a.m == b.m && a.n == b.n && a.names == b.names && a.original == b.original &&
           a.frontier == b.frontier && a.edges == b.edges;
  }

 private:
  void index() const;
  mutable bool indexed_ = false;
  mutable std::vector<std::vector<int>> out_;
  mutable std::vector<std::vector<int>> in_;
};

// One vertex per coset in the domain. Infinite periodic domains need a
// rectangle of representatives; windows use their own rectangle.
RepGraph graph_of(const Rep& rep, std::optional<Rect> window = std::nullopt);

enum class VerifyMode { DefectFree, StarInterior };

Report verify(const RepGraph& g, VerifyMode mode);

struct DilationResult {
  RepGraph graph;
  int depth = 0;
  // Canonical names: origin vertex and e-first word.
  std::vector<std::pair<std::string, Word>> trace;
};

struct DilateOptions {
  int depth = 3;
  std::optional<std::uint64_t> shuffle_seed;  // randomize completion order
  int max_vertices = 200000;
};

DilationResult dilate(const Theta& theta, const RepGraph& g, const DilateOptions& opt);

// Subgraph on the original vertices (edges between originals only).
RepGraph restrict_to_original(const RepGraph& g);

enum class ComponentKind { Ring, Tail, Undetermined };

struct ColorSummary {
  ComponentKind kind = ComponentKind::Undetermined;
  int ring_length = 0;  // smallest ring length seen
};

struct TypeVerdict {
  ColorSummary blue;
  ColorSummary red;
  std::string type;  // 1, 2a, 2b, 3a, 3bi, 3bii, undetermined
  std::optional<Vec2> period;
};

std::vector<std::vector<int>> components(const RepGraph& g);
TypeVerdict classify(const RepGraph& g);
TypeVerdict classify_component(const RepGraph& g, const std::vector<int>& comp);

struct PushPull {
  Word w1;
  Word w2;
  int eta = 0;
};

PushPull push_pull_path(const Theta& theta, const RepGraph& g, int v1, int v2);

// Follows a word from a vertex along out-edges (last letter first).
std::optional<int> act(const RepGraph& g, const Word& w, int v);

// Blue and red ring words through v: e_u v = v and f_v v = v.
std::optional<Word> blue_loop(const RepGraph& g, int v);
std::optional<Word> red_loop(const RepGraph& g, int v);

// Length of the ring reached by pulling back from v in color c, or 0.
int ring_length(const RepGraph& g, int v, Color c);

std::string to_dot(const RepGraph& g, const std::string& title = "rep");

}  // namespace rank2sg
