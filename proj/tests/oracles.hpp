#pragma once

// Brute-force reference implementations for tests. They work on an adjacency
// matrix and 32-bit masks, straight from the set definitions, and share no
// code with the library's propagation or solver.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "powerdom/graph.hpp"

namespace oracle {

using Mask = std::uint32_t;

struct Matrix {
  int n = 0;
  std::vector<Mask> row;  // row[v] = neighbors of v
};

inline Matrix from_graph(const powerdom::Graph& g) {
  Matrix m;
  m.n = static_cast<int>(g.order());
  m.row.assign(m.n, 0);
  for (auto [u, v] : g.edges()) {
    m.row[u] |= Mask{1} << v;
    m.row[v] |= Mask{1} << u;
  }
  return m;
}

inline bool in(Mask s, int v) { return ((s >> v) & 1U) != 0; }
inline Mask full(const Matrix& m) { return m.n == 32 ? ~Mask{0} : (Mask{1} << m.n) - 1; }

// N[S].
inline Mask closed_nbhd(const Matrix& m, Mask s) {
  Mask out = s;
  for (int v = 0; v < m.n; ++v)
    if (in(s, v)) out |= m.row[v];
  return out;
}

// S^[i+1] = S^[i] ∪ {w : some v in S^[i] has N(v) \ S^[i] = {w}}.
inline Mask force(const Matrix& m, Mask s) {
  Mask out = s;
  for (int v = 0; v < m.n; ++v) {
    if (!in(s, v)) continue;
    const Mask outside = m.row[v] & ~s;
    if (std::popcount(outside) == 1) out |= outside;
  }
  return out;
}

// Layers S^[0], S^[1], ... up to the fixed point.
inline std::vector<Mask> layers(const Matrix& m, Mask s) {
  std::vector<Mask> out{s};
  Mask next = closed_nbhd(m, s);
  while (next != out.back()) {
    out.push_back(next);
    next = force(m, next);
  }
  return out;
}

// ppt(G,S), or nullopt when S is not power dominating.
inline std::optional<int> ppt(const Matrix& m, Mask s) {
  Mask cur = s;
  Mask next = closed_nbhd(m, s);
  int steps = 0;
  while (next != cur) {
    cur = next;
    ++steps;
    next = force(m, cur);
  }
  if (cur != full(m)) return std::nullopt;
  return steps;
}

struct Gamma {
  int gamma = 0;
  int ppt_graph = 0;
  std::vector<Mask> witnesses;  // increasing mask order
};

// One pass over all 2^n subsets, keeping the smallest power dominating ones.
inline Gamma gamma(const Matrix& m) {
  Gamma g;
  g.gamma = m.n + 1;
  for (Mask s = 0;; ++s) {
    const int k = std::popcount(s);
    if (k <= g.gamma) {
      if (auto t = ppt(m, s)) {
        if (k < g.gamma) {
          g.gamma = k;
          g.ppt_graph = *t;
          g.witnesses.clear();
        }
        g.ppt_graph = std::min(g.ppt_graph, *t);
        g.witnesses.push_back(s);
      }
    }
    if (s == full(m)) break;
  }
  return g;
}

// Smallest |S| with N[S] = V.
inline int domination_number(const Matrix& m) {
  int best = m.n;
  for (Mask s = 0;; ++s) {
    if (closed_nbhd(m, s) == full(m)) best = std::min(best, std::popcount(s));
    if (s == full(m)) break;
  }
  return best;
}

// Smallest |S| observing all within `rounds` steps.
inline int l_round(const Matrix& m, int rounds) {
  int best = m.n;
  for (Mask s = 0;; ++s) {
    auto t = ppt(m, s);
    if (t && *t <= rounds) best = std::min(best, std::popcount(s));
    if (s == full(m)) break;
  }
  return best;
}

inline powerdom::VertexSet to_set(const Matrix& m, Mask s) {
  powerdom::VertexSet out(static_cast<std::size_t>(m.n));
  for (int v = 0; v < m.n; ++v)
    if (in(s, v)) out.insert(static_cast<powerdom::Vertex>(v));
  return out;
}

}  // namespace oracle
