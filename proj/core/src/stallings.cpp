#include "hnnembed/stallings.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "hnnembed/error.hpp"

namespace hnnembed {

CoreGraph::CoreGraph(std::size_t vertex_count, std::size_t basepoint, std::vector<GraphEdge> edges, bool folded)
    : vertex_count_(vertex_count), basepoint_(basepoint), edges_(std::move(edges)), folded_(folded) {
  if (vertex_count_ == 0 || basepoint_ >= vertex_count_) throw Error("graph basepoint out of range");
  for (const auto& e : edges_)
    if (e.from >= vertex_count_ || e.to >= vertex_count_) throw Error("graph edge endpoint out of range");
}

std::size_t CoreGraph::degree(std::size_t v) const {
  std::size_t d = 0;
  for (const auto& e : edges_) d += (e.from == v) + (e.to == v);
  return d;
}

bool CoreGraph::connected() const {
  std::vector<std::vector<std::size_t>> adj(vertex_count_);
  for (const auto& e : edges_) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(vertex_count_, false);
  std::vector<std::size_t> stack{basepoint_};
  seen[basepoint_] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (auto w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vertex_count_;
}

std::vector<Letter> CoreGraph::outgoing_labels(std::size_t v) const {
  std::vector<Letter> out;
  for (const auto& e : edges_) {
    if (e.from == v) out.push_back(gen(e.label));
    if (e.to == v) out.push_back(inv(e.label));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Appends a closed path reading w at `base`, creating |w|-1 new vertices.
void attach_loop(std::size_t base, const Word& w, std::size_t& vertex_count, std::vector<GraphEdge>& edges) {
  std::size_t cur = base;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t next = i + 1 == w.size() ? base : vertex_count++;
    const Letter l = w[i];
    if (l.sign > 0)
      edges.push_back({cur, next, l.gen});
    else
      edges.push_back({next, cur, l.gen});
    cur = next;
  }
}

// Renumbers the vertices that still carry edges (plus the basepoint) densely,
// keeping their relative order.
CoreGraph compact(std::size_t vertex_count, std::size_t basepoint, const std::vector<GraphEdge>& edges,
                  const std::vector<bool>& keep, bool folded) {
  std::vector<std::size_t> index(vertex_count, 0);
  std::size_t n = 0;
  for (std::size_t v = 0; v < vertex_count; ++v)
    if (keep[v]) index[v] = n++;
  std::vector<GraphEdge> out;
  out.reserve(edges.size());
  for (const auto& e : edges) out.push_back({index[e.from], index[e.to], e.label});
  return CoreGraph(n, index[basepoint], std::move(out), folded);
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent[b] = a;
  }
};

}  // namespace

CoreGraph bouquet(const std::vector<Word>& generators) {
  std::size_t vertex_count = 1;
  std::vector<GraphEdge> edges;
  for (const Word& w : generators) {
    if (w.empty()) throw Error("bouquet generator is the empty word");
    attach_loop(0, w, vertex_count, edges);
  }
  return CoreGraph(vertex_count, 0, std::move(edges), false);
}

CoreGraph fold(const CoreGraph& g, FoldOrder order) {
  UnionFind uf(g.vertex_count());
  std::vector<GraphEdge> edges = g.edges();
  std::vector<bool> alive(edges.size(), true);

  auto key = [](std::size_t v, std::uint32_t label, bool outgoing) {
    return (static_cast<std::uint64_t>(v) << 33) | (static_cast<std::uint64_t>(label) << 1) | (outgoing ? 1u : 0u);
  };

  for (;;) {
    std::unordered_map<std::uint64_t, std::size_t> seen;
    seen.reserve(2 * edges.size());
    bool folded_one = false;
    for (std::size_t k = 0; k < edges.size() && !folded_one; ++k) {
      const std::size_t i = order == FoldOrder::first_edge ? k : edges.size() - 1 - k;
      if (!alive[i]) continue;
      const std::size_t from = uf.find(edges[i].from);
      const std::size_t to = uf.find(edges[i].to);
      const std::uint32_t label = edges[i].label;
      if (auto [it, fresh] = seen.emplace(key(from, label, true), i); !fresh) {
        uf.unite(to, edges[it->second].to);
        alive[i] = false;
        folded_one = true;
      } else if (auto [jt, fresh2] = seen.emplace(key(to, label, false), i); !fresh2) {
        uf.unite(from, edges[jt->second].from);
        alive[i] = false;
        folded_one = true;
      }
    }
    if (!folded_one) break;
  }

  std::vector<GraphEdge> out;
  std::vector<bool> keep(g.vertex_count(), false);
  for (std::size_t v = 0; v < g.vertex_count(); ++v) keep[v] = uf.find(v) == v;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) out.push_back({uf.find(edges[i].from), uf.find(edges[i].to), edges[i].label});
  return compact(g.vertex_count(), uf.find(g.basepoint()), out, keep, true);
}

CoreGraph trim_to_core(const CoreGraph& g) {
  std::vector<GraphEdge> edges = g.edges();
  std::vector<bool> keep(g.vertex_count(), true);
  std::vector<std::size_t> deg(g.vertex_count(), 0);
  for (const auto& e : edges) {
    ++deg[e.from];
    ++deg[e.to];
  }
  std::vector<bool> alive(edges.size(), true);
  std::deque<std::size_t> work;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (v != g.basepoint() && deg[v] <= 1) work.push_back(v);
  while (!work.empty()) {
    const std::size_t v = work.front();
    work.pop_front();
    if (!keep[v]) continue;
    keep[v] = false;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (!alive[i] || (edges[i].from != v && edges[i].to != v)) continue;
      alive[i] = false;
      const std::size_t w = edges[i].from == v ? edges[i].to : edges[i].from;
      --deg[v];
      --deg[w];
      if (w != g.basepoint() && keep[w] && deg[w] <= 1) work.push_back(w);
    }
  }
  std::vector<GraphEdge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (alive[i]) out.push_back(edges[i]);
  return compact(g.vertex_count(), g.basepoint(), out, keep, g.folded());
}

CoreGraph subgroup_core(const std::vector<Word>& generators) { return trim_to_core(fold(bouquet(generators))); }

bool membership(const CoreGraph& g, const Word& w) {
  if (!g.folded()) throw Error("membership needs a folded graph");
  std::unordered_map<std::uint64_t, std::size_t> step;
  auto key = [](std::size_t v, Letter l) { return (static_cast<std::uint64_t>(v) << 32) | l.ordinal(); };
  for (const auto& e : g.edges()) {
    step[key(e.from, gen(e.label))] = e.to;
    step[key(e.to, inv(e.label))] = e.from;
  }
  std::size_t cur = g.basepoint();
  for (Letter l : free_reduce(w)) {
    auto it = step.find(key(cur, l));
    if (it == step.end()) return false;
    cur = it->second;
  }
  return cur == g.basepoint();
}

std::size_t rank(const CoreGraph& g) {
  if (!g.connected()) throw Error("rank of a disconnected graph");
  return g.edges().size() + 1 - g.vertex_count();
}

std::size_t basepoint_degree(const CoreGraph& g) { return g.degree(g.basepoint()); }

std::vector<Letter> unused_basepoint_labels(const CoreGraph& g, const Alphabet& alphabet) {
  const auto used = g.outgoing_labels(g.basepoint());
  std::vector<Letter> out;
  for (std::uint32_t ord = 0; ord < 2 * alphabet.size(); ++ord) {
    const Letter l = Letter::from_ordinal(ord);
    if (std::find(used.begin(), used.end(), l) == used.end()) out.push_back(l);
  }
  return out;
}

std::vector<Letter> take_unused_basepoint_labels(const CoreGraph& g, const Alphabet& alphabet, std::size_t count) {
  auto labels = unused_basepoint_labels(g, alphabet);
  if (labels.size() < count) throw Error("degree bound violated");
  labels.resize(count);
  return labels;
}

bool is_monomorphism(const std::vector<Word>& images) {
  std::vector<Word> reduced;
  for (const Word& w : images) {
    reduced.push_back(free_reduce(w));
    if (reduced.back().empty()) return false;
  }
  return rank(fold(bouquet(reduced))) == images.size();
}

bool wedge_extension_check(const CoreGraph& core, const std::vector<Word>& new_loops) {
  std::vector<Letter> labels = core.outgoing_labels(core.basepoint());
  for (const Word& w : new_loops) {
    if (w.empty() || !is_cyclically_reduced(w)) return false;
    labels.push_back(w.front());
    labels.push_back(w.back().inverse());
  }
  std::sort(labels.begin(), labels.end());
  return std::adjacent_find(labels.begin(), labels.end()) == labels.end();
}

CoreGraph wedge(const CoreGraph& core, const std::vector<Word>& new_loops) {
  std::size_t vertex_count = core.vertex_count();
  std::vector<GraphEdge> edges = core.edges();
  for (const Word& w : new_loops) {
    if (w.empty()) throw Error("wedge loop is the empty word");
    attach_loop(core.basepoint(), w, vertex_count, edges);
  }
  return CoreGraph(vertex_count, core.basepoint(), std::move(edges), false);
}

CanonicalGraph canonical_form(const CoreGraph& g) {
  struct HalfEdge {
    std::uint32_t ordinal;
    std::size_t target;
  };
  std::vector<std::vector<HalfEdge>> adj(g.vertex_count());
  for (const auto& e : g.edges()) {
    adj[e.from].push_back({gen(e.label).ordinal(), e.to});
    adj[e.to].push_back({inv(e.label).ordinal(), e.from});
  }
  for (auto& list : adj)
    std::stable_sort(list.begin(), list.end(), [](const HalfEdge& a, const HalfEdge& b) { return a.ordinal < b.ordinal; });

  constexpr std::size_t unseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> number(g.vertex_count(), unseen);
  std::deque<std::size_t> queue{g.basepoint()};
  number[g.basepoint()] = 0;
  std::size_t next = 1;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (const auto& h : adj[v])
      if (number[h.target] == unseen) {
        number[h.target] = next++;
        queue.push_back(h.target);
      }
  }
  for (auto& n : number)
    if (n == unseen) n = next++;

  CanonicalGraph out;
  out.vertex_count = g.vertex_count();
  for (const auto& e : g.edges()) out.edges.push_back({number[e.from], number[e.to], e.label});
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace hnnembed
