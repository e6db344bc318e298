#include "hyperzero/witness.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace hz {

long pred(int u, long t, int n) { return t - mod_nn(t - u, n); }

std::vector<long> ts(const std::vector<int>& u, long t, int n) {
  std::vector<long> out;
  out.reserve(u.size());
  for (int v : u) out.push_back(pred(v, t, n));
  std::sort(out.begin(), out.end());
  return out;
}

WitnessWindow build_window(const Hypergraph& h, const std::vector<int>& s, long T) {
  validate(h);
  if (T < h.n) throw Error(ErrorKind::Domain, "window horizon T=" + std::to_string(T) + " is below n");
  if (s.empty()) throw Error(ErrorKind::Domain, "root set S is empty");
  for (int v : s)
    if (v < 0 || v >= h.n) throw Error(ErrorKind::Domain, "root set references a vertex outside the hypergraph");

  WitnessWindow w;
  w.n = h.n;
  w.T = T;
  w.s = s;
  std::sort(w.s.begin(), w.s.end());
  const long lo = -T + 1;

  std::map<std::vector<long>, int> index;
  std::vector<TsVertex> verts;
  for (int i = 0; i < h.m(); ++i) {
    for (long t = 0; t >= lo; --t) {
      auto times = ts(h.edges[i], t, h.n);
      if (times.front() < lo) break;
      if (index.count(times)) continue;
      index.emplace(times, static_cast<int>(verts.size()));
      verts.push_back({std::move(times), i, t, false});
    }
  }
  auto root_times = ts(w.s, 0, h.n);
  if (auto it = index.find(root_times); it != index.end()) {
    verts[it->second].is_root = true;
  } else {
    verts.push_back({root_times, -1, 0, true});
  }

  std::sort(verts.begin(), verts.end(), [](const TsVertex& a, const TsVertex& b) {
    if (a.times.front() != b.times.front()) return a.times.front() < b.times.front();
    return a.origin_edge < b.origin_edge;
  });
  w.vertices = std::move(verts);
  for (int i = 0; i < w.size(); ++i)
    if (w.vertices[i].is_root) w.root = i;

  std::map<long, std::vector<int>> by_time;
  for (int i = 0; i < w.size(); ++i)
    for (long t : w.vertices[i].times) by_time[t].push_back(i);
  std::vector<std::set<int>> nb(w.size());
  for (const auto& [t, ids] : by_time)
    for (int a : ids)
      for (int b : ids)
        if (a != b) nb[a].insert(b);
  w.adj.resize(w.size());
  for (int i = 0; i < w.size(); ++i) w.adj[i].assign(nb[i].begin(), nb[i].end());
  return w;
}

DegreeCheck check_degree_bounds(const WitnessWindow& w, const Hypergraph& h) {
  auto rep = validate(h);
  DegreeCheck dc;
  const long delta = rep.delta, k = rep.k_max, s = static_cast<long>(w.s.size());
  dc.bound_nonroot = 2 * delta * k * k - 2;
  dc.bound_root = 2 * delta * k * s - 1;
  for (int i = 0; i < w.size(); ++i) {
    int d = static_cast<int>(w.adj[i].size());
    const auto& tv = w.vertices[i].times;
    dc.max_span = std::max<int>(dc.max_span, static_cast<int>(tv.back() - tv.front()));
    if (i == w.root)
      dc.root_degree = d;
    else
      dc.max_nonroot = std::max(dc.max_nonroot, d);
  }
  // With no edges the window is the bare root; the bounds only speak about Delta >= 1.
  if (delta >= 1) {
    dc.ok = dc.max_nonroot <= dc.bound_nonroot && dc.root_degree <= dc.bound_root;
  } else {
    dc.ok = w.size() == 1;
  }
  dc.ok = dc.ok && dc.max_span <= w.n;
  return dc;
}

std::string window_csv(const WitnessWindow& w) {
  std::ostringstream os;
  os << "vertex_id,origin,times\n";
  for (int i = 0; i < w.size(); ++i) {
    const auto& v = w.vertices[i];
    os << i << ',';
    if (v.origin_edge < 0)
      os << "root";
    else
      os << 'e' << v.origin_edge << '@' << v.anchor << (v.is_root ? "+root" : "");
    for (long t : v.times) os << ',' << t;
    os << '\n';
  }
  return os.str();
}

namespace {

// Multi-source BFS restricted to `allowed`.
std::vector<int> bfs_from(const AdjList& adj, const std::vector<int>& sources, const std::vector<char>& allowed) {
  std::vector<int> dist(adj.size(), std::numeric_limits<int>::max());
  std::deque<int> q;
  for (int s : sources) {
    dist[s] = 0;
    q.push_back(s);
  }
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int x : adj[u])
      if (allowed[x] && dist[x] == std::numeric_limits<int>::max()) {
        dist[x] = dist[u] + 1;
        q.push_back(x);
      }
  }
  return dist;
}

std::vector<char> mask_of(std::size_t n, const std::vector<int>& members) {
  std::vector<char> m(n, 0);
  for (int v : members) m[v] = 1;
  return m;
}

}  // namespace

bool is_connected_induced(const AdjList& adj, const std::vector<int>& component) {
  if (component.empty()) return true;
  auto allowed = mask_of(adj.size(), component);
  auto dist = bfs_from(adj, {component.front()}, allowed);
  for (int v : component)
    if (dist[v] == std::numeric_limits<int>::max()) return false;
  return true;
}

int max_degree_induced(const AdjList& adj, const std::vector<int>& component) {
  auto allowed = mask_of(adj.size(), component);
  int best = 0;
  for (int v : component) {
    int d = 0;
    for (int x : adj[v]) d += allowed[x];
    best = std::max(best, d);
  }
  return best;
}

std::vector<int> construct_2tree(const AdjList& adj, const std::vector<int>& component, int root) {
  auto in_c = mask_of(adj.size(), component);
  if (root < 0 || root >= static_cast<int>(adj.size()) || !in_c[root])
    throw Error(ErrorKind::Domain, "2-tree root is not in the component");
  if (!is_connected_induced(adj, component)) throw Error(ErrorKind::Domain, "component is not connected");

  std::vector<char> in_u = in_c;
  auto drop_closed_nbhd = [&](int v) {
    in_u[v] = 0;
    for (int x : adj[v]) in_u[x] = 0;
  };
  std::vector<int> tree{root};
  drop_closed_nbhd(root);
  for (;;) {
    auto dist = bfs_from(adj, tree, in_c);
    int best = -1;
    for (int v : component) {
      if (!in_u[v]) continue;
      if (best < 0 || dist[v] < dist[best] || (dist[v] == dist[best] && v < best)) best = v;
    }
    if (best < 0) break;
    tree.push_back(best);
    drop_closed_nbhd(best);
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

bool is_two_tree(const AdjList& adj, const std::vector<int>& members, const std::vector<int>* within) {
  if (members.empty()) return false;
  std::vector<char> allowed(adj.size(), 1);
  if (within) allowed = mask_of(adj.size(), *within);
  for (int v : members)
    if (!allowed[v]) return false;
  auto in_t = mask_of(adj.size(), members);
  for (int v : members)
    for (int x : adj[v])
      if (in_t[x] && allowed[x]) return false;
  // square-graph connectivity among members
  std::vector<char> seen(adj.size(), 0);
  std::deque<int> q{members.front()};
  seen[members.front()] = 1;
  std::size_t reached = 1;
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int x : adj[u]) {
      if (!allowed[x]) continue;
      for (int y : adj[x])
        if (allowed[y] && in_t[y] && !seen[y]) {
          seen[y] = 1;
          ++reached;
          q.push_back(y);
        }
    }
  }
  return reached == members.size();
}

std::vector<std::vector<int>> enumerate_2trees(const AdjList& adj, int root, int s_max) {
  require_guard(s_max <= limits::kSMax, "s_max=" + std::to_string(s_max) + " > " + std::to_string(limits::kSMax));
  if (s_max < 1) return {};
  const int nv = static_cast<int>(adj.size());
  // vertices at distance exactly 2
  std::vector<std::vector<int>> dist2(nv);
  for (int v = 0; v < nv; ++v) {
    std::set<int> near(adj[v].begin(), adj[v].end());
    std::set<int> d2;
    for (int x : adj[v])
      for (int y : adj[x])
        if (y != v && !near.count(y)) d2.insert(y);
    dist2[v].assign(d2.begin(), d2.end());
  }
  std::vector<std::vector<int>> out;
  std::set<std::vector<int>> level{{root}};
  for (int size = 1; size <= s_max && !level.empty(); ++size) {
    out.insert(out.end(), level.begin(), level.end());
    if (size == s_max) break;
    std::set<std::vector<int>> next;
    for (const auto& t : level) {
      std::vector<char> blocked(nv, 0);
      for (int v : t) {
        blocked[v] = 1;
        for (int x : adj[v]) blocked[x] = 1;
      }
      for (int v : t)
        for (int y : dist2[v]) {
          if (blocked[y]) continue;
          auto grown = t;
          grown.insert(std::upper_bound(grown.begin(), grown.end(), y), y);
          next.insert(std::move(grown));
        }
    }
    level = std::move(next);
  }
  return out;
}

double log_bad_tree_bound(int i, double d1, double d2, bool small) {
  const double e = std::exp(1.0);
  double lb = (i - 1) * std::log(e * d1);
  if (!small) lb += (d2 - 1) * std::log(e * (d2 + i - 2));
  return lb;
}

}  // namespace hz
