#include "hyperzero/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <set>

#include "json.hpp"

namespace hz {

StructureReport validate(const Hypergraph& h) {
  if (h.n < 0) throw Error(ErrorKind::Structural, "negative vertex count");
  StructureReport rep;
  std::vector<int> deg(h.n, 0);
  for (std::size_t i = 0; i < h.edges.size(); ++i) {
    const auto& e = h.edges[i];
    if (e.empty()) throw Error(ErrorKind::Structural, "edge " + std::to_string(i) + " is empty");
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] < 0 || e[j] >= h.n)
        throw Error(ErrorKind::Structural,
                    "edge " + std::to_string(i) + " references vertex " + std::to_string(e[j]) +
                        " outside 0.." + std::to_string(h.n - 1));
      if (j > 0 && e[j] <= e[j - 1])
        throw Error(ErrorKind::Structural, "edge " + std::to_string(i) + " is not strictly increasing");
      ++deg[e[j]];
    }
    int k = static_cast<int>(e.size());
    if (i > 0 && k != rep.k_max) rep.k_uniform = false;
    rep.k_max = std::max(rep.k_max, k);
  }
  for (int d : deg) rep.delta = std::max(rep.delta, d);
  return rep;
}

std::vector<Config> edge_masks(const Hypergraph& h) {
  std::vector<Config> out;
  out.reserve(h.edges.size());
  for (const auto& e : h.edges) {
    Config mask = 0;
    for (int v : e) mask |= Config{1} << v;
    out.push_back(mask);
  }
  return out;
}

std::vector<std::vector<int>> incidence(const Hypergraph& h) {
  std::vector<std::vector<int>> inc(h.n);
  for (int i = 0; i < h.m(); ++i)
    for (int v : h.edges[i]) inc[v].push_back(i);
  return inc;
}

bool is_independent(const Hypergraph& h, Config sigma) {
  for (const auto& e : h.edges) {
    bool full = true;
    for (int v : e)
      if (!bit(sigma, v)) {
        full = false;
        break;
      }
    if (full) return false;
  }
  return true;
}

Hypergraph prefix(const Hypergraph& h, int i) {
  if (i < 0 || i > h.m())
    throw Error(ErrorKind::Domain, "prefix index " + std::to_string(i) + " outside 0.." + std::to_string(h.m()));
  Hypergraph out;
  out.n = h.n;
  out.edges.assign(h.edges.begin(), h.edges.begin() + i);
  return out;
}

Hypergraph random_instance(int n, int m, int k, int delta_cap, std::uint64_t seed) {
  if (n < 0 || m < 0 || k < 1 || k > n)
    throw Error(ErrorKind::Generation, "infeasible parameters: need 1 <= k <= n");
  std::mt19937_64 rng(seed);
  Hypergraph h;
  h.n = n;
  std::vector<int> deg(n, 0);
  std::set<std::vector<int>> seen;
  std::vector<int> pool(n);
  const long max_reject = 1000L * std::max(m, 1);
  long rejects = 0;
  while (h.m() < m) {
    std::iota(pool.begin(), pool.end(), 0);
    // partial Fisher-Yates
    for (int j = 0; j < k; ++j) {
      std::uniform_int_distribution<int> pick(j, n - 1);
      std::swap(pool[j], pool[pick(rng)]);
    }
    std::vector<int> e(pool.begin(), pool.begin() + k);
    std::sort(e.begin(), e.end());
    bool ok = !seen.count(e);
    for (int v : e) ok = ok && deg[v] < delta_cap;
    if (!ok) {
      if (++rejects >= max_reject)
        throw Error(ErrorKind::Generation, "gave up after " + std::to_string(rejects) +
                                               " consecutive rejections (n=" + std::to_string(n) +
                                               ", m=" + std::to_string(m) + ", k=" + std::to_string(k) +
                                               ", delta_cap=" + std::to_string(delta_cap) + ")");
      continue;
    }
    rejects = 0;
    for (int v : e) ++deg[v];
    seen.insert(e);
    h.edges.push_back(std::move(e));
  }
  return h;
}

std::vector<int> bfs_distances(const Hypergraph& h, int source) {
  std::vector<int> dist(h.n, kInfDistance);
  auto inc = incidence(h);
  std::vector<char> edge_done(h.m(), 0);
  std::deque<int> q;
  dist[source] = 0;
  q.push_back(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop_front();
    for (int ei : inc[u]) {
      if (edge_done[ei]) continue;
      edge_done[ei] = 1;
      for (int w : h.edges[ei])
        if (dist[w] == kInfDistance) {
          dist[w] = dist[u] + 1;
          q.push_back(w);
        }
    }
  }
  return dist;
}

int hyper_distance(const Hypergraph& h, int u, int v) {
  if (u < 0 || v < 0 || u >= h.n || v >= h.n) throw Error(ErrorKind::Domain, "vertex out of range");
  if (u == v) return 0;
  return bfs_distances(h, u)[v];
}

Hypergraph load_json(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& ex) {
    throw Error(ErrorKind::Schema, std::string("malformed hypergraph JSON: ") + ex.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw Error(ErrorKind::Schema, "hypergraph JSON needs keys \"n\" and \"edges\"");
  if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 0)
    throw Error(ErrorKind::Schema, "\"n\" must be a nonnegative integer");
  if (!doc["edges"].is_array()) throw Error(ErrorKind::Schema, "\"edges\" must be an array");
  Hypergraph h;
  h.n = doc["n"].get<int>();
  std::set<std::vector<int>> seen;
  for (const auto& je : doc["edges"]) {
    if (!je.is_array() || je.empty()) throw Error(ErrorKind::Schema, "each edge must be a nonempty array");
    std::vector<int> e;
    for (const auto& jv : je) {
      if (!jv.is_number_integer()) throw Error(ErrorKind::Schema, "edge entries must be integers");
      int v = jv.get<int>();
      if (!e.empty() && v <= e.back())
        throw Error(ErrorKind::Schema, "edge " + std::to_string(h.m()) + " is not strictly increasing");
      e.push_back(v);
    }
    if (!seen.insert(e).second) throw Error(ErrorKind::Schema, "duplicate edge " + std::to_string(h.m()));
    h.edges.push_back(std::move(e));
  }
  validate(h);
  return h;
}

std::string save_json(const Hypergraph& h) {
  nlohmann::ordered_json doc;
  doc["n"] = h.n;
  doc["edges"] = nlohmann::ordered_json::array();
  for (const auto& e : h.edges) doc["edges"].push_back(e);
  return doc.dump();
}

}  // namespace hz
