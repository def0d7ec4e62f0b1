#include "conex/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "conex/cycles.hpp"
#include "conex/embedding.hpp"
#include "conex/graph6.hpp"

namespace conex {

Forbid Forbid::parse(const std::string& spec) {
  auto num = [&](size_t at) {
    size_t pos = 0;
    int v = std::stoi(spec.substr(at), &pos);
    if (at + pos != spec.size()) throw std::invalid_argument("bad forbid parameter: " + spec);
    return v;
  };
  if (spec.rfind("path:", 0) == 0) return path(num(5));
  if (spec.rfind("cycle-ge:", 0) == 0) return cycle_ge(num(9));
  if (spec.rfind("cycle:", 0) == 0) return cycle_exact(num(6));
  return tree(Tree(graph6_decode(spec)));
}

Forbid Forbid::tree(const Tree& t) {
  Forbid f;
  f.kind_ = Kind::tree_pattern;
  f.k_ = t.order();
  f.tree_ = std::make_shared<Tree>(t);
  f.descriptor_ = "tree:" + graph6_encode(t.graph());
  return f;
}

Forbid Forbid::path(int k) {
  if (k < 1) throw std::invalid_argument("path pattern requires k >= 1");
  Forbid f;
  f.kind_ = Kind::path;
  f.k_ = k;
  f.tree_ = std::make_shared<Tree>(Tree(Graph::path(k)));
  f.descriptor_ = "path:" + std::to_string(k);
  return f;
}

Forbid Forbid::cycle_ge(int k) {
  if (k < 3) throw std::invalid_argument("cycle-ge pattern requires k >= 3");
  Forbid f;
  f.kind_ = Kind::cycle_ge;
  f.k_ = k;
  f.descriptor_ = "cycle-ge:" + std::to_string(k);
  return f;
}

Forbid Forbid::cycle_exact(int k) {
  if (k < 3) throw std::invalid_argument("cycle pattern requires k >= 3");
  Forbid f;
  f.kind_ = Kind::cycle_exact;
  f.k_ = k;
  f.descriptor_ = "cycle:" + std::to_string(k);
  return f;
}

bool Forbid::contains(const Graph& host) const {
  switch (kind_) {
    case Kind::tree_pattern:
    case Kind::path:
      return find_tree_embedding(host, *tree_).outcome == SearchOutcome::found;
    case Kind::cycle_ge:
      return has_cycle_at_least(host, k_);
    case Kind::cycle_exact:
      return has_cycle_exact(host, k_);
  }
  return false;
}

namespace {

struct Partial {
  long long best = -1;
  std::vector<std::string> witnesses;

  void take(const SmallGraph& g, const CanonResult& c) {
    long long e = g.edges();
    if (e < best) return;
    if (e > best) {
      best = e;
      witnesses.clear();
    }
    witnesses.push_back(small_canonical_g6(g, c));
  }
  void merge(const Partial& o) {
    if (o.best < best) return;
    if (o.best > best) {
      best = o.best;
      witnesses = o.witnesses;
      return;
    }
    witnesses.insert(witnesses.end(), o.witnesses.begin(), o.witnesses.end());
  }
};

}  // namespace

ExtremalRecord extremal_number(int n, const Forbid& forbid, bool connected_only, int workers,
                               bool force) {
  if (workers < 1) throw std::invalid_argument("workers must be >= 1");
  auto prune = [&](const SmallGraph& g) { return forbid.contains(to_graph(g)); };

  Partial total;
  auto leaf = [&](Partial& acc) {
    return [&acc, connected_only](const SmallGraph& g, const CanonResult& c) {
      if (connected_only && !g.connected()) return;
      acc.take(g, c);
    };
  };

  int shard_level = std::min(n, 6);
  if (workers == 1 || n <= shard_level) {
    for_each_graph(n, /*connected_only=*/false, leaf(total), prune, force);
  } else {
    // pruned traversal to the shard level, then independent subtrees
    (void)force;
    if (n > (force ? kEnumForceCap : kEnumDefaultCap))
      throw CapExceeded("enumeration cap exceeded: n = " + std::to_string(n));
    auto seeds = detail::enumeration_seeds(shard_level, prune);
    std::vector<Partial> parts(seeds.size());
    std::atomic<size_t> next{0};
    auto work = [&]() {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= seeds.size()) break;
        detail::extend_from(seeds[i], n, leaf(parts[i]), prune);
      }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
    for (const Partial& p : parts) total.merge(p);
  }

  ExtremalRecord rec;
  rec.n = n;
  rec.forbid = forbid.descriptor();
  rec.connected_only = connected_only;
  rec.max_edges = total.best;
  rec.witnesses = std::move(total.witnesses);
  std::sort(rec.witnesses.begin(), rec.witnesses.end());

  // Witness soundness: re-validate through the decode path.
  for (const std::string& w : rec.witnesses) {
    Graph g = graph6_decode(w);
    if (g.edge_count() != rec.max_edges || (connected_only && !g.is_connected()) ||
        forbid.contains(g))
      throw std::logic_error("extremal witness failed re-validation");
  }
  return rec;
}

std::string to_json_string(const ExtremalRecord& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["forbid"] = r.forbid;
  j["connected"] = r.connected_only;
  j["max_edges"] = r.max_edges;
  j["witnesses"] = r.witnesses;
  return j.dump();
}

}  // namespace conex
