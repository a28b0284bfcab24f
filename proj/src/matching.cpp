#include "ecgraph/matching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ecgraph/core.hpp"

namespace ecg {

bool Matching::perfect() const {
  return std::all_of(mate.begin(), mate.end(), [](int m) { return m >= 0; });
}

namespace {

// Edmonds' search from one exposed root at a time. Blossom bases are tracked with a
// union-find whose representatives store the current base vertex.
class Blossom {
 public:
  explicit Blossom(const PlainGraph& g) : n_(g.n), adj_(g.n) {
    std::vector<int> last(g.n, -1);
    // Collapse parallel edges; keep first-seen order per vertex.
    std::vector<std::vector<int>> raw(g.n);
    for (const auto& [u, v] : g.edges) {
      if (u == v) throw std::invalid_argument("matching input has a self-loop");
      raw[u].push_back(v);
      raw[v].push_back(u);
    }
    for (int v = 0; v < n_; ++v)
      for (int w : raw[v])
        if (last[w] != v) {
          last[w] = v;
          adj_[v].push_back(w);
        }
    mate_.assign(n_, -1);
    parent_.assign(n_, -1);
    even_.assign(n_, 0);
    ds_.resize(n_);
    base_.resize(n_);
    stamp_.assign(n_, 0);
  }

  void set_mate(const std::vector<int>& mate) { mate_ = mate; }
  const std::vector<int>& mate() const { return mate_; }
  const std::vector<char>& even() const { return even_; }

  void greedy() {
    for (int v = 0; v < n_; ++v)
      if (mate_[v] < 0)
        for (int w : adj_[v])
          if (mate_[w] < 0) {
            mate_[v] = w;
            mate_[w] = v;
            break;
          }
  }

  void solve() {
    for (int r = 0; r < n_; ++r)
      if (mate_[r] < 0) {
        int t = search(r);
        if (t >= 0) augment(t);
      }
  }

  // Grows the alternating tree from `root`; returns an exposed vertex reached, or -1.
  int search(int root) {
    std::fill(parent_.begin(), parent_.end(), -1);
    std::fill(even_.begin(), even_.end(), 0);
    std::iota(ds_.begin(), ds_.end(), 0);
    std::iota(base_.begin(), base_.end(), 0);
    queue_.clear();
    even_[root] = 1;
    queue_.push_back(root);
    for (size_t qi = 0; qi < queue_.size(); ++qi) {
      int v = queue_[qi];
      for (int to : adj_[v]) {
        if (base_of(v) == base_of(to) || mate_[v] == to) continue;
        if (to == root || (mate_[to] >= 0 && parent_[mate_[to]] >= 0)) {
          int b = lca(v, to);
          pending_.clear();
          mark_path(v, b, to);
          mark_path(to, b, v);
          // Bases change only after both halves are walked.
          for (int x : pending_) unite(x, b);
        } else if (parent_[to] < 0) {
          parent_[to] = v;
          if (mate_[to] < 0) return to;
          even_[mate_[to]] = 1;
          queue_.push_back(mate_[to]);
        }
      }
    }
    return -1;
  }

  void augment(int v) {
    while (v >= 0) {
      int pv = parent_[v];
      int ppv = mate_[pv];
      mate_[v] = pv;
      mate_[pv] = v;
      v = ppv;
    }
  }

 private:
  int find(int x) {
    while (ds_[x] != x) {
      ds_[x] = ds_[ds_[x]];
      x = ds_[x];
    }
    return x;
  }
  int base_of(int v) { return base_[find(v)]; }

  void unite(int a, int b_root_vertex) {
    int ra = find(a), rb = find(b_root_vertex);
    if (ra == rb) return;
    int keep = base_[rb];
    ds_[ra] = rb;
    base_[rb] = keep;
  }

  int lca(int a, int b) {
    ++clock_;
    for (;;) {
      a = base_of(a);
      stamp_[a] = clock_;
      if (mate_[a] < 0) break;
      a = parent_[mate_[a]];
    }
    for (;;) {
      b = base_of(b);
      if (stamp_[b] == clock_) return b;
      b = parent_[mate_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_of(v) != b) {
      int mv = mate_[v];
      parent_[v] = child;
      child = mv;
      if (!even_[mv]) {
        even_[mv] = 1;
        queue_.push_back(mv);
      }
      pending_.push_back(v);
      pending_.push_back(mv);
      v = parent_[mv];
    }
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> mate_, parent_, ds_, base_, stamp_, queue_, pending_;
  std::vector<char> even_;
  int clock_ = 0;
};

}  // namespace

Matching maximum_matching(const PlainGraph& g) {
  Blossom b(g);
  b.greedy();
  b.solve();
  Matching m;
  m.mate = b.mate();
  std::vector<char> taken(g.n, 0);
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    auto [u, v] = g.edges[e];
    if (m.mate[u] == v && !taken[u]) {
      taken[u] = taken[v] = 1;
      m.edges.push_back(e);
    }
  }
  return m;
}

bool has_perfect_matching(const PlainGraph& g) {
  if (g.n % 2) return false;
  return maximum_matching(g).perfect();
}

std::vector<char> even_reachable(const PlainGraph& g, const std::vector<int>& mate, int root) {
  if (mate.at(root) >= 0) throw std::invalid_argument("even_reachable: root is matched");
  Blossom b(g);
  b.set_mate(mate);
  if (b.search(root) >= 0) throw std::invalid_argument("even_reachable: augmenting path exists");
  return b.even();
}

}  // namespace ecg
