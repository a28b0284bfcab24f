#include "ecgraph/reductions.hpp"

#include <random>
#include <set>
#include <stdexcept>

#include "ecgraph/structure.hpp"

namespace ecg {

ReductionMap reduce_ham_to_supereulerian(const Graph& g, ReductionVariant variant) {
  ReductionMap out;
  Graph& h = out.graph;
  std::vector<int> vr(g.n()), vb(g.n());
  auto add = [&](int src, const std::string& role, std::string name) {
    out.provenance.push_back({src, role});
    return h.add_vertex(std::move(name));
  };
  for (int v = 0; v < g.n(); ++v) {
    const std::string& nm = g.name(v);
    if (variant == ReductionVariant::Basic) {
      int self = add(v, "v", nm);
      vr[v] = add(v, "r", nm + "_r");
      vb[v] = add(v, "b", nm + "_b");
      h.add_edge(nm + ":rv", vr[v], self, Colour::Blue);
      h.add_edge(nm + ":vb", self, vb[v], Colour::Red);
    } else {
      vr[v] = add(v, "r", nm + "_r");
      vb[v] = add(v, "b", nm + "_b");
      int w[4];
      for (int i = 0; i < 4; ++i) w[i] = add(v, std::to_string(i + 1), nm + "_" + std::to_string(i + 1));
      h.add_edge(nm + ":b1", vb[v], w[0], Colour::Red);
      h.add_edge(nm + ":12", w[0], w[1], Colour::Blue);
      h.add_edge(nm + ":23", w[1], w[2], Colour::Red);
      h.add_edge(nm + ":34", w[2], w[3], Colour::Blue);
      h.add_edge(nm + ":41", w[3], w[0], Colour::Red);
      h.add_edge(nm + ":1r", w[0], vr[v], Colour::Blue);
      h.add_edge(nm + ":r4", vr[v], w[3], Colour::Red);
      h.add_edge(nm + ":2b", w[1], vb[v], Colour::Blue);
    }
  }
  for (const Edge& e : g.edges()) {
    if (e.colour == Colour::Red)
      h.add_edge(e.id, vr[e.u], vr[e.v], Colour::Red);
    else
      h.add_edge(e.id, vb[e.u], vb[e.v], Colour::Blue);
  }
  return out;
}

namespace {

struct Builder {
  Graph g;
  explicit Builder(std::initializer_list<const char*> vs) {
    for (const char* v : vs) g.add_vertex(v);
  }
  void edge(const char* u, const char* v, Colour c) {
    g.add_edge(std::string(u) + "-" + v, g.vertex(u), g.vertex(v), c);
  }
  void red(const char* u, const char* v) { edge(u, v, Colour::Red); }
  void blue(const char* u, const char* v) { edge(u, v, Colour::Blue); }
};

Graph cmg_base(int r, std::uint64_t seed, bool fixed) {
  Graph g;
  std::vector<int> z(4), x(r), y(r);
  for (int i = 0; i < 4; ++i) z[i] = g.add_vertex("z" + std::to_string(i + 1));
  for (int i = 0; i < r; ++i) x[i] = g.add_vertex("x" + std::to_string(i + 1));
  for (int i = 0; i < r; ++i) y[i] = g.add_vertex("y" + std::to_string(i + 1));
  auto edge = [&](int u, int v, Colour c) { g.add_edge(g.name(u) + "-" + g.name(v), u, v, c); };
  // z1z2 is the only red edge at z1.
  edge(z[0], z[1], Colour::Red);
  edge(z[1], z[2], Colour::Blue);
  edge(z[2], z[3], Colour::Red);
  edge(z[0], z[3], Colour::Blue);
  for (int i = 0; i < r; ++i) {
    edge(x[i], z[0], Colour::Blue);
    edge(x[i], z[1], Colour::Red);
    edge(x[i], z[2], Colour::Blue);
    edge(x[i], z[3], Colour::Blue);
  }
  for (int i = 0; i < r; ++i) {
    edge(y[i], z[1], Colour::Red);
    edge(y[i], z[3], Colour::Red);
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Colour c;
      if (j == i)
        c = Colour::Red;  // x_i y_i on the alternating X-Y hamiltonian cycle
      else if (j == (i + r - 1) % r)
        c = Colour::Blue;  // y_{i-1} x_i
      else if (fixed)
        continue;
      else
        c = colour_at(static_cast<int>(rng() & 1));
      edge(x[i], y[j], c);
    }
  return g;
}

std::string vname(int i) { return "v" + std::to_string(i + 1); }

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"needall_g", "needall_h", "efig", "halfm", "cmg_example"};
  return names;
}

Graph fixture(const std::string& name) {
  if (name == "needall_g") {
    Builder b{"x1", "x2", "u", "v", "y1", "y2"};
    b.blue("x1", "x2");
    b.blue("y1", "y2");
    b.blue("u", "v");
    b.red("x1", "u");
    b.red("x2", "u");
    b.red("y2", "v");
    b.red("y1", "v");
    return b.g;
  }
  if (name == "needall_h") {
    Builder b{"x1", "x2", "u1", "u2", "v1", "v2", "y1", "y2"};
    b.blue("x1", "x2");
    b.blue("y1", "y2");
    for (const char* u : {"u1", "u2"}) {
      for (const char* v : {"v1", "v2"}) b.blue(u, v);
      b.red("x1", u);
      b.red("x2", u);
    }
    for (const char* v : {"v1", "v2"}) {
      b.red("y2", v);
      b.red("y1", v);
    }
    return b.g;
  }
  if (name == "efig") {
    Builder b{"v1", "v2", "v3", "v4", "v5", "v6"};
    b.blue("v1", "v2");
    b.red("v2", "v3");
    b.blue("v3", "v4");
    b.red("v4", "v5");
    b.blue("v5", "v6");
    b.red("v6", "v3");
    b.blue("v3", "v5");
    b.red("v5", "v1");
    b.red("v4", "v1");
    b.blue("v4", "v2");
    return b.g;
  }
  if (name == "halfm") {
    Builder b{"a", "b", "c", "d", "e", "f", "g", "h"};
    b.blue("a", "b");
    b.red("b", "c");
    b.blue("c", "d");
    b.red("d", "a");
    b.blue("e", "f");
    b.red("f", "g");
    b.blue("g", "h");
    b.red("e", "h");
    b.blue("a", "e");
    b.red("a", "f");
    b.red("b", "e");
    return b.g;
  }
  if (name == "cmg_example") return cmg_base(2, 0, true);
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

Graph random_2ec(std::uint64_t seed, int n, int m, bool parallel) {
  if (n < 1 || m < 0) throw std::invalid_argument("random_2ec needs n >= 1 and m >= 0");
  std::mt19937_64 rng(seed);
  Graph g;
  for (int i = 0; i < n; ++i) g.add_vertex(vname(i));
  if (n < 2) return g;
  std::set<std::pair<int, int>> used;
  int cap = parallel ? m : std::min(m, n * (n - 1) / 2);
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (g.m() < cap) {
    int u = pick(rng), v = pick(rng);
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!parallel && !used.insert({u, v}).second) continue;
    g.add_edge(u, v, colour_at(static_cast<int>(rng() & 1)));
  }
  return g;
}

Graph mclosed_blowup(std::uint64_t seed, int n) {
  if (n < 2) throw std::invalid_argument("mclosed_blowup needs n >= 2");
  std::mt19937_64 rng(seed);
  int k = std::uniform_int_distribution<int>(std::max(2, (n + 1) / 2), n)(rng);
  double p = std::uniform_real_distribution<double>(0.25, 0.8)(rng);
  std::bernoulli_distribution edge(p), digon(0.1);
  Graph base;
  for (int i = 0; i < k; ++i) base.add_vertex(vname(i));
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) {
      if (!edge(rng)) continue;
      Colour c = colour_at(static_cast<int>(rng() & 1));
      base.add_edge(u, v, c);
      if (digon(rng)) base.add_edge(u, v, other(c));
    }
  Graph closed = m_closure(base, ClosurePolicy::SeededRandom, rng());
  std::vector<int> mult(k, 1);
  for (int extra = n - k; extra > 0; --extra) ++mult[std::uniform_int_distribution<int>(0, k - 1)(rng)];
  return blow_up(closed, mult).graph;
}

Graph complete_multipartite(std::uint64_t seed, const std::vector<int>& sizes) {
  if (sizes.size() < 2) throw std::invalid_argument("complete multipartite graphs need at least two classes");
  std::mt19937_64 rng(seed);
  Graph g;
  std::vector<int> cls;
  for (size_t c = 0; c < sizes.size(); ++c) {
    if (sizes[c] < 1) throw std::invalid_argument("class sizes must be positive");
    for (int i = 0; i < sizes[c]; ++i) {
      std::string nm = sizes.size() == 2 ? std::string(c == 0 ? "x" : "y") + std::to_string(i + 1)
                                         : std::string(1, static_cast<char>('a' + c)) + std::to_string(i + 1);
      g.add_vertex(nm);
      cls.push_back(static_cast<int>(c));
    }
  }
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v)
      if (cls[u] != cls[v]) g.add_edge(g.name(u) + "-" + g.name(v), u, v, colour_at(static_cast<int>(rng() & 1)));
  return g;
}

Graph complete_bipartite(std::uint64_t seed, int a, int b) { return complete_multipartite(seed, {a, b}); }

Graph cmg_family(int r, std::uint64_t seed) {
  if (r < 2) throw std::invalid_argument("cmg_family needs r >= 2");
  return cmg_base(r, seed, false);
}

Graph generate(const std::string& model, std::uint64_t seed, const GenParams& p) {
  if (model == "random_2ec") {
    int m = p.m;
    if (m < 0) {
      std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
      m = std::uniform_int_distribution<int>(0, 2 * p.n)(rng);
    }
    return random_2ec(seed, p.n, m, p.parallel);
  }
  if (model == "mclosed_blowup") return mclosed_blowup(seed, p.n);
  if (model == "complete_bipartite") {
    if (p.parts.size() != 2) throw std::invalid_argument("complete_bipartite needs two class sizes");
    return complete_bipartite(seed, p.parts[0], p.parts[1]);
  }
  if (model == "complete_multipartite") return complete_multipartite(seed, p.parts);
  if (model == "cmg_family") return cmg_family(p.r, seed);
  throw std::invalid_argument("unknown model '" + model + "'");
}

}  // namespace ecg
