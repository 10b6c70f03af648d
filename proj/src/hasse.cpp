#include "bgg/hasse.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bgg/errors.hpp"

namespace bgg {

namespace {

std::vector<IVec> identity_matrix(int n) {
  std::vector<IVec> m(n, IVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

std::vector<IVec> mat_mul(const std::vector<IVec>& a, const std::vector<IVec>& b) {
  int n = int(a.size());
  std::vector<IVec> out(n, IVec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long x = a[i][k];
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) out[i][j] += x * b[k][j];
    }
  return out;
}

IVec flatten(const std::vector<IVec>& m) {
  IVec out;
  out.reserve(m.size() * m.size());
  for (const IVec& row : m) out.insert(out.end(), row.begin(), row.end());
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long weyl_order(Series s, int rank) {
  if (rank == 0) return 1;
  return s == Series::A ? factorial(rank + 1) : (1L << rank) * factorial(rank);
}

}  // namespace

WeylElt weyl_identity(int rank) {
  WeylElt w;
  w.act = identity_matrix(rank);
  w.inv = w.act;
  return w;
}

WeylElt simple_reflection(const CartanSpec& spec, int j) {
  if (j < 1 || j > spec.rank) throw DomainError("simple_reflection: index out of range");
  const CartanMatrix& cm = cartan_matrix(spec);
  WeylElt w;
  w.act = identity_matrix(spec.rank);
  for (int k = 0; k < spec.rank; ++k) w.act[j - 1][k] -= cm.at(j - 1, k);
  w.inv = w.act;  // involution
  w.word = {j};
  return w;
}

WeylElt compose(const WeylElt& w1, const WeylElt& w2) {
  WeylElt w;
  w.act = mat_mul(w1.act, w2.act);
  w.inv = mat_mul(w2.inv, w1.inv);
  w.word = w1.word;
  w.word.insert(w.word.end(), w2.word.begin(), w2.word.end());
  return w;
}

std::vector<IVec> reflection_matrix(const CartanSpec& spec, const RootVector& alpha) {
  std::vector<IVec> m = identity_matrix(spec.rank);
  // column k of sigma_alpha is alpha_k - <alpha_k, alpha^vee> alpha
  for (int k = 0; k < spec.rank; ++k) {
    QVec coords(spec.rank, Rat(0));
    coords[k] = 1;
    long pair = to_long(
        cartan_pairing(spec, weight_from_simple_coords(spec, coords), alpha));
    for (int i = 0; i < spec.rank; ++i) m[i][k] -= pair * alpha.coeffs[i];
  }
  return m;
}

IVec act_on_coords(const std::vector<IVec>& m, const IVec& x) {
  int n = int(m.size());
  IVec y(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) y[i] += m[i][j] * x[j];
  return y;
}

QVec act_on_coords(const std::vector<IVec>& m, const QVec& x) {
  int n = int(m.size());
  QVec y(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (m[i][j] != 0) y[i] += Rat(m[i][j]) * x[j];
  return y;
}

Weight weyl_apply(const CartanSpec& spec, const WeylElt& w, const Weight& mu) {
  QVec coords = to_simple_root_coords(spec, mu);
  return weight_from_simple_coords(spec, act_on_coords(w.act, coords));
}

std::vector<RootVector> phi_set(const CartanSpec& spec, const WeylElt& w) {
  std::vector<RootVector> out;
  for (const RootVector& alpha : positive_roots(spec)) {
    IVec pre = act_on_coords(w.inv, alpha.coeffs);
    bool neg = true;
    for (long c : pre)
      if (c > 0) {
        neg = false;
        break;
      }
    if (neg) out.push_back(alpha);
  }
  return out;
}

long wp_size(const GradingInfo& grading) {
  long w = weyl_order(grading.spec.series, grading.spec.rank);
  // |W_{g0}| is the product over the uncrossed segments of the diagram.
  long wg0 = 1;
  std::vector<int> seg;
  auto flush = [&](bool touches_last) {
    if (seg.empty()) return;
    Series s = (grading.spec.series == Series::C && touches_last) ? Series::C : Series::A;
    wg0 *= weyl_order(s, int(seg.size()));
    seg.clear();
  };
  for (int i = 1; i <= grading.spec.rank; ++i) {
    if (grading.crossing.contains(i)) {
      flush(false);
    } else {
      seg.push_back(i);
      if (i == grading.spec.rank) flush(true);
    }
  }
  check_internal(w % wg0 == 0, "Weyl subgroup order must divide |W|");
  return w / wg0;
}

std::vector<long> HasseGraph::length_histogram() const {
  std::vector<long> h(max_length + 1, 0);
  for (const HasseNode& n : nodes) h[n.w.word.size()] += 1;
  return h;
}

int HasseGraph::node_by_name(const std::string& name) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].name == name) return int(i);
  return -1;
}

int HasseGraph::find_arrow(int src, int dst) const {
  for (int a : out[src])
    if (arrows[a].dst == dst) return a;
  return -1;
}

bool is_named_family(const GradingInfo& g) {
  const auto& cr = g.crossing.nodes;
  if (g.spec.series == Series::A) {
    if (cr == std::vector<int>{2} && g.spec.rank >= 2) return true;
    if (cr == std::vector<int>{1, g.spec.rank} && g.spec.rank >= 2) return true;
    return false;
  }
  return cr == std::vector<int>{2} && g.spec.rank >= 3;
}

LabelAxis label_axis(const GradingInfo& g, const RootVector& label) {
  long c1 = label.coeffs[0];
  if (g.spec.series == Series::A) {
    if (g.crossing.nodes == std::vector<int>{2})
      return c1 > 0 ? LabelAxis::I : LabelAxis::J;
    long clast = label.coeffs[g.spec.rank - 1];
    if (c1 > 0 && clast == 0) return LabelAxis::I;
    if (clast > 0 && c1 == 0) return LabelAxis::J;
    return LabelAxis::Cross;
  }
  // series C: downgoing labels carry equal alpha_1 and alpha_2 coefficients;
  // the lone mixed root e_1 + e_2 joins the two diagram halves
  if (c1 == 0) return LabelAxis::I;
  return c1 == label.coeffs[1] ? LabelAxis::J : LabelAxis::Cross;
}

namespace {

void assign_names(HasseGraph& g) {
  if (!is_named_family(g.grading)) {
    // per-layer ordinals when the diagram shape has no (i,j) convention
    std::map<int, int> seen;
    for (HasseNode& n : g.nodes) {
      int len = int(n.w.word.size());
      n.name = "w[" + std::to_string(len) + "." + std::to_string(seen[len]++) + "]";
    }
    g.named = false;
    return;
  }

  bool one_graded = g.grading.k == 1;
  int half = one_graded ? g.max_length : (g.max_length - 1) / 2;
  auto bump = [](std::pair<int, int> ij, LabelAxis ax) {
    if (ax == LabelAxis::I) ij.first += 1;
    else ij.second += 1;
    return ij;
  };

  std::vector<std::pair<int, int>> names(g.nodes.size(), {-1, -1});
  // lower half: count labels of each axis along paths from the identity
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    int len = int(g.nodes[v].w.word.size());
    if (len > half) continue;
    if (len == 0) {
      names[v] = {0, 0};
      continue;
    }
    std::pair<int, int> got{-1, -1};
    for (int a : g.in[v]) {
      int u = g.arrows[a].src;
      LabelAxis ax = label_axis(g.grading, g.label_root(a));
      check_internal(ax != LabelAxis::Cross, "cross label inside diagram half");
      auto cand = bump(names[u], ax);
      check_internal(got.first < 0 || got == cand, "inconsistent node naming");
      got = cand;
    }
    check_internal(got.first >= 0, "unreachable node in naming pass");
    names[v] = got;
    g.nodes[v].mirror = false;
  }
  // mirror half: count labels along paths into the maximum
  for (size_t vi = g.nodes.size(); vi-- > 0;) {
    int v = int(vi);
    int len = int(g.nodes[v].w.word.size());
    if (len <= half) continue;
    g.nodes[v].mirror = true;
    if (len == g.max_length) {
      names[v] = {0, 0};
      continue;
    }
    std::pair<int, int> got{-1, -1};
    for (int a : g.out[v]) {
      int u = g.arrows[a].dst;
      LabelAxis ax = label_axis(g.grading, g.label_root(a));
      check_internal(ax != LabelAxis::Cross, "cross label inside diagram half");
      auto cand = bump(names[u], ax);
      check_internal(got.first < 0 || got == cand, "inconsistent node naming");
      got = cand;
    }
    check_internal(got.first >= 0, "node cannot reach the maximum");
    names[v] = got;
  }
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    g.nodes[v].ni = names[v].first;
    g.nodes[v].nj = names[v].second;
    g.nodes[v].name = std::string("w") + (g.nodes[v].mirror ? "^" : "_") + "{" +
                      std::to_string(names[v].first) + "," +
                      std::to_string(names[v].second) + "}";
  }
  g.named = true;
}

}  // namespace

HasseGraph hasse_graph(const GradingInfo& grading, const HasseOptions& opt) {
  long expected = wp_size(grading);
  if (expected > opt.cap)
    throw ConfigError("W^p has " + std::to_string(expected) +
                      " elements, above the cap of " + std::to_string(opt.cap));

  const CartanSpec& spec = grading.spec;
  int nroots = int(grading.delta_plus.size());

  auto phi_indices = [&](const WeylElt& w, std::vector<int>* phi) {
    phi->clear();
    for (int t = 0; t < nroots; ++t) {
      IVec pre = act_on_coords(w.inv, grading.delta_plus[t].coeffs);
      bool neg = true;
      for (long c : pre)
        if (c > 0) {
          neg = false;
          break;
        }
      if (neg) phi->push_back(t);
    }
  };
  auto phi_in_pplus = [&](const std::vector<int>& phi) {
    for (int t : phi)
      if (grading.heights[t] == 0) return false;
    return true;
  };

  // breadth-first closure from the identity by right multiplication,
  // keeping the elements with Phi_w inside Delta_+(p_+)
  std::vector<WeylElt> simples;
  for (int j = 1; j <= spec.rank; ++j) simples.push_back(simple_reflection(spec, j));

  struct Raw {
    WeylElt w;
    std::vector<int> phi;
  };
  std::vector<std::vector<Raw>> layers;
  std::map<IVec, int> seen;
  layers.push_back({});
  {
    Raw id{weyl_identity(spec.rank), {}};
    seen[flatten(id.w.act)] = 0;
    layers[0].push_back(std::move(id));
  }
  while (!layers.back().empty()) {
    std::vector<Raw> next;
    for (const Raw& r : layers.back()) {
      for (int j = 1; j <= spec.rank; ++j) {
        // length grows iff w(alpha_j) stays positive
        bool ascends = false;
        for (int i = 0; i < spec.rank; ++i)
          if (r.w.act[i][j - 1] > 0) {
            ascends = true;
            break;
          }
        if (!ascends) continue;
        WeylElt w2 = compose(r.w, simples[j - 1]);
        IVec key = flatten(w2.act);
        if (seen.count(key)) continue;
        Raw cand{std::move(w2), {}};
        phi_indices(cand.w, &cand.phi);
        check_internal(cand.phi.size() == cand.w.word.size(),
                       "length must equal |Phi_w|");
        if (!phi_in_pplus(cand.phi)) continue;
        seen[std::move(key)] = 1;
        next.push_back(std::move(cand));
      }
    }
    layers.push_back(std::move(next));
  }
  layers.pop_back();

  HasseGraph g{grading};
  g.max_length = int(layers.size()) - 1;
  std::map<IVec, int> node_id;
  for (auto& layer : layers) {
    std::sort(layer.begin(), layer.end(),
              [](const Raw& a, const Raw& b) { return a.phi < b.phi; });
    for (Raw& r : layer) {
      node_id[flatten(r.w.act)] = int(g.nodes.size());
      g.nodes.push_back(HasseNode{std::move(r.w), std::move(r.phi), "", -1, -1, false});
    }
  }
  check_internal(long(g.nodes.size()) == expected,
                 "generated node count disagrees with |W|/|W_{g0}|");
  check_internal(layers.front().size() == 1 && layers.back().size() == 1,
                 "Hasse graph needs a unique minimum and maximum");

  // arrows: w -> sigma_alpha w for alpha in Delta_+(p_+), one length up
  std::vector<std::vector<IVec>> refl;
  for (int t : grading.pplus_idx)
    refl.push_back(reflection_matrix(spec, grading.delta_plus[t]));
  for (size_t u = 0; u < g.nodes.size(); ++u) {
    size_t len = g.nodes[u].w.word.size();
    for (size_t p = 0; p < refl.size(); ++p) {
      IVec key = flatten(mat_mul(refl[p], g.nodes[u].w.act));
      auto it = node_id.find(key);
      if (it == node_id.end()) continue;
      int v = it->second;
      if (g.nodes[v].w.word.size() != len + 1) continue;
      g.arrows.push_back(HasseArrow{int(u), v, grading.pplus_idx[p]});
    }
  }
  std::sort(g.arrows.begin(), g.arrows.end(), [](const HasseArrow& a, const HasseArrow& b) {
    return std::tie(a.src, a.dst) < std::tie(b.src, b.dst);
  });
  g.out.assign(g.nodes.size(), {});
  g.in.assign(g.nodes.size(), {});
  for (size_t a = 0; a < g.arrows.size(); ++a) {
    g.out[g.arrows[a].src].push_back(int(a));
    g.in[g.arrows[a].dst].push_back(int(a));
  }
  for (size_t v = 1; v < g.nodes.size(); ++v)
    check_internal(!g.in[v].empty() || g.nodes[v].w.word.empty(),
                   "non-identity node without incoming arrow");

  assign_names(g);
  return g;
}

std::vector<RootVector> edge_labels_on_chain(const HasseGraph& g,
                                             const std::vector<int>& chain) {
  std::vector<RootVector> out;
  for (size_t i = 0; i + 1 < chain.size(); ++i) {
    int a = g.find_arrow(chain[i], chain[i + 1]);
    if (a < 0) throw DomainError("edge_labels_on_chain: not a directed path");
    out.push_back(g.label_root(a));
  }
  return out;
}

std::vector<std::vector<int>> maximal_axis_chains(const HasseGraph& g, LabelAxis axis) {
  auto axis_arrows_from = [&](int u) {
    std::vector<int> out;
    for (int a : g.out[u])
      if (label_axis(g.grading, g.label_root(a)) == axis) out.push_back(a);
    return out;
  };
  std::vector<bool> has_axis_in(g.nodes.size(), false);
  for (const HasseArrow& a : g.arrows)
    if (label_axis(g.grading, g.grading.delta_plus[a.label]) == axis)
      has_axis_in[a.dst] = true;
  std::vector<std::vector<int>> chains;
  std::vector<int> path;
  std::function<void(int)> extend = [&](int u) {
    std::vector<int> nexts = axis_arrows_from(u);
    if (nexts.empty()) {
      if (path.size() >= 2) chains.push_back(path);
      return;
    }
    for (int a : nexts) {
      path.push_back(g.arrows[a].dst);
      extend(g.arrows[a].dst);
      path.pop_back();
    }
  };
  for (size_t u = 0; u < g.nodes.size(); ++u) {
    if (has_axis_in[u]) continue;
    path = {int(u)};
    extend(int(u));
  }
  return chains;
}

namespace {

std::vector<int> walk_edge(const HasseGraph& g, bool from_min) {
  // left edge: alpha_1-free labels from the minimum, down to half height;
  // right edge: alpha_1-positive labels into the maximum
  int maxlen = g.max_length;
  int lo_stop = maxlen / 2;          // left edge's last length
  int hi_stop = (maxlen + 1) / 2;    // right edge's first length
  std::vector<int> chain;
  if (from_min) {
    int cur = 0;
    check_internal(g.nodes[cur].w.word.empty(), "node 0 must be the identity");
    chain.push_back(cur);
    while (int(g.nodes[cur].w.word.size()) < lo_stop) {
      int next = -1;
      for (int a : g.out[cur]) {
        if (g.label_root(a).coeffs[0] != 0) continue;
        check_internal(next < 0, "left edge is not unique");
        next = g.arrows[a].dst;
      }
      check_internal(next >= 0, "left edge ended early");
      chain.push_back(next);
      cur = next;
    }
    return chain;
  }
  int cur = int(g.nodes.size()) - 1;
  check_internal(int(g.nodes[cur].w.word.size()) == maxlen, "last node must be maximal");
  chain.push_back(cur);
  while (int(g.nodes[cur].w.word.size()) > hi_stop) {
    int prev = -1;
    for (int a : g.in[cur]) {
      if (g.label_root(a).coeffs[0] == 0) continue;
      check_internal(prev < 0, "right edge is not unique");
      prev = g.arrows[a].src;
    }
    check_internal(prev >= 0, "right edge ended early");
    chain.push_back(prev);
    cur = prev;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

std::vector<int> left_edge_chain(const HasseGraph& g) { return walk_edge(g, true); }
std::vector<int> right_edge_chain(const HasseGraph& g) { return walk_edge(g, false); }

}  // namespace bgg
