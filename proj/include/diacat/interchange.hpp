#ifndef DIACAT_INTERCHANGE_HPP_
#define DIACAT_INTERCHANGE_HPP_

// Slices, the interchange swap, and a canonical representative of an
// interchange class.
//
// Pieces anchored to the frame are brought to normal form by rightward
// exchanges, which terminate and agree on every member of the class. A
// closed component floats inside one face; it is normalized on its own and
// placed as a block in the leftmost gap of that face, at the first height
// where the face is met.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "error.hpp"
#include "signature.hpp"

namespace diacat {

// A generator whiskered by `offset` identity strands on its left.
struct Slice {
  int offset = 0;
  Gen gen;

  friend bool operator==(Slice const& a, Slice const& b) {
    return a.offset == b.offset && a.gen == b.gen;
  }
  friend bool operator<(Slice const& a, Slice const& b) {
    if (a.offset != b.offset) return a.offset < b.offset;
    return a.gen < b.gen;
  }
};

// Swaps slices `lower` (applied first) and `upper` when their supports are
// disjoint. With `leftward` the upper slice must lie left of the lower one;
// otherwise it must lie right. A slice with empty domain sitting exactly on
// the empty output of the one below is both left and right of it.
inline std::optional<std::pair<Slice, Slice>> interchange_swap(
    Slice const& lower, Slice const& upper, bool leftward) {
  int a  = lower.offset;
  int ca = static_cast<int>(lower.gen.cod.size());
  int da = static_cast<int>(lower.gen.dom.size());
  int b  = upper.offset;
  int db = static_cast<int>(upper.gen.dom.size());
  int cb = static_cast<int>(upper.gen.cod.size());
  bool tie = ca == 0 && db == 0 && a == b;
  if (leftward) {
    if (!(b + db <= a)) return std::nullopt;
    return std::pair{Slice{b, upper.gen}, Slice{a + cb - db, lower.gen}};
  }
  if (!(b >= a + ca) && !tie) return std::nullopt;
  return std::pair{Slice{b - ca + da, upper.gen}, Slice{a, lower.gen}};
}

namespace detail {

inline int uf_find(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

// Produced by node `lo` (a bottom point when lo < 0), consumed by node `hi`
// (a top point when hi < 0).
struct Strand {
  int lo = -1;
  int hi = -1;
};

// Nodes of one connected piece in a frame, with closed blocks sitting in
// its faces. A block's face is the right side of strand `key`, or the left
// wall when key < 0.
struct Layer {
  std::vector<int> nodes;
  std::vector<int> bottom;
  std::vector<int> top;
  std::vector<std::pair<int, std::vector<Slice>>> blocks;
};

class Canonicalizer {
 public:
  Canonicalizer(std::size_t width, std::vector<Slice> const& slices) : slices_(slices) {
    std::vector<int> word;
    for (std::size_t i = 0; i < width; ++i) word.push_back(new_strand(-1));
    words_.push_back(word);
    ins_.resize(slices.size());
    outs_.resize(slices.size());
    for (std::size_t k = 0; k < slices.size(); ++k) {
      auto const& s = slices[k];
      auto d = static_cast<int>(s.gen.dom.size());
      auto c = static_cast<int>(s.gen.cod.size());
      std::vector<int> next(word.begin(), word.begin() + s.offset);
      for (int i = 0; i < d; ++i) {
        int e = word[s.offset + i];
        strands_[e].hi = int(k);
        ins_[k].push_back(e);
      }
      for (int j = 0; j < c; ++j) {
        int e = new_strand(int(k));
        outs_[k].push_back(e);
        next.push_back(e);
      }
      next.insert(next.end(), word.begin() + s.offset + d, word.end());
      word = std::move(next);
      words_.push_back(word);
    }
  }

  std::vector<Slice> run() {
    std::size_t n = slices_.size();
    // connected components of nodes; strands touching the frame anchor them
    std::vector<int> parent(n);
    for (std::size_t k = 0; k < n; ++k) parent[k] = int(k);
    std::vector<char> anchored(n, 0);
    for (auto const& st : strands_) {
      if (st.lo >= 0 && st.hi >= 0) {
        parent[uf_find(parent, st.lo)] = uf_find(parent, st.hi);
      }
    }
    for (auto const& st : strands_) {
      if (st.lo < 0 && st.hi >= 0) anchored[uf_find(parent, st.hi)] = 1;
      if (st.hi < 0 && st.lo >= 0) anchored[uf_find(parent, st.lo)] = 1;
    }
    comp_.assign(n, -1);
    std::map<int, int> index;
    std::vector<std::vector<int>> members;
    for (std::size_t k = 0; k < n; ++k) {
      int r = uf_find(parent, int(k));
      if (anchored[r]) continue;
      auto [it, fresh] = index.try_emplace(r, int(members.size()));
      if (fresh) members.emplace_back();
      comp_[k] = it->second;
      members[it->second].push_back(int(k));
    }
    Layer rest;
    for (std::size_t k = 0; k < n; ++k) {
      if (comp_[k] < 0) rest.nodes.push_back(int(k));
    }
    rest.bottom = words_.front();
    rest.top    = words_.back();
    if (!members.empty()) attach_closed(members, rest);
    return arrange(rest, -1);
  }

 private:
  int new_strand(int lo) {
    strands_.push_back({lo, -1});
    return int(strands_.size()) - 1;
  }

  int strand_comp(int e) const {
    auto const& st = strands_[e];
    int node = st.lo >= 0 ? st.lo : st.hi;
    return node >= 0 ? comp_[node] : -1;
  }

  // Locates every closed component (its container and face), arranges
  // them innermost first, and hands the outermost ones to `rest` as blocks.
  void attach_closed(std::vector<std::vector<int>> const& members, Layer& rest) {
    std::vector<int> base;
    int cells = 0;
    for (auto const& w : words_) {
      base.push_back(cells);
      cells += int(w.size()) + 1;
    }
    std::vector<int> face(cells);
    for (int i = 0; i < cells; ++i) face[i] = i;
    auto join = [&](int a, int b) { face[uf_find(face, a)] = uf_find(face, b); };
    for (std::size_t k = 0; k < slices_.size(); ++k) {
      int o = slices_[k].offset;
      int d = int(slices_[k].gen.dom.size());
      int c = int(slices_[k].gen.cod.size());
      int w = int(words_[k].size());
      for (int g = 0; g <= w; ++g) {
        if (g <= o) join(base[k] + g, base[k + 1] + g);
        if (g >= o + d) join(base[k] + g, base[k + 1] + g - d + c);
      }
    }
    std::size_t m = members.size();
    std::map<int, char> touches_rest;
    std::map<int, std::vector<int>> touches;
    for (std::size_t h = 0; h < words_.size(); ++h) {
      auto const& w = words_[h];
      for (int g = 0; g <= int(w.size()); ++g) {
        int r = uf_find(face, base[h] + g);
        if (g == 0 || g == int(w.size())) touches_rest[r] = 1;
        for (int p : {g - 1, g}) {
          if (p < 0 || p >= int(w.size())) continue;
          int q = strand_comp(w[p]);
          if (q < 0) {
            touches_rest[r] = 1;
          } else {
            touches[r].push_back(q);
          }
        }
      }
    }
    std::vector<int> outer(m), container(m), key(m);
    for (std::size_t q = 0; q < m; ++q) {
      int first = members[q].front();
      outer[q]  = uf_find(face, base[first] + slices_[first].offset);
    }
    for (std::size_t q = 0; q < m; ++q) {
      int first = members[q].front();
      container[q] = -1;
      if (!touches_rest[outer[q]]) {
        container[q] = -2;
        for (int c : touches[outer[q]]) {
          if (outer[c] != outer[q]) container[q] = c;
        }
        if (container[q] == -2) {
          throw Error(ErrorCode::invalid_argument, "closed component without container");
        }
      }
      key[q]      = -1;
      auto const& w = words_[first];
      for (int p = slices_[first].offset - 1; p >= 0; --p) {
        if (strand_comp(w[p]) == container[q]) {
          key[q] = w[p];
          break;
        }
      }
    }
    std::vector<int> depth(m, -1);
    std::function<int(int)> depth_of = [&](int q) {
      if (depth[q] < 0) depth[q] = container[q] < 0 ? 0 : 1 + depth_of(container[q]);
      return depth[q];
    };
    std::vector<int> order(m);
    for (std::size_t q = 0; q < m; ++q) {
      order[q] = int(q);
      depth_of(int(q));
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return depth[a] > depth[b]; });
    std::vector<Layer> layers(m);
    for (std::size_t q = 0; q < m; ++q) layers[q].nodes = members[q];
    for (int q : order) {
      auto block = arrange(layers[q], q);
      if (container[q] < 0) {
        rest.blocks.push_back({key[q], std::move(block)});
      } else {
        layers[container[q]].blocks.push_back({key[q], std::move(block)});
      }
    }
  }

  // Planar map with the frame. Edge e has darts 2e (lower to upper end) and
  // 2e + 1. Faces lie to the left of their darts.
  struct Map {
    std::map<int, int> edge_of;  // strand -> edge
    int left_wall = 0;
    std::vector<int> face;
  };

  Map build(Layer const& layer) const {
    Map mp;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rot;
    auto vertex = [&] {
      rot.emplace_back();
      return int(rot.size()) - 1;
    };
    auto edge = [&](int u, int v) {
      edges.push_back({u, v});
      return int(edges.size()) - 1;
    };
    int nb = int(layer.bottom.size());
    int nt = int(layer.top.size());
    int bl = vertex(), br = vertex(), tr = vertex(), tl = vertex();
    std::vector<int> bv(nb), tv(nt);
    for (auto& v : bv) v = vertex();
    for (auto& v : tv) v = vertex();
    std::map<int, int> node_vertex;
    for (int k : layer.nodes) node_vertex[k] = vertex();
    std::vector<int> bchain{bl};
    bchain.insert(bchain.end(), bv.begin(), bv.end());
    bchain.push_back(br);
    std::vector<int> tchain{tl};
    tchain.insert(tchain.end(), tv.begin(), tv.end());
    tchain.push_back(tr);
    std::vector<int> eb, et;
    for (std::size_t i = 0; i + 1 < bchain.size(); ++i) eb.push_back(edge(bchain[i], bchain[i + 1]));
    for (std::size_t i = 0; i + 1 < tchain.size(); ++i) et.push_back(edge(tchain[i], tchain[i + 1]));
    mp.left_wall   = edge(tl, bl);
    int right_wall = edge(br, tr);
    std::vector<int> strands;
    auto add_strand = [&](int s) {
      if (mp.edge_of.count(s)) return;
      mp.edge_of[s] = -1;
      strands.push_back(s);
    };
    for (int s : layer.bottom) add_strand(s);
    for (int s : layer.top) add_strand(s);
    for (int k : layer.nodes) {
      for (int s : ins_[k]) add_strand(s);
      for (int s : outs_[k]) add_strand(s);
    }
    std::map<int, int> bottom_point, top_point;
    for (int i = 0; i < nb; ++i) bottom_point[layer.bottom[i]] = i;
    for (int j = 0; j < nt; ++j) top_point[layer.top[j]] = j;
    for (int s : strands) {
      auto const& st = strands_[s];
      int u = st.lo >= 0 ? node_vertex.at(st.lo) : bv[bottom_point.at(s)];
      int v = st.hi >= 0 ? node_vertex.at(st.hi) : tv[top_point.at(s)];
      mp.edge_of[s] = edge(u, v);
    }
    // rotations, clockwise
    rot[bl] = {2 * mp.left_wall + 1, 2 * eb.front()};
    rot[br] = {2 * eb.back() + 1, 2 * right_wall};
    rot[tr] = {2 * et.back() + 1, 2 * right_wall + 1};
    rot[tl] = {2 * et.front(), 2 * mp.left_wall};
    for (int i = 0; i < nb; ++i) {
      rot[bv[i]] = {2 * eb[i] + 1, 2 * mp.edge_of.at(layer.bottom[i]), 2 * eb[i + 1]};
    }
    for (int j = 0; j < nt; ++j) {
      rot[tv[j]] = {2 * et[j] + 1, 2 * et[j + 1], 2 * mp.edge_of.at(layer.top[j]) + 1};
    }
    for (int k : layer.nodes) {
      auto& r = rot[node_vertex.at(k)];
      for (int s : outs_[k]) r.push_back(2 * mp.edge_of.at(s));
      for (auto it = ins_[k].rbegin(); it != ins_[k].rend(); ++it) {
        r.push_back(2 * mp.edge_of.at(*it) + 1);
      }
    }
    int darts = 2 * int(edges.size());
    std::vector<int> slot(darts);
    for (auto const& r : rot) {
      for (std::size_t i = 0; i < r.size(); ++i) slot[r[i]] = int(i);
    }
    auto head = [&](int d) { return d % 2 == 0 ? edges[d / 2].second : edges[d / 2].first; };
    mp.face.assign(darts, -1);
    int faces = 0;
    for (int d0 = 0; d0 < darts; ++d0) {
      if (mp.face[d0] >= 0) continue;
      for (int d = d0; mp.face[d] < 0;) {
        mp.face[d]    = faces;
        auto const& r = rot[head(d)];
        d = r[(slot[d ^ 1] + 1) % r.size()];
      }
      ++faces;
    }
    return mp;
  }

  struct Step {
    int node;
    int offset;
  };

  // The nodes of one layer in their original order, with offsets counted
  // among the layer's own strands.
  std::vector<Step> restrict_to(Layer const& layer, int comp) const {
    std::vector<Step> out;
    for (int k : layer.nodes) {
      auto const& w = words_[k];
      int o = 0;
      for (int p = 0; p < slices_[k].offset; ++p) o += strand_comp(w[p]) == comp;
      out.push_back({k, o});
    }
    return out;
  }

  Slice slice_of(Step const& s) const { return Slice{s.offset, slices_[s.node].gen}; }

  // Rightward exchanges until none applies: a slice sitting wholly to the
  // right of the outputs of the slice below it moves underneath.
  void exchange_right(std::vector<Step>& steps) const {
    std::size_t limit = 64 + 4 * steps.size() * steps.size() * (steps.size() + 1);
    std::size_t i = 1, moves = 0;
    while (i < steps.size()) {
      auto sw = interchange_swap(slice_of(steps[i - 1]), slice_of(steps[i]), false);
      if (!sw) {
        ++i;
        continue;
      }
      if (++moves > limit) throw Error(ErrorCode::invalid_argument, "interchange exchange loops");
      int lower = steps[i - 1].node;
      steps[i - 1] = {steps[i].node, sw->first.offset};
      steps[i]     = {lower, sw->second.offset};
      if (i > 1) --i;
    }
  }

  // Normal form of a layer, with its blocks dropped into the first gap of
  // their face.
  std::vector<Slice> arrange(Layer const& layer, int comp) {
    auto steps = restrict_to(layer, comp);
    exchange_right(steps);
    std::vector<Slice> out;
    if (layer.blocks.empty()) {
      for (auto const& s : steps) out.push_back(slice_of(s));
      return out;
    }
    Map mp = build(layer);
    auto face_of_key = [&](int key) {
      return mp.face[key < 0 ? 2 * mp.left_wall : 2 * mp.edge_of.at(key) + 1];
    };
    std::vector<char> placed(layer.blocks.size(), 0);
    std::vector<int> cut = layer.bottom;
    for (std::size_t h = 0;; ++h) {
      std::vector<std::pair<int, std::size_t>> here;
      for (std::size_t b = 0; b < layer.blocks.size(); ++b) {
        if (placed[b]) continue;
        int f = face_of_key(layer.blocks[b].first);
        for (std::size_t g = 0; g <= cut.size(); ++g) {
          int dart = g == 0 ? 2 * mp.left_wall : 2 * mp.edge_of.at(cut[g - 1]) + 1;
          if (mp.face[dart] == f) {
            here.push_back({int(g), b});
            break;
          }
        }
      }
      std::sort(here.begin(), here.end(), [&](auto const& x, auto const& y) {
        if (x.first != y.first) return x.first < y.first;
        return layer.blocks[x.second].second < layer.blocks[y.second].second;
      });
      for (auto const& [g, b] : here) {
        placed[b] = 1;
        for (auto sl : layer.blocks[b].second) {
          sl.offset += g;
          out.push_back(std::move(sl));
        }
      }
      if (h == steps.size()) break;
      auto const& s = steps[h];
      std::vector<int> next(cut.begin(), cut.begin() + s.offset);
      next.insert(next.end(), outs_[s.node].begin(), outs_[s.node].end());
      next.insert(next.end(), cut.begin() + s.offset + long(ins_[s.node].size()), cut.end());
      cut = std::move(next);
      out.push_back(slice_of(s));
    }
    if (std::find(placed.begin(), placed.end(), 0) != placed.end()) {
      throw Error(ErrorCode::invalid_argument, "closed component has no face");
    }
    return out;
  }

  std::vector<Slice> slices_;
  std::vector<Strand> strands_;
  std::vector<std::vector<int>> ins_;
  std::vector<std::vector<int>> outs_;
  std::vector<std::vector<int>> words_;
  std::vector<int> comp_;
};

}  // namespace detail

// The canonical interchange-equivalent ordering of `slices` on a domain of
// `width` strands.
inline std::vector<Slice> canonical_slices(std::size_t width, std::vector<Slice> const& slices) {
  if (slices.size() < 2) return slices;
  return detail::Canonicalizer(width, slices).run();
}

}  // namespace diacat

#endif  // DIACAT_INTERCHANGE_HPP_
