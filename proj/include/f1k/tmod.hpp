#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "f1k/error.hpp"
#include "f1k/textio.hpp"

namespace f1k {

// A finite <t>-module in pointed sets: elements 1..dim plus the basepoint 0,
// with succ(m) = t.m. The graph with an edge m -> succ(m) whenever
// succ(m) != 0 is a functional digraph (out-degree <= 1 everywhere), so every
// connected component is a rooted tree or a wheel.
class TModule {
public:
  TModule() = default;  // the zero module

  // succ[i-1] = t.(i); values must lie in 0..dim.
  explicit TModule(std::vector<int> succ) : succ_(std::move(succ)) {
    const int d = dim();
    for (int i = 1; i <= d; ++i) {
      const int s = succ_[i - 1];
      if (s < 0 || s > d)
        fail(ErrorCode::out_of_range, "succ(" + std::to_string(i) + ") = " + std::to_string(s) +
                                          " outside 0.." + std::to_string(d));
    }
  }

  // Checked construction from a raw map: total on 1..dim, values in 0..dim.
  static TModule validate(int dim, const std::map<int, int>& succ) {
    if (dim < 0) fail(ErrorCode::out_of_range, "negative dimension");
    for (const auto& [m, s] : succ)
      if (m < 1 || m > dim)
        fail(ErrorCode::out_of_range, "element " + std::to_string(m) + " outside 1.." + std::to_string(dim));
    std::vector<int> table(dim, 0);
    for (int i = 1; i <= dim; ++i) {
      auto it = succ.find(i);
      if (it == succ.end()) fail(ErrorCode::missing, "succ undefined on element " + std::to_string(i));
      if (it->second < 0 || it->second > dim)
        fail(ErrorCode::out_of_range, "succ(" + std::to_string(i) + ") = " + std::to_string(it->second) +
                                          " outside 0.." + std::to_string(dim));
      table[i - 1] = it->second;
    }
    return TModule(std::move(table));
  }

  int dim() const { return static_cast<int>(succ_.size()); }

  // m in 1..dim
  int succ(int m) const { return succ_.at(m - 1); }

  // exact preimage of m under succ; pred(0) = ker(t)
  std::vector<int> pred(int m) const {
    std::vector<int> out;
    for (int i = 1; i <= dim(); ++i)
      if (succ_[i - 1] == m) out.push_back(i);
    return out;
  }

  // pred as a table, preds[v] for v in 0..dim
  std::vector<std::vector<int>> pred_table() const {
    std::vector<std::vector<int>> preds(dim() + 1);
    for (int i = 1; i <= dim(); ++i) preds[succ_[i - 1]].push_back(i);
    return preds;
  }

  bool operator==(const TModule&) const = default;

private:
  std::vector<int> succ_;
};

// One weakly-connected component, with elements[k] = parent-module index of
// the component's element k+1.
struct Component {
  TModule module;
  std::vector<int> elements;
};

inline std::vector<Component> components(const TModule& m) {
  const int d = m.dim();
  std::vector<int> parent(d + 1);
  for (int i = 0; i <= d; ++i) parent[i] = i;
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (int i = 1; i <= d; ++i)
    if (m.succ(i) != 0) unite(i, m.succ(i));

  // group by representative, ordered by smallest member
  std::map<int, std::vector<int>> groups;
  for (int i = 1; i <= d; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<int>> ordered;
  for (auto& [root, members] : groups) ordered.push_back(members);
  std::sort(ordered.begin(), ordered.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) { return a.front() < b.front(); });

  std::vector<Component> out;
  std::vector<int> local(d + 1, 0);
  for (auto& members : ordered) {
    for (size_t k = 0; k < members.size(); ++k) local[members[k]] = static_cast<int>(k) + 1;
    std::vector<int> succ(members.size());
    for (size_t k = 0; k < members.size(); ++k) {
      const int s = m.succ(members[k]);
      succ[k] = s == 0 ? 0 : local[s];
    }
    out.push_back(Component{TModule(std::move(succ)), members});
  }
  return out;
}

inline bool is_connected(const TModule& m) { return m.dim() > 0 && components(m).size() == 1; }

inline void require_connected(const TModule& m) {
  if (!is_connected(m)) fail(ErrorCode::not_connected, "module is not indecomposable");
}

namespace detail {

// Walks succ from v until it either reaches the basepoint (returns 0) or
// provably enters a cycle (returns a vertex on the cycle).
inline int walk_to_cycle_or_root(const TModule& m, int v) {
  for (int steps = 0; steps <= m.dim(); ++steps) {
    if (v == 0) return 0;
    v = m.succ(v);
  }
  return v;
}

}  // namespace detail

enum class IndecKind { Tree, Wheel };

struct IndecClass {
  IndecKind kind;
  int height = 0;     // Tree: max depth over vertices
  int cycle_len = 0;  // Wheel: length of the unique cycle
};

// number of succ steps from m to the root of its (tree) component
inline int depth(const TModule& m, int elem) {
  if (elem < 1 || elem > m.dim()) fail(ErrorCode::out_of_range, "element " + std::to_string(elem));
  int v = elem;
  for (int steps = 0; steps <= m.dim(); ++steps) {
    if (m.succ(v) == 0) return steps;
    v = m.succ(v);
  }
  fail(ErrorCode::in_wheel, "element " + std::to_string(elem) + " lies in a component with a cycle");
}

inline IndecClass classify(const TModule& m) {
  require_connected(m);
  const int probe = detail::walk_to_cycle_or_root(m, 1);
  if (probe == 0) {
    int height = 0;
    for (int v = 1; v <= m.dim(); ++v) height = std::max(height, depth(m, v));
    return IndecClass{IndecKind::Tree, height, 0};
  }
  int len = 1;
  for (int v = m.succ(probe); v != probe; v = m.succ(v)) ++len;
  return IndecClass{IndecKind::Wheel, 0, len};
}

// All directed cycles, one per wheel component; ordered by smallest vertex,
// each listed in succ order starting at its smallest vertex.
inline std::vector<std::vector<int>> cycles(const TModule& m) {
  const int d = m.dim();
  // strip vertices of in-degree zero; what survives lies on cycles
  std::vector<int> indeg(d + 1, 0);
  for (int i = 1; i <= d; ++i) ++indeg[m.succ(i)];
  std::vector<int> stack;
  std::vector<bool> dead(d + 1, false);
  for (int i = 1; i <= d; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    dead[v] = true;
    const int s = m.succ(v);
    if (s != 0 && --indeg[s] == 0) stack.push_back(s);
  }
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(d + 1, false);
  for (int i = 1; i <= d; ++i) {
    if (dead[i] || seen[i]) continue;
    std::vector<int> cyc{i};
    seen[i] = true;
    for (int v = m.succ(i); v != i; v = m.succ(v)) {
      cyc.push_back(v);
      seen[v] = true;
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

inline std::vector<int> cycle_lengths(const TModule& m) {
  std::vector<int> out;
  for (const auto& z : cycles(m)) out.push_back(static_cast<int>(z.size()));
  return out;
}

// M ^ N: all pairs (m,n) with the diagonal action, pairs with either
// coordinate killed collapsing to the basepoint. Pair (m,n) gets index
// (m-1)*dim(N) + n; only canonical codes are contract-bearing.
inline TModule smash(const TModule& a, const TModule& b) {
  const int da = a.dim(), db = b.dim();
  std::vector<int> succ(da * db, 0);
  for (int m = 1; m <= da; ++m)
    for (int n = 1; n <= db; ++n) {
      const int sm = a.succ(m), sn = b.succ(n);
      succ[(m - 1) * db + n - 1] = (sm != 0 && sn != 0) ? (sm - 1) * db + sn : 0;
    }
  return TModule(std::move(succ));
}

// index of the pair (m,n) inside smash(a,b)
inline int smash_index(int m, int n, int dim_b) { return (m - 1) * dim_b + n; }

// M (+) N: wedge of pointed sets, N's elements shifted past M's
inline TModule direct_sum(const TModule& a, const TModule& b) {
  std::vector<int> succ;
  succ.reserve(a.dim() + b.dim());
  for (int i = 1; i <= a.dim(); ++i) succ.push_back(a.succ(i));
  for (int j = 1; j <= b.dim(); ++j) succ.push_back(b.succ(j) == 0 ? 0 : b.succ(j) + a.dim());
  return TModule(std::move(succ));
}

namespace detail {

inline std::string ahu_code(int v, const std::vector<std::vector<int>>& children) {
  std::vector<std::string> sub;
  sub.reserve(children[v].size());
  for (int c : children[v]) sub.push_back(ahu_code(c, children));
  std::sort(sub.begin(), sub.end());
  std::string out = "(";
  for (const auto& s : sub) out += s;
  out += ")";
  return out;
}

}  // namespace detail

// Canonical code of an indecomposable module. Trees get the AHU code with
// child codes in ascending order; wheels get "W(" + the lexicographically
// least rotation of the attached-tree codes in t-direction + ")". Two
// indecomposables are isomorphic iff their codes are equal strings.
inline std::string canonicalize(const TModule& m) {
  require_connected(m);
  auto children = m.pred_table();
  const int probe = detail::walk_to_cycle_or_root(m, 1);
  if (probe == 0) {
    const int root = m.pred(0).front();
    return detail::ahu_code(root, children);
  }
  std::vector<int> cyc{probe};
  for (int v = m.succ(probe); v != probe; v = m.succ(v)) cyc.push_back(v);
  const int len = static_cast<int>(cyc.size());
  // detach the cycle: drop each cycle vertex's cycle predecessor from its children
  for (int i = 0; i < len; ++i) {
    const int z = cyc[i];
    const int zprev = cyc[(i + len - 1) % len];
    auto& ch = children[z];
    ch.erase(std::remove(ch.begin(), ch.end(), zprev), ch.end());
  }
  std::vector<std::string> codes;
  codes.reserve(len);
  for (int z : cyc) codes.push_back(detail::ahu_code(z, children));
  std::vector<std::string> best = codes;
  for (int r = 1; r < len; ++r) {
    std::rotate(codes.begin(), codes.begin() + 1, codes.end());
    if (codes < best) best = codes;
  }
  std::string out = "W(";
  for (int i = 0; i < len; ++i) {
    if (i) out += ",";
    out += best[i];
  }
  out += ")";
  return out;
}

namespace detail {

// Appends a tree given by its code; returns the root's index. parent = 0
// leaves the root pointing at the basepoint.
inline int realize_tree(const std::string& key, size_t& pos, int parent, std::vector<int>& succ) {
  if (pos >= key.size() || key[pos] != '(') fail(ErrorCode::parse_error, "expected '(' at offset " + std::to_string(pos));
  ++pos;
  succ.push_back(parent);
  const int root = static_cast<int>(succ.size());
  while (pos < key.size() && key[pos] == '(') realize_tree(key, pos, root, succ);
  if (pos >= key.size() || key[pos] != ')') fail(ErrorCode::parse_error, "expected ')' at offset " + std::to_string(pos));
  ++pos;
  return root;
}

}  // namespace detail

// Inverse of canonicalize on canonical keys: canonicalize(realize_tmod(k)) == k.
inline TModule realize_tmod(const std::string& key) {
  std::vector<int> succ;
  size_t pos = 0;
  if (key.rfind("W(", 0) == 0) {
    pos = 2;
    std::vector<int> roots;
    roots.push_back(detail::realize_tree(key, pos, 0, succ));
    while (pos < key.size() && key[pos] == ',') {
      ++pos;
      roots.push_back(detail::realize_tree(key, pos, 0, succ));
    }
    if (pos >= key.size() || key[pos] != ')') fail(ErrorCode::parse_error, "unterminated wheel code");
    ++pos;
    const int len = static_cast<int>(roots.size());
    for (int i = 0; i < len; ++i)
      succ[roots[i] - 1] = roots[(i + 1) % len];
  } else {
    detail::realize_tree(key, pos, 0, succ);
  }
  if (pos != key.size()) fail(ErrorCode::parse_error, "trailing characters at offset " + std::to_string(pos));
  return TModule(std::move(succ));
}

// --- text format `tmod v1` ---------------------------------------------
//
//   tmod <dim>
//   <i> <succ(i)>        (one line per element, i ascending 1..dim)
//
// '#' starts a comment; blank lines are ignored.

inline std::string serialize_tmod(const TModule& m) {
  std::ostringstream out;
  out << "tmod " << m.dim() << "\n";
  for (int i = 1; i <= m.dim(); ++i) out << i << " " << m.succ(i) << "\n";
  return out.str();
}

inline TModule parse_tmod(std::istream& in) {
  const auto lines = detail::significant_lines(in);
  if (lines.empty()) fail(ErrorCode::parse_error, "empty tmod input");
  std::istringstream header(lines.front());
  std::string tag;
  int dim = -1;
  if (!(header >> tag >> dim) || tag != "tmod" || dim < 0)
    fail(ErrorCode::parse_error, "expected header 'tmod <dim>'");
  std::string extra;
  if (header >> extra) fail(ErrorCode::parse_error, "trailing tokens in header");
  std::map<int, int> succ;
  for (size_t k = 1; k < lines.size(); ++k) {
    std::istringstream row(lines[k]);
    int i = 0, s = 0;
    if (!(row >> i >> s)) fail(ErrorCode::parse_error, "expected '<i> <succ>' on line " + std::to_string(k + 1));
    if (row >> extra) fail(ErrorCode::parse_error, "trailing tokens on line " + std::to_string(k + 1));
    if (i != static_cast<int>(k)) fail(ErrorCode::parse_error, "elements must be listed in ascending order 1..dim");
    succ[i] = s;
  }
  return TModule::validate(dim, succ);
}

inline TModule parse_tmod(const std::string& text) {
  std::istringstream in(text);
  return parse_tmod(in);
}

}  // namespace f1k
