#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "f1k/intmat.hpp"
#include "f1k/ring.hpp"
#include "f1k/tmod.hpp"

namespace f1k {

// A Jordan block J_size(lambda). Eigenvalues are kept symbolic: either 0
// (nilpotent) or the root of unity e^{2 pi i num/den} with num/den reduced
// and in [0,1). Base change only ever produces nilpotent blocks and size-1
// root-of-unity blocks.
struct JordanBlock {
  int size = 1;
  bool nilpotent = true;
  int num = 0, den = 1;

  static JordanBlock zero(int size) { return JordanBlock{size, true, 0, 1}; }

  static JordanBlock root(int size, int num, int den) {
    const int g = std::gcd(num % den, den);
    return JordanBlock{size, false, (num % den) / g, den / g};
  }

  std::string eig_str() const {
    return nilpotent ? "0" : std::to_string(num) + "/" + std::to_string(den);
  }

  bool operator==(const JordanBlock&) const = default;
};

// Serialization order: nilpotent blocks first, then roots of unity by
// rotation value with 0/1 counting as a full turn (so D_n lists as
// zeta, zeta^2, ..., zeta^n = 1); sizes descending within an eigenvalue.
struct JordanBlockOrder {
  bool operator()(const JordanBlock& a, const JordanBlock& b) const {
    if (a.nilpotent != b.nilpotent) return a.nilpotent;
    if (!a.nilpotent) {
      const long long pa = a.num == 0 ? a.den : a.num;
      const long long pb = b.num == 0 ? b.den : b.num;
      const long long lhs = pa * b.den, rhs = pb * a.den;
      if (lhs != rhs) return lhs < rhs;
    }
    return a.size > b.size;
  }
};

// Block -> multiplicity. Multiplicities are positive for the image of a
// module and arbitrary nonzero integers for formal combinations.
using JordanMultiset = std::map<JordanBlock, Int, JordanBlockOrder>;

inline void add_block(JordanMultiset& m, const JordanBlock& b, const Int& mult) {
  if (mult == 0) return;
  auto [it, inserted] = m.emplace(b, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) m.erase(it);
  }
}

// D_len = diag of all len-th roots of unity, as size-1 blocks
inline void add_cycle_blocks(JordanMultiset& m, int len, const Int& mult = 1) {
  for (int k = 1; k <= len; ++k) add_block(m, JordanBlock::root(1, k, len), mult);
}

inline Int total_size(const JordanMultiset& m) {
  Int total = 0;
  for (const auto& [b, c] : m) total += c * b.size;
  return total;
}

// Adjacency matrix of Gamma_M: entry (i,j) = 1 iff succ(j) = i, i.e. column
// j carries the image of basis vector j.
inline IntMatrix matrix_of(const TModule& m) {
  IntMatrix a(m.dim(), m.dim());
  for (int j = 1; j <= m.dim(); ++j)
    if (m.succ(j) != 0) a.at(m.succ(j) - 1, j - 1) = 1;
  return a;
}

// A partition of the vertices into all directed cycles plus greedily-longest
// chains (vertex sequences in t-direction). Ties among equal-length chains
// go to the lowest starting element.
struct ProperPartition {
  std::vector<std::vector<int>> chains;
  std::vector<std::vector<int>> cycles;

  std::vector<int> chain_lengths() const {
    std::vector<int> out;
    for (const auto& c : chains) out.push_back(static_cast<int>(c.size()));
    return out;
  }
  std::vector<int> cycle_lengths() const {
    std::vector<int> out;
    for (const auto& z : cycles) out.push_back(static_cast<int>(z.size()));
    return out;
  }
};

inline ProperPartition proper_partition(const TModule& m) {
  ProperPartition out;
  out.cycles = cycles(m);
  std::vector<bool> alive(m.dim() + 1, true);
  alive[0] = false;
  int remaining = m.dim();
  for (const auto& z : out.cycles)
    for (int v : z) {
      alive[v] = false;
      --remaining;
    }
  // repeatedly peel the longest chain of what is left
  while (remaining > 0) {
    int best = 0, best_len = 0;
    for (int v = 1; v <= m.dim(); ++v) {
      if (!alive[v]) continue;
      int len = 0;
      for (int u = v; u != 0 && alive[u]; u = m.succ(u)) ++len;
      if (len > best_len) {
        best_len = len;
        best = v;
      }
    }
    std::vector<int> chain;
    for (int u = best; u != 0 && alive[u]; u = m.succ(u)) {
      chain.push_back(u);
      alive[u] = false;
      --remaining;
    }
    out.chains.push_back(std::move(chain));
  }
  return out;
}

// Adj(Gamma_M) is similar to (+)_i J_{l(C_i)}(0) (+) (+)_j D_{l(Z_j)} for any
// proper partition {C_i, Z_j}.
inline JordanMultiset base_change(const TModule& m) {
  const ProperPartition pp = proper_partition(m);
  JordanMultiset out;
  for (const auto& c : pp.chains) add_block(out, JordanBlock::zero(static_cast<int>(c.size())), 1);
  for (const auto& z : pp.cycles) add_cycle_blocks(out, static_cast<int>(z.size()));
  return out;
}

// Independent verification route that never looks at the partition: the
// nilpotent structure comes from exact ranks r_k = rank(A^k) over Q
// (number of nilpotent blocks of size >= k equals r_{k-1} - r_k), the
// invertible part from the declared cycle lengths.
inline JordanMultiset jordan_oracle(const IntMatrix& a, const std::vector<int>& cycle_lengths) {
  if (a.rows() != a.cols()) fail(ErrorCode::bad_dimension, "adjacency matrix must be square");
  const int n = a.rows();
  for (int j = 0; j < n; ++j) {
    int nonzeros = 0;
    for (int i = 0; i < n; ++i) {
      const Int& v = a.at(i, j);
      if (v == 0) continue;
      if (v != 1 || ++nonzeros > 1)
        fail(ErrorCode::non_functional, "column " + std::to_string(j + 1) + " is not a basis vector image");
    }
  }
  int r_inf = 0;
  for (int len : cycle_lengths) r_inf += len;

  std::vector<int> blocks_ge;  // blocks_ge[k-1] = number of nilpotent blocks of size >= k
  IntMatrix power = a;
  int r_prev = n;
  while (r_prev > r_inf) {
    const int r = power.rank();
    blocks_ge.push_back(r_prev - r);
    if (static_cast<int>(blocks_ge.size()) > n) fail(ErrorCode::non_functional, "ranks do not stabilize");
    r_prev = r;
    if (r > r_inf) power = power * a;
  }

  JordanMultiset out;
  for (size_t k = 0; k < blocks_ge.size(); ++k) {
    const int next = k + 1 < blocks_ge.size() ? blocks_ge[k + 1] : 0;
    add_block(out, JordanBlock::zero(static_cast<int>(k) + 1), blocks_ge[k] - next);
  }
  for (int len : cycle_lengths) add_cycle_blocks(out, len);
  return out;
}

// Linear extension of base_change over canonical keys; additive on (+) by
// construction.
inline JordanMultiset base_change_ring(const RingElement& x) {
  if (x.species().kind != Species::Kind::tmod)
    fail(ErrorCode::species_mismatch, "base change applies to species tmod only");
  JordanMultiset out;
  for (const auto& [key, coeff] : x.terms())
    for (const auto& [block, mult] : base_change(realize_tmod(key))) add_block(out, block, coeff * mult);
  return out;
}

// lines "<mult> x J(<size>, <eig>)" in JordanBlockOrder
inline std::string serialize_jordan(const JordanMultiset& m) {
  std::ostringstream out;
  for (const auto& [b, c] : m) out << c.str() << " x J(" << b.size << ", " << b.eig_str() << ")\n";
  return out.str();
}

}  // namespace f1k
