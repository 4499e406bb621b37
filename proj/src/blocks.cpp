// blocks.cpp -- block and coding computations.
#include "bvtk/blocks.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "bvtk/dynamics.hpp"

namespace bvtk {

Alphabet make_alphabet(const Diagram& d, int k) {
  if (k < 0 || k > d.depth()) throw std::invalid_argument("alphabet level out of range");
  DimTable dims = dimensions(d);
  Alphabet a;
  a.k = k;
  a.offsets.resize(d.width(k));
  Dim off = 0;
  for (int i = 0; i < d.width(k); ++i) {
    a.offsets[i] = off;
    off += dims.dims[k][i];
  }
  a.size = off;
  return a;
}

Dim letter_id(const Alphabet& a, const RankTable& rt, const FinitePath& p) {
  if (p.length() != a.k) throw std::invalid_argument("letter has wrong level");
  return a.offsets[p.end_vertex()] + path_rank(rt, p);
}

FinitePath letter_path(const Diagram& d, const Alphabet& a, const RankTable& rt, Dim id) {
  if (id < 0 || id >= a.size) throw std::invalid_argument("letter id out of range");
  int v = static_cast<int>(a.offsets.size()) - 1;
  while (a.offsets[v] > id) --v;
  return path_unrank(d, rt, a.k, v, id - a.offsets[v]);
}

std::string letter_name(const Diagram& d, const Alphabet& a, const RankTable& rt, Dim id) {
  FinitePath p = letter_path(d, a, rt, id);
  std::ostringstream out;
  out << d.at(a.k, p.end_vertex()).name << ":";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out << ".";
    out << p.edges[i].ordinal;
  }
  return out.str();
}

Block coding_by_vertices(const Diagram& d, int level, int index, int j) {
  d.at(level, index);
  if (j < 1 || j >= level) throw std::invalid_argument("coding level must satisfy 1 <= j < level");
  // words[v] = sources of the ordered j-to-v segments; rolled upward level by
  // level, keeping only the current level's words.
  std::vector<std::vector<Dim>> words(d.width(j));
  for (int i = 0; i < d.width(j); ++i) words[i] = {static_cast<Dim>(i)};
  for (int n = j + 1; n <= level; ++n) {
    std::vector<std::vector<Dim>> next(d.width(n));
    for (int i = 0; i < d.width(n); ++i) {
      if (n == level && i != index) continue;
      size_t total = 0;
      for (int s : d.at(n, i).in_edges) total += words[s].size();
      next[i].reserve(total);
      for (int s : d.at(n, i).in_edges)
        next[i].insert(next[i].end(), words[s].begin(), words[s].end());
    }
    words.swap(next);
  }
  Block b;
  b.level_tag = j;
  b.vertex_alphabet = true;
  b.letters = std::move(words[index]);
  return b;
}

Block basic_block(const Diagram& d, int level, int index, int k) {
  d.at(level, index);
  if (k < 1 || k >= level) throw std::invalid_argument("block level must satisfy 1 <= k < level");
  // B_k(v) expands C_k(v): a coding letter u contributes the consecutive run
  // of all paths into u, which is exactly its slice of A_k.
  Block coding = coding_by_vertices(d, level, index, k);
  Alphabet a = make_alphabet(d, k);
  DimTable dims = dimensions(d);
  Block b;
  b.level_tag = k;
  Dim total = 0;
  for (Dim u : coding.letters) total += dims.dims[k][static_cast<int>(u)];
  b.letters.reserve(static_cast<size_t>(total));
  for (Dim u : coding.letters) {
    int ui = static_cast<int>(u);
    for (Dim r = 0; r < dims.dims[k][ui]; ++r) b.letters.push_back(a.offsets[ui] + r);
  }
  return b;
}

Block factor_block(const Diagram& d, const Block& b, int i) {
  if (b.vertex_alphabet) throw std::invalid_argument("factor map applies to path alphabets");
  if (i < 1 || i > b.level_tag) throw std::invalid_argument("factor level must satisfy 1 <= i <= k");
  if (i == b.level_tag) return b;
  Alphabet from = make_alphabet(d, b.level_tag);
  Alphabet to = make_alphabet(d, i);
  RankTable rt = make_rank_table(d);
  // Letterwise truncation with a small memo; words repeat letters heavily.
  std::map<Dim, Dim> memo;
  Block out;
  out.level_tag = i;
  out.letters.reserve(b.letters.size());
  for (Dim id : b.letters) {
    auto it = memo.find(id);
    if (it == memo.end()) {
      FinitePath p = letter_path(d, from, rt, id);
      it = memo.emplace(id, letter_id(to, rt, p.truncated(i))).first;
    }
    out.letters.push_back(it->second);
  }
  return out;
}

DottedBlock dotted_basic_block(const PathSpec& x, int n, int k, const Diagram& d) {
  FinitePath p = resolve(x, n, d);
  RankTable rt = make_rank_table(d);
  return DottedBlock{basic_block(d, n, p.vertex_at(n), k), dot_index_path(p, n, rt)};
}

std::optional<UniformOrder> uniform_order_test(const Diagram& d, int n) {
  if (n < 1 || n > d.depth()) throw std::invalid_argument("level out of range");
  if (n == 1) {
    // Level-0 blocks are words over the singleton root alphabet; every
    // level-1 vertex is a power of the one-letter block.
    UniformOrder u;
    u.period.level_tag = 0;
    u.period.letters = {0};
    DimTable dims = dimensions(d);
    for (int i = 0; i < d.width(1); ++i) u.powers.push_back(dims.dims[1][i]);
    return u;
  }
  std::vector<Block> blocks;
  blocks.reserve(d.width(n));
  for (int i = 0; i < d.width(n); ++i) blocks.push_back(basic_block(d, n, i, n - 1));
  Dim g = 0;
  for (const Block& b : blocks) g = std::gcd(g, b.length());
  for (Dim p = 1; p <= g; ++p) {
    if (g % p != 0) continue;
    bool ok = true;
    for (const Block& b : blocks) {
      for (Dim pos = 0; pos < b.length() && ok; ++pos)
        ok = b.letters[pos] == blocks[0].letters[pos % p];
    }
    if (ok) {
      UniformOrder u;
      u.period.level_tag = n - 1;
      u.period.letters.assign(blocks[0].letters.begin(), blocks[0].letters.begin() + p);
      for (const Block& b : blocks) u.powers.push_back(b.length() / p);
      return u;
    }
  }
  return std::nullopt;
}

bool k_equivalent_vertices(const Diagram& d, int level, int v, int w, int k) {
  if (k < 1 || k >= level) throw std::invalid_argument("k must satisfy 1 <= k < level");
  if (v == w) return true;
  // Basic blocks expand vertex codings letter by letter with an injective,
  // prefix-free decode, so comparing codings compares blocks.
  return coding_by_vertices(d, level, v, k) == coding_by_vertices(d, level, w, k);
}

DeterminismReport deterministic_test(const Diagram& d) {
  DeterminismReport r;
  // Source levels >= 1 only: whenever level 1 has several vertices the root
  // unavoidably sources several ordinal-1 edges, so the root is exempt.
  for (int n = 2; n <= d.depth(); ++n) {
    // seen[(source, ordinal)] = first target using that outgoing label.
    std::map<std::pair<int, int>, int> seen;
    for (int t = 0; t < d.width(n); ++t) {
      const auto& in = d.at(n, t).in_edges;
      for (size_t p = 0; p < in.size(); ++p) {
        auto key = std::make_pair(in[p], static_cast<int>(p) + 1);
        auto [it, fresh] = seen.emplace(key, t);
        if (!fresh) {
          r.deterministic = false;
          r.level = n - 1;
          r.source = d.at(n - 1, in[p]).name;
          r.ordinal = static_cast<int>(p) + 1;
          r.target_a = d.at(n, it->second).name;
          r.target_b = d.at(n, t).name;
          return r;
        }
      }
    }
  }
  return r;
}

}  // namespace bvtk
