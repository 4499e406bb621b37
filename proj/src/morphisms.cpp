// morphisms.cpp -- word-level machinery.
#include "bvtk/morphisms.hpp"

#include <algorithm>
#include <stdexcept>

namespace bvtk {

Morphism tau(int j) {
  if (j < 3) throw std::invalid_argument("tau: needs j >= 3");
  Morphism m;
  m.images['E'] = "EED" + std::string(2 * j - 5, 'E');
  m.images['D'] = "ED" + std::string(2 * j - 4, 'E');
  return m;
}

std::string apply(const Morphism& m, const std::string& w) {
  std::string out;
  for (char c : w) {
    auto it = m.images.find(c);
    if (it == m.images.end())
      throw std::invalid_argument(std::string("apply: letter '") + c + "' not in domain");
    out += it->second;
  }
  return out;
}

std::string ptm_word(Dim L) {
  if (L < 0) throw std::invalid_argument("ptm_word: negative length");
  if (L == 0) return "";
  std::string s = "a";
  while (static_cast<Dim>(s.size()) < L) {
    std::string t;
    t.reserve(2 * s.size());
    for (char c : s) t += c == 'a' ? "ab" : "ba";
    s = std::move(t);
  }
  s.resize(static_cast<size_t>(L));
  return s;
}

namespace {

int column_index(const Diagram& d, int level, int pos1) {
  int idx = d.index_of(level, "v" + std::to_string(level) + "_" + std::to_string(pos1));
  if (idx < 0)
    throw std::invalid_argument("no column-" + std::to_string(pos1) + " vertex at level " +
                                std::to_string(level));
  return idx;
}

}  // namespace

std::string phi_factor(const Diagram& d, const Block& coding) {
  if (!coding.vertex_alphabet) throw std::invalid_argument("phi_factor: needs a vertex coding");
  int third = column_index(d, coding.level_tag, 3);
  std::string w;
  w.reserve(coding.letters.size());
  for (Dim s : coding.letters) w += s == third ? 'D' : 'E';
  return w;
}

std::string tilde_reduction(const Diagram& d, int n) {
  if (n < 3 || n > d.depth()) throw std::invalid_argument("tilde_reduction: level out of range");
  // In-edge word of the vertex, with sources in the second column kept as E,
  // the third as D, everything else erased to 0.
  auto reduced = [&](int level, int target) {
    int e = column_index(d, level - 1, 2);
    int dd = column_index(d, level - 1, 3);
    const auto& in = d.at(level, target).in_edges;
    std::string w;
    w.reserve(in.size());
    for (int s : in) w += s == e ? 'E' : s == dd ? 'D' : '0';
    return w;
  };
  std::string cur = reduced(n, 0);
  for (int j = n - 1; j >= 3; --j) {
    std::string ew = reduced(j, column_index(d, j, 2));
    std::string dw = reduced(j, column_index(d, j, 3));
    std::string zw(ew.size(), '0');
    std::string next;
    next.reserve(cur.size() * ew.size());
    for (char c : cur) next += c == 'E' ? ew : c == 'D' ? dw : zw;
    cur = std::move(next);
  }
  return cur;
}

std::optional<PowerForm> power_form(const std::string& w) {
  size_t n = w.size();
  if (n < 2) return std::nullopt;
  // Failure function; n - fail[n] is the shortest period, and every period
  // of length at most n/2 would be a multiple region of it.
  std::vector<size_t> fail(n + 1, 0);
  for (size_t i = 1; i < n; ++i) {
    size_t k = fail[i];
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  size_t p = n - fail[n];
  if (n < 2 * p) return std::nullopt;
  PowerForm out;
  out.period = w.substr(0, p);
  out.power = static_cast<int>(n / p);
  out.tail = w.substr(0, n % p);
  return out;
}

ParseResult desubstitute(const std::string& w, int j) {
  if (j < 3) throw std::invalid_argument("desubstitute: needs j >= 3");
  for (char c : w)
    if (c != 'D' && c != 'E')
      throw std::invalid_argument("desubstitute: letters must be D or E");
  Morphism m = tau(j);
  const std::string& te = m.images.at('E');
  const std::string& td = m.images.at('D');
  int L = static_cast<int>(te.size());
  int n = static_cast<int>(w.size());

  long total = 0;
  std::vector<std::pair<char, int>> unique_interior;
  // Alignment r: w[0] sits at offset r inside its image block, so blocks
  // start at -r, -r + L, ...
  for (int r = 0; r < L; ++r) {
    bool feasible = true;
    std::vector<int> cand;  // per block: bit 1 = E fits, bit 2 = D fits
    std::vector<std::pair<char, int>> interior;
    for (int b = (r == 0 ? 0 : -r); b < n && feasible; b += L) {
      int lo = std::max(b, 0);
      int hi = std::min(b + L, n);
      size_t off = static_cast<size_t>(lo - b);
      size_t len = static_cast<size_t>(hi - lo);
      int mask = 0;
      if (te.compare(off, len, w, static_cast<size_t>(lo), len) == 0) mask |= 1;
      if (td.compare(off, len, w, static_cast<size_t>(lo), len) == 0) mask |= 2;
      if (mask == 0) {
        feasible = false;
        break;
      }
      // The two images differ, so a complete block is forced.
      if (static_cast<int>(len) == L) interior.push_back({mask == 1 ? 'E' : 'D', b});
      cand.push_back(mask);
    }
    if (!feasible) continue;
    // Only the edge blocks can be unforced; the alignment is consistent when
    // some choice for them avoids DD in the upper word. The interior is the
    // same either way, so the alignment contributes one factorization.
    std::vector<size_t> free;
    for (size_t i = 0; i < cand.size(); ++i)
      if (cand[i] == 3) free.push_back(i);
    bool consistent = false;
    for (unsigned combo = 0; combo < (1u << free.size()) && !consistent; ++combo) {
      std::string letters;
      letters.reserve(cand.size());
      size_t f = 0;
      for (size_t i = 0; i < cand.size(); ++i) {
        int mask = cand[i];
        if (mask == 3) mask = (combo >> f++) & 1 ? 2 : 1;
        letters += mask == 1 ? 'E' : 'D';
      }
      if (letters.find("DD") == std::string::npos) consistent = true;
    }
    if (consistent) {
      ++total;
      unique_interior = interior;
    }
  }

  ParseResult out;
  out.count = total;
  if (total == 1) {
    out.kind = ParseResult::Kind::Unique;
    out.factorization = unique_interior;
  } else {
    out.kind = total == 0 ? ParseResult::Kind::NoParse : ParseResult::Kind::Ambiguous;
  }
  return out;
}

}  // namespace bvtk
