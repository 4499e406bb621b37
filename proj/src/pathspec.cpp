// pathspec.cpp -- PathSpec parsing, formatting, resolution.
#include "bvtk/pathspec.hpp"

#include <sstream>

namespace bvtk {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad " + what + ": '" + s + "'");
  }
}

std::vector<int> parse_ordinal_word(const std::string& s) {
  std::vector<int> w;
  if (s.find(',') != std::string::npos) {
    for (const std::string& part : split(s, ',')) w.push_back(parse_int(part, "ordinal"));
  } else {
    for (char c : s) {
      if (c < '0' || c > '9') throw std::invalid_argument("bad ordinal word: '" + s + "'");
      w.push_back(c - '0');
    }
  }
  if (w.empty()) throw std::invalid_argument("empty ordinal word");
  for (int o : w)
    if (o < 1) throw std::invalid_argument("ordinals are 1-based");
  return w;
}

SuffixRule parse_suffix(const std::string& s) {
  SuffixRule r;
  if (s == "min") {
    r.kind = SuffixKind::AllMinimal;
  } else if (s == "max") {
    r.kind = SuffixKind::AllMaximal;
  } else if (s.rfind("const:", 0) == 0) {
    r.kind = SuffixKind::ConstantOrdinal;
    r.ordinals = {parse_int(s.substr(6), "constant ordinal")};
    if (r.ordinals[0] < 1) throw std::invalid_argument("ordinals are 1-based");
  } else if (s.rfind("per:", 0) == 0) {
    r.kind = SuffixKind::PeriodicOrdinals;
    r.ordinals = parse_ordinal_word(s.substr(4));
  } else if (s.rfind("track:col:", 0) == 0) {
    r.kind = SuffixKind::VertexTrack;
    for (const std::string& part : split(s.substr(10), ','))
      r.track.push_back(parse_int(part, "track position"));
    for (int i : r.track)
      if (i < 1) throw std::invalid_argument("track positions are 1-based");
  } else {
    throw std::invalid_argument("unknown suffix rule: '" + s + "'");
  }
  return r;
}

}  // namespace

PathSpec parse_pathspec(const std::string& text, const Diagram& d) {
  std::string prefix_part;
  std::string suffix_part;
  for (const std::string& field : split(text, ';')) {
    if (field.rfind("prefix=", 0) == 0)
      prefix_part = field.substr(7);
    else if (field.rfind("suffix=", 0) == 0)
      suffix_part = field.substr(7);
    else if (!field.empty())
      throw std::invalid_argument("unknown path spec field: '" + field + "'");
  }
  if (suffix_part.empty()) throw std::invalid_argument("path spec needs a suffix rule");

  PathSpec x;
  x.suffix = parse_suffix(suffix_part);
  if (!prefix_part.empty()) {
    int level = 0;
    int cur = 0;  // root
    for (const std::string& step : split(prefix_part, ',')) {
      ++level;
      if (level > d.depth()) throw std::invalid_argument("prefix longer than diagram depth");
      size_t at = step.find('@');
      int ordinal = parse_int(step.substr(0, at == std::string::npos ? step.size() : at), "ordinal");
      int target = -1;
      if (at != std::string::npos) {
        std::string name = step.substr(at + 1);
        target = d.index_of(level, name);
        if (target < 0)
          throw std::invalid_argument("no vertex '" + name + "' at level " + std::to_string(level));
        const auto& in = d.at(level, target).in_edges;
        if (ordinal < 1 || ordinal > static_cast<int>(in.size()) || in[ordinal - 1] != cur)
          throw ResolutionError("edge " + std::to_string(ordinal) + "@" + name +
                                " does not start at the current vertex");
      } else {
        // A bare ordinal must match exactly one out-edge of the current vertex.
        for (int t = 0; t < d.width(level); ++t) {
          const auto& in = d.at(level, t).in_edges;
          if (ordinal <= static_cast<int>(in.size()) && in[ordinal - 1] == cur) {
            if (target >= 0)
              throw ResolutionError("bare ordinal " + std::to_string(ordinal) +
                                    " is ambiguous at level " + std::to_string(level));
            target = t;
          }
        }
        if (target < 0)
          throw ResolutionError("no edge of ordinal " + std::to_string(ordinal) +
                                " leaves the current vertex at level " + std::to_string(level));
      }
      x.prefix.edges.push_back(PathEdge{target, ordinal});
      cur = target;
    }
  }
  return x;
}

std::string format_pathspec(const PathSpec& x, const Diagram& d) {
  std::ostringstream out;
  out << "prefix=";
  for (int i = 0; i < x.prefix.length(); ++i) {
    if (i) out << ",";
    const PathEdge& e = x.prefix.edges[i];
    out << e.ordinal << "@" << d.at(i + 1, e.target).name;
  }
  out << ";suffix=";
  switch (x.suffix.kind) {
    case SuffixKind::AllMinimal:
      out << "min";
      break;
    case SuffixKind::AllMaximal:
      out << "max";
      break;
    case SuffixKind::ConstantOrdinal:
      out << "const:" << x.suffix.ordinals[0];
      break;
    case SuffixKind::PeriodicOrdinals: {
      out << "per:";
      for (size_t i = 0; i < x.suffix.ordinals.size(); ++i) {
        if (i) out << ",";
        out << x.suffix.ordinals[i];
      }
      break;
    }
    case SuffixKind::VertexTrack: {
      out << "track:col:";
      for (size_t i = 0; i < x.suffix.track.size(); ++i) {
        if (i) out << ",";
        out << x.suffix.track[i];
      }
      break;
    }
  }
  return out.str();
}

namespace {

// The edge of the given in-ordinal leaving `cur`, unique or error.
PathEdge unique_edge_with_ordinal(const Diagram& d, int level, int cur, int ordinal) {
  int target = -1;
  for (int t = 0; t < d.width(level); ++t) {
    const auto& in = d.at(level, t).in_edges;
    if (ordinal <= static_cast<int>(in.size()) && in[ordinal - 1] == cur) {
      if (target >= 0)
        throw ResolutionError("ordinal " + std::to_string(ordinal) + " is ambiguous at level " +
                              std::to_string(level));
      target = t;
    }
  }
  if (target < 0)
    throw ResolutionError("no edge of ordinal " + std::to_string(ordinal) + " at level " +
                          std::to_string(level));
  return PathEdge{target, ordinal};
}

// All edges minimal (resp. maximal) into their vertices: the next vertex is
// the one whose first (resp. last) in-edge leaves `cur`; must be unique.
PathEdge unique_extremal_edge(const Diagram& d, int level, int cur, Extremal which) {
  int target = -1;
  int ordinal = 0;
  for (int t = 0; t < d.width(level); ++t) {
    const auto& in = d.at(level, t).in_edges;
    int p = which == Extremal::Min ? 0 : static_cast<int>(in.size()) - 1;
    if (in[p] == cur) {
      if (target >= 0)
        throw ResolutionError(std::string(which == Extremal::Min ? "minimal" : "maximal") +
                              " extension is ambiguous at level " + std::to_string(level));
      target = t;
      ordinal = p + 1;
    }
  }
  if (target < 0)
    throw ResolutionError(std::string("no ") + (which == Extremal::Min ? "minimal" : "maximal") +
                          " extension at level " + std::to_string(level));
  return PathEdge{target, ordinal};
}

PathEdge track_edge(const Diagram& d, int level, int cur, int position) {
  if (position > d.width(level))
    throw ResolutionError("track position " + std::to_string(position) + " exceeds level " +
                          std::to_string(level) + " width");
  const auto& in = d.at(level, position - 1).in_edges;
  // Lowest-ordinal edge from cur into the tracked vertex; the deterministic
  // tie break for parallel edges.
  for (size_t p = 0; p < in.size(); ++p)
    if (in[p] == cur) return PathEdge{position - 1, static_cast<int>(p) + 1};
  throw ResolutionError("no edge into tracked vertex at level " + std::to_string(level));
}

}  // namespace

FinitePath resolve(const PathSpec& x, int n, const Diagram& d) {
  if (n < 0 || n > d.depth()) throw std::invalid_argument("resolution level out of range");
  if (n <= x.prefix.length()) return x.prefix.truncated(n);
  FinitePath p = x.prefix;
  p.edges.reserve(n);
  int cur = p.end_vertex();
  for (int level = p.length() + 1; level <= n; ++level) {
    int step = level - x.prefix.length() - 1;
    PathEdge e;
    switch (x.suffix.kind) {
      case SuffixKind::ConstantOrdinal:
        e = unique_edge_with_ordinal(d, level, cur, x.suffix.ordinals[0]);
        break;
      case SuffixKind::PeriodicOrdinals:
        e = unique_edge_with_ordinal(d, level, cur,
                                     x.suffix.ordinals[step % x.suffix.ordinals.size()]);
        break;
      case SuffixKind::AllMinimal:
        e = unique_extremal_edge(d, level, cur, Extremal::Min);
        break;
      case SuffixKind::AllMaximal:
        e = unique_extremal_edge(d, level, cur, Extremal::Max);
        break;
      case SuffixKind::VertexTrack:
        e = track_edge(d, level, cur, x.suffix.track[step % x.suffix.track.size()]);
        break;
    }
    p.edges.push_back(e);
    cur = e.target;
  }
  return p;
}

PathSpec spec_from_path(const FinitePath& p, SuffixRule suffix) {
  return PathSpec{p, suffix};
}

}  // namespace bvtk
