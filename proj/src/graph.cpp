#include "qcmine/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "json.hpp"

namespace qcmine {

namespace {

bool parse_i64(const char* first, const char* last, std::int64_t& out) {
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

std::string IngestSummary::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["m"] = m;
  j["self_loops_dropped"] = self_loops_dropped;
  j["duplicates_dropped"] = duplicates_dropped;
  j["d_max"] = d_max;
  if (d_min)
    j["d_min"] = *d_min;
  else
    j["d_min"] = nullptr;
  return j.dump();
}

Graph Graph::parse_edge_list(std::istream& in, const ParseOptions& opts, IngestSummary* summary) {
  std::unordered_map<std::int64_t, VertexId> intern;
  std::vector<std::int64_t> labels;
  std::vector<std::pair<VertexId, VertexId>> arcs;
  std::uint64_t self_loops = 0;
  std::uint64_t line_no = 0;
  std::uint64_t data_lines = 0;

  auto intern_id = [&](std::int64_t ext) -> VertexId {
    auto [it, inserted] = intern.try_emplace(ext, static_cast<VertexId>(labels.size()));
    if (inserted) labels.push_back(ext);
    return it->second;
  };

  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const char* p = line.data();
    const char* end = p + line.size();
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    if (p == end || *p == '#' || *p == '%') continue;

    std::int64_t tok[2];
    int ntok = 0;
    while (p < end && *p != '\r') {
      const char* q = p;
      while (q < end && *q != ' ' && *q != '\t' && *q != '\r') ++q;
      if (ntok >= 2)
        throw ParseError("expected two integer tokens, got more at line " + std::to_string(line_no),
                         line_no);
      if (!parse_i64(p, q, tok[ntok]))
        throw ParseError("non-integer token '" + std::string(p, q) + "' at line " +
                             std::to_string(line_no),
                         line_no);
      ++ntok;
      p = q;
      while (p < end && (*p == ' ' || *p == '\t')) ++p;
    }
    if (ntok != 2)
      throw ParseError("expected two integer tokens, got " + std::to_string(ntok) + " at line " +
                           std::to_string(line_no),
                       line_no);
    ++data_lines;

    const VertexId u = intern_id(tok[0]);
    const VertexId v = intern_id(tok[1]);
    if (u == v) {
      if (!opts.drop_self_loops)
        throw ParseError("self-loop at line " + std::to_string(line_no), line_no);
      ++self_loops;
      continue;
    }
    arcs.emplace_back(u, v);
  }
  if (data_lines == 0) throw ParseError("empty input: no edges found", 0);

  if (!opts.symmetrize) {
    // Strict mode: every edge must be listed in both orientations.
    std::vector<std::pair<VertexId, VertexId>> ordered(arcs);
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());
    for (const auto& [u, v] : ordered) {
      if (!std::binary_search(ordered.begin(), ordered.end(), std::make_pair(v, u)))
        throw ParseError("edge (" + std::to_string(labels[u]) + ", " + std::to_string(labels[v]) +
                             ") listed in only one direction with symmetrize disabled",
                         0);
    }
  }

  const std::uint64_t raw_arcs = arcs.size();
  for (auto& a : arcs)
    if (a.first > a.second) std::swap(a.first, a.second);
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());

  Graph g;
  g.build_from_pairs(arcs, std::move(labels));

  if (summary) {
    summary->n = g.vertex_count();
    summary->m = g.edge_count();
    summary->self_loops_dropped = self_loops;
    summary->duplicates_dropped = raw_arcs - arcs.size();
    summary->d_max = 0;
    summary->d_min.reset();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      const std::uint32_t d = g.degree(v);
      summary->d_max = std::max(summary->d_max, d);
      if (d > 1 && (!summary->d_min || d < *summary->d_min)) summary->d_min = d;
    }
  }
  return g;
}

Graph Graph::parse_edge_list_text(const std::string& text, const ParseOptions& opts,
                                  IngestSummary* summary) {
  std::istringstream in(text);
  return parse_edge_list(in, opts, summary);
}

Graph Graph::load_file(const std::string& path, const ParseOptions& opts, IngestSummary* summary) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse_edge_list(in, opts, summary);
}

Graph Graph::from_edges(VertexId n, std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  pairs.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw std::out_of_range("edge endpoint out of range");
    if (u == v) continue;
    pairs.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<std::int64_t> labels(n);
  for (VertexId v = 0; v < n; ++v) labels[v] = v;

  Graph g;
  g.build_from_pairs(pairs, std::move(labels));
  return g;
}

void Graph::build_from_pairs(std::vector<std::pair<VertexId, VertexId>>& edges,
                             std::vector<std::int64_t> labels) {
  n_ = static_cast<std::uint32_t>(labels.size());
  m_ = edges.size();
  labels_ = std::move(labels);

  std::vector<std::uint64_t> deg(n_, 0);
  for (const auto& [u, v] : edges) {
    ++deg[u];
    ++deg[v];
  }
  offsets_.assign(n_ + 1, 0);
  for (VertexId v = 0; v < n_; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  neighbors_.resize(2 * m_);

  std::vector<std::uint64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [u, v] : edges) {
    neighbors_[cursor[u]++] = v;
    neighbors_[cursor[v]++] = u;
  }
  for (VertexId v = 0; v < n_; ++v)
    std::sort(neighbors_.begin() + offsets_[v], neighbors_.begin() + offsets_[v + 1]);
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= n_ || v >= n_) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph Graph::induced_subgraph(std::span<const VertexId> s) const {
  std::vector<VertexId> verts(s.begin(), s.end());
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (VertexId v : verts)
    if (v >= n_) throw std::out_of_range("vertex id " + std::to_string(v) + " out of range");

  std::vector<std::uint32_t> remap(n_, UINT32_MAX);
  for (std::size_t i = 0; i < verts.size(); ++i) remap[verts[i]] = static_cast<std::uint32_t>(i);

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId v : verts) {
    for (VertexId u : neighbors(v)) {
      if (u > v && remap[u] != UINT32_MAX) edges.emplace_back(remap[v], remap[u]);
    }
  }
  std::vector<std::int64_t> labels(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) labels[i] = labels_[verts[i]];

  Graph g;
  std::sort(edges.begin(), edges.end());
  g.build_from_pairs(edges, std::move(labels));
  return g;
}

void Graph::write_edge_list(std::ostream& out) const {
  for (VertexId v = 0; v < n_; ++v)
    for (VertexId u : neighbors(v))
      if (u > v) out << labels_[v] << ' ' << labels_[u] << '\n';
}

DegreeStats degree_stats(const Graph& g) {
  DegreeStats st;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t d = g.degree(v);
    ++st.degree_histogram[d];
    st.d_max = std::max(st.d_max, d);
    if (d > 1 && (!st.d_min || d < *st.d_min)) st.d_min = d;
  }
  if (st.d_min) {
    for (const auto& [d, cnt] : st.degree_histogram)
      if (d >= *st.d_min) st.unique_degrees.push_back(d);
    st.missing_degree_count =
        (static_cast<std::uint64_t>(st.d_max) - *st.d_min + 1) - st.unique_degrees.size();
  }
  return st;
}

}  // namespace qcmine
