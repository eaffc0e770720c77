#include "rainbow/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

std::size_t to_count(const Token& t, std::size_t line) {
  std::size_t value = 0;
  const auto* end = t.text.data() + t.text.size();
  const auto [ptr, ec] = std::from_chars(t.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ParseError(line, t.column, "expected a non-negative integer, got '" +
                                         std::string(t.text) + "'");
  }
  return value;
}

std::size_t json_count(const Json& value, const char* what) {
  if (!value.is_number_integer() || value.get<long long>() < 0) {
    throw ParseError(0, 0, std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

std::vector<VertexPair> json_pairs(const Json& value, const char* what) {
  if (!value.is_array()) throw ParseError(0, 0, std::string(what) + " must be an array");
  std::vector<VertexPair> out;
  for (const auto& item : value) {
    if (!item.is_array() || item.size() != 2) {
      throw ParseError(0, 0, std::string(what) + " entries must be [u, v]");
    }
    out.push_back({static_cast<Vertex>(json_count(item[0], what)),
                   static_cast<Vertex>(json_count(item[1], what))});
  }
  return out;
}

Json pairs_to_json(std::span<const VertexPair> pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) out.push_back({p.first, p.second});
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      if (start < text.size()) lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw ParseError(1, 1, "missing header line 'n m'");
  const auto header = tokenize(lines[0]);
  if (header.size() != 2) {
    throw ParseError(1, header.size() > 2 ? header[2].column : lines[0].size() + 1,
                     "header must be 'n m'");
  }
  const std::size_t n = to_count(header[0], 1);
  const std::size_t m = to_count(header[1], 1);

  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t line_no = e + 2;
    if (line_no > lines.size()) {
      throw ParseError(line_no, 1, "expected " + std::to_string(m) + " edge lines, got " +
                                       std::to_string(e));
    }
    const auto toks = tokenize(lines[line_no - 1]);
    if (toks.size() != 2) {
      throw ParseError(line_no, toks.size() > 2 ? toks[2].column : 1, "edge line must be 'u v'");
    }
    const std::size_t u = to_count(toks[0], line_no);
    const std::size_t v = to_count(toks[1], line_no);
    if (u >= n) throw ParseError(line_no, toks[0].column, "vertex out of range");
    if (v >= n) throw ParseError(line_no, toks[1].column, "vertex out of range");
    if (u == v) throw ParseError(line_no, toks[0].column, "self-loop");
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  for (std::size_t l = m + 1; l < lines.size(); ++l) {
    const auto toks = tokenize(lines[l]);
    if (!toks.empty()) throw ParseError(l + 1, toks[0].column, "unexpected content after edges");
  }
  return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.first << ' ' << e.second << '\n';
  return out.str();
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < limit; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(line, column, e.what());
  }
}

InstanceData instance_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError(0, 0, "instance must be a JSON object");
  if (!doc.contains("n")) throw ParseError(0, 0, "instance lacks \"n\"");
  InstanceData inst;
  const std::size_t n = json_count(doc["n"], "\"n\"");
  const auto edges = doc.contains("edges") ? json_pairs(doc["edges"], "\"edges\"")
                                           : std::vector<VertexPair>{};
  inst.graph = Graph(n, edges);
  if (doc.contains("pairs")) {
    inst.pairs = PairSet(json_pairs(doc["pairs"], "\"pairs\""));
    inst.pairs->check_range(n);
  }
  if (doc.contains("k")) inst.k = json_count(doc["k"], "\"k\"");
  return inst;
}

InstanceData parse_instance_json(std::string_view text) { return instance_from_json(parse_json(text)); }

Json instance_to_json(const Graph& g, const PairSet* pairs, std::optional<std::size_t> k) {
  Json out;
  out["n"] = g.vertex_count();
  out["edges"] = pairs_to_json(g.edges());
  if (pairs) out["pairs"] = pairs_to_json(pairs->pairs());
  if (k) out["k"] = *k;
  return out;
}

std::string emit_instance_json(const InstanceData& inst) {
  return instance_to_json(inst.graph, inst.pairs ? &*inst.pairs : nullptr, inst.k).dump() + "\n";
}

InstanceData parse_instance(std::string_view text, Format format) {
  if (format == Format::Json) return parse_instance_json(text);
  return InstanceData{parse_edge_list(text), std::nullopt, std::nullopt};
}

EdgeColoring coloring_from_json(const Json& doc, const Graph& host) {
  if (!doc.is_object() || !doc.contains("k") || !doc.contains("colors")) {
    throw ParseError(0, 0, "coloring must be {\"k\": int, \"colors\": [[u,v,c],...]}");
  }
  const std::size_t k = json_count(doc["k"], "\"k\"");
  const auto& triples = doc["colors"];
  if (!triples.is_array()) throw ParseError(0, 0, "\"colors\" must be an array");
  std::vector<Color> colors(host.edge_count(), 0);
  std::vector<bool> seen(host.edge_count(), false);
  for (const auto& t : triples) {
    if (!t.is_array() || t.size() != 3) throw ParseError(0, 0, "color entries must be [u, v, c]");
    const auto u = static_cast<Vertex>(json_count(t[0], "vertex"));
    const auto v = static_cast<Vertex>(json_count(t[1], "vertex"));
    const auto id = host.edge_id(u, v);
    if (!id) {
      throw ParseError(0, 0, "(" + std::to_string(u) + "," + std::to_string(v) +
                                 ") is not an edge of the host graph");
    }
    if (seen[*id]) {
      throw ParseError(0, 0, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") colored twice");
    }
    seen[*id] = true;
    colors[*id] = static_cast<Color>(json_count(t[2], "color"));
  }
  const auto missing = std::find(seen.begin(), seen.end(), false);
  if (missing != seen.end()) {
    const auto& e = host.edge(static_cast<EdgeId>(missing - seen.begin()));
    throw ParseError(0, 0, "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) +
                               ") has no color");
  }
  return EdgeColoring(host, std::move(colors), k);
}

EdgeColoring parse_coloring_json(std::string_view text, const Graph& host) {
  return coloring_from_json(parse_json(text), host);
}

Json coloring_to_json(const Graph& host, const EdgeColoring& c) {
  c.check_host(host);
  Json out;
  out["k"] = c.color_count();
  Json triples = Json::array();
  for (EdgeId e = 0; e < host.edge_count(); ++e) {
    triples.push_back({host.edge(e).first, host.edge(e).second, c.color(e)});
  }
  out["colors"] = std::move(triples);
  return out;
}

std::string to_dot(const Graph& g, std::span<const Vertex> highlights,
                   std::span<const std::string> labels) {
  std::vector<bool> marked(g.vertex_count(), false);
  for (Vertex v : highlights) {
    g.check_vertex(v);
    marked[v] = true;
  }
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    std::vector<std::string> attrs;
    if (marked[v]) attrs.push_back("shape=doublecircle");
    if (!labels.empty()) attrs.push_back("label=\"" + labels[v] + "\"");
    out << "  " << v;
    if (!attrs.empty()) {
      out << " [";
      for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
      out << "]";
    }
    out << ";\n";
  }
  for (const auto& e : g.edges()) out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace rainbow
