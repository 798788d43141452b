#include "recip/graph_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "recip/errors.hpp"

namespace recip {

namespace {

using nlohmann::json;

std::string colour_label(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return "#" + std::to_string(j.get<long long>());
  throw ParseError(0, where, "colour must be a string or an integer");
}

int int_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) throw ParseError(0, where + "." + key, "missing field");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) throw ParseError(0, where + "." + key, "must be an integer");
  return v.get<int>();
}

ColouredGraph parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, "json", e.what());
  }
  if (!doc.is_object()) throw ParseError(0, "json", "top level must be an object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array()) {
    throw ParseError(0, "vertices", "missing or not an array");
  }
  const json& vertices = doc["vertices"];
  const int n = static_cast<int>(vertices.size());
  std::vector<std::string> colours(static_cast<std::size_t>(n));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const std::string where = "vertices[" + std::to_string(k) + "]";
    const json& v = vertices[k];
    if (!v.is_object()) throw ParseError(0, where, "must be an object");
    const int id = int_field(v, "id", where);
    if (id < 1 || id > n) {
      throw ValidationError(ValidationKind::kVertexRange,
                            where + ": id " + std::to_string(id) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(id - 1)]) {
      throw ValidationError(ValidationKind::kVertexRange, where + ": vertex " + std::to_string(id) + " repeated");
    }
    seen[static_cast<std::size_t>(id - 1)] = true;
    if (!v.contains("colour")) {
      throw ValidationError(ValidationKind::kUncolouredVertex, "vertex " + std::to_string(id));
    }
    colours[static_cast<std::size_t>(id - 1)] = colour_label(v["colour"], where + ".colour");
  }
  std::vector<std::tuple<int, int, std::string>> edges;
  if (doc.contains("edges")) {
    const json& es = doc["edges"];
    if (!es.is_array()) throw ParseError(0, "edges", "must be an array");
    for (std::size_t k = 0; k < es.size(); ++k) {
      const std::string where = "edges[" + std::to_string(k) + "]";
      const json& e = es[k];
      if (!e.is_object()) throw ParseError(0, where, "must be an object");
      const int u = int_field(e, "u", where);
      const int v = int_field(e, "v", where);
      if (!e.contains("colour")) {
        throw ValidationError(ValidationKind::kUncolouredEdge,
                              "edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      }
      edges.emplace_back(u, v, colour_label(e["colour"], where + ".colour"));
    }
  }
  return ColouredGraph::from_labels(n, colours, edges);
}

int parse_int(const std::string& token, std::size_t line, const std::string& field) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, field, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw ParseError(line, field, "expected an integer, got '" + token + "'");
  return value;
}

ColouredGraph parse_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  int n = -1;
  int d = -1;
  std::vector<std::string> colours;
  std::vector<std::tuple<int, int, std::string>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (n < 0) {
      if (tok.size() != 2) throw ParseError(line_no, "header", "expected 'n d'");
      n = parse_int(tok[0], line_no, "n");
      d = parse_int(tok[1], line_no, "d");
      if (n < 1) throw ValidationError(ValidationKind::kVertexRange, "n must be positive");
      colours.assign(static_cast<std::size_t>(n), "");
      continue;
    }
    if (tok[0] == "v") {
      if (tok.size() != 3) throw ParseError(line_no, "vertex", "expected 'v <id> <colour>'");
      const int id = parse_int(tok[1], line_no, "vertex id");
      if (id < 1 || id > n) {
        throw ValidationError(ValidationKind::kVertexRange,
                              "line " + std::to_string(line_no) + ": vertex " + std::to_string(id));
      }
      auto& slot = colours[static_cast<std::size_t>(id - 1)];
      if (!slot.empty()) {
        throw ValidationError(ValidationKind::kVertexRange,
                              "line " + std::to_string(line_no) + ": vertex " + std::to_string(id) + " repeated");
      }
      slot = tok[2];
    } else if (tok[0] == "e") {
      if (tok.size() != 4) throw ParseError(line_no, "edge", "expected 'e <u> <v> <colour>'");
      edges.emplace_back(parse_int(tok[1], line_no, "edge u"), parse_int(tok[2], line_no, "edge v"), tok[3]);
    } else {
      throw ParseError(line_no, "record", "unknown record type '" + tok[0] + "'");
    }
  }
  if (n < 0) throw ParseError(0, "header", "missing 'n d' header");
  ColouredGraph g = ColouredGraph::from_labels(n, colours, edges);
  if (g.num_colours() != d) {
    throw ValidationError(ValidationKind::kColourCount,
                          "header declares d = " + std::to_string(d) + " but " +
                              std::to_string(g.num_colours()) + " colours are used");
  }
  return g;
}

}  // namespace

ColouredGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kAuto) {
    const auto first = text.find_first_not_of(" \t\r\n");
    format = (first != std::string_view::npos && text[first] == '{') ? GraphFormat::kJson : GraphFormat::kText;
  }
  return format == GraphFormat::kJson ? parse_json(text) : parse_text(text);
}

ColouredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  GraphFormat format = GraphFormat::kAuto;
  if (path.ends_with(".json")) format = GraphFormat::kJson;
  return parse_graph(text, format);
}

std::string to_json(const ColouredGraph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (int v = 1; v <= g.n(); ++v) {
    doc["vertices"].push_back({{"id", v}, {"colour", "c" + std::to_string(g.vertex_colour(v))}});
  }
  doc["edges"] = json::array();
  for (const auto& e : g.edges()) {
    doc["edges"].push_back({{"u", e.u}, {"v", e.v}, {"colour", "c" + std::to_string(e.colour)}});
  }
  return doc.dump();
}

std::string to_text(const ColouredGraph& g) {
  std::ostringstream out;
  out << g.n() << " " << g.num_colours() << "\n";
  for (int v = 1; v <= g.n(); ++v) out << "v " << v << " c" << g.vertex_colour(v) << "\n";
  for (const auto& e : g.edges()) out << "e " << e.u << " " << e.v << " c" << e.colour << "\n";
  return out.str();
}

}  // namespace recip
