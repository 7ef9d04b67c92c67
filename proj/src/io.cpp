#include "bidding/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bidding {

namespace {

using nlohmann::json;

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_column(text, e.byte) + ": " + e.what());
  }
}

const json& require(const json& object, const char* key, const std::string& path) {
  if (!object.is_object() || !object.contains(key)) {
    throw ParseError(path + "." + key + ": missing field");
  }
  return object.at(key);
}

std::string as_string(const json& value, const std::string& path) {
  if (!value.is_string()) throw ParseError(path + ": expected a string");
  return value.get<std::string>();
}

ThresholdValue as_threshold(const json& value, const std::string& path) {
  try {
    if (value.is_number_unsigned()) return AdvValue(value.get<std::uint64_t>());
    return parse_threshold(as_string(value, path));
  } catch (const BudgetError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

const json& as_array(const json& value, const std::string& path) {
  if (!value.is_array()) throw ParseError(path + ": expected a list");
  return value;
}

}  // namespace

GameDescription parse_game_document(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("document: expected an object");
  if (doc.contains("schema") && doc["schema"] != 1) {
    throw ParseError("schema: unsupported version " + doc["schema"].dump());
  }
  GameDescription d;
  const json& k = require(doc, "k", "document");
  if (!k.is_number_unsigned()) throw ParseError("k: expected a non-negative integer");
  d.k = k.get<std::uint64_t>();

  const json& vertices = as_array(require(doc, "vertices", "document"), "vertices");
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string path = "vertices[" + std::to_string(i) + "]";
    VertexDecl v;
    v.id = as_string(require(vertices[i], "id", path), path + ".id");
    if (vertices[i].contains("priority")) {
      const json& p = vertices[i]["priority"];
      if (!p.is_number_integer()) throw ParseError(path + ".priority: expected an integer");
      v.priority = p.get<std::int64_t>();
    }
    d.vertices.push_back(std::move(v));
  }

  if (doc.contains("sinks")) {
    const json& sinks = as_array(doc["sinks"], "sinks");
    for (std::size_t i = 0; i < sinks.size(); ++i) {
      const std::string path = "sinks[" + std::to_string(i) + "]";
      SinkDecl s;
      s.id = as_string(require(sinks[i], "id", path), path + ".id");
      if (sinks[i].contains("frugal")) {
        s.frugal = as_threshold(sinks[i]["frugal"], path + ".frugal");
      }
      d.sinks.push_back(std::move(s));
    }
  }

  const json& edges = as_array(require(doc, "edges", "document"), "edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string path = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) {
      throw ParseError(path + ": expected [from, to]");
    }
    d.edges.emplace_back(as_string(edges[i][0], path + "[0]"),
                         as_string(edges[i][1], path + "[1]"));
  }

  if (doc.contains("objective")) {
    const json& o = doc["objective"];
    const std::string kind = as_string(require(o, "kind", "objective"), "objective.kind");
    auto parsed = parse_objective_kind(kind);
    if (!parsed) throw ParseError("objective.kind: unknown kind '" + kind + "'");
    Objective objective{*parsed, {}};
    if (o.contains("params")) {
      const json& params = o["params"];
      if (!params.is_object()) throw ParseError("objective.params: expected an object");
      if (params.contains("F")) {
        const json& f = as_array(params["F"], "objective.params.F");
        for (std::size_t i = 0; i < f.size(); ++i) {
          objective.accepting.push_back(
              as_string(f[i], "objective.params.F[" + std::to_string(i) + "]"));
        }
      }
    }
    d.objective = std::move(objective);
  }
  return d;
}

std::string render_game_document(const FrugalParityGame& game) {
  json doc = json::object();
  doc["schema"] = 1;
  doc["k"] = game.k;
  json vertices = json::array();
  json sinks = json::array();
  json edges = json::array();
  for (int v = 0; v < game.size(); ++v) {
    if (game.sink[v]) {
      sinks.push_back({{"id", game.ids[v]}, {"frugal", to_string(game.frugal[v])}});
    } else {
      vertices.push_back({{"id", game.ids[v]}, {"priority", game.priority[v]}});
      for (int w : game.succ[v]) edges.push_back({game.ids[v], game.ids[w]});
    }
  }
  doc["vertices"] = std::move(vertices);
  doc["sinks"] = std::move(sinks);
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error(path + ": cannot write");
  out << contents;
  if (!out) throw std::runtime_error(path + ": write failed");
}

FrugalParityGame load_game(const std::string& path) {
  const std::string text = read_file(path);
  try {
    return normalize_objective(parse_game_document(text));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void save_game(const FrugalParityGame& game, const std::string& path) {
  write_file(path, render_game_document(game));
}

ThresholdMap parse_threshold_document(const std::string& text,
                                      const FrugalParityGame& game) {
  json doc = parse_json(text);
  if (doc.is_object() && doc.contains("thresholds")) doc = doc["thresholds"];
  if (!doc.is_object()) throw ParseError("thresholds: expected an object");
  ThresholdMap t(game.size());
  std::vector<bool> seen(game.size(), false);
  for (const auto& [id, value] : doc.items()) {
    auto v = game.find(id);
    if (!v) throw ParseError("thresholds." + id + ": unknown vertex");
    t[*v] = as_threshold(value, "thresholds." + id);
    if (!t[*v].within(game.k)) {
      throw ParseError("thresholds." + id + ": exceeds " + to_string(max_budget(game.k)));
    }
    seen[*v] = true;
  }
  for (int v = 0; v < game.size(); ++v) {
    if (!seen[v]) throw ParseError("thresholds." + game.ids[v] + ": missing");
  }
  return t;
}

std::string render_threshold_document(const FrugalParityGame& game,
                                      const ThresholdMap& t) {
  json m = json::object();
  for (int v = 0; v < game.size(); ++v) m[game.ids[v]] = to_string(t[v]);
  json doc = {{"schema", 1}, {"thresholds", m}};
  return doc.dump(2) + "\n";
}

}  // namespace bidding
