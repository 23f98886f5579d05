#include "dtk/json_io.hpp"

#include <fstream>
#include <sstream>

#include "dtk/errors.hpp"

namespace dtk {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Rational scalar_from_json(const json& value, ArithmeticMode mode, const std::string& field) {
  try {
    if (value.is_string()) return parse_rational(value.get<std::string>());
    if (value.is_number_integer()) {
      return value.is_number_unsigned() ? Rational(Integer(std::to_string(value.get<std::uint64_t>())))
                                        : Rational(Integer(std::to_string(value.get<std::int64_t>())));
    }
    if (value.is_number_float()) {
      if (mode == ArithmeticMode::Exact) {
        throw ParseError("malformed document: exact-mode field \"" + field +
                         "\" must be a string or an integer, not a float");
      }
      return rational_from_double(value.get<double>());
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError("malformed document: field \"" + field + "\": " + e.what());
  }
  throw ParseError("malformed document: field \"" + field + "\" is not a number");
}

ordered_json scalar_to_json(const Rational& value, ArithmeticMode mode) {
  if (mode == ArithmeticMode::Float) return value.get_d();
  return format_rational(value);
}

json parse_document(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed document: ") + e.what());
  }
}

}  // namespace

Instance load_instance(const std::string& text) {
  json doc = parse_document(text);
  if (!doc.is_object()) throw ParseError("malformed document: expected a JSON object");
  for (const char* key : {"mode", "points", "root", "delta"}) {
    if (!doc.contains(key)) {
      throw ParseError(std::string("malformed document: missing field \"") + key + "\"");
    }
  }
  if (!doc["mode"].is_string()) throw ParseError("malformed document: \"mode\" must be a string");
  ArithmeticMode mode;
  const std::string mode_text = doc["mode"].get<std::string>();
  if (mode_text == "float") {
    mode = ArithmeticMode::Float;
  } else if (mode_text == "exact") {
    mode = ArithmeticMode::Exact;
  } else {
    throw ParseError("malformed document: unknown mode \"" + mode_text + "\"");
  }
  if (!doc["points"].is_array() || doc["points"].empty()) {
    throw ParseError("malformed document: \"points\" must be a non-empty array");
  }
  std::vector<Point> points;
  for (const auto& p : doc["points"]) {
    if (!p.is_array() || p.size() != 2) {
      throw ParseError("malformed document: each point must be [x, y]");
    }
    points.push_back({scalar_from_json(p[0], mode, "points"), scalar_from_json(p[1], mode, "points")});
  }
  if (!doc["root"].is_number_integer() || doc["root"].get<std::int64_t>() < 0) {
    throw ParseError("malformed document: \"root\" must be a non-negative integer");
  }
  auto root = doc["root"].get<std::uint64_t>();
  if (root >= points.size()) {
    throw ParseError("root out of range: " + std::to_string(root) + " >= " +
                     std::to_string(points.size()) + " points");
  }
  Rational delta = scalar_from_json(doc["delta"], mode, "delta");
  std::optional<Rational> cost_bound;
  if (doc.contains("cost_bound") && !doc["cost_bound"].is_null()) {
    cost_bound = scalar_from_json(doc["cost_bound"], mode, "cost_bound");
  }
  try {
    return Instance(mode, std::move(points), root, std::move(delta), std::move(cost_bound));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

std::string save_instance(const Instance& instance) {
  ordered_json doc;
  doc["mode"] = to_string(instance.mode());
  doc["points"] = ordered_json::array();
  for (const Point& p : instance.points()) {
    doc["points"].push_back(
        {scalar_to_json(p.x, instance.mode()), scalar_to_json(p.y, instance.mode())});
  }
  doc["root"] = instance.root();
  doc["delta"] = scalar_to_json(instance.delta(), instance.mode());
  if (instance.cost_bound()) {
    doc["cost_bound"] = scalar_to_json(*instance.cost_bound(), instance.mode());
  }
  return doc.dump() + "\n";
}

Network load_network(const std::string& text, std::size_t n) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("malformed document: expected {\"edges\": [...]}");
  }
  std::vector<Edge> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() || !e[1].is_number_unsigned()) {
      throw ParseError("malformed document: each edge must be [i, j]");
    }
    edges.push_back({e[0].get<Vertex>(), e[1].get<Vertex>()});
  }
  try {
    return Network(n, std::move(edges));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

std::string save_network(const Network& network) {
  ordered_json doc;
  doc["edges"] = ordered_json::array();
  for (const Edge& e : network.edges()) doc["edges"].push_back({e.u, e.v});
  return doc.dump() + "\n";
}

Tree load_tree(const std::string& text, std::size_t n, Vertex root) {
  json doc = parse_document(text);
  if (!doc.is_object() || !doc.contains("parent") || !doc["parent"].is_object()) {
    throw ParseError("malformed document: expected {\"parent\": {...}}");
  }
  std::vector<Vertex> parent(n, kNoParent);
  for (const auto& [key, value] : doc["parent"].items()) {
    Vertex v;
    try {
      std::size_t used = 0;
      v = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError("malformed document: parent key \"" + key + "\" is not a vertex index");
    }
    if (v >= n) throw ParseError("tree vertex " + key + " out of range");
    if (v == root) throw ParseError("the root must not have a parent");
    if (!value.is_number_unsigned()) {
      throw ParseError("malformed document: parent of " + key + " must be a vertex index");
    }
    parent[v] = value.get<Vertex>();
  }
  try {
    return Tree(root, std::move(parent));
  } catch (const UsageError& e) {
    throw ParseError(e.what());
  }
}

std::string save_tree(const Tree& tree) {
  ordered_json doc;
  doc["parent"] = ordered_json::object();
  for (Vertex v = 0; v < tree.size(); ++v) {
    if (v != tree.root()) doc["parent"][std::to_string(v)] = tree.parent(v);
  }
  return doc.dump() + "\n";
}

ordered_json number_json(double value) { return value; }

ordered_json number_json(const ExactNum& value, unsigned bits) {
  RadicalSum exact = value.exact();
  if (auto q = exact.as_rational()) return format_rational(*q);
  auto [lo, hi] = exact.enclose(bits);
  ordered_json out;
  out["lo"] = format_rational(lo);
  out["hi"] = format_rational(hi);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << contents;
}

}  // namespace dtk
