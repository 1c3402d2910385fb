#include "ualg/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <variant>

#include "json.hpp"
#include "ualg/error.hpp"

namespace ualg {

namespace {

struct GapNode {
  // either an integer or a list of nodes
  std::variant<int, std::vector<GapNode>> value;
  bool is_int() const { return std::holds_alternative<int>(value); }
  int as_int() const { return std::get<int>(value); }
  const std::vector<GapNode>& as_list() const {
    return std::get<std::vector<GapNode>>(value);
  }
};

struct GapParser {
  const std::string& text;
  size_t pos = 0;

  explicit GapParser(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  char peek() {
    skip_space();
    if (pos >= text.size()) {
      throw ParseError("unexpected end of input");
    }
    return text[pos];
  }

  GapNode parse_node() {
    char c = peek();
    if (c == '[') {
      ++pos;
      std::vector<GapNode> items;
      skip_space();
      if (peek() == ']') {
        ++pos;
        return GapNode{std::move(items)};
      }
      while (true) {
        items.push_back(parse_node());
        char d = peek();
        if (d == ',') {
          ++pos;
          continue;
        }
        if (d == ']') {
          ++pos;
          return GapNode{std::move(items)};
        }
        throw ParseError("expected ',' or ']'");
      }
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      if (c == '-') {
        ++pos;
      }
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
      if (pos == start || (text[start] == '-' && pos == start + 1)) {
        throw ParseError("malformed integer");
      }
      return GapNode{std::stoi(text.substr(start, pos - start))};
    }
    throw ParseError(std::string("unexpected character '") + c + "'");
  }
};

std::vector<int> flat_ints(const GapNode& node) {
  std::vector<int> out;
  for (const auto& item : node.as_list()) {
    if (!item.is_int()) {
      throw ParseError("expected a flat integer list");
    }
    out.push_back(item.as_int());
  }
  return out;
}

void append_list(std::string& out, const std::vector<int>& v) {
  out += "[ ";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += std::to_string(v[i]);
  }
  if (v.empty()) {
    out.pop_back();  // "[ " -> "["
  } else {
    out += ' ';
  }
  out += ']';
}

}  // namespace

Algebra parse_algebra_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  Algebra a;
  try {
    a.size = j.at("size").get<int>();
    if (j.contains("binary")) {
      for (const auto& table : j.at("binary")) {
        a.binary.push_back(table.get<BinaryTable>());
      }
    }
    if (j.contains("unary")) {
      for (const auto& table : j.at("unary")) {
        a.unary.push_back(table.get<UnaryTable>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed algebra object: ") + e.what());
  }
  validate_algebra(a);
  return a;
}

std::string emit_algebra_json(const Algebra& a) {
  nlohmann::ordered_json j;
  j["size"] = a.size;
  j["binary"] = a.binary;
  j["unary"] = a.unary;
  return j.dump() + "\n";
}

Algebra parse_algebra_gap(const std::string& text) {
  GapParser parser(text);
  GapNode top = parser.parse_node();
  parser.skip_space();
  if (parser.pos != text.size()) {
    throw ParseError("trailing characters after algebra");
  }
  if (top.is_int()) {
    throw ParseError("top level must be a list of operations");
  }
  Algebra a;
  int inferred = -1;
  for (const auto& op : top.as_list()) {
    if (op.is_int()) {
      throw ParseError("operations must be lists");
    }
    const auto& items = op.as_list();
    if (items.empty()) {
      throw ParseError("empty operation table");
    }
    if (items.front().is_int()) {
      a.unary.push_back(flat_ints(op));
      if (inferred < 0) {
        inferred = static_cast<int>(a.unary.back().size());
      }
    } else {
      BinaryTable table;
      for (const auto& row : items) {
        if (row.is_int()) {
          throw ParseError("mixed row types inside a binary table");
        }
        table.push_back(flat_ints(row));
      }
      a.binary.push_back(std::move(table));
      if (inferred < 0) {
        inferred = static_cast<int>(a.binary.back().size());
      }
    }
  }
  if (inferred < 0) {
    throw ParseError("cannot infer the carrier size without operations");
  }
  a.size = inferred;
  validate_algebra(a);
  return a;
}

std::string emit_algebra_gap(const Algebra& a) {
  std::string out = "[ ";
  bool first = true;
  for (const auto& u : a.unary) {
    if (!first) {
      out += ", ";
    }
    first = false;
    append_list(out, u);
  }
  for (const auto& f : a.binary) {
    if (!first) {
      out += ", ";
    }
    first = false;
    out += "[ ";
    for (size_t r = 0; r < f.size(); ++r) {
      if (r > 0) {
        out += ", ";
      }
      append_list(out, f[r]);
    }
    out += " ]";
  }
  out += first ? "]" : " ]";
  out += '\n';
  return out;
}

Algebra parse_algebra(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      continue;
    }
    if (c == '{') {
      return parse_algebra_json(text);
    }
    return parse_algebra_gap(text);
  }
  throw ParseError("empty input");
}

Algebra load_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError("cannot open file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_algebra(buffer.str());
}

std::string int_list_string(const std::vector<int>& v) {
  std::string out;
  append_list(out, v);
  return out;
}

std::string forest_string(const Partition& p) {
  return int_list_string(p.forest());
}

std::string blocks_string(const Partition& p) {
  std::string out = "[ ";
  auto blocks = p.blocks();
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    append_list(out, blocks[i]);
  }
  out += blocks.empty() ? "]" : " ]";
  return out;
}

std::string mapping_string(const Mapping& f) {
  return int_list_string(f.images);
}

}  // namespace ualg
