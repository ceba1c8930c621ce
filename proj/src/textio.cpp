#include "su2cert/textio.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace su2cert {

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

}  // namespace

std::optional<std::string> TextNode::get(const std::string& key) const {
  for (const auto& [k, v] : entries)
    if (k == key) return v;
  return std::nullopt;
}

std::string TextNode::require(const std::string& key) const {
  auto v = get(key);
  if (!v) throw ParseError("missing required field '" + key + "'");
  return *v;
}

std::vector<std::string> TextNode::get_all(const std::string& key) const {
  std::vector<std::string> out;
  for (const auto& [k, v] : entries)
    if (k == key) out.push_back(v);
  return out;
}

std::vector<const TextNode*> TextNode::blocks_named(const std::string& name) const {
  std::vector<const TextNode*> out;
  for (const auto& [n, b] : blocks)
    if (n == name) out.push_back(&b);
  return out;
}

void TextNode::reject_unknown(const std::vector<std::string>& allowed_keys,
                              const std::vector<std::string>& allowed_blocks,
                              const std::string& context) const {
  for (const auto& [k, v] : entries)
    if (std::find(allowed_keys.begin(), allowed_keys.end(), k) == allowed_keys.end())
      throw ParseError(context + ": unknown field '" + k + "'");
  for (const auto& [n, b] : blocks)
    if (std::find(allowed_blocks.begin(), allowed_blocks.end(), n) == allowed_blocks.end())
      throw ParseError(context + ": unknown block '" + n + "'");
}

TextNode parse_structured_text(std::istream& in) {
  std::vector<TextNode> stack(1);
  std::vector<std::string> names;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto fail = [&](const std::string& msg) -> void {
      throw ParseError("line " + std::to_string(lineno) + ": " + msg);
    };
    if (line.rfind("begin ", 0) == 0) {
      names.push_back(trim(line.substr(6)));
      if (names.back().empty()) fail("block name missing");
      stack.emplace_back();
      continue;
    }
    if (line.rfind("end", 0) == 0 && (line.size() == 3 || line[3] == ' ')) {
      if (names.empty()) fail("'end' without 'begin'");
      std::string name = trim(line.size() > 3 ? line.substr(4) : "");
      if (!name.empty() && name != names.back())
        fail("'end " + name + "' does not close 'begin " + names.back() + "'");
      TextNode done = std::move(stack.back());
      stack.pop_back();
      stack.back().blocks.emplace_back(names.back(), std::move(done));
      names.pop_back();
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail("empty key");
    stack.back().entries.emplace_back(key, value);
  }
  if (!names.empty()) throw ParseError("unterminated block '" + names.back() + "'");
  return std::move(stack.front());
}

TextNode parse_structured_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return parse_structured_text(in);
}

void check_schema(const TextNode& node, const std::string& kind) {
  if (node.entries.empty() || node.entries.front().first != "schema")
    throw ParseError("first field must be 'schema = " + kind + "/1'");
  const std::string& v = node.entries.front().second;
  if (v != kind + "/1")
    throw ParseError("unsupported schema '" + v + "' (expected '" + kind + "/1')");
}

std::string poly_to_text(const RatPoly& p) {
  std::ostringstream os;
  os << p.var() << ":";
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    os << " " << it->first << ":" << it->second;
  }
  return os.str();
}

RatPoly poly_from_text(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("polynomial: missing variable tag");
  std::string var = trim(text.substr(0, colon));
  if (var.empty()) throw ParseError("polynomial: empty variable tag");
  RatPoly out(var);
  std::istringstream is(text.substr(colon + 1));
  std::string tok;
  while (is >> tok) {
    auto c = tok.find(':');
    if (c == std::string::npos)
      throw ParseError("polynomial: expected 'exponent:coefficient', got '" + tok + "'");
    try {
      long e = std::stol(tok.substr(0, c));
      Rational coeff = Rational::from_string(tok.substr(c + 1));
      if (!coeff.is_zero()) out.add_term(e, coeff);
    } catch (const std::invalid_argument& ex) {
      throw ParseError("polynomial: cannot parse '" + tok + "'");
    }
  }
  return out;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

bool parse_bool(const std::string& s, const std::string& context) {
  if (s == "true" || s == "yes" || s == "1") return true;
  if (s == "false" || s == "no" || s == "0") return false;
  throw ParseError(context + ": expected a boolean, got '" + s + "'");
}

}  // namespace su2cert
