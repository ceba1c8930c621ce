#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "su2cert/laurent.hpp"

namespace su2cert {

/// Line-oriented structured text:
///   schema = <kind>/<version>     (required first entry)
///   key = value
///   begin <block>
///     ...
///   end <block>
/// '#' starts a comment; blank lines are ignored. Consumers reject unknown
/// keys, and the schema line is checked up front.
struct TextNode {
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<std::pair<std::string, TextNode>> blocks;

  std::optional<std::string> get(const std::string& key) const;
  std::string require(const std::string& key) const;
  std::vector<std::string> get_all(const std::string& key) const;
  std::vector<const TextNode*> blocks_named(const std::string& name) const;

  /// Throws if any entry key or block name is not in the allowlists.
  void reject_unknown(const std::vector<std::string>& allowed_keys,
                      const std::vector<std::string>& allowed_blocks,
                      const std::string& context) const;
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

TextNode parse_structured_text(std::istream& in);
TextNode parse_structured_text_file(const std::string& path);

/// Validates and strips the schema entry: requires "schema = <kind>/1".
void check_schema(const TextNode& node, const std::string& kind);

/// Polynomial serialization: "<var>: e:n/d e:n/d ..." with /1 omitted.
/// Exponent-coefficient triples, exponents descending on output.
std::string poly_to_text(const RatPoly& p);
RatPoly poly_from_text(const std::string& text);

/// Whitespace-splitting helper for list-valued fields.
std::vector<std::string> split_ws(const std::string& s);

bool parse_bool(const std::string& s, const std::string& context);

}  // namespace su2cert
