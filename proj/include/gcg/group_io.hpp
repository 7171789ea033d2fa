#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcg/errors.hpp"
#include "gcg/perm_group.hpp"

namespace gcg {

/// Malformed json, reported with 1-based line and column.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : ValidationError("parse error at line " + std::to_string(line) + ", column " + std::to_string(column) +
                        ": " + what),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

using ImageArray = std::vector<Point>;

/// On-disk exchange format. Points are 0-based unless one_based is set, in which case
/// they are shifted down on parse (and the flag is cleared).
struct GroupDocument {
  std::string name;
  std::size_t degree = 1;
  std::vector<ImageArray> generators;
  std::vector<std::pair<std::string, std::vector<ImageArray>>> normal_subgroups;  // sorted by name
  bool one_based = false;
};

struct LoadedGroup {
  std::string name;
  PermGroup group;
  std::vector<std::pair<std::string, Subgroup>> normal_subgroups;
};

/// Syntax and bijectivity checks only. Throws ParseError or ValidationError.
GroupDocument parse_group_document(std::string_view text);
/// Builds the group and checks every named subgroup is contained and normal (NotNormal).
LoadedGroup load_group_document(const GroupDocument& doc, Limits limits = {});
/// parse_group_document followed by load_group_document.
LoadedGroup parse_group_file(std::string_view text, Limits limits = {});

GroupDocument to_document(const std::string& name, const PermGroup& g,
                          const std::vector<std::pair<std::string, Subgroup>>& normals = {});
std::string serialize_group_document(const GroupDocument& doc);

}  // namespace gcg
