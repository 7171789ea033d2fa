#include "gcg/group_io.hpp"

#include <algorithm>
#include <json.hpp>

#include "gcg/group_ops.hpp"

namespace gcg {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based byte just past the offending character
  const std::size_t end = std::min(byte == 0 ? 0 : byte - 1, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

ImageArray read_images(const json& value, const std::string& what, std::size_t degree, bool one_based) {
  if (!value.is_array()) throw ValidationError(what + " is not an array");
  if (value.size() != degree) {
    throw ValidationError(what + " has " + std::to_string(value.size()) + " images, expected " +
                          std::to_string(degree));
  }
  ImageArray images;
  std::vector<bool> seen(degree, false);
  for (const json& v : value) {
    if (!v.is_number_integer()) throw ValidationError(what + " contains a non-integer image");
    std::int64_t point = v.get<std::int64_t>();
    if (one_based) --point;
    if (point < 0 || point >= static_cast<std::int64_t>(degree) || seen[point]) {
      throw ValidationError(what + " is not a permutation of the points");
    }
    seen[point] = true;
    images.push_back(static_cast<Point>(point));
  }
  return images;
}

std::vector<Permutation> to_permutations(const std::vector<ImageArray>& arrays) {
  std::vector<Permutation> out;
  for (const ImageArray& a : arrays) out.push_back(Permutation::from_images(a));
  return out;
}

}  // namespace

GroupDocument parse_group_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_and_column(text, e.byte);
    throw ParseError(e.what(), line, column);
  }
  if (!doc.is_object()) throw ValidationError("group document must be a json object");

  GroupDocument out;
  try {
    out.name = doc.at("name").get<std::string>();
    const auto degree = doc.at("degree").get<std::int64_t>();
    if (degree < 1) throw ValidationError("degree must be at least 1");
    out.degree = static_cast<std::size_t>(degree);
    const bool one_based = doc.value("one_based", false);
    const json& gens = doc.at("generators");
    if (!gens.is_array()) throw ValidationError("generators is not an array");
    for (std::size_t i = 0; i < gens.size(); ++i) {
      out.generators.push_back(read_images(gens[i], "generator " + std::to_string(i), out.degree, one_based));
    }
    if (doc.contains("normal_subgroups")) {
      const json& normals = doc.at("normal_subgroups");
      if (!normals.is_object()) throw ValidationError("normal_subgroups is not an object");
      for (const auto& [name, list] : normals.items()) {
        if (!list.is_array()) throw ValidationError("subgroup " + name + " is not a list of generators");
        std::vector<ImageArray> arrays;
        for (std::size_t i = 0; i < list.size(); ++i) {
          arrays.push_back(
              read_images(list[i], "subgroup " + name + " generator " + std::to_string(i), out.degree, one_based));
        }
        out.normal_subgroups.emplace_back(name, std::move(arrays));
      }
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("invalid group document: ") + e.what());
  }
  return out;
}

LoadedGroup load_group_document(const GroupDocument& doc, Limits limits) {
  LoadedGroup out{doc.name, PermGroup(doc.degree, to_permutations(doc.generators), limits), {}};
  for (const auto& [name, arrays] : doc.normal_subgroups) {
    PermGroup sub(doc.degree, to_permutations(arrays), limits);
    Subgroup s = [&] {
      try {
        return Subgroup(out.group, sub);
      } catch (const NotAMember&) {
        throw NotAMember("subgroup " + name + " has a generator outside the group");
      }
    }();
    require_normal(s, name);
    out.normal_subgroups.emplace_back(name, std::move(s));
  }
  return out;
}

LoadedGroup parse_group_file(std::string_view text, Limits limits) {
  return load_group_document(parse_group_document(text), limits);
}

GroupDocument to_document(const std::string& name, const PermGroup& g,
                          const std::vector<std::pair<std::string, Subgroup>>& normals) {
  GroupDocument doc;
  doc.name = name;
  doc.degree = g.degree();
  for (const Permutation& p : g.generators()) doc.generators.emplace_back(p.images().begin(), p.images().end());
  for (const auto& [sub_name, sub] : normals) {
    std::vector<ImageArray> arrays;
    for (const Permutation& p : sub.group().generators()) arrays.emplace_back(p.images().begin(), p.images().end());
    doc.normal_subgroups.emplace_back(sub_name, std::move(arrays));
  }
  std::sort(doc.normal_subgroups.begin(), doc.normal_subgroups.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return doc;
}

std::string serialize_group_document(const GroupDocument& doc) {
  const auto shift = [&](const ImageArray& a) {
    json arr = json::array();
    for (const Point p : a) arr.push_back(doc.one_based ? p + 1 : p);
    return arr;
  };
  json out;
  out["name"] = doc.name;
  out["degree"] = doc.degree;
  out["generators"] = json::array();
  for (const ImageArray& a : doc.generators) out["generators"].push_back(shift(a));
  json normals = json::object();
  for (const auto& [name, arrays] : doc.normal_subgroups) {
    json list = json::array();
    for (const ImageArray& a : arrays) list.push_back(shift(a));
    normals[name] = std::move(list);
  }
  out["normal_subgroups"] = std::move(normals);
  if (doc.one_based) out["one_based"] = true;
  return out.dump(2) + "\n";
}

}  // namespace gcg
