#include "rainbow/io.hpp"

#include <algorithm>
#include <cctype>

namespace rainbow::io {

using nlohmann::json;

json coloring_to_json(const Coloring& c) {
  return json{{"n", c.size()},
              {"k", c.arity()},
              {"topology", std::string(to_string(c.topology()))},
              {"colors", c.letters()}};
}

Topology parse_topology(std::string_view name) {
  if (name == "interval") return Topology::Interval;
  if (name == "cyclic") return Topology::Cyclic;
  throw Error(ErrorCode::ParseError, "unknown topology '" + std::string(name) + "'");
}

Coloring coloring_from_json(const json& j) {
  try {
    const int n = j.at("n").get<int>();
    const int k = j.at("k").get<int>();
    const auto topology = parse_topology(j.at("topology").get<std::string>());
    const auto colors = j.at("colors").get<std::string>();
    if (static_cast<int>(colors.size()) != n) {
      throw Error(ErrorCode::ParseError, "\"n\" is " + std::to_string(n) +
                                             " but \"colors\" has " +
                                             std::to_string(colors.size()) + " letters");
    }
    return make_coloring(topology, k, colors);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

json witness_to_json(const APWitness& w) {
  std::string colors;
  for (auto c : w.colors) colors.push_back(c.letter());
  return json{{"start", w.spec.start}, {"d", w.spec.d}, {"elements", w.elements},
              {"colors", colors}};
}

namespace {

std::string_view trim(std::string_view s) {
  auto is_space = [](unsigned char ch) { return std::isspace(ch) != 0; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

Coloring read_coloring(std::string_view input, std::optional<Topology> topology,
                       std::optional<int> k) {
  const auto text = trim(input);
  if (text.empty()) throw Error(ErrorCode::ParseError, "no coloring on input");
  if (text.front() == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    Coloring c = coloring_from_json(doc);
    if (topology && *topology != c.topology()) {
      throw Error(ErrorCode::ParseError, "topology flag disagrees with the JSON document");
    }
    if (k && *k != c.arity()) {
      throw Error(ErrorCode::ParseError, "k flag disagrees with the JSON document");
    }
    return c;
  }
  if (!topology) throw Error(ErrorCode::ParseError, "text colorings need an explicit topology");
  int arity = k.value_or(0);
  if (!k) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      const char ch = text[i];
      if (ch < 'A' || ch > 'Z') {
        throw Error(ErrorCode::InvalidColorLetter, std::string("character '") + ch +
                                                       "' at position " + std::to_string(i + 1) +
                                                       " is not an uppercase color letter");
      }
      arity = std::max(arity, ch - 'A' + 1);
    }
  }
  return make_coloring(*topology, arity, text);
}

}  // namespace rainbow::io
