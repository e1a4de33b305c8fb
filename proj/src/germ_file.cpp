#include "lcsurf/germ_file.hpp"

#include "lcsurf/error.hpp"

#include <limits>

namespace lcsurf {

using nlohmann::json;

namespace {

void check_keys(const json& obj, std::string_view where,
                std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ParseError("unexpected key \"" + key + "\" in " + std::string(where));
  }
}

const json& require(const json& obj, const char* key, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError("missing key \"" + std::string(key) + "\" in " + std::string(where), {}, {},
                     std::string(key));
  return *it;
}

std::int64_t as_int(const json& v, std::string_view what) {
  if (v.is_number_integer() && !(v.is_number_unsigned() &&
                                 v.get<std::uint64_t>() >
                                     static_cast<std::uint64_t>(
                                         std::numeric_limits<std::int64_t>::max())))
    return v.get<std::int64_t>();
  throw ParseError("expected an integer for " + std::string(what) + ", got " + v.dump(), {}, {},
                   "integer");
}

std::size_t as_index(const json& v, std::string_view what) {
  auto i = as_int(v, what);
  if (i < 0) throw ValidationError(std::string(what) + " must be a non-negative index");
  return static_cast<std::size_t>(i);
}

Rat as_rat(const json& v, std::string_view what) {
  if (!v.is_string())
    throw ParseError("expected a rational string \"a/b\" for " + std::string(what) + ", got " +
                         v.dump(),
                     {}, {}, "string");
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const BadParameters& e) {
    throw ParseError(std::string(what) + ": " + e.what(), {}, {}, "rational");
  }
}

const json& as_array(const json& v, std::string_view what) {
  if (!v.is_array())
    throw ParseError("expected an array for " + std::string(what) + ", got " + v.dump(), {}, {},
                     "array");
  return v;
}

const json& as_pair(const json& v, std::string_view what) {
  if (!v.is_array() || v.size() != 2)
    throw ParseError("expected a two-element array for " + std::string(what) + ", got " +
                         v.dump(),
                     {}, {}, "[index, value]");
  return v;
}

CyclicQuotientGerm germ_from_json(const json& obj, std::string_view where) {
  if (!obj.is_object()) throw ParseError("expected an object for " + std::string(where));
  check_keys(obj, where, {"kind", "n", "q", "conductor", "side"});
  if (auto it = obj.find("kind"); it != obj.end() && *it != "cyclic_quotient")
    throw ParseError(std::string(where) + " must have kind \"cyclic_quotient\"", {}, {},
                     "\"cyclic_quotient\"");
  CyclicQuotientGerm g;
  g.n = as_int(require(obj, "n", where), "n");
  g.q = as_int(require(obj, "q", where), "q");
  if (auto it = obj.find("conductor"); it != obj.end()) g.conductor_coeff = as_rat(*it, "conductor");
  if (auto it = obj.find("side"); it != obj.end()) g.side_coeff = as_rat(*it, "side");
  g.validate();
  return g;
}

GraphLiteral graph_from_json(const json& obj) {
  check_keys(obj, "dual_graph", {"kind", "chain", "forks", "branches"});
  GraphLiteral lit;
  for (const auto& c : as_array(require(obj, "chain", "dual_graph"), "chain"))
    lit.chain.push_back(as_int(c, "chain entry"));
  if (auto it = obj.find("forks"); it != obj.end()) {
    for (const auto& f : as_array(*it, "forks")) {
      const auto& p = as_pair(f, "fork");
      lit.forks.emplace_back(as_index(p[0], "fork attach index"), as_int(p[1], "fork selfint"));
    }
  }
  if (auto it = obj.find("branches"); it != obj.end()) {
    for (const auto& b : as_array(*it, "branches")) {
      const auto& p = as_pair(b, "branch");
      lit.branches.emplace_back(as_index(p[0], "branch attach index"),
                                as_rat(p[1], "branch coefficient"));
    }
  }
  lit.to_graph();
  return lit;
}

GluedLiteral glued_from_json(const json& obj) {
  check_keys(obj, "glued", {"kind", "components", "glue_ok"});
  GluedLiteral lit;
  const auto& comps = as_array(require(obj, "components", "glued"), "components");
  if (comps.empty() || comps.size() > 2)
    throw ValidationError("a glued germ has 1 or 2 components, got " +
                          std::to_string(comps.size()));
  for (const auto& c : comps) lit.components.push_back(germ_from_json(c, "component"));
  if (auto it = obj.find("glue_ok"); it != obj.end()) {
    if (!it->is_boolean())
      throw ParseError("expected a boolean for glue_ok, got " + it->dump(), {}, {}, "boolean");
    lit.glue_ok = it->get<bool>();
  }
  return lit;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based byte at which the error was noticed.
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

std::string expected_from(const std::string& message) {
  auto pos = message.find("expected ");
  if (pos == std::string::npos) return {};
  return message.substr(pos + 9);
}

}  // namespace

ResolutionGraph GraphLiteral::to_graph() const {
  std::vector<std::int64_t> selfints = chain;
  std::vector<ResolutionGraph::Edge> edges;
  for (std::size_t i = 1; i < chain.size(); ++i) edges.emplace_back(i - 1, i);
  for (auto [attach, selfint] : forks) {
    if (attach < 1 || attach > selfints.size())
      throw ValidationError("fork attaches to vertex " + std::to_string(attach) + " but only " +
                            std::to_string(selfints.size()) + " vertices precede it");
    edges.emplace_back(attach - 1, selfints.size());
    selfints.push_back(selfint);
  }
  std::vector<BoundaryBranch> brs;
  for (const auto& [attach, coeff] : branches) {
    if (attach == 0) {
      if (!selfints.empty())
        throw ValidationError("branch index 0 (smooth point) used on a non-empty graph");
      brs.push_back({std::nullopt, coeff});
    } else {
      if (attach > selfints.size())
        throw ValidationError("branch attaches to missing vertex " + std::to_string(attach));
      brs.push_back({attach - 1, coeff});
    }
  }
  return ResolutionGraph(std::move(selfints), std::move(edges), std::move(brs));
}

std::string_view GermFile::kind() const {
  switch (payload.index()) {
    case 0: return "cyclic_quotient";
    case 1: return "dual_graph";
    default: return "glued";
  }
}

GermFile parse_germ_file(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, column] = line_column(text, e.byte);
    throw ParseError(e.what(), line, column, expected_from(e.what()));
  }
  if (!doc.is_object()) throw ParseError("germ file must be a JSON object", {}, {}, "object");
  const auto& kind = require(doc, "kind", "germ file");
  if (kind == "cyclic_quotient") return {germ_from_json(doc, "cyclic_quotient")};
  if (kind == "dual_graph") return {graph_from_json(doc)};
  if (kind == "glued") return {glued_from_json(doc)};
  throw ParseError("unknown kind " + kind.dump(), {}, {},
                   "\"cyclic_quotient\", \"dual_graph\" or \"glued\"");
}

json to_json(const CyclicQuotientGerm& g) {
  return json{{"kind", "cyclic_quotient"},
              {"n", g.n},
              {"q", g.q},
              {"conductor", g.conductor_coeff.to_string()},
              {"side", g.side_coeff.to_string()}};
}

json to_json(const GermFile& file) {
  if (auto* g = std::get_if<CyclicQuotientGerm>(&file.payload)) return to_json(*g);
  if (auto* lit = std::get_if<GraphLiteral>(&file.payload)) {
    json forks = json::array(), branches = json::array();
    for (auto [a, s] : lit->forks) forks.push_back(json::array({a, s}));
    for (const auto& [a, c] : lit->branches) branches.push_back(json::array({a, c.to_string()}));
    return json{{"kind", "dual_graph"}, {"chain", lit->chain}, {"forks", forks},
                {"branches", branches}};
  }
  const auto& glued = std::get<GluedLiteral>(file.payload);
  json comps = json::array();
  for (const auto& c : glued.components) comps.push_back(to_json(c));
  return json{{"kind", "glued"}, {"components", comps}, {"glue_ok", glued.glue_ok}};
}

std::string print_germ_file(const GermFile& file) { return to_json(file).dump(); }

}  // namespace lcsurf
