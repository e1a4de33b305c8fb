#include "lcsurf/report.hpp"

#include "lcsurf/error.hpp"

#include <limits>

namespace lcsurf::report {

namespace {

json rats(const std::vector<Rat>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json vertices(const std::vector<VertexId>& v) {
  json out = json::array();
  for (auto x : v) out.push_back(x + 1);
  return out;
}

json graph_json(const ResolutionGraph& g) {
  json edges = json::array(), branches = json::array();
  for (auto [a, b] : g.edges()) edges.push_back(json::array({a + 1, b + 1}));
  for (const auto& br : g.branches())
    branches.push_back(json::array({br.attach ? *br.attach + 1 : 0, br.coeff.to_string()}));
  return json{{"selfints", g.selfints()}, {"edges", edges}, {"branches", branches}};
}

struct GraphFacts {
  bool contractible = false;
  std::optional<GraphDivisor> solved;
  std::optional<LcClass> lc;
};

GraphFacts analyse(const ResolutionGraph& g) {
  GraphFacts f;
  f.contractible = is_contractible(g);
  if (!f.contractible) return f;
  f.solved = boundary_coefficients(g);
  f.lc = log_canonical_class(g);
  return f;
}

void require_contractible(const ResolutionGraph& g) {
  if (!is_contractible(g))
    throw NotApplicable("intersection matrix is not negative definite");
}

// Graph-level fields shared by `discrepancy` and `report`.
void add_graph_section(json& j, const ResolutionGraph& g) {
  auto facts = analyse(g);
  j["graph"] = graph_json(g);
  j["intersection_matrix"] = intersection_matrix(g);
  j["contractible"] = facts.contractible;
  if (!facts.contractible) return;
  j["coefficients"] = rats(facts.solved->coeffs);
  j["discrepancies"] = rats(facts.solved->discrepancies());
  j["lc_class"] = std::string(to_string(*facts.lc));
  if (*facts.lc != LcClass::NOT_LC) j["cartier_index"] = to_json(cartier_index(g));
}

bool has_reduced_branch(const ResolutionGraph& g) {
  for (const auto& br : g.branches())
    if (br.coeff == Rat(1)) return true;
  return false;
}

std::optional<GermClass> try_classify(const ResolutionGraph& g) {
  if (!is_contractible(g) || !has_reduced_branch(g)) return std::nullopt;
  auto lc = log_canonical_class(g);
  if (lc != LcClass::PLT && lc != LcClass::LC_CENTER) return std::nullopt;
  return classify_lc_germ(g);
}

json residue_table(const CyclicQuotientGerm& germ, std::int64_t m_max) {
  json rows = json::array();
  for (std::int64_t m = 1; m <= m_max; ++m) rows.push_back(to_json(single_branch_report(m, germ)));
  return rows;
}

bool all_surjective(const json& rows) {
  for (const auto& r : rows)
    if (!r["surjective"].get<bool>()) return false;
  return true;
}

json modification(const ResolutionGraph& g, const GermClass& cls) {
  if (cls.tag == GermTag::PLT_CHAIN) {
    if (cls.spine.empty()) return nullptr;
    std::vector<std::int64_t> chain;
    for (auto v : cls.spine) chain.push_back(g.selfint(v));
    auto [n, q] = hj_contract(chain);
    (void)q;
    // gamma = d/n, so d = n * gamma.
    Rat d = Rat(n) * *cls.gamma;
    auto mod = plt_modification(n, d);
    return json{{"kind", "plt"},
                {"extracted", vertices({cls.spine.front()})},
                {"n", n},
                {"d", d.to_string()},
                {"discrepancy", mod.discrepancy.to_string()},
                {"assigned_coeff", mod.assigned_coeff.to_string()}};
  }
  if (cls.tag == GermTag::UNCLASSIFIED) return nullptr;
  // slc modification: extract every chain curve with coefficient 1, keep the
  // (-2)-prongs (discrepancy -1/2), then lower the coefficients by a small
  // anti-ample exceptional divisor.
  return json{{"kind", "slc"},
              {"extracted", vertices(cls.spine)},
              {"extracted_coeff", "1"},
              {"kept", vertices(cls.prong_leaves)},
              {"kept_discrepancy", "-1/2"},
              {"perturbed", true}};
}

json with_input(const std::string& command, const json& input) {
  return json{{"command", command}, {"input", input}};
}

ResolutionGraph graph_of(const GermFile& file) {
  if (auto* g = std::get_if<CyclicQuotientGerm>(&file.payload)) return resolution_graph(*g);
  if (auto* lit = std::get_if<GraphLiteral>(&file.payload)) return lit->to_graph();
  throw NotApplicable("a glued germ has no single dual graph");
}

std::optional<CyclicQuotientGerm> germ_of(const GermFile& file) {
  if (auto* g = std::get_if<CyclicQuotientGerm>(&file.payload)) return *g;
  auto graph = graph_of(file);
  auto cls = try_classify(graph);
  if (!cls) return std::nullopt;
  return as_cyclic_germ(graph, *cls);
}

json glued_restriction_rows(const GluedLiteral& glued, std::int64_t m_max) {
  const auto& a = glued.components[0];
  const auto& b = glued.components[1];
  const Rat one(1);
  json rows = json::array();
  for (std::int64_t m = 1; m <= m_max; ++m) {
    Rat ca = glued_restriction_coeff(m, a.n, one - a.side_coeff);
    Rat cb = glued_restriction_coeff(m, b.n, one - b.side_coeff);
    rows.push_back(json{{"m", m},
                        {"coeffs", json::array({ca.to_string(), cb.to_string()})},
                        {"mcartier", glued_mcartier(m, a, b)}});
  }
  return rows;
}

bool restriction_applies(const GluedLiteral& glued) {
  if (glued.components.size() != 2) return false;
  for (const auto& c : glued.components)
    if (c.q != 1 || c.conductor_coeff != Rat(1) || c.side_coeff <= Rat(0) ||
        c.side_coeff >= Rat(1))
      return false;
  return check_slc_glue(glued.components[0], glued.components[1]);
}

json glue_section(const GluedLiteral& glued, std::int64_t m_max) {
  json j;
  json diffs = json::array();
  for (const auto& c : glued.components) diffs.push_back(different_coeff(c).to_string());
  j["differents"] = diffs;
  bool slc = glued.components.size() == 1 ||
             check_slc_glue(glued.components[0], glued.components[1]);
  j["slc"] = slc;
  json flags = json::array();
  if (slc && glued.glue_ok) {
    auto nn = classify_nonnormal(glued.components, glued.glue_ok);
    for (const auto& f : nn.flags) flags.push_back(f);
    j["classification"] = to_json(nn);
  }
  if (slc && restriction_applies(glued)) {
    j["glued_restriction"] = glued_restriction_rows(glued, m_max);
    flags.push_back("extrapolated");
  }
  j["flags"] = flags;
  return j;
}

json graph_report(const ResolutionGraph& g, std::optional<CyclicQuotientGerm> germ,
                  std::int64_t m_max) {
  json j;
  add_graph_section(j, g);
  json flags = json::array();
  bool plt_chain = false;
  if (auto cls = try_classify(g)) {
    j["classification"] = to_json(*cls);
    j["taxonomy_case"] = std::string(taxonomy_case(cls->tag));
    if (!germ) germ = as_cyclic_germ(g, *cls);
    j["modification"] = modification(g, *cls);
    plt_chain = cls->tag == GermTag::PLT_CHAIN;
  }
  if (germ && plt_chain && germ->conductor_coeff == Rat(1)) {
    j["gamma"] = germ->gamma().to_string();
    j["different"] = different_coeff(*germ).to_string();
    j["residue_table"] = residue_table(*germ, m_max);
  }
  j["flags"] = flags;
  return j;
}

json component_report(const CyclicQuotientGerm& germ, std::int64_t m_max) {
  json j = graph_report(resolution_graph(germ), germ, m_max);
  j["germ"] = to_json(germ);
  return j;
}

}  // namespace

json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return v.convert_to<std::int64_t>();
  return v.str();
}

json to_json(const GermClass& c) {
  json j{{"tag", to_string(c.tag)},
         {"cartier_index", to_json(c.cartier_index)},
         {"taxonomy_case", taxonomy_case(c.tag)}};
  if (c.gamma) j["gamma"] = c.gamma->to_string();
  if (!c.violations.empty()) j["violations"] = c.violations;
  return j;
}

json to_json(const NonNormalGerm& g) {
  json comps = json::array();
  for (const auto& c : g.component_classes) comps.push_back(to_json(c));
  json j{{"trichotomy", to_string(g.trichotomy)}, {"components", comps}, {"flags", g.flags}};
  j["class_group"] = g.class_group ? json(to_string(*g.class_group)) : json(nullptr);
  if (g.cartier_index) j["cartier_index"] = to_json(*g.cartier_index);
  if (g.delta_generator) j["delta_generator"] = g.delta_generator->to_string();
  return j;
}

json to_json(const ResidueReport& r) {
  return json{{"m", r.m},
              {"source_exponent", to_json(r.source_exponent)},
              {"target_exponent", to_json(r.target_exponent)},
              {"surjective", r.surjective},
              {"deficit", to_json(r.deficit)}};
}

json to_json(const CoeffCheck& c) {
  return json{{"c", c.c.to_string()},
              {"m", c.m},
              {"standard", c.standard},
              {"hypothesis_ok", c.hypothesis_ok},
              {"bracket_ok", c.bracket_ok}};
}

std::optional<CyclicQuotientGerm> as_cyclic_germ(const ResolutionGraph& g, const GermClass& cls) {
  if (cls.tag != GermTag::PLT_CHAIN) return std::nullopt;
  CyclicQuotientGerm germ;
  bool conductor_seen = false;
  for (const auto& br : g.branches()) {
    if (br.coeff == Rat(1) && !conductor_seen)
      conductor_seen = true;
    else
      germ.side_coeff = br.coeff;
  }
  if (!g.empty()) {
    std::vector<std::int64_t> chain;
    for (auto v : cls.spine) chain.push_back(g.selfint(v));
    auto [n, q] = hj_contract(chain);
    germ.n = n;
    germ.q = q;
  }
  return germ;
}

json classify(const GermFile& file) {
  json j = with_input("classify", to_json(file));
  if (auto* glued = std::get_if<GluedLiteral>(&file.payload)) {
    j.update(to_json(classify_nonnormal(glued->components, glued->glue_ok)));
    return j;
  }
  auto g = graph_of(file);
  require_contractible(g);
  j.update(to_json(classify_lc_germ(g)));
  j["lc_class"] = to_string(log_canonical_class(g));
  return j;
}

json discrepancy(const GermFile& file) {
  json j = with_input("discrepancy", to_json(file));
  if (auto* glued = std::get_if<GluedLiteral>(&file.payload)) {
    json comps = json::array();
    for (const auto& c : glued->components) {
      json cj;
      add_graph_section(cj, resolution_graph(c));
      comps.push_back(cj);
    }
    j["components"] = comps;
    return j;
  }
  add_graph_section(j, graph_of(file));
  return j;
}

json residue(const GermFile& file, std::int64_t m_max) {
  if (m_max < 1) throw BadParameters("--m-max must be >= 1");
  json j = with_input("residue", to_json(file));
  auto section = [&](const CyclicQuotientGerm& germ) {
    json rows = residue_table(germ, m_max);
    return json{{"gamma", germ.gamma().to_string()},
                {"different", different_coeff(germ).to_string()},
                {"all_surjective", all_surjective(rows)},
                {"residue_table", rows}};
  };
  if (auto* glued = std::get_if<GluedLiteral>(&file.payload)) {
    json comps = json::array();
    for (const auto& c : glued->components) comps.push_back(section(c));
    j["components"] = comps;
    return j;
  }
  auto germ = germ_of(file);
  if (!germ) throw NotApplicable("residue table needs a plt chain germ");
  j.update(section(*germ));
  return j;
}

json glue(const GermFile& file, std::int64_t m_max) {
  if (m_max < 1) throw BadParameters("--m-max must be >= 1");
  auto* glued = std::get_if<GluedLiteral>(&file.payload);
  if (!glued) throw NotApplicable("glue needs a germ file of kind \"glued\"");
  json j = with_input("glue", to_json(file));
  j.update(glue_section(*glued, m_max));
  return j;
}

json failure_m(std::span<const Rat> coeffs) {
  json input{{"coeffs", rats({coeffs.begin(), coeffs.end()})}};
  json j = with_input("failure-m", input);
  std::int64_t m = find_failure_m(coeffs);
  Rat total;
  for (const auto& c : coeffs) total += c;
  j["m"] = m;
  j["bound"] = to_json(total.denominator());
  j["deficit"] = to_json(multibranch_deficit(m, coeffs));
  return j;
}

json stdcoeff(const Rat& c, std::int64_t m) {
  json j = with_input("stdcoeff", json{{"c", c.to_string()}, {"m", m}});
  j.update(to_json(check_coefficient(c, m)));
  return j;
}

json full(const GermFile& file, std::int64_t m_max) {
  if (m_max < 1) throw BadParameters("--m-max must be >= 1");
  json j = with_input("report", to_json(file));
  j["kind"] = file.kind();
  if (auto* glued = std::get_if<GluedLiteral>(&file.payload)) {
    json comps = json::array();
    for (const auto& c : glued->components) comps.push_back(component_report(c, m_max));
    j["components"] = comps;
    j.update(glue_section(*glued, m_max));
    return j;
  }
  std::optional<CyclicQuotientGerm> germ;
  if (auto* g = std::get_if<CyclicQuotientGerm>(&file.payload)) germ = *g;
  j.update(graph_report(graph_of(file), germ, m_max));
  return j;
}

}  // namespace lcsurf::report
