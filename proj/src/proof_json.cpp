#include "hyperseq/proof_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hyperseq/parse.hpp"

namespace hyperseq {

namespace {

using nlohmann::json;

std::string base_name(BaseDiscipline b) {
  switch (b) {
    case BaseDiscipline::classical: return "classical";
    case BaseDiscipline::single_conclusion: return "lj";
    case BaseDiscipline::restricted_imp: return "ljprime";
  }
  return "?";
}

BaseDiscipline base_from_name(const std::string& s) {
  if (s == "classical") return BaseDiscipline::classical;
  if (s == "lj") return BaseDiscipline::single_conclusion;
  if (s == "ljprime") return BaseDiscipline::restricted_imp;
  throw ProofFormatError("unknown base discipline '" + s + "'");
}

json config_to_json(const CalculusConfig& cfg) {
  json j;
  j["base"] = base_name(cfg.base);
  j["quantifiers"] = cfg.quantifiers_enabled;
  if (!cfg.optional_rules.empty()) {
    json rules = json::array();
    for (RuleId r : cfg.optional_rules) rules.push_back(std::string(rule_name(r)));
    j["enable"] = std::move(rules);
  }
  if (cfg.width_cap) j["width_cap"] = *cfg.width_cap;
  return j;
}

CalculusConfig config_from_json(const json& j) {
  CalculusConfig cfg;
  cfg.base = base_from_name(j.at("base").get<std::string>());
  cfg.quantifiers_enabled = j.value("quantifiers", false);
  if (j.contains("enable"))
    for (const auto& name : j.at("enable")) {
      auto r = rule_from_name(name.get<std::string>());
      if (!r) throw ProofFormatError("unknown rule '" + name.get<std::string>() + "'");
      cfg.optional_rules.insert(*r);
    }
  if (j.contains("width_cap")) cfg.width_cap = j.at("width_cap").get<int>();
  return cfg;
}

json node_to_json(const ProofTree& p) {
  json j;
  j["rule"] = std::string(rule_name(p.rule.rule));
  j["conclusion"] = to_string(p.conclusion);
  json params = json::object();
  const RuleInstance& r = p.rule;
  if (r.component != 0) params["component"] = r.component;
  if (r.component2 >= 0) params["component2"] = r.component2;
  if (r.position != 0) params["position"] = r.position;
  if (r.split >= 0) params["split"] = r.split;
  if (r.split2 >= 0) params["split2"] = r.split2;
  if (r.cut_formula) params["cut_formula"] = to_string(*r.cut_formula);
  if (r.witness) params["witness"] = to_string(*r.witness);
  if (r.eigenvariable) params["eigenvariable"] = *r.eigenvariable;
  if (r.local_var) params["local_var"] = *r.local_var;
  if (r.global_var) params["global_var"] = *r.global_var;
  if (!params.empty()) j["params"] = std::move(params);
  if (!p.subproofs.empty()) {
    json prems = json::array();
    for (const auto& sub : p.subproofs) prems.push_back(node_to_json(sub));
    j["premises"] = std::move(prems);
  }
  return j;
}

ProofTree node_from_json(const json& j, SignatureTable& sig) {
  if (!j.is_object()) throw ProofFormatError("proof node must be an object");
  ProofTree p;
  auto rule = rule_from_name(j.at("rule").get<std::string>());
  if (!rule) throw ProofFormatError("unknown rule '" + j.at("rule").get<std::string>() + "'");
  p.rule.rule = *rule;
  p.conclusion = parse_hypersequent(j.at("conclusion").get<std::string>(), &sig);
  if (j.contains("params")) {
    const json& params = j.at("params");
    p.rule.component = params.value("component", 0);
    p.rule.component2 = params.value("component2", -1);
    p.rule.position = params.value("position", 0);
    p.rule.split = params.value("split", -1);
    p.rule.split2 = params.value("split2", -1);
    if (params.contains("cut_formula"))
      p.rule.cut_formula = parse_formula(params.at("cut_formula").get<std::string>(), &sig);
    if (params.contains("witness"))
      p.rule.witness = parse_term(params.at("witness").get<std::string>(), &sig);
    if (params.contains("eigenvariable"))
      p.rule.eigenvariable = params.at("eigenvariable").get<std::string>();
    if (params.contains("local_var")) p.rule.local_var = params.at("local_var").get<std::string>();
    if (params.contains("global_var"))
      p.rule.global_var = params.at("global_var").get<std::string>();
  }
  if (j.contains("premises"))
    for (const auto& sub : j.at("premises")) p.subproofs.push_back(node_from_json(sub, sig));
  return p;
}

}  // namespace

std::string bundle_to_json(const ProofBundle& b) {
  json j;
  if (!b.preset.empty())
    j["preset"] = b.preset;
  else
    j["calculus"] = config_to_json(b.config);
  j["proof"] = node_to_json(b.proof);
  return j.dump(2) + "\n";
}

ProofBundle bundle_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ProofFormatError(std::string("invalid JSON: ") + e.what());
  }
  ProofBundle b;
  try {
    if (j.contains("preset")) {
      b.preset = j.at("preset").get<std::string>();
      auto cfg = CalculusConfig::preset(b.preset);
      if (!cfg) throw ProofFormatError("unknown preset '" + b.preset + "'");
      b.config = *cfg;
    } else if (j.contains("calculus")) {
      b.config = config_from_json(j.at("calculus"));
    } else {
      throw ProofFormatError("proof file needs a 'preset' or 'calculus' entry");
    }
    SignatureTable sig;
    b.proof = node_from_json(j.at("proof"), sig);
  } catch (const json::exception& e) {
    throw ProofFormatError(std::string("malformed proof file: ") + e.what());
  }
  return b;
}

ProofBundle load_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProofFormatError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return bundle_from_json(ss.str());
}

void save_proof_file(const std::string& path, const ProofBundle& b) {
  std::ofstream out(path);
  if (!out) throw ProofFormatError("cannot write '" + path + "'");
  out << bundle_to_json(b);
}

}  // namespace hyperseq
