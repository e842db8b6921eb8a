#include "sellns/fileio.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace sellns {

using nlohmann::json;

namespace {

json require_format(const std::string& text, const char* what) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FileFormatError(std::string(what) + ": not well-formed JSON: " + e.what());
  }
  if (!doc.is_object()) throw FileFormatError(std::string(what) + ": expected a JSON object");
  if (!doc.contains("format") || !doc["format"].is_number_integer() || doc["format"].get<int>() != 1)
    throw FileFormatError(std::string(what) + ": missing or unsupported \"format\" (expected 1)");
  return doc;
}

}  // namespace

Signature signature_from_text(const std::string& text) {
  json doc = require_format(text, "signature file");
  std::vector<std::string> diags;
  std::vector<std::string> labels;
  Relation pairs;
  std::map<std::string, std::set<Axiom>> features;
  SigMode mode = SigMode::Plain;

  if (doc.contains("labels") && doc["labels"].is_array()) {
    for (const auto& l : doc["labels"]) {
      if (l.is_string())
        labels.push_back(l.get<std::string>());
      else
        diags.push_back("labels: entries must be strings");
    }
  } else {
    diags.push_back("missing \"labels\" list");
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_array()) diags.push_back("\"order\" must be a list of 2-element lists");
    else
      for (const auto& pr : doc["order"]) {
        if (pr.is_array() && pr.size() == 2 && pr[0].is_string() && pr[1].is_string())
          pairs.emplace(pr[0].get<std::string>(), pr[1].get<std::string>());
        else
          diags.push_back("order: entries must be 2-element lists of labels");
      }
  }
  if (doc.contains("features")) {
    if (!doc["features"].is_object()) diags.push_back("\"features\" must map labels to axiom lists");
    else
      for (auto it = doc["features"].begin(); it != doc["features"].end(); ++it) {
        std::set<Axiom> fs;
        if (!it.value().is_array()) {
          diags.push_back("features." + it.key() + ": must be a list of axiom names");
          continue;
        }
        for (const auto& a : it.value()) {
          auto ax = a.is_string() ? axiom_from_name(a.get<std::string>()) : std::nullopt;
          if (!ax)
            diags.push_back("features." + it.key() + ": unknown axiom " + a.dump());
          else
            fs.insert(*ax);
        }
        features[it.key()] = std::move(fs);
      }
  }
  if (doc.contains("mode")) {
    auto m = doc["mode"].is_string() ? mode_from_name(doc["mode"].get<std::string>()) : std::nullopt;
    if (!m)
      diags.push_back("mode: expected plain | functorial | associative");
    else
      mode = *m;
  }
  if (!diags.empty()) throw FileFormatError("signature file has problems", diags);
  try {
    return Signature::make(std::move(labels), pairs, std::move(features), mode);
  } catch (const UnknownLabel& e) {
    throw FileFormatError(std::string("signature file has problems"), {e.what()});
  }
}

std::string signature_to_text(const Signature& sig) {
  json doc;
  doc["format"] = 1;
  doc["labels"] = sig.labels();
  json order = json::array();
  for (const auto& [a, b] : sig.generators()) order.push_back({a, b});
  doc["order"] = order;
  json features = json::object();
  for (const auto& l : sig.labels()) {
    json fs = json::array();
    for (Axiom a : all_axioms())
      if (sig.has(l, a)) fs.push_back(axiom_name(a));
    features[l] = fs;
  }
  doc["features"] = features;
  doc["mode"] = mode_name(sig.mode());
  return doc.dump(2) + "\n";
}

namespace {

json inst_to_json(const RuleInst& inst) {
  json j;
  j["rule"] = inst.rule;
  if (inst.comp != 0) j["comp"] = inst.comp;
  if (!inst.pos.empty()) j["position"] = path_text(inst.pos);
  if (inst.split) j["split"] = path_text(*inst.split);
  if (inst.idx >= 0) j["index"] = inst.idx;
  if (inst.idx2 >= 0) j["index2"] = inst.idx2;
  if (!inst.labels.empty()) j["labels"] = inst.labels;
  return j;
}

RuleInst inst_from_json(const json& j, std::vector<std::string>& diags) {
  RuleInst inst;
  if (!j.contains("rule") || !j["rule"].is_string()) {
    diags.push_back("proof node without a rule name");
    return inst;
  }
  inst.rule = j["rule"].get<std::string>();
  if (j.contains("comp")) inst.comp = j["comp"].get<int>();
  if (j.contains("position")) {
    auto p = j["position"].is_string() ? path_from_text(j["position"].get<std::string>()) : std::nullopt;
    if (!p)
      diags.push_back("bad position for rule " + inst.rule);
    else
      inst.pos = *p;
  }
  if (j.contains("split")) {
    auto p = j["split"].is_string() ? path_from_text(j["split"].get<std::string>()) : std::nullopt;
    if (!p)
      diags.push_back("bad split for rule " + inst.rule);
    else
      inst.split = *p;
  }
  if (j.contains("index")) inst.idx = j["index"].get<int>();
  if (j.contains("index2")) inst.idx2 = j["index2"].get<int>();
  if (j.contains("labels"))
    for (const auto& l : j["labels"])
      if (l.is_string()) inst.labels.push_back(l.get<std::string>());
  return inst;
}

json node_to_json(const CertNode& node) {
  json j = inst_to_json(node.inst);
  j["conclusion"] = node.conclusion;
  if (!node.premises.empty()) {
    json kids = json::array();
    for (const CertNode& p : node.premises) kids.push_back(node_to_json(p));
    j["premises"] = kids;
  }
  return j;
}

CertNode node_from_json(const json& j, std::vector<std::string>& diags) {
  CertNode node;
  if (!j.is_object()) {
    diags.push_back("proof nodes must be objects");
    return node;
  }
  node.inst = inst_from_json(j, diags);
  if (j.contains("conclusion") && j["conclusion"].is_string())
    node.conclusion = j["conclusion"].get<std::string>();
  else
    diags.push_back("proof node without a conclusion");
  if (j.contains("premises")) {
    if (!j["premises"].is_array())
      diags.push_back("premises must form a list");
    else
      for (const auto& kid : j["premises"]) node.premises.push_back(node_from_json(kid, diags));
  }
  return node;
}

}  // namespace

Certificate certificate_from_text(const std::string& text) {
  json doc = require_format(text, "certificate file");
  std::vector<std::string> diags;
  Certificate cert;
  if (!doc.contains("kind") || doc["kind"] != "certificate")
    diags.push_back("missing \"kind\": \"certificate\"");
  if (doc.contains("system") && doc["system"].is_string()) {
    auto s = system_from_name(doc["system"].get<std::string>());
    if (!s)
      diags.push_back("unknown system tag " + doc["system"].dump());
    else
      cert.system = *s;
  } else {
    diags.push_back("missing \"system\" tag");
  }
  if (doc.contains("signature_fingerprint") && doc["signature_fingerprint"].is_string())
    cert.sig_fingerprint = doc["signature_fingerprint"].get<std::string>();
  else
    diags.push_back("missing \"signature_fingerprint\"");
  if (doc.contains("proof"))
    cert.root = node_from_json(doc["proof"], diags);
  else
    diags.push_back("missing \"proof\" tree");
  if (!diags.empty()) throw FileFormatError("certificate file has problems", diags);
  return cert;
}

std::string certificate_to_text(const Certificate& cert) {
  json doc;
  doc["format"] = 1;
  doc["kind"] = "certificate";
  doc["system"] = system_name(cert.system);
  doc["signature_fingerprint"] = cert.sig_fingerprint;
  doc["proof"] = node_to_json(cert.root);
  return doc.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileFormatError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FileFormatError("cannot write " + path);
  out << content;
}

Signature load_signature_file(const std::string& path) { return signature_from_text(read_file(path)); }
Certificate load_certificate_file(const std::string& path) {
  return certificate_from_text(read_file(path));
}

}  // namespace sellns
