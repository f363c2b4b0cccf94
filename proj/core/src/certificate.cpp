#include "symprove/certificate.hpp"

#include "symprove/error.hpp"

#include <json.hpp>

namespace symprove {

using json = nlohmann::ordered_json;

namespace {

std::string_view order2_name(OrderKind k) { return to_string(k); }

OrderKind parse_order2(const std::string& s) {
  if (s == "lex") {
    return OrderKind::lex;
  }
  if (s == "grevlex") {
    return OrderKind::grevlex;
  }
  throw Error("unknown stage-2 order '" + s + "'");
}

Stage1OrderChoice parse_order1(const std::string& s) {
  for (auto c : {Stage1OrderChoice::paper, Stage1OrderChoice::reversed, Stage1OrderChoice::grevlex}) {
    if (to_string(c) == s) {
      return c;
    }
  }
  throw Error("unknown stage-1 order '" + s + "'");
}

SystemKind parse_kind(const std::string& s) {
  if (s == to_string(SystemKind::deterministic)) {
    return SystemKind::deterministic;
  }
  if (s == to_string(SystemKind::stochastic)) {
    return SystemKind::stochastic;
  }
  throw Error("unknown system kind '" + s + "'");
}

Verdict parse_verdict(const std::string& s) {
  if (s == to_string(Verdict::symplectic_verified)) {
    return Verdict::symplectic_verified;
  }
  if (s == to_string(Verdict::not_reduced)) {
    return Verdict::not_reduced;
  }
  throw Error("unknown verdict '" + s + "'");
}

} // namespace

std::string render_certificate(const ProofCertificate& c) {
  json doc;
  doc["version"] = certificate_version;
  doc["system"] = {{"kind", to_string(c.kind)}, {"stages", c.stages}};
  doc["options"] = {{"order1", to_string(c.options.order1)},
                    {"order2", order2_name(c.options.order2)},
                    {"identify_mixed_partials", c.identify_mixed_partials},
                    {"cross_check", c.options.cross_check},
                    {"emit_gg", c.options.emit_gg},
                    {"max_pairs", c.options.max_pairs}};
  if (c.stage1) {
    const auto& s = *c.stage1;
    json j = {{"equations", s.equations},
              {"unknowns", s.unknowns},
              {"basis_size", s.basis_size},
              {"gg_numerator_terms", s.numerator_terms},
              {"gg_denominator_terms", s.denominator_terms},
              {"gg_digest", s.gg_digest},
              {"cross_check", s.cross_check}};
    if (s.gg_numerator) {
      j["gg_numerator"] = *s.gg_numerator;
    }
    if (s.gg_denominator) {
      j["gg_denominator"] = *s.gg_denominator;
    }
    doc["stage1"] = std::move(j);
  } else {
    doc["stage1"] = nullptr;
  }
  if (c.stage2) {
    const auto& s = *c.stage2;
    doc["stage2"] = {{"ideal_size", s.ideal_size},
                     {"basis_size", s.basis_size},
                     {"numerator_nf", s.numerator_nf},
                     {"denominator_nf", s.denominator_nf},
                     {"denominator_reduced_terms", s.denominator_reduced_terms},
                     {"denominator_reduced", s.denominator_reduced},
                     {"denominator_at_zero_step", s.denominator_at_zero_step}};
  } else {
    doc["stage2"] = nullptr;
  }
  doc["verdict"] = to_string(c.verdict);
  doc["note"] = c.note;
  doc["error"] = c.error ? json(*c.error) : json(nullptr);
  doc["timings_ms"] = {{"stage1", c.timings.stage1_ms},
                       {"cross_check", c.timings.cross_check_ms},
                       {"stage2", c.timings.stage2_ms}};
  doc["input_digest"] = c.input_digest;
  return doc.dump(2) + "\n";
}

ProofCertificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    if (!doc.contains("version") || doc.at("version").get<std::string>() != certificate_version) {
      throw Error("unsupported certificate version");
    }
    ProofCertificate c;
    const auto& sys = doc.at("system");
    c.kind = parse_kind(sys.at("kind").get<std::string>());
    c.stages = sys.at("stages").get<std::size_t>();
    const auto& o = doc.at("options");
    c.options.order1 = parse_order1(o.at("order1").get<std::string>());
    c.options.order2 = parse_order2(o.at("order2").get<std::string>());
    c.identify_mixed_partials = o.at("identify_mixed_partials").get<bool>();
    c.options.cross_check = o.at("cross_check").get<bool>();
    c.options.emit_gg = o.at("emit_gg").get<bool>();
    c.options.max_pairs = o.at("max_pairs").get<std::size_t>();
    if (const auto& j = doc.at("stage1"); !j.is_null()) {
      ProofCertificate::Stage1 s;
      s.equations = j.at("equations").get<std::size_t>();
      s.unknowns = j.at("unknowns").get<std::size_t>();
      s.basis_size = j.at("basis_size").get<std::size_t>();
      s.numerator_terms = j.at("gg_numerator_terms").get<std::size_t>();
      s.denominator_terms = j.at("gg_denominator_terms").get<std::size_t>();
      s.gg_digest = j.at("gg_digest").get<std::string>();
      s.cross_check = j.at("cross_check").get<std::string>();
      if (j.contains("gg_numerator")) {
        s.gg_numerator = j.at("gg_numerator").get<std::string>();
      }
      if (j.contains("gg_denominator")) {
        s.gg_denominator = j.at("gg_denominator").get<std::string>();
      }
      c.stage1 = std::move(s);
    }
    if (const auto& j = doc.at("stage2"); !j.is_null()) {
      ProofCertificate::Stage2 s;
      s.ideal_size = j.at("ideal_size").get<std::size_t>();
      s.basis_size = j.at("basis_size").get<std::size_t>();
      s.numerator_nf = j.at("numerator_nf").get<std::string>();
      s.denominator_nf = j.at("denominator_nf").get<std::string>();
      s.denominator_reduced_terms = j.at("denominator_reduced_terms").get<std::size_t>();
      s.denominator_reduced = j.at("denominator_reduced").get<std::string>();
      s.denominator_at_zero_step = j.at("denominator_at_zero_step").get<std::string>();
      c.stage2 = std::move(s);
    }
    c.verdict = parse_verdict(doc.at("verdict").get<std::string>());
    c.note = doc.at("note").get<std::string>();
    if (const auto& e = doc.at("error"); !e.is_null()) {
      c.error = e.get<std::string>();
    }
    const auto& t = doc.at("timings_ms");
    c.timings.stage1_ms = t.at("stage1").get<double>();
    c.timings.cross_check_ms = t.at("cross_check").get<double>();
    c.timings.stage2_ms = t.at("stage2").get<double>();
    c.input_digest = doc.at("input_digest").get<std::string>();
    return c;
  } catch (const json::exception& e) {
    throw Error(std::string("malformed certificate: ") + e.what());
  }
}

} // namespace symprove
