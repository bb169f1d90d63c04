#include "doily/jsonio.hpp"

#include <algorithm>

#include <json.hpp>

namespace doily {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json certificate_object(const DoilyCertificate* cert) {
  ordered_json j;
  j["found"] = cert != nullptr;
  if (cert) {
    j["vertices"] = cert->vertex_list();
    j["cycle"] = cert->cycle;
    ordered_json tufts = ordered_json::array();
    for (int i = 0; i < 3; ++i) {
      ordered_json t;
      t["tuft"] = cert->tufts[static_cast<size_t>(i)];
      t["attach"] = cert->attach[static_cast<size_t>(i)];
      tufts.push_back(t);
    }
    j["tufts"] = tufts;
  }
  return j;
}

}  // namespace

std::string certificate_json(const DoilyCertificate* cert) {
  return certificate_object(cert).dump(2) + "\n";
}

std::string detector_json(const DetectorOutcome& outcome) {
  ordered_json j = certificate_object(outcome.certificate ? &*outcome.certificate : nullptr);
  j["step"] = step_name(outcome.step);
  ordered_json s;
  s["triples"] = outcome.stats.stream.triples;
  s["tuples_passed"] = outcome.stats.stream.tuples_passed;
  s["tuples_dead"] = outcome.stats.stream.tuples_dead;
  s["pairs_emitted"] = outcome.stats.stream.pairs_emitted;
  s["vertices_deleted"] = outcome.stats.stream.vertices_deleted;
  s["candidates_tried"] = outcome.stats.candidates_tried;
  s["bfs_calls"] = outcome.stats.bfs_calls;
  j["stats"] = s;
  return j.dump(2) + "\n";
}

std::string oracle_json(const OracleReport& report) {
  ordered_json j;
  j["exists"] = report.exists;
  j["min_size"] = report.min_size ? ordered_json(*report.min_size) : ordered_json(nullptr);
  if (report.min_doilies) {
    j["count"] = report.min_doilies->size();
    ordered_json list = ordered_json::array();
    for (const DoilyCertificate& cert : *report.min_doilies)
      list.push_back(certificate_object(&cert));
    j["min_doilies"] = list;
  }
  return j.dump(2) + "\n";
}

std::string profile_json(const AttachmentProfile& profile) {
  ordered_json j;
  j["vertex"] = profile.v;
  switch (profile.cls) {
    case VertexClass::minor: j["class"] = "minor"; break;
    case VertexClass::major: j["class"] = "major"; break;
    case VertexClass::neither: j["class"] = "neither"; break;
  }
  j["in_k"] = profile.in_k;
  ordered_json xs = ordered_json::array(), ys = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    const auto& x = profile.x[static_cast<size_t>(i)];
    const auto& y = profile.y[static_cast<size_t>(i)];
    xs.push_back(x ? ordered_json(*x) : ordered_json(nullptr));
    ys.push_back(y ? ordered_json(*y) : ordered_json(nullptr));
  }
  j["x"] = xs;
  j["y"] = ys;
  return j.dump(2) + "\n";
}

DoilyCertificate certificate_from_json(const std::string& text, const Graph& g) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
  if (!j.value("found", false)) throw std::invalid_argument("certificate JSON: found is not true");
  try {
    std::vector<Vertex> cycle = j.at("cycle").get<std::vector<Vertex>>();
    std::array<Vertex, 3> tufts{};
    const auto& tl = j.at("tufts");
    if (!tl.is_array() || tl.size() != 3)
      throw std::invalid_argument("certificate JSON: tufts must be three objects");
    for (size_t i = 0; i < 3; ++i) tufts[i] = tl[i].at("tuft").get<Vertex>();
    return make_certificate(g, cycle, tufts);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
  }
}

std::string relation_json(const PairRelation& relation) {
  ordered_json j;
  j["u"] = relation.u;
  j["v"] = relation.v;
  ordered_json rels = ordered_json::array(), wit = ordered_json::array();
  for (int i = 0; i < 3; ++i) {
    switch (relation.at[static_cast<size_t>(i)]) {
      case Relation::disagree: rels.push_back("disagree"); break;
      case Relation::tie: rels.push_back("tie"); break;
      case Relation::u_beats_v: rels.push_back("u_beats_v"); break;
      case Relation::v_beats_u: rels.push_back("v_beats_u"); break;
    }
    const auto& w = relation.tie_witness[static_cast<size_t>(i)];
    wit.push_back(w ? ordered_json(*w) : ordered_json(nullptr));
  }
  j["relations"] = rels;
  j["tie_witness"] = wit;
  return j.dump(2) + "\n";
}

std::string probe_report_json(const Graph& g, const DoilyCertificate& k) {
  std::vector<Vertex> on_k = k.vertex_list();
  std::vector<Vertex> outside, majors;
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (!std::binary_search(on_k.begin(), on_k.end(), v)) outside.push_back(v);

  ordered_json j;
  ordered_json profiles = ordered_json::array();
  for (Vertex v : outside) {
    AttachmentProfile prof = attachment_profile(g, k, v);
    if (prof.cls == VertexClass::major) majors.push_back(v);
    profiles.push_back(ordered_json::parse(profile_json(prof)));
  }
  j["profiles"] = profiles;
  ordered_json relations = ordered_json::array();
  for (size_t i = 0; i < majors.size(); ++i)
    for (size_t l = i + 1; l < majors.size(); ++l)
      relations.push_back(ordered_json::parse(relation_json(pair_relation(g, k, majors[i], majors[l]))));
  j["relations"] = relations;
  return j.dump(2) + "\n";
}

std::string bench_json(const BenchReport& report) {
  ordered_json j;
  j["triples"] = report.stream.triples;
  j["tuples_passed"] = report.stream.tuples_passed;
  j["tuples_dead"] = report.stream.tuples_dead;
  j["pairs_emitted"] = report.stream.pairs_emitted;
  j["vertices_deleted"] = report.stream.vertices_deleted;
  j["candidates_tried"] = report.candidates_tried;
  j["bfs_calls"] = report.bfs_calls;
  j["doilies_found"] = report.doilies_found;
  return j.dump(2) + "\n";
}

std::string acceptance_json(const std::vector<CriterionResult>& results) {
  ordered_json list = ordered_json::array();
  for (const CriterionResult& r : results) {
    ordered_json j;
    j["number"] = r.number;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    list.push_back(j);
  }
  return list.dump(2) + "\n";
}

}  // namespace doily
