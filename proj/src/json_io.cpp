#include "h8mp/json_io.hpp"

#include <fstream>

namespace h8mp {

Json field_to_json(const FieldElement& f) {
  Json j = Json::array();
  for (int k = 0; k < 4; ++k) j.push_back(rational_str(f.coeff(k)));
  return j;
}

FieldElement field_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw ParseError("field element must be a 4-array");
  FieldElement f;
  for (int k = 0; k < 4; ++k) f.coeff(k) = parse_rational(j[k].get<std::string>());
  return f;
}

Json elt_to_json(const Elt& e) {
  Json j = Json::array();
  for (const auto& c : e) j.push_back(field_to_json(c));
  return j;
}

Elt elt_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("coefficient vector must be an array");
  Elt e;
  for (const auto& c : j) e.push_back(field_from_json(c));
  return e;
}

Json hopf_to_json(const HopfData& H) {
  Json j;
  j["dim"] = H.dim;
  j["basis_names"] = H.basis_names;
  Json mult = Json::array();
  for (int i = 0; i < H.dim; ++i) {
    Json row = Json::array();
    for (int k = 0; k < H.dim; ++k) row.push_back(elt_to_json(H.mult[i][k]));
    mult.push_back(row);
  }
  j["mult"] = mult;
  j["unit"] = elt_to_json(H.unit);
  Json comult = Json::array();
  for (int i = 0; i < H.dim; ++i) comult.push_back(elt_to_json(H.comult[i]));
  j["comult"] = comult;
  j["counit"] = elt_to_json(H.counit);
  Json anti = Json::array();
  for (int i = 0; i < H.dim; ++i) anti.push_back(elt_to_json(H.antipode[i]));
  j["antipode"] = anti;
  return j;
}

HopfData hopf_from_json(const Json& j) {
  HopfData H;
  try {
    H.dim = j.at("dim").get<int>();
    H.basis_names = j.at("basis_names").get<std::vector<std::string>>();
    for (const auto& row : j.at("mult")) {
      std::vector<Elt> r;
      for (const auto& cell : row) r.push_back(elt_from_json(cell));
      H.mult.push_back(r);
    }
    H.unit = elt_from_json(j.at("unit"));
    for (const auto& row : j.at("comult")) H.comult.push_back(elt_from_json(row));
    H.counit = elt_from_json(j.at("counit"));
    for (const auto& row : j.at("antipode")) H.antipode.push_back(elt_from_json(row));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("hopf json: ") + e.what());
  }
  int n = H.dim;
  if (static_cast<int>(H.basis_names.size()) != n ||
      static_cast<int>(H.mult.size()) != n || static_cast<int>(H.comult.size()) != n ||
      static_cast<int>(H.counit.size()) != n || static_cast<int>(H.antipode.size()) != n)
    throw ParseError("hopf json: inconsistent dimensions");
  for (const auto& row : H.mult) {
    if (static_cast<int>(row.size()) != n) throw ParseError("hopf json: mult row size");
    for (const auto& cell : row)
      if (static_cast<int>(cell.size()) != n) throw ParseError("hopf json: mult cell size");
  }
  for (const auto& row : H.comult)
    if (static_cast<int>(row.size()) != n * n) throw ParseError("hopf json: comult row size");
  return H;
}

Json action_to_json(const ActionTable& a) {
  Json j;
  j["side"] = a.side == Side::Left ? "left" : "right";
  j["dim"] = a.dim();
  Json t = Json::array();
  for (const auto& row : a.table) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(elt_to_json(cell));
    t.push_back(r);
  }
  j["table"] = t;
  return j;
}

ActionTable action_from_json(const Json& j) {
  ActionTable a;
  try {
    std::string side = j.at("side").get<std::string>();
    if (side == "left")
      a.side = Side::Left;
    else if (side == "right")
      a.side = Side::Right;
    else
      throw ParseError("action json: side must be left or right");
    int n = j.at("dim").get<int>();
    for (const auto& row : j.at("table")) {
      std::vector<Elt> r;
      for (const auto& cell : row) r.push_back(elt_from_json(cell));
      a.table.push_back(r);
    }
    if (a.dim() != n) throw ParseError("action json: dim mismatch");
    for (const auto& row : a.table) {
      if (static_cast<int>(row.size()) != n) throw ParseError("action json: row size");
      for (const auto& cell : row)
        if (static_cast<int>(cell.size()) != n) throw ParseError("action json: cell size");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("action json: ") + e.what());
  }
  return a;
}

Json matched_pair_to_json(const MatchedPair& mp) {
  Json j;
  j["provenance"] = mp.provenance;
  j["left"] = action_to_json(mp.left);
  j["right"] = action_to_json(mp.right);
  return j;
}

MatchedPair matched_pair_from_json(const Json& j) {
  MatchedPair mp;
  try {
    mp.provenance = j.at("provenance").get<std::string>();
    mp.left = action_from_json(j.at("left"));
    mp.right = action_from_json(j.at("right"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("matched pair json: ") + e.what());
  }
  if (mp.left.side != Side::Left || mp.right.side != Side::Right)
    throw ParseError("matched pair json: sides are swapped");
  return mp;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(field_to_json(c));
    j.push_back(r);
  }
  return j;
}

Matrix matrix_from_json(const Json& j) {
  Matrix m;
  for (const auto& row : j) {
    std::vector<FieldElement> r;
    for (const auto& c : row) r.push_back(field_from_json(c));
    m.push_back(r);
  }
  return m;
}

Json iso_to_json(const HopfIso& iso) {
  Json j;
  j["forward"] = matrix_to_json(iso.forward);
  j["backward"] = matrix_to_json(iso.backward);
  return j;
}

HopfIso iso_from_json(const Json& j) {
  HopfIso iso;
  try {
    iso.forward = matrix_from_json(j.at("forward"));
    iso.backward = matrix_from_json(j.at("backward"));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("iso json: ") + e.what());
  }
  return iso;
}

Json transcript_to_json(const SolverTranscript& t) {
  Json nodes = Json::array();
  for (const auto& n : t.nodes) {
    Json jn;
    jn["id"] = n.id;
    jn["parent"] = n.parent;
    jn["action"] = n.action;
    nodes.push_back(jn);
  }
  return nodes;
}

Json axiom_report_to_json(const AxiomReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json jc;
    jc["axiom"] = c.axiom;
    jc["ok"] = c.ok;
    if (!c.ok) jc["witness"] = c.witness;
    checks.push_back(jc);
  }
  Json j;
  j["all_ok"] = rep.all_ok();
  j["checks"] = checks;
  return j;
}

Json braid_report_to_json(const BraidOperator& r, const BraidCheck& braid, bool involutive,
                          const CriteriaReport& criteria, const Matrix& inverse) {
  Json j;
  j["source"] = r.source;
  j["braid_equation"] = braid.holds;
  if (!braid.holds) j["braid_witness"] = braid.witness;
  j["involutive"] = involutive;
  Json crit;
  crit["contraction_identity"] = criteria.contraction_identity;
  if (!criteria.contraction_identity) crit["contraction_witness"] = criteria.contraction_witness;
  crit["antipode_exchange"] = criteria.antipode_exchange;
  if (!criteria.antipode_exchange) crit["antipode_witness"] = criteria.antipode_witness;
  crit["involutive"] = criteria.involutive;
  j["criteria"] = crit;
  j["matrix"] = matrix_to_json(r.matrix);
  j["inverse"] = matrix_to_json(inverse);
  return j;
}

Json classification_to_json(const Classification& c) {
  Json j;
  Json pairs = Json::array();
  for (const auto& mp : c.pairs) pairs.push_back(matched_pair_to_json(mp));
  j["matched_pairs"] = pairs;
  Json refs = Json::array();
  for (const auto& r : c.refutations) {
    Json jr;
    jr["grouplike_case"] = std::string(1, r.grouplike_case);
    jr["witnesses"] = r.witnesses;
    Json branches = Json::array();
    for (const auto& b : r.branches) {
      Json jb;
      jb["assumption"] = b.assumption;
      jb["closed_empty"] = b.closed_empty;
      jb["transcript"] = transcript_to_json(b.transcript);
      branches.push_back(jb);
    }
    jr["branches"] = branches;
    refs.push_back(jr);
  }
  j["refutations"] = refs;
  Json outs = Json::array();
  for (const auto& oc : c.outcomes) {
    Json jo;
    jo["situation"] = oc.situation.index;
    jo["left_choice"] = oc.situation.left_choice.label;
    jo["right_choice"] = oc.situation.right_choice.label;
    Json eqs = Json::array();
    for (const auto& e : oc.system.eqs) eqs.push_back(e.str(oc.system.var_names));
    jo["equations"] = eqs;
    jo["complete"] = oc.solutions.complete;
    jo["solution_count"] = oc.solutions.solutions.size();
    Json sols = Json::array();
    for (const auto& a : oc.solutions.solutions) {
      Json js = Json::object();
      for (const auto& [v, val] : a) js[oc.system.var_name(v)] = field_to_json(val);
      sols.push_back(js);
    }
    jo["solutions"] = sols;
    Json labels = Json::array();
    for (const auto& mp : oc.pairs) labels.push_back(mp.provenance);
    jo["matched_pairs"] = labels;
    jo["transcript"] = transcript_to_json(oc.transcript);
    outs.push_back(jo);
  }
  j["situations"] = outs;
  return j;
}

Json correspondence_to_json(const CorrespondenceReport& rep) {
  Json j;
  Json as = Json::array();
  for (const auto& [form, label] : rep.assignments) {
    Json ja;
    ja["form"] = form;
    ja["case"] = label;
    as.push_back(ja);
  }
  j["assignments"] = as;
  j["image"] = rep.image_labels;
  j["complement"] = rep.complement_labels;
  Json fibers = Json::array();
  for (const auto& [label, forms] : rep.fibers) {
    Json jf;
    jf["case"] = label;
    jf["forms"] = forms;
    fibers.push_back(jf);
  }
  j["fibers"] = fibers;
  return j;
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
  out << j.dump(2) << "\n";
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open: " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid json in ") + path.string() + ": " + e.what());
  }
}

}  // namespace h8mp
