#include "gitcomb/serialization.hpp"

namespace gitcomb {

namespace {

const json& require(const json& j, const char* key, const std::string& field) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(field + ": missing field \"" + key + "\"");
  return j.at(key);
}

int int_from(const json& j, const std::string& field) {
  if (!j.is_number_integer()) throw SchemaError(field + ": expected an integer");
  return j.get<int>();
}

}  // namespace

json to_json(const Rational& q) { return rational_string(q); }

json to_json(const ProjPoint& p) { return json::array({rational_string(p.x()), rational_string(p.y())}); }

json to_json(const BinaryForm& f) {
  json coeffs = json::array();
  for (const auto& c : f.coeffs()) coeffs.push_back(rational_string(c));
  return json{{"degree", f.degree()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const Linearization& k) {
  json w = json::array();
  for (const auto& c : k.weights()) w.push_back(rational_string(c));
  return json{{"n", k.n()}, {"d", k.d()}, {"weights", std::move(w)}};
}

json to_json(const Wall& w) {
  json subset = json::array();
  for (int i = 0; i < w.n; ++i)
    if (w.subset & (1u << i)) subset.push_back(i + 1);
  return json{{"I", std::move(subset)}, {"dI", w.dI}};
}

json to_json(const Configuration& c) {
  json points = json::array();
  for (const auto& p : c.points()) points.push_back(to_json(p));
  json forms = json::array();
  for (const auto& f : c.forms()) forms.push_back(to_json(f));
  return json{{"points", std::move(points)}, {"forms", std::move(forms)}};
}

json to_json(const StabilityStatus& s) {
  json out{{"status", stability_name(s.verdict)}};
  if (s.witness) {
    json w{{"excess", rational_string(s.witness->excess)}};
    if (s.witness->point) w["point"] = to_json(*s.witness->point);
    if (s.witness->factor) w["factor"] = to_json(*s.witness->factor);
    out["witness"] = std::move(w);
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json to_json(const DivisorLabel& lbl) {
  json n1 = json::array(), n2 = json::array();
  for (int i = 0; i < lbl.n; ++i)
    (lbl.n2_mask & (1u << i) ? n2 : n1).push_back(i + 1);
  return json{{"N1", std::move(n1)},
              {"N2", std::move(n2)},
              {"d1", lbl.d - lbl.d2},
              {"d2", lbl.d2},
              {"label", label_string(lbl)}};
}

json to_json(const CensusReport& rep) {
  json out{{"total", rep.total},
           {"stable", rep.stable},
           {"unstable", rep.unstable},
           {"strictly_semistable", rep.strictly_semistable},
           {"phi_exceptional_stable", rep.phi_exceptional_stable}};
  out["e_U"] = rep.e_U ? json(*rep.e_U) : json(nullptr);
  out["rho_Q"] = rep.rho_Q ? json(*rep.rho_Q) : json(nullptr);
  out["rho_Qprime"] = rep.rho_Qprime ? json(*rep.rho_Qprime) : json(nullptr);
  return out;
}

json to_json(const DegreeTree& t) {
  json edges = json::array();
  for (auto [a, b] : t.edges) edges.push_back(json::array({a, b}));
  json marks = json::array();
  for (const auto& mk : t.marks)
    marks.push_back(json{{"id", mk.id}, {"node", mk.node}, {"location", mk.location}});
  return json{{"degrees", t.degrees}, {"edges", std::move(edges)}, {"marks", std::move(marks)}};
}

json to_json(const Comb& c) {
  json forms = json::array();
  for (const auto& f : c.handle_forms()) forms.push_back(to_json(f));
  json marks = json::array();
  for (const auto& [id, loc] : c.handle_marks())
    marks.push_back(json{{"id", id}, {"point", to_json(loc)}});
  json teeth = json::array();
  for (const auto& t : c.teeth()) {
    json jt{{"attach", to_json(t.attach)}, {"degree", t.degree}, {"marks", t.marks}};
    if (t.subtree) jt["subtree"] = to_json(*t.subtree);
    teeth.push_back(std::move(jt));
  }
  return json{{"n", c.n()},
              {"d", c.d()},
              {"handle_forms", std::move(forms)},
              {"handle_marks", std::move(marks)},
              {"teeth", std::move(teeth)}};
}

json to_json(const WallCrossingReport& rep) {
  return json{{"wall", to_json(rep.wall)},
              {"met_below", to_json(rep.met_below)},
              {"met_above", to_json(rep.met_above)},
              {"kind", crossing_kind_name(rep.kind)},
              {"contracts_going_up", rep.contracts_going_up},
              {"contracts_going_down", rep.contracts_going_down},
              {"census_below", to_json(rep.census_below)},
              {"census_above", to_json(rep.census_above)},
              {"rho_qprime_equal", rep.rho_qprime_equal}};
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (!j.is_string()) throw SchemaError(field + ": expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

ProjPoint proj_point_from_json(const json& j, const std::string& field) {
  if (!j.is_array() || j.size() != 2)
    throw SchemaError(field + ": expected a point [\"x\",\"y\"]");
  Rational x = rational_from_json(j[0], field + "[0]");
  Rational y = rational_from_json(j[1], field + "[1]");
  try {
    return ProjPoint(x, y);
  } catch (const std::exception& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

BinaryForm binary_form_from_json(const json& j, const std::string& field) {
  int degree = int_from(require(j, "degree", field), field + ".degree");
  const json& jc = require(j, "coeffs", field);
  if (!jc.is_array()) throw SchemaError(field + ".coeffs: expected an array");
  std::vector<Rational> coeffs;
  for (size_t i = 0; i < jc.size(); ++i)
    coeffs.push_back(rational_from_json(jc[i], field + ".coeffs[" + std::to_string(i) + "]"));
  try {
    return BinaryForm(degree, std::move(coeffs));
  } catch (const std::exception& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

Linearization linearization_from_json(const json& j, const std::string& field) {
  int n = int_from(require(j, "n", field), field + ".n");
  int d = int_from(require(j, "d", field), field + ".d");
  const json& jw = require(j, "weights", field);
  if (!jw.is_array()) throw SchemaError(field + ".weights: expected an array");
  std::vector<Rational> w;
  for (size_t i = 0; i < jw.size(); ++i)
    w.push_back(rational_from_json(jw[i], field + ".weights[" + std::to_string(i) + "]"));
  try {
    return Linearization(n, d, std::move(w));
  } catch (const std::exception& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

Wall wall_from_json(const json& j, int n, int d, const std::string& field) {
  const json& ji = require(j, "I", field);
  if (!ji.is_array()) throw SchemaError(field + ".I: expected an array of indices");
  std::uint32_t mask = 0;
  for (const auto& e : ji) {
    int idx = int_from(e, field + ".I");
    if (idx < 1 || idx > n) throw SchemaError(field + ".I: index out of range 1..n");
    mask |= 1u << (idx - 1);
  }
  int dI = int_from(require(j, "dI", field), field + ".dI");
  if (dI < 0 || dI > d) throw SchemaError(field + ".dI: out of range 0..d");
  return Wall::canonical(mask, dI, n, d);
}

Configuration configuration_from_json(const json& j, const std::string& field) {
  const json& jp = require(j, "points", field);
  const json& jf = require(j, "forms", field);
  if (!jp.is_array()) throw SchemaError(field + ".points: expected an array");
  if (!jf.is_array()) throw SchemaError(field + ".forms: expected an array");
  std::vector<ProjPoint> points;
  for (size_t i = 0; i < jp.size(); ++i)
    points.push_back(proj_point_from_json(jp[i], field + ".points[" + std::to_string(i) + "]"));
  std::vector<BinaryForm> forms;
  for (size_t i = 0; i < jf.size(); ++i)
    forms.push_back(binary_form_from_json(jf[i], field + ".forms[" + std::to_string(i) + "]"));
  try {
    return Configuration(std::move(points), std::move(forms));
  } catch (const std::exception& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

DegreeTree degree_tree_from_json(const json& j, const std::string& field) {
  DegreeTree t;
  const json& jd = require(j, "degrees", field);
  if (!jd.is_array()) throw SchemaError(field + ".degrees: expected an array");
  for (const auto& e : jd) t.degrees.push_back(int_from(e, field + ".degrees"));
  if (j.contains("edges")) {
    const json& je = j.at("edges");
    if (!je.is_array()) throw SchemaError(field + ".edges: expected an array of pairs");
    for (const auto& e : je) {
      if (!e.is_array() || e.size() != 2)
        throw SchemaError(field + ".edges: expected [a, b] pairs");
      t.edges.emplace_back(int_from(e[0], field + ".edges"), int_from(e[1], field + ".edges"));
    }
  }
  if (j.contains("marks")) {
    const json& jm = j.at("marks");
    if (!jm.is_array()) throw SchemaError(field + ".marks: expected an array");
    for (const auto& e : jm)
      t.marks.push_back({int_from(require(e, "id", field + ".marks"), field + ".marks.id"),
                         int_from(require(e, "node", field + ".marks"), field + ".marks.node"),
                         int_from(require(e, "location", field + ".marks"),
                                  field + ".marks.location")});
  }
  try {
    t.validate();
  } catch (const std::exception& e) {
    throw SchemaError(field + ": " + e.what());
  }
  return t;
}

Comb comb_from_json(const json& j, const std::string& field) {
  int n = int_from(require(j, "n", field), field + ".n");
  int d = int_from(require(j, "d", field), field + ".d");
  const json& jf = require(j, "handle_forms", field);
  if (!jf.is_array()) throw SchemaError(field + ".handle_forms: expected an array");
  std::vector<BinaryForm> forms;
  for (size_t i = 0; i < jf.size(); ++i)
    forms.push_back(
        binary_form_from_json(jf[i], field + ".handle_forms[" + std::to_string(i) + "]"));

  std::map<int, ProjPoint> handle_marks;
  if (j.contains("handle_marks")) {
    const json& jm = j.at("handle_marks");
    if (!jm.is_array()) throw SchemaError(field + ".handle_marks: expected an array");
    for (const auto& e : jm) {
      int id = int_from(require(e, "id", field + ".handle_marks"), field + ".handle_marks.id");
      ProjPoint p = proj_point_from_json(require(e, "point", field + ".handle_marks"),
                                         field + ".handle_marks.point");
      if (!handle_marks.emplace(id, p).second)
        throw SchemaError(field + ".handle_marks: duplicate mark id");
    }
  }

  std::vector<Tooth> teeth;
  if (j.contains("teeth")) {
    const json& jt = j.at("teeth");
    if (!jt.is_array()) throw SchemaError(field + ".teeth: expected an array");
    for (size_t i = 0; i < jt.size(); ++i) {
      std::string tf = field + ".teeth[" + std::to_string(i) + "]";
      Tooth t{proj_point_from_json(require(jt[i], "attach", tf), tf + ".attach"),
              int_from(require(jt[i], "degree", tf), tf + ".degree"),
              {},
              std::nullopt};
      if (jt[i].contains("marks")) {
        const json& jmk = jt[i].at("marks");
        if (!jmk.is_array()) throw SchemaError(tf + ".marks: expected an array");
        for (const auto& e : jmk) t.marks.push_back(int_from(e, tf + ".marks"));
      }
      if (jt[i].contains("subtree") && !jt[i].at("subtree").is_null())
        t.subtree = degree_tree_from_json(jt[i].at("subtree"), tf + ".subtree");
      teeth.push_back(std::move(t));
    }
  }

  try {
    return Comb(std::move(forms), std::move(handle_marks), std::move(teeth), n, d);
  } catch (const std::exception& e) {
    throw SchemaError(field + ": " + e.what());
  }
}

std::string stability_name(Stability s) {
  switch (s) {
    case Stability::Stable: return "Stable";
    case Stability::StrictlySemistable: return "StrictlySemistable";
    case Stability::Unstable: return "Unstable";
  }
  return "Unknown";
}

std::string crossing_kind_name(CrossingKind k) {
  switch (k) {
    case CrossingKind::SmallModification: return "SmallModification";
    case CrossingKind::ContractionPair: return "ContractionPair";
    case CrossingKind::ContractionCommonRoot: return "ContractionCommonRoot";
  }
  return "Unknown";
}

}  // namespace gitcomb
