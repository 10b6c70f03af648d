#include "bgg/emit.hpp"

#include <set>
#include <sstream>

#include "bgg/errors.hpp"

namespace bgg {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

Json qvec_json(const QVec& v) {
  Json arr = Json::array();
  for (const Rat& q : v) arr.push_back(rat_json(q));
  return arr;
}

}  // namespace

Json rat_json(const Rat& q) {
  Json j;
  check_internal(q.get_num().fits_slong_p() && q.get_den().fits_slong_p(),
                 "rational too large for the JSON schema");
  j["num"] = q.get_num().get_si();
  j["den"] = q.get_den().get_si();
  return j;
}

Json weight_json(const Weight& mu) { return qvec_json(mu.fund); }

Json json_of(const HasseGraph& g) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "hasse-graph";
  j["diagram"] = g.grading.text();
  j["grading_depth"] = g.grading.k;
  j["nodes"] = Json::array();
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    Json n;
    n["id"] = int(v);
    n["name"] = g.nodes[v].name;
    n["length"] = int(g.nodes[v].w.word.size());
    Json phi = Json::array();
    for (int t : g.nodes[v].phi) phi.push_back(root_name(g.grading.spec, g.grading.delta_plus[t]));
    n["phi"] = phi;
    Json word = Json::array();
    for (int s : g.nodes[v].w.word) word.push_back(s);
    n["word"] = word;
    j["nodes"].push_back(n);
  }
  j["arrows"] = Json::array();
  for (size_t a = 0; a < g.arrows.size(); ++a) {
    Json e;
    e["src"] = g.arrows[a].src;
    e["dst"] = g.arrows[a].dst;
    e["label"] = root_name(g.grading.spec, g.label_root(int(a)));
    Json coeffs = Json::array();
    for (long c : g.label_root(int(a)).coeffs) coeffs.push_back(c);
    e["label_coeffs"] = coeffs;
    j["arrows"].push_back(e);
  }
  return j;
}

Json json_of(const BGGDiagram& d) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "bgg-diagram";
  j["diagram"] = d.graph.grading.text();
  j["lambda"] = weight_json(d.lambda);
  j["realform"] = realform_name(d.realform.form);
  j["nodes"] = Json::array();
  for (size_t v = 0; v < d.graph.nodes.size(); ++v) {
    Json n;
    n["id"] = int(v);
    n["name"] = d.graph.nodes[v].name;
    n["degree"] = d.degrees[v];
    n["label"] = weight_json(d.labels[v]);
    n["label_text"] = weight_string(d.labels[v]);
    n["label_root_coords"] = qvec_json(to_simple_root_coords(d.spec(), d.labels[v]));
    n["dim"] = d.dims[v];
    n["class"] = d.class_of[v];
    j["nodes"].push_back(n);
  }
  j["arrows"] = Json::array();
  for (size_t a = 0; a < d.graph.arrows.size(); ++a) {
    Json e;
    e["src"] = d.graph.arrows[a].src;
    e["dst"] = d.graph.arrows[a].dst;
    e["label"] = root_name(d.spec(), d.graph.label_root(int(a)));
    e["order"] = d.orders[a];
    j["arrows"].push_back(e);
  }
  j["classes"] = Json::array();
  for (const auto& cls : d.classes) j["classes"].push_back(cls);
  if (d.order_note_2graded)
    j["order_note"] =
        "orders are affine-action coefficients; analytic orders of |2|-graded "
        "arrows are not asserted";
  if (!d.warnings.empty()) j["warnings"] = d.warnings;
  return j;
}

Json json_of(const BGGDiagram& d, const std::vector<VanishVerdict>& verdicts) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "vanish-verdicts";
  j["diagram"] = d.graph.grading.text();
  j["lambda"] = weight_json(d.lambda);
  j["verdicts"] = Json::array();
  for (const VanishVerdict& v : verdicts) {
    Json e;
    e["source"] = v.source;
    e["target"] = v.target;
    e["verdict"] = v.verdict == Verdict::ProvablyZero ? "provably-zero" : "inconclusive";
    e["path_unique"] = v.path_unique;
    if (v.witness) {
      Json w;
      w["mu"] = weight_json(v.witness->mu);
      Json combo = Json::array();
      for (const auto& [root, count] : v.witness->combo) {
        Json c;
        c["root"] = root_name(d.spec(), root);
        c["count"] = count;
        combo.push_back(c);
      }
      w["combo"] = combo;
      e["witness"] = w;
    }
    j["verdicts"].push_back(e);
  }
  return j;
}

Json json_of(const BGGDiagram& d, const std::vector<SubcomplexChain>& chains) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "subcomplexes";
  j["diagram"] = d.graph.grading.text();
  j["lambda"] = weight_json(d.lambda);
  j["realform"] = realform_name(d.realform.form);
  if (d.order_note_2graded)
    j["order_note"] =
        "orders are affine-action coefficients; analytic orders of |2|-graded "
        "arrows are not asserted";
  j["chains"] = Json::array();
  for (const SubcomplexChain& c : chains) {
    Json e;
    e["real"] = c.real_mode;
    Json names = Json::array();
    for (int v : c.nodes) {
      if (c.real_mode) {
        std::string cls;
        for (int u : d.classes[v]) {
          if (!cls.empty()) cls += "=";
          cls += d.graph.nodes[u].name;
        }
        names.push_back(cls);
      } else {
        names.push_back(d.graph.nodes[v].name);
      }
    }
    e["nodes"] = names;
    e["orders"] = c.orders;
    j["chains"].push_back(e);
  }
  return j;
}

Json json_of(const ExactnessReport& rep, const std::string& tower) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "symbol-exactness";
  j["tower"] = tower;
  j["dims"] = rep.dims;
  j["stages"] = Json::array();
  for (const StageReport& st : rep.stages) {
    Json s;
    s["j"] = st.j;
    s["dim_source"] = st.dim_source;
    s["dim_target"] = st.dim_target;
    s["rank"] = st.rank;
    s["nullity"] = st.nullity;
    j["stages"].push_back(s);
  }
  j["exact"] = rep.exact;
  j["generic_x"] = rep.generic;
  j["failing"] = rep.failing;
  return j;
}

Json json_of(const DualPairingReport& rep) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "dual-pairing";
  j["dual_dims"] = rep.dual_dims;
  j["swapped_dims"] = rep.swapped_dims;
  j["dims_match"] = rep.dims_match;
  j["transpose_exactness"] = json_of(rep.transpose_exactness, "transpose");
  return j;
}

Json oracle_json(const GradingInfo& g, RepKind rep, const std::vector<long>& hdims,
                 const std::vector<std::vector<std::pair<Weight, int>>>& labels) {
  Json j;
  j["schema"] = kSchema;
  j["kind"] = "homology-oracle";
  j["diagram"] = g.text();
  j["module"] = rep == RepKind::Adjoint ? "adjoint" : "standard";
  j["homology_dims"] = hdims;
  j["components"] = Json::array();
  for (size_t k = 0; k < labels.size(); ++k) {
    Json deg;
    deg["degree"] = int(k);
    deg["labels"] = Json::array();
    for (const auto& [w, mult] : labels[k]) {
      Json lab;
      lab["label"] = weight_json(w);
      lab["label_text"] = weight_string(w);
      lab["multiplicity"] = mult;
      deg["labels"].push_back(lab);
    }
    j["components"].push_back(deg);
  }
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

namespace {

std::string dot_graph(const HasseGraph& g, const BGGDiagram* d,
                      const std::vector<SubcomplexChain>& chains) {
  // arrows on highlighted chains get a style attribute
  std::set<std::pair<int, int>> hot;
  for (const SubcomplexChain& c : chains) {
    for (size_t i = 0; i + 1 < c.nodes.size(); ++i) {
      if (c.real_mode && d) {
        for (int u : d->classes[c.nodes[i]])
          for (int v : d->classes[c.nodes[i + 1]])
            if (g.find_arrow(u, v) >= 0) hot.insert({u, v});
      } else {
        hot.insert({c.nodes[i], c.nodes[i + 1]});
      }
    }
  }
  std::ostringstream os;
  os << "digraph bgg {\n  rankdir=LR;\n  node [shape=box, fontname=\"monospace\"];\n";
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    std::string label = g.nodes[v].name;
    if (d) {
      label += "\\n" + weight_string(d->labels[v]);
      label += "\\ndim " + std::to_string(d->dims[v]) + ", deg " +
               std::to_string(d->degrees[v]);
    } else {
      label += "\\nlen " + std::to_string(g.nodes[v].w.word.size());
    }
    os << "  n" << v << " [label=" << quote(label) << "];\n";
  }
  for (size_t a = 0; a < g.arrows.size(); ++a) {
    const HasseArrow& ar = g.arrows[a];
    std::string label = root_name(g.grading.spec, g.label_root(int(a)));
    if (d) label += " (ord " + std::to_string(d->orders[a]) + ")";
    os << "  n" << ar.src << " -> n" << ar.dst << " [label=" << quote(label);
    if (hot.count({ar.src, ar.dst})) os << ", color=red, penwidth=2.0";
    os << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace

std::string emit_dot(const HasseGraph& g) { return dot_graph(g, nullptr, {}); }

std::string emit_dot(const BGGDiagram& d, const std::vector<SubcomplexChain>& chains) {
  return dot_graph(d.graph, &d, chains);
}

std::string text_of(const HasseGraph& g) {
  std::ostringstream os;
  os << "Hasse graph " << g.grading.text() << ": " << g.nodes.size() << " nodes, "
     << g.arrows.size() << " arrows, max length " << g.max_length << "\n";
  for (size_t v = 0; v < g.nodes.size(); ++v) {
    os << "  " << g.nodes[v].name << "  len " << g.nodes[v].w.word.size() << "  Phi {";
    for (size_t t = 0; t < g.nodes[v].phi.size(); ++t) {
      if (t) os << ", ";
      os << root_name(g.grading.spec, g.grading.delta_plus[g.nodes[v].phi[t]]);
    }
    os << "}\n";
  }
  return os.str();
}

std::string text_of(const BGGDiagram& d) {
  std::ostringstream os;
  os << "BGG diagram " << d.graph.grading.text() << ", lambda = "
     << weight_string(d.lambda) << ", realform " << realform_name(d.realform.form)
     << "\n";
  for (size_t v = 0; v < d.graph.nodes.size(); ++v)
    os << "  " << d.graph.nodes[v].name << "  deg " << d.degrees[v] << "  "
       << weight_string(d.labels[v]) << "  dim " << d.dims[v] << "\n";
  for (const std::string& w : d.warnings) os << "  warning: " << w << "\n";
  return os.str();
}

}  // namespace bgg
