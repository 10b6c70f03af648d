#include "bgg/jobspec.hpp"

#include <iostream>

#include <CLI11.hpp>

#include "bgg/accept.hpp"
#include "bgg/emit.hpp"
#include "bgg/errors.hpp"
#include "bgg/parallel.hpp"

namespace bgg {

namespace {

std::vector<long> parse_long_list(const std::string& s) {
  std::vector<long> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) throw UsageError("empty entry in list: " + s);
      out.push_back(std::stol(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

QVec parse_rat_list(const std::string& s) {
  QVec out;
  for (long v : parse_long_list(s)) out.push_back(Rat(v));
  return out;
}

void add_diagram_args(CLI::App* cmd, JobSpec& job) {
  cmd->add_option("series", job.series, "diagram series and rank, e.g. A5")->required();
  cmd->add_option("crossing", job.crossing, "crossed nodes, e.g. x{2} or x{1,4}")->required();
}

}  // namespace

CartanSpec spec_of(const JobSpec& job) {
  if (job.series.size() < 2) throw UsageError("bad series: " + job.series);
  char s = job.series[0];
  if (s != 'A' && s != 'C') throw UsageError("unknown series: " + job.series);
  int rank;
  try {
    rank = std::stoi(job.series.substr(1));
  } catch (const std::exception&) {
    throw UsageError("bad rank in: " + job.series);
  }
  return CartanSpec(s == 'A' ? Series::A : Series::C, rank);
}

Crossing crossing_of(const JobSpec& job) {
  const std::string& s = job.crossing;
  if (s.size() < 4 || s.substr(0, 2) != "x{" || s.back() != '}')
    throw UsageError("bad crossing: " + s + " (expected x{..})");
  std::vector<int> nodes;
  for (long v : parse_long_list(s.substr(2, s.size() - 3))) nodes.push_back(int(v));
  return Crossing(nodes, spec_of(job).rank);
}

JobSpec parse_jobspec(const std::vector<std::string>& tokens) {
  JobSpec job;
  CLI::App app{"BGG sequence explorer"};
  app.require_subcommand(1);

  auto* hasse = app.add_subcommand("hasse", "Hasse graph of a crossed diagram");
  add_diagram_args(hasse, job);
  hasse->add_option("--cap", job.cap, "refuse graphs above this node count");

  auto* bgg = app.add_subcommand("bgg", "BGG diagram for a dominant weight");
  add_diagram_args(bgg, job);
  std::string lambda_text;
  bgg->add_option("--lambda", lambda_text, "fundamental coordinates")->required();
  bgg->add_option("--realform", job.realform, "split|quaternionic|cr|quaternionic-contact");

  auto* sub = app.add_subcommand("subcomplexes", "provable subcomplexes of a BGG sequence");
  add_diagram_args(sub, job);
  std::string sub_lambda;
  sub->add_option("--lambda", sub_lambda, "fundamental coordinates")->required();
  sub->add_option("--realform", job.realform, "real form preset");
  sub->add_option("--e0", job.e0, "preset:torsion-free or labels a,b,..;c,d,..");
  sub->add_option("--jobs", job.jobs, "parallel pair verdicts");

  auto* oracle = app.add_subcommand("oracle", "brute-force Lie algebra homology");
  add_diagram_args(oracle, job);
  oracle->add_option("--rep", job.rep, "adjoint|standard");
  oracle->add_option("--degree", job.degree, "restrict to one homology degree");

  auto* sym = app.add_subcommand("symbol-check", "symbol sequence exactness lab");
  sym->add_option("--mode", job.mode, "plain|tower|dual|quaternion");
  sym->add_option("-n", job.n, "rank of F");
  sym->add_option("-k", job.k, "first parameter");
  sym->add_option("-l", job.l, "second parameter");
  sym->add_option("--x", job.x, "alpha1;alpha2 as comma lists");
  sym->add_option("--jobs", job.jobs, "parallel symbol stages");

  auto* accept = app.add_subcommand("accept", "run the acceptance suite");

  for (auto* cmd : {hasse, bgg, sub, oracle, sym, accept}) {
    cmd->add_option("--format", job.format, "text|json|dot");
    cmd->add_option("--seed", job.seed, "seed for randomized property runs");
  }

  std::vector<std::string> rev(tokens.rbegin(), tokens.rend());
  try {
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (hasse->parsed()) job.command = JobSpec::Command::Hasse;
  if (bgg->parsed()) job.command = JobSpec::Command::Bgg;
  if (sub->parsed()) job.command = JobSpec::Command::Subcomplexes;
  if (oracle->parsed()) job.command = JobSpec::Command::Oracle;
  if (sym->parsed()) job.command = JobSpec::Command::SymbolCheck;
  if (accept->parsed()) job.command = JobSpec::Command::Accept;
  if (!lambda_text.empty()) job.lambda = parse_long_list(lambda_text);
  if (!sub_lambda.empty()) job.lambda = parse_long_list(sub_lambda);
  if (job.format != "text" && job.format != "json" && job.format != "dot")
    throw UsageError("unknown format: " + job.format);
  return job;
}

std::vector<std::string> to_tokens(const JobSpec& job) {
  std::vector<std::string> t;
  auto push = [&](const std::string& flag, const std::string& val) {
    t.push_back(flag);
    t.push_back(val);
  };
  switch (job.command) {
    case JobSpec::Command::Hasse:
      t = {"hasse", job.series, job.crossing};
      push("--cap", std::to_string(job.cap));
      break;
    case JobSpec::Command::Bgg:
    case JobSpec::Command::Subcomplexes: {
      t = {job.command == JobSpec::Command::Bgg ? "bgg" : "subcomplexes", job.series,
           job.crossing};
      std::string lambda;
      for (size_t i = 0; i < job.lambda.size(); ++i)
        lambda += (i ? "," : "") + std::to_string(job.lambda[i]);
      push("--lambda", lambda);
      push("--realform", job.realform);
      if (job.command == JobSpec::Command::Subcomplexes) {
        push("--e0", job.e0);
        push("--jobs", std::to_string(job.jobs));
      }
      break;
    }
    case JobSpec::Command::Oracle:
      t = {"oracle", job.series, job.crossing};
      push("--rep", job.rep);
      if (job.degree >= 0) push("--degree", std::to_string(job.degree));
      break;
    case JobSpec::Command::SymbolCheck:
      t = {"symbol-check"};
      push("--mode", job.mode);
      push("-n", std::to_string(job.n));
      push("-k", std::to_string(job.k));
      push("-l", std::to_string(job.l));
      if (!job.x.empty()) push("--x", job.x);
      break;
    case JobSpec::Command::Accept:
      t = {"accept"};
      break;
  }
  push("--format", job.format);
  push("--seed", std::to_string(job.seed));
  return t;
}

namespace {

Weight lambda_of(const JobSpec& job, const CartanSpec& spec) {
  if (int(job.lambda.size()) != spec.rank)
    throw UsageError("lambda needs " + std::to_string(spec.rank) + " coordinates");
  Weight w{QVec(spec.rank)};
  for (int i = 0; i < spec.rank; ++i) w.fund[i] = job.lambda[i];
  return w;
}

E0Spec e0_of(const JobSpec& job, const GradingInfo& g) {
  if (job.e0 == "preset:torsion-free") return e0_torsion_free_preset(g);
  if (job.e0.rfind("preset:", 0) == 0) throw UsageError("unknown E0 preset: " + job.e0);
  E0Spec e0;
  e0.provenance = "explicit";
  std::string cur;
  for (char c : job.e0 + ";") {
    if (c == ';') {
      if (!cur.empty()) e0.components.push_back(Weight{parse_rat_list(cur)});
      cur.clear();
    } else {
      cur += c;
    }
  }
  validate_e0(g, e0);
  return e0;
}

SymbolX x_of(const JobSpec& job) {
  if (job.x.empty()) {
    // default: the canonical generic symbol direction
    SymbolX x{QVec(job.n, Rat(0)), QVec(job.n, Rat(0))};
    if (job.n >= 2) {
      x.alpha1[0] = 1;
      x.alpha2[1] = 1;
    }
    return x;
  }
  auto semi = job.x.find(';');
  if (semi == std::string::npos) throw UsageError("--x needs the form a,b;c,d");
  SymbolX x{parse_rat_list(job.x.substr(0, semi)), parse_rat_list(job.x.substr(semi + 1))};
  if (int(x.alpha1.size()) != job.n || int(x.alpha2.size()) != job.n)
    throw UsageError("--x coordinate lists must have length n");
  return x;
}

int run_job(const JobSpec& job, std::ostream& out) {
  switch (job.command) {
    case JobSpec::Command::Hasse: {
      GradingInfo g = grade(spec_of(job), crossing_of(job));
      HasseGraph graph = hasse_graph(g, HasseOptions{job.cap});
      if (job.format == "json")
        out << dump_json(json_of(graph));
      else if (job.format == "dot")
        out << emit_dot(graph);
      else
        out << text_of(graph);
      return 0;
    }
    case JobSpec::Command::Bgg: {
      GradingInfo g = grade(spec_of(job), crossing_of(job));
      auto form = realform_from_name(job.realform);
      if (!form) throw UsageError("unknown real form: " + job.realform);
      HasseGraph graph = hasse_graph(g, HasseOptions{job.cap});
      BGGDiagram d = bgg_diagram(graph, lambda_of(job, g.spec), RealFormTag::preset(*form, g));
      if (job.format == "json")
        out << dump_json(json_of(d));
      else if (job.format == "dot")
        out << emit_dot(d);
      else
        out << text_of(d);
      return 0;
    }
    case JobSpec::Command::Subcomplexes: {
      GradingInfo g = grade(spec_of(job), crossing_of(job));
      auto form = realform_from_name(job.realform);
      if (!form) throw UsageError("unknown real form: " + job.realform);
      HasseGraph graph = hasse_graph(g, HasseOptions{job.cap});
      BGGDiagram d = bgg_diagram(graph, lambda_of(job, g.spec), RealFormTag::preset(*form, g));
      E0Spec e0 = e0_of(job, g);
      bool real_mode = d.realform.flip && conjugate_weight(d.realform, d.lambda) == d.lambda;
      // full pair-verdict table; pairs are independent, so --jobs applies
      std::vector<std::pair<int, int>> pairs;
      int units = real_mode ? int(d.classes.size()) : int(d.graph.nodes.size());
      auto degree_of = [&](int u) {
        return real_mode ? d.degrees[d.classes[u][0]] : d.degrees[u];
      };
      for (int s = 0; s < units; ++s)
        for (int t = 0; t < units; ++t)
          if (degree_of(t) == degree_of(s) + 2) pairs.push_back({s, t});
      std::vector<VanishVerdict> verdicts(pairs.size());
      parallel_for(long(pairs.size()), job.jobs, [&](long i) {
        verdicts[i] = real_mode
                          ? criterion_real(d, e0, pairs[i].first, pairs[i].second)
                          : criterion(d, e0, pairs[i].first, pairs[i].second);
      });
      auto chains = find_subcomplexes(d, e0);
      if (job.format == "json") {
        Json j = json_of(d, chains);
        j["e0"] = Json::array();
        for (const Weight& c : e0.components) j["e0"].push_back(weight_json(c));
        j["verdicts"] = json_of(d, verdicts)["verdicts"];
        out << dump_json(j);
      } else if (job.format == "dot") {
        out << emit_dot(d, chains);
      } else {
        out << "subcomplex chains (" << chains.size() << "):\n";
        for (const SubcomplexChain& c : chains) {
          out << " ";
          for (size_t i = 0; i < c.nodes.size(); ++i) {
            int v = c.nodes[i];
            std::string name = c.real_mode
                                   ? d.graph.nodes[d.classes[v][0]].name
                                   : d.graph.nodes[v].name;
            out << " " << name;
            if (i + 1 < c.nodes.size()) out << " -(" << c.orders[i] << ")->";
          }
          out << "\n";
        }
        long zero = 0;
        for (const VanishVerdict& v : verdicts)
          if (v.verdict == Verdict::ProvablyZero) ++zero;
        out << "pair verdicts: " << zero << " provably zero of " << verdicts.size()
            << "\n";
      }
      return 0;
    }
    case JobSpec::Command::Oracle: {
      GradingInfo g = grade(spec_of(job), crossing_of(job));
      RepKind rep;
      if (job.rep == "adjoint")
        rep = RepKind::Adjoint;
      else if (job.rep == "standard")
        rep = RepKind::Standard;
      else
        throw UsageError("unknown module: " + job.rep);
      HomologyOracle oracle(g, rep);
      std::vector<long> hdims;
      std::vector<std::vector<std::pair<Weight, int>>> labels;
      if (job.degree >= 0) {
        hdims.assign(job.degree + 1, -1);
        hdims[job.degree] = oracle.homology_dim_at(job.degree);
        labels.resize(job.degree + 1);
        labels[job.degree] = oracle.harmonic_labels(job.degree);
      } else {
        hdims = oracle.homology_dims();
        for (int k = 0; k <= oracle.pplus_dim(); ++k)
          labels.push_back(oracle.harmonic_labels(k));
      }
      if (job.format == "json") {
        out << dump_json(oracle_json(g, rep, hdims, labels));
      } else {
        out << "homology of " << g.text() << ", module " << job.rep << "\n";
        for (size_t k = 0; k < hdims.size(); ++k) {
          if (hdims[k] < 0) continue;
          out << "  H_" << k << ": dim " << hdims[k];
          if (k < labels.size() && !labels[k].empty()) {
            out << "  labels";
            for (const auto& [w, mult] : labels[k]) {
              out << " " << weight_string(w);
              if (mult > 1) out << "(x" << mult << ")";
            }
          }
          out << "\n";
        }
      }
      return 0;
    }
    case JobSpec::Command::SymbolCheck: {
      if (job.mode == "quaternion") {
        if (job.n < 1 || job.n > 2) throw UsageError("quaternion sweep needs n in {1,2}");
        long total = 0;
        int min_rank = 2, max_rank = 0;
        std::vector<int> digits(4 * job.n, 0);
        for (;;) {
          QuatVec v;
          bool nonzero = false;
          for (int i = 0; i < job.n; ++i) {
            GaussQ a{Rat(digits[4 * i] - 1), Rat(digits[4 * i + 1] - 1)};
            GaussQ b{Rat(digits[4 * i + 2] - 1), Rat(digits[4 * i + 3] - 1)};
            nonzero |= !a.is_zero() || !b.is_zero();
            v.push_back({a, b});
          }
          if (nonzero) {
            int r = quaternionic_rank(v, job.n);
            min_rank = std::min(min_rank, r);
            max_rank = std::max(max_rank, r);
            ++total;
          }
          int pos = 0;
          while (pos < 4 * job.n && digits[pos] == 2) digits[pos++] = 0;
          if (pos == 4 * job.n) break;
          ++digits[pos];
        }
        Json j;
        j["schema"] = kSchema;
        j["kind"] = "quaternionic-rank-sweep";
        j["n"] = job.n;
        j["vectors"] = total;
        j["min_rank"] = min_rank;
        j["max_rank"] = max_rank;
        if (job.format == "json")
          out << dump_json(j);
        else
          out << "quaternionic rank sweep n=" << job.n << ": " << total
              << " nonzero vectors, rank range [" << min_rank << ", " << max_rank
              << "]\n";
        return 0;
      }
      if (job.mode == "dual") {
        DualPairingReport rep = dual_pairing_check(job.n, job.k, job.l);
        if (job.format == "json") {
          out << dump_json(json_of(rep));
        } else {
          out << "dual pairing n=" << job.n << " k=" << job.k << " l=" << job.l
              << ": dims " << (rep.dims_match ? "match" : "MISMATCH")
              << ", transpose exact: " << (rep.transpose_exactness.exact ? "yes" : "no")
              << "\n";
        }
        return 0;
      }
      ExactnessReport rep;
      std::string tower;
      if (job.mode == "plain") {
        rep = plain_tower_report(job.n, job.k, x_of(job), job.jobs);
        tower = "V(" + std::to_string(job.k) + ",*)";
      } else if (job.mode == "tower") {
        rep = exactness_report(job.n, job.k, job.l, x_of(job), job.jobs);
        tower = "W(" + std::to_string(job.k) + "," + std::to_string(job.l) + ")";
      } else {
        throw UsageError("unknown mode: " + job.mode);
      }
      if (job.format == "json") {
        out << dump_json(json_of(rep, tower));
      } else {
        out << tower << " n=" << job.n << ": " << (rep.exact ? "exact" : "NOT exact");
        if (!rep.exact) {
          out << " (failing stages:";
          for (int f : rep.failing) out << " " << f;
          out << ")";
        }
        out << "\n";
        for (const StageReport& st : rep.stages)
          out << "  stage " << st.j << ": " << st.dim_source << " -> " << st.dim_target
              << ", rank " << st.rank << ", nullity " << st.nullity << "\n";
      }
      return 0;
    }
    case JobSpec::Command::Accept:
      return run_acceptance(out, job.seed) == 0 ? 0 : 1;
  }
  throw InternalError("unhandled command");
}

}  // namespace

int execute_job(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    return run_job(job, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace bgg
