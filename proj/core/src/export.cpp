#include "trajnet/export.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace trajnet::io {

json number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return std::strtod(buf, nullptr);
}

json number(const std::optional<double>& x) { return x ? number(*x) : json(nullptr); }

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string key(const Path& p) { return join(p, "|"); }

json path_array(const Path& p) { return json(p); }

}  // namespace

json to_json(const std::vector<RankedPath>& paths) {
  json arr = json::array();
  for (const auto& [p, n] : paths) {
    arr.push_back({{"path", path_array(p)}, {"count", n}, {"length", path_length(p)}});
  }
  return arr;
}

json to_json(const CorpusStats& st) {
  json hist = json::object();
  for (const auto& [len, n] : st.length_histogram) hist[std::to_string(len)] = n;
  json top = json::object();
  for (const auto& [len, paths] : st.top_by_length) top[std::to_string(len)] = to_json(paths);
  return {{"total", st.total},
          {"distinct_trajectories", st.distinct_trajectories},
          {"label_count", st.label_count},
          {"length_histogram", hist},
          {"zero_length_fraction", number(st.zero_length_fraction)},
          {"top_by_length", top}};
}

json to_json(const HigherOrderNetwork& net) {
  json nodes = json::array();
  for (const auto& n : net.nodes()) nodes.push_back(key(n));
  json edges = json::array();
  for (const auto& [e, w] : net.edges()) {
    edges.push_back({{"from", key(e.first)}, {"to", key(e.second)}, {"weight", w}});
  }
  return {{"order", net.order()}, {"nodes", nodes}, {"edges", edges}};
}

json to_json(const TopologyReport& r) {
  return {{"node_count", r.node_count},
          {"edge_count", r.edge_count},
          {"component_count", r.component_count},
          {"largest_component_size", r.largest_component_size},
          {"largest_component_fraction", number(r.largest_component_fraction)},
          {"diameter", r.diameter ? json(*r.diameter) : json(nullptr)},
          {"average_shortest_path", number(r.average_shortest_path)},
          {"size2_component_count", r.size2_component_count},
          {"directed", r.directed}};
}

json to_json(const OrderTestResult& r) {
  json steps = json::array();
  for (const auto& s : r.steps) {
    steps.push_back({{"K", s.order},
                     {"logL", number(s.log_likelihood)},
                     {"df", s.degrees_of_freedom},
                     {"lr", number(s.lr)},
                     {"p", number(s.p_value)},
                     {"rejected", s.rejected}});
  }
  return {{"k_opt", r.k_opt}, {"k_max", r.k_max}, {"alpha", number(r.alpha)}, {"steps", steps}};
}

json to_json(const MixingReport& r) {
  json per_edge = json::object();
  for (const auto& [e, m] : r.per_edge) {
    per_edge[key(e)] = {{"pi", number(m.pi)},
                        {"h_emp", number(m.h_empirical)},
                        {"h_markov", number(m.h_markovian)}};
  }
  // lambda > 1: a first-order model overestimates mixing; < 1: underestimates
  json bias = nullptr;
  if (r.lambda) bias = *r.lambda > 1.0 ? "overestimates" : *r.lambda < 1.0 ? "underestimates" : "exact";
  return {{"H_emp", number(r.h_empirical)},
          {"H_markov", number(r.h_markovian)},
          {"lambda", number(r.lambda)},
          {"first_order_mixing", bias},
          {"degenerate", r.degenerate},
          {"per_edge", per_edge}};
}

namespace {

json to_json(const KlComparison& c) {
  return {{"kl_emp_1", number(c.kl_first)},
          {"kl_emp_2", number(c.kl_second)},
          {"ratio", number(c.ratio)}};
}

}  // namespace

json to_json(const KlReport& r) {
  return {{"all", to_json(r.all)},
          {"type_I", to_json(r.returns)},
          {"type_II", to_json(r.onward)},
          {"odds_ratio", {{"emp", number(r.odds_empirical)},
                          {"p1", number(r.odds_first)},
                          {"p2", number(r.odds_second)}}},
          {"motif_count", r.motif_count}};
}

json to_json(const std::vector<MotifRow>& rows) {
  json arr = json::array();
  for (const auto& row : rows) {
    arr.push_back({{"motif", key(row.motif)},
                   {"class", std::string(to_string(row.cls))},
                   {"p_emp", number(row.p_empirical)},
                   {"p_1", number(row.p_first)},
                   {"p_2", number(row.p_second)}});
  }
  return arr;
}

namespace {

json step_columns(const DiffusionTrace& tr) {
  json steps = json::array();
  for (const auto& dist : tr.steps) {
    json col = json::array();
    for (const auto& [node, p] : dist) col.push_back({{"node", node}, {"p", number(p)}});
    steps.push_back(col);
  }
  return steps;
}

json flow_list(const DiffusionTrace& tr) {
  json flows = json::array();
  for (std::size_t t = 0; t < tr.flows.size(); ++t) {
    for (const auto& [e, mass] : tr.flows[t]) {
      flows.push_back({{"t", t + 1},
                       {"from", e.first},
                       {"to", e.second},
                       {"mass", number(mass)},
                       {"return", e.second == tr.source}});
    }
  }
  return flows;
}

}  // namespace

json to_json(const DiffusionTrace& tr) {
  json terminated = json::array();
  for (double x : tr.terminated) terminated.push_back(number(x));
  return {{"source", tr.source},
          {"mode", tr.mode == DiffusionMode::kEmpirical ? "empirical" : "markovian"},
          {"steps", step_columns(tr)},
          {"flows", flow_list(tr)},
          {"terminated", terminated}};
}

json alluvial_export(const DiffusionTrace& empirical, const DiffusionTrace& markovian) {
  if (empirical.source != markovian.source) throw Error("alluvial traces have different sources");
  if (empirical.step_count() != markovian.step_count()) {
    throw Error("alluvial traces have different step counts");
  }
  json e = to_json(empirical);
  json m = to_json(markovian);
  e.erase("source");
  m.erase("source");
  return {{"source", empirical.source}, {"empirical", e}, {"markovian", m}};
}

std::string to_dot(const HigherOrderNetwork& net) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"' || c == '\\') out += '\\';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream out;
  out << "digraph order" << net.order() << " {\n";
  for (const auto& n : net.nodes()) out << "  " << quote(key(n)) << ";\n";
  for (const auto& [e, w] : net.edges()) {
    out << "  " << quote(key(e.first)) << " -> " << quote(key(e.second)) << " [weight=" << w
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

void write_rank_csv(std::ostream& out, const std::vector<MotifRow>& rows) {
  auto fmt = [](double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::string(buf);
  };
  out << "motif,class,p_emp,p_1,p_2\n";
  for (const auto& r : rows) {
    out << key(r.motif) << ',' << to_string(r.cls) << ',' << fmt(r.p_empirical) << ','
        << fmt(r.p_first) << ',' << fmt(r.p_second) << '\n';
  }
}

}  // namespace trajnet::io
