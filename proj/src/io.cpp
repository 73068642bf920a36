#include "pdcf/io.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace pdcf {

json to_json(const MassPartition& x) {
  return json{{"atoms", x.atoms()}, {"residual", x.residual()}};
}

json to_json(const SetPartition& p) {
  return json{{"lo", p.lo}, {"blocks", p.blocks}};
}

json to_json(const SizeBiasedWeights& w) {
  return json{{"weights", w.weights},
              {"residual", w.residual},
              {"truncated", w.truncated}};
}

json to_json(const SubordinatorResult& s) {
  json j = to_json(s.partition);
  j["subordinator"] = json{{"total_mass", s.sample.total_mass},
                           {"horizon", s.sample.horizon},
                           {"residual_mass", s.sample.residual_mass},
                           {"truncated", s.sample.truncated}};
  return j;
}

json to_json(const FragWitness& w) {
  json j;
  if (w.chosen_index)
    j["chosen_index"] = *w.chosen_index + 1;  // 1-based atom index
  else
    j["chosen_index"] = "residual";
  j["residual_hit"] = w.residual_hit;
  j["splitter"] = to_json(w.splitter);
  return j;
}

json to_json(const CoagWitness& w) {
  return json{{"b", w.b}, {"indicators", w.indicators}};
}

json to_json(const TestResult& r) {
  return json{{"name", r.name},         {"statistic", r.statistic},
              {"p_value", r.p_value},   {"threshold", r.threshold},
              {"pass", r.pass},         {"n_samples", r.n_samples}};
}

MassPartition mass_partition_from_json(const json& j) {
  return MassPartition(j.at("atoms").get<std::vector<double>>(),
                       j.at("residual").get<double>());
}

SetPartition set_partition_from_json(const json& j) {
  SetPartition p;
  p.lo = j.at("lo").get<int>();
  p.blocks = j.at("blocks").get<std::vector<std::vector<int>>>();
  p.validate();
  return p;
}

void write_mass_partition_csv(std::ostream& os,
                              std::span<const MassPartition> rows) {
  std::size_t k = 1;
  for (const auto& r : rows) k = std::max(k, r.size());
  for (std::size_t i = 1; i <= k; ++i) os << 'w' << i << ',';
  os << "residual\n";
  os.precision(17);
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < k; ++i)
      os << (i < r.size() ? r.atom(i) : 0.0) << ',';
    os << r.residual() << '\n';
  }
}

MassPartition parse_mass_partition_row(const std::string& line) {
  std::vector<double> fields;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed mass-partition field: " + tok);
    }
    if (pos == 0) throw std::invalid_argument("malformed mass-partition field: " + tok);
    fields.push_back(v);
  }
  if (fields.size() < 2)
    throw std::invalid_argument("mass-partition row needs at least one atom and a residual");
  const double residual = fields.back();
  fields.pop_back();
  return rank_normalize(fields, residual);
}

std::vector<MassPartition> read_mass_partition_csv(std::istream& is) {
  std::vector<MassPartition> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line.front() == 'w' || line.front() == '#') continue;  // header
    try {
      out.push_back(parse_mass_partition_row(line));
    } catch (const std::exception& e) {
      throw std::invalid_argument("row " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

void write_trajectory_csv(std::ostream& os, const ChainTrajectory& t) {
  std::size_t k = 1;
  for (const auto& s : t.states) k = std::max(k, s.size());
  os << "step,";
  for (std::size_t i = 1; i <= k; ++i) os << 'w' << i << ',';
  os << "residual\n";
  os.precision(17);
  for (std::size_t step = 0; step < t.states.size(); ++step) {
    os << step << ',';
    const auto& s = t.states[step];
    for (std::size_t i = 0; i < k; ++i)
      os << (i < s.size() ? s.atom(i) : 0.0) << ',';
    os << s.residual() << '\n';
  }
}

void write_tree_dot(std::ostream& os, const RecursiveTree& t) {
  os << "digraph recursive_tree {\n";
  for (int v = 1; v <= t.n(); ++v)
    os << "  " << t.parent(v) << " -> " << v << ";\n";
  os << "}\n";
}

void write_tree_parents_csv(std::ostream& os, const RecursiveTree& t) {
  os << "vertex,parent\n";
  for (int v = 1; v <= t.n(); ++v) os << v << ',' << t.parent(v) << '\n';
}

void write_tree_partitions_csv(std::ostream& os, const RecursiveTree& t,
                               int strip_depth) {
  os << "level,vertex,block\n";
  for (int i = 0; i <= strip_depth; ++i) {
    const SetPartition p = strip(t, i);
    for (const auto& b : p.blocks)
      for (int v : b) os << i << ',' << v << ',' << b.front() << '\n';
  }
}

}  // namespace pdcf
