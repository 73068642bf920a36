#ifndef PDCF_IO_HPP
#define PDCF_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdcf/chains.hpp"
#include "pdcf/operators.hpp"
#include "pdcf/partition.hpp"
#include "pdcf/rectree.hpp"
#include "pdcf/samplers.hpp"
#include "pdcf/stattest.hpp"

namespace pdcf {

using nlohmann::json;

json to_json(const MassPartition& x);
json to_json(const SetPartition& p);
json to_json(const SizeBiasedWeights& w);
json to_json(const SubordinatorResult& s);
json to_json(const FragWitness& w);
json to_json(const CoagWitness& w);
json to_json(const TestResult& r);

MassPartition mass_partition_from_json(const json& j);
SetPartition set_partition_from_json(const json& j);

// CSV rows `w1,...,wK,residual` with K fixed per file (zero padded);
// includes a header line.
void write_mass_partition_csv(std::ostream& os,
                              std::span<const MassPartition> rows);

// Parses one CSV data row (the last field is the residual).
MassPartition parse_mass_partition_row(const std::string& line);

// Reads every data row of a mass-partition CSV stream, skipping a header.
std::vector<MassPartition> read_mass_partition_csv(std::istream& is);

// Trajectory CSV: step index, K atom columns, residual.
void write_trajectory_csv(std::ostream& os, const ChainTrajectory& t);

// Tree emission formats.
void write_tree_dot(std::ostream& os, const RecursiveTree& t);
void write_tree_parents_csv(std::ostream& os, const RecursiveTree& t);
// One row per (level, vertex): the block is identified by its least element.
void write_tree_partitions_csv(std::ostream& os, const RecursiveTree& t,
                               int strip_depth);

}  // namespace pdcf

#endif
