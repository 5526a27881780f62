#pragma once

#include <iosfwd>
#include <variant>

#include "pcl/pcl_machine.hpp"
#include "pcl/tm_machine.hpp"

namespace pcl {

// Line-oriented text snapshots of trained machines.
//
// PCL machine:            TM machine:
//   pcl                     tm
//   <n> <N>                 <n> <N>
//   <p>          \ per      <T> <s> <boost 0|1>
//   <2n states>  / clause   <2n states>   one line per clause, polarity by position
//
// Probabilities and s are written as the shortest decimal that round-trips.
// All automata of a machine share the half size N.

void write_snapshot(const PclMachine& machine, std::ostream& out);
void write_snapshot(const TmMachine& machine, std::ostream& out);

using MachineSnapshot = std::variant<PclMachine, TmMachine>;

/// Reads either kind; throws invalid_parameter on malformed input.
MachineSnapshot read_snapshot(std::istream& in);
PclMachine read_pcl_snapshot(std::istream& in);
TmMachine read_tm_snapshot(std::istream& in);

}  // namespace pcl
