#pragma once

#include <map>
#include <string>
#include <vector>

#include "adsharvest/scenario.hpp"

// Reference scenarios whose element values are frozen to a text file
// ("pins") and re-checked on every run of the self-check command.  Keys are
// built from the literal checkpoint parameters, never from derived floats,
// so they match exactly across regeneration and comparison.

namespace adsh {

struct Checkpoint {
  PairKind kind;
  int eps;
  double L;
  double gap;
  double sigma;
  double dx;
  double tau0;
};

const std::vector<Checkpoint>& pinned_checkpoints();
Scenario make_scenario(const Checkpoint& c, double lambda = 0.01);
std::string checkpoint_key(const Checkpoint& c, const char* element);

using PinMap = std::map<std::string, cplx>;

// Text format: '#' comment lines, then one "key re im" triple per line,
// printed with round-trip precision.  Throws std::runtime_error on parse
// or io failure.
PinMap read_pins(const std::string& path);
void write_pins(const std::string& path, const PinMap& pins);

}  // namespace adsh
