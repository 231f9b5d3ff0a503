#pragma once

#include <string>
#include <variant>

#include "qdist/states.hpp"

namespace qdist {

// A state file holds either {"p": [...]} (classical) or
// {"dim": n, "entries": [[re, im], ...]} (quantum, row-major).
using StateFile = std::variant<ProbVector, DensityMatrix>;

// Parse and validate; `name` labels the source in error messages.
StateFile parse_state(const std::string& text, const std::string& name);
StateFile load_state(const std::string& path);

std::string state_to_json(const ProbVector& p);
std::string state_to_json(const DensityMatrix& rho);
void save_state(const std::string& path, const StateFile& state);

inline bool is_classical(const StateFile& s) { return s.index() == 0; }
inline int state_dim(const StateFile& s) {
  return is_classical(s) ? std::get<0>(s).dim() : std::get<1>(s).dim();
}

}  // namespace qdist
