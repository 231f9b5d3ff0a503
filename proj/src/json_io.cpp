#include "qdist/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace qdist {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& name, const std::string& what) {
  throw std::runtime_error(name + ": " + what);
}

ProbVector parse_classical(const json& j, const std::string& name) {
  const json& arr = j.at("p");
  if (!arr.is_array() || arr.empty()) fail(name, "field \"p\" must be a nonempty array");
  std::vector<double> p;
  p.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (!arr[i].is_number()) fail(name, "p[" + std::to_string(i) + "] is not a number");
    p.push_back(arr[i].get<double>());
  }
  ProbVector out(std::move(p));
  try {
    out.validate();
  } catch (const std::exception& e) {
    fail(name, e.what());
  }
  return out;
}

DensityMatrix parse_quantum(const json& j, const std::string& name) {
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    fail(name, "field \"dim\" must be an integer");
  const int n = j.at("dim").get<int>();
  if (n < 1) fail(name, "dim must be positive");
  const json& arr = j.at("entries");
  if (!arr.is_array() || arr.size() != static_cast<std::size_t>(n) * n)
    fail(name, "field \"entries\" must be a row-major array of dim*dim [re, im] pairs");
  CMat m(n);
  for (std::size_t idx = 0; idx < arr.size(); ++idx) {
    const json& pair = arr[idx];
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      fail(name, "entries[" + std::to_string(idx) + "] is not an [re, im] pair");
    m(static_cast<int>(idx) / n, static_cast<int>(idx) % n) =
        cplx(pair[0].get<double>(), pair[1].get<double>());
  }
  DensityMatrix out(std::move(m));
  try {
    out.validate();
  } catch (const std::exception& e) {
    fail(name, e.what());
  }
  return out;
}

}  // namespace

StateFile parse_state(const std::string& text, const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(name, e.what());
  }
  if (!j.is_object()) fail(name, "top level must be an object");
  if (j.contains("p")) return parse_classical(j, name);
  if (j.contains("entries")) return parse_quantum(j, name);
  fail(name, "expected a \"p\" array (classical) or \"dim\"/\"entries\" (quantum)");
}

StateFile load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_state(ss.str(), path);
}

std::string state_to_json(const ProbVector& p) {
  json j;
  j["p"] = p.p;
  return j.dump();
}

std::string state_to_json(const DensityMatrix& rho) {
  json j;
  j["dim"] = rho.dim();
  json entries = json::array();
  for (int i = 0; i < rho.dim(); ++i)
    for (int k = 0; k < rho.dim(); ++k)
      entries.push_back({rho.mat(i, k).real(), rho.mat(i, k).imag()});
  j["entries"] = std::move(entries);
  return j.dump();
}

void save_state(const std::string& path, const StateFile& state) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << (is_classical(state) ? state_to_json(std::get<0>(state))
                              : state_to_json(std::get<1>(state)))
      << "\n";
}

}  // namespace qdist
