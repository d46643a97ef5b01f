#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "sep3q/states.hpp"
#include "sep3q/types.hpp"

namespace sep3q {

/// A state file holds either a pure state or a density matrix:
///   {"kind": "pure",    "data": [[re, im] x8]}
///   {"kind": "density", "data": [[[re, im] x8] x8]}
using LoadedState = std::variant<PureState, DensityMatrix>;

namespace detail {

inline Complex complex_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError("state file: " + where +
                     " must be a [re, im] pair of numbers, got " + j.dump());
  return {j[0].get<double>(), j[1].get<double>()};
}

inline nlohmann::json complex_to_json(Complex v) {
  return nlohmann::json::array({v.real(), v.imag()});
}

}  // namespace detail

inline LoadedState parse_state(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.contains("data"))
    throw ParseError(
        "state file: expected an object with \"kind\" and \"data\" fields");
  if (!j["kind"].is_string())
    throw ParseError("state file: \"kind\" must be \"pure\" or \"density\"");
  const std::string kind = j["kind"].get<std::string>();
  const auto& data = j["data"];

  if (kind == "pure") {
    if (!data.is_array() || data.size() != 8)
      throw ParseError(
          "state file: pure \"data\" must be a length-8 array of [re, im] "
          "pairs");
    Amp8 amp;
    for (int i = 0; i < 8; ++i)
      amp(i) = detail::complex_from_json(data[i], "data[" + std::to_string(i) + "]");
    return pure_from_amplitudes(amp, false);
  }
  if (kind == "density") {
    if (!data.is_array() || data.size() != 8)
      throw ParseError(
          "state file: density \"data\" must be an 8x8 array of [re, im] "
          "pairs");
    Mat8 m;
    for (int r = 0; r < 8; ++r) {
      if (!data[r].is_array() || data[r].size() != 8)
        throw ParseError(
            "state file: density \"data\" must be an 8x8 array of [re, im] "
            "pairs; row " + std::to_string(r) + " has wrong shape");
      for (int c = 0; c < 8; ++c)
        m(r, c) = detail::complex_from_json(
            data[r][c], "data[" + std::to_string(r) + "][" + std::to_string(c) + "]");
    }
    return validate_density(m);
  }
  throw ParseError("state file: unknown kind \"" + kind +
                   "\", expected \"pure\" or \"density\"");
}

inline LoadedState parse_state_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("state file: not valid JSON");
  return parse_state(j);
}

inline LoadedState read_state_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path + " for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_text(buf.str());
}

inline nlohmann::json state_to_json(const PureState& psi) {
  nlohmann::json data = nlohmann::json::array();
  for (int i = 0; i < 8; ++i) data.push_back(detail::complex_to_json(psi.amp()(i)));
  return {{"kind", "pure"}, {"data", data}};
}

inline nlohmann::json state_to_json(const DensityMatrix& rho) {
  nlohmann::json data = nlohmann::json::array();
  for (int r = 0; r < 8; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (int c = 0; c < 8; ++c)
      row.push_back(detail::complex_to_json(rho.m()(r, c)));
    data.push_back(row);
  }
  return {{"kind", "density"}, {"data", data}};
}

template <typename State>
void write_state_file(const std::string& path, const State& state) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << state_to_json(state).dump(2) << '\n';
  if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace sep3q
