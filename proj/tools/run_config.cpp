#include "run_config.hpp"

namespace wavepack::cli {

namespace {

template <class T>
void put(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
void get(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (!j.contains(key) || j.at(key).is_null())
    v.reset();
  else
    v = j.at(key).get<T>();
}

}  // namespace

nlohmann::json to_json(const RunConfig& c) {
  nlohmann::json j;
  j["command"] = c.command;
  j["basis"] = c.basis;
  j["alpha"] = c.alpha;
  j["x0"] = c.x0;
  j["omega"] = c.omega;
  put(j, "epsilon", c.epsilon);
  put(j, "lambda", c.lambda);
  put(j, "nmin", c.n_min);
  put(j, "nmax", c.n_max);
  j["method"] = c.method;
  put(j, "fft_size", c.fft_size);
  j["figure"] = c.figure;
  j["format"] = c.format;
  j["out"] = c.out;
  j["allow_flagged"] = c.allow_flagged;
  j["describe"] = c.describe;
  j["extended"] = c.extended;
  j["calib_c"] = c.calib_c;
  return j;
}

RunConfig config_from_json(const nlohmann::json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.basis = j.at("basis").get<std::string>();
  c.alpha = j.at("alpha").get<double>();
  c.x0 = j.at("x0").get<double>();
  c.omega = j.at("omega").get<double>();
  get(j, "epsilon", c.epsilon);
  get(j, "lambda", c.lambda);
  get(j, "nmin", c.n_min);
  get(j, "nmax", c.n_max);
  c.method = j.at("method").get<std::string>();
  get(j, "fft_size", c.fft_size);
  c.figure = j.at("figure").get<std::string>();
  c.format = j.at("format").get<std::string>();
  c.out = j.at("out").get<std::string>();
  c.allow_flagged = j.at("allow_flagged").get<bool>();
  c.describe = j.at("describe").get<bool>();
  c.extended = j.value("extended", false);
  c.calib_c = j.value("calib_c", 1.0);
  return c;
}

}  // namespace wavepack::cli
