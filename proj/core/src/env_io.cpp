#include "clic/env_io.hpp"

#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace clic {

namespace {
using nlohmann::json;
}

std::string env_spec_to_json(const EnvSpec& spec) {
  json objects = json::array();
  for (const auto& o : spec.objects) {
    json positions = json::array();
    for (Cell c : o.positions) positions.push_back({c.x, c.y});
    objects.push_back({{"id", o.id},
                       {"positions", positions},
                       {"controllable_by_agent", o.controllable_by_agent},
                       {"controllable_by_bob", o.controllable_by_bob}});
  }
  json doc = {{"grid_size", spec.grid_size},
              {"sticky_prob", spec.sticky_prob},
              {"objects", objects}};
  return doc.dump(2) + "\n";
}

EnvSpec env_spec_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid environment config: ") +
                                e.what());
  }
  EnvSpec spec;
  try {
    spec.grid_size = doc.at("grid_size").get<int>();
    spec.sticky_prob = doc.value("sticky_prob", 0.25);
    for (const auto& jo : doc.at("objects")) {
      ObjectSpec o;
      o.id = jo.at("id").get<int>();
      for (const auto& jp : jo.at("positions")) {
        if (!jp.is_array() || jp.size() != 2)
          throw std::invalid_argument("positions must be [x, y] pairs");
        o.positions.push_back({jp[0].get<int>(), jp[1].get<int>()});
      }
      o.controllable_by_agent = jo.value("controllable_by_agent", true);
      o.controllable_by_bob = jo.value("controllable_by_bob", true);
      spec.objects.push_back(std::move(o));
    }
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("invalid environment config: ") +
                                e.what());
  }
  spec.validate();
  return spec;
}

EnvSpec load_env_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open environment config: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return env_spec_from_json(text);
}

void save_env_spec(const EnvSpec& spec, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write environment config: " + path);
  out << env_spec_to_json(spec);
}

}  // namespace clic
