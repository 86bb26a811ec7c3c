#include "core/json_io.hpp"

#include <json.hpp>

#include "core/error.hpp"

namespace gblx {

using json = nlohmann::ordered_json;

namespace {

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::io, "not valid JSON");
  return j;
}

table2 read_matrix(const json& j, const char* key, size_t n) {
  if (!j.contains(key)) fail(errc::io, std::string("missing '") + key + "'");
  const json& m = j.at(key);
  if (!m.is_array() || m.size() != n)
    fail(errc::io, std::string("'") + key + "' must be an array of " + std::to_string(n) +
                       " rows");
  table2 out;
  out.reserve(n * n);
  for (const json& row : m) {
    if (!row.is_array() || row.size() != n)
      fail(errc::io, std::string("'") + key + "' rows must have " + std::to_string(n) +
                         " entries");
    for (const json& v : row) {
      if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() >= (long)n)
        fail(errc::io, std::string("'") + key + "' entry out of range");
      out.push_back((uint16_t)v.get<long>());
    }
  }
  return out;
}

json write_matrix(const table2& t, size_t n) {
  json m = json::array();
  for (size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (size_t j = 0; j < n; ++j) row.push_back((int)t[i * n + j]);
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace

finite_algebra algebra_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail(errc::io, "algebra file must be a JSON object");

  finite_algebra a;
  if (j.contains("name")) {
    if (!j["name"].is_string()) fail(errc::io, "'name' must be a string");
    a.name = j["name"].get<std::string>();
  }
  if (!j.contains("carrier") || !j["carrier"].is_array() || j["carrier"].empty())
    fail(errc::io, "'carrier' must be a nonempty array of names");
  for (const json& e : j["carrier"]) {
    if (!e.is_string()) fail(errc::io, "'carrier' entries must be strings");
    a.carrier.push_back(e.get<std::string>());
  }
  const size_t n = a.carrier.size();
  if (n > 65535) fail(errc::io, "carrier too large");

  a.meet = read_matrix(j, "meet", n);
  a.join = read_matrix(j, "join", n);
  a.mult = read_matrix(j, "mult", n);

  auto read_index = [&](const char* key) -> idx {
    if (!j.contains(key) || !j[key].is_number_integer())
      fail(errc::io, std::string("missing integer '") + key + "'");
    long v = j[key].get<long>();
    if (v < 0 || v >= (long)n) fail(errc::io, std::string("'") + key + "' out of range");
    return (idx)v;
  };
  a.zero = read_index("zero");
  a.one = read_index("one");

  if (j.contains("modals")) {
    if (!j["modals"].is_object()) fail(errc::io, "'modals' must be an object");
    for (auto it = j["modals"].begin(); it != j["modals"].end(); ++it) {
      const json& arr = it.value();
      if (!arr.is_array() || arr.size() != n)
        fail(errc::io, "modal '" + it.key() + "' must have " + std::to_string(n) + " entries");
      modal_op op{it.key(), {}};
      for (const json& v : arr) {
        if (!v.is_number_integer() || v.get<long>() < 0 || v.get<long>() >= (long)n)
          fail(errc::io, "modal '" + it.key() + "' entry out of range");
        op.map.push_back((uint16_t)v.get<long>());
      }
      a.modals.push_back(std::move(op));
    }
  }

  if (j.contains("impl"))
    a.impl = read_matrix(j, "impl", n);
  else
    a.impl = derive_residuum(a);

  a.validate_shape();
  return a;
}

std::string algebra_to_json(const finite_algebra& a) {
  const size_t n = a.carrier.size();
  json j;
  j["name"] = a.name;
  j["carrier"] = a.carrier;
  j["meet"] = write_matrix(a.meet, n);
  j["join"] = write_matrix(a.join, n);
  j["mult"] = write_matrix(a.mult, n);
  j["impl"] = write_matrix(a.impl, n);
  j["zero"] = a.zero;
  j["one"] = a.one;
  json mods = json::object();
  for (const auto& m : a.modals) {
    json arr = json::array();
    for (auto v : m.map) arr.push_back((int)v);
    mods[m.name] = std::move(arr);
  }
  j["modals"] = std::move(mods);
  return j.dump(2);
}

finite_poset poset_from_json(const std::string& text) {
  json j = parse_text(text);
  if (!j.is_object()) fail(errc::io, "poset file must be a JSON object");
  if (!j.contains("elements") || !j["elements"].is_array() || j["elements"].empty())
    fail(errc::io, "'elements' must be a nonempty array of names");
  std::vector<std::string> elems;
  for (const json& e : j["elements"]) {
    if (!e.is_string()) fail(errc::io, "'elements' entries must be strings");
    elems.push_back(e.get<std::string>());
  }
  std::vector<std::pair<int, int>> pairs;
  if (j.contains("lt")) {
    if (!j["lt"].is_array()) fail(errc::io, "'lt' must be an array of index pairs");
    for (const json& pr : j["lt"]) {
      if (!pr.is_array() || pr.size() != 2 || !pr[0].is_number_integer() ||
          !pr[1].is_number_integer())
        fail(errc::io, "'lt' entries must be [i, j] index pairs");
      pairs.emplace_back(pr[0].get<int>(), pr[1].get<int>());
    }
  }
  std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "";
  return finite_poset::make(std::move(name), std::move(elems), pairs);
}

std::string poset_to_json(const finite_poset& p) {
  json j;
  if (!p.name.empty()) j["name"] = p.name;
  j["elements"] = p.elements;
  json lt = json::array();
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (p.less(x, y)) lt.push_back(json::array({x, y}));
  j["lt"] = std::move(lt);
  return j.dump(2);
}

}  // namespace gblx
