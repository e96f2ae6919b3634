#include "galilei/io.hpp"

#include <map>
#include <stdexcept>

namespace galilei {

using nlohmann::json;

namespace {

const Rational* param_named(std::string_view name, const ExtensionParams& params) {
  if (name == "k") return &params.k;
  if (name == "m") return &params.m;
  if (name == "l") return &params.l;
  return nullptr;
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string()) throw std::invalid_argument(std::string("algebra file: ") + what + " must be a string");
  return j.get<std::string>();
}

}  // namespace

Rational evaluate_coefficient(std::string_view text, const ExtensionParams& params) {
  const auto star = text.find('*');
  if (star != std::string_view::npos) {
    const Rational factor = Rational::parse(text.substr(0, star));
    const Rational* p = param_named(text.substr(star + 1), params);
    if (!p) throw std::invalid_argument("coefficient: unknown parameter in '" + std::string(text) + "'");
    return factor * *p;
  }
  bool negate = false;
  std::string_view name = text;
  if (!name.empty() && name.front() == '-') {
    negate = true;
    name.remove_prefix(1);
  }
  if (const Rational* p = param_named(name, params)) return negate ? -*p : *p;
  return Rational::parse(text);
}

LoadedAlgebra algebra_from_json(const json& j) {
  if (!j.is_object() || !j.contains("basis") || !j["basis"].is_array()) {
    throw std::invalid_argument("algebra file: missing 'basis' array");
  }
  std::vector<std::string> labels;
  for (const auto& b : j["basis"]) labels.push_back(as_string(b, "basis label"));

  ExtensionParams params;
  if (j.contains("params")) {
    const auto& p = j["params"];
    if (p.contains("k")) params.k = Rational::parse(as_string(p["k"], "params.k"));
    if (p.contains("m")) params.m = Rational::parse(as_string(p["m"], "params.m"));
    if (p.contains("l")) params.l = Rational::parse(as_string(p["l"], "params.l"));
  }

  LieAlgebra shell(labels);
  const std::size_t n = labels.size();
  auto index = [&shell](const std::string& label) {
    const auto idx = shell.index_of(label);
    if (!idx) throw std::invalid_argument("algebra file: unknown label '" + label + "'");
    return *idx;
  };

  // (i, j) -> explicitly given result
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Rational>> given;
  if (j.contains("brackets")) {
    for (const auto& entry : j["brackets"]) {
      const std::size_t left = index(as_string(entry.at("left"), "bracket left"));
      const std::size_t right = index(as_string(entry.at("right"), "bracket right"));
      std::vector<Rational> result(n);
      for (const auto& [label, coeff] : entry.at("result").items()) {
        result[index(label)] += evaluate_coefficient(as_string(coeff, "bracket coefficient"), params);
      }
      if (left == right) {
        for (const auto& r : result) {
          if (!r.is_zero()) throw std::invalid_argument("algebra file: [" + labels[left] + ", " + labels[left] + "] must vanish");
        }
        continue;
      }
      auto [it, inserted] = given.try_emplace({left, right}, result);
      if (!inserted && it->second != result) {
        throw std::invalid_argument("algebra file: bracket [" + labels[left] + ", " + labels[right] + "] given twice");
      }
    }
  }

  std::vector<Rational> tensor(n * n * n);
  for (const auto& [key, result] : given) {
    const auto [a, b] = key;
    const auto reverse = given.find({b, a});
    if (reverse != given.end()) {
      for (std::size_t k = 0; k < n; ++k) {
        if (reverse->second[k] != -result[k]) {
          throw std::invalid_argument("algebra file: [" + labels[a] + ", " + labels[b] +
                                      "] and its reverse are not antisymmetric");
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      tensor[(a * n + b) * n + k] = result[k];
      tensor[(b * n + a) * n + k] = -result[k];
    }
  }

  LieAlgebra alg(labels, std::move(tensor));
  Rational defect = jacobi_defect(alg);
  return {std::move(alg), params, std::move(defect)};
}

json params_to_json(const ExtensionParams& params) {
  return {{"k", params.k.str()}, {"m", params.m.str()}, {"l", params.l.str()}};
}

json algebra_to_json(const LieAlgebra& alg, const ExtensionParams& params) {
  json brackets = json::array();
  const std::size_t n = alg.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      json result = json::object();
      for (std::size_t k = 0; k < n; ++k) {
        if (!alg.structure(i, j, k).is_zero()) result[alg.labels()[k]] = alg.structure(i, j, k).str();
      }
      if (!result.empty()) {
        brackets.push_back({{"left", alg.labels()[i]}, {"right", alg.labels()[j]}, {"result", result}});
      }
    }
  }
  return {{"basis", alg.labels()}, {"brackets", brackets}, {"params", params_to_json(params)}};
}

json nopoly_to_json(const NOPoly& p) {
  json out = json::object();
  for (const auto& [m, c] : p.terms()) out[m.key()] = c.str();
  return out;
}

NOPoly nopoly_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("NOPoly json: expected an object");
  NOPoly p;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw std::invalid_argument("NOPoly json: coefficients must be strings");
    p.add_term(Monomial::from_key(key), Rational::parse(value.get<std::string>()));
  }
  return p;
}

json element_to_json(const GroupElement& g) {
  return {{"phase", g.phase}, {"tau", g.tau}, {"u", {g.u[0], g.u[1]}}, {"v", {g.v[0], g.v[1]}}, {"theta", g.theta}};
}

GroupElement element_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("element json: expected an object");
  auto scalar = [&j](const char* key) {
    if (!j.contains(key)) return 0.0;
    if (!j[key].is_number()) throw std::invalid_argument(std::string("element json: '") + key + "' must be a number");
    return j[key].get<double>();
  };
  auto pair = [&j](const char* key) {
    std::array<double, 2> out{};
    if (!j.contains(key)) return out;
    const auto& a = j[key];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
      throw std::invalid_argument(std::string("element json: '") + key + "' must be [number, number]");
    }
    out = {a[0].get<double>(), a[1].get<double>()};
    return out;
  };
  GroupElement g;
  g.phase = scalar("phase");
  g.tau = scalar("tau");
  g.u = pair("u");
  g.v = pair("v");
  g.theta = scalar("theta");
  return g;
}

}  // namespace galilei
