#include "logizono/model.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "logizono/errors.hpp"

namespace logizono {

namespace {

using nlohmann::json;

BinaryVector parse_bits(const std::string& text, std::size_t dim, const std::string& where) {
  if (text.empty()) throw ModelError(where + ": empty bitstring");
  BinaryVector v;
  try {
    v = BinaryVector::from_string(text);
  } catch (const std::invalid_argument&) {
    throw ModelError(where + ": '" + text + "' is not a bitstring");
  }
  if (v.dim() != dim) {
    throw ModelError(where + ": '" + text + "' has " + std::to_string(v.dim()) +
                     " bits, expected " + std::to_string(dim));
  }
  return v;
}

std::vector<BinaryVector> parse_set(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) throw ModelError(where + ": expected an array of bitstrings");
  if (j.empty()) throw ModelError(where + ": empty set");
  std::vector<BinaryVector> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw ModelError(where + ": expected a bitstring");
    out.push_back(parse_bits(item.get<std::string>(), dim, where));
  }
  return out;
}

// Infers the width of `e`, checking every gate's operands agree.
std::size_t infer_dim(const Expr& e, const std::vector<Variable>& vars,
                      const std::unordered_map<std::string, std::size_t>& index,
                      const std::string& where) {
  return std::visit(
      [&](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          return vars[index.at(n.name)].dim;
        } else if constexpr (std::is_same_v<T, Const>) {
          return n.value.dim();
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          return infer_dim(*n.child, vars, index, where);
        } else {
          const auto l = infer_dim(*n.lhs, vars, index, where);
          const auto r = infer_dim(*n.rhs, vars, index, where);
          if (l != r) {
            throw ModelError(where + ": dimension mismatch in " +
                             std::string(gate_name(n.gate)) + " (" + std::to_string(l) +
                             " vs " + std::to_string(r) + " bits)");
          }
          return l;
        }
      },
      e.node);
}

}  // namespace

Model::Model(std::vector<Variable> variables, std::unordered_map<std::string, std::string> updates,
             std::vector<std::string> order)
    : variables_(std::move(variables)) {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (v.name.empty()) throw ModelError("variable with empty name");
    if (!index_.emplace(v.name, i).second) throw ModelError("duplicate variable '" + v.name + "'");
    if (v.dim == 0) throw ModelError("variable '" + v.name + "' has dimension 0");
    if (v.sets.empty()) throw ModelError("variable '" + v.name + "' has no set");
    if (v.role == VarRole::State && v.sets.size() != 1) {
      throw ModelError("state '" + v.name + "' must have exactly one initial set");
    }
    for (const auto& s : v.sets) {
      if (s.empty()) throw ModelError("variable '" + v.name + "' has an empty set");
      for (const auto& p : s) {
        if (p.dim() != v.dim) {
          throw ModelError("variable '" + v.name + "': point " + p.to_string() + " has " +
                           std::to_string(p.dim()) + " bits, expected " +
                           std::to_string(v.dim));
        }
      }
    }
    if (v.role == VarRole::State) {
      states_.push_back(i);
      state_bits_ += v.dim;
    } else {
      inputs_.push_back(i);
    }
  }
  if (states_.empty()) throw ModelError("model has no state variables");

  for (const auto& [name, text] : updates) {
    auto it = index_.find(name);
    if (it == index_.end()) throw ModelError("update for undeclared variable '" + name + "'");
    if (variables_[it->second].role != VarRole::State) {
      throw ModelError("update for input variable '" + name + "'");
    }
  }

  if (order.empty()) {
    for (auto s : states_) order.push_back(variables_[s].name);
  }
  std::unordered_set<std::string> seen;
  for (const auto& name : order) {
    auto it = index_.find(name);
    if (it == index_.end() || variables_[it->second].role != VarRole::State) {
      throw ModelError("order lists '" + name + "', which is not a state variable");
    }
    if (!seen.insert(name).second) throw ModelError("order lists '" + name + "' twice");
  }
  for (auto s : states_) {
    const auto& name = variables_[s].name;
    if (!updates.contains(name)) throw ModelError("missing update for state '" + name + "'");
    if (!seen.contains(name)) throw ModelError("order omits state '" + name + "'");
  }

  std::unordered_set<std::string> done;
  for (const auto& name : order) {
    const std::string& text = updates.at(name);
    const std::string where = "update for '" + name + "'";
    ExprPtr expr;
    try {
      expr = parse_expr(text);
    } catch (const ParseError& e) {
      throw ParseError(where + ": " + e.what(), e.column());
    }
    for (const auto& ref : referenced_vars(*expr)) {
      auto it = index_.find(ref.name);
      if (it == index_.end()) {
        throw ModelError(where + ": undeclared variable '" + ref.name + "'");
      }
      if (ref.next_state) {
        if (variables_[it->second].role != VarRole::State) {
          throw ModelError(where + ": input '" + ref.name + "' cannot be primed");
        }
        if (!done.contains(ref.name)) {
          throw ModelError(where + ": '" + ref.name +
                           "'' refers to a state not yet updated in this step");
        }
      }
    }
    const std::size_t target = index_.at(name);
    const std::size_t width = infer_dim(*expr, variables_, index_, where);
    if (width != variables_[target].dim) {
      throw ModelError(where + ": expression has " + std::to_string(width) +
                       " bits, variable has " + std::to_string(variables_[target].dim));
    }
    updates_.push_back({target, std::move(expr), text});
    done.insert(name);
  }
}

std::optional<std::size_t> Model::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Variable& Model::variable(std::string_view name) const {
  auto i = find(name);
  if (!i) throw ModelError("no variable '" + std::string(name) + "'");
  return variables_[*i];
}

Model parse_model(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ModelError("model document must be a JSON object");
    if (!doc.contains("vars") || !doc["vars"].is_array()) {
      throw ModelError("model document needs a 'vars' array");
    }
    std::vector<Variable> vars;
    for (const auto& jv : doc["vars"]) {
      Variable v;
      v.name = jv.at("name").get<std::string>();
      const std::string where = "variable '" + v.name + "'";
      const auto role = jv.value("role", std::string("state"));
      if (role == "state") {
        v.role = VarRole::State;
      } else if (role == "input") {
        v.role = VarRole::Input;
      } else {
        throw ModelError(where + ": unknown role '" + role + "'");
      }
      const auto dim = jv.value("dim", 1);
      if (dim <= 0) throw ModelError(where + ": dim must be positive");
      v.dim = static_cast<std::size_t>(dim);
      if (v.role == VarRole::State) {
        if (!jv.contains("init")) throw ModelError(where + ": missing 'init'");
        v.sets.push_back(parse_set(jv["init"], v.dim, where));
      } else {
        if (!jv.contains("inputs")) throw ModelError(where + ": missing 'inputs'");
        const auto& in = jv["inputs"];
        if (in.is_array() && !in.empty() && in.front().is_array()) {
          for (std::size_t k = 0; k < in.size(); ++k) {
            v.sets.push_back(parse_set(in[k], v.dim, where + " step " + std::to_string(k)));
          }
        } else {
          v.sets.push_back(parse_set(in, v.dim, where));
        }
      }
      vars.push_back(std::move(v));
    }
    std::unordered_map<std::string, std::string> updates;
    if (doc.contains("updates")) {
      if (!doc["updates"].is_object()) throw ModelError("'updates' must be an object");
      for (const auto& [name, text] : doc["updates"].items()) {
        updates.emplace(name, text.get<std::string>());
      }
    }
    std::vector<std::string> order;
    if (doc.contains("order")) order = doc["order"].get<std::vector<std::string>>();
    return Model(std::move(vars), std::move(updates), std::move(order));
  } catch (const json::exception& e) {
    throw ModelError(std::string("invalid model document: ") + e.what());
  }
}

Model load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ModelError("cannot open model file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

std::string model_to_json(const Model& model) {
  json doc;
  doc["vars"] = json::array();
  for (const auto& v : model.variables()) {
    json jv{{"name", v.name}, {"role", v.role == VarRole::State ? "state" : "input"},
            {"dim", v.dim}};
    auto set_json = [](const std::vector<BinaryVector>& s) {
      json a = json::array();
      for (const auto& p : s) a.push_back(p.to_string());
      return a;
    };
    if (v.role == VarRole::State) {
      jv["init"] = set_json(v.initial());
    } else if (v.sets.size() == 1) {
      jv["inputs"] = set_json(v.sets.front());
    } else {
      json steps = json::array();
      for (const auto& s : v.sets) steps.push_back(set_json(s));
      jv["inputs"] = steps;
    }
    doc["vars"].push_back(std::move(jv));
  }
  json updates = json::object();
  json order = json::array();
  for (const auto& u : model.updates()) {
    const auto& name = model.variables()[u.target].name;
    updates[name] = u.text;
    order.push_back(name);
  }
  doc["updates"] = updates;
  doc["order"] = order;
  return doc.dump(2);
}

}  // namespace logizono
