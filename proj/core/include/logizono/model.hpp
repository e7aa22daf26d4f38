#pragma once

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "logizono/binvec.hpp"
#include "logizono/expr.hpp"

namespace logizono {

enum class VarRole { State, Input };

/// A model variable with its point sets.
///
/// States carry one set (the initial set). Inputs carry one set per step;
/// the last set repeats for all later steps, so a single set is a
/// constant input set.
struct Variable {
  std::string name;
  VarRole role = VarRole::State;
  std::size_t dim = 1;
  std::vector<std::vector<BinaryVector>> sets;

  const std::vector<BinaryVector>& initial() const { return sets.front(); }
  const std::vector<BinaryVector>& input_at(std::size_t step) const {
    return sets[std::min(step, sets.size() - 1)];
  }
};

struct Update {
  std::size_t target;  // index into Model::variables()
  ExprPtr expr;
  std::string text;
};

/// A validated logical system x(k+1) = f(x(k), u(k)).
///
/// Updates run in a fixed order; an update may read `x'` for any state
/// updated before it in that order.
class Model {
 public:
  /// Validates and builds. `order` lists state names; empty means
  /// declaration order. Throws ModelError.
  Model(std::vector<Variable> variables, std::unordered_map<std::string, std::string> updates,
        std::vector<std::string> order = {});

  const std::vector<Variable>& variables() const noexcept { return variables_; }
  const std::vector<Update>& updates() const noexcept { return updates_; }
  /// Indices of state variables in declaration order.
  const std::vector<std::size_t>& states() const noexcept { return states_; }
  const std::vector<std::size_t>& inputs() const noexcept { return inputs_; }

  std::optional<std::size_t> find(std::string_view name) const;
  const Variable& variable(std::string_view name) const;
  std::size_t state_bits() const noexcept { return state_bits_; }

 private:
  std::vector<Variable> variables_;
  std::vector<Update> updates_;
  std::vector<std::size_t> states_;
  std::vector<std::size_t> inputs_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t state_bits_ = 0;
};

/// Parses a JSON model document:
///
///   { "vars": [ {"name": "x", "role": "state", "dim": 1, "init": ["0", "1"]},
///               {"name": "u", "role": "input", "dim": 1, "inputs": ["0", "1"]} ],
///     "updates": { "x": "x ^ u" },
///     "order": ["x"] }
///
/// `inputs` is either one set of bitstrings or a list of per-step sets.
/// Throws ModelError (including for malformed JSON) or ParseError.
Model parse_model(std::string_view document);
Model load_model(const std::filesystem::path& path);

/// Inverse of parse_model, up to whitespace and key order.
std::string model_to_json(const Model& model);

}  // namespace logizono
