#include "logizono/cases.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace logizono {

namespace {

Variable one_bit(std::string name, VarRole role, std::initializer_list<const char*> points) {
  Variable v;
  v.name = std::move(name);
  v.role = role;
  v.dim = 1;
  std::vector<BinaryVector> set;
  for (const char* p : points) set.push_back(BinaryVector::from_string(p));
  v.sets.push_back(std::move(set));
  return v;
}

std::vector<BinaryVector> two_values(std::mt19937_64& rng, std::size_t dim) {
  const std::uint64_t mask = (std::uint64_t{1} << dim) - 1;
  const auto a = rng() & mask;
  auto b = rng() & mask;
  while (b == a) b = rng() & mask;
  return {BinaryVector::from_word(a, dim), BinaryVector::from_word(b, dim)};
}

}  // namespace

Model intersection_model() {
  const auto state = VarRole::State;
  const auto input = VarRole::Input;
  std::vector<Variable> vars{
      one_bit("p1", state, {"1"}),      one_bit("p2", state, {"0", "1"}),
      one_bit("p3", state, {"0"}),      one_bit("p4", state, {"0", "1"}),
      one_bit("c1", state, {"1"}),      one_bit("c2", state, {"0", "1"}),
      one_bit("c3", state, {"0"}),      one_bit("c4", state, {"0", "1"}),
      one_bit("up1", input, {"0", "1"}), one_bit("up2", input, {"0"}),
      one_bit("up3", input, {"0", "1"}), one_bit("up4", input, {"0"}),
      one_bit("uc1", input, {"0", "1"}), one_bit("uc2", input, {"0", "1"}),
      one_bit("uc3", input, {"0", "1"}), one_bit("uc4", input, {"0", "1"}),
  };
  std::unordered_map<std::string, std::string> updates;
  for (int i = 1; i <= 4; ++i) {
    const auto n = std::to_string(i);
    updates["p" + n] = "up" + n + " & !p" + n + " & !c" + n;
    updates["c" + n] = "!p" + n + "' & (uc" + n + " | (!p" + n + " & p" + n + "'))";
  }
  return Model(std::move(vars), std::move(updates));
}

Model boolean10_model(std::uint64_t seed, std::size_t input_steps) {
  constexpr std::size_t kDim = 10;
  std::mt19937_64 rng(seed);
  std::vector<Variable> vars;
  for (const char* name : {"B1", "B2", "B3"}) {
    Variable v;
    v.name = name;
    v.role = VarRole::State;
    v.dim = kDim;
    v.sets.push_back(two_values(rng, kDim));
    vars.push_back(std::move(v));
  }
  for (const char* name : {"U1", "U2", "U3"}) {
    Variable v;
    v.name = name;
    v.role = VarRole::Input;
    v.dim = kDim;
    vars.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < std::max<std::size_t>(input_steps, 1); ++k) {
    for (std::size_t i = 3; i < 6; ++i) vars[i].sets.push_back(two_values(rng, kDim));
  }
  std::unordered_map<std::string, std::string> updates{
      {"B1", "U1 | XNOR(B2, B1)"},
      {"B2", "XNOR(B2, B1 & U2)"},
      {"B3", "NAND(B3, XNOR(U2, U3))"},
  };
  return Model(std::move(vars), std::move(updates));
}

}  // namespace logizono
