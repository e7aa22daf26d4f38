#pragma once

// Hand-rolled generators for property tests. Every generator draws from a
// caller-owned engine so failures reproduce from the printed seed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "logizono/logizono.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline std::size_t below(Rng& r, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(r);
}

inline logizono::BinaryVector vec(Rng& r, std::size_t n) {
  logizono::BinaryVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, r() & 1);
  return v;
}

inline std::string bits(Rng& r, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < n; ++i) s += (r() & 1) ? '1' : '0';
  return s;
}

/// n bits, up to max_h generators, up to max_p factors whose ids are drawn
/// from `pool` (pass a shared pool to get dependent operands).
inline logizono::PolyLogicalZonotope poly(Rng& r, std::size_t n, std::size_t max_h,
                                          std::size_t max_p, std::vector<std::uint64_t> pool) {
  std::shuffle(pool.begin(), pool.end(), r);
  const std::size_t p = below(r, std::min(max_p, pool.size()) + 1);
  pool.resize(p);
  const std::size_t h = below(r, max_h + 1);
  logizono::BinaryMatrix g(n), e(p);
  for (std::size_t i = 0; i < h; ++i) {
    g.push_back(vec(r, n));
    e.push_back(vec(r, p));
  }
  return logizono::PolyLogicalZonotope(vec(r, n), std::move(g), std::move(e), std::move(pool));
}

inline logizono::LogicalZonotope logical(Rng& r, std::size_t n, std::size_t max_g) {
  logizono::BinaryMatrix g(n);
  for (std::size_t i = below(r, max_g + 1); i > 0; --i) g.push_back(vec(r, n));
  return logizono::LogicalZonotope(vec(r, n), std::move(g));
}

inline std::vector<logizono::BinaryVector> point_list(Rng& r, std::size_t n, std::size_t count) {
  std::vector<logizono::BinaryVector> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(vec(r, n));
  return v;
}

inline const char* gate_word(std::size_t k) {
  static const char* kNames[] = {"XOR", "AND", "OR", "XNOR", "NAND", "NOR"};
  return kNames[k];
}

/// Random expression text over `names`, using every syntactic form.
inline std::string expr(Rng& r, const std::vector<std::string>& names, int depth) {
  if (depth == 0 || below(r, 4) == 0) {
    if (below(r, 10) == 0) return (r() & 1) ? "1" : "0";
    return names[below(r, names.size())];
  }
  switch (below(r, 5)) {
    case 0: return "!" + expr(r, names, depth - 1);
    case 1: return "(" + expr(r, names, depth - 1) + " & " + expr(r, names, depth - 1) + ")";
    case 2: return "(" + expr(r, names, depth - 1) + " ^ " + expr(r, names, depth - 1) + ")";
    case 3: return "(" + expr(r, names, depth - 1) + " | " + expr(r, names, depth - 1) + ")";
    default:
      return std::string(gate_word(below(r, 6))) + "(" + expr(r, names, depth - 1) + ", " +
             expr(r, names, depth - 1) + ")";
  }
}

/// Model document with up to 4 one-bit states and up to 2 one-bit
/// inputs. Later updates may read earlier next-state values.
inline std::string model_json(Rng& r, int depth = 3) {
  const std::size_t ns = 1 + below(r, 4);
  const std::size_t ni = below(r, 3);
  auto set_text = [&] {
    switch (below(r, 3)) {
      case 0: return std::string("[\"0\"]");
      case 1: return std::string("[\"1\"]");
      default: return std::string("[\"0\", \"1\"]");
    }
  };
  std::string vars, updates, order;
  std::vector<std::string> visible;
  for (std::size_t i = 0; i < ni; ++i) visible.push_back("u" + std::to_string(i));
  for (std::size_t i = 0; i < ns; ++i) visible.push_back("x" + std::to_string(i));
  for (std::size_t i = 0; i < ns; ++i) {
    vars += (vars.empty() ? "" : ",") + std::string("{\"name\":\"x") + std::to_string(i) +
            "\",\"role\":\"state\",\"dim\":1,\"init\":" + set_text() + "}";
  }
  for (std::size_t i = 0; i < ni; ++i) {
    std::string per_step;
    for (int k = 0; k < 5; ++k) per_step += (k ? "," : "") + set_text();
    vars += ",{\"name\":\"u" + std::to_string(i) + "\",\"role\":\"input\",\"dim\":1,\"inputs\":[" +
            per_step + "]}";
  }
  for (std::size_t i = 0; i < ns; ++i) {
    const std::string name = "x" + std::to_string(i);
    updates += (updates.empty() ? "" : ",") + std::string("\"") + name + "\":\"" +
               expr(r, visible, depth) + "\"";
    order += (order.empty() ? "" : ",") + std::string("\"") + name + "\"";
    visible.push_back(name + "'");
  }
  return "{\"vars\":[" + vars + "],\"updates\":{" + updates + "},\"order\":[" + order + "]}";
}

}  // namespace gen
