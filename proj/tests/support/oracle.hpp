#pragma once

// Brute-force reference semantics written against the public accessors
// only. Points are '0'/'1' strings, sets are std::set, and nothing here
// calls the library's own enumeration, Minkowski or reach code.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "logizono/logizono.hpp"

namespace oracle {

using Point = std::string;
using PointSet = std::set<Point>;

inline Point str(const logizono::BinaryVector& v) {
  Point s(v.dim(), '0');
  for (std::size_t i = 0; i < v.dim(); ++i) s[i] = v.test(i) ? '1' : '0';
  return s;
}

inline PointSet str(const logizono::ExplicitSet& s) {
  PointSet out;
  for (const auto& p : s.points()) out.insert(str(p));
  return out;
}

inline char bit_gate(logizono::Gate g, char a, char b) {
  const bool x = a == '1', y = b == '1';
  bool r = false;
  switch (g) {
    case logizono::Gate::Xor: r = x != y; break;
    case logizono::Gate::And: r = x && y; break;
    case logizono::Gate::Or: r = x || y; break;
    case logizono::Gate::Xnor: r = x == y; break;
    case logizono::Gate::Nand: r = !(x && y); break;
    case logizono::Gate::Nor: r = !(x || y); break;
    case logizono::Gate::Not: r = !x; break;
  }
  return r ? '1' : '0';
}

inline Point gate(logizono::Gate g, const Point& a, const Point& b) {
  if (a.size() != b.size()) throw std::logic_error("oracle: width mismatch");
  Point r(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = bit_gate(g, a[i], b[i]);
  return r;
}

inline Point negate(Point a) {
  for (auto& ch : a) ch = ch == '1' ? '0' : '1';
  return a;
}

inline void xor_into(Point& acc, const Point& v) {
  for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] == v[i] ? '0' : '1';
}

inline PointSet image(logizono::Gate g, const PointSet& a, const PointSet& b) {
  PointSet out;
  for (const auto& x : a)
    for (const auto& y : b) out.insert(gate(g, x, y));
  return out;
}

inline PointSet image_not(const PointSet& a) {
  PointSet out;
  for (const auto& x : a) out.insert(negate(x));
  return out;
}

/// Point of a polynomial logical zonotope for one assignment keyed by id.
inline Point point(const logizono::PolyLogicalZonotope& z, const std::map<std::uint64_t, bool>& alpha) {
  Point acc = str(z.center());
  for (std::size_t i = 0; i < z.generator_count(); ++i) {
    bool on = true;
    for (std::size_t k = 0; k < z.factor_count(); ++k) {
      if (z.exponents().at(k, i) && !alpha.at(z.ids()[k])) on = false;
    }
    if (on) xor_into(acc, str(z.generators().column(i)));
  }
  return acc;
}

/// Calls fn for every assignment of `ids`.
inline void for_each_assignment(const std::vector<std::uint64_t>& ids,
                                const std::function<void(const std::map<std::uint64_t, bool>&)>& fn) {
  if (ids.size() > 20) throw std::logic_error("oracle: too many factors");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << ids.size()); ++m) {
    std::map<std::uint64_t, bool> alpha;
    for (std::size_t k = 0; k < ids.size(); ++k) alpha[ids[k]] = (m >> k) & 1;
    fn(alpha);
  }
}

inline PointSet points(const logizono::PolyLogicalZonotope& z) {
  PointSet out;
  for_each_assignment(z.ids(), [&](const auto& alpha) { out.insert(point(z, alpha)); });
  return out;
}

inline PointSet points(const logizono::LogicalZonotope& z) {
  PointSet out;
  const std::size_t g = z.generator_count();
  if (g > 20) throw std::logic_error("oracle: too many generators");
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << g); ++m) {
    Point acc = str(z.center());
    for (std::size_t i = 0; i < g; ++i) {
      if ((m >> i) & 1) xor_into(acc, str(z.generators().column(i)));
    }
    out.insert(acc);
  }
  return out;
}

/// Union of the ids of several zonotopes, first-seen order.
inline std::vector<std::uint64_t> all_ids(const std::vector<logizono::PolyLogicalZonotope>& parts) {
  std::vector<std::uint64_t> ids;
  std::set<std::uint64_t> seen;
  for (const auto& p : parts)
    for (auto id : p.ids())
      if (seen.insert(id).second) ids.push_back(id);
  return ids;
}

/// Joint points of several zonotopes with shared ids taking one value.
inline PointSet joint_points(const std::vector<logizono::PolyLogicalZonotope>& parts) {
  PointSet out;
  for_each_assignment(all_ids(parts), [&](const auto& alpha) {
    Point p;
    for (const auto& z : parts) p += point(z, alpha);
    out.insert(p);
  });
  return out;
}

// ---- expressions and models ----

using Values = std::map<std::string, Point>;

inline Point eval(const logizono::Expr& e, const Values& v) {
  using namespace logizono;
  return std::visit(
      [&](const auto& n) -> Point {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          return v.at(n.next_state ? n.name + "'" : n.name);
        } else if constexpr (std::is_same_v<T, Const>) {
          return str(n.value);
        } else if constexpr (std::is_same_v<T, NotExpr>) {
          return negate(eval(*n.child, v));
        } else {
          return gate(n.gate, eval(*n.lhs, v), eval(*n.rhs, v));
        }
      },
      e.node);
}

/// Joint state vectors (state variables concatenated in declaration
/// order) reachable after each of 0..steps steps. Every update of a step
/// reads the same (x, u) sample and earlier x' values.
inline std::vector<PointSet> reach(const logizono::Model& m, std::size_t steps) {
  const auto& vars = m.variables();
  std::vector<std::vector<Point>> frontier;
  {
    std::vector<std::vector<Point>> acc{{}};
    for (auto i : m.states()) {
      std::vector<std::vector<Point>> next;
      for (const auto& a : acc)
        for (const auto& p : vars[i].initial()) {
          auto b = a;
          b.push_back(str(p));
          next.push_back(b);
        }
      acc = std::move(next);
    }
    frontier = std::move(acc);
  }
  auto joint = [](const std::vector<std::vector<Point>>& tuples) {
    PointSet s;
    for (const auto& t : tuples) {
      Point p;
      for (const auto& x : t) p += x;
      s.insert(p);
    }
    return s;
  };
  std::vector<PointSet> out{joint(frontier)};
  for (std::size_t k = 0; k < steps; ++k) {
    std::vector<std::vector<Point>> inputs{{}};
    for (auto i : m.inputs()) {
      std::vector<std::vector<Point>> next;
      for (const auto& a : inputs)
        for (const auto& p : vars[i].input_at(k)) {
          auto b = a;
          b.push_back(str(p));
          next.push_back(b);
        }
      inputs = std::move(next);
    }
    std::set<std::vector<Point>> next;
    for (const auto& x : frontier) {
      for (const auto& u : inputs) {
        Values v;
        for (std::size_t j = 0; j < m.states().size(); ++j) v[vars[m.states()[j]].name] = x[j];
        for (std::size_t j = 0; j < m.inputs().size(); ++j) v[vars[m.inputs()[j]].name] = u[j];
        for (const auto& up : m.updates()) v[vars[up.target].name + "'"] = eval(*up.expr, v);
        std::vector<Point> y;
        for (auto i : m.states()) y.push_back(v.at(vars[i].name + "'"));
        next.insert(y);
      }
    }
    frontier.assign(next.begin(), next.end());
    out.push_back(joint(frontier));
  }
  return out;
}

// ---- LFSR ----

/// Step-by-step register simulation; cells[0] is A[1].
inline std::string lfsr_stream(std::vector<int> cells, const std::vector<std::size_t>& fb,
                               const std::vector<std::size_t>& out, std::size_t count) {
  std::string s;
  for (std::size_t t = 0; t < count; ++t) {
    int o = 0;
    for (auto tap : out) o ^= cells[tap - 1];
    s += o ? '1' : '0';
    int f = 0;
    for (auto tap : fb) f ^= cells[tap - 1];
    for (std::size_t i = cells.size() - 1; i > 0; --i) cells[i] = cells[i - 1];
    cells[0] = f;
  }
  return s;
}

}  // namespace oracle
