#include "logizono/serialize.hpp"

#include "json.hpp"
#include "logizono/errors.hpp"
#include "serialize_json.hpp"

namespace logizono {

namespace detail {

using nlohmann::json;

json columns_json(const BinaryMatrix& m) {
  json a = json::array();
  for (const auto& c : m.columns()) a.push_back(c.to_string());
  return a;
}

json set_json(const SetValue& v) {
  if (const auto* p = std::get_if<PolyLogicalZonotope>(&v)) {
    return json{{"c", p->center().to_string()},
                {"G", columns_json(p->generators())},
                {"E", columns_json(p->exponents())},
                {"id", p->ids()}};
  }
  if (const auto* l = std::get_if<LogicalZonotope>(&v)) {
    return json{{"c", l->center().to_string()}, {"G", columns_json(l->generators())}};
  }
  const auto& s = std::get<ExplicitSet>(v);
  json pts = json::array();
  for (const auto& p : s.points()) pts.push_back(p.to_string());
  return json{{"dim", s.dim()}, {"points", pts}};
}

namespace {

BinaryVector bits(const json& j, const char* field) {
  if (!j.is_string()) throw ModelError(std::string("'") + field + "' must hold bitstrings");
  try {
    return BinaryVector::from_string(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ModelError(std::string("'") + field + "': " + e.what());
  }
}

BinaryMatrix matrix(const json& doc, const char* field, std::size_t rows) {
  BinaryMatrix m(rows);
  if (!doc.contains(field)) return m;
  const auto& a = doc[field];
  if (!a.is_array()) throw ModelError(std::string("'") + field + "' must be an array");
  for (const auto& c : a) {
    auto v = bits(c, field);
    if (v.dim() != rows) {
      throw ModelError(std::string("'") + field + "' column " + v.to_string() + " has " +
                       std::to_string(v.dim()) + " bits, expected " + std::to_string(rows));
    }
    m.push_back(std::move(v));
  }
  return m;
}

}  // namespace

SetValue set_from_json(const json& doc) {
  if (!doc.is_object()) throw ModelError("set document must be a JSON object");
  try {
    if (doc.contains("points")) {
      std::vector<BinaryVector> pts;
      for (const auto& p : doc["points"]) pts.push_back(bits(p, "points"));
      std::size_t dim = doc.contains("dim") ? doc["dim"].get<std::size_t>()
                                            : (pts.empty() ? 0 : pts.front().dim());
      try {
        return ExplicitSet(dim, std::move(pts));
      } catch (const DimensionError& e) {
        throw ModelError(e.what());
      }
    }
    if (!doc.contains("c")) throw ModelError("set document needs a center 'c'");
    auto c = bits(doc["c"], "c");
    auto g = matrix(doc, "G", c.dim());
    if (doc.contains("E") || doc.contains("id")) {
      std::vector<FactorId> ids;
      if (doc.contains("id")) ids = doc["id"].get<std::vector<FactorId>>();
      auto e = matrix(doc, "E", ids.size());
      try {
        return PolyLogicalZonotope(std::move(c), std::move(g), std::move(e), std::move(ids));
      } catch (const std::invalid_argument& ex) {
        throw ModelError(ex.what());
      } catch (const DimensionError& ex) {
        throw ModelError(ex.what());
      }
    }
    return LogicalZonotope(std::move(c), std::move(g));
  } catch (const json::exception& e) {
    throw ModelError(std::string("invalid set document: ") + e.what());
  }
}

}  // namespace detail

std::string to_json(const PolyLogicalZonotope& z) { return detail::set_json(z).dump(); }
std::string to_json(const LogicalZonotope& z) { return detail::set_json(z).dump(); }
std::string to_json(const ExplicitSet& s) { return detail::set_json(s).dump(); }
std::string to_json(const SetValue& v) { return detail::set_json(v).dump(); }

SetValue set_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ModelError(std::string("malformed JSON: ") + e.what());
  }
  return detail::set_from_json(doc);
}

PolyLogicalZonotope poly_from_json(std::string_view text) {
  auto v = set_from_json(text);
  if (auto* p = std::get_if<PolyLogicalZonotope>(&v)) return std::move(*p);
  if (auto* l = std::get_if<LogicalZonotope>(&v)) {
    // A logical zonotope is the poly zonotope with one private factor per generator.
    const auto h = l->generator_count();
    return PolyLogicalZonotope(l->center(), l->generators(), BinaryMatrix::identity(h),
                               unique_id(h));
  }
  throw ModelError("expected a zonotope, found an explicit point set");
}

LogicalZonotope logical_from_json(std::string_view text) {
  auto v = set_from_json(text);
  if (auto* l = std::get_if<LogicalZonotope>(&v)) return std::move(*l);
  throw ModelError("expected a logical zonotope {\"c\", \"G\"}");
}

}  // namespace logizono
