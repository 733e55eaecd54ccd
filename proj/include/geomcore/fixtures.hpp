#pragma once

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geomcore/builders.hpp"
#include "geomcore/error.hpp"
#include "geomcore/geometry.hpp"
#include "geomcore/graph.hpp"

// Named built-in inputs, e.g. "gq22", "oa:3:5", "halved-cube:4",
// "complement:grid:3:3". Geometry fixtures carry their point graph.
namespace geomcore {

struct Fixture {
  std::string name;
  Graph graph;
  std::optional<Geometry> geometry;
};

namespace detail {

inline std::vector<std::string_view> split_colon(std::string_view s) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(':');
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) return out;
    s.remove_prefix(pos + 1);
  }
}

inline int fixture_int(std::string_view s, std::string_view name) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw PreconditionError("fixture \"" + std::string(name) + "\": \"" + std::string(s) + "\" is not an integer");
  return value;
}

inline Fixture geometry_fixture(std::string name, Geometry g) {
  Graph x = point_graph(g.structure).graph;
  return Fixture{std::move(name), std::move(x), std::move(g)};
}

}  // namespace detail

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "fano",         "sts9",           "sts15",          "gq22",        "gq24",
      "oa:K:N",       "latin4:z4",      "latin4:klein",   "petersen",    "halved-cube:N",
      "johnson:V:K",  "kneser:V:K",     "grid:P:Q",       "cycle:N",     "complete:N",
      "multipartite:PARTS:SIZE", "complement:NAME",
  };
  return names;
}

inline Fixture make_fixture(std::string_view name) {
  const std::string full(name);
  if (name.starts_with("complement:")) {
    Fixture inner = make_fixture(name.substr(11));
    return Fixture{full, complement(inner.graph), std::nullopt};
  }
  const auto parts = detail::split_colon(name);
  const auto head = parts.front();
  auto arg = [&](std::size_t i) {
    if (i >= parts.size()) throw PreconditionError("fixture \"" + full + "\": missing parameter");
    return detail::fixture_int(parts[i], name);
  };
  auto arity = [&](std::size_t n) {
    if (parts.size() != n + 1) throw PreconditionError("fixture \"" + full + "\": expected " + std::to_string(n) + " parameters");
  };

  if (head == "fano") return arity(0), detail::geometry_fixture(full, design_to_geometry(fano()));
  if (head == "sts9") return arity(0), detail::geometry_fixture(full, design_to_geometry(sts9()));
  if (head == "sts15") return arity(0), detail::geometry_fixture(full, design_to_geometry(sts15_pg32()));
  if (head == "gq22") return arity(0), detail::geometry_fixture(full, make_geometry(gq22()));
  if (head == "gq24") return arity(0), detail::geometry_fixture(full, make_geometry(gq24()));
  if (head == "oa") return arity(2), detail::geometry_fixture(full, oa_to_geometry(mols_oa(arg(1), arg(2))));
  if (head == "latin4") {
    arity(1);
    if (parts[1] == "z4") return detail::geometry_fixture(full, oa_to_geometry(latin4(Latin4::Z4)));
    if (parts[1] == "klein") return detail::geometry_fixture(full, oa_to_geometry(latin4(Latin4::KleinFour)));
    throw PreconditionError("fixture \"" + full + "\": latin4 takes z4 or klein");
  }
  if (head == "petersen") return arity(0), Fixture{full, petersen(), std::nullopt};
  if (head == "halved-cube") return arity(1), Fixture{full, halved_cube(arg(1)), std::nullopt};
  if (head == "johnson") return arity(2), Fixture{full, johnson(arg(1), arg(2)), std::nullopt};
  if (head == "kneser") return arity(2), Fixture{full, kneser(arg(1), arg(2)), std::nullopt};
  if (head == "grid") return arity(2), Fixture{full, grid(arg(1), arg(2)), std::nullopt};
  if (head == "cycle") {
    arity(1);
    if (arg(1) < 3) throw PreconditionError("fixture \"" + full + "\": cycle length must be at least 3");
    return Fixture{full, cycle_graph(arg(1)), std::nullopt};
  }
  if (head == "complete") {
    arity(1);
    if (arg(1) < 1) throw PreconditionError("fixture \"" + full + "\": order must be positive");
    return Fixture{full, complete_graph(arg(1)), std::nullopt};
  }
  if (head == "multipartite") {
    arity(2);
    if (arg(1) < 1 || arg(2) < 1) throw PreconditionError("fixture \"" + full + "\": parameters must be positive");
    return Fixture{full, complete_multipartite(arg(1), arg(2)), std::nullopt};
  }
  std::string known;
  for (const auto& n : fixture_names()) known += (known.empty() ? "" : ", ") + n;
  throw PreconditionError("unknown fixture \"" + full + "\"; known: " + known);
}

}  // namespace geomcore
