#include "report.hpp"

#include <algorithm>
#include <string_view>

#include "subadd/cli.hpp"

namespace subadd::cli {
namespace {

Json numbers(std::span<const double> xs) {
  Json arr = Json::array();
  for (double x : xs) arr.push_back(x);
  return arr;
}

template <class T>
Json optional_value(const std::optional<T>& x) {
  return x ? Json(*x) : Json(nullptr);
}

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

bool inline_array(const Json& j) {
  return std::none_of(j.begin(), j.end(), [](const Json& e) {
    return e.is_object() || (e.is_array() && !inline_array(e));
  });
}

std::string scalar_text(const Json& j) {
  switch (j.type()) {
    case Json::value_t::number_float:
      return format_number(j.get<double>());
    case Json::value_t::number_unsigned:
      return std::to_string(j.get<std::uint64_t>());
    case Json::value_t::number_integer:
      return std::to_string(j.get<std::int64_t>());
    default:
      return j.dump();
  }
}

void write_json(const Json& j, std::string& out, int depth) {
  const std::string pad(2 * static_cast<std::size_t>(depth + 1), ' ');
  const std::string close_pad(2 * static_cast<std::size_t>(depth), ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    bool first = true;
    for (const auto& [key, value] : j.items()) {
      if (!first) out += ",\n";
      first = false;
      out += pad + Json(key).dump() + ": ";
      write_json(value, out, depth + 1);
    }
    out += "\n" + close_pad + "}";
  } else if (j.is_array()) {
    if (inline_array(j)) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        write_json(j[i], out, depth + 1);
      }
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ",\n";
      out += pad;
      write_json(j[i], out, depth + 1);
    }
    out += "\n" + close_pad + "]";
  } else {
    out += scalar_text(j);
  }
}

void write_text(const Json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      write_text(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array() && !std::all_of(j.begin(), j.end(), is_scalar)) {
    for (std::size_t i = 0; i < j.size(); ++i)
      write_text(j[i], prefix + "[" + std::to_string(i + 1) + "]", out);
  } else if (j.is_array()) {
    out += prefix + ": ";
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ", ";
      out += scalar_text(j[i]);
    }
    out += "\n";
  } else {
    out += prefix + ": " + (j.is_string() ? j.get<std::string>() : scalar_text(j)) + "\n";
  }
}

}  // namespace

Json digest(const Sequence& u) {
  return Json{{"length", u.size()}, {"min", u.min()}, {"max", u.max()}};
}

Json to_json(const Sequence& u) { return numbers(u.values()); }

Json to_json(const SubadditivityCheck& c) {
  Json j;
  j["subadditive"] = c.holds;
  j["violation"] = c.violation ? Json{{"m", c.violation->m}, {"n", c.violation->n}} : Json(nullptr);
  return j;
}

Json to_json(const EnvelopeResult& env, bool with_witnesses) {
  Json j;
  j["v"] = to_json(env.v);
  if (with_witnesses) {
    Json w = Json::array();
    for (const auto& p : env.witnesses) w.push_back(p.parts);
    j["witnesses"] = std::move(w);
  }
  return j;
}

Json to_json(const FeketeEstimate& est) {
  return Json{{"ratios", numbers(est.ratios)},
              {"prefix_inf", est.prefix_inf},
              {"prefix_argmin", est.prefix_argmin},
              {"last_ratio", est.last_ratio},
              {"gap", est.gap},
              {"subadditive", est.subadditive}};
}

Json to_json(const BoundsReport& r) {
  return Json{{"mean", r.mean},
              {"height", optional_value(r.height)},
              {"parity", r.parity == Parity::even ? "even" : "odd"},
              {"hh_lower", optional_value(r.hh_lower)},
              {"hh_upper", optional_value(r.hh_upper)},
              {"subadditive", r.subadditive},
              {"bracket_holds", r.subadditive && r.hh_lower ? Json(r.bracket_holds) : Json(nullptr)}};
}

Json to_json(const AuditResult& a, double step) {
  return Json{{"step", step},
              {"holds", a.holds},
              {"max_deficit", optional_value(a.max_deficit)},
              {"x", a.max_deficit ? Json(a.x) : Json(nullptr)},
              {"y", a.max_deficit ? Json(a.y) : Json(nullptr)},
              {"pairs_checked", a.pairs_checked}};
}

Json to_json(const RatioInfimum& r) { return Json{{"value", r.value}, {"argmin", r.argmin}}; }

Json to_json(const PeriodicityReport& r, std::size_t worst_class) {
  return Json{{"L", r.period},
              {"epsilon", r.epsilon},
              {"worst_class", worst_class},
              {"periodic", to_json(r.periodic)},
              {"residual", to_json(r.residual)},
              {"max_residual", r.max_residual}};
}

Json to_json(const PeriodScan& scan, double max_epsilon) {
  Json entries = Json::array();
  for (const auto& e : scan.entries) entries.push_back(Json{{"L", e.period}, {"epsilon", e.epsilon}});
  return Json{{"max_epsilon", max_epsilon},
              {"entries", std::move(entries)},
              {"best_period", optional_value(scan.best_period)}};
}

Json to_json(const PartialSumProfile& p) {
  Json profiles = Json::array();
  for (std::size_t i = 0; i < p.profiles.size(); ++i)
    profiles.push_back(Json{{"class", i + 1}, {"values", numbers(p.profiles[i])},
                            {"constant", static_cast<bool>(p.constant[i])}});
  return Json{{"L", p.period}, {"profiles", std::move(profiles)}, {"all_constant", p.all_constant}};
}

Json to_json(const ConstantPartition& cp) {
  Json pieces = Json::array();
  for (const auto& piece : cp.pieces)
    pieces.push_back(Json{{"value", piece.value},
                          {"classes", piece.classes},
                          {"indices", piece.elements.indices}});
  return Json{{"succeeded", static_cast<bool>(cp)},
              {"failing_class", optional_value(cp.failing_class)},
              {"count", cp.pieces.size()},
              {"pieces", std::move(pieces)}};
}

Json to_json(const GeneratorSpec& spec) {
  Json j{{"family", std::string(family_name(spec.family))},
         {"length", spec.length},
         {"seed", spec.seed},
         {"a", spec.a},
         {"b", spec.b},
         {"exponent", spec.exponent},
         {"period", spec.period},
         {"noise", spec.noise},
         {"low", spec.low},
         {"high", spec.high}};
  j["pattern"] = numbers(spec.pattern);
  return j;
}

GeneratorSpec generator_spec_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("generator spec must be a JSON object");
  GeneratorSpec spec;
  auto number = [](const Json& v, std::string_view key) {
    if (!v.is_number()) throw InputError("generator field '" + std::string(key) + "' must be a number");
    return v.get<double>();
  };
  auto count = [](const Json& v, std::string_view key) -> std::uint64_t {
    if (!v.is_number_unsigned())
      throw InputError("generator field '" + std::string(key) + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
  };
  bool have_family = false;
  for (const auto& [key, v] : j.items()) {
    if (key == "family") {
      if (!v.is_string()) throw InputError("generator field 'family' must be a string");
      try {
        spec.family = family_from_name(v.get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
      }
      have_family = true;
    } else if (key == "length") {
      spec.length = count(v, key);
    } else if (key == "seed") {
      spec.seed = count(v, key);
    } else if (key == "period") {
      spec.period = count(v, key);
    } else if (key == "a") {
      spec.a = number(v, key);
    } else if (key == "b") {
      spec.b = number(v, key);
    } else if (key == "exponent") {
      spec.exponent = number(v, key);
    } else if (key == "noise") {
      spec.noise = number(v, key);
    } else if (key == "low") {
      spec.low = number(v, key);
    } else if (key == "high") {
      spec.high = number(v, key);
    } else if (key == "pattern") {
      if (!v.is_array()) throw InputError("generator field 'pattern' must be an array");
      for (const auto& x : v) spec.pattern.push_back(number(x, key));
    } else {
      throw InputError("unknown generator field '" + key + "'");
    }
  }
  if (!have_family) throw InputError("generator spec needs a 'family'");
  return spec;
}

std::string dump_json(const Json& j) {
  std::string out;
  write_json(j, out, 0);
  out += "\n";
  return out;
}

std::string dump_text(const Json& j) {
  std::string out;
  write_text(j, "", out);
  return out;
}

}  // namespace subadd::cli
