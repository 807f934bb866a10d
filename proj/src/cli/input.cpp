#include <cctype>
#include <charconv>
#include <cmath>
#include <string>

#include <json.hpp>

#include "subadd/cli.hpp"

namespace subadd::cli {
namespace {

double parse_token(std::string_view tok, std::size_t line) {
  const std::string where = " on line " + std::to_string(line);
  std::string_view body = tok;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec == std::errc::result_out_of_range)
    throw InputError("value '" + std::string(tok) + "' out of range" + where);
  if (ec != std::errc() || ptr != body.data() + body.size())
    throw InputError("cannot parse '" + std::string(tok) + "' as a number" + where);
  if (!std::isfinite(value)) throw InputError("non-finite value '" + std::string(tok) + "'" + where);
  return value;
}

bool is_separator(char c) { return c == ',' || std::isspace(static_cast<unsigned char>(c)); }

}  // namespace

std::vector<double> parse_csv(std::string_view text) {
  std::vector<double> values;
  std::size_t line = 1;
  std::size_t i = 0;
  // A comma needs a value before it on the same line.
  bool field_open = true;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (is_separator(c)) {
      if (c == ',') {
        if (field_open) throw InputError("empty field on line " + std::to_string(line));
        field_open = true;
      } else if (c == '\n') {
        ++line;
        field_open = true;
      }
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !is_separator(text[i]) && text[i] != '#') ++i;
    values.push_back(parse_token(text.substr(start, i - start), line));
    field_open = false;
  }
  if (values.empty()) throw InputError("input contains no values");
  return values;
}

std::vector<double> parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (doc.is_object()) {
    if (!doc.contains("values")) throw InputError("JSON object input needs a \"values\" array");
    doc = doc.at("values");
  }
  if (!doc.is_array()) throw InputError("JSON input must be an array of numbers");
  std::vector<double> values;
  values.reserve(doc.size());
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& x = doc[i];
    if (!x.is_number())
      throw InputError("JSON element " + std::to_string(i) + " is not a number");
    const double v = x.get<double>();
    if (!std::isfinite(v)) throw InputError("non-finite JSON element " + std::to_string(i));
    values.push_back(v);
  }
  if (values.empty()) throw InputError("input contains no values");
  return values;
}

std::vector<double> parse_input(std::string_view text, std::string_view path, InputFormat format) {
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() && path.substr(path.size() - suffix.size()) == suffix;
  };
  if (format == InputFormat::automatic) {
    if (ends_with(".json")) {
      format = InputFormat::json;
    } else if (ends_with(".csv") || ends_with(".txt")) {
      format = InputFormat::csv;
    } else {
      const auto first = text.find_first_not_of(" \t\r\n");
      const bool looks_json = first != std::string_view::npos && (text[first] == '[' || text[first] == '{');
      format = looks_json ? InputFormat::json : InputFormat::csv;
    }
  }
  return format == InputFormat::json ? parse_json(text) : parse_csv(text);
}

std::string format_number(double x) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace subadd::cli
