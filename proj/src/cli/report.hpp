#pragma once

#include <string>

#include <json.hpp>

#include "subadd/bounds.hpp"
#include "subadd/core.hpp"
#include "subadd/envelope.hpp"
#include "subadd/generators.hpp"
#include "subadd/interpolant.hpp"
#include "subadd/periodicity.hpp"

namespace subadd::cli {

using Json = nlohmann::ordered_json;

Json digest(const Sequence& u);
Json to_json(const Sequence& u);
Json to_json(const SubadditivityCheck& c);
Json to_json(const EnvelopeResult& env, bool with_witnesses);
Json to_json(const FeketeEstimate& est);
Json to_json(const BoundsReport& r);
Json to_json(const AuditResult& a, double step);
Json to_json(const RatioInfimum& r);
Json to_json(const PeriodicityReport& r, std::size_t worst_class);
Json to_json(const PeriodScan& scan, double max_epsilon);
Json to_json(const PartialSumProfile& p);
Json to_json(const ConstantPartition& cp);
Json to_json(const GeneratorSpec& spec);

/// Parses a generator spec object; throws InputError on unknown keys or
/// wrongly typed values.
GeneratorSpec generator_spec_from_json(const Json& j);

/// Pretty JSON with two-space indent, insertion-ordered keys and numbers
/// written by format_number. Ends with a newline.
std::string dump_json(const Json& j);

/// One "dotted.key: value" line per scalar leaf; arrays of scalars are
/// joined with ", ".
std::string dump_text(const Json& j);

}  // namespace subadd::cli
