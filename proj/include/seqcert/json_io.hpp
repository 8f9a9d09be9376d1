#pragma once

#include <json.hpp>

#include "seqcert/compactness.hpp"
#include "seqcert/convergence.hpp"

namespace seqcert {

using Json = nlohmann::json;

/// Raised on malformed or inconsistent input documents; the message names
/// the failing field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json space_to_json(const SpaceKind& space);
SpaceKind space_from_json(const Json& j);

Json tail_to_json(const TailModel& tail);
TailModel tail_from_json(const Json& j);

Json element_to_json(const SeqElement& x);
SeqElement element_from_json(const Json& j);

Json family_to_json(const Family& f);
Family family_from_json(const Json& j);

Json set_to_json(const SetDescriptor& s);
SetDescriptor set_from_json(const Json& j);

Json verdict_to_json(const Verdict& v);
Json compactness_verdict_to_json(const CompactnessVerdict& v);

}  // namespace seqcert
