#include "seqcert/json_io.hpp"

#include <string>

namespace seqcert {

namespace {

double require_number(const Json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number()) {
    throw ParseError("missing or non-numeric field \"" + field + "\"");
  }
  return j[field].get<double>();
}

std::string require_string(const Json& j, const std::string& field) {
  if (!j.contains(field) || !j[field].is_string()) {
    throw ParseError("missing or non-string field \"" + field + "\"");
  }
  return j[field].get<std::string>();
}

}  // namespace

Json space_to_json(const SpaceKind& space) {
  Json j;
  switch (space.kind) {
    case SpaceKind::Kind::Lp:
      j["space"] = "lp";
      j["p"] = space.p;
      break;
    case SpaceKind::Kind::C0:
      j["space"] = "c0";
      break;
    case SpaceKind::Kind::C:
      j["space"] = "c";
      break;
    case SpaceKind::Kind::Ell2Hilbert:
      j["space"] = "hilbert";
      break;
  }
  return j;
}

SpaceKind space_from_json(const Json& j) {
  const std::string name = require_string(j, "space");
  if (name == "lp") return SpaceKind::lp(require_number(j, "p"));
  if (name == "c0") return SpaceKind::c0();
  if (name == "c") return SpaceKind::c();
  if (name == "hilbert") return SpaceKind::hilbert();
  throw ParseError("field \"space\": unknown space \"" + name + "\"");
}

Json tail_to_json(const TailModel& tail) {
  Json j;
  switch (tail.type) {
    case TailModel::Type::Zero:
      j["type"] = "zero";
      break;
    case TailModel::Type::Geometric:
      j["type"] = "geometric";
      j["c"] = tail.c;
      j["r"] = tail.r;
      break;
    case TailModel::Type::Power:
      j["type"] = "power";
      j["c"] = tail.c;
      j["s"] = tail.s;
      break;
  }
  return j;
}

TailModel tail_from_json(const Json& j) {
  const std::string type = require_string(j, "type");
  if (type == "zero") return TailModel::zero();
  if (type == "geometric") {
    return TailModel::geometric(require_number(j, "c"), require_number(j, "r"));
  }
  if (type == "power") {
    return TailModel::power(require_number(j, "c"), require_number(j, "s"));
  }
  throw ParseError("field \"tail.type\": unknown tail model \"" + type + "\"");
}

Json element_to_json(const SeqElement& x) {
  Json j = space_to_json(x.space());
  j["prefix"] = Json::array();
  for (Index k = 0; k < x.prefix_length(); ++k) {
    j["prefix"].push_back(x.prefix()(k));
  }
  if (x.space().kind == SpaceKind::Kind::C) j["limit"] = x.limit();
  j["tail"] = tail_to_json(x.tail());
  return j;
}

SeqElement element_from_json(const Json& j) {
  const SpaceKind space = space_from_json(j);
  if (!j.contains("prefix") || !j["prefix"].is_array()) {
    throw ParseError("missing or non-array field \"prefix\"");
  }
  Vector prefix(j["prefix"].size());
  Index i = 0;
  for (const auto& v : j["prefix"]) {
    if (!v.is_number()) throw ParseError("field \"prefix\": non-numeric entry");
    prefix(i++) = v.get<double>();
  }
  double limit = 0.0;
  if (space.kind == SpaceKind::Kind::C) {
    limit = require_number(j, "limit");
  } else if (j.contains("limit") && j["limit"].get<double>() != 0.0) {
    throw ParseError("field \"limit\": only the space c carries a limit");
  }
  TailModel tail = TailModel::zero();
  if (j.contains("tail")) tail = tail_from_json(j["tail"]);
  try {
    return SeqElement(space, std::move(prefix), tail, limit);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid element: ") + e.what());
  }
}

namespace {

Json rate_to_json(const DecayRate& r) {
  Json j;
  switch (r.kind) {
    case DecayRate::Kind::Zero:
      j["type"] = "zero";
      break;
    case DecayRate::Kind::OneOverN:
      j["type"] = "one_over_n";
      break;
    case DecayRate::Kind::Geometric:
      j["type"] = "geometric";
      j["q"] = r.q;
      break;
  }
  return j;
}

DecayRate rate_from_json(const Json& j) {
  const std::string type = require_string(j, "type");
  if (type == "zero") return DecayRate::zero();
  if (type == "one_over_n") return DecayRate::one_over_n();
  if (type == "geometric") return DecayRate::geometric(require_number(j, "q"));
  throw ParseError("field \"rate.type\": unknown rate \"" + type + "\"");
}

}  // namespace

Json family_to_json(const Family& f) {
  Json j = space_to_json(f.space());
  switch (f.generator()) {
    case Family::Generator::Finite: {
      j["members"] = Json::array();
      for (const auto& m : f.stored_members()) {
        j["members"].push_back(element_to_json(m));
      }
      if (f.discrepancy()) {
        j["discrepancy"] = {{"coeff", tail_to_json(f.discrepancy()->coeff)},
                            {"rate", rate_to_json(f.discrepancy()->rate)}};
      }
      if (f.uniform_tail()) j["uniform_tail"] = tail_to_json(*f.uniform_tail());
      return j;
    }
    case Family::Generator::Constant:
      j["generator"] = "constant";
      j["params"] = {{"member", element_to_json(f.member(1))}};
      return j;
    case Family::Generator::BasisShift:
      j["generator"] = "basis_shift";
      j["params"] = {{"scale", f.scale()}};
      return j;
    case Family::Generator::Alternating:
      j["generator"] = "alternating";
      j["params"] = {{"scale", f.scale()}};
      return j;
    case Family::Generator::GeometricRamp:
      j["generator"] = "geometric_ramp";
      j["params"] = {{"a", f.ratio()}};
      return j;
    case Family::Generator::PlateauShift:
      j["generator"] = "plateau_shift";
      j["params"] = Json::object();
      return j;
  }
  throw std::logic_error("family_to_json: unknown generator");
}

Family family_from_json(const Json& j) {
  const SpaceKind space = space_from_json(j);
  if (j.contains("members")) {
    if (!j["members"].is_array() || j["members"].empty()) {
      throw ParseError("field \"members\": need a nonempty array");
    }
    std::vector<SeqElement> members;
    for (const auto& m : j["members"]) members.push_back(element_from_json(m));
    std::optional<DiscrepancyEnvelope> disc;
    if (j.contains("discrepancy")) {
      disc = DiscrepancyEnvelope{tail_from_json(j["discrepancy"].at("coeff")),
                                 rate_from_json(j["discrepancy"].at("rate"))};
    }
    std::optional<TailModel> uni;
    if (j.contains("uniform_tail")) uni = tail_from_json(j["uniform_tail"]);
    try {
      return Family::finite(space, std::move(members), disc, uni);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("invalid family: ") + e.what());
    }
  }
  const std::string gen = require_string(j, "generator");
  const Json params = j.value("params", Json::object());
  try {
    if (gen == "constant") {
      if (!params.contains("member")) {
        throw ParseError("missing field \"params.member\"");
      }
      return Family::constant(element_from_json(params["member"]));
    }
    if (gen == "basis_shift") {
      return Family::basis_shift(space, require_number(params, "scale"));
    }
    if (gen == "alternating") {
      return Family::alternating(space, require_number(params, "scale"));
    }
    if (gen == "geometric_ramp") {
      return Family::geometric_ramp(space, require_number(params, "a"));
    }
    if (gen == "plateau_shift") {
      if (space.kind != SpaceKind::Kind::C) {
        throw ParseError("field \"space\": plateau_shift lives in c");
      }
      return Family::plateau_shift();
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid family: ") + e.what());
  }
  throw ParseError("field \"generator\": unknown generator \"" + gen + "\"");
}

Json set_to_json(const SetDescriptor& s) {
  Json j = space_to_json(s.space);
  switch (s.kind) {
    case SetDescriptor::Kind::FiniteSet: {
      j["set"] = "finite";
      j["members"] = Json::array();
      for (const auto& m : s.members) j["members"].push_back(element_to_json(m));
      return j;
    }
    case SetDescriptor::Kind::HilbertCube:
      j["set"] = "hilbert_cube";
      j["envelope"] = tail_to_json(s.envelope);
      return j;
    case SetDescriptor::Kind::BasisVectors:
      j["set"] = "basis_vectors";
      j["scale"] = s.scale;
      return j;
    case SetDescriptor::Kind::Ball:
      j["set"] = "ball";
      j["radius"] = s.radius;
      return j;
  }
  throw std::logic_error("set_to_json: unknown descriptor");
}

SetDescriptor set_from_json(const Json& j) {
  const SpaceKind space = space_from_json(j);
  const std::string kind = require_string(j, "set");
  try {
    if (kind == "finite") {
      if (!j.contains("members") || !j["members"].is_array()) {
        throw ParseError("missing or non-array field \"members\"");
      }
      std::vector<SeqElement> members;
      for (const auto& m : j["members"]) {
        members.push_back(element_from_json(m));
      }
      return SetDescriptor::finite_set(space, std::move(members));
    }
    if (kind == "hilbert_cube") {
      if (!j.contains("envelope")) throw ParseError("missing field \"envelope\"");
      return SetDescriptor::hilbert_cube(space, tail_from_json(j["envelope"]));
    }
    if (kind == "basis_vectors") {
      return SetDescriptor::basis_vectors(space, require_number(j, "scale"));
    }
    if (kind == "ball") {
      return SetDescriptor::ball(space, require_number(j, "radius"));
    }
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid set: ") + e.what());
  }
  throw ParseError("field \"set\": unknown set kind \"" + kind + "\"");
}

namespace {

Json witness_to_json(const DivergenceWitness& w) {
  Json j;
  switch (w.kind) {
    case DivergenceWitness::Kind::CoordinateGap:
      j["type"] = "coordinate_gap";
      j["k"] = w.k;
      j["gap"] = w.gap;
      return j;
    case DivergenceWitness::Kind::LimitGap:
      j["type"] = "limit_gap";
      j["gap"] = w.gap;
      return j;
    case DivergenceWitness::Kind::TailLowerBound: {
      j["type"] = "tail_lower_bound";
      j["epsilon_star"] = w.eps_star;
      j["pairs"] = Json::array();
      for (const auto& p : w.pairs) {
        j["pairs"].push_back({{"K", p.K}, {"n", p.n}, {"bound", p.bound}});
      }
      return j;
    }
  }
  throw std::logic_error("witness_to_json: unknown witness kind");
}

}  // namespace

Json verdict_to_json(const Verdict& v) {
  Json j;
  switch (v.tag) {
    case Verdict::Tag::Converges: {
      j["verdict"] = "converges";
      Json cert;
      cert["k0"] = v.cert.k0;
      cert["epsilon_checked"] = v.cert.epsilon_checked;
      cert["coord_index_checked"] = v.cert.coord_index_checked;
      cert["per_epsilon"] = Json::array();
      for (const auto& e : v.cert.per_epsilon) {
        cert["per_epsilon"].push_back(
            {{"epsilon", e.epsilon}, {"k0", e.k0}, {"n", e.n}});
      }
      j["certificate"] = cert;
      return j;
    }
    case Verdict::Tag::Diverges:
      j["verdict"] = "diverges";
      j["certificate"] = {{"witness", witness_to_json(v.witness)}};
      return j;
    case Verdict::Tag::Inconclusive:
      j["verdict"] = "inconclusive";
      j["certificate"] = {{"reason", v.reason}};
      return j;
  }
  throw std::logic_error("verdict_to_json: unknown tag");
}

Json compactness_verdict_to_json(const CompactnessVerdict& v) {
  Json j;
  switch (v.tag) {
    case CompactnessVerdict::Tag::Precompact: {
      j["verdict"] = "precompact";
      Json cert;
      cert["norm_bound"] = v.cert.norm_bound;
      cert["per_epsilon"] = Json::array();
      for (const auto& e : v.cert.per_epsilon) {
        cert["per_epsilon"].push_back({{"epsilon", e.epsilon}, {"k0", e.k0}});
      }
      j["certificate"] = cert;
      return j;
    }
    case CompactnessVerdict::Tag::NotPrecompact:
      j["verdict"] = "not_precompact";
      j["certificate"] = {{"witness", witness_to_json(v.witness)},
                          {"norm_bound", v.cert.norm_bound}};
      return j;
    case CompactnessVerdict::Tag::Inconclusive:
      j["verdict"] = "inconclusive";
      j["certificate"] = {{"reason", v.reason}};
      return j;
  }
  throw std::logic_error("compactness_verdict_to_json: unknown tag");
}

}  // namespace seqcert
