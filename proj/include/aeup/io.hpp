#pragma once

#include <filesystem>
#include <string>

#include "aeup/bounds.hpp"
#include "aeup/energy.hpp"
#include "aeup/gowers.hpp"
#include "aeup/recovery.hpp"
#include "json.hpp"

namespace aeup {

using Json = nlohmann::json;

// Set files: {"N": 5, "d": 2, "points": [[0,0],[1,2]]}. The two-element form
// [{"N": 5, "d": 2}, [[0,0],[1,2]]] is also accepted; for d = 1 a point may
// be written as a bare integer.
SupportSet set_from_json(const Json& j);
Json set_to_json(const SupportSet& s);

// Signal files: {"N", "d", "convention", "domain", "values": [[re, im], ...]}.
// "convention" is {"normalization": "unitary"|"analyst",
// "exponent_sign": "minus-forward"|"plus-forward"} or one of the shorthand
// strings "unitary" / "analyst" (minus-forward). "domain" defaults to "time".
Signal signal_from_json(const Json& j);
Json signal_to_json(const Signal& f);

Convention convention_from_json(const Json& j);
Json convention_to_json(const Convention& c);

// Problem files: a signal file plus "missing": [...frequencies...]. With
// "domain": "frequency" the values are the observed spectrum; with "time"
// they are a signal whose spectrum is observed.
RecoveryProblem problem_from_json(const Json& j);
Json problem_to_json(const RecoveryProblem& p);

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

std::string to_string(EnergyMethod m);
EnergyMethod energy_method_from_string(const std::string& s);

void to_json(Json& j, const EnergyCertificate& c);
void to_json(Json& j, const GrowthCertificate& c);
void to_json(Json& j, const UncertaintyCertificate& c);
void to_json(Json& j, const RecoveryCertificate& c);
void to_json(Json& j, const ComparisonRow& r);
void to_json(Json& j, const RecoverySolution& s);
void to_json(Json& j, const GowersReport& r);
void to_json(Json& j, const ScanWitness& w);
void to_json(Json& j, const ConjectureScanReport& r);

}  // namespace aeup
