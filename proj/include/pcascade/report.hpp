#pragma once

#include <string>

#include <json.hpp>

#include "pcascade/cascade.hpp"
#include "pcascade/density.hpp"
#include "pcascade/limits.hpp"
#include "pcascade/numeric/heisenberg.hpp"
#include "pcascade/parabolic.hpp"
#include "pcascade/poly.hpp"
#include "pcascade/rootsys.hpp"
#include "pcascade/sweep.hpp"

// JSON documents for every result type. Keys are emitted in sorted order and
// arrays follow the library's canonical orders, so equal inputs give equal bytes.
namespace pcascade::report {

using nlohmann::json;

/// Machine integer when it fits in 64 bits, decimal string otherwise.
json big_int(const BigInt& v);

json root_system(const RestrictedRootSystem& sys);
json cascade(const RestrictedRootSystem& sys, const Cascade& c);
json decomposition(const RestrictedRootSystem& sys, const Cascade& c, const PhiDecomposition& d);
json verification(const RestrictedRootSystem& sys, const PhiDecomposition& d, const VerificationReport& r);
json polynomial(const Polynomial& p);
json weights(const WeightLedger& w);
json density(const RestrictedRootSystem& sys, const PhiDecomposition& d, const PlancherelData& data,
             const WeightLedger& w);
json family(const PropagationChain& chain, const FamilyReport& r);
json sweep(const SweepResult& r);
json norm_check(const numeric::NormCheck& r);
json inversion(numeric::InversionCase which, const numeric::InversionResult& r);

/// Two-space indented JSON with a trailing newline.
std::string to_json_text(const json& doc);
/// Flattened "path: value" lines for terminals.
std::string to_plain_text(const json& doc);

}  // namespace pcascade::report
