#pragma once

#include "monopole/obstruction.hpp"

namespace monopole {

// Stable JSON hypothesis schema shared by the CLI, the scenario generators,
// and the report echoes:
//   {"lattice": str, "c2": int?, "spin": bool,
//    "base": {"kind": "point"|"torus"|"rp", "dim": int},
//    "hplus": {"lines": [[int,...]], "trivial": int} | {"u": int, "v": int},
//    "action": {"p": int, "d": [int], "h": [int], "inv_dim": int,
//               "type": "even"|"odd"}?}
// Torus line summands use 1-based generator indices on the wire.

Json json_int(const Int& v);
Int int_from_json(const Json& v);

Json base_to_json(const BaseSpace& b);
BaseSpace base_from_json(const Json& j);

Json hplus_to_json(const FlatBundleDescriptor& d);
FlatBundleDescriptor hplus_from_json(const Json& j, const BaseSpace& base);

Json spinc_to_json(const SpinCData& s);
SpinCData spinc_from_json(const Json& hypothesis);

Json family_to_json(const FamilyHypothesis& h);
FamilyHypothesis family_from_json(const Json& j);

Json zp_action_to_json(const ZpActionHypothesis& h);
ZpActionHypothesis zp_action_from_json(const Json& j);

bool is_action_hypothesis(const Json& j);

Json rep_to_json(const ZpVirtualRep& r);
ZpVirtualRep rep_from_json(long p, const Json& j);

// Dispatch a named checker on a JSON hypothesis (the --json route of the CLI
// and the python module).  Valid names: donaldson, furuta, family-euler,
// spin-family, z2, even-involution, zp, zp-spin, ten-eighths-equivariant.
ObstructionReport run_named_check(const std::string& name, const Json& hypothesis);

}  // namespace monopole
