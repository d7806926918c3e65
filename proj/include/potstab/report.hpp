#pragma once

#include "potstab/oracle.hpp"
#include "potstab/potential.hpp"
#include "potstab/probe.hpp"
#include "potstab/stability.hpp"

#include <json.hpp>

namespace potstab {

// JSON views of the engine's results. Vertex numbers are 1-based and keys
// keep insertion order so golden outputs stay stable.
using Json = nlohmann::ordered_json;

Json to_json(const DegreeSequence& seq);
Json to_json(const SmallGraph& g);  ///< {"order", "edges": [[u, v], ...]}
Json to_json(const PotentialProfile& prof);
Json to_json(const TargetSequence& t);
Json to_json(const ExtremalWitness& w);
Json to_json(const StabilityVerdict& v);
Json to_json(const WeakVerdict& v);
Json to_json(const PotentialCertificate& c);
Json to_json(const SigmaExact& s);
Json to_json(const RefineResult& r);
Json to_json(const ProbeVerdict& v);
Json to_json(const IterationRecord& r);
Json to_json(const ProbeTrace& t);

/// Full analysis of H: profile, both verdicts, and a description of P(H, n).
Json analyze_report(const SmallGraph& h);

/// Trace as JSON lines: a header record, one record per iteration, the final
/// record, and the verdict.
std::string trace_json_lines(const ProbeResult& r);

} // namespace potstab
