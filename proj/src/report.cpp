#include "potstab/report.hpp"

#include <sstream>

namespace potstab {

namespace {

Json one_based(const std::vector<int>& vs) {
    Json a = Json::array();
    for (int v : vs) a.push_back(v + 1);
    return a;
}

template <class T>
Json opt(const std::optional<T>& v) {
    return v ? Json(*v) : Json(nullptr);
}

} // namespace

Json to_json(const DegreeSequence& seq) { return format_sequence(seq); }

Json to_json(const SmallGraph& g) {
    Json edges = Json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a + 1, b + 1});
    return Json{{"order", g.order()}, {"edges", edges}};
}

Json to_json(const PotentialProfile& prof) {
    Json nabla = Json::object(), sti = Json::object();
    for (auto [i, v] : prof.nabla) nabla[std::to_string(i)] = v;
    for (auto [i, v] : prof.sigma_tilde_i) sti[std::to_string(i)] = v;
    return Json{{"k", prof.k},
                {"alpha", prof.alpha},
                {"nabla", nabla},
                {"sigmaTildeI", sti},
                {"sigmaTilde", prof.sigma_tilde},
                {"iStar", prof.i_star},
                {"type", to_string(prof.type)},
                {"bH", prof.b_h}};
}

Json to_json(const TargetSequence& t) {
    return Json{{"i", t.i}, {"n", t.n}, {"sequence", to_json(t.seq)}, {"parityAdjusted", t.parity_adjusted}};
}

Json to_json(const ExtremalWitness& w) {
    return Json{{"n", w.n}, {"sequence", to_json(w.seq)}, {"pattern", w.pattern()}};
}

Json to_json(const StabilityVerdict& v) {
    Json cover = nullptr;
    if (v.cover) cover = Json::array({v.cover->b1, v.cover->b2});
    return Json{{"status", to_string(v.status)},
                {"theorem", to_string(v.theorem)},
                {"witnessSequencePattern", opt(v.witness_pattern)},
                {"coverB1B2", cover},
                {"note", v.note}};
}

Json to_json(const WeakVerdict& v) {
    return Json{{"status", to_string(v.status)},
                {"basis", to_string(v.basis)},
                {"witnessSequencePattern", opt(v.witness_pattern)},
                {"note", v.note}};
}

Json to_json(const PotentialCertificate& c) {
    Json j{{"potentially", c.answer}};
    j["embedding"] = c.embedding ? one_based(*c.embedding) : Json(nullptr);
    j["realization"] = c.realization ? to_json(*c.realization) : Json(nullptr);
    j["stats"] = {{"placementsTried", c.stats.placements_tried}, {"residualNodes", c.stats.residual_nodes}};
    return j;
}

Json to_json(const SigmaExact& s) {
    Json maxi = Json::array();
    for (const auto& seq : s.extremal_sequences) maxi.push_back(to_json(seq));
    return Json{{"n", s.n}, {"value", s.value}, {"maximizers", maxi}, {"sequencesChecked", s.sequences_checked}};
}

Json to_json(const RefineResult& r) {
    Json j;
    j["found"] = r.embedding.has_value();
    j["route"] = r.route ? Json(to_string(*r.route)) : Json(nullptr);
    j["embedding"] = r.embedding ? one_based(*r.embedding) : Json(nullptr);
    j["realization"] = r.realization ? to_json(r.realization->graph) : Json(nullptr);
    j["wIndex"] = r.w_index ? Json(*r.w_index + 1) : Json(nullptr);
    j["exchanges"] = r.exchanges;
    j["certificates"] = {{"dKMinusAlpha", r.certificates.d_k_minus_alpha},
                         {"maxDegreeBound", r.certificates.max_degree_bound},
                         {"dFar", r.certificates.d_far},
                         {"fewBigDegrees", r.certificates.few_big_degrees}};
    return j;
}

Json to_json(const ProbeVerdict& v) {
    Json j{{"kind", to_string(v.kind)}};
    j["reason"] = v.reason ? Json(to_string(*v.reason)) : Json(nullptr);
    j["verified"] = opt(v.verified);
    j["embedding"] = v.embedding ? one_based(*v.embedding) : Json(nullptr);
    j["realization"] = v.realization ? to_json(*v.realization) : Json(nullptr);
    j["target"] = v.target ? to_json(*v.target) : Json(nullptr);
    j["distance"] = opt(v.distance);
    j["note"] = v.note;
    return j;
}

Json to_json(const IterationRecord& r) {
    return Json{{"record", "iteration"},
                {"t", r.t},
                {"nT", r.n_t},
                {"piT", to_json(r.pi_t)},
                {"sum", r.sum},
                {"sumBound", r.sum_bound},
                {"sumBoundHolds", r.sum_bound_holds},
                {"removedNonneighbors", r.removed_nonneighbors},
                {"laidOffStep3", r.laid_off_step3},
                {"laidOffStep4", r.laid_off_step4},
                {"step4Threshold", r.step4_threshold},
                {"step4Guard", r.step4_guard},
                {"haltingReason", r.halting_reason.empty() ? Json(nullptr) : Json(r.halting_reason)}};
}

namespace {

Json header_json(const ProbeTrace& t) {
    return Json{{"record", "header"},
                {"n", t.n},
                {"epsilon", t.epsilon},
                {"delta", t.delta},
                {"deltaWithinBound", t.delta_within_bound},
                {"f", t.f},
                {"fOverridden", t.f_overridden},
                {"preconditionMet", t.precondition_met},
                {"warnings", t.warnings},
                {"init",
                 {{"threshold", t.init.threshold},
                  {"jInit", t.init.laid_off},
                  {"laidOffSum", t.init.laid_off_sum},
                  {"guard", t.init.guard},
                  {"earlyExit", t.init.early_exit}}}};
}

Json final_json(const ProbeTrace& t) {
    const FinalRecord& f = t.final_record;
    Json j{{"record", "final"}, {"ell", f.ell}, {"iterationLimit", f.iteration_limit}};
    j["nEll"] = t.n_ell;
    j["countedRemovals"] = t.counted_removals;
    j["asymptoticBoundApplicable"] = t.asymptotic_bound_applicable;
    j["asymptoticBoundHolds"] = opt(t.asymptotic_bound_holds);
    j["minTermRequired"] = opt(f.min_term_required);
    j["sEll"] = f.s_ell_clique ? Json{{"clique", *f.s_ell_clique}, {"independent", *f.s_ell_independent}}
                               : Json(nullptr);
    j["degreeSufficientSEll"] = opt(f.degree_sufficient_s_ell);
    j["p"] = opt(f.p);
    j["fOrder"] = opt(f.f_order);
    j["fVertices"] = f.f_vertices ? one_based(*f.f_vertices) : Json(nullptr);
    j["degreeSufficientKpF"] = opt(f.degree_sufficient_kp_f);
    j["eta"] = f.eta ? to_json(*f.eta) : Json(nullptr);
    j["targetIndex"] = opt(f.target_index);
    j["refinement"] = t.refinement ? to_json(*t.refinement) : Json(nullptr);
    return j;
}

} // namespace

Json to_json(const ProbeTrace& t) {
    Json its = Json::array();
    for (const auto& r : t.iterations) its.push_back(to_json(r));
    Json j = header_json(t);
    j.erase("record");
    j["iterations"] = its;
    Json fin = final_json(t);
    fin.erase("record");
    j["final"] = fin;
    return j;
}

Json analyze_report(const SmallGraph& h) {
    const PotentialProfile prof = profile(h);
    Json j;
    j["graph"] = to_json(h);
    j["profile"] = to_json(prof);
    j["sigma"] = to_json(classify_sigma(h));
    j["weak"] = to_json(classify_weak(h));
    Json members = Json::array();
    for (const auto& [i, st] : prof.sigma_tilde_i) {
        if (st != prof.sigma_tilde) continue;
        const int a = prof.k - i;
        const int b = prof.k - i + prof.nabla.at(i) - 1;
        members.push_back({{"i", i},
                           {"pattern", "((n-1)^" + std::to_string(a) + ", " + std::to_string(b) + "^(n-" +
                                           std::to_string(a) + "))"},
                           {"minN", target_min_n(prof, i)}});
    }
    j["targetFamily"] = members;
    return j;
}

std::string trace_json_lines(const ProbeResult& r) {
    std::ostringstream out;
    out << header_json(r.trace).dump() << '\n';
    for (const auto& it : r.trace.iterations) out << to_json(it).dump() << '\n';
    out << final_json(r.trace).dump() << '\n';
    Json v{{"record", "verdict"}};
    v.update(to_json(r.verdict));
    out << v.dump() << '\n';
    return out.str();
}

} // namespace potstab
