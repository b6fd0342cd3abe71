#include "hilbert/metrics.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace hilbert {

// ---------------------------------------------------------------------------
// Scoring
// ---------------------------------------------------------------------------

std::string verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::Valid: return "valid";
        case Verdict::Invalid: return "invalid";
        case Verdict::Unparseable: return "unparseable";
        case Verdict::Missing: return "missing";
    }
    return "invalid";
}

ScoredAnswer score_answer(const ReasoningInstance& instance, const std::string& answer_text) {
    ScoredAnswer out;
    out.id = instance.meta.id;
    out.depth_label = instance.meta.depth_label;
    out.width_label = instance.meta.width_label;
    try {
        Proof proof = parse_answer(answer_text, instance);
        out.violations = validate(instance, proof);
        out.verdict = out.violations.empty() ? Verdict::Valid : Verdict::Invalid;
    } catch (const WireParseError&) {
        out.verdict = Verdict::Unparseable;
    }
    return out;
}

ScoreReport score(const std::vector<DatasetRecord>& records,
                  const std::map<std::string, std::string>& candidates) {
    ScoreReport report;
    report.entries.reserve(records.size());
    for (const DatasetRecord& record : records) {
        auto it = candidates.find(record.instance.meta.id);
        ScoredAnswer entry;
        if (it == candidates.end()) {
            entry.id = record.instance.meta.id;
            entry.depth_label = record.instance.meta.depth_label;
            entry.width_label = record.instance.meta.width_label;
            entry.verdict = Verdict::Missing;
        } else {
            entry = score_answer(record.instance, it->second);
        }
        const bool valid = entry.verdict == Verdict::Valid;
        ++report.overall.total;
        report.overall.valid += valid;
        ++report.by_depth[entry.depth_label].total;
        report.by_depth[entry.depth_label].valid += valid;
        ++report.by_width[entry.width_label].total;
        report.by_width[entry.width_label].valid += valid;
        report.entries.push_back(std::move(entry));
    }
    return report;
}

namespace {

void render_bucket_line(std::ostringstream& out, const std::string& label,
                        const BucketStats& stats) {
    out << "  " << label << ": " << stats.valid << "/" << stats.total << " = ";
    out.setf(std::ios::fixed);
    out.precision(4);
    out << stats.accuracy() << "\n";
}

}  // namespace

std::string render_report(const ScoreReport& report) {
    std::ostringstream out;
    out << "overall\n";
    render_bucket_line(out, "all", report.overall);
    out << "by depth\n";
    for (const auto& [depth, stats] : report.by_depth)
        render_bucket_line(out, "depth " + std::to_string(depth), stats);
    out << "by width\n";
    for (const auto& [width, stats] : report.by_width)
        render_bucket_line(out, "width " + std::to_string(width), stats);
    return out.str();
}

std::string render_curve_tsv(const std::map<int, BucketStats>& curve, const std::string& label) {
    std::ostringstream out;
    out << label << "\ttotal\tvalid\taccuracy\n";
    for (const auto& [key, stats] : curve) {
        out << key << '\t' << stats.total << '\t' << stats.valid << '\t';
        out.setf(std::ios::fixed);
        out.precision(6);
        out << stats.accuracy() << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Diversity
// ---------------------------------------------------------------------------

Proof normalize_proof(const Proof& proof) {
    const std::size_t n = proof.steps.size();

    // Chase restatements to the step that produced the formula.
    std::vector<std::size_t> origin(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (const auto* r = std::get_if<Restatement>(&proof.steps[i].justification);
            r && r->index < i) {
            origin[i] = origin[r->index];
        } else {
            origin[i] = i;
        }
    }

    std::vector<std::size_t> new_index(n, 0);
    Proof out;
    for (std::size_t i = 0; i < n; ++i) {
        if (origin[i] != i)
            continue;  // a restatement, drop it
        new_index[i] = out.steps.size();
        ProofStep step = proof.steps[i];
        if (auto* mp = std::get_if<ModusPonens>(&step.justification)) {
            if (mp->premise_a < n)
                mp->premise_a = new_index[origin[mp->premise_a]];
            if (mp->premise_b < n)
                mp->premise_b = new_index[origin[mp->premise_b]];
        }
        out.steps.push_back(std::move(step));
    }
    return out;
}

namespace {

// Stable fingerprint of a normalized proof: formulas plus justifications.
std::string proof_signature(const Proof& proof) {
    std::ostringstream out;
    for (const ProofStep& step : proof.steps) {
        out << print_formula(step.formula) << '\x1e';
        std::visit(
            [&](const auto& j) {
                using T = std::decay_t<decltype(j)>;
                if constexpr (std::is_same_v<T, AssumptionRef>) {
                    out << "asm:" << j.index;
                } else if constexpr (std::is_same_v<T, AxiomInstance>) {
                    out << "axiom:" << axiom_name(j.schema);
                    for (const auto& [name, value] : j.subst.entries())
                        out << ':' << name << '=' << print_formula(value);
                } else if constexpr (std::is_same_v<T, ModusPonens>) {
                    std::size_t lo = std::min(j.premise_a, j.premise_b);
                    std::size_t hi = std::max(j.premise_a, j.premise_b);
                    out << "mp:" << lo << ',' << hi;
                } else {
                    out << "restate:" << j.index;
                }
            },
            step.justification);
        out << '\x1f';
    }
    return out.str();
}

}  // namespace

DiversityCount diversity(const ReasoningInstance& instance,
                         const std::vector<std::string>& candidate_texts) {
    DiversityCount count;
    std::unordered_set<std::string> signatures;
    for (const std::string& text : candidate_texts) {
        Proof proof;
        try {
            proof = parse_answer(text, instance);
        } catch (const WireParseError&) {
            continue;
        }
        if (!validate(instance, proof).empty())
            continue;
        ++count.valid;
        signatures.insert(proof_signature(normalize_proof(proof)));
    }
    count.distinct = signatures.size();
    return count;
}

// ---------------------------------------------------------------------------
// Generalization report
// ---------------------------------------------------------------------------

namespace {

constexpr const char* kTransformTrailPrefix = "transform:of=";

}  // namespace

GeneralizationReport generalization_report(const std::vector<DatasetRecord>& records,
                                           const ScoreReport& scores) {
    GeneralizationReport report;
    report.depth_curve = scores.by_depth;
    report.width_curve = scores.by_width;

    std::map<std::string, bool> valid_by_id;
    for (const ScoredAnswer& entry : scores.entries)
        valid_by_id[entry.id] = entry.verdict == Verdict::Valid;

    for (const DatasetRecord& record : records) {
        std::string original_id;
        for (const std::string& note : record.provenance.trail) {
            if (note.rfind(kTransformTrailPrefix, 0) == 0)
                original_id = note.substr(std::string(kTransformTrailPrefix).size());
        }
        if (original_id.empty())
            continue;
        auto original = valid_by_id.find(original_id);
        auto transformed = valid_by_id.find(record.instance.meta.id);
        if (original == valid_by_id.end() || transformed == valid_by_id.end())
            continue;
        ++report.paired.pairs;
        if (original->second && transformed->second)
            ++report.paired.both_valid;
        else if (original->second)
            ++report.paired.original_only;
        else if (transformed->second)
            ++report.paired.transformed_only;
        else
            ++report.paired.neither;
    }
    return report;
}

std::string render_generalization(const GeneralizationReport& report) {
    std::ostringstream out;
    out << render_curve_tsv(report.depth_curve, "depth");
    out << '\n';
    out << render_curve_tsv(report.width_curve, "width");
    out << '\n';
    out << "pairs\t" << report.paired.pairs << "\nboth_valid\t" << report.paired.both_valid
        << "\noriginal_only\t" << report.paired.original_only << "\ntransformed_only\t"
        << report.paired.transformed_only << "\nneither\t" << report.paired.neither << '\n';
    return out.str();
}

}  // namespace hilbert
