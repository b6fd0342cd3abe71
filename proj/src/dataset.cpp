#include "hilbert/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace hilbert {

using ordered_json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// Wire text
// ---------------------------------------------------------------------------

WireParseError::WireParseError(const std::string& message, std::size_t line)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

constexpr const char* kGoalTag = "<Goal>";
constexpr const char* kAssumptionTag = "<Assumption>";
constexpr const char* kStepTagOpen = "<Step";

bool starts_with(const std::string& s, const char* prefix) {
    return s.rfind(prefix, 0) == 0;
}

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

Formula parse_wire_formula(const std::string& text, std::size_t line) {
    try {
        return parse_formula(text);
    } catch (const FormulaParseError& e) {
        throw WireParseError(e.what(), line);
    }
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line))
        lines.push_back(line);
    return lines;
}

}  // namespace

std::string print_query(const ReasoningInstance& instance) {
    std::string out = kGoalTag + print_formula(instance.goal) + "\n";
    for (const Formula& a : instance.assumptions)
        out += kAssumptionTag + print_formula(a) + "\n";
    return out;
}

ReasoningInstance parse_query(const std::string& text) {
    std::optional<Formula> goal;
    std::vector<Formula> assumptions;

    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string line = strip(lines[i]);
        if (starts_with(line, kGoalTag)) {
            if (goal)
                throw WireParseError("second <Goal> line", line_no);
            goal = parse_wire_formula(line.substr(std::strlen(kGoalTag)), line_no);
        } else if (starts_with(line, kAssumptionTag)) {
            assumptions.push_back(
                parse_wire_formula(line.substr(std::strlen(kAssumptionTag)), line_no));
        }
        // Anything else is free text around the problem.
    }
    if (!goal)
        throw WireParseError("no <Goal> line found", lines.size() + 1);

    ReasoningInstance instance{std::move(assumptions), std::move(*goal), {}};
    return instance;
}

namespace {

std::string print_step_body(const ProofStep& step) {
    struct Printer {
        const Formula& formula;

        std::string operator()(const AssumptionRef&) const {
            return print_formula(formula) + " - Assumption";
        }
        std::string operator()(const AxiomInstance& j) const {
            std::string out = print_formula(formula) + " - Axiom " + axiom_name(j.schema) + " [";
            bool first = true;
            for (const std::string& name : axiom_placeholders(j.schema)) {
                if (!first)
                    out += "; ";
                first = false;
                out += name + " := " + print_formula(*j.subst.find(name));
            }
            return out + "]";
        }
        std::string operator()(const ModusPonens& j) const {
            return "Step " + std::to_string(j.premise_a + 1) + " and Step " +
                   std::to_string(j.premise_b + 1) + " -> " + print_formula(formula) +
                   " - Modus Ponens";
        }
        std::string operator()(const Restatement&) const {
            return print_formula(formula) + " - Deducted";
        }
    };
    return std::visit(Printer{step.formula}, step.justification);
}

}  // namespace

std::string print_answer(const Proof& proof) {
    std::string out;
    for (std::size_t i = 0; i < proof.steps.size(); ++i) {
        out += "<Step " + std::to_string(i + 1) + ">" + print_step_body(proof.steps[i]) + "\n";
    }
    return out;
}

namespace {

// One tagged answer line, lexed but not yet resolved against the proof.
struct RawStep {
    std::size_t line_no;
    long long written_number;
    std::string body;
};

struct AnswerParser {
    const ReasoningInstance& instance;
    Proof proof;
    // written step number -> position of its first occurrence
    std::unordered_map<long long, std::size_t> by_number;

    void add(const RawStep& raw) {
        const std::size_t position = proof.steps.size();

        // The claim/justification separator is the last " - "; formulas never
        // contain a dash.
        std::size_t sep = raw.body.rfind(" - ");
        if (sep == std::string::npos)
            throw WireParseError("step line has no ' - JUSTIFICATION' part", raw.line_no);
        const std::string claim_text = raw.body.substr(0, sep);
        const std::string kind = strip(raw.body.substr(sep + 3));

        if (kind == "Assumption") {
            Formula claim = parse_wire_formula(claim_text, raw.line_no);
            proof.steps.push_back(ProofStep{claim, AssumptionRef{assumption_index(claim)}});
        } else if (kind == "Deducted") {
            Formula claim = parse_wire_formula(claim_text, raw.line_no);
            proof.steps.push_back(
                ProofStep{claim, Restatement{earliest_matching_step(claim, position)}});
        } else if (kind == "Modus Ponens") {
            add_modus_ponens(claim_text, position, raw.line_no);
        } else if (starts_with(kind, "Axiom ")) {
            add_axiom(claim_text, kind, raw.line_no);
        } else {
            throw WireParseError("unknown justification '" + kind + "'", raw.line_no);
        }

        by_number.try_emplace(raw.written_number, position);
    }

    // Unresolved references become self references, which validation rejects
    // as forward references; unknown assumptions point one past the list.
    std::size_t assumption_index(const Formula& claim) const {
        for (std::size_t i = 0; i < instance.assumptions.size(); ++i) {
            if (instance.assumptions[i] == claim)
                return i;
        }
        return instance.assumptions.size();
    }

    std::size_t earliest_matching_step(const Formula& claim, std::size_t position) const {
        for (std::size_t i = 0; i < position; ++i) {
            if (proof.steps[i].formula == claim)
                return i;
        }
        return position;
    }

    std::size_t resolve_written(long long number, std::size_t position) const {
        auto it = by_number.find(number);
        return it == by_number.end() ? position : it->second;
    }

    void add_modus_ponens(const std::string& text, std::size_t position, std::size_t line_no) {
        // Step i and Step j -> FORMULA
        std::istringstream in(text);
        std::string word;
        long long a = 0;
        long long b = 0;
        if (!(in >> word) || word != "Step" || !(in >> a) || !(in >> word) || word != "and" ||
            !(in >> word) || word != "Step" || !(in >> b) || !(in >> word) || word != "->")
            throw WireParseError("malformed modus ponens premises", line_no);
        std::string rest;
        std::getline(in, rest);
        Formula claim = parse_wire_formula(rest, line_no);
        proof.steps.push_back(ProofStep{
            claim, ModusPonens{resolve_written(a, position), resolve_written(b, position)}});
    }

    void add_axiom(const std::string& claim_text, const std::string& kind, std::size_t line_no) {
        // Axiom NAME [P := FORMULA; Q := FORMULA; ...]
        std::istringstream in(kind);
        std::string word, name;
        in >> word >> name;
        AxiomSchema schema;
        if (name == "A1")
            schema = AxiomSchema::A1;
        else if (name == "A2")
            schema = AxiomSchema::A2;
        else
            throw WireParseError("unknown axiom schema '" + name + "'", line_no);

        std::size_t open = kind.find('[');
        std::size_t close = kind.rfind(']');
        if (open == std::string::npos || close == std::string::npos || close < open)
            throw WireParseError("axiom line is missing its [..] substitution", line_no);
        Substitution subst;
        std::istringstream entries(kind.substr(open + 1, close - open - 1));
        std::string entry;
        while (std::getline(entries, entry, ';')) {
            std::size_t assign = entry.find(":=");
            if (assign == std::string::npos)
                throw WireParseError("axiom substitution entry lacks ':='", line_no);
            std::string placeholder = strip(entry.substr(0, assign));
            if (!is_valid_variable_name(placeholder))
                throw WireParseError("bad placeholder '" + placeholder + "'", line_no);
            subst.set(placeholder, parse_wire_formula(entry.substr(assign + 2), line_no));
        }
        Formula claim = parse_wire_formula(claim_text, line_no);
        proof.steps.push_back(ProofStep{claim, AxiomInstance{schema, std::move(subst)}});
    }
};

}  // namespace

Proof parse_answer(const std::string& text, const ReasoningInstance& instance) {
    AnswerParser parser{instance};

    const std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        const std::size_t line_no = i + 1;
        const std::string line = strip(lines[i]);
        if (!starts_with(line, kStepTagOpen))
            continue;  // free text
        std::size_t close = line.find('>');
        if (close == std::string::npos)
            throw WireParseError("unterminated <Step ..> tag", line_no);
        long long number = 0;
        try {
            std::size_t digits = 0;
            const std::string num_text = strip(line.substr(5, close - 5));
            number = std::stoll(num_text, &digits);
            if (digits != num_text.size())
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw WireParseError("malformed step number in tag", line_no);
        }
        parser.add(RawStep{line_no, number, strip(line.substr(close + 1))});
    }
    return std::move(parser.proof);
}

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

std::string split_name(Split split) {
    switch (split) {
        case Split::Train: return "train";
        case Split::Validation: return "validation";
        case Split::Test: return "test";
    }
    return "train";
}

Split split_from_name(const std::string& name) {
    if (name == "train")
        return Split::Train;
    if (name == "validation")
        return Split::Validation;
    if (name == "test")
        return Split::Test;
    throw std::invalid_argument("unknown split '" + name + "'");
}

DatasetRecord make_record(std::string id, const ReasoningInstance& instance, const Proof& proof,
                          Split split, Provenance provenance) {
    DatasetRecord record{instance, split_lines(print_answer(proof)), split,
                         std::move(provenance)};
    record.instance.meta.id = std::move(id);
    return record;
}

Proof record_proof(const DatasetRecord& record) {
    std::string text;
    for (const std::string& line : record.proof_lines) {
        text += line;
        text += '\n';
    }
    return parse_answer(text, record.instance);
}

void write_records(std::ostream& out, const std::vector<DatasetRecord>& records) {
    for (const DatasetRecord& r : records) {
        ordered_json j;
        j["id"] = r.instance.meta.id;
        j["goal"] = print_formula(r.instance.goal);
        ordered_json assumptions = ordered_json::array();
        for (const Formula& a : r.instance.assumptions)
            assumptions.push_back(print_formula(a));
        j["assumptions"] = std::move(assumptions);
        j["proof_lines"] = r.proof_lines;
        j["depth_label"] = r.instance.meta.depth_label;
        j["width_label"] = r.instance.meta.width_label;
        j["split"] = split_name(r.split);
        j["provenance"] = ordered_json{{"seed", r.provenance.seed},
                                       {"config_digest", r.provenance.config_digest},
                                       {"trail", r.provenance.trail}};
        out << j.dump() << '\n';
    }
}

void write_records(const std::string& path, const std::vector<DatasetRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    write_records(out, records);
    if (!out)
        throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<DatasetRecord> read_records(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");

    std::vector<DatasetRecord> records;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (strip(line).empty())
            continue;
        try {
            ordered_json j = ordered_json::parse(line);
            DatasetRecord r{
                ReasoningInstance{{}, parse_formula(j.at("goal").get<std::string>()), {}},
                {},
                Split::Train,
                {}};
            r.instance.meta.id = j.at("id").get<std::string>();
            for (const auto& a : j.at("assumptions"))
                r.instance.assumptions.push_back(parse_formula(a.get<std::string>()));
            r.proof_lines = j.at("proof_lines").get<std::vector<std::string>>();
            r.instance.meta.depth_label = j.at("depth_label").get<int>();
            r.instance.meta.width_label = j.at("width_label").get<int>();
            r.split = split_from_name(j.at("split").get<std::string>());
            const auto& p = j.at("provenance");
            r.provenance.seed = p.at("seed").get<std::uint64_t>();
            r.provenance.config_digest = p.at("config_digest").get<std::string>();
            r.provenance.trail = p.at("trail").get<std::vector<std::string>>();
            r.instance.meta.seed = r.provenance.seed;
            records.push_back(std::move(r));
        } catch (const std::exception& e) {
            throw std::runtime_error(path + ":" + std::to_string(line_no) +
                                     ": malformed record: " + e.what());
        }
    }
    return records;
}

// ---------------------------------------------------------------------------
// Dedup and splits
// ---------------------------------------------------------------------------

namespace {

// First-occurrence numbering across a left-to-right walk.
void rename_into(const Formula& f, std::map<std::string, std::string>& names) {
    if (f.is_var()) {
        if (!names.count(f.var_name()))
            names.emplace(f.var_name(), "V" + std::to_string(names.size() + 1));
        return;
    }
    rename_into(f.antecedent(), names);
    rename_into(f.consequent(), names);
}

Formula apply_renaming(const Formula& f, const std::map<std::string, std::string>& names) {
    if (f.is_var())
        return Formula::var(names.at(f.var_name()));
    return Formula::implies(apply_renaming(f.antecedent(), names),
                            apply_renaming(f.consequent(), names));
}

}  // namespace

std::string dedup_key(const ReasoningInstance& instance, DedupMode mode) {
    if (mode == DedupMode::Exact)
        return instance_key(instance);

    std::map<std::string, std::string> names;
    rename_into(instance.goal, names);
    for (const Formula& a : instance.assumptions)
        rename_into(a, names);

    ReasoningInstance renamed{{}, apply_renaming(instance.goal, names), {}};
    for (const Formula& a : instance.assumptions)
        renamed.assumptions.push_back(apply_renaming(a, names));
    return instance_key(renamed);
}

std::vector<DatasetRecord> dedupe_and_split(std::vector<DatasetRecord> records,
                                            const SplitFractions& fractions, DedupMode mode) {
    const double sum = fractions.train + fractions.validation + fractions.test;
    if (fractions.train < 0 || fractions.validation < 0 || fractions.test < 0 ||
        std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument("dedupe_and_split: fractions must be >= 0 and sum to 1");

    std::vector<DatasetRecord> unique;
    std::unordered_set<std::string> seen;
    for (DatasetRecord& r : records) {
        if (seen.insert(dedup_key(r.instance, mode)).second)
            unique.push_back(std::move(r));
    }

    // Exact quotas by largest remainder, then a deterministic water-fill so
    // each split tracks its fraction throughout the stream (keeps per-depth
    // balance when the input is grouped).
    const std::size_t n = unique.size();
    const double raw[3] = {fractions.train * n, fractions.validation * n, fractions.test * n};
    std::size_t quota[3];
    for (int s = 0; s < 3; ++s)
        quota[s] = static_cast<std::size_t>(raw[s]);
    std::size_t assigned_total = quota[0] + quota[1] + quota[2];
    while (assigned_total < n) {
        int best = -1;
        double best_frac = -1.0;
        for (int s = 0; s < 3; ++s) {
            double frac = raw[s] - static_cast<double>(quota[s]);
            if (frac > best_frac + 1e-12) {
                best_frac = frac;
                best = s;
            }
        }
        ++quota[best];
        ++assigned_total;
    }

    std::size_t filled[3] = {0, 0, 0};
    for (DatasetRecord& r : unique) {
        int best = -1;
        double best_need = -1.0;
        for (int s = 0; s < 3; ++s) {
            if (filled[s] >= quota[s])
                continue;
            double need = static_cast<double>(quota[s] - filled[s]) / static_cast<double>(quota[s]);
            if (need > best_need + 1e-12) {
                best_need = need;
                best = s;
            }
        }
        r.split = static_cast<Split>(best);
        ++filled[best];
    }
    return unique;
}

}  // namespace hilbert
