#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hilbert/kernel.hpp"

namespace hilbert {

// ---------------------------------------------------------------------------
// Wire text
// ---------------------------------------------------------------------------
//
// The exchange format models read and write:
//
//   <Goal>FORMULA
//   <Assumption>FORMULA            (one line per assumption)
//
//   <Step 1>FORMULA - Assumption
//   <Step 2>FORMULA - Axiom A1 [A := FORMULA; B := FORMULA]
//   <Step 3>Step 1 and Step 2 -> FORMULA - Modus Ponens
//   <Step 4>FORMULA - Deducted
//
// Step numbers are 1-based on the wire. "Deducted" restates the earliest
// earlier step with the identical formula. Parsing is lenient about
// whitespace after tags and around separators; printing always emits the
// canonical spacing shown above.

class WireParseError : public std::runtime_error {
public:
    WireParseError(const std::string& message, std::size_t line);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

std::string print_query(const ReasoningInstance& instance);

// Extracts the goal and assumptions from text containing tagged lines; lines
// without a recognized tag are free text and skipped. Throws WireParseError
// (1-based line numbers) on malformed tagged lines, a missing goal, or a
// second goal.
ReasoningInstance parse_query(const std::string& text);

std::string print_answer(const Proof& proof);

// Parses tagged step lines against `instance`. Claims that do not resolve
// (an assumption claim absent from the assumption list, a Deducted line with
// no earlier matching step, a premise number pointing at no parsed step) are
// encoded as out-of-range or self references, so the result always comes
// back and validate() rejects it with the right violation instead of this
// function throwing. Only lexically broken lines throw.
Proof parse_answer(const std::string& text, const ReasoningInstance& instance);

// ---------------------------------------------------------------------------
// Records
// ---------------------------------------------------------------------------

enum class Split { Train, Validation, Test };

std::string split_name(Split split);
Split split_from_name(const std::string& name);

struct Provenance {
    std::uint64_t seed = 0;
    std::string config_digest;
    // Pipeline stages this record went through, oldest first, e.g.
    // "generate:depth=7" or "transform:of=train-000123".
    std::vector<std::string> trail;
};

struct DatasetRecord {
    ReasoningInstance instance;  // meta carries id and labels
    std::vector<std::string> proof_lines;
    Split split = Split::Train;
    Provenance provenance;
};

DatasetRecord make_record(std::string id, const ReasoningInstance& instance, const Proof& proof,
                          Split split, Provenance provenance);

// Re-parse a record's stored proof. Throws WireParseError when the stored
// lines are lexically broken; a structurally wrong proof parses fine and
// simply fails validation.
Proof record_proof(const DatasetRecord& record);

// One JSON object per line, fields in a fixed order (id, goal, assumptions,
// proof_lines, depth_label, width_label, split, provenance). read_records
// reports malformed lines with their 1-based line number; it does not
// validate stored proofs.
void write_records(const std::string& path, const std::vector<DatasetRecord>& records);
void write_records(std::ostream& out, const std::vector<DatasetRecord>& records);
std::vector<DatasetRecord> read_records(const std::string& path);

// ---------------------------------------------------------------------------
// Dedup and splits
// ---------------------------------------------------------------------------

enum class DedupMode {
    Exact,
    // Variables renamed V1, V2, ... in order of first occurrence across the
    // goal and then the assumptions, so renamed copies of one problem
    // collide.
    AlphaRenaming,
};

// Duplicate-detection key for an instance under the given mode: the goal
// print plus the sorted assumption prints.
std::string dedup_key(const ReasoningInstance& instance, DedupMode mode);

struct SplitFractions {
    double train = 1.0;
    double validation = 0.0;
    double test = 0.0;
};

// Drops duplicates (first record wins) and assigns splits in record order,
// steering each split toward its fraction, with exact largest-remainder
// quotas overall. Deterministic for a fixed input order.
std::vector<DatasetRecord> dedupe_and_split(std::vector<DatasetRecord> records,
                                            const SplitFractions& fractions,
                                            DedupMode mode = DedupMode::Exact);

}  // namespace hilbert
