#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pwss/strength.hpp"

namespace pwss {

struct PasswordRecord {
    std::string password;
    StrengthLabel label = StrengthLabel::weak;
};

/// Ordered collection of records plus a note on where they came from.
/// Order is deterministic given the inputs that produced the set.
struct RecordSet {
    std::vector<PasswordRecord> records;
    std::string provenance;

    std::size_t size() const { return records.size(); }
    bool empty() const { return records.empty(); }
};

/// Bookkeeping for one ingestion pass. The conservation law
///   rows_read = rows_surviving + rows_malformed + dropped(null|duplicate|special_only)
/// holds after parse_corpus followed by clean.
struct IngestStats {
    std::uint64_t rows_read = 0;
    std::uint64_t rows_malformed = 0;
    std::uint64_t rows_dropped_null = 0;
    std::uint64_t rows_dropped_duplicate = 0;
    std::uint64_t rows_dropped_special_only = 0;
    std::uint64_t labels_corrected = 0;
    std::uint64_t label_conflicts = 0;
    std::uint64_t rows_surviving = 0;

    IngestStats& operator+=(const IngestStats& other);
};

/// Names of the two columns of interest in an input file.
struct ColumnSchema {
    std::string password_column = "password";
    std::string strength_column = "strength";
};

/// Case-insensitive textual label aliases: week/weak -> Weak, etc.
std::map<std::string, StrengthLabel> default_label_aliases();

/// How strength cells are interpreted and which textual aliases apply.
/// With remap_numeric set, integer strengths follow the coarse 0..~50
/// scale and go through remap_strength; otherwise they must be 0, 1 or 2.
struct CleaningPolicy {
    std::map<std::string, StrengthLabel> aliases = default_label_aliases();
    bool remap_numeric = false;
};

/// Coarse-scale strength to class: 0-4 Weak, 5-8 Medium, 9+ Strong.
/// Negative input is a data error.
StrengthLabel remap_strength(long long raw);

/// Reads one RFC-4180 record (comma delimiter, double-quote quoting,
/// quote-doubling escape; quoted fields may span lines). Returns nullopt
/// at end of input.
std::optional<std::vector<std::string>> read_csv_record(std::istream& in);

/// Writes one record, quoting fields that contain delimiter, quote or
/// newline characters.
void write_csv_record(std::ostream& out, std::span<const std::string> fields);

/// Parses a headered CSV stream into records. Rows with the wrong field
/// count or an unparseable strength cell are skipped and counted as
/// malformed. Label text goes through the policy's alias table before
/// encoding; labels_corrected counts genuine typo fixes such as "week".
/// Errors: absent header or named columns -> data error ("schema");
/// stream without any header row -> data error ("empty source").
std::pair<RecordSet, IngestStats> parse_corpus(std::istream& source,
                                               const ColumnSchema& schema,
                                               const CleaningPolicy& policy = {});

/// Drops records with an empty password, deduplicates on the password
/// string keeping the first occurrence (first label wins; disagreeing
/// later labels are counted as conflicts), then drops passwords made
/// entirely of non-alphanumeric characters. Never fails; the stats say
/// what happened. Idempotent.
std::pair<RecordSet, IngestStats> clean(const RecordSet& rs);

/// Concatenation (a then b) followed by the clean() dedupe rule.
RecordSet merge(const RecordSet& a, const RecordSet& b);

struct SplitResult {
    RecordSet train;
    RecordSet test;
};

/// Deterministic shuffle split. |test| = round(test_fraction * N). Under
/// stratification, per-class test counts sit within 1 of
/// round(test_fraction * n_c), and every class present must have at least
/// two members. Requires 0 < test_fraction < 1 and a non-empty set.
SplitResult split(const RecordSet& rs, double test_fraction, std::uint64_t seed,
                  bool stratified);

/// Canonical corpus file: header "password,strength", one record per row,
/// strength as its integer encoding, RFC-4180 quoting.
void write_corpus_csv(std::ostream& out, const RecordSet& rs);

}  // namespace pwss
