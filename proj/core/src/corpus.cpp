#include "pwss/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>

#include "pwss/error.hpp"
#include "pwss/rng.hpp"

namespace pwss {

namespace {

std::string trim(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    return std::string(text.substr(begin, end - begin));
}

std::string ascii_lower(std::string_view text) {
    std::string out(text);
    for (char& c : out)
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
    return out;
}

bool is_ascii_alnum(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

bool all_non_alphanumeric(std::string_view password) {
    return std::none_of(password.begin(), password.end(), is_ascii_alnum);
}

// Parses one strength cell under the policy. Returns the label and whether
// the alias table corrected a typo; nullopt means the cell is unparseable.
struct ParsedLabel {
    StrengthLabel label;
    bool corrected;
};

std::optional<ParsedLabel> parse_strength(std::string_view cell, const CleaningPolicy& policy) {
    const std::string text = trim(cell);
    if (text.empty()) return std::nullopt;

    const std::string lowered = ascii_lower(text);
    if (auto it = policy.aliases.find(lowered); it != policy.aliases.end()) {
        const bool corrected = lowered != label_name(it->second);
        return ParsedLabel{it->second, corrected};
    }

    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) return std::nullopt;

    if (policy.remap_numeric) {
        if (value < 0) return std::nullopt;
        return ParsedLabel{remap_strength(value), false};
    }
    if (value < 0 || value >= kClassCount) return std::nullopt;
    return ParsedLabel{static_cast<StrengthLabel>(value), false};
}

}  // namespace

IngestStats& IngestStats::operator+=(const IngestStats& other) {
    rows_read += other.rows_read;
    rows_malformed += other.rows_malformed;
    rows_dropped_null += other.rows_dropped_null;
    rows_dropped_duplicate += other.rows_dropped_duplicate;
    rows_dropped_special_only += other.rows_dropped_special_only;
    labels_corrected += other.labels_corrected;
    label_conflicts += other.label_conflicts;
    rows_surviving += other.rows_surviving;
    return *this;
}

std::map<std::string, StrengthLabel> default_label_aliases() {
    return {
        {"week", StrengthLabel::weak},
        {"weak", StrengthLabel::weak},
        {"medium", StrengthLabel::medium},
        {"strong", StrengthLabel::strong},
    };
}

StrengthLabel remap_strength(long long raw) {
    if (raw < 0) throw Error::data("raw strength must be non-negative, got " + std::to_string(raw));
    if (raw <= 4) return StrengthLabel::weak;
    if (raw <= 8) return StrengthLabel::medium;
    return StrengthLabel::strong;
}

std::optional<std::vector<std::string>> read_csv_record(std::istream& in) {
    int first = in.peek();
    if (first == std::char_traits<char>::eof()) return std::nullopt;

    std::vector<std::string> fields;
    std::string field;
    bool quoted = false;
    bool any = false;

    for (int raw = in.get(); ; raw = in.get()) {
        if (raw == std::char_traits<char>::eof()) {
            // Unterminated quote runs to end of input.
            fields.push_back(std::move(field));
            return fields;
        }
        const char c = static_cast<char>(raw);
        any = true;
        if (quoted) {
            if (c == '"') {
                if (in.peek() == '"') {
                    in.get();
                    field.push_back('"');
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(c);
            }
            continue;
        }
        if (c == '"' && field.empty()) {
            quoted = true;
        } else if (c == ',') {
            fields.push_back(std::move(field));
            field.clear();
        } else if (c == '\n') {
            break;
        } else if (c == '\r') {
            if (in.peek() == '\n') in.get();
            break;
        } else {
            field.push_back(c);
        }
    }
    (void)any;
    fields.push_back(std::move(field));
    return fields;
}

void write_csv_record(std::ostream& out, std::span<const std::string> fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.put(',');
        const std::string& f = fields[i];
        const bool needs_quotes =
            f.find_first_of(",\"\r\n") != std::string::npos;
        if (!needs_quotes) {
            out << f;
            continue;
        }
        out.put('"');
        for (char c : f) {
            if (c == '"') out.put('"');
            out.put(c);
        }
        out.put('"');
    }
    out.put('\n');
}

std::pair<RecordSet, IngestStats> parse_corpus(std::istream& source,
                                               const ColumnSchema& schema,
                                               const CleaningPolicy& policy) {
    auto header = read_csv_record(source);
    if (!header || (header->size() == 1 && header->front().empty()))
        throw Error::data("empty source: no header row");

    std::size_t password_col = header->size();
    std::size_t strength_col = header->size();
    for (std::size_t i = 0; i < header->size(); ++i) {
        const std::string name = trim((*header)[i]);
        if (name == schema.password_column) password_col = i;
        if (name == schema.strength_column) strength_col = i;
    }
    if (password_col == header->size() || strength_col == header->size())
        throw Error::data("schema: columns '" + schema.password_column + "' and '" +
                          schema.strength_column + "' not both present in header");

    RecordSet rs;
    IngestStats stats;
    const std::size_t expected_fields = header->size();

    while (auto row = read_csv_record(source)) {
        if (row->size() == 1 && row->front().empty()) continue;  // trailing blank line
        ++stats.rows_read;
        if (row->size() != expected_fields) {
            ++stats.rows_malformed;
            continue;
        }
        auto parsed = parse_strength((*row)[strength_col], policy);
        if (!parsed) {
            ++stats.rows_malformed;
            continue;
        }
        if (parsed->corrected) ++stats.labels_corrected;
        rs.records.push_back({std::move((*row)[password_col]), parsed->label});
    }
    stats.rows_surviving = rs.records.size();
    return {std::move(rs), stats};
}

std::pair<RecordSet, IngestStats> clean(const RecordSet& rs) {
    IngestStats stats;
    stats.rows_read = rs.records.size();

    RecordSet out;
    out.provenance = rs.provenance;
    out.records.reserve(rs.records.size());

    // Keys view into rs, which stays untouched for the whole pass.
    std::unordered_map<std::string_view, StrengthLabel> seen;
    seen.reserve(rs.records.size());

    for (const PasswordRecord& record : rs.records) {
        if (record.password.empty()) {
            ++stats.rows_dropped_null;
            continue;
        }
        auto [it, inserted] = seen.emplace(std::string_view(record.password), record.label);
        if (!inserted) {
            ++stats.rows_dropped_duplicate;
            if (it->second != record.label) ++stats.label_conflicts;
            continue;
        }
        if (all_non_alphanumeric(record.password)) {
            ++stats.rows_dropped_special_only;
            continue;
        }
        out.records.push_back(record);
    }
    stats.rows_surviving = out.records.size();
    return {std::move(out), stats};
}

RecordSet merge(const RecordSet& a, const RecordSet& b) {
    RecordSet combined;
    combined.records.reserve(a.size() + b.size());
    combined.records.insert(combined.records.end(), a.records.begin(), a.records.end());
    combined.records.insert(combined.records.end(), b.records.begin(), b.records.end());
    if (a.provenance.empty())
        combined.provenance = b.provenance;
    else if (b.provenance.empty())
        combined.provenance = a.provenance;
    else
        combined.provenance = a.provenance + "+" + b.provenance;
    return clean(combined).first;
}

SplitResult split(const RecordSet& rs, double test_fraction, std::uint64_t seed,
                  bool stratified) {
    if (rs.empty()) throw Error::data("cannot split an empty record set");
    if (!(test_fraction > 0.0 && test_fraction < 1.0))
        throw Error::data("test fraction must lie strictly between 0 and 1");

    const std::size_t n = rs.size();
    const std::size_t test_total =
        static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));

    SplitMix64 rng(substream(seed, 0x53504C49ull));  // "SPLI"
    std::vector<std::size_t> order = shuffled_indices(n, rng);

    std::vector<bool> in_test(n, false);
    if (!stratified) {
        for (std::size_t i = 0; i < test_total; ++i) in_test[order[i]] = true;
    } else {
        std::array<std::vector<std::size_t>, kClassCount> per_class;  // in shuffle order
        for (std::size_t idx : order)
            per_class[label_index(rs.records[idx].label)].push_back(idx);

        std::array<std::size_t, kClassCount> take{};
        std::array<double, kClassCount> remainder{};
        std::size_t assigned = 0;
        for (int c = 0; c < kClassCount; ++c) {
            const std::size_t n_c = per_class[c].size();
            if (n_c == 0) continue;
            if (n_c < 2)
                throw Error::data("stratified split needs at least 2 members per class; class '" +
                                  std::string(label_name(static_cast<StrengthLabel>(c))) +
                                  "' has " + std::to_string(n_c));
            const double target = test_fraction * static_cast<double>(n_c);
            take[c] = static_cast<std::size_t>(std::floor(target));
            remainder[c] = target - std::floor(target);
            assigned += take[c];
        }
        // Largest-remainder rounding keeps each class within 1 of
        // round(fraction * n_c) while hitting the exact total.
        std::vector<int> classes;
        for (int c = 0; c < kClassCount; ++c)
            if (!per_class[c].empty()) classes.push_back(c);
        std::sort(classes.begin(), classes.end(), [&](int a, int b) {
            if (remainder[a] != remainder[b]) return remainder[a] > remainder[b];
            return a < b;
        });
        for (int c : classes) {
            if (assigned >= test_total) break;
            if (take[c] < per_class[c].size()) {
                ++take[c];
                ++assigned;
            }
        }
        for (int c = 0; c < kClassCount; ++c)
            for (std::size_t i = 0; i < take[c]; ++i) in_test[per_class[c][i]] = true;
    }

    SplitResult result;
    result.train.provenance = rs.provenance;
    result.test.provenance = rs.provenance;
    for (std::size_t idx : order) {
        (in_test[idx] ? result.test : result.train).records.push_back(rs.records[idx]);
    }
    return result;
}

void write_corpus_csv(std::ostream& out, const RecordSet& rs) {
    const std::array<std::string, 2> header = {"password", "strength"};
    write_csv_record(out, header);
    for (const PasswordRecord& record : rs.records) {
        const std::array<std::string, 2> row = {
            record.password, std::to_string(label_index(record.label))};
        write_csv_record(out, row);
    }
}

}  // namespace pwss
