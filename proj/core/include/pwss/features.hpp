#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pwss {

inline constexpr std::size_t kFeatureCount = 11;

/// Canonical feature order. Models, the persistence format and the CLI all
/// rely on this ordering; feature_schema_checksum() pins it in model files.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureNames = {
    "length",
    "lowercase_count",
    "uppercase_count",
    "digit_count",
    "special_count",
    "unique_char_count",
    "unique_ratio",
    "shannon_entropy_bits",
    "leet_substitution_count",
    "deleet_dictionary_hit",
    "crack_time_log10_seconds",
};

/// FNV-1a over the comma-joined feature names.
std::uint64_t feature_schema_checksum();

/// Lowercase reference dictionary backing the dictionary-hit feature.
class Wordlist {
public:
    /// One entry per line; lines are lowercased and trimmed on load, blank
    /// lines ignored. An empty list is a data error.
    static Wordlist from_stream(std::istream& in);
    static Wordlist from_entries(std::vector<std::string> entries);

    /// Embedded list of the 1,000 most common passwords.
    static const Wordlist& common_passwords();

    bool contains(std::string_view word) const;
    std::size_t size() const { return entries_.size(); }
    const std::vector<std::string>& entries() const { return entries_; }

private:
    std::vector<std::string> entries_;  // sorted, unique
};

/// ASCII-lowercases the input and applies the canonical inverse leet table
/// (@>a 3>e 1>i !>i 0>o $>s 5>s 7>t 8>b 9>g). Idempotent.
std::string deleet(std::string_view password);

/// Shannon entropy in bits per character over code-point frequencies.
/// The feature stores total bits, i.e. this value times the length.
double shannon_entropy(std::string_view password);

/// log10 of the average brute-force time in seconds: keyspace is the sum
/// of the present character-class alphabets (26+26+10+33) and the guess
/// rate is 1e10/s with an average-case factor of one half.
double crack_time_log10(std::string_view password);

/// Maps a password to the 11-entry vector in kFeatureNames order.
/// Character classes are a-z, A-Z, 0-9; every other code point counts as
/// special. Empty password is a data error.
std::vector<double> extract(std::string_view password, const Wordlist& wl);

/// Code points of a UTF-8 string; bytes that do not form a valid sequence
/// are taken as single code points so extraction is total.
std::vector<char32_t> decode_utf8(std::string_view text);

}  // namespace pwss
