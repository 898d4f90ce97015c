#include "pwss/features.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <map>
#include <unordered_map>

#include "pwss/error.hpp"

namespace pwss {

namespace detail {
extern const char* const kCommonPasswords[1000];
}

namespace {

constexpr double kGuessesPerSecond = 1e10;

// Canonical inverse substitutions; deleet() applies these after ASCII
// lowercasing. The ambiguous digit 1 resolves to 'i'.
constexpr std::pair<char, char> kInverseLeet[] = {
    {'@', 'a'}, {'3', 'e'}, {'1', 'i'}, {'!', 'i'}, {'0', 'o'},
    {'$', 's'}, {'5', 's'}, {'7', 't'}, {'8', 'b'}, {'9', 'g'},
};

char inverse_leet(char c) {
    for (auto [from, to] : kInverseLeet)
        if (c == from) return to;
    return c;
}

bool is_leet_image(char32_t cp) {
    if (cp > 0x7F) return false;
    const char c = static_cast<char>(cp);
    for (auto [from, to] : kInverseLeet)
        if (c == from) return true;
    return false;
}

enum class CharClass { lower, upper, digit, special };

CharClass classify(char32_t cp) {
    if (cp >= U'a' && cp <= U'z') return CharClass::lower;
    if (cp >= U'A' && cp <= U'Z') return CharClass::upper;
    if (cp >= U'0' && cp <= U'9') return CharClass::digit;
    return CharClass::special;
}

std::string trim_ascii(std::string_view text) {
    std::size_t begin = 0;
    std::size_t end = text.size();
    auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
    };
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    return std::string(text.substr(begin, end - begin));
}

}  // namespace

std::uint64_t feature_schema_checksum() {
    std::uint64_t hash = 0xcbf29ce484222325ull;  // FNV-1a 64
    auto absorb = [&hash](char c) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ull;
    };
    bool first = true;
    for (std::string_view name : kFeatureNames) {
        if (!first) absorb(',');
        first = false;
        for (char c : name) absorb(c);
    }
    return hash;
}

std::vector<char32_t> decode_utf8(std::string_view text) {
    std::vector<char32_t> out;
    out.reserve(text.size());
    std::size_t i = 0;
    while (i < text.size()) {
        const unsigned char lead = static_cast<unsigned char>(text[i]);
        std::size_t extra;
        char32_t cp;
        if (lead < 0x80) {
            cp = lead;
            extra = 0;
        } else if ((lead >> 5) == 0x6) {
            cp = lead & 0x1F;
            extra = 1;
        } else if ((lead >> 4) == 0xE) {
            cp = lead & 0x0F;
            extra = 2;
        } else if ((lead >> 3) == 0x1E) {
            cp = lead & 0x07;
            extra = 3;
        } else {
            // Stray byte: taken as a single code point so extraction is total.
            out.push_back(lead);
            ++i;
            continue;
        }
        if (i + extra >= text.size()) {  // truncated sequence
            out.push_back(lead);
            ++i;
            continue;
        }
        bool valid = true;
        for (std::size_t k = 1; k <= extra; ++k) {
            const unsigned char cont = static_cast<unsigned char>(text[i + k]);
            if ((cont >> 6) != 0x2) {
                valid = false;
                break;
            }
            cp = (cp << 6) | (cont & 0x3F);
        }
        if (!valid) {
            out.push_back(lead);
            ++i;
            continue;
        }
        out.push_back(cp);
        i += extra + 1;
    }
    return out;
}

Wordlist Wordlist::from_entries(std::vector<std::string> entries) {
    Wordlist wl;
    for (std::string& entry : entries) {
        std::string cleaned = trim_ascii(entry);
        for (char& c : cleaned)
            if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        if (!cleaned.empty()) wl.entries_.push_back(std::move(cleaned));
    }
    std::sort(wl.entries_.begin(), wl.entries_.end());
    wl.entries_.erase(std::unique(wl.entries_.begin(), wl.entries_.end()), wl.entries_.end());
    if (wl.entries_.empty()) throw Error::data("wordlist has no entries");
    return wl;
}

Wordlist Wordlist::from_stream(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return from_entries(std::move(lines));
}

const Wordlist& Wordlist::common_passwords() {
    static const Wordlist wl = [] {
        std::vector<std::string> entries;
        entries.reserve(1000);
        for (const char* const word : detail::kCommonPasswords) entries.emplace_back(word);
        return from_entries(std::move(entries));
    }();
    return wl;
}

bool Wordlist::contains(std::string_view word) const {
    return std::binary_search(entries_.begin(), entries_.end(), word);
}

std::string deleet(std::string_view password) {
    std::string out;
    out.reserve(password.size());
    for (char c : password) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
        out.push_back(inverse_leet(c));
    }
    return out;
}

double shannon_entropy(std::string_view password) {
    if (password.empty()) throw Error::data("entropy of an empty password is undefined");
    const std::vector<char32_t> cps = decode_utf8(password);
    std::unordered_map<char32_t, std::size_t> freq;
    for (char32_t cp : cps) ++freq[cp];
    const double n = static_cast<double>(cps.size());
    double h = 0.0;
    for (const auto& [cp, count] : freq) {
        const double p = static_cast<double>(count) / n;
        h -= p * std::log2(p);
    }
    return h;
}

double crack_time_log10(std::string_view password) {
    if (password.empty()) throw Error::data("crack time of an empty password is undefined");
    const std::vector<char32_t> cps = decode_utf8(password);
    bool has_class[4] = {false, false, false, false};
    for (char32_t cp : cps) has_class[static_cast<int>(classify(cp))] = true;
    double charset = 0.0;
    if (has_class[0]) charset += 26;
    if (has_class[1]) charset += 26;
    if (has_class[2]) charset += 10;
    if (has_class[3]) charset += 33;
    const double length = static_cast<double>(cps.size());
    return length * std::log10(charset) - std::log10(2.0 * kGuessesPerSecond);
}

std::vector<double> extract(std::string_view password, const Wordlist& wl) {
    if (password.empty()) throw Error::data("cannot extract features from an empty password");

    const std::vector<char32_t> cps = decode_utf8(password);
    const double length = static_cast<double>(cps.size());

    double counts[4] = {0, 0, 0, 0};
    double leet_count = 0;
    std::map<char32_t, std::size_t> freq;
    for (char32_t cp : cps) {
        counts[static_cast<int>(classify(cp))] += 1.0;
        if (is_leet_image(cp)) leet_count += 1.0;
        ++freq[cp];
    }
    const double unique_count = static_cast<double>(freq.size());

    double entropy = 0.0;
    for (const auto& [cp, count] : freq) {
        const double p = static_cast<double>(count) / length;
        entropy -= p * std::log2(p);
    }

    const double dictionary_hit = wl.contains(deleet(password)) ? 1.0 : 0.0;

    return {
        length,
        counts[0],
        counts[1],
        counts[2],
        counts[3],
        unique_count,
        unique_count / length,
        entropy * length,
        leet_count,
        dictionary_hit,
        crack_time_log10(password),
    };
}

}  // namespace pwss
