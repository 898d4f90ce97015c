#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pwss {

/// Error categories; the CLI maps them one-to-one onto exit codes
/// (usage=2, data=3, training=4, io=5).
enum class ErrorKind { usage, data, training, io };

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    static Error usage(const std::string& message) { return {ErrorKind::usage, message}; }
    static Error data(const std::string& message) { return {ErrorKind::data, message}; }
    static Error training(const std::string& message) { return {ErrorKind::training, message}; }
    static Error io(const std::string& message) { return {ErrorKind::io, message}; }

private:
    ErrorKind kind_;
};

/// What a model file failed on; each defect is reported distinctly.
enum class ModelFileDefect {
    bad_magic,
    bad_version,
    unknown_tag,
    truncated,
    bad_payload_size,
    checksum_mismatch,
};

std::string_view to_string(ModelFileDefect defect);

class ModelFileError : public Error {
public:
    ModelFileError(ModelFileDefect defect, const std::string& message)
        : Error(ErrorKind::data, message), defect_(defect) {}

    ModelFileDefect defect() const noexcept { return defect_; }

private:
    ModelFileDefect defect_;
};

}  // namespace pwss
