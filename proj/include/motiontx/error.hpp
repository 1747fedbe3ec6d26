#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace motiontx {

enum class ErrorCode {
    InvalidArgument,
    InvalidSeries,
    ConstantSeries,
    SeriesTooShort,
    RadiusTooLarge,
    InvalidAlpha,
    LagTooLarge,
    SpectrumTooShort,
    InvalidFrequency,
    NoCrossovers,
    SeasonalityNotFound,
    PeriodTooShort,
    LengthMismatch,
    EmptyInterval,
    FactorLengthMismatch,
    ChannelMismatch,
    ParseError,
    NonConsecutiveFrames,
    DuplicateChannel,
    InvalidSpec,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI, the Python bindings) can branch without parsing text.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace motiontx
