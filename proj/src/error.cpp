#include "motiontx/error.hpp"

namespace motiontx {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidSeries: return "InvalidSeries";
    case ErrorCode::ConstantSeries: return "ConstantSeries";
    case ErrorCode::SeriesTooShort: return "SeriesTooShort";
    case ErrorCode::RadiusTooLarge: return "RadiusTooLarge";
    case ErrorCode::InvalidAlpha: return "InvalidAlpha";
    case ErrorCode::LagTooLarge: return "LagTooLarge";
    case ErrorCode::SpectrumTooShort: return "SpectrumTooShort";
    case ErrorCode::InvalidFrequency: return "InvalidFrequency";
    case ErrorCode::NoCrossovers: return "NoCrossovers";
    case ErrorCode::SeasonalityNotFound: return "SeasonalityNotFound";
    case ErrorCode::PeriodTooShort: return "PeriodTooShort";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::EmptyInterval: return "EmptyInterval";
    case ErrorCode::FactorLengthMismatch: return "FactorLengthMismatch";
    case ErrorCode::ChannelMismatch: return "ChannelMismatch";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NonConsecutiveFrames: return "NonConsecutiveFrames";
    case ErrorCode::DuplicateChannel: return "DuplicateChannel";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

} // namespace motiontx
