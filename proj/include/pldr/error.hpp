#pragma once

#include <stdexcept>
#include <string>

namespace pldr {

enum class ErrorKind {
    DimensionMismatch,
    NonPositive,
    ShapeMismatch,
    PositionOverflow,
    EmptySequence,
    NonPositiveBase,
    ContextOverflow,
    TokenOutOfRange,
    CacheNotPrimed,
    AlreadyPrimed,
    NotPrimed,
    VariantMismatch,
    CorruptCheckpoint,
    VersionMismatch,
    CheckpointNotFound,
    Io,
    DegenerateDistribution,
    InvalidOverride,
    EmptyCorpus,
    NonFiniteLoss,
    GradMismatch,
    SingleHead,
    NoConvergence,
    InvalidArgument,
    ParseError,
};

const char* to_string(ErrorKind kind);

/// Domain error carrying a machine-readable kind next to the message.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DimensionMismatch: return "DimensionMismatch";
        case ErrorKind::NonPositive: return "NonPositive";
        case ErrorKind::ShapeMismatch: return "ShapeMismatch";
        case ErrorKind::PositionOverflow: return "PositionOverflow";
        case ErrorKind::EmptySequence: return "EmptySequence";
        case ErrorKind::NonPositiveBase: return "NonPositiveBase";
        case ErrorKind::ContextOverflow: return "ContextOverflow";
        case ErrorKind::TokenOutOfRange: return "TokenOutOfRange";
        case ErrorKind::CacheNotPrimed: return "CacheNotPrimed";
        case ErrorKind::AlreadyPrimed: return "AlreadyPrimed";
        case ErrorKind::NotPrimed: return "NotPrimed";
        case ErrorKind::VariantMismatch: return "VariantMismatch";
        case ErrorKind::CorruptCheckpoint: return "CorruptCheckpoint";
        case ErrorKind::VersionMismatch: return "VersionMismatch";
        case ErrorKind::CheckpointNotFound: return "CheckpointNotFound";
        case ErrorKind::Io: return "Io";
        case ErrorKind::DegenerateDistribution: return "DegenerateDistribution";
        case ErrorKind::InvalidOverride: return "InvalidOverride";
        case ErrorKind::EmptyCorpus: return "EmptyCorpus";
        case ErrorKind::NonFiniteLoss: return "NonFiniteLoss";
        case ErrorKind::GradMismatch: return "GradMismatch";
        case ErrorKind::SingleHead: return "SingleHead";
        case ErrorKind::NoConvergence: return "NoConvergence";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace pldr
