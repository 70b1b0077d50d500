#include <tourney/error.hpp>

namespace tourney {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::missing_pair: return "MissingPair";
    case Errc::conflicting_arc: return "ConflictingArc";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::self_pair: return "SelfPair";
    case Errc::parse_error: return "ParseError";
    case Errc::bad_size: return "BadSize";
    case Errc::seed_too_small: return "SeedTooSmall";
    case Errc::base_too_small: return "BaseTooSmall";
    case Errc::base_decomposable: return "BaseDecomposable";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::internal_error: return "InternalError";
    case Errc::too_large: return "TooLarge";
    case Errc::bad_k: return "BadK";
    case Errc::bad_n: return "BadN";
    case Errc::unknown_claim: return "UnknownClaim";
    case Errc::bound_too_large: return "BoundTooLarge";
    case Errc::bound_too_small: return "BoundTooSmall";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string & message) :
    std::runtime_error(std::string(to_string(code)) + ": " + message),
    code_(code)
{
}

}
