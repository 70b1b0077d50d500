#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tourney {

enum class Errc {
    missing_pair,
    conflicting_arc,
    out_of_range,
    self_pair,
    parse_error,
    bad_size,
    seed_too_small,
    base_too_small,
    base_decomposable,
    precondition_violated,
    internal_error,
    too_large,
    bad_k,
    bad_n,
    unknown_claim,
    bound_too_large,
    bound_too_small,
};

std::string_view to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the Errc kinds so callers
/// (and the CLI) can dispatch on the kind rather than on message text.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string & message);

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

}
