#pragma once

#include <tourney/enumerate.hpp>
#include <tourney/tournament.hpp>

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace tourney {

enum class ClaimId { T1, T2, T3, P4, L6, P7, C8, R9, R10, L11, L12, R13, C14, P15, C16, X17 };

struct Claim {
    ClaimId id;
    std::string_view name;
    std::string_view statement;
    /// Smallest order (or family size) the claim speaks about.
    int min_n;
    int default_max_n;
    /// Largest accepted bound.
    int guard;
    /// True when the universe is every iso class of each order, false when it
    /// is a list of named family members.
    bool exhaustive;
};

const std::vector<Claim> & claims();
const Claim & claim(ClaimId id);
/// Throws UnknownClaim.
ClaimId parse_claim_id(std::string_view name);

struct Counterexample {
    std::string code;
    std::string condition;
};

struct VerificationReport {
    std::string claim;
    int min_n = 0;
    int max_n = 0;
    std::vector<int> orders;
    /// Iso classes (or family members) of each order.
    std::vector<std::size_t> classes;
    /// How many of those the claim's condition was actually evaluated on.
    std::vector<std::size_t> examined;
    bool pass = true;
    /// First `counterexample_cap` violations, in deterministic order.
    std::vector<Counterexample> counterexamples;
    std::size_t violation_count = 0;
    /// Data reported by exploratory claims.
    std::vector<std::string> witnesses;
    double seconds = 0.0;
    std::string engine;
};

/// One JSON object on a single line.
std::string to_json(const VerificationReport & report);

using EmbedFunction = std::function<bool(const Tournament & pattern, const Tournament & host)>;

struct VerifyOptions {
    int jobs = 0;
    /// 0 keeps every counterexample.
    std::size_t counterexample_cap = 10;
    bool allow_big = false;
    /// Embedding test used by the checkers; defaults to tourney::embeds.
    /// Replaceable so that a deliberately broken engine can be shown to fail.
    EmbedFunction embeds;
};

/// Lazily enumerated iso classes, shared between checkers in one run.
class Universe {
public:
    explicit Universe(EnumerateOptions options = {}) : options_(options) {}

    const std::vector<Tournament> & classes(int n);
    const std::vector<Tournament> & indecomposable(int n);

private:
    EnumerateOptions options_;
    std::map<int, std::vector<Tournament>> all_;
    std::map<int, std::vector<Tournament>> indecomposable_;
};

/// Throws UnknownClaim, BoundTooLarge, BoundTooSmall.
void check_bound(ClaimId id, int max_n, bool allow_big);

VerificationReport verify_claim(ClaimId id, int max_n, const VerifyOptions & options = {}, Universe * universe = nullptr);
VerificationReport verify_claim(ClaimId id, const VerifyOptions & options = {}, Universe * universe = nullptr);

/// Runs every claim; claims missing from `bounds` use their default bound.
std::vector<VerificationReport> verify_all(const std::map<ClaimId, int> & bounds = {}, const VerifyOptions & options = {});

}
