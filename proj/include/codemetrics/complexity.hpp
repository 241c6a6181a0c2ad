#pragma once

#include <cstdint>
#include <span>

#include "codemetrics/token.hpp"

namespace codemetrics {

struct FunctionRecord;

/// Decision tokens found in one function body.
struct DecisionCounts {
    std::uint32_t for_loops = 0;
    std::uint32_t ifs = 0;
    std::uint32_t whiles = 0;
    std::uint32_t cases = 0;
    std::uint32_t switches = 0;
    std::uint32_t logical_and = 0;  // `&&` and its alternative spelling `and`
    std::uint32_t logical_or = 0;   // `||` and `or`
    std::uint32_t conditional = 0;  // `?`
};

DecisionCounts count_decisions(std::span<const Token> body);

/// 1 + for/if/while/case keywords + `&&`, `||`, `?` punctuators.
/// Comment and literal tokens never match.
std::uint32_t mcc_traditional(std::span<const Token> body);

/// Same as mcc_traditional, but each `switch` counts once instead of each `case`.
std::uint32_t mcc_modified(std::span<const Token> body);

struct MccTotals {
    std::uint64_t traditional = 0;
    std::uint64_t modified = 0;

    bool operator==(const MccTotals&) const = default;
};

/// Sums over a file's function bodies; {0, 0} when there are none.
MccTotals file_mcc(std::span<const FunctionRecord> functions);

}  // namespace codemetrics
