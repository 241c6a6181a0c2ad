#include "codemetrics/complexity.hpp"

#include "codemetrics/source_model.hpp"

namespace codemetrics {

DecisionCounts count_decisions(std::span<const Token> body) {
    DecisionCounts counts;
    for (const auto& t : body) {
        if (t.kind == TokenKind::Keyword) {
            if (t.text == "for") {
                ++counts.for_loops;
            } else if (t.text == "if") {
                ++counts.ifs;
            } else if (t.text == "while") {
                ++counts.whiles;
            } else if (t.text == "case") {
                ++counts.cases;
            } else if (t.text == "switch") {
                ++counts.switches;
            } else if (t.text == "and") {
                ++counts.logical_and;
            } else if (t.text == "or") {
                ++counts.logical_or;
            }
        } else if (t.kind == TokenKind::Punctuator) {
            if (t.text == "&&") {
                ++counts.logical_and;
            } else if (t.text == "||") {
                ++counts.logical_or;
            } else if (t.text == "?") {
                ++counts.conditional;
            }
        }
    }
    return counts;
}

namespace {

std::uint32_t shared_decisions(const DecisionCounts& c) {
    return c.for_loops + c.ifs + c.whiles + c.logical_and + c.logical_or + c.conditional;
}

}  // namespace

std::uint32_t mcc_traditional(std::span<const Token> body) {
    const auto c = count_decisions(body);
    return 1 + shared_decisions(c) + c.cases;
}

std::uint32_t mcc_modified(std::span<const Token> body) {
    const auto c = count_decisions(body);
    return 1 + shared_decisions(c) + c.switches;
}

MccTotals file_mcc(std::span<const FunctionRecord> functions) {
    MccTotals totals;
    for (const auto& f : functions) {
        totals.traditional += f.mcc_traditional;
        totals.modified += f.mcc_modified;
    }
    return totals;
}

}  // namespace codemetrics
