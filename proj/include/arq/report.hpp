#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arq/ar_quiver.hpp"
#include "arq/quiver.hpp"

namespace arq {

// Parses the text input format; errors carry the 1-based line number.
// Throws Error(SyntaxError) and the ValuedQuiver::validate errors.
ValuedQuiver parse(const std::string& text);
// Throws Error(IoError) when the file cannot be read.
ValuedQuiver parse_file(const std::string& path);

struct ReportPos {
    int r = 0;
    int i = 0;
    bool operator==(const ReportPos&) const = default;
};

struct ReportVertex {
    int r = 0;
    int i = 0;
    std::vector<long long> dim;
    bool operator==(const ReportVertex&) const = default;
};

struct ReportArrow {
    ReportPos src;
    ReportPos dst;
    std::vector<int> val;  // {a, b}
    bool operator==(const ReportArrow&) const = default;
};

struct ReportHammockValue {
    int r = 0;
    int i = 0;
    long long h = 0;
    bool operator==(const ReportHammockValue&) const = default;
};

struct ReportHammock {
    int k = 0;
    ReportPos terminator;
    std::vector<ReportHammockValue> table;
    std::vector<ReportPos> vertices;
    bool operator==(const ReportHammock&) const = default;
};

struct Report {
    struct Dynkin {
        std::string family;
        int rank = 0;
        std::vector<int> relabel;
        bool operator==(const Dynkin&) const = default;
    } dynkin;
    int coxeter_order = 0;
    std::vector<int> rho;
    std::vector<int> m;
    struct Counts {
        long long indecomposables = 0;
        long long cluster = 0;
        bool operator==(const Counts&) const = default;
    } counts;
    struct Nilpotency {
        int module = 0;
        int derived = 0;
        int cluster = 0;
        bool operator==(const Nilpotency&) const = default;
    } nilpotency;
    std::vector<ReportVertex> vertices;  // sorted by (i, r)
    std::vector<ReportArrow> arrows;
    std::optional<std::vector<ReportHammock>> hammocks;

    bool operator==(const Report&) const = default;
};

// Builds everything and runs the cross-checks; throws Error(CrossCheckFailed) on disagreement.
Report make_report(const ValuedQuiver& q, bool with_hammocks = false);

std::string to_json(const Report& r);
// Throws Error(SyntaxError) on malformed JSON or schema mismatch.
Report report_from_json(const std::string& text);

std::string to_dot(const ARQuiver& arq);

}  // namespace arq
