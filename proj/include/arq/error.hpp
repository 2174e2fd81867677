#pragma once

#include <stdexcept>
#include <string>

namespace arq {

enum class ErrorKind {
    SyntaxError,
    LoopArrow,
    TwoCycle,
    MultipleArrow,
    BadValuation,
    DanglingVertexIndex,
    NotATree,
    NotDynkin,
    WalkNotReduced,
    WindowTooLarge,
    KnitInconsistent,
    BoundExceeded,
    PositionOutOfRange,
    SingularCartan,
    OrderBoundExceeded,
    Overflow,
    CrossCheckFailed,
    IoError,
};

const char* to_string(ErrorKind kind);

// True for kinds caused by the user's input rather than an internal inconsistency.
bool is_input_error(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail, int line = 0, int item = -1);

    ErrorKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }
    // 1-based input line, 0 when not attributable.
    int line() const { return line_; }
    // Index of the offending arrow for validation errors, -1 otherwise.
    int item() const { return item_; }

    Error with_line(int line) const { return Error(kind_, detail_, line, item_); }

private:
    ErrorKind kind_;
    std::string detail_;
    int line_;
    int item_;
};

}  // namespace arq
