#include "arq/error.hpp"

namespace arq {

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::LoopArrow: return "LoopArrow";
        case ErrorKind::TwoCycle: return "TwoCycle";
        case ErrorKind::MultipleArrow: return "MultipleArrow";
        case ErrorKind::BadValuation: return "BadValuation";
        case ErrorKind::DanglingVertexIndex: return "DanglingVertexIndex";
        case ErrorKind::NotATree: return "NotATree";
        case ErrorKind::NotDynkin: return "NotDynkin";
        case ErrorKind::WalkNotReduced: return "WalkNotReduced";
        case ErrorKind::WindowTooLarge: return "WindowTooLarge";
        case ErrorKind::KnitInconsistent: return "KnitInconsistent";
        case ErrorKind::BoundExceeded: return "BoundExceeded";
        case ErrorKind::PositionOutOfRange: return "PositionOutOfRange";
        case ErrorKind::SingularCartan: return "SingularCartan";
        case ErrorKind::OrderBoundExceeded: return "OrderBoundExceeded";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::CrossCheckFailed: return "CrossCheckFailed";
        case ErrorKind::IoError: return "IoError";
    }
    return "Unknown";
}

bool is_input_error(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SyntaxError:
        case ErrorKind::LoopArrow:
        case ErrorKind::TwoCycle:
        case ErrorKind::MultipleArrow:
        case ErrorKind::BadValuation:
        case ErrorKind::DanglingVertexIndex:
        case ErrorKind::NotATree:
        case ErrorKind::NotDynkin:
        case ErrorKind::PositionOutOfRange:
        case ErrorKind::IoError:
            return true;
        default:
            return false;
    }
}

static std::string compose(ErrorKind kind, const std::string& detail, int line) {
    std::string s = to_string(kind);
    if (line > 0) s += " at line " + std::to_string(line);
    if (!detail.empty()) s += ": " + detail;
    return s;
}

Error::Error(ErrorKind kind, const std::string& detail, int line, int item)
    : std::runtime_error(compose(kind, detail, line)),
      kind_(kind),
      detail_(detail),
      line_(line),
      item_(item) {}

}  // namespace arq
