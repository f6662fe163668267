#pragma once

#include <stdexcept>
#include <string>

namespace bouquet_kit {

enum class ErrorKind {
    empty_edge,
    not_antichain,
    unknown_vertex,
    bad_edge_index,
    length_mismatch,
    invalid_bouquet,
    not_minimal_cover,
    not_semi_strongly_disjoint,
    size_guard,
    parse_error,
    bad_params,
    usage_error,
};

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::empty_edge: return "EmptyEdge";
    case ErrorKind::not_antichain: return "NotAntichain";
    case ErrorKind::unknown_vertex: return "UnknownVertex";
    case ErrorKind::bad_edge_index: return "BadEdgeIndex";
    case ErrorKind::length_mismatch: return "LengthMismatch";
    case ErrorKind::invalid_bouquet: return "InvalidBouquet";
    case ErrorKind::not_minimal_cover: return "NotMinimalCover";
    case ErrorKind::not_semi_strongly_disjoint: return "NotSemiStronglyDisjoint";
    case ErrorKind::size_guard: return "SizeGuard";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::bad_params: return "BadParams";
    case ErrorKind::usage_error: return "UsageError";
    }
    return "Error";
}

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

/// Antichain violations carry the positions of the offending pair in the raw
/// edge list, so file parsers can report line numbers.
class NotAntichainError : public Error {
public:
    NotAntichainError(const std::string& message, int contained_pos, int container_pos)
        : Error(ErrorKind::not_antichain, message),
          contained_pos(contained_pos),
          container_pos(container_pos) {}

    int contained_pos;   // raw position of the edge that is contained
    int container_pos;   // raw position of the edge that contains it
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

// Always-on check for invariants the algorithms themselves guarantee.
inline void internal_check(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("internal invariant violated: ") + what);
}

} // namespace bouquet_kit
