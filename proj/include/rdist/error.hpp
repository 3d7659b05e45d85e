#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rdist {

enum class Errc {
    invalid_vertex,
    loop_edge,
    empty_graph,
    too_small,
    dim_mismatch,
    singular,
    kernel_mismatch,
    not_connected,
    isolated_vertex,
    not_regular,
    parse_error,
};

inline std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_vertex: return "InvalidVertex";
        case Errc::loop_edge: return "LoopEdge";
        case Errc::empty_graph: return "EmptyGraph";
        case Errc::too_small: return "TooSmall";
        case Errc::dim_mismatch: return "DimMismatch";
        case Errc::singular: return "Singular";
        case Errc::kernel_mismatch: return "KernelMismatch";
        case Errc::not_connected: return "NotConnected";
        case Errc::isolated_vertex: return "IsolatedVertex";
        case Errc::not_regular: return "NotRegular";
        case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
/// `position()` is meaningful only for parse errors (0-based offset into the input).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, std::size_t position = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message),
          code_(code), position_(position) {}

    Errc code() const noexcept { return code_; }
    std::size_t position() const noexcept { return position_; }

private:
    Errc code_;
    std::size_t position_;
};

}  // namespace rdist
