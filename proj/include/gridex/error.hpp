#pragma once

#include <stdexcept>
#include <string>

namespace gridex {

enum class Errc {
    IllegalMove,
    AdversaryInconsistent,
    StrategyStuck,
    DeadEnd,
    IncompleteTrace,
    TooLarge,
    Infeasible,
    NotALadder,
    Unreachable,
    NotFound,
    BadChoicesLength,
    ReconstructionFailed,
    RetriesExhausted,
    CapNotSlack,
    Unsupported,
};

struct Error : std::runtime_error {
    Error(Errc c, const std::string& msg) : std::runtime_error(msg), code(c) {}
    Errc code;
};

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::IllegalMove: return "IllegalMove";
        case Errc::AdversaryInconsistent: return "AdversaryInconsistent";
        case Errc::StrategyStuck: return "StrategyStuck";
        case Errc::DeadEnd: return "DeadEnd";
        case Errc::IncompleteTrace: return "IncompleteTrace";
        case Errc::TooLarge: return "TooLarge";
        case Errc::Infeasible: return "Infeasible";
        case Errc::NotALadder: return "NotALadder";
        case Errc::Unreachable: return "Unreachable";
        case Errc::NotFound: return "NotFound";
        case Errc::BadChoicesLength: return "BadChoicesLength";
        case Errc::ReconstructionFailed: return "ReconstructionFailed";
        case Errc::RetriesExhausted: return "RetriesExhausted";
        case Errc::CapNotSlack: return "CapNotSlack";
        case Errc::Unsupported: return "Unsupported";
    }
    return "?";
}

}  // namespace gridex
