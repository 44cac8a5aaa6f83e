#pragma once

#include <string>

#include "aeronav/errors.hpp"

namespace aeronav {

/// Discrete low-level action space. Moves displace 5 m, turns rotate 15 deg.
enum class Action { Forward, TurnLeft, TurnRight, Ascend, Descend, Stop };

inline constexpr double kStepMeters = 5.0;
inline constexpr double kTurnDegrees = 15.0;

inline const char* to_string(Action a) {
    switch (a) {
        case Action::Forward: return "forward";
        case Action::TurnLeft: return "turn_left";
        case Action::TurnRight: return "turn_right";
        case Action::Ascend: return "ascend";
        case Action::Descend: return "descend";
        case Action::Stop: return "stop";
    }
    return "stop";
}

inline Action action_from_string(const std::string& s) {
    if (s == "forward") return Action::Forward;
    if (s == "turn_left") return Action::TurnLeft;
    if (s == "turn_right") return Action::TurnRight;
    if (s == "ascend") return Action::Ascend;
    if (s == "descend") return Action::Descend;
    if (s == "stop") return Action::Stop;
    throw InvalidArgument("unknown action '" + s + "'");
}

}  // namespace aeronav
