#pragma once

#include <stdexcept>
#include <string>

namespace cpdetect {

// Data / input errors (CLI exit code 2)
struct MalformedInput : std::runtime_error {
    explicit MalformedInput(const std::string& m) : std::runtime_error("MalformedInput: " + m) {}
};
struct UnbalancedPanel : std::runtime_error {
    explicit UnbalancedPanel(const std::string& m) : std::runtime_error("UnbalancedPanel: " + m) {}
};
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error("ParseError: " + m) {}
};
struct ScenarioTooSmall : std::runtime_error {
    explicit ScenarioTooSmall(const std::string& m) : std::runtime_error("ScenarioTooSmall: " + m) {}
};
struct InvalidInput : std::runtime_error {
    explicit InvalidInput(const std::string& m) : std::runtime_error("InvalidInput: " + m) {}
};

// Numerical errors (CLI exit code 3)
struct SingularTilt : std::runtime_error {
    explicit SingularTilt(const std::string& m) : std::runtime_error("SingularTilt: " + m) {}
};
struct SingularFit : std::runtime_error {
    explicit SingularFit(const std::string& m) : std::runtime_error("SingularFit: " + m) {}
};
struct DivergedFit : std::runtime_error {
    explicit DivergedFit(const std::string& m) : std::runtime_error("DivergedFit: " + m) {}
};

}  // namespace cpdetect
