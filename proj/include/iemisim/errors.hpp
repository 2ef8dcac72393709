#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace iemisim {

/// Bad configuration detected before or while assembling a run.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Scenario validation failure; carries one message per violated field,
/// each prefixed with the dotted field path.
class ValidationError : public ConfigError {
public:
    explicit ValidationError(std::vector<std::string> failures);

    const std::vector<std::string>& failures() const noexcept { return failures_; }

private:
    static std::string join(const std::vector<std::string>& failures);
    std::vector<std::string> failures_;
};

/// Integration produced a non-finite state variable.
class DivergedError : public std::runtime_error {
public:
    DivergedError(std::size_t step, double t_s);

    std::size_t step() const noexcept { return step_; }
    double time() const noexcept { return t_s_; }

private:
    std::size_t step_;
    double t_s_;
};

} // namespace iemisim
