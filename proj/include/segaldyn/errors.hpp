#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace segaldyn {

// Error taxonomy mirrored by the CLI exit codes: input/data problems exit 2,
// capacity overruns exit 3. Law violations are report data, not errors.
enum class ErrorKind {
    Input,
    Capacity,
    Data,
};

class SegalError : public std::runtime_error {
public:
    SegalError(ErrorKind kind, std::string message, std::string detail = {})
        : std::runtime_error(std::move(message)), kind_(kind), detail_(std::move(detail)) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Optional machine-readable payload (e.g. the exact over-capacity count).
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

[[noreturn]] inline void throw_input(const std::string& message) {
    throw SegalError(ErrorKind::Input, message);
}

[[noreturn]] inline void throw_capacity(const std::string& message, const std::string& detail = {}) {
    throw SegalError(ErrorKind::Capacity, message, detail);
}

[[noreturn]] inline void throw_data(const std::string& message) {
    throw SegalError(ErrorKind::Data, message);
}

// A single violated law, located as precisely as the check can manage.
struct Violation {
    std::string law;      // short tag, e.g. "identity-left", "assoc"
    std::string where;    // ids involved, e.g. "(f,g,h)"
    std::string message;  // human-readable statement
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
    std::size_t size() const noexcept { return violations.size(); }

    void add(std::string law, std::string where, std::string message) {
        violations.push_back({std::move(law), std::move(where), std::move(message)});
    }

    std::size_t count(const std::string& law) const {
        std::size_t n = 0;
        for (const auto& v : violations)
            if (v.law == law) ++n;
        return n;
    }
};

}  // namespace segaldyn
